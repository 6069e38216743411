#include "coxir/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace coxir {

MatrixA matrix_a(const IRDatum& datum) {
  const int n = datum.rank();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const BondParameter& p = datum.bond_param(i, j);
      const Complex ratio = datum.scalar(i, j) / datum.scalar(j, i);
      switch (p.kind) {
        case BondParameter::Kind::FiniteK:
          a(i, j) = -ratio * cos_k_pi_over_m(p.k, datum.system().bond(i, j).value());
          break;
        case BondParameter::Kind::FreeZ:
          a(i, j) = -u_of(p.z) * ratio / 2.0;
          break;
        case BondParameter::Kind::Directed:
          a(i, j) = p.absorbing == i ? -ratio / 2.0 : Complex(0, 0);
          break;
      }
    }
  }
  return MatrixA{std::move(a)};
}

Complex det_a(const IRDatum& datum, double tol) {
  return linalg::determinant(matrix_a(datum).entries, tol);
}

int corank_a(const IRDatum& datum, double tol) {
  return linalg::corank(matrix_a(datum).entries, tol);
}

Eigen::MatrixXcd fixed_subspace(const Representation& rep, double tol) {
  const Eigen::Index dim = rep.dim();
  const Eigen::Index n = static_cast<Eigen::Index>(rep.gens.size());
  Eigen::MatrixXcd stacked(n * dim, dim);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  for (Eigen::Index s = 0; s < n; ++s)
    stacked.middleRows(s * dim, dim) = rep.gens[static_cast<std::size_t>(s)] - id;
  return linalg::orthonormal_kernel(stacked, tol);
}

QuotientResult quotient(const Representation& rep, const Eigen::MatrixXcd& kernel, double tol) {
  const Eigen::Index n = rep.dim();
  const Eigen::Index k = kernel.cols();
  if (kernel.rows() != n) throw std::invalid_argument("quotient: kernel dimension mismatch");
  if (linalg::rank(kernel, tol) != k)
    throw std::invalid_argument("quotient: kernel columns are dependent");
  for (const auto& g : rep.gens)
    if (linalg::max_abs(g * kernel - kernel) > tol * (1.0 + linalg::max_abs(kernel)))
      throw std::invalid_argument("quotient: kernel is not fixed pointwise");

  // Complement spanned by standard basis vectors, chosen greedily.
  Eigen::MatrixXcd basis(n, n);
  basis.leftCols(k) = kernel;
  Eigen::Index filled = k;
  std::vector<Eigen::Index> complement;
  for (Eigen::Index i = 0; i < n && filled < n; ++i) {
    basis.col(filled) = Eigen::VectorXcd::Unit(n, i);
    if (linalg::rank(basis.leftCols(filled + 1), tol) == filled + 1) {
      complement.push_back(i);
      ++filled;
    }
  }
  if (filled != n) throw std::logic_error("quotient: failed to complete a basis");

  const Eigen::MatrixXcd inverse = basis.inverse();
  QuotientResult out;
  out.projection = inverse.bottomRows(n - k);
  out.lift = basis.rightCols(n - k);
  out.rep.labels = rep.labels;
  out.rep.gens.reserve(rep.gens.size());
  for (const auto& g : rep.gens) out.rep.gens.push_back(out.projection * g * out.lift);
  out.rep.alpha.reserve(rep.alpha.size());
  for (const auto& a : rep.alpha) out.rep.alpha.push_back(out.projection * a);
  return out;
}

namespace {

struct ComponentScan {
  std::vector<int> size;             // vertices per component
  std::vector<int> directed_edges;   // directed bonds per component
  std::vector<int> tilde_edges;      // tilde edges per component
  std::vector<bool> has_complex_u;   // some varrho_z bond with non-real u
};

ComponentScan scan_components(const IRDatum& datum, const TildeSystem& tilde, double tol) {
  const CircuitBasis& basis = tilde.basis();
  ComponentScan scan;
  scan.size.assign(static_cast<std::size_t>(basis.component_count), 0);
  scan.directed_edges.assign(static_cast<std::size_t>(basis.component_count), 0);
  scan.tilde_edges.assign(static_cast<std::size_t>(basis.component_count), 0);
  scan.has_complex_u.assign(static_cast<std::size_t>(basis.component_count), false);
  for (std::size_t v = 0; v < basis.component_map.size(); ++v)
    ++scan.size[static_cast<std::size_t>(basis.component_map[v])];
  for (const auto& [a, b] : tilde.graph().edges()) {
    const int comp = basis.component_map[static_cast<std::size_t>(a)];
    ++scan.tilde_edges[static_cast<std::size_t>(comp)];
    const BondParameter& p = datum.bond_param(a, b);
    if (p.kind == BondParameter::Kind::Directed) ++scan.directed_edges[static_cast<std::size_t>(comp)];
    if (p.kind == BondParameter::Kind::FreeZ && std::abs(u_of(p.z).imag()) > tol)
      scan.has_complex_u[static_cast<std::size_t>(comp)] = true;
  }
  return scan;
}

FormResult invariant_form_impl(const IRDatum& datum, FormKind kind, double tol) {
  const bool bilinear = kind == FormKind::Bilinear;
  const int n = datum.rank();
  const TildeSystem tilde = tilde_system(datum);
  const CircuitBasis& basis = tilde.basis();
  const ComponentScan scan = scan_components(datum, tilde, tol);

  // Directed bonds kill path propagation (their catalog block forces a zero
  // diagonal, which spreads along the component); the only survivor is a
  // component that consists of one directed edge and nothing else.
  std::vector<bool> degenerate_component(static_cast<std::size_t>(basis.component_count), false);
  for (int c = 0; c < basis.component_count; ++c) {
    const std::size_t cc = static_cast<std::size_t>(c);
    if (scan.directed_edges[cc] == 0) continue;
    if (scan.size[cc] == 2 && scan.tilde_edges[cc] == 1) {
      degenerate_component[cc] = true;
      continue;
    }
    return FormResult{std::nullopt,
                      "a directed infinite bond forces the form to vanish on its component"};
  }
  if (!bilinear)
    for (int c = 0; c < basis.component_count; ++c)
      if (scan.has_complex_u[static_cast<std::size_t>(c)])
        return FormResult{std::nullopt,
                          "varrho_z bond with non-real u(z) admits no Hermitian block"};

  const Classification cls = character_of(datum);
  for (std::size_t e = 0; e < cls.chi.size(); ++e) {
    const Complex x = cls.chi[e];
    const bool ok = bilinear ? (close(x, Complex(1, 0), tol) || close(x, Complex(-1, 0), tol))
                             : close(std::abs(x), 1.0, tol);
    if (!ok) {
      const OrientedEdge& chord = basis.chords[e];
      return FormResult{
          std::nullopt,
          std::string("character value ") + (bilinear ? "not +-1" : "not on the unit circle") +
              " on the circuit of chord " + datum.system().label(chord.from) + "-" +
              datum.system().label(chord.to)};
    }
  }

  // Diagonal by forest propagation; off-diagonal entries follow the matrix A
  // pattern B(alpha_i, alpha_j) = A_ij B(alpha_i, alpha_i).
  const Eigen::MatrixXcd a = matrix_a(datum).entries;
  Eigen::VectorXcd diag(n);
  const std::vector<int>& parent = basis.parent;
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  auto resolve = [&](auto&& self, int v) -> Complex {
    if (done[static_cast<std::size_t>(v)]) return diag(v);
    done[static_cast<std::size_t>(v)] = 1;
    const int p = parent[static_cast<std::size_t>(v)];
    if (p < 0) {
      diag(v) = Complex(1, 0);
    } else {
      const Complex ratio = datum.scalar(p, v) / datum.scalar(v, p);
      diag(v) = self(self, p) * (bilinear ? ratio * ratio : Complex(std::norm(ratio), 0));
    }
    return diag(v);
  };
  for (int v = 0; v < n; ++v) resolve(resolve, v);

  // Degenerate directed components overwrite their diagonal with the catalog
  // block: 0 on the absorbing vertex, 1 on the other.
  for (const auto& [u, v] : tilde.graph().edges()) {
    const BondParameter& p = datum.bond_param(u, v);
    if (p.kind != BondParameter::Kind::Directed) continue;
    diag(p.absorbing) = Complex(0, 0);
    diag(p.absorbing == u ? v : u) = Complex(1, 0);
  }

  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) gram(i, i) = diag(i);
  for (const auto& [i, j] : tilde.graph().edges()) {
    const Complex value = a(i, j) * diag(i);
    gram(i, j) = value;
    gram(j, i) = bilinear ? value : std::conj(value);
  }
  return FormResult{InvariantForm{kind, std::move(gram)}, ""};
}

}  // namespace

FormResult bilinear_form(const IRDatum& datum, double tol) {
  return invariant_form_impl(datum, FormKind::Bilinear, tol);
}

FormResult sesquilinear_form(const IRDatum& datum, double tol) {
  return invariant_form_impl(datum, FormKind::Sesquilinear, tol);
}

double form_invariance_residual(const Representation& rep, const InvariantForm& form) {
  double residual = 0.0;
  for (const auto& g : rep.gens) {
    const Eigen::MatrixXcd left = form.kind == FormKind::Bilinear
                                      ? Eigen::MatrixXcd(g.transpose())
                                      : Eigen::MatrixXcd(g.adjoint());
    residual = std::max(residual, linalg::max_abs(left * form.gram * g - form.gram));
  }
  return residual;
}

DualReport dual(const IRDatum& datum, double tol) {
  const int n = datum.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (datum.system().bond(i, j).is_infinite())
        throw std::domain_error("dual: infinite bond orders are not supported");

  const Eigen::MatrixXcd a = matrix_a(datum).entries;

  IRDatum swapped(datum.system());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) swapped.set_bond_param(i, j, datum.bond_param(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) swapped.set_scalar(i, j, datum.scalar(j, i));  // b_r^t = a_t^r

  DualReport report;
  report.transition = a.transpose();
  const int rank = linalg::rank(a, tol);
  report.invertible = rank == n;
  report.quotient_dim = rank;
  report.dual_class = character_of(swapped);
  return report;
}

bool DirectionPreorder::leq(int s, int v) const {
  return reaches.at(static_cast<std::size_t>(v)).at(static_cast<std::size_t>(s)) != 0;
}

std::vector<int> DirectionPreorder::down_closure(int class_id) const {
  std::vector<int> out;
  const int n = static_cast<int>(reaches.size());
  for (int s = 0; s < n; ++s) {
    bool below = false;
    for (int v : classes.at(static_cast<std::size_t>(class_id)))
      if (leq(s, v)) below = true;
    if (below) out.push_back(s);
  }
  return out;
}

DirectionPreorder direction_preorder(const IRDatum& datum) {
  const int n = datum.rank();
  const TildeSystem tilde = tilde_system(datum);

  DirectionPreorder order;
  for (const auto& [u, v] : tilde.graph().edges()) {
    const BondParameter& p = datum.bond_param(u, v);
    if (p.kind == BondParameter::Kind::Directed) {
      const int sub = p.absorbing;
      const int other = sub == u ? v : u;
      order.arrows.emplace_back(other, sub);  // only the arrow into the sub-rep line
    } else {
      order.arrows.emplace_back(u, v);
      order.arrows.emplace_back(v, u);
    }
  }

  order.reaches.assign(static_cast<std::size_t>(n),
                       std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int v = 0; v < n; ++v) order.reaches[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 1;
  for (const auto& [from, to] : order.arrows)
    order.reaches[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] = 1;
  for (int mid = 0; mid < n; ++mid)
    for (int from = 0; from < n; ++from)
      for (int to = 0; to < n; ++to)
        if (order.reaches[static_cast<std::size_t>(from)][static_cast<std::size_t>(mid)] &&
            order.reaches[static_cast<std::size_t>(mid)][static_cast<std::size_t>(to)])
          order.reaches[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] = 1;

  order.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (order.class_of[static_cast<std::size_t>(v)] >= 0) continue;
    const int id = static_cast<int>(order.classes.size());
    order.classes.emplace_back();
    for (int w = v; w < n; ++w) {
      if (order.class_of[static_cast<std::size_t>(w)] < 0 &&
          order.reaches[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] &&
          order.reaches[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]) {
        order.class_of[static_cast<std::size_t>(w)] = id;
        order.classes.back().push_back(w);
      }
    }
  }
  return order;
}

int commutant_dimension(const Representation& rep, double tol) {
  return linalg::commutant_dimension(rep.gens, tol);
}

int hom_dimension(const Representation& from, const Representation& to, double tol) {
  return linalg::intertwiner_dimension(from.gens, to.gens, tol);
}

std::vector<Eigen::MatrixXcd> hom_basis(const Representation& from, const Representation& to,
                                        double tol) {
  return linalg::intertwiner_basis(from.gens, to.gens, tol);
}

std::optional<Eigen::MatrixXcd> invertible_intertwiner(const Representation& from,
                                                       const Representation& to, double tol) {
  return linalg::invertible_intertwiner(from.gens, to.gens, tol);
}

int invariant_form_space_dimension(const Representation& rep, FormKind kind, double tol) {
  return linalg::invariant_form_dimension(rep.gens, kind == FormKind::Bilinear, tol);
}

}  // namespace coxir
