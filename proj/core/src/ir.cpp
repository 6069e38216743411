#include "coxir/ir.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "coxir/linalg.hpp"

namespace coxir {

namespace {

constexpr double kPi = std::numbers::pi;

int pair_slot_of(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Rule (2) matching: z = 4 cos^2(k pi / m) for coprime k, m with k < m/2.
// Decided with an absolute tolerance; smallest m wins.
std::optional<int> rotation_order_match(Complex z, double tol = 1e-9) {
  if (std::abs(z.imag()) > tol) return std::nullopt;
  const double x = z.real();
  if (x < -tol || x > 4.0 + tol) return std::nullopt;
  for (int m = 3; m <= 1000; ++m) {
    for (int k = 1; 2 * k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      const double c = std::cos(k * kPi / m);
      if (std::abs(x - 4.0 * c * c) <= tol && std::abs(z.imag()) <= tol) return m;
    }
  }
  return std::nullopt;
}

BondOrder tilde_order(BondOrder m, const BondParameter& p) {
  if (m.is_finite()) {
    const int mv = m.value();
    return BondOrder::finite(mv / std::gcd(mv, p.k));
  }
  switch (p.kind) {
    case BondParameter::Kind::Directed:
      return BondOrder::infinite();
    case BondParameter::Kind::FreeZ: {
      if (std::abs(p.z) <= 1e-9) return BondOrder::finite(2);  // varrho_0
      if (auto mm = rotation_order_match(p.z)) return BondOrder::finite(*mm);
      return BondOrder::infinite();
    }
    case BondParameter::Kind::FiniteK:
      break;
  }
  throw std::logic_error("tilde_order: finite-k parameter on an infinite bond");
}

std::vector<BondOrder> tilde_orders(const CoxeterSystem& sys,
                                    const std::vector<BondParameter>& bonds) {
  const int n = sys.rank();
  std::vector<BondOrder> orders(static_cast<std::size_t>(n * (n - 1) / 2), BondOrder::finite(2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      orders[static_cast<std::size_t>(pair_slot_of(n, i, j))] =
          tilde_order(sys.bond(i, j), bonds[static_cast<std::size_t>(pair_slot_of(n, i, j))]);
  return orders;
}

SimpleGraph make_tilde_graph(const CoxeterSystem& sys, const std::vector<BondOrder>& orders) {
  const int n = sys.rank();
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const BondOrder& o = orders[static_cast<std::size_t>(pair_slot_of(n, i, j))];
      if (o.is_infinite() || o.value() >= 3) edges.emplace_back(sys.label(i), sys.label(j));
    }
  return SimpleGraph(sys.generators(), std::move(edges));
}

}  // namespace

bool BondParameter::same_as(const BondParameter& other, double tol) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::FiniteK:
      return k == other.k;
    case Kind::FreeZ:
      return close(z, other.z, tol);
    case Kind::Directed:
      return absorbing == other.absorbing;
  }
  return false;
}

IRDatum::IRDatum(CoxeterSystem system) : system_(std::move(system)) {
  const auto errors = system_.validate();
  if (!errors.empty())
    throw std::invalid_argument("IRDatum: invalid Coxeter system: " + errors.front());
  const int n = system_.rank();
  bonds_.assign(static_cast<std::size_t>(n * (n - 1) / 2), BondParameter{});
  scalars_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Complex(1, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      BondParameter& p = bonds_[static_cast<std::size_t>(pair_slot(i, j))];
      p = system_.bond(i, j).is_finite() ? BondParameter::finite_k(1)
                                         : BondParameter::free_z(Complex(4, 0));
    }
}

int IRDatum::pair_slot(int i, int j) const { return pair_slot_of(system_.rank(), i, j); }

const BondParameter& IRDatum::bond_param(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= rank() || j >= rank())
    throw std::out_of_range("IRDatum::bond_param: bad pair");
  return bonds_[static_cast<std::size_t>(pair_slot(i, j))];
}

Complex IRDatum::scalar(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= rank() || j >= rank())
    throw std::out_of_range("IRDatum::scalar: bad ordered pair");
  return scalars_[static_cast<std::size_t>(i) * static_cast<std::size_t>(rank()) +
                  static_cast<std::size_t>(j)];
}

void IRDatum::set_bond_param(int i, int j, const BondParameter& p) {
  if (i == j || i < 0 || j < 0 || i >= rank() || j >= rank())
    throw std::out_of_range("IRDatum::set_bond_param: bad pair");
  const BondOrder m = system_.bond(i, j);
  switch (p.kind) {
    case BondParameter::Kind::FiniteK:
      if (m.is_infinite())
        throw std::invalid_argument("set_bond_param: rho_k parameter on an infinite bond");
      if (p.k < 1 || 2 * p.k > m.value())
        throw std::invalid_argument("set_bond_param: k outside [1, m/2] for pair {" +
                                    system_.label(i) + "," + system_.label(j) + "}");
      break;
    case BondParameter::Kind::FreeZ:
      if (m.is_finite())
        throw std::invalid_argument("set_bond_param: varrho_z parameter on a finite bond");
      break;
    case BondParameter::Kind::Directed:
      if (m.is_finite())
        throw std::invalid_argument("set_bond_param: directed parameter on a finite bond");
      if (p.absorbing != i && p.absorbing != j)
        throw std::invalid_argument("set_bond_param: absorbing generator not in the pair");
      break;
  }
  bonds_[static_cast<std::size_t>(pair_slot(i, j))] = p;
}

void IRDatum::set_scalar(int i, int j, Complex a) {
  if (i == j || i < 0 || j < 0 || i >= rank() || j >= rank())
    throw std::out_of_range("IRDatum::set_scalar: bad ordered pair");
  if (std::abs(a) == 0.0) throw std::invalid_argument("set_scalar: scalar a_r^t must be nonzero");
  scalars_[static_cast<std::size_t>(i) * static_cast<std::size_t>(rank()) +
           static_cast<std::size_t>(j)] = a;
}

Complex IRDatum::coefficient(int i, int j) const {
  const BondParameter& p = bond_param(i, j);
  const Complex ratio = scalar(i, j) / scalar(j, i);
  switch (p.kind) {
    case BondParameter::Kind::FiniteK:
      return 2.0 * cos_k_pi_over_m(p.k, system_.bond(i, j).value()) * ratio;
    case BondParameter::Kind::FreeZ:
      return u_of(p.z) * ratio;
    case BondParameter::Kind::Directed:
      return p.absorbing == i ? ratio : Complex(0, 0);
  }
  throw std::logic_error("coefficient: unreachable");
}

TildeSystem::TildeSystem(const CoxeterSystem& system, const std::vector<BondParameter>& bonds)
    : n_(system.rank()),
      orders_(tilde_orders(system, bonds)),
      graph_(make_tilde_graph(system, orders_)),
      basis_(spanning_forest(graph_)) {}

BondOrder TildeSystem::tilde_m(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::out_of_range("TildeSystem::tilde_m: bad pair");
  return orders_[static_cast<std::size_t>(pair_slot_of(n_, i, j))];
}

TildeSystem tilde_system(const IRDatum& datum) {
  const int n = datum.rank();
  std::vector<BondParameter> bonds;
  bonds.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) bonds.push_back(datum.bond_param(i, j));
  return TildeSystem(datum.system(), bonds);
}

Representation build(const IRDatum& datum) {
  const int n = datum.rank();
  Representation rep;
  rep.labels = datum.system().generators();
  rep.gens.reserve(static_cast<std::size_t>(n));
  rep.alpha.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(n, n);
    g(i, i) = Complex(-1, 0);
    for (int j = 0; j < n; ++j)
      if (j != i) g(i, j) = datum.coefficient(i, j);
    rep.gens.push_back(std::move(g));
    rep.alpha.push_back(Eigen::VectorXcd::Unit(n, i));
  }
  return rep;
}

Classification character_of(const IRDatum& datum) {
  const TildeSystem tilde = tilde_system(datum);
  Classification c{datum.system(), {}, {}};
  const int n = datum.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c.bonds.push_back(datum.bond_param(i, j));
  for (const auto& circuit : tilde.basis().circuits) {
    Complex value(1, 0);
    for (std::size_t step = 0; step + 1 < circuit.size(); ++step) {
      const int r = circuit[step];
      const int t = circuit[step + 1];
      value *= datum.scalar(t, r) / datum.scalar(r, t);
    }
    c.chi.push_back(value);
  }
  return c;
}

bool Classification::same_bonds(const Classification& other, double tol) const {
  if (!(system == other.system) || bonds.size() != other.bonds.size()) return false;
  for (std::size_t i = 0; i < bonds.size(); ++i)
    if (!bonds[i].same_as(other.bonds[i], tol)) return false;
  return true;
}

IRDatum datum_from_classification(const Classification& c) {
  IRDatum datum(c.system);
  const int n = datum.rank();
  if (c.bonds.size() != static_cast<std::size_t>(n * (n - 1) / 2))
    throw std::invalid_argument("datum_from_classification: bond parameter count mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      datum.set_bond_param(i, j, c.bonds[static_cast<std::size_t>(pair_slot_of(n, i, j))]);

  const TildeSystem tilde = tilde_system(datum);
  if (c.chi.size() != tilde.basis().chords.size())
    throw std::invalid_argument("datum_from_classification: one chi value per chord required");
  for (std::size_t e = 0; e < c.chi.size(); ++e) {
    if (std::abs(c.chi[e]) == 0.0)
      throw std::invalid_argument("datum_from_classification: chi values must be nonzero");
    const OrientedEdge& chord = tilde.basis().chords[e];
    datum.set_scalar(chord.to, chord.from, c.chi[e]);
  }
  return datum;
}

IsomorphismResult isomorphism(const IRDatum& a, const IRDatum& b, double tol) {
  if (!(a.system() == b.system()))
    throw std::invalid_argument("isomorphism: data over different Coxeter systems");
  const int n = a.rank();

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!a.bond_param(i, j).same_as(b.bond_param(i, j), tol))
        return IsomorphismResult{false,
                                 "bond parameters differ at pair {" + a.system().label(i) + "," +
                                     a.system().label(j) + "}",
                                 {},
                                 0.0};

  const Classification ca = character_of(a);
  const Classification cb = character_of(b);
  const TildeSystem tilde = tilde_system(a);
  for (std::size_t e = 0; e < ca.chi.size(); ++e) {
    if (!close(ca.chi[e], cb.chi[e], tol)) {
      const OrientedEdge& chord = tilde.basis().chords[e];
      return IsomorphismResult{false,
                               "characters differ on the circuit of chord " +
                                   a.system().label(chord.from) + "-" + a.system().label(chord.to),
                               {},
                               0.0};
    }
  }

  // Scalar propagation along the forest, from each component's base vertex.
  std::vector<Complex> scale(static_cast<std::size_t>(n), Complex(0, 0));
  const std::vector<int>& parent = tilde.basis().parent;
  auto resolve = [&](auto&& self, int v) -> Complex {
    Complex& memo = scale[static_cast<std::size_t>(v)];
    if (memo != Complex(0, 0)) return memo;
    const int p = parent[static_cast<std::size_t>(v)];
    if (p < 0) return memo = Complex(1, 0);
    const Complex up = self(self, p);
    memo = up * (a.scalar(p, v) * b.scalar(v, p)) / (a.scalar(v, p) * b.scalar(p, v));
    return memo;
  };
  for (int v = 0; v < n; ++v) resolve(resolve, v);

  Eigen::MatrixXcd phi = Eigen::MatrixXcd::Zero(n, n);
  for (int v = 0; v < n; ++v) phi(v, v) = scale[static_cast<std::size_t>(v)];

  const Representation ra = build(a);
  const Representation rb = build(b);
  double residual = 0.0;
  for (int s = 0; s < n; ++s)
    residual = std::max(residual, linalg::max_abs(phi * ra.gens[static_cast<std::size_t>(s)] -
                                                  rb.gens[static_cast<std::size_t>(s)] * phi));
  return IsomorphismResult{true, "", std::move(phi), residual};
}

IRDatum extract_datum(const Representation& rep, const CoxeterSystem& system, double tol) {
  const int n = system.rank();
  if (static_cast<int>(rep.gens.size()) != n || rep.dim() != n)
    throw std::invalid_argument("extract_datum: representation size does not match the system");

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  for (int s = 0; s < n; ++s) {
    const Eigen::MatrixXcd& g = rep.gens[static_cast<std::size_t>(s)];
    if (static_cast<std::size_t>(s) < rep.alpha.size() &&
        (rep.alpha[static_cast<std::size_t>(s)] - Eigen::VectorXcd::Unit(n, s)).cwiseAbs().maxCoeff() > tol)
      throw std::domain_error("(IR) violated: alpha vectors are not the standard basis");
    if (!linalg::is_involution(g, tol))
      throw std::domain_error("(IR) violated: generator '" + system.label(s) +
                              "' is not an involution");
    if ((g.col(s) + Eigen::VectorXcd::Unit(n, s)).cwiseAbs().maxCoeff() > tol)
      throw std::domain_error("(IR) violated: alpha is not negated by '" + system.label(s) + "'");
    const Eigen::MatrixXcd diff = g - id;
    for (int row = 0; row < n; ++row)
      if (row != s && diff.row(row).cwiseAbs().maxCoeff() > tol)
        throw std::domain_error("(IR) violated: generator '" + system.label(s) +
                                "' does not fix a coordinate hyperplane");
    if (linalg::rank(diff, tol) != 1)
      throw std::domain_error("(IR) violated: rank(g - I) != 1 at '" + system.label(s) + "'");
  }

  IRDatum datum{system};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Complex c_ij = rep.gens[static_cast<std::size_t>(i)](i, j);
      const Complex c_ji = rep.gens[static_cast<std::size_t>(j)](j, i);
      const DihedralRepSpec spec = identify_bond(c_ij, c_ji, system.bond(i, j));
      switch (spec.kind()) {
        case DihedralRepSpec::Kind::RhoK: {
          datum.set_bond_param(i, j, BondParameter::finite_k(spec.k()));
          const double cos_k = cos_k_pi_over_m(spec.k(), spec.m());
          if (std::abs(cos_k) > tol) datum.set_scalar(i, j, c_ij / (2.0 * cos_k));
          break;
        }
        case DihedralRepSpec::Kind::VarrhoZ: {
          datum.set_bond_param(i, j, BondParameter::free_z(spec.z()));
          const Complex u = u_of(spec.z());
          if (std::abs(u) > tol) datum.set_scalar(i, j, c_ij / u);
          break;
        }
        case DihedralRepSpec::Kind::VarrhoRT:
          if (spec.absorbing() == Absorbing::R) {
            datum.set_bond_param(i, j, BondParameter::directed(i));
            datum.set_scalar(i, j, c_ij);
          } else {
            datum.set_bond_param(i, j, BondParameter::directed(j));
            datum.set_scalar(j, i, c_ji);
          }
          break;
        default:
          throw std::logic_error("extract_datum: unexpected catalog entry");
      }
    }
  }
  return datum;
}

double RelationReport::max_residual() const {
  return std::max({involution_residual, braid_residual, reflection_residual});
}

RelationReport verify_relations(const Representation& rep, const CoxeterSystem& system) {
  const int n = system.rank();
  if (static_cast<int>(rep.gens.size()) != n)
    throw std::invalid_argument("verify_relations: generator count mismatch");
  const Eigen::Index dim = rep.dim();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

  RelationReport report;
  for (int s = 0; s < n; ++s) {
    const Eigen::MatrixXcd& g = rep.gens[static_cast<std::size_t>(s)];
    report.involution_residual = std::max(report.involution_residual, linalg::max_abs(g * g - id));
    const Eigen::VectorXcd& alpha = rep.alpha.at(static_cast<std::size_t>(s));
    report.reflection_residual =
        std::max(report.reflection_residual, (g * alpha + alpha).cwiseAbs().maxCoeff());
    if (dim >= 2) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g - id);
      report.reflection_residual = std::max(report.reflection_residual, svd.singularValues()(1));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const BondOrder m = system.bond(i, j);
      if (m.is_infinite()) continue;
      const Eigen::MatrixXcd product =
          rep.gens[static_cast<std::size_t>(i)] * rep.gens[static_cast<std::size_t>(j)];
      Eigen::MatrixXcd power = id;
      for (int rep_count = 0; rep_count < m.value(); ++rep_count) power = power * product;
      report.braid_residual = std::max(report.braid_residual, linalg::max_abs(power - id));
    }
  return report;
}

}  // namespace coxir
