#include "coxir/linalg.hpp"

#include <random>
#include <stdexcept>

namespace coxir::linalg {

namespace {

Eigen::FullPivLU<Eigen::MatrixXcd> factorize(const Eigen::MatrixXcd& m, double tol) {
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
  lu.setThreshold(tol);
  return lu;
}

// vec(X) with X as nb x na, column-major. Constraint X a = b X reads
// (a^T kron I_nb - I_na kron b) vec(X) = 0.
Eigen::MatrixXcd intertwiner_system(const std::vector<Eigen::MatrixXcd>& a,
                                    const std::vector<Eigen::MatrixXcd>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("intertwiner: tuple sizes differ");
  if (a.empty()) throw std::invalid_argument("intertwiner: empty tuples");
  const Eigen::Index na = a.front().rows();
  const Eigen::Index nb = b.front().rows();
  const Eigen::Index cols = na * nb;
  Eigen::MatrixXcd system(static_cast<Eigen::Index>(a.size()) * cols, cols);
  const Eigen::MatrixXcd id_a = Eigen::MatrixXcd::Identity(na, na);
  const Eigen::MatrixXcd id_b = Eigen::MatrixXcd::Identity(nb, nb);
  for (std::size_t g = 0; g < a.size(); ++g) {
    Eigen::MatrixXcd block(cols, cols);
    // kron(a[g]^T, id_b) - kron(id_a, b[g])
    for (Eigen::Index i = 0; i < na; ++i)
      for (Eigen::Index j = 0; j < na; ++j)
        block.block(i * nb, j * nb, nb, nb) =
            a[g](j, i) * id_b - (i == j ? b[g] : Eigen::MatrixXcd::Zero(nb, nb));
    system.middleRows(static_cast<Eigen::Index>(g) * cols, cols) = block;
  }
  return system;
}

}  // namespace

int rank(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(factorize(m, tol).rank());
}

int corank(const Eigen::MatrixXcd& m, double tol) {
  return static_cast<int>(m.cols()) - rank(m, tol);
}

Complex determinant(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (m.rows() == 0) return Complex(1, 0);
  return factorize(m, tol).determinant();
}

Eigen::MatrixXcd kernel(const Eigen::MatrixXcd& m, double tol) {
  if (m.cols() == 0) return Eigen::MatrixXcd(0, 0);
  auto lu = factorize(m, tol);
  if (lu.dimensionOfKernel() == 0) return Eigen::MatrixXcd(m.cols(), 0);
  return lu.kernel();
}

Eigen::MatrixXcd orthonormal_kernel(const Eigen::MatrixXcd& m, double tol) {
  Eigen::MatrixXcd k = kernel(m, tol);
  if (k.cols() == 0) return k;
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(k);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(k.rows(), k.cols());
  return q;
}

double max_abs(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_involution(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return max_abs(m * m - id) <= tol * (1.0 + max_abs(m));
}

std::vector<Eigen::MatrixXcd> intertwiner_basis(const std::vector<Eigen::MatrixXcd>& a,
                                                const std::vector<Eigen::MatrixXcd>& b,
                                                double tol) {
  const Eigen::Index na = a.front().rows();
  const Eigen::Index nb = b.front().rows();
  const Eigen::MatrixXcd null_basis = kernel(intertwiner_system(a, b), tol);
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(static_cast<std::size_t>(null_basis.cols()));
  for (Eigen::Index c = 0; c < null_basis.cols(); ++c) {
    Eigen::MatrixXcd x(nb, na);
    for (Eigen::Index j = 0; j < na; ++j) x.col(j) = null_basis.col(c).segment(j * nb, nb);
    out.push_back(std::move(x));
  }
  return out;
}

int intertwiner_dimension(const std::vector<Eigen::MatrixXcd>& a,
                          const std::vector<Eigen::MatrixXcd>& b, double tol) {
  return corank(intertwiner_system(a, b), tol);
}

std::optional<Eigen::MatrixXcd> invertible_intertwiner(const std::vector<Eigen::MatrixXcd>& a,
                                                       const std::vector<Eigen::MatrixXcd>& b,
                                                       double tol) {
  const Eigen::Index na = a.front().rows();
  const Eigen::Index nb = b.front().rows();
  if (na != nb) return std::nullopt;
  const auto basis = intertwiner_basis(a, b, tol);
  if (basis.empty()) return std::nullopt;

  auto invertible = [&](const Eigen::MatrixXcd& x) { return rank(x, tol) == na; };
  for (const auto& x : basis)
    if (invertible(x)) return x;

  std::mt19937 rng(20240405u);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(nb, na);
    for (const auto& e : basis) x += Complex(unit(rng), unit(rng)) * e;
    if (invertible(x)) return x;
  }
  return std::nullopt;
}

int commutant_dimension(const std::vector<Eigen::MatrixXcd>& gens, double tol) {
  return intertwiner_dimension(gens, gens, tol);
}

int invariant_form_dimension(const std::vector<Eigen::MatrixXcd>& gens, bool bilinear,
                             double tol) {
  if (gens.empty()) throw std::invalid_argument("invariant_form_dimension: empty tuple");
  const Eigen::Index n = gens.front().rows();
  const Eigen::Index cols = n * n;
  // Bilinear: g^T X g = X. Sesquilinear: g^H X g = X (with X the Gram of a
  // form conjugate-linear in its first argument). Row blocks stack
  // kron(g^T, g^T) - I resp. kron(g^T, g^H) - I acting on vec(X).
  Eigen::MatrixXcd system(static_cast<Eigen::Index>(gens.size()) * cols, cols);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const Eigen::MatrixXcd left =
        bilinear ? Eigen::MatrixXcd(gens[s].transpose()) : Eigen::MatrixXcd(gens[s].adjoint());
    Eigen::MatrixXcd block(cols, cols);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        block.block(i * n, j * n, n, n) = gens[s](j, i) * left;
    block -= Eigen::MatrixXcd::Identity(cols, cols);
    system.middleRows(static_cast<Eigen::Index>(s) * cols, cols) = block;
  }
  return corank(system, tol);
}

}  // namespace coxir::linalg
