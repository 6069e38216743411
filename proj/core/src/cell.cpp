#include "coxir/cell.hpp"

#include <stdexcept>

#include "coxir/linalg.hpp"

namespace coxir {

CellElement cell_element(BondOrder m, const std::string& r, const std::string& t) {
  if (m.is_infinite()) throw std::invalid_argument("cell_element: infinite bond order");
  const int mv = m.value();
  if (mv < 2) throw std::invalid_argument("cell_element: bond order < 2");

  CellElement elem{r, t, mv, {}};
  elem.terms.reserve(static_cast<std::size_t>(2 * mv));
  elem.terms.push_back(SignedWord{DihedralWord{r, t, mv, true}, 1});
  for (int i = 1; i <= mv - 1; ++i) {
    const int sign = i % 2 == 0 ? 1 : -1;
    elem.terms.push_back(SignedWord{DihedralWord{r, t, mv - i, true}, sign});
    elem.terms.push_back(SignedWord{DihedralWord{r, t, mv - i, false}, sign});
  }
  elem.terms.push_back(SignedWord{DihedralWord{r, t, 0, true}, mv % 2 == 0 ? 1 : -1});
  return elem;
}

Eigen::MatrixXcd apply_cell(const CellElement& elem, const Eigen::MatrixXcd& mat_r,
                            const Eigen::MatrixXcd& mat_t, double tol) {
  if (mat_r.rows() != mat_r.cols() || mat_t.rows() != mat_t.cols() ||
      mat_r.rows() != mat_t.rows())
    throw std::invalid_argument("apply_cell: matrices must be square and of equal size");
  if (!linalg::is_involution(mat_r, tol) || !linalg::is_involution(mat_t, tol))
    throw std::invalid_argument("apply_cell: generator matrices must be involutions");

  const Eigen::Index n = mat_r.rows();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (const SignedWord& term : elem.terms) {
    Eigen::MatrixXcd product = Eigen::MatrixXcd::Identity(n, n);
    for (const std::string& letter : term.word.letters())
      product = product * (letter == elem.r ? mat_r : mat_t);
    sum += static_cast<double>(term.sign) * product;
  }
  return sum;
}

std::optional<A1Violation> check_a1(const Representation& rep, const CoxeterSystem& system,
                                    double tol) {
  const int n = system.rank();
  if (static_cast<int>(rep.gens.size()) != n)
    throw std::invalid_argument("check_a1: generator count mismatch");
  const Eigen::Index dim = rep.dim();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (system.bond(i, j).is_infinite()) continue;
      Eigen::MatrixXcd stacked(2 * dim, dim);
      stacked.topRows(dim) = rep.gens[static_cast<std::size_t>(i)] + id;
      stacked.bottomRows(dim) = rep.gens[static_cast<std::size_t>(j)] + id;
      const Eigen::MatrixXcd joint = linalg::kernel(stacked, tol);
      if (joint.cols() > 0) return A1Violation{i, j, joint.col(0)};
    }
  }
  return std::nullopt;
}

}  // namespace coxir
