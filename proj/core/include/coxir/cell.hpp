#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "coxir/coxeter.hpp"
#include "coxir/ir.hpp"
#include "coxir/types.hpp"

namespace coxir {

struct SignedWord {
  DihedralWord word;
  int sign = 1;
};

// The Kazhdan-Lusztig basis element C_{w_rt} of the longest word of the
// dihedral pair (r, t), specialized at q = 1: the 2m signed group-algebra
// terms w_rt, (-1)^i (r_{m-i} + t_{m-i}) for 1 <= i <= m-1, and (-1)^m e.
struct CellElement {
  std::string r;
  std::string t;
  int m = 0;
  std::vector<SignedWord> terms;
};

CellElement cell_element(BondOrder m, const std::string& r, const std::string& t);

// Evaluates the element in a representation of the pair: the signed sum of
// the word products. Both matrices must be involutions (throws otherwise).
Eigen::MatrixXcd apply_cell(const CellElement& elem, const Eigen::MatrixXcd& mat_r,
                            const Eigen::MatrixXcd& mat_t, double tol = kDefaultTol);

struct A1Violation {
  int r = 0;
  int t = 0;
  Eigen::VectorXcd witness;  // r . v = t . v = -v
};

// Checks the cell condition: no nonzero vector is a simultaneous
// (-1)-eigenvector of two generators with a finite bond. Returns the first
// violating pair with a witness, or nullopt when the condition holds.
std::optional<A1Violation> check_a1(const Representation& rep, const CoxeterSystem& system,
                                    double tol = kDefaultTol);

}  // namespace coxir
