#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "coxir/types.hpp"

namespace coxir::linalg {

// Rank via complete-pivoting LU with a relative threshold: pivots below
// tol * |largest pivot| are treated as zero.
int rank(const Eigen::MatrixXcd& m, double tol = kDefaultTol);

int corank(const Eigen::MatrixXcd& m, double tol = kDefaultTol);

// Determinant of a square matrix, from the same pivoted factorization.
Complex determinant(const Eigen::MatrixXcd& m, double tol = kDefaultTol);

// Columns spanning the null space (empty matrix with 0 columns if trivial).
Eigen::MatrixXcd kernel(const Eigen::MatrixXcd& m, double tol = kDefaultTol);

// Null-space basis with orthonormal columns.
Eigen::MatrixXcd orthonormal_kernel(const Eigen::MatrixXcd& m, double tol = kDefaultTol);

double max_abs(const Eigen::MatrixXcd& m);

bool is_involution(const Eigen::MatrixXcd& m, double tol = kDefaultTol);

// The space of intertwiners {X : X a[i] = b[i] X for all i} between two
// matrix tuples of sizes (na x na) and (nb x nb); X is nb x na. The kernel is
// computed from the stacked Kronecker system.
std::vector<Eigen::MatrixXcd> intertwiner_basis(const std::vector<Eigen::MatrixXcd>& a,
                                                const std::vector<Eigen::MatrixXcd>& b,
                                                double tol = kDefaultTol);

int intertwiner_dimension(const std::vector<Eigen::MatrixXcd>& a,
                          const std::vector<Eigen::MatrixXcd>& b, double tol = kDefaultTol);

// An invertible element of the intertwiner space, when one exists. Tries the
// basis elements first, then deterministic random combinations (an invertible
// element exists iff a generic combination is invertible).
std::optional<Eigen::MatrixXcd> invertible_intertwiner(const std::vector<Eigen::MatrixXcd>& a,
                                                       const std::vector<Eigen::MatrixXcd>& b,
                                                       double tol = kDefaultTol);

// dim {X : X g = g X for all g}.
int commutant_dimension(const std::vector<Eigen::MatrixXcd>& gens, double tol = kDefaultTol);

// dim {X : g^T X g = X for all g} (bilinear = true), or
// dim {X : g^H X g = X for all g} (bilinear = false, sesquilinear case).
int invariant_form_dimension(const std::vector<Eigen::MatrixXcd>& gens, bool bilinear,
                             double tol = kDefaultTol);

}  // namespace coxir::linalg
