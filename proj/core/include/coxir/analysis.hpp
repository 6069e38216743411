#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "coxir/ir.hpp"
#include "coxir/linalg.hpp"
#include "coxir/types.hpp"

namespace coxir {

// The reducibility matrix of a datum: unit diagonal, and at (i, j)
//   finite bond:    -(a_i^j / a_j^i) cos(k_ij pi / m_ij)
//   varrho_z bond:  -(u(z) / 2) (a_i^j / a_j^i)
//   directed bond:  -(a_i^j / a_j^i) / 2 if absorbing == i, else 0
// Its null space, read in the alpha coordinates, is the subspace on which the
// whole group acts trivially. Not symmetric in general.
struct MatrixA {
  Eigen::MatrixXcd entries;
};

MatrixA matrix_a(const IRDatum& datum);
Complex det_a(const IRDatum& datum, double tol = kDefaultTol);
int corank_a(const IRDatum& datum, double tol = kDefaultTol);

// Orthonormal basis (columns) of {v : g_s v = v for all s}.
Eigen::MatrixXcd fixed_subspace(const Representation& rep, double tol = kDefaultTol);

// Quotient of a representation by a pointwise-fixed subspace (columns of
// `kernel`). Coordinates on the quotient come from a complement spanned by
// standard basis vectors chosen greedily; `projection * lift = I`.
struct QuotientResult {
  Representation rep;
  Eigen::MatrixXcd projection;  // q x n
  Eigen::MatrixXcd lift;        // n x q
};

QuotientResult quotient(const Representation& rep, const Eigen::MatrixXcd& kernel,
                        double tol = kDefaultTol);

enum class FormKind { Bilinear, Sesquilinear };

struct InvariantForm {
  FormKind kind = FormKind::Bilinear;
  Eigen::MatrixXcd gram;  // B(alpha_i, alpha_j); sesquilinear forms are
                          // conjugate-linear in the first argument
};

struct FormResult {
  std::optional<InvariantForm> form;
  std::string obstruction;  // set when no form is returned
};

// Invariant bilinear form of the representation of a datum, built per tilde
// component by path propagation from the component's base vertex: it exists
// iff every chi value is +-1 (within tol) and no component mixes a directed
// infinite bond with anything else (a directed bond that is a whole component
// by itself carries its degenerate catalog block).
FormResult bilinear_form(const IRDatum& datum, double tol = kDefaultTol);

// Sesquilinear (Hermitian) counterpart: chi values must lie on the unit
// circle, and varrho_z bonds must have real u(z) for a Hermitian block to
// exist.
FormResult sesquilinear_form(const IRDatum& datum, double tol = kDefaultTol);

// Residual max |B(g u, g v) - B(u, v)| over generators and basis pairs.
double form_invariance_residual(const Representation& rep, const InvariantForm& form);

// Dual-side data for a finite-bond datum. gamma_s, the -1-eigenvector of s on
// the dual space, has coordinates given by row s of A, so the transition
// matrix from the dual basis to (gamma_s)_s is A^T (the same formula, not
// recomputed). When A is invertible the dual is again an IR-representation
// with the same bond parameters and the inverse character; otherwise the
// gamma span is the semisimple quotient of that datum's representation, of
// dimension rank(A), and the group acts trivially on the rest of the dual.
struct DualReport {
  Eigen::MatrixXcd transition;  // == matrix_a(datum).entries.transpose()
  bool invertible = false;
  int quotient_dim = 0;         // rank(A) = dim of the gamma span
  Classification dual_class;    // same bonds, chi^{-1}
};

DualReport dual(const IRDatum& datum, double tol = kDefaultTol);

// Directions on the tilde graph: a directed bond delta_rt = varrho_r^t
// orients its edge t -> r only; every other tilde edge gets both directions.
// An arrow r -> t means alpha_t lies in the sub-representation generated by
// alpha_r. The preorder is s <= v iff v reaches s along arrows; its
// equivalence classes are the strongly connected components, and for a class
// I the span of {alpha_s : s <= I} is a sub-representation.
struct DirectionPreorder {
  std::vector<std::pair<int, int>> arrows;  // r -> t
  std::vector<std::vector<char>> reaches;   // reaches[a][b]: directed path a ->* b
  std::vector<int> class_of;                // vertex -> class id
  std::vector<std::vector<int>> classes;

  bool leq(int s, int v) const;                  // s <= v
  std::vector<int> down_closure(int class_id) const;
};

DirectionPreorder direction_preorder(const IRDatum& datum);

int commutant_dimension(const Representation& rep, double tol = kDefaultTol);
int hom_dimension(const Representation& from, const Representation& to, double tol = kDefaultTol);
std::vector<Eigen::MatrixXcd> hom_basis(const Representation& from, const Representation& to,
                                        double tol = kDefaultTol);
std::optional<Eigen::MatrixXcd> invertible_intertwiner(const Representation& from,
                                                       const Representation& to,
                                                       double tol = kDefaultTol);

// dim of the space of invariant bilinear (or sesquilinear) Grams of rep.
int invariant_form_space_dimension(const Representation& rep, FormKind kind,
                                   double tol = kDefaultTol);

}  // namespace coxir
