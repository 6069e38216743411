#pragma once

#include <Eigen/Dense>

#include "coxir/coxeter.hpp"
#include "coxir/types.hpp"

namespace coxir {

// Which generator of the pair (r, t) absorbs the other's reflection vector:
// varrho_r^t (absorbing = R) has the sub-representation epsilon_r with
// quotient epsilon_t; varrho_t^r (absorbing = T) is the transpose situation.
enum class Absorbing { R, T };

// Catalog entry for the representations of D_m and D_infinity of dimension 1
// or 2, on the ordered basis (beta_r, beta_t) in the 2-dimensional case.
//
//   Trivial, Sign, EpsR, EpsT    one-dimensional
//   RhoK{m, k}                   rho_k of D_m, 1 <= k <= m/2
//   VarrhoZ{z}                   varrho_z = varrho_{u,u} of D_infinity, u = u(z)
//   VarrhoRT{absorbing}          varrho_r^t or varrho_t^r of D_infinity
//   ExoticSignTrivial            the indecomposable with sub-rep epsilon and
//                                trivial quotient; catalogued only, never used
//                                by the IR construction
class DihedralRepSpec {
 public:
  enum class Kind { Trivial, Sign, EpsR, EpsT, RhoK, VarrhoZ, VarrhoRT, ExoticSignTrivial };

  static DihedralRepSpec trivial() { return DihedralRepSpec{Kind::Trivial}; }
  static DihedralRepSpec sign() { return DihedralRepSpec{Kind::Sign}; }
  static DihedralRepSpec eps_r() { return DihedralRepSpec{Kind::EpsR}; }
  static DihedralRepSpec eps_t() { return DihedralRepSpec{Kind::EpsT}; }
  static DihedralRepSpec rho(int m, int k);  // validates 1 <= k <= m/2, m >= 2
  static DihedralRepSpec varrho_z(Complex z);
  static DihedralRepSpec varrho_directed(Absorbing absorbing);
  static DihedralRepSpec exotic_sign_trivial() { return DihedralRepSpec{Kind::ExoticSignTrivial}; }

  Kind kind() const { return kind_; }
  bool two_dimensional() const;
  int m() const;                // RhoK
  int k() const;                // RhoK
  Complex z() const;            // VarrhoZ
  Absorbing absorbing() const;  // VarrhoRT

 private:
  explicit DihedralRepSpec(Kind kind) : kind_(kind) {}
  Kind kind_;
  int m_ = 0;
  int k_ = 0;
  Complex z_{0.0, 0.0};
  Absorbing absorbing_ = Absorbing::R;
};

// The fixed square root u(z): principal branch (argument halved into
// (-pi/2, pi/2]), positive on the positive reals. Normalizes
// varrho_z = varrho_{u,u}.
Complex u_of(Complex z);

// cos(k pi / m), exactly zero at k = m/2 (that value is structural: it
// decides which tilde edges vanish).
double cos_k_pi_over_m(int k, int m);

// Generator matrices of a catalog entry; both 1x1 or both 2x2, acting on
// (beta_r, beta_t) as columns. mat_r^2 = mat_t^2 = identity.
struct GeneratorPair {
  Eigen::MatrixXcd r;
  Eigen::MatrixXcd t;
  Eigen::Index dim() const { return r.rows(); }
};

GeneratorPair matrices(const DihedralRepSpec& spec);

// Invariant bilinear form of a 2-dimensional catalog entry, as the Gram
// matrix on (beta_r, beta_t). Unique up to a scalar for RhoK with k < m/2 and
// for VarrhoZ with z != 0; RhoK with k = m/2 is rejected. For VarrhoZ{0} the
// form is not unique (any diagonal Gram is invariant); the value returned is
// the u(0) = 0 limit of the generic one, i.e. the identity.
Eigen::Matrix2cd invariant_bilinear(const DihedralRepSpec& spec);

// Recovers the catalog entry from the two coupling coefficients of a pair of
// reflections satisfying the independence condition on <alpha_r, alpha_t>:
// c_rt is the alpha_r-coefficient of r . alpha_t, c_tr the transposed one.
// Finite m: solves c_rt c_tr = 4 cos^2(k pi / m) for an integer k in [1, m/2]
// and throws std::domain_error("not a valid dihedral restriction") when no k
// matches within tol. Infinite m: zero pattern decides between varrho_0,
// varrho_r^t, varrho_t^r and varrho_{c_rt c_tr}.
DihedralRepSpec identify_bond(Complex c_rt, Complex c_tr, BondOrder m, double tol = 1e-6);

}  // namespace coxir
