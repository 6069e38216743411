#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "coxir/coxeter.hpp"
#include "coxir/dihedral.hpp"
#include "coxir/graph.hpp"
#include "coxir/types.hpp"

namespace coxir {

// Bond parameter delta_rt attached to one unordered generator pair:
//   FiniteK    rho_k of D_m (finite bonds; k in [1, m/2])
//   FreeZ      varrho_z of D_infinity (any complex z; z = 0 is varrho_0)
//   Directed   varrho with a one-sided coupling; `absorbing` is the index of
//              the generator whose reflection line is the sub-representation
struct BondParameter {
  enum class Kind { FiniteK, FreeZ, Directed };

  Kind kind = Kind::FiniteK;
  int k = 1;
  Complex z{4.0, 0.0};
  int absorbing = -1;

  static BondParameter finite_k(int k_value) {
    return BondParameter{Kind::FiniteK, k_value, Complex(0, 0), -1};
  }
  static BondParameter free_z(Complex z_value) {
    return BondParameter{Kind::FreeZ, 0, z_value, -1};
  }
  static BondParameter directed(int absorbing_index) {
    return BondParameter{Kind::Directed, 0, Complex(0, 0), absorbing_index};
  }

  bool same_as(const BondParameter& other, double tol = kDefaultTol) const;
};

// Construction input for an IR-representation over a valid Coxeter system:
// one bond parameter per unordered pair and a nonzero scalar a_r^t per
// ordered pair. Defaults give the geometric representation (k = 1 on finite
// bonds, varrho_4 on infinite ones, all scalars 1). Setters validate against
// the system, so a constructed datum is always usable. Immutable in spirit:
// share freely once populated; parameter sweeps should copy.
class IRDatum {
 public:
  explicit IRDatum(CoxeterSystem system);

  const CoxeterSystem& system() const { return system_; }
  int rank() const { return system_.rank(); }

  const BondParameter& bond_param(int i, int j) const;
  Complex scalar(int i, int j) const;  // a_i^j

  void set_bond_param(int i, int j, const BondParameter& p);
  void set_scalar(int i, int j, Complex a);

  // alpha_i-coefficient of s_i . alpha_j (i != j): the off-diagonal entry
  // (i, j) of the generator matrix of s_i.
  //   finite bond:        2 (a_i^j / a_j^i) cos(k pi / m)
  //   varrho_z bond:      u(z) (a_i^j / a_j^i)
  //   directed bond:      (a_i^j / a_j^i) if absorbing == i, else 0
  Complex coefficient(int i, int j) const;

 private:
  int pair_slot(int i, int j) const;

  CoxeterSystem system_;
  std::vector<BondParameter> bonds_;  // upper-triangle order
  std::vector<Complex> scalars_;      // n*n, a_i^j at i*n+j
};

// Derived Coxeter data: per pair the reduced order m~ (the order of rt in the
// image of the representation), the graph with an edge wherever m~ >= 3, and
// its deterministic circuit basis. m~ rules:
//   finite m, rho_k                      -> m / gcd(m, k)
//   infinite, varrho_z, z = 4cos^2(k pi/m) with gcd(k,m)=1, k < m/2 -> m
//   infinite, varrho_0                   -> 2
//   otherwise                            -> infinity
// The arithmetic matching in the second rule is decided with tolerance 1e-9
// over m <= 1000 (smallest m wins).
class TildeSystem {
 public:
  TildeSystem(const CoxeterSystem& system, const std::vector<BondParameter>& bonds);

  BondOrder tilde_m(int i, int j) const;
  const SimpleGraph& graph() const { return graph_; }
  const CircuitBasis& basis() const { return basis_; }
  int component_count() const { return basis_.component_count; }

 private:
  int n_;
  std::vector<BondOrder> orders_;  // upper-triangle order
  SimpleGraph graph_;
  CircuitBasis basis_;
};

// A representation with designated reflection vectors. For IR builds the
// alpha vectors are the standard basis; quotients carry explicit images.
struct Representation {
  std::vector<std::string> labels;
  std::vector<Eigen::MatrixXcd> gens;
  std::vector<Eigen::VectorXcd> alpha;

  Eigen::Index dim() const { return gens.empty() ? 0 : gens.front().rows(); }
};

// Classification invariant of an IR-representation: the bond parameters
// (scalars stripped) and the character of H_1 of the tilde graph, one value
// per chord in the canonical chord order.
struct Classification {
  CoxeterSystem system;
  std::vector<BondParameter> bonds;  // upper-triangle order
  std::vector<Complex> chi;

  bool same_bonds(const Classification& other, double tol = kDefaultTol) const;
};

TildeSystem tilde_system(const IRDatum& datum);

// The IR-representation of the datum: n x n generator matrices, where the
// matrix of s_i is the identity except in row i (diagonal -1, off-diagonal
// entries the coupling coefficients).
Representation build(const IRDatum& datum);

// The classification invariant: for each basis circuit of the tilde graph,
// the product of a_t^r / a_r^t over its consecutive oriented edges (r, t).
Classification character_of(const IRDatum& datum);

// Canonical datum realizing a classification: each chord (u, v) carries its
// chi value on the scalar a_v^u, every other scalar is 1. Exact round trip:
// character_of(datum_from_classification(c)) == c.
IRDatum datum_from_classification(const Classification& c);

struct IsomorphismResult {
  bool isomorphic = false;
  std::string reason;            // set when not isomorphic
  Eigen::MatrixXcd intertwiner;  // diagonal in the alpha bases, when isomorphic
  double residual = 0.0;         // max over s of |phi g1_s - g2_s phi|
};

// Decides isomorphism of the IR-representations of two data over the same
// system: bond parameters must agree and the characters must agree on every
// basis circuit; the intertwiner is then built by propagating scalar ratios
// along the spanning forest from each tilde component's base vertex.
IsomorphismResult isomorphism(const IRDatum& a, const IRDatum& b, double tol = kDefaultTol);

// Reads a datum back off a representation whose alpha vectors are the
// standard basis. Checks the independence condition (each generator matrix an
// involution fixing a hyperplane and negating its basis vector) and throws
// std::domain_error otherwise; bond recovery goes through identify_bond.
IRDatum extract_datum(const Representation& rep, const CoxeterSystem& system,
                      double tol = kDefaultTol);

struct RelationReport {
  double involution_residual = 0.0;  // max |g_s^2 - I|
  double braid_residual = 0.0;       // max |(g_r g_t)^m - I| over finite bonds
  double reflection_residual = 0.0;  // alpha_s negation + hyperplane structure
  double max_residual() const;
};

// Residuals of the defining relations and of the independence condition for a
// representation of the given system, in the alpha coordinates.
RelationReport verify_relations(const Representation& rep, const CoxeterSystem& system);

}  // namespace coxir
