#include "coxir/dihedral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coxir {

namespace {
constexpr double kPi = std::numbers::pi;
}

DihedralRepSpec DihedralRepSpec::rho(int m, int k) {
  if (m < 2) throw std::invalid_argument("DihedralRepSpec::rho: m < 2");
  if (k < 1 || 2 * k > m) throw std::invalid_argument("DihedralRepSpec::rho: k outside [1, m/2]");
  DihedralRepSpec s{Kind::RhoK};
  s.m_ = m;
  s.k_ = k;
  return s;
}

DihedralRepSpec DihedralRepSpec::varrho_z(Complex z) {
  DihedralRepSpec s{Kind::VarrhoZ};
  s.z_ = z;
  return s;
}

DihedralRepSpec DihedralRepSpec::varrho_directed(Absorbing absorbing) {
  DihedralRepSpec s{Kind::VarrhoRT};
  s.absorbing_ = absorbing;
  return s;
}

bool DihedralRepSpec::two_dimensional() const {
  switch (kind_) {
    case Kind::RhoK:
    case Kind::VarrhoZ:
    case Kind::VarrhoRT:
    case Kind::ExoticSignTrivial:
      return true;
    default:
      return false;
  }
}

int DihedralRepSpec::m() const {
  if (kind_ != Kind::RhoK) throw std::logic_error("DihedralRepSpec::m: not a RhoK entry");
  return m_;
}

int DihedralRepSpec::k() const {
  if (kind_ != Kind::RhoK) throw std::logic_error("DihedralRepSpec::k: not a RhoK entry");
  return k_;
}

Complex DihedralRepSpec::z() const {
  if (kind_ != Kind::VarrhoZ) throw std::logic_error("DihedralRepSpec::z: not a VarrhoZ entry");
  return z_;
}

Absorbing DihedralRepSpec::absorbing() const {
  if (kind_ != Kind::VarrhoRT)
    throw std::logic_error("DihedralRepSpec::absorbing: not a VarrhoRT entry");
  return absorbing_;
}

double cos_k_pi_over_m(int k, int m) {
  if (2 * k == m) return 0.0;
  return std::cos(k * kPi / m);
}

Complex u_of(Complex z) {
  if (z.imag() == 0.0 && z.real() >= 0.0) return Complex(std::sqrt(z.real()), 0.0);
  return std::sqrt(z);  // principal branch
}

namespace {

// Reflection pair with coupling coefficients x, y:
//   r . beta_t = beta_t + x beta_r,   t . beta_r = beta_r + y beta_t.
GeneratorPair reflection_pair(Complex x, Complex y) {
  Eigen::MatrixXcd r(2, 2), t(2, 2);
  r << Complex(-1, 0), x, Complex(0, 0), Complex(1, 0);
  t << Complex(1, 0), Complex(0, 0), y, Complex(-1, 0);
  return GeneratorPair{std::move(r), std::move(t)};
}

GeneratorPair scalar_pair(double r, double t) {
  Eigen::MatrixXcd mr(1, 1), mt(1, 1);
  mr << Complex(r, 0);
  mt << Complex(t, 0);
  return GeneratorPair{std::move(mr), std::move(mt)};
}

}  // namespace

GeneratorPair matrices(const DihedralRepSpec& spec) {
  using Kind = DihedralRepSpec::Kind;
  switch (spec.kind()) {
    case Kind::Trivial:
      return scalar_pair(1, 1);
    case Kind::Sign:
      return scalar_pair(-1, -1);
    case Kind::EpsR:
      return scalar_pair(-1, 1);
    case Kind::EpsT:
      return scalar_pair(1, -1);
    case Kind::RhoK: {
      const Complex c(2.0 * cos_k_pi_over_m(spec.k(), spec.m()), 0.0);
      return reflection_pair(c, c);
    }
    case Kind::VarrhoZ: {
      const Complex u = u_of(spec.z());
      return reflection_pair(u, u);
    }
    case Kind::VarrhoRT:
      return spec.absorbing() == Absorbing::R ? reflection_pair(Complex(1, 0), Complex(0, 0))
                                              : reflection_pair(Complex(0, 0), Complex(1, 0));
    case Kind::ExoticSignTrivial: {
      Eigen::MatrixXcd r(2, 2), t(2, 2);
      r << Complex(-1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0);
      t << Complex(-1, 0), Complex(1, 0), Complex(0, 0), Complex(1, 0);
      return GeneratorPair{std::move(r), std::move(t)};
    }
  }
  throw std::logic_error("matrices: unreachable");
}

Eigen::Matrix2cd invariant_bilinear(const DihedralRepSpec& spec) {
  using Kind = DihedralRepSpec::Kind;
  Eigen::Matrix2cd b = Eigen::Matrix2cd::Zero();
  switch (spec.kind()) {
    case Kind::RhoK: {
      if (2 * spec.k() == spec.m())
        throw std::invalid_argument("invariant_bilinear: k = m/2 has no canonical form");
      const double c = cos_k_pi_over_m(spec.k(), spec.m());
      b << Complex(1, 0), Complex(-c, 0), Complex(-c, 0), Complex(1, 0);
      return b;
    }
    case Kind::VarrhoZ: {
      const Complex u = u_of(spec.z());
      b << Complex(1, 0), -u / 2.0, -u / 2.0, Complex(1, 0);
      return b;
    }
    case Kind::VarrhoRT:
      if (spec.absorbing() == Absorbing::T) {
        b(0, 0) = Complex(1, 0);  // varrho_t^r
      } else {
        b(1, 1) = Complex(1, 0);  // varrho_r^t
      }
      return b;
    case Kind::ExoticSignTrivial:
      b(1, 1) = Complex(1, 0);
      return b;
    default:
      throw std::invalid_argument("invariant_bilinear: spec is not 2-dimensional");
  }
}

DihedralRepSpec identify_bond(Complex c_rt, Complex c_tr, BondOrder m, double tol) {
  const bool rt_zero = std::abs(c_rt) <= tol;
  const bool tr_zero = std::abs(c_tr) <= tol;

  if (m.is_infinite()) {
    if (rt_zero && tr_zero) return DihedralRepSpec::varrho_z(Complex(0, 0));
    if (tr_zero) return DihedralRepSpec::varrho_directed(Absorbing::R);
    if (rt_zero) return DihedralRepSpec::varrho_directed(Absorbing::T);
    return DihedralRepSpec::varrho_z(c_rt * c_tr);
  }

  const int mv = m.value();
  if (rt_zero != tr_zero) throw std::domain_error("not a valid dihedral restriction");
  const Complex product = c_rt * c_tr;
  for (int k = 1; 2 * k <= mv; ++k) {
    const double cos_k = cos_k_pi_over_m(k, mv);
    if (std::abs(product - Complex(4.0 * cos_k * cos_k, 0.0)) < tol)
      return DihedralRepSpec::rho(mv, k);
  }
  throw std::domain_error("not a valid dihedral restriction");
}

}  // namespace coxir
