#pragma once

#include <coxir/affine.hpp>
#include <coxir/analysis.hpp>
#include <coxir/cell.hpp>
#include <coxir/coxeter.hpp>
#include <coxir/dihedral.hpp>
#include <coxir/graph.hpp>
#include <coxir/ir.hpp>
#include <coxir/linalg.hpp>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace coxir::test {

inline CoxeterSystem rank1() { return CoxeterSystem({"s"}, {}); }

inline CoxeterSystem a2() {
  return CoxeterSystem({"s", "t"}, {{"s", "t", BondOrder::finite(3)}});
}

inline CoxeterSystem dihedral_system(BondOrder m) {
  return CoxeterSystem({"r", "t"}, {{"r", "t", m}});
}

// Chain s0 - s1 - ... with the given consecutive bond orders; all other
// pairs commute.
inline CoxeterSystem path_system(const std::vector<int>& orders) {
  const int n = static_cast<int>(orders.size()) + 1;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  std::vector<BondEntry> bonds;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      bonds.push_back(BondEntry{labels[static_cast<std::size_t>(i)],
                                labels[static_cast<std::size_t>(j)],
                                BondOrder::finite(j == i + 1 ? orders[static_cast<std::size_t>(i)] : 2)});
  return CoxeterSystem(labels, bonds);
}

// Two commuting affine triangles on s1..s6 (all inner bonds 3).
inline CoxeterSystem double_triangle() {
  std::vector<std::string> labels{"s1", "s2", "s3", "s4", "s5", "s6"};
  std::vector<BondEntry> bonds;
  auto in_first = [](int i) { return i < 3; };
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      bonds.push_back(BondEntry{labels[static_cast<std::size_t>(i)],
                                labels[static_cast<std::size_t>(j)],
                                BondOrder::finite(in_first(i) == in_first(j) ? 3 : 2)});
  return CoxeterSystem(labels, bonds);
}

inline Complex unit_scalar(std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double theta = angle(rng);
  return Complex(std::cos(theta), std::sin(theta));
}

struct RandomDatumOptions {
  int min_rank = 1;
  int max_rank = 6;
  int max_m = 8;
  double edge_probability = 0.6;  // chance a pair gets m >= 3
  bool unit_scalars = true;
};

// Random finite-bond system with a random valid k per pair and random
// scalars; every k in [1, m/2] is allowed (including the disconnecting m/2).
inline IRDatum random_finite_datum(std::mt19937& rng, const RandomDatumOptions& opt = {}) {
  std::uniform_int_distribution<int> rank_dist(opt.min_rank, opt.max_rank);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int n = rank_dist(rng);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  std::vector<BondEntry> bonds;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = 2;
      if (coin(rng) < opt.edge_probability) {
        std::uniform_int_distribution<int> m_dist(3, opt.max_m);
        m = m_dist(rng);
      }
      bonds.push_back(BondEntry{labels[static_cast<std::size_t>(i)],
                                labels[static_cast<std::size_t>(j)], BondOrder::finite(m)});
    }
  IRDatum datum{CoxeterSystem(labels, bonds)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int m = datum.system().bond(i, j).value();
      std::uniform_int_distribution<int> k_dist(1, m / 2);
      datum.set_bond_param(i, j, BondParameter::finite_k(k_dist(rng)));
      if (opt.unit_scalars) {
        datum.set_scalar(i, j, unit_scalar(rng));
        datum.set_scalar(j, i, unit_scalar(rng));
      }
    }
  return datum;
}

// Random system whose tilde graph is connected with at least one circuit:
// a random spanning tree plus extra edges, bond orders >= 3 with k chosen so
// that no tilde edge collapses.
inline IRDatum random_cyclic_datum(std::mt19937& rng, int min_rank = 3, int max_rank = 6) {
  std::uniform_int_distribution<int> rank_dist(min_rank, max_rank);
  const int n = rank_dist(rng);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));

  std::vector<std::vector<bool>> edge(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent_dist(0, v - 1);
    const int p = parent_dist(rng);
    edge[static_cast<std::size_t>(v)][static_cast<std::size_t>(p)] = true;
    edge[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)] = true;
  }
  std::uniform_int_distribution<int> extra_dist(1, 2);
  int extras = extra_dist(rng);
  std::uniform_int_distribution<int> v_dist(0, n - 1);
  for (int guard = 0; extras > 0 && guard < 64; ++guard) {
    const int a = v_dist(rng);
    const int b = v_dist(rng);
    if (a == b || edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
    edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    edge[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    --extras;
  }

  std::vector<BondEntry> bonds;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = 2;
      if (edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        std::uniform_int_distribution<int> m_dist(3, 8);
        m = m_dist(rng);
      }
      bonds.push_back(BondEntry{labels[static_cast<std::size_t>(i)],
                                labels[static_cast<std::size_t>(j)], BondOrder::finite(m)});
    }
  IRDatum datum{CoxeterSystem(labels, bonds)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int m = datum.system().bond(i, j).value();
      if (m == 2) continue;
      std::vector<int> valid;  // k with tilde order m/gcd >= 3
      for (int k = 1; 2 * k <= m; ++k)
        if (m / std::gcd(m, k) >= 3) valid.push_back(k);
      std::uniform_int_distribution<std::size_t> pick(0, valid.size() - 1);
      datum.set_bond_param(i, j, BondParameter::finite_k(valid[pick(rng)]));
      datum.set_scalar(i, j, unit_scalar(rng));
      datum.set_scalar(j, i, unit_scalar(rng));
    }
  return datum;
}

// Random datum mixing finite bonds with the infinite-bond parameter kinds
// (generic varrho_z, arithmetic varrho_z hitting 4cos^2(k pi/m), varrho_0,
// and directed bonds).
inline IRDatum random_mixed_datum(std::mt19937& rng, int min_rank = 2, int max_rank = 5) {
  std::uniform_int_distribution<int> rank_dist(min_rank, max_rank);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int n = rank_dist(rng);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  std::vector<BondEntry> bonds;
  std::vector<double> kinds;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double kind = coin(rng);
      kinds.push_back(kind);
      BondOrder order = BondOrder::finite(2);
      if (kind < 0.3) {
        std::uniform_int_distribution<int> m_dist(3, 6);
        order = BondOrder::finite(m_dist(rng));
      } else if (kind < 0.6) {
        order = BondOrder::infinite();
      }
      bonds.push_back(BondEntry{labels[static_cast<std::size_t>(i)],
                                labels[static_cast<std::size_t>(j)], order});
    }
  IRDatum datum{CoxeterSystem(labels, bonds)};
  std::size_t slot = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double kind = kinds[slot++];
      const BondOrder m = datum.system().bond(i, j);
      if (m.is_finite()) {
        if (m.value() > 2) {
          std::uniform_int_distribution<int> k_dist(1, m.value() / 2);
          datum.set_bond_param(i, j, BondParameter::finite_k(k_dist(rng)));
        }
      } else if (kind < 0.4) {
        datum.set_bond_param(i, j, BondParameter::directed(coin(rng) < 0.5 ? i : j));
      } else if (kind < 0.45) {
        datum.set_bond_param(i, j, BondParameter::free_z(Complex(0, 0)));  // varrho_0
      } else if (kind < 0.5) {
        datum.set_bond_param(i, j, BondParameter::free_z(Complex(1, 0)));  // 4cos^2(pi/3)
      } else {
        const Complex z = 4.0 * unit_scalar(rng) + Complex(0.3, 0.0);
        datum.set_bond_param(i, j, BondParameter::free_z(std::abs(z) < 0.1 ? Complex(2, 2) : z));
      }
      datum.set_scalar(i, j, unit_scalar(rng));
      datum.set_scalar(j, i, unit_scalar(rng));
    }
  return datum;
}

// Same character, different scalars: multiply a_i^j by a vertex potential
// g_i (a coboundary, so every circuit product is unchanged).
inline IRDatum gauge_transform(const IRDatum& datum, std::mt19937& rng) {
  IRDatum out = datum;
  const int n = datum.rank();
  std::vector<Complex> potential;
  for (int v = 0; v < n; ++v) potential.push_back(unit_scalar(rng));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.set_scalar(i, j, datum.scalar(i, j) * potential[static_cast<std::size_t>(i)]);
  return out;
}

inline double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return linalg::max_abs(a - b);
}

inline Eigen::MatrixXcd word_matrix(const DihedralWord& word, const Eigen::MatrixXcd& mat_r,
                                    const Eigen::MatrixXcd& mat_t) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(mat_r.rows(), mat_r.cols());
  for (const std::string& letter : word.letters()) out = out * (letter == word.r ? mat_r : mat_t);
  return out;
}

}  // namespace coxir::test
