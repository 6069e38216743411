#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxir/types.hpp"

namespace coxir {

// Bond order m_st of a Coxeter system: an integer or infinity. Infinity is a
// distinguished state, never a sentinel value. Orders below 2 can be stored
// (so that CoxeterSystem::validate can report them) but are never valid.
class BondOrder {
 public:
  static BondOrder finite(int m) {
    BondOrder b;
    b.m_ = m;
    return b;
  }
  static BondOrder infinite() { return BondOrder{}; }

  bool is_finite() const { return m_.has_value(); }
  bool is_infinite() const { return !m_.has_value(); }

  // Finite value; throws std::logic_error on the infinite variant.
  int value() const;

  friend bool operator==(const BondOrder&, const BondOrder&) = default;

 private:
  BondOrder() = default;
  std::optional<int> m_;
};

struct BondEntry {
  std::string a;
  std::string b;
  BondOrder order = BondOrder::finite(2);
};

// A finite-rank Coxeter system (S, m): an ordered list of generator labels and
// a symmetric bond table on unordered pairs (m_ss = 1 implicitly). The
// construction order of the generators is the canonical index 0..n-1 used for
// matrices, graphs and all deterministic tie-breaking downstream.
//
// Instances are immutable after construction and safe to share across threads.
// Construction accepts arbitrary entries; validate() lists every invariant
// violation (duplicate labels, orders < 2, missing pairs), and the algebraic
// operations require a valid system.
class CoxeterSystem {
 public:
  CoxeterSystem() : CoxeterSystem({}, {}) {}  // the empty (rank 0) system
  CoxeterSystem(std::vector<std::string> generators, std::vector<BondEntry> bonds);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& generators() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(const std::string& label) const;

  // Bond order of the unordered pair {i, j}, i != j. Throws std::logic_error
  // if the pair has no entry (invalid system).
  BondOrder bond(int i, int j) const;

  // Every invariant violation, in a human-readable form; empty means valid.
  std::vector<std::string> validate() const;
  bool valid() const { return validate().empty(); }

  friend bool operator==(const CoxeterSystem& x, const CoxeterSystem& y);

 private:
  std::vector<std::string> labels_;
  std::vector<BondEntry> entries_;
  // n*n lookup table built from entries_; empty cells are missing pairs.
  std::vector<std::optional<BondOrder>> table_;
};

// Alternating word in a dihedral generator pair: r_k = rtr... (k factors,
// leading with r) or t_k = trt... Length 0 is the identity.
struct DihedralWord {
  std::string r;
  std::string t;
  int length = 0;
  bool leads_with_r = true;  // irrelevant at length 0

  std::vector<std::string> letters() const;
  friend bool operator==(const DihedralWord&, const DihedralWord&) = default;
};

// The 2m elements of D_m = <r,t | r^2 = t^2 = (rt)^m = e> as alternating
// words: e, r_1..r_m and t_1..t_{m-1}. The longest element w_rt = r_m = t_m
// appears once, as the r-leading word. Rejects the infinite bond order.
std::vector<DihedralWord> enumerate_dihedral(BondOrder m, const std::string& r,
                                             const std::string& t);

}  // namespace coxir
