#include "coxir/coxeter.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace coxir {

int BondOrder::value() const {
  if (!m_) throw std::logic_error("BondOrder::value: infinite bond order");
  return *m_;
}

CoxeterSystem::CoxeterSystem(std::vector<std::string> generators,
                             std::vector<BondEntry> bonds)
    : labels_(std::move(generators)), entries_(std::move(bonds)) {
  const std::size_t n = labels_.size();
  table_.assign(n * n, std::nullopt);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(labels_[i], static_cast<int>(i));
  for (const BondEntry& e : entries_) {
    auto ia = index.find(e.a);
    auto ib = index.find(e.b);
    if (ia == index.end() || ib == index.end() || ia->second == ib->second) continue;
    table_[static_cast<std::size_t>(ia->second) * n + static_cast<std::size_t>(ib->second)] = e.order;
    table_[static_cast<std::size_t>(ib->second) * n + static_cast<std::size_t>(ia->second)] = e.order;
  }
}

std::optional<int> CoxeterSystem::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

BondOrder CoxeterSystem::bond(int i, int j) const {
  if (i == j) throw std::logic_error("CoxeterSystem::bond: diagonal pair");
  const auto& cell = table_.at(static_cast<std::size_t>(i) * labels_.size() + static_cast<std::size_t>(j));
  if (!cell) throw std::logic_error("CoxeterSystem::bond: missing pair entry {" + label(i) +
                                    "," + label(j) + "}");
  return *cell;
}

std::vector<std::string> CoxeterSystem::validate() const {
  std::vector<std::string> errors;
  const std::size_t n = labels_.size();

  std::set<std::string> seen;
  for (const std::string& l : labels_) {
    if (!seen.insert(l).second) errors.push_back("duplicate generator label '" + l + "'");
  }

  for (const BondEntry& e : entries_) {
    if (!index_of(e.a)) errors.push_back("bond entry names unknown generator '" + e.a + "'");
    if (!index_of(e.b)) errors.push_back("bond entry names unknown generator '" + e.b + "'");
    if (e.a == e.b) errors.push_back("bond entry on the diagonal pair {" + e.a + "," + e.a + "}");
    if (e.order.is_finite() && e.order.value() < 2)
      errors.push_back("bond order " + std::to_string(e.order.value()) + " < 2 for pair {" +
                       e.a + "," + e.b + "}");
  }

  // Duplicate-label systems have an ambiguous table; pair totality is only
  // meaningful once labels are distinct.
  if (seen.size() == n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!table_[i * n + j])
          errors.push_back("missing bond entry for pair {" + labels_[i] + "," + labels_[j] + "}");
  }
  return errors;
}

bool operator==(const CoxeterSystem& x, const CoxeterSystem& y) {
  if (x.labels_ != y.labels_) return false;
  const int n = x.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x.table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] !=
          y.table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)])
        return false;
  return true;
}

std::vector<std::string> DihedralWord::letters() const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const bool odd_position = (i % 2 == 0);
    out.push_back(odd_position == leads_with_r ? r : t);
  }
  return out;
}

std::vector<DihedralWord> enumerate_dihedral(BondOrder m, const std::string& r,
                                             const std::string& t) {
  if (m.is_infinite()) throw std::invalid_argument("enumerate_dihedral: infinite bond order");
  const int mv = m.value();
  if (mv < 2) throw std::invalid_argument("enumerate_dihedral: bond order < 2");

  std::vector<DihedralWord> words;
  words.reserve(static_cast<std::size_t>(2 * mv));
  words.push_back(DihedralWord{r, t, 0, true});  // identity
  for (int k = 1; k <= mv; ++k) words.push_back(DihedralWord{r, t, k, true});
  for (int k = 1; k < mv; ++k) words.push_back(DihedralWord{r, t, k, false});
  return words;
}

}  // namespace coxir
