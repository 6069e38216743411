#include "coxir/affine.hpp"

#include <cmath>
#include <stdexcept>

namespace coxir {

AffineAnSpec::AffineAnSpec(int n_value, Complex x_value) : n(n_value), x(x_value) {
  if (n < 2) throw std::invalid_argument("AffineAnSpec: n >= 2 required (the cycle needs 3 vertices)");
  if (std::abs(x) == 0.0) throw std::invalid_argument("AffineAnSpec: x must be nonzero");
}

IRDatum affine_datum(const AffineAnSpec& spec) {
  const int count = spec.n + 1;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) labels.push_back("s" + std::to_string(i));

  std::vector<BondEntry> bonds;
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == count - 1);
      bonds.push_back(BondEntry{labels[static_cast<std::size_t>(i)],
                                labels[static_cast<std::size_t>(j)],
                                BondOrder::finite(adjacent ? 3 : 2)});
    }

  IRDatum datum{CoxeterSystem(labels, bonds)};  // k = 1 everywhere by default
  datum.set_scalar(0, spec.n, spec.x);          // a_{s0}^{sn} = x, the rest 1
  return datum;
}

Complex det_formula(const AffineAnSpec& spec) {
  return (2.0 - spec.x - 1.0 / spec.x) / std::pow(2.0, spec.n + 1);
}

}  // namespace coxir
