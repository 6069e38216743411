#pragma once

#include "coxir/ir.hpp"
#include "coxir/types.hpp"

namespace coxir {

// The V_x family over the affine cycle of rank n+1: generators s0..sn on an
// (n+1)-cycle with all bond orders 3, k = 1 forced, and the single chi value
// x carried by the closing scalar a_{s0}^{sn}.
struct AffineAnSpec {
  int n;
  Complex x;

  AffineAnSpec(int n_value, Complex x_value);  // validates n >= 2, x != 0
};

IRDatum affine_datum(const AffineAnSpec& spec);

// Closed form of det A for the family: (2 - x - 1/x) / 2^{n+1}.
Complex det_formula(const AffineAnSpec& spec);

}  // namespace coxir
