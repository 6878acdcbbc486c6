#pragma once

#include "holonorm/exact/bigfloat.hpp"
#include "holonorm/exact/poly.hpp"

#include <vector>

namespace holonorm {

struct BigComplex {
    BigFloat re;
    BigFloat im;

    BigFloat modulus() const;
};

/// All complex roots of a square-free polynomial by Aberth iteration at the given precision.
/// Used only for modulus comparisons; certified real roots come from isolate_root.
std::vector<BigComplex> complex_roots(const Poly& square_free, int precision);

} // namespace holonorm
