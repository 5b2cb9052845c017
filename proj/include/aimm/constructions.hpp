#pragma once

#include "aimm/boolfun.hpp"
#include "aimm/gf2n.hpp"

namespace aimm {

// Two support conventions circulate for the same construction; both are
// balanced and the analysis results are convention-independent.
enum class CfSupport {
    with_zero,    // {0} U {a^0, ..., a^(2^(n-1)-2)}
    powers_only,  // {a^0, ..., a^(2^(n-1)-1)}
};

// Balanced function over the field's point indexing, supported on an
// initial run of powers of the smallest primitive element a. Requires
// n >= 2.
TruthTable carlet_feng(const FieldSpec& spec, CfSupport support = CfSupport::with_zero);

// f(point) = 1 iff more than half the input bits are set; an even-n tie
// (exactly n/2 ones) gives 0. Requires n >= 1.
TruthTable majority(unsigned n);

}  // namespace aimm
