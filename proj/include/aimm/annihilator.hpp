#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "aimm/boolfun.hpp"
#include "aimm/gf2n.hpp"
#include "aimm/univariate.hpp"

namespace aimm {

enum class Side { annihilates_f, annihilates_f_plus_1 };
enum class Mode { base_field, extension_field };

std::string to_string(Side side);
std::string to_string(Mode mode);

// All monomial masks on n variables with popcount <= d, sorted by popcount
// and then numerically. This ordering fixes evaluation-matrix columns,
// witness tie-breaks, and report layouts everywhere downstream.
struct MonomialBasis {
    unsigned n = 0;
    unsigned d = 0;
    std::vector<uint32_t> masks;

    static MonomialBasis upto(unsigned n, unsigned d);
};

struct AiReport {
    unsigned n;
    unsigned ai;
    Mode mode;
    Side side;
    // Nonzero, degree exactly ai, vanishes on the support of the reported
    // side's function.
    std::variant<AnfPoly, ExtMultivariatePoly> witness;
    double elapsed_ms;
};

// Maximal linearly independent set of nonzero g with deg g <= d and
// g(c) = 0 at every support point of f; empty when only zero qualifies.
// Computed as the kernel of the support x monomial evaluation matrix,
// with F_2 scalars or (the _ext form) F_{2^n} scalars.
std::vector<AnfPoly> annihilator_space(const TruthTable& f, unsigned d);
std::vector<ExtMultivariatePoly> annihilator_space_ext(const TruthTable& f, unsigned d,
                                                       const FieldSpec& spec);

// Smallest d with a nonzero degree-<=d annihilator of f or of f+1, searched
// incrementally from d = 0 with the f side checked first. The witness is
// the kernel vector whose coefficient sequence is lexicographically
// smallest under the MonomialBasis column order.
AiReport algebraic_immunity(const TruthTable& f);

// The same search with F_{2^n} coefficients. Witness tie-break: the kernel
// vector of the first free column, carrying a unit coefficient there.
AiReport algebraic_immunity_ext(const TruthTable& f, const FieldSpec& spec);

// True iff the two searches report the same immunity. A false return is an
// implementation bug, not a mathematical possibility.
bool verify_equivalence(const TruthTable& f, const FieldSpec& spec);

// Splits an annihilator g of f into Boolean components along the basis b
// and confirms each component annihilates f on its own and that the
// largest component degree equals deg g. Throws std::invalid_argument when
// g does not annihilate f pointwise.
bool component_check(const TruthTable& f, const UnivariatePoly& g, const Basis& b);
bool component_check(const TruthTable& f, const ExtMultivariatePoly& g, const Basis& b);

// Perfect algebraic immunity: for every positive e < n/2, no nonzero g of
// degree <= e may pull the product below degree n-e, where gf = 0 counts
// as a violation. Checked as kernel triviality of the linear map from g's
// coefficients to the coefficients of gf on monomials of degree > n-e-1.
// Vacuously true for n <= 2.
bool is_pai(const TruthTable& f, Mode mode, const FieldSpec& spec);

// True iff base and extension modes of is_pai agree on f.
bool verify_pai_equivalence(const TruthTable& f, const FieldSpec& spec);

}  // namespace aimm
