#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aimm/boolfun.hpp"
#include "aimm/gf2n.hpp"

namespace aimm {

// Element of F_{2^n}[x]/<x^(2^n) + x>: a dense list of 2^n coefficients,
// coeffs()[i] multiplying x^i, each a raw field value of the spec.
class UnivariatePoly {
public:
    explicit UnivariatePoly(const FieldSpec& spec);  // zero polynomial
    UnivariatePoly(const FieldSpec& spec, std::vector<uint32_t> coeffs);

    const FieldSpec& spec() const { return spec_; }
    uint32_t coeff(uint32_t i) const { return coeffs_[i]; }
    void set_coeff(uint32_t i, uint32_t value);
    const std::vector<uint32_t>& coeffs() const { return coeffs_; }

    uint32_t evaluate(uint32_t point) const;  // Horner, raw values
    FieldElement evaluate(const FieldElement& point) const;
    std::vector<uint32_t> evaluate_all() const;  // value at every point index

    // Algebraic degree: max wt(i) over nonzero coefficients, where wt is
    // the number of ones in the binary expansion of the exponent. The zero
    // polynomial reports -1.
    int wt_degree() const;

    // True iff the induced map lands in {0, 1} at every field point.
    bool is_boolean() const;
    TruthTable to_truth_table() const;  // throws if not Boolean

    bool is_zero() const;
    UnivariatePoly operator+(const UnivariatePoly& rhs) const;
    bool operator==(const UnivariatePoly&) const = default;

    std::vector<std::string> to_hex_list() const;  // index = exponent

private:
    FieldSpec spec_;
    std::vector<uint32_t> coeffs_;
};

// Element of F_{2^n}[x_1..x_n]/<x_i^2 + x_i>: monomial mask -> nonzero
// coefficient. Shares the monomial-mask convention with AnfPoly.
class ExtMultivariatePoly {
public:
    explicit ExtMultivariatePoly(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    const std::map<uint32_t, uint32_t>& terms() const { return terms_; }

    void add_term(uint32_t mask, uint32_t coeff);  // field addition, zero entries drop out
    uint32_t coeff(uint32_t mask) const;

    int degree() const;  // max popcount over stored masks; -1 when zero
    bool is_zero() const { return terms_.empty(); }

    uint32_t evaluate(uint32_t point_mask) const;  // monomial = 1 iff mask subset of point
    std::vector<uint32_t> evaluate_all() const;

    ExtMultivariatePoly operator+(const ExtMultivariatePoly& rhs) const;
    ExtMultivariatePoly operator*(const ExtMultivariatePoly& rhs) const;
    ExtMultivariatePoly scaled(uint32_t c) const;

    bool operator==(const ExtMultivariatePoly&) const = default;

    // Sorted (degree, mask) list of "monomial=coeffhex" pairs; "0" when zero.
    std::string to_string() const;

private:
    FieldSpec spec_;
    std::map<uint32_t, uint32_t> terms_;
};

// The unique polynomial of degree < 2^n agreeing with f at every point,
// via the Mattson-Solomon style sum a_i = sum_{c != 0} f(c) c^(-i).
UnivariatePoly interpolate(const TruthTable& f, const FieldSpec& spec);
UnivariatePoly interpolate_values(const std::vector<uint32_t>& values, const FieldSpec& spec);

// Boolean coordinates of G along basis b: parts[i](c) = tr(b*_i G(c)), so
// that G(c) = sum_i parts[i](c) b_i at every point.
std::vector<TruthTable> decompose(const UnivariatePoly& G, const Basis& b);
UnivariatePoly recompose(const std::vector<TruthTable>& parts, const Basis& b,
                         const FieldSpec& spec);

// Substitutes x = sum_k x_k b_k and expands x^i = prod_j (sum_k x_k b_k^(2^j))
// over the exponent's binary digits i_j, reducing by x_k^2 = x_k. The result
// takes the value evaluate(G, c) at the coordinate mask of c over b.
ExtMultivariatePoly to_multivariate(const UnivariatePoly& G, const Basis& b);
UnivariatePoly from_multivariate(const ExtMultivariatePoly& H, const Basis& b);

}  // namespace aimm
