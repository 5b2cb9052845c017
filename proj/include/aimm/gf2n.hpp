#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aimm {

class FieldElement;

// GF(2^n) under a fixed irreducible modulus, 1 <= n <= 16.
//
// Polynomials over F_2 are stored as bit patterns: bit i = coefficient of
// x^i. Field elements are coordinate vectors over the polynomial basis
// {1, a, ..., a^(n-1)} where a is a root of the modulus, so the element
// with bits `b` is sum_j b_j a^j. The integer value of that bit pattern is
// the element's index; index 0 is the zero element, index 1 is one.
class FieldSpec {
public:
    static constexpr unsigned kMaxN = 16;

    // Default modulus: the lexicographically smallest irreducible
    // polynomial of degree n (see kDefaultModulus in gf2n.cpp).
    explicit FieldSpec(unsigned n);
    FieldSpec(unsigned n, uint32_t modulus);

    static uint32_t default_modulus(unsigned n);

    unsigned n() const { return n_; }
    uint32_t modulus() const { return modulus_; }
    uint32_t order() const { return 1u << n_; }

    bool operator==(const FieldSpec&) const = default;

    // Arithmetic on raw coefficient bit patterns (values < 2^n). These are
    // the hot-path entry points; FieldElement wraps them with spec checks.
    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t k) const;
    uint32_t inv(uint32_t a) const;  // throws on a == 0
    int trace(uint32_t a) const;     // sum_j a^(2^j), always 0 or 1

    FieldElement element(uint32_t index) const;  // throws if index >= 2^n
    FieldElement zero() const;
    FieldElement one() const;

    // Element of smallest index with multiplicative order 2^n - 1.
    FieldElement primitive() const;

private:
    unsigned n_;
    uint32_t modulus_;
};

// Immutable element of GF(2^n). Carries its spec; mixing specs in one
// operation throws rather than coercing.
class FieldElement {
public:
    FieldElement(const FieldSpec& spec, uint32_t bits);

    const FieldSpec& spec() const { return spec_; }
    uint32_t index() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement pow(uint64_t k) const;
    FieldElement inv() const;
    int trace() const;

    bool operator==(const FieldElement&) const = default;

    std::string to_hex() const;  // lowercase hex of the coefficient integer
    static FieldElement from_hex(const FieldSpec& spec, const std::string& hex);

private:
    FieldSpec spec_;
    uint32_t bits_;
};

// Ordered F_2-basis of GF(2^n): n elements, linearly independent over F_2.
class Basis {
public:
    Basis(const FieldSpec& spec, std::vector<FieldElement> elements);

    static Basis polynomial(const FieldSpec& spec);  // {1, a, ..., a^(n-1)}
    static Basis self_dual(const FieldSpec& spec);   // tr(b_i b_j) = delta_ij

    // The unique basis {b*_j} with tr(b_i b*_j) = 1 iff i = j.
    Basis dual() const;

    const FieldSpec& spec() const { return spec_; }
    size_t size() const { return elements_.size(); }
    const FieldElement& operator[](size_t i) const { return elements_[i]; }
    const std::vector<FieldElement>& elements() const { return elements_; }

    // Coordinates of x over this basis, as a bit mask (bit i = coord on
    // element i). Inverse of combining coordinates with the basis.
    uint32_t coordinates(const FieldElement& x) const;
    FieldElement combine(uint32_t coord_mask) const;

    bool operator==(const Basis&) const = default;

private:
    FieldSpec spec_;
    std::vector<FieldElement> elements_;
    std::vector<uint32_t> decode_;  // column-solved inverse of the coordinate matrix
};

// True iff `poly` (bit pattern, any degree) is irreducible over F_2.
bool is_irreducible_f2(uint32_t poly);

}  // namespace aimm
