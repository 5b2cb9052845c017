#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace aimm {

// An n-variable Boolean function as a 2^n-bit vector. Bit i is the value at
// the field point of index i (gf2n convention), which is also the hypercube
// point whose coordinate k is bit k of i, with x_{k+1} naming coordinate k.
class TruthTable {
public:
    explicit TruthTable(unsigned n);  // all-zero

    // Big-endian hex of the bit vector as an integer (bit i = f(i)); the
    // string must have exactly ceil(2^n / 4) digits. Example: the 3-variable
    // majority function is "e8".
    static TruthTable from_hex(unsigned n, std::string_view hex);
    static TruthTable random(unsigned n, std::mt19937_64& rng);
    static TruthTable constant(unsigned n, int bit);

    unsigned n() const { return n_; }
    uint32_t size() const { return 1u << n_; }

    int get(uint32_t i) const { return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1); }
    void set(uint32_t i, int bit);

    uint32_t weight() const;
    bool is_balanced() const { return weight() == size() / 2; }
    bool is_zero() const;

    TruthTable operator&(const TruthTable& rhs) const;  // pointwise product
    TruthTable operator^(const TruthTable& rhs) const;
    TruthTable complement() const;  // f + 1

    bool operator==(const TruthTable&) const = default;

    std::string to_hex() const;
    std::vector<uint32_t> support() const;  // indices with f(i) = 1, ascending

    const std::vector<uint64_t>& words() const { return words_; }

private:
    unsigned n_;
    std::vector<uint64_t> words_;
};

// Algebraic normal form over F_2, stored sparsely: the set holds the masks
// of monomials with coefficient 1 (bit j of a mask = variable x_{j+1}).
class AnfPoly {
public:
    explicit AnfPoly(unsigned n);
    AnfPoly(unsigned n, std::set<uint32_t> terms);

    unsigned n() const { return n_; }
    const std::set<uint32_t>& terms() const { return terms_; }

    void toggle(uint32_t mask);
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max popcount of a term; -1 for the zero polynomial
    int evaluate(uint32_t point) const;

    bool operator==(const AnfPoly&) const = default;

    // Monomials joined by " + ", each "x1*x3" style with "1" for the
    // constant term, sorted by (degree, mask). The zero polynomial is "0".
    std::string to_string() const;
    static AnfPoly parse(unsigned n, std::string_view text);

private:
    unsigned n_;
    std::set<uint32_t> terms_;
};

std::string monomial_to_string(uint32_t mask);

// Mutually inverse butterfly Moebius transforms between the two forms.
AnfPoly anf_from_tt(const TruthTable& f);
TruthTable tt_from_anf(const AnfPoly& p);

}  // namespace aimm
