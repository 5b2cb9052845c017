#include "aimm/gf2n.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace aimm {

namespace {

// Lexicographically smallest irreducible polynomial of each degree,
// bit i = coefficient of x^i. Regenerate with tools/gen_moduli.py if the
// table ever needs extending.
constexpr std::array<uint32_t, 17> kDefaultModulus = {
    0,        // unused
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xb,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11b,    // x^8 + x^4 + x^3 + x + 1
    0x203,    // x^9 + x + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1009,   // x^12 + x^3 + 1
    0x201b,   // x^13 + x^4 + x^3 + x + 1
    0x4021,   // x^14 + x^5 + 1
    0x8003,   // x^15 + x + 1
    0x1002b,  // x^16 + x^5 + x^3 + x + 1
};

int poly_degree(uint64_t p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

uint64_t poly_mod(uint64_t a, uint64_t m) {
    const int dm = poly_degree(m);
    while (a != 0 && poly_degree(a) >= dm) {
        a ^= m << (poly_degree(a) - dm);
    }
    return a;
}

uint64_t poly_mulmod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (poly_degree(a) >= poly_degree(m)) a ^= m << (poly_degree(a) - poly_degree(m));
    }
    return r;
}

uint64_t poly_gcd(uint64_t a, uint64_t b) {
    while (b != 0) {
        uint64_t t = poly_mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

std::vector<uint32_t> prime_factors(uint32_t x) {
    std::vector<uint32_t> ps;
    for (uint32_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            ps.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) ps.push_back(x);
    return ps;
}

}  // namespace

bool is_irreducible_f2(uint32_t poly) {
    const int n = poly_degree(poly);
    if (n < 1) return false;
    if ((poly & 1) == 0) return n == 1;  // divisible by x
    // gcd(x^(2^i) + x, f) must be trivial for i = 1..n/2 (Ben-Or test).
    uint64_t x = 0b10;
    uint64_t xi = x;
    for (int i = 1; i <= n / 2; ++i) {
        xi = poly_mulmod(xi, xi, poly);
        if (poly_degree(poly_gcd(xi ^ x, poly)) != 0) return false;
    }
    return true;
}

uint32_t FieldSpec::default_modulus(unsigned n) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("field degree n must be in [1, 16]");
    return kDefaultModulus[n];
}

FieldSpec::FieldSpec(unsigned n) : FieldSpec(n, default_modulus(n)) {}

FieldSpec::FieldSpec(unsigned n, uint32_t modulus) : n_(n), modulus_(modulus) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("field degree n must be in [1, 16]");
    if (poly_degree(modulus) != static_cast<int>(n))
        throw std::invalid_argument("modulus must have degree exactly n");
    if ((modulus & 1) == 0) throw std::invalid_argument("modulus must have constant term 1");
    if (!is_irreducible_f2(modulus)) throw std::invalid_argument("modulus is reducible over F_2");
}

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
    uint64_t acc = 0;
    uint64_t aa = a;
    while (b != 0) {
        if (b & 1) acc ^= aa;
        b >>= 1;
        aa <<= 1;
    }
    // reduce: acc has degree < 2n - 1
    for (int d = 2 * static_cast<int>(n_) - 2; d >= static_cast<int>(n_); --d) {
        if ((acc >> d) & 1) acc ^= static_cast<uint64_t>(modulus_) << (d - n_);
    }
    return static_cast<uint32_t>(acc);
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t k) const {
    uint32_t r = 1;
    uint32_t base = a;
    while (k != 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(2^n)");
    return pow(a, order() - 2);
}

int FieldSpec::trace(uint32_t a) const {
    uint32_t t = 0;
    uint32_t x = a;
    for (unsigned j = 0; j < n_; ++j) {
        t ^= x;
        x = mul(x, x);
    }
    return static_cast<int>(t);  // always 0 or 1 for an irreducible modulus
}

FieldElement FieldSpec::element(uint32_t index) const {
    if (index >= order()) throw std::invalid_argument("element index out of range");
    return FieldElement(*this, index);
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

FieldElement FieldSpec::primitive() const {
    const uint32_t group_order = order() - 1;
    const auto primes = prime_factors(group_order);
    for (uint32_t a = 1; a < order(); ++a) {
        bool full_order = true;
        for (uint32_t p : primes) {
            if (pow(a, group_order / p) == 1) {
                full_order = false;
                break;
            }
        }
        if (full_order) return FieldElement(*this, a);
    }
    throw std::logic_error("no primitive element found");  // unreachable
}

FieldElement::FieldElement(const FieldSpec& spec, uint32_t bits) : spec_(spec), bits_(bits) {
    if (bits >= spec.order()) throw std::invalid_argument("element bits out of range for field");
}

namespace {
void require_same_spec(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b)) throw std::invalid_argument("field elements belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_spec(spec_, rhs.spec_);
    return FieldElement(spec_, spec_.add(bits_, rhs.bits_));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_spec(spec_, rhs.spec_);
    return FieldElement(spec_, spec_.mul(bits_, rhs.bits_));
}

FieldElement FieldElement::pow(uint64_t k) const { return FieldElement(spec_, spec_.pow(bits_, k)); }

FieldElement FieldElement::inv() const { return FieldElement(spec_, spec_.inv(bits_)); }

int FieldElement::trace() const { return spec_.trace(bits_); }

std::string FieldElement::to_hex() const {
    static const char* digits = "0123456789abcdef";
    if (bits_ == 0) return "0";
    std::string s;
    for (uint32_t v = bits_; v != 0; v >>= 4) s.insert(s.begin(), digits[v & 0xf]);
    return s;
}

FieldElement FieldElement::from_hex(const FieldSpec& spec, const std::string& hex) {
    if (hex.empty() || hex.size() > 8) throw std::invalid_argument("bad field element hex");
    uint32_t v = 0;
    for (char c : hex) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("bad field element hex");
        v = (v << 4) | static_cast<uint32_t>(d);
    }
    if (v >= spec.order()) throw std::invalid_argument("field element hex out of range");
    return FieldElement(spec, v);
}

namespace {

// Rows are bit patterns over n columns. Returns rank.
unsigned f2_rank(std::vector<uint32_t> rows, unsigned n) {
    unsigned rank = 0;
    for (unsigned c = 0; c < n; ++c) {
        unsigned pivot = rank;
        while (pivot < rows.size() && ((rows[pivot] >> c) & 1) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (unsigned r = 0; r < rows.size(); ++r) {
            if (r != rank && ((rows[r] >> c) & 1)) rows[r] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

// Inverts an n x n bit matrix (rows as masks). Throws if singular.
std::vector<uint32_t> f2_invert(std::vector<uint32_t> rows, unsigned n) {
    std::vector<uint32_t> inv(n);
    for (unsigned i = 0; i < n; ++i) inv[i] = 1u << i;
    for (unsigned c = 0; c < n; ++c) {
        unsigned pivot = c;
        while (pivot < n && ((rows[pivot] >> c) & 1) == 0) ++pivot;
        if (pivot == n) throw std::invalid_argument("matrix is singular over F_2");
        std::swap(rows[c], rows[pivot]);
        std::swap(inv[c], inv[pivot]);
        for (unsigned r = 0; r < n; ++r) {
            if (r != c && ((rows[r] >> c) & 1)) {
                rows[r] ^= rows[c];
                inv[r] ^= inv[c];
            }
        }
    }
    return inv;
}

}  // namespace

Basis::Basis(const FieldSpec& spec, std::vector<FieldElement> elements)
    : spec_(spec), elements_(std::move(elements)) {
    if (elements_.size() != spec_.n()) throw std::invalid_argument("basis needs exactly n elements");
    std::vector<uint32_t> rows;
    rows.reserve(elements_.size());
    for (const auto& e : elements_) {
        if (!(e.spec() == spec_)) throw std::invalid_argument("basis element from different field");
        rows.push_back(e.index());
    }
    if (f2_rank(rows, spec_.n()) != spec_.n())
        throw std::invalid_argument("basis elements are linearly dependent over F_2");
    decode_ = f2_invert(rows, spec_.n());
}

Basis Basis::polynomial(const FieldSpec& spec) {
    std::vector<FieldElement> elems;
    for (unsigned i = 0; i < spec.n(); ++i) elems.push_back(spec.element(1u << i));
    return Basis(spec, std::move(elems));
}

Basis Basis::dual() const {
    const unsigned n = spec_.n();
    // Gram matrix of the trace form on this basis, inverted over F_2.
    std::vector<uint32_t> gram(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            if (spec_.trace(spec_.mul(elements_[i].index(), elements_[j].index())))
                gram[i] |= 1u << j;
        }
    }
    const auto ginv = f2_invert(gram, n);
    std::vector<FieldElement> duals;
    duals.reserve(n);
    for (unsigned j = 0; j < n; ++j) {
        uint32_t acc = 0;
        for (unsigned m = 0; m < n; ++m) {
            if ((ginv[m] >> j) & 1) acc ^= elements_[m].index();
        }
        duals.push_back(FieldElement(spec_, acc));
    }
    return Basis(spec_, std::move(duals));
}

Basis Basis::self_dual(const FieldSpec& spec) {
    // Symmetric Gram-Schmidt for the trace form B(x,y) = tr(xy) over F_2.
    // The quadratic part q(x) = tr(x^2) = tr(x) is F_2-linear, so a span
    // contains a q = 1 vector iff one of its generators does. When every
    // remaining generator has q = 0 the residual form is alternating; a
    // hyperbolic pair (u, w) plus one finished vector e then splits into
    // three orthonormal vectors e+u, e+w, e+u+w.
    const unsigned n = spec.n();
    auto B = [&](uint32_t x, uint32_t y) { return spec.trace(spec.mul(x, y)); };
    std::vector<uint32_t> gens;
    for (unsigned i = 0; i < n; ++i) gens.push_back(1u << i);
    std::vector<uint32_t> ortho;
    while (!gens.empty()) {
        size_t hit = gens.size();
        for (size_t i = 0; i < gens.size(); ++i) {
            if (B(gens[i], gens[i]) == 1) {
                hit = i;
                break;
            }
        }
        if (hit < gens.size()) {
            const uint32_t e = gens[hit];
            gens.erase(gens.begin() + static_cast<ptrdiff_t>(hit));
            for (auto& g : gens) {
                if (B(g, e)) g ^= e;
            }
            ortho.push_back(e);
            continue;
        }
        // Alternating residual: pull a hyperbolic pair.
        const uint32_t u = gens.front();
        size_t wi = gens.size();
        for (size_t i = 1; i < gens.size(); ++i) {
            if (B(u, gens[i]) == 1) {
                wi = i;
                break;
            }
        }
        if (wi == gens.size() || ortho.empty())
            throw std::logic_error("self-dual basis reduction failed");  // unreachable for the trace form
        const uint32_t w = gens[wi];
        gens.erase(gens.begin() + static_cast<ptrdiff_t>(wi));
        gens.erase(gens.begin());
        for (auto& g : gens) {
            uint32_t adj = 0;
            if (B(g, w)) adj ^= u;
            if (B(g, u)) adj ^= w;
            g ^= adj;
        }
        const uint32_t e = ortho.back();
        ortho.pop_back();
        ortho.push_back(e ^ u);
        ortho.push_back(e ^ w);
        ortho.push_back(e ^ u ^ w);
    }
    std::vector<FieldElement> elems;
    elems.reserve(n);
    for (uint32_t v : ortho) elems.push_back(FieldElement(spec, v));
    return Basis(spec, std::move(elems));
}

uint32_t Basis::coordinates(const FieldElement& x) const {
    if (!(x.spec() == spec_)) throw std::invalid_argument("element from different field");
    uint32_t c = 0;
    for (unsigned j = 0; j < spec_.n(); ++j) {
        if ((x.index() >> j) & 1) c ^= decode_[j];
    }
    return c;
}

FieldElement Basis::combine(uint32_t coord_mask) const {
    uint32_t acc = 0;
    for (unsigned i = 0; i < spec_.n(); ++i) {
        if ((coord_mask >> i) & 1) acc ^= elements_[i].index();
    }
    return FieldElement(spec_, acc);
}

}  // namespace aimm
