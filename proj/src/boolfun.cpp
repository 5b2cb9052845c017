#include "aimm/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace aimm {

namespace {

constexpr unsigned kMaxN = 16;

unsigned word_count(unsigned n) { return n >= 6 ? 1u << (n - 6) : 1u; }

uint64_t tail_mask(unsigned n) { return n >= 6 ? ~0ull : (1ull << (1u << n)) - 1; }

void require_same_n(const TruthTable& a, const TruthTable& b) {
    if (a.n() != b.n()) throw std::invalid_argument("truth tables have different n");
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

TruthTable::TruthTable(unsigned n) : n_(n), words_(word_count(n), 0) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("truth table n must be in [1, 16]");
}

TruthTable TruthTable::constant(unsigned n, int bit) {
    TruthTable f(n);
    if (bit) {
        for (auto& w : f.words_) w = ~0ull;
        f.words_.back() &= tail_mask(n);
    }
    return f;
}

TruthTable TruthTable::from_hex(unsigned n, std::string_view hex) {
    TruthTable f(n);
    const size_t digits = std::max<size_t>(1, (f.size() + 3) / 4);
    if (hex.size() != digits)
        throw std::invalid_argument("truth table hex must encode exactly " +
                                    std::to_string(f.size()) + " bits (" + std::to_string(digits) +
                                    " hex digits)");
    for (size_t k = 0; k < digits; ++k) {
        const int d = hex_digit(hex[digits - 1 - k]);  // least significant digit last
        if (d < 0) throw std::invalid_argument("malformed truth table hex");
        const size_t bit = 4 * k;
        if (bit < f.size()) f.words_[bit >> 6] |= static_cast<uint64_t>(d) << (bit & 63);
    }
    const uint64_t spill = f.words_.back() & ~tail_mask(n);
    if (spill != 0) throw std::invalid_argument("truth table hex has bits beyond 2^n");
    return f;
}

TruthTable TruthTable::random(unsigned n, std::mt19937_64& rng) {
    TruthTable f(n);
    for (auto& w : f.words_) w = rng();
    f.words_.back() &= tail_mask(n);
    return f;
}

void TruthTable::set(uint32_t i, int bit) {
    const uint64_t m = 1ull << (i & 63);
    if (bit) words_[i >> 6] |= m;
    else words_[i >> 6] &= ~m;
}

uint32_t TruthTable::weight() const {
    uint32_t w = 0;
    for (uint64_t word : words_) w += static_cast<uint32_t>(std::popcount(word));
    return w;
}

bool TruthTable::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

TruthTable TruthTable::operator&(const TruthTable& rhs) const {
    require_same_n(*this, rhs);
    TruthTable out(n_);
    for (size_t k = 0; k < words_.size(); ++k) out.words_[k] = words_[k] & rhs.words_[k];
    return out;
}

TruthTable TruthTable::operator^(const TruthTable& rhs) const {
    require_same_n(*this, rhs);
    TruthTable out(n_);
    for (size_t k = 0; k < words_.size(); ++k) out.words_[k] = words_[k] ^ rhs.words_[k];
    return out;
}

TruthTable TruthTable::complement() const {
    TruthTable out(n_);
    for (size_t k = 0; k < words_.size(); ++k) out.words_[k] = ~words_[k];
    out.words_.back() &= tail_mask(n_);
    return out;
}

std::string TruthTable::to_hex() const {
    static const char* digits = "0123456789abcdef";
    const size_t count = std::max<size_t>(1, (size() + 3) / 4);
    std::string s(count, '0');
    for (size_t k = 0; k < count; ++k) {
        const size_t bit = 4 * k;
        const unsigned nibble = static_cast<unsigned>((words_[bit >> 6] >> (bit & 63)) & 0xf);
        s[count - 1 - k] = digits[nibble];
    }
    return s;
}

std::vector<uint32_t> TruthTable::support() const {
    std::vector<uint32_t> pts;
    for (uint32_t i = 0; i < size(); ++i) {
        if (get(i)) pts.push_back(i);
    }
    return pts;
}

AnfPoly::AnfPoly(unsigned n) : n_(n) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("anf n must be in [1, 16]");
}

AnfPoly::AnfPoly(unsigned n, std::set<uint32_t> terms) : AnfPoly(n) {
    for (uint32_t t : terms) {
        if (t >= (1u << n)) throw std::invalid_argument("anf term mask out of range");
    }
    terms_ = std::move(terms);
}

void AnfPoly::toggle(uint32_t mask) {
    if (mask >= (1u << n_)) throw std::invalid_argument("anf term mask out of range");
    auto it = terms_.find(mask);
    if (it == terms_.end()) terms_.insert(mask);
    else terms_.erase(it);
}

int AnfPoly::degree() const {
    int d = -1;
    for (uint32_t t : terms_) d = std::max(d, std::popcount(t));
    return d;
}

int AnfPoly::evaluate(uint32_t point) const {
    int acc = 0;
    for (uint32_t t : terms_) acc ^= ((point & t) == t);
    return acc;
}

std::string monomial_to_string(uint32_t mask) {
    if (mask == 0) return "1";
    std::string s;
    for (unsigned j = 0; j < 32; ++j) {
        if ((mask >> j) & 1) {
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(j + 1);
        }
    }
    return s;
}

std::string AnfPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<uint32_t> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](uint32_t a, uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::string s;
    for (uint32_t t : sorted) {
        if (!s.empty()) s += " + ";
        s += monomial_to_string(t);
    }
    return s;
}

AnfPoly AnfPoly::parse(unsigned n, std::string_view text) {
    AnfPoly p(n);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw std::invalid_argument("empty anf string");
    while (pos < text.size()) {
        uint32_t mask = 0;
        bool saw_factor = false;
        bool constant_one = false;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == '1') {
                ++pos;
                constant_one = true;
            } else if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
                ++pos;
                uint32_t idx = 0;
                size_t start = pos;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                    idx = idx * 10 + static_cast<uint32_t>(text[pos] - '0');
                    ++pos;
                }
                if (pos == start || idx < 1 || idx > n)
                    throw std::invalid_argument("anf variable index out of range");
                mask |= 1u << (idx - 1);
            } else if (pos < text.size() && text[pos] == '0' && !saw_factor) {
                ++pos;  // the zero polynomial, only valid as a lone term
                skip_ws();
                if (pos != text.size() || !p.terms_.empty())
                    throw std::invalid_argument("'0' must stand alone in an anf string");
                return p;
            } else {
                throw std::invalid_argument("malformed anf term");
            }
            saw_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (constant_one && mask != 0)
            throw std::invalid_argument("'1' cannot be multiplied into a monomial");
        p.toggle(mask);  // repeated terms cancel mod 2
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '+') throw std::invalid_argument("expected '+' between anf terms");
        ++pos;
        skip_ws();
        if (pos == text.size()) throw std::invalid_argument("dangling '+' in anf string");
    }
    return p;
}

namespace {

// In-place butterfly Moebius transform; self-inverse over F_2.
void moebius_inplace(std::vector<uint64_t>& words, unsigned n) {
    static constexpr uint64_t kHalf[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    for (unsigned step = 0; step < n && step < 6; ++step) {
        const unsigned stride = 1u << step;
        for (auto& w : words) w ^= (w & kHalf[step]) << stride;
    }
    for (unsigned step = 6; step < n; ++step) {
        const size_t block = size_t{1} << (step - 6);
        for (size_t base = 0; base < words.size(); base += 2 * block) {
            for (size_t k = 0; k < block; ++k) words[base + block + k] ^= words[base + k];
        }
    }
}

}  // namespace

AnfPoly anf_from_tt(const TruthTable& f) {
    std::vector<uint64_t> words = f.words();
    moebius_inplace(words, f.n());
    AnfPoly p(f.n());
    for (uint32_t i = 0; i < f.size(); ++i) {
        if ((words[i >> 6] >> (i & 63)) & 1) p.toggle(i);
    }
    return p;
}

TruthTable tt_from_anf(const AnfPoly& p) {
    TruthTable f(p.n());
    std::vector<uint64_t> words = f.words();
    for (uint32_t t : p.terms()) words[t >> 6] |= 1ull << (t & 63);
    moebius_inplace(words, p.n());
    for (uint32_t i = 0; i < f.size(); ++i) f.set(i, static_cast<int>((words[i >> 6] >> (i & 63)) & 1));
    return f;
}

}  // namespace aimm
