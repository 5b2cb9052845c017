#include "aimm/univariate.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace aimm {

UnivariatePoly::UnivariatePoly(const FieldSpec& spec)
    : spec_(spec), coeffs_(spec.order(), 0) {}

UnivariatePoly::UnivariatePoly(const FieldSpec& spec, std::vector<uint32_t> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != spec_.order())
        throw std::invalid_argument("univariate: expected one coefficient per field element");
    for (uint32_t c : coeffs_)
        if (c >= spec_.order())
            throw std::invalid_argument("univariate: coefficient out of field range");
}

void UnivariatePoly::set_coeff(uint32_t i, uint32_t value) {
    if (i >= spec_.order() || value >= spec_.order())
        throw std::invalid_argument("univariate: index or value out of field range");
    coeffs_[i] = value;
}

uint32_t UnivariatePoly::evaluate(uint32_t point) const {
    uint32_t acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = spec_.add(spec_.mul(acc, point), coeffs_[i]);
    return acc;
}

FieldElement UnivariatePoly::evaluate(const FieldElement& point) const {
    if (!(point.spec() == spec_))
        throw std::invalid_argument("univariate: point from a different field");
    return FieldElement(spec_, evaluate(point.index()));
}

std::vector<uint32_t> UnivariatePoly::evaluate_all() const {
    std::vector<uint32_t> out(spec_.order());
    for (uint32_t c = 0; c < spec_.order(); ++c) out[c] = evaluate(c);
    return out;
}

int UnivariatePoly::wt_degree() const {
    int best = -1;
    for (uint32_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i]) best = std::max(best, std::popcount(i));
    return best;
}

bool UnivariatePoly::is_boolean() const {
    for (uint32_t c = 0; c < spec_.order(); ++c)
        if (evaluate(c) > 1) return false;
    return true;
}

TruthTable UnivariatePoly::to_truth_table() const {
    TruthTable f(spec_.n());
    for (uint32_t c = 0; c < spec_.order(); ++c) {
        uint32_t v = evaluate(c);
        if (v > 1)
            throw std::domain_error("univariate: non-Boolean value at point " +
                                    std::to_string(c));
        f.set(c, static_cast<int>(v));
    }
    return f;
}

bool UnivariatePoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint32_t c) { return c == 0; });
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& rhs) const {
    if (!(spec_ == rhs.spec_))
        throw std::invalid_argument("univariate: mixed fields in addition");
    UnivariatePoly out(spec_);
    for (uint32_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] ^ rhs.coeffs_[i];
    return out;
}

std::vector<std::string> UnivariatePoly::to_hex_list() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (uint32_t c : coeffs_) out.push_back(FieldElement(spec_, c).to_hex());
    return out;
}

ExtMultivariatePoly::ExtMultivariatePoly(const FieldSpec& spec) : spec_(spec) {}

void ExtMultivariatePoly::add_term(uint32_t mask, uint32_t coeff) {
    if (mask >= spec_.order() || coeff >= spec_.order())
        throw std::invalid_argument("multivariate: mask or coefficient out of range");
    if (coeff == 0) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, coeff);
        return;
    }
    it->second ^= coeff;
    if (it->second == 0) terms_.erase(it);
}

uint32_t ExtMultivariatePoly::coeff(uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? 0 : it->second;
}

int ExtMultivariatePoly::degree() const {
    int best = -1;
    for (const auto& [mask, c] : terms_) best = std::max(best, std::popcount(mask));
    return best;
}

uint32_t ExtMultivariatePoly::evaluate(uint32_t point_mask) const {
    uint32_t acc = 0;
    for (const auto& [mask, c] : terms_)
        if ((mask & point_mask) == mask) acc ^= c;
    return acc;
}

std::vector<uint32_t> ExtMultivariatePoly::evaluate_all() const {
    std::vector<uint32_t> out(spec_.order());
    for (uint32_t p = 0; p < spec_.order(); ++p) out[p] = evaluate(p);
    return out;
}

ExtMultivariatePoly ExtMultivariatePoly::operator+(const ExtMultivariatePoly& rhs) const {
    if (!(spec_ == rhs.spec_))
        throw std::invalid_argument("multivariate: mixed fields in addition");
    ExtMultivariatePoly out = *this;
    for (const auto& [mask, c] : rhs.terms_) out.add_term(mask, c);
    return out;
}

ExtMultivariatePoly ExtMultivariatePoly::operator*(const ExtMultivariatePoly& rhs) const {
    if (!(spec_ == rhs.spec_))
        throw std::invalid_argument("multivariate: mixed fields in product");
    ExtMultivariatePoly out(spec_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.add_term(ma | mb, spec_.mul(ca, cb));  // x_k^2 = x_k
    return out;
}

ExtMultivariatePoly ExtMultivariatePoly::scaled(uint32_t c) const {
    if (c >= spec_.order())
        throw std::invalid_argument("multivariate: scalar out of field range");
    ExtMultivariatePoly out(spec_);
    for (const auto& [mask, coeff] : terms_) out.add_term(mask, spec_.mul(coeff, c));
    return out;
}

std::string ExtMultivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<uint32_t> masks;
    for (const auto& [mask, c] : terms_) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        int da = std::popcount(a), db = std::popcount(b);
        return da != db ? da < db : a < b;
    });
    std::ostringstream out;
    bool first = true;
    for (uint32_t mask : masks) {
        if (!first) out << " + ";
        first = false;
        out << monomial_to_string(mask) << "="
            << FieldElement(spec_, coeff(mask)).to_hex();
    }
    return out.str();
}

UnivariatePoly interpolate(const TruthTable& f, const FieldSpec& spec) {
    if (f.n() != spec.n())
        throw std::invalid_argument("interpolate: table size does not match field");
    std::vector<uint32_t> values(spec.order());
    for (uint32_t c = 0; c < spec.order(); ++c) values[c] = f.get(c) ? 1u : 0u;
    return interpolate_values(values, spec);
}

UnivariatePoly interpolate_values(const std::vector<uint32_t>& values, const FieldSpec& spec) {
    uint32_t q = spec.order();
    if (values.size() != q)
        throw std::invalid_argument("interpolate: expected one value per field element");
    for (uint32_t v : values)
        if (v >= q) throw std::invalid_argument("interpolate: value out of field range");

    UnivariatePoly G(spec);
    G.set_coeff(0, values[0]);
    // a_i = sum over c != 0 of f(c) c^(-i); the inverse powers are walked
    // incrementally from c^0 by repeated division.
    std::vector<uint32_t> inv_pow(q), inv(q);
    for (uint32_t c = 1; c < q; ++c) {
        inv_pow[c] = 1;
        inv[c] = spec.inv(c);
    }
    for (uint32_t i = 1; i <= q - 2; ++i) {
        uint32_t a = 0;
        for (uint32_t c = 1; c < q; ++c) {
            inv_pow[c] = spec.mul(inv_pow[c], inv[c]);
            if (values[c]) a ^= spec.mul(values[c], inv_pow[c]);
        }
        G.set_coeff(i, a);
    }
    uint32_t top = 0;
    for (uint32_t c = 0; c < q; ++c) top ^= values[c];
    G.set_coeff(q - 1, top);
    return G;
}

std::vector<TruthTable> decompose(const UnivariatePoly& G, const Basis& b) {
    const FieldSpec& spec = G.spec();
    if (!(b.spec() == spec))
        throw std::invalid_argument("decompose: basis from a different field");
    Basis dual = b.dual();
    std::vector<uint32_t> values = G.evaluate_all();
    std::vector<TruthTable> parts(spec.n(), TruthTable(spec.n()));
    for (unsigned i = 0; i < spec.n(); ++i) {
        uint32_t d = dual[i].index();
        for (uint32_t c = 0; c < spec.order(); ++c)
            parts[i].set(c, spec.trace(spec.mul(d, values[c])));
    }
    return parts;
}

UnivariatePoly recompose(const std::vector<TruthTable>& parts, const Basis& b,
                         const FieldSpec& spec) {
    if (!(b.spec() == spec))
        throw std::invalid_argument("recompose: basis from a different field");
    if (parts.size() != spec.n())
        throw std::invalid_argument("recompose: expected one component per basis element");
    std::vector<uint32_t> values(spec.order(), 0);
    for (unsigned i = 0; i < spec.n(); ++i) {
        if (parts[i].n() != spec.n())
            throw std::invalid_argument("recompose: component size does not match field");
        uint32_t bi = b[i].index();
        for (uint32_t c = 0; c < spec.order(); ++c)
            if (parts[i].get(c)) values[c] ^= bi;
    }
    return interpolate_values(values, spec);
}

ExtMultivariatePoly to_multivariate(const UnivariatePoly& G, const Basis& b) {
    const FieldSpec& spec = G.spec();
    if (!(b.spec() == spec))
        throw std::invalid_argument("to_multivariate: basis from a different field");
    unsigned n = spec.n();

    // linear[j] = sum_k x_k b_k^(2^j), the j-th Frobenius twist of the
    // coordinate expansion of x.
    std::vector<ExtMultivariatePoly> linear;
    linear.reserve(n);
    std::vector<uint32_t> twisted(n);
    for (unsigned k = 0; k < n; ++k) twisted[k] = b[k].index();
    for (unsigned j = 0; j < n; ++j) {
        ExtMultivariatePoly lj(spec);
        for (unsigned k = 0; k < n; ++k) lj.add_term(1u << k, twisted[k]);
        linear.push_back(lj);
        for (unsigned k = 0; k < n; ++k) twisted[k] = spec.mul(twisted[k], twisted[k]);
    }

    ExtMultivariatePoly out(spec);
    for (uint32_t i = 0; i < spec.order(); ++i) {
        uint32_t a = G.coeff(i);
        if (!a) continue;
        ExtMultivariatePoly term(spec);
        term.add_term(0, a);
        for (unsigned j = 0; j < n; ++j)
            if (i & (1u << j)) term = term * linear[j];
        out = out + term;
    }
    return out;
}

UnivariatePoly from_multivariate(const ExtMultivariatePoly& H, const Basis& b) {
    const FieldSpec& spec = H.spec();
    if (!(b.spec() == spec))
        throw std::invalid_argument("from_multivariate: basis from a different field");
    std::vector<uint32_t> values(spec.order());
    for (uint32_t c = 0; c < spec.order(); ++c)
        values[c] = H.evaluate(b.coordinates(spec.element(c)));
    return interpolate_values(values, spec);
}

}  // namespace aimm
