#include "aimm/annihilator.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "aimm/linalg.hpp"

namespace aimm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Rows are the support points in increasing index order; columns follow
// the monomial order. Entry = monomial value at the point, which is 1
// exactly when the mask is a subset of the point's bits.
BitMatrix evaluation_matrix(const std::vector<uint32_t>& support,
                            const std::vector<uint32_t>& monos) {
    BitMatrix m(support.size(), monos.size());
    for (size_t r = 0; r < support.size(); ++r)
        for (size_t j = 0; j < monos.size(); ++j)
            if ((monos[j] & support[r]) == monos[j]) m.set(r, j, 1);
    return m;
}

std::vector<std::vector<uint8_t>> base_kernel(const TruthTable& f, unsigned d) {
    MonomialBasis mb = MonomialBasis::upto(f.n(), d);
    return evaluation_matrix(f.support(), mb.masks).kernel_basis();
}

std::vector<std::vector<uint32_t>> ext_kernel(const TruthTable& f, unsigned d,
                                              const FieldSpec& spec) {
    MonomialBasis mb = MonomialBasis::upto(f.n(), d);
    std::vector<uint32_t> support = f.support();
    FieldMatrix m(spec, support.size(), mb.masks.size());
    for (size_t r = 0; r < support.size(); ++r)
        for (size_t j = 0; j < mb.masks.size(); ++j)
            if ((mb.masks[j] & support[r]) == mb.masks[j]) m.set(r, j, 1);
    return m.kernel_basis();
}

AnfPoly anf_from_vector(unsigned n, const std::vector<uint32_t>& monos,
                        const std::vector<uint8_t>& v) {
    AnfPoly p(n);
    for (size_t j = 0; j < monos.size(); ++j)
        if (v[j]) p.toggle(monos[j]);
    return p;
}

ExtMultivariatePoly ext_from_vector(const FieldSpec& spec, const std::vector<uint32_t>& monos,
                                    const std::vector<uint32_t>& v) {
    ExtMultivariatePoly p(spec);
    for (size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], v[j]);
    return p;
}

// The lexicographically smallest nonzero vector of a subspace is the
// highest-pivot row of the reduced echelon form of any spanning set: every
// other nonzero combination turns on an earlier coordinate.
std::vector<uint8_t> lex_min_nonzero(const std::vector<std::vector<uint8_t>>& span,
                                     size_t cols) {
    BitMatrix m(span.size(), cols);
    for (size_t r = 0; r < span.size(); ++r)
        for (size_t c = 0; c < cols; ++c)
            if (span[r][c]) m.set(r, c, 1);
    size_t rank = m.rref();
    std::vector<uint8_t> v(cols, 0);
    for (size_t c = 0; c < cols; ++c) v[c] = static_cast<uint8_t>(m.get(rank - 1, c));
    return v;
}

}  // namespace

std::string to_string(Side side) {
    return side == Side::annihilates_f ? "annihilates_f" : "annihilates_f_plus_1";
}

std::string to_string(Mode mode) {
    return mode == Mode::base_field ? "base_field" : "extension_field";
}

MonomialBasis MonomialBasis::upto(unsigned n, unsigned d) {
    if (n < 1 || n > FieldSpec::kMaxN)
        throw std::invalid_argument("monomial basis: n out of range");
    if (d > n) throw std::invalid_argument("monomial basis: degree bound exceeds n");
    MonomialBasis mb;
    mb.n = n;
    mb.d = d;
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        if (static_cast<unsigned>(std::popcount(mask)) <= d) mb.masks.push_back(mask);
    std::sort(mb.masks.begin(), mb.masks.end(), [](uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return mb;
}

std::vector<AnfPoly> annihilator_space(const TruthTable& f, unsigned d) {
    MonomialBasis mb = MonomialBasis::upto(f.n(), d);
    std::vector<AnfPoly> out;
    for (const auto& v : base_kernel(f, d)) out.push_back(anf_from_vector(f.n(), mb.masks, v));
    return out;
}

std::vector<ExtMultivariatePoly> annihilator_space_ext(const TruthTable& f, unsigned d,
                                                       const FieldSpec& spec) {
    if (f.n() != spec.n())
        throw std::invalid_argument("annihilator space: table size does not match field");
    MonomialBasis mb = MonomialBasis::upto(f.n(), d);
    std::vector<ExtMultivariatePoly> out;
    for (const auto& v : ext_kernel(f, d, spec))
        out.push_back(ext_from_vector(spec, mb.masks, v));
    return out;
}

AiReport algebraic_immunity(const TruthTable& f) {
    auto start = Clock::now();
    for (unsigned d = 0; d <= f.n(); ++d) {
        MonomialBasis mb = MonomialBasis::upto(f.n(), d);
        for (Side side : {Side::annihilates_f, Side::annihilates_f_plus_1}) {
            const TruthTable target =
                side == Side::annihilates_f ? f : f.complement();
            auto kernel = base_kernel(target, d);
            if (kernel.empty()) continue;
            AnfPoly witness =
                anf_from_vector(f.n(), mb.masks, lex_min_nonzero(kernel, mb.masks.size()));
            return AiReport{f.n(), d, Mode::base_field, side, std::move(witness),
                            ms_since(start)};
        }
    }
    throw std::logic_error("algebraic immunity: no annihilator up to degree n");
}

AiReport algebraic_immunity_ext(const TruthTable& f, const FieldSpec& spec) {
    if (f.n() != spec.n())
        throw std::invalid_argument("algebraic immunity: table size does not match field");
    auto start = Clock::now();
    for (unsigned d = 0; d <= f.n(); ++d) {
        MonomialBasis mb = MonomialBasis::upto(f.n(), d);
        for (Side side : {Side::annihilates_f, Side::annihilates_f_plus_1}) {
            const TruthTable target =
                side == Side::annihilates_f ? f : f.complement();
            auto kernel = ext_kernel(target, d, spec);
            if (kernel.empty()) continue;
            ExtMultivariatePoly witness = ext_from_vector(spec, mb.masks, kernel.front());
            return AiReport{f.n(), d, Mode::extension_field, side, std::move(witness),
                            ms_since(start)};
        }
    }
    throw std::logic_error("algebraic immunity: no annihilator up to degree n");
}

bool verify_equivalence(const TruthTable& f, const FieldSpec& spec) {
    return algebraic_immunity(f).ai == algebraic_immunity_ext(f, spec).ai;
}

bool component_check(const TruthTable& f, const UnivariatePoly& g, const Basis& b) {
    const FieldSpec& spec = g.spec();
    if (f.n() != spec.n() || !(b.spec() == spec))
        throw std::invalid_argument("component check: mixed dimensions");
    std::vector<uint32_t> values = g.evaluate_all();
    for (uint32_t c : f.support())
        if (values[c] != 0)
            throw std::invalid_argument("component check: g does not annihilate f");

    std::vector<TruthTable> parts = decompose(g, b);
    int max_deg = -1;
    for (const TruthTable& gi : parts) {
        if (!(gi & f).is_zero()) return false;
        max_deg = std::max(max_deg, anf_from_tt(gi).degree());
    }
    return max_deg == g.wt_degree();
}

bool component_check(const TruthTable& f, const ExtMultivariatePoly& g, const Basis& b) {
    // The conversion to univariate form must pair hypercube points with
    // field points through the polynomial basis, the identification the
    // truth-table indexing is built on; b is only the decomposition basis.
    return component_check(f, from_multivariate(g, Basis::polynomial(g.spec())), b);
}

bool is_pai(const TruthTable& f, Mode mode, const FieldSpec& spec) {
    unsigned n = f.n();
    if (n != spec.n())
        throw std::invalid_argument("pai check: table size does not match field");
    for (unsigned e = 1; 2 * e < n; ++e) {
        MonomialBasis cand = MonomialBasis::upto(n, e);
        std::vector<uint32_t> high;  // monomials the product must reach
        for (uint32_t mask = 0; mask < (1u << n); ++mask)
            if (static_cast<unsigned>(std::popcount(mask)) >= n - e) high.push_back(mask);

        // Column j holds the high-degree ANF coefficients of f * (monomial
        // j), so a kernel vector is exactly a g with deg(gf) <= n-e-1.
        BitMatrix base(high.size(), cand.masks.size());
        for (size_t j = 0; j < cand.masks.size(); ++j) {
            TruthTable prod(n);
            for (uint32_t c = 0; c < f.size(); ++c)
                if (f.get(c) && (cand.masks[j] & c) == cand.masks[j]) prod.set(c, 1);
            AnfPoly anf = anf_from_tt(prod);
            for (size_t r = 0; r < high.size(); ++r)
                if (anf.terms().count(high[r])) base.set(r, j, 1);
        }

        if (mode == Mode::base_field) {
            if (!base.kernel_basis().empty()) return false;
        } else {
            FieldMatrix ext(spec, high.size(), cand.masks.size());
            for (size_t r = 0; r < high.size(); ++r)
                for (size_t j = 0; j < cand.masks.size(); ++j)
                    ext.set(r, j, static_cast<uint32_t>(base.get(r, j)));
            if (!ext.kernel_basis().empty()) return false;
        }
    }
    return true;
}

bool verify_pai_equivalence(const TruthTable& f, const FieldSpec& spec) {
    return is_pai(f, Mode::base_field, spec) == is_pai(f, Mode::extension_field, spec);
}

}  // namespace aimm
