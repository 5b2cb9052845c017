#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "aimm/gf2n.hpp"

using namespace aimm;

namespace {

// Independent irreducibility check: trial division by every polynomial of
// degree 1..deg/2.
bool irreducible_by_trial_division(uint32_t poly) {
    int deg = 31 - __builtin_clz(poly);
    if (deg < 1) return false;
    for (uint32_t div = 2; ; ++div) {
        int ddeg = 31 - __builtin_clz(div);
        if (2 * ddeg > deg) break;
        uint32_t rem = poly;
        int rdeg = deg;
        while (rdeg >= ddeg) {
            if (rem >> rdeg & 1) rem ^= div << (rdeg - ddeg);
            --rdeg;
        }
        if (rem == 0) return false;
    }
    return true;
}

Basis random_basis(const FieldSpec& spec, std::mt19937_64& rng) {
    for (;;) {
        std::vector<FieldElement> elems;
        for (unsigned i = 0; i < spec.n(); ++i)
            elems.push_back(spec.element(static_cast<uint32_t>(rng()) & (spec.order() - 1)));
        try {
            return Basis(spec, elems);
        } catch (const std::invalid_argument&) {
        }
    }
}

}  // namespace

TEST_CASE("default moduli are the expected lexicographically smallest irreducibles") {
    const uint32_t expected[] = {0,      0x3,    0x7,   0xb,    0x13,  0x25,
                                 0x43,   0x83,   0x11b, 0x203,  0x409, 0x805,
                                 0x1009, 0x201b, 0x4021, 0x8003, 0x1002b};
    for (unsigned n = 1; n <= 16; ++n) {
        CAPTURE(n);
        CHECK(FieldSpec(n).modulus() == expected[n]);
        CHECK(is_irreducible_f2(expected[n]));
        CHECK(irreducible_by_trial_division(expected[n]));
        // nothing smaller with the same degree and constant term works
        for (uint32_t cand = (1u << n) | 1; cand < expected[n]; cand += 2)
            CHECK_FALSE(irreducible_by_trial_division(cand));
    }
}

TEST_CASE("field construction validates the modulus") {
    CHECK_NOTHROW(FieldSpec(2, 0x7));
    CHECK_NOTHROW(FieldSpec(3, 0xb));
    CHECK_NOTHROW(FieldSpec(3, 0xd));
    CHECK_NOTHROW(FieldSpec(4, 0x1f));
    CHECK_THROWS_AS(FieldSpec(2, 0x5), std::invalid_argument);   // (x+1)^2
    CHECK_THROWS_AS(FieldSpec(2, 0x6), std::invalid_argument);   // constant term 0
    CHECK_THROWS_AS(FieldSpec(3, 0x7), std::invalid_argument);   // degree 2, not 3
    CHECK_THROWS_AS(FieldSpec(4, 0x15), std::invalid_argument);  // (x^2+x+1)^2
    CHECK_THROWS_AS(FieldSpec(0), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(17), std::invalid_argument);
}

TEST_CASE("GF(4) multiplication and inverse forced by the modulus") {
    FieldSpec gf4(2);
    CHECK(gf4.mul(2, 2) == 3);  // a*a = a+1
    CHECK(gf4.inv(2) == 3);
    CHECK(gf4.mul(2, 3) == 1);
    CHECK(gf4.pow(2, 3) == 1);
    CHECK_THROWS_AS(gf4.inv(0), std::domain_error);
}

TEST_CASE("GF(8) reduction: a^3 = a+1 under x^3+x+1") {
    FieldSpec gf8(3);
    CHECK(gf8.pow(2, 3) == 3);
    CHECK(gf8.mul(gf8.mul(2, 2), 2) == 3);
}

TEST_CASE("trace values in GF(4)") {
    FieldSpec gf4(2);
    CHECK(gf4.trace(0) == 0);
    CHECK(gf4.trace(1) == 0);
    CHECK(gf4.trace(2) == 1);
    CHECK(gf4.trace(3) == 1);
}

TEST_CASE("field axioms on random triples") {
    FieldSpec gf256(8);
    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 1000; ++t) {
        uint32_t a = static_cast<uint32_t>(rng()) & 255;
        uint32_t b = static_cast<uint32_t>(rng()) & 255;
        uint32_t c = static_cast<uint32_t>(rng()) & 255;
        CHECK(gf256.mul(a, gf256.add(b, c)) ==
              gf256.add(gf256.mul(a, b), gf256.mul(a, c)));
        if (a) CHECK(gf256.mul(a, gf256.inv(a)) == 1);
    }
}

TEST_CASE("Frobenius closure: a^(2^n) = a") {
    FieldSpec gf16(4);
    for (uint32_t a = 0; a < 16; ++a) CHECK(gf16.pow(a, 16) == a);
}

TEST_CASE("trace is linear and Frobenius-invariant") {
    for (unsigned n = 1; n <= 4; ++n) {
        FieldSpec spec(n);
        for (uint32_t a = 0; a < spec.order(); ++a) {
            CHECK(spec.trace(spec.mul(a, a)) == spec.trace(a));
            for (uint32_t b = 0; b < spec.order(); ++b)
                CHECK(spec.trace(a ^ b) == (spec.trace(a) ^ spec.trace(b)));
        }
    }
    FieldSpec gf256(8);
    std::mt19937_64 rng(0xabc);
    for (int t = 0; t < 500; ++t) {
        uint32_t a = static_cast<uint32_t>(rng()) & 255;
        uint32_t b = static_cast<uint32_t>(rng()) & 255;
        CHECK(gf256.trace(a ^ b) == (gf256.trace(a) ^ gf256.trace(b)));
    }
}

TEST_CASE("index and element are mutually inverse") {
    for (unsigned n : {1u, 3u, 8u}) {
        FieldSpec spec(n);
        std::set<uint32_t> seen;
        for (uint32_t i = 0; i < spec.order(); ++i) {
            FieldElement e = spec.element(i);
            CHECK(e.index() == i);
            seen.insert(e.index());
        }
        CHECK(seen.size() == spec.order());
        CHECK_THROWS_AS(spec.element(spec.order()), std::invalid_argument);
    }
    FieldSpec gf8(3);
    CHECK(gf8.element(0).is_zero());
    CHECK(gf8.element(2) == gf8.element(2));
}

TEST_CASE("element arithmetic refuses mixed fields") {
    FieldSpec a(3), b(3, 0xd);
    CHECK_THROWS_AS(a.element(1) + b.element(1), std::invalid_argument);
    CHECK_THROWS_AS(a.element(2) * b.element(2), std::invalid_argument);
}

TEST_CASE("hex serialization is lowercase hex of the coefficient integer") {
    FieldSpec gf4(2);
    CHECK(FieldElement(gf4, 3).to_hex() == "3");
    FieldSpec gf16(4);
    CHECK(FieldElement(gf16, 0xa).to_hex() == "a");
    CHECK(FieldElement::from_hex(gf16, "a").index() == 0xa);
    CHECK(FieldElement::from_hex(gf16, "0").is_zero());
    CHECK_THROWS_AS(FieldElement::from_hex(gf4, "4"), std::invalid_argument);
    CHECK_THROWS_AS(FieldElement::from_hex(gf4, "zz"), std::invalid_argument);
}

TEST_CASE("primitive element is the smallest-index generator") {
    CHECK(FieldSpec(1).primitive().index() == 1);
    CHECK(FieldSpec(2).primitive().index() == 2);
    CHECK(FieldSpec(3).primitive().index() == 2);
    CHECK(FieldSpec(4).primitive().index() == 2);
    for (unsigned n = 1; n <= 8; ++n) {
        FieldSpec spec(n);
        uint32_t alpha = spec.primitive().index();
        // verify the order by listing powers
        std::set<uint32_t> powers;
        uint32_t p = 1;
        for (uint32_t k = 0; k + 1 < spec.order(); ++k) {
            powers.insert(p);
            p = spec.mul(p, alpha);
        }
        CHECK(powers.size() == spec.order() - 1);
        // and that nothing smaller generates
        for (uint32_t smaller = 1; smaller < alpha; ++smaller) {
            std::set<uint32_t> sub;
            uint32_t sp = 1;
            for (uint32_t k = 0; k + 1 < spec.order(); ++k) {
                sub.insert(sp);
                sp = spec.mul(sp, smaller);
            }
            CHECK(sub.size() < spec.order() - 1);
        }
    }
}

TEST_CASE("basis construction rejects dependent sets") {
    FieldSpec gf8(3);
    CHECK_THROWS_AS(Basis(gf8, {gf8.element(1), gf8.element(2), gf8.element(3)}),
                    std::invalid_argument);  // 3 = 1 ^ 2
    CHECK_THROWS_AS(Basis(gf8, {gf8.element(1), gf8.element(2)}), std::invalid_argument);
    CHECK_THROWS_AS(Basis(gf8, {gf8.element(0), gf8.element(1), gf8.element(2)}),
                    std::invalid_argument);
    CHECK_NOTHROW(Basis(gf8, {gf8.element(1), gf8.element(2), gf8.element(4)}));
}

TEST_CASE("polynomial basis coordinates match element bits") {
    FieldSpec gf8(3);
    Basis poly = Basis::polynomial(gf8);
    CHECK(poly[0].index() == 1);
    CHECK(poly[1].index() == 2);
    CHECK(poly[2].index() == 4);
    for (uint32_t x = 0; x < 8; ++x) {
        CHECK(poly.coordinates(gf8.element(x)) == x);
        CHECK(poly.combine(x).index() == x);
    }
}

TEST_CASE("dual basis: brute-force cross-check in GF(4)") {
    FieldSpec gf4(2);
    Basis b(gf4, {gf4.element(1), gf4.element(2)});
    Basis d = b.dual();
    CHECK(d[0].index() == 3);
    CHECK(d[1].index() == 1);
    // brute force: the dual pair is unique
    for (uint32_t u = 0; u < 4; ++u)
        for (uint32_t v = 0; v < 4; ++v) {
            bool is_dual = gf4.trace(gf4.mul(1, u)) == 1 && gf4.trace(gf4.mul(2, u)) == 0 &&
                           gf4.trace(gf4.mul(1, v)) == 0 && gf4.trace(gf4.mul(2, v)) == 1;
            CHECK(is_dual == (u == 3 && v == 1));
        }
}

TEST_CASE("dual basis satisfies the delta condition and is an involution") {
    std::mt19937_64 rng(0xd0a1);
    for (unsigned n = 2; n <= 6; ++n) {
        FieldSpec spec(n);
        for (int t = 0; t < 20; ++t) {
            Basis b = random_basis(spec, rng);
            Basis d = b.dual();
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j)
                    CHECK(spec.trace((b[i] * d[j]).index()) == (i == j ? 1 : 0));
            CHECK(d.dual() == b);
        }
    }
}

TEST_CASE("coordinates and combine are mutually inverse over any basis") {
    std::mt19937_64 rng(0xc0de);
    FieldSpec spec(5);
    for (int t = 0; t < 10; ++t) {
        Basis b = random_basis(spec, rng);
        for (uint32_t x = 0; x < spec.order(); ++x) {
            uint32_t coords = b.coordinates(spec.element(x));
            CHECK(b.combine(coords).index() == x);
        }
    }
}

TEST_CASE("self-dual basis exists and checks out for n up to 8") {
    for (unsigned n = 2; n <= 8; ++n) {
        CAPTURE(n);
        FieldSpec spec(n);
        Basis sd = Basis::self_dual(spec);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                CHECK(spec.trace((sd[i] * sd[j]).index()) == (i == j ? 1 : 0));
        CHECK(sd.dual() == sd);
    }
}

TEST_CASE("irreducibility test agrees with trial division exhaustively") {
    for (uint32_t poly = 2; poly < (1u << 12); ++poly)
        CHECK(is_irreducible_f2(poly) == irreducible_by_trial_division(poly));
}
