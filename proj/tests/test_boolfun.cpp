#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "aimm/boolfun.hpp"

using namespace aimm;

namespace {

// Independent Moebius oracle: coefficient at mask m is the XOR of f over
// the subcube of points covered by m.
AnfPoly anf_by_subset_sums(const TruthTable& f) {
    AnfPoly p(f.n());
    for (uint32_t m = 0; m < f.size(); ++m) {
        int acc = 0;
        uint32_t sub = m;
        for (;;) {
            acc ^= f.get(sub);
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
        if (acc) p.toggle(m);
    }
    return p;
}

}  // namespace

TEST_CASE("hex parsing and printing round-trip, majority example") {
    TruthTable maj = TruthTable::from_hex(3, "e8");
    CHECK(maj.to_hex() == "e8");
    CHECK(maj.weight() == 4);
    CHECK(maj.is_balanced());
    for (uint32_t i = 0; i < 8; ++i)
        CHECK(maj.get(i) == (std::popcount(i) >= 2 ? 1 : 0));

    CHECK(TruthTable::from_hex(1, "2").get(1) == 1);
    CHECK(TruthTable::from_hex(4, "17e8").to_hex() == "17e8");
    CHECK_THROWS_AS(TruthTable::from_hex(3, "e"), std::invalid_argument);    // too short
    CHECK_THROWS_AS(TruthTable::from_hex(3, "0e8"), std::invalid_argument);  // too long
    CHECK_THROWS_AS(TruthTable::from_hex(3, "g8"), std::invalid_argument);
    CHECK_THROWS_AS(TruthTable::from_hex(1, "4"), std::invalid_argument);  // bit outside 2^n
}

TEST_CASE("hex round-trips across word boundaries") {
    std::mt19937_64 rng(11);
    for (unsigned n : {5u, 6u, 7u, 8u}) {
        for (int t = 0; t < 50; ++t) {
            TruthTable f = TruthTable::random(n, rng);
            CHECK(TruthTable::from_hex(n, f.to_hex()) == f);
        }
    }
}

TEST_CASE("constants, weight, support") {
    TruthTable ones = TruthTable::constant(3, 1);
    CHECK(ones.weight() == 8);
    CHECK_FALSE(ones.is_balanced());
    CHECK(TruthTable::constant(3, 0).weight() == 0);
    CHECK(TruthTable::constant(3, 0).is_zero());

    TruthTable f = TruthTable::from_hex(3, "a1");  // bits 0, 5, 7
    CHECK(f.support() == std::vector<uint32_t>{0, 5, 7});
}

TEST_CASE("majority ANF is the three pair products") {
    AnfPoly p = anf_from_tt(TruthTable::from_hex(3, "e8"));
    CHECK(p.terms() == std::set<uint32_t>{3, 5, 6});
    CHECK(p.degree() == 2);
    CHECK(p.to_string() == "x1*x2 + x1*x3 + x2*x3");
}

TEST_CASE("ANF degree sentinel and simple cases") {
    CHECK(AnfPoly(3).degree() == -1);
    CHECK(AnfPoly(3).to_string() == "0");
    AnfPoly cube(3);
    cube.toggle(7);
    CHECK(cube.degree() == 3);
    AnfPoly one(3);
    one.toggle(0);
    CHECK(one.degree() == 0);
    CHECK(one.to_string() == "1");
}

TEST_CASE("Moebius transform round-trips") {
    for (uint32_t v = 0; v < 256; ++v) {
        TruthTable f(3);
        for (uint32_t i = 0; i < 8; ++i) f.set(i, (v >> i) & 1);
        CHECK(tt_from_anf(anf_from_tt(f)) == f);
    }
    std::mt19937_64 rng(42);
    for (int t = 0; t < 1000; ++t) {
        TruthTable f = TruthTable::random(8, rng);
        CHECK(tt_from_anf(anf_from_tt(f)) == f);
    }
}

TEST_CASE("butterfly Moebius agrees with the subset-sum oracle") {
    std::mt19937_64 rng(7);
    // n spanning the intra-word and multi-word code paths
    for (unsigned n : {2u, 3u, 6u, 7u, 8u}) {
        for (int t = 0; t < 30; ++t) {
            TruthTable f = TruthTable::random(n, rng);
            CHECK(anf_from_tt(f) == anf_by_subset_sums(f));
        }
    }
}

TEST_CASE("ANF evaluation matches the truth table") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        TruthTable f = TruthTable::random(5, rng);
        AnfPoly p = anf_from_tt(f);
        for (uint32_t i = 0; i < f.size(); ++i) CHECK(p.evaluate(i) == f.get(i));
    }
}

TEST_CASE("ANF parser") {
    CHECK(AnfPoly::parse(3, "x1*x2 + x1*x3 + x2*x3").terms() == std::set<uint32_t>{3, 5, 6});
    CHECK(AnfPoly::parse(3, "1").terms() == std::set<uint32_t>{0});
    CHECK(AnfPoly::parse(3, "0").is_zero());
    CHECK(AnfPoly::parse(3, "x1 + x1").is_zero());  // mod 2 cancellation
    CHECK(AnfPoly::parse(3, "1 + x3").to_string() == "1 + x3");
    CHECK_THROWS_AS(AnfPoly::parse(3, "x4"), std::invalid_argument);
    CHECK_THROWS_AS(AnfPoly::parse(3, "x0"), std::invalid_argument);
    CHECK_THROWS_AS(AnfPoly::parse(3, "x1**x2"), std::invalid_argument);
    CHECK_THROWS_AS(AnfPoly::parse(3, "2"), std::invalid_argument);
    CHECK_THROWS_AS(AnfPoly::parse(3, ""), std::invalid_argument);

    std::mt19937_64 rng(99);
    for (int t = 0; t < 50; ++t) {
        AnfPoly p = anf_from_tt(TruthTable::random(4, rng));
        CHECK(AnfPoly::parse(4, p.to_string()) == p);
    }
}

TEST_CASE("pointwise product and complement") {
    for (uint32_t v = 0; v < 256; ++v) {
        TruthTable f(3);
        for (uint32_t i = 0; i < 8; ++i) f.set(i, (v >> i) & 1);
        CHECK((f & f.complement()).is_zero());
        CHECK(f.complement().complement() == f);
        CHECK(f.weight() + f.complement().weight() == 8);
        CHECK((f & TruthTable::constant(3, 1)) == f);
    }
    TruthTable a(2), b(3);
    CHECK_THROWS_AS(a & b, std::invalid_argument);
    CHECK_THROWS_AS(a ^ b, std::invalid_argument);
}

TEST_CASE("product degree is subadditive") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        TruthTable f = TruthTable::random(5, rng);
        TruthTable g = TruthTable::random(5, rng);
        int df = anf_from_tt(f).degree();
        int dg = anf_from_tt(g).degree();
        int dfg = anf_from_tt(f & g).degree();
        if (dfg >= 0) {
            CHECK(df >= 0);
            CHECK(dg >= 0);
            CHECK(dfg <= df + dg);
        }
    }
}

TEST_CASE("complement at non-word-aligned sizes leaves no spill bits") {
    for (unsigned n : {1u, 2u, 5u}) {
        TruthTable z(n);
        TruthTable ones = z.complement();
        CHECK(ones.weight() == (1u << n));
        CHECK(ones == TruthTable::constant(n, 1));
        CHECK(ones.to_hex() == TruthTable::constant(n, 1).to_hex());
    }
}
