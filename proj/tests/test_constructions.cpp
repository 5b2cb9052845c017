#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aimm/annihilator.hpp"
#include "aimm/constructions.hpp"

using namespace aimm;

TEST_CASE("majority truth tables") {
    CHECK(majority(1).to_hex() == "2");
    CHECK(majority(2).to_hex() == "8");
    CHECK(majority(3).to_hex() == "e8");
    CHECK(majority(4).to_hex() == "e880");
    CHECK(majority(3).is_balanced());
    CHECK_FALSE(majority(4).is_balanced());  // even n, ties map to 0
    CHECK_THROWS_AS(majority(0), std::invalid_argument);
}

TEST_CASE("carlet-feng support and weight") {
    CHECK(carlet_feng(FieldSpec(2)).to_hex() == "3");
    CHECK(carlet_feng(FieldSpec(3)).to_hex() == "17");
    CHECK(carlet_feng(FieldSpec(4)).to_hex() == "115f");
    for (unsigned n = 2; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(carlet_feng(FieldSpec(n)).weight() == 1u << (n - 1));
        CHECK(carlet_feng(FieldSpec(n), CfSupport::powers_only).weight() == 1u << (n - 1));
    }
    CHECK(carlet_feng(FieldSpec(3)).get(0) == 1);
    CHECK(carlet_feng(FieldSpec(3), CfSupport::powers_only).get(0) == 0);
    CHECK(carlet_feng(FieldSpec(3), CfSupport::powers_only).to_hex() == "1e");
    CHECK_THROWS_AS(carlet_feng(FieldSpec(1)), std::invalid_argument);
}

TEST_CASE("construction immunities reach the upper bound") {
    for (unsigned n = 2; n <= 6; ++n) {
        CAPTURE(n);
        FieldSpec spec(n);
        CHECK(algebraic_immunity(carlet_feng(spec)).ai == (n + 1) / 2);
        CHECK(algebraic_immunity(carlet_feng(spec, CfSupport::powers_only)).ai ==
              (n + 1) / 2);
    }
    for (unsigned n : {1u, 3u, 5u}) {
        CAPTURE(n);
        CHECK(algebraic_immunity(majority(n)).ai == (n + 1) / 2);
    }
}

TEST_CASE("carlet-feng at n=3 is perfectly immune") {
    FieldSpec gf8(3);
    CHECK(is_pai(carlet_feng(gf8), Mode::base_field, gf8));
    CHECK(is_pai(carlet_feng(gf8), Mode::extension_field, gf8));
}
