#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/error.hpp"
#include "mcg/surface.hpp"

using namespace mcg;

TEST_CASE("euler characteristic") {
    CHECK(euler(Surface{false, 1, 0}) == 1);
    CHECK(euler(Surface{false, 2, 0}) == 0);
    CHECK(euler(Surface{false, 3, 1}) == -2);
    CHECK(euler(Surface{true, 0, 0}) == 2);
    CHECK(euler(Surface{true, 1, 2}) == -2);
    CHECK(euler(Surface{true, 2, 0}) == -2);
}

TEST_CASE("classify_from_chi inverts euler") {
    for (int g = 1; g <= 6; ++g)
        for (int n = 0; n <= 5; ++n) {
            Surface s{false, g, n};
            CHECK(classify_from_chi(false, euler(s), n) == s);
        }
    for (int g = 0; g <= 3; ++g)
        for (int n = 0; n <= 5; ++n) {
            Surface s{true, g, n};
            CHECK(classify_from_chi(true, euler(s), n) == s);
        }
}

TEST_CASE("classify_from_chi rejects impossible data") {
    CHECK_THROWS_AS(classify_from_chi(true, -1, 0), error);
    try {
        classify_from_chi(true, -1, 0);
    } catch (const error& e) {
        CHECK(e.code() == errc::parity);
    }
    try {
        classify_from_chi(true, 4, 0);
    } catch (const error& e) {
        CHECK(e.code() == errc::negative_genus);
    }
    // chi = 2, n = 0 forces genus 0, impossible non-orientably
    try {
        classify_from_chi(false, 2, 0);
    } catch (const error& e) {
        CHECK(e.code() == errc::negative_genus);
    }
    CHECK_THROWS_AS(classify_from_chi(false, 0, -1), error);
}

TEST_CASE("sporadic region") {
    for (int n = 0; n <= 4; ++n) CHECK(is_sporadic(1, n));
    CHECK_FALSE(is_sporadic(1, 5));
    for (int n = 0; n <= 3; ++n) CHECK(is_sporadic(2, n));
    CHECK_FALSE(is_sporadic(2, 4));
    for (int n = 0; n <= 2; ++n) CHECK(is_sporadic(3, n));
    CHECK_FALSE(is_sporadic(3, 3));
    CHECK_FALSE(is_sporadic(4, 0));
    CHECK_FALSE(is_sporadic(5, 2));
}

TEST_CASE("names") {
    CHECK(to_string(Surface{false, 3, 2}) == "N_3^2");
    CHECK(to_string(Surface{true, 1, 0}) == "S_1^0");
}
