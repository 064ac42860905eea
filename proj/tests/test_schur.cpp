#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icb/schur.hpp"
#include "support/testutil.hpp"

using namespace icb;
using icb::testutil::Rng;
using icb::testutil::random_tpoly;

TEST_CASE("projection") {
    for (std::int64_t d = 0; d <= 40; ++d) CHECK(project(minpoly(d), d).is_zero());
    for (std::int64_t d = 0; d <= 30; ++d) CHECK(project(p0(d + 2), d).is_zero());
    for (std::int64_t d = 0; d <= 30; ++d) {
        const SchurElement x = project(p0(d), d);
        CHECK(!x.is_zero());
        CHECK(x.rep().degree() == d);
        CHECK(x.rep() == p0(d));
    }
    CHECK_THROWS_AS(project(TPoly(1), -1), std::domain_error);
}

TEST_CASE("projection is a ring homomorphism") {
    Rng rng(47);
    for (int i = 0; i < 50; ++i) {
        const TPoly p = random_tpoly(rng, 25, 2, 2, 2);
        const TPoly q = random_tpoly(rng, 25, 2, 2, 2);
        std::uniform_int_distribution<std::int64_t> level(0, 20);
        const std::int64_t d = level(rng);
        CHECK(project(p * q, d) == multiply(project(p, d), project(q, d)));
        CHECK(project(p + q, d) == add(project(p, d), project(q, d)));
    }
}

TEST_CASE("transfer") {
    for (std::int64_t d = 0; d <= 40; ++d) {
        CHECK(transfer(project(p1(d + 1), d + 2)) == project(p0(d), d));
        CHECK(transfer(project(TPoly(1), d + 2)) == project(TPoly(1), d));
        CHECK(transfer(project(p0(d + 2), d + 2)).is_zero());
    }
    CHECK_THROWS_AS(transfer(project(TPoly(1), 1)), std::domain_error);
    CHECK_THROWS_AS(transfer(project(TPoly(1), 0)), std::domain_error);
}

TEST_CASE("tower coherence") {
    Rng rng(53);
    for (int i = 0; i < 40; ++i) {
        std::uniform_int_distribution<std::int64_t> level(0, 26);
        const std::int64_t d = level(rng);
        const TPoly p = random_tpoly(rng, d + 6, 2, 2, 2);
        CHECK(transfer(transfer(project(p, d + 4))) == project(p, d));
    }
}

TEST_CASE("canonical basis lists") {
    {
        auto lst = cb_list(0);
        REQUIRE(lst.size() == 1);
        CHECK(lst[0].first == CBIndex{0, 0});
        CHECK(lst[0].second.rep() == TPoly(1));
    }
    {
        auto lst = cb_list(2);
        REQUIRE(lst.size() == 3);
        CHECK(lst[0].first == CBIndex{0, 2});
        CHECK(lst[1].first == CBIndex{1, 1});
        CHECK(lst[2].first == CBIndex{0, 0});
    }
    {
        auto lst = cb_list(3);
        REQUIRE(lst.size() == 4);
        CHECK(lst[0].first == CBIndex{0, 3});
        CHECK(lst[1].first == CBIndex{1, 2});
        CHECK(lst[2].first == CBIndex{0, 1});
        CHECK(lst[3].first == CBIndex{1, 0});  // degree-0 member is the unit class
        CHECK(lst[3].second.rep() == TPoly(1));
    }
    for (std::int64_t d = 0; d <= 30; ++d) {
        auto lst = cb_list(d);
        CHECK(static_cast<std::int64_t>(lst.size()) == d + 1);
        std::vector<bool> seen(static_cast<std::size_t>(d + 1), false);
        for (const auto& [idx, elt] : lst) {
            CHECK(summand_of(idx) == d % 2);
            const std::int64_t deg = elt.rep().degree();
            REQUIRE(deg >= 0);
            REQUIRE(deg <= d);
            CHECK(!seen[static_cast<std::size_t>(deg)]);
            seen[static_cast<std::size_t>(deg)] = true;
        }
    }
}

TEST_CASE("basis-image verdicts") {
    for (std::int64_t d = 0; d <= 20; ++d) {
        {
            auto r = cb_image_check(basis_index(d % 2, d), d);
            CHECK(r.verdict == CBImage::maps_to_cb);
            CHECK(!r.not_applicable);
        }
        {
            auto r = cb_image_check(basis_index(d % 2, d + 2), d);
            CHECK(r.verdict == CBImage::maps_to_zero);
            CHECK(!r.not_applicable);
        }
        {
            // (1, d+1) lies in the summand of parity d and projects to P_{0,d}
            auto r = cb_image_check(CBIndex{1, d + 1}, d);
            REQUIRE(r.verdict == CBImage::maps_to_cb);
            REQUIRE(r.image.has_value());
            CHECK(*r.image == CBIndex{0, d});
        }
        {
            auto r = cb_image_check(basis_index((d + 1) % 2, d), d);
            CHECK(r.verdict == CBImage::maps_to_zero);
            CHECK(r.not_applicable);
        }
    }
}

TEST_CASE("nilpotence bound") {
    for (std::int64_t d = 0; d <= 40; ++d) {
        for (std::int64_t m = d % 2; m <= 40; m += 2) {
            const bool vanishes = project(p0(m), d).is_zero();
            CHECK(vanishes == (m > d));
        }
    }
}

TEST_CASE("reduced representative invariant") {
    CHECK_THROWS_AS(SchurElement(2, p0(4)), std::domain_error);
    const SchurElement x = project(p0(4), 2);
    CHECK(x.rep().degree() <= 2);
}
