#include <doctest.h>

#include <random>
#include <set>

#include "hq/curves.hpp"
#include "hq/error.hpp"

using namespace hq;
using namespace hq::curves;
using gf::Elem;

namespace {

// every (x, y) pair in the field, tested against the equation
std::vector<AffinePoint> scan_points(const CurveSpec& spec) {
    const auto& F = spec.F();
    std::vector<AffinePoint> pts;
    for (std::uint32_t x = 0; x < F.size(); ++x)
        for (std::uint32_t y = 0; y < F.size(); ++y)
            if (on_curve(spec, {Elem{x}, Elem{y}})) pts.push_back({Elem{x}, Elem{y}});
    return pts;
}

std::uint64_t hasse_weil(const CurveSpec& s) { return s.q * s.q + 2 * s.genus * s.q + 1; }

}  // namespace

TEST_SUITE("curves") {

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(build_curve(Family::FamilyI, 7, 2, 5));
    const auto ex2 = build_curve(Family::FamilyI, 5, 3, 3);
    CHECK(ex2.warnings.size() == 1);
    CHECK_THROWS_AS(build_curve(Family::FamilyI, 5, 3, 3, true), UsageError);
    CHECK_THROWS_AS(build_curve(Family::FamilyII, 7, 2, 5), UsageError);
    CHECK_THROWS_AS(build_curve(Family::FamilyI, 9, 1, 5), UsageError);
    CHECK_THROWS_AS(build_curve(Family::Hermitian, 2, 3, std::nullopt), UsageError);
    CHECK_THROWS_AS(build_curve(Family::Hermitian, 5, 0, std::nullopt), UsageError);
    CHECK_THROWS_AS(build_curve(Family::FamilyI, 7, 2, std::nullopt), UsageError);
    CHECK_THROWS_AS(build_curve(Family::FamilyI, 7, 2, 25), UsageError);
    CHECK_THROWS_AS(build_curve(Family::FamilyII, 11, 1, 11), UsageError);
    const auto h3 = build_curve(Family::Hermitian, 3, 1, std::nullopt);
    CHECK_FALSE(h3.warnings.empty());
    CHECK_THROWS_AS(build_curve(Family::Hermitian, 3, 1, std::nullopt, true), UsageError);
}

TEST_CASE("family names round trip") {
    for (auto f : {Family::Hermitian, Family::IntermediateCenter, Family::IntermediateNoncenter, Family::FamilyI,
                   Family::FamilyII, Family::FamilyIII})
        CHECK(parse_family(family_name(f)) == f);
    CHECK_THROWS_AS(parse_family("IV"), UsageError);
}

TEST_CASE("genus values") {
    CHECK(genus_formula(Family::FamilyI, 7, 2, 5) == 27);
    CHECK(genus_formula(Family::FamilyI, 5, 3, 3) == 492);
    CHECK(genus_formula(Family::FamilyIII, 11, 1, 5) == 1);
    CHECK(genus_formula(Family::FamilyI, 5, 2, 13) == 2);
    CHECK(genus_formula(Family::Hermitian, 5, 1, std::nullopt) == 10);
    CHECK(genus_formula(Family::IntermediateCenter, 7, 2, std::nullopt) == 147);
    CHECK(genus_formula(Family::IntermediateNoncenter, 7, 2, std::nullopt) == 168);
}

TEST_CASE("origin lies on families I and II") {
    const auto s1 = build_curve(Family::FamilyI, 7, 2, 5);
    CHECK(equation_eval(s1, {Elem{}, Elem{}}) == Elem{});
    const auto s2 = build_curve(Family::FamilyII, 11, 2, 5);
    CHECK(equation_eval(s2, {Elem{}, Elem{}}) == Elem{});
}

TEST_CASE("enumeration equals exhaustive scan") {
    struct Case {
        Family f;
        std::uint32_t p, h;
        std::optional<std::uint32_t> d;
    };
    for (const auto& c : std::vector<Case>{{Family::Hermitian, 5, 1, {}},
                                           {Family::Hermitian, 7, 1, {}},
                                           {Family::FamilyI, 5, 2, 13},
                                           {Family::FamilyII, 11, 1, 5},
                                           {Family::FamilyIII, 11, 1, 5},
                                           {Family::IntermediateCenter, 5, 2, {}},
                                           {Family::IntermediateNoncenter, 5, 2, {}},
                                           {Family::FamilyII, 7, 1, 3},
                                           {Family::FamilyIII, 7, 1, 3}}) {
        CAPTURE(family_name(c.f));
        CAPTURE(c.p);
        const auto spec = build_curve(c.f, c.p, c.h, c.d);
        const auto table = enumerate_points(spec);
        auto scanned = scan_points(spec);
        if (c.f == Family::FamilyIII) {
            std::vector<AffinePoint> affine;
            std::vector<AffinePoint> on_axis;
            for (const auto& pt : scanned) (pt.x == Elem{} ? on_axis : affine).push_back(pt);
            CHECK(table.points == affine);
            CHECK(table.cleared_locus == on_axis);
        } else {
            CHECK(table.points == scanned);
        }
    }
}

TEST_CASE("hermitian curves have q^3 affine points") {
    for (auto [p, h] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 1}, {11, 1}, {5, 2}}) {
        const auto spec = build_curve(Family::Hermitian, p, h, std::nullopt);
        const auto r = maximality_audit(spec);
        CHECK(r.affine == spec.q * spec.q * spec.q);
        CHECK(r.expected_total == spec.q * spec.q * spec.q + 1);
        CHECK(r.deficit == 1);
        CHECK(r.pass);
    }
}

TEST_CASE("maximality of the target families") {
    SUBCASE("family I") {
        const auto s = build_curve(Family::FamilyI, 7, 2, 5);
        const auto r = maximality_audit(s);
        CHECK(r.affine == 5047);
        CHECK(r.expected_total == 5048);
        CHECK(r.deficit == 1);
        CHECK(r.pass);
        const auto s2 = build_curve(Family::FamilyI, 5, 2, 13);
        CHECK(maximality_audit(s2).affine == 725);
    }
    SUBCASE("family III keeps the cleared locus apart") {
        const auto s = build_curve(Family::FamilyIII, 11, 1, 5);
        const auto r = maximality_audit(s);
        CHECK(r.expected_total == 144);
        CHECK(r.affine + static_cast<std::uint64_t>(r.deficit) == 144);
        CHECK(r.deficit >= 1);
        CHECK(r.cleared_locus >= 1);
        CHECK(r.pass);
    }
    SUBCASE("intermediate quotients") {
        for (auto f : {Family::IntermediateCenter, Family::IntermediateNoncenter}) {
            const auto s = build_curve(f, 5, 2, std::nullopt);
            const auto r = maximality_audit(s);
            CHECK(r.affine + 1 == hasse_weil(s));
            CHECK(r.pass);
        }
    }
    SUBCASE("family II") {
        const auto s = build_curve(Family::FamilyII, 11, 1, 5);
        const auto r = maximality_audit(s);
        CHECK(r.deficit >= 1);
        CHECK(static_cast<std::uint64_t>(r.deficit) <= r.bound);
        CHECK(r.affine + static_cast<std::uint64_t>(r.deficit) == hasse_weil(s));
    }
}

TEST_CASE("points are never more than the Hasse-Weil bound allows") {
    for (auto [f, p, h, d] : std::vector<std::tuple<Family, std::uint32_t, std::uint32_t, std::optional<std::uint32_t>>>{
             {Family::FamilyII, 7, 2, 3}, {Family::FamilyIII, 7, 2, 3}, {Family::FamilyI, 5, 2, 13}}) {
        const auto s = build_curve(f, p, h, d);
        const auto r = maximality_audit(s);
        CHECK(r.deficit >= 0);
    }
}

TEST_CASE("random pairs are rarely on the curve") {
    const auto s = build_curve(Family::FamilyI, 7, 2, 5);
    const auto& F = s.F();
    std::mt19937_64 rng(2);
    int hits = 0;
    for (int t = 0; t < 1000; ++t)
        if (on_curve(s, {Elem{static_cast<std::uint32_t>(rng() % F.size())}, Elem{static_cast<std::uint32_t>(rng() % F.size())}}))
            ++hits;
    // expected 1000 * 5047 / 2401^2 < 1
    CHECK(hits <= 5);
    for (const auto& pt : enumerate_points(s).points) REQUIRE(equation_eval(s, pt) == Elem{});
}

TEST_CASE("enumeration does not depend on the thread count") {
    const auto s = build_curve(Family::FamilyII, 11, 1, 5);
    const auto a = enumerate_points(s, {1ull << 24, 1ull << 30, 1});
    const auto b = enumerate_points(s, {1ull << 24, 1ull << 30, 3});
    CHECK(a.points == b.points);
    const auto s3 = build_curve(Family::FamilyIII, 11, 1, 5);
    CHECK(enumerate_points(s3, {1ull << 24, 1ull << 30, 1}).points ==
          enumerate_points(s3, {1ull << 24, 1ull << 30, 4}).points);
}

TEST_CASE("enumeration budget") {
    const auto s = build_curve(Family::FamilyI, 7, 2, 5);
    CHECK_THROWS_AS(enumerate_points(s, {1000, 1ull << 30, 0}), BudgetExceeded);
    const auto s3 = build_curve(Family::FamilyIII, 11, 1, 5);
    CHECK_THROWS_AS(enumerate_points(s3, {1ull << 24, 1000, 0}), BudgetExceeded);
}

TEST_CASE("hermitian forms") {
    for (auto form : {HermitianForm::Plus, HermitianForm::Minus}) {
        const auto m = hermitian_model(7, 1, form);
        const auto pts = enumerate_hermitian(m);
        CHECK(pts.size() == 343);
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        for (const auto& pt : pts) REQUIRE(m.on_curve(pt));
    }
}

}  // TEST_SUITE
