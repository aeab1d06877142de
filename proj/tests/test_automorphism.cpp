#include <doctest.h>

#include <random>
#include <set>

#include "hq/automorphism.hpp"
#include "hq/error.hpp"

using namespace hq;
using namespace hq::autom;
using curves::HermitianForm;
using gf::Elem;

namespace {

// a random valid (a, b): pick a, then solve the form condition for b by scanning
Automorphism random_translation(const HermitianModel& m, std::mt19937_64& rng) {
    const auto& F = m.F();
    while (true) {
        const Elem a{static_cast<std::uint32_t>(rng() % F.size())};
        std::vector<Elem> bs;
        for (std::uint32_t v = 0; v < F.size(); ++v)
            if (is_valid(m, {a, Elem{v}, F.one()})) bs.push_back(Elem{v});
        if (!bs.empty()) return {a, bs[rng() % bs.size()], F.one()};
    }
}

Automorphism iterate(const HermitianModel& m, const Automorphism& f, std::uint64_t i) {
    Automorphism r = identity(m);
    for (std::uint64_t j = 0; j < i; ++j) r = compose(m, f, r);
    return r;
}

}  // namespace

TEST_SUITE("automorphism") {

TEST_CASE("identity and translations") {
    const auto m = hermitian_model(7, 1, HermitianForm::Plus);
    const auto pts = curves::enumerate_hermitian(m);
    const auto id = identity(m);
    for (const auto& pt : pts) REQUIRE(apply(m, id, pt) == pt);
    const auto& F = m.F();
    for (const auto& pt : pts) {
        if (pt.x != Elem{}) continue;
        const auto psi = make_automorphism(m, F.zero(), pt.y, F.one());
        CHECK(apply(m, psi, {F.zero(), F.zero()}) == AffinePoint{F.zero(), pt.y});
    }
    CHECK_THROWS_AS(make_automorphism(m, F.one(), F.zero(), F.one()), UsageError);
    CHECK_THROWS_AS(make_automorphism(m, F.zero(), F.zero(), F.zero()), UsageError);
    CHECK_THROWS_AS(apply(m, id, {F.one(), F.zero()}), UsageError);
}

TEST_CASE("translations have order p and match the closed form") {
    std::mt19937_64 rng(8);
    for (auto form : {HermitianForm::Plus, HermitianForm::Minus}) {
        for (auto [p, h] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}, {11, 1}, {5, 2}}) {
            const auto m = hermitian_model(p, h, form);
            for (int t = 0; t < 5; ++t) {
                const auto f = random_translation(m, rng);
                for (std::uint64_t i = 0; i <= p; ++i) {
                    const auto it = iterate(m, f, i);
                    REQUIRE(it == power(m, f, i));
                    if (i >= 1) REQUIRE(it == closed_form_power(m, f.a, f.b, i));
                }
                CHECK(power(m, f, p) == identity(m));
            }
        }
    }
}

TEST_CASE("composition, inverse and bijectivity") {
    std::mt19937_64 rng(12);
    const auto m = hermitian_model(7, 1, HermitianForm::Minus);
    const auto& F = m.F();
    const auto pts = curves::enumerate_hermitian(m);
    const std::set<AffinePoint> all(pts.begin(), pts.end());
    for (int t = 0; t < 10; ++t) {
        auto f = random_translation(m, rng);
        f.lambda = Elem{static_cast<std::uint32_t>(1 + rng() % (F.size() - 1))};
        REQUIRE(is_valid(m, f));
        const auto g = inverse(m, f);
        CHECK(compose(m, f, g) == identity(m));
        CHECK(compose(m, g, f) == identity(m));
        std::set<AffinePoint> image;
        for (const auto& pt : pts) image.insert(apply(m, f, pt));
        CHECK(image == all);
        const auto h = random_translation(m, rng);
        for (int s = 0; s < 20; ++s) {
            const auto& pt = pts[rng() % pts.size()];
            REQUIRE(apply(m, compose(m, f, h), pt) == apply(m, f, apply(m, h, pt)));
        }
    }
}

TEST_CASE("dp presets") {
    struct Case {
        PresetCase which;
        std::uint32_t p, h, d;
        bool abelian;
    };
    for (const auto& c : std::vector<Case>{{PresetCase::I, 7, 2, 5, true},
                                           {PresetCase::II, 11, 2, 5, false},
                                           {PresetCase::III, 11, 1, 5, false},
                                           {PresetCase::II, 7, 1, 3, false},
                                           {PresetCase::I, 5, 1, 3, true}}) {
        CAPTURE(c.p);
        CAPTURE(c.d);
        const auto g = build_dp_group(c.which, c.p, c.h, c.d);
        const auto& m = g.model;
        CHECK(g.elements.size() == static_cast<std::size_t>(c.d) * c.p);
        CHECK(g.abelian == c.abelian);
        CHECK(element_order(m, g.s, 1000) == c.p);
        CHECK(element_order(m, g.t, 1000) == c.d);
        const auto conj = compose(m, inverse(m, g.t), compose(m, g.s, g.t));
        CHECK(conj == power(m, g.s, g.conj_exponent));
        if (!c.abelian) CHECK(conj != g.s);

        const std::set<Automorphism> elems(g.elements.begin(), g.elements.end());
        CHECK(elems.count(identity(m)) == 1);
        std::mt19937_64 rng(c.p);
        for (const auto& e : g.elements) REQUIRE(elems.count(inverse(m, e)) == 1);
        for (int t = 0; t < 200; ++t) {
            const auto& a = g.elements[rng() % g.elements.size()];
            const auto& b = g.elements[rng() % g.elements.size()];
            const auto& e = g.elements[rng() % g.elements.size()];
            REQUIRE(elems.count(compose(m, a, b)) == 1);
            REQUIRE(compose(m, compose(m, a, b), e) == compose(m, a, compose(m, b, e)));
        }
        for (std::uint64_t i = 0; i <= static_cast<std::uint64_t>(c.d) * c.p; ++i) {
            REQUIRE(power(m, g.s, i) == iterate(m, g.s, i));
            REQUIRE(power(m, g.t, i) == iterate(m, g.t, i));
        }
    }
}

TEST_CASE("preset relations") {
    const auto g2 = build_dp_group(PresetCase::II, 11, 2, 5);
    const auto& F2 = g2.model.F();
    CHECK(F2.from_int(static_cast<std::int64_t>(g2.conj_exponent)) == F2.inv(F2.pow(g2.t.lambda, g2.model.q + 1)));
    const auto g3 = build_dp_group(PresetCase::III, 11, 1, 5);
    const auto& F3 = g3.model.F();
    CHECK(F3.mul(F3.from_int(static_cast<std::int64_t>(g3.conj_exponent)), g3.t.lambda) == F3.one());
    CHECK_THROWS_AS(build_dp_group(PresetCase::I, 7, 2, 3), UsageError);
    CHECK_THROWS_AS(build_dp_group(PresetCase::II, 7, 2, 5), UsageError);
    // closed form for the case III generator
    const auto& m = g3.model;
    for (std::uint64_t i = 1; i <= 11; ++i) CHECK(power(m, g3.s, i) == closed_form_power(m, g3.s.a, g3.s.b, i));
}

TEST_CASE("orbits partition the affine points") {
    for (auto [which, p, h, d] : std::vector<std::tuple<PresetCase, std::uint32_t, std::uint32_t, std::uint32_t>>{
             {PresetCase::I, 7, 2, 5}, {PresetCase::III, 11, 1, 5}, {PresetCase::II, 7, 1, 3}}) {
        const auto g = build_dp_group(which, p, h, d);
        const auto pts = curves::enumerate_hermitian(g.model);
        const auto part = orbits(g, pts);
        std::size_t total = 0;
        bool saw_regular = false;
        std::set<AffinePoint> seen;
        for (const auto& o : part.orbits) {
            total += o.size();
            REQUIRE((static_cast<std::size_t>(d) * p) % o.size() == 0);
            if (o.size() == static_cast<std::size_t>(d) * p) saw_regular = true;
            for (const auto& pt : o) REQUIRE(seen.insert(pt).second);
            // orbit equals the image of its first point under the whole group
            std::set<AffinePoint> image;
            for (const auto& e : g.elements) image.insert(apply(g.model, e, o.front()));
            REQUIRE(image == std::set<AffinePoint>(o.begin(), o.end()));
        }
        CHECK(total == g.model.q * g.model.q * g.model.q);
        CHECK(saw_regular);
        CHECK(part.infinity_fixed);
    }
}

}  // TEST_SUITE
