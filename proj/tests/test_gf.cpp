#include <doctest.h>

#include <random>
#include <set>

#include "hq/error.hpp"
#include "hq/gf.hpp"
#include "oracles.hpp"

using namespace hq::gf;

namespace {

Elem random_elem(const Field& F, std::mt19937_64& rng) {
    return Elem{static_cast<std::uint32_t>(rng() % F.size())};
}

Elem random_nonzero(const Field& F, std::mt19937_64& rng) {
    return Elem{static_cast<std::uint32_t>(1 + rng() % (F.size() - 1))};
}

// lexicographically least irreducible by trial division, same candidate order
oracle::Poly least_irreducible(std::uint32_t p, std::uint32_t k) {
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < k; ++i) size *= p;
    for (std::uint64_t rank = 0; rank < size; ++rank) {
        oracle::Poly f(k + 1, 0);
        f[k] = 1;
        std::uint64_t r = rank;
        for (std::uint32_t i = k; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
        if (oracle::irreducible_by_trial_division(f, p)) return f;
    }
    return {};
}

}  // namespace

TEST_SUITE("gf") {

TEST_CASE("prime field uses modulus X") {
    auto F = make_field(7, 1);
    CHECK(F->modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(F->size() == 7);
    CHECK(F->inv(F->from_int(3)) == F->from_int(5));
    CHECK(F->from_int(-1) == F->from_int(6));
}

TEST_CASE("modulus matches exhaustive trial-division search") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 4}, {5, 6}, {5, 2}, {7, 2}, {11, 2}, {5, 4}, {3, 5}}) {
        CAPTURE(p);
        CAPTURE(k);
        auto F = make_field(p, k);
        CHECK(F->modulus() == least_irreducible(p, k));
    }
}

TEST_CASE("reducible modulus and bad parameters are rejected") {
    CHECK_THROWS_AS(make_field(6, 2), hq::UsageError);
    CHECK_THROWS_AS(make_field(7, 0), hq::UsageError);
    CHECK_THROWS_AS(Field(5, 2, {1, 0, 1}), hq::UsageError);  // X^2 + 1 = (X-2)(X-3) over F_5
    CHECK_THROWS_AS(Field(5, 2, {1, 0, 2}), hq::UsageError);  // not monic
}

TEST_CASE("multiplication agrees with schoolbook reduction") {
    std::mt19937_64 rng(11);
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 4}, {5, 6}, {13, 2}}) {
        auto F = make_field(p, k);
        for (int t = 0; t < 500; ++t) {
            const Elem a = random_elem(*F, rng), b = random_elem(*F, rng);
            const auto ref = oracle::mul_mod(F->coeffs(a), F->coeffs(b), F->modulus(), p);
            CHECK(F->coeffs(F->mul(a, b)) == ref);
        }
    }
}

TEST_CASE("large field without tables agrees with reduction") {
    auto F = make_field(5, 10);  // 9765625 elements: polynomial path
    CHECK_FALSE(F->has_tables());
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const Elem a = random_elem(*F, rng), b = random_nonzero(*F, rng);
        CHECK(F->coeffs(F->mul(a, b)) == oracle::mul_mod(F->coeffs(a), F->coeffs(b), F->modulus(), 5));
        CHECK(F->mul(F->div(a, b), b) == a);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(3);
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 4}, {5, 6}, {11, 2}}) {
        auto F = make_field(p, k);
        for (int t = 0; t < 1000; ++t) {
            const Elem a = random_elem(*F, rng), b = random_elem(*F, rng), c = random_elem(*F, rng);
            REQUIRE(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            REQUIRE(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            REQUIRE(F->add(a, F->neg(a)) == F->zero());
            REQUIRE(F->sub(F->add(a, b), b) == a);
        }
    }
}

TEST_CASE("zero, one and inverses") {
    auto F = make_field(7, 2);
    CHECK(F->coeffs(F->zero()) == std::vector<std::uint32_t>{0, 0});
    CHECK(F->coeffs(F->one()) == std::vector<std::uint32_t>{1, 0});
    CHECK(F->inv(F->one()) == F->one());
    CHECK_THROWS_AS(F->inv(F->zero()), std::domain_error);
    for (std::uint32_t v = 1; v < F->size(); ++v) {
        const Elem a{v};
        REQUIRE(F->mul(a, F->inv(a)) == F->one());
        REQUIRE(F->pow(a, 48) == F->one());
    }
}

TEST_CASE("frobenius orbit closure, exhaustive on small fields") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 2}, {5, 4}, {7, 4}, {3, 8}}) {
        auto F = make_field(p, k);
        for (std::uint32_t v = 0; v < F->size(); ++v) {
            const Elem e{v};
            REQUIRE(F->frobenius(e, k) == e);
            REQUIRE(F->frobenius(e, 0) == e);
            REQUIRE(F->frobenius(e, 1) == F->pow(e, p));
        }
    }
}

TEST_CASE("frobenius is a field automorphism on samples") {
    std::mt19937_64 rng(7);
    auto F = make_field(5, 6);
    for (int t = 0; t < 1000; ++t) {
        const Elem a = random_elem(*F, rng), b = random_elem(*F, rng);
        REQUIRE(F->frobenius(F->add(a, b), 1) == F->add(F->frobenius(a, 1), F->frobenius(b, 1)));
        REQUIRE(F->frobenius(F->mul(a, b), 1) == F->mul(F->frobenius(a, 1), F->frobenius(b, 1)));
        REQUIRE(F->frobenius(a, 6) == a);
    }
}

TEST_CASE("prime subfield is fixed by frobenius") {
    auto F = make_field(7, 2);
    for (std::int64_t c = 0; c < 7; ++c) {
        const Elem e = F->from_int(c);
        CHECK(F->in_prime_field(e));
        CHECK(F->frobenius(e, 1) == e);
    }
}

TEST_CASE("trace") {
    auto F = make_field(5, 2);
    CHECK(F->trace(F->zero()) == F->zero());
    std::size_t zero_trace = 0;
    for (std::uint32_t v = 0; v < F->size(); ++v) {
        const Elem e{v};
        CHECK(F->trace(e, 1) == e);
        CHECK(F->in_prime_field(F->trace(e)));
        if (F->trace(e) == F->zero()) ++zero_trace;
    }
    CHECK(zero_trace == 5);
}

TEST_CASE("omega") {
    for (auto [p, h] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 2}, {11, 1}, {5, 3}}) {
        auto F = make_field(p, 2 * h);
        const std::uint64_t q = ipow(p, h);
        const Elem w = find_omega(*F);
        CHECK(F->pow(w, q - 1) == F->neg(F->one()));
        CHECK(F->pow(w, 2 * (q - 1)) == F->one());
        CHECK_FALSE(F->in_subfield(w, h));
        CHECK(find_omega(*F) == w);
    }
    CHECK_THROWS(find_omega(*make_field(7, 3)));
}

TEST_CASE("text form round trip") {
    auto F = make_field(7, 4);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const Elem e = random_elem(*F, rng);
        REQUIRE(F->parse(F->to_text(e)) == e);
    }
    CHECK(F->to_text(F->one()) == "1,0,0,0");
    CHECK_THROWS(F->parse("1,2"));
    CHECK_THROWS(F->parse("1,2,3,9"));
}

TEST_CASE("handle order is lexicographic coefficient order") {
    auto F = make_field(5, 2);
    for (std::uint32_t a = 0; a + 1 < F->size(); ++a) REQUIRE(F->coeffs(Elem{a}) < F->coeffs(Elem{a + 1}));
}

TEST_CASE("field element context checks") {
    auto F = make_field(7, 2);
    auto G = make_field(7, 4);
    FieldElement a(F, F->from_int(3));
    FieldElement b(G, G->from_int(3));
    CHECK_THROWS_AS(a + b, hq::UsageError);
    FieldElement same(make_field(7, 2), F->from_int(3));
    CHECK(a == same);  // equal contexts are interchangeable
    FieldElement c(F, F->from_int(5));
    CHECK((a * c).raw() == F->one());
    CHECK((a * a.inv()).raw() == F->one());
}

TEST_CASE("additive solver") {
    auto F = make_field(7, 2);
    SUBCASE("identity operator") {
        AdditiveOperator id{{{F->one(), 0}}};
        for (std::uint32_t v = 0; v < F->size(); ++v) CHECK(additive_solve(*F, id, Elem{v}) == std::vector<Elem>{Elem{v}});
    }
    SUBCASE("artin-schreier kernel is the prime field") {
        AdditiveOperator as{{{F->one(), 1}, {F->neg(F->one()), 0}}};
        const auto roots = additive_solve(*F, as, F->zero());
        CHECK(roots.size() == 7);
        for (auto r : roots) CHECK(F->in_prime_field(r));
    }
    SUBCASE("brute-force scan agrees") {
        std::mt19937_64 rng(9);
        for (int t = 0; t < 20; ++t) {
            AdditiveOperator op;
            for (std::uint32_t i = 0; i < 2; ++i) op.terms.push_back({random_elem(*F, rng), i});
            const AdditiveSolver solver(*F, op);
            const Elem c = random_elem(*F, rng);
            std::vector<Elem> brute;
            for (std::uint32_t v = 0; v < F->size(); ++v)
                if (op.apply(*F, Elem{v}) == c) brute.push_back(Elem{v});
            CHECK(solver.solve(c) == brute);
        }
    }
}

TEST_CASE("additive solver roots verify by substitution; counts are powers of p") {
    auto F = make_field(5, 6);
    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; ++t) {
        AdditiveOperator op;
        for (std::uint32_t i = 0; i < 3; ++i) op.terms.push_back({random_elem(*F, rng), static_cast<std::uint32_t>(rng() % 6)});
        const AdditiveSolver solver(*F, op);
        for (int s = 0; s < 5; ++s) {
            const Elem c = s == 0 ? F->zero() : op.apply(*F, random_elem(*F, rng));
            const auto roots = solver.solve(c);
            REQUIRE_FALSE(roots.empty());
            std::size_t n = roots.size();
            while (n % 5 == 0) n /= 5;
            CHECK(n == 1);
            for (auto r : roots) REQUIRE(op.apply(*F, r) == c);
        }
    }
}

TEST_CASE("additive operator is F_p-linear") {
    auto F = make_field(7, 4);
    std::mt19937_64 rng(4);
    AdditiveOperator op{{{random_elem(*F, rng), 0}, {random_elem(*F, rng), 1}, {random_elem(*F, rng), 3}}};
    for (int t = 0; t < 500; ++t) {
        const Elem u = random_elem(*F, rng), v = random_elem(*F, rng);
        const Elem s = F->from_int(static_cast<std::int64_t>(rng() % 7));
        REQUIRE(op.apply(*F, F->add(u, v)) == F->add(op.apply(*F, u), op.apply(*F, v)));
        REQUIRE(op.apply(*F, F->mul(s, u)) == F->mul(s, op.apply(*F, u)));
    }
}

TEST_CASE("least element of order") {
    auto F = make_field(7, 4);
    const Elem l = least_element_of_order(*F, 5);
    CHECK(F->order(l) == 5);
    for (std::uint32_t v = 1; v < l.v; ++v) REQUIRE(F->order(Elem{v}) != 5);
    CHECK_THROWS(least_element_of_order(*F, 7));
    CHECK_THROWS(least_element_of_order(*make_field(7, 2), 5));
}

}  // TEST_SUITE
