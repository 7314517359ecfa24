// Licensed under the Apache License 2.0 (see LICENSE file).

#include <doctest.h>

#include <bit>
#include <random>

#include "incalg/error.hpp"
#include "incalg/incidence.hpp"
#include "support.hpp"

using namespace incalg;
using testing::Q;

namespace {

// Moebius function of the order by the defining recursion, as a table over
// element pairs.
std::vector<Rational> mobius_table(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<Rational> mu(n * n);
    auto ext = linear_extension(p);
    for (std::size_t a = 0; a < n; ++a)
        for (auto b : ext) {
            if (!p.leq(a, b)) continue;
            if (a == b) {
                mu[a * n + b] = 1;
                continue;
            }
            Rational sum;
            for (std::size_t x = 0; x < n; ++x)
                if (p.leq(a, x) && p.lt(x, b)) sum += mu[a * n + x];
            mu[a * n + b] = -sum;
        }
    return mu;
}

long classical_mu(long n) {
    long result = 1;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            n /= q;
            if (n % q == 0) return 0;
            result = -result;
        }
    return n > 1 ? -result : result;
}

// Interval-level convolution of functions given on every interval of p.
Rational lifted_star(const IncidenceFunction& phi, const IncidenceFunction& psi, std::size_t a, std::size_t b) {
    const auto& p = phi.relation().poset();
    Rational sum;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(a, x) && p.leq(x, b)) sum += phi.on(a, x) * psi.on(x, b);
    return sum;
}

const std::vector<std::pair<Poset, RelationKind>>& compatible_cases() {
    static const std::vector<std::pair<Poset, RelationKind>> cases = {
        {chain(5), RelationKind::diff},
        {boolean_lattice(3), RelationKind::setdiff},
        {boolean_lattice(3), RelationKind::cardinality},
        {divisor_lattice(120), RelationKind::ratio},
        {antichain_with_zero(3), RelationKind::points},
        {boolean_lattice(3), RelationKind::isotype},
    };
    return cases;
}

}  // namespace

TEST_SUITE("incidence") {

TEST_CASE("IncidenceFunction basics") {
    auto r = IntervalRelation::builtin(chain(2), RelationKind::diff);
    CHECK_THROWS_AS(IncidenceFunction(r, {1, 2}), Error);
    IncidenceFunction f(r, {Rational(1), Q("1/2"), Rational(-3)});
    CHECK(f.at_key("1") == Q("1/2"));
    CHECK(f.on(0, 2) == -3);
    CHECK(f.on(1, 2) == Q("1/2"));
    CHECK_THROWS_AS(f.at_key("9"), Error);
    CHECK(zeta(r).values() == std::vector<Rational>(3, Rational(1)));
    CHECK(unit_function(r).values() == std::vector<Rational>{1, 0, 0});

    SparseVector alpha;
    alpha.add(2, 5);
    CHECK(incidence_from_vector(r, alpha).values() == std::vector<Rational>{0, 0, 5});
    CHECK_THROWS_AS(incidence_from_vector(r, SparseVector::basis(3)), Error);
    CHECK(pointwise_product(f, f).values() == std::vector<Rational>{1, Q("1/4"), 9});

    auto other = IntervalRelation::builtin(chain(2), RelationKind::diff);
    CHECK_FALSE(IncidenceFunction(other, f.values()) == f);
    CHECK_THROWS_AS(star(f, zeta(other)), Error);
}

TEST_CASE("Moebius function of the chain") {
    auto mu = mobius(IntervalRelation::builtin(chain(5), RelationKind::diff));
    CHECK(mu.values() == std::vector<Rational>{1, -1, 0, 0, 0, 0});
}

TEST_CASE("Moebius function of the boolean lattice") {
    auto r = IntervalRelation::builtin(boolean_lattice(4), RelationKind::setdiff);
    auto mu = mobius(r);
    for (std::size_t c = 0; c < r.class_count(); ++c) {
        const auto [a, b] = r.cls(c).representative;
        const int k = std::popcount(b & ~a);
        CHECK(mu[c] == (k % 2 ? -1 : 1));
    }
    auto card = mobius(IntervalRelation::builtin(boolean_lattice(4), RelationKind::cardinality));
    CHECK(card.values() == std::vector<Rational>{1, -1, 1, -1, 1});
}

TEST_CASE("Moebius function of the divisor lattice is the classical one") {
    auto r = IntervalRelation::builtin(divisor_lattice(720), RelationKind::ratio);
    auto mu = mobius(r);
    for (const auto& c : r.classes()) CHECK(mu.at_key(c.key) == classical_mu(std::stol(c.key)));
}

TEST_CASE("Moebius functions agree with the recursion on every interval") {
    std::vector<Poset> posets = {chain(4), boolean_lattice(3), divisor_lattice(60), antichain_with_zero(4)};
    for (const auto& p : posets) {
        auto table = mobius_table(p);
        auto trivial = mobius(IntervalRelation::builtin(p, RelationKind::trivial));
        for (const auto& iv : all_intervals(p)) CHECK(trivial.on(iv.lo, iv.hi) == table[iv.lo * p.size() + iv.hi]);
    }
    for (const auto& [p, kind] : compatible_cases()) {
        auto r = IntervalRelation::builtin(p, kind);
        auto table = mobius_table(p);
        auto mu = mobius(r);
        for (const auto& iv : all_intervals(p)) CHECK(mu.on(iv.lo, iv.hi) == table[iv.lo * p.size() + iv.hi]);
        CHECK(audit_mobius(r).ok);
    }
}

TEST_CASE("star_inverse is two sided and fails on a zero point value") {
    std::mt19937_64 rng(41);
    for (const auto& [p, kind] : compatible_cases()) {
        auto r = IntervalRelation::builtin(p, kind);
        for (int i = 0; i < 10; ++i) {
            auto phi = testing::random_incidence(r, rng);
            bool invertible = true;
            for (std::size_t c = 0; c < r.class_count(); ++c)
                if (r.is_point_class(c) && phi[c].is_zero()) invertible = false;
            auto inv = star_inverse(phi);
            CHECK(inv.has_value() == invertible);
            if (inv) {
                CHECK(star(phi, *inv) == unit_function(r));
                CHECK(star(*inv, phi) == unit_function(r));
            }
        }
        auto zero = IncidenceFunction(r, std::vector<Rational>(r.class_count()));
        CHECK_FALSE(star_inverse(zero));
    }
}

TEST_CASE("star is associative and unital with U") {
    std::mt19937_64 rng(43);
    for (const auto& [p, kind] : compatible_cases()) {
        auto r = IntervalRelation::builtin(p, kind);
        const auto u = unit_function(r);
        for (int i = 0; i < 20; ++i) {
            auto f = testing::random_incidence(r, rng), g = testing::random_incidence(r, rng),
                 h = testing::random_incidence(r, rng);
            CHECK(star(star(f, g), h) == star(f, star(g, h)));
            CHECK(star(u, f) == f);
            CHECK(star(f, u) == f);
        }
    }
}

TEST_CASE("class convolution agrees with interval convolution on every member") {
    std::mt19937_64 rng(47);
    for (const auto& [p, kind] : compatible_cases()) {
        auto r = IntervalRelation::builtin(p, kind);
        for (int i = 0; i < 10; ++i) {
            auto f = testing::random_incidence(r, rng), g = testing::random_incidence(r, rng);
            auto fg = star(f, g);
            for (const auto& iv : all_intervals(p)) {
                CHECK(fg.on(iv.lo, iv.hi) == lifted_star(f, g, iv.lo, iv.hi));
                CHECK(star_at(f, g, iv) == fg.on(iv.lo, iv.hi));
            }
            CHECK(audit_star_representatives(f, g).ok);
        }
    }
}

TEST_CASE("hat is a homomorphism where the product condition holds") {
    std::mt19937_64 rng(53);
    std::vector<std::pair<Poset, RelationKind>> cases = {
        {chain(5), RelationKind::diff},
        {boolean_lattice(3), RelationKind::setdiff},
        {divisor_lattice(120), RelationKind::ratio},
    };
    for (const auto& [p, kind] : cases) {
        auto ib = testing::interval_bialgebra(p, kind);
        for (int i = 0; i < 20; ++i) {
            auto phi = testing::random_incidence(ib.relation, rng), psi = testing::random_incidence(ib.relation, rng);
            CHECK(check_hat_homomorphism(ib, phi, psi).ok);
        }
    }
    auto card = testing::interval_bialgebra(boolean_lattice(2), RelationKind::cardinality);
    CHECK_THROWS_WITH_AS(check_hat_homomorphism(card, zeta(card.relation), zeta(card.relation)),
                         "hat embedding needs products of intervals to be intervals; fails at {} <= {1} <= {1,2}",
                         Error);
}

TEST_CASE("hat of the Moebius function is the antipode") {
    std::vector<std::pair<Poset, RelationKind>> cases = {
        {chain(5), RelationKind::diff},
        {boolean_lattice(3), RelationKind::setdiff},
        {divisor_lattice(120), RelationKind::ratio},
    };
    for (const auto& [p, kind] : cases) {
        auto ib = testing::interval_bialgebra(p, kind);
        auto s = solve_antipode(ib.bialgebra);
        REQUIRE(s);
        CHECK(*s == hat(mobius(ib.relation)));
    }
    // with multiplicities the antipode is no longer diagonal in mu
    auto card = testing::interval_bialgebra(boolean_lattice(3), RelationKind::cardinality);
    auto s = solve_antipode(card.bialgebra);
    REQUIRE(s);
    CHECK(*s != hat(mobius(card.relation)));
}

TEST_CASE("atom additivity") {
    std::mt19937_64 rng(59);
    for (const auto& [p, kind] : compatible_cases()) {
        auto ib = testing::interval_bialgebra(p, kind);
        for (int i = 0; i < 10; ++i) {
            auto phi = testing::random_unital_incidence(ib.relation, rng),
                 psi = testing::random_unital_incidence(ib.relation, rng);
            CHECK(check_atom_additivity(ib, phi, psi).ok);
        }
    }
    auto ib = testing::interval_bialgebra(chain(2), RelationKind::diff);
    auto twice = IncidenceFunction(ib.relation, {2, 1, 1});
    CHECK_THROWS_AS(check_atom_additivity(ib, twice, zeta(ib.relation)), Error);
    auto flat = testing::interval_bialgebra(antichain(2), RelationKind::points);
    CHECK_THROWS_AS(check_atom_additivity(flat, zeta(flat.relation), zeta(flat.relation)), Error);
}

TEST_CASE("commuting paths for the chain antipode") {
    auto ib = testing::interval_bialgebra(chain(2), RelationKind::diff);
    auto s = solve_antipode(ib.bialgebra);
    REQUIRE(s);
    auto report = check_commuting_paths(ib.bialgebra, *s);
    CHECK(report.get("hopf_square_commutes").ok);
    // S * S (I_2) = S(I_0) S(I_2) + S(I_1) S(I_1) + S(I_2) S(I_0) = I_2 while S(I_2) = 0
    const auto& before = report.get("star_eq_nabla_delta_before");
    REQUIRE_FALSE(before.ok);
    const auto c2 = testing::key_id(ib.relation, "2");
    CHECK(before.witness->indices == std::vector<std::size_t>{c2});
    CHECK(before.witness->lhs == "{" + std::to_string(c2) + ":1}");
    CHECK(before.witness->rhs == "{}");
    CHECK_FALSE(report.get("star_eq_nabla_delta_after").ok);
}

TEST_CASE("commuting paths hold for group algebras") {
    for (std::size_t n : {2, 3, 5}) {
        auto b = testing::cyclic_group_bialgebra(n);
        auto s = solve_antipode(b);
        REQUIRE(s);
        CHECK(check_commuting_paths(b, *s).all_ok());
    }
}

TEST_CASE("diagonal operators commute with the Hopf square") {
    std::mt19937_64 rng(61);
    for (const auto& [p, kind] : compatible_cases()) {
        auto ib = testing::interval_bialgebra(p, kind);
        for (int i = 0; i < 10; ++i) {
            auto phi = testing::random_incidence(ib.relation, rng);
            CHECK(check_commuting_paths(ib.bialgebra, hat(phi)).get("hopf_square_commutes").ok);
        }
    }
}

}  // TEST_SUITE
