// Licensed under the Apache License 2.0 (see LICENSE file).

#include <doctest.h>

#include <random>

#include "incalg/error.hpp"
#include "incalg/fixtures.hpp"
#include "support.hpp"

using namespace incalg;
using testing::Q;

namespace {

// The field C as a two dimensional algebra on 1, i.
FiniteAlgebra complex_algebra() {
    FiniteAlgebra a{2, std::vector<SparseVector>(4), SparseVector::basis(0)};
    a.mult[0] = SparseVector::basis(0);
    a.mult[1] = SparseVector::basis(1);
    a.mult[2] = SparseVector::basis(1);
    a.mult[3].add(0, -1);
    return a;
}

struct Pair {
    const char* name;
    FiniteCoalgebra coalgebra;
    FiniteAlgebra algebra;
};

std::vector<Pair> fixture_pairs() {
    std::vector<Pair> out;
    auto add = [&](const char* name, const FiniteBialgebra& b) { out.push_back({name, b.coalgebra, b.algebra}); };
    add("quaternion", quaternion_fixture());
    add("matrix2", matrix_bialgebra(2));
    add("chain3", testing::interval_bialgebra(chain(3), RelationKind::diff).bialgebra);
    add("boolean2", testing::interval_bialgebra(boolean_lattice(2), RelationKind::cardinality).bialgebra);
    add("divisors12", testing::interval_bialgebra(divisor_lattice(12), RelationKind::ratio).bialgebra);
    add("sweedler", testing::sweedler_bialgebra());
    out.push_back({"complex", complex_coalgebra_fixture(), complex_algebra()});
    return out;
}

std::vector<std::pair<const char*, FiniteBialgebra>> bialgebra_fixtures() {
    return {
        {"quaternion", quaternion_fixture()},
        {"matrix2", matrix_bialgebra(2)},
        {"matrix3", matrix_bialgebra(3)},
        {"chain3", testing::interval_bialgebra(chain(3), RelationKind::diff).bialgebra},
        {"boolean2", testing::interval_bialgebra(boolean_lattice(2), RelationKind::cardinality).bialgebra},
        {"divisors12", testing::interval_bialgebra(divisor_lattice(12), RelationKind::ratio).bialgebra},
        {"fan3", testing::interval_bialgebra(antichain_with_zero(3), RelationKind::points).bialgebra},
        {"cyclic4", testing::cyclic_group_bialgebra(4)},
        {"sweedler", testing::sweedler_bialgebra()},
    };
}

LinearOperator diag(const std::vector<Rational>& d) {
    DenseMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return LinearOperator(std::move(m));
}

}  // namespace

TEST_SUITE("algebra_core") {

TEST_CASE("check_algebra on the quaternions and matrices") {
    CHECK(check_algebra(quaternion_fixture().algebra).all_ok());
    CHECK(check_algebra(matrix_bialgebra(2).algebra).all_ok());
    CHECK(check_algebra(matrix_bialgebra(3).algebra).all_ok());
}

TEST_CASE("check_algebra reports a broken unit with a witness") {
    // e0 e0 = e1 and e1 absorbing; e0 is declared the unit but is not one
    FiniteAlgebra a{2, std::vector<SparseVector>(4), SparseVector::basis(0)};
    a.mult[0] = SparseVector::basis(1);
    a.mult[1] = SparseVector::basis(1);
    a.mult[2] = SparseVector::basis(1);
    a.mult[3] = SparseVector::basis(1);
    auto report = check_algebra(a);
    CHECK(report.get("associativity").ok);
    const auto& unit = report.get("unitarity");
    REQUIRE_FALSE(unit.ok);
    REQUIRE(unit.witness);
    CHECK(unit.witness->indices == std::vector<std::size_t>{0});
    CHECK(unit.witness->lhs == "{1:1}");
    CHECK(unit.witness->rhs == "{0:1}");
}

TEST_CASE("check_algebra on a two dimensional algebra with a bad right unit") {
    FiniteAlgebra a{2, std::vector<SparseVector>(4), SparseVector::basis(0)};
    a.mult[0] = SparseVector::basis(0);
    a.mult[1] = SparseVector::basis(1);
    a.mult[2] = SparseVector::basis(1);
    a.mult[3] = SparseVector::basis(0);
    a.mult[3].add(1, 1);  // e1 e1 = e0 + e1 is still associative
    auto report = check_algebra(a);
    CHECK(report.get("associativity").ok);
    a.mult[2] = SparseVector::basis(0);  // e1 e0 = e0 breaks unitarity and associativity
    report = check_algebra(a);
    CHECK_FALSE(report.get("associativity").ok);
    CHECK_FALSE(report.get("unitarity").ok);
}

TEST_CASE("check_coalgebra on the diagonal, complex and matrix coalgebras") {
    CHECK(check_coalgebra(diagonal_coalgebra(5)).all_ok());
    CHECK(check_coalgebra(complex_coalgebra_fixture()).all_ok());
    auto m2 = matrix_bialgebra(2).coalgebra;
    CHECK(check_coalgebra(m2).all_ok());
    CHECK_FALSE(check_cocommutative(m2).all_ok());
    CHECK(check_cocommutative(diagonal_coalgebra(3)).all_ok());
    CHECK(check_cocommutative(complex_coalgebra_fixture()).all_ok());
}

TEST_CASE("check_coalgebra detects a broken counit") {
    auto c = diagonal_coalgebra(2);
    c.counit[1] = 0;
    auto report = check_coalgebra(c);
    CHECK(report.get("coassociativity").ok);
    const auto& counit = report.get("counitarity");
    REQUIRE_FALSE(counit.ok);
    CHECK(counit.witness->indices == std::vector<std::size_t>{1});
}

TEST_CASE("u * u = u in every fixture") {
    for (const auto& p : fixture_pairs()) {
        INFO(std::string(p.name));
        auto u = convolution_unit(p.coalgebra, p.algebra);
        CHECK(convolve_ops(p.coalgebra, p.algebra, u, u) == u);
    }
}

TEST_CASE("id * id on chain and boolean interval bialgebras") {
    auto chain3 = testing::interval_bialgebra(chain(3), RelationKind::diff);
    const auto& b = chain3.bialgebra;
    auto sq = convolve_ops(b.coalgebra, b.algebra, LinearOperator::identity(4), LinearOperator::identity(4));
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto id = testing::key_id(chain3.relation, std::to_string(n));
        CHECK(sq.image(id) == SparseVector::basis(id).scaled(n + 1));
    }
    auto bool3 = testing::interval_bialgebra(boolean_lattice(3), RelationKind::cardinality);
    const auto& bb = bool3.bialgebra;
    auto sq2 = convolve_ops(bb.coalgebra, bb.algebra, LinearOperator::identity(4), LinearOperator::identity(4));
    for (unsigned n = 0; n <= 3; ++n) {
        // pairs of subsets of the same size k of an n-set, summed over k
        Rational pairs;
        for (unsigned k = 0; k <= n; ++k) pairs += binomial(n, k) * binomial(n, k);
        const auto id = testing::key_id(bool3.relation, std::to_string(n));
        CHECK(sq2.image(id) == SparseVector::basis(id).scaled(pairs));
    }
}

TEST_CASE("convolve_ops rejects mismatched dimensions") {
    auto q = quaternion_fixture();
    CHECK_THROWS_AS(convolve_ops(q.coalgebra, q.algebra, LinearOperator::identity(3), LinearOperator::identity(4)),
                    Error);
}

TEST_CASE("convolution unit of the chain interval bialgebra") {
    auto ib = testing::interval_bialgebra(chain(2), RelationKind::diff);
    auto u = convolution_unit(ib.bialgebra.coalgebra, ib.bialgebra.algebra);
    const auto i0 = testing::key_id(ib.relation, "0");
    CHECK(u.image(i0) == SparseVector::basis(i0));
    for (const char* k : {"1", "2"}) CHECK(u.image(testing::key_id(ib.relation, k)).is_zero());
}

TEST_CASE("quaternion convolution unit sends every basis element to 1 under eps = 1") {
    auto q = quaternion_fixture();
    auto u = convolution_unit(q.coalgebra, q.algebra);
    for (std::size_t k = 0; k < 4; ++k) CHECK(u.image(k) == SparseVector::basis(0));
}

TEST_CASE("u * f = f = f * u for random operators") {
    std::mt19937_64 rng(7);
    auto ib = testing::interval_bialgebra(divisor_lattice(12), RelationKind::ratio);
    const auto& b = ib.bialgebra;
    auto u = convolution_unit(b.coalgebra, b.algebra);
    for (int i = 0; i < 20; ++i) {
        auto f = testing::random_operator(b.dim(), rng);
        CHECK(convolve_ops(b.coalgebra, b.algebra, u, f) == f);
        CHECK(convolve_ops(b.coalgebra, b.algebra, f, u) == f);
    }
}

TEST_CASE("check_mweak on the quaternion fixture fails at eps(i i)") {
    auto report = check_mweak(quaternion_fixture());
    CHECK(report.get("bi2").ok);
    CHECK(report.get("bi4").ok);
    const auto& bi3 = report.get("bi3");
    REQUIRE_FALSE(bi3.ok);
    CHECK(bi3.witness->indices == std::vector<std::size_t>{1, 1});
    CHECK(bi3.witness->lhs == "-1");
    CHECK(bi3.witness->rhs == "1");
}

TEST_CASE("no counit on the quaternions satisfies bi3 and bi4") {
    // bi3 on 1 1 and i i forces eps(1) = eps(1)^2 and -eps(1) = eps(i)^2; bi4
    // forces eps(1) = 1, leaving eps(i)^2 = -1 without a rational solution.
    auto q = quaternion_fixture();
    for (int e1 = -2; e1 <= 2; ++e1)
        for (int ei = -2; ei <= 2; ++ei) {
            auto b = q;
            b.coalgebra.counit = {Rational(e1), Rational(ei), Rational(ei), Rational(ei)};
            auto r = check_mweak(b);
            CHECK_FALSE((r.get("bi3").ok && r.get("bi4").ok));
        }
}

TEST_CASE("check_mweak on interval bialgebras and a broken counit") {
    CHECK(check_mweak(testing::interval_bialgebra(chain(4), RelationKind::diff).bialgebra).all_ok());
    auto b = testing::interval_bialgebra(chain(2), RelationKind::diff).bialgebra;
    b.coalgebra.counit[0] = 0;
    auto report = check_mweak(b);
    CHECK_FALSE(report.get("bi4").ok);
}

TEST_CASE("check_strong on the quaternions fails at i (x) i") {
    const auto report = check_strong(quaternion_fixture());
    const auto& bi1 = report.get("bi1");
    REQUIRE_FALSE(bi1.ok);
    CHECK(bi1.witness->indices == std::vector<std::size_t>{1, 1});
    CHECK(bi1.witness->lhs == "{(0,0):1}");
    CHECK(bi1.witness->rhs == "{(0,0):-1}");
}

TEST_CASE("check_strong on the matrix bialgebra with matrix multiplication") {
    // Delta(B11 B11) = Delta(B11) has two terms while Delta(B11) Delta(B11)
    // in A (x) A has four, so bi1 fails already at (0, 0).
    const auto report = check_strong(matrix_bialgebra(2));
    const auto& bi1 = report.get("bi1");
    REQUIRE_FALSE(bi1.ok);
    CHECK(bi1.witness->indices == std::vector<std::size_t>{0, 0});
    CHECK(check_strong(matrix_bialgebra(1)).all_ok());
    auto mweak = check_mweak(matrix_bialgebra(2));
    CHECK_FALSE(mweak.get("bi2").ok);
    CHECK_FALSE(mweak.get("bi3").ok);
    CHECK(mweak.get("bi4").ok == false);
}

TEST_CASE("check_strong fails on the chain interval bialgebra") {
    CHECK_FALSE(check_strong(testing::interval_bialgebra(chain(4), RelationKind::diff).bialgebra).all_ok());
}

TEST_CASE("check_strong holds on the cyclic group and Sweedler algebras") {
    CHECK(check_strong(testing::cyclic_group_bialgebra(5)).all_ok());
    CHECK(check_mweak(testing::cyclic_group_bialgebra(5)).all_ok());
    auto sw = testing::sweedler_bialgebra();
    CHECK(check_algebra(sw.algebra).all_ok());
    CHECK(check_coalgebra(sw.coalgebra).all_ok());
    CHECK(check_mweak(sw).all_ok());
    CHECK(check_strong(sw).all_ok());
}

TEST_CASE("solve_antipode on the quaternions is conjugation") {
    auto s = solve_antipode(quaternion_fixture());
    REQUIRE(s);
    CHECK(*s == diag({1, -1, -1, -1}));
}

TEST_CASE("solve_antipode finds none for matrix bialgebras") {
    CHECK_FALSE(solve_antipode(matrix_bialgebra(2)));
    CHECK_FALSE(solve_antipode(matrix_bialgebra(3)));
}

TEST_CASE("solve_antipode on chain(3)") {
    auto ib = testing::interval_bialgebra(chain(3), RelationKind::diff);
    auto s = solve_antipode(ib.bialgebra);
    REQUIRE(s);
    std::vector<Rational> expected(4);
    expected[testing::key_id(ib.relation, "0")] = 1;
    expected[testing::key_id(ib.relation, "1")] = -1;
    CHECK(*s == diag(expected));
}

TEST_CASE("solve_antipode on Sweedler's algebra") {
    auto s = solve_antipode(testing::sweedler_bialgebra());
    REQUIRE(s);
    CHECK(s->image(0) == SparseVector::basis(0));
    CHECK(s->image(1) == SparseVector::basis(1));
    CHECK(s->image(2) == SparseVector::basis(3).scaled(-1));
    CHECK(s->image(3) == SparseVector::basis(2));
}

TEST_CASE("opposite algebras and coalgebras") {
    auto ib = testing::interval_bialgebra(boolean_lattice(3), RelationKind::cardinality);
    CHECK(opposite_algebra(ib.bialgebra.algebra).mult == ib.bialgebra.algebra.mult);

    auto q = quaternion_fixture();
    auto qop = opposite_algebra(q.algebra);
    CHECK(q.algebra.product(1, 2) == SparseVector::basis(3));
    CHECK(qop.product(1, 2) == SparseVector::basis(3).scaled(-1));
    CHECK(check_algebra(qop).all_ok());

    auto m = matrix_bialgebra(2);
    auto cop = opposite_coalgebra(m.coalgebra);
    CHECK(check_coalgebra(cop).all_ok());
    CHECK(cop.comult != m.coalgebra.comult);

    for (const auto& [name, b] : bialgebra_fixtures()) {
        INFO(std::string(name));
        auto twice = opposite_bialgebra(opposite_bialgebra(b));
        CHECK(twice.algebra.mult == b.algebra.mult);
        CHECK(twice.coalgebra.comult == b.coalgebra.comult);
        CHECK(check_algebra(opposite_algebra(b.algebra)).all_ok());
        CHECK(check_coalgebra(opposite_coalgebra(b.coalgebra)).all_ok());
    }
}

TEST_CASE("tensor product of chain(1) with itself") {
    auto c1 = testing::interval_bialgebra(chain(1), RelationKind::diff).bialgebra;
    auto t = tensor_bialgebra(c1, c1);
    CHECK(t.dim() == 4);
    CHECK(check_algebra(t.algebra).all_ok());
    CHECK(check_coalgebra(t.coalgebra).all_ok());
    CHECK(check_mweak(t).all_ok());
    CHECK(t.algebra.unit == SparseVector::basis(0));
}

TEST_CASE("unit of a tensor product is the tensor of the units") {
    auto a = quaternion_fixture().algebra;
    auto b = matrix_bialgebra(2).algebra;
    auto t = tensor_algebra(a, b);
    SparseVector expected;
    for (const auto& [p, x] : a.unit)
        for (const auto& [q, y] : b.unit) expected.add(p * b.dim + q, x * y);
    CHECK(t.unit == expected);
}

TEST_CASE("antipode of chain(2) (x) chain(2) is S (x) S") {
    auto c2 = testing::interval_bialgebra(chain(2), RelationKind::diff).bialgebra;
    auto s = solve_antipode(c2);
    REQUIRE(s);
    auto st = solve_antipode(tensor_bialgebra(c2, c2));
    REQUIRE(st);
    CHECK(*st == tensor_operator(*s, *s));
}

TEST_CASE("fixture structure constants") {
    auto q = quaternion_fixture();
    CHECK(q.algebra.product(1, 2) == SparseVector::basis(3));
    CHECK(q.algebra.product(2, 1) == SparseVector::basis(3).scaled(-1));
    CHECK(q.algebra.product(1, 1) == SparseVector::basis(0).scaled(-1));
    // the counit of the matrix coalgebra is the trace
    auto m = matrix_bialgebra(2);
    CHECK(m.coalgebra.counit == std::vector<Rational>{1, 0, 0, 1});
    SparseVector a;
    a.add(0, 3);
    a.add(1, 5);
    a.add(3, Q("1/2"));
    CHECK(m.coalgebra.apply_counit(a) == Q("7/2"));
    CHECK_THROWS_AS(matrix_bialgebra(0), Error);
    CHECK_THROWS_AS(matrix_bialgebra(7), Error);
    CHECK_NOTHROW(matrix_bialgebra(6));
}

TEST_CASE("convolution is associative and unital") {
    std::mt19937_64 rng(101);
    for (const auto& p : fixture_pairs()) {
        INFO(std::string(p.name));
        const std::size_t d = p.algebra.dim;
        auto u = convolution_unit(p.coalgebra, p.algebra);
        for (int i = 0; i < 50; ++i) {
            auto f = testing::random_operator(d, rng), g = testing::random_operator(d, rng),
                 h = testing::random_operator(d, rng);
            auto conv = [&](const LinearOperator& x, const LinearOperator& y) {
                return convolve_ops(p.coalgebra, p.algebra, x, y);
            };
            CHECK(conv(conv(f, g), h) == conv(f, conv(g, h)));
            CHECK(conv(u, f) == f);
            CHECK(conv(f, u) == f);
        }
    }
}

TEST_CASE("convolution commutes for commutative algebras over cocommutative coalgebras") {
    std::mt19937_64 rng(202);
    std::size_t tested = 0;
    for (const auto& p : fixture_pairs()) {
        const bool hyp = check_commutative(p.algebra).all_ok() && check_cocommutative(p.coalgebra).all_ok();
        if (!hyp) continue;
        INFO(std::string(p.name));
        ++tested;
        for (int i = 0; i < 50; ++i) {
            auto f = testing::random_operator(p.algebra.dim, rng), g = testing::random_operator(p.algebra.dim, rng);
            CHECK(convolve_ops(p.coalgebra, p.algebra, f, g) == convolve_ops(p.coalgebra, p.algebra, g, f));
        }
    }
    CHECK(tested >= 4);
}

TEST_CASE("matrix convolution is not commutative") {
    std::mt19937_64 rng(9);
    auto m = matrix_bialgebra(2);
    bool differs = false;
    for (int i = 0; i < 20 && !differs; ++i) {
        auto f = testing::random_operator(4, rng), g = testing::random_operator(4, rng);
        differs = convolve_ops(m.coalgebra, m.algebra, f, g) != convolve_ops(m.coalgebra, m.algebra, g, f);
    }
    CHECK(differs);
}

TEST_CASE("opposite convolution reverses the factors") {
    std::mt19937_64 rng(303);
    for (const auto& p : fixture_pairs()) {
        INFO(std::string(p.name));
        auto cop = opposite_coalgebra(p.coalgebra);
        auto aop = opposite_algebra(p.algebra);
        for (int i = 0; i < 50; ++i) {
            auto f = testing::random_operator(p.algebra.dim, rng), g = testing::random_operator(p.algebra.dim, rng);
            CHECK(convolve_ops(cop, aop, f, g) == convolve_ops(p.coalgebra, p.algebra, g, f));
        }
    }
}

TEST_CASE("convolution of tensor operators factorizes") {
    std::mt19937_64 rng(404);
    std::vector<std::pair<FiniteBialgebra, FiniteBialgebra>> pairs = {
        {testing::interval_bialgebra(chain(1), RelationKind::diff).bialgebra, quaternion_fixture()},
        {matrix_bialgebra(2), testing::interval_bialgebra(chain(2), RelationKind::diff).bialgebra},
    };
    for (const auto& [b1, b2] : pairs) {
        auto t = tensor_bialgebra(b1, b2);
        for (int i = 0; i < 20; ++i) {
            auto f = testing::random_operator(b1.dim(), rng), g = testing::random_operator(b1.dim(), rng);
            auto f2 = testing::random_operator(b2.dim(), rng), g2 = testing::random_operator(b2.dim(), rng);
            auto lhs = convolve_ops(t.coalgebra, t.algebra, tensor_operator(f, f2), tensor_operator(g, g2));
            auto rhs = tensor_operator(convolve_ops(b1.coalgebra, b1.algebra, f, g),
                                       convolve_ops(b2.coalgebra, b2.algebra, f2, g2));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("tensor antipodes are S (x) S'") {
    std::vector<std::pair<FiniteBialgebra, FiniteBialgebra>> pairs = {
        {testing::interval_bialgebra(chain(1), RelationKind::diff).bialgebra,
         testing::interval_bialgebra(divisor_lattice(6), RelationKind::ratio).bialgebra},
        {testing::cyclic_group_bialgebra(3), testing::sweedler_bialgebra()},
        {testing::interval_bialgebra(boolean_lattice(2), RelationKind::cardinality).bialgebra, quaternion_fixture()},
    };
    for (const auto& [b1, b2] : pairs) {
        auto s1 = solve_antipode(b1), s2 = solve_antipode(b2);
        REQUIRE(s1);
        REQUIRE(s2);
        auto st = solve_antipode(tensor_bialgebra(b1, b2));
        REQUIRE(st);
        CHECK(*st == tensor_operator(*s1, *s2));
    }
}

TEST_CASE("nabla is an algebra morphism iff the algebra is commutative") {
    std::vector<std::pair<const char*, FiniteAlgebra>> algebras = {{"complex", complex_algebra()}};
    for (const auto& [name, b] : bialgebra_fixtures()) algebras.emplace_back(name, b.algebra);
    std::size_t commutative = 0;
    for (const auto& [name, a] : algebras) {
        INFO(std::string(name));
        const bool comm = check_commutative(a).all_ok();
        commutative += comm;
        CHECK(check_multiplication_morphism(a).all_ok() == comm);
    }
    CHECK(commutative > 0);
    CHECK(commutative < algebras.size());
}

TEST_CASE("S o S = id for commutative cocommutative strong bialgebras") {
    for (std::size_t n : {2, 3, 5}) {
        auto b = testing::cyclic_group_bialgebra(n);
        REQUIRE(check_strong(b).all_ok());
        auto s = solve_antipode(b);
        REQUIRE(s);
        CHECK(s->compose(*s) == LinearOperator::identity(n));
    }
}

TEST_CASE("S o S != id on the chain interval bialgebra") {
    for (unsigned n = 2; n <= 6; ++n) {
        auto s = solve_antipode(testing::interval_bialgebra(chain(n), RelationKind::diff).bialgebra);
        REQUIRE(s);
        CHECK(s->compose(*s) != LinearOperator::identity(n + 1));
    }
}

TEST_CASE("antipodes of strong bialgebras are antimorphisms") {
    std::vector<std::pair<const char*, FiniteBialgebra>> strong = {
        {"cyclic3", testing::cyclic_group_bialgebra(3)},
        {"cyclic4", testing::cyclic_group_bialgebra(4)},
        {"sweedler", testing::sweedler_bialgebra()},
        {"cyclic2 x sweedler", tensor_bialgebra(testing::cyclic_group_bialgebra(2), testing::sweedler_bialgebra())},
    };
    for (const auto& [name, b] : strong) {
        INFO(std::string(name));
        REQUIRE(check_strong(b).all_ok());
        auto s = solve_antipode(b);
        REQUIRE(s);
        CHECK(check_antimorphism(b, *s).all_ok());
    }
    auto sw = testing::sweedler_bialgebra();
    auto s = *solve_antipode(sw);
    CHECK(s.compose(s) != LinearOperator::identity(4));
}

TEST_CASE("quaternion conjugation is an algebra antimorphism only") {
    auto q = quaternion_fixture();
    auto report = check_antimorphism(q, *solve_antipode(q));
    CHECK(report.get("algebra_antimorphism").ok);
    CHECK_FALSE(report.get("coalgebra_antimorphism").ok);
}

TEST_CASE("grouplike elements are linearly independent") {
    for (const auto& [name, b] : bialgebra_fixtures()) {
        INFO(std::string(name));
        auto g = grouplike_candidates(b);
        CHECK(rank(g) == g.size());
    }
    CHECK(grouplike_candidates(testing::cyclic_group_bialgebra(4)).size() == 4);
    CHECK(grouplike_candidates(testing::sweedler_bialgebra()).size() == 2);
}

TEST_CASE("the opposite bialgebra has the same antipode") {
    std::size_t with_antipode = 0;
    for (const auto& [name, b] : bialgebra_fixtures()) {
        INFO(std::string(name));
        auto s = solve_antipode(b);
        auto sop = solve_antipode(opposite_bialgebra(b));
        CHECK(s.has_value() == sop.has_value());
        if (s && sop) {
            ++with_antipode;
            CHECK(*s == *sop);
        }
    }
    CHECK(with_antipode >= 6);
}

}  // TEST_SUITE
