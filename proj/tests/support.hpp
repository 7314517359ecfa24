// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_TESTS_SUPPORT_HPP
#define INCALG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "incalg/algebra.hpp"
#include "incalg/fixtures.hpp"
#include "incalg/incidence.hpp"
#include "incalg/interval_bialgebra.hpp"
#include "incalg/poset.hpp"
#include "incalg/relation.hpp"

namespace testing {

using namespace incalg;

inline Rational Q(const char* text) { return Rational::parse(text); }

inline Rational random_rational(std::mt19937_64& rng, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span), den(1, 3);
    return Rational::normalize(num(rng), den(rng));
}

inline LinearOperator random_operator(std::size_t dim, std::mt19937_64& rng) {
    DenseMatrix m(dim, dim);
    std::uniform_int_distribution<int> keep(0, 2);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (keep(rng) == 0) m.at(i, j) = random_rational(rng);
    return LinearOperator(std::move(m));
}

inline IncidenceFunction random_incidence(const IntervalRelation& r, std::mt19937_64& rng) {
    std::vector<Rational> values;
    for (std::size_t c = 0; c < r.class_count(); ++c) values.push_back(random_rational(rng));
    return IncidenceFunction(r, std::move(values));
}

/// Random function with value one on every point class.
inline IncidenceFunction random_unital_incidence(const IntervalRelation& r, std::mt19937_64& rng) {
    std::vector<Rational> values;
    for (std::size_t c = 0; c < r.class_count(); ++c)
        values.push_back(r.is_point_class(c) ? Rational(1) : random_rational(rng));
    return IncidenceFunction(r, std::move(values));
}

inline IntervalBialgebra interval_bialgebra(const Poset& p, RelationKind kind) {
    return build_interval_bialgebra(IntervalRelation::builtin(p, kind));
}

inline std::size_t key_id(const IntervalRelation& r, const std::string& key) {
    auto id = r.find_class(key);
    if (!id) throw std::runtime_error("no class " + key);
    return *id;
}

/// Group algebra of Z/n with the diagonal coalgebra; S(g) = g^-1.
inline FiniteBialgebra cyclic_group_bialgebra(std::size_t n) {
    FiniteAlgebra a{n, std::vector<SparseVector>(n * n), SparseVector::basis(0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.mult[i * n + j] = SparseVector::basis((i + j) % n);
    return FiniteBialgebra{std::move(a), diagonal_coalgebra(n)};
}

/// Sweedler's four dimensional Hopf algebra on 1, g, x, gx with g^2 = 1,
/// x^2 = 0, xg = -gx, Delta g = g (x) g, Delta x = x (x) 1 + g (x) x.
inline FiniteBialgebra sweedler_bialgebra() {
    // words g^a x^b encoded as 2*b + a: 0 = 1, 1 = g, 2 = x, 3 = gx
    FiniteAlgebra a{4, std::vector<SparseVector>(16), SparseVector::basis(0)};
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v) {
            const std::size_t ua = u % 2, ub = u / 2, va = v % 2, vb = v / 2;
            if (ub + vb > 1) continue;
            // g^ua x^ub g^va x^vb: moving g past x flips the sign
            const int sign = (ub == 1 && va == 1) ? -1 : 1;
            a.mult[u * 4 + v].add(((ua + va) % 2) + 2 * (ub + vb), sign);
        }
    FiniteCoalgebra c{4, std::vector<SparseTensor>(4), {Rational(1), Rational(1), Rational(0), Rational(0)}};
    c.comult[0].add(0, 0, 1);
    c.comult[1].add(1, 1, 1);
    c.comult[2].add(2, 0, 1);
    c.comult[2].add(1, 2, 1);
    // Delta(gx) = (g (x) g)(x (x) 1 + g (x) x) = gx (x) g + 1 (x) gx
    c.comult[3].add(3, 1, 1);
    c.comult[3].add(0, 3, 1);
    return FiniteBialgebra{std::move(a), std::move(c)};
}

}  // namespace testing

#endif
