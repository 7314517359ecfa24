// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/incidence.hpp"

#include "incalg/error.hpp"

namespace incalg {

namespace {

void require_same(const IncidenceFunction& phi, const IncidenceFunction& psi) {
    if (!phi.relation().same(psi.relation())) throw Error("incidence functions live on different relations");
}

LinearOperator hopf_square_operator(const FiniteBialgebra& b) {
    const std::size_t d = b.dim();
    DenseMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        SparseVector col;
        for (const auto& [key, c] : b.coalgebra.comult[j]) col.add_scaled(b.algebra.product(key.first, key.second), c);
        m.set_column(j, col);
    }
    return LinearOperator(std::move(m));
}

AxiomCheck compare_operators(std::string name, const LinearOperator& lhs, const LinearOperator& rhs) {
    for (std::size_t j = 0; j < lhs.dim(); ++j) {
        auto l = lhs.image(j), r = rhs.image(j);
        if (l != r) return AxiomCheck{std::move(name), false, Witness{{j}, l.str(), r.str()}};
    }
    return AxiomCheck{std::move(name), true, std::nullopt};
}

}  // namespace

IncidenceFunction::IncidenceFunction(IntervalRelation relation, std::vector<Rational> values)
    : relation_(std::move(relation)), values_(std::move(values)) {
    if (values_.size() != relation_.class_count()) throw Error("incidence function needs one value per class");
}

const Rational& IncidenceFunction::at_key(std::string_view key) const {
    auto id = relation_.find_class(key);
    if (!id) throw Error("unknown class key '" + std::string(key) + "'");
    return values_[*id];
}

Rational star_at(const IncidenceFunction& phi, const IncidenceFunction& psi, Interval iv) {
    require_same(phi, psi);
    Rational sum;
    for (auto x : interval_elements(phi.relation().poset(), iv.lo, iv.hi)) sum += phi.on(iv.lo, x) * psi.on(x, iv.hi);
    return sum;
}

IncidenceFunction star(const IncidenceFunction& phi, const IncidenceFunction& psi) {
    require_same(phi, psi);
    const auto& r = phi.relation();
    std::vector<Rational> values;
    values.reserve(r.class_count());
    for (const auto& c : r.classes()) values.push_back(star_at(phi, psi, c.representative));
    return IncidenceFunction(r, std::move(values));
}

IncidenceFunction unit_function(const IntervalRelation& r) {
    std::vector<Rational> values(r.class_count());
    for (std::size_t c = 0; c < r.class_count(); ++c)
        if (r.is_point_class(c)) values[c] = 1;
    return IncidenceFunction(r, std::move(values));
}

IncidenceFunction zeta(const IntervalRelation& r) {
    return IncidenceFunction(r, std::vector<Rational>(r.class_count(), Rational(1)));
}

IncidenceFunction incidence_from_vector(const IntervalRelation& r, const SparseVector& alpha) {
    if (alpha.extent() > r.class_count()) throw Error("vector has a basis index beyond the class count");
    std::vector<Rational> values(r.class_count());
    for (const auto& [i, v] : alpha) values[i] = v;
    return IncidenceFunction(r, std::move(values));
}

IncidenceFunction pointwise_product(const IncidenceFunction& phi, const IncidenceFunction& psi) {
    require_same(phi, psi);
    std::vector<Rational> values(phi.size());
    for (std::size_t c = 0; c < phi.size(); ++c) values[c] = phi[c] * psi[c];
    return IncidenceFunction(phi.relation(), std::move(values));
}

std::optional<IncidenceFunction> star_inverse(const IncidenceFunction& phi) {
    const auto& r = phi.relation();
    for (std::size_t c = 0; c < r.class_count(); ++c)
        if (r.is_point_class(c) && phi[c].is_zero()) return std::nullopt;
    std::vector<Rational> psi(r.class_count());
    std::vector<bool> done(r.class_count(), false);
    // classes come sorted by interval size, so every [[a,x]] with x < b is
    // already known when [[a,b]] is reached
    for (std::size_t c = 0; c < r.class_count(); ++c) {
        const auto [a, b] = r.cls(c).representative;
        if (a == b) {
            psi[c] = phi[c].inverse();
        } else {
            Rational sum;
            for (auto x : interval_elements(r.poset(), a, b)) {
                if (x == b) continue;
                const std::size_t ax = r.class_of(a, x);
                if (!done[ax]) throw Error("convolution inverse is not well defined on this relation");
                sum += psi[ax] * phi.on(x, b);
            }
            psi[c] = -sum / phi.on(b, b);
        }
        done[c] = true;
    }
    IncidenceFunction inv(r, std::move(psi));
    const auto u = unit_function(r);
    if (star(inv, phi) != u || star(phi, inv) != u)
        throw InternalError("convolution inverse fails its verification");
    return inv;
}

IncidenceFunction mobius(const IntervalRelation& r) {
    auto m = star_inverse(zeta(r));
    if (!m) throw InternalError("zeta has no convolution inverse");
    return std::move(*m);
}

LinearOperator hat(const IncidenceFunction& phi) {
    DenseMatrix m(phi.size(), phi.size());
    for (std::size_t c = 0; c < phi.size(); ++c) m.at(c, c) = phi[c];
    return LinearOperator(std::move(m));
}

AxiomCheck check_hat_homomorphism(const IntervalBialgebra& ib, const IncidenceFunction& phi,
                                  const IncidenceFunction& psi) {
    require_same(phi, psi);
    if (!phi.relation().same(ib.relation)) throw Error("incidence functions do not belong to this bialgebra");
    auto product = check_interval_product_condition(ib);
    if (!product.ok) {
        const auto& w = product.witness->indices;
        const auto& p = ib.relation.poset();
        throw Error("hat embedding needs products of intervals to be intervals; fails at " + p.label(w[0]) +
                    " <= " + p.label(w[1]) + " <= " + p.label(w[2]));
    }
    const auto& b = ib.bialgebra;
    return compare_operators("hat_homomorphism", hat(star(phi, psi)),
                             convolve_ops(b.coalgebra, b.algebra, hat(phi), hat(psi)));
}

AxiomCheck check_atom_additivity(const IntervalBialgebra& ib, const IncidenceFunction& phi,
                                 const IncidenceFunction& psi) {
    require_same(phi, psi);
    const auto& r = ib.relation;
    if (!phi.relation().same(r)) throw Error("incidence functions do not belong to this bialgebra");
    const auto& p = r.poset();
    auto zero = p.minimum();
    if (!zero) throw Error("atom additivity needs a unique minimum");
    for (std::size_t c = 0; c < r.class_count(); ++c)
        if (r.is_point_class(c) && (phi[c] != 1 || psi[c] != 1))
            throw Error("atom additivity needs functions preserving the unit (value 1 on points)");
    for (auto a : atoms(p)) {
        Rational lhs = star_at(phi, psi, {*zero, a});
        Rational rhs = phi.on(*zero, a) + psi.on(*zero, a);
        if (lhs != rhs) return AxiomCheck{"atom_additivity", false, Witness{{*zero, a}, lhs.str(), rhs.str()}};
    }
    return AxiomCheck{"atom_additivity", true, std::nullopt};
}

AxiomCheck audit_star_representatives(const IncidenceFunction& phi, const IncidenceFunction& psi) {
    const auto prod = star(phi, psi);
    const auto& r = phi.relation();
    for (std::size_t c = 0; c < r.class_count(); ++c)
        for (const auto& m : r.cls(c).members) {
            Rational v = star_at(phi, psi, m);
            if (v != prod[c])
                return AxiomCheck{"star_representatives", false, Witness{{m.lo, m.hi}, v.str(), prod[c].str()}};
        }
    return AxiomCheck{"star_representatives", true, std::nullopt};
}

AxiomCheck audit_mobius(const IntervalRelation& r) {
    const auto coarse = mobius(r);
    const auto fine = mobius(IntervalRelation::builtin(r.poset(), RelationKind::trivial));
    for (std::size_t c = 0; c < r.class_count(); ++c)
        for (const auto& m : r.cls(c).members) {
            const auto& v = fine.on(m.lo, m.hi);
            if (v != coarse[c])
                return AxiomCheck{"mobius_audit", false, Witness{{m.lo, m.hi}, v.str(), coarse[c].str()}};
        }
    return AxiomCheck{"mobius_audit", true, std::nullopt};
}

AxiomReport check_commuting_paths(const FiniteBialgebra& b, const LinearOperator& s) {
    const auto square = hopf_square_operator(b);
    const auto ss = convolve_ops(b.coalgebra, b.algebra, s, s);
    const auto after = square.compose(s);
    const auto before = s.compose(square);
    AxiomReport report;
    report.checks.push_back(compare_operators("star_eq_nabla_delta_after", ss, after));
    report.checks.push_back(compare_operators("star_eq_nabla_delta_before", ss, before));
    report.checks.push_back(compare_operators("hopf_square_commutes", after, before));
    return report;
}

}  // namespace incalg
