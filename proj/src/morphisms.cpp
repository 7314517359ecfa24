// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/morphisms.hpp"

#include <random>

#include "incalg/interval_bialgebra.hpp"

namespace incalg {

namespace {

IncidenceFunction random_function(const IntervalRelation& r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<Rational> values;
    values.reserve(r.class_count());
    for (std::size_t c = 0; c < r.class_count(); ++c) values.emplace_back(dist(rng));
    return IncidenceFunction(r, std::move(values));
}

AxiomCheck pullback_pair(const ClassMap& g, const IncidenceFunction& phi, const IncidenceFunction& psi) {
    const auto lhs = dual_pullback(g, star(phi, psi));
    const auto rhs = star(dual_pullback(g, phi), dual_pullback(g, psi));
    for (std::size_t c = 0; c < lhs.size(); ++c)
        if (lhs[c] != rhs[c]) return AxiomCheck{"pullback_morphism", false, Witness{{c}, lhs[c].str(), rhs[c].str()}};
    return AxiomCheck{"pullback_morphism", true, std::nullopt};
}

AxiomCheck pullback_unit(const ClassMap& g) {
    const auto lhs = dual_pullback(g, unit_function(g.target));
    const auto rhs = unit_function(g.source);
    for (std::size_t c = 0; c < lhs.size(); ++c)
        if (lhs[c] != rhs[c]) return AxiomCheck{"pullback_morphism", false, Witness{{c}, lhs[c].str(), rhs[c].str()}};
    return AxiomCheck{"pullback_morphism", true, std::nullopt};
}

std::string product_label(const std::string& set_key) {
    unsigned long prod = 1;
    std::string digits;
    for (char ch : set_key) {
        if (ch >= '0' && ch <= '9') {
            digits += ch;
        } else if (!digits.empty()) {
            prod *= std::stoul(digits);
            digits.clear();
        }
    }
    return std::to_string(prod);
}

}  // namespace

ClassMap refinement_projection(const IntervalRelation& fine, const IntervalRelation& coarse) {
    if (!(fine.poset() == coarse.poset())) throw Error("refinement projection needs relations on the same poset");
    std::vector<std::size_t> map(fine.class_count());
    for (std::size_t c = 0; c < fine.class_count(); ++c) {
        const auto& cls = fine.cls(c);
        map[c] = coarse.class_of(cls.representative);
        for (const auto& m : cls.members)
            if (coarse.class_of(m) != map[c])
                throw RefinementError("relation does not refine the target: " + fine.interval_label(cls.representative) +
                                          " and " + fine.interval_label(m) + " are separated",
                                      cls.representative, m);
    }
    return ClassMap{fine, coarse, std::move(map)};
}

IncidenceFunction dual_pullback(const ClassMap& g, const IncidenceFunction& phi_target) {
    if (!phi_target.relation().same(g.target)) throw Error("function does not live on the target relation");
    std::vector<Rational> values;
    values.reserve(g.map.size());
    for (auto t : g.map) values.push_back(phi_target[t]);
    return IncidenceFunction(g.source, std::move(values));
}

AxiomCheck check_pullback_morphism(const ClassMap& g, std::size_t samples, std::uint64_t seed) {
    if (auto unit = pullback_unit(g); !unit.ok) return unit;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        auto phi = random_function(g.target, rng);
        auto psi = random_function(g.target, rng);
        if (auto check = pullback_pair(g, phi, psi); !check.ok) return check;
    }
    return AxiomCheck{"pullback_morphism", true, std::nullopt};
}

AxiomCheck check_pullback_morphism_exhaustive(const ClassMap& g) {
    if (auto unit = pullback_unit(g); !unit.ok) return unit;
    const std::size_t k = g.target.class_count();
    std::vector<IncidenceFunction> deltas;
    for (std::size_t c = 0; c < k; ++c) deltas.push_back(incidence_from_vector(g.target, SparseVector::basis(c)));
    for (const auto& phi : deltas)
        for (const auto& psi : deltas)
            if (auto check = pullback_pair(g, phi, psi); !check.ok) return check;
    return AxiomCheck{"pullback_morphism", true, std::nullopt};
}

AxiomCheck check_coalgebra_morphism(const ClassMap& g) {
    const auto src = build_interval_coalgebra(g.source);
    const auto tgt = build_interval_coalgebra(g.target);
    for (std::size_t c = 0; c < g.map.size(); ++c) {
        SparseTensor lhs;
        for (const auto& [key, v] : src.comult[c]) lhs.add(g(key.first), g(key.second), v);
        const auto& rhs = tgt.comult[g(c)];
        if (lhs != rhs) return AxiomCheck{"coalgebra_morphism", false, Witness{{c}, lhs.str(), rhs.str()}};
    }
    return AxiomCheck{"coalgebra_morphism", true, std::nullopt};
}

SquarefreeRestriction squarefree_restriction(unsigned long n) {
    if (n < 1 || n > 10000) throw Error("squarefree restriction requires 1 <= N <= 10000");
    std::vector<long> primes;
    unsigned long rest = n;
    for (unsigned long p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        rest /= p;
        if (rest % p == 0) throw Error(std::to_string(n) + " is not squarefree");
        primes.push_back(static_cast<long>(p));
    }
    if (rest > 1) primes.push_back(static_cast<long>(rest));

    auto source = IntervalRelation::builtin(subset_lattice(primes), RelationKind::setdiff);
    auto target = IntervalRelation::builtin(divisor_lattice(n), RelationKind::ratio);
    std::vector<std::size_t> map(source.class_count());
    for (std::size_t c = 0; c < map.size(); ++c) {
        auto t = target.find_class(product_label(source.cls(c).key));
        if (!t) throw InternalError("no divisor class for " + source.cls(c).key);
        map[c] = *t;
    }
    ClassMap g{source, target, std::move(map)};

    AxiomReport report;
    report.checks.push_back(check_pullback_morphism_exhaustive(g));

    const auto pulled = dual_pullback(g, mobius(target));
    const auto mu = mobius(source);
    AxiomCheck restriction{"mobius_restriction", true, std::nullopt};
    for (std::size_t c = 0; c < mu.size(); ++c)
        if (pulled[c] != mu[c]) {
            restriction = AxiomCheck{"mobius_restriction", false, Witness{{c}, pulled[c].str(), mu[c].str()}};
            break;
        }
    report.checks.push_back(restriction);

    // extend each source delta function along g, then restrict it back
    AxiomCheck identity{"restrict_extend_identity", true, std::nullopt};
    for (std::size_t c = 0; c < source.class_count() && identity.ok; ++c) {
        SparseVector extended;
        extended.add(g(c), 1);
        const auto back = dual_pullback(g, incidence_from_vector(target, extended));
        const auto original = incidence_from_vector(source, SparseVector::basis(c));
        for (std::size_t s = 0; s < back.size(); ++s)
            if (back[s] != original[s]) {
                identity = AxiomCheck{"restrict_extend_identity", false, Witness{{c, s}, back[s].str(), original[s].str()}};
                break;
            }
    }
    report.checks.push_back(identity);
    return SquarefreeRestriction{std::move(g), std::move(report)};
}

}  // namespace incalg
