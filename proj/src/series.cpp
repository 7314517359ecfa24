// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/series.hpp"

#include <algorithm>
#include <string>

#include "incalg/error.hpp"

namespace incalg {

namespace {

constexpr unsigned max_bernoulli = 60;
constexpr unsigned boolean_limit = 10;
constexpr std::size_t max_mobius = 1000000;

// mu(n) from the smallest-prime-factor sieve.
std::vector<int> mobius_by_factorization(std::size_t n) {
    std::vector<std::size_t> spf(n + 1, 0);
    for (std::size_t p = 2; p <= n; ++p)
        if (spf[p] == 0)
            for (std::size_t m = p; m <= n; m += p)
                if (spf[m] == 0) spf[m] = p;
    std::vector<int> mu(n + 1, 0);
    if (n >= 1) mu[1] = 1;
    for (std::size_t m = 2; m <= n; ++m) {
        const std::size_t p = spf[m], rest = m / p;
        mu[m] = rest % p == 0 ? 0 : -mu[rest];
    }
    return mu;
}

bool is_total(const Poset& p) {
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (!p.leq(a, b) && !p.leq(b, a)) return false;
    return true;
}

// Values phi(I_0) .. phi(I_N) for relations keyed by 0..N.
std::vector<Rational> graded_values(const IncidenceFunction& phi, const char* family) {
    const auto& r = phi.relation();
    std::vector<Rational> out(r.class_count());
    for (std::size_t n = 0; n < out.size(); ++n) {
        auto id = r.find_class(std::to_string(n));
        if (!id) throw Error(std::string(family) + " series needs classes I_0 .. I_N");
        out[n] = phi[*id];
    }
    return out;
}

}  // namespace

TruncatedPowerSeries ps_one(std::size_t order) {
    TruncatedPowerSeries s{std::vector<Rational>(order + 1)};
    s.coeffs[0] = 1;
    return s;
}

TruncatedPowerSeries ps_mul(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
    if (f.coeffs.size() != g.coeffs.size() || f.coeffs.empty()) throw Error("power series orders differ");
    const std::size_t n = f.coeffs.size();
    TruncatedPowerSeries out{std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (f.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) out.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
    }
    return out;
}

std::optional<TruncatedPowerSeries> ps_inverse(const TruncatedPowerSeries& f) {
    if (f.coeffs.empty()) throw Error("empty power series");
    if (f.coeffs[0].is_zero()) return std::nullopt;
    const std::size_t n = f.coeffs.size();
    const Rational c0 = f.coeffs[0].inverse();
    TruncatedPowerSeries g{std::vector<Rational>(n)};
    g.coeffs[0] = c0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational sum;
        for (std::size_t i = 1; i <= k; ++i) sum += f.coeffs[i] * g.coeffs[k - i];
        g.coeffs[k] = -sum * c0;
    }
    return g;
}

TruncatedDirichletSeries dirichlet_one(std::size_t bound) {
    if (bound == 0) throw Error("Dirichlet series bound must be positive");
    TruncatedDirichletSeries s{std::vector<Rational>(bound)};
    s.coeffs[0] = 1;
    return s;
}

TruncatedDirichletSeries dirichlet_mul(const TruncatedDirichletSeries& f, const TruncatedDirichletSeries& g) {
    if (f.bound() != g.bound() || f.bound() == 0) throw Error("Dirichlet series bounds differ");
    const std::size_t n = f.bound();
    TruncatedDirichletSeries out{std::vector<Rational>(n)};
    for (std::size_t d = 1; d <= n; ++d) {
        if (f.at(d).is_zero()) continue;
        for (std::size_t e = 1; d * e <= n; ++e) out.coeffs[d * e - 1] += f.at(d) * g.at(e);
    }
    return out;
}

std::optional<TruncatedDirichletSeries> dirichlet_inverse(const TruncatedDirichletSeries& f) {
    if (f.bound() == 0) throw Error("Dirichlet series bound must be positive");
    if (f.at(1).is_zero()) return std::nullopt;
    const std::size_t n = f.bound();
    const Rational inv1 = f.at(1).inverse();
    // acc[m] collects g_d f_(m/d) over proper divisors d of m seen so far
    std::vector<Rational> acc(n + 1);
    TruncatedDirichletSeries g{std::vector<Rational>(n)};
    for (std::size_t d = 1; d <= n; ++d) {
        Rational gd = d == 1 ? inv1 : -acc[d] * inv1;
        if (!gd.is_zero())
            for (std::size_t e = 2; d * e <= n; ++e)
                if (!f.at(e).is_zero()) acc[d * e] += gd * f.at(e);
        g.coeffs[d - 1] = std::move(gd);
    }
    return g;
}

std::vector<Rational> bernoulli_by_series(unsigned n) {
    TruncatedPowerSeries f{std::vector<Rational>(n + 1)};
    for (unsigned k = 0; k <= n; ++k) f.coeffs[k] = factorial(k + 1).inverse();
    auto g = ps_inverse(f);
    if (!g) throw InternalError("(e^X - 1)/X is not invertible");
    std::vector<Rational> out(n + 1);
    for (unsigned k = 0; k <= n; ++k) out[k] = g->coeffs[k] * factorial(k);
    return out;
}

std::vector<Rational> bernoulli_by_incidence(unsigned n) {
    const unsigned m = std::min(n, boolean_limit);
    auto r = IntervalRelation::builtin(boolean_lattice(m), RelationKind::cardinality);
    std::vector<Rational> values(r.class_count());
    for (unsigned k = 0; k <= m; ++k) values[*r.find_class(std::to_string(k))] = Rational(1) / Rational(k + 1);
    auto inv = star_inverse(IncidenceFunction(r, std::move(values)));
    if (!inv) throw InternalError("phi(I_0) = 1 but phi is not invertible");
    std::vector<Rational> out(n + 1);
    for (unsigned k = 0; k <= m; ++k) out[k] = inv->at_key(std::to_string(k));
    // I_k has binomial(k, j) splits into I_j, I_(k-j)
    for (unsigned k = m + 1; k <= n; ++k) {
        Rational sum;
        for (unsigned j = 0; j < k; ++j) sum += binomial(k, j) * out[j] / Rational(k - j + 1);
        out[k] = -sum;
    }
    return out;
}

std::vector<Rational> bernoulli(unsigned n) {
    if (n > max_bernoulli) throw Error("bernoulli is limited to N <= 60");
    auto series = bernoulli_by_series(n);
    if (series != bernoulli_by_incidence(n)) throw InternalError("Bernoulli numbers disagree between methods");
    return series;
}

std::vector<Rational> classical_mobius(std::size_t n) {
    if (n < 1 || n > max_mobius) throw Error("classical Moebius requires 1 <= N <= 1000000");
    auto inv = dirichlet_inverse(TruncatedDirichletSeries{std::vector<Rational>(n, Rational(1))});
    const auto formula = mobius_by_factorization(n);
    for (std::size_t k = 1; k <= n; ++k)
        if (inv->at(k) != formula[k])
            throw InternalError("Dirichlet inverse disagrees with the factorization formula at " + std::to_string(k));
    return std::move(inv->coeffs);
}

Series incidence_to_series(const IncidenceFunction& phi, SeriesFamily family) {
    const auto& r = phi.relation();
    switch (family) {
        case SeriesFamily::chain: {
            if (r.kind() != RelationKind::diff || !is_total(r.poset()))
                throw Error("chain series needs the diff relation on a chain");
            return TruncatedPowerSeries{graded_values(phi, "chain")};
        }
        case SeriesFamily::boolean_cardinality: {
            if (r.kind() != RelationKind::cardinality)
                throw Error("boolean series needs the cardinality relation");
            auto values = graded_values(phi, "boolean");
            for (std::size_t k = 0; k < values.size(); ++k) values[k] /= factorial(static_cast<unsigned>(k));
            return TruncatedPowerSeries{std::move(values)};
        }
        case SeriesFamily::divisor_ratio: {
            if (r.kind() != RelationKind::ratio) throw Error("Dirichlet series needs the ratio relation");
            std::size_t top = 0;
            for (const auto& c : r.classes()) top = std::max<std::size_t>(top, std::stoul(c.key));
            TruncatedDirichletSeries s{std::vector<Rational>(top)};
            for (std::size_t c = 0; c < r.class_count(); ++c) s.coeffs[std::stoul(r.cls(c).key) - 1] = phi[c];
            return s;
        }
    }
    throw InternalError("unknown series family");
}

AxiomCheck check_series_morphism(const IncidenceFunction& phi, const IncidenceFunction& psi, SeriesFamily family) {
    const auto lhs = incidence_to_series(star(phi, psi), family);
    const auto f = incidence_to_series(phi, family), g = incidence_to_series(psi, family);
    if (family == SeriesFamily::divisor_ratio) {
        const auto& l = std::get<TruncatedDirichletSeries>(lhs);
        const auto rhs = dirichlet_mul(std::get<TruncatedDirichletSeries>(f), std::get<TruncatedDirichletSeries>(g));
        for (const auto& c : phi.relation().classes()) {
            const std::size_t n = std::stoul(c.key);
            if (l.at(n) != rhs.at(n))
                return AxiomCheck{"series_morphism", false, Witness{{n}, l.at(n).str(), rhs.at(n).str()}};
        }
    } else {
        const auto& l = std::get<TruncatedPowerSeries>(lhs);
        const auto rhs = ps_mul(std::get<TruncatedPowerSeries>(f), std::get<TruncatedPowerSeries>(g));
        for (std::size_t k = 0; k < l.coeffs.size(); ++k)
            if (l.coeffs[k] != rhs.coeffs[k])
                return AxiomCheck{"series_morphism", false, Witness{{k}, l.coeffs[k].str(), rhs.coeffs[k].str()}};
    }
    return AxiomCheck{"series_morphism", true, std::nullopt};
}

}  // namespace incalg
