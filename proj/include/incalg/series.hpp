// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_SERIES_HPP
#define INCALG_SERIES_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "incalg/algebra.hpp"
#include "incalg/incidence.hpp"

namespace incalg {

/// c_0 + c_1 X + ... + c_N X^N, computed mod X^(N+1).
struct TruncatedPowerSeries {
    std::vector<Rational> coeffs;

    std::size_t order() const { return coeffs.size() - 1; }
    friend bool operator==(const TruncatedPowerSeries&, const TruncatedPowerSeries&) = default;
};

/// phi_1 1^-s + ... + phi_N N^-s; coeffs[n - 1] holds phi_n.
struct TruncatedDirichletSeries {
    std::vector<Rational> coeffs;

    std::size_t bound() const { return coeffs.size(); }
    const Rational& at(std::size_t n) const { return coeffs.at(n - 1); }
    friend bool operator==(const TruncatedDirichletSeries&, const TruncatedDirichletSeries&) = default;
};

/// Cauchy product; throws incalg::Error on different orders.
TruncatedPowerSeries ps_mul(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g);
/// Absent when c_0 = 0.
std::optional<TruncatedPowerSeries> ps_inverse(const TruncatedPowerSeries& f);
TruncatedPowerSeries ps_one(std::size_t order);

/// (f g)_n = sum over d | n of f_d g_(n/d); throws incalg::Error on
/// different bounds.
TruncatedDirichletSeries dirichlet_mul(const TruncatedDirichletSeries& f, const TruncatedDirichletSeries& g);
/// Absent when phi_1 = 0.
std::optional<TruncatedDirichletSeries> dirichlet_inverse(const TruncatedDirichletSeries& f);
TruncatedDirichletSeries dirichlet_one(std::size_t bound);

/// Bernoulli numbers from the inverse of (e^X - 1)/X.
std::vector<Rational> bernoulli_by_series(unsigned n);
/// Bernoulli numbers as the convolution inverse of phi(I_k) = 1/(k+1) on the
/// boolean lattice with the cardinality relation; beyond the lattice size
/// limit the recursion continues with binomial multiplicities.
std::vector<Rational> bernoulli_by_incidence(unsigned n);
/// beta_0 .. beta_n, both ways; disagreement throws incalg::InternalError.
/// Requires n <= 60.
std::vector<Rational> bernoulli(unsigned n);

/// mu_1 .. mu_n as the Dirichlet inverse of the all-ones series, checked
/// against the prime factorization formula. Requires 1 <= n <= 10^6.
std::vector<Rational> classical_mobius(std::size_t n);

enum class SeriesFamily { chain, boolean_cardinality, divisor_ratio };

using Series = std::variant<TruncatedPowerSeries, TruncatedDirichletSeries>;

/// chain: sum phi(I_n) X^n; boolean_cardinality: sum phi(I_n)/n! X^n;
/// divisor_ratio: sum phi(I_n) n^-s with zero at non-divisors of the top.
/// Throws incalg::Error when the relation does not fit the family.
Series incidence_to_series(const IncidenceFunction& phi, SeriesFamily family);

/// Series of phi * psi equals the product of the two series (Dirichlet
/// coefficients compared at divisors of the top element only).
AxiomCheck check_series_morphism(const IncidenceFunction& phi, const IncidenceFunction& psi, SeriesFamily family);

}  // namespace incalg

#endif
