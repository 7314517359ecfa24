// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_INCIDENCE_HPP
#define INCALG_INCIDENCE_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "incalg/algebra.hpp"
#include "incalg/interval_bialgebra.hpp"
#include "incalg/relation.hpp"

namespace incalg {

/// Function on the interval classes of a relation, one value per class id.
class IncidenceFunction {
public:
    /// Throws incalg::Error unless there is exactly one value per class.
    IncidenceFunction(IntervalRelation relation, std::vector<Rational> values);

    const IntervalRelation& relation() const { return relation_; }
    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Rational& operator[](std::size_t cls) const { return values_.at(cls); }
    /// Value on the class of [a, b].
    const Rational& on(std::size_t a, std::size_t b) const { return values_[relation_.class_of(a, b)]; }
    /// Throws incalg::Error for unknown keys.
    const Rational& at_key(std::string_view key) const;

    friend bool operator==(const IncidenceFunction& x, const IncidenceFunction& y) {
        return x.relation_.same(y.relation_) && x.values_ == y.values_;
    }

private:
    IntervalRelation relation_;
    std::vector<Rational> values_;
};

/// (phi * psi)([a,b]) = sum over a <= x <= b of phi([[a,x]]) psi([[x,b]]),
/// for any interval of the poset.
Rational star_at(const IncidenceFunction& phi, const IncidenceFunction& psi, Interval iv);

/// Convolution evaluated on class representatives. Throws incalg::Error when
/// the two functions live on different relations.
IncidenceFunction star(const IncidenceFunction& phi, const IncidenceFunction& psi);

/// U: one on point classes, zero elsewhere.
IncidenceFunction unit_function(const IntervalRelation& r);
IncidenceFunction zeta(const IntervalRelation& r);
/// Phi_alpha with Phi_alpha(I) = alpha_I.
IncidenceFunction incidence_from_vector(const IntervalRelation& r, const SparseVector& alpha);
IncidenceFunction pointwise_product(const IncidenceFunction& phi, const IncidenceFunction& psi);

/// Two-sided convolution inverse, absent iff phi vanishes on a point class.
/// Both products are re-checked against U before returning.
std::optional<IncidenceFunction> star_inverse(const IncidenceFunction& phi);

IncidenceFunction mobius(const IntervalRelation& r);

/// Diagonal operator I -> phi(I) I on the class basis.
LinearOperator hat(const IncidenceFunction& phi);

/// hat(phi * psi) = hat(phi) * hat(psi) in the convolution algebra of ib.
/// Throws incalg::Error if ib violates the interval product condition.
AxiomCheck check_hat_homomorphism(const IntervalBialgebra& ib, const IncidenceFunction& phi,
                                  const IncidenceFunction& psi);

/// (phi * psi)([[0,a]]) = phi([[0,a]]) + psi([[0,a]]) for every atom a.
/// Throws incalg::Error without a unique minimum or unless phi and psi are
/// one on the point class.
AxiomCheck check_atom_additivity(const IntervalBialgebra& ib, const IncidenceFunction& phi,
                                 const IncidenceFunction& psi);

/// star(phi, psi) evaluated on every member of every class agrees with the
/// class value.
AxiomCheck audit_star_representatives(const IncidenceFunction& phi, const IncidenceFunction& psi);

/// The class-level Moebius function agrees with the interval-level Moebius
/// function of the trivial relation on every member of every class.
AxiomCheck audit_mobius(const IntervalRelation& r);

/// The three edges of the Hopf-square diagram for an operator s:
/// "star_eq_nabla_delta_after" (s * s = nabla o Delta o s),
/// "star_eq_nabla_delta_before" (s * s = s o nabla o Delta),
/// "hopf_square_commutes" (nabla o Delta o s = s o nabla o Delta).
AxiomReport check_commuting_paths(const FiniteBialgebra& b, const LinearOperator& s);

}  // namespace incalg

#endif
