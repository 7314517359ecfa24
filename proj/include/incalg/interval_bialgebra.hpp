// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_INTERVAL_BIALGEBRA_HPP
#define INCALG_INTERVAL_BIALGEBRA_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "incalg/algebra.hpp"
#include "incalg/error.hpp"
#include "incalg/relation.hpp"

namespace incalg {

/// Thrown when a relation is not bialgebra compatible; carries the verdict.
class CompatibilityError : public Error {
public:
    CompatibilityError(const std::string& what, CompatibilityVerdict verdict)
        : Error(what), verdict_(std::move(verdict)) {}
    const CompatibilityVerdict& verdict() const { return verdict_; }

private:
    CompatibilityVerdict verdict_;
};

/// Interval bialgebra L(P, ~) on the class basis of a relation.
struct IntervalBialgebra {
    IntervalRelation relation;
    FiniteBialgebra bialgebra;
    /// multiplicities[I * k + J] = n_{I,J}, the coefficient of I J (zero when
    /// no interval of class I is followed by one of class J).
    std::vector<std::size_t> multiplicities;

    std::size_t dim() const { return bialgebra.dim(); }
    std::size_t multiplicity(std::size_t i, std::size_t j) const { return multiplicities[i * dim() + j]; }
};

/// Requires a unitary, nabla- and delta-compatible relation (throws
/// CompatibilityError otherwise). Structure constants come from the
/// representatives and are re-derived from every other member; a mismatch
/// throws incalg::InternalError.
IntervalBialgebra build_interval_bialgebra(const IntervalRelation& r);

/// Algebra part only; needs nabla-compatibility. The unit is the sum of all
/// point classes, so non-unitary relations such as the trivial one work.
/// Throws incalg::Error when multiplicities depend on the representative.
FiniteAlgebra build_interval_algebra(const IntervalRelation& r);

/// Coalgebra part only; needs delta-compatibility.
FiniteCoalgebra build_interval_coalgebra(const IntervalRelation& r);

/// nabla o Delta on a class: (eigenvalue, class).
std::pair<Rational, std::size_t> hopf_square(const IntervalBialgebra& ib, std::size_t cls);

/// nabla([[a,x]] (x) [[x,b]]) = [[a,b]] with coefficient one for all
/// a <= x <= b. The witness lists (a, x, b) and both sides.
AxiomCheck check_interval_product_condition(const IntervalBialgebra& ib);

}  // namespace incalg

#endif
