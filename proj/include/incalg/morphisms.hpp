// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_MORPHISMS_HPP
#define INCALG_MORPHISMS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "incalg/algebra.hpp"
#include "incalg/error.hpp"
#include "incalg/incidence.hpp"
#include "incalg/relation.hpp"

namespace incalg {

/// Map from the classes of `source` to the classes of `target`, induced on
/// bases by a map of intervals.
struct ClassMap {
    IntervalRelation source;
    IntervalRelation target;
    std::vector<std::size_t> map;

    std::size_t operator()(std::size_t cls) const { return map.at(cls); }
};

/// Thrown when a relation does not refine another; carries the two
/// intervals that are equivalent in `fine` but not in `coarse`.
class RefinementError : public Error {
public:
    RefinementError(const std::string& what, Interval first, Interval second)
        : Error(what), first_(first), second_(second) {}
    Interval first() const { return first_; }
    Interval second() const { return second_; }

private:
    Interval first_;
    Interval second_;
};

/// Natural projection from the classes of `fine` onto those of `coarse`.
/// Both relations must be on the same poset (incalg::Error) and fine must
/// refine coarse (RefinementError).
ClassMap refinement_projection(const IntervalRelation& fine, const IntervalRelation& coarse);

/// gamma*(phi) = phi o gamma. Throws incalg::Error when phi is not defined on
/// the target of g.
IncidenceFunction dual_pullback(const ClassMap& g, const IncidenceFunction& phi_target);

/// gamma*(phi * psi) = gamma*(phi) * gamma*(psi) for `samples` random pairs
/// with small integer values, plus gamma*(U) = U.
AxiomCheck check_pullback_morphism(const ClassMap& g, std::size_t samples, std::uint64_t seed);

/// Same identity over all pairs of target delta functions, which span the
/// incidence algebra, plus gamma*(U) = U.
AxiomCheck check_pullback_morphism_exhaustive(const ClassMap& g);

/// (gamma (x) gamma) o Delta_source = Delta_target o gamma on every class.
/// Needs both relations delta-compatible.
AxiomCheck check_coalgebra_morphism(const ClassMap& g);

struct SquarefreeRestriction {
    ClassMap map;
    AxiomReport report;
};

/// Subsets of the primes of N (setdiff) embedded into the divisor lattice
/// of N (ratio) via S -> product of S. The report holds
/// "pullback_morphism", "mobius_restriction" and "restrict_extend_identity".
/// Throws incalg::Error unless N is squarefree.
SquarefreeRestriction squarefree_restriction(unsigned long n);

}  // namespace incalg

#endif
