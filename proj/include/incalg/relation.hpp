// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_RELATION_HPP
#define INCALG_RELATION_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incalg/poset.hpp"

namespace incalg {

enum class RelationKind { trivial, points, setdiff, cardinality, diff, ratio, isotype, partition };

std::string_view relation_name(RelationKind kind);
/// Accepts "trivial" (or "="), "points", "setdiff", "cardinality", "diff",
/// "ratio" and "isotype".
std::optional<RelationKind> relation_kind_from_name(std::string_view name);

struct IntervalClass {
    std::string key;
    Interval representative;
    std::vector<Interval> members;
    /// Elements of the representative interval, sorted.
    std::vector<std::size_t> rep_elements;
};

/// Equivalence relation on the intervals of a poset. Classes are ordered by
/// the size of their representative interval, then by key (numeric keys
/// compare as numbers). The representative is the smallest member.
/// Copies share the same immutable data.
class IntervalRelation {
public:
    /// Throws incalg::Error when the labels do not carry the structure the
    /// key needs (subsets for setdiff/cardinality, integers for diff,
    /// divisors for ratio), or when an isotype interval exceeds 8 elements.
    static IntervalRelation builtin(Poset poset, RelationKind kind);

    /// Explicit partition of all intervals; verifies coverage and
    /// disjointness.
    static IntervalRelation from_partition(Poset poset, const std::vector<std::vector<Interval>>& blocks);

    const Poset& poset() const;
    RelationKind kind() const;
    std::size_t class_count() const;
    const IntervalClass& cls(std::size_t id) const;
    const std::vector<IntervalClass>& classes() const;

    /// Class of [a, b]; throws "empty interval" unless a <= b.
    std::size_t class_of(std::size_t a, std::size_t b) const;
    std::size_t class_of(Interval i) const { return class_of(i.lo, i.hi); }
    std::optional<std::size_t> find_class(std::string_view key) const;
    /// Number of elements of the representative interval.
    std::size_t interval_size(std::size_t id) const { return cls(id).rep_elements.size(); }
    bool is_point_class(std::size_t id) const { return cls(id).representative.is_point(); }

    /// "[a,b]" with element labels.
    std::string interval_label(Interval i) const;

    /// Same underlying data (not a structural comparison).
    bool same(const IntervalRelation& other) const { return data_ == other.data_; }

private:
    struct Data;
    explicit IntervalRelation(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    static IntervalRelation assemble(Poset poset, RelationKind kind, std::vector<IntervalClass> classes);

    std::shared_ptr<const Data> data_;
};

/// Canonical form of the induced subposet on [a, b]: the smallest
/// upper-triangular order string over all linear extensions, prefixed with the
/// interval size. Throws incalg::Error above 8 elements.
std::string isotype_key(const Poset& poset, std::size_t a, std::size_t b);

/// Result of a compatibility check. On failure `witness` holds element tuples:
/// two point intervals for unitarity, two chains (a,b,c), (a',b',c') for
/// nabla, two intervals for delta.
struct CompatResult {
    bool ok = true;
    std::vector<std::vector<std::size_t>> witness;
};

struct CompatibilityVerdict {
    CompatResult nabla;
    CompatResult delta;
    CompatResult unitary;

    bool ok() const { return nabla.ok && delta.ok && unitary.ok; }
};

/// All one-point intervals lie in a single class.
CompatResult check_unitary(const IntervalRelation& r);

/// [a,b]~[a',b'] and [b,c]~[b',c'] imply [a,c]~[a',c'], checked over all
/// pairs of chains a<=b<=c. The witness is the first conflicting pair in
/// lexicographic chain order.
CompatResult check_nabla_compatible(const IntervalRelation& r);

/// Every member of a class admits a bijection from the representative
/// preserving the classes of lower and upper subintervals. Decided by
/// bipartite perfect matching.
CompatResult check_delta_compatible(const IntervalRelation& r);

CompatibilityVerdict check_compatibility(const IntervalRelation& r);

/// Bijection f: [from] -> [to] with [a,x]~[a',f(x)] and [x,b]~[f(x),b'],
/// listed as the images of interval_elements(from) in order.
std::optional<std::vector<std::size_t>> find_delta_bijection(const IntervalRelation& r, Interval from, Interval to);

/// Pointwise re-check of a bijection certificate.
bool verify_delta_bijection(const IntervalRelation& r, Interval from, Interval to,
                            const std::vector<std::size_t>& images);

}  // namespace incalg

#endif
