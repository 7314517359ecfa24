// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_POSET_HPP
#define INCALG_POSET_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace incalg {

/// Interval [lo, hi] of a poset, by element index.
struct Interval {
    std::size_t lo = 0;
    std::size_t hi = 0;

    bool is_point() const { return lo == hi; }
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Finite poset on the indices 0..n-1 with a label per element. The order
/// is stored as a dense boolean matrix and checked on construction.
class Poset {
public:
    Poset() = default;
    /// Throws incalg::Error on duplicate labels, a non-square matrix, or a
    /// relation that is not reflexive, antisymmetric and transitive.
    Poset(std::vector<std::string> labels, std::vector<bool> leq);

    std::size_t size() const { return labels_.size(); }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
    bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(const std::string& label) const;
    /// Covering pairs (a, b): a < b with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;
    /// Unique minimal element, if there is one.
    std::optional<std::size_t> minimum() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<bool> leq_;
};

/// Verdicts of the three order axioms on a raw relation matrix, each with
/// the first offending element tuple when it fails.
struct OrderAxioms {
    bool reflexive = true;
    bool antisymmetric = true;
    bool transitive = true;
    std::vector<std::size_t> witness;

    bool ok() const { return reflexive && antisymmetric && transitive; }
};

OrderAxioms check_order_axioms(std::size_t n, const std::vector<bool>& leq);

/// Reflexive-transitive closure of the given covers. Throws on duplicate or
/// unknown labels and on cycles ("not a partial order").
Poset poset_from_covers(const std::vector<std::string>& labels,
                        const std::vector<std::pair<std::string, std::string>>& covers);

/// Sorted elements x with a <= x <= b; throws "empty interval" unless a <= b.
std::vector<std::size_t> interval_elements(const Poset& p, std::size_t a, std::size_t b);

/// All pairs a <= b in lexicographic order.
std::vector<Interval> all_intervals(const Poset& p);

/// Topological order; among available elements the smallest index goes first.
std::vector<std::size_t> linear_extension(const Poset& p);

/// Elements a with |[0, a]| = 2; throws unless p has a unique minimum.
std::vector<std::size_t> atoms(const Poset& p);

/// Subsets of {1..n} ordered by inclusion; element index = bitmask,
/// labels like "{}" and "{1,3}". Requires n <= 12.
Poset boolean_lattice(unsigned n);

/// Subsets of the given (distinct, positive) ground set by inclusion, labelled
/// like boolean_lattice. Requires at most 12 ground elements.
Poset subset_lattice(const std::vector<long>& ground);

/// {0..n} with the usual order, labels "0".."n".
Poset chain(unsigned n);

/// Divisors of N ordered by divisibility, ascending, labels are the divisors.
/// Requires 1 <= N <= 10000.
Poset divisor_lattice(unsigned long n);

/// n pairwise incomparable elements "a1".."an" above a common minimum "0".
Poset antichain_with_zero(unsigned n);

/// n pairwise incomparable elements "a1".."an".
Poset antichain(unsigned n);

}  // namespace incalg

#endif
