// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/relation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <set>

#include "incalg/error.hpp"

namespace incalg {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
constexpr std::size_t max_isotype_size = 8;

std::optional<long> parse_integer(std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::optional<std::set<long>> parse_set(std::string_view s) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') return std::nullopt;
    s = s.substr(1, s.size() - 2);
    std::set<long> out;
    while (!s.empty()) {
        auto comma = s.find(',');
        auto v = parse_integer(s.substr(0, comma));
        if (!v) return std::nullopt;
        out.insert(*v);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::string set_key(const std::set<long>& s) {
    std::string out = "{";
    bool first = true;
    for (long v : s) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(v);
    }
    return out + "}";
}

// Numeric keys compare as numbers, everything else lexicographically; a
// numeric key sorts before a non-numeric one.
bool key_less(const std::string& a, const std::string& b) {
    auto na = parse_integer(a), nb = parse_integer(b);
    if (na && nb) return *na < *nb;
    if (na != nb && (na || nb)) return na.has_value();
    return a < b;
}

[[noreturn]] void inapplicable(RelationKind kind, const std::string& need) {
    throw Error("relation '" + std::string(relation_name(kind)) + "' requires " + need);
}

}  // namespace

struct IntervalRelation::Data {
    Poset poset;
    RelationKind kind;
    std::vector<IntervalClass> classes;
    std::vector<std::size_t> class_index;
    std::map<std::string, std::size_t, std::less<>> by_key;
};

std::string_view relation_name(RelationKind kind) {
    switch (kind) {
        case RelationKind::trivial: return "trivial";
        case RelationKind::points: return "points";
        case RelationKind::setdiff: return "setdiff";
        case RelationKind::cardinality: return "cardinality";
        case RelationKind::diff: return "diff";
        case RelationKind::ratio: return "ratio";
        case RelationKind::isotype: return "isotype";
        case RelationKind::partition: return "partition";
    }
    return "?";
}

std::optional<RelationKind> relation_kind_from_name(std::string_view name) {
    if (name == "=" || name == "trivial") return RelationKind::trivial;
    if (name == "points") return RelationKind::points;
    if (name == "setdiff") return RelationKind::setdiff;
    if (name == "cardinality") return RelationKind::cardinality;
    if (name == "diff") return RelationKind::diff;
    if (name == "ratio") return RelationKind::ratio;
    if (name == "isotype") return RelationKind::isotype;
    return std::nullopt;
}

std::string isotype_key(const Poset& poset, std::size_t a, std::size_t b) {
    auto elems = interval_elements(poset, a, b);
    const std::size_t m = elems.size();
    if (m > max_isotype_size)
        throw Error("isotype canonical form is limited to intervals of at most 8 elements");
    std::vector<std::size_t> middle;
    for (auto x : elems)
        if (x != a && x != b) middle.push_back(x);
    std::string best;
    std::vector<std::size_t> order(m);
    do {
        order.front() = a;
        std::copy(middle.begin(), middle.end(), order.begin() + 1);
        order.back() = b;
        bool extension = true;
        for (std::size_t i = 0; i < m && extension; ++i)
            for (std::size_t j = 0; j < i && extension; ++j) extension = !poset.lt(order[i], order[j]);
        if (!extension) continue;
        std::string bits;
        bits.reserve(m * (m - 1) / 2);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) bits += poset.leq(order[i], order[j]) ? '1' : '0';
        if (best.empty() || bits < best) best = std::move(bits);
    } while (std::next_permutation(middle.begin(), middle.end()));
    return std::to_string(m) + ":" + best;
}

IntervalRelation IntervalRelation::assemble(Poset poset, RelationKind kind, std::vector<IntervalClass> classes) {
    for (auto& c : classes) {
        std::sort(c.members.begin(), c.members.end());
        c.representative = c.members.front();
        c.rep_elements = interval_elements(poset, c.representative.lo, c.representative.hi);
    }
    std::sort(classes.begin(), classes.end(), [](const IntervalClass& x, const IntervalClass& y) {
        if (x.rep_elements.size() != y.rep_elements.size()) return x.rep_elements.size() < y.rep_elements.size();
        return key_less(x.key, y.key);
    });
    auto data = std::make_shared<Data>();
    const std::size_t n = poset.size();
    data->class_index.assign(n * n, npos);
    for (std::size_t id = 0; id < classes.size(); ++id) {
        for (const auto& iv : classes[id].members) data->class_index[iv.lo * n + iv.hi] = id;
        if (!data->by_key.emplace(classes[id].key, id).second)
            throw InternalError("duplicate class key '" + classes[id].key + "'");
    }
    data->poset = std::move(poset);
    data->kind = kind;
    data->classes = std::move(classes);
    return IntervalRelation(std::move(data));
}

IntervalRelation IntervalRelation::builtin(Poset poset, RelationKind kind) {
    if (kind == RelationKind::partition) throw Error("a partition relation needs explicit blocks");
    const std::size_t n = poset.size();
    auto label = [&](std::size_t i) -> const std::string& { return poset.label(i); };

    std::vector<std::set<long>> sets;
    std::vector<long> numbers;
    if (kind == RelationKind::setdiff || kind == RelationKind::cardinality) {
        for (std::size_t i = 0; i < n; ++i) {
            auto s = parse_set(label(i));
            if (!s) inapplicable(kind, "subset labels such as {1,2}");
            sets.push_back(std::move(*s));
        }
    } else if (kind == RelationKind::diff || kind == RelationKind::ratio) {
        for (std::size_t i = 0; i < n; ++i) {
            auto v = parse_integer(label(i));
            if (!v || (kind == RelationKind::ratio && *v <= 0))
                inapplicable(kind, kind == RelationKind::diff ? "integer labels" : "positive integer (divisor) labels");
            numbers.push_back(*v);
        }
    }

    std::map<std::string, std::vector<Interval>> groups;
    for (const auto& iv : all_intervals(poset)) {
        const auto [a, b] = iv;
        std::string key;
        switch (kind) {
            case RelationKind::trivial: key = "[" + label(a) + "," + label(b) + "]"; break;
            case RelationKind::points: key = a == b ? "point" : "[" + label(a) + "," + label(b) + "]"; break;
            case RelationKind::setdiff:
            case RelationKind::cardinality: {
                if (!std::includes(sets[b].begin(), sets[b].end(), sets[a].begin(), sets[a].end()))
                    inapplicable(kind, "subset labels ordered by inclusion");
                std::set<long> d;
                std::set_difference(sets[b].begin(), sets[b].end(), sets[a].begin(), sets[a].end(),
                                    std::inserter(d, d.end()));
                key = kind == RelationKind::setdiff ? set_key(d) : std::to_string(d.size());
                break;
            }
            case RelationKind::diff:
                if (numbers[b] < numbers[a]) inapplicable(kind, "integer labels increasing along the order");
                key = std::to_string(numbers[b] - numbers[a]);
                break;
            case RelationKind::ratio:
                if (numbers[b] % numbers[a] != 0) inapplicable(kind, "divisor labels ordered by divisibility");
                key = std::to_string(numbers[b] / numbers[a]);
                break;
            case RelationKind::isotype: key = isotype_key(poset, a, b); break;
            case RelationKind::partition: break;
        }
        groups[key].push_back(iv);
    }
    std::vector<IntervalClass> classes;
    classes.reserve(groups.size());
    for (auto& [key, members] : groups) classes.push_back(IntervalClass{key, {}, std::move(members), {}});
    return assemble(std::move(poset), kind, std::move(classes));
}

IntervalRelation IntervalRelation::from_partition(Poset poset, const std::vector<std::vector<Interval>>& blocks) {
    const std::size_t n = poset.size();
    std::vector<bool> covered(n * n, false);
    std::vector<IntervalClass> classes;
    for (const auto& block : blocks) {
        if (block.empty()) throw Error("partition contains an empty block");
        IntervalClass c;
        for (const auto& iv : block) {
            if (iv.lo >= n || iv.hi >= n || !poset.leq(iv.lo, iv.hi))
                throw Error("partition block contains a non-interval");
            if (covered[iv.lo * n + iv.hi]) throw Error("partition blocks are not disjoint");
            covered[iv.lo * n + iv.hi] = true;
            c.members.push_back(iv);
        }
        auto rep = *std::min_element(c.members.begin(), c.members.end());
        c.key = "[" + poset.label(rep.lo) + "," + poset.label(rep.hi) + "]";
        classes.push_back(std::move(c));
    }
    for (const auto& iv : all_intervals(poset))
        if (!covered[iv.lo * n + iv.hi])
            throw Error("partition does not cover interval [" + poset.label(iv.lo) + "," + poset.label(iv.hi) + "]");
    return assemble(std::move(poset), RelationKind::partition, std::move(classes));
}

const Poset& IntervalRelation::poset() const { return data_->poset; }
RelationKind IntervalRelation::kind() const { return data_->kind; }
std::size_t IntervalRelation::class_count() const { return data_->classes.size(); }
const IntervalClass& IntervalRelation::cls(std::size_t id) const { return data_->classes.at(id); }
const std::vector<IntervalClass>& IntervalRelation::classes() const { return data_->classes; }

std::size_t IntervalRelation::class_of(std::size_t a, std::size_t b) const {
    const std::size_t n = data_->poset.size();
    if (a >= n || b >= n) throw Error("element index out of range");
    std::size_t id = data_->class_index[a * n + b];
    if (id == npos) throw Error("empty interval");
    return id;
}

std::optional<std::size_t> IntervalRelation::find_class(std::string_view key) const {
    auto it = data_->by_key.find(key);
    if (it == data_->by_key.end()) return std::nullopt;
    return it->second;
}

std::string IntervalRelation::interval_label(Interval i) const {
    return "[" + poset().label(i.lo) + "," + poset().label(i.hi) + "]";
}

CompatResult check_unitary(const IntervalRelation& r) {
    const auto& p = r.poset();
    for (std::size_t a = 1; a < p.size(); ++a)
        if (r.class_of(a, a) != r.class_of(0, 0)) return CompatResult{false, {{0, 0}, {a, a}}};
    return {};
}

CompatResult check_nabla_compatible(const IntervalRelation& r) {
    const auto& p = r.poset();
    const std::size_t n = p.size();
    struct Seen {
        std::size_t outer;
        std::vector<std::size_t> chain;
    };
    std::map<std::pair<std::size_t, std::size_t>, Seen> seen;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!p.leq(a, b)) continue;
            const std::size_t ab = r.class_of(a, b);
            for (std::size_t c = 0; c < n; ++c) {
                if (!p.leq(b, c)) continue;
                const std::size_t ac = r.class_of(a, c);
                auto [it, inserted] = seen.try_emplace({ab, r.class_of(b, c)}, Seen{ac, {a, b, c}});
                if (!inserted && it->second.outer != ac) return CompatResult{false, {it->second.chain, {a, b, c}}};
            }
        }
    return {};
}

namespace {

// Kuhn's augmenting-path matching; adjacency[x] lists admissible targets.
bool augment(std::size_t x, const std::vector<std::vector<std::size_t>>& adjacency, std::vector<bool>& visited,
             std::vector<std::size_t>& match_of_target) {
    for (std::size_t y : adjacency[x]) {
        if (visited[y]) continue;
        visited[y] = true;
        if (match_of_target[y] == npos || augment(match_of_target[y], adjacency, visited, match_of_target)) {
            match_of_target[y] = x;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_delta_bijection(const IntervalRelation& r, Interval from, Interval to) {
    const auto& p = r.poset();
    auto left = interval_elements(p, from.lo, from.hi);
    auto right = interval_elements(p, to.lo, to.hi);
    if (left.size() != right.size()) return std::nullopt;
    std::vector<std::vector<std::size_t>> adjacency(left.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (r.class_of(from.lo, left[i]) == r.class_of(to.lo, right[j]) &&
                r.class_of(left[i], from.hi) == r.class_of(right[j], to.hi))
                adjacency[i].push_back(j);
    std::vector<std::size_t> match_of_target(right.size(), npos);
    for (std::size_t i = 0; i < left.size(); ++i) {
        std::vector<bool> visited(right.size(), false);
        if (!augment(i, adjacency, visited, match_of_target)) return std::nullopt;
    }
    std::vector<std::size_t> images(left.size());
    for (std::size_t j = 0; j < right.size(); ++j) images[match_of_target[j]] = right[j];
    return images;
}

bool verify_delta_bijection(const IntervalRelation& r, Interval from, Interval to,
                            const std::vector<std::size_t>& images) {
    const auto& p = r.poset();
    auto left = interval_elements(p, from.lo, from.hi);
    auto right = interval_elements(p, to.lo, to.hi);
    if (images.size() != left.size() || left.size() != right.size()) return false;
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != right) return false;
    for (std::size_t i = 0; i < left.size(); ++i)
        if (r.class_of(from.lo, left[i]) != r.class_of(to.lo, images[i]) ||
            r.class_of(left[i], from.hi) != r.class_of(images[i], to.hi))
            return false;
    return true;
}

CompatResult check_delta_compatible(const IntervalRelation& r) {
    // bijections compose and invert, so matching each member against the
    // representative covers every pair of equivalent intervals
    for (const auto& c : r.classes())
        for (const auto& m : c.members) {
            if (m == c.representative) continue;
            if (!find_delta_bijection(r, c.representative, m))
                return CompatResult{false, {{c.representative.lo, c.representative.hi}, {m.lo, m.hi}}};
        }
    return {};
}

CompatibilityVerdict check_compatibility(const IntervalRelation& r) {
    return CompatibilityVerdict{check_nabla_compatible(r), check_delta_compatible(r), check_unitary(r)};
}

}  // namespace incalg
