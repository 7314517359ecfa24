// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "incalg/error.hpp"

namespace incalg {

OrderAxioms check_order_axioms(std::size_t n, const std::vector<bool>& leq) {
    if (leq.size() != n * n) throw Error("order matrix must be n x n");
    auto at = [&](std::size_t a, std::size_t b) { return leq[a * n + b]; };
    OrderAxioms out;
    for (std::size_t a = 0; a < n && out.reflexive; ++a)
        if (!at(a, a)) {
            out.reflexive = false;
            out.witness = {a};
        }
    for (std::size_t a = 0; a < n && out.antisymmetric; ++a)
        for (std::size_t b = a + 1; b < n && out.antisymmetric; ++b)
            if (at(a, b) && at(b, a)) {
                out.antisymmetric = false;
                if (out.witness.empty()) out.witness = {a, b};
            }
    for (std::size_t a = 0; a < n && out.transitive; ++a)
        for (std::size_t b = 0; b < n && out.transitive; ++b) {
            if (!at(a, b)) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (at(b, c) && !at(a, c)) {
                    out.transitive = false;
                    if (out.witness.empty()) out.witness = {a, b, c};
                    break;
                }
        }
    return out;
}

Poset::Poset(std::vector<std::string> labels, std::vector<bool> leq) : labels_(std::move(labels)), leq_(std::move(leq)) {
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw Error("duplicate label '" + l + "'");
    auto axioms = check_order_axioms(labels_.size(), leq_);
    if (!axioms.ok()) throw Error("not a partial order");
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b) {
            if (!lt(a, b)) continue;
            bool cover = true;
            for (std::size_t x = 0; x < size() && cover; ++x) cover = !(lt(a, x) && lt(x, b));
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

std::optional<std::size_t> Poset::minimum() const {
    for (std::size_t m = 0; m < size(); ++m) {
        bool below_all = true;
        for (std::size_t x = 0; x < size() && below_all; ++x) below_all = leq(m, x);
        if (below_all) return m;
    }
    return std::nullopt;
}

Poset poset_from_covers(const std::vector<std::string>& labels,
                        const std::vector<std::pair<std::string, std::string>>& covers) {
    const std::size_t n = labels.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(labels[i], i).second) throw Error("duplicate label '" + labels[i] + "'");
    auto lookup = [&](const std::string& l) {
        auto it = index.find(l);
        if (it == index.end()) throw Error("unknown label '" + l + "'");
        return it->second;
    };
    std::vector<bool> leq(n * n, false);
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = true;
    for (const auto& [a, b] : covers) leq[lookup(a) * n + lookup(b)] = true;
    // Warshall
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[k * n + j]) leq[i * n + j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq[i * n + j] && leq[j * n + i]) throw Error("not a partial order");
    return Poset(labels, std::move(leq));
}

std::vector<std::size_t> interval_elements(const Poset& p, std::size_t a, std::size_t b) {
    if (a >= p.size() || b >= p.size()) throw Error("element index out of range");
    if (!p.leq(a, b)) throw Error("empty interval");
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(a, x) && p.leq(x, b)) out.push_back(x);
    return out;
}

std::vector<Interval> all_intervals(const Poset& p) {
    std::vector<Interval> out;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.leq(a, b)) out.push_back({a, b});
    return out;
}

std::vector<std::size_t> linear_extension(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (p.lt(a, b)) ++indegree[b];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t x = 0; x < n; ++x)
        if (indegree[x] == 0) ready.push(x);
    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        std::size_t x = ready.top();
        ready.pop();
        order.push_back(x);
        for (std::size_t y = 0; y < n; ++y)
            if (p.lt(x, y) && --indegree[y] == 0) ready.push(y);
    }
    return order;
}

std::vector<std::size_t> atoms(const Poset& p) {
    auto zero = p.minimum();
    if (!zero) throw Error("poset has no unique minimum");
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < p.size(); ++a)
        if (p.leq(*zero, a) && interval_elements(p, *zero, a).size() == 2) out.push_back(a);
    return out;
}

namespace {

std::string set_label(const std::vector<long>& ground, unsigned mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        if (!first) s += ',';
        first = false;
        s += std::to_string(ground[i]);
    }
    return s + "}";
}

}  // namespace

Poset subset_lattice(const std::vector<long>& ground) {
    if (ground.size() > 12) throw Error("subset lattice limited to 12 ground elements");
    const unsigned n = static_cast<unsigned>(ground.size());
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::string> labels;
    labels.reserve(size);
    for (unsigned m = 0; m < size; ++m) labels.push_back(set_label(ground, m));
    std::vector<bool> leq(size * size);
    for (unsigned a = 0; a < size; ++a)
        for (unsigned b = 0; b < size; ++b) leq[a * size + b] = (a & b) == a;
    return Poset(std::move(labels), std::move(leq));
}

Poset boolean_lattice(unsigned n) {
    if (n > 12) throw Error("boolean lattice limited to n <= 12");
    std::vector<long> ground;
    for (unsigned i = 1; i <= n; ++i) ground.push_back(i);
    return subset_lattice(ground);
}

Poset chain(unsigned n) {
    if (n > 100000) throw Error("chain too long");
    const std::size_t size = n + 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
    std::vector<bool> leq(size * size);
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = a; b < size; ++b) leq[a * size + b] = true;
    return Poset(std::move(labels), std::move(leq));
}

Poset divisor_lattice(unsigned long n) {
    if (n < 1 || n > 10000) throw Error("divisor lattice requires 1 <= N <= 10000");
    std::vector<unsigned long> divisors;
    for (unsigned long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    const std::size_t size = divisors.size();
    std::vector<std::string> labels;
    for (auto d : divisors) labels.push_back(std::to_string(d));
    std::vector<bool> leq(size * size);
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b) leq[a * size + b] = divisors[b] % divisors[a] == 0;
    return Poset(std::move(labels), std::move(leq));
}

Poset antichain_with_zero(unsigned n) {
    if (n > 1000) throw Error("antichain too large");
    const std::size_t size = n + 1;
    std::vector<std::string> labels{"0"};
    for (unsigned i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
    std::vector<bool> leq(size * size);
    for (std::size_t a = 0; a < size; ++a) {
        leq[a * size + a] = true;
        leq[a] = true;  // row 0: the minimum is below everything
    }
    return Poset(std::move(labels), std::move(leq));
}

Poset antichain(unsigned n) {
    if (n > 1000) throw Error("antichain too large");
    std::vector<std::string> labels;
    for (unsigned i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
    std::vector<bool> leq(std::size_t{n} * n);
    for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = true;
    return Poset(std::move(labels), std::move(leq));
}

}  // namespace incalg
