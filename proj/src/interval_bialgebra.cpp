// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/interval_bialgebra.hpp"

#include <limits>
#include <optional>

namespace incalg {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

std::string failing_parts(const CompatibilityVerdict& v) {
    std::string out;
    auto add = [&](bool ok, const char* name) {
        if (ok) return;
        if (!out.empty()) out += ", ";
        out += name;
    };
    add(v.nabla.ok, "nabla");
    add(v.delta.ok, "delta");
    add(v.unitary.ok, "unitary");
    return out;
}

struct Multiplication {
    std::vector<std::size_t> product_class;
    std::vector<std::size_t> count;
};

std::size_t split_count(const IntervalRelation& r, Interval iv, std::size_t i, std::size_t j) {
    std::size_t n = 0;
    for (auto x : interval_elements(r.poset(), iv.lo, iv.hi))
        if (r.class_of(iv.lo, x) == i && r.class_of(x, iv.hi) == j) ++n;
    return n;
}

// Returns nullopt when some member disagrees with its representative.
std::optional<Multiplication> multiplication_table(const IntervalRelation& r) {
    const std::size_t k = r.class_count();
    const auto& p = r.poset();
    Multiplication m{std::vector<std::size_t>(k * k, none), std::vector<std::size_t>(k * k, 0)};
    for (const auto& iv : all_intervals(p))
        for (auto x : interval_elements(p, iv.lo, iv.hi)) {
            auto& target = m.product_class[r.class_of(iv.lo, x) * k + r.class_of(x, iv.hi)];
            if (target == none) target = r.class_of(iv);
            else if (target != r.class_of(iv)) throw Error("relation is not nabla-compatible");
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t target = m.product_class[i * k + j];
            if (target == none) continue;
            const auto& cls = r.cls(target);
            const std::size_t n = split_count(r, cls.representative, i, j);
            for (const auto& member : cls.members)
                if (split_count(r, member, i, j) != n) return std::nullopt;
            m.count[i * k + j] = n;
        }
    return m;
}

SparseTensor split_tensor(const IntervalRelation& r, Interval iv) {
    SparseTensor t;
    for (auto x : interval_elements(r.poset(), iv.lo, iv.hi)) t.add(r.class_of(iv.lo, x), r.class_of(x, iv.hi), 1);
    return t;
}

FiniteAlgebra algebra_from(const IntervalRelation& r, const Multiplication& m) {
    const std::size_t k = r.class_count();
    FiniteAlgebra a{k, std::vector<SparseVector>(k * k), {}};
    for (std::size_t i = 0; i < k * k; ++i)
        if (m.product_class[i] != none) a.mult[i].add(m.product_class[i], m.count[i]);
    for (std::size_t c = 0; c < k; ++c)
        if (r.is_point_class(c)) a.unit.add(c, 1);
    return a;
}

// Returns nullopt when some member splits differently from its representative.
std::optional<FiniteCoalgebra> coalgebra_from(const IntervalRelation& r) {
    const std::size_t k = r.class_count();
    FiniteCoalgebra c{k, std::vector<SparseTensor>(k), std::vector<Rational>(k)};
    for (std::size_t id = 0; id < k; ++id) {
        const auto& cls = r.cls(id);
        c.comult[id] = split_tensor(r, cls.representative);
        for (const auto& member : cls.members)
            if (split_tensor(r, member) != c.comult[id]) return std::nullopt;
        c.counit[id] = r.is_point_class(id) ? 1 : 0;
    }
    return c;
}

}  // namespace

IntervalBialgebra build_interval_bialgebra(const IntervalRelation& r) {
    auto verdict = check_compatibility(r);
    if (!verdict.ok())
        throw CompatibilityError("relation is not bialgebra compatible (" + failing_parts(verdict) + ")", verdict);
    auto mult = multiplication_table(r);
    if (!mult) throw InternalError("interval multiplication depends on the representative");
    auto coalg = coalgebra_from(r);
    if (!coalg) throw InternalError("interval comultiplication depends on the representative");
    return IntervalBialgebra{r, FiniteBialgebra{algebra_from(r, *mult), std::move(*coalg)}, std::move(mult->count)};
}

FiniteAlgebra build_interval_algebra(const IntervalRelation& r) {
    auto nabla = check_nabla_compatible(r);
    if (!nabla.ok) throw Error("relation is not nabla-compatible");
    auto mult = multiplication_table(r);
    if (!mult) throw Error("interval multiplication depends on the representative");
    return algebra_from(r, *mult);
}

FiniteCoalgebra build_interval_coalgebra(const IntervalRelation& r) {
    auto delta = check_delta_compatible(r);
    if (!delta.ok) throw Error("relation is not delta-compatible");
    auto coalg = coalgebra_from(r);
    if (!coalg) throw InternalError("interval comultiplication depends on the representative");
    return std::move(*coalg);
}

std::pair<Rational, std::size_t> hopf_square(const IntervalBialgebra& ib, std::size_t cls) {
    if (cls >= ib.dim()) throw Error("class index out of range");
    const auto& b = ib.bialgebra;
    SparseVector image;
    for (const auto& [key, c] : b.coalgebra.comult[cls]) image.add_scaled(b.algebra.product(key.first, key.second), c);
    if (image.nnz() != 1 || image.begin()->first != cls)
        throw InternalError("Hopf square of a class is not a multiple of that class");
    return {image.begin()->second, cls};
}

AxiomCheck check_interval_product_condition(const IntervalBialgebra& ib) {
    const auto& r = ib.relation;
    const auto& p = r.poset();
    for (const auto& iv : all_intervals(p))
        for (auto x : interval_elements(p, iv.lo, iv.hi)) {
            const auto& prod = ib.bialgebra.algebra.product(r.class_of(iv.lo, x), r.class_of(x, iv.hi));
            auto expected = SparseVector::basis(r.class_of(iv));
            if (prod != expected)
                return AxiomCheck{"interval_product", false,
                                  Witness{{iv.lo, x, iv.hi}, prod.str(), expected.str()}};
        }
    return AxiomCheck{"interval_product", true, std::nullopt};
}

}  // namespace incalg
