// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/algebra.hpp"

#include <array>
#include <map>
#include <sstream>
#include <utility>

#include "incalg/error.hpp"

namespace incalg {

namespace {

// Elements of V (x) V (x) V, only needed for coassociativity.
class Tensor3 {
public:
    void add(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = entries_.try_emplace({i, j, k}, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    std::string str() const {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (const auto& [key, v] : entries_) {
            if (!first) os << ", ";
            first = false;
            os << '(' << key[0] << ',' << key[1] << ',' << key[2] << "):" << v;
        }
        os << '}';
        return os.str();
    }
    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::map<std::array<std::size_t, 3>, Rational> entries_;
};

AxiomCheck passed(std::string name) { return AxiomCheck{std::move(name), true, std::nullopt}; }

AxiomCheck failed(std::string name, std::vector<std::size_t> indices, std::string lhs, std::string rhs) {
    return AxiomCheck{std::move(name), false, Witness{std::move(indices), std::move(lhs), std::move(rhs)}};
}

void check_vector(const SparseVector& v, std::size_t dim, const char* what) {
    if (v.extent() > dim) throw Error(std::string(what) + ": basis index out of range");
}

}  // namespace

SparseVector FiniteAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
    SparseVector out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) out.add_scaled(product(i, j), a * b);
    return out;
}

void FiniteAlgebra::validate() const {
    if (mult.size() != dim * dim) throw Error("multiplication table must have dim^2 entries");
    for (const auto& v : mult) check_vector(v, dim, "multiplication table");
    check_vector(unit, dim, "unit");
}

SparseTensor FiniteCoalgebra::comultiply(const SparseVector& x) const {
    SparseTensor out;
    for (const auto& [i, a] : x) out.add_scaled(comult[i], a);
    return out;
}

Rational FiniteCoalgebra::apply_counit(const SparseVector& x) const {
    Rational r;
    for (const auto& [i, a] : x) r += a * counit[i];
    return r;
}

void FiniteCoalgebra::validate() const {
    if (comult.size() != dim || counit.size() != dim) throw Error("coalgebra tables must have dim entries");
    for (const auto& t : comult)
        for (const auto& [k, v] : t)
            if (k.first >= dim || k.second >= dim) throw Error("comultiplication: basis index out of range");
}

void FiniteBialgebra::validate() const {
    algebra.validate();
    coalgebra.validate();
    if (algebra.dim != coalgebra.dim) throw Error("dimension mismatch between algebra and coalgebra");
}

LinearOperator::LinearOperator(DenseMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw Error("linear operator must be square");
}

SparseTensor LinearOperator::apply_tensor(const LinearOperator& right, const SparseTensor& t) const {
    SparseTensor out;
    for (const auto& [k, c] : t) out.add_scaled(tensor_product(image(k.first), right.image(k.second)), c);
    return out;
}

bool AxiomReport::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

const AxiomCheck& AxiomReport::get(std::string_view axiom) const {
    for (const auto& c : checks)
        if (c.axiom == axiom) return c;
    throw Error("no check named '" + std::string(axiom) + "'");
}

void AxiomReport::append(const AxiomReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

AxiomReport check_algebra(const FiniteAlgebra& a) {
    a.validate();
    const std::size_t d = a.dim;
    AxiomReport report;

    AxiomCheck assoc = passed("associativity");
    for (std::size_t i = 0; i < d && assoc.ok; ++i)
        for (std::size_t j = 0; j < d && assoc.ok; ++j)
            for (std::size_t k = 0; k < d && assoc.ok; ++k) {
                auto lhs = a.multiply(a.product(i, j), SparseVector::basis(k));
                auto rhs = a.multiply(SparseVector::basis(i), a.product(j, k));
                if (lhs != rhs) assoc = failed("associativity", {i, j, k}, lhs.str(), rhs.str());
            }
    report.checks.push_back(std::move(assoc));

    AxiomCheck unitality = passed("unitarity");
    for (std::size_t i = 0; i < d && unitality.ok; ++i) {
        auto e = SparseVector::basis(i);
        auto left = a.multiply(a.unit, e);
        auto right = a.multiply(e, a.unit);
        if (left != e)
            unitality = failed("unitarity", {i}, left.str(), e.str());
        else if (right != e)
            unitality = failed("unitarity", {i}, right.str(), e.str());
    }
    report.checks.push_back(std::move(unitality));
    return report;
}

AxiomReport check_coalgebra(const FiniteCoalgebra& c) {
    c.validate();
    AxiomReport report;

    AxiomCheck coassoc = passed("coassociativity");
    for (std::size_t i = 0; i < c.dim && coassoc.ok; ++i) {
        Tensor3 lhs, rhs;
        for (const auto& [k, v] : c.comult[i]) {
            for (const auto& [k2, w] : c.comult[k.first]) lhs.add(k2.first, k2.second, k.second, v * w);
            for (const auto& [k2, w] : c.comult[k.second]) rhs.add(k.first, k2.first, k2.second, v * w);
        }
        if (lhs != rhs) coassoc = failed("coassociativity", {i}, lhs.str(), rhs.str());
    }
    report.checks.push_back(std::move(coassoc));

    AxiomCheck counit = passed("counitarity");
    for (std::size_t i = 0; i < c.dim && counit.ok; ++i) {
        SparseVector left, right;
        for (const auto& [k, v] : c.comult[i]) {
            left.add(k.second, v * c.counit[k.first]);
            right.add(k.first, v * c.counit[k.second]);
        }
        auto e = SparseVector::basis(i);
        if (left != e)
            counit = failed("counitarity", {i}, left.str(), e.str());
        else if (right != e)
            counit = failed("counitarity", {i}, right.str(), e.str());
    }
    report.checks.push_back(std::move(counit));
    return report;
}

AxiomReport check_commutative(const FiniteAlgebra& a) {
    a.validate();
    AxiomCheck check = passed("commutativity");
    for (std::size_t i = 0; i < a.dim && check.ok; ++i)
        for (std::size_t j = 0; j < a.dim && check.ok; ++j)
            if (a.product(i, j) != a.product(j, i))
                check = failed("commutativity", {i, j}, a.product(i, j).str(), a.product(j, i).str());
    return AxiomReport{{std::move(check)}};
}

AxiomReport check_cocommutative(const FiniteCoalgebra& c) {
    c.validate();
    AxiomCheck check = passed("cocommutativity");
    for (std::size_t i = 0; i < c.dim && check.ok; ++i) {
        auto flipped = c.comult[i].flipped();
        if (flipped != c.comult[i]) check = failed("cocommutativity", {i}, c.comult[i].str(), flipped.str());
    }
    return AxiomReport{{std::move(check)}};
}

AxiomReport check_mweak(const FiniteBialgebra& b) {
    b.validate();
    const auto& alg = b.algebra;
    const auto& coalg = b.coalgebra;
    AxiomReport report;

    auto du = coalg.comultiply(alg.unit);
    auto uu = tensor_product(alg.unit, alg.unit);
    report.checks.push_back(du == uu ? passed("bi2") : failed("bi2", {}, du.str(), uu.str()));

    AxiomCheck bi3 = passed("bi3");
    for (std::size_t i = 0; i < b.dim() && bi3.ok; ++i)
        for (std::size_t j = 0; j < b.dim() && bi3.ok; ++j) {
            auto lhs = coalg.apply_counit(alg.product(i, j));
            auto rhs = coalg.counit[i] * coalg.counit[j];
            if (lhs != rhs) bi3 = failed("bi3", {i, j}, lhs.str(), rhs.str());
        }
    report.checks.push_back(std::move(bi3));

    auto eu = coalg.apply_counit(alg.unit);
    report.checks.push_back(eu == Rational(1) ? passed("bi4") : failed("bi4", {}, eu.str(), "1"));
    return report;
}

AxiomReport check_strong(const FiniteBialgebra& b) {
    b.validate();
    const auto& alg = b.algebra;
    const auto& coalg = b.coalgebra;
    AxiomCheck bi1 = passed("bi1");
    for (std::size_t i = 0; i < b.dim() && bi1.ok; ++i)
        for (std::size_t j = 0; j < b.dim() && bi1.ok; ++j) {
            SparseTensor lhs;
            for (const auto& [ki, a] : coalg.comult[i])
                for (const auto& [kj, c] : coalg.comult[j])
                    lhs.add_scaled(tensor_product(alg.product(ki.first, kj.first), alg.product(ki.second, kj.second)),
                                   a * c);
            auto rhs = coalg.comultiply(alg.product(i, j));
            if (lhs != rhs) bi1 = failed("bi1", {i, j}, lhs.str(), rhs.str());
        }
    return AxiomReport{{std::move(bi1)}};
}

LinearOperator convolve_ops(const FiniteCoalgebra& c, const FiniteAlgebra& a, const LinearOperator& f,
                            const LinearOperator& g) {
    const std::size_t d = a.dim;
    if (c.dim != d || f.dim() != d || g.dim() != d) throw Error("dimension mismatch");
    DenseMatrix out(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        SparseVector col;
        for (const auto& [key, coeff] : c.comult[k]) {
            auto fx = f.image(key.first);
            auto gy = g.image(key.second);
            col.add_scaled(a.multiply(fx, gy), coeff);
        }
        out.set_column(k, col);
    }
    return LinearOperator(std::move(out));
}

LinearOperator convolution_unit(const FiniteCoalgebra& c, const FiniteAlgebra& a) {
    if (c.dim != a.dim) throw Error("dimension mismatch");
    DenseMatrix out(a.dim, a.dim);
    for (std::size_t k = 0; k < a.dim; ++k) out.set_column(k, a.unit.scaled(c.counit[k]));
    return LinearOperator(std::move(out));
}

std::optional<LinearOperator> solve_antipode(const FiniteBialgebra& b) {
    b.validate();
    const std::size_t d = b.dim();
    const auto& alg = b.algebra;
    const auto& coalg = b.coalgebra;
    // unknown S(q, j) sits at q * d + j; equation (k, p) is component p of
    // (id * S)(e_k) = u(e_k)
    DenseMatrix system(d * d, d * d);
    SparseVector rhs;
    for (std::size_t k = 0; k < d; ++k) {
        for (const auto& [key, c] : coalg.comult[k]) {
            const auto [i, j] = key;
            for (std::size_t q = 0; q < d; ++q)
                for (const auto& [p, m] : alg.product(i, q)) system.at(k * d + p, q * d + j) += c * m;
        }
        for (const auto& [p, v] : alg.unit) rhs.add(k * d + p, v * coalg.counit[k]);
    }
    auto solution = solve_linear(system, rhs);
    if (!solution) return std::nullopt;
    DenseMatrix s(d, d);
    for (const auto& [idx, v] : *solution) s.at(idx / d, idx % d) = v;
    LinearOperator candidate(std::move(s));

    const auto u = convolution_unit(coalg, alg);
    const auto id = LinearOperator::identity(d);
    if (convolve_ops(coalg, alg, id, candidate) != u) throw InternalError("antipode solver returned a non-solution");
    if (convolve_ops(coalg, alg, candidate, id) != u) return std::nullopt;
    return candidate;
}

FiniteAlgebra opposite_algebra(const FiniteAlgebra& a) {
    a.validate();
    FiniteAlgebra out{a.dim, std::vector<SparseVector>(a.mult.size()), a.unit};
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) out.mult[i * a.dim + j] = a.product(j, i);
    return out;
}

FiniteCoalgebra opposite_coalgebra(const FiniteCoalgebra& c) {
    c.validate();
    FiniteCoalgebra out{c.dim, {}, c.counit};
    out.comult.reserve(c.dim);
    for (const auto& t : c.comult) out.comult.push_back(t.flipped());
    return out;
}

FiniteBialgebra opposite_bialgebra(const FiniteBialgebra& b) {
    return FiniteBialgebra{opposite_algebra(b.algebra), opposite_coalgebra(b.coalgebra)};
}

FiniteAlgebra tensor_algebra(const FiniteAlgebra& a1, const FiniteAlgebra& a2) {
    a1.validate();
    a2.validate();
    const std::size_t d2 = a2.dim, d = a1.dim * a2.dim;
    FiniteAlgebra out{d, std::vector<SparseVector>(d * d), {}};
    for (std::size_t i1 = 0; i1 < a1.dim; ++i1)
        for (std::size_t j1 = 0; j1 < d2; ++j1)
            for (std::size_t i2 = 0; i2 < a1.dim; ++i2)
                for (std::size_t j2 = 0; j2 < d2; ++j2) {
                    auto& slot = out.mult[(i1 * d2 + j1) * d + (i2 * d2 + j2)];
                    for (const auto& [p, x] : a1.product(i1, i2))
                        for (const auto& [q, y] : a2.product(j1, j2)) slot.add(p * d2 + q, x * y);
                }
    for (const auto& [p, x] : a1.unit)
        for (const auto& [q, y] : a2.unit) out.unit.add(p * d2 + q, x * y);
    return out;
}

FiniteCoalgebra tensor_coalgebra(const FiniteCoalgebra& c1, const FiniteCoalgebra& c2) {
    c1.validate();
    c2.validate();
    const std::size_t d2 = c2.dim;
    FiniteCoalgebra out{c1.dim * d2, std::vector<SparseTensor>(c1.dim * d2), std::vector<Rational>(c1.dim * d2)};
    for (std::size_t i = 0; i < c1.dim; ++i)
        for (std::size_t j = 0; j < d2; ++j) {
            auto& t = out.comult[i * d2 + j];
            for (const auto& [k1, a] : c1.comult[i])
                for (const auto& [k2, b] : c2.comult[j])
                    t.add(k1.first * d2 + k2.first, k1.second * d2 + k2.second, a * b);
            out.counit[i * d2 + j] = c1.counit[i] * c2.counit[j];
        }
    return out;
}

FiniteBialgebra tensor_bialgebra(const FiniteBialgebra& b1, const FiniteBialgebra& b2) {
    return FiniteBialgebra{tensor_algebra(b1.algebra, b2.algebra), tensor_coalgebra(b1.coalgebra, b2.coalgebra)};
}

LinearOperator tensor_operator(const LinearOperator& f, const LinearOperator& g) {
    return LinearOperator(kronecker(f.matrix(), g.matrix()));
}

AxiomReport check_multiplication_morphism(const FiniteAlgebra& a) {
    a.validate();
    const std::size_t d = a.dim;
    AxiomCheck check = passed("nabla_multiplicative");
    for (std::size_t i = 0; i < d && check.ok; ++i)
        for (std::size_t j = 0; j < d && check.ok; ++j)
            for (std::size_t k = 0; k < d && check.ok; ++k)
                for (std::size_t l = 0; l < d && check.ok; ++l) {
                    // (e_i (x) e_j)(e_k (x) e_l) = e_i e_k (x) e_j e_l
                    auto lhs = a.multiply(a.product(i, k), a.product(j, l));
                    auto rhs = a.multiply(a.product(i, j), a.product(k, l));
                    if (lhs != rhs) check = failed("nabla_multiplicative", {i, j, k, l}, lhs.str(), rhs.str());
                }
    AxiomReport report{{std::move(check)}};
    auto uu = a.multiply(a.unit, a.unit);
    report.checks.push_back(uu == a.unit ? passed("nabla_unital") : failed("nabla_unital", {}, uu.str(), a.unit.str()));
    return report;
}

std::vector<SparseVector> grouplike_candidates(const FiniteBialgebra& b) {
    b.validate();
    std::vector<SparseVector> candidates;
    for (std::size_t i = 0; i < b.dim(); ++i) candidates.push_back(SparseVector::basis(i));
    candidates.push_back(b.algebra.unit);
    std::vector<SparseVector> out;
    for (const auto& v : candidates) {
        if (v.is_zero()) continue;
        if (b.coalgebra.comultiply(v) != tensor_product(v, v)) continue;
        if (b.coalgebra.apply_counit(v) != Rational(1)) continue;
        bool seen = false;
        for (const auto& w : out) seen = seen || (w == v);
        if (!seen) out.push_back(v);
    }
    return out;
}

AxiomReport check_antimorphism(const FiniteBialgebra& b, const LinearOperator& s) {
    b.validate();
    const std::size_t d = b.dim();
    if (s.dim() != d) throw Error("dimension mismatch");
    AxiomReport report;

    AxiomCheck alg = passed("algebra_antimorphism");
    for (std::size_t i = 0; i < d && alg.ok; ++i)
        for (std::size_t j = 0; j < d && alg.ok; ++j) {
            auto lhs = s.apply(b.algebra.product(i, j));
            auto rhs = b.algebra.multiply(s.image(j), s.image(i));
            if (lhs != rhs) alg = failed("algebra_antimorphism", {i, j}, lhs.str(), rhs.str());
        }
    report.checks.push_back(std::move(alg));

    AxiomCheck coalg = passed("coalgebra_antimorphism");
    for (std::size_t i = 0; i < d && coalg.ok; ++i) {
        auto lhs = b.coalgebra.comultiply(s.image(i)).flipped();
        auto rhs = s.apply_tensor(s, b.coalgebra.comult[i]);
        if (lhs != rhs) coalg = failed("coalgebra_antimorphism", {i}, lhs.str(), rhs.str());
    }
    report.checks.push_back(std::move(coalg));
    return report;
}

}  // namespace incalg
