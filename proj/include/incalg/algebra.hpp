// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_ALGEBRA_HPP
#define INCALG_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incalg/linalg.hpp"

namespace incalg {

/// Associative unital algebra given by structure constants on the basis
/// e_0 .. e_{dim-1}. mult[i * dim + j] is the product e_i e_j.
struct FiniteAlgebra {
    std::size_t dim = 0;
    std::vector<SparseVector> mult;
    SparseVector unit;

    const SparseVector& product(std::size_t i, std::size_t j) const { return mult[i * dim + j]; }
    SparseVector multiply(const SparseVector& x, const SparseVector& y) const;

    /// Throws incalg::Error when the table sizes or indices do not fit dim.
    void validate() const;
};

/// Coassociative counital coalgebra; comult[i] is the image of e_i in
/// V (x) V and counit[i] the counit of e_i.
struct FiniteCoalgebra {
    std::size_t dim = 0;
    std::vector<SparseTensor> comult;
    std::vector<Rational> counit;

    SparseTensor comultiply(const SparseVector& x) const;
    Rational apply_counit(const SparseVector& x) const;

    void validate() const;
};

/// An algebra and a coalgebra on the same space.
struct FiniteBialgebra {
    FiniteAlgebra algebra;
    FiniteCoalgebra coalgebra;

    std::size_t dim() const { return algebra.dim; }
    void validate() const;
};

/// Linear endomorphism; column j of the matrix is the image of e_j.
class LinearOperator {
public:
    LinearOperator() = default;
    explicit LinearOperator(DenseMatrix m);

    static LinearOperator identity(std::size_t dim) { return LinearOperator(DenseMatrix::identity(dim)); }
    static LinearOperator zero(std::size_t dim) { return LinearOperator(DenseMatrix(dim, dim)); }

    std::size_t dim() const { return m_.rows(); }
    const DenseMatrix& matrix() const { return m_; }
    const Rational& at(std::size_t row, std::size_t col) const { return m_.at(row, col); }

    SparseVector image(std::size_t j) const { return m_.column(j); }
    SparseVector apply(const SparseVector& x) const { return m_.apply(x); }
    SparseTensor apply_tensor(const LinearOperator& right, const SparseTensor& t) const;

    /// this o other
    LinearOperator compose(const LinearOperator& other) const { return LinearOperator(m_ * other.m_); }

    friend bool operator==(const LinearOperator&, const LinearOperator&) = default;

private:
    DenseMatrix m_;
};

struct Witness {
    std::vector<std::size_t> indices;
    std::string lhs;
    std::string rhs;
};

struct AxiomCheck {
    std::string axiom;
    bool ok = true;
    std::optional<Witness> witness;
};

/// Outcome of a batch of axiom checks. Failed checks always carry the
/// lexicographically smallest failing basis indices.
struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_ok() const;
    /// Throws incalg::Error if no check of that name exists.
    const AxiomCheck& get(std::string_view axiom) const;
    void append(const AxiomReport& other);
};

AxiomReport check_algebra(const FiniteAlgebra& a);
AxiomReport check_coalgebra(const FiniteCoalgebra& c);
AxiomReport check_commutative(const FiniteAlgebra& a);
AxiomReport check_cocommutative(const FiniteCoalgebra& c);

/// (bi2) Delta o eta = eta (x) eta, (bi3) eps o nabla = eps (x) eps,
/// (bi4) eps o eta = id.
AxiomReport check_mweak(const FiniteBialgebra& b);

/// (bi1): (nabla (x) nabla) o T o (Delta (x) Delta) = Delta o nabla.
AxiomReport check_strong(const FiniteBialgebra& b);

/// nabla o (f (x) g) o Delta.
LinearOperator convolve_ops(const FiniteCoalgebra& c, const FiniteAlgebra& a, const LinearOperator& f,
                            const LinearOperator& g);

/// u = eta o eps, the unit of the convolution algebra.
LinearOperator convolution_unit(const FiniteCoalgebra& c, const FiniteAlgebra& a);

/// Convolution inverse of the identity, if it exists. The system id * S = u
/// is solved exactly and the candidate is kept only if S * id = u holds too.
std::optional<LinearOperator> solve_antipode(const FiniteBialgebra& b);

FiniteAlgebra opposite_algebra(const FiniteAlgebra& a);
FiniteCoalgebra opposite_coalgebra(const FiniteCoalgebra& c);
FiniteBialgebra opposite_bialgebra(const FiniteBialgebra& b);

/// Tensor products over the row-major pair basis (i, j) -> i * d2 + j.
FiniteAlgebra tensor_algebra(const FiniteAlgebra& a1, const FiniteAlgebra& a2);
FiniteCoalgebra tensor_coalgebra(const FiniteCoalgebra& c1, const FiniteCoalgebra& c2);
FiniteBialgebra tensor_bialgebra(const FiniteBialgebra& b1, const FiniteBialgebra& b2);
LinearOperator tensor_operator(const LinearOperator& f, const LinearOperator& g);

/// Checks whether nabla: A (x) A -> A is an algebra morphism, i.e.
/// nabla((x (x) y)(z (x) w)) = nabla(x (x) y) nabla(z (x) w) and
/// nabla(1 (x) 1) = 1 on all basis elements.
AxiomReport check_multiplication_morphism(const FiniteAlgebra& a);

/// Elements b among the basis vectors and the unit with Delta(b) = b (x) b
/// and eps(b) = 1, without duplicates.
std::vector<SparseVector> grouplike_candidates(const FiniteBialgebra& b);

/// S o nabla = nabla^op o (S (x) S) and Delta^op o S = (S (x) S) o Delta.
AxiomReport check_antimorphism(const FiniteBialgebra& b, const LinearOperator& s);

}  // namespace incalg

#endif
