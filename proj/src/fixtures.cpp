// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/fixtures.hpp"

#include <array>

#include "incalg/error.hpp"

namespace incalg {

FiniteCoalgebra diagonal_coalgebra(std::size_t dim) {
    FiniteCoalgebra c{dim, std::vector<SparseTensor>(dim), std::vector<Rational>(dim, Rational(1))};
    for (std::size_t k = 0; k < dim; ++k) c.comult[k] = SparseTensor::basis(k, k);
    return c;
}

FiniteBialgebra quaternion_fixture() {
    // sign and index of e_a e_b for a, b in {1, i, j, k}
    constexpr std::array<std::array<int, 4>, 4> table = {{
        {+1, +2, +3, +4},
        {+2, -1, +4, -3},
        {+3, -4, -1, +2},
        {+4, +3, -2, -1},
    }};
    FiniteAlgebra alg{4, std::vector<SparseVector>(16), SparseVector::basis(0)};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            int code = table[a][b];
            std::size_t idx = static_cast<std::size_t>(code > 0 ? code : -code) - 1;
            alg.mult[a * 4 + b].add(idx, Rational(code > 0 ? 1 : -1));
        }
    return FiniteBialgebra{std::move(alg), diagonal_coalgebra(4)};
}

FiniteBialgebra matrix_bialgebra(std::size_t n) {
    if (n < 1 || n > 6) throw Error("matrix bialgebra size must be between 1 and 6");
    const std::size_t d = n * n;
    FiniteAlgebra alg{d, std::vector<SparseVector>(d * d), {}};
    FiniteCoalgebra coalg{d, std::vector<SparseTensor>(d), std::vector<Rational>(d)};
    for (std::size_t i = 0; i < n; ++i) {
        alg.unit.add(i * n + i, 1);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t l = 0; l < n; ++l) alg.mult[(i * n + j) * d + (j * n + l)].add(i * n + l, 1);
            for (std::size_t k = 0; k < n; ++k) coalg.comult[i * n + j].add(i * n + k, k * n + j, 1);
            coalg.counit[i * n + j] = i == j ? 1 : 0;
        }
    }
    return FiniteBialgebra{std::move(alg), std::move(coalg)};
}

FiniteCoalgebra complex_coalgebra_fixture() {
    FiniteCoalgebra c{2, std::vector<SparseTensor>(2), {Rational(1), Rational(0)}};
    c.comult[0].add(0, 0, 1);
    c.comult[0].add(1, 1, -1);
    c.comult[1].add(0, 1, 1);
    c.comult[1].add(1, 0, 1);
    return c;
}

}  // namespace incalg
