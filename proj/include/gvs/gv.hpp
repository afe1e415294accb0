#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gvs/poly.hpp"
#include "gvs/rtuple.hpp"
#include "gvs/shape.hpp"

namespace gvs {

/// The n x n matrix with (i, j) entry h_{lambda_j - j + i}(i, beta_j; x).
struct GVMatrix {
    Shape shape;
    RTuple beta;
    std::vector<std::vector<MultiPoly>> entries;

    int size() const { return static_cast<int>(entries.size()); }
    std::uint64_t term_count() const;
};

/// Build the Gessel-Viennot matrix for a terminal pair. Requires beta upper.
GVMatrix gv_matrix(const Shape& shape, const RTuple& beta);

enum class SchurMethod { det, det_core, tableau };
std::string method_name(SchurMethod m);

struct SchurResult {
    MultiPoly poly;
    SchurMethod method = SchurMethod::det;
    std::uint64_t matrix_term_count = 0;
};

/// Evaluate s_lambda(beta; x) through the determinant. Requires beta upper
/// and gapless-core; refuses otherwise, since the determinant can be wrong.
/// When beta is not bounded by its platform the core of beta is substituted
/// (method det_core); strict mode turns that fallback into an error.
SchurResult schur_via_det(const Shape& shape, const RTuple& beta, bool strict = false);

/// Total monomial count of the matrix for (lambda, beta): the sum over (i, j)
/// of C(lambda_j - j + beta_j, lambda_j - j + i), zero for negative lower
/// index, one when the lower index is zero.
std::uint64_t efficiency_count(const Shape& shape, const RTuple& beta);

/// Upper-left p x p minor for p = zeta_1 nonempty rows; the determinant is
/// unchanged. Identity when p = n.
GVMatrix reduce_to_minor(const GVMatrix& m);

/// ((x_1...x_n)^{lambda_n}, lambda - lambda_n * (1,...,1)). When lambda_n = 0
/// the monomial is 1 and the shape is returned unchanged.
std::pair<MultiPoly, Shape> factor_out_base(const Shape& shape);

} // namespace gvs
