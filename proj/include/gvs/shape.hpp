#pragma once

#include <functional>
#include <vector>

#include "gvs/poly.hpp"
#include "gvs/rtuple.hpp"

namespace gvs {

/// Partition lambda with n parts (zeros allowed), its column lengths zeta,
/// and the derived divider set R_lambda of distinct column lengths < n.
struct Shape {
    int n = 0;
    std::vector<int> parts;     // lambda_1 >= ... >= lambda_n >= 0
    std::vector<int> cols;      // zeta_1 >= ... >= zeta_{lambda_1}
    std::vector<int> r_lambda;  // R_lambda, ascending
    RTupleContext ctx;          // carrels for R_lambda

    int part(int i) const { return parts[i - 1]; }        // lambda_i, 1-based
    int col_len(int j) const { return cols[j - 1]; }      // zeta_j, 1-based
    int box_count() const;
    bool operator==(const Shape&) const = default;
};

Shape make_shape(int n, std::vector<int> parts);

/// Semistandard filling, stored column-major: values[j-1][i-1] = T_j(i).
struct Tableau {
    Shape shape;
    std::vector<std::vector<int>> values;

    int at(int j, int i) const { return values[j - 1][i - 1]; }
    std::vector<int> content() const;                  // theta_1..theta_n
    std::vector<std::vector<int>> rows() const;        // row-major view
    MultiPoly monomial() const;                        // x^{Theta(T)}
    bool operator==(const Tableau&) const = default;
};

/// Visit every semistandard tableau of the shape with T_j(i) <= beta_i,
/// in lexicographic order of column-reading words. Yields nothing when beta
/// is not upper. The visitor returns false to stop early.
void enumerate_tableaux(const Shape& shape, const RTuple& beta,
                        const std::function<bool(const Tableau&)>& visit);

std::vector<Tableau> tableaux(const Shape& shape, const RTuple& beta);

/// Row bound sum s_lambda(beta; x): the sum of content monomials over the
/// row bound tableau set. Zero polynomial when the set is empty.
MultiPoly row_bound_sum(const Shape& shape, const RTuple& beta);

/// The entrywise-maximal element of the row bound tableau set.
/// Requires beta upper.
Tableau max_tableau(const Shape& shape, const RTuple& beta);

} // namespace gvs
