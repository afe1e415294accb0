#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gvs/errors.hpp"

namespace gvs {

using Int = boost::multiprecision::cpp_int;

/// Sparse multivariate polynomial in x_1..x_n with exact integer coefficients.
/// Zero coefficients are never stored; iteration order over terms is
/// descending lexicographic on exponent vectors.
class MultiPoly {
public:
    using ExpVec = std::vector<int>;
    using TermMap = std::map<ExpVec, Int, std::greater<ExpVec>>;

    explicit MultiPoly(int n_vars = 0) : n_vars_(n_vars) {}
    static MultiPoly constant(int n_vars, Int c);
    static MultiPoly monomial(int n_vars, ExpVec exps, Int c = 1);
    static MultiPoly variable(int n_vars, int i);  // x_i, 1-based

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const ExpVec& exps, const Int& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Int& c) const;

    bool operator==(const MultiPoly& o) const {
        return n_vars_ == o.n_vars_ && terms_ == o.terms_;
    }

    /// Ring homomorphism: evaluate at an integer point (x_1, ..., x_n).
    Int eval(const std::vector<Int>& point) const;

    /// The polynomial with variables i and j exchanged.
    MultiPoly swap_vars(int i, int j) const;

    /// "x1^2*x2 + x1*x2^2 - x3^3"; "0" for the zero polynomial.
    std::string str() const;

private:
    int n_vars_;
    TermMap terms_;
};

/// Complete homogeneous symmetric polynomial h_u(i, k; x) in x_i..x_k:
/// zero for u < 0, one for u = 0, otherwise the sum of all products
/// x_{t_1}...x_{t_u} with i <= t_1 <= ... <= t_u <= k.
/// Requires 1 <= i <= k <= n_vars.
MultiPoly h_complete(int u, int i, int k, int n_vars);

/// Exact determinant of a square polynomial matrix, by cofactor expansion
/// memoized on column subsets. Empty matrix has determinant 1.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

} // namespace gvs
