#pragma once

#include <vector>

#include "gvs/poly.hpp"
#include "gvs/rtuple.hpp"
#include "gvs/shape.hpp"

namespace gvs {

/// Permutation of [n] in one-line form.
struct Permutation {
    std::vector<int> one_line;

    explicit Permutation(std::vector<int> w);
    int n() const { return static_cast<int>(one_line.size()); }
    int at(int i) const { return one_line[i - 1]; }
    bool is_identity() const;
    /// Strictly increasing within each carrel of R_lambda.
    bool is_lambda_permutation(const Shape& shape) const;
    /// Reduced word produced by repeatedly removing the leftmost descent;
    /// applying the letters left to right rebuilds the permutation.
    std::vector<int> reduced_word() const;
    std::string text() const;  // "2,1,3"
    bool operator==(const Permutation&) const = default;
};

/// Isobaric divided difference: (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}).
/// The division is performed exactly; a nonzero remainder raises
/// consistency_error. Requires 1 <= i < n_vars.
MultiPoly divided_difference(int i, const MultiPoly& f);

/// Demazure character d_lambda(pi; x): the divided differences of a reduced
/// word of pi applied to x^lambda. Requires a lambda-permutation.
MultiPoly demazure_char(const Shape& shape, const Permutation& pi);

/// Matching report for the gapless determinant polynomials against the
/// Demazure characters of the lambda-permutations.
struct MatchReport {
    struct Entry {
        RTuple gamma;
        std::vector<Permutation> matching_pis;  // all matching lambda-permutations
    };
    std::vector<Entry> matched;
    std::vector<RTuple> unmatched_gammas;
    std::uint64_t catalan = 0;

    bool all_matched() const { return unmatched_gammas.empty(); }
};

MatchReport match_demazure_characters(const Shape& shape);

} // namespace gvs
