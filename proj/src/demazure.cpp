#include "gvs/demazure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gvs/equivalence.hpp"
#include "gvs/gv.hpp"

namespace gvs {

Permutation::Permutation(std::vector<int> w) : one_line(std::move(w)) {
    std::vector<bool> seen(one_line.size(), false);
    for (int v : one_line) {
        if (v < 1 || v > n() || seen[v - 1])
            throw domain_error("Permutation: not a bijection on [n]");
        seen[v - 1] = true;
    }
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (at(i) != i) return false;
    return true;
}

bool Permutation::is_lambda_permutation(const Shape& shape) const {
    if (n() != shape.n) throw domain_error("is_lambda_permutation: size mismatch");
    const RTupleContext& ctx = shape.ctx;
    for (int h = 1; h <= ctx.carrel_count(); ++h)
        for (int i = ctx.q[h - 1] + 1; i < ctx.q[h]; ++i)
            if (at(i) >= at(i + 1)) return false;
    return true;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> w = one_line;
    std::vector<int> letters;
    for (;;) {
        int descent = 0;
        for (int i = 1; i < static_cast<int>(w.size()); ++i) {
            if (w[i - 1] > w[i]) {
                descent = i;
                break;
            }
        }
        if (!descent) break;
        std::swap(w[descent - 1], w[descent]);
        letters.push_back(descent);
    }
    return letters;
}

std::string Permutation::text() const {
    std::ostringstream out;
    for (int i = 1; i <= n(); ++i) {
        if (i > 1) out << ',';
        out << at(i);
    }
    return out.str();
}

MultiPoly divided_difference(int i, const MultiPoly& f) {
    const int n = f.n_vars();
    if (i < 1 || i >= n) throw domain_error("divided_difference: index out of range");
    MultiPoly numerator =
        MultiPoly::variable(n, i) * f - MultiPoly::variable(n, i + 1) * f.swap_vars(i, i + 1);

    // Exact division by (x_i - x_{i+1}): group terms by the exponents of the
    // other variables, then run synthetic division in x_i with coefficients
    // that are univariate polynomials in x_{i+1}.
    using Bivariate = std::map<std::pair<int, int>, Int>;  // (a, b) -> coeff of x_i^a x_{i+1}^b
    std::map<std::vector<int>, Bivariate> groups;
    for (const auto& [exps, coeff] : numerator.terms()) {
        std::vector<int> key = exps;
        const int a = key[i - 1], b = key[i];
        key[i - 1] = key[i] = 0;
        groups[std::move(key)][{a, b}] += coeff;
    }

    MultiPoly quotient(n);
    for (const auto& [key, terms] : groups) {
        int top = 0;
        for (const auto& [ab, c] : terms)
            if (c != 0) top = std::max(top, ab.first);
        std::map<std::pair<int, int>, Int> q;  // quotient terms for this group
        std::map<int, Int> carry;              // z-polynomial carried down one x_i degree
        for (int a = top; a >= 1; --a) {
            // Coefficient of x_i^a in the running dividend.
            std::map<int, Int> coeff = carry;
            for (const auto& [ab, c] : terms)
                if (ab.first == a) coeff[ab.second] += c;
            // It becomes the x_i^{a-1} quotient coefficient; multiplying the
            // divisor tail -x_{i+1} shifts it down with a z-degree bump.
            carry.clear();
            for (const auto& [b, c] : coeff) {
                if (c == 0) continue;
                q[{a - 1, b}] += c;
                carry[b + 1] += c;
            }
        }
        // Remainder: the x_i^0 coefficient of the dividend plus the carry.
        std::map<int, Int> rem = carry;
        for (const auto& [ab, c] : terms)
            if (ab.first == 0) rem[ab.second] += c;
        for (const auto& [b, c] : rem)
            if (c != 0)
                throw consistency_error("divided_difference: nonzero remainder");
        for (const auto& [ab, c] : q) {
            if (c == 0) continue;
            std::vector<int> exps = key;
            exps[i - 1] = ab.first;
            exps[i] = ab.second;
            quotient.add_term(exps, c);
        }
    }
    return quotient;
}

MultiPoly demazure_char(const Shape& shape, const Permutation& pi) {
    if (!pi.is_lambda_permutation(shape))
        throw domain_error("demazure_char: " + pi.text() + " is not a lambda-permutation");
    MultiPoly f = MultiPoly::monomial(shape.n, shape.parts);
    for (int letter : pi.reduced_word()) f = divided_difference(letter, f);
    return f;
}

MatchReport match_demazure_characters(const Shape& shape) {
    MatchReport report;
    report.catalan = parabolic_catalan(shape);

    std::vector<std::pair<Permutation, MultiPoly>> characters;
    std::vector<int> w(shape.n);
    std::iota(w.begin(), w.end(), 1);
    do {
        Permutation pi(w);
        if (pi.is_lambda_permutation(shape))
            characters.emplace_back(pi, demazure_char(shape, pi));
    } while (std::next_permutation(w.begin(), w.end()));

    for (const RTuple& gamma : gapless_tuples(shape)) {
        MultiPoly det = determinant(gv_matrix(shape, gamma).entries);
        MatchReport::Entry entry{gamma, {}};
        for (const auto& [pi, ch] : characters)
            if (ch == det) entry.matching_pis.push_back(pi);
        if (entry.matching_pis.empty())
            report.unmatched_gammas.push_back(gamma);
        else
            report.matched.push_back(std::move(entry));
    }
    return report;
}

} // namespace gvs
