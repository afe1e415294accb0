#include "gvs/gv.hpp"

namespace gvs {

namespace {

// Matrix entry h_u(i, k; x) extended to i > k: the empty product is still 1
// at u = 0, and there are no multisets at all for u > 0.
MultiPoly entry_poly(int u, int i, int k, int n_vars) {
    if (u < 0) return MultiPoly(n_vars);
    if (u == 0) return MultiPoly::constant(n_vars, 1);
    if (i > k) return MultiPoly(n_vars);
    return h_complete(u, i, k, n_vars);
}

std::uint64_t binom(int top, int bot) {
    if (bot < 0 || top < 0 || bot > top) return 0;
    bot = std::min(bot, top - bot);
    std::uint64_t r = 1;
    for (int t = 1; t <= bot; ++t) r = r * static_cast<std::uint64_t>(top - bot + t) / t;
    return r;
}

} // namespace

std::uint64_t GVMatrix::term_count() const {
    std::uint64_t total = 0;
    for (const auto& row : entries)
        for (const auto& p : row) total += p.term_count();
    return total;
}

GVMatrix gv_matrix(const Shape& shape, const RTuple& beta) {
    if (beta.ctx != shape.ctx) throw domain_error("gv_matrix: tuple context does not match R_lambda");
    if (int i = beta.first_non_upper_index())
        throw domain_error("gv_matrix: beta is not upper at index " + std::to_string(i));
    GVMatrix m{shape, beta, {}};
    m.entries.resize(shape.n);
    for (int i = 1; i <= shape.n; ++i) {
        m.entries[i - 1].reserve(shape.n);
        for (int j = 1; j <= shape.n; ++j)
            m.entries[i - 1].push_back(entry_poly(shape.part(j) - j + i, i, beta.at(j), shape.n));
    }
    return m;
}

std::string method_name(SchurMethod m) {
    switch (m) {
        case SchurMethod::det: return "det";
        case SchurMethod::det_core: return "det-core";
        case SchurMethod::tableau: return "tableau";
    }
    return "?";
}

SchurResult schur_via_det(const Shape& shape, const RTuple& beta, bool strict) {
    if (beta.ctx != shape.ctx)
        throw domain_error("schur_via_det: tuple context does not match R_lambda");
    if (int i = beta.first_non_upper_index())
        throw domain_error("schur_via_det: beta is not upper at index " + std::to_string(i));
    ClassFlags flags = classify(beta);
    if (!flags.is_gapless_core)
        throw domain_error(
            "schur_via_det: " + beta.text() +
            " is not a gapless core tuple; the determinant is not guaranteed to equal the "
            "row bound sum");
    SchurResult out;
    if (flags.is_bounded_by_platform) {
        GVMatrix m = gv_matrix(shape, beta);
        out.method = SchurMethod::det;
        out.matrix_term_count = m.term_count();
        out.poly = determinant(m.entries);
    } else {
        if (strict)
            throw domain_error("schur_via_det: " + beta.text() +
                               " is not bounded by its platform (strict mode refuses the core "
                               "fallback)");
        GVMatrix m = gv_matrix(shape, core(beta));
        out.method = SchurMethod::det_core;
        out.matrix_term_count = m.term_count();
        out.poly = determinant(m.entries);
    }
    return out;
}

std::uint64_t efficiency_count(const Shape& shape, const RTuple& beta) {
    if (beta.n() != shape.n) throw domain_error("efficiency_count: tuple length mismatch");
    std::uint64_t total = 0;
    for (int i = 1; i <= shape.n; ++i) {
        for (int j = 1; j <= shape.n; ++j) {
            const int u = shape.part(j) - j + i;
            if (u < 0) continue;
            if (u == 0) {
                ++total;
                continue;
            }
            total += binom(shape.part(j) - j + beta.at(j), u);
        }
    }
    return total;
}

GVMatrix reduce_to_minor(const GVMatrix& m) {
    const int p = m.shape.cols.empty() ? 0 : m.shape.cols[0];
    if (p >= m.size()) return m;
    GVMatrix out{m.shape, m.beta, {}};
    out.entries.resize(p);
    for (int i = 0; i < p; ++i)
        out.entries[i].assign(m.entries[i].begin(), m.entries[i].begin() + p);
    return out;
}

std::pair<MultiPoly, Shape> factor_out_base(const Shape& shape) {
    const int base = shape.parts.empty() ? 0 : shape.parts.back();
    if (base == 0)
        return {MultiPoly::constant(shape.n, 1), shape};
    std::vector<int> reduced = shape.parts;
    for (int& part : reduced) part -= base;
    return {MultiPoly::monomial(shape.n, std::vector<int>(shape.n, base)),
            make_shape(shape.n, std::move(reduced))};
}

} // namespace gvs
