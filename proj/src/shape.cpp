#include "gvs/shape.hpp"

#include <algorithm>
#include <numeric>

namespace gvs {

int Shape::box_count() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Shape make_shape(int n, std::vector<int> parts) {
    if (n < 1) throw domain_error("make_shape: n must be positive");
    if (static_cast<int>(parts.size()) != n)
        throw domain_error("make_shape: expected " + std::to_string(n) + " parts");
    for (int i = 0; i < n; ++i) {
        if (parts[i] < 0) throw domain_error("make_shape: negative part");
        if (i > 0 && parts[i] > parts[i - 1])
            throw domain_error("make_shape: parts must be weakly decreasing");
    }
    Shape s;
    s.n = n;
    s.parts = std::move(parts);
    for (int j = 1; j <= (s.parts.empty() ? 0 : s.parts[0]); ++j) {
        int len = 0;
        for (int i = 1; i <= n; ++i)
            if (s.part(i) >= j) ++len;
        s.cols.push_back(len);
    }
    for (int len : s.cols)
        if (len < n && (s.r_lambda.empty() || s.r_lambda.back() != len))
            s.r_lambda.push_back(len);
    std::sort(s.r_lambda.begin(), s.r_lambda.end());
    s.ctx = RTupleContext(n, s.r_lambda);
    return s;
}

std::vector<int> Tableau::content() const {
    std::vector<int> theta(shape.n, 0);
    for (const auto& col : values)
        for (int v : col) ++theta[v - 1];
    return theta;
}

std::vector<std::vector<int>> Tableau::rows() const {
    std::vector<std::vector<int>> out(shape.n);
    for (int i = 1; i <= shape.n; ++i)
        for (int j = 1; j <= shape.part(i); ++j) out[i - 1].push_back(at(j, i));
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

MultiPoly Tableau::monomial() const { return MultiPoly::monomial(shape.n, content()); }

void enumerate_tableaux(const Shape& shape, const RTuple& beta,
                        const std::function<bool(const Tableau&)>& visit) {
    if (beta.n() != shape.n) throw domain_error("enumerate_tableaux: tuple length mismatch");
    if (!beta.is_upper()) return;
    Tableau t;
    t.shape = shape;
    t.values.resize(shape.cols.size());
    for (size_t j = 0; j < shape.cols.size(); ++j) t.values[j].resize(shape.cols[j]);
    const int ncols = static_cast<int>(shape.cols.size());
    bool keep_going = true;

    // Columns left to right, rows top to bottom, smallest values first:
    // this is lexicographic order on column-reading words. Column-strictness
    // and the row bounds prune each branch as soon as it is placed.
    std::function<void(int, int)> rec = [&](int j, int i) {
        if (!keep_going) return;
        if (j == ncols) {
            keep_going = visit(t);
            return;
        }
        if (i > shape.cols[j]) {
            rec(j + 1, 1);
            return;
        }
        int lo = i;
        if (i > 1) lo = std::max(lo, t.values[j][i - 2] + 1);
        if (j > 0) lo = std::max(lo, t.values[j - 1][i - 1]);
        const int hi = std::min(beta.at(i), shape.n);
        for (int v = lo; v <= hi && keep_going; ++v) {
            t.values[j][i - 1] = v;
            rec(j, i + 1);
        }
    };
    rec(0, 1);
}

std::vector<Tableau> tableaux(const Shape& shape, const RTuple& beta) {
    std::vector<Tableau> out;
    enumerate_tableaux(shape, beta, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

MultiPoly row_bound_sum(const Shape& shape, const RTuple& beta) {
    MultiPoly sum(shape.n);
    enumerate_tableaux(shape, beta, [&](const Tableau& t) {
        sum.add_term(t.content(), 1);
        return true;
    });
    return sum;
}

Tableau max_tableau(const Shape& shape, const RTuple& beta) {
    if (int i = beta.first_non_upper_index())
        throw domain_error("max_tableau: beta is not upper at index " + std::to_string(i));
    Tableau t;
    t.shape = shape;
    t.values.resize(shape.cols.size());
    for (size_t j = 0; j < shape.cols.size(); ++j) t.values[j].resize(shape.cols[j]);
    // Greedy from the rightmost column leftward, bottom to top. Each box takes
    // the largest value below its row bound, below-minus-one, and its right
    // neighbor. Maximality against the full enumeration is a test invariant.
    for (int j = static_cast<int>(shape.cols.size()); j >= 1; --j) {
        for (int i = shape.cols[j - 1]; i >= 1; --i) {
            int v = beta.at(i);
            if (i < shape.cols[j - 1]) v = std::min(v, t.at(j, i + 1) - 1);
            if (j < static_cast<int>(shape.cols.size()) && i <= shape.cols[j]) v = std::min(v, t.at(j + 1, i));
            if (v < i)
                throw consistency_error("max_tableau: no admissible value for box");
            t.values[j - 1][i - 1] = v;
        }
    }
    return t;
}

} // namespace gvs
