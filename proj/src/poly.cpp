#include "gvs/poly.hpp"

#include <sstream>
#include <unordered_map>

namespace gvs {

MultiPoly MultiPoly::constant(int n_vars, Int c) {
    MultiPoly p(n_vars);
    p.add_term(ExpVec(n_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int n_vars, ExpVec exps, Int c) {
    if (static_cast<int>(exps.size()) != n_vars)
        throw domain_error("MultiPoly::monomial: exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw domain_error("MultiPoly::monomial: negative exponent");
    MultiPoly p(n_vars);
    p.add_term(exps, c);
    return p;
}

MultiPoly MultiPoly::variable(int n_vars, int i) {
    if (i < 1 || i > n_vars) throw domain_error("MultiPoly::variable: index out of range");
    ExpVec e(n_vars, 0);
    e[i - 1] = 1;
    return monomial(n_vars, std::move(e));
}

void MultiPoly::add_term(const ExpVec& exps, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(n_vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (n_vars_ != o.n_vars_) throw domain_error("MultiPoly: mismatched n_vars");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (n_vars_ != o.n_vars_) throw domain_error("MultiPoly: mismatched n_vars");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_vars_ != b.n_vars_) throw domain_error("MultiPoly: mismatched n_vars");
    MultiPoly out(a.n_vars_);
    MultiPoly::ExpVec e(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int t = 0; t < a.n_vars_; ++t) e[t] = ea[t] + eb[t];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const Int& c) const {
    MultiPoly out(n_vars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

Int MultiPoly::eval(const std::vector<Int>& point) const {
    if (static_cast<int>(point.size()) != n_vars_)
        throw domain_error("MultiPoly::eval: point dimension mismatch");
    Int total = 0;
    for (const auto& [e, c] : terms_) {
        Int v = c;
        for (int t = 0; t < n_vars_; ++t)
            for (int rep = 0; rep < e[t]; ++rep) v *= point[t];
        total += v;
    }
    return total;
}

MultiPoly MultiPoly::swap_vars(int i, int j) const {
    if (i < 1 || i > n_vars_ || j < 1 || j > n_vars_)
        throw domain_error("MultiPoly::swap_vars: index out of range");
    MultiPoly out(n_vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec e2 = e;
        std::swap(e2[i - 1], e2[j - 1]);
        out.add_term(e2, c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::ostringstream mono;
        bool any_var = false;
        for (int t = 0; t < n_vars_; ++t) {
            if (e[t] == 0) continue;
            if (any_var) mono << '*';
            any_var = true;
            mono << 'x' << (t + 1);
            if (e[t] > 1) mono << '^' << e[t];
        }
        if (!any_var) {
            out << mag;
        } else {
            if (mag != 1) out << mag << '*';
            out << mono.str();
        }
    }
    return out.str();
}

MultiPoly h_complete(int u, int i, int k, int n_vars) {
    if (i < 1 || i > k || k > n_vars)
        throw domain_error("h_complete: need 1 <= i <= k <= n_vars");
    MultiPoly out(n_vars);
    if (u < 0) return out;
    // DFS over weakly increasing index tuples i <= t_1 <= ... <= t_u <= k.
    MultiPoly::ExpVec exps(n_vars, 0);
    std::function<void(int, int)> rec = [&](int pos, int min_t) {
        if (pos == u) {
            out.add_term(exps, 1);
            return;
        }
        for (int t = min_t; t <= k; ++t) {
            ++exps[t - 1];
            rec(pos + 1, t);
            --exps[t - 1];
        }
    };
    rec(0, i);
    return out;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
    const int n = static_cast<int>(m.size());
    int n_vars = 0;
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n)
            throw domain_error("determinant: matrix is not square");
        for (const auto& p : row) {
            if (n_vars == 0) n_vars = p.n_vars();
            if (p.n_vars() != n_vars) throw domain_error("determinant: inconsistent n_vars");
        }
    }
    if (n == 0) return MultiPoly::constant(std::max(n_vars, 0), 1);

    // minor(mask) = det of the submatrix on rows [popcount(mask)..n) and the
    // columns NOT in mask, expanded along its first row.
    std::unordered_map<unsigned, MultiPoly> memo;
    std::function<const MultiPoly&(unsigned)> minor = [&](unsigned mask) -> const MultiPoly& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const int row = __builtin_popcount(mask);
        MultiPoly det(n_vars);
        if (row == n) {
            det = MultiPoly::constant(n_vars, 1);
        } else {
            int sign = 1;
            for (int col = 0; col < n; ++col) {
                if (mask & (1u << col)) continue;
                if (!m[row][col].is_zero()) {
                    MultiPoly piece = m[row][col] * minor(mask | (1u << col));
                    det += sign > 0 ? piece : -piece;
                }
                sign = -sign;
            }
        }
        return memo.emplace(mask, std::move(det)).first->second;
    };
    return minor(0);
}

} // namespace gvs
