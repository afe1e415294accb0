#include "gvs/rtuple.hpp"

#include <algorithm>
#include <sstream>

namespace gvs {

RTupleContext::RTupleContext(int n_, std::vector<int> r_set) : n(n_), dividers(std::move(r_set)) {
    if (n < 1) throw domain_error("RTupleContext: n must be positive");
    for (size_t t = 0; t < dividers.size(); ++t) {
        if (dividers[t] < 1 || dividers[t] > n - 1)
            throw domain_error("RTupleContext: divider " + std::to_string(dividers[t]) +
                               " outside [1, n-1]");
        if (t > 0 && dividers[t] <= dividers[t - 1])
            throw domain_error("RTupleContext: dividers must be strictly increasing");
    }
    q.reserve(dividers.size() + 2);
    q.push_back(0);
    q.insert(q.end(), dividers.begin(), dividers.end());
    q.push_back(n);
}

int RTupleContext::carrel_of(int i) const {
    for (int h = 1; h <= carrel_count(); ++h)
        if (i > q[h - 1] && i <= q[h]) return h;
    throw domain_error("carrel_of: index out of range");
}

RTuple::RTuple(RTupleContext c, std::vector<int> e) : ctx(std::move(c)), entries(std::move(e)) {
    if (static_cast<int>(entries.size()) != ctx.n)
        throw domain_error("RTuple: expected " + std::to_string(ctx.n) + " entries, got " +
                           std::to_string(entries.size()));
    for (int v : entries)
        if (v < 1 || v > ctx.n)
            throw domain_error("RTuple: entry " + std::to_string(v) + " outside [1, n]");
}

bool RTuple::is_upper() const { return first_non_upper_index() == 0; }

int RTuple::first_non_upper_index() const {
    for (int i = 1; i <= n(); ++i)
        if (at(i) < i) return i;
    return 0;
}

std::string RTuple::text() const {
    std::ostringstream out;
    for (int i = 1; i <= n(); ++i) {
        if (i > 1) out << (std::find(ctx.dividers.begin(), ctx.dividers.end(), i - 1) != ctx.dividers.end() ? ';' : ',');
        out << at(i);
    }
    return out.str();
}

RTuple RTuple::parse(const RTupleContext& ctx, const std::string& s) {
    std::vector<int> entries;
    std::vector<int> seen_dividers;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw domain_error("RTuple::parse: empty entry in \"" + s + "\"");
        entries.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',') {
            flush();
        } else if (ch == ';') {
            flush();
            seen_dividers.push_back(static_cast<int>(entries.size()));
        } else if (ch == ' ') {
            continue;
        } else if (ch >= '0' && ch <= '9') {
            cur.push_back(ch);
        } else {
            throw domain_error(std::string("RTuple::parse: unexpected character '") + ch + "'");
        }
    }
    flush();
    if (!seen_dividers.empty() && seen_dividers != ctx.dividers)
        throw domain_error("RTuple::parse: dividers in \"" + s + "\" do not match R");
    return RTuple(ctx, std::move(entries));
}

bool leq(const RTuple& a, const RTuple& b) {
    if (a.ctx != b.ctx) throw domain_error("leq: mismatched contexts");
    for (int i = 1; i <= a.n(); ++i)
        if (a.at(i) > b.at(i)) return false;
    return true;
}

std::string CriticalList::text() const {
    std::ostringstream out;
    out << '(';
    for (size_t h = 0; h < carrel_pairs.size(); ++h) {
        if (h) out << ';';
        out << '{';
        for (size_t u = 0; u < carrel_pairs[h].size(); ++u) {
            if (u) out << ',';
            out << '(' << carrel_pairs[h][u].index << ',' << carrel_pairs[h][u].entry << ')';
        }
        out << '}';
    }
    out << ')';
    return out.str();
}

namespace {

struct CritData {
    CriticalList cl;
    std::vector<int> delta;  // 0-based
    std::vector<int> xi;
};

// The right-to-left recursion of the core/platform construction, run once,
// producing the critical list together with delta and xi.
CritData critical_recursion(const RTuple& beta) {
    if (int i = beta.first_non_upper_index())
        throw domain_error("critical recursion requires an upper tuple; entry " +
                           std::to_string(i) + " is below its index");
    const RTupleContext& ctx = beta.ctx;
    CritData out;
    out.delta.assign(ctx.n, 0);
    out.xi.assign(ctx.n, 0);
    out.cl.carrel_pairs.resize(ctx.carrel_count());
    for (int h = 1; h <= ctx.carrel_count(); ++h) {
        const int lo = ctx.q[h - 1], hi = ctx.q[h];
        std::vector<int> xs;  // critical indices, right to left
        xs.push_back(hi);
        for (;;) {
            const int prev = xs.back();
            int found = 0;
            for (int x = prev - 1; x > lo; --x) {
                if (beta.at(prev) - beta.at(x) > prev - x) {
                    found = x;
                    break;
                }
            }
            if (!found) break;
            xs.push_back(found);
        }
        // Indices between consecutive critical indices are governed by the
        // right one of the two; the block left of the last critical index is
        // governed by it as well.
        int right_edge = lo;
        std::vector<CriticalPair>& pairs = out.cl.carrel_pairs[h - 1];
        for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
            const int x = *it;
            pairs.push_back({x, beta.at(x)});
            for (int i = right_edge + 1; i <= x; ++i) {
                out.delta[i - 1] = beta.at(x) - (x - i);
                out.xi[i - 1] = beta.at(x);
            }
            right_edge = x;
        }
    }
    return out;
}

// Original staircase-based definition of a gapless tuple.
bool gapless_by_staircases(const RTuple& g) {
    const RTupleContext& ctx = g.ctx;
    for (int h = 1; h <= ctx.r(); ++h) {
        const int qh = ctx.q[h];
        if (g.at(qh) > g.at(qh + 1)) {
            const int s = g.at(qh) - g.at(qh + 1) + 1;
            if (s > ctx.carrel_size(h + 1)) return false;
            for (int t = 0; t < s; ++t)
                if (g.at(qh + 1 + t) != g.at(qh) - s + 1 + t) return false;
        }
    }
    return true;
}

bool r_increasing(const RTuple& b) {
    const RTupleContext& ctx = b.ctx;
    for (int h = 1; h <= ctx.carrel_count(); ++h)
        for (int i = ctx.q[h - 1] + 1; i < ctx.q[h]; ++i)
            if (b.at(i) >= b.at(i + 1)) return false;
    return true;
}

} // namespace

CriticalList critical_list(const RTuple& beta) { return critical_recursion(beta).cl; }

RTuple core(const RTuple& beta) {
    CritData d = critical_recursion(beta);
    return RTuple(beta.ctx, std::move(d.delta));
}

RTuple platform(const RTuple& beta) {
    CritData d = critical_recursion(beta);
    return RTuple(beta.ctx, std::move(d.xi));
}

bool has_flag_critical_list(const RTupleContext& ctx, const CriticalList& cl) {
    for (int h = 1; h <= ctx.r(); ++h) {
        const int y_qh = cl.carrel_pairs[h - 1].back().entry;
        const int y_k = cl.carrel_pairs[h].front().entry;
        if (y_qh > y_k) return false;
    }
    return true;
}

ClassFlags classify(const RTuple& beta) {
    ClassFlags f;
    if (!beta.is_upper()) return f;
    f.is_upper = true;
    f.is_flag = std::is_sorted(beta.entries.begin(), beta.entries.end());
    f.is_r_increasing = r_increasing(beta);

    CritData d = critical_recursion(beta);
    f.has_flag_critical_list = has_flag_critical_list(beta.ctx, d.cl);
    f.is_gapless_core = f.has_flag_critical_list;
    f.is_gapless = f.is_r_increasing && f.has_flag_critical_list;
    if (f.is_r_increasing && f.is_gapless != gapless_by_staircases(beta))
        throw consistency_error("classify: the two gapless definitions disagree on " +
                                beta.text());
    f.is_bounded_by_platform = true;
    for (int i = 1; i <= beta.n(); ++i)
        if (beta.at(i) > d.xi[i - 1]) f.is_bounded_by_platform = false;
    f.is_ceiling_flag = f.is_flag && beta.entries == d.xi;
    return f;
}

} // namespace gvs
