#include "gvs/paths.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace gvs {

std::vector<Terminal> terminals(const Shape& shape, const RTuple& beta) {
    if (beta.n() != shape.n) throw domain_error("terminals: tuple length mismatch");
    std::vector<Terminal> out;
    out.reserve(shape.n);
    for (int i = 1; i <= shape.n; ++i)
        out.push_back({shape.part(i) + shape.n - i, beta.at(i), i});
    return out;
}

std::vector<std::pair<int, int>> Path::points() const {
    std::vector<std::pair<int, int>> pts;
    int x = source_longitude, y = source_depth;
    pts.emplace_back(x, y);
    for (int d : east_depths) {
        while (y < d) pts.emplace_back(x, ++y);
        pts.emplace_back(++x, y);
    }
    while (y < sink_depth) pts.emplace_back(x, ++y);
    return pts;
}

MultiPoly NPath::weight(int n_vars) const {
    MultiPoly::ExpVec exps(n_vars, 0);
    for (const Path& p : components)
        for (int d : p.east_depths) ++exps[d - 1];
    return MultiPoly::monomial(n_vars, std::move(exps));
}

namespace {

// Longitudes stay below lambda_1 + n and depths below n + 1.
int encode(int longitude, int depth) { return longitude * 64 + depth; }

} // namespace

bool is_disjoint(const NPath& npath) {
    std::unordered_set<int> seen;
    for (const Path& p : npath.components)
        for (auto [x, y] : p.points())
            if (!seen.insert(encode(x, y)).second) return false;
    return true;
}

void enumerate_disjoint(const Shape& shape, const RTuple& beta, const std::vector<int>& pi,
                        const std::function<bool(const NPath&)>& visit) {
    const int n = shape.n;
    if (static_cast<int>(pi.size()) != n)
        throw domain_error("enumerate_disjoint: permutation length mismatch");
    std::vector<Terminal> terms = terminals(shape, beta);
    for (int m = 1; m <= n; ++m) {
        const Terminal& t = terms[pi[m - 1] - 1];
        // Unreachable sink: no point searching.
        if (t.longitude < n - m || t.depth < m) return;
    }

    NPath cur;
    cur.sink_assignment = pi;
    cur.components.resize(n);
    std::unordered_set<int> occupied;
    bool keep_going = true;

    // Place components in order; within a component walk east/south move by
    // move, claiming points as we go.
    std::function<void(int)> place = [&](int m) {
        if (!keep_going) return;
        if (m > n) {
            keep_going = visit(cur);
            return;
        }
        const Terminal& t = terms[pi[m - 1] - 1];
        Path& path = cur.components[m - 1];
        path = Path{n - m, m, {}, t.depth};
        if (occupied.count(encode(n - m, m))) return;
        occupied.insert(encode(n - m, m));

        std::function<void(int, int)> walk = [&](int x, int y) {
            if (!keep_going) return;
            if (x == t.longitude && y == t.depth) {
                place(m + 1);
                return;
            }
            if (x < t.longitude && !occupied.count(encode(x + 1, y))) {
                occupied.insert(encode(x + 1, y));
                path.east_depths.push_back(y);
                walk(x + 1, y);
                path.east_depths.pop_back();
                occupied.erase(encode(x + 1, y));
            }
            if (y < t.depth && !occupied.count(encode(x, y + 1))) {
                occupied.insert(encode(x, y + 1));
                walk(x, y + 1);
                occupied.erase(encode(x, y + 1));
            }
        };
        walk(n - m, m);
        occupied.erase(encode(n - m, m));
    };
    place(1);
}

std::vector<NPath> disjoint_paths(const Shape& shape, const RTuple& beta,
                                  const std::vector<int>& pi) {
    std::vector<NPath> out;
    enumerate_disjoint(shape, beta, pi, [&](const NPath& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

Tableau path_to_tableau(const Shape& shape, const RTuple& beta, const NPath& npath) {
    std::vector<int> identity(shape.n);
    std::iota(identity.begin(), identity.end(), 1);
    if (npath.sink_assignment != identity)
        throw domain_error("path_to_tableau: sink assignment must be the identity");
    if (!is_disjoint(npath))
        throw domain_error("path_to_tableau: components intersect");
    Tableau t;
    t.shape = shape;
    t.values.resize(shape.cols.size());
    for (size_t j = 0; j < shape.cols.size(); ++j) t.values[j].resize(shape.cols[j]);
    for (int m = 1; m <= shape.n; ++m) {
        const Path& p = npath.components[m - 1];
        if (static_cast<int>(p.east_depths.size()) != shape.part(m))
            throw domain_error("path_to_tableau: component step count does not match row length");
        for (int j = 1; j <= shape.part(m); ++j) t.values[j - 1][m - 1] = p.east_depths[j - 1];
    }
    // Disjointness is exactly column-strictness; re-check the bounds anyway.
    for (int m = 1; m <= shape.n; ++m)
        for (int j = 1; j <= shape.part(m); ++j)
            if (t.at(j, m) > beta.at(m))
                throw consistency_error("path_to_tableau: row bound violated");
    return t;
}

NPath tableau_to_path(const RTuple& beta, const Tableau& t) {
    const Shape& shape = t.shape;
    NPath out;
    out.sink_assignment.resize(shape.n);
    std::iota(out.sink_assignment.begin(), out.sink_assignment.end(), 1);
    for (int m = 1; m <= shape.n; ++m) {
        Path p{shape.n - m, m, {}, beta.at(m)};
        for (int j = 1; j <= shape.part(m); ++j) p.east_depths.push_back(t.at(j, m));
        out.components.push_back(std::move(p));
    }
    return out;
}

bool is_nonpermutable_brute(const Shape& shape, const RTuple& beta, int cap) {
    if (int i = beta.first_non_upper_index())
        throw domain_error("is_nonpermutable_brute: beta is not upper at index " +
                           std::to_string(i));
    if (shape.n > cap)
        throw resource_error("is_nonpermutable_brute: n = " + std::to_string(shape.n) +
                             " exceeds the cap " + std::to_string(cap));
    std::vector<int> pi(shape.n);
    std::iota(pi.begin(), pi.end(), 1);
    const std::vector<int> identity = pi;
    while (std::next_permutation(pi.begin(), pi.end())) {
        bool found = false;
        enumerate_disjoint(shape, beta, pi, [&](const NPath&) {
            found = true;
            return false;
        });
        if (found) return false;
    }
    return true;
}

namespace {

std::vector<int> repeated(int value, int count) { return std::vector<int>(count, value); }

// The base disjoint n-path of the rewiring constructions, for a chosen
// critical index d in [q_r]. Native sinks.
std::vector<Path> base_npath(const Shape& shape, const RTuple& beta, const RTuple& delta,
                             int d) {
    const RTupleContext& ctx = shape.ctx;
    const int n = shape.n;
    const int q_r = ctx.q[ctx.r()];
    std::vector<Path> out;
    for (int i = 1; i <= n; ++i) {
        Path p{n - i, i, {}, beta.at(i)};
        if (i <= d - 1) {
            p.east_depths = repeated(i, shape.part(i));
        } else if (i <= q_r) {
            const int h = ctx.carrel_of(i);
            const int inner = shape.part(ctx.q[h + 1]);  // lambda_{q_{h+1}}
            p.east_depths = repeated(i, inner);
            const std::vector<int> tail = repeated(delta.at(i), shape.part(ctx.q[h]) - inner);
            p.east_depths.insert(p.east_depths.end(), tail.begin(), tail.end());
        } else {
            p.east_depths = repeated(delta.at(i), shape.part(i));
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

NPath construct_violation_witness(const Shape& shape, const RTuple& beta) {
    if (beta.ctx != shape.ctx)
        throw domain_error("construct_violation_witness: tuple context does not match R_lambda");
    if (int i = beta.first_non_upper_index())
        throw domain_error("construct_violation_witness: beta is not upper at index " +
                           std::to_string(i));
    const ClassFlags flags = classify(beta);
    if (flags.is_gapless_core && flags.is_bounded_by_platform)
        throw domain_error("construct_violation_witness: " + beta.text() +
                           " is nonpermutable; no violation witness exists");

    const RTupleContext& ctx = shape.ctx;
    const RTuple delta = core(beta);
    const RTuple xi = platform(beta);
    const CriticalList cl = critical_list(beta);
    const int n = shape.n;

    int c = 0, d = 0;
    bool platform_branch = !flags.is_bounded_by_platform;
    if (platform_branch) {
        // c: maximal index with beta_c > xi_c within the first offending
        // carrel; d: leftmost critical index right of c in that carrel.
        for (int h = 1; h <= ctx.r() && c == 0; ++h) {
            for (int i = ctx.q[h]; i > ctx.q[h - 1]; --i) {
                if (beta.at(i) > xi.at(i)) {
                    c = i;
                    for (const CriticalPair& pair : cl.carrel_pairs[h - 1]) {
                        if (pair.index > c) {
                            d = pair.index;
                            break;
                        }
                    }
                    break;
                }
            }
        }
    } else {
        // Gapless failure of delta across a carrel boundary: c = q_{h-1} and
        // d the leftmost critical index of carrel h with delta_c > delta_d.
        for (int h = 2; h <= ctx.r() + 1 && c == 0; ++h) {
            const int dd = cl.carrel_pairs[h - 1].front().index;
            if (delta.at(ctx.q[h - 1]) > delta.at(dd)) {
                c = ctx.q[h - 1];
                d = dd;
            }
        }
    }
    if (c == 0 || d == 0)
        throw consistency_error("construct_violation_witness: no rewiring site found for " +
                                beta.text());

    std::vector<Path> comps = base_npath(shape, beta, delta, d);
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);

    const int h_d = ctx.carrel_of(d);
    const int outer = shape.part(ctx.q[h_d]);           // lambda_{q_h}
    const int inner = shape.part(ctx.q[h_d + 1]);       // lambda_{q_{h+1}}
    const int jog = delta.at(d) + 1;

    // Component d jogs south one step early and rides east on the latitude
    // delta_d + 1 to finish on the terminal of c.
    {
        Path& p = comps[d - 1];
        p.east_depths = repeated(d, inner);
        std::vector<int> mid = repeated(delta.at(d), outer - inner - 1);
        p.east_depths.insert(p.east_depths.end(), mid.begin(), mid.end());
        const int extra = platform_branch ? 0 : shape.part(c) - shape.part(d);
        std::vector<int> ride = repeated(jog, extra + d - c + 1);
        p.east_depths.insert(p.east_depths.end(), ride.begin(), ride.end());
        p.sink_depth = beta.at(c);
        pi[d - 1] = c;
    }
    // Components between turn right one easterly step early and take over the
    // stilt of their right neighbor.
    const int lowest_shift = platform_branch ? c : c + 1;
    for (int m = d - 1; m >= lowest_shift; --m) {
        Path& p = comps[m - 1];
        p.east_depths = repeated(m, shape.part(m) - 1);
        p.sink_depth = beta.at(m + 1);
        pi[m - 1] = m + 1;
    }
    if (!platform_branch) {
        // Component c = q_{h-1} sheds the width difference between its carrel
        // and carrel h before dropping onto the terminal of c + 1.
        Path& p = comps[c - 1];
        p.east_depths = repeated(c, shape.part(d) - 1);
        p.sink_depth = beta.at(c + 1);
        pi[c - 1] = c + 1;
    }

    NPath out{std::move(comps), std::move(pi)};
    // The construction must actually produce a violation.
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 1);
    if (out.sink_assignment == identity)
        throw consistency_error("construct_violation_witness: trivial permutation produced");
    std::vector<Terminal> terms = terminals(shape, beta);
    for (int m = 1; m <= n; ++m) {
        const Terminal& t = terms[out.sink_assignment[m - 1] - 1];
        const Path& p = out.components[m - 1];
        if (p.sink_longitude() != t.longitude || p.sink_depth != t.depth ||
            !std::is_sorted(p.east_depths.begin(), p.east_depths.end()) ||
            (!p.east_depths.empty() &&
             (p.east_depths.front() < p.source_depth || p.east_depths.back() > p.sink_depth)) ||
            (p.east_depths.empty() && p.sink_depth < p.source_depth))
        throw consistency_error("construct_violation_witness: malformed component " +
                                std::to_string(m));
    }
    if (!is_disjoint(out))
        throw consistency_error("construct_violation_witness: rewired paths intersect for " +
                                beta.text());
    return out;
}

} // namespace gvs
