#include "gvs/selftest.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gvs/demazure.hpp"
#include "gvs/equivalence.hpp"
#include "gvs/gv.hpp"
#include "gvs/paths.hpp"

namespace gvs {

std::string shape_text(const Shape& shape) {
    std::ostringstream out;
    for (int i = 0; i < shape.n; ++i) {
        if (i) out << ',';
        out << shape.parts[i];
    }
    return out.str();
}

std::vector<std::vector<int>> partitions_upto(int n, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int i, int cap) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int part = cap; part >= 0; --part) {
            cur[i] = part;
            rec(i + 1, part);
        }
    };
    rec(0, max_part);
    return out;
}

void for_each_upper(const RTupleContext& ctx, const std::function<void(const RTuple&)>& f) {
    std::vector<int> entries(ctx.n);
    std::function<void(int)> rec = [&](int i) {
        if (i > ctx.n) {
            f(RTuple(ctx, entries));
            return;
        }
        for (int v = i; v <= ctx.n; ++v) {
            entries[i - 1] = v;
            rec(i + 1);
        }
    };
    rec(1);
}

namespace {

std::vector<std::vector<int>> subsets_of_range(int n) {
    std::vector<std::vector<int>> out;
    const int count = 1 << std::max(n - 1, 0);
    for (int mask = 0; mask < count; ++mask) {
        std::vector<int> r;
        for (int v = 1; v <= n - 1; ++v)
            if (mask & (1 << (v - 1))) r.push_back(v);
        out.push_back(std::move(r));
    }
    return out;
}

struct Failure {
    bool failed = false;
    std::string detail;
    void record(const std::string& what) {
        if (!failed) {
            failed = true;
            detail = what;
        }
    }
};

// Core/platform algebra over every R and every upper tuple.
SuiteResult rtuple_suite(int max_n) {
    Failure f;
    for (int n = 1; n <= max_n && !f.failed; ++n) {
        for (const auto& r_set : subsets_of_range(n)) {
            RTupleContext ctx(n, r_set);
            for_each_upper(ctx, [&](const RTuple& beta) {
                if (f.failed) return;
                const RTuple delta = core(beta);
                const RTuple xi = platform(beta);
                const CriticalList cl = critical_list(beta);
                const ClassFlags flags = classify(beta);
                const std::string tag = "n=" + std::to_string(n) + " beta=" + beta.text();
                if (!leq(delta, beta)) f.record(tag + ": core not <= beta");
                if (core(delta) != delta) f.record(tag + ": core not idempotent");
                if (platform(xi) != xi) f.record(tag + ": platform not idempotent");
                if (critical_list(delta) != cl || critical_list(xi) != cl)
                    f.record(tag + ": critical list not preserved");
                if (flags.is_r_increasing && delta != beta)
                    f.record(tag + ": core moved an R-increasing tuple");
                if (flags.is_flag &&
                    !(flags.has_flag_critical_list && flags.is_bounded_by_platform))
                    f.record(tag + ": flag outside UBP or without flag critical list");
                if (flags.is_r_increasing && !flags.is_bounded_by_platform)
                    f.record(tag + ": R-increasing tuple outside UBP");
                if (flags.is_gapless && !(flags.is_r_increasing && flags.is_gapless_core))
                    f.record(tag + ": gapless tuple with wrong side flags");
                if (flags.is_gapless) {
                    if (!classify(xi).is_ceiling_flag)
                        f.record(tag + ": platform of gapless is not a ceiling flag");
                    if (core(xi) != beta) f.record(tag + ": core(platform) != gapless tuple");
                }
                // Gapless-core both ways: flag critical list vs core gapless.
                if (flags.is_gapless_core != classify(delta).is_gapless)
                    f.record(tag + ": gapless-core definitions disagree");
            });
        }
    }
    return {"rtuple core/platform algebra", !f.failed, f.detail};
}

// Brute nonpermutability == (gapless-core and bounded-by-platform).
SuiteResult nonpermutable_suite(int max_n, int max_part) {
    Failure f;
    for (int n = 1; n <= max_n && !f.failed; ++n) {
        for (const auto& parts : partitions_upto(n, max_part)) {
            Shape shape = make_shape(n, parts);
            for_each_upper(shape.ctx, [&](const RTuple& beta) {
                if (f.failed) return;
                const ClassFlags flags = classify(beta);
                const bool predicate = flags.is_gapless_core && flags.is_bounded_by_platform;
                if (is_nonpermutable_brute(shape, beta, n) != predicate)
                    f.record("lambda=" + shape_text(shape) + " beta=" + beta.text());
            });
        }
    }
    return {"nonpermutable brute force vs predicate", !f.failed, f.detail};
}

// Determinant (with core fallback) equals the tableau sum on UGC.
SuiteResult determinant_suite(int max_n, int max_part) {
    Failure f;
    for (int n = 1; n <= max_n && !f.failed; ++n) {
        for (const auto& parts : partitions_upto(n, max_part)) {
            Shape shape = make_shape(n, parts);
            for_each_upper(shape.ctx, [&](const RTuple& beta) {
                if (f.failed || !classify(beta).is_gapless_core) return;
                if (schur_via_det(shape, beta).poly != row_bound_sum(shape, beta))
                    f.record("lambda=" + shape_text(shape) + " beta=" + beta.text());
            });
        }
    }
    return {"determinant vs tableau oracle on UGC", !f.failed, f.detail};
}

// Native-sink disjoint n-paths match tableaux in count and weight.
SuiteResult bijection_suite(int max_n, int max_part) {
    Failure f;
    for (int n = 1; n <= max_n && !f.failed; ++n) {
        std::vector<int> identity(n);
        std::iota(identity.begin(), identity.end(), 1);
        for (const auto& parts : partitions_upto(n, max_part)) {
            Shape shape = make_shape(n, parts);
            for_each_upper(shape.ctx, [&](const RTuple& beta) {
                if (f.failed) return;
                MultiPoly path_sum(n);
                std::size_t path_count = 0;
                enumerate_disjoint(shape, beta, identity, [&](const NPath& p) {
                    path_sum += p.weight(n);
                    ++path_count;
                    return true;
                });
                const auto ts = tableaux(shape, beta);
                if (path_count != ts.size() || path_sum != row_bound_sum(shape, beta))
                    f.record("lambda=" + shape_text(shape) + " beta=" + beta.text());
            });
        }
    }
    return {"disjoint-path / tableau bijection", !f.failed, f.detail};
}

// Witness construction succeeds exactly off UGC & UBP and validates.
SuiteResult witness_suite(int max_n, int max_part) {
    Failure f;
    for (int n = 1; n <= max_n && !f.failed; ++n) {
        for (const auto& parts : partitions_upto(n, max_part)) {
            Shape shape = make_shape(n, parts);
            for_each_upper(shape.ctx, [&](const RTuple& beta) {
                if (f.failed) return;
                const ClassFlags flags = classify(beta);
                const std::string tag = "lambda=" + shape_text(shape) + " beta=" + beta.text();
                if (flags.is_gapless_core && flags.is_bounded_by_platform) {
                    try {
                        construct_violation_witness(shape, beta);
                        f.record(tag + ": witness produced for a nonpermutable pair");
                    } catch (const domain_error&) {
                    }
                } else {
                    try {
                        NPath w = construct_violation_witness(shape, beta);
                        if (!is_disjoint(w)) f.record(tag + ": witness intersects");
                    } catch (const std::exception& e) {
                        f.record(tag + ": " + e.what());
                    }
                }
            });
        }
    }
    return {"rewiring witness construction", !f.failed, f.detail};
}

// Classes partition UGC & UBP into intervals minimized at gamma.
SuiteResult equivalence_suite(int max_n, int max_part) {
    Failure f;
    for (int n = 1; n <= max_n && !f.failed; ++n) {
        for (const auto& parts : partitions_upto(n, max_part)) {
            Shape shape = make_shape(n, parts);
            std::map<std::vector<int>, std::vector<RTuple>> by_core;
            std::size_t member_count = 0;
            for_each_upper(shape.ctx, [&](const RTuple& beta) {
                const ClassFlags flags = classify(beta);
                if (flags.is_gapless_core && flags.is_bounded_by_platform) {
                    by_core[core(beta).entries].push_back(beta);
                    ++member_count;
                }
            });
            std::size_t interval_total = 0;
            for (const auto& [gamma_entries, members] : by_core) {
                EquivClass cls = class_of(shape, members.front());
                interval_total += cls.interval_size();
                const std::string tag =
                    "lambda=" + shape_text(shape) + " gamma=" + cls.gamma.text();
                if (cls.gamma.entries != gamma_entries) f.record(tag + ": wrong minimum");
                const auto base = efficiency_count(shape, cls.gamma);
                for (const RTuple& member : members) {
                    if (!cls.contains(member)) f.record(tag + ": member outside interval");
                    const auto count = efficiency_count(shape, member);
                    if (count < base || (count == base && member != cls.gamma))
                        f.record(tag + ": efficiency not uniquely minimized at gamma");
                    if (count != gv_matrix(shape, member).term_count())
                        f.record(tag + ": efficiency_count vs literal term count");
                }
            }
            // Interval sizes summing to the member count makes the intervals
            // exactly the classes.
            if (interval_total != member_count)
                f.record("lambda=" + shape_text(shape) + ": intervals do not tile the classes");
            if (by_core.size() != parabolic_catalan(shape))
                f.record("lambda=" + shape_text(shape) + ": class count vs parabolic Catalan");
        }
    }
    return {"equivalence classes and efficiency", !f.failed, f.detail};
}

// Every gapless determinant polynomial is a Demazure character.
SuiteResult demazure_suite(int max_n, int max_part) {
    Failure f;
    for (int n = 1; n <= max_n && !f.failed; ++n) {
        for (const auto& parts : partitions_upto(n, max_part)) {
            Shape shape = make_shape(n, parts);
            MatchReport report = match_demazure_characters(shape);
            if (!report.all_matched() || report.matched.size() != report.catalan)
                f.record("lambda=" + shape_text(shape));
        }
    }
    return {"gapless determinants among Demazure characters", !f.failed, f.detail};
}

// Forced stilts: on UBP every disjoint path ends with the delta-to-beta drop.
SuiteResult stilt_suite(int max_n, int max_part) {
    Failure f;
    for (int n = 1; n <= max_n && !f.failed; ++n) {
        for (const auto& parts : partitions_upto(n, max_part)) {
            Shape shape = make_shape(n, parts);
            for_each_upper(shape.ctx, [&](const RTuple& beta) {
                if (f.failed || !classify(beta).is_bounded_by_platform) return;
                const RTuple delta = core(beta);
                std::vector<int> pi(n);
                std::iota(pi.begin(), pi.end(), 1);
                do {
                    enumerate_disjoint(shape, beta, pi, [&](const NPath& p) {
                        for (int m = 1; m <= n; ++m) {
                            const Path& comp = p.components[m - 1];
                            const int bound = delta.at(pi[m - 1]);
                            if (!comp.east_depths.empty() && comp.east_depths.back() > bound) {
                                f.record("lambda=" + shape_text(shape) +
                                         " beta=" + beta.text() + " pi missing stilt");
                                return false;
                            }
                        }
                        return true;
                    });
                } while (!f.failed && std::next_permutation(pi.begin(), pi.end()));
            });
        }
    }
    return {"forced stilt endings on UBP", !f.failed, f.detail};
}

} // namespace

std::vector<SuiteResult> run_selftest(int max_n, int max_part) {
    std::vector<std::future<SuiteResult>> futures;
    futures.push_back(std::async(std::launch::async, rtuple_suite, max_n));
    futures.push_back(std::async(std::launch::async, nonpermutable_suite, max_n, max_part));
    futures.push_back(std::async(std::launch::async, determinant_suite, max_n, max_part));
    futures.push_back(std::async(std::launch::async, bijection_suite, max_n, max_part));
    futures.push_back(std::async(std::launch::async, witness_suite, max_n, max_part));
    futures.push_back(std::async(std::launch::async, equivalence_suite, max_n, max_part));
    futures.push_back(std::async(std::launch::async, demazure_suite, max_n, max_part));
    futures.push_back(std::async(std::launch::async, stilt_suite, max_n, max_part));
    std::vector<SuiteResult> out;
    for (auto& fut : futures) out.push_back(fut.get());
    return out;
}

} // namespace gvs
