#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gvs/errors.hpp"

namespace gvs {

/// Divider data for n-tuples: n, the divider set R = {q_1 < ... < q_r} inside
/// [n-1], and the derived carrel boundaries q_0 = 0 < q_1 < ... < q_{r+1} = n.
/// The h-th carrel (1-based) is the index block (q_{h-1}, q_h].
struct RTupleContext {
    int n = 0;
    std::vector<int> dividers;  // R
    std::vector<int> q;         // q_0 .. q_{r+1}

    RTupleContext() = default;
    RTupleContext(int n, std::vector<int> r_set);

    int r() const { return static_cast<int>(dividers.size()); }
    int carrel_count() const { return r() + 1; }
    // Carrel sizes p_h, h in [1, r+1].
    int carrel_size(int h) const { return q[h] - q[h - 1]; }
    // The carrel h containing index i in [1, n].
    int carrel_of(int i) const;

    bool operator==(const RTupleContext&) const = default;
};

/// An n-entry tuple with entries in [n], read against a divider context.
struct RTuple {
    RTupleContext ctx;
    std::vector<int> entries;  // entries[i-1] holds nu_i

    RTuple() = default;
    RTuple(RTupleContext c, std::vector<int> e);

    int n() const { return ctx.n; }
    int at(int i) const { return entries[i - 1]; }

    bool is_upper() const;
    // 1-based index of the first entry with beta_i < i, or 0 when upper.
    int first_non_upper_index() const;

    // "2,7,5;8,6,6,9,9;9" -- commas within carrels, semicolons between.
    std::string text() const;
    static RTuple parse(const RTupleContext& ctx, const std::string& s);

    bool operator==(const RTuple&) const = default;
};

// Entrywise partial order.
bool leq(const RTuple& a, const RTuple& b);

struct CriticalPair {
    int index = 0;  // absolute index in [n]
    int entry = 0;
    bool operator==(const CriticalPair&) const = default;
};

/// The r+1 per-carrel sets of critical pairs, each listed by ascending index.
/// The rightmost index of every carrel always appears.
struct CriticalList {
    std::vector<std::vector<CriticalPair>> carrel_pairs;
    bool operator==(const CriticalList&) const = default;
    std::string text() const;  // "({(1,2),(3,5)};{(6,6),(8,9)};{(9,9)})"
};

/// Right-to-left critical pair recursion within each carrel.
/// Rejects non-upper tuples.
CriticalList critical_list(const RTuple& beta);

/// R-core map: the entrywise-minimal tuple sharing beta's critical list.
/// Staircases descend leftward from the critical pairs.
RTuple core(const RTuple& beta);

/// R-platform map: each index governed by a critical pair is held at that
/// pair's entry, giving per-carrel plateaus.
RTuple platform(const RTuple& beta);

/// Does the critical list satisfy the flag condition: for h in [r], the
/// critical entry at q_h is at most the leftmost critical entry of carrel h+1?
bool has_flag_critical_list(const RTupleContext& ctx, const CriticalList& cl);

struct ClassFlags {
    bool is_upper = false;
    bool is_flag = false;
    bool is_r_increasing = false;
    bool is_gapless = false;
    bool is_gapless_core = false;
    bool is_bounded_by_platform = false;
    bool is_ceiling_flag = false;
    bool has_flag_critical_list = false;
    bool operator==(const ClassFlags&) const = default;
};

/// Total classification. A non-upper tuple gets every flag false.
/// is_gapless is computed both from the critical list and from the original
/// staircase definition; a mismatch raises consistency_error.
ClassFlags classify(const RTuple& beta);

} // namespace gvs
