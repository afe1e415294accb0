#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gvs/rtuple.hpp"
#include "gvs/shape.hpp"

namespace gvs {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary
};

/// "2,1,0" display form of a partition.
std::string shape_text(const Shape& shape);

/// Every partition of length n with parts at most max_part, descending lex.
std::vector<std::vector<int>> partitions_upto(int n, int max_part);

/// Every upper tuple for the context, lexicographically.
void for_each_upper(const RTupleContext& ctx, const std::function<void(const RTuple&)>& f);

/// The exhaustive invariant sweeps, bounded by max_n and max_part.
/// Suites run across worker threads.
std::vector<SuiteResult> run_selftest(int max_n, int max_part);

} // namespace gvs
