#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gvs/poly.hpp"
#include "gvs/rtuple.hpp"
#include "gvs/shape.hpp"

namespace gvs {

/// Strictified sink (lambda_i + n - i, beta_i) for source index i.
struct Terminal {
    int longitude = 0;
    int depth = 0;
    int origin_index = 0;  // i in [n]
    bool operator==(const Terminal&) const = default;
};

std::vector<Terminal> terminals(const Shape& shape, const RTuple& beta);

/// Monotone east/south lattice path in matrix-style coordinates: longitude
/// grows eastward, depth grows southward. Canonical form: the weakly
/// increasing depths of the easterly steps plus the final sink depth.
struct Path {
    int source_longitude = 0;
    int source_depth = 0;
    std::vector<int> east_depths;
    int sink_depth = 0;

    int sink_longitude() const {
        return source_longitude + static_cast<int>(east_depths.size());
    }
    /// Every lattice point on the path, in travel order.
    std::vector<std::pair<int, int>> points() const;

    bool operator==(const Path&) const = default;
};

/// n component paths, component m sourced at (n - m, m), plus the sink
/// assignment pi: component m sinks at the terminal of origin index pi_m.
struct NPath {
    std::vector<Path> components;
    std::vector<int> sink_assignment;  // one-line pi

    MultiPoly weight(int n_vars) const;  // x^{Theta(Lambda)}
};

/// Are the components pairwise vertex-disjoint? Touching at a single lattice
/// point counts as an intersection.
bool is_disjoint(const NPath& npath);

/// Visit the disjoint n-paths whose component m runs from its source to the
/// terminal of origin index pi_m. Empty when any sink is unreachable.
/// The visitor returns false to stop early.
void enumerate_disjoint(const Shape& shape, const RTuple& beta, const std::vector<int>& pi,
                        const std::function<bool(const NPath&)>& visit);

std::vector<NPath> disjoint_paths(const Shape& shape, const RTuple& beta,
                                  const std::vector<int>& pi);

/// The recording bijection: easterly-step depths of component m become row m.
/// Requires a disjoint n-path with the identity sink assignment.
Tableau path_to_tableau(const Shape& shape, const RTuple& beta, const NPath& npath);
NPath tableau_to_path(const RTuple& beta, const Tableau& t);

/// True iff every nontrivially permuted sink assignment admits no disjoint
/// n-path. Early-exit backtracking over permutations; guarded by a size cap.
bool is_nonpermutable_brute(const Shape& shape, const RTuple& beta, int cap = 6);

/// Explicit disjoint n-path with permuted sinks witnessing that (lambda,
/// beta) is not nonpermutable, built by the rewiring constructions. Refuses
/// when beta is a gapless core tuple bounded by its platform.
NPath construct_violation_witness(const Shape& shape, const RTuple& beta);

} // namespace gvs
