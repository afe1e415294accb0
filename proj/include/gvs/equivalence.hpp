#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gvs/rtuple.hpp"
#include "gvs/shape.hpp"

namespace gvs {

/// True iff the row bound tableau sets of the two tuples coincide, decided by
/// comparing cores. Both tuples must be upper.
bool equivalent(const Shape& shape, const RTuple& a, const RTuple& b);

/// An equivalence class of valid determinant inputs: the interval from its
/// gapless minimum gamma up to its ceiling-flag maximum xi.
struct EquivClass {
    RTuple gamma;
    RTuple xi;
    CriticalList critical;

    bool contains(const RTuple& eta) const { return leq(gamma, eta) && leq(eta, xi); }
    std::uint64_t interval_size() const;
};

/// Class of a gapless core tuple bounded by its platform.
EquivClass class_of(const Shape& shape, const RTuple& eta);

/// All gapless lambda-tuples, lexicographically. The visitor returns false to
/// stop early.
void enumerate_gapless(const Shape& shape, const std::function<bool(const RTuple&)>& visit);
std::vector<RTuple> gapless_tuples(const Shape& shape);

/// Parabolic Catalan number: the number of gapless lambda-tuples, which is
/// the number of maximum-efficiency determinant inputs.
std::uint64_t parabolic_catalan(const Shape& shape);

/// The member of eta's class minimizing the total matrix monomial count:
/// its core. Requires eta gapless-core.
RTuple max_efficiency_input(const Shape& shape, const RTuple& eta);

} // namespace gvs
