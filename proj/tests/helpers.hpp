#pragma once

#include <string>
#include <vector>

#include "gvs/rtuple.hpp"
#include "gvs/shape.hpp"

namespace tst {

inline gvs::Shape shp(std::vector<int> parts) {
    const int n = static_cast<int>(parts.size());
    return gvs::make_shape(n, std::move(parts));
}

inline gvs::RTuple tup(const gvs::Shape& s, const std::string& text) {
    return gvs::RTuple::parse(s.ctx, text);
}

inline gvs::RTuple tup(int n, std::vector<int> r_set, const std::string& text) {
    gvs::RTupleContext ctx(n, std::move(r_set));
    return gvs::RTuple::parse(ctx, text);
}

} // namespace tst
