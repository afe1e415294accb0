#include "gvs/equivalence.hpp"

namespace gvs {

bool equivalent(const Shape& shape, const RTuple& a, const RTuple& b) {
    if (a.ctx != shape.ctx || b.ctx != shape.ctx)
        throw domain_error("equivalent: tuple context does not match R_lambda");
    if (!a.is_upper() || !b.is_upper())
        throw domain_error("equivalent: both tuples must be upper");
    return core(a) == core(b);
}

std::uint64_t EquivClass::interval_size() const {
    std::uint64_t size = 1;
    for (int i = 1; i <= gamma.n(); ++i)
        size *= static_cast<std::uint64_t>(xi.at(i) - gamma.at(i) + 1);
    return size;
}

EquivClass class_of(const Shape& shape, const RTuple& eta) {
    if (eta.ctx != shape.ctx)
        throw domain_error("class_of: tuple context does not match R_lambda");
    ClassFlags flags = classify(eta);
    if (!flags.is_upper || !flags.is_gapless_core || !flags.is_bounded_by_platform)
        throw domain_error("class_of: " + eta.text() +
                           " is not a gapless core tuple bounded by its platform");
    EquivClass cls{core(eta), {}, critical_list(eta)};
    cls.xi = platform(cls.gamma);
    return cls;
}

void enumerate_gapless(const Shape& shape, const std::function<bool(const RTuple&)>& visit) {
    const RTupleContext& ctx = shape.ctx;
    const int n = shape.n;
    std::vector<int> entries(n);
    bool keep_going = true;
    // Carrel-wise strictly increasing upper tuples only; the flag critical
    // list test finishes the job.
    std::function<void(int)> rec = [&](int i) {
        if (!keep_going) return;
        if (i > n) {
            RTuple g(ctx, entries);
            if (has_flag_critical_list(ctx, critical_list(g))) keep_going = visit(g);
            return;
        }
        int lo = i;
        if (i - 1 > ctx.q[ctx.carrel_of(i) - 1]) lo = std::max(lo, entries[i - 2] + 1);
        for (int v = lo; v <= n && keep_going; ++v) {
            entries[i - 1] = v;
            rec(i + 1);
        }
    };
    rec(1);
}

std::vector<RTuple> gapless_tuples(const Shape& shape) {
    std::vector<RTuple> out;
    enumerate_gapless(shape, [&](const RTuple& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::uint64_t parabolic_catalan(const Shape& shape) {
    std::uint64_t count = 0;
    enumerate_gapless(shape, [&](const RTuple&) {
        ++count;
        return true;
    });
    return count;
}

RTuple max_efficiency_input(const Shape& shape, const RTuple& eta) {
    if (eta.ctx != shape.ctx)
        throw domain_error("max_efficiency_input: tuple context does not match R_lambda");
    ClassFlags flags = classify(eta);
    if (!flags.is_upper || !flags.is_gapless_core)
        throw domain_error("max_efficiency_input: " + eta.text() +
                           " is not a gapless core tuple");
    return core(eta);
}

} // namespace gvs
