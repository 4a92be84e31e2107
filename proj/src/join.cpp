#include "nvlab/join.hpp"

#include "nvlab/errors.hpp"

namespace nvlab {

JoinResolution join_resolution(const FiniteGroup& g, long n) {
    if (n < 0)
        fail(ErrorKind::SchemaViolation, "join acyclicity must be nonnegative");
    const long m = n + 2;
    const long order = g.order();

    std::vector<std::vector<long>> simplices;
    // every nonempty increasing slot subset, every assignment of elements
    for (long mask = 1; mask < (1L << m); ++mask) {
        std::vector<long> slots;
        for (long i = 0; i < m; ++i)
            if (mask & (1L << i)) slots.push_back(i);
        const long width = (long)slots.size();
        std::vector<long> pick(width, 0);
        while (true) {
            std::vector<long> tuple(width);
            for (long i = 0; i < width; ++i) tuple[i] = slots[i] * order + pick[i];
            simplices.push_back(std::move(tuple));
            long carry = width - 1;
            while (carry >= 0 && ++pick[carry] == order) pick[carry--] = 0;
            if (carry < 0) break;
        }
    }

    JoinResolution out;
    out.join_count = m;
    out.acyclicity = n;
    out.group_order = order;
    out.complex = SimplicialComplex::from_simplices(m * order, simplices);

    out.action.vertex_map.assign(order, std::vector<long>(m * order));
    for (long h = 0; h < order; ++h)
        for (long i = 0; i < m; ++i)
            for (long e = 0; e < order; ++e)
                out.action.vertex_map[h][i * order + e] = i * order + g.mul(h, e);
    return out;
}

}  // namespace nvlab
