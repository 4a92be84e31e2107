#include "nvlab/equivariant_system.hpp"

#include "nvlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nvlab {

namespace {

std::string tuple_str(const std::vector<long>& t) {
    std::string s = "[";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + "]";
}

}  // namespace

SimplicialAction SimplicialAction::trivial(long group_order, long vertex_count) {
    SimplicialAction a;
    a.vertex_map.assign(group_order, std::vector<long>(vertex_count));
    for (auto& row : a.vertex_map) std::iota(row.begin(), row.end(), 0);
    return a;
}

EquivariantLocalSystem EquivariantLocalSystem::trivial(long rank, long edge_count,
                                                       long group_order, long vertex_count) {
    EquivariantLocalSystem f{LocalSystem::trivial(rank, edge_count), {}};
    f.fiber_maps.assign(group_order,
                        std::vector<QMatrix>(vertex_count, QMatrix::identity(rank)));
    return f;
}

CellImage cell_image(const SimplicialComplex& k, const std::vector<long>& gmap, long dim, long id) {
    const std::vector<long>& v = k.cell(dim, id).vertices;
    std::vector<long> img(v.size());
    for (size_t i = 0; i < v.size(); ++i) img[i] = gmap[v[i]];

    CellImage out;
    out.position.resize(img.size());
    std::iota(out.position.begin(), out.position.end(), 0);
    std::sort(out.position.begin(), out.position.end(),
              [&](long a, long b) { return img[a] < img[b]; });
    // out.position currently says which source slot fills image slot i; the
    // published convention is the other direction
    std::vector<long> sorted(img.size()), where(img.size());
    for (size_t i = 0; i < img.size(); ++i) {
        sorted[i] = img[out.position[i]];
        where[out.position[i]] = (long)i;
    }
    int sign = 1;
    for (size_t i = 0; i < where.size(); ++i)
        for (size_t j = i + 1; j < where.size(); ++j)
            if (where[i] > where[j]) sign = -sign;
    out.position = std::move(where);
    out.sign = sign;
    out.cell = k.find(sorted);
    if (out.cell < 0)
        fail(ErrorKind::NotSimplicial,
             "image " + tuple_str(sorted) + " of cell " + tuple_str(v) + " is not a simplex");
    return out;
}

void validate_action(const SimplicialComplex& k, const FiniteGroup& g, const SimplicialAction& a,
                     const EquivariantLocalSystem& f, const OneCocycle& theta) {
    if (!k.is_strict())
        fail(ErrorKind::SchemaViolation, "equivariant validation needs a strict complex");
    const long n = g.order();
    const long nv = k.vertex_count();
    const long d = f.base.rank();

    if ((long)a.vertex_map.size() != n)
        fail(ErrorKind::SchemaViolation, "action lists " + std::to_string(a.vertex_map.size()) +
                                             " vertex maps for a group of order " + std::to_string(n));
    for (long gi = 0; gi < n; ++gi) {
        if ((long)a.vertex_map[gi].size() != nv)
            fail(ErrorKind::SchemaViolation,
                 "vertex map of element " + std::to_string(gi) + " has the wrong length");
        std::vector<bool> seen(nv, false);
        for (long v : a.vertex_map[gi]) {
            if (v < 0 || v >= nv || seen[v])
                fail(ErrorKind::NotHomomorphism,
                     "vertex map of element " + std::to_string(gi) + " is not a permutation");
            seen[v] = true;
        }
    }
    for (long v = 0; v < nv; ++v)
        if (a.vertex_map[g.identity()][v] != v)
            fail(ErrorKind::NotHomomorphism, "identity element moves vertex " + std::to_string(v));
    for (long gi = 0; gi < n; ++gi)
        for (long hi = 0; hi < n; ++hi)
            for (long v = 0; v < nv; ++v)
                if (a.vertex_map[g.mul(gi, hi)][v] != a.vertex_map[gi][a.vertex_map[hi][v]])
                    fail(ErrorKind::NotHomomorphism,
                         "maps of " + std::to_string(gi) + " and " + std::to_string(hi) +
                             " do not compose at vertex " + std::to_string(v));

    // simplices map to simplices; setwise-fixed ones must be pointwise fixed
    for (long dim = 1; dim <= k.dimension(); ++dim)
        for (long c = 0; c < k.cell_count(dim); ++c)
            for (long gi = 0; gi < n; ++gi) {
                CellImage img = cell_image(k, a.vertex_map[gi], dim, c);
                if (img.cell == c && gi != g.identity()) {
                    bool pointwise = true;
                    for (long v : k.cell(dim, c).vertices)
                        if (a.vertex_map[gi][v] != v) pointwise = false;
                    if (!pointwise)
                        fail(ErrorKind::NotAdmissible,
                             "element " + std::to_string(gi) + " fixes simplex " +
                                 tuple_str(k.cell(dim, c).vertices) +
                                 " setwise but not pointwise; barycentrically subdivide the complex");
                }
            }

    validate(k, f.base, theta);

    if ((long)f.fiber_maps.size() != n)
        fail(ErrorKind::SchemaViolation, "fiber maps listed for " +
                                             std::to_string(f.fiber_maps.size()) +
                                             " elements, group has " + std::to_string(n));
    for (long gi = 0; gi < n; ++gi) {
        if ((long)f.fiber_maps[gi].size() != nv)
            fail(ErrorKind::SchemaViolation,
                 "fiber maps of element " + std::to_string(gi) + " have the wrong length");
        for (long v = 0; v < nv; ++v)
            if (f.fiber_maps[gi][v].rows() != d || f.fiber_maps[gi][v].cols() != d)
                fail(ErrorKind::SchemaViolation, "fiber map at (" + std::to_string(gi) + "," +
                                                     std::to_string(v) + ") is not " +
                                                     std::to_string(d) + "x" + std::to_string(d));
    }
    for (long v = 0; v < nv; ++v)
        if (!f.fiber_maps[g.identity()][v].is_identity())
            fail(ErrorKind::CocycleLawViolation,
                 "identity fiber map at vertex " + std::to_string(v) + " is not the identity");
    for (long gi = 0; gi < n; ++gi)
        for (long hi = 0; hi < n; ++hi)
            for (long v = 0; v < nv; ++v) {
                const QMatrix lhs = f.fiber_maps[g.mul(gi, hi)][v];
                const QMatrix rhs = f.fiber_maps[gi][a.vertex_map[hi][v]] * f.fiber_maps[hi][v];
                if (!(lhs == rhs))
                    fail(ErrorKind::CocycleLawViolation,
                         "fiber maps violate the cocycle law at (g,h,v) = (" + std::to_string(gi) +
                             "," + std::to_string(hi) + "," + std::to_string(v) + ")");
            }

    for (long e = 0; e < k.cell_count(1); ++e) {
        const Cell& edge = k.cell(1, e);
        const long v0 = edge.vertices[0], v1 = edge.vertices[1];
        for (long gi = 0; gi < n; ++gi) {
            CellImage img = cell_image(k, a.vertex_map[gi], 1, e);
            const bool reversed = img.position[0] == 1;
            const QMatrix lhs = f.fiber_maps[gi][v0] * f.base.transport(e);
            const QMatrix rhs =
                reversed ? f.base.transport(img.cell).inverse() * f.fiber_maps[gi][v1]
                         : f.base.transport(img.cell) * f.fiber_maps[gi][v1];
            if (!(lhs == rhs))
                fail(ErrorKind::TransportIncompatible,
                     "fiber maps of element " + std::to_string(gi) +
                         " do not intertwine the transport on edge " + tuple_str(edge.vertices));
            const Rational img_value =
                reversed ? -theta.value(img.cell) : theta.value(img.cell);
            if (!(img_value == theta.value(e)))
                fail(ErrorKind::CocycleNotInvariant,
                     "cocycle value changes under element " + std::to_string(gi) + " on edge " +
                         tuple_str(edge.vertices));
        }
    }
}

}  // namespace nvlab
