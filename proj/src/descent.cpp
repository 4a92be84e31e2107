#include "nvlab/descent.hpp"

#include "nvlab/errors.hpp"

#include <algorithm>
#include <map>
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

DescentResult descend_free_quotient(const SimplicialComplex& k, const FiniteGroup& g,
                                    const SimplicialAction& a, const EquivariantLocalSystem& f,
                                    const OneCocycle& theta) {
    validate_action(k, g, a, f, theta);

    const long n = g.order();
    const long nv = k.vertex_count();
    for (long gi = 0; gi < n; ++gi) {
        if (gi == g.identity()) continue;
        for (long v = 0; v < nv; ++v)
            if (a.vertex_map[gi][v] == v)
                fail(ErrorKind::ActionNotFree, "element " + std::to_string(gi) +
                                                   " fixes vertex " + std::to_string(v));
    }

    // vertex orbits, numbered by ascending representative
    std::vector<long> vrep(nv);
    for (long v = 0; v < nv; ++v) {
        long best = v;
        for (long gi = 0; gi < n; ++gi) best = std::min(best, a.vertex_map[gi][v]);
        vrep[v] = best;
    }
    std::vector<long> vertex_orbit(nv, -1);
    long orbit_count = 0;
    for (long v = 0; v < nv; ++v)
        if (vrep[v] == v) vertex_orbit[v] = orbit_count++;
    for (long v = 0; v < nv; ++v) vertex_orbit[v] = vertex_orbit[vrep[v]];

    // g0[v]: the unique element carrying the representative of v's orbit to v
    std::vector<long> carry(nv, -1);
    for (long v = 0; v < nv; ++v)
        for (long gi = 0; gi < n; ++gi)
            if (a.vertex_map[gi][vrep[v]] == v) carry[v] = gi;

    DescentResult out;
    out.vertex_orbit = vertex_orbit;
    out.quotient = SimplicialComplex::delta(orbit_count);

    // per dimension: pick the lexicographically smallest cell of each orbit,
    // in lex order, and attach its image downstairs
    std::vector<std::map<long, long>> down(k.dimension() + 1);  // upstairs cell -> quotient id
    std::vector<long> rep_edges;                                // quotient edge -> upstairs edge
    for (long v = 0; v < nv; ++v)
        if (vrep[v] == v) down[0][v] = vertex_orbit[v];

    for (long dim = 1; dim <= k.dimension(); ++dim) {
        std::vector<std::pair<std::vector<long>, long>> reps;  // (tuple, cell id)
        std::vector<bool> seen(k.cell_count(dim), false);
        for (long c = 0; c < k.cell_count(dim); ++c) {
            if (seen[c]) continue;
            long best = c;
            for (long gi = 0; gi < n; ++gi) {
                const long img = cell_image(k, a.vertex_map[gi], dim, c).cell;
                seen[img] = true;
                if (k.cell(dim, img).vertices < k.cell(dim, best).vertices) best = img;
            }
            reps.push_back({k.cell(dim, best).vertices, best});
        }
        std::sort(reps.begin(), reps.end());

        for (const auto& [tuple, c] : reps) {
            const Cell& cell = k.cell(dim, c);
            std::vector<long> qverts(tuple.size());
            for (size_t i = 0; i < tuple.size(); ++i) qverts[i] = vertex_orbit[tuple[i]];
            std::vector<long> qfaces(cell.faces.size());
            for (size_t i = 0; i < cell.faces.size(); ++i) {
                auto it = down[dim - 1].find(cell.faces[i]);
                if (it == down[dim - 1].end()) {
                    // translate the face to its orbit's representative
                    long face_rep = cell.faces[i];
                    for (long gi = 0; gi < n; ++gi) {
                        const long img =
                            cell_image(k, a.vertex_map[gi], dim - 1, cell.faces[i]).cell;
                        if (down[dim - 1].count(img)) { face_rep = img; break; }
                    }
                    it = down[dim - 1].find(face_rep);
                }
                qfaces[i] = it->second;
                if (dim >= 2) {
                    // the attachment must preserve the slot order; a permuted
                    // match has no home in this cell model
                    std::vector<long> expect;
                    for (size_t j = 0; j < qverts.size(); ++j)
                        if (j != i) expect.push_back(qverts[j]);
                    if (out.quotient.cell(dim - 1, qfaces[i]).vertices != expect)
                        fail(ErrorKind::NotAdmissible,
                             "face " + std::to_string(i) + " of orbit cell " + tuple_str(tuple) +
                                 " attaches with permuted vertices; barycentrically subdivide");
                }
            }
            down[dim][c] = out.quotient.add_cell(qverts, qfaces);
            if (dim == 1) rep_edges.push_back(c);
        }
    }

    const long qedges = out.quotient.cell_count(1);
    out.cocycle = OneCocycle(qedges);
    LocalSystem sys(f.base.rank(), qedges);
    for (long qe = 0; qe < qedges; ++qe) {
        const long e = rep_edges[qe];
        out.cocycle.set(qe, theta.value(e));
        const long v0 = k.cell(1, e).vertices[0], v1 = k.cell(1, e).vertices[1];
        sys.set_transport(qe, f.fiber_maps[carry[v0]][vrep[v0]].inverse() * f.base.transport(e) *
                                  f.fiber_maps[carry[v1]][vrep[v1]]);
    }
    out.system = std::move(sys);
    return out;
}

}  // namespace nvlab
