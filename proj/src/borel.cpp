#include "nvlab/borel.hpp"

#include "nvlab/errors.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <utility>

namespace nvlab {

long default_entry_limit() {
    static const long limit = [] {
        if (const char* env = std::getenv("NOVIKOV_LAB_LIMIT")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v > 0) return v;
        }
        return 200000L;
    }();
    return limit;
}

RFMatrix cochain_action(const SimplicialComplex& k, const FiniteGroup& g,
                        const SimplicialAction& a, const EquivariantLocalSystem& f,
                        const OneCocycle& theta, long gi, long q) {
    const long d = f.base.rank();
    const long cells = k.cell_count(q);
    const Rational l{theta.clearing_factor()};
    RFMatrix m(d * cells, d * cells);

    for (long src = 0; src < cells; ++src) {
        const CellImage img = cell_image(k, a.vertex_map[gi], q, src);
        const long w0 = k.cell(q, src).vertices[0];
        QMatrix block = f.fiber_maps[gi][w0];
        long twist_exp = 0;
        if (q > 0 && img.position[0] != 0) {
            // the image of the source's first vertex is not the image
            // cell's first vertex: carry the value along their edge
            const long v0 = k.cell(q, img.cell).vertices[0];
            const long u = a.vertex_map[gi][w0];
            const long e = k.find({v0, u});
            block = f.base.transport(e) * block;
            twist_exp = Integer((theta.value(e) * l).num()).convert_to<long>();
        }
        const Rational sgn(img.sign);
        for (long r = 0; r < d; ++r)
            for (long c = 0; c < d; ++c)
                if (!block.at(r, c).is_zero())
                    m.at(img.cell * d + r, src * d + c) =
                        Laurent::monomial(block.at(r, c) * sgn, twist_exp);
    }
    return m;
}

namespace {

/* Orbit bookkeeping for the free translation action on a join. A cell is
 * its orbit's representative exactly when its first vertex carries the
 * group element with index 0; every other cell is h * rep for the unique h
 * determined by its own first vertex. */
struct JoinOrbits {
    std::vector<std::vector<long>> reps;      // [p] -> representative cell ids
    std::vector<std::vector<long>> orbit_of;  // [p][cell] -> orbit index
    std::vector<std::vector<long>> shift_of;  // [p][cell] -> h with cell = h * rep
};

JoinOrbits join_orbits(const JoinResolution& e, const FiniteGroup& g) {
    const long n = g.order();
    JoinOrbits out;
    const long top = e.complex.dimension();
    out.reps.resize(top + 1);
    out.orbit_of.resize(top + 1);
    out.shift_of.resize(top + 1);
    for (long p = 0; p <= top; ++p) {
        const long cells = e.complex.cell_count(p);
        out.orbit_of[p].assign(cells, -1);
        out.shift_of[p].assign(cells, -1);
        for (long c = 0; c < cells; ++c) {
            if (e.complex.cell(p, c).vertices[0] % n != 0) continue;
            const long orbit = (long)out.reps[p].size();
            out.reps[p].push_back(c);
            for (long h = 0; h < n; ++h) {
                std::vector<long> img;
                for (long v : e.complex.cell(p, c).vertices)
                    img.push_back(e.action.vertex_map[h][v]);
                const long target = e.complex.find(img);  // slot order is preserved
                out.orbit_of[p][target] = orbit;
                out.shift_of[p][target] = h;
            }
        }
    }
    return out;
}

}  // namespace

BorelComplex borel_complex(const JoinResolution& e, const SimplicialComplex& k,
                           const FiniteGroup& g, const SimplicialAction& a,
                           const EquivariantLocalSystem& f, const OneCocycle& theta,
                           long top_degree, long entry_limit) {
    validate_action(k, g, a, f, theta);
    const TwistedComplex tc = twisted_complex(k, f.base, theta);

    const long p_top = e.complex.dimension();  // join_count - 1
    const long q_top = k.dimension();
    if (top_degree < 0) top_degree = p_top + q_top;

    const JoinOrbits orbits = join_orbits(e, g);

    BorelComplex out;
    out.clearing_factor = tc.clearing_factor;
    out.valid_degree_max = e.join_count - 2;

    // block layout of each total degree, in increasing p
    struct Block {
        long p, q, offset, size;
    };
    std::vector<std::vector<Block>> layout(top_degree + 1);
    out.dims.resize(top_degree + 1, 0);
    for (long t = 0; t <= top_degree; ++t) {
        long offset = 0;
        for (long p = std::max(0L, t - q_top); p <= std::min(t, p_top); ++p) {
            const long q = t - p;
            const long size = (long)orbits.reps[p].size() * tc.dims[q];
            layout[t].push_back({p, q, offset, size});
            offset += size;
        }
        out.dims[t] = offset;
    }

    long total_entries = 0;
    for (long t = 0; t + 1 <= top_degree; ++t) total_entries += out.dims[t] * out.dims[t + 1];
    if (total_entries > entry_limit)
        fail(ErrorKind::ResourceLimit,
             "assembling this complex needs " + std::to_string(total_entries) +
                 " differential entries, over the limit of " + std::to_string(entry_limit));

    // group-element actions on twisted cochains, filled on demand
    std::map<std::pair<long, long>, RFMatrix> action_cache;
    auto action_of = [&](long h, long q) -> const RFMatrix& {
        auto key = std::make_pair(h, q);
        auto it = action_cache.find(key);
        if (it == action_cache.end())
            it = action_cache.emplace(key, cochain_action(k, g, a, f, theta, h, q)).first;
        return it->second;
    };

    for (long t = 0; t + 1 <= top_degree; ++t) {
        RFMatrix m(out.dims[t + 1], out.dims[t]);
        for (const Block& src : layout[t]) {
            // twisted coboundary of M, sign (-1)^p, one copy per orbit
            if (src.q + 1 <= q_top) {
                const Block* dst = nullptr;
                for (const Block& b : layout[t + 1])
                    if (b.p == src.p) dst = &b;
                const RFMatrix& dq = tc.differentials[src.q];
                const Rational sgn(src.p % 2 == 0 ? 1 : -1);
                for (long o = 0; o < (long)orbits.reps[src.p].size(); ++o)
                    for (long r = 0; r < dq.rows(); ++r)
                        for (long c = 0; c < dq.cols(); ++c)
                            if (!dq.at(r, c).is_zero())
                                m.at(dst->offset + o * dq.rows() + r,
                                     src.offset + o * dq.cols() + c) = dq.at(r, c).scaled(sgn);
            }
            // precomposition with the boundary of E: each face of a
            // representative (p+1)-cell is translated back to its orbit's
            // representative, acting on the cochain side
            if (src.p + 1 <= p_top) {
                const Block* dst = nullptr;
                for (const Block& b : layout[t + 1])
                    if (b.p == src.p + 1) dst = &b;
                const long q_cols = tc.dims[src.q];
                for (long o2 = 0; o2 < (long)orbits.reps[src.p + 1].size(); ++o2) {
                    const Cell& rep = e.complex.cell(src.p + 1, orbits.reps[src.p + 1][o2]);
                    for (size_t j = 0; j < rep.faces.size(); ++j) {
                        const long face = rep.faces[j];
                        const long o = orbits.orbit_of[src.p][face];
                        const long h = orbits.shift_of[src.p][face];
                        const RFMatrix& act = action_of(h, src.q);
                        const Rational sgn(j % 2 == 0 ? 1 : -1);
                        for (long r = 0; r < q_cols; ++r)
                            for (long c = 0; c < q_cols; ++c)
                                if (!act.at(r, c).is_zero())
                                    m.at(dst->offset + o2 * q_cols + r,
                                         src.offset + o * q_cols + c) += act.at(r, c).scaled(sgn);
                    }
                }
            }
        }
        out.differentials.push_back(std::move(m));
    }

    for (size_t t = 0; t + 1 < out.differentials.size(); ++t)
        if (!(out.differentials[t + 1] * out.differentials[t]).is_zero())
            throw std::logic_error("Borel differential does not square to zero at degree " +
                                   std::to_string(t));
    return out;
}

std::vector<long> equivariant_dims(const SimplicialComplex& k, const FiniteGroup& g,
                                   const SimplicialAction& a, const EquivariantLocalSystem& f,
                                   const OneCocycle& theta, long i_max, long entry_limit) {
    if (i_max < 0)
        fail(ErrorKind::SchemaViolation, "top degree must be nonnegative");
    const JoinResolution e = join_resolution(g, i_max + 1);
    const BorelComplex b =
        borel_complex(e, k, g, a, f, theta, /*top_degree=*/i_max + 1, entry_limit);

    std::vector<long> ranks(b.differentials.size());
    for (size_t t = 0; t < b.differentials.size(); ++t)
        ranks[t] = rank_over_function_field(b.differentials[t]);
    std::vector<long> out(i_max + 1);
    for (long i = 0; i <= i_max; ++i) {
        long r_out = i < (long)ranks.size() ? ranks[i] : 0;
        long r_in = i >= 1 ? ranks[i - 1] : 0;
        out[i] = b.dims[i] - r_out - r_in;
    }
    return out;
}

void stability_check(const SimplicialComplex& k, const FiniteGroup& g, const SimplicialAction& a,
                     const EquivariantLocalSystem& f, const OneCocycle& theta, long degree,
                     long n1, long n2, long entry_limit) {
    if (degree < 0 || n1 < degree + 1 || n2 < degree + 1)
        fail(ErrorKind::SchemaViolation,
             "stability check needs acyclicities of at least degree + 1");

    std::vector<std::vector<long>> results;
    for (long n : {n1, n2}) {
        const JoinResolution e = join_resolution(g, n);
        const BorelComplex b = borel_complex(e, k, g, a, f, theta, degree + 1, entry_limit);
        std::vector<long> ranks(b.differentials.size());
        for (size_t t = 0; t < b.differentials.size(); ++t)
            ranks[t] = rank_over_function_field(b.differentials[t]);
        std::vector<long> dims(degree + 1);
        for (long i = 0; i <= degree; ++i)
            dims[i] = b.dims[i] - (i < (long)ranks.size() ? ranks[i] : 0) -
                      (i >= 1 ? ranks[i - 1] : 0);
        results.push_back(std::move(dims));
    }
    if (results[0] != results[1]) {
        std::string msg = "dimensions differ between acyclicity " + std::to_string(n1) + " and " +
                          std::to_string(n2) + ":";
        for (long i = 0; i <= degree; ++i)
            msg += " H^" + std::to_string(i) + "=" + std::to_string(results[0][i]) + "/" +
                   std::to_string(results[1][i]);
        fail(ErrorKind::StabilityViolation, msg);
    }
}

}  // namespace nvlab
