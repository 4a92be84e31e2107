#include "nvlab/json_io.hpp"

#include "nvlab/borel.hpp"
#include "nvlab/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace nvlab {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    fail(ErrorKind::SchemaViolation, where + ": " + what);
}

const json& member(const json& j, const std::string& where, const char* key) {
    if (!j.is_object()) bad(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
    return *it;
}

const json* member_or_null(const json& j, const std::string& where, const char* key) {
    if (!j.is_object()) bad(where, "expected an object");
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

long as_long(const json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where, "expected an integer");
    return j.get<long>();
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) bad(where, "expected a string");
    return j.get<std::string>();
}

Rational as_rational(const json& j, const std::string& where) {
    if (!j.is_string()) bad(where, "expected an exact rational as a string, like \"3/4\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        bad(where, e.what());
    }
}

std::vector<long> as_long_list(const json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of integers");
    std::vector<long> out;
    out.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(as_long(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

QMatrix as_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) bad(where, "expected a nonempty array of rows");
    const long rows = (long)j.size();
    const json& first = j[0];
    if (!first.is_array() || first.empty()) bad(where + "[0]", "expected a nonempty row");
    const long cols = (long)first.size();
    QMatrix m(rows, cols);
    for (long r = 0; r < rows; ++r) {
        const std::string rw = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || (long)j[r].size() != cols) bad(rw, "rows differ in length");
        for (long c = 0; c < cols; ++c)
            m.at(r, c) = as_rational(j[r][c], rw + "[" + std::to_string(c) + "]");
    }
    return m;
}

CountingSeries as_series(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) bad(where, "expected a nonempty array of coefficients");
    std::vector<Rational> cs;
    cs.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        cs.push_back(as_rational(j[i], where + "[" + std::to_string(i) + "]"));
    return CountingSeries(std::move(cs));
}

SimplicialComplex parse_complex(const json& j, const std::string& where) {
    const long n = as_long(member(j, where, "vertex_count"), where + ".vertex_count");
    const json& sims = member(j, where, "simplices");
    if (!sims.is_array()) bad(where + ".simplices", "expected an array of simplices");
    std::vector<std::vector<long>> list;
    list.reserve(sims.size());
    for (size_t i = 0; i < sims.size(); ++i)
        list.push_back(as_long_list(sims[i], where + ".simplices[" + std::to_string(i) + "]"));
    return SimplicialComplex::from_simplices(n, list);
}

/* Edges are referenced by vertex pair; the pair must name an existing edge
 * cell of the complex. */
long edge_id(const json& j, const SimplicialComplex& k, const std::string& where) {
    const std::vector<long> pair = as_long_list(j, where);
    if (pair.size() != 2) bad(where, "expected a vertex pair [a, b]");
    if (pair[0] >= pair[1]) bad(where, "edge endpoints must be listed ascending");
    if (pair[0] < 0 || pair[1] >= k.vertex_count()) bad(where, "vertex id out of range");
    const long id = k.find(pair);
    if (id < 0)
        bad(where, "edge [" + std::to_string(pair[0]) + ", " + std::to_string(pair[1]) +
                       "] is not in the complex");
    return id;
}

OneCocycle parse_cocycle(const json& j, const SimplicialComplex& k, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of {edge, value} entries");
    OneCocycle t(k.cell_count(1));
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string ew = where + "[" + std::to_string(i) + "]";
        const long e = edge_id(member(j[i], ew, "edge"), k, ew + ".edge");
        t.set(e, as_rational(member(j[i], ew, "value"), ew + ".value"));
    }
    return t;
}

LocalSystem parse_system(const json& j, const SimplicialComplex& k, const std::string& where) {
    const long rank = as_long(member(j, where, "rank"), where + ".rank");
    if (rank < 1) bad(where + ".rank", "rank must be at least 1");
    LocalSystem f = LocalSystem::trivial(rank, k.cell_count(1));
    if (const json* ts = member_or_null(j, where, "transports")) {
        if (!ts->is_array()) bad(where + ".transports", "expected an array");
        for (size_t i = 0; i < ts->size(); ++i) {
            const std::string ew = where + ".transports[" + std::to_string(i) + "]";
            const long e = edge_id(member((*ts)[i], ew, "edge"), k, ew + ".edge");
            QMatrix m = as_matrix(member((*ts)[i], ew, "matrix"), ew + ".matrix");
            if (m.rows() != rank || m.cols() != rank)
                bad(ew + ".matrix", "expected a " + std::to_string(rank) + " x " +
                                        std::to_string(rank) + " matrix");
            f.set_transport(e, std::move(m));
        }
    }
    return f;
}

FiniteGroup parse_group(const json& j, const std::string& where) {
    const long order = as_long(member(j, where, "order"), where + ".order");
    const json& tj = member(j, where, "table");
    if (!tj.is_array() || (long)tj.size() != order)
        bad(where + ".table", "expected " + std::to_string(order) + " rows");
    std::vector<std::vector<long>> table;
    table.reserve(tj.size());
    for (size_t r = 0; r < tj.size(); ++r)
        table.push_back(as_long_list(tj[r], where + ".table[" + std::to_string(r) + "]"));
    const long id = as_long(member(j, where, "identity"), where + ".identity");
    return FiniteGroup(std::move(table), id);
}

SimplicialAction parse_action(const json& j, const std::string& where) {
    const json& maps = member(j, where, "vertex_maps");
    if (!maps.is_array()) bad(where + ".vertex_maps", "expected one vertex map per element");
    SimplicialAction a;
    for (size_t i = 0; i < maps.size(); ++i)
        a.vertex_map.push_back(
            as_long_list(maps[i], where + ".vertex_maps[" + std::to_string(i) + "]"));
    return a;
}

std::vector<std::vector<QMatrix>> parse_fiber_maps(const json& j, long order, long vertices,
                                                   long rank, const std::string& where) {
    if (!j.is_array() || (long)j.size() != order)
        bad(where, "expected one row of vertex matrices per group element");
    std::vector<std::vector<QMatrix>> out(order);
    for (long gi = 0; gi < order; ++gi) {
        const std::string gw = where + "[" + std::to_string(gi) + "]";
        if (!j[gi].is_array() || (long)j[gi].size() != vertices)
            bad(gw, "expected one matrix per vertex");
        for (long v = 0; v < vertices; ++v) {
            QMatrix m = as_matrix(j[gi][v], gw + "[" + std::to_string(v) + "]");
            if (m.rows() != rank || m.cols() != rank)
                bad(gw + "[" + std::to_string(v) + "]",
                    "expected a " + std::to_string(rank) + " x " + std::to_string(rank) +
                        " matrix");
            out[gi].push_back(std::move(m));
        }
    }
    return out;
}

std::vector<std::vector<QMatrix>> identity_fiber_maps(long order, long vertices, long rank) {
    return std::vector<std::vector<QMatrix>>(
        order, std::vector<QMatrix>(vertices, QMatrix::identity(rank)));
}

ComponentModel parse_model(const json& j, const std::string& where) {
    ComponentModel m;
    m.complex = parse_complex(member(j, where, "complex"), where + ".complex");
    m.action = parse_action(member(j, where, "action"), where + ".action");
    const long order = (long)m.action.vertex_map.size();
    if (order < 1) bad(where + ".action.vertex_maps", "expected at least the identity map");

    LocalSystem base = LocalSystem::trivial(1, m.complex.cell_count(1));
    if (const json* sys = member_or_null(j, where, "local_system"))
        base = parse_system(*sys, m.complex, where + ".local_system");
    m.system.base = base;
    if (const json* fm = member_or_null(j, where, "fiber_maps"))
        m.system.fiber_maps =
            parse_fiber_maps(*fm, order, m.complex.vertex_count(), base.rank(), where + ".fiber_maps");
    else
        m.system.fiber_maps = identity_fiber_maps(order, m.complex.vertex_count(), base.rank());

    m.orientation = LocalSystem::trivial(1, m.complex.cell_count(1));
    if (const json* ori = member_or_null(j, where, "orientation"))
        m.orientation = parse_system(*ori, m.complex, where + ".orientation");
    return m;
}

CriticalComponent parse_component(const json& j, const std::string& where) {
    CriticalComponent z;
    z.label = as_string(member(j, where, "label"), where + ".label");
    z.index = as_long(member(j, where, "index"), where + ".index");
    z.stabilizer = as_long_list(member(j, where, "stabilizer"), where + ".stabilizer");
    const json* series = member_or_null(j, where, "series");
    const json* model = member_or_null(j, where, "model");
    if (series) z.series = as_series(*series, where + ".series");
    if (model) z.model = parse_model(*model, where + ".model");
    if (!series && !model)
        bad(where, "component \"" + z.label + "\" needs a series or a model");
    return z;
}

FixedPointData parse_fixed_points(const json& j, const std::string& where) {
    FixedPointData d;
    d.ambient_dim = as_long(member(j, where, "ambient_dim"), where + ".ambient_dim");
    if (const json* r = member_or_null(j, where, "rank")) d.rank = as_long(*r, where + ".rank");
    if (const json* t = member_or_null(j, where, "torus_rank"))
        d.torus_rank = as_long(*t, where + ".torus_rank");
    const json& comps = member(j, where, "components");
    if (!comps.is_array()) bad(where + ".components", "expected an array");
    for (size_t i = 0; i < comps.size(); ++i) {
        const std::string cw = where + ".components[" + std::to_string(i) + "]";
        FixedComponent z;
        z.index = as_long(member(comps[i], cw, "index"), cw + ".index");
        z.poincare = as_series(member(comps[i], cw, "poincare"), cw + ".poincare");
        d.components.push_back(std::move(z));
    }
    return d;
}

ProblemDescriptor from_json(const json& j) {
    if (!j.is_object()) bad("document", "expected a JSON object");
    const long version = as_long(member(j, "document", "schema_version"), "schema_version");
    if (version != 1)
        bad("schema_version", "unsupported version " + std::to_string(version));

    ProblemDescriptor d;
    d.entry_limit = default_entry_limit();

    if (const json* c = member_or_null(j, "document", "complex"))
        d.complex = parse_complex(*c, "complex");

    if (d.complex) {
        d.cocycle = OneCocycle(d.complex->cell_count(1));
        d.system = LocalSystem::trivial(1, d.complex->cell_count(1));
        if (const json* t = member_or_null(j, "document", "cocycle"))
            d.cocycle = parse_cocycle(*t, *d.complex, "cocycle");
        if (const json* s = member_or_null(j, "document", "local_system"))
            d.system = parse_system(*s, *d.complex, "local_system");
    } else {
        for (const char* key : {"cocycle", "local_system", "group", "action", "fiber_maps"})
            if (member_or_null(j, "document", key))
                bad(key, "requires a complex in the same document");
    }

    if (const json* g = member_or_null(j, "document", "group")) {
        d.group = parse_group(*g, "group");
        d.action = parse_action(member(j, "document", "action"), "action");
        EquivariantLocalSystem es;
        es.base = d.system;
        if (const json* fm = member_or_null(j, "document", "fiber_maps"))
            es.fiber_maps = parse_fiber_maps(*fm, d.group->order(), d.complex->vertex_count(),
                                             d.system.rank(), "fiber_maps");
        else
            es.fiber_maps =
                identity_fiber_maps(d.group->order(), d.complex->vertex_count(), d.system.rank());
        d.equivariant = std::move(es);
    } else if (member_or_null(j, "document", "action") ||
               member_or_null(j, "document", "fiber_maps")) {
        bad("action", "requires a group in the same document");
    }

    if (const json* cs = member_or_null(j, "document", "critical_components")) {
        if (!cs->is_array()) bad("critical_components", "expected an array");
        d.components.emplace();
        for (size_t i = 0; i < cs->size(); ++i)
            d.components->push_back(
                parse_component((*cs)[i], "critical_components[" + std::to_string(i) + "]"));
    }

    if (const json* fp = member_or_null(j, "document", "fixed_point_data")) {
        d.fixed_points = parse_fixed_points(*fp, "fixed_point_data");
        if (const json* e = member_or_null(*fp, "fixed_point_data", "euler"))
            d.euler = as_long(*e, "fixed_point_data.euler");
    }

    if (const json* ns = member_or_null(j, "document", "novikov_series"))
        d.novikov = as_series(*ns, "novikov_series");

    if (const json* lim = member_or_null(j, "document", "limits")) {
        if (const json* entries = member_or_null(*lim, "limits", "entries"))
            d.entry_limit = as_long(*entries, "limits.entries");
    }
    return d;
}

ProblemDescriptor parse_guarded(const char* source, const std::function<json()>& run) {
    try {
        return from_json(run());
    } catch (const json::exception& e) {
        // keep the parser's position details ("parse error at line ...")
        fail(ErrorKind::SchemaViolation, std::string(source) + ": " + e.what());
    }
}

}  // namespace

ProblemDescriptor load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::SchemaViolation, "cannot open input file " + path);
    return parse_guarded(path.c_str(), [&] { return json::parse(in); });
}

ProblemDescriptor parse_problem(const std::string& text) {
    return parse_guarded("input", [&] { return json::parse(text); });
}

}  // namespace nvlab
