#include "nvlab/simplicial.hpp"

#include "nvlab/errors.hpp"

#include <algorithm>
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

SimplicialComplex SimplicialComplex::delta(long vertex_count) {
    if (vertex_count < 0)
        fail(ErrorKind::SchemaViolation, "vertex count must be nonnegative");
    SimplicialComplex k;
    k.vertex_count_ = vertex_count;
    k.strict_ = false;
    k.cells_.emplace_back();
    for (long v = 0; v < vertex_count; ++v)
        k.cells_[0].push_back(Cell{{v}, {}});
    return k;
}

long SimplicialComplex::add_cell(std::vector<long> vertices, std::vector<long> faces) {
    const long dim = (long)vertices.size() - 1;
    if (dim < 1)
        fail(ErrorKind::SchemaViolation, "attached cells must have dimension >= 1");
    if (faces.size() != vertices.size())
        fail(ErrorKind::SchemaViolation,
             "a cell of dimension " + std::to_string(dim) + " needs exactly " +
                 std::to_string(dim + 1) + " faces");
    for (long v : vertices)
        if (v < 0 || v >= vertex_count_)
            fail(ErrorKind::SchemaViolation, "vertex id out of range in " + tuple_str(vertices));
    if ((long)cells_.size() < dim + 1) {
        if ((long)cells_.size() < dim)
            fail(ErrorKind::MissingFace,
                 "cell " + tuple_str(vertices) + " attached before any possible face exists");
        cells_.emplace_back();
    }
    for (size_t i = 0; i < faces.size(); ++i) {
        if (faces[i] < 0 || faces[i] >= (long)cells_[dim - 1].size())
            fail(ErrorKind::MissingFace,
                 "face " + std::to_string(i) + " of " + tuple_str(vertices) + " does not exist");
        // the face's vertex list must be the slot-i deletion
        std::vector<long> expect;
        for (size_t j = 0; j < vertices.size(); ++j)
            if (j != i) expect.push_back(vertices[j]);
        if (cells_[dim - 1][faces[i]].vertices != expect)
            fail(ErrorKind::MissingFace, "face " + std::to_string(i) + " of " + tuple_str(vertices) +
                                             " has mismatched vertices");
    }
    cells_[dim].push_back(Cell{std::move(vertices), std::move(faces)});
    return (long)cells_[dim].size() - 1;
}

SimplicialComplex SimplicialComplex::from_simplices(long vertex_count,
                                                    const std::vector<std::vector<long>>& simplices) {
    SimplicialComplex k = delta(vertex_count);
    k.strict_ = true;
    for (long v = 0; v < vertex_count; ++v) k.index_[{v}] = v;

    // sort by dimension so faces are available when a simplex arrives
    std::vector<std::vector<long>> sorted = simplices;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    for (auto& t : sorted) {
        if (t.empty())
            fail(ErrorKind::SchemaViolation, "empty simplex");
        for (size_t i = 0; i + 1 < t.size(); ++i)
            if (t[i] >= t[i + 1])
                fail(ErrorKind::NotSimplicial,
                     "simplex " + tuple_str(t) + " is not strictly increasing");
        if (t.front() < 0 || t.back() >= vertex_count)
            fail(ErrorKind::SchemaViolation, "vertex id out of range in " + tuple_str(t));
        if (t.size() == 1) continue;  // implicit
        if (k.index_.count(t))
            fail(ErrorKind::NotSimplicial, "simplex " + tuple_str(t) + " listed twice");

        std::vector<long> faces;
        for (size_t i = 0; i < t.size(); ++i) {
            std::vector<long> f;
            for (size_t j = 0; j < t.size(); ++j)
                if (j != i) f.push_back(t[j]);
            auto it = k.index_.find(f);
            if (it == k.index_.end())
                fail(ErrorKind::MissingFace,
                     "face " + tuple_str(f) + " of " + tuple_str(t) + " is not listed");
            faces.push_back(it->second);
        }
        k.index_[t] = k.add_cell(t, std::move(faces));
    }
    return k;
}

long SimplicialComplex::cell_count(long k) const {
    if (k < 0 || k > dimension()) return 0;
    return (long)cells_[k].size();
}

long SimplicialComplex::find(const std::vector<long>& sorted_tuple) const {
    if (!strict_)
        fail(ErrorKind::SchemaViolation, "tuple lookup is only defined on strict complexes");
    auto it = index_.find(sorted_tuple);
    return it == index_.end() ? -1 : it->second;
}

long SimplicialComplex::leading_edge(long k, long id) const {
    long dim = k, cur = id;
    while (dim > 1) {
        cur = cells_[dim][cur].faces[dim];  // delete the last slot
        --dim;
    }
    return cur;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (long k = 0; k <= dimension(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * cell_count(k);
    return chi;
}

}  // namespace nvlab
