#ifndef NVLAB_SIMPLICIAL_HPP
#define NVLAB_SIMPLICIAL_HPP

#include "nvlab/rational.hpp"

#include <map>
#include <vector>

namespace nvlab {

/* One k-dimensional cell. Slot i holds a vertex id; faces[i] is the id of
 * the (k-1)-cell obtained by deleting slot i. Cells built from a strict
 * simplicial complex have strictly increasing vertex lists; cells produced
 * by quotient constructions may repeat vertices (loops) or share vertex
 * lists with other cells (parallel edges), which is why faces are stored
 * by id and never recovered from vertex tuples. */
struct Cell {
    std::vector<long> vertices;
    std::vector<long> faces;
};

class SimplicialComplex {
  public:
    SimplicialComplex() = default;  // empty; assign a built complex over it

    /* Strict builder. Every tuple must be strictly increasing, and every
     * face of a listed simplex of dimension >= 2 must itself be listed
     * (MissingFace otherwise). Vertices 0..vertex_count-1 are implicit;
     * singleton tuples are accepted and ignored. */
    static SimplicialComplex from_simplices(long vertex_count,
                                            const std::vector<std::vector<long>>& simplices);

    /* Start an empty complex with the given vertex set only. Cells are then
     * attached explicitly; this is the entry point for quotient complexes,
     * which need not be strict. */
    static SimplicialComplex delta(long vertex_count);

    /* Attach a cell of dimension len(vertices)-1. For dimension >= 1,
     * faces[i] must identify an existing cell one dimension down whose
     * vertex list equals the slot-i deletion of `vertices`. Returns the new
     * cell id. */
    long add_cell(std::vector<long> vertices, std::vector<long> faces);

    long vertex_count() const { return vertex_count_; }
    long dimension() const { return (long)cells_.size() - 1; }
    long cell_count(long k) const;
    const Cell& cell(long k, long id) const { return cells_[k][id]; }
    const std::vector<Cell>& cells(long k) const { return cells_[k]; }

    bool is_strict() const { return strict_; }

    /* Strict complexes only: id of the cell with this exact sorted vertex
     * tuple, or -1 when absent. */
    long find(const std::vector<long>& sorted_tuple) const;

    /* Edge spanned by slots 0 and 1 of a cell of dimension >= 1, oriented
     * from slot 0 to slot 1 (obtained by deleting trailing slots). */
    long leading_edge(long k, long id) const;

    long euler_characteristic() const;

  private:
    long vertex_count_ = 0;
    bool strict_ = false;
    std::vector<std::vector<Cell>> cells_;
    std::map<std::vector<long>, long> index_;  // strict complexes only
};

}  // namespace nvlab

#endif
