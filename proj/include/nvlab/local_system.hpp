#ifndef NVLAB_LOCAL_SYSTEM_HPP
#define NVLAB_LOCAL_SYSTEM_HPP

#include "nvlab/qmatrix.hpp"
#include "nvlab/rational.hpp"
#include "nvlab/simplicial.hpp"

#include <vector>

namespace nvlab {

/* Rational value per edge cell, read along the edge's own orientation
 * (slot 0 toward slot 1). Closedness over the 2-cells is checked by
 * validate(), not here. */
class OneCocycle {
  public:
    OneCocycle() = default;
    explicit OneCocycle(long edge_count) : values_(edge_count) {}

    long edge_count() const { return (long)values_.size(); }
    void set(long edge, const Rational& v) { values_.at(edge) = v; }
    const Rational& value(long edge) const { return values_.at(edge); }

    /* lcm of the value denominators; scaling the cocycle by this factor
     * makes every exponent integral. Always >= 1. */
    Integer clearing_factor() const;

    OneCocycle operator-() const;

  private:
    std::vector<Rational> values_;
};

/* Flat system of rank d: one invertible d x d matrix per edge cell, mapping
 * the fiber at the edge's head (slot 1) to the fiber at its tail (slot 0).
 * With this direction, flatness is the plain composition identity
 * T[v0v1] * T[v1v2] = T[v0v2] over every 2-cell. */
class LocalSystem {
  public:
    LocalSystem() : rank_(1) {}
    LocalSystem(long rank, long edge_count);

    static LocalSystem trivial(long rank, long edge_count);

    long rank() const { return rank_; }
    long edge_count() const { return (long)transports_.size(); }
    void set_transport(long edge, QMatrix t);
    const QMatrix& transport(long edge) const { return transports_.at(edge); }

  private:
    long rank_;
    std::vector<QMatrix> transports_;
};

/* Fiberwise tensor product; transports are Kronecker products. Both systems
 * must live on the same edge set (ComplexMismatch). */
LocalSystem tensor(const LocalSystem& a, const LocalSystem& b);

/* Confirms every structural invariant of the triple: face closure shapes
 * (already enforced at construction, rechecked cheaply), matching edge
 * counts (ComplexMismatch), invertible transports and flatness (NotFlat),
 * cocycle closedness (NotClosed). Pure and idempotent. */
void validate(const SimplicialComplex& k, const LocalSystem& f, const OneCocycle& theta);

}  // namespace nvlab

#endif
