#ifndef NVLAB_TWISTED_HPP
#define NVLAB_TWISTED_HPP

#include "nvlab/local_system.hpp"
#include "nvlab/rfmatrix.hpp"
#include "nvlab/simplicial.hpp"

#include <optional>
#include <vector>

namespace nvlab {

/* Cochain complex over Q(s) realizing the one-parameter deformation of the
 * flat differential along the cocycle direction. Cocycle values are cleared
 * to integers by the factor L = clearing_factor, so the deformation
 * parameter reported to callers is t = L * ln(s). */
struct TwistedComplex {
    Integer clearing_factor = 1;
    std::vector<long> dims;                 // dims[k] = rank * (number of k-cells)
    std::vector<RFMatrix> differentials;    // differentials[k] : C^k -> C^{k+1}

    bool d_squared_is_zero() const;
};

/* Build the twisted complex. Degree-k cochains assign a fiber vector to
 * each k-cell; the coboundary of c at a (k+1)-cell is
 *
 *   s^{L*theta(e01)} * T(e01) * c(face_0) + sum_{i>=1} (-1)^i c(face_i)
 *
 * with e01 the cell's leading edge. Validates the inputs first and checks
 * d*d = 0 identically in s (a failure there is an internal bug, not bad
 * input, hence logic_error). */
TwistedComplex twisted_complex(const SimplicialComplex& k, const LocalSystem& f,
                               const OneCocycle& theta);

/* Generic-s cohomology dimensions of an arbitrary complex over Q(s):
 * dims[k] - rank(d^k) - rank(d^{k-1}). */
std::vector<long> generic_dims(const TwistedComplex& c);

/* dim H^degree at the specialization s = s0 > 0. */
long dim_at(const TwistedComplex& c, long degree, const Rational& s0);

/* Background twisted Betti numbers beta_0..beta_top. */
std::vector<long> novikov_numbers(const SimplicialComplex& k, const LocalSystem& f,
                                  const OneCocycle& theta);

/* One parameter where dim H^degree exceeds its background value. `where`
 * isolates s to width <= 2^-20; `exact` is set when the root is rational,
 * and then `dim` holds the jumped dimension there. */
struct JumpPoint {
    RootInterval where;
    std::optional<Rational> exact;
    std::optional<long> dim;
};

struct JumpSummary {
    long degree = 0;
    long generic_dim = 0;
    Integer clearing_factor = 1;      // t = clearing_factor * ln(s)
    Laurent locus;                    // squarefree monic; 1 when dims never jump
    std::vector<JumpPoint> points;    // positive real roots of the locus
    long unresolved_degree = 0;       // locus degree not from positive real roots
};

/* Where does dim H^degree jump above its background value? Exactly at the
 * positive roots of the rank-drop loci of the two adjacent differentials. */
JumpSummary jump_set(const SimplicialComplex& k, const LocalSystem& f, const OneCocycle& theta,
                     long degree);

/* Same computation on a prebuilt complex (used by the equivariant layer). */
JumpSummary jump_set_of(const TwistedComplex& c, long degree);

}  // namespace nvlab

#endif
