#ifndef NVLAB_RFMATRIX_HPP
#define NVLAB_RFMATRIX_HPP

#include "nvlab/laurent.hpp"
#include "nvlab/poly.hpp"
#include "nvlab/qmatrix.hpp"

#include <vector>

namespace nvlab {

/* Matrix over the rational function field Q(s), entries stored as Laurent
 * polynomials (every matrix we meet clears to that form). */
class RFMatrix {
  public:
    RFMatrix() : rows_(0), cols_(0) {}
    RFMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RFMatrix from_rational(const QMatrix& m);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Laurent& at(long r, long c) { return a_[r * cols_ + c]; }
    const Laurent& at(long r, long c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;
    long entry_count() const { return rows_ * cols_; }

    friend RFMatrix operator*(const RFMatrix& a, const RFMatrix& b);

    QMatrix eval(const Rational& s0) const;  // s0 > 0 enforced by callers

  private:
    long rows_, cols_;
    std::vector<Laurent> a_;
};

/* Rank over Q(s). Fraction-free cross-multiplication elimination with
 * primitive-part stripping after every pivot step (the stripped content
 * contains the classical Bareiss divisor, so growth stays polynomial).
 * Entirely deterministic: pivot choice is by (degree span, term count,
 * position). No modular or numeric shortcut anywhere. */
long rank_over_function_field(const RFMatrix& m);

/* Rank of the specialized rational matrix at s = s0 > 0.
 * Error NonPositiveParameter for s0 <= 0. */
long rank_at_parameter(const RFMatrix& m, const Rational& s0);

/* Where does the rank drop? locus_polynomial is the gcd of all maximal
 * (generic_rank-sized) non-vanishing minors, normalized monic with the unit
 * s^k factor cleared; its positive real roots are exactly the parameters
 * s0 > 0 with rank_at_parameter < generic_rank. */
struct DropLocus {
    long generic_rank = 0;
    Laurent locus_polynomial;  // monic; equals 1 when the rank never drops
    std::vector<RootInterval> positive_real_roots;
};

DropLocus drop_locus(const RFMatrix& m);

/* Isolation width used for drop loci: 2^{-20}. */
Rational drop_locus_isolation_width();

}  // namespace nvlab

#endif
