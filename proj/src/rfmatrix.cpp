#include "nvlab/rfmatrix.hpp"

#include "nvlab/errors.hpp"

#include <stdexcept>

namespace nvlab {

RFMatrix RFMatrix::from_rational(const QMatrix& m) {
    RFMatrix r(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) r.at(i, j) = Laurent(m.at(i, j));
    return r;
}

bool RFMatrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

RFMatrix operator*(const RFMatrix& a, const RFMatrix& b) {
    if (a.cols() != b.rows()) fail(ErrorKind::SchemaViolation, "matrix shape mismatch");
    RFMatrix r(a.rows(), b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long k = 0; k < a.cols(); ++k) {
            const Laurent& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < b.cols(); ++j) {
                const Laurent& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

QMatrix RFMatrix::eval(const Rational& s0) const {
    QMatrix r(rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r.at(i, j) = at(i, j).eval(s0);
    return r;
}

/* ---- rank over Q(s) ------------------------------------------------------ */

namespace {

/* Pivot preference: low degree span first (cheap multiplications), then few
 * terms, then position. Total order => bit-identical runs. */
struct PivotScore {
    long span;
    long terms;
    long row;
    long col;
    bool operator<(const PivotScore& o) const {
        if (span != o.span) return span < o.span;
        if (terms != o.terms) return terms < o.terms;
        if (row != o.row) return row < o.row;
        return col < o.col;
    }
};

/* Exact quotient in Q[s, s^{-1}]. Divisibility is the Sylvester-identity
 * invariant of the elimination below, so a nonzero remainder is a defect,
 * not bad input. */
Laurent exact_quotient(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return a;
    if (b.term_count() == 1) {
        long e = b.min_exp();
        return a.scaled(b.coeff(e).inverse()).shifted(-e);
    }
    auto [q, rem] = Poly::from_laurent_cleared(a).divmod(Poly::from_laurent_cleared(b));
    if (!rem.is_zero()) throw std::logic_error("one-step divisor failed to divide exactly");
    return q.to_laurent().shifted(a.min_exp() - b.min_exp());
}

}  // namespace

long rank_over_function_field(const RFMatrix& m) {
    long R = m.rows(), C = m.cols();
    std::vector<std::vector<Laurent>> w(R, std::vector<Laurent>(C));
    for (long i = 0; i < R; ++i)
        for (long j = 0; j < C; ++j) w[i][j] = m.at(i, j);

    std::vector<bool> row_done(R, false), col_done(C, false);

    // Scale a whole row to integer coefficients with content 1 and minimal
    // exponent 0. Row scalings by a nonzero rational times a power of s are
    // the only normalizations that preserve rank; per-entry scaling would not.
    auto strip_row = [&](long i) {
        Integer num_gcd = 0, den_lcm = 1;
        long min_e = 0;
        bool any = false;
        for (long j = 0; j < C; ++j) {
            if (col_done[j] || w[i][j].is_zero()) continue;
            if (!any || w[i][j].min_exp() < min_e) min_e = w[i][j].min_exp();
            any = true;
            for (const auto& [e, c] : w[i][j].terms()) {
                num_gcd = gcd(num_gcd, c.num());
                den_lcm = lcm(den_lcm, c.den());
            }
        }
        if (!any) return;
        const Rational scale(den_lcm, num_gcd);
        for (long j = 0; j < C; ++j) {
            if (col_done[j] || w[i][j].is_zero()) continue;
            w[i][j] = w[i][j].scaled(scale).shifted(-min_e);
        }
    };
    for (long i = 0; i < R; ++i) strip_row(i);

    long rank = 0;
    Laurent one_step_divisor;  // empty until the second step
    while (true) {
        bool found = false;
        PivotScore best{0, 0, 0, 0};
        for (long i = 0; i < R; ++i) {
            if (row_done[i]) continue;
            for (long j = 0; j < C; ++j) {
                if (col_done[j] || w[i][j].is_zero()) continue;
                PivotScore s{w[i][j].max_exp() - w[i][j].min_exp(), w[i][j].term_count(), i, j};
                if (!found || s < best) { best = s; found = true; }
            }
        }
        if (!found) break;
        long pi = best.row, pj = best.col;
        const Laurent pivot = w[pi][pj];
        // When both the pivot and the pending divisor are monomials, a row
        // with nothing to eliminate would only be scaled by a unit, which
        // strip_row drops anyway; skipping it entirely keeps sparse inputs
        // (most Borel differentials) at their old cost.
        const bool unit_step = pivot.term_count() == 1 &&
                               (one_step_divisor.is_zero() ||
                                one_step_divisor.term_count() == 1);
        for (long i = 0; i < R; ++i) {
            if (row_done[i] || i == pi) continue;
            // Every remaining row is cross-multiplied, even where the pivot
            // column is already zero, so that all rows stay at the same minor
            // level and the one-step division below is exact (Sylvester's
            // identity; per-row unit scalings do not disturb it).
            const Laurent f = w[i][pj];
            if (f.is_zero() && unit_step) continue;
            for (long j = 0; j < C; ++j) {
                if (col_done[j] || (w[i][j].is_zero() && f.is_zero())) continue;
                w[i][j] = pivot * w[i][j] - f * w[pi][j];
                if (!one_step_divisor.is_zero())
                    w[i][j] = exact_quotient(w[i][j], one_step_divisor);
            }
            strip_row(i);
        }
        one_step_divisor = pivot;
        row_done[pi] = true;
        col_done[pj] = true;
        ++rank;
    }
    return rank;
}

long rank_at_parameter(const RFMatrix& m, const Rational& s0) {
    if (s0 <= Rational(0))
        fail(ErrorKind::NonPositiveParameter, "specialization parameter must satisfy s0 > 0, got " + s0.str());
    return m.eval(s0).rank();
}

/* ---- drop locus ---------------------------------------------------------- */

Rational drop_locus_isolation_width() {
    return Rational(Integer(1), Integer(1) << 20);
}

namespace {

/* Deterministic unimodular diagonalization over Q[s]. Row/column operations
 * of the unimodular kind (add polynomial multiple, swap, scale by nonzero
 * rational) preserve every determinantal divisor up to units, so the product
 * of the final diagonal entries is the gcd of all maximal minors up to a
 * unit. Rows are pre-scaled by s^k to clear Laurent denominators; that only
 * perturbs the s-power factor, which the caller strips anyway. */
Poly diagonal_minor_gcd(const RFMatrix& m, long expected_rank) {
    long R = m.rows(), C = m.cols();
    std::vector<std::vector<Poly>> w(R, std::vector<Poly>(C));
    // Clear Laurent denominators one whole row at a time (scaling a row by
    // s^k only shifts the s-power factor of each minor, which gets stripped
    // from the final locus anyway; per-entry clearing would be wrong).
    for (long i = 0; i < R; ++i) {
        long row_min = 0;
        bool any = false;
        for (long j = 0; j < C; ++j)
            if (!m.at(i, j).is_zero()) {
                if (!any || m.at(i, j).min_exp() < row_min) row_min = m.at(i, j).min_exp();
                any = true;
            }
        for (long j = 0; j < C; ++j) {
            if (m.at(i, j).is_zero()) continue;
            Laurent shifted = m.at(i, j).shifted(-row_min);
            std::vector<Rational> c(shifted.max_exp() + 1);
            for (const auto& [e, v] : shifted.terms()) c[e] = v;
            w[i][j] = Poly(std::move(c));
        }
    }

    long pos = 0;
    long n = std::min(R, C);
    Poly product(Rational(1));
    long found = 0;
    while (pos < n) {
        // find minimal-degree nonzero entry in trailing block
        long bi = -1, bj = -1;
        for (long i = pos; i < R; ++i)
            for (long j = pos; j < C; ++j) {
                if (w[i][j].is_zero()) continue;
                if (bi < 0 || w[i][j].degree() < w[bi][bj].degree()) { bi = i; bj = j; }
            }
        if (bi < 0) break;  // trailing block zero
        std::swap(w[pos], w[bi]);
        if (bj != pos)
            for (long i = 0; i < R; ++i) std::swap(w[i][pos], w[i][bj]);

        while (true) {
            // normalize the whole pivot row (a unit row scaling), never just
            // the corner entry: scaling a lone entry is not a row operation
            // and would corrupt the minor gcd
            if (!(w[pos][pos].lead() == Rational(1))) {
                const Rational inv = w[pos][pos].lead().inverse();
                for (long j = pos; j < C; ++j)
                    if (!w[pos][j].is_zero()) w[pos][j] = w[pos][j].scaled(inv);
            }
            const Poly pivot = w[pos][pos];
            bool clean = true;
            for (long i = pos + 1; i < R; ++i) {
                if (w[i][pos].is_zero()) continue;
                auto [q, rem] = w[i][pos].divmod(pivot);
                if (!q.is_zero())
                    for (long j = pos; j < C; ++j) w[i][j] = w[i][j] - q * w[pos][j];
                if (!rem.is_zero()) clean = false;
            }
            for (long j = pos + 1; j < C; ++j) {
                if (w[pos][j].is_zero()) continue;
                auto [q, rem] = w[pos][j].divmod(pivot);
                if (!q.is_zero())
                    for (long i = pos; i < R; ++i) w[i][j] = w[i][j] - q * w[i][pos];
                if (!rem.is_zero()) clean = false;
            }
            if (clean) {
                // both the pivot row and column are zero outside the corner
                bool really = true;
                for (long i = pos + 1; i < R && really; ++i)
                    if (!w[i][pos].is_zero()) really = false;
                for (long j = pos + 1; j < C && really; ++j)
                    if (!w[pos][j].is_zero()) really = false;
                if (really) break;
            }
            // a remainder became the new smallest entry: reselect
            long ni = -1, nj = -1;
            for (long i = pos; i < R; ++i)
                for (long j = pos; j < C; ++j) {
                    if (w[i][j].is_zero()) continue;
                    if (ni < 0 || w[i][j].degree() < w[ni][nj].degree()) { ni = i; nj = j; }
                }
            std::swap(w[pos], w[ni]);
            if (nj != pos)
                for (long i = 0; i < R; ++i) std::swap(w[i][pos], w[i][nj]);
        }
        product = product * w[pos][pos];
        ++found;
        ++pos;
    }

    if (found != expected_rank)
        throw std::logic_error("diagonalization rank disagrees with elimination rank");
    return product;
}

}  // namespace

DropLocus drop_locus(const RFMatrix& m) {
    DropLocus out;
    out.generic_rank = rank_over_function_field(m);
    if (out.generic_rank == 0) {
        out.locus_polynomial = Laurent(Rational(1));
        return out;
    }
    Poly locus = diagonal_minor_gcd(m, out.generic_rank);
    // strip the s^k unit and make monic
    while (!locus.is_zero() && locus.coeff(0).is_zero()) {
        std::vector<Rational> c(locus.coeffs().begin() + 1, locus.coeffs().end());
        locus = Poly(std::move(c));
    }
    locus = locus.monic();
    out.locus_polynomial = locus.to_laurent();
    out.positive_real_roots = isolate_positive_roots(locus, drop_locus_isolation_width());
    return out;
}

}  // namespace nvlab
