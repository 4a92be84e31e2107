#include "nvlab/symplectic.hpp"

#include "nvlab/errors.hpp"

#include <algorithm>
#include <string>

namespace nvlab {

std::pair<long, long> stable_dims_via_localization(const std::vector<long>& fixed_betti) {
    long even = 0, odd = 0;
    for (size_t j = 0; j < fixed_betti.size(); ++j) {
        if (fixed_betti[j] < 0)
            fail(ErrorKind::SchemaViolation, "dimensions must be nonnegative");
        (j % 2 == 0 ? even : odd) += fixed_betti[j];
    }
    return {even, odd};
}

PerfectnessReport perfectness_check(const FixedPointData& data, const CountingSeries& novikov,
                                    long p_max) {
    if (novikov.p_max() != p_max)
        fail(ErrorKind::TruncationMismatch, "the series must be truncated at degree " +
                                                std::to_string(p_max) + ", got " +
                                                std::to_string(novikov.p_max()));
    if (data.torus_rank < 0)
        fail(ErrorKind::SchemaViolation, "torus rank must be nonnegative");

    CountingSeries shifted(p_max);
    for (const FixedComponent& z : data.components) {
        if (z.index < 0 || z.index % 2 != 0)
            fail(ErrorKind::SchemaViolation,
                 "fixed components have even index, got " + std::to_string(z.index));
        for (long i = 0; i <= z.poincare.p_max(); ++i) {
            if (z.poincare.coeff(i) < Rational(0))
                fail(ErrorKind::NegativeSeriesCoefficient,
                     "component series coefficient at degree " + std::to_string(i) +
                         " is negative");
            if (z.index + i <= p_max)
                shifted.set_coeff(z.index + i, shifted.coeff(z.index + i) + z.poincare.coeff(i));
        }
    }

    PerfectnessReport out;
    out.lhs = series_arith(SeriesOp::Multiply, shifted,
                           expand_inverse_one_minus_lambda_sq(data.torus_rank, p_max));
    out.novikov = novikov;
    out.holds = true;
    for (long i = 0; i <= p_max; ++i)
        if (!(out.lhs.coeff(i) == novikov.coeff(i))) {
            out.holds = false;
            out.first_discrepancy = i;
            break;
        }
    return out;
}

namespace {

long integer_coeff(const CountingSeries& s, long i, const char* what) {
    const Rational& c = s.coeff(i);
    if (!c.is_integer() || c < Rational(0))
        fail(ErrorKind::SchemaViolation, std::string(what) + " at degree " + std::to_string(i) +
                                             " must be a nonnegative integer, got " + c.str());
    return Integer(c.num()).convert_to<long>();
}

}  // namespace

FixedPointCounts fixed_point_counts(const CountingSeries& novikov, long rank, long ambient_dim,
                                    long p_max, std::optional<long> euler) {
    if (rank < 1)
        fail(ErrorKind::SchemaViolation, "rank must be at least 1");
    if (ambient_dim < 0)
        fail(ErrorKind::SchemaViolation, "ambient dimension must be nonnegative");
    if (p_max > novikov.p_max())
        fail(ErrorKind::TruncationExceedsComputation,
             "counts requested through degree " + std::to_string(p_max) +
                 " but the series stops at " + std::to_string(novikov.p_max()));

    std::vector<long> beta(p_max + 1);
    for (long i = 0; i <= p_max; ++i) beta[i] = integer_coeff(novikov, i, "a dimension");
    for (long i = 1; i <= p_max; i += 2)
        if (beta[i] != 0)
            fail(ErrorKind::OddNovikovNonzero, "odd-degree dimension at " + std::to_string(i) +
                                                   " is " + std::to_string(beta[i]) +
                                                   "; the count formulas need it to vanish");

    FixedPointCounts out;
    for (long i = 2; i <= p_max; i += 2)
        if (beta[i] < beta[i - 2] && out.monotonicity_degree < 0) {
            out.monotonicity_ok = false;
            out.monotonicity_degree = i;
        }

    const long top = std::min(ambient_dim, p_max);
    out.counts.assign(top + 1, 0);
    for (long i = 0; i <= top; i += 2) {
        const long diff = beta[i] - (i >= 2 ? beta[i - 2] : 0);
        if (diff % rank != 0)
            fail(ErrorKind::NonIntegerCount,
                 "dimension difference " + std::to_string(diff) + " at degree " +
                     std::to_string(i) + " is not divisible by the rank " + std::to_string(rank));
        out.counts[i] = diff / rank;
        out.total += out.counts[i];
    }

    if (p_max >= ambient_dim) {
        out.symmetry_checked = true;
        for (long i = 0; i <= ambient_dim; ++i)
            if (out.counts[i] != out.counts[ambient_dim - i]) {
                out.symmetry_ok = false;
                out.symmetry_degree = i;
                break;
            }
    }

    // stabilization: the last two even coefficients agree, past the ambient
    // dimension
    const long last_even = p_max - (p_max % 2);
    if (last_even >= 2 && last_even >= ambient_dim && beta[last_even] == beta[last_even - 2]) {
        out.stabilization_verified = true;
        out.stable_value = beta[last_even];
        out.total_matches_stable = out.total * rank == out.stable_value;
        if (euler) out.euler_consistent = out.stable_value == rank * *euler;
    }
    return out;
}

KahlerReport kahler_report(const std::vector<long>& dims, long ambient_dim, long p_max) {
    if (ambient_dim < 0)
        fail(ErrorKind::SchemaViolation, "ambient dimension must be nonnegative");
    if (p_max >= (long)dims.size())
        fail(ErrorKind::TruncationExceedsComputation,
             "report requested through degree " + std::to_string(p_max) + " but only " +
                 std::to_string(dims.size()) + " dimensions were supplied");
    for (long d : dims)
        if (d < 0) fail(ErrorKind::SchemaViolation, "dimensions must be nonnegative");

    KahlerReport out;
    out.degree0_anomaly = p_max >= 0 && dims[0] == 0;
    for (long i = 2; i <= p_max; ++i)
        if (dims[i] < dims[i - 2] && out.monotonicity_degree < 0) {
            out.monotonicity_ok = false;
            out.monotonicity_degree = i;
        }

    const long top = std::min(ambient_dim, p_max);
    out.counts.assign(top + 1, 0);
    for (long i = 0; i <= top; ++i) out.counts[i] = dims[i] - (i >= 2 ? dims[i - 2] : 0);

    if (p_max >= ambient_dim) {
        out.symmetry_checked = true;
        out.total = dims[ambient_dim];
        for (long i = 0; i <= ambient_dim; ++i)
            if (out.counts[i] != out.counts[ambient_dim - i]) {
                out.symmetry_ok = false;
                out.symmetry_degree = i;
                break;
            }
    }
    return out;
}

}  // namespace nvlab
