#include "nvlab/novikov.hpp"

#include "nvlab/errors.hpp"

#include <string>

namespace nvlab {

EquivariantNovikovResult equivariant_novikov(const SimplicialComplex& k, const FiniteGroup& g,
                                             const SimplicialAction& a,
                                             const EquivariantLocalSystem& f,
                                             const OneCocycle& theta, long i_max,
                                             bool verify_stability, long entry_limit) {
    if (i_max < 0)
        fail(ErrorKind::SchemaViolation, "top degree must be nonnegative");

    const JoinResolution e = join_resolution(g, i_max + 1);
    const BorelComplex b = borel_complex(e, k, g, a, f, theta, i_max + 1, entry_limit);

    // the jump machinery speaks the cochain-complex interface
    TwistedComplex view;
    view.clearing_factor = b.clearing_factor;
    view.dims = b.dims;
    view.differentials = b.differentials;

    EquivariantNovikovResult out;
    out.acyclicity = e.acyclicity;
    out.clearing_factor = b.clearing_factor;
    out.series = CountingSeries(i_max);
    for (long i = 0; i <= i_max; ++i) {
        out.jumps.push_back(jump_set_of(view, i));
        out.numbers.push_back(out.jumps.back().generic_dim);
        out.series.set_coeff(i, Rational(out.numbers.back()));
    }

    if (verify_stability)
        stability_check(k, g, a, f, theta, i_max, i_max + 1, i_max + 2, entry_limit);
    return out;
}

CountingSeries novikov_series(const EquivariantNovikovResult& r, long p_max) {
    const long computed = (long)r.numbers.size() - 1;
    if (p_max < 0 || p_max > computed)
        fail(ErrorKind::TruncationExceedsComputation,
             "series requested through degree " + std::to_string(p_max) +
                 " but only degrees 0.." + std::to_string(computed) + " were computed");
    CountingSeries s(p_max);
    for (long i = 0; i <= p_max; ++i) s.set_coeff(i, Rational(r.numbers[i]));
    return s;
}

}  // namespace nvlab
