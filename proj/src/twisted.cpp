#include "nvlab/twisted.hpp"

#include "nvlab/errors.hpp"
#include "nvlab/poly.hpp"

#include <stdexcept>
#include <string>

namespace nvlab {

bool TwistedComplex::d_squared_is_zero() const {
    for (size_t k = 0; k + 1 < differentials.size(); ++k)
        if (!(differentials[k + 1] * differentials[k]).is_zero()) return false;
    return true;
}

TwistedComplex twisted_complex(const SimplicialComplex& k, const LocalSystem& f,
                               const OneCocycle& theta) {
    validate(k, f, theta);

    TwistedComplex out;
    out.clearing_factor = theta.clearing_factor();
    const long d = f.rank();
    const long top = k.dimension();
    const Rational L{out.clearing_factor};

    out.dims.resize(top + 1);
    for (long p = 0; p <= top; ++p) out.dims[p] = d * k.cell_count(p);

    for (long p = 0; p + 1 <= top; ++p) {
        RFMatrix m(out.dims[p + 1], out.dims[p]);
        for (long r = 0; r < k.cell_count(p + 1); ++r) {
            const Cell& tau = k.cell(p + 1, r);
            const long e = k.leading_edge(p + 1, r);
            const long n = Integer((theta.value(e) * L).num()).convert_to<long>();
            const QMatrix& t = f.transport(e);
            for (long a = 0; a < d; ++a)
                for (long b = 0; b < d; ++b)
                    if (!t.at(a, b).is_zero())
                        m.at(r * d + a, tau.faces[0] * d + b) += Laurent::monomial(t.at(a, b), n);
            for (size_t i = 1; i < tau.faces.size(); ++i) {
                const Rational sign(i % 2 == 0 ? 1 : -1);
                for (long a = 0; a < d; ++a)
                    m.at(r * d + a, tau.faces[i] * d + a) += Laurent(sign);
            }
        }
        out.differentials.push_back(std::move(m));
    }

    if (!out.d_squared_is_zero())
        throw std::logic_error("twisted coboundary does not square to zero");
    return out;
}

std::vector<long> generic_dims(const TwistedComplex& c) {
    std::vector<long> ranks(c.differentials.size());
    for (size_t p = 0; p < c.differentials.size(); ++p)
        ranks[p] = rank_over_function_field(c.differentials[p]);
    std::vector<long> out(c.dims.size());
    for (size_t p = 0; p < c.dims.size(); ++p) {
        long r_out = p < ranks.size() ? ranks[p] : 0;
        long r_in = p >= 1 ? ranks[p - 1] : 0;
        out[p] = c.dims[p] - r_out - r_in;
    }
    return out;
}

long dim_at(const TwistedComplex& c, long degree, const Rational& s0) {
    if (degree < 0 || degree >= (long)c.dims.size())
        fail(ErrorKind::SchemaViolation, "degree " + std::to_string(degree) + " out of range");
    long r_out = degree < (long)c.differentials.size()
                     ? rank_at_parameter(c.differentials[degree], s0)
                     : 0;
    long r_in = degree >= 1 ? rank_at_parameter(c.differentials[degree - 1], s0) : 0;
    return c.dims[degree] - r_out - r_in;
}

std::vector<long> novikov_numbers(const SimplicialComplex& k, const LocalSystem& f,
                                  const OneCocycle& theta) {
    return generic_dims(twisted_complex(k, f, theta));
}

JumpSummary jump_set_of(const TwistedComplex& c, long degree) {
    if (degree < 0 || degree >= (long)c.dims.size())
        fail(ErrorKind::SchemaViolation, "degree " + std::to_string(degree) + " out of range");

    JumpSummary out;
    out.degree = degree;
    out.clearing_factor = c.clearing_factor;

    long generic = c.dims[degree];
    Poly combined(Rational(1));
    for (long p : {degree - 1, degree}) {
        if (p < 0 || p >= (long)c.differentials.size()) continue;
        DropLocus l = drop_locus(c.differentials[p]);
        generic -= l.generic_rank;
        combined = combined * Poly::from_laurent_cleared(l.locus_polynomial);
    }
    out.generic_dim = generic;

    combined = squarefree_part(combined).monic();
    out.locus = combined.to_laurent();

    for (const auto& iv : isolate_positive_roots(combined, drop_locus_isolation_width())) {
        JumpPoint pt;
        pt.where = iv;
        pt.exact = exact_root_in(combined, iv);
        if (pt.exact) {
            long dim = c.dims[degree];
            if (degree < (long)c.differentials.size())
                dim -= rank_at_parameter(c.differentials[degree], *pt.exact);
            if (degree >= 1) dim -= rank_at_parameter(c.differentials[degree - 1], *pt.exact);
            pt.dim = dim;
        }
        out.points.push_back(std::move(pt));
    }
    out.unresolved_degree = combined.degree() - (long)out.points.size();
    return out;
}

JumpSummary jump_set(const SimplicialComplex& k, const LocalSystem& f, const OneCocycle& theta,
                     long degree) {
    return jump_set_of(twisted_complex(k, f, theta), degree);
}

}  // namespace nvlab
