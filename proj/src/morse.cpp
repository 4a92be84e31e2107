#include "nvlab/morse.hpp"

#include "nvlab/errors.hpp"
#include "nvlab/local_system.hpp"

#include <algorithm>
#include <string>

namespace nvlab {

FiniteGroup subgroup_of(const FiniteGroup& g, const std::vector<long>& elements) {
    const long n = (long)elements.size();
    if (n == 0)
        fail(ErrorKind::SchemaViolation, "stabilizer element list is empty");
    std::vector<long> pos(g.order(), -1);
    for (long i = 0; i < n; ++i) {
        const long el = elements[i];
        if (el < 0 || el >= g.order())
            fail(ErrorKind::SchemaViolation, "stabilizer element " + std::to_string(el) +
                                                 " is outside the group");
        if (pos[el] >= 0)
            fail(ErrorKind::SchemaViolation,
                 "stabilizer lists element " + std::to_string(el) + " twice");
        pos[el] = i;
    }
    if (pos[g.identity()] < 0)
        fail(ErrorKind::SchemaViolation, "stabilizer does not contain the identity");

    // closure of a finite subset containing the identity already forces
    // inverses, so this is the whole subgroup test
    std::vector<std::vector<long>> table(n, std::vector<long>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const long prod = g.mul(elements[i], elements[j]);
            if (pos[prod] < 0)
                fail(ErrorKind::SchemaViolation,
                     "stabilizer is not closed: " + std::to_string(elements[i]) + " * " +
                         std::to_string(elements[j]) + " = " + std::to_string(prod) +
                         " is missing");
            table[i][j] = pos[prod];
        }
    return FiniteGroup(std::move(table), pos[g.identity()]);
}

CountingSeries component_poincare_series(const CriticalComponent& z, const FiniteGroup& g,
                                         long p_max, long entry_limit) {
    if (z.index < 0)
        fail(ErrorKind::SchemaViolation,
             "component " + z.label + " has negative index " + std::to_string(z.index));
    if (z.model.has_value() == z.series.has_value())
        fail(ErrorKind::SchemaViolation,
             "component " + z.label + " needs exactly one of a cellular model or a series");

    if (z.series) {
        CountingSeries out(p_max);
        for (long i = 0; i <= std::min(p_max, z.series->p_max()); ++i) {
            if (z.series->coeff(i) < Rational(0))
                fail(ErrorKind::NegativeSeriesCoefficient,
                     "component " + z.label + " has a negative coefficient at degree " +
                         std::to_string(i));
            out.set_coeff(i, z.series->coeff(i));
        }
        for (long i = p_max + 1; i <= z.series->p_max(); ++i)
            if (z.series->coeff(i) < Rational(0))
                fail(ErrorKind::NegativeSeriesCoefficient,
                     "component " + z.label + " has a negative coefficient at degree " +
                         std::to_string(i));
        return out;
    }

    const ComponentModel& m = *z.model;
    if (m.orientation.rank() != 1)
        fail(ErrorKind::SchemaViolation,
             "orientation system of component " + z.label + " must have rank 1");
    for (long e = 0; e < m.orientation.edge_count(); ++e) {
        const Rational& v = m.orientation.transport(e).at(0, 0);
        if (!(v == Rational(1) || v == Rational(-1)))
            fail(ErrorKind::SchemaViolation, "orientation transport of component " + z.label +
                                                 " on edge " + std::to_string(e) +
                                                 " is not a sign");
    }

    const FiniteGroup h = subgroup_of(g, z.stabilizer);
    // the orientation line contributes only its signs, so the fiber maps of
    // the tensored system are those of the original one
    EquivariantLocalSystem twisted{tensor(m.system.base, m.orientation), m.system.fiber_maps};
    const OneCocycle zero(m.complex.cell_count(1));
    const std::vector<long> dims =
        equivariant_dims(m.complex, h, m.action, twisted, zero, p_max, entry_limit);

    CountingSeries out(p_max);
    for (long i = 0; i <= p_max; ++i) out.set_coeff(i, Rational(dims[i]));
    return out;
}

CountingSeries morse_series(const std::vector<CriticalComponent>& components,
                            const FiniteGroup& g, long p_max, long entry_limit) {
    CountingSeries total(p_max);
    for (const CriticalComponent& z : components) {
        if (g.order() % (long)z.stabilizer.size() != 0)
            fail(ErrorKind::IndexNotDividing,
                 "stabilizer of component " + z.label + " has " +
                     std::to_string(z.stabilizer.size()) +
                     " elements, which does not divide the group order " +
                     std::to_string(g.order()));
        const Rational weight((long)z.stabilizer.size(), g.order());
        const CountingSeries p = component_poincare_series(z, g, p_max, entry_limit);
        for (long i = 0; i + z.index <= p_max; ++i)
            total.set_coeff(i + z.index, total.coeff(i + z.index) + weight * p.coeff(i));
    }
    return total;
}

InequalityReport verify_inequalities(const CountingSeries& morse, const CountingSeries& novikov,
                                     long p_max) {
    if (morse.p_max() != p_max || novikov.p_max() != p_max)
        fail(ErrorKind::TruncationMismatch,
             "both series must be truncated at degree " + std::to_string(p_max));

    InequalityReport out;
    out.morse = morse;
    out.novikov = novikov;
    out.q = CountingSeries(p_max);

    const CountingSeries gamma = series_arith(SeriesOp::Subtract, morse, novikov);
    Rational prev(0);
    bool all_zero = true;
    for (long p = 0; p <= p_max; ++p) {
        const Rational qp = gamma.coeff(p) - prev;
        out.q.set_coeff(p, qp);
        prev = qp;
        if (!qp.is_zero()) all_zero = false;
        if ((qp < Rational(0) || !qp.is_integer()) && out.first_failure < 0)
            out.first_failure = p;
    }
    out.verdict = out.first_failure >= 0 ? InequalityVerdict::Fails
                  : all_zero             ? InequalityVerdict::Perfect
                                         : InequalityVerdict::Holds;
    return out;
}

CountingSeries isolated_case(const std::vector<long>& orbit_counts, long rank, long torus_rank,
                             long p_max) {
    if (rank < 1)
        fail(ErrorKind::SchemaViolation, "rank must be at least 1");
    if (torus_rank < 0)
        fail(ErrorKind::SchemaViolation, "torus rank must be nonnegative");
    CountingSeries counts(p_max);
    for (size_t i = 0; i < orbit_counts.size(); ++i) {
        if (orbit_counts[i] < 0)
            fail(ErrorKind::SchemaViolation, "orbit counts must be nonnegative");
        if ((long)i <= p_max) counts.set_coeff((long)i, Rational(orbit_counts[i] * rank));
    }
    return series_arith(SeriesOp::Multiply, counts,
                        expand_inverse_one_minus_lambda_sq(torus_rank, p_max));
}

void validate_isolated_stabilizers(const std::vector<IsolatedPoint>& points,
                                   bool connected_group) {
    if (connected_group) return;  // nothing to check, the condition is automatic
    for (const IsolatedPoint& p : points)
        for (size_t j = 0; j < p.stabilizer_actions.size(); ++j)
            if (!p.stabilizer_actions[j].is_identity())
                fail(ErrorKind::NontrivialStabilizerAction,
                     "point " + p.label + ": stabilizer element " + std::to_string(j) +
                         " acts nontrivially on the fiber");
}

}  // namespace nvlab
