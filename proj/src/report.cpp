#include "nvlab/report.hpp"

#include "json.hpp"

#include <string>

namespace nvlab {

std::string deformation_parameter(const Rational& s0, const Integer& clearing) {
    if (s0 == Rational(1)) return "0";
    if (clearing >= 1 && clearing <= 1024)
        return ln_decimal_string(s0.pow(clearing.convert_to<long>()), 6);
    return clearing.str() + " * ln(" + s0.str() + ")";
}

namespace {

using nlohmann::ordered_json;

std::string tuple_of(const std::vector<long>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

void append_jump_block(std::string& out, const JumpSummary& j, const Integer& clearing) {
    out += "jumps in degree " + std::to_string(j.degree) + ": ";
    if (j.points.empty() && j.unresolved_degree == 0) {
        out += "none\n";
        return;
    }
    out += "points " + std::to_string(j.points.size()) + ", other factor degree " +
           std::to_string(j.unresolved_degree) + "\n";
    for (const JumpPoint& p : j.points) {
        if (p.exact) {
            out += "  s = " + p.exact->str() + " (t = " +
                   deformation_parameter(*p.exact, clearing) + ")";
            if (p.dim) out += ", dim = " + std::to_string(*p.dim);
            out += "\n";
        } else {
            out += "  s in (" + p.where.lo.str() + ", " + p.where.hi.str() + "), t in (" +
                   deformation_parameter(p.where.lo, clearing) + ", " +
                   deformation_parameter(p.where.hi, clearing) + ")\n";
        }
    }
}

ordered_json jumps_json(const std::vector<JumpSummary>& jumps, const Integer& clearing) {
    ordered_json out = ordered_json::array();
    for (const JumpSummary& j : jumps) {
        ordered_json points = ordered_json::array();
        for (const JumpPoint& p : j.points) {
            ordered_json pt;
            if (p.exact) {
                pt["s"] = p.exact->str();
                pt["t"] = deformation_parameter(*p.exact, clearing);
                if (p.dim) pt["dim"] = *p.dim;
            } else {
                pt["s_lo"] = p.where.lo.str();
                pt["s_hi"] = p.where.hi.str();
                pt["t_lo"] = deformation_parameter(p.where.lo, clearing);
                pt["t_hi"] = deformation_parameter(p.where.hi, clearing);
            }
            points.push_back(std::move(pt));
        }
        out.push_back(ordered_json{{"degree", j.degree},
                                   {"generic_dim", j.generic_dim},
                                   {"points", std::move(points)},
                                   {"other_factor_degree", j.unresolved_degree}});
    }
    return out;
}

ordered_json series_strings(const CountingSeries& s) {
    ordered_json out = ordered_json::array();
    for (long i = 0; i <= s.p_max(); ++i) out.push_back(s.coeff(i).str());
    return out;
}

std::string finish(ordered_json j) {
    return j.dump(2) + "\n";
}

}  // namespace

std::string render_text(const NovikovReport& r) {
    std::string out;
    for (long i = 0; i < (long)r.numbers.size(); ++i) {
        if (r.only_degree && *r.only_degree != i) continue;
        out += "beta_" + std::to_string(i) + " = " + std::to_string(r.numbers[i]) + "\n";
    }
    out += "clearing factor: " + r.clearing_factor.str() + "\n";
    long alternating = 0;
    for (size_t i = 0; i < r.numbers.size(); ++i)
        alternating += (i % 2 == 0 ? 1 : -1) * r.numbers[i];
    const long expected = r.rank * r.euler_characteristic;
    out += "euler check: alternating sum " + std::to_string(alternating) + ", rank * chi " +
           std::to_string(expected) + (alternating == expected ? ", ok" : ", MISMATCH") + "\n";
    for (const JumpSummary& j : r.jumps) append_jump_block(out, j, r.clearing_factor);
    return out;
}

std::string render_json(const NovikovReport& r) {
    long alternating = 0;
    for (size_t i = 0; i < r.numbers.size(); ++i)
        alternating += (i % 2 == 0 ? 1 : -1) * r.numbers[i];
    const long expected = r.rank * r.euler_characteristic;
    ordered_json j{{"command", "novikov"},
                   {"numbers", r.numbers},
                   {"rank", r.rank},
                   {"clearing_factor", r.clearing_factor.str()},
                   {"euler",
                    {{"alternating_sum", alternating},
                     {"rank_times_chi", expected},
                     {"ok", alternating == expected}}}};
    if (!r.jumps.empty()) j["jumps"] = jumps_json(r.jumps, r.clearing_factor);
    return finish(std::move(j));
}

std::string render_text(const EquivariantReport& r) {
    std::string out = "equivariant dims: " + tuple_of(r.numbers) + "\n";
    out += "acyclicity: " + std::to_string(r.acyclicity) + "\n";
    out += "clearing factor: " + r.clearing_factor.str() + "\n";
    if (r.stability_checked) out += "stability: ok\n";
    for (const JumpSummary& j : r.jumps) append_jump_block(out, j, r.clearing_factor);
    return out;
}

std::string render_json(const EquivariantReport& r) {
    ordered_json j{{"command", "equivariant"},
                   {"dims", r.numbers},
                   {"acyclicity", r.acyclicity},
                   {"clearing_factor", r.clearing_factor.str()}};
    if (r.stability_checked) j["stability"] = "ok";
    if (!r.jumps.empty()) j["jumps"] = jumps_json(r.jumps, r.clearing_factor);
    return finish(std::move(j));
}

namespace {

std::string verdict_line(const InequalityReport& q) {
    switch (q.verdict) {
        case InequalityVerdict::Perfect: return "verdict: PERFECT (Q = 0)";
        case InequalityVerdict::Holds: return "verdict: HOLDS";
        case InequalityVerdict::Fails:
            return "verdict: FAILS at p = " + std::to_string(q.first_failure) + " (Q_" +
                   std::to_string(q.first_failure) + " = " +
                   q.q.coeff(q.first_failure).str() + ")";
    }
    return "verdict: HOLDS";
}

const char* verdict_word(InequalityVerdict v) {
    switch (v) {
        case InequalityVerdict::Perfect: return "PERFECT";
        case InequalityVerdict::Holds: return "HOLDS";
        case InequalityVerdict::Fails: return "FAILS";
    }
    return "HOLDS";
}

}  // namespace

std::string render_text(const VerifyReport& r) {
    std::string out;
    out += "morse series: " + r.inequalities.morse.str() + "\n";
    out += "novikov series: " + r.inequalities.novikov.str() + "\n";
    out += "q series: " + r.inequalities.q.str() + "\n";
    out += verdict_line(r.inequalities) + "\n";
    return out;
}

std::string render_json(const VerifyReport& r) {
    return finish(ordered_json{{"command", "verify"},
                               {"p_max", r.p_max},
                               {"morse", series_strings(r.inequalities.morse)},
                               {"novikov", series_strings(r.inequalities.novikov)},
                               {"q", series_strings(r.inequalities.q)},
                               {"verdict", verdict_word(r.inequalities.verdict)},
                               {"first_failure", r.inequalities.first_failure}});
}

std::string render_text(const SymplecticReport& r) {
    std::string out;
    out += "stable dims: even " + std::to_string(r.stable_even) + ", odd " +
           std::to_string(r.stable_odd) + "\n";
    if (r.perfectness.holds) {
        out += "perfectness: holds\n";
    } else {
        const long d = r.perfectness.first_discrepancy;
        out += "perfectness: fails at degree " + std::to_string(d) + " (left side " +
               r.perfectness.lhs.coeff(d).str() + ", novikov " +
               r.perfectness.novikov.coeff(d).str() + ")\n";
    }
    if (r.no_fixed_points) out += "consistent: no fixed points\n";
    out += "fixed point counts: m = " + tuple_of(r.counts.counts) + "\n";
    out += "total fixed points: " + std::to_string(r.counts.total) + "\n";
    out += r.counts.monotonicity_ok
               ? "monotonicity: ok\n"
               : "monotonicity: violated at degree " +
                     std::to_string(r.counts.monotonicity_degree) + "\n";
    if (!r.counts.symmetry_checked)
        out += "symmetry: not checked (truncation below ambient dimension)\n";
    else if (r.counts.symmetry_ok)
        out += "symmetry: ok\n";
    else
        out += "symmetry: violated at degree " + std::to_string(r.counts.symmetry_degree) + "\n";
    out += r.counts.stabilization_verified
               ? "stabilization: verified, stable value " + std::to_string(r.counts.stable_value) +
                     "\n"
               : "stabilization: not verified\n";
    if (r.counts.total_matches_stable)
        out += *r.counts.total_matches_stable
                   ? "total vs stable: ok\n"
                   : "total vs stable: MISMATCH (total " + std::to_string(r.counts.total) +
                         ", stable " + std::to_string(r.counts.stable_value) + ")\n";
    if (r.counts.euler_consistent)
        out += *r.counts.euler_consistent
                   ? "euler: consistent\n"
                   : "euler: INCONSISTENT (stable value " +
                         std::to_string(r.counts.stable_value) + ")\n";
    return out;
}

std::string render_json(const SymplecticReport& r) {
    ordered_json j{{"command", "symplectic"},
                   {"p_max", r.p_max},
                   {"stable_even", r.stable_even},
                   {"stable_odd", r.stable_odd},
                   {"perfectness",
                    {{"holds", r.perfectness.holds},
                     {"first_discrepancy", r.perfectness.first_discrepancy},
                     {"lhs", series_strings(r.perfectness.lhs)}}},
                   {"no_fixed_points", r.no_fixed_points},
                   {"counts", r.counts.counts},
                   {"total", r.counts.total},
                   {"monotonicity_ok", r.counts.monotonicity_ok},
                   {"monotonicity_degree", r.counts.monotonicity_degree},
                   {"symmetry_checked", r.counts.symmetry_checked},
                   {"symmetry_ok", r.counts.symmetry_ok},
                   {"symmetry_degree", r.counts.symmetry_degree},
                   {"stabilization_verified", r.counts.stabilization_verified},
                   {"stable_value", r.counts.stable_value}};
    if (r.counts.total_matches_stable) j["total_matches_stable"] = *r.counts.total_matches_stable;
    if (r.counts.euler_consistent) j["euler_consistent"] = *r.counts.euler_consistent;
    return finish(std::move(j));
}

}  // namespace nvlab
