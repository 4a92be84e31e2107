#include "nvlab/json_io.hpp"
#include "nvlab/report.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>

using namespace nvlab;

namespace {

struct Options {
    std::string file;
    std::optional<long> degree;
    std::optional<long> pmax;
    bool jumps = false;
    bool stability = false;
    bool json = false;
    std::optional<long> limit;
};

void emit(const std::string& text) {
    std::cout << text;
}

CountingSeries truncated(const CountingSeries& s, long p_max) {
    CountingSeries out(p_max);
    for (long i = 0; i <= p_max; ++i) out.set_coeff(i, s.coeff(i));
    return out;
}

int run_novikov(const Options& o) {
    const ProblemDescriptor d = load_problem(o.file);
    if (!d.complex) fail(ErrorKind::SchemaViolation, "novikov needs a \"complex\" entry");
    const SimplicialComplex& k = *d.complex;
    validate(k, d.system, d.cocycle);

    NovikovReport rep;
    rep.numbers = novikov_numbers(k, d.system, d.cocycle);
    rep.rank = d.system.rank();
    rep.clearing_factor = d.cocycle.clearing_factor();
    rep.euler_characteristic = k.euler_characteristic();
    if (o.degree) {
        if (*o.degree < 0 || *o.degree >= (long)rep.numbers.size())
            fail(ErrorKind::SchemaViolation,
                 "--degree must lie in 0.." + std::to_string(rep.numbers.size() - 1));
        rep.only_degree = *o.degree;
    }
    if (o.jumps)
        for (long i = 0; i < (long)rep.numbers.size(); ++i) {
            if (rep.only_degree && *rep.only_degree != i) continue;
            rep.jumps.push_back(jump_set(k, d.system, d.cocycle, i));
        }
    emit(o.json ? render_json(rep) : render_text(rep));
    return 0;
}

int run_equivariant(const Options& o) {
    const ProblemDescriptor d = load_problem(o.file);
    if (!d.complex) fail(ErrorKind::SchemaViolation, "equivariant needs a \"complex\" entry");
    if (!d.group) fail(ErrorKind::SchemaViolation, "equivariant needs a \"group\" entry");
    validate_action(*d.complex, *d.group, d.action, *d.equivariant, d.cocycle);

    const long i_max = o.degree.value_or(d.complex->dimension());
    const EquivariantNovikovResult r =
        equivariant_novikov(*d.complex, *d.group, d.action, *d.equivariant, d.cocycle, i_max,
                            o.stability, o.limit.value_or(d.entry_limit));

    EquivariantReport rep;
    rep.numbers = r.numbers;
    rep.acyclicity = r.acyclicity;
    rep.clearing_factor = r.clearing_factor;
    rep.stability_checked = o.stability;
    if (o.jumps) rep.jumps = r.jumps;
    emit(o.json ? render_json(rep) : render_text(rep));
    return 0;
}

int run_verify(const Options& o) {
    const ProblemDescriptor d = load_problem(o.file);
    if (!d.components)
        fail(ErrorKind::SchemaViolation, "verify needs a \"critical_components\" entry");
    const long limit = o.limit.value_or(d.entry_limit);

    long p_max;
    CountingSeries novikov;
    if (d.novikov) {
        p_max = o.pmax.value_or(d.novikov->p_max());
        if (p_max < 0) fail(ErrorKind::SchemaViolation, "--pmax must be nonnegative");
        if (p_max > d.novikov->p_max())
            fail(ErrorKind::TruncationExceedsComputation,
                 "the supplied novikov series stops at degree " +
                     std::to_string(d.novikov->p_max()));
        novikov = truncated(*d.novikov, p_max);
    } else if (d.complex) {
        p_max = o.pmax.value_or(d.complex->dimension());
        if (p_max < 0) fail(ErrorKind::SchemaViolation, "--pmax must be nonnegative");
        if (d.group) {
            validate_action(*d.complex, *d.group, d.action, *d.equivariant, d.cocycle);
            novikov = equivariant_novikov(*d.complex, *d.group, d.action, *d.equivariant,
                                          d.cocycle, p_max, false, limit)
                          .series;
        } else {
            validate(*d.complex, d.system, d.cocycle);
            const std::vector<long> numbers = novikov_numbers(*d.complex, d.system, d.cocycle);
            novikov = CountingSeries(p_max);
            for (long i = 0; i <= p_max && i < (long)numbers.size(); ++i)
                novikov.set_coeff(i, Rational(numbers[i]));
        }
    } else {
        fail(ErrorKind::SchemaViolation, "verify needs a \"novikov_series\" or a \"complex\"");
    }

    const FiniteGroup g = d.group ? *d.group : FiniteGroup::trivial();
    const CountingSeries morse = morse_series(*d.components, g, p_max, limit);

    VerifyReport rep;
    rep.inequalities = verify_inequalities(morse, novikov, p_max);
    rep.p_max = p_max;
    emit(o.json ? render_json(rep) : render_text(rep));
    return 0;
}

int run_symplectic(const Options& o) {
    const ProblemDescriptor d = load_problem(o.file);
    if (!d.fixed_points)
        fail(ErrorKind::SchemaViolation, "symplectic needs a \"fixed_point_data\" entry");
    if (!d.novikov)
        fail(ErrorKind::SchemaViolation, "symplectic needs a \"novikov_series\" entry");

    const long p_max = o.pmax.value_or(d.novikov->p_max());
    if (p_max < 0) fail(ErrorKind::SchemaViolation, "--pmax must be nonnegative");
    if (p_max > d.novikov->p_max())
        fail(ErrorKind::TruncationExceedsComputation,
             "the supplied novikov series stops at degree " + std::to_string(d.novikov->p_max()));
    const CountingSeries novikov = truncated(*d.novikov, p_max);

    std::vector<long> fixed_betti;
    for (const FixedComponent& z : d.fixed_points->components)
        for (long i = 0; i <= z.poincare.p_max(); ++i) {
            const Rational& c = z.poincare.coeff(i);
            if (!c.is_integer() || c < Rational(0))
                fail(ErrorKind::SchemaViolation,
                     "fixed component dimensions must be nonnegative integers, got " + c.str());
            if ((long)fixed_betti.size() <= i) fixed_betti.resize(i + 1, 0);
            fixed_betti[i] += Integer(c.num()).convert_to<long>();
        }

    SymplecticReport rep;
    const auto [even, odd] = stable_dims_via_localization(fixed_betti);
    rep.stable_even = even;
    rep.stable_odd = odd;
    rep.perfectness = perfectness_check(*d.fixed_points, novikov, p_max);
    rep.counts = fixed_point_counts(novikov, d.fixed_points->rank, d.fixed_points->ambient_dim,
                                    p_max, d.euler);
    rep.no_fixed_points = d.fixed_points->components.empty() && rep.perfectness.holds;
    rep.p_max = p_max;
    emit(o.json ? render_json(rep) : render_text(rep));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact deformation and counting reports for simplicial group actions"};
    app.require_subcommand(1);

    Options nov, eq, ver, sym;

    CLI::App* cn = app.add_subcommand("novikov", "background dimensions of the deformed complex");
    cn->add_option("input", nov.file, "problem description (JSON)")->required();
    cn->add_option("--degree", nov.degree, "restrict the table and jump blocks to one degree");
    cn->add_flag("--jumps", nov.jumps, "report exceptional parameters per degree");
    cn->add_flag("--json", nov.json, "machine-readable report");

    CLI::App* ce = app.add_subcommand("equivariant", "equivariant dimensions via a free resolution");
    ce->add_option("input", eq.file, "problem description (JSON)")->required();
    ce->add_option("--degree", eq.degree, "top degree to compute (default: complex dimension)");
    ce->add_flag("--stability-check", eq.stability, "recompute at higher acyclicity and compare");
    ce->add_flag("--jumps", eq.jumps, "report exceptional parameters per degree");
    ce->add_flag("--json", eq.json, "machine-readable report");
    ce->add_option("--limit", eq.limit, "resource cap on total differential entries");

    CLI::App* cv = app.add_subcommand("verify", "counting series against background dimensions");
    cv->add_option("input", ver.file, "problem description (JSON)")->required();
    cv->add_option("--pmax", ver.pmax, "truncation degree (default: series length or dimension)");
    cv->add_flag("--json", ver.json, "machine-readable report");
    cv->add_option("--limit", ver.limit, "resource cap on total differential entries");

    CLI::App* cs = app.add_subcommand("symplectic", "fixed-point identities for circle actions");
    cs->add_option("input", sym.file, "problem description (JSON)")->required();
    cs->add_option("--pmax", sym.pmax, "truncation degree (default: series length)");
    cs->add_flag("--json", sym.json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Fold all usage mistakes into the unusable-input code; only the
        // help/version paths keep their zero.
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cn->parsed()) return run_novikov(nov);
        if (ce->parsed()) return run_equivariant(eq);
        if (cv->parsed()) return run_verify(ver);
        return run_symplectic(sym);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (e.kind() == ErrorKind::SchemaViolation) return 1;
        if (e.kind() == ErrorKind::ResourceLimit) return 3;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
