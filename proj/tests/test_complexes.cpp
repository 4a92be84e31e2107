#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nvlab/errors.hpp"
#include "nvlab/local_system.hpp"
#include "nvlab/simplicial.hpp"
#include "nvlab/twisted.hpp"

#include <random>
#include <vector>

using namespace nvlab;

namespace {

SimplicialComplex circle3() {
    return SimplicialComplex::from_simplices(3, {{0, 1}, {1, 2}, {0, 2}});
}

/* theta on the 3-vertex circle with the given values on [0,1], [1,2], [0,2];
 * loop sum (traversing 0 -> 1 -> 2 -> 0) is v01 + v12 - v02. */
OneCocycle circle_cocycle(const SimplicialComplex& k, const Rational& v01, const Rational& v12,
                          const Rational& v02) {
    OneCocycle theta(k.cell_count(1));
    theta.set(k.find({0, 1}), v01);
    theta.set(k.find({1, 2}), v12);
    theta.set(k.find({0, 2}), v02);
    return theta;
}

SimplicialComplex disk() {
    return SimplicialComplex::from_simplices(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}});
}

/* 9-vertex torus: vertices (x, y) in Z3 x Z3 with id 3x + y; each grid
 * square splits into two triangles along its diagonal. */
SimplicialComplex torus9() {
    auto id = [](long x, long y) { return 3 * ((x + 3) % 3) + (y + 3) % 3; };
    std::vector<std::vector<long>> simplices;
    auto add_sorted = [&](std::vector<long> t) {
        std::sort(t.begin(), t.end());
        if (std::find(simplices.begin(), simplices.end(), t) == simplices.end())
            simplices.push_back(t);
    };
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y) {
            long a = id(x, y), b = id(x + 1, y), c = id(x, y + 1), d = id(x + 1, y + 1);
            for (auto& tri : {std::vector<long>{a, c, d}, std::vector<long>{a, b, d}}) {
                add_sorted(tri);
                add_sorted({tri[0], tri[1]});
                add_sorted({tri[0], tri[2]});
                add_sorted({tri[1], tri[2]});
            }
        }
    return SimplicialComplex::from_simplices(9, simplices);
}

/* Pullback of the degree-3 circle cocycle along the x-coordinate. Sorted
 * vertex ids order by x first, so the x-pair of an edge is one of
 * (0,0),(1,1),(2,2) -> 0, (0,1),(1,2) -> 1, (0,2) -> -1. */
OneCocycle torus_pullback(const SimplicialComplex& k) {
    OneCocycle theta(k.cell_count(1));
    for (long e = 0; e < k.cell_count(1); ++e) {
        long xa = k.cell(1, e).vertices[0] / 3, xb = k.cell(1, e).vertices[1] / 3;
        long v = 0;
        if (xa != xb) v = (xa == 0 && xb == 2) ? -1 : 1;
        theta.set(e, Rational(v));
    }
    return theta;
}

/* Coboundary of a vertex function: (delta f)[v0 v1] = f(v1) - f(v0). */
OneCocycle coboundary(const SimplicialComplex& k, const std::vector<Rational>& f) {
    OneCocycle theta(k.cell_count(1));
    for (long e = 0; e < k.cell_count(1); ++e)
        theta.set(e, f[k.cell(1, e).vertices[1]] - f[k.cell(1, e).vertices[0]]);
    return theta;
}

OneCocycle shift(const SimplicialComplex& k, const OneCocycle& theta,
                 const std::vector<Rational>& f) {
    OneCocycle out(k.cell_count(1));
    for (long e = 0; e < k.cell_count(1); ++e)
        out.set(e, theta.value(e) + f[k.cell(1, e).vertices[1]] - f[k.cell(1, e).vertices[0]]);
    return out;
}

QMatrix random_invertible(std::mt19937& rng, long d) {
    QMatrix u = QMatrix::identity(d);
    std::uniform_int_distribution<long> pick(0, d - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (long step = 0; step < 3 * d + 2; ++step) {
        long i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Rational c(mult(rng));
        for (long t = 0; t < d; ++t) u.at(i, t) = u.at(i, t) + c * u.at(j, t);
    }
    return u;
}

/* Gauge-built flat system: T[v0 v1] = P(v0) * P(v1)^{-1} is automatically
 * flat and invertible for any choice of invertible frames P. */
LocalSystem gauge_system(std::mt19937& rng, const SimplicialComplex& k, long d) {
    std::vector<QMatrix> frame;
    for (long v = 0; v < k.vertex_count(); ++v) frame.push_back(random_invertible(rng, d));
    LocalSystem f(d, k.cell_count(1));
    for (long e = 0; e < k.cell_count(1); ++e) {
        const Cell& ed = k.cell(1, e);
        f.set_transport(e, frame[ed.vertices[0]] * frame[ed.vertices[1]].inverse());
    }
    return f;
}

long alternating_sum(const std::vector<long>& v) {
    long s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * v[i];
    return s;
}

}  // namespace

TEST_CASE("strict complexes validate closure and ordering") {
    SimplicialComplex c = circle3();
    CHECK(c.dimension() == 1);
    CHECK(c.cell_count(0) == 3);
    CHECK(c.cell_count(1) == 3);
    CHECK(c.euler_characteristic() == 0);
    CHECK(c.is_strict());
    CHECK(c.find({0, 1}) >= 0);
    CHECK(c.find({1, 2}) >= 0);
    CHECK(c.find({0, 1, 2}) == -1);

    SimplicialComplex pt = SimplicialComplex::from_simplices(1, {});
    CHECK(pt.dimension() == 0);
    CHECK(pt.euler_characteristic() == 1);

    // boundary of the 3-simplex: a 2-sphere
    std::vector<std::vector<long>> sphere;
    for (long i = 0; i < 4; ++i)
        for (long j = i + 1; j < 4; ++j) sphere.push_back({i, j});
    for (long i = 0; i < 4; ++i)
        for (long j = i + 1; j < 4; ++j)
            for (long l = j + 1; l < 4; ++l) sphere.push_back({i, j, l});
    SimplicialComplex s2 = SimplicialComplex::from_simplices(4, sphere);
    CHECK(s2.euler_characteristic() == 2);

    CHECK_THROWS_WITH_AS(SimplicialComplex::from_simplices(3, {{0, 1, 2}, {0, 1}, {1, 2}}),
                         doctest::Contains("[0,2]"), Error);
    try {
        SimplicialComplex::from_simplices(3, {{0, 1, 2}, {0, 1}, {1, 2}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MissingFace);
    }
    CHECK_THROWS_AS(SimplicialComplex::from_simplices(3, {{1, 0}}), Error);
    CHECK_THROWS_AS(SimplicialComplex::from_simplices(2, {{0, 2}}), Error);
    CHECK_THROWS_AS(SimplicialComplex::from_simplices(3, {{0, 1}, {0, 1}}), Error);
}

TEST_CASE("cocycle closedness and transport flatness") {
    SimplicialComplex c = circle3();
    LocalSystem triv = LocalSystem::trivial(1, 3);
    // no 2-cells: closedness is vacuous, any values pass
    validate(c, triv, circle_cocycle(c, Rational(1), Rational(1), Rational(-1)));

    SimplicialComplex d = disk();
    validate(d, LocalSystem::trivial(1, 3), circle_cocycle(d, Rational(1), Rational(1), Rational(2)));
    try {
        validate(d, LocalSystem::trivial(1, 3),
                 circle_cocycle(d, Rational(1), Rational(1), Rational(3)));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotClosed);
    }

    // a transport that fails to compose over the 2-cell
    std::mt19937 rng(5);
    LocalSystem bad = gauge_system(rng, d, 2);
    QMatrix twist = QMatrix::identity(2);
    twist.at(0, 1) = Rational(1);
    bad.set_transport(d.find({0, 1}), bad.transport(d.find({0, 1})) * twist);
    try {
        validate(d, bad, coboundary(d, {Rational(0), Rational(0), Rational(0)}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFlat);
    }

    // a singular transport
    LocalSystem sing = LocalSystem::trivial(2, 3);
    QMatrix z(2, 2);
    sing.set_transport(0, z);
    try {
        validate(c, sing, OneCocycle(3));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFlat);
    }

    try {
        validate(c, LocalSystem::trivial(1, 2), OneCocycle(3));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ComplexMismatch);
    }

    // idempotent: validating twice changes nothing
    validate(c, triv, circle_cocycle(c, Rational(1), Rational(1), Rational(-1)));
    validate(c, triv, circle_cocycle(c, Rational(1), Rational(1), Rational(-1)));
}

TEST_CASE("twisted complex of the circle") {
    SimplicialComplex c = circle3();
    LocalSystem triv = LocalSystem::trivial(1, 3);
    OneCocycle theta = circle_cocycle(c, Rational(1), Rational(1), Rational(-1));  // loop sum 3

    TwistedComplex t = twisted_complex(c, triv, theta);
    CHECK(t.dims == std::vector<long>{3, 3});
    CHECK(t.clearing_factor == Integer(1));
    CHECK(t.d_squared_is_zero());
    CHECK(rank_over_function_field(t.differentials[0]) == 3);

    CHECK(novikov_numbers(c, triv, theta) == std::vector<long>{0, 0});

    for (long degree : {0L, 1L}) {
        JumpSummary j = jump_set(c, triv, theta, degree);
        CHECK(j.generic_dim == 0);
        REQUIRE(j.points.size() == 1);
        REQUIRE(j.points[0].exact.has_value());
        CHECK(*j.points[0].exact == Rational(1));
        CHECK(*j.points[0].dim == 1);
        CHECK(j.unresolved_degree == 2);  // the two complex cube roots of 1
    }

    // the curve of dimensions dominates the background value everywhere
    for (const Rational& s0 : {Rational(1), Rational(2), Rational(1, 2), Rational(7, 3)}) {
        for (long i : {0L, 1L}) {
            long dim = dim_at(t, i, s0);
            CHECK(dim >= 0);
            if (s0 == Rational(1))
                CHECK(dim == 1);
            else
                CHECK(dim == 0);
        }
    }
}

TEST_CASE("untwisted circle keeps its ordinary cohomology") {
    SimplicialComplex c = circle3();
    LocalSystem triv = LocalSystem::trivial(1, 3);
    OneCocycle zero(3);
    CHECK(novikov_numbers(c, triv, zero) == std::vector<long>{1, 1});
    JumpSummary j = jump_set(c, triv, zero, 0);
    CHECK(j.generic_dim == 1);
    CHECK(j.points.empty());
    CHECK(j.locus == Laurent(Rational(1)));
    CHECK(j.unresolved_degree == 0);
}

TEST_CASE("rational cocycles are cleared, jumps unchanged") {
    SimplicialComplex c = circle3();
    LocalSystem triv = LocalSystem::trivial(1, 3);
    OneCocycle theta = circle_cocycle(c, Rational(1, 2), Rational(1, 2), Rational(-1, 2));

    TwistedComplex t = twisted_complex(c, triv, theta);
    CHECK(t.clearing_factor == Integer(2));
    CHECK(novikov_numbers(c, triv, theta) == std::vector<long>{0, 0});

    JumpSummary j = jump_set(c, triv, theta, 0);
    CHECK(j.clearing_factor == Integer(2));
    REQUIRE(j.points.size() == 1);
    CHECK(*j.points[0].exact == Rational(1));  // t = 2 ln(1) = 0, same jump
}

TEST_CASE("contractible disk has constant cohomology in s") {
    SimplicialComplex d = disk();
    LocalSystem triv = LocalSystem::trivial(1, 3);
    OneCocycle theta = coboundary(d, {Rational(0), Rational(1), Rational(2)});

    CHECK(novikov_numbers(d, triv, theta) == std::vector<long>{1, 0, 0});
    for (long degree : {0L, 1L, 2L}) {
        JumpSummary j = jump_set(d, triv, theta, degree);
        CHECK(j.points.empty());
        CHECK(j.unresolved_degree == 0);
    }
}

TEST_CASE("torus with a pulled-back circle cocycle") {
    SimplicialComplex t = torus9();
    CHECK(t.cell_count(0) == 9);
    CHECK(t.cell_count(1) == 27);
    CHECK(t.cell_count(2) == 18);
    CHECK(t.euler_characteristic() == 0);

    LocalSystem triv = LocalSystem::trivial(1, 27);
    OneCocycle zero(27);
    CHECK(novikov_numbers(t, triv, zero) == std::vector<long>{1, 2, 1});

    OneCocycle theta = torus_pullback(t);
    validate(t, triv, theta);  // closed
    // loop sum along the x-circle (0,0) -> (1,0) -> (2,0) -> (0,0)
    CHECK(theta.value(t.find({0, 3})) + theta.value(t.find({3, 6})) - theta.value(t.find({0, 6})) ==
          Rational(3));
    CHECK(novikov_numbers(t, triv, theta) == std::vector<long>{0, 0, 0});
    CHECK(twisted_complex(t, triv, theta).d_squared_is_zero());
}

TEST_CASE("alternating background sum equals rank times euler characteristic") {
    std::mt19937 rng(99);
    SimplicialComplex c = circle3();
    SimplicialComplex d = disk();
    SimplicialComplex t = torus9();

    // circle, rank 2 gauge system, integer cocycle
    LocalSystem f2 = gauge_system(rng, c, 2);
    OneCocycle th = circle_cocycle(c, Rational(2), Rational(-1), Rational(3));
    CHECK(alternating_sum(novikov_numbers(c, f2, th)) == 2 * c.euler_characteristic());

    // disk, rank 3 gauge system, coboundary cocycle
    LocalSystem f3 = gauge_system(rng, d, 3);
    OneCocycle dh = coboundary(d, {Rational(1, 2), Rational(0), Rational(-2)});
    CHECK(alternating_sum(novikov_numbers(d, f3, dh)) == 3 * d.euler_characteristic());

    // torus, trivial rank 2, pullback cocycle
    LocalSystem t2 = LocalSystem::trivial(2, 27);
    CHECK(alternating_sum(novikov_numbers(t, t2, torus_pullback(t))) == 0);
}

TEST_CASE("background dims depend only on the cohomology class and its sign") {
    std::mt19937 rng(7);
    SimplicialComplex c = circle3();
    LocalSystem f = gauge_system(rng, c, 2);
    OneCocycle theta = circle_cocycle(c, Rational(1), Rational(0), Rational(-1));  // loop sum 2

    std::vector<Rational> fun = {Rational(3, 2), Rational(-1), Rational(5)};
    CHECK(novikov_numbers(c, f, theta) == novikov_numbers(c, f, shift(c, theta, fun)));
    CHECK(novikov_numbers(c, f, theta) == novikov_numbers(c, f, -theta));

    SimplicialComplex t = torus9();
    LocalSystem triv = LocalSystem::trivial(1, 27);
    OneCocycle pb = torus_pullback(t);
    std::vector<Rational> tf(9);
    for (long v = 0; v < 9; ++v) tf[v] = Rational(((v * 7) % 5) - 2, 3);
    CHECK(novikov_numbers(t, triv, pb) == novikov_numbers(t, triv, shift(t, pb, tf)));
    CHECK(novikov_numbers(t, triv, pb) == novikov_numbers(t, triv, -pb));
}

TEST_CASE("tensor products of local systems") {
    SimplicialComplex c = circle3();

    std::mt19937 rng(11);
    LocalSystem f = gauge_system(rng, c, 2);
    LocalSystem triv1 = LocalSystem::trivial(1, 3);
    LocalSystem ft = tensor(f, triv1);
    CHECK(ft.rank() == 2);
    for (long e = 0; e < 3; ++e) CHECK(ft.transport(e) == f.transport(e));

    // sign system squared is trivial
    LocalSystem sgn(1, 3);
    QMatrix minus(1, 1);
    minus.at(0, 0) = Rational(-1);
    for (long e = 0; e < 3; ++e) sgn.set_transport(e, minus);
    LocalSystem sq = tensor(sgn, sgn);
    for (long e = 0; e < 3; ++e) CHECK(sq.transport(e).is_identity());

    LocalSystem g = gauge_system(rng, c, 3);
    LocalSystem fg = tensor(f, g);
    CHECK(fg.rank() == 6);
    validate(c, fg, OneCocycle(3));  // Kronecker transports stay flat

    try {
        tensor(f, LocalSystem::trivial(1, 4));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ComplexMismatch);
    }
}

TEST_CASE("sign system on the circle shifts the jump away from 1") {
    // monodromy -s^2 around the loop: nontrivial for all s > 0, so the
    // twisted cohomology vanishes everywhere and no jump is reported
    SimplicialComplex c = circle3();
    LocalSystem sgn(1, 3);
    QMatrix minus(1, 1);
    minus.at(0, 0) = Rational(-1);
    sgn.set_transport(c.find({0, 1}), minus);
    OneCocycle theta = circle_cocycle(c, Rational(1), Rational(1), Rational(0));  // loop sum 2

    CHECK(novikov_numbers(c, sgn, theta) == std::vector<long>{0, 0});
    JumpSummary j = jump_set(c, sgn, theta, 0);
    CHECK(j.points.empty());
    CHECK(j.unresolved_degree == 2);  // s^2 + 1 has no positive real roots
}

TEST_CASE("delta cells may loop and run parallel") {
    // one vertex, one loop edge: the minimal circle
    SimplicialComplex loop = SimplicialComplex::delta(1);
    loop.add_cell({0, 0}, {0, 0});
    CHECK(loop.euler_characteristic() == 0);

    LocalSystem triv = LocalSystem::trivial(1, 1);
    OneCocycle theta(1);
    theta.set(0, Rational(1));
    TwistedComplex t = twisted_complex(loop, triv, theta);
    REQUIRE(t.dims == std::vector<long>{1, 1});
    CHECK(t.differentials[0].at(0, 0) == Laurent::monomial(Rational(1), 1) - Laurent(Rational(1)));
    CHECK(novikov_numbers(loop, triv, theta) == std::vector<long>{0, 0});
    JumpSummary j = jump_set(loop, triv, theta, 1);
    REQUIRE(j.points.size() == 1);
    CHECK(*j.points[0].exact == Rational(1));
    CHECK(*j.points[0].dim == 1);

    // two vertices joined by parallel edges: the quotient shape of the
    // 4-vertex circle under its antipodal flip
    SimplicialComplex par = SimplicialComplex::delta(2);
    par.add_cell({0, 1}, {1, 0});
    par.add_cell({0, 1}, {1, 0});
    CHECK(par.euler_characteristic() == 0);
    LocalSystem triv2 = LocalSystem::trivial(1, 2);
    OneCocycle th2(2);
    th2.set(0, Rational(1));
    th2.set(1, Rational(0));
    CHECK(novikov_numbers(par, triv2, th2) == std::vector<long>{0, 0});
    JumpSummary j2 = jump_set(par, triv2, th2, 0);
    REQUIRE(j2.points.size() == 1);
    CHECK(*j2.points[0].exact == Rational(1));

    // mismatched faces are rejected outright
    SimplicialComplex bad = SimplicialComplex::delta(2);
    CHECK_THROWS_AS(bad.add_cell({0, 1}, {0, 0}), Error);
    CHECK_THROWS_AS(bad.add_cell({0, 1}, {1, 5}), Error);
}
