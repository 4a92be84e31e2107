#include "nvlab/local_system.hpp"

#include "nvlab/errors.hpp"

#include <string>

namespace nvlab {

Integer OneCocycle::clearing_factor() const {
    Integer l = 1;
    for (const auto& v : values_) l = lcm(l, v.den());
    return l;
}

OneCocycle OneCocycle::operator-() const {
    OneCocycle out((long)values_.size());
    for (size_t i = 0; i < values_.size(); ++i) out.values_[i] = -values_[i];
    return out;
}

LocalSystem::LocalSystem(long rank, long edge_count) : rank_(rank) {
    if (rank < 1)
        fail(ErrorKind::SchemaViolation, "local system rank must be >= 1");
    transports_.assign(edge_count, QMatrix::identity(rank));
}

LocalSystem LocalSystem::trivial(long rank, long edge_count) {
    return LocalSystem(rank, edge_count);
}

void LocalSystem::set_transport(long edge, QMatrix t) {
    if (t.rows() != rank_ || t.cols() != rank_)
        fail(ErrorKind::SchemaViolation,
             "transport on edge " + std::to_string(edge) + " is not " + std::to_string(rank_) + "x" +
                 std::to_string(rank_));
    transports_.at(edge) = std::move(t);
}

LocalSystem tensor(const LocalSystem& a, const LocalSystem& b) {
    if (a.edge_count() != b.edge_count())
        fail(ErrorKind::ComplexMismatch, "tensor factors live on different edge sets (" +
                                             std::to_string(a.edge_count()) + " vs " +
                                             std::to_string(b.edge_count()) + " edges)");
    LocalSystem out(a.rank() * b.rank(), a.edge_count());
    for (long e = 0; e < a.edge_count(); ++e)
        out.set_transport(e, QMatrix::kronecker(a.transport(e), b.transport(e)));
    return out;
}

void validate(const SimplicialComplex& k, const LocalSystem& f, const OneCocycle& theta) {
    const long edges = k.cell_count(1);
    if (f.edge_count() != edges)
        fail(ErrorKind::ComplexMismatch, "local system covers " + std::to_string(f.edge_count()) +
                                             " edges, complex has " + std::to_string(edges));
    if (theta.edge_count() != edges)
        fail(ErrorKind::ComplexMismatch, "cocycle covers " + std::to_string(theta.edge_count()) +
                                             " edges, complex has " + std::to_string(edges));

    for (long e = 0; e < edges; ++e) {
        const QMatrix& t = f.transport(e);
        if (t.rows() != f.rank() || t.cols() != f.rank() || t.rank() != f.rank())
            fail(ErrorKind::NotFlat, "transport on edge " + std::to_string(e) + " is not invertible");
    }

    // over each 2-cell with faces f0=[v1v2], f1=[v0v2], f2=[v0v1]:
    // closedness is the alternating sum, flatness the composition identity
    for (long c = 0; c < k.cell_count(2); ++c) {
        const Cell& tri = k.cell(2, c);
        const Rational sum =
            theta.value(tri.faces[0]) - theta.value(tri.faces[1]) + theta.value(tri.faces[2]);
        if (!sum.is_zero())
            fail(ErrorKind::NotClosed,
                 "cocycle is not closed over 2-cell " + std::to_string(c) + " (defect " + sum.str() + ")");
        if (!(f.transport(tri.faces[2]) * f.transport(tri.faces[0]) == f.transport(tri.faces[1])))
            fail(ErrorKind::NotFlat, "transports do not compose over 2-cell " + std::to_string(c));
    }
}

}  // namespace nvlab
