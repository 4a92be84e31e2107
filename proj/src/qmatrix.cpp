#include "nvlab/qmatrix.hpp"

#include "nvlab/errors.hpp"

namespace nvlab {

QMatrix QMatrix::identity(long n) {
    QMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) fail(ErrorKind::SchemaViolation, "matrix shape mismatch");
    QMatrix r(a.rows(), b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return a.a_ == b.a_;
}

bool QMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? Rational(1) : Rational(0))) return false;
    return true;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

long QMatrix::rank() const {
    QMatrix m = *this;
    long rank = 0;
    long row = 0;
    for (long col = 0; col < cols_ && row < rows_; ++col) {
        long pivot = -1;
        for (long r = row; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (long c = col; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(row, c));
        Rational inv = m.at(row, col).inverse();
        for (long r = row + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col) * inv;
            for (long c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        ++row;
        ++rank;
    }
    return rank;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) fail(ErrorKind::SchemaViolation, "inverse of non-square matrix");
    long n = rows_;
    QMatrix m = *this;
    QMatrix inv = identity(n);
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        for (long r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) fail(ErrorKind::SchemaViolation, "singular matrix has no inverse");
        if (pivot != col)
            for (long c = 0; c < n; ++c) {
                std::swap(m.at(pivot, c), m.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        Rational d = m.at(col, col).inverse();
        for (long c = 0; c < n; ++c) { m.at(col, c) *= d; inv.at(col, c) *= d; }
        for (long r = 0; r < n; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col);
            for (long c = 0; c < n; ++c) {
                m.at(r, c) -= f * m.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

QMatrix QMatrix::kronecker(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (long k = 0; k < b.rows(); ++k)
                for (long l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

}  // namespace nvlab
