#ifndef NVLAB_QMATRIX_HPP
#define NVLAB_QMATRIX_HPP

#include "nvlab/rational.hpp"

#include <vector>

namespace nvlab {

/* Dense matrix over the rationals. Row-major. */
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Rational& at(long r, long c) { return a_[r * cols_ + c]; }
    const Rational& at(long r, long c) const { return a_[r * cols_ + c]; }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b);

    bool is_identity() const;
    bool is_zero() const;

    long rank() const;          // Gaussian elimination over Q
    QMatrix inverse() const;    // requires square nonsingular

    /* Kronecker product; fiberwise tensor of linear maps. */
    static QMatrix kronecker(const QMatrix& a, const QMatrix& b);

  private:
    long rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace nvlab

#endif
