#pragma once

#include <optional>
#include <vector>

#include "mfq/rational.hpp"

namespace mfq {

using QVector = std::vector<Rational>;

/// Dense rational matrix with exact elimination-based rank / kernel / solve.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, QVector(cols, 0)) {}

    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<QVector>& rows);
    static QMatrix from_columns(const std::vector<QVector>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[i][j]; }
    const Rational& at(int i, int j) const { return a_[i][j]; }
    const QVector& row(int i) const { return a_[i]; }

    QMatrix transposed() const;
    QMatrix operator*(const QMatrix& rhs) const;
    QVector apply(const QVector& v) const;
    bool operator==(const QMatrix& rhs) const = default;

    int rank() const;
    /// Basis of the right kernel; rank + kernel size == cols.
    std::vector<QVector> kernel_basis() const;
    /// Solves A x = b; empty if inconsistent.
    std::optional<QVector> solve(const QVector& b) const;
    Rational trace() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<QVector> a_;
};

struct RankKernel {
    int rank;
    std::vector<QVector> kernel;
};

RankKernel rank_kernel(const QMatrix& m);

/// Rank of the row span of a list of coefficient vectors.
int span_rank(const std::vector<QVector>& vectors);

}  // namespace mfq
