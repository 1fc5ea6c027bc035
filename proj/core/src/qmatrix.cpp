#include "mfq/qmatrix.hpp"

#include <cassert>

namespace mfq {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
    QMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        assert(static_cast<int>(rows[i].size()) == m.cols());
        m.a_[i] = rows[i];
    }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
    return from_rows(cols).transposed();
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.a_[j][i] = a_[i][j];
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    QMatrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (is_zero(a_[i][k])) continue;
            for (int j = 0; j < rhs.cols_; ++j) p.a_[i][j] += a_[i][k] * rhs.a_[k][j];
        }
    return p;
}

QVector QMatrix::apply(const QVector& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    QVector out(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!is_zero(a_[i][j])) out[i] += a_[i][j] * v[j];
    return out;
}

Rational QMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += a_[i][i];
    return t;
}

namespace {

// Row-reduce in place; returns pivot column per reduced row.
std::vector<int> rref(std::vector<QVector>& m, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (!is_zero(m[i][c])) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int QMatrix::rank() const {
    auto work = a_;
    return static_cast<int>(rref(work, cols_).size());
}

std::vector<QVector> QMatrix::kernel_basis() const {
    auto work = a_;
    std::vector<int> pivots = rref(work, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols_, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> QMatrix::solve(const QVector& b) const {
    assert(static_cast<int>(b.size()) == rows_);
    std::vector<QVector> aug = a_;
    for (int i = 0; i < rows_; ++i) aug[i].push_back(b[i]);
    std::vector<int> pivots = rref(aug, cols_ + 1);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    QVector x(cols_, 0);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols_];
    return x;
}

RankKernel rank_kernel(const QMatrix& m) {
    return RankKernel{m.rank(), m.kernel_basis()};
}

int span_rank(const std::vector<QVector>& vectors) {
    if (vectors.empty()) return 0;
    return QMatrix::from_rows(vectors).rank();
}

}  // namespace mfq
