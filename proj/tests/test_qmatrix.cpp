#include <doctest.h>

#include <random>

#include "mfq/qmatrix.hpp"

using namespace mfq;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> dist(-9, 9);
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("identity and multiplication") {
    QMatrix id = QMatrix::identity(3);
    std::mt19937_64 rng(1);
    QMatrix a = random_matrix(rng, 3, 3);
    CHECK(a * id == a);
    CHECK(id * a == a);
}

TEST_CASE("rank plus nullity equals columns") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        QMatrix m = random_matrix(rng, 4, 6);
        auto [rank, kernel] = rank_kernel(m);
        CHECK(rank + static_cast<int>(kernel.size()) == 6);
        for (const auto& v : kernel) {
            QVector image = m.apply(v);
            for (const auto& c : image) CHECK(is_zero(c));
        }
    }
}

TEST_CASE("solve returns an exact solution") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        QMatrix m = random_matrix(rng, 4, 4);
        QVector x0(4);
        std::uniform_int_distribution<int> dist(-9, 9);
        for (auto& c : x0) c = dist(rng);
        QVector b = m.apply(x0);
        auto x = m.solve(b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("solve reports inconsistency") {
    QMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 0) = 2;  // second row is twice the first; column 2 is zero
    m.at(0, 1) = 3;
    m.at(1, 1) = 6;
    CHECK_FALSE(m.solve({1, 3}).has_value());
    CHECK(m.rank() == 1);
}

TEST_CASE("span rank of duplicated rows") {
    std::mt19937_64 rng(4);
    QMatrix m = random_matrix(rng, 3, 5);
    std::vector<QVector> rows{m.row(0), m.row(1), m.row(0), m.row(2)};
    CHECK(span_rank(rows) == m.rank());
}

TEST_CASE("rank of a rational rank-one update") {
    // outer product has rank 1 regardless of entries
    QMatrix m(3, 3);
    QVector u{rat(1, 2), rat(-3), rat(5, 7)};
    QVector v{rat(2), rat(0), rat(-1, 3)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = u[i] * v[j];
    CHECK(m.rank() == 1);
}
