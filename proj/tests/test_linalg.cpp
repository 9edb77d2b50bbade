#include "doctest.h"
#include "support.hpp"

#include <stdexcept>

using namespace hgtest;

TEST_SUITE("linalg") {

TEST_CASE("rationals parse to canonical form and print back") {
  CHECK(to_string(parse_rat("4/6")) == "2/3");
  CHECK(to_string(parse_rat(" -3 ")) == "-3");
  CHECK(to_string(parse_rat("0/5")) == "0");
  CHECK(to_string(parse_rat("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rat("6/-4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("rref of a known matrix") {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  Rref r = rref(m);
  CHECK(r.rank() == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  Matrix expect{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}};
  CHECK(r.form == expect);
}

TEST_CASE("rank agrees with plain elimination on random matrices") {
  Gen g(11);
  for (int t = 0; t < 200; ++t) {
    Matrix m = g.matrix(g.uniform(0, 6), g.uniform(0, 6));
    // Low-rank products exercise dependent rows.
    if (t % 3 == 0 && m.rows() > 0 && m.cols() > 0) m = m * g.matrix(m.cols(), m.cols()).transpose().transpose();
    CHECK(rank(m) == oracle_rank(m));
  }
}

TEST_CASE("kernel basis is annihilated and has the complementary dimension") {
  Gen g(12);
  for (int t = 0; t < 150; ++t) {
    std::size_t c = g.uniform(1, 6);
    Matrix m = g.matrix(g.uniform(1, 5), 2) * g.matrix(2, c);
    Matrix k = kernel_basis(m);
    CHECK(k.cols() == c - oracle_rank(m));
    CHECK((m * k).is_zero());
    CHECK(oracle_rank(k) == k.cols());
  }
}

TEST_CASE("solve finds a solution exactly when the system is consistent") {
  Gen g(13);
  for (int t = 0; t < 150; ++t) {
    Matrix m = g.matrix(g.uniform(1, 5), g.uniform(1, 5));
    Matrix b = g.coin() ? m * g.matrix(m.cols(), 1) : g.matrix(m.rows(), 1);
    Solution s = solve(m, b);
    bool consistent = oracle_rank(m) == oracle_rank(hstack(m, b));
    REQUIRE(s.x.has_value() == consistent);
    if (consistent) CHECK(m * *s.x == b);
    CHECK(span_membership(b, m) == consistent);
  }
  CHECK_THROWS_AS(solve(Matrix(2, 2), Matrix(3, 1)), std::invalid_argument);
}

TEST_CASE("one-sided inverses and complements") {
  Gen g(14);
  for (int t = 0; t < 100; ++t) {
    Matrix m = g.matrix(g.uniform(2, 6), g.uniform(1, 4));
    Matrix ind = independent_columns(m);
    CHECK(ind.cols() == oracle_rank(m));
    if (ind.cols() > 0) CHECK(left_inverse(ind) * ind == Matrix::identity(ind.cols()));
    Matrix comp = complement_columns(ind, m.rows());
    CHECK(oracle_rank(hstack(ind, comp)) == m.rows());
    CHECK(ind.cols() + comp.cols() == m.rows());
    Matrix q = cokernel_projection(m);
    CHECK(q.rows() == m.rows() - oracle_rank(m));
    if (q.rows() > 0) CHECK((q * m).is_zero());
    Matrix tr = ind.transpose();
    if (tr.rows() > 0) CHECK(tr * right_inverse(tr) == Matrix::identity(tr.rows()));
  }
}

TEST_CASE("matrix block helpers round trip") {
  Matrix a{{1, 2}, {3, 4}};
  Matrix b{{5}, {6}};
  Matrix h = hstack(a, b);
  CHECK(h.cols_range(0, 2) == a);
  CHECK(h.col(2) == b);
  Matrix v = vstack(a, a.scaled(Rat(2)));
  CHECK(v.rows_range(2, 2) == a.scaled(Rat(2)));
  Matrix d = block_diag(a, b);
  CHECK(d.block(2, 2, 2, 1) == b);
  CHECK(d.block(0, 2, 2, 1).is_zero());
  CHECK(Matrix::column({Rat(1), Rat(2)}).to_vector() == std::vector<Rat>{Rat(1), Rat(2)});
}

}
