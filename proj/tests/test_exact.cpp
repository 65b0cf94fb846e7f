#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fftc/matrix.hpp"

using namespace fftc;

namespace {

Scalar q(long n, long d = 1) { return Scalar::from_mpq(mpq_class(n, d), FieldSpec::rational()); }
Scalar gi(long re_n, long re_d, long im_n, long im_d) {
    return Scalar::gaussian(mpq_class(re_n, re_d), mpq_class(im_n, im_d));
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols, FieldSpec::rational());
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = q(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rational scalar arithmetic") {
    CHECK((q(2, 3) + q(1, 6)).str() == "5/6");
    CHECK((q(2, 3) * q(-9, 4)).str() == "-3/2");
    CHECK(q(7, 3).inverse().str() == "3/7");
    CHECK((q(5, 8) - q(5, 8)).is_zero());
    CHECK_THROWS_AS(q(0).inverse(), Error);
}

TEST_CASE("gaussian rational arithmetic") {
    Scalar a = gi(3, 2, 5, 3);  // 3/2 + 5/3 i
    Scalar b = gi(-1, 1, 2, 1);
    // (3/2 + 5/3 i)(-1 + 2i) = -3/2 - 10/3 + (3 - 5/3)i = -29/6 + 4/3 i
    CHECK((a * b).str() == "-29/6+4/3*i");
    // |a|^2 = 9/4 + 25/9 = 181/36, so a^{-1} = conj(a) * 36/181
    CHECK((a * a.inverse()).is_one());
    CHECK(a.conj().str() == "3/2-5/3*i");
    Scalar i = Scalar::i(FieldSpec::gaussian());
    CHECK((i * i).str() == "-1");
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f7 = FieldSpec::prime(7);
    Scalar x = Scalar::from_int(5, f7);
    CHECK((x * x).str() == "4");
    CHECK(x.inverse().str() == "3");
    CHECK((x + Scalar::from_int(2, f7)).is_zero());
    CHECK_THROWS_AS(FieldSpec::prime(6), Error);
}

TEST_CASE("scalar parsing round trip") {
    FieldSpec qf = FieldSpec::rational();
    FieldSpec gf = FieldSpec::gaussian();
    CHECK(parse_scalar("-3/4", qf).str() == "-3/4");
    CHECK(parse_scalar(" 5 ", qf).str() == "5");
    CHECK(parse_scalar("1/2+3/5*i", gf).str() == "1/2+3/5*i");
    CHECK(parse_scalar("-i", gf).str() == "-1*i");
    CHECK(parse_scalar("2*i", gf) == gi(0, 1, 2, 1));
    CHECK(parse_scalar("-7", FieldSpec::prime(5)).str() == "3");
    CHECK_THROWS_AS(parse_scalar("1/0", qf), ParseError);
    CHECK_THROWS_AS(parse_scalar("2+3*i", qf), ParseError);
    CHECK_THROWS_AS(parse_scalar("zebra", qf), ParseError);
    for (const char* s : {"0", "-2", "13/9", "1+1*i", "-1/3*i"})
        CHECK(parse_scalar(parse_scalar(s, gf).str(), gf) == parse_scalar(s, gf));
}

TEST_CASE("field mismatch is rejected") {
    CHECK_THROWS_AS(q(1) + Scalar::from_int(1, FieldSpec::prime(3)), FieldMismatchError);
    CHECK_THROWS_AS(Scalar::i(FieldSpec::rational()), FieldMismatchError);
}

TEST_CASE("rref of a known matrix") {
    // [[1,2,3],[2,4,6],[1,1,1]] has rank 2, pivots in columns 0 and 1.
    Matrix m = Matrix::from_rows({{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(1), q(1), q(1)}},
                                 FieldSpec::rational());
    RrefResult r = mat_rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.rref.at(0, 2) == q(-1));
    CHECK(r.rref.at(1, 2) == q(2));
}

TEST_CASE("kernel vectors are annihilated and solve is exact") {
    Matrix m = Matrix::from_rows({{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(1), q(1), q(1)}},
                                 FieldSpec::rational());
    std::vector<Vec> ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    for (const Vec& v : ker) {
        Vec image = m.apply(v);
        for (const Scalar& x : image) CHECK(x.is_zero());
    }
    SolveResult s = solve_linear(m, {q(6), q(12), q(3)});
    REQUIRE(s.consistent);
    Vec image = m.apply(s.solution);
    CHECK(image[0] == q(6));
    CHECK(image[1] == q(12));
    CHECK(image[2] == q(3));
    CHECK_FALSE(solve_linear(m, {q(1), q(0), q(0)}).consistent);
}

TEST_CASE("rank-nullity and row space preservation on random matrices") {
    std::mt19937_64 rng(20260823);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = random_matrix(rng, 5, 7);
        RrefResult r = mat_rref(m);
        CHECK(r.rank + kernel_basis(m).size() == m.cols());
        std::vector<Vec> orig, reduced;
        for (std::size_t i = 0; i < m.rows(); ++i) orig.push_back(m.row(i));
        for (std::size_t i = 0; i < r.rank; ++i) reduced.push_back(r.rref.row(i));
        CHECK(same_span(orig, reduced, m.cols(), m.field()));
    }
}

TEST_CASE("incremental span matches batch rank") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_matrix(rng, 8, 6);
        IncrementalSpan sp(6, m.field());
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            rows.push_back(m.row(i));
            sp.insert(m.row(i));
        }
        CHECK(sp.rank() == span_rank(rows, 6, m.field()));
        for (const Vec& r : rows) CHECK(sp.contains(r));
    }
}

TEST_CASE("dimension cap is enforced") {
    CHECK_THROWS_AS(Matrix(max_dense_dim() + 1, 1, FieldSpec::rational()), ResourceError);
}
