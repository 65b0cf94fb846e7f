#pragma once

#include <cstddef>
#include <vector>

#include "fftc/scalar.hpp"

namespace fftc {

using Vec = std::vector<Scalar>;

// Dense matrix over a single exact field. Row-major storage.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_(FieldSpec::rational()) {}
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

    static Matrix identity(std::size_t n, const FieldSpec& field);
    static Matrix from_rows(const std::vector<Vec>& rows, const FieldSpec& field);
    static Matrix col_vector(const Vec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    Scalar trace() const;

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

// Unique reduced row echelon form via exact Gauss-Jordan elimination.
RrefResult mat_rref(const Matrix& m);

// Basis of the right null space {x : m x = 0}; empty iff full column rank.
std::vector<Vec> kernel_basis(const Matrix& m);

struct SolveResult {
    bool consistent = false;
    Vec solution;  // one exact solution when consistent
};

// One exact solution of a x = b, or the inconsistency marker.
SolveResult solve_linear(const Matrix& a, const Vec& b);

std::size_t rank_of(const Matrix& m);

// Exact inverse; throws DegenerateFormError on singular input.
Matrix mat_inverse(const Matrix& m);

// Rank of the span of a list of vectors (rows of a matrix).
std::size_t span_rank(const std::vector<Vec>& vectors, std::size_t dim, const FieldSpec& field);

// True if v lies in the span of the given vectors.
bool in_span(const std::vector<Vec>& vectors, const Vec& v, const FieldSpec& field);

// True if the two lists span the same subspace of k^dim.
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim,
               const FieldSpec& field);

// Reduced basis (rref rows) of the span of the given vectors.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim, const FieldSpec& field);

// Fully reduced spanning set built one vector at a time. Rows are kept in
// rref form so repeated inserts stay cheap on sparse structured input.
class IncrementalSpan {
public:
    IncrementalSpan(std::size_t dim, const FieldSpec& field) : dim_(dim), field_(field) {}

    // Returns true when v enlarged the span.
    bool insert(Vec v);
    bool contains(const Vec& v) const { return all_zero(reduce(v)); }
    Vec reduce(Vec v) const;  // residual of v modulo the current span

    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    static bool all_zero(const Vec& v);
    std::size_t dim_;
    FieldSpec field_;
    std::vector<Vec> rows_;            // sorted by pivot column
    std::vector<std::size_t> pivots_;  // pivot column per row
};

// Dense-dimension cap from FFTC_MAX_DIM (default 4096).
std::size_t max_dense_dim();
void check_dim_cap(std::size_t n);

}  // namespace fftc
