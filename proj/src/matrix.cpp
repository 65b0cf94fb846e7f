#include "fftc/matrix.hpp"

#include <cstdlib>

namespace fftc {

std::size_t max_dense_dim() {
    static std::size_t cap = [] {
        if (const char* env = std::getenv("FFTC_MAX_DIM")) {
            long v = std::atol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(4096);
    }();
    return cap;
}

void check_dim_cap(std::size_t n) {
    if (n > max_dense_dim())
        throw ResourceError("dense dimension " + std::to_string(n) + " exceeds FFTC_MAX_DIM=" +
                            std::to_string(max_dense_dim()));
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), a_(rows * cols, Scalar::zero(field)) {
    check_dim_cap(rows);
    check_dim_cap(cols);
}

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, const FieldSpec& field) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("ragged row list");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::col_vector(const Vec& v) {
    if (v.empty()) throw DimensionError("empty column vector");
    Matrix m(v.size(), 1, v.front().field());
    for (std::size_t r = 0; r < v.size(); ++r) m.at(r, 0) = v[r];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    if (field_ != o.field_) throw FieldMismatchError("matrix product field mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-Scalar::one(field_)); }

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionError("matrix apply shape mismatch");
    Vec r(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw DimensionError("trace of non-square matrix");
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_, Scalar::zero(field_));
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

RrefResult mat_rref(const Matrix& m) {
    RrefResult res;
    res.rref = m;
    Matrix& a = res.rref;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < a.rows() && a.at(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
        Scalar inv = a.at(lead, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a.at(lead, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, c).is_zero()) continue;
            Scalar f = a.at(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) -= f * a.at(lead, j);
        }
        res.pivots.push_back(c);
        ++lead;
    }
    res.rank = res.pivots.size();
    return res;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    RrefResult r = mat_rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), Scalar::zero(m.field()));
        v[free] = Scalar::one(m.field());
        for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
            v[r.pivots[pr]] = -r.rref.at(pr, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve_linear(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw DimensionError("solve_linear: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult r = mat_rref(aug);
    SolveResult out;
    for (std::size_t c : r.pivots)
        if (c == a.cols()) return out;  // pivot in rhs column: inconsistent
    out.consistent = true;
    out.solution.assign(a.cols(), Scalar::zero(a.field()));
    for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
        out.solution[r.pivots[pr]] = r.rref.at(pr, a.cols());
    return out;
}

std::size_t rank_of(const Matrix& m) { return mat_rref(m).rank; }

Matrix mat_inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    RrefResult r = mat_rref(aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1)
        throw DegenerateFormError("matrix is singular");
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.rref.at(i, n + j);
    return inv;
}

std::size_t span_rank(const std::vector<Vec>& vectors, std::size_t dim, const FieldSpec& field) {
    if (vectors.empty()) return 0;
    Matrix m(vectors.size(), dim, field);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = vectors[r][c];
    return rank_of(m);
}

bool in_span(const std::vector<Vec>& vectors, const Vec& v, const FieldSpec& field) {
    std::vector<Vec> with = vectors;
    with.push_back(v);
    return span_rank(with, v.size(), field) == span_rank(vectors, v.size(), field);
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim,
               const FieldSpec& field) {
    std::vector<Vec> all = a;
    all.insert(all.end(), b.begin(), b.end());
    std::size_t ra = span_rank(a, dim, field);
    std::size_t rb = span_rank(b, dim, field);
    return ra == rb && span_rank(all, dim, field) == ra;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim, const FieldSpec& field) {
    if (vectors.empty()) return {};
    Matrix m(vectors.size(), dim, field);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = vectors[r][c];
    RrefResult rr = mat_rref(m);
    std::vector<Vec> basis;
    for (std::size_t r = 0; r < rr.rank; ++r) basis.push_back(rr.rref.row(r));
    return basis;
}

bool IncrementalSpan::all_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec IncrementalSpan::reduce(Vec v) const {
    if (v.size() != dim_) throw DimensionError("IncrementalSpan: vector length mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;  // pivot entries are normalized to 1
        for (std::size_t j = pivots_[r]; j < dim_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool IncrementalSpan::insert(Vec v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    Scalar inv = v[p].inverse();
    for (std::size_t j = p; j < dim_; ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    // Back-substitute into existing rows to stay fully reduced.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = rows_[r][p];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (std::size_t j = p; j < dim_; ++j)
            if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
}

}  // namespace fftc
