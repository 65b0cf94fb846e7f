#include "fftc/superlin.hpp"

namespace fftc {

SuperMap SuperMap::identity(const SuperSpace& x) {
    return {x, x, Matrix::identity(x.dim(), x.field), Parity::Even};
}

SuperMap SuperMap::zero(const SuperSpace& src, const SuperSpace& tgt, Parity par) {
    return {src, tgt, Matrix(tgt.dim(), src.dim(), src.field), par};
}

bool SuperMap::parity_consistent() const {
    for (std::size_t r = 0; r < matrix.rows(); ++r)
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            if (matrix.at(r, c).is_zero()) continue;
            if (target.basis_parity(r) != source.basis_parity(c) + parity) return false;
        }
    return true;
}

SuperMap SuperMap::compose(const SuperMap& inner) const {
    if (!(inner.target == source)) throw DimensionError("supermap composition mismatch");
    return {inner.source, target, matrix * inner.matrix, parity + inner.parity};
}

SuperMap SuperMap::operator+(const SuperMap& o) const {
    if (!(source == o.source) || !(target == o.target) || parity != o.parity)
        throw DimensionError("supermap sum mismatch");
    return {source, target, matrix + o.matrix, parity};
}

SuperMap SuperMap::scaled(const Scalar& s) const { return {source, target, matrix.scaled(s), parity}; }

Scalar supertrace(const SuperMap& f) {
    if (!f.is_endomorphism()) throw DimensionError("supertrace of non-endomorphism");
    if (f.parity != Parity::Even) throw Error("supertrace of odd map");
    Scalar t = Scalar::zero(f.source.field);
    for (std::size_t i = 0; i < f.source.dim(); ++i) {
        if (f.source.basis_parity(i) == Parity::Even)
            t += f.matrix.at(i, i);
        else
            t -= f.matrix.at(i, i);
    }
    return t;
}

TensorBasis::TensorBasis(const SuperSpace& x, const SuperSpace& y) : ydim_(y.dim()) {
    if (x.field != y.field) throw FieldMismatchError("tensor basis field mismatch");
    space.field = x.field;
    space.even_dim = x.even_dim * y.even_dim + x.odd_dim * y.odd_dim;
    space.odd_dim = x.even_dim * y.odd_dim + x.odd_dim * y.even_dim;
    check_dim_cap(space.dim());
    index.assign(x.dim() * y.dim(), 0);
    for (int block = 0; block < 2; ++block) {
        Parity want = block == 0 ? Parity::Even : Parity::Odd;
        for (std::size_t i = 0; i < x.dim(); ++i)
            for (std::size_t j = 0; j < y.dim(); ++j) {
                if (x.basis_parity(i) + y.basis_parity(j) != want) continue;
                index[i * ydim_ + j] = pairs.size();
                pairs.emplace_back(i, j);
            }
    }
}

std::size_t TensorBasis::pos(std::size_t i, std::size_t j) const { return index[i * ydim_ + j]; }

SuperMap tensor_map(const SuperMap& f, const SuperMap& g) {
    if (f.source.field != g.source.field) throw FieldMismatchError("tensor_map field mismatch");
    TensorBasis src(f.source, g.source);
    TensorBasis tgt(f.target, g.target);
    SuperMap out = SuperMap::zero(src.space, tgt.space, f.parity + g.parity);
    const Scalar one = Scalar::one(f.source.field);
    for (std::size_t p = 0; p < src.pairs.size(); ++p) {
        auto [i, j] = src.pairs[p];
        bool koszul = g.parity == Parity::Odd && f.source.basis_parity(i) == Parity::Odd;
        for (std::size_t r = 0; r < f.target.dim(); ++r) {
            const Scalar& fv = f.matrix.at(r, i);
            if (fv.is_zero()) continue;
            for (std::size_t s = 0; s < g.target.dim(); ++s) {
                const Scalar& gv = g.matrix.at(s, j);
                if (gv.is_zero()) continue;
                Scalar val = fv * gv;
                if (koszul) val = -val;
                out.matrix.at(tgt.pos(r, s), p) += val;
            }
        }
        (void)one;
    }
    return out;
}

SuperMap flip(const SuperSpace& x, const SuperSpace& y) {
    TensorBasis src(x, y);
    TensorBasis tgt(y, x);
    SuperMap out = SuperMap::zero(src.space, tgt.space, Parity::Even);
    for (std::size_t p = 0; p < src.pairs.size(); ++p) {
        auto [i, j] = src.pairs[p];
        bool neg = x.basis_parity(i) == Parity::Odd && y.basis_parity(j) == Parity::Odd;
        Scalar v = Scalar::one(x.field);
        out.matrix.at(tgt.pos(j, i), p) = neg ? -v : v;
    }
    return out;
}

}  // namespace fftc
