#pragma once

#include <cstdint>
#include <vector>

#include "fftc/matrix.hpp"

namespace fftc {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

// Finite-dimensional super vector space. Basis convention: even vectors
// first (indices 0..even_dim-1), then odd.
struct SuperSpace {
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
    FieldSpec field = FieldSpec::rational();

    std::size_t dim() const { return even_dim + odd_dim; }
    Parity basis_parity(std::size_t i) const { return i < even_dim ? Parity::Even : Parity::Odd; }
    long sdim() const { return static_cast<long>(even_dim) - static_cast<long>(odd_dim); }

    bool operator==(const SuperSpace& o) const {
        return even_dim == o.even_dim && odd_dim == o.odd_dim && field == o.field;
    }
};

// Homogeneous linear map between super spaces, stored in the block basis.
struct SuperMap {
    SuperSpace source, target;
    Matrix matrix;  // target.dim() x source.dim()
    Parity parity = Parity::Even;

    static SuperMap identity(const SuperSpace& x);
    static SuperMap zero(const SuperSpace& src, const SuperSpace& tgt, Parity par);

    bool is_endomorphism() const { return source == target; }
    // Verifies the zero-block pattern demanded by the parity.
    bool parity_consistent() const;

    SuperMap compose(const SuperMap& inner) const;  // (*this) o inner
    SuperMap operator+(const SuperMap& o) const;
    SuperMap scaled(const Scalar& s) const;
};

// Trace of the even-even block minus trace of the odd-odd block.
Scalar supertrace(const SuperMap& f);

// Canonical ordered basis of x (tensor) y: even pairs first, then odd pairs,
// lexicographic in (index in x, index in y) within each block.
struct TensorBasis {
    SuperSpace space;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // position -> (i, j)
    std::vector<std::size_t> index;                          // i * dim(y) + j -> position

    TensorBasis(const SuperSpace& x, const SuperSpace& y);
    std::size_t pos(std::size_t i, std::size_t j) const;

private:
    std::size_t ydim_;
};

// Graded tensor product of maps with the Koszul sign:
//   (f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w).
SuperMap tensor_map(const SuperMap& f, const SuperMap& g);

// Symmetry isomorphism v (x) w -> (-1)^{|v||w|} w (x) v.
SuperMap flip(const SuperSpace& x, const SuperSpace& y);

}  // namespace fftc
