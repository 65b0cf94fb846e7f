#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fftc/algebra.hpp"

namespace fftc {

// Commutative ring by structure constants (linearised Grothendieck ring or
// K0 data). Projective classes are stored as coordinate vectors since a
// projective cover class need not be a basis class.
struct CommRing {
    FieldSpec field = FieldSpec::rational();
    std::vector<std::string> labels;
    std::vector<SparseVec> mult;  // i * dim + j -> coordinates of b_i b_j
    Vec unit;
    std::vector<std::pair<std::string, Vec>> projectives;  // label -> class
    std::vector<std::pair<std::string, std::string>> dual;  // optional involution

    std::size_t dim() const { return labels.size(); }
    Algebra as_algebra() const;
};

// Commutativity, associativity and the unit law; empty report = valid.
ValidationReport validate_ring(const CommRing& r);

// True iff the regular multiplication matrix of x is nilpotent; x^dim = 0
// is a sound and complete test power by Cayley-Hamilton.
bool ring_element_power_nilpotent(const CommRing& r, const Vec& x);

// First declared projective label whose class is non-nilpotent, if any.
std::optional<std::string> condition_p(const CommRing& r);

// Char 0 only: nondegeneracy of the trace-form Gram of the regular
// representation. Throws on positive characteristic.
bool ring_semisimple(const CommRing& r);

}  // namespace fftc
