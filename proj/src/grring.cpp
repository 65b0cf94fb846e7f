#include "fftc/grring.hpp"

namespace fftc {

Algebra CommRing::as_algebra() const {
    Algebra a;
    a.dim = dim();
    a.field = field;
    a.basis_names = labels;
    a.mult = mult;
    a.unit = unit;
    return a;
}

ValidationReport validate_ring(const CommRing& r) {
    Algebra a = r.as_algebra();
    ValidationReport rep = validate_algebra(a);
    if (!rep.valid()) return rep;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j)
            if (a.multiply(a.basis_vec(i), a.basis_vec(j)) !=
                a.multiply(a.basis_vec(j), a.basis_vec(i)))
                rep.violations.push_back("commutativity fails at (" + r.labels[i] + "," +
                                         r.labels[j] + ")");
    for (const auto& [label, cls] : r.projectives)
        if (cls.size() != a.dim)
            rep.violations.push_back("projective class '" + label + "' has wrong length");
    return rep;
}

bool ring_element_power_nilpotent(const CommRing& r, const Vec& x) {
    Algebra a = r.as_algebra();
    Matrix lx = a.left_mult(x);
    Matrix power = Matrix::identity(a.dim, a.field);
    for (std::size_t k = 0; k < a.dim; ++k) power = power * lx;
    return power.is_zero();
}

std::optional<std::string> condition_p(const CommRing& r) {
    for (const auto& [label, cls] : r.projectives)
        if (!ring_element_power_nilpotent(r, cls)) return label;
    return std::nullopt;
}

bool ring_semisimple(const CommRing& r) {
    if (!r.field.is_char_zero())
        throw Error("ring_semisimple requires a characteristic-zero field");
    Algebra a = r.as_algebra();
    Matrix gram(a.dim, a.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            gram.at(i, j) = a.left_mult(a.multiply(a.basis_vec(i), a.basis_vec(j))).trace();
    return rank_of(gram) == a.dim;
}

}  // namespace fftc
