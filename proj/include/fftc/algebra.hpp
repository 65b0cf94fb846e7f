#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fftc/superlin.hpp"

namespace fftc {

// Sparse coordinate vector: (basis index, coefficient) pairs, zero omitted.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

// Finite-dimensional unital associative algebra by structure constants,
// with an optional Z/2-grading on the basis.
struct Algebra {
    std::size_t dim = 0;
    FieldSpec field = FieldSpec::rational();
    std::vector<std::string> basis_names;
    std::vector<SparseVec> mult;  // index i * dim + j -> coordinates of b_i b_j
    Vec unit;
    std::optional<std::vector<Parity>> grading;

    const SparseVec& product_of_basis(std::size_t i, std::size_t j) const {
        return mult[i * dim + j];
    }
    Vec basis_vec(std::size_t i) const;
    Vec multiply(const Vec& x, const Vec& y) const;
    Matrix left_mult(const Vec& x) const;   // L_x
    Matrix right_mult(const Vec& x) const;  // R_x
    bool is_graded() const { return grading.has_value(); }
    Parity parity_of(const Vec& x) const;  // throws on inhomogeneous x

    // Opposite algebra (mult reversed); bridges right modules to left actions.
    Algebra opposite() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

// Lists every violated associativity / unit identity; empty report = valid.
ValidationReport validate_algebra(const Algebra& a);

// Module given by a left action, one matrix per algebra basis element.
struct AlgModule {
    std::shared_ptr<const Algebra> algebra;
    std::size_t dim = 0;
    std::vector<Matrix> action;
    std::optional<std::vector<Parity>> grading;

    Matrix act(const Vec& a) const;  // action of a general element
    const Matrix& act_basis(std::size_t i) const { return action[i]; }
    SuperSpace super_space() const;  // graded modules only; counts parities
    bool is_graded() const { return grading.has_value(); }
};

ValidationReport validate_module(const AlgModule& m);

// Left regular module of a.
AlgModule regular_module(const std::shared_ptr<const Algebra>& a);

// Basis of the center {z : z b = b z for all basis b}.
std::vector<Vec> center(const Algebra& a);

// Jacobson radical over a characteristic-zero field (Dickson criterion:
// kernel of y -> tr(L_x L_y)); verified to be a nilpotent two-sided ideal.
std::vector<Vec> radical_char0(const Algebra& a);

struct IdempotentSet {
    std::vector<Vec> elements;        // complete orthogonal primitive system
    std::vector<std::string> labels;  // simple-module label per element
    std::vector<std::size_t> representatives;  // one element index per label
};

// Complete orthogonal set of primitive idempotents of a split char-0
// algebra: semisimple quotient, central splitting by minimal-polynomial
// roots, rank-one extraction per block, Newton lifting e <- 3e^2 - 2e^3,
// sequential orthogonalisation. Throws NonSplitError when a block's
// minimal polynomial does not split over the ground field.
IdempotentSet primitive_idempotents(const Algebra& a);

// Cartan matrix C_{UV} = dim_k e_U A e_V over the label representatives.
// Returned over the rational field regardless of a.field (entries are
// nonnegative integers).
Matrix cartan_matrix(const Algebra& a, const IdempotentSet& idems);

// Basis of intertwiners f : m -> n (even maps when both modules graded).
std::vector<Matrix> hom_basis(const AlgModule& m, const AlgModule& n);

struct DecomposeFreeResult {
    std::size_t even_gens = 0;  // multiplicity of the algebra itself
    std::size_t odd_gens = 0;   // multiplicity of its parity shift
    std::vector<Vec> generators;         // lifted generator vectors in m
    std::vector<Parity> generator_parity;
};

// Decomposes a module over a graded local algebra as free^a + shifted
// free^b by lifting a basis of m / rad m and certifying freeness.
// Throws NotProjectiveError when the dimension or generation check fails.
DecomposeFreeResult decompose_local_free(const AlgModule& m, const std::vector<Vec>& radical);

struct ModuleSummand {
    std::string label;
    std::size_t dim = 0;
    Matrix basis;  // m.dim x dim, columns are a basis of the summand
};

struct DecompositionResult {
    std::vector<std::pair<std::string, std::size_t>> multiplicities;
    std::vector<ModuleSummand> summands;
};

// Splits m by the primitive idempotents of End(m) and matches each
// indecomposable summand against the supplied candidates via the
// mutual-hom criterion (some composite not in rad End).
DecompositionResult decompose_module(const AlgModule& m,
                                     const std::vector<std::pair<std::string, AlgModule>>& candidates);

// Submodule of m spanned by the columns of basis (must be invariant).
AlgModule submodule(const AlgModule& m, const Matrix& basis);

// --- polynomial helpers shared by idempotent search and tests ---

// Monic minimal polynomial coefficients c_0..c_{d-1} (x^d + sum c_k x^k = 0)
// of x relative to the given unit (x^0 := unit, so corner subalgebras eAe
// can pass their own identity e).
std::vector<Scalar> minimal_polynomial(const Algebra& a, const Vec& unit, const Vec& x);

// All roots in the ground field of a monic polynomial with the given lower
// coefficients. Complete for split polynomials with roots inside the search
// bound; throws ResourceError when the bound is exceeded.
std::vector<Scalar> roots_in_field(const std::vector<Scalar>& monic_lower_coeffs, const FieldSpec& field);

}  // namespace fftc
