#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fftc/algebra.hpp"

namespace fftc {

// Linear functional on an algebra, candidate central form.
struct CentralForm {
    std::shared_ptr<const Algebra> algebra;
    Vec coords;  // value on each basis element

    Scalar eval(const Vec& x) const;
};

struct CentralFormCheck {
    bool central = false;
    bool nondegenerate = false;
    Matrix gram;  // G_{ij} = eps(b_i b_j)
};

// Centrality is checked on all basis pairs; nondegeneracy via the Gram rank.
CentralFormCheck check_central_form(const CentralForm& f);

// gamma = sum gamma'_k (x) gamma''_k with the resolution property
// a = sum eps(a gamma') gamma'' = sum gamma' eps(gamma'' a).
struct Copairing {
    std::vector<std::pair<Vec, Vec>> tensor;
};

// From the inverse Gram matrix; both resolution identities and symmetry of
// the tensor are verified before returning. Throws DegenerateFormError.
Copairing copairing(const CentralForm& f);

// tau(a) = sum gamma' a gamma''; the output is verified central.
Vec tau(const CentralForm& f, const Vec& a);

// Basis of the Higman ideal im(tau) = span{tau(b_i)}.
std::vector<Vec> higman_basis(const Algebra& a, const CentralForm& f);

// Basis of the Reynolds ideal {z in Z(A) : z r = 0 for all r in rad}.
std::vector<Vec> reynolds_basis(const Algebra& a, const std::vector<Vec>& radical);

// Character chi_M(b_i) = trace of the action matrix.
CentralForm character_form(const AlgModule& m);

struct IdealReport {
    std::size_t dim_center = 0, dim_rey = 0, dim_hig = 0;
    std::size_t dim_r = 0, dim_i = 0;  // character spans R(A), I(A)
    std::size_t rank_cartan = 0;
    bool chain = false;              // Hig inside Rey inside Z
    bool zeta_hig_equals_i = false;  // zeta(Hig) = I(A)
    bool zeta_rey_equals_r = false;  // zeta(Rey) = R(A)
    bool hig_rank_matches_cartan = false;
    bool i_equals_r = false;
    bool semisimple = false;
};

// Ideal-chain bookkeeping: chain dims, character spans under
// zeta(z) = eps(z . -), and the Cartan rank identity.
IdealReport ideal_report(const Algebra& a, const CentralForm& f,
                         const std::vector<AlgModule>& simples,
                         const std::vector<AlgModule>& projectives);

// Trace functionals on endomorphism algebras of indecomposable projectives,
// each stored as coordinates against a supplied hom basis.
struct TraceAssignment {
    struct Entry {
        std::vector<Matrix> hom_basis;  // basis of End(P_label)
        Vec functional;                 // value on each basis element
    };
    std::map<std::string, Entry> traces;

    Scalar eval(const std::string& label, const Matrix& endo) const;
};

// Direct summand data for a projective presented as a sum of labeled
// indecomposables: embedding j and projection p with p o j = id.
struct ProjSummand {
    std::string label;
    Matrix embed;    // dim P x dim P_label
    Matrix project;  // dim P_label x dim P
};

// t_P(f) = sum over summands of t_{P_U}(p o f o j); independent of the
// chosen decomposition.
Scalar extend_trace(const TraceAssignment& t, const std::vector<ProjSummand>& parts,
                    const Matrix& f);

}  // namespace fftc
