#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "fftc/audit.hpp"
#include "fftc/grring.hpp"

namespace fftc {

// The exterior Hopf superalgebra Lambda(h), dim h = 2N, over Q(i). Basis
// indexed by subsets of {1..2N} as bitmasks (bit j-1 = generator a_j),
// ordered by ascending mask value; parity = |S| mod 2.
struct LambdaAlgebra {
    std::size_t n = 1;     // N
    Scalar beta_sq_inv;    // the value beta^{-2}, one of {1, -1, i, -i}
    std::shared_ptr<const Algebra> underlying;

    std::size_t dim() const { return std::size_t{1} << (2 * n); }
    std::size_t top_mask() const { return dim() - 1; }

    // Delta(e_S) as a list of (left mask, right mask, sign) terms.
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> coproduct(std::size_t mask) const;

    Scalar counit(const Vec& v) const { return v[0]; }
    // lambda(v): coefficient of the top monomial times beta^{-2}.
    Scalar cointegral(const Vec& v) const;

    // The augmentation ideal (all nonempty subsets) is the radical.
    std::vector<Vec> radical() const;
};

LambdaAlgebra lambda_algebra(std::size_t n, const Scalar& beta_sq_inv);

// Object of SF(h, beta): sector 0 objects carry a graded Lambda-module,
// sector 1 objects only a super dimension. Module basis parities are given
// by the module's grading vector; sector-1 bases are ordered even first.
struct SFObject {
    int sector = 0;
    std::size_t even_dim = 0, odd_dim = 0;
    std::optional<AlgModule> module;  // sector 0 only

    std::size_t dim() const { return even_dim + odd_dim; }
};

// The four projective covers and four simples.
SFObject sf_lambda_object(const LambdaAlgebra& l);       // P_1 = Lambda
SFObject sf_pi_lambda_object(const LambdaAlgebra& l);    // P_{Pi1}
SFObject sf_t_object(const LambdaAlgebra& l);            // T (sector 1, 1|0)
SFObject sf_pi_t_object(const LambdaAlgebra& l);         // PiT (sector 1, 0|1)
SFObject sf_one_object(const LambdaAlgebra& l);          // simple 1 (trivial module)
SFObject sf_pi_one_object(const LambdaAlgebra& l);       // simple Pi1

// Sector-graded tensor product: 00 diagonal coproduct action, 01/10 plain
// super tensor, 11 = Lambda (x) X (x) Y with the left regular action.
SFObject sf_tensor(const LambdaAlgebra& l, const SFObject& x, const SFObject& y);

// Modified trace on projectives: sector 1 is t0 times the supertrace;
// sector 0 goes through a free presentation from decompose_local_free and
// applies the cointegral to the Lambda factor.
Scalar sf_modified_trace(const LambdaAlgebra& l, const SFObject& p, const Matrix& f,
                         const Scalar& t0);

// Fusion of projective covers, labels {"1", "Pi1", "T", "PiT"}; computed by
// the decomposition oracle (dense; guaranteed for N <= 2).
using SFFusion = std::map<std::pair<std::string, std::string>, std::map<std::string, std::size_t>>;
SFFusion sf_fusion(const LambdaAlgebra& l);

// Closed-form fusion table, any N (coefficients 2^{2N-1} in the mixed rows).
SFFusion sf_closed_fusion(std::size_t n);

// 4x4 Cartan matrix over {1, Pi1, T, PiT}; the closed 2^{2N-1}-block form,
// cross-checked against the graded composition series of Lambda.
Matrix sf_cartan(std::size_t n);

struct SFModularData {
    std::size_t n = 1;
    std::vector<std::string> irr;       // {1, Pi1, T, PiT}
    std::vector<std::string> j_labels;  // {1, T, PiT}
    Matrix btilde;                      // 4x3
    Matrix stilde;                      // 3x3
    Matrix ctilde;                      // 3x3
    std::map<std::string, Scalar> b;    // T, PiT
    Matrix cartan;                      // 4x4
};

// The printed tables for general N (rational entries).
SFModularData sf_modular_data(std::size_t n);

// Full audit dataset for the printed SF tables: closed-form fusion,
// self-dual simples, and the expected Hopf-link value 4^{N-1} t0 on (T, 1).
ModularDataSet sf_dataset(std::size_t n, const Scalar& t0);

// phi-table: the only nonzero blocks of the phi_U natural transformations
// on projective covers, normalized through t_Q((phi_U)_Q) = b_U t_Q-type
// identities; the Pi1 sign is solved, not hard-coded.
struct SFPhiTable {
    Scalar c_one;     // (phi_1)_Lambda = c_one * R_top
    Scalar c_pi_one;  // (phi_Pi1)_PiLambda = c_pi_one * R_top
    int pi_one_sign = 0;  // solved: c_pi_one = pi_one_sign * c_one
    Scalar b_t, b_pi_t;   // diagonal scalars on T, PiT
};

SFPhiTable sf_phi_table(const LambdaAlgebra& l, const Scalar& t0);

struct SFTraceVsTgReport {
    // per simple label: true when every basis endomorphism of End(G)
    // satisfies the central-form equality with exactly zero residual.
    std::vector<std::pair<std::string, bool>> per_simple;
    int pi_one_sign = 0;
    bool all_zero() const;
};

// Checks tr_{Hom(G,M)}(- o x) = t_G(phi_M o x) / (b_T t0) over a basis of
// End(G), G = Lambda + PiLambda + T + PiT, componentwise per summand pair.
SFTraceVsTgReport sf_check_trace_vs_tg(const LambdaAlgebra& l, const Scalar& t0);

// Linearised Grothendieck ring of SF over Q: basis {[1],[Pi1],[T],[PiT]},
// projective classes [P_1], [P_Pi1], [P_T], [P_PiT].
CommRing sf_grothendieck_ring(std::size_t n);

}  // namespace fftc
