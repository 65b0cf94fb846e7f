#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fftc/algebra.hpp"

namespace fftc {

// The tuple (Irr, duality, Cartan, J, Btilde, Stilde, Ctilde, b, fusion, t0)
// audited against the Verlinde-like identities. The first label in irr is
// the unit object. Fusion values are scalars: published tables carry
// nonnegative integers, solver-generated synthetic tables may be rational
// (integrality is reported, not enforced).
struct ModularDataSet {
    FieldSpec field = FieldSpec::rational();
    std::vector<std::string> irr;
    std::map<std::string, std::string> dual;
    Matrix cartan;  // irr x irr
    std::vector<std::string> j_labels;  // subset of irr
    std::vector<std::string> irrproj;   // subset of j_labels
    Matrix btilde;  // irr x J
    Matrix stilde;  // J x J
    Matrix ctilde;  // J x J
    std::map<std::string, Scalar> b;  // over irrproj
    std::map<std::pair<std::string, std::string>, std::map<std::string, Scalar>> fusion;
    Scalar t0;
    // Optional expectations for Hopf-link values: (A in J, X in irr) -> the
    // expected multiple of t0. Checked when present.
    std::map<std::pair<std::string, std::string>, Scalar> expected_hopf;

    std::size_t irr_index(const std::string& label) const;
    std::size_t j_index(const std::string& label) const;
    Scalar fusion_coeff(const std::string& u, const std::string& v, const std::string& w) const;
    ValidationReport validate() const;
};

struct AuditWitness {
    std::string key;
    std::string lhs, rhs;
};

struct AuditSection {
    std::string name;
    bool pass = false;
    std::vector<AuditWitness> witnesses;            // failures, exact values
    std::vector<std::pair<std::string, std::string>> info;  // extra key/value rows
};

struct RescaleResult {
    bool solvable = false;
    Scalar multiplier;           // single factor applied to every b value
    std::string obstruction;     // set when no consistent multiplier exists
    std::vector<std::string> fixed_checks;   // checks that pass after rescaling
    std::vector<std::string> broken_checks;  // checks that fail after rescaling
};

struct AuditReport {
    std::vector<AuditSection> sections;
    std::optional<RescaleResult> rescale;  // diagnostic, never applied to data
    bool all_pass() const;
    const AuditSection* section(const std::string& name) const;
};

// Sum_W M_{UV}^W Btilde_{WX}  vs  Sum_Q b_Q (BS)_{UQ} (BS)_{VQ} (SC)_{QX}
// over all (U,V,X) in Irr x Irr x J.
AuditSection verlinde_check(const ModularDataSet& d);

// Stilde * Stilde = Ctilde, with the computed square attached.
AuditSection s_squared_check(const ModularDataSet& d);

// Abstract phi-algebra product rule: sigma(U) sigma(V) = Sum_W M_{UV}^W sigma(W)
// with sigma(U) = Sum_B (BS)_{UB} phi_B and phi_A phi_B = delta [A in irrproj] b_A phi_A.
AuditSection product_rule_check(const ModularDataSet& d);

// b_Q Sum_B Stilde_{AB} Cartan_{BX} t0, Q the first irrproj label.
Scalar hopf_link_value(const ModularDataSet& d, const std::string& a_label,
                       const std::string& x_label);

// Verifies the dataset's expected_hopf entries; vacuous pass when absent.
AuditSection hopf_link_check(const ModularDataSet& d);

// M_{UV}^{unit} = Cartan_{V*,U} over all pairs.
AuditSection m1_cartan_check(const ModularDataSet& d);

// rank(Cartan) = rank(Btilde) = |J| bookkeeping.
AuditSection rank_check(const ModularDataSet& d);

// Diagnostic only: solves for one multiplier on all b values making the
// product rule hold, then re-runs every section under the rescaled data.
// Published data is never silently patched.
RescaleResult rescale_solver(const ModularDataSet& d);

// All sections in fixed order, plus the rescale diagnostic when the product
// rule or the Verlinde identity failed.
AuditReport full_audit(const ModularDataSet& d);

// Seeded synthetic dataset built to satisfy S^2 = C and the product rule
// (J = Irr, Btilde = Ctilde = identity, involutive Stilde, fusion solved
// from the product rule).
ModularDataSet synthetic_modular(std::uint64_t seed);

}  // namespace fftc
