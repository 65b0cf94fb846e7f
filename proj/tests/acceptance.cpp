// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "fftc/json_io.hpp"
#include "fftc/sfcat.hpp"

using namespace fftc;

namespace {

const std::string FIXTURES = FFTC_FIXTURE_DIR;
const FieldSpec QF = FieldSpec::rational();
const FieldSpec GFI = FieldSpec::gaussian();

int failures = 0;

void report(int number, const std::string& title, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << "criterion " << number << " [" << title << "]: " << (ok ? "PASS" : "FAIL") << note
              << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Scalar q(long n, long d = 1) { return Scalar::from_mpq(mpq_class(n, d), QF); }

// Fusion tables computed once, shared by criteria 3 and 4.
SFFusion fusion_n1, fusion_n2;

ModularDataSet toric_code() {
    return dataset_from_json(load_json_file(FIXTURES + "/toric.json"));
}

}  // namespace

int main() {
    report(1, "k[X]/(X^2) ideal bookkeeping", [] {
        auto start = std::chrono::steady_clock::now();
        auto a = algebra_from_json(load_json_file(FIXTURES + "/kx2.json"));
        CentralForm eps = central_form_from_json(load_json_file(FIXTURES + "/kx2_form.json"), a);

        AlgModule reg = regular_module(a);
        AlgModule simple;
        simple.algebra = a;
        simple.dim = 1;
        simple.action = {Matrix::identity(1, QF), Matrix(1, 1, QF)};

        Vec chi_a = character_form(reg).coords;
        Vec chi_k = character_form(simple).coords;
        bool chi_ok = chi_a == Vec{q(2), q(0)} && chi_k == Vec{q(1), q(0)};

        IdealReport rep = ideal_report(*a, eps, {simple}, {reg});
        std::vector<Vec> hig = higman_basis(*a, eps);
        std::vector<Vec> rey = reynolds_basis(*a, radical_char0(*a));
        std::vector<Vec> x_span{a->basis_vec(1)};
        bool spans_ok = same_span(hig, x_span, 2, QF) && same_span(rey, x_span, 2, QF);

        return chi_ok && rep.i_equals_r && !rep.semisimple && spans_ok && rep.rank_cartan == 1 &&
               rep.dim_hig == 1 && rep.hig_rank_matches_cartan && seconds_since(start) < 1.0;
    });

    report(2, "SF Cartan matrices N = 1, 2, 3", [] {
        auto start = std::chrono::steady_clock::now();
        for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
            Matrix c = sf_cartan(n);  // internally cross-checked against the
                                      // graded composition series of Lambda
            Scalar h = Scalar::from_mpz(mpz_class(1) << (2 * n - 1), QF);
            for (std::size_t r : {std::size_t{0}, std::size_t{1}})
                for (std::size_t col : {std::size_t{0}, std::size_t{1}})
                    if (c.at(r, col) != h) return false;
            if (c.at(2, 2) != q(1) || c.at(3, 3) != q(1) || !c.at(2, 3).is_zero() ||
                !c.at(0, 2).is_zero())
                return false;
            if (rank_of(c) != 3) return false;
        }
        return seconds_since(start) < 5.0;
    });

    report(3, "SF fusion by the decomposition oracle, N = 1 and 2", [] {
        auto start = std::chrono::steady_clock::now();
        fusion_n1 = sf_fusion(lambda_algebra(1, Scalar::i(GFI)));
        // Lambda*Lambda = 2Lambda + 2PiLambda etc., via the closed table.
        if (fusion_n1 != sf_closed_fusion(1)) return false;
        using Row = std::map<std::string, std::size_t>;
        if (fusion_n1.at({"1", "1"}) != Row{{"1", 2}, {"Pi1", 2}}) return false;
        if (fusion_n1.at({"1", "T"}) != Row{{"T", 2}, {"PiT", 2}}) return false;
        if (fusion_n1.at({"T", "T"}) != Row{{"1", 1}}) return false;
        if (fusion_n1.at({"T", "PiT"}) != Row{{"Pi1", 1}}) return false;
        if (fusion_n1.at({"PiT", "PiT"}) != Row{{"1", 1}}) return false;
        fusion_n2 = sf_fusion(lambda_algebra(2, Scalar::from_int(-1, GFI)));
        if (fusion_n2 != sf_closed_fusion(2)) return false;
        if (fusion_n2.at({"1", "Pi1"}).at("1") != 8) return false;
        return seconds_since(start) < 60.0;
    });

    report(4, "M_{UV}^unit = Cartan_{V*,U} at N = 1, 2", [] {
        if (fusion_n1.empty() || fusion_n2.empty()) return false;  // needs criterion 3
        const std::vector<std::string> labels{"1", "Pi1", "T", "PiT"};
        for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
            const SFFusion& fus = n == 1 ? fusion_n1 : fusion_n2;
            Matrix c = sf_cartan(n);
            for (std::size_t u = 0; u < 4; ++u)
                for (std::size_t v = 0; v < 4; ++v) {
                    const auto& row = fus.at({labels[u], labels[v]});
                    auto it = row.find("1");
                    std::size_t m = it == row.end() ? 0 : it->second;
                    // all four simples are self-dual, so V* = V
                    if (Scalar::from_int(static_cast<long>(m), QF) != c.at(v, u)) return false;
                }
        }
        return true;
    });

    report(5, "modified trace displays, cyclicity, nondegenerate pairing", [] {
        LambdaAlgebra l = lambda_algebra(1, Scalar::i(GFI));
        Scalar t0 = Scalar::from_int(1, GFI);
        Matrix rtop = l.underlying->right_mult(l.underlying->basis_vec(l.top_mask()));
        SFObject lam = sf_lambda_object(l), pilam = sf_pi_lambda_object(l);
        SFObject t = sf_t_object(l), pit = sf_pi_t_object(l);

        if (sf_modified_trace(l, lam, rtop, t0) != t0 * l.beta_sq_inv) return false;
        if (sf_modified_trace(l, pilam, rtop, t0) != -(t0 * l.beta_sq_inv)) return false;
        if (sf_modified_trace(l, t, Matrix::identity(1, GFI), t0) != t0) return false;
        if (sf_modified_trace(l, pit, Matrix::identity(1, GFI), t0) != -t0) return false;
        if (l.cointegral(l.underlying->basis_vec(l.top_mask())) != l.beta_sq_inv) return false;

        // All projective pairs: cyclicity t_P(g f) = t_Q(f g) and full-rank
        // pairing Grams Hom(P,Q) x Hom(Q,P) -> k.
        std::vector<SFObject> covers{lam, pilam, t, pit};
        auto homs = [&](const SFObject& x, const SFObject& y) -> std::vector<Matrix> {
            if (x.sector != y.sector) return {};
            if (x.sector == 1) {
                if (x.even_dim != y.even_dim) return {};  // T vs PiT: no even maps
                return {Matrix::identity(1, GFI)};
            }
            return hom_basis(*x.module, *y.module);
        };
        for (const SFObject& p : covers)
            for (const SFObject& qq : covers) {
                std::vector<Matrix> fwd = homs(p, qq), bwd = homs(qq, p);
                if (fwd.size() != bwd.size()) return false;
                if (fwd.empty()) continue;
                Matrix gram(fwd.size(), bwd.size(), GFI);
                for (std::size_t i = 0; i < fwd.size(); ++i)
                    for (std::size_t j = 0; j < bwd.size(); ++j) {
                        Scalar tp = sf_modified_trace(l, p, bwd[j] * fwd[i], t0);
                        Scalar tq = sf_modified_trace(l, qq, fwd[i] * bwd[j], t0);
                        if (tp != tq) return false;  // cyclicity
                        gram.at(i, j) = tp;
                    }
                if (rank_of(gram) != fwd.size()) return false;
            }
        return true;
    });

    report(6, "Hopf link value 4^{N-1} t0 for N = 1..4", [] {
        for (std::size_t n = 1; n <= 4; ++n) {
            ModularDataSet d = sf_dataset(n, q(1));
            Scalar want = Scalar::from_mpz(mpz_class(1) << (2 * n - 2), QF);
            if (hopf_link_value(d, "T", "1") != want) return false;
            if (!hopf_link_check(d).pass) return false;
        }
        return true;
    });

    report(7, "toric-code dataset passes the full audit", [] {
        ModularDataSet d = toric_code();
        if (!d.validate().valid()) return false;
        AuditReport rep = full_audit(d);
        return rep.all_pass() && rep.section("verlinde")->witnesses.empty();
    });

    report(8, "conditional soundness on 100 synthetic datasets", [] {
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            ModularDataSet d = synthetic_modular(seed);
            if (!s_squared_check(d).pass) return false;
            if (!product_rule_check(d).pass) return false;
            if (!verlinde_check(d).pass) return false;
        }
        return true;
    });

    report(9, "Condition P and Grothendieck semisimplicity", [] {
        CommRing gr = sf_grothendieck_ring(1);
        if (condition_p(gr) != std::optional<std::string>("P1")) return false;
        Vec witness{q(0), q(0), q(1), q(-1)};  // [T] - [PiT]
        if (!ring_element_power_nilpotent(gr, witness)) return false;
        if (ring_semisimple(gr)) return false;
        CommRing fp = ring_from_json(load_json_file(FIXTURES + "/fp3_zp.json"));
        return !condition_p(fp).has_value();
    });

    report(10, "printed SF tables: verdict vector and rescale tension", [] {
        ModularDataSet d = sf_dataset(1, q(1));
        AuditReport rep = full_audit(d);
        if (rep.section("s_squared")->pass || rep.section("product_rule")->pass ||
            rep.section("verlinde")->pass)
            return false;
        if (!rep.section("hopf_link")->pass || !rep.section("m1_cartan")->pass ||
            !rep.section("rank")->pass)
            return false;
        if (!rep.rescale || !rep.rescale->solvable) return false;
        if (rep.rescale->multiplier != q(16)) return false;  // 2^{2N+2}, N = 1
        bool hopf_conflict = false;
        for (const std::string& name : rep.rescale->broken_checks)
            if (name == "hopf_link") hopf_conflict = true;
        bool product_fixed = false;
        for (const std::string& name : rep.rescale->fixed_checks)
            if (name == "product_rule") product_fixed = true;
        // The original data is untouched: re-audit gives the same verdicts.
        AuditReport again = full_audit(d);
        return hopf_conflict && product_fixed &&
               again.section("hopf_link")->pass == rep.section("hopf_link")->pass;
    });

    report(11, "trace vs tg identity: zero residual for all four simples", [] {
        SFTraceVsTgReport rep = sf_check_trace_vs_tg(lambda_algebra(1, Scalar::i(GFI)),
                                                     Scalar::from_int(1, GFI));
        return rep.per_simple.size() == 4 && rep.all_zero();
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
