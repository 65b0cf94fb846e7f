#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fftc/sfcat.hpp"

using namespace fftc;

namespace {

const FieldSpec QF = FieldSpec::rational();
Scalar q(long n, long d = 1) { return Scalar::from_mpq(mpq_class(n, d), QF); }

// Toric-code data: four self-dual simples with Z/2 x Z/2 fusion, all
// projective, S = (1/2) * character table, C = Cartan = B = identity.
ModularDataSet toric_code() {
    ModularDataSet d;
    d.field = QF;
    d.irr = {"1", "e", "m", "f"};
    d.j_labels = d.irr;
    d.irrproj = d.irr;
    for (const std::string& l : d.irr) d.dual[l] = l;
    d.cartan = Matrix::identity(4, QF);
    d.btilde = Matrix::identity(4, QF);
    d.ctilde = Matrix::identity(4, QF);
    d.stilde = Matrix(4, 4, QF);
    int chi[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) d.stilde.at(r, c) = q(chi[r][c], 2);
    for (const std::string& l : d.irr) d.b[l] = q(2);
    d.t0 = q(1);
    auto xorlabel = [&](std::size_t u, std::size_t v) { return d.irr[u ^ v]; };
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v)
            d.fusion[{d.irr[u], d.irr[v]}] = {{xorlabel(u, v), q(1)}};
    return d;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("dataset validation catches malformed input") {
    ModularDataSet d = toric_code();
    CHECK(d.validate().valid());

    ModularDataSet shape = d;
    shape.stilde = Matrix::identity(3, QF);
    CHECK_FALSE(shape.validate().valid());

    ModularDataSet zb = d;
    zb.b["e"] = q(0);
    CHECK_FALSE(zb.validate().valid());

    ModularDataSet dual = d;
    dual.dual["e"] = "m";
    CHECK_FALSE(dual.validate().valid());

    ModularDataSet t0 = d;
    t0.t0 = q(0);
    CHECK_FALSE(t0.validate().valid());

    ModularDataSet c = d;
    c.ctilde.at(0, 1) = q(1);
    CHECK_FALSE(c.validate().valid());
}

TEST_CASE("toric code passes every audit section") {
    AuditReport rep = full_audit(toric_code());
    CHECK(rep.all_pass());
    CHECK_FALSE(rep.rescale.has_value());
    for (const char* name : {"s_squared", "product_rule", "verlinde", "hopf_link",
                             "m1_cartan", "rank"}) {
        const AuditSection* sec = rep.section(name);
        REQUIRE(sec != nullptr);
        CHECK(sec->pass);
    }
}

TEST_CASE("hopf expectations are checked when present") {
    ModularDataSet d = toric_code();
    // b_1 * sum_B S_{1B} C_{B,1} * t0 = 2 * 1/2 = 1.
    CHECK(hopf_link_value(d, "1", "1") == q(1));
    d.expected_hopf[{"1", "1"}] = q(1);
    CHECK(hopf_link_check(d).pass);
    d.expected_hopf[{"1", "1"}] = q(3);
    AuditSection sec = hopf_link_check(d);
    CHECK_FALSE(sec.pass);
    REQUIRE(sec.witnesses.size() == 1);
    CHECK(sec.witnesses[0].lhs == "1");
    CHECK(sec.witnesses[0].rhs == "3");
}

TEST_CASE("printed SF tables at N = 1: exact verdict vector") {
    ModularDataSet d = sf_dataset(1, q(1));
    CHECK(d.validate().valid());
    AuditReport rep = full_audit(d);

    CHECK_FALSE(rep.section("s_squared")->pass);
    CHECK_FALSE(rep.section("product_rule")->pass);
    CHECK_FALSE(rep.section("verlinde")->pass);
    CHECK(rep.section("hopf_link")->pass);
    CHECK(rep.section("m1_cartan")->pass);
    CHECK(rep.section("rank")->pass);
    CHECK_FALSE(rep.all_pass());

    // Stilde^2 is far from Ctilde: the exact square is recorded.
    const AuditSection* sq = rep.section("s_squared");
    REQUIRE(!sq->info.empty());
    CHECK(sq->info[0].second == "[4, 0, 0; 0, 5/2, -3/2; 0, -3/2, 5/2]");

    // Sanity witness for the Verlinde failure: (T, T, 1) gives 1 vs 1/4.
    Scalar lhs = Scalar::zero(QF), rhs = Scalar::zero(QF);
    Matrix bs = d.btilde * d.stilde;
    Matrix sc = d.stilde * d.ctilde;
    for (std::size_t w = 0; w < d.irr.size(); ++w)
        lhs += d.fusion_coeff("T", "T", d.irr[w]) * d.btilde.at(w, 0);
    for (const std::string& qq : d.irrproj) {
        std::size_t qi = d.j_index(qq);
        rhs += d.b.at(qq) * bs.at(d.irr_index("T"), qi) * bs.at(d.irr_index("T"), qi) *
               sc.at(qi, 0);
    }
    CHECK(lhs == q(1));
    CHECK(rhs == q(1, 4));
}

TEST_CASE("SF hopf values: b_Q sum_B S_AB C_BX t0") {
    for (std::size_t n : {1, 2, 3}) {
        ModularDataSet d = sf_dataset(n, q(1));
        CHECK(hopf_link_value(d, "T", "1") == Scalar::from_mpz(mpz_class(1) << (2 * n - 2), QF));
    }
    // (T, T) at N = 1: b_T * (S_{T1} C_{1T} + S_{TT} C_{TT}) = 1/4 * 1/2 = 1/8.
    ModularDataSet d = sf_dataset(1, q(1));
    CHECK(hopf_link_value(d, "T", "T") == q(1, 8));
}

TEST_CASE("rescale diagnostic on the SF tables") {
    ModularDataSet d = sf_dataset(1, q(1));
    AuditReport rep = full_audit(d);
    REQUIRE(rep.rescale.has_value());
    const RescaleResult& rs = *rep.rescale;
    CHECK(rs.solvable);
    CHECK(rs.multiplier == q(16));  // 2^{2N+2} at N = 1
    CHECK(contains(rs.fixed_checks, "product_rule"));
    CHECK_FALSE(contains(rs.fixed_checks, "verlinde"));
    CHECK(contains(rs.broken_checks, "hopf_link"));  // rescaling conflicts with hopf

    // General N: the single multiplier is 2^{2N+2}.
    ModularDataSet d2 = sf_dataset(2, q(1));
    RescaleResult rs2 = rescale_solver(d2);
    CHECK(rs2.solvable);
    CHECK(rs2.multiplier == q(64));
}

TEST_CASE("rescale obstruction reporting") {
    ModularDataSet d = toric_code();
    d.fusion[{"e", "e"}] = {{"1", q(1)}, {"e", q(1)}};  // poison one row
    RescaleResult rs = rescale_solver(d);
    CHECK_FALSE(rs.solvable);
    CHECK_FALSE(rs.obstruction.empty());
}

TEST_CASE("synthetic datasets satisfy the solver-guaranteed sections") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        ModularDataSet d = synthetic_modular(seed);
        CHECK(d.validate().valid());
        CHECK(s_squared_check(d).pass);
        CHECK(product_rule_check(d).pass);
        CHECK(verlinde_check(d).pass);
    }
}

TEST_CASE("synthetic generation is deterministic in the seed") {
    ModularDataSet a = synthetic_modular(42);
    ModularDataSet b = synthetic_modular(42);
    CHECK(a.irr == b.irr);
    CHECK(a.stilde == b.stilde);
    CHECK(a.fusion == b.fusion);
    ModularDataSet c = synthetic_modular(43);
    CHECK((a.stilde != c.stilde || a.fusion != c.fusion || a.irr != c.irr));
}
