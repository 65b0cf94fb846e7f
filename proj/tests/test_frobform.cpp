#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <memory>

#include "fftc/frobform.hpp"

using namespace fftc;

namespace {

const FieldSpec QF = FieldSpec::rational();
Scalar q(long n, long d = 1) { return Scalar::from_mpq(mpq_class(n, d), QF); }

std::shared_ptr<Algebra> make_algebra(std::size_t dim, const FieldSpec& f,
                                      const std::function<Vec(std::size_t, std::size_t)>& prod,
                                      const Vec& unit) {
    auto a = std::make_shared<Algebra>();
    a->dim = dim;
    a->field = f;
    for (std::size_t i = 0; i < dim; ++i) a->basis_names.push_back("b" + std::to_string(i));
    a->mult.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Vec p = prod(i, j);
            SparseVec sv;
            for (std::size_t k = 0; k < dim; ++k)
                if (!p[k].is_zero()) sv.emplace_back(k, p[k]);
            a->mult[i * dim + j] = std::move(sv);
        }
    a->unit = unit;
    return a;
}

Vec unitvec(std::size_t dim, std::size_t k, const FieldSpec& f) {
    Vec v(dim, Scalar::zero(f));
    v[k] = Scalar::one(f);
    return v;
}

std::shared_ptr<Algebra> dual_numbers() {
    return make_algebra(2, QF, [&](std::size_t i, std::size_t j) {
        Vec p(2, Scalar::zero(QF));
        if (i + j < 2) p[i + j] = Scalar::one(QF);
        return p;
    }, unitvec(2, 0, QF));
}

std::shared_ptr<Algebra> mat2() {
    Vec unit(4, Scalar::zero(QF));
    unit[0] = unit[3] = Scalar::one(QF);
    return make_algebra(4, QF, [&](std::size_t i, std::size_t j) {
        Vec p(4, Scalar::zero(QF));
        std::size_t a = i / 2, b = i % 2, c = j / 2, d = j % 2;
        if (b == c) p[2 * a + d] = Scalar::one(QF);
        return p;
    }, unit);
}

std::shared_ptr<Algebra> upper2() {
    Vec unit(3, Scalar::zero(QF));
    unit[0] = unit[2] = Scalar::one(QF);
    auto idx = [](std::size_t r, std::size_t c) { return r == 0 ? c : 2; };
    return make_algebra(3, QF, [&](std::size_t i, std::size_t j) {
        Vec p(3, Scalar::zero(QF));
        std::size_t r1 = i == 2 ? 1 : 0, c1 = i == 0 ? 0 : 1;
        std::size_t r2 = j == 2 ? 1 : 0, c2 = j == 0 ? 0 : 1;
        if (c1 == r2) p[idx(r1, c2)] = Scalar::one(QF);
        return p;
    }, unit);
}

CentralForm form_of(const std::shared_ptr<Algebra>& a, Vec coords) {
    return CentralForm{a, std::move(coords)};
}

// Simple module of k[X]/(X^2): X acts by zero.
AlgModule kx2_simple(const std::shared_ptr<Algebra>& a) {
    AlgModule s;
    s.algebra = a;
    s.dim = 1;
    s.action = {Matrix::identity(1, QF), Matrix(1, 1, QF)};
    return s;
}

}  // namespace

TEST_CASE("central form on k[X]/(X^2): Gram, copairing, tau") {
    auto a = dual_numbers();
    CentralForm eps = form_of(a, {q(0), q(1)});  // eps(1) = 0, eps(X) = 1
    CentralFormCheck chk = check_central_form(eps);
    CHECK(chk.central);
    CHECK(chk.nondegenerate);
    CHECK(chk.gram.at(0, 0) == q(0));
    CHECK(chk.gram.at(0, 1) == q(1));
    CHECK(chk.gram.at(1, 0) == q(1));
    CHECK(chk.gram.at(1, 1) == q(0));

    // gamma = 1 (x) X + X (x) 1: coefficient matrix is the inverse Gram.
    Copairing gamma = copairing(eps);
    Matrix coeff(2, 2, QF);
    for (const auto& [l, r] : gamma.tensor)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) coeff.at(i, j) += l[i] * r[j];
    CHECK(coeff.at(0, 1) == q(1));
    CHECK(coeff.at(1, 0) == q(1));
    CHECK(coeff.at(0, 0) == q(0));
    CHECK(coeff.at(1, 1) == q(0));

    CHECK(tau(eps, a->unit) == Vec{q(0), q(2)});      // tau(1) = 2X
    CHECK(tau(eps, a->basis_vec(1)) == Vec{q(0), q(0)});  // tau(X) = 0
}

TEST_CASE("Higman and Reynolds ideals of k[X]/(X^2)") {
    auto a = dual_numbers();
    CentralForm eps = form_of(a, {q(0), q(1)});
    std::vector<Vec> hig = higman_basis(*a, eps);
    REQUIRE(hig.size() == 1);
    CHECK(in_span(hig, a->basis_vec(1), QF));

    std::vector<Vec> rey = reynolds_basis(*a, radical_char0(*a));
    REQUIRE(rey.size() == 1);
    CHECK(same_span(hig, rey, 2, QF));
}

TEST_CASE("Higman ideal is independent of the nondegenerate form") {
    auto a = dual_numbers();
    std::vector<Vec> h1 = higman_basis(*a, form_of(a, {q(0), q(1)}));
    std::vector<Vec> h2 = higman_basis(*a, form_of(a, {q(1), q(1)}));
    std::vector<Vec> h3 = higman_basis(*a, form_of(a, {q(0), q(2)}));
    CHECK(same_span(h1, h2, 2, QF));
    CHECK(same_span(h1, h3, 2, QF));
}

TEST_CASE("trace form on M2: tau(E11) = 1 and a semisimple report") {
    auto a = mat2();
    // eps = matrix trace: value 1 on e11, e22.
    CentralForm tr = form_of(a, {q(1), q(0), q(0), q(1)});
    CentralFormCheck chk = check_central_form(tr);
    CHECK(chk.central);
    CHECK(chk.nondegenerate);
    CHECK(tau(tr, a->basis_vec(0)) == a->unit);

    // Column module k^2.
    AlgModule col;
    col.algebra = a;
    col.dim = 2;
    for (std::size_t i = 0; i < 4; ++i) {
        Matrix act(2, 2, QF);
        act.at(i / 2, i % 2) = q(1);
        col.action.push_back(act);
    }
    IdealReport rep = ideal_report(*a, tr, {col}, {col});
    CHECK(rep.semisimple);
    CHECK(rep.dim_center == 1);
    CHECK(rep.dim_rey == 1);
    CHECK(rep.dim_hig == 1);
    CHECK(rep.rank_cartan == 1);
    CHECK(rep.chain);
    CHECK(rep.zeta_hig_equals_i);
    CHECK(rep.zeta_rey_equals_r);
    CHECK(rep.hig_rank_matches_cartan);
    CHECK(rep.i_equals_r);
}

TEST_CASE("upper triangular 2x2 admits no nondegenerate central form") {
    auto a = upper2();
    // Centrality forces eps(e12) = 0; any such form has a degenerate Gram.
    std::vector<Vec> central_forms;
    for (long x : {1L, 0L, -2L})
        for (long z : {0L, 1L, 3L}) {
            CentralForm f = form_of(a, {q(x), q(0), q(z)});
            CentralFormCheck chk = check_central_form(f);
            CHECK(chk.central);
            CHECK_FALSE(chk.nondegenerate);
        }
    // A form with eps(e12) != 0 is not central at all.
    CHECK_FALSE(check_central_form(form_of(a, {q(1), q(5), q(1)})).central);
    CHECK_THROWS_AS(copairing(form_of(a, {q(1), q(0), q(1)})), DegenerateFormError);
}

TEST_CASE("character forms and the ideal report of k[X]/(X^2)") {
    auto a = dual_numbers();
    AlgModule reg = regular_module(a);
    AlgModule simple = kx2_simple(a);

    CentralForm chi_a = character_form(reg);
    CentralForm chi_k = character_form(simple);
    CHECK(chi_a.coords == Vec{q(2), q(0)});  // chi_A = 2 chi_k
    CHECK(chi_k.coords == Vec{q(1), q(0)});

    CentralForm eps = form_of(a, {q(0), q(1)});
    IdealReport rep = ideal_report(*a, eps, {simple}, {reg});
    CHECK_FALSE(rep.semisimple);
    CHECK(rep.dim_center == 2);
    CHECK(rep.dim_rey == 1);
    CHECK(rep.dim_hig == 1);
    CHECK(rep.dim_r == 1);
    CHECK(rep.dim_i == 1);
    CHECK(rep.rank_cartan == 1);
    CHECK(rep.chain);
    CHECK(rep.zeta_hig_equals_i);
    CHECK(rep.zeta_rey_equals_r);
    CHECK(rep.hig_rank_matches_cartan);
    CHECK(rep.i_equals_r);  // Cartan [2] is invertible over Q
}

TEST_CASE("extend_trace sums over summands and ignores the decomposition") {
    auto a = dual_numbers();
    Matrix id2 = Matrix::identity(2, QF);
    Matrix rx(2, 2, QF);
    rx.at(1, 0) = q(1);  // right multiplication by X on the regular module

    TraceAssignment t;
    t.traces["P"] = {{id2, rx}, {q(5), q(7)}};
    CHECK(t.eval("P", id2) == q(5));
    CHECK(t.eval("P", rx) == q(7));
    CHECK(t.eval("P", id2 + rx.scaled(q(3))) == q(26));
    CHECK_THROWS_AS(t.eval("missing", id2), Error);

    // P = D + D inside k^4, block embeddings.
    auto block_embed = [&](std::size_t k) {
        Matrix e(4, 2, QF);
        e.at(2 * k, 0) = e.at(2 * k + 1, 1) = q(1);
        return e;
    };
    auto block_project = [&](std::size_t k) {
        Matrix p(2, 4, QF);
        p.at(0, 2 * k) = p.at(1, 2 * k + 1) = q(1);
        return p;
    };
    std::vector<ProjSummand> parts{{"P", block_embed(0), block_project(0)},
                                   {"P", block_embed(1), block_project(1)}};

    Matrix f(4, 4, QF);  // blocks [[id, rx], [rx, id]]
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            f.at(r, c) = id2.at(r, c);
            f.at(2 + r, 2 + c) = id2.at(r, c);
            f.at(r, 2 + c) = rx.at(r, c);
            f.at(2 + r, c) = rx.at(r, c);
        }
    CHECK(extend_trace(t, parts, f) == q(10));

    // Conjugated decomposition via the module automorphism U = [[id, rx], [0, id]].
    Matrix u = Matrix::identity(4, QF);
    Matrix uinv = Matrix::identity(4, QF);
    u.at(1, 2) = q(1);
    uinv.at(1, 2) = q(-1);
    std::vector<ProjSummand> parts2{{"P", u * block_embed(0), block_project(0) * uinv},
                                    {"P", u * block_embed(1), block_project(1) * uinv}};
    CHECK(extend_trace(t, parts2, f) == q(10));

    CHECK_THROWS_AS(extend_trace(t, {}, f), NotProjectiveError);
}
