#include "fftc/sfcat.hpp"

#include <bit>

namespace fftc {

namespace {

const FieldSpec GF = FieldSpec::gaussian();

mpz_class pow2(std::size_t k) { return mpz_class(1) << k; }

Scalar gs(long v) { return Scalar::from_int(v, GF); }

// Lifts a rational t0 into Q(i) so it can meet beta^{-2}.
Scalar to_gauss(const Scalar& s) {
    if (s.field() == GF) return s;
    if (s.field().kind != FieldKind::Rational)
        throw FieldMismatchError("SF computations need a rational or Q(i) scalar");
    return Scalar::from_mpq(s.re(), GF);
}

Parity mask_parity(std::size_t mask) {
    return std::popcount(mask) % 2 == 0 ? Parity::Even : Parity::Odd;
}

// Exterior product sign: number of generator transpositions needed to
// interleave S before T, i.e. pairs (s in S, t in T) with s > t.
int exterior_sign(std::size_t s, std::size_t t, std::size_t width) {
    int inversions = 0;
    for (std::size_t i = 0; i < width; ++i) {
        if (!(s >> i & 1)) continue;
        for (std::size_t j = 0; j < i; ++j)
            if (t >> j & 1) ++inversions;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

LambdaAlgebra lambda_algebra(std::size_t n, const Scalar& beta_sq_inv) {
    if (n < 1) throw Error("lambda_algebra requires N >= 1");
    Scalar sq = beta_sq_inv * beta_sq_inv;
    Scalar want = n % 2 == 0 ? gs(1) : gs(-1);
    bool unit_like = beta_sq_inv == gs(1) || beta_sq_inv == gs(-1) ||
                     beta_sq_inv == Scalar::i(GF) || beta_sq_inv == -Scalar::i(GF);
    if (!unit_like || sq != want)
        throw Error("beta^{-2} must be a fourth root of unity with square (-1)^N");

    std::size_t width = 2 * n;
    std::size_t dim = std::size_t{1} << width;
    check_dim_cap(dim);

    auto alg = std::make_shared<Algebra>();
    alg->dim = dim;
    alg->field = GF;
    std::vector<Parity> grading;
    for (std::size_t mask = 0; mask < dim; ++mask) {
        std::string name;
        if (mask == 0) name = "1";
        for (std::size_t i = 0; i < width; ++i)
            if (mask >> i & 1) name += "a" + std::to_string(i + 1);
        alg->basis_names.push_back(name);
        grading.push_back(mask_parity(mask));
    }
    alg->grading = grading;
    alg->mult.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (i & j) continue;  // repeated generator
            alg->mult[i * dim + j] = {{i | j, gs(exterior_sign(i, j, width))}};
        }
    alg->unit = alg->basis_vec(0);

    LambdaAlgebra l;
    l.n = n;
    l.beta_sq_inv = beta_sq_inv;
    l.underlying = alg;
    return l;
}

std::vector<std::tuple<std::size_t, std::size_t, Scalar>> LambdaAlgebra::coproduct(
    std::size_t mask) const {
    // Delta(a_j) = a_j (x) 1 + 1 (x) a_j, extended multiplicatively with
    // (x (x) y)(x' (x) y') = (-1)^{|y||x'|} xx' (x) yy'; generators ascending.
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms{{0, 0, gs(1)}};
    for (std::size_t i = 0; i < 2 * n; ++i) {
        if (!(mask >> i & 1)) continue;
        std::vector<std::tuple<std::size_t, std::size_t, Scalar>> next;
        next.reserve(terms.size() * 2);
        for (const auto& [a, b, sign] : terms) {
            Scalar left = sign;
            if (std::popcount(b) % 2 == 1) left = -left;
            next.emplace_back(a | (std::size_t{1} << i), b, left);
            next.emplace_back(a, b | (std::size_t{1} << i), sign);
        }
        terms = std::move(next);
    }
    return terms;
}

Scalar LambdaAlgebra::cointegral(const Vec& v) const { return v[top_mask()] * beta_sq_inv; }

std::vector<Vec> LambdaAlgebra::radical() const {
    std::vector<Vec> rad;
    for (std::size_t mask = 1; mask < dim(); ++mask) rad.push_back(underlying->basis_vec(mask));
    return rad;
}

namespace {

SFObject from_module(AlgModule m) {
    SFObject o;
    o.sector = 0;
    for (Parity p : *m.grading)
        (p == Parity::Even ? o.even_dim : o.odd_dim)++;
    o.module = std::move(m);
    return o;
}

AlgModule trivial_module(const LambdaAlgebra& l, Parity p) {
    AlgModule m;
    m.algebra = l.underlying;
    m.dim = 1;
    for (std::size_t mask = 0; mask < l.dim(); ++mask)
        m.action.push_back(mask == 0 ? Matrix::identity(1, GF) : Matrix(1, 1, GF));
    m.grading = std::vector<Parity>{p};
    return m;
}

}  // namespace

SFObject sf_lambda_object(const LambdaAlgebra& l) { return from_module(regular_module(l.underlying)); }

SFObject sf_pi_lambda_object(const LambdaAlgebra& l) {
    AlgModule m = regular_module(l.underlying);
    for (Parity& p : *m.grading) p = p + Parity::Odd;
    return from_module(std::move(m));
}

SFObject sf_t_object(const LambdaAlgebra&) { return {1, 1, 0, std::nullopt}; }
SFObject sf_pi_t_object(const LambdaAlgebra&) { return {1, 0, 1, std::nullopt}; }
SFObject sf_one_object(const LambdaAlgebra& l) { return from_module(trivial_module(l, Parity::Even)); }
SFObject sf_pi_one_object(const LambdaAlgebra& l) { return from_module(trivial_module(l, Parity::Odd)); }

SFObject sf_tensor(const LambdaAlgebra& l, const SFObject& x, const SFObject& y) {
    int sector = (x.sector + y.sector) % 2;
    std::size_t te = x.even_dim * y.even_dim + x.odd_dim * y.odd_dim;
    std::size_t to = x.even_dim * y.odd_dim + x.odd_dim * y.even_dim;

    if (x.sector == 0 && y.sector == 0) {
        const AlgModule& mx = *x.module;
        const AlgModule& my = *y.module;
        std::size_t k = mx.dim * my.dim;
        check_dim_cap(k);
        AlgModule m;
        m.algebra = l.underlying;
        m.dim = k;
        std::vector<Parity> grading(k);
        for (std::size_t i = 0; i < mx.dim; ++i)
            for (std::size_t j = 0; j < my.dim; ++j)
                grading[i * my.dim + j] = (*mx.grading)[i] + (*my.grading)[j];
        for (std::size_t mask = 0; mask < l.dim(); ++mask) {
            Matrix act(k, k, GF);
            for (const auto& [a, b, sign] : l.coproduct(mask)) {
                const Matrix& fa = mx.action[a];
                const Matrix& gb = my.action[b];
                bool bodd = mask_parity(b) == Parity::Odd;
                for (std::size_t c1 = 0; c1 < mx.dim; ++c1) {
                    bool koszul = bodd && (*mx.grading)[c1] == Parity::Odd;
                    for (std::size_t r1 = 0; r1 < mx.dim; ++r1) {
                        const Scalar& fv = fa.at(r1, c1);
                        if (fv.is_zero()) continue;
                        Scalar base = sign * fv;
                        if (koszul) base = -base;
                        for (std::size_t c2 = 0; c2 < my.dim; ++c2)
                            for (std::size_t r2 = 0; r2 < my.dim; ++r2) {
                                const Scalar& gv = gb.at(r2, c2);
                                if (!gv.is_zero())
                                    act.at(r1 * my.dim + r2, c1 * my.dim + c2) += base * gv;
                            }
                    }
                }
            }
            m.action.push_back(std::move(act));
        }
        m.grading = std::move(grading);
        return from_module(std::move(m));
    }

    if (sector == 1) return {1, te, to, std::nullopt};

    // Both sector 1: Lambda (x) X (x) Y with the left regular Lambda action.
    std::size_t kt = te + to;  // X (x) Y as a super space, even block first
    check_dim_cap(l.dim() * kt);
    AlgModule m;
    m.algebra = l.underlying;
    m.dim = l.dim() * kt;
    std::vector<Parity> grading(m.dim);
    for (std::size_t mask = 0; mask < l.dim(); ++mask)
        for (std::size_t t = 0; t < kt; ++t)
            grading[mask * kt + t] = mask_parity(mask) + (t < te ? Parity::Even : Parity::Odd);
    for (std::size_t mask = 0; mask < l.dim(); ++mask) {
        Matrix act(m.dim, m.dim, GF);
        for (std::size_t j = 0; j < l.dim(); ++j) {
            if (mask & j) continue;
            Scalar sign = gs(exterior_sign(mask, j, 2 * l.n));
            for (std::size_t t = 0; t < kt; ++t) act.at((mask | j) * kt + t, j * kt + t) = sign;
        }
        m.action.push_back(std::move(act));
    }
    m.grading = std::move(grading);
    return from_module(std::move(m));
}

namespace {

void check_even(const std::vector<Parity>& grading, const Matrix& f) {
    if (f.rows() != grading.size() || f.cols() != grading.size())
        throw DimensionError("endomorphism shape mismatch");
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c)
            if (!f.at(r, c).is_zero() && grading[r] != grading[c])
                throw Error("modified trace of an odd endomorphism");
}

std::vector<Parity> sector1_grading(const SFObject& p) {
    std::vector<Parity> g(p.dim(), Parity::Even);
    for (std::size_t i = p.even_dim; i < p.dim(); ++i) g[i] = Parity::Odd;
    return g;
}

}  // namespace

Scalar sf_modified_trace(const LambdaAlgebra& l, const SFObject& p, const Matrix& f,
                         const Scalar& t0_in) {
    Scalar t0 = to_gauss(t0_in);
    if (p.sector == 1) {
        check_even(sector1_grading(p), f);
        Scalar str = Scalar::zero(GF);
        for (std::size_t i = 0; i < p.dim(); ++i)
            str += i < p.even_dim ? f.at(i, i) : -f.at(i, i);
        return t0 * str;
    }
    const AlgModule& m = *p.module;
    check_even(*m.grading, f);
    DecomposeFreeResult dec = decompose_local_free(m, l.radical());
    std::size_t gens = dec.generators.size();
    if (gens * l.dim() != m.dim) throw NotProjectiveError("free presentation size mismatch");

    // Presentation matrix Phi, column (j, mask) = e_mask . g_j, solved
    // against all f(g_j) at once.
    Matrix aug(m.dim, m.dim + gens, GF);
    for (std::size_t j = 0; j < gens; ++j) {
        for (std::size_t mask = 0; mask < l.dim(); ++mask) {
            Vec col = m.action[mask].apply(dec.generators[j]);
            for (std::size_t r = 0; r < m.dim; ++r) aug.at(r, j * l.dim() + mask) = col[r];
        }
        Vec rhs = f.apply(dec.generators[j]);
        for (std::size_t r = 0; r < m.dim; ++r) aug.at(r, m.dim + j) = rhs[r];
    }
    RrefResult rr = mat_rref(aug);
    for (std::size_t i = 0; i < m.dim; ++i)
        if (i >= rr.pivots.size() || rr.pivots[i] != i)
            throw NotProjectiveError("free presentation is not invertible");

    Scalar sum = Scalar::zero(GF);
    for (std::size_t j = 0; j < gens; ++j) {
        Scalar top = rr.rref.at(j * l.dim() + l.top_mask(), m.dim + j);
        sum += dec.generator_parity[j] == Parity::Even ? top : -top;
    }
    return t0 * l.beta_sq_inv * sum;
}

SFFusion sf_fusion(const LambdaAlgebra& l) {
    std::vector<std::pair<std::string, SFObject>> covers;
    covers.emplace_back("1", sf_lambda_object(l));
    covers.emplace_back("Pi1", sf_pi_lambda_object(l));
    covers.emplace_back("T", sf_t_object(l));
    covers.emplace_back("PiT", sf_pi_t_object(l));

    SFFusion table;
    for (const auto& [lu, pu] : covers)
        for (const auto& [lv, pv] : covers) {
            SFObject prod = sf_tensor(l, pu, pv);
            std::map<std::string, std::size_t> row;
            if (prod.sector == 0) {
                DecomposeFreeResult dec = decompose_local_free(*prod.module, l.radical());
                if (dec.even_gens) row["1"] = dec.even_gens;
                if (dec.odd_gens) row["Pi1"] = dec.odd_gens;
            } else {
                if (prod.even_dim) row["T"] = prod.even_dim;
                if (prod.odd_dim) row["PiT"] = prod.odd_dim;
            }
            table[{lu, lv}] = std::move(row);
        }
    return table;
}

SFFusion sf_closed_fusion(std::size_t n) {
    std::size_t h = std::size_t{1} << (2 * n - 1);
    SFFusion table;
    const std::vector<std::string> zero{"1", "Pi1"};
    const std::vector<std::string> one{"T", "PiT"};
    for (const std::string& u : zero) {
        for (const std::string& v : zero) table[{u, v}] = {{"1", h}, {"Pi1", h}};
        for (const std::string& v : one) {
            table[{u, v}] = {{"T", h}, {"PiT", h}};
            table[{v, u}] = {{"T", h}, {"PiT", h}};
        }
    }
    table[{"T", "T"}] = {{"1", 1}};
    table[{"PiT", "PiT"}] = {{"1", 1}};
    table[{"T", "PiT"}] = {{"Pi1", 1}};
    table[{"PiT", "T"}] = {{"Pi1", 1}};
    return table;
}

Matrix sf_cartan(std::size_t n) {
    const FieldSpec qf = FieldSpec::rational();
    Scalar h = Scalar::from_mpz(pow2(2 * n - 1), qf);
    Matrix closed(4, 4, qf);
    closed.at(0, 0) = closed.at(0, 1) = closed.at(1, 0) = closed.at(1, 1) = h;
    closed.at(2, 2) = closed.at(3, 3) = Scalar::one(qf);

    // Recompute the {1, Pi1} block from the graded composition series of
    // Lambda: multiplicities = counts of even/odd subsets.
    mpz_class even = 0, odd = 0;
    std::size_t dim = std::size_t{1} << (2 * n);
    for (std::size_t mask = 0; mask < dim; ++mask)
        (std::popcount(mask) % 2 == 0 ? even : odd) += 1;
    Matrix recomputed = closed;
    recomputed.at(0, 0) = recomputed.at(1, 1) = Scalar::from_mpz(even, qf);
    recomputed.at(0, 1) = recomputed.at(1, 0) = Scalar::from_mpz(odd, qf);
    if (recomputed != closed)
        throw Error("Cartan recomputation from the composition series disagrees");
    return closed;
}

SFModularData sf_modular_data(std::size_t n) {
    const FieldSpec qf = FieldSpec::rational();
    SFModularData d;
    d.n = n;
    d.irr = {"1", "Pi1", "T", "PiT"};
    d.j_labels = {"1", "T", "PiT"};
    d.btilde = Matrix(4, 3, qf);
    d.btilde.at(0, 0) = d.btilde.at(1, 0) = Scalar::one(qf);
    d.btilde.at(2, 1) = d.btilde.at(3, 2) = Scalar::one(qf);

    Scalar half = Scalar::from_mpq(mpq_class(1, 2), qf);
    Scalar p_nm1 = Scalar::from_mpz(pow2(n - 1), qf);
    Scalar p_n = Scalar::from_mpz(pow2(n), qf);
    d.stilde = Matrix(3, 3, qf);
    d.stilde.at(0, 1) = p_nm1;
    d.stilde.at(0, 2) = -p_nm1;
    d.stilde.at(1, 0) = p_n;
    d.stilde.at(2, 0) = -p_n;
    d.stilde.at(1, 1) = d.stilde.at(1, 2) = d.stilde.at(2, 1) = d.stilde.at(2, 2) = half;

    d.ctilde = Matrix::identity(3, qf);
    Scalar bt = Scalar::from_mpq(mpq_class(mpz_class(1), pow2(n + 1)), qf);
    d.b = {{"T", bt}, {"PiT", -bt}};
    d.cartan = sf_cartan(n);
    return d;
}

ModularDataSet sf_dataset(std::size_t n, const Scalar& t0) {
    const FieldSpec f = t0.field();
    auto conv = [&](const Matrix& m) {
        Matrix out(m.rows(), m.cols(), f);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                out.at(r, c) = Scalar::from_mpq(m.at(r, c).re(), f);
        return out;
    };
    SFModularData md = sf_modular_data(n);
    ModularDataSet d;
    d.field = f;
    d.irr = md.irr;
    for (const std::string& l : d.irr) d.dual[l] = l;  // all four self-dual
    d.cartan = conv(md.cartan);
    d.j_labels = md.j_labels;
    d.irrproj = {"T", "PiT"};
    d.btilde = conv(md.btilde);
    d.stilde = conv(md.stilde);
    d.ctilde = conv(md.ctilde);
    for (const auto& [label, value] : md.b) d.b[label] = Scalar::from_mpq(value.re(), f);
    d.t0 = t0;
    for (const auto& [uv, row] : sf_closed_fusion(n)) {
        std::map<std::string, Scalar> conv_row;
        for (const auto& [w, mult] : row)
            conv_row[w] = Scalar::from_int(static_cast<long>(mult), f);
        d.fusion[uv] = std::move(conv_row);
    }
    d.expected_hopf[{"T", "1"}] = Scalar::from_mpz(pow2(2 * n - 2), f);
    return d;
}

namespace {

Matrix right_top_matrix(const LambdaAlgebra& l) {
    return l.underlying->right_mult(l.underlying->basis_vec(l.top_mask()));
}

}  // namespace

SFPhiTable sf_phi_table(const LambdaAlgebra& l, const Scalar& t0_in) {
    Scalar t0 = to_gauss(t0_in);
    if (t0.is_zero()) throw Error("sf_phi_table requires t0 != 0");
    Scalar bt = Scalar::from_mpq(mpq_class(mpz_class(1), pow2(l.n + 1)), GF);

    Matrix rtop = right_top_matrix(l);
    SFObject lam = sf_lambda_object(l);
    SFObject pilam = sf_pi_lambda_object(l);
    // Normalisation t_Lambda((phi_1)_Lambda) = b_T t0, and the analogous
    // equation on the Pi side solved from the M = Pi1 instance of the
    // trace-vs-tg identity (trace on the 1-dim Hom(PiLambda, Pi1) = 1).
    Scalar tr_lam = sf_modified_trace(l, lam, rtop, t0);
    Scalar tr_pilam = sf_modified_trace(l, pilam, rtop, t0);

    SFPhiTable out;
    out.b_t = bt;
    out.b_pi_t = -bt;
    out.c_one = bt * t0 / tr_lam;
    out.c_pi_one = bt * t0 / tr_pilam;
    out.pi_one_sign = out.c_pi_one == out.c_one ? 1 : (out.c_pi_one == -out.c_one ? -1 : 0);
    if (out.pi_one_sign == 0) throw Error("unexpected phi normalisation on the Pi1 block");
    return out;
}

namespace {

// Coordinates of target in the span of the given matrices.
Vec matrix_coords(const std::vector<Matrix>& basis, const Matrix& target) {
    if (basis.empty()) throw Error("matrix_coords with empty basis");
    std::size_t n2 = target.rows() * target.cols();
    Matrix sys(n2, basis.size(), target.field());
    Vec rhs;
    rhs.reserve(n2);
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < target.rows(); ++r)
            for (std::size_t cc = 0; cc < target.cols(); ++cc)
                sys.at(r * target.cols() + cc, c) = basis[c].at(r, cc);
    for (std::size_t r = 0; r < target.rows(); ++r)
        for (std::size_t cc = 0; cc < target.cols(); ++cc) rhs.push_back(target.at(r, cc));
    SolveResult sol = solve_linear(sys, rhs);
    if (!sol.consistent) throw Error("matrix outside the hom span");
    return sol.solution;
}

}  // namespace

bool SFTraceVsTgReport::all_zero() const {
    for (const auto& [label, ok] : per_simple)
        if (!ok) return false;
    return true;
}

SFTraceVsTgReport sf_check_trace_vs_tg(const LambdaAlgebra& l, const Scalar& t0_in) {
    Scalar t0 = to_gauss(t0_in);
    SFPhiTable phi = sf_phi_table(l, t0);
    Matrix rtop = right_top_matrix(l);

    // G = Lambda + PiLambda + T + PiT; covers index 0..3.
    std::vector<std::pair<std::string, SFObject>> covers;
    covers.emplace_back("1", sf_lambda_object(l));
    covers.emplace_back("Pi1", sf_pi_lambda_object(l));
    covers.emplace_back("T", sf_t_object(l));
    covers.emplace_back("PiT", sf_pi_t_object(l));
    std::vector<std::pair<std::string, SFObject>> simples;
    simples.emplace_back("1", sf_one_object(l));
    simples.emplace_back("Pi1", sf_pi_one_object(l));
    simples.emplace_back("T", sf_t_object(l));
    simples.emplace_back("PiT", sf_pi_t_object(l));

    // Basis of End(G) by (target U, source V) component; cross-sector
    // components vanish, sector-1 off-diagonals carry no even maps.
    auto component_basis = [&](std::size_t u, std::size_t v) -> std::vector<Matrix> {
        const SFObject& pu = covers[u].second;
        const SFObject& pv = covers[v].second;
        if (pu.sector != pv.sector) return {};
        if (pu.sector == 1) {
            if (u != v) return {};
            return {Matrix::identity(1, GF)};
        }
        return hom_basis(*pv.module, *pu.module);
    };
    // Hom(P_U, M) for the left-hand side trace.
    auto hom_to_simple = [&](std::size_t u, std::size_t mi) -> std::vector<Matrix> {
        const SFObject& pu = covers[u].second;
        const SFObject& m = simples[mi].second;
        if (pu.sector != m.sector) return {};
        if (pu.sector == 1) {
            if (covers[u].first != simples[mi].first) return {};
            return {Matrix::identity(1, GF)};
        }
        return hom_basis(*pu.module, *m.module);
    };
    // The only nonzero phi_M block, as a matrix on P_M.
    auto phi_block = [&](std::size_t mi) -> Matrix {
        switch (mi) {
            case 0: return rtop.scaled(phi.c_one);
            case 1: return rtop.scaled(phi.c_pi_one);
            case 2: return Matrix::identity(1, GF).scaled(phi.b_t);
            default: return Matrix::identity(1, GF).scaled(phi.b_pi_t);
        }
    };
    Scalar denom = phi.b_t * t0;

    SFTraceVsTgReport rep;
    rep.pi_one_sign = phi.pi_one_sign;
    for (std::size_t mi = 0; mi < simples.size(); ++mi) {
        bool ok = true;
        for (std::size_t u = 0; u < covers.size() && ok; ++u)
            for (std::size_t v = 0; v < covers.size() && ok; ++v) {
                for (const Matrix& x : component_basis(u, v)) {
                    // LHS: trace of g -> g o x on Hom(G, M); only the
                    // diagonal component u == v contributes.
                    Scalar lhs = Scalar::zero(GF);
                    if (u == v) {
                        std::vector<Matrix> homs = hom_to_simple(u, mi);
                        if (!homs.empty()) {
                            for (std::size_t a = 0; a < homs.size(); ++a) {
                                Vec coords = matrix_coords(homs, homs[a] * x);
                                lhs += coords[a];
                            }
                        }
                    }
                    // RHS: t_G(phi_M o x) / (b_T t0); phi_M lives on P_M only.
                    Scalar rhs = Scalar::zero(GF);
                    if (u == v && u == mi) {
                        Matrix composite = phi_block(mi) * x;
                        rhs = sf_modified_trace(l, covers[u].second, composite, t0) / denom;
                    }
                    if (lhs != rhs) ok = false;
                }
            }
        rep.per_simple.emplace_back(simples[mi].first, ok);
    }
    return rep;
}

CommRing sf_grothendieck_ring(std::size_t n) {
    const FieldSpec qf = FieldSpec::rational();
    CommRing r;
    r.field = qf;
    r.labels = {"1", "Pi1", "T", "PiT"};
    Scalar h = Scalar::from_mpz(pow2(2 * n - 1), qf);
    Scalar one = Scalar::one(qf);
    r.mult.assign(16, {});
    auto set = [&](std::size_t i, std::size_t j, SparseVec v) {
        r.mult[i * 4 + j] = v;
        r.mult[j * 4 + i] = std::move(v);
    };
    // indices: 0 = [1], 1 = [Pi1], 2 = [T], 3 = [PiT]
    for (std::size_t j = 0; j < 4; ++j) set(0, j, {{j, one}});
    set(1, 1, {{0, one}});
    set(1, 2, {{3, one}});
    set(1, 3, {{2, one}});
    SparseVec lam_class{{0, h}, {1, h}};
    set(2, 2, lam_class);
    set(3, 3, lam_class);
    set(2, 3, lam_class);  // [T][PiT] = [PiLambda], same composition class
    r.unit = {one, Scalar::zero(qf), Scalar::zero(qf), Scalar::zero(qf)};

    Vec pclass{h, h, Scalar::zero(qf), Scalar::zero(qf)};
    Vec tclass{Scalar::zero(qf), Scalar::zero(qf), one, Scalar::zero(qf)};
    Vec sclass{Scalar::zero(qf), Scalar::zero(qf), Scalar::zero(qf), one};
    r.projectives = {{"P1", pclass}, {"PPi1", pclass}, {"PT", tclass}, {"PPiT", sclass}};
    for (const std::string& label : r.labels) r.dual.emplace_back(label, label);
    return r;
}

}  // namespace fftc
