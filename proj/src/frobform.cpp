#include "fftc/frobform.hpp"

namespace fftc {

namespace {

Vec flatten_mat(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return v;
}

}  // namespace

Scalar CentralForm::eval(const Vec& x) const {
    if (x.size() != coords.size()) throw DimensionError("central form length mismatch");
    Scalar s = Scalar::zero(algebra->field);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) s += x[i] * coords[i];
    return s;
}

CentralFormCheck check_central_form(const CentralForm& f) {
    const Algebra& a = *f.algebra;
    CentralFormCheck out;
    out.gram = Matrix(a.dim, a.dim, a.field);
    out.central = true;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Scalar ab = f.eval(a.multiply(a.basis_vec(i), a.basis_vec(j)));
            Scalar ba = f.eval(a.multiply(a.basis_vec(j), a.basis_vec(i)));
            if (ab != ba) out.central = false;
            out.gram.at(i, j) = ab;
        }
    out.nondegenerate = rank_of(out.gram) == a.dim;
    return out;
}

Copairing copairing(const CentralForm& f) {
    const Algebra& a = *f.algebra;
    CentralFormCheck chk = check_central_form(f);
    if (!chk.central) throw Error("copairing of a non-central form");
    if (!chk.nondegenerate) throw DegenerateFormError("copairing of a degenerate form");
    Matrix ginv = mat_inverse(chk.gram);

    Copairing gamma;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            if (!ginv.at(i, j).is_zero())
                gamma.tensor.emplace_back(
                    [&] {
                        Vec l(a.dim, Scalar::zero(a.field));
                        l[i] = ginv.at(i, j);
                        return l;
                    }(),
                    a.basis_vec(j));

    // Symmetry of the tensor (as a dim x dim coefficient matrix).
    Matrix coeff(a.dim, a.dim, a.field);
    for (const auto& [l, r] : gamma.tensor)
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) coeff.at(i, j) += l[i] * r[j];
    if (coeff != coeff.transpose()) throw Error("copairing is not symmetric");

    // Resolution identities on every basis element.
    for (std::size_t k = 0; k < a.dim; ++k) {
        Vec bk = a.basis_vec(k);
        Vec left(a.dim, Scalar::zero(a.field));
        Vec right(a.dim, Scalar::zero(a.field));
        for (const auto& [l, r] : gamma.tensor) {
            Scalar cl = f.eval(a.multiply(bk, l));
            for (std::size_t t = 0; t < a.dim; ++t) left[t] += cl * r[t];
            Scalar cr = f.eval(a.multiply(r, bk));
            for (std::size_t t = 0; t < a.dim; ++t) right[t] += cr * l[t];
        }
        if (left != bk || right != bk) throw Error("copairing fails the resolution identity");
    }
    return gamma;
}

namespace {

Vec tau_with(const Algebra& a, const Copairing& gamma, const Vec& x) {
    Vec out(a.dim, Scalar::zero(a.field));
    for (const auto& [l, r] : gamma.tensor) {
        Vec term = a.multiply(a.multiply(l, x), r);
        for (std::size_t t = 0; t < a.dim; ++t) out[t] += term[t];
    }
    for (std::size_t i = 0; i < a.dim; ++i) {
        Vec bi = a.basis_vec(i);
        if (a.multiply(out, bi) != a.multiply(bi, out)) throw Error("tau output is not central");
    }
    return out;
}

}  // namespace

Vec tau(const CentralForm& f, const Vec& x) { return tau_with(*f.algebra, copairing(f), x); }

std::vector<Vec> higman_basis(const Algebra& a, const CentralForm& f) {
    Copairing gamma = copairing(f);
    std::vector<Vec> images;
    for (std::size_t i = 0; i < a.dim; ++i) images.push_back(tau_with(a, gamma, a.basis_vec(i)));
    return span_basis(images, a.dim, a.field);
}

std::vector<Vec> reynolds_basis(const Algebra& a, const std::vector<Vec>& radical) {
    std::vector<Vec> z = center(a);
    if (z.empty()) return {};
    // Solve for combinations of the center basis annihilating the radical.
    Matrix sys(radical.size() * a.dim, z.size(), a.field);
    for (std::size_t r = 0; r < radical.size(); ++r)
        for (std::size_t c = 0; c < z.size(); ++c) {
            Vec prod = a.multiply(z[c], radical[r]);
            for (std::size_t t = 0; t < a.dim; ++t) sys.at(r * a.dim + t, c) = prod[t];
        }
    std::vector<Vec> out;
    for (const Vec& combo : kernel_basis(sys)) {
        Vec v(a.dim, Scalar::zero(a.field));
        for (std::size_t c = 0; c < z.size(); ++c)
            for (std::size_t t = 0; t < a.dim; ++t) v[t] += combo[c] * z[c][t];
        out.push_back(std::move(v));
    }
    return out;
}

CentralForm character_form(const AlgModule& m) {
    CentralForm f;
    f.algebra = m.algebra;
    for (std::size_t i = 0; i < m.algebra->dim; ++i) f.coords.push_back(m.action[i].trace());
    return f;
}

namespace {

// zeta(z) = eps(z . -) as a coordinate vector of the resulting form.
Vec zeta(const Algebra& a, const CentralForm& f, const Vec& z) {
    Vec out(a.dim, Scalar::zero(a.field));
    for (std::size_t i = 0; i < a.dim; ++i) out[i] = f.eval(a.multiply(z, a.basis_vec(i)));
    return out;
}

}  // namespace

IdealReport ideal_report(const Algebra& a, const CentralForm& f,
                         const std::vector<AlgModule>& simples,
                         const std::vector<AlgModule>& projectives) {
    CentralFormCheck chk = check_central_form(f);
    if (!chk.central) throw Error("ideal_report requires a central form");
    if (!chk.nondegenerate) throw DegenerateFormError("ideal_report requires a nondegenerate form");

    std::vector<Vec> rad = radical_char0(a);
    std::vector<Vec> z = center(a);
    std::vector<Vec> rey = reynolds_basis(a, rad);
    std::vector<Vec> hig = higman_basis(a, f);

    IdealReport rep;
    rep.dim_center = z.size();
    rep.dim_rey = rey.size();
    rep.dim_hig = hig.size();
    rep.semisimple = rad.empty();

    rep.chain = true;
    for (const Vec& h : hig)
        if (!in_span(rey, h, a.field)) rep.chain = false;
    for (const Vec& r : rey)
        if (!in_span(z, r, a.field)) rep.chain = false;

    std::vector<Vec> r_span, i_span;
    for (const AlgModule& s : simples) r_span.push_back(character_form(s).coords);
    for (const AlgModule& p : projectives) i_span.push_back(character_form(p).coords);
    rep.dim_r = span_rank(r_span, a.dim, a.field);
    rep.dim_i = span_rank(i_span, a.dim, a.field);
    rep.i_equals_r = same_span(r_span, i_span, a.dim, a.field);

    std::vector<Vec> zeta_hig, zeta_rey;
    for (const Vec& h : hig) zeta_hig.push_back(zeta(a, f, h));
    for (const Vec& r : rey) zeta_rey.push_back(zeta(a, f, r));
    rep.zeta_hig_equals_i = same_span(zeta_hig, i_span, a.dim, a.field);
    rep.zeta_rey_equals_r = same_span(zeta_rey, r_span, a.dim, a.field);

    Matrix cartan = cartan_matrix(a, primitive_idempotents(a));
    rep.rank_cartan = rank_of(cartan);
    rep.hig_rank_matches_cartan = rep.rank_cartan == rep.dim_hig;
    return rep;
}

Scalar TraceAssignment::eval(const std::string& label, const Matrix& endo) const {
    auto it = traces.find(label);
    if (it == traces.end()) throw Error("no trace assigned to projective '" + label + "'");
    const Entry& e = it->second;
    std::vector<Vec> flat;
    for (const Matrix& h : e.hom_basis) flat.push_back(flatten_mat(h));
    Matrix sys(flat.empty() ? 0 : flat.front().size(), flat.size(), endo.field());
    for (std::size_t c = 0; c < flat.size(); ++c)
        for (std::size_t r = 0; r < flat[c].size(); ++r) sys.at(r, c) = flat[c][r];
    SolveResult sol = solve_linear(sys, flatten_mat(endo));
    if (!sol.consistent) throw Error("endomorphism outside the recorded hom basis");
    Scalar out = Scalar::zero(endo.field());
    for (std::size_t c = 0; c < flat.size(); ++c) out += sol.solution[c] * e.functional[c];
    return out;
}

Scalar extend_trace(const TraceAssignment& t, const std::vector<ProjSummand>& parts,
                    const Matrix& f) {
    if (parts.empty()) throw NotProjectiveError("extend_trace needs a projective decomposition");
    Scalar out = Scalar::zero(f.field());
    for (const ProjSummand& p : parts) {
        Matrix comp = p.project * f * p.embed;
        out += t.eval(p.label, comp);
    }
    return out;
}

}  // namespace fftc
