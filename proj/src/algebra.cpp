#include "fftc/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace fftc {

namespace {

Vec vzero(std::size_t n, const FieldSpec& f) { return Vec(n, Scalar::zero(f)); }

bool vis_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec vadd(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vsub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vscale(const Vec& a, const Scalar& s) {
    Vec r = a;
    for (auto& x : r) x *= s;
    return r;
}

// Coordinates with respect to a fixed spanning list, by tracking row
// operations through an appended identity block.
class CoordSolver {
public:
    CoordSolver(const std::vector<Vec>& basis, std::size_t dim, const FieldSpec& field)
        : dim_(dim), n_(basis.size()), span_(dim + basis.size(), field), field_(field) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Vec ext = basis[i];
            ext.resize(dim + basis.size(), Scalar::zero(field));
            ext[dim + i] = Scalar::one(field);
            if (!span_.insert(std::move(ext)))
                throw Error("CoordSolver: dependent spanning vector " + std::to_string(i));
        }
    }

    Vec coords(const Vec& v) const {
        Vec ext = v;
        ext.resize(dim_ + n_, Scalar::zero(field_));
        Vec res = span_.reduce(std::move(ext));
        for (std::size_t j = 0; j < dim_; ++j)
            if (!res[j].is_zero()) throw Error("CoordSolver: vector outside span");
        Vec c(n_, Scalar::zero(field_));
        for (std::size_t j = 0; j < n_; ++j) c[j] = -res[dim_ + j];
        return c;
    }

private:
    std::size_t dim_, n_;
    IncrementalSpan span_;
    FieldSpec field_;
};

}  // namespace

Vec Algebra::basis_vec(std::size_t i) const {
    Vec v = vzero(dim, field);
    v[i] = Scalar::one(field);
    return v;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim) throw DimensionError("algebra multiply length mismatch");
    Vec r = vzero(dim, field);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, s] : product_of_basis(i, j)) r[k] += c * s;
        }
    }
    return r;
}

Matrix Algebra::left_mult(const Vec& x) const {
    Matrix m(dim, dim, field);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& [k, s] : product_of_basis(i, j)) m.at(k, j) += x[i] * s;
    }
    return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
    Matrix m(dim, dim, field);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& [k, s] : product_of_basis(j, i)) m.at(k, j) += x[i] * s;
    }
    return m;
}

Parity Algebra::parity_of(const Vec& x) const {
    if (!grading) throw Error("parity_of on ungraded algebra");
    bool have = false;
    Parity p = Parity::Even;
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        if (!have) {
            p = (*grading)[i];
            have = true;
        } else if ((*grading)[i] != p) {
            throw Error("parity_of on inhomogeneous element");
        }
    }
    return p;
}

Algebra Algebra::opposite() const {
    Algebra o = *this;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            std::swap(o.mult[i * dim + j], o.mult[j * dim + i]);
    return o;
}

ValidationReport validate_algebra(const Algebra& a) {
    ValidationReport rep;
    if (a.mult.size() != a.dim * a.dim) {
        rep.violations.push_back("structure constant table has wrong size");
        return rep;
    }
    if (a.unit.size() != a.dim) {
        rep.violations.push_back("unit vector has wrong length");
        return rep;
    }
    if (a.grading && a.grading->size() != a.dim)
        rep.violations.push_back("grading vector has wrong length");

    for (std::size_t i = 0; i < a.dim; ++i) {
        Vec bi = a.basis_vec(i);
        if (a.multiply(a.unit, bi) != bi)
            rep.violations.push_back("unit fails on the left of basis element " + std::to_string(i));
        if (a.multiply(bi, a.unit) != bi)
            rep.violations.push_back("unit fails on the right of basis element " + std::to_string(i));
    }
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec bij = a.multiply(a.basis_vec(i), a.basis_vec(j));
            for (std::size_t k = 0; k < a.dim; ++k) {
                Vec lhs = a.multiply(bij, a.basis_vec(k));
                Vec rhs = a.multiply(a.basis_vec(i), a.multiply(a.basis_vec(j), a.basis_vec(k)));
                if (lhs != rhs)
                    rep.violations.push_back("associativity fails at (" + std::to_string(i) + "," +
                                             std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    if (a.grading && a.grading->size() == a.dim) {
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                Parity want = (*a.grading)[i] + (*a.grading)[j];
                for (const auto& [k, s] : a.product_of_basis(i, j))
                    if (!s.is_zero() && (*a.grading)[k] != want)
                        rep.violations.push_back("product of basis elements " + std::to_string(i) + "," +
                                                 std::to_string(j) + " is not parity homogeneous");
            }
        if (!vis_zero(a.unit)) {
            bool unit_even = true;
            for (std::size_t k = 0; k < a.dim; ++k)
                if (!a.unit[k].is_zero() && (*a.grading)[k] != Parity::Even) unit_even = false;
            if (!unit_even) rep.violations.push_back("unit is not even");
        }
    }
    return rep;
}

Matrix AlgModule::act(const Vec& a) const {
    if (a.size() != algebra->dim) throw DimensionError("module act length mismatch");
    Matrix m(dim, dim, algebra->field);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        m = m + action[i].scaled(a[i]);
    }
    return m;
}

SuperSpace AlgModule::super_space() const {
    if (!grading) throw Error("super_space of ungraded module");
    SuperSpace s;
    s.field = algebra->field;
    for (Parity p : *grading)
        (p == Parity::Even ? s.even_dim : s.odd_dim)++;
    return s;
}

ValidationReport validate_module(const AlgModule& m) {
    ValidationReport rep;
    const Algebra& a = *m.algebra;
    if (m.action.size() != a.dim) {
        rep.violations.push_back("module has wrong number of action matrices");
        return rep;
    }
    for (const Matrix& mat : m.action)
        if (mat.rows() != m.dim || mat.cols() != m.dim) {
            rep.violations.push_back("action matrix has wrong shape");
            return rep;
        }
    if (m.act(a.unit) != Matrix::identity(m.dim, a.field))
        rep.violations.push_back("unit does not act as the identity");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Matrix lhs = m.action[i] * m.action[j];
            Matrix rhs = m.act(a.multiply(a.basis_vec(i), a.basis_vec(j)));
            if (lhs != rhs)
                rep.violations.push_back("action is not multiplicative at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
        }
    if (m.grading && a.grading) {
        if (m.grading->size() != m.dim) {
            rep.violations.push_back("module grading has wrong length");
            return rep;
        }
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t r = 0; r < m.dim; ++r)
                for (std::size_t c = 0; c < m.dim; ++c)
                    if (!m.action[i].at(r, c).is_zero() &&
                        (*m.grading)[r] != (*m.grading)[c] + (*a.grading)[i]) {
                        rep.violations.push_back("action of basis element " + std::to_string(i) +
                                                 " is not parity homogeneous");
                        r = m.dim;  // one report per element is enough
                        break;
                    }
    }
    return rep;
}

AlgModule regular_module(const std::shared_ptr<const Algebra>& a) {
    AlgModule m;
    m.algebra = a;
    m.dim = a->dim;
    m.action.reserve(a->dim);
    for (std::size_t i = 0; i < a->dim; ++i) {
        Matrix mat(a->dim, a->dim, a->field);
        for (std::size_t j = 0; j < a->dim; ++j)
            for (const auto& [k, s] : a->product_of_basis(i, j)) mat.at(k, j) += s;
        m.action.push_back(std::move(mat));
    }
    m.grading = a->grading;
    return m;
}

std::vector<Vec> center(const Algebra& a) {
    Matrix stacked(a.dim * a.dim, a.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i) {
        Matrix d = a.left_mult(a.basis_vec(i)) - a.right_mult(a.basis_vec(i));
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t c = 0; c < a.dim; ++c) stacked.at(i * a.dim + r, c) = d.at(r, c);
    }
    return kernel_basis(stacked);
}

std::vector<Vec> radical_char0(const Algebra& a) {
    if (!a.field.is_char_zero())
        throw Error("radical computation requires a characteristic-zero field");
    std::vector<Matrix> lmat;
    lmat.reserve(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) lmat.push_back(a.left_mult(a.basis_vec(i)));
    // Trace form T_{xy} = tr(L_x L_y) without forming full products.
    Matrix tform(a.dim, a.dim, a.field);
    for (std::size_t x = 0; x < a.dim; ++x)
        for (std::size_t y = 0; y < a.dim; ++y) {
            Scalar t = Scalar::zero(a.field);
            for (std::size_t r = 0; r < a.dim; ++r)
                for (std::size_t k = 0; k < a.dim; ++k) {
                    const Scalar& u = lmat[x].at(r, k);
                    if (u.is_zero()) continue;
                    const Scalar& v = lmat[y].at(k, r);
                    if (!v.is_zero()) t += u * v;
                }
            tform.at(x, y) = t;
        }
    std::vector<Vec> rad = kernel_basis(tform);

    // Sanity: the kernel must be a two-sided ideal.
    IncrementalSpan sp(a.dim, a.field);
    for (const Vec& r : rad) sp.insert(r);
    for (const Vec& r : rad)
        for (std::size_t i = 0; i < a.dim; ++i) {
            if (!sp.contains(a.multiply(a.basis_vec(i), r)) ||
                !sp.contains(a.multiply(r, a.basis_vec(i))))
                throw Error("radical candidate is not an ideal");
        }
    return rad;
}

namespace {

std::string poly_str(const std::vector<Scalar>& lower) {
    std::ostringstream os;
    os << "t^" << lower.size();
    for (std::size_t k = lower.size(); k-- > 0;)
        if (!lower[k].is_zero()) os << " + (" << lower[k].str() << ")*t^" << k;
    return os.str();
}

using GInt = std::pair<mpz_class, mpz_class>;  // Gaussian integer a + b i

GInt gmul(const GInt& x, const GInt& y) {
    return {x.first * y.first - x.second * y.second, x.first * y.second + x.second * y.first};
}

struct RootBudget {
    long steps = 0;
    void tick(long n = 1) {
        steps += n;
        if (steps > 4000000) throw ResourceError("root search budget exceeded");
    }
};

// Integer roots of a monic polynomial with Gaussian-integer coefficients
// h(u) = u^d + sum h_k u^k, via divisor candidates of h(0).
std::vector<GInt> gaussian_integer_roots(std::vector<GInt> h, bool allow_imag, RootBudget& budget) {
    std::vector<GInt> roots;
    auto is_root = [&](const GInt& u) {
        GInt acc{1, 0};
        for (std::size_t k = h.size(); k-- > 0;) acc = {gmul(acc, u).first + h[k].first, gmul(acc, u).second + h[k].second};
        return acc.first == 0 && acc.second == 0;
    };
    while (!h.empty() && h[0].first == 0 && h[0].second == 0) {
        roots.push_back({0, 0});
        h.erase(h.begin());
    }
    if (h.empty()) return roots;

    mpz_class norm0 = h[0].first * h[0].first + h[0].second * h[0].second;
    std::set<std::pair<std::string, std::string>> seen;
    auto try_candidate = [&](const mpz_class& x, const mpz_class& y) {
        if (!allow_imag && y != 0) return;
        if (!seen.insert({x.get_str(), y.get_str()}).second) return;
        budget.tick();
        if (is_root({x, y})) roots.push_back({x, y});
    };
    auto try_norm = [&](const mpz_class& m) {
        // all Gaussian integers of norm m
        mpz_class x = 0;
        while (x * x <= m) {
            budget.tick();
            mpz_class y2 = m - x * x;
            mpz_class y = sqrt(y2);
            if (y * y == y2) {
                try_candidate(x, y);
                try_candidate(x, -y);
                try_candidate(-x, y);
                try_candidate(-x, -y);
                try_candidate(y, x);
                try_candidate(y, -x);
                try_candidate(-y, x);
                try_candidate(-y, -x);
            }
            ++x;
        }
    };
    // norms of candidate roots divide norm0
    mpz_class d = 1;
    while (d * d <= norm0) {
        budget.tick();
        if (norm0 % d == 0) {
            try_norm(d);
            try_norm(norm0 / d);
        }
        ++d;
    }
    return roots;
}

}  // namespace

std::vector<Scalar> roots_in_field(const std::vector<Scalar>& lower, const FieldSpec& field) {
    std::size_t d = lower.size();
    std::vector<Scalar> roots;
    if (d == 0) return roots;

    if (field.kind == FieldKind::PrimeField) {
        if (field.p > 1000000) throw ResourceError("root search over large prime field");
        for (mpz_class r = 0; r < field.p; ++r) {
            Scalar u = Scalar::from_mpz(r, field);
            Scalar acc = Scalar::one(field);
            for (std::size_t k = d; k-- > 0;) acc = acc * u + lower[k];
            if (acc.is_zero()) roots.push_back(u);
        }
        return roots;
    }

    // Clear denominators: with L = lcm of all denominators the substitution
    // u = L t turns f into the monic integral h(u) = u^d + sum c_k L^{d-k} u^k.
    mpz_class L = 1;
    for (const Scalar& c : lower) {
        L = lcm(L, c.re().get_den());
        if (field.kind == FieldKind::GaussianRational) L = lcm(L, c.im().get_den());
    }
    std::vector<GInt> h(d);
    mpz_class pw = 1;  // L^{d-k}, built from k = d-1 downward
    for (std::size_t k = d; k-- > 0;) {
        pw *= L;
        mpq_class re = lower[k].re() * pw;
        h[k].first = re.get_num();
        if (field.kind == FieldKind::GaussianRational) {
            mpq_class im = lower[k].im() * pw;
            h[k].second = im.get_num();
        }
    }
    RootBudget budget;
    std::vector<GInt> ints =
        gaussian_integer_roots(h, field.kind == FieldKind::GaussianRational, budget);
    for (const GInt& u : ints) {
        mpq_class re(u.first, L), im(u.second, L);
        re.canonicalize();
        im.canonicalize();
        if (field.kind == FieldKind::GaussianRational)
            roots.push_back(Scalar::gaussian(re, im));
        else
            roots.push_back(Scalar::from_mpq(re, field));
    }
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& a, const Scalar& b) { return a.str() < b.str(); });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Scalar> minimal_polynomial(const Algebra& a, const Vec& unit, const Vec& x) {
    std::vector<Vec> pows{unit};
    Vec cur = unit;
    IncrementalSpan sp(a.dim, a.field);
    sp.insert(unit);
    while (true) {
        cur = a.multiply(cur, x);
        if (!sp.insert(cur)) break;
        pows.push_back(cur);
        if (pows.size() > a.dim + 1) throw Error("minimal polynomial does not terminate");
    }
    CoordSolver solver(pows, a.dim, a.field);
    Vec c = solver.coords(cur);
    for (auto& s : c) s = -s;
    return c;
}

namespace {

std::vector<Vec> lagrange_idempotents(const Algebra& a, const Vec& unit, const Vec& x,
                                      const std::vector<Scalar>& roots) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Vec v = unit;
        Scalar denom = Scalar::one(a.field);
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i) continue;
            v = a.multiply(v, vsub(x, vscale(unit, roots[j])));
            denom *= roots[i] - roots[j];
        }
        out.push_back(vscale(v, denom.inverse()));
    }
    return out;
}

// Splits z (not a multiple of unit) inside a commutative corner: full set
// of root idempotents, or NonSplitError.
std::vector<Vec> split_by_element(const Algebra& a, const Vec& unit, const Vec& z) {
    std::vector<Scalar> mu = minimal_polynomial(a, unit, z);
    std::vector<Scalar> roots = roots_in_field(mu, a.field);
    if (roots.size() != mu.size())
        throw NonSplitError("minimal polynomial " + poly_str(mu) + " does not split over " +
                            a.field.name());
    return lagrange_idempotents(a, unit, z, roots);
}

// Basis of e S e for S spanned by the algebra basis, inside a semisimple a.
std::vector<Vec> corner_basis(const Algebra& a, const Vec& e) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < a.dim; ++i)
        gens.push_back(a.multiply(a.multiply(e, a.basis_vec(i)), e));
    return span_basis(gens, a.dim, a.field);
}

// First basis vector of `space` that is not a scalar multiple of e.
Vec pick_independent(const std::vector<Vec>& space, const Vec& e, std::size_t dim,
                     const FieldSpec& field) {
    for (const Vec& v : space)
        if (span_rank({e, v}, dim, field) == 2) return v;
    throw Error("no independent element found in corner");
}

// Complete set of rank-one idempotents of the block c (a semisimple).
std::vector<Vec> split_block(const Algebra& a, Vec c) {
    std::vector<Vec> out;
    while (!vis_zero(c)) {
        Vec e = c;
        while (true) {
            std::vector<Vec> s = corner_basis(a, e);
            if (s.size() == 1) break;
            Vec x = pick_independent(s, e, a.dim, a.field);
            std::vector<Vec> parts = split_by_element(a, e, x);
            e = parts.front();
        }
        out.push_back(e);
        c = vsub(c, e);
    }
    return out;
}

struct Quotient {
    Algebra alg;                       // A / rad
    std::vector<std::size_t> compl_;   // ambient index per quotient basis vector
    IncrementalSpan rad_span;
    Vec project(const Vec& v, const Algebra& amb) const {
        Vec res = rad_span.reduce(v);
        Vec out(alg.dim, Scalar::zero(amb.field));
        for (std::size_t j = 0; j < alg.dim; ++j) out[j] = res[compl_[j]];
        return out;
    }
    Vec section(const Vec& q, const Algebra& amb) const {
        Vec out(amb.dim, Scalar::zero(amb.field));
        for (std::size_t j = 0; j < alg.dim; ++j) out[compl_[j]] = q[j];
        return out;
    }
};

Quotient quotient_by(const Algebra& a, const std::vector<Vec>& rad) {
    Quotient q{Algebra{}, {}, IncrementalSpan(a.dim, a.field)};
    for (const Vec& r : rad) q.rad_span.insert(r);
    std::vector<bool> is_pivot(a.dim, false);
    for (std::size_t p : q.rad_span.pivots()) is_pivot[p] = true;
    for (std::size_t j = 0; j < a.dim; ++j)
        if (!is_pivot[j]) q.compl_.push_back(j);

    Algebra& qa = q.alg;
    qa.dim = q.compl_.size();
    qa.field = a.field;
    for (std::size_t j : q.compl_) qa.basis_names.push_back(a.basis_names[j]);
    if (a.grading) {
        std::vector<Parity> g;
        for (std::size_t j : q.compl_) g.push_back((*a.grading)[j]);
        qa.grading = g;
    }
    qa.mult.resize(qa.dim * qa.dim);
    for (std::size_t i = 0; i < qa.dim; ++i)
        for (std::size_t j = 0; j < qa.dim; ++j) {
            Vec prod = q.project(a.multiply(a.basis_vec(q.compl_[i]), a.basis_vec(q.compl_[j])), a);
            SparseVec sv;
            for (std::size_t k = 0; k < qa.dim; ++k)
                if (!prod[k].is_zero()) sv.emplace_back(k, prod[k]);
            qa.mult[i * qa.dim + j] = std::move(sv);
        }
    qa.unit = q.project(a.unit, a);
    return q;
}

}  // namespace

IdempotentSet primitive_idempotents(const Algebra& a) {
    std::vector<Vec> rad = radical_char0(a);
    Quotient q = quotient_by(a, rad);
    const Algebra& qa = q.alg;

    // Primitive central idempotents of the semisimple quotient.
    std::vector<Vec> zbasis = center(qa);
    std::deque<Vec> work{qa.unit};
    std::vector<Vec> central;
    while (!work.empty()) {
        Vec e = work.front();
        work.pop_front();
        std::vector<Vec> ze;
        for (const Vec& z : zbasis) ze.push_back(qa.multiply(z, e));
        ze = span_basis(ze, qa.dim, qa.field);
        if (ze.size() <= 1) {
            central.push_back(e);
            continue;
        }
        Vec z = pick_independent(ze, e, qa.dim, qa.field);
        for (Vec& part : split_by_element(qa, e, z)) work.push_back(std::move(part));
    }

    // Rank-one idempotents per block, then lifting along the quotient map.
    IdempotentSet out;
    Vec s = vzero(a.dim, a.field);
    for (std::size_t block = 0; block < central.size(); ++block) {
        std::string label = "U" + std::to_string(block);
        out.representatives.push_back(out.elements.size());
        for (const Vec& ebar : split_block(qa, central[block])) {
            Vec g = q.section(ebar, a);
            Vec u = vsub(a.unit, s);
            g = a.multiply(a.multiply(u, g), u);
            for (int iter = 0;; ++iter) {
                Vec g2 = a.multiply(g, g);
                if (g2 == g) break;
                if (iter > 200) throw Error("idempotent lifting did not converge");
                // Newton step g <- 3g^2 - 2g^3
                g = vsub(vscale(g2, Scalar::from_int(3, a.field)),
                         vscale(a.multiply(g2, g), Scalar::from_int(2, a.field)));
            }
            s = vadd(s, g);
            out.elements.push_back(std::move(g));
            out.labels.push_back(label);
        }
    }
    if (s != a.unit) throw Error("lifted idempotents do not sum to the unit");
    for (std::size_t i = 0; i < out.elements.size(); ++i)
        for (std::size_t j = 0; j < out.elements.size(); ++j)
            if (i != j && !vis_zero(a.multiply(out.elements[i], out.elements[j])))
                throw Error("lifted idempotents are not orthogonal");
    return out;
}

Matrix cartan_matrix(const Algebra& a, const IdempotentSet& idems) {
    std::size_t n = idems.representatives.size();
    Matrix c(n, n, FieldSpec::rational());
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            const Vec& eu = idems.elements[idems.representatives[u]];
            const Vec& ev = idems.elements[idems.representatives[v]];
            IncrementalSpan sp(a.dim, a.field);
            for (std::size_t i = 0; i < a.dim; ++i)
                sp.insert(a.multiply(a.multiply(eu, a.basis_vec(i)), ev));
            c.at(u, v) = Scalar::from_int(static_cast<long>(sp.rank()), FieldSpec::rational());
        }
    return c;
}

std::vector<Matrix> hom_basis(const AlgModule& m, const AlgModule& n) {
    if (m.algebra->field != n.algebra->field) throw FieldMismatchError("hom_basis field mismatch");
    if (m.algebra->dim != n.algebra->dim) throw DimensionError("hom_basis over different algebras");
    const FieldSpec& f = m.algebra->field;
    bool graded = m.is_graded() && n.is_graded();

    // Variables: entries X_{r,c}; in the graded case only parity-preserving ones.
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    std::vector<std::size_t> varindex(n.dim * m.dim, SIZE_MAX);
    for (std::size_t r = 0; r < n.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c) {
            if (graded && (*n.grading)[r] != (*m.grading)[c]) continue;
            varindex[r * m.dim + c] = vars.size();
            vars.emplace_back(r, c);
        }

    IncrementalSpan constraints(vars.size(), f);
    for (std::size_t i = 0; i < m.algebra->dim; ++i) {
        const Matrix& am = m.action[i];
        const Matrix& an = n.action[i];
        for (std::size_t r = 0; r < n.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) {
                Vec row(vars.size(), Scalar::zero(f));
                bool nonzero = false;
                for (std::size_t k = 0; k < m.dim; ++k) {
                    std::size_t vi = varindex[r * m.dim + k];
                    if (vi == SIZE_MAX || am.at(k, c).is_zero()) continue;
                    row[vi] += am.at(k, c);
                    nonzero = true;
                }
                for (std::size_t k = 0; k < n.dim; ++k) {
                    std::size_t vi = varindex[k * m.dim + c];
                    if (vi == SIZE_MAX || an.at(r, k).is_zero()) continue;
                    row[vi] -= an.at(r, k);
                    nonzero = true;
                }
                if (nonzero) constraints.insert(std::move(row));
            }
    }
    Matrix cm = constraints.rows().empty() ? Matrix(0, vars.size(), f)
                                           : Matrix::from_rows(constraints.rows(), f);
    std::vector<Vec> ker = kernel_basis(cm);

    std::vector<Matrix> out;
    for (const Vec& k : ker) {
        Matrix h(n.dim, m.dim, f);
        for (std::size_t v = 0; v < vars.size(); ++v) h.at(vars[v].first, vars[v].second) = k[v];
        out.push_back(std::move(h));
    }
    return out;
}

DecomposeFreeResult decompose_local_free(const AlgModule& m, const std::vector<Vec>& radical) {
    if (!m.is_graded()) throw Error("decompose_local_free requires a graded module");
    const Algebra& a = *m.algebra;

    IncrementalSpan radm(m.dim, a.field);
    for (const Vec& r : radical) {
        Matrix act = m.act(r);
        for (std::size_t j = 0; j < m.dim; ++j) radm.insert(act.col(j));
    }
    std::vector<bool> is_pivot(m.dim, false);
    for (std::size_t p : radm.pivots()) is_pivot[p] = true;

    DecomposeFreeResult out;
    for (std::size_t j = 0; j < m.dim; ++j) {
        if (is_pivot[j]) continue;
        Vec g(m.dim, Scalar::zero(a.field));
        g[j] = Scalar::one(a.field);
        Parity p = (*m.grading)[j];
        (p == Parity::Even ? out.even_gens : out.odd_gens)++;
        out.generators.push_back(std::move(g));
        out.generator_parity.push_back(p);
    }
    std::size_t gens = out.even_gens + out.odd_gens;
    if (gens * a.dim != m.dim)
        throw NotProjectiveError("dimension " + std::to_string(m.dim) + " is not " +
                                 std::to_string(gens) + " times the algebra dimension");
    IncrementalSpan generated(m.dim, a.field);
    for (const Vec& g : out.generators)
        for (std::size_t i = 0; i < a.dim; ++i) generated.insert(m.action[i].apply(g));
    if (generated.rank() != m.dim)
        throw NotProjectiveError("lifted generators do not generate the module");
    return out;
}

AlgModule submodule(const AlgModule& m, const Matrix& basis) {
    const Algebra& a = *m.algebra;
    AlgModule s;
    s.algebra = m.algebra;
    s.dim = basis.cols();
    for (std::size_t i = 0; i < a.dim; ++i) {
        Matrix img = m.action[i] * basis;
        Matrix x(s.dim, s.dim, a.field);
        for (std::size_t c = 0; c < s.dim; ++c) {
            SolveResult sol = solve_linear(basis, img.col(c));
            if (!sol.consistent) throw Error("submodule basis is not invariant");
            for (std::size_t r = 0; r < s.dim; ++r) x.at(r, c) = sol.solution[r];
        }
        s.action.push_back(std::move(x));
    }
    if (m.grading) {
        std::vector<Parity> g;
        for (std::size_t c = 0; c < s.dim; ++c) {
            bool have = false;
            Parity p = Parity::Even;
            for (std::size_t r = 0; r < m.dim; ++r) {
                if (basis.at(r, c).is_zero()) continue;
                if (!have) {
                    p = (*m.grading)[r];
                    have = true;
                } else if ((*m.grading)[r] != p) {
                    throw Error("submodule basis vector is not parity homogeneous");
                }
            }
            g.push_back(p);
        }
        s.grading = g;
    }
    return s;
}

namespace {

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return v;
}

// Abstract algebra on a basis of endomorphism (or more generally closed)
// matrix spaces, with coordinates tracked by a CoordSolver.
Algebra abstract_algebra(const std::vector<Matrix>& basis, const Matrix& unit, const FieldSpec& f) {
    std::size_t d = basis.size();
    std::size_t n2 = basis.empty() ? 0 : basis.front().rows() * basis.front().cols();
    std::vector<Vec> flat;
    for (const Matrix& b : basis) flat.push_back(flatten(b));
    CoordSolver solver(flat, n2, f);

    Algebra a;
    a.dim = d;
    a.field = f;
    for (std::size_t i = 0; i < d; ++i) a.basis_names.push_back("h" + std::to_string(i));
    a.mult.resize(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec c = solver.coords(flatten(basis[i] * basis[j]));
            SparseVec sv;
            for (std::size_t k = 0; k < d; ++k)
                if (!c[k].is_zero()) sv.emplace_back(k, c[k]);
            a.mult[i * d + j] = std::move(sv);
        }
    a.unit = solver.coords(flatten(unit));
    return a;
}

bool summand_isomorphic(const AlgModule& s, const AlgModule& c) {
    if (s.dim != c.dim) return false;
    std::vector<Matrix> fs = hom_basis(s, c);
    if (fs.empty()) return false;
    std::vector<Matrix> gs = hom_basis(c, s);
    if (gs.empty()) return false;

    std::vector<Matrix> ends = hom_basis(s, s);
    Algebra es = abstract_algebra(ends, Matrix::identity(s.dim, s.algebra->field), s.algebra->field);
    std::vector<Vec> rad = radical_char0(es);
    IncrementalSpan radspan(es.dim, es.field);
    for (const Vec& r : rad) radspan.insert(r);

    std::vector<Vec> flat;
    for (const Matrix& e : ends) flat.push_back(flatten(e));
    CoordSolver solver(flat, s.dim * s.dim, es.field);
    for (const Matrix& g : gs)
        for (const Matrix& f : fs) {
            Vec coords = solver.coords(flatten(g * f));
            if (!radspan.contains(coords)) return true;
        }
    return false;
}

}  // namespace

DecompositionResult decompose_module(const AlgModule& m,
                                     const std::vector<std::pair<std::string, AlgModule>>& candidates) {
    const FieldSpec& f = m.algebra->field;
    std::vector<Matrix> ends = hom_basis(m, m);
    Algebra e = abstract_algebra(ends, Matrix::identity(m.dim, f), f);
    IdempotentSet idems = primitive_idempotents(e);

    DecompositionResult out;
    std::map<std::string, std::size_t> counts;
    std::vector<std::string> order;
    for (const Vec& coords : idems.elements) {
        Matrix em(m.dim, m.dim, f);
        for (std::size_t k = 0; k < ends.size(); ++k)
            if (!coords[k].is_zero()) em = em + ends[k].scaled(coords[k]);

        // Homogeneous spanning set of the image of the idempotent.
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < m.dim; ++j) {
            Vec col = em.col(j);
            if (!m.grading) {
                cols.push_back(std::move(col));
                continue;
            }
            for (int want = 0; want < 2; ++want) {
                Vec part(m.dim, Scalar::zero(f));
                bool nz = false;
                for (std::size_t r = 0; r < m.dim; ++r)
                    if (static_cast<int>((*m.grading)[r]) == want && !col[r].is_zero()) {
                        part[r] = col[r];
                        nz = true;
                    }
                if (nz) cols.push_back(std::move(part));
            }
        }
        std::vector<Vec> basis_rows = span_basis(cols, m.dim, f);
        Matrix basis(m.dim, basis_rows.size(), f);
        for (std::size_t c = 0; c < basis_rows.size(); ++c)
            for (std::size_t r = 0; r < m.dim; ++r) basis.at(r, c) = basis_rows[c][r];

        AlgModule sub = submodule(m, basis);
        std::string label = "unrecognized(dim=" + std::to_string(sub.dim) + ")";
        for (const auto& [name, cand] : candidates)
            if (summand_isomorphic(sub, cand)) {
                label = name;
                break;
            }
        if (!counts.count(label)) order.push_back(label);
        counts[label]++;
        out.summands.push_back({label, sub.dim, basis});
    }
    for (const std::string& label : order) out.multiplicities.emplace_back(label, counts[label]);
    return out;
}

}  // namespace fftc
