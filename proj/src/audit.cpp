#include "fftc/audit.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace fftc {

namespace {

std::string vec_str(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

std::string matrix_str(const Matrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) s += "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ", ";
            s += m.at(r, c).str();
        }
    }
    return s + "]";
}

bool is_nonneg_integer(const Scalar& s) {
    return s.field().kind != FieldKind::PrimeField && s.is_rational() && s.re().get_den() == 1 &&
           s.re() >= 0;
}

}  // namespace

std::size_t ModularDataSet::irr_index(const std::string& label) const {
    for (std::size_t i = 0; i < irr.size(); ++i)
        if (irr[i] == label) return i;
    throw Error("unknown simple label '" + label + "'");
}

std::size_t ModularDataSet::j_index(const std::string& label) const {
    for (std::size_t i = 0; i < j_labels.size(); ++i)
        if (j_labels[i] == label) return i;
    throw Error("label '" + label + "' is not in J");
}

Scalar ModularDataSet::fusion_coeff(const std::string& u, const std::string& v,
                                    const std::string& w) const {
    auto it = fusion.find({u, v});
    if (it == fusion.end()) return Scalar::zero(field);
    auto jt = it->second.find(w);
    if (jt == it->second.end()) return Scalar::zero(field);
    return jt->second;
}

ValidationReport ModularDataSet::validate() const {
    ValidationReport rep;
    std::size_t n = irr.size(), k = j_labels.size();
    if (cartan.rows() != n || cartan.cols() != n) rep.violations.push_back("cartan shape mismatch");
    if (btilde.rows() != n || btilde.cols() != k) rep.violations.push_back("Btilde shape mismatch");
    if (stilde.rows() != k || stilde.cols() != k) rep.violations.push_back("Stilde shape mismatch");
    if (ctilde.rows() != k || ctilde.cols() != k) rep.violations.push_back("Ctilde shape mismatch");
    if (!rep.violations.empty()) return rep;

    for (const std::string& l : j_labels)
        if (std::find(irr.begin(), irr.end(), l) == irr.end())
            rep.violations.push_back("J label '" + l + "' not in irr");
    for (const std::string& l : irrproj)
        if (std::find(j_labels.begin(), j_labels.end(), l) == j_labels.end())
            rep.violations.push_back("irrproj label '" + l + "' not in J");
    for (const std::string& l : irrproj) {
        auto it = b.find(l);
        if (it == b.end() || it->second.is_zero())
            rep.violations.push_back("missing or zero b value for '" + l + "'");
    }
    for (const std::string& l : irr)
        if (!dual.count(l) || std::find(irr.begin(), irr.end(), dual.at(l)) == irr.end())
            rep.violations.push_back("dual involution incomplete at '" + l + "'");
    for (const auto& [l, d] : dual)
        if (dual.count(d) && dual.at(d) != l)
            rep.violations.push_back("dual is not an involution at '" + l + "'");
    if (ctilde * ctilde != Matrix::identity(k, field))
        rep.violations.push_back("Ctilde is not an involution");
    if (t0.is_zero()) rep.violations.push_back("t0 must be nonzero");
    for (const auto& [uv, row] : fusion) {
        (void)row;
        irr_index(uv.first);
        irr_index(uv.second);
    }
    return rep;
}

bool AuditReport::all_pass() const {
    for (const AuditSection& s : sections)
        if (!s.pass) return false;
    return true;
}

const AuditSection* AuditReport::section(const std::string& name) const {
    for (const AuditSection& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

AuditSection verlinde_check(const ModularDataSet& d) {
    AuditSection sec{"verlinde", true, {}, {}};
    Matrix bs = d.btilde * d.stilde;
    Matrix sc = d.stilde * d.ctilde;
    for (const std::string& u : d.irr)
        for (const std::string& v : d.irr)
            for (std::size_t xi = 0; xi < d.j_labels.size(); ++xi) {
                Scalar lhs = Scalar::zero(d.field);
                for (std::size_t wi = 0; wi < d.irr.size(); ++wi)
                    lhs += d.fusion_coeff(u, v, d.irr[wi]) * d.btilde.at(wi, xi);
                Scalar rhs = Scalar::zero(d.field);
                for (const std::string& q : d.irrproj) {
                    std::size_t qi = d.j_index(q);
                    rhs += d.b.at(q) * bs.at(d.irr_index(u), qi) * bs.at(d.irr_index(v), qi) *
                           sc.at(qi, xi);
                }
                if (lhs != rhs) {
                    sec.pass = false;
                    if (sec.witnesses.size() < 8)
                        sec.witnesses.push_back(
                            {u + "," + v + "," + d.j_labels[xi], lhs.str(), rhs.str()});
                }
            }
    return sec;
}

AuditSection s_squared_check(const ModularDataSet& d) {
    AuditSection sec{"s_squared", true, {}, {}};
    Matrix sq = d.stilde * d.stilde;
    sec.info.emplace_back("square", matrix_str(sq));
    if (sq != d.ctilde) {
        sec.pass = false;
        for (std::size_t r = 0; r < sq.rows() && sec.witnesses.size() < 8; ++r)
            for (std::size_t c = 0; c < sq.cols() && sec.witnesses.size() < 8; ++c)
                if (sq.at(r, c) != d.ctilde.at(r, c))
                    sec.witnesses.push_back({d.j_labels[r] + "," + d.j_labels[c],
                                             sq.at(r, c).str(), d.ctilde.at(r, c).str()});
    }
    return sec;
}

namespace {

// sigma(U) in phi coordinates over J.
Vec sigma_vec(const ModularDataSet& d, const Matrix& bs, const std::string& u) {
    Vec v(d.j_labels.size(), Scalar::zero(d.field));
    for (std::size_t a = 0; a < d.j_labels.size(); ++a) v[a] = bs.at(d.irr_index(u), a);
    return v;
}

Vec phi_product(const ModularDataSet& d, const Vec& x, const Vec& y) {
    Vec out(d.j_labels.size(), Scalar::zero(d.field));
    for (std::size_t a = 0; a < d.j_labels.size(); ++a) {
        const std::string& label = d.j_labels[a];
        if (std::find(d.irrproj.begin(), d.irrproj.end(), label) == d.irrproj.end()) continue;
        out[a] = x[a] * y[a] * d.b.at(label);
    }
    return out;
}

}  // namespace

AuditSection product_rule_check(const ModularDataSet& d) {
    AuditSection sec{"product_rule", true, {}, {}};
    Matrix bs = d.btilde * d.stilde;
    for (const std::string& u : d.irr)
        for (const std::string& v : d.irr) {
            Vec lhs = phi_product(d, sigma_vec(d, bs, u), sigma_vec(d, bs, v));
            Vec rhs(d.j_labels.size(), Scalar::zero(d.field));
            for (const std::string& w : d.irr) {
                Scalar m = d.fusion_coeff(u, v, w);
                if (m.is_zero()) continue;
                Vec sw = sigma_vec(d, bs, w);
                for (std::size_t a = 0; a < rhs.size(); ++a) rhs[a] += m * sw[a];
            }
            if (lhs != rhs) {
                sec.pass = false;
                if (sec.witnesses.size() < 8)
                    sec.witnesses.push_back({u + "," + v, vec_str(lhs), vec_str(rhs)});
            }
        }
    return sec;
}

Scalar hopf_link_value(const ModularDataSet& d, const std::string& a_label,
                       const std::string& x_label) {
    if (d.irrproj.empty()) throw Error("hopf_link_value needs a nonempty irrproj");
    const std::string& q = d.irrproj.front();
    std::size_t ai = d.j_index(a_label);
    std::size_t xi = d.irr_index(x_label);
    Scalar sum = Scalar::zero(d.field);
    for (std::size_t bi = 0; bi < d.j_labels.size(); ++bi)
        sum += d.stilde.at(ai, bi) * d.cartan.at(d.irr_index(d.j_labels[bi]), xi);
    return d.b.at(q) * sum * d.t0;
}

AuditSection hopf_link_check(const ModularDataSet& d) {
    AuditSection sec{"hopf_link", true, {}, {}};
    if (d.expected_hopf.empty()) {
        sec.info.emplace_back("note", "no expected values supplied; vacuous pass");
        return sec;
    }
    for (const auto& [ax, mult] : d.expected_hopf) {
        Scalar got = hopf_link_value(d, ax.first, ax.second);
        Scalar want = mult * d.t0;
        sec.info.emplace_back(ax.first + "," + ax.second, got.str());
        if (got != want) {
            sec.pass = false;
            sec.witnesses.push_back({ax.first + "," + ax.second, got.str(), want.str()});
        }
    }
    return sec;
}

AuditSection m1_cartan_check(const ModularDataSet& d) {
    AuditSection sec{"m1_cartan", true, {}, {}};
    const std::string& unit = d.irr.front();
    for (const std::string& u : d.irr)
        for (const std::string& v : d.irr) {
            Scalar lhs = d.fusion_coeff(u, v, unit);
            Scalar rhs = d.cartan.at(d.irr_index(d.dual.at(v)), d.irr_index(u));
            if (lhs != rhs) {
                sec.pass = false;
                if (sec.witnesses.size() < 8)
                    sec.witnesses.push_back({u + "," + v, lhs.str(), rhs.str()});
            }
        }
    return sec;
}

AuditSection rank_check(const ModularDataSet& d) {
    AuditSection sec{"rank", true, {}, {}};
    std::size_t rc = rank_of(d.cartan);
    std::size_t rb = rank_of(d.btilde);
    sec.info.emplace_back("rank_cartan", std::to_string(rc));
    sec.info.emplace_back("rank_btilde", std::to_string(rb));
    sec.info.emplace_back("J_size", std::to_string(d.j_labels.size()));
    sec.pass = rc == rb && rb == d.j_labels.size();
    bool integral = true;
    for (const auto& [uv, row] : d.fusion) {
        (void)uv;
        for (const auto& [w, m] : row) {
            (void)w;
            if (!is_nonneg_integer(m)) integral = false;
        }
    }
    sec.info.emplace_back("fusion_nonneg_integral", integral ? "true" : "false");
    return sec;
}

RescaleResult rescale_solver(const ModularDataSet& d) {
    RescaleResult res;
    res.multiplier = Scalar::zero(d.field);
    Matrix bs = d.btilde * d.stilde;

    // c * b_A * sigma(U)_A * sigma(V)_A = sum_W M_{UV}^W sigma(W)_A.
    bool have_c = false;
    for (const std::string& u : d.irr) {
        for (const std::string& v : d.irr) {
            Vec su = sigma_vec(d, bs, u), sv = sigma_vec(d, bs, v);
            for (std::size_t a = 0; a < d.j_labels.size(); ++a) {
                const std::string& label = d.j_labels[a];
                bool proj = std::find(d.irrproj.begin(), d.irrproj.end(), label) != d.irrproj.end();
                Scalar coeff = proj ? d.b.at(label) * su[a] * sv[a] : Scalar::zero(d.field);
                Scalar rhs = Scalar::zero(d.field);
                for (const std::string& w : d.irr) {
                    Scalar m = d.fusion_coeff(u, v, w);
                    if (!m.is_zero()) rhs += m * bs.at(d.irr_index(w), a);
                }
                if (coeff.is_zero()) {
                    if (!rhs.is_zero()) {
                        res.obstruction = "constraint (" + u + "," + v + ";" + label +
                                          ") has zero coefficient but nonzero target " + rhs.str();
                        return res;
                    }
                    continue;
                }
                Scalar c = rhs / coeff;
                if (!have_c) {
                    res.multiplier = c;
                    have_c = true;
                } else if (c != res.multiplier) {
                    res.obstruction = "inconsistent multipliers " + res.multiplier.str() + " vs " +
                                      c.str() + " at (" + u + "," + v + ";" + label + ")";
                    return res;
                }
            }
        }
    }
    if (!have_c) {
        res.obstruction = "no constraint determines the multiplier";
        return res;
    }
    res.solvable = true;

    ModularDataSet scaled = d;
    for (auto& [label, value] : scaled.b) value *= res.multiplier;
    auto run = [](const ModularDataSet& x) {
        std::vector<AuditSection> out;
        out.push_back(s_squared_check(x));
        out.push_back(product_rule_check(x));
        out.push_back(verlinde_check(x));
        out.push_back(hopf_link_check(x));
        out.push_back(m1_cartan_check(x));
        out.push_back(rank_check(x));
        return out;
    };
    std::vector<AuditSection> before = run(d);
    std::vector<AuditSection> after = run(scaled);
    for (std::size_t i = 0; i < before.size(); ++i) {
        if (!before[i].pass && after[i].pass) res.fixed_checks.push_back(before[i].name);
        if (before[i].pass && !after[i].pass) res.broken_checks.push_back(before[i].name);
    }
    return res;
}

AuditReport full_audit(const ModularDataSet& d) {
    AuditReport rep;
    rep.sections.push_back(s_squared_check(d));
    rep.sections.push_back(product_rule_check(d));
    rep.sections.push_back(verlinde_check(d));
    rep.sections.push_back(hopf_link_check(d));
    rep.sections.push_back(m1_cartan_check(d));
    rep.sections.push_back(rank_check(d));
    if (!rep.section("product_rule")->pass || !rep.section("verlinde")->pass)
        rep.rescale = rescale_solver(d);
    return rep;
}

ModularDataSet synthetic_modular(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const FieldSpec f = FieldSpec::rational();
    std::size_t n = 3 + rng() % 2;

    ModularDataSet d;
    d.field = f;
    for (std::size_t i = 0; i < n; ++i) d.irr.push_back("X" + std::to_string(i));
    d.j_labels = d.irr;
    d.irrproj = d.irr;
    for (const std::string& l : d.irr) d.dual[l] = l;
    d.cartan = Matrix::identity(n, f);
    d.btilde = Matrix::identity(n, f);
    d.ctilde = Matrix::identity(n, f);
    d.t0 = Scalar::one(f);

    std::uniform_int_distribution<long> entry(-3, 3);
    std::uniform_int_distribution<long> num(1, 5);
    std::uniform_int_distribution<int> sign(0, 1);

    // Involutive Stilde = P D P^{-1} with D = diag(+-1).
    Matrix p(n, n, f);
    Matrix pinv;
    while (true) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) p.at(r, c) = Scalar::from_int(entry(rng), f);
        try {
            pinv = mat_inverse(p);
            break;
        } catch (const DegenerateFormError&) {
        }
    }
    Matrix diag(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        diag.at(i, i) = Scalar::from_int(sign(rng) ? 1 : -1, f);
    d.stilde = p * diag * pinv;

    for (const std::string& l : d.irr) {
        long v = num(rng);
        d.b[l] = Scalar::from_mpq(mpq_class(sign(rng) ? v : -v, num(rng)), f);
    }

    // Fusion solved from the product rule: Stilde^T m = rhs per pair.
    Matrix st = d.stilde.transpose();
    for (const std::string& u : d.irr)
        for (const std::string& v : d.irr) {
            Vec rhs(n, Scalar::zero(f));
            for (std::size_t a = 0; a < n; ++a)
                rhs[a] = d.b.at(d.j_labels[a]) * d.stilde.at(d.irr_index(u), a) *
                         d.stilde.at(d.irr_index(v), a);
            SolveResult sol = solve_linear(st, rhs);
            if (!sol.consistent) throw Error("synthetic fusion solve failed");
            std::map<std::string, Scalar> row;
            for (std::size_t w = 0; w < n; ++w)
                if (!sol.solution[w].is_zero()) row[d.irr[w]] = sol.solution[w];
            d.fusion[{u, v}] = std::move(row);
        }
    return d;
}

}  // namespace fftc
