#include "fftc/json_io.hpp"

#include <fstream>

namespace fftc {

namespace {

Scalar scalar_from_json(const Json& j, const FieldSpec& f) {
    if (j.is_number_integer()) return Scalar::from_int(j.get<long>(), f);
    if (j.is_string()) return parse_scalar(j.get<std::string>(), f);
    throw ParseError("scalar entries must be integers or scalar strings");
}

std::string scalar_str(const Scalar& s) { return s.str(); }

void require(bool cond, const std::string& what) {
    if (!cond) throw ParseError(what);
}

}  // namespace

Json field_to_json(const FieldSpec& f) {
    switch (f.kind) {
        case FieldKind::Rational: return {{"kind", "Q"}};
        case FieldKind::GaussianRational: return {{"kind", "Q(i)"}};
        default: return {{"kind", "Fp"}, {"p", f.p.get_str()}};
    }
}

FieldSpec field_from_json(const Json& j) {
    if (j.is_null()) return FieldSpec::rational();
    require(j.is_object() && j.contains("kind"), "field must be {\"kind\": ...}");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldSpec::rational();
    if (kind == "Q(i)") return FieldSpec::gaussian();
    if (kind == "Fp") {
        require(j.contains("p"), "prime field needs \"p\"");
        const Json& p = j.at("p");
        mpz_class m = p.is_string() ? mpz_class(p.get<std::string>())
                                    : mpz_class(p.get<long>());
        return FieldSpec::prime(m);
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const FieldSpec& f) {
    require(j.is_array(), "matrix must be an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows ? j.at(0).size() : 0;
    Matrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r) {
        require(j.at(r).is_array() && j.at(r).size() == cols, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(j.at(r).at(c), f);
    }
    return m;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Scalar& s : v) out.push_back(scalar_str(s));
    return out;
}

Vec vec_from_json(const Json& j, const FieldSpec& f) {
    require(j.is_array(), "vector must be an array");
    Vec v;
    v.reserve(j.size());
    for (const Json& e : j) v.push_back(scalar_from_json(e, f));
    return v;
}

namespace {

Json parity_to_json(const std::vector<Parity>& g) {
    Json out = Json::array();
    for (Parity p : g) out.push_back(p == Parity::Even ? 0 : 1);
    return out;
}

std::vector<Parity> parity_from_json(const Json& j) {
    std::vector<Parity> g;
    for (const Json& e : j) {
        long v = e.get<long>();
        require(v == 0 || v == 1, "parity entries must be 0 or 1");
        g.push_back(v ? Parity::Odd : Parity::Even);
    }
    return g;
}

}  // namespace

Json algebra_to_json(const Algebra& a) {
    Json j;
    j["field"] = field_to_json(a.field);
    j["dim"] = a.dim;
    j["basis"] = a.basis_names;
    j["unit"] = vec_to_json(a.unit);
    Json mult = Json::array();
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t k = 0; k < a.dim; ++k)
            for (const auto& [t, s] : a.product_of_basis(i, k))
                mult.push_back(Json::array({i, k, t, scalar_str(s)}));
    j["mult"] = std::move(mult);
    if (a.grading) j["parity"] = parity_to_json(*a.grading);
    return j;
}

std::shared_ptr<Algebra> algebra_from_json(const Json& j) {
    require(j.is_object(), "algebra must be a JSON object");
    auto a = std::make_shared<Algebra>();
    a->field = field_from_json(j.contains("field") ? j.at("field") : Json());
    a->dim = j.at("dim").get<std::size_t>();
    if (j.contains("basis"))
        a->basis_names = j.at("basis").get<std::vector<std::string>>();
    else
        for (std::size_t i = 0; i < a->dim; ++i) a->basis_names.push_back("b" + std::to_string(i));
    require(a->basis_names.size() == a->dim, "basis length mismatch");
    a->unit = vec_from_json(j.at("unit"), a->field);
    require(a->unit.size() == a->dim, "unit length mismatch");
    a->mult.assign(a->dim * a->dim, {});
    for (const Json& e : j.at("mult")) {
        require(e.is_array() && e.size() == 4, "mult entries are [i, j, k, scalar]");
        std::size_t i = e.at(0).get<std::size_t>();
        std::size_t k = e.at(1).get<std::size_t>();
        std::size_t t = e.at(2).get<std::size_t>();
        require(i < a->dim && k < a->dim && t < a->dim, "mult index out of range");
        a->mult[i * a->dim + k].emplace_back(t, scalar_from_json(e.at(3), a->field));
    }
    if (j.contains("parity")) {
        a->grading = parity_from_json(j.at("parity"));
        require(a->grading->size() == a->dim, "parity length mismatch");
    }
    return a;
}

Json module_to_json(const AlgModule& m) {
    Json j;
    j["algebra"] = algebra_to_json(*m.algebra);
    j["dim"] = m.dim;
    Json action = Json::array();
    for (const Matrix& act : m.action) {
        Json triples = Json::array();
        for (std::size_t r = 0; r < act.rows(); ++r)
            for (std::size_t c = 0; c < act.cols(); ++c)
                if (!act.at(r, c).is_zero())
                    triples.push_back(Json::array({r, c, scalar_str(act.at(r, c))}));
        action.push_back(std::move(triples));
    }
    j["action"] = std::move(action);
    if (m.grading) j["parity"] = parity_to_json(*m.grading);
    return j;
}

AlgModule module_from_json(const Json& j, const std::string& base_dir) {
    require(j.is_object() && j.contains("algebra"), "module needs an \"algebra\" field");
    AlgModule m;
    const Json& aj = j.at("algebra");
    if (aj.is_string()) {
        std::string path = aj.get<std::string>();
        if (!path.empty() && path.front() != '/' && !base_dir.empty())
            path = base_dir + "/" + path;
        m.algebra = algebra_from_json(load_json_file(path));
    } else {
        m.algebra = algebra_from_json(aj);
    }
    m.dim = j.at("dim").get<std::size_t>();
    require(j.at("action").is_array() && j.at("action").size() == m.algebra->dim,
            "one action list per algebra basis element required");
    for (const Json& triples : j.at("action")) {
        Matrix act(m.dim, m.dim, m.algebra->field);
        for (const Json& e : triples) {
            require(e.is_array() && e.size() == 3, "action entries are [r, c, scalar]");
            std::size_t r = e.at(0).get<std::size_t>();
            std::size_t c = e.at(1).get<std::size_t>();
            require(r < m.dim && c < m.dim, "action index out of range");
            act.at(r, c) = scalar_from_json(e.at(2), m.algebra->field);
        }
        m.action.push_back(std::move(act));
    }
    if (j.contains("parity")) {
        m.grading = parity_from_json(j.at("parity"));
        require(m.grading->size() == m.dim, "parity length mismatch");
    }
    return m;
}

Json ring_to_json(const CommRing& r) {
    Json j = algebra_to_json(r.as_algebra());
    j.erase("basis");
    j["labels"] = r.labels;
    Json proj = Json::object();
    for (const auto& [label, cls] : r.projectives) proj[label] = vec_to_json(cls);
    j["projectives"] = std::move(proj);
    Json dual = Json::object();
    for (const auto& [a, b] : r.dual) dual[a] = b;
    j["dual"] = std::move(dual);
    return j;
}

CommRing ring_from_json(const Json& j) {
    Json aj = j;
    aj["basis"] = j.at("labels");
    std::shared_ptr<Algebra> a = algebra_from_json(aj);
    CommRing r;
    r.field = a->field;
    r.labels = a->basis_names;
    r.mult = a->mult;
    r.unit = a->unit;
    if (j.contains("projectives"))
        for (const auto& [label, cls] : j.at("projectives").items())
            r.projectives.emplace_back(label, vec_from_json(cls, r.field));
    if (j.contains("dual"))
        for (const auto& [x, y] : j.at("dual").items()) r.dual.emplace_back(x, y.get<std::string>());
    return r;
}

Json central_form_to_json(const CentralForm& f) { return {{"coords", vec_to_json(f.coords)}}; }

CentralForm central_form_from_json(const Json& j, std::shared_ptr<const Algebra> a) {
    CentralForm f;
    f.coords = vec_from_json(j.at("coords"), a->field);
    require(f.coords.size() == a->dim, "central form length mismatch");
    f.algebra = std::move(a);
    return f;
}

Json dataset_to_json(const ModularDataSet& d) {
    Json j;
    j["field"] = field_to_json(d.field);
    j["irr"] = d.irr;
    Json dual = Json::object();
    for (const auto& [a, b] : d.dual) dual[a] = b;
    j["dual"] = std::move(dual);
    j["cartan"] = matrix_to_json(d.cartan);
    j["J"] = d.j_labels;
    j["irrproj"] = d.irrproj;
    j["Btilde"] = matrix_to_json(d.btilde);
    j["Stilde"] = matrix_to_json(d.stilde);
    j["Ctilde"] = matrix_to_json(d.ctilde);
    Json b = Json::object();
    for (const auto& [label, v] : d.b) b[label] = scalar_str(v);
    j["b"] = std::move(b);
    Json fusion = Json::object();
    for (const auto& [uv, row] : d.fusion) {
        Json jrow = Json::object();
        for (const auto& [w, mult] : row) jrow[w] = scalar_str(mult);
        fusion[uv.first + "," + uv.second] = std::move(jrow);
    }
    j["fusion"] = std::move(fusion);
    j["t0"] = scalar_str(d.t0);
    if (!d.expected_hopf.empty()) {
        Json hopf = Json::object();
        for (const auto& [ax, v] : d.expected_hopf) hopf[ax.first + "," + ax.second] = scalar_str(v);
        j["expected_hopf"] = std::move(hopf);
    }
    return j;
}

namespace {

std::pair<std::string, std::string> split_pair(const std::string& key) {
    std::size_t comma = key.find(',');
    require(comma != std::string::npos, "pair keys look like \"U,V\"");
    return {key.substr(0, comma), key.substr(comma + 1)};
}

}  // namespace

ModularDataSet dataset_from_json(const Json& j) {
    ModularDataSet d;
    d.field = field_from_json(j.contains("field") ? j.at("field") : Json());
    d.irr = j.at("irr").get<std::vector<std::string>>();
    for (const auto& [a, b] : j.at("dual").items()) d.dual[a] = b.get<std::string>();
    d.cartan = matrix_from_json(j.at("cartan"), d.field);
    d.j_labels = j.at("J").get<std::vector<std::string>>();
    d.irrproj = j.at("irrproj").get<std::vector<std::string>>();
    d.btilde = matrix_from_json(j.at("Btilde"), d.field);
    d.stilde = matrix_from_json(j.at("Stilde"), d.field);
    d.ctilde = matrix_from_json(j.at("Ctilde"), d.field);
    for (const auto& [label, v] : j.at("b").items()) d.b[label] = scalar_from_json(v, d.field);
    for (const auto& [key, row] : j.at("fusion").items()) {
        std::map<std::string, Scalar> out;
        for (const auto& [w, m] : row.items()) out[w] = scalar_from_json(m, d.field);
        d.fusion[split_pair(key)] = std::move(out);
    }
    d.t0 = scalar_from_json(j.at("t0"), d.field);
    if (j.contains("expected_hopf"))
        for (const auto& [key, v] : j.at("expected_hopf").items())
            d.expected_hopf[split_pair(key)] = scalar_from_json(v, d.field);
    return d;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

}  // namespace fftc
