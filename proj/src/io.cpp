#include "epsymp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace epsymp {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write file: " + path);
    }
    out << content;
}

namespace {

bool looks_like_json(std::string_view text) {
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            return c == '{' || c == '[';
        }
    }
    return false;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

int get_int(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
        throw InputError(std::string("missing integer field \"") + key + "\"");
    }
    return j.at(key).get<int>();
}

const Json& get_array(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
        throw InputError(std::string("missing array field \"") + key + "\"");
    }
    return j.at(key);
}

double get_number(const Json& j) {
    if (!j.is_number()) {
        throw InputError("expected a number");
    }
    return j.get<double>();
}

MultiIndex index_from_json(const Json& j, int m, int k) {
    if (!j.is_array() || static_cast<int>(j.size()) != k) {
        throw InputError("index must be an array of length k");
    }
    std::vector<int> entries;
    for (const auto& e : j) {
        if (!e.is_number_integer()) {
            throw InputError("index entries must be integers");
        }
        entries.push_back(e.get<int>() - 1);
    }
    try {
        return MultiIndex(std::move(entries), m);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("bad index: ") + e.what());
    }
}

Json index_to_json(const MultiIndex& index) {
    Json out = Json::array();
    for (int e : index.entries()) {
        out.push_back(e + 1);
    }
    return out;
}

mpz_class integer_from_json(const Json& j, const char* what) {
    mpz_class z;
    if (j.is_number_integer()) {
        z = j.get<long>();
        return z;
    }
    if (j.is_string()) {
        if (z.set_str(j.get<std::string>(), 10) == 0) {
            return z;
        }
    }
    throw InputError(std::string("bad integer for \"") + what + "\"");
}

void check_dims(int m, int k) {
    if (m < 1 || m > 64 || k < 0 || k > m) {
        throw InputError("need 1 <= m <= 64 and 0 <= k <= m");
    }
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
    if (looks_like_json(text)) {
        return matrix_from_json(parse_json(text));
    }
    std::istringstream in{std::string(text)};
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "n" || n < 1) {
        throw InputError("matrix text must start with \"n <int>\"");
    }
    const int dim = 2 * n;
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            std::string tok;
            if (!(in >> tok)) {
                throw InputError("matrix text: expected " + std::to_string(dim * dim) + " entries");
            }
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || !std::isfinite(v)) {
                throw InputError("matrix text: bad number \"" + tok + "\"");
            }
            a(i, j) = v;
        }
    }
    std::string extra;
    if (in >> extra) {
        throw InputError("matrix text: trailing data");
    }
    return a;
}

std::string format_matrix(const Matrix& a) {
    std::string out = "n " + std::to_string(a.rows() / 2) + "\n";
    char buf[32];
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
            out += buf;
            out += j + 1 < a.cols() ? " " : "\n";
        }
    }
    return out;
}

Json matrix_to_json(const Matrix& a) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            row.push_back(a(i, j));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"n", a.rows() / 2}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
    const int n = get_int(j, "n");
    if (n < 1) {
        throw InputError("matrix JSON: n must be positive");
    }
    const Json& rows = get_array(j, "rows");
    const int dim = 2 * n;
    if (static_cast<int>(rows.size()) != dim) {
        throw InputError("matrix JSON: expected 2n rows");
    }
    Matrix a(dim, dim);
    for (int r = 0; r < dim; ++r) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != dim) {
            throw InputError("matrix JSON: expected 2n entries per row");
        }
        for (int c = 0; c < dim; ++c) {
            a(r, c) = get_number(rows[r][c]);
        }
    }
    return a;
}

Covector covector_from_json(const Json& j) {
    const int m = get_int(j, "m");
    const int k = get_int(j, "k");
    check_dims(m, k);
    Covector out(m, k);
    for (const auto& t : get_array(j, "terms")) {
        if (!t.is_object() || !t.contains("index") || !t.contains("coeff")) {
            throw InputError("covector term needs \"index\" and \"coeff\"");
        }
        out = out + Covector::basis(m, index_from_json(t.at("index"), m, k), get_number(t.at("coeff")));
    }
    return out;
}

Json covector_to_json(const Covector& c) {
    Json terms = Json::array();
    for (const auto& [index, value] : c.terms()) {
        terms.push_back(Json{{"index", index_to_json(index)}, {"coeff", value}});
    }
    return Json{{"m", c.dim()}, {"k", c.degree()}, {"terms", std::move(terms)}};
}

PolyForm polyform_from_json(const Json& j) {
    const int m = get_int(j, "m");
    const int k = get_int(j, "k");
    check_dims(m, k);
    PolyForm out(m, k);
    for (const auto& t : get_array(j, "terms")) {
        if (!t.is_object() || !t.contains("index")) {
            throw InputError("polyform term needs \"index\"");
        }
        const MultiIndex index = index_from_json(t.at("index"), m, k);
        Poly p(m);
        for (const auto& mono : get_array(t, "poly")) {
            const Json& exp = get_array(mono, "exp");
            if (static_cast<int>(exp.size()) != m) {
                throw InputError("monomial exponent must have m entries");
            }
            Poly::Exponent e;
            for (const auto& x : exp) {
                if (!x.is_number_integer() || x.get<long>() < 0 || x.get<long>() > 64) {
                    throw InputError("exponents must be integers in [0, 64]");
                }
                e.push_back(x.get<unsigned>());
            }
            if (!mono.contains("num")) {
                throw InputError("monomial needs \"num\"");
            }
            const mpz_class num = integer_from_json(mono.at("num"), "num");
            const mpz_class den = mono.contains("den") ? integer_from_json(mono.at("den"), "den") : mpz_class(1);
            if (den == 0) {
                throw InputError("zero denominator");
            }
            Rational c(num, den);
            c.canonicalize();
            p = p + Poly::monomial(m, std::move(e), c);
        }
        out = out + PolyForm::term(index, p);
    }
    return out;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Json polyform_to_json(const PolyForm& f) {
    Json terms = Json::array();
    for (const auto& [index, poly] : f.terms()) {
        Json monos = Json::array();
        for (const auto& [e, c] : poly.terms()) {
            monos.push_back(Json{{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
        }
        terms.push_back(Json{{"index", index_to_json(index)}, {"poly", std::move(monos)}});
    }
    return Json{{"m", f.dim()}, {"k", f.degree()}, {"terms", std::move(terms)}};
}

std::vector<Vector> parse_points(std::string_view text) {
    std::vector<std::vector<double>> rows;
    if (looks_like_json(text)) {
        const Json j = parse_json(text);
        const Json& arr = j.is_object() ? get_array(j, "points") : j;
        if (!arr.is_array()) {
            throw InputError("points JSON must be an array of arrays");
        }
        for (const auto& p : arr) {
            if (!p.is_array()) {
                throw InputError("points JSON must be an array of arrays");
            }
            std::vector<double> row;
            for (const auto& x : p) {
                row.push_back(get_number(x));
            }
            rows.push_back(std::move(row));
        }
    } else {
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<double> row;
            std::string tok;
            while (ls >> tok) {
                std::size_t used = 0;
                double v = 0.0;
                try {
                    v = std::stod(tok, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != tok.size()) {
                    throw InputError("points: bad number \"" + tok + "\"");
                }
                row.push_back(v);
            }
            if (!row.empty()) {
                rows.push_back(std::move(row));
            }
        }
    }
    std::vector<Vector> out;
    for (const auto& row : rows) {
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw InputError("points must all have the same dimension");
        }
        out.push_back(Eigen::Map<const Vector>(row.data(), static_cast<Eigen::Index>(row.size())));
    }
    return out;
}

std::string digest(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i));
    }
    return out;
}

Json to_json(const LambdaMuReport& r) {
    Json rows = Json::array();
    for (std::size_t j = 0; j < r.lambdas.size(); ++j) {
        rows.push_back(Json{{"lambda", r.lambdas[j]}, {"mu", r.mus[j]}, {"sigma", r.signs[j]}});
    }
    return Json{{"pairs", std::move(rows)}, {"classification", std::string(to_string(r.classification))}};
}

Json to_json(const DecompositionCheck& r) {
    return Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"rel_error", r.rel_error}};
}

Json to_json(const CertificateReport& r) {
    Json records = Json::array();
    for (const auto& rec : r.records) {
        Json j{{"index", rec.index},  {"r1", rec.r1},         {"R1", rec.big_r1}, {"bound", rec.bound},
               {"eligible", rec.eligible}, {"pass", rec.pass}};
        if (!rec.note.empty()) {
            j["note"] = rec.note;
        }
        records.push_back(std::move(j));
    }
    Json out{{"kind", r.kind}, {"eps", r.eps}, {"rho", r.rho}, {"singular_phi", r.singular_phi},
             {"skipped", r.skipped()}, {"records", std::move(records)}};
    if (!r.ball_radii.empty()) {
        Json balls = Json::array();
        for (std::size_t i = 0; i < r.ball_radii.size(); ++i) {
            balls.push_back(Json{{"r", r.ball_radii[i]}, {"width", r.ball_widths[i]}});
        }
        out["balls"] = std::move(balls);
    }
    out["pass"] = r.pass;
    return out;
}

Json to_json(const SymplectifyReport& r) {
    return Json{{"eps", r.eps},
                {"rho", r.rho},
                {"input_defect", r.input_defect},
                {"residual_defect", r.residual_defect},
                {"residual_pass", r.residual_pass},
                {"displacement", r.displacement},
                {"displacement_bound", r.displacement_bound},
                {"displacement_margin", r.displacement_bound - r.displacement},
                {"displacement_pass", r.displacement_pass},
                {"sigma_min", r.sigma_min},
                {"sigma_max", r.sigma_max},
                {"sandwich_margin_low", r.sigma_min - r.rho},
                {"sandwich_margin_high", 1.0 / r.rho - r.sigma_max},
                {"sandwich_pass", r.sandwich_pass},
                {"psi", matrix_to_json(r.psi)},
                {"pass", r.pass}};
}

Json to_json(const HBoundReport& r) {
    Json points = Json::array();
    for (const auto& p : r.points) {
        Json j{{"x", to_json(p.x)}, {"lhs", p.lhs}, {"max_ray", p.max_ray}, {"rhs", p.rhs}, {"margin", p.margin}};
        if (p.ray_constant) {
            j["rhs_ray"] = p.rhs_ray;
            j["margin_ray"] = p.margin_ray;
        }
        points.push_back(std::move(j));
    }
    return Json{{"k", r.k},           {"s", r.s},         {"samples", r.samples}, {"sampled_max", r.sampled_max},
                {"points", std::move(points)}, {"min_margin", r.min_margin}, {"pass", r.pass}};
}

Json to_json(const PointwiseReport& r) {
    Json trajectories = Json::array();
    for (const auto& t : r.trajectories) {
        trajectories.push_back(Json{{"start", to_json(t.start)},
                                    {"end", to_json(t.end)},
                                    {"max_form_defect", t.max_form_defect},
                                    {"radius_bounds_pass", t.radius_bounds_pass},
                                    {"displacement", t.displacement},
                                    {"displacement_bound", t.displacement_bound},
                                    {"displacement_pass", t.displacement_pass},
                                    {"pass", t.pass}});
    }
    return Json{{"beta", polyform_to_json(r.beta)},
                {"sigma", polyform_to_json(r.sigma)},
                {"trajectories", std::move(trajectories)},
                {"pass", r.pass}};
}

}  // namespace epsymp
