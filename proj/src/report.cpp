#include "bsh/report.hpp"

#include "bsh/error.hpp"
#include "bsh/matrix_io.hpp"

#include <filesystem>
#include <iomanip>
#include <sstream>

namespace bsh {

namespace fs = std::filesystem;

Json to_json(const SplitParams& p) { return {{"n", p.n}, {"ell", p.ell}, {"a", p.a}, {"b", p.b}}; }

Json to_json(const SrgParams& p) { return {{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}}; }

Json to_json(const SplitReport& r) {
    Json j = {{"n", r.params.n}, {"ell", r.params.ell}, {"a", r.params.a}, {"b", r.params.b}, {"branch", branch_name(r.branch)}};
    j["srg"] = r.srg ? to_json(*r.srg) : Json(nullptr);
    j["checks"] = {{"gram_ok", r.checks.gram_ok},
                   {"rowsum_zero", r.checks.rowsum_zero},
                   {"seidel_ok", r.checks.seidel_ok ? Json(*r.checks.seidel_ok) : Json(nullptr)}};
    if (r.checks.srg_ok) j["checks"]["srg_ok"] = *r.checks.srg_ok;
    j["rows"] = r.rows;
    return j;
}

Json to_json(const GaussRational& z) {
    Integer den;
    mpz_lcm(den.get_mpz_t(), z.re.get_den_mpz_t(), z.im.get_den_mpz_t());
    Integer num = z.re.get_num() * (den / z.re.get_den());
    Json j = {{"num", num.get_str()}, {"den", den.get_str()}};
    if (!z.is_real()) j["imag_num"] = Integer(z.im.get_num() * (den / z.im.get_den())).get_str();
    return j;
}

GaussRational gauss_from_json(const Json& j) {
    auto read = [](const Json& v) { return Integer(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>())); };
    Integer den = read(j.at("den"));
    Rational re = make_rational(read(j.at("num")), den);
    Rational im = j.contains("imag_num") ? make_rational(read(j.at("imag_num")), den) : Rational(0);
    return {re, im};
}

namespace {

Json matrix_json(const FieldMatrix<GaussRational>& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        rows.push_back(r);
    }
    return rows;
}

FieldMatrix<GaussRational> matrix_from_json(const Json& j) {
    FieldMatrix<GaussRational> m;
    for (const auto& row : j) {
        std::vector<GaussRational> r;
        for (const auto& x : row) r.push_back(gauss_from_json(x));
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

Json to_json(const Eigenmatrices& e) { return {{"P", matrix_json(e.p)}, {"Q", matrix_json(e.q)}}; }

Eigenmatrices eigenmatrices_from_json(const Json& j) {
    Eigenmatrices e;
    e.p = matrix_from_json(j.at("P"));
    e.q = matrix_from_json(j.at("Q"));
    return e;
}

Json to_json(const Scheme& s) {
    const int d = s.classes();
    Json p = Json::array();
    for (int i = 0; i <= d; ++i) {
        Json pi = Json::array();
        for (int j = 0; j <= d; ++j) {
            Json pij = Json::array();
            for (int k = 0; k <= d; ++k) pij.push_back(s.p(i, j, k));
            pi.push_back(pij);
        }
        p.push_back(pi);
    }
    Json val = Json::array(), tr = Json::array();
    for (int i = 0; i <= d; ++i) {
        val.push_back(s.valency(i));
        tr.push_back(s.transpose_class(i));
    }
    return {{"vertices", s.vertices()}, {"classes", d},          {"symmetric", s.symmetric()},
            {"valencies", val},         {"transpose", tr},       {"intersection_numbers", p}};
}

Json to_json(const FeasibleRow& row) {
    Json j = to_json(row.params);
    j["srg"] = to_json(row.srg);
    j["status"] = status_name(row.status);
    j["note"] = row.annotation();
    j["condition"] = row.condition;
    if (row.witness) j["witness"] = row.witness->describe();
    if (row.certificate)
        j["certificate"] = {{"srg_source", row.certificate->srg_source},
                            {"recomputable", row.certificate->recomputable},
                            {"searched", to_json(row.certificate->searched)}};
    return j;
}

Json to_json(const EigSearchResult& r) {
    return {{"multiplicity", r.multiplicity},
            {"candidates", r.candidates},
            {"max_set", r.max_set},
            {"witness", r.witness},
            {"witness_gram_matches", r.witness_gram_matches}};
}

std::string table1_tsv(const std::vector<FeasibleRow>& rows) {
    std::ostringstream out;
    out << "n\tell\ta\tnote\tstatus\tdetail\n";
    for (const auto& r : rows)
        out << r.params.n << '\t' << r.params.ell << '\t' << r.params.a << '\t' << r.annotation() << '\t'
            << status_name(r.status) << '\t' << r.condition << '\n';
    return out.str();
}

std::string table2_tsv(const std::vector<FeasibleRow>& rows) {
    std::ostringstream out;
    out << "n\tell\ta\tb\tk\tlambda\tmu\tnote\tstatus\tdetail\n";
    for (const auto& r : rows)
        out << r.params.n << '\t' << r.params.ell << '\t' << r.params.a << '\t' << r.params.b << '\t' << r.srg.k << '\t'
            << r.srg.lambda << '\t' << r.srg.mu << '\t' << r.annotation() << '\t' << status_name(r.status) << '\t'
            << r.condition << '\n';
    return out.str();
}

std::string eigen_table(const Eigenmatrices& e) {
    std::ostringstream out;
    auto block = [&](const char* name, const FieldMatrix<GaussRational>& m) {
        std::size_t width = 1;
        for (const auto& row : m)
            for (const auto& x : row) width = std::max(width, to_string(x).size());
        out << name << ":\n";
        for (const auto& row : m) {
            for (std::size_t j = 0; j < row.size(); ++j) out << "  " << std::setw(static_cast<int>(width)) << to_string(row[j]);
            out << '\n';
        }
    };
    block("P", e.p);
    block("Q", e.q);
    return out.str();
}

std::string save_bsh(const BshInstance& b, const std::string& dir, const std::string& stem, const std::string& matrix_stem) {
    fs::create_directories(dir);
    const std::string matrix_file = (matrix_stem.empty() ? stem : matrix_stem) + ".txt";
    save_matrix(b.h.matrix(), (fs::path(dir) / matrix_file).string());
    Json j = {{"matrix", matrix_file}, {"split_rows", b.split_rows}, {"claimed", to_json(b.claimed)}, {"report", to_json(b.report)}};
    const std::string path = (fs::path(dir) / (stem + ".json")).string();
    write_file(path, j.dump(2) + "\n");
    return path;
}

BshInstance load_bsh(const std::string& json_path) {
    Json j;
    try {
        j = Json::parse(read_file(json_path));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, json_path + ": " + e.what());
    }
    try {
        fs::path m = fs::path(json_path).parent_path() / j.at("matrix").get<std::string>();
        const Json& c = j.at("claimed");
        SplitParams claimed{c.at("n").get<long long>(), c.at("ell").get<long long>(), c.at("a").get<long long>(),
                            c.at("b").get<long long>()};
        RowSet rows = j.at("split_rows").get<RowSet>();
        return BshInstance(HadamardMatrix(load_matrix(m.string())), rows, claimed);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, json_path + ": " + e.what());
    }
}

std::vector<std::string> save_scheme(const Scheme& s, const std::string& dir) {
    fs::create_directories(dir);
    std::vector<std::string> out;
    for (int i = 0; i <= s.classes(); ++i) {
        std::string p = (fs::path(dir) / ("A" + std::to_string(i) + ".txt")).string();
        save_matrix(s.matrix(i), p);
        out.push_back(p);
    }
    std::string p = (fs::path(dir) / "scheme.json").string();
    write_file(p, to_json(s).dump(2) + "\n");
    out.push_back(p);
    return out;
}

std::vector<IntMatrix> load_scheme_matrices(const std::string& dir) {
    std::vector<IntMatrix> ms;
    for (int i = 0;; ++i) {
        fs::path p = fs::path(dir) / ("A" + std::to_string(i) + ".txt");
        if (!fs::exists(p)) break;
        ms.push_back(load_matrix(p.string()));
    }
    if (ms.size() < 2) fail(ErrorCode::ParseError, dir + ": expected A0.txt, A1.txt, …");
    return ms;
}

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << v;
    return out.str();
}

bool RunReport::ok() const {
    for (const auto& c : checks)
        if (!c.second) return false;
    return true;
}

std::string RunReport::digest() const {
    std::uint64_t h = fnv1a("");
    for (const auto& a : command) h = fnv1a(a + '\0', h);
    for (const auto& p : inputs) h = fnv1a(read_file(p) + '\0', h);
    return hex64(h);
}

Json RunReport::to_json() const {
    Json c = Json::object();
    for (const auto& [name, ok] : checks) c[name] = ok;
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << seconds;
    return {{"command", command}, {"inputs", inputs},   {"inputs_digest", digest()},
            {"outputs", outputs}, {"verification", c}, {"ok", ok()},
            {"timing", {{"seconds", t.str()}}}};
}

}  // namespace bsh
