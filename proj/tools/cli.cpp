#include "cli.hpp"

#include "bsh/bundled_data.hpp"
#include "bsh/error.hpp"
#include "bsh/matrix_io.hpp"
#include "bsh/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <ostream>

namespace bsh::cli {

namespace {

namespace fs = std::filesystem;

std::string join(const std::string& dir, const std::string& name) { return (fs::path(dir) / name).string(); }

struct Context {
    std::ostream& out;
    RunReport report;
    Json result = Json::object();
    bool print_json = true;
};

RowSet parse_rows(const std::string& text) {
    RowSet rows;
    std::string token;
    for (char c : text + ",") {
        if (c == ',' || c == ' ') {
            if (!token.empty()) {
                try {
                    rows.push_back(static_cast<std::size_t>(std::stoul(token)));
                } catch (const std::exception&) {
                    fail(ErrorCode::ParseError, "--rows: bad index '" + token + "'");
                }
                token.clear();
            }
        } else {
            token += c;
        }
    }
    return rows;
}

void record_bsh(Context& ctx, const BshInstance& b, const std::string& dir, const std::string& stem,
                const std::string& matrix_stem = "") {
    std::string path = save_bsh(b, dir, stem, matrix_stem);
    ctx.report.outputs.push_back(join(dir, (matrix_stem.empty() ? stem : matrix_stem) + ".txt"));
    ctx.report.outputs.push_back(path);
    BshInstance again = load_bsh(path);
    ctx.report.check(stem + ".hadamard", is_hadamard(again.h.matrix()));
    ctx.report.check(stem + ".reload", again.report.params == b.claimed && again.report.checks.gram_ok);
    ctx.result["splits"][stem] = to_json(again.report);
}

LatinSquare read_latin(Context& ctx, const std::string& path) {
    ctx.report.inputs.push_back(path);
    return load_latin(path);
}

void write_latin(Context& ctx, const LatinSquare& l, const std::string& path) {
    if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
    save_latin(l, path);
    ctx.report.outputs.push_back(path);
    ctx.report.check(fs::path(path).filename().string() + ".reload", load_latin(path) == l);
}

void emit_scheme(Context& ctx, const Scheme& s, const std::string& dir, const std::optional<Eigenmatrices>& closed) {
    for (const auto& p : save_scheme(s, dir)) ctx.report.outputs.push_back(p);
    ctx.report.check("scheme.axioms", true);
    Scheme again = verify_scheme(load_scheme_matrices(dir));
    ctx.report.check("scheme.reload", again.vertices() == s.vertices() && again.classes() == s.classes());
    Eigenmatrices e = eigenmatrices(s);
    ctx.report.check("eigen.pq", pq_identity_holds(e, s.vertices()));
    if (closed) ctx.report.check("eigen.closed_form", match_eigenmatrices(e, *closed).has_value());
    write_file(join(dir, "eigenmatrices.json"), to_json(e).dump(2) + "\n");
    write_file(join(dir, "eigenmatrices.txt"), eigen_table(e));
    ctx.report.outputs.push_back(join(dir, "eigenmatrices.json"));
    ctx.report.outputs.push_back(join(dir, "eigenmatrices.txt"));
    ctx.result["scheme"] = to_json(s);
    ctx.result["eigenmatrices"] = to_json(e);
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::UnknownDataset: return 2;
        default: return 1;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Balancedly splittable Hadamard matrices: constructions, feasibility, Latin squares and schemes", "bsh"};
    app.require_subcommand(1);
    app.fallthrough();
    std::function<void(Context&)> action;
    std::string report_path;
    app.add_option("--report", report_path, "also write the run report JSON here");

    auto on = [&](CLI::App* sub, std::function<void(Context&)> f) { sub->callback([&action, f] { action = f; }); };

    // construct
    auto* construct = app.add_subcommand("construct", "build a Hadamard matrix with a verified split");
    construct->require_subcommand(1);
    std::string out_dir = "out";
    unsigned m = 0, k = 0, n_order = 0, q = 0;
    std::string variant = "large";
    {
        auto* c = construct->add_subcommand("sylvester", "Sylvester matrix of order 2^m");
        c->add_option("--m", m, "exponent")->required();
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) {
            HadamardMatrix h = sylvester(m);
            std::string p = join(out_dir, "sylvester-" + std::to_string(m) + ".txt");
            fs::create_directories(out_dir);
            save_matrix(h.matrix(), p);
            ctx.report.outputs.push_back(p);
            ctx.report.check("hadamard", is_hadamard(load_matrix(p)));
            ctx.result["order"] = h.order();
        });
    }
    {
        auto* c = construct->add_subcommand("kron", "Kronecker square split of a Hadamard matrix of order m");
        c->add_option("--m", m, "order of the seed Hadamard matrix")->required();
        c->add_option("--variant", variant)->check(CLI::IsMember({"large", "small"}));
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) {
            auto v = variant == "large" ? KronVariant::Large : KronVariant::Small;
            record_bsh(ctx, kron_square(hadamard_of_order(m), v), out_dir, "kron-" + variant + "-" + std::to_string(m));
        });
    }
    {
        auto* c = construct->add_subcommand("gram", "Gram construction from a Hadamard matrix of order m");
        c->add_option("--m", m, "order")->required();
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) { record_bsh(ctx, gram_construction(hadamard_of_order(m)), out_dir, "gram-" + std::to_string(m)); });
    }
    {
        auto* c = construct->add_subcommand("core-tensor", "skew core of order k tensored with a Hadamard matrix of order m");
        c->add_option("--k", k, "order of the skew-type matrix")->required();
        c->add_option("--m", m, "order of the second factor")->required();
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) {
            record_bsh(ctx, core_tensor(hadamard_of_order(k), hadamard_of_order(m)), out_dir,
                       "core-tensor-" + std::to_string(k) + "-" + std::to_string(m));
        });
    }
    {
        auto* c = construct->add_subcommand("two-row", "split off two rows of a Hadamard matrix of order n");
        c->add_option("--n", n_order, "order")->required();
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) { record_bsh(ctx, two_row_split(hadamard_of_order(n_order)), out_dir, "two-row-" + std::to_string(n_order)); });
    }
    {
        auto* c = construct->add_subcommand("twin", "twin split of the Sylvester matrix of order 4^m");
        c->add_option("--m", m, "exponent")->required();
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) {
            TwinSylvester t = twin_sylvester(m);
            const std::string stem = "twin-" + std::to_string(m);
            for (int part = 1; part <= 3; ++part) record_bsh(ctx, t.part(part), out_dir, stem + "-h" + std::to_string(part), stem);
        });
    }
    {
        auto* c = construct->add_subcommand("skew-core", "split from the Paley skew core of order q");
        c->add_option("--q", q, "prime power, 3 mod 4")->required();
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) { record_bsh(ctx, skew_core_bsh(paley_skew_core(q)), out_dir, "skew-core-" + std::to_string(q)); });
    }

    long long wn = 0, wl = 0, wa = 0, wb = 0;
    {
        auto* c = construct->add_subcommand("witness", "registered construction for parameters (n,ell,a,b)");
        c->add_option("--n", wn)->required();
        c->add_option("--ell", wl)->required();
        c->add_option("--a", wa)->required();
        c->add_option("--b", wb)->required();
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) {
            SplitParams p{wn, wl, wa, wb};
            auto w = find_witness(p);
            if (!w) fail(ErrorCode::PreconditionViolation, "no registered construction for " + p.str());
            ctx.result["witness"] = w->describe();
            record_bsh(ctx, build_witness(*w), out_dir,
                       "bsh-" + std::to_string(wn) + "-" + std::to_string(wl) + "-" + std::to_string(wa) + "-" + std::to_string(wb));
        });
    }

    // check split
    auto* check = app.add_subcommand("check", "verify a split");
    check->require_subcommand(1);
    std::string matrix_path, rows_text, bsh_path;
    {
        auto* c = check->add_subcommand("split", "check_split on a matrix and a row set");
        auto* mo = c->add_option("--matrix", matrix_path, "Hadamard matrix file");
        auto* ro = c->add_option("--rows", rows_text, "comma-separated row indices");
        auto* so = c->add_option("--bsh", bsh_path, "split sidecar JSON");
        mo->needs(ro);
        so->excludes(mo);
        on(c, [&](Context& ctx) {
            if (!bsh_path.empty()) {
                ctx.report.inputs.push_back(bsh_path);
                BshInstance b = load_bsh(bsh_path);
                ctx.result = to_json(b.report);
                ctx.report.check("matches_claim", b.report.params == b.claimed);
                return;
            }
            if (matrix_path.empty()) throw CLI::RequiredError("--matrix or --bsh");
            ctx.report.inputs.push_back(matrix_path);
            SplitReport r = check_split(HadamardMatrix(load_matrix(matrix_path)), parse_rows(rows_text));
            ctx.result = to_json(r);
            ctx.report.check("gram", r.checks.gram_ok);
            if (r.checks.srg_ok) ctx.report.check("srg", *r.checks.srg_ok);
        });
    }

    // analyze
    auto* analyze = app.add_subcommand("analyze", "derived objects of a split");
    analyze->require_subcommand(1);
    std::string adj_path, hadamard_path, save_path;
    long long pn = 0, pl = 0, pa = 0, pb = 0;
    {
        auto* c = analyze->add_subcommand("srg", "strongly regular parameters of a graph");
        c->add_option("--adj", adj_path, "adjacency matrix file")->required();
        on(c, [&](Context& ctx) {
            ctx.report.inputs.push_back(adj_path);
            auto s = srg_parameters(load_matrix(adj_path));
            ctx.result["srg"] = s ? to_json(*s) : Json(nullptr);
            ctx.report.check("is_srg", s.has_value());
        });
    }
    {
        auto* c = analyze->add_subcommand("seidel", "SRG parameters of the b = −a branch");
        c->add_option("--n", pn)->required();
        c->add_option("--ell", pl)->required();
        c->add_option("--a", pa)->required();
        on(c, [&](Context& ctx) {
            SeidelDerivation d = derive_seidel(pn, pl, pa);
            ctx.result = {{"srg", to_json(d.srg)}, {"valency", d.valency}};
        });
    }
    {
        auto* c = analyze->add_subcommand("equiangular", "equiangular line bound for a b = −a split");
        c->add_option("--n", pn)->required();
        c->add_option("--ell", pl)->required();
        c->add_option("--a", pa)->required();
        c->add_option("--b", pb)->required();
        on(c, [&](Context& ctx) {
            EquiangularReport e = equiangular_report({pn, pl, pa, pb});
            ctx.result = {{"m", e.m}, {"alpha_sq", to_json(GaussRational(e.alpha_sq))}, {"bound", to_json(GaussRational(e.bound))},
                          {"attained", e.attained}};
        });
    }
    for (const char* name : {"unbiased", "regular"}) {
        auto* c = analyze->add_subcommand(name, std::string(name) == "unbiased" ? "unbiased partner of a split" : "regular Hadamard normalization");
        c->add_option("--bsh", bsh_path, "split sidecar JSON")->required();
        c->add_option("--save", save_path, "write the resulting matrix here");
        const bool unbiased = std::string(name) == "unbiased";
        on(c, [&, unbiased](Context& ctx) {
            ctx.report.inputs.push_back(bsh_path);
            BshInstance b = load_bsh(bsh_path);
            HadamardMatrix k = unbiased ? unbiased_partner(b.h, b.report) : regular_hadamard_normalize(b.h, b.report);
            ctx.report.check("hadamard", is_hadamard(k.matrix()));
            if (unbiased) {
                auto root = exact_sqrt(Integer(static_cast<unsigned long>(b.h.order())));
                IntMatrix hk = b.h.matrix() * k.matrix().transpose();
                bool pm = root.has_value();
                for (const Integer& x : hk.entries()) pm = pm && (x == *root || x == -*root);
                ctx.report.check("unbiased", pm);
            } else {
                std::vector<std::string> sums;
                for (const Integer& s : k.matrix().col_sums()) sums.push_back(s.get_str());
                ctx.result["column_sums"] = sums;
                auto cs = k.matrix().col_sums();
                ctx.report.check("regular", std::all_of(cs.begin(), cs.end(), [&](const Integer& s) { return s == cs[0]; }));
            }
            if (!save_path.empty()) {
                save_matrix(k.matrix(), save_path);
                ctx.report.outputs.push_back(save_path);
            }
        });
    }
    {
        auto* c = analyze->add_subcommand("diag", "diagonalize an adjacency matrix by a Hadamard matrix");
        c->add_option("--adj", adj_path)->required();
        c->add_option("--hadamard", hadamard_path)->required();
        on(c, [&](Context& ctx) {
            ctx.report.inputs = {adj_path, hadamard_path};
            Diagonalization d = diagonalize_by_hadamard(load_matrix(adj_path), HadamardMatrix(load_matrix(hadamard_path)));
            Json ev = Json::array(), layout = Json::object();
            for (const auto& e : d.eigenvalues) ev.push_back(e.get_str());
            for (const auto& [e, mult] : d.layout) layout[e.get_str()] = mult;
            ctx.result = {{"eigenvalues", ev}, {"layout", layout}};
            ctx.report.check("diagonalized", true);
        });
    }

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "feasible parameter tables");
    enumerate->require_subcommand(1);
    long long max_n = 0;
    unsigned workers = 1;
    std::string format = "tsv";
    for (const char* name : {"table1", "table2"}) {
        const bool first = std::string(name) == "table1";
        auto* c = enumerate->add_subcommand(name, first ? "b = −a splits with n ≤ N, ℓ ≤ n/2" : "case-a splits with 0 < a < ℓ");
        c->add_option("--max-n", max_n)->required();
        c->add_option("--workers", workers)->check(CLI::PositiveNumber);
        c->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
        on(c, [&, first](Context& ctx) {
            auto rows = first ? enumerate_seidel(max_n, workers) : enumerate_case_a(max_n, workers);
            for (const auto& r : rows) ctx.report.check(r.params.str() + ".srg_identity", r.srg.counting_identity());
            if (format == "tsv") {
                ctx.print_json = false;
                ctx.out << (first ? table1_tsv(rows) : table2_tsv(rows));
            }
            Json arr = Json::array();
            for (const auto& r : rows) arr.push_back(to_json(r));
            ctx.result["rows"] = arr;
        });
    }

    // nonexist eig
    auto* nonexist = app.add_subcommand("nonexist", "non-existence certificates");
    nonexist->require_subcommand(1);
    std::string srg_file, srg_dir, dataset;
    std::size_t budget = kDefaultEigBudget;
    {
        auto* c = nonexist->add_subcommand("eig", "±1 eigenvector search on an SRG");
        auto* f = c->add_option("--srg", srg_file, "adjacency matrix file");
        auto* d = c->add_option("--srg-dir", srg_dir, "directory of adjacency matrix files");
        auto* s = c->add_option("--dataset", dataset, "bundled dataset name");
        f->excludes(d)->excludes(s);
        d->excludes(s);
        c->add_option("--ell", pl)->required();
        c->add_option("--a", pa)->required();
        c->add_option("--b", pb)->required();
        c->add_option("--budget", budget);
        on(c, [&](Context& ctx) {
            std::vector<std::pair<std::string, IntMatrix>> graphs;
            if (!dataset.empty()) {
                graphs.emplace_back(dataset, bundled_data(dataset));
            } else if (!srg_file.empty()) {
                ctx.report.inputs.push_back(srg_file);
                graphs.emplace_back(srg_file, load_matrix(srg_file));
            } else if (!srg_dir.empty()) {
                std::vector<std::string> files;
                for (const auto& e : fs::directory_iterator(srg_dir))
                    if (e.is_regular_file()) files.push_back(e.path().string());
                std::sort(files.begin(), files.end());
                for (const auto& p : files) {
                    ctx.report.inputs.push_back(p);
                    graphs.emplace_back(p, load_matrix(p));
                }
            } else {
                throw CLI::RequiredError("--srg, --srg-dir or --dataset");
            }
            Json arr = Json::array();
            bool all_excluded = true;
            for (const auto& [name, adj] : graphs) {
                EigSearchResult r = eigvec_search(adj, pl, pa, pb, budget);
                Json j = to_json(r);
                j["source"] = name;
                j["excluded"] = r.max_set < static_cast<std::size_t>(pl);
                all_excluded = all_excluded && r.max_set < static_cast<std::size_t>(pl);
                arr.push_back(j);
            }
            ctx.result["graphs"] = arr;
            ctx.result["excluded"] = all_excluded;
        });
    }

    // latin
    auto* latin = app.add_subcommand("latin", "Latin square tools");
    latin->require_subcommand(1);
    std::vector<std::string> files;
    std::string l1_path, l2_path, out_file;
    int v = 0, min_symbol = 0, symbol = 0;
    {
        auto* c = latin->add_subcommand("affine", "mutually UFS squares a(i+j) over GF(q)");
        c->add_option("--q", q)->required();
        c->add_option("--min-symbol", min_symbol)->check(CLI::IsMember({0, 1}));
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) {
            UfsFamily fam = affine_ufs_family(static_cast<int>(q));
            for (std::size_t i = 0; i < fam.size(); ++i)
                write_latin(ctx, relabel(fam[i], min_symbol), join(out_dir, "affine-" + std::to_string(q) + "-" + std::to_string(i + 1) + ".ls"));
            ctx.report.check("mutually_ufs", is_mutually_ufs(fam));
            ctx.result["squares"] = fam.size();
        });
    }
    {
        auto* c = latin->add_subcommand("circle", "symmetric square with constant diagonal 0 of even order v");
        c->add_option("--v", v)->required();
        c->add_option("--out", out_file)->required();
        on(c, [&](Context& ctx) {
            LatinSquare l = circle_symmetric(v);
            write_latin(ctx, l, out_file);
            ctx.report.check("latin", is_latin(l));
            ctx.report.check("symmetric", is_symmetric(l));
            ctx.report.check("constant_diagonal", has_constant_diagonal(l, 0));
        });
    }
    {
        auto* c = latin->add_subcommand("check", "predicates and pairwise UFS");
        c->add_option("--files", files)->required();
        on(c, [&](Context& ctx) {
            std::vector<LatinSquare> sq;
            for (const auto& f : files) sq.push_back(read_latin(ctx, f));
            Json per = Json::array();
            for (std::size_t i = 0; i < sq.size(); ++i) {
                const bool lat = is_latin(sq[i]);
                per.push_back({{"file", files[i]},
                               {"latin", lat},
                               {"symmetric", is_symmetric(sq[i])},
                               {"constant_diagonal", has_constant_diagonal(sq[i], sq[i](0, 0))}});
                ctx.report.check(files[i] + ".latin", lat);
            }
            Json pairs = Json::array();
            for (std::size_t i = 0; i < sq.size(); ++i)
                for (std::size_t j = i + 1; j < sq.size(); ++j)
                    if (sq[i].order == sq[j].order && sq[i].min_symbol == sq[j].min_symbol)
                        pairs.push_back({{"pair", {i, j}}, {"ufs", is_ufs(sq[i], sq[j])}});
            ctx.result = {{"squares", per}, {"pairs", pairs}};
        });
    }
    {
        auto* c = latin->add_subcommand("compose", "square determined by a UFS pair");
        c->add_option("--l1", l1_path)->required();
        c->add_option("--l2", l2_path)->required();
        c->add_option("--out", out_file)->required();
        on(c, [&](Context& ctx) {
            LatinSquare l = compose_ufs(read_latin(ctx, l1_path), read_latin(ctx, l2_path));
            write_latin(ctx, l, out_file);
            ctx.report.check("latin", is_latin(l));
        });
    }
    {
        auto* c = latin->add_subcommand("diagfix", "row-permute squares to a constant diagonal");
        c->add_option("--files", files)->required();
        c->add_option("--symbol", symbol);
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) {
            UfsFamily fam;
            for (const auto& f : files) fam.push_back(read_latin(ctx, f));
            UfsFamily fixed = force_constant_diagonal(fam, symbol);
            for (std::size_t i = 0; i < fixed.size(); ++i)
                write_latin(ctx, fixed[i], join(out_dir, fs::path(files[i]).stem().string() + "-diag.ls"));
            ctx.report.check("ufs_preserved", is_mutually_ufs(fam) == is_mutually_ufs(fixed));
        });
    }

    // scheme
    auto* scheme = app.add_subcommand("scheme", "association schemes");
    scheme->require_subcommand(1);
    std::vector<std::string> latin_files;
    std::string scheme_dir;
    int hn = 0;
    std::string fusion_variant = "01";
    for (const char* name : {"build4", "build4n", "build5", "build6"}) {
        const std::string kind = name;
        auto* c = scheme->add_subcommand(name, "scheme from a split sidecar and Latin squares");
        c->add_option("--bsh", bsh_path, "split sidecar JSON")->required();
        c->add_option("--latin", latin_files, "Latin square files")->required();
        c->add_option("--out", out_dir);
        on(c, [&, kind](Context& ctx) {
            ctx.report.inputs.push_back(bsh_path);
            BshInstance b = load_bsh(bsh_path);
            UfsFamily fam;
            for (const auto& f : latin_files) fam.push_back(read_latin(ctx, f));
            const SplitParams& p = b.report.params;
            std::optional<Scheme> s;
            std::optional<Eigenmatrices> closed;
            if (kind == "build4" || kind == "build4n") {
                if (fam.size() != 1) throw CLI::ValidationError("--latin", "expects exactly one file");
                s = kind == "build4" ? build_4class_symmetric(b, fam[0]) : build_4class_nonsymmetric(b, fam[0]);
                closed = closed_form_4class(p.n, p.ell, p.a, kind == "build4n");
            } else if (kind == "build5") {
                s = build_5class(b, fam);
                closed = closed_form_5class(p.n, p.ell, p.a, static_cast<long long>(fam.size()));
                ctx.report.check("key_identity", five_class_identity_holds(*s, p, static_cast<int>(fam.size())));
            } else {
                s = build_6class(b, fam);
                closed = closed_form_6class(p.n, p.ell, p.a, static_cast<long long>(fam.size()));
            }
            emit_scheme(ctx, *s, out_dir, closed);
        });
    }
    {
        auto* c = scheme->add_subcommand("verify", "check the association scheme axioms");
        c->add_option("--files", files, "A0.txt A1.txt …")->required();
        on(c, [&](Context& ctx) {
            std::vector<IntMatrix> ms;
            for (const auto& f : files) {
                ctx.report.inputs.push_back(f);
                ms.push_back(load_matrix(f));
            }
            Scheme s = verify_scheme(ms);
            ctx.report.check("axioms", true);
            ctx.result = to_json(s);
        });
    }
    {
        auto* c = scheme->add_subcommand("eig", "eigenmatrices of a scheme directory");
        c->add_option("--scheme", scheme_dir)->required();
        on(c, [&](Context& ctx) {
            Scheme s = verify_scheme(load_scheme_matrices(scheme_dir));
            Eigenmatrices e = eigenmatrices(s);
            ctx.report.check("eigen.pq", pq_identity_holds(e, s.vertices()));
            ctx.result = to_json(e);
            ctx.result["table"] = eigen_table(e);
        });
    }
    {
        auto* c = scheme->add_subcommand("hamming", "binary Hamming scheme H(n,2)");
        c->add_option("--n", hn)->required();
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) {
            Scheme s = hamming_scheme(hn);
            ctx.report.check("sylvester_diagonalizes", true);
            emit_scheme(ctx, s, out_dir, std::nullopt);
        });
    }
    {
        auto* c = scheme->add_subcommand("fusion", "two-class fusion of H(n,2)");
        c->add_option("--n", hn)->required();
        c->add_option("--variant", fusion_variant)->check(CLI::IsMember({"01", "03"}));
        c->add_option("--out", out_dir);
        on(c, [&](Context& ctx) {
            Fusion f = muzychuk_fusion(hn, fusion_variant == "01" ? FusionVariant::V01 : FusionVariant::V03);
            ctx.result["srg1"] = to_json(f.srg1);
            ctx.result["srg2"] = to_json(f.srg2);
            ctx.report.check("in_family", f.in_family);
            emit_scheme(ctx, f.scheme, out_dir, std::nullopt);
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    Context ctx{out, {}, Json::object(), true};
    ctx.report.command = args;
    const auto start = std::chrono::steady_clock::now();
    try {
        action(ctx);
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    } catch (const fs::filesystem_error& e) {
        err << "ParseError: " << e.what() << "\n";
        return 2;
    }
    ctx.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json rep = ctx.report.to_json();
    if (ctx.print_json) out << Json{{"result", ctx.result}, {"report", rep}}.dump(2) << "\n";
    if (!report_path.empty()) write_file(report_path, rep.dump(2) + "\n");
    if (!ctx.report.ok()) {
        for (const auto& [name, ok] : ctx.report.checks)
            if (!ok) err << "verification failed: " << name << "\n";
        return 1;
    }
    return 0;
}

}  // namespace bsh::cli
