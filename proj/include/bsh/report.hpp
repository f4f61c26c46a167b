#pragma once

#include "bsh/feasibility.hpp"
#include "bsh/schemes.hpp"

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bsh {

using Json = nlohmann::ordered_json;

Json to_json(const SplitParams& p);
Json to_json(const SrgParams& p);
Json to_json(const SplitReport& r);
// {num, den} or {num, den, imag_num}: (num + i·imag_num)/den.
Json to_json(const GaussRational& z);
GaussRational gauss_from_json(const Json& j);
Json to_json(const Eigenmatrices& e);
Eigenmatrices eigenmatrices_from_json(const Json& j);
Json to_json(const Scheme& s);
Json to_json(const FeasibleRow& row);
Json to_json(const EigSearchResult& r);

std::string table1_tsv(const std::vector<FeasibleRow>& rows);
std::string table2_tsv(const std::vector<FeasibleRow>& rows);
std::string eigen_table(const Eigenmatrices& e);

// <dir>/<matrix_stem>.txt holds the matrix (matrix_stem defaults to stem), <dir>/<stem>.json the
// split rows and claimed parameters.
std::string save_bsh(const BshInstance& b, const std::string& dir, const std::string& stem,
                     const std::string& matrix_stem = "");
BshInstance load_bsh(const std::string& json_path);

// <dir>/A<i>.txt for every class plus scheme.json.
std::vector<std::string> save_scheme(const Scheme& s, const std::string& dir);
std::vector<IntMatrix> load_scheme_matrices(const std::string& dir);

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

struct RunReport {
    std::vector<std::string> command;
    std::vector<std::string> inputs;  // file paths folded into the digest
    std::vector<std::string> outputs;
    std::vector<std::pair<std::string, bool>> checks;
    double seconds = 0;

    void check(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
    bool ok() const;
    // Digest over the command line and input file contents; timing is not part of it.
    std::string digest() const;
    Json to_json() const;
};

}  // namespace bsh
