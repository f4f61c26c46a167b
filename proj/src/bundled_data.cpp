#include "bsh/bundled_data.hpp"

#include "bsh/error.hpp"
#include "bsh/matrix_io.hpp"

#include <cstdlib>

#ifndef BSH_DEFAULT_DATA_DIR
#define BSH_DEFAULT_DATA_DIR "data"
#endif

namespace bsh {

std::vector<std::string> bundled_names() { return {"srg-36-10-4-2", "shrikhande", "lattice-4x4"}; }

SrgParams bundled_parameters(const std::string& name) {
    if (name == "srg-36-10-4-2") return {36, 10, 4, 2};
    if (name == "shrikhande" || name == "lattice-4x4") return {16, 6, 2, 2};
    fail(ErrorCode::UnknownDataset, "unknown dataset '" + name + "'");
}

std::string data_directory() {
    const char* env = std::getenv("BSH_DATA_DIR");
    return env && *env ? env : BSH_DEFAULT_DATA_DIR;
}

IntMatrix bundled_data(const std::string& name) {
    SrgParams want = bundled_parameters(name);
    IntMatrix a = load_matrix(data_directory() + "/" + name + ".txt");
    auto got = srg_parameters(a);
    if (!got || !(*got == want))
        fail(ErrorCode::ParseError, "dataset " + name + " is not an SRG" + want.str());
    return a;
}

IntMatrix rook_graph(std::size_t m) {
    return IntMatrix::generate(m * m, m * m, [&](std::size_t u, std::size_t v) -> Integer {
        bool same_row = u / m == v / m, same_col = u % m == v % m;
        return (same_row != same_col) ? 1 : 0;
    });
}

IntMatrix shrikhande_graph() {
    return IntMatrix::generate(16, 16, [](std::size_t u, std::size_t v) -> Integer {
        int dx = static_cast<int>((v / 4 + 4 - u / 4) % 4), dy = static_cast<int>((v % 4 + 4 - u % 4) % 4);
        bool conn = (dx == 1 && dy == 0) || (dx == 3 && dy == 0) || (dx == 0 && dy == 1) || (dx == 0 && dy == 3) ||
                    (dx == 1 && dy == 1) || (dx == 3 && dy == 3);
        return conn ? 1 : 0;
    });
}

IntMatrix generate_dataset(const std::string& name) {
    bundled_parameters(name);
    if (name == "srg-36-10-4-2") return rook_graph(6);
    if (name == "lattice-4x4") return rook_graph(4);
    return shrikhande_graph();
}

}  // namespace bsh
