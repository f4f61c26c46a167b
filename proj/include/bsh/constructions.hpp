#pragma once

#include "bsh/splittability.hpp"

#include <utility>

namespace bsh {

// A Hadamard matrix with a designated split; verified against its claimed parameters on construction.
struct BshInstance {
    HadamardMatrix h;
    RowSet split_rows;
    SplitParams claimed;
    SplitReport report;

    BshInstance(HadamardMatrix h, RowSet rows, SplitParams claimed);
};

enum class KronVariant { Large, Small };

BshInstance kron_square(const HadamardMatrix& h, KronVariant variant);
BshInstance gram_construction(const HadamardMatrix& h);
BshInstance core_tensor(const HadamardMatrix& h, const HadamardMatrix& k);
BshInstance two_row_split(const HadamardMatrix& h);

struct TwinSylvester {
    HadamardMatrix h;
    RowSet h1_rows, h2_rows, h3_rows;
    BshInstance part(int which) const;  // 1, 2 or 3
};

TwinSylvester twin_sylvester(unsigned m_exponent);

std::pair<IntMatrix, IntMatrix> ja_recursion(const SkewCore& q, unsigned m);
BshInstance skew_core_bsh(const SkewCore& q);

}  // namespace bsh
