#pragma once

#include <cstdint>
#include <vector>

#include "pngdet/weight_field.hpp"

namespace pngdet {

// Weakly decreasing nonnegative parts; trailing zeros trimmed.
struct Partition {
    std::vector<std::int64_t> parts;

    std::int64_t part(size_t j) const {  // 1-based, zero beyond the last part
        return (j >= 1 && j <= parts.size()) ? parts[j - 1] : 0;
    }
    bool operator==(const Partition& o) const { return parts == o.parts; }
};

// Shape of the RSK image of the submatrix (w(i,j))_{i<=M, j<=N}, computed by
// row insertion of the biword.  Independent oracle for the multilayer map.
Partition rsk_shape(const WeightField& field, int M, int N);

}  // namespace pngdet
