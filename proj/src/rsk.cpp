#include "pngdet/rsk.hpp"

#include <algorithm>

namespace pngdet {

Partition rsk_shape(const WeightField& field, int M, int N) {
    if (M > N) throw std::invalid_argument("rsk_shape: need M <= N");
    // Biword of the submatrix in lexicographic order: (i,j) repeated w(i,j)
    // times, i ascending and j ascending within each i.  Only the bottom row
    // gets inserted; the shape is all we need.
    std::vector<std::vector<std::int64_t>> tableau;
    for (int i = 1; i <= std::min(M, field.rows()); ++i) {
        for (int j = 1; j <= std::min(N, field.cols()); ++j) {
            std::int64_t mult = field(i, j);
            for (std::int64_t c = 0; c < mult; ++c) {
                // row-insert the letter j
                std::int64_t letter = j;
                size_t row = 0;
                for (;;) {
                    if (row == tableau.size()) {
                        tableau.push_back({letter});
                        break;
                    }
                    auto& r = tableau[row];
                    // first entry strictly greater than the letter gets bumped
                    auto it = std::upper_bound(r.begin(), r.end(), letter);
                    if (it == r.end()) {
                        r.push_back(letter);
                        break;
                    }
                    std::swap(*it, letter);
                    ++row;
                }
            }
        }
    }
    Partition shape;
    for (auto& r : tableau) shape.parts.push_back(static_cast<std::int64_t>(r.size()));
    return shape;
}

}  // namespace pngdet
