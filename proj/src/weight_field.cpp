#include "pngdet/weight_field.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace pngdet {

GeomParams GeomParams::homogeneous(double q, int len_a, int len_b) {
    if (q < 0.0 || q >= 1.0) throw std::invalid_argument("homogeneous: need 0 <= q < 1");
    double alpha = std::sqrt(q);
    GeomParams p;
    p.a.assign(len_a, alpha);
    p.b.assign(len_b, alpha);
    return p;
}

void GeomParams::validate() const {
    for (double ai : a)
        if (!(ai >= 0.0 && ai < 1.0)) throw std::invalid_argument("GeomParams: a_i outside [0,1)");
    for (double bj : b)
        if (!(bj >= 0.0 && bj < 1.0)) throw std::invalid_argument("GeomParams: b_j outside [0,1)");
    for (double ai : a)
        for (double bj : b)
            if (!(ai * bj < 1.0)) throw std::invalid_argument("GeomParams: a_i*b_j >= 1");
}

bool WeightField::supported_in_antidiagonal(int bound) const {
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            if (i + j > bound && (*this)(i, j) != 0) return false;
    return true;
}

WeightField WeightField::padded(int rows, int cols) const {
    WeightField out(rows, cols);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) {
            std::int64_t v = (*this)(i, j);
            if (v == 0) continue;
            if (i > rows || j > cols)
                throw std::invalid_argument("padded: nonzero weight would be dropped");
            out.at(i, j) = v;
        }
    return out;
}

WeightField WeightField::transposed() const {
    WeightField out(cols_, rows_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) out.at(j, i) = (*this)(i, j);
    return out;
}

void WeightField::write_csv(std::ostream& os, double q, std::uint64_t seed) const {
    os << "# " << rows_ << " " << cols_ << " " << q << " " << seed << "\n";
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            if (j > 1) os << ",";
            os << (*this)(i, j);
        }
        os << "\n";
    }
}

WeightField WeightField::read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.empty() || line[0] != '#')
        throw std::runtime_error("WeightField::read_csv: missing header line");
    std::istringstream hdr(line.substr(1));
    int rows, cols;
    double q;
    std::uint64_t seed;
    if (!(hdr >> rows >> cols >> q >> seed))
        throw std::runtime_error("WeightField::read_csv: bad header");
    WeightField out(rows, cols);
    for (int i = 1; i <= rows; ++i) {
        if (!std::getline(is, line)) throw std::runtime_error("WeightField::read_csv: short file");
        std::istringstream row(line);
        std::string cell;
        for (int j = 1; j <= cols; ++j) {
            if (!std::getline(row, cell, ',')) throw std::runtime_error("WeightField::read_csv: short row");
            out.at(i, j) = std::stoll(cell);
        }
    }
    return out;
}

WeightField sample_weight_field(const GeomParams& params, int rows, int cols, std::uint64_t seed) {
    params.validate();
    if (rows < 1 || cols < 1) throw std::invalid_argument("sample_weight_field: need rows, cols >= 1");
    if (static_cast<int>(params.a.size()) < rows || static_cast<int>(params.b.size()) < cols)
        throw std::invalid_argument("sample_weight_field: parameter sequences shorter than the field");
    WeightField out(rows, cols);
    Rng rng(seed);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            out.at(i, j) = rng.geometric(params.a[i - 1] * params.b[j - 1]);
    return out;
}

}  // namespace pngdet
