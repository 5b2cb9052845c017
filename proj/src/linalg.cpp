#include "aimm/linalg.hpp"

#include <stdexcept>

namespace aimm {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

void BitMatrix::set(size_t r, size_t c, int bit) {
    uint64_t& w = data_[r * stride_ + (c >> 6)];
    uint64_t m = 1ull << (c & 63);
    if (bit)
        w |= m;
    else
        w &= ~m;
}

size_t BitMatrix::rref() {
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t pivot = rank;
        while (pivot < rows_ && !get(pivot, col)) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (size_t k = 0; k < stride_; ++k)
                std::swap(data_[pivot * stride_ + k], data_[rank * stride_ + k]);
        for (size_t r = 0; r < rows_; ++r) {
            if (r == rank || !get(r, col)) continue;
            for (size_t k = 0; k < stride_; ++k)
                data_[r * stride_ + k] ^= data_[rank * stride_ + k];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<uint8_t>> BitMatrix::kernel_basis() const {
    BitMatrix m = *this;
    size_t rank = m.rref();

    std::vector<size_t> pivot_col(rank);
    std::vector<uint8_t> is_pivot(cols_, 0);
    for (size_t r = 0, col = 0; r < rank; ++r) {
        while (!m.get(r, col)) ++col;
        pivot_col[r] = col;
        is_pivot[col] = 1;
    }

    std::vector<std::vector<uint8_t>> basis;
    for (size_t j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        std::vector<uint8_t> v(cols_, 0);
        v[j] = 1;
        for (size_t r = 0; r < rank; ++r)
            v[pivot_col[r]] = static_cast<uint8_t>(m.get(r, j));
        basis.push_back(std::move(v));
    }
    return basis;
}

FieldMatrix::FieldMatrix(const FieldSpec& spec, size_t rows, size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

void FieldMatrix::set(size_t r, size_t c, uint32_t value) {
    if (value >= spec_.order())
        throw std::invalid_argument("matrix entry out of field range");
    data_[r * cols_ + c] = value;
}

size_t FieldMatrix::rref() {
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t pivot = rank;
        while (pivot < rows_ && get(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (size_t k = 0; k < cols_; ++k)
                std::swap(data_[pivot * cols_ + k], data_[rank * cols_ + k]);
        uint32_t scale = spec_.inv(get(rank, col));
        for (size_t k = col; k < cols_; ++k)
            data_[rank * cols_ + k] = spec_.mul(data_[rank * cols_ + k], scale);
        for (size_t r = 0; r < rows_; ++r) {
            uint32_t factor = get(r, col);
            if (r == rank || factor == 0) continue;
            for (size_t k = col; k < cols_; ++k)
                data_[r * cols_ + k] ^= spec_.mul(factor, data_[rank * cols_ + k]);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<uint32_t>> FieldMatrix::kernel_basis() const {
    FieldMatrix m = *this;
    size_t rank = m.rref();

    std::vector<size_t> pivot_col(rank);
    std::vector<uint8_t> is_pivot(cols_, 0);
    for (size_t r = 0, col = 0; r < rank; ++r) {
        while (m.get(r, col) == 0) ++col;
        pivot_col[r] = col;
        is_pivot[col] = 1;
    }

    // v[free] = 1 and v[pivot_r] = m[r][free] solves Mv = 0 in
    // characteristic 2, where subtraction is addition.
    std::vector<std::vector<uint32_t>> basis;
    for (size_t j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        std::vector<uint32_t> v(cols_, 0);
        v[j] = 1;
        for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = m.get(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace aimm
