#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aimm/gf2n.hpp"

namespace aimm {

// Dense matrix over F_2, rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    int get(size_t r, size_t c) const {
        return static_cast<int>((data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1);
    }
    void set(size_t r, size_t c, int bit);

    size_t rref();  // in place, returns the rank

    // Basis of the right kernel: one vector per free column of the reduced
    // form, ordered by free column ascending, with a 1 at its own free
    // column and 0 at every other free column. Empty when the kernel is
    // trivial.
    std::vector<std::vector<uint8_t>> kernel_basis() const;

private:
    size_t rows_, cols_, stride_;
    std::vector<uint64_t> data_;
};

// Dense matrix over F_{2^n}, entries as raw field values. Mirrors
// BitMatrix's reduction and kernel contract so the two code paths stay
// structurally parallel and can be tested against each other.
class FieldMatrix {
public:
    FieldMatrix(const FieldSpec& spec, size_t rows, size_t cols);

    const FieldSpec& spec() const { return spec_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t get(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint32_t value);

    size_t rref();  // in place, pivots normalized to 1

    std::vector<std::vector<uint32_t>> kernel_basis() const;  // same shape as BitMatrix's

private:
    FieldSpec spec_;
    size_t rows_, cols_;
    std::vector<uint32_t> data_;
};

}  // namespace aimm
