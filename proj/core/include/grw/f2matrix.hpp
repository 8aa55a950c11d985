#pragma once

// Dense linear algebra over F2 with 64-bit packed rows.

#include <cstdint>
#include <optional>
#include <vector>

namespace grw::f2 {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const;
    void set(int i, int j, bool v);
    void toggle(int i, int j);
    void xor_rows(int dst, int src);  // row[dst] ^= row[src]
    void swap_rows(int a, int b);
    void append_row();
    void append_row(const std::vector<uint8_t>& bits);

    std::vector<uint8_t> row_bits(int i) const;

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<int> rref();
    int rank() const;

    // Basis of the right kernel {x : M x = 0}, one vector per row.
    Matrix kernel() const;

    // Basis of the left kernel {x : x M = 0}, one vector per row.
    Matrix left_kernel() const;

    // Inverse of a square matrix; nullopt when singular.
    std::optional<Matrix> inverse() const;

    // v * M for a row vector v of length rows().
    std::vector<uint8_t> mul_left(const std::vector<uint8_t>& v) const;

    // Solve x M = v (row-vector convention); nullopt when inconsistent.
    std::optional<std::vector<uint8_t>> solve_left(const std::vector<uint8_t>& v) const;

    // Row space comparison and membership.
    bool same_row_space(const Matrix& o) const;
    bool row_space_contains(const std::vector<uint8_t>& v) const;

private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;  // rows_ x words_

    uint64_t* row(int i) { return data_.data() + static_cast<size_t>(i) * words_; }
    const uint64_t* row(int i) const { return data_.data() + static_cast<size_t>(i) * words_; }
};

}  // namespace grw::f2
