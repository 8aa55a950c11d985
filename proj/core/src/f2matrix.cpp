#include "grw/f2matrix.hpp"

#include <cassert>

namespace grw::f2 {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      data_(static_cast<size_t>(rows) * ((cols + 63) / 64), 0) {}

bool Matrix::get(int i, int j) const
{
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
}

void Matrix::set(int i, int j, bool v)
{
    uint64_t mask = uint64_t(1) << (j & 63);
    if (v)
        row(i)[j >> 6] |= mask;
    else
        row(i)[j >> 6] &= ~mask;
}

void Matrix::toggle(int i, int j)
{
    row(i)[j >> 6] ^= uint64_t(1) << (j & 63);
}

void Matrix::xor_rows(int dst, int src)
{
    uint64_t* d = row(dst);
    const uint64_t* s = row(src);
    for (int w = 0; w < words_; ++w)
        d[w] ^= s[w];
}

void Matrix::swap_rows(int a, int b)
{
    if (a == b)
        return;
    uint64_t* ra = row(a);
    uint64_t* rb = row(b);
    for (int w = 0; w < words_; ++w)
        std::swap(ra[w], rb[w]);
}

void Matrix::append_row()
{
    data_.resize(data_.size() + words_, 0);
    ++rows_;
}

void Matrix::append_row(const std::vector<uint8_t>& bits)
{
    assert(static_cast<int>(bits.size()) == cols_);
    append_row();
    for (int j = 0; j < cols_; ++j)
        if (bits[j])
            set(rows_ - 1, j, true);
}

std::vector<uint8_t> Matrix::row_bits(int i) const
{
    std::vector<uint8_t> out(cols_);
    for (int j = 0; j < cols_; ++j)
        out[j] = get(i, j);
    return out;
}

std::vector<int> Matrix::rref()
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (get(i, c)) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        swap_rows(p, r);
        for (int i = 0; i < rows_; ++i)
            if (i != r && get(i, c))
                xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Matrix::rank() const
{
    Matrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

Matrix Matrix::kernel() const
{
    Matrix copy = *this;
    std::vector<int> pivots = copy.rref();
    std::vector<int> pivot_of_col(cols_, -1);
    for (size_t k = 0; k < pivots.size(); ++k)
        pivot_of_col[pivots[k]] = static_cast<int>(k);

    Matrix ker(0, cols_);
    for (int c = 0; c < cols_; ++c) {
        if (pivot_of_col[c] >= 0)
            continue;
        ker.append_row();
        int i = ker.rows() - 1;
        ker.set(i, c, true);
        for (size_t k = 0; k < pivots.size(); ++k)
            if (copy.get(static_cast<int>(k), c))
                ker.set(i, pivots[k], true);
    }
    return ker;
}

Matrix Matrix::left_kernel() const
{
    // Augment with an identity, eliminate on the data columns; rows
    // whose data part vanishes record the combinations.
    Matrix aug(rows_, cols_ + rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            if (get(i, j))
                aug.set(i, j, true);
        aug.set(i, cols_ + i, true);
    }
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (aug.get(i, c)) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        aug.swap_rows(p, r);
        for (int i = 0; i < rows_; ++i)
            if (i != r && aug.get(i, c))
                aug.xor_rows(i, r);
        ++r;
    }
    Matrix ker(0, rows_);
    for (int i = r; i < rows_; ++i) {
        ker.append_row();
        for (int k = 0; k < rows_; ++k)
            if (aug.get(i, cols_ + k))
                ker.set(ker.rows() - 1, k, true);
    }
    return ker;
}

std::optional<Matrix> Matrix::inverse() const
{
    if (rows_ != cols_)
        return std::nullopt;
    int n = rows_;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (get(i, j))
                aug.set(i, j, true);
        aug.set(i, n + i, true);
    }
    int r = 0;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (aug.get(i, c)) {
                p = i;
                break;
            }
        if (p < 0)
            return std::nullopt;  // singular
        aug.swap_rows(p, r);
        for (int i = 0; i < n; ++i)
            if (i != r && aug.get(i, c))
                aug.xor_rows(i, r);
        ++r;
    }
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (aug.get(i, n + j))
                inv.set(i, j, true);
    return inv;
}

std::vector<uint8_t> Matrix::mul_left(const std::vector<uint8_t>& v) const
{
    assert(static_cast<int>(v.size()) == rows_);
    std::vector<uint8_t> out(cols_, 0);
    for (int i = 0; i < rows_; ++i)
        if (v[i])
            for (int j = 0; j < cols_; ++j)
                out[j] ^= get(i, j);
    return out;
}

std::optional<std::vector<uint8_t>> Matrix::solve_left(const std::vector<uint8_t>& v) const
{
    assert(static_cast<int>(v.size()) == cols_);
    // Eliminate on a copy, tracking the row combination in an augment.
    Matrix a = *this;
    Matrix comb(rows_, rows_);
    for (int i = 0; i < rows_; ++i)
        comb.set(i, i, true);

    std::vector<uint8_t> target = v;
    std::vector<uint8_t> coeffs(rows_, 0);

    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (a.get(i, c)) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        a.swap_rows(p, r);
        comb.swap_rows(p, r);
        for (int i = 0; i < rows_; ++i)
            if (i != r && a.get(i, c))
                a.xor_rows(i, r), comb.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    for (int k = 0; k < r; ++k) {
        if (target[pivots[k]]) {
            for (int j = 0; j < cols_; ++j)
                target[j] ^= a.get(k, j);
            for (int i = 0; i < rows_; ++i)
                coeffs[i] ^= comb.get(k, i);
        }
    }
    for (int j = 0; j < cols_; ++j)
        if (target[j])
            return std::nullopt;
    return coeffs;
}

bool Matrix::same_row_space(const Matrix& o) const
{
    if (cols_ != o.cols_)
        return false;
    Matrix a = *this, b = o;
    a.rref();
    b.rref();
    auto nonzero_rows = [](const Matrix& m) {
        std::vector<std::vector<uint8_t>> rows;
        for (int i = 0; i < m.rows(); ++i) {
            auto bits = m.row_bits(i);
            bool nz = false;
            for (auto x : bits)
                nz |= x != 0;
            if (nz)
                rows.push_back(std::move(bits));
        }
        return rows;
    };
    return nonzero_rows(a) == nonzero_rows(b);
}

bool Matrix::row_space_contains(const std::vector<uint8_t>& v) const
{
    Matrix a = *this;
    int r0 = a.rank();
    a.append_row(v);
    return a.rank() == r0;
}

}  // namespace grw::f2
