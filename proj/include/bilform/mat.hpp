#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bilform/gf.hpp"

namespace bilform {

// Dense row-major matrix over a finite field. Value type; equality compares
// the field (by value), the shape, and every entry.
class Mat {
public:
    Mat() = default;
    Mat(FieldPtr field, std::uint32_t rows, std::uint32_t cols);  // zero-filled
    static Mat identity(FieldPtr field, std::uint32_t n);
    static Mat from_rows(FieldPtr field, std::uint32_t cols,
                         const std::vector<std::vector<code_t>>& rows);

    const FieldPtr& field() const { return field_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    code_t at(std::uint32_t r, std::uint32_t c) const { return a_[r * cols_ + c]; }
    code_t& at(std::uint32_t r, std::uint32_t c) { return a_[r * cols_ + c]; }
    std::span<const code_t> row(std::uint32_t r) const {
        return {a_.data() + r * cols_, cols_};
    }
    std::vector<code_t> row_vec(std::uint32_t r) const {
        return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_};
    }
    const std::vector<code_t>& data() const { return a_; }

    Mat transpose() const;
    Mat sub(const Mat& rhs) const;  // entrywise difference
    Mat mul(const Mat& rhs) const;  // matrix product

    bool operator==(const Mat& rhs) const;

private:
    FieldPtr field_;
    std::uint32_t rows_ = 0, cols_ = 0;
    std::vector<code_t> a_;
};

Mat vstack(const Mat& top, const Mat& bottom);

// Row vector v mapped through the matrix: returns v * m.
std::vector<code_t> apply_row(std::span<const code_t> v, const Mat& m);

}  // namespace bilform
