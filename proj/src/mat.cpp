#include "bilform/mat.hpp"

#include <stdexcept>

namespace bilform {

Mat::Mat(FieldPtr field, std::uint32_t rows, std::uint32_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix needs a field");
}

Mat Mat::identity(FieldPtr field, std::uint32_t n) {
    Mat m(std::move(field), n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(FieldPtr field, std::uint32_t cols,
                   const std::vector<std::vector<code_t>>& rows) {
    Mat m(std::move(field), static_cast<std::uint32_t>(rows.size()), cols);
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::uint32_t c = 0; c < cols; ++c) {
            if (rows[r][c] >= m.field_->q())
                throw std::invalid_argument("entry code out of range");
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

Mat Mat::transpose() const {
    Mat m(field_, cols_, rows_);
    for (std::uint32_t r = 0; r < rows_; ++r)
        for (std::uint32_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Mat Mat::sub(const Mat& rhs) const {
    if (!field_ || !rhs.field_ || !(*field_ == *rhs.field_))
        throw std::invalid_argument("matrix fields differ");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix shapes differ");
    Mat m(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = field_->sub(a_[i], rhs.a_[i]);
    return m;
}

Mat Mat::mul(const Mat& rhs) const {
    if (!field_ || !rhs.field_ || !(*field_ == *rhs.field_))
        throw std::invalid_argument("matrix fields differ");
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shapes incompatible");
    Mat m(field_, rows_, rhs.cols_);
    for (std::uint32_t r = 0; r < rows_; ++r)
        for (std::uint32_t k = 0; k < cols_; ++k) {
            code_t v = at(r, k);
            if (v == 0) continue;
            for (std::uint32_t c = 0; c < rhs.cols_; ++c)
                m.at(r, c) = field_->add(m.at(r, c), field_->mul(v, rhs.at(k, c)));
        }
    return m;
}

bool Mat::operator==(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    if (field_ == rhs.field_) return a_ == rhs.a_;
    if (!field_ || !rhs.field_) return false;
    return *field_ == *rhs.field_ && a_ == rhs.a_;
}

Mat vstack(const Mat& top, const Mat& bottom) {
    if (!(*top.field() == *bottom.field()))
        throw std::invalid_argument("matrix fields differ");
    if (top.cols() != bottom.cols()) throw std::invalid_argument("column counts differ");
    Mat m(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::uint32_t r = 0; r < top.rows(); ++r)
        for (std::uint32_t c = 0; c < top.cols(); ++c) m.at(r, c) = top.at(r, c);
    for (std::uint32_t r = 0; r < bottom.rows(); ++r)
        for (std::uint32_t c = 0; c < bottom.cols(); ++c)
            m.at(top.rows() + r, c) = bottom.at(r, c);
    return m;
}

std::vector<code_t> apply_row(std::span<const code_t> v, const Mat& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector length mismatch");
    const Field& k = *m.field();
    std::vector<code_t> out(m.cols(), 0);
    for (std::uint32_t r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) continue;
        for (std::uint32_t c = 0; c < m.cols(); ++c)
            out[c] = k.add(out[c], k.mul(v[r], m.at(r, c)));
    }
    return out;
}

}  // namespace bilform
