#include "tropsa/matrix.hpp"

#include "tropsa/error.hpp"

namespace tropsa {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) fail(ErrorKind::Precondition, "ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<IntegerVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail(ErrorKind::Precondition, "row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail(ErrorKind::Precondition, "row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
    return RationalVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RationalVector RationalMatrix::column(std::size_t j) const {
    RationalVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
    if (x.size() != cols_) fail(ErrorKind::Precondition, "matrix-vector size mismatch");
    RationalVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

RationalVector RationalMatrix::apply(const IntegerVector& x) const {
    return apply(to_rational(x));
}

RationalVector RationalMatrix::left_apply(const RationalVector& y) const {
    if (y.size() != rows_) fail(ErrorKind::Precondition, "vector-matrix size mismatch");
    RationalVector out(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (y[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) out[j] += y[i] * (*this)(i, j);
    }
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string RationalMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += " ";
            s += tropsa::to_string((*this)(i, j));
        }
    }
    return s + "]";
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) fail(ErrorKind::Precondition, "matrix product size mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

} // namespace tropsa
