#pragma once

#include "tropsa/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tropsa {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<IntegerVector>& rows, std::size_t cols);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalVector row(std::size_t i) const;
    RationalVector column(std::size_t j) const;

    RationalMatrix transpose() const;

    RationalVector apply(const RationalVector& x) const;
    RationalVector apply(const IntegerVector& x) const;
    // y^T M
    RationalVector left_apply(const RationalVector& y) const;

    bool operator==(const RationalMatrix& other) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

} // namespace tropsa
