#include "tropsa/linalg.hpp"

#include "simplex.hpp"
#include "tropsa/error.hpp"

#include <algorithm>
#include <utility>

namespace tropsa::linalg {

namespace {

// Below this many remaining entries the OpenMP fork costs more than it saves.
constexpr std::size_t kParallelWork = 4096;

std::vector<IntegerVector> integer_rows(const RationalMatrix& m) {
    std::vector<IntegerVector> rows(m.rows(), IntegerVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return rows;
}

void update_row(IntegerVector& row, const IntegerVector& pivot_row, std::size_t c, const Integer& prev) {
    const Integer piv = pivot_row[c];
    const Integer lead = row[c];
    Integer t;
    for (std::size_t j = c + 1; j < row.size(); ++j) {
        t = piv * row[j] - lead * pivot_row[j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
    }
    row[c] = 0;
}

Echelon bareiss_impl(const RationalMatrix& m, bool parallel) {
    std::vector<IntegerVector> a = integer_rows(m);
    const std::size_t n = a.size();
    const std::size_t cols = m.cols();
    Echelon out;
    out.cols = cols;

    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(a[r], a[p]);

        const long lo = static_cast<long>(r + 1);
        const long hi = static_cast<long>(n);
        const bool fork = parallel && (n - r) * (cols - c) >= kParallelWork;
        const IntegerVector& pivot_row = a[r];
#pragma omp parallel for schedule(static) if (fork)
        for (long i = lo; i < hi; ++i) update_row(a[i], pivot_row, c, prev);

        prev = a[r][c];
        out.pivot_columns.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::vector<IntegerVector> kernel_from_echelon(const Echelon& e) {
    std::vector<bool> is_pivot(e.cols, false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;

    std::vector<IntegerVector> basis;
    for (std::size_t f = 0; f < e.cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(e.cols);
        x[f] = 1;
        for (std::size_t k = e.rows.size(); k-- > 0;) {
            const std::size_t pc = e.pivot_columns[k];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < e.cols; ++j)
                if (x[j] != 0 && e.rows[k][j] != 0) s += e.rows[k][j] * x[j];
            x[pc] = -s / e.rows[k][pc];
        }
        basis.push_back(normalized_primitive(x));
    }
    return basis;
}

// Reduced row echelon form over Q, in place. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        const Rational piv = a[r][c];
        for (auto& x : a[r]) x /= piv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < a[i].size(); ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Echelon bareiss(const RationalMatrix& m) { return bareiss_impl(m, true); }

std::size_t rank(const RationalMatrix& m) { return bareiss(m).pivot_columns.size(); }

std::size_t rank_gauss(const RationalMatrix& m) {
    std::vector<RationalVector> a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) a[i] = m.row(i);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<IntegerVector> kernel_basis(const RationalMatrix& m) {
    return kernel_from_echelon(bareiss(m));
}

std::vector<IntegerVector> left_kernel_basis(const RationalMatrix& m) {
    return kernel_basis(m.transpose());
}

std::optional<RationalVector> strictly_positive_kernel_point(const RationalMatrix& m) {
    // x = 1 + z with z >= 0:  M z = -M 1
    RationalVector ones(m.cols(), Rational(1));
    RationalVector rhs = m.apply(ones);
    for (auto& x : rhs) x = -x;
    auto z = detail::nonnegative_solution(m, rhs);
    if (!z) return std::nullopt;
    for (auto& x : *z) x += 1;
    return z;
}

std::vector<IntegerVector> row_space_basis(const std::vector<IntegerVector>& vectors, std::size_t dim) {
    std::vector<RationalVector> a;
    a.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != dim) fail(ErrorKind::Precondition, "row_space_basis: dimension mismatch");
        a.push_back(to_rational(v));
    }
    const auto pivots = rref(a, dim);
    std::vector<IntegerVector> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(primitive_on_ray(a[i]));
    return out;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
    if (b.size() != a.rows()) fail(ErrorKind::Precondition, "solve: rhs size mismatch");
    std::vector<RationalVector> aug(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        aug[i] = a.row(i);
        aug[i].push_back(b[i]);
    }
    const auto pivots = rref(aug, a.cols() + 1);
    RationalVector x(a.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == a.cols()) return std::nullopt;
        x[pivots[k]] = aug[k][a.cols()];
    }
    return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::Precondition, "inverse of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<RationalVector> aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i] = a.row(i);
        aug[i].resize(2 * n);
        aug[i][n + i] = 1;
    }
    const auto pivots = rref(aug, n);
    if (pivots.size() != n) return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j];
    return inv;
}

namespace serial {

Echelon bareiss(const RationalMatrix& m) { return bareiss_impl(m, false); }

std::size_t rank(const RationalMatrix& m) { return serial::bareiss(m).pivot_columns.size(); }

} // namespace serial

} // namespace tropsa::linalg
