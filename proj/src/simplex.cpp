#include "simplex.hpp"

#include "tropsa/error.hpp"

#include <vector>

namespace tropsa::detail {

std::optional<RationalVector> nonnegative_solution(const RationalMatrix& a, const RationalVector& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ensure(b.size() == m, "simplex: rhs size mismatch");

    // columns: n originals, m artificials, then rhs
    const std::size_t width = n + m + 1;
    const std::size_t rhs = n + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const int s = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a(i, j);
        t[i][n + i] = 1;
        t[i][rhs] = s * b[i];
        basis[i] = n + i;
    }

    // reduced costs of sum(artificials)
    std::vector<Rational> cost(width);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) cost[rhs] -= t[i][rhs];

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        // phase one is bounded below by zero, so some row must qualify
        ensure(leave != m, "simplex: unbounded phase one");

        const Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    RationalVector z(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= n) {
            if (t[i][rhs] != 0) return std::nullopt;
        } else {
            z[basis[i]] = t[i][rhs];
        }
    }
    return z;
}

} // namespace tropsa::detail
