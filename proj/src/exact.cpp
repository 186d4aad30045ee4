#include "kmweyl/exact.hpp"

#include <numeric>
#include <utility>

namespace kmweyl {

IntMatrix unimodular_inverse(const IntMatrix& m) {
    const int n = m.size();
    // Gauss-Jordan over the rationals, then require integrality.
    std::vector<RatVec> aug(n, RatVec(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rat(m.at(i, j));
        aug[i][n + i] = 1;
    }
    for (int col = 0, piv = 0; col < n; ++col) {
        int sel = -1;
        for (int r = piv; r < n; ++r)
            if (aug[r][col] != 0) { sel = r; break; }
        if (sel < 0) throw ComputationError("unimodular_inverse: singular matrix");
        std::swap(aug[piv], aug[sel]);
        const Rat pv = aug[piv][col];
        for (auto& x : aug[piv]) x /= pv;
        for (int r = 0; r < n; ++r) {
            if (r == piv || aug[r][col] == 0) continue;
            const Rat f = aug[r][col];
            for (int j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[piv][j];
        }
        ++piv;
    }
    IntMatrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& v = aug[i][n + j];
            if (denominator(v) != 1)
                throw ComputationError("unimodular_inverse: inverse is not integral");
            inv.at(i, j) = numerator(v);
        }
    return inv;
}

std::vector<int> rref(std::vector<RatVec>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int ncols = static_cast<int>(rows[0].size());
    int piv = 0;
    for (int col = 0; col < ncols && piv < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int r = piv; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(rows[piv], rows[sel]);
        const Rat pv = rows[piv][col];
        for (auto& x : rows[piv]) x /= pv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == piv || rows[r][col] == 0) continue;
            const Rat f = rows[r][col];
            for (int j = col; j < ncols; ++j) rows[r][j] -= f * rows[piv][j];
            rows[r][col] = 0;
        }
        pivots.push_back(col);
        ++piv;
    }
    return pivots;
}

std::vector<RatVec> nullspace(std::vector<RatVec> rows) {
    if (rows.empty()) return {};
    const int ncols = static_cast<int>(rows[0].size());
    const std::vector<int> pivots = rref(rows);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (int fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        RatVec v(ncols);
        v[fc] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVec solve_linear(std::vector<RatVec> a, RatVec b) {
    const int nrows = static_cast<int>(a.size());
    if (nrows == 0) return {};
    const int ncols = static_cast<int>(a[0].size());
    for (int i = 0; i < nrows; ++i) a[i].push_back(b[i]);
    const std::vector<int> pivots = rref(a);
    if (static_cast<int>(pivots.size()) < ncols || (!pivots.empty() && pivots.back() == ncols))
        throw ComputationError("solve_linear: singular or inconsistent system");
    for (int r = static_cast<int>(pivots.size()); r < nrows; ++r)
        if (a[r][ncols] != 0)
            throw ComputationError("solve_linear: inconsistent system");
    RatVec x(ncols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
    return x;
}

RatVec normalize_primitive(RatVec v) {
    Int den_lcm = 1;
    for (const Rat& x : v)
        if (x != 0) den_lcm = lcm(den_lcm, denominator(x));
    Int num_gcd = 0;
    for (const Rat& x : v)
        if (x != 0) num_gcd = gcd(num_gcd, Int(numerator(x) * (den_lcm / denominator(x))));
    if (num_gcd == 0) return v;
    Rat scale(den_lcm, num_gcd);
    for (const Rat& x : v)
        if (x != 0) { if (x * scale < 0) scale = -scale; break; }
    for (Rat& x : v) x *= scale;
    return v;
}

} // namespace kmweyl
