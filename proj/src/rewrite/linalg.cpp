#include "qhc/rewrite/linalg.hpp"

#include "qhc/coeff/fp.hpp"
#include "qhc/simd/modp.hpp"

#include <utility>

namespace qhc {

std::vector<size_t> echelon_modp(std::vector<ModpRow>& rows, size_t cols) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t k = r;
        while (k < rows.size() && rows[k][c] == 0) ++k;
        if (k == rows.size()) continue;
        std::swap(rows[r], rows[k]);
        uint32_t inv = Fp::raw(rows[r][c]).inverse().value();
        for (size_t j = c; j < cols; ++j) rows[r][j] = Fp::reduce(uint64_t(rows[r][j]) * inv);
        for (size_t i = r + 1; i < rows.size(); ++i)
            if (rows[i][c]) simd::submul_modp(rows[i].data() + c, rows[r].data() + c, rows[i][c], cols - c);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank_modp(std::vector<ModpRow> rows, size_t cols) { return echelon_modp(rows, cols).size(); }

std::optional<std::vector<RatCoeff>> solve_exact(const std::vector<std::vector<RatCoeff>>& columns,
                                                 const std::vector<RatCoeff>& rhs) {
    size_t n = columns.size(), m = rhs.size();
    // augmented matrix, m rows by n+1 columns
    std::vector<std::vector<RatCoeff>> a(m, std::vector<RatCoeff>(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t k = 0; k < n; ++k) a[i][k] = columns[k][i];
        a[i][n] = rhs[i];
    }
    std::vector<size_t> piv_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t k = r;
        while (k < m && a[k][c].is_zero()) ++k;
        if (k == m) continue;
        std::swap(a[r], a[k]);
        RatCoeff inv = a[r][c].inverse();
        for (size_t j = c; j <= n; ++j) a[r][j] = a[r][j] * inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            RatCoeff f = a[i][c];
            for (size_t j = c; j <= n; ++j)
                if (!a[r][j].is_zero()) a[i][j] = a[i][j] - f * a[r][j];
        }
        piv_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < m; ++i)
        if (!a[i][n].is_zero()) return std::nullopt;
    std::vector<RatCoeff> x(n);
    for (size_t i = 0; i < r; ++i) x[piv_col[i]] = a[i][n];
    return x;
}

size_t rank_exact(const std::vector<std::vector<RatCoeff>>& columns) {
    if (columns.empty()) return 0;
    std::vector<std::vector<RatCoeff>> a = columns;  // rows are the columns; rank is symmetric
    size_t m = a.size(), n = a[0].size(), r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t k = r;
        while (k < m && a[k][c].is_zero()) ++k;
        if (k == m) continue;
        std::swap(a[r], a[k]);
        RatCoeff inv = a[r][c].inverse();
        for (size_t i = r + 1; i < m; ++i) {
            if (a[i][c].is_zero()) continue;
            RatCoeff f = a[i][c] * inv;
            for (size_t j = c; j < n; ++j)
                if (!a[r][j].is_zero()) a[i][j] = a[i][j] - f * a[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

std::vector<std::vector<RatCoeff>> dense_columns(const std::vector<NcPoly>& family, const NcPoly* extra,
                                                 std::vector<RatCoeff>* rhs) {
    std::map<Word, size_t, GradedLex> index;
    for (auto& p : family)
        for (auto& [w, c] : p.terms()) index.emplace(w, 0);
    if (extra)
        for (auto& [w, c] : extra->terms()) index.emplace(w, 0);
    size_t k = 0;
    for (auto& [w, i] : index) i = k++;
    std::vector<std::vector<RatCoeff>> cols;
    for (auto& p : family) {
        std::vector<RatCoeff> col(k);
        for (auto& [w, c] : p.terms()) col[index[w]] = c;
        cols.push_back(std::move(col));
    }
    if (extra) {
        rhs->assign(k, RatCoeff());
        for (auto& [w, c] : extra->terms()) (*rhs)[index[w]] = c;
    }
    return cols;
}

}  // namespace

std::optional<std::vector<RatCoeff>> span_solve(const std::vector<NcPoly>& family, const NcPoly& target) {
    std::vector<RatCoeff> rhs;
    auto cols = dense_columns(family, &target, &rhs);
    return solve_exact(cols, rhs);
}

size_t rank_exact(const std::vector<NcPoly>& family) { return rank_exact(dense_columns(family, nullptr, nullptr)); }

}  // namespace qhc
