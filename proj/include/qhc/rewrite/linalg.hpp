#pragma once

#include "qhc/coeff/ratcoeff.hpp"
#include "qhc/ncpoly/ncpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qhc {

using ModpRow = std::vector<uint32_t>;

// Reduces rows to echelon form over F_p (p = 2^31 - 1) in place and returns
// the pivot column of each of the first rank rows.
std::vector<size_t> echelon_modp(std::vector<ModpRow>& rows, size_t cols);
size_t rank_modp(std::vector<ModpRow> rows, size_t cols);

// Solves sum_k x_k * cols[k] = rhs exactly over Q(q,t); each column is a
// sparse vector given as a dense array. Returns nullopt when inconsistent.
std::optional<std::vector<RatCoeff>> solve_exact(const std::vector<std::vector<RatCoeff>>& columns,
                                                 const std::vector<RatCoeff>& rhs);
// Exact rank over Q(q,t).
size_t rank_exact(const std::vector<std::vector<RatCoeff>>& columns);

// Coefficients c with sum c_k family[k] = target, over the joint word support.
std::optional<std::vector<RatCoeff>> span_solve(const std::vector<NcPoly>& family, const NcPoly& target);
size_t rank_exact(const std::vector<NcPoly>& family);

}  // namespace qhc
