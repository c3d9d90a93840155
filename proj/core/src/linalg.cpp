/*
   Copyright 2026 The qtk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qtk/linalg.hpp"

#include <algorithm>

namespace qtk {

std::optional<std::vector<Elem>> solve_linear(const Field& f, std::vector<std::vector<Elem>> rows,
                                              std::vector<Elem> rhs) {
  if (rows.size() != rhs.size()) throw Error(Errc::InvalidArgument, "row count differs from rhs length");
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && rows[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(rhs[piv], rhs[r]);
    const Elem inv = f.inv(rows[r][c]);
    for (auto& e : rows[r]) e = f.mul(e, inv);
    rhs[r] = f.mul(rhs[r], inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem factor = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
      rhs[i] = f.sub(rhs[i], f.mul(factor, rhs[r]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Elem> x(n, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

std::optional<std::vector<Elem>> solve_in_span(const std::vector<Polynomial>& basis, const Polynomial& target) {
  const Field& f = target.field();
  std::size_t len = target.coeffs().size();
  for (const auto& b : basis) {
    require_same_field(b, target);
    len = std::max(len, b.coeffs().size());
  }
  std::vector<std::vector<Elem>> rows(len, std::vector<Elem>(basis.size(), 0));
  std::vector<Elem> rhs(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) rows[i][j] = basis[j].coeff(i);
    rhs[i] = target.coeff(i);
  }
  return solve_linear(f, std::move(rows), std::move(rhs));
}

}  // namespace qtk
