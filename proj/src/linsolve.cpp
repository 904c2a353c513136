#include "resloc/linsolve.hpp"

#include <utility>

#include "resloc/errors.hpp"

namespace resloc {

namespace {

using Row = std::vector<Int>;

Row to_integer_row(const std::vector<Rat>& coeffs, const Rat& rhs) {
  Int l = rhs.get_den();
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Row out;
  out.reserve(coeffs.size() + 1);
  for (const auto& c : coeffs) out.push_back(Int(c.get_num() * (l / c.get_den())));
  out.push_back(Int(rhs.get_num() * (l / rhs.get_den())));
  return out;
}

void remove_content(Row& row) {
  Int g = 0;
  for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

SolveResult solve_exact(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                        std::size_t unknowns) {
  if (a.size() != b.size()) throw Error(Errc::InvalidArgument, "row/rhs count mismatch");
  std::vector<Row> rows;
  rows.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != unknowns) throw Error(Errc::InvalidArgument, "row width mismatch");
    rows.push_back(to_integer_row(a[r], b[r]));
    remove_content(rows.back());
  }

  std::vector<std::size_t> pivot_col;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < unknowns && prow < rows.size(); ++col) {
    std::size_t sel = prow;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[prow], rows[sel]);
    const Row& p = rows[prow];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == prow || rows[r][col] == 0) continue;
      Int f = rows[r][col];
      for (std::size_t c = 0; c <= unknowns; ++c) rows[r][c] = p[col] * rows[r][c] - f * p[c];
      remove_content(rows[r]);
    }
    pivot_col.push_back(col);
    ++prow;
  }

  SolveResult res;
  res.rank = pivot_col.size();
  for (std::size_t r = prow; r < rows.size(); ++r) {
    if (rows[r][unknowns] != 0) {
      res.status = SolveStatus::Inconsistent;
      return res;
    }
  }
  if (res.rank < unknowns) {
    res.status = SolveStatus::RankDeficient;
    return res;
  }
  res.x.assign(unknowns, Rat(0));
  for (std::size_t r = 0; r < prow; ++r) {
    res.x[pivot_col[r]] = make_rat(rows[r][unknowns], rows[r][pivot_col[r]]);
  }
  return res;
}

}  // namespace resloc
