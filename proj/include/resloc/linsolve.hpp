#pragma once

#include <cstddef>
#include <vector>

#include "resloc/rational.hpp"

namespace resloc {

enum class SolveStatus { Unique, RankDeficient, Inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::Unique;
  std::size_t rank = 0;
  std::vector<Rat> x;  // filled only when status == Unique
};

// Solves A x = b exactly over Q. Rows are cleared to integers and reduced
// fraction-free (cross multiplication followed by content removal), so no
// intermediate rational arithmetic is needed until the final division.
SolveResult solve_exact(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                        std::size_t unknowns);

}  // namespace resloc
