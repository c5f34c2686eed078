#pragma once

// Continued-fraction extraction driven from the slice solvers, with the
// solver values at the same cap for comparison.

#include <optional>
#include <string>
#include <vector>

#include "slicefrac/bipoly.hpp"

namespace sfcli {

struct Extraction {
  int cap = 0;       // requested output cap
  int work_cap = 0;  // solver cap used to build the input series
  std::vector<std::string> names;
  std::vector<sf::BiPoly> extracted, solver;

  bool all_equal() const;
};

// W_{2i-1}, B_{2i} for i in [i_lo, i_hi] from F_0..F_{2 i_hi}.  Without a work
// cap the smallest one that determines everything to `cap` is searched for.
// Throws sf::DivisionError if the input does not determine the values and
// sf::VerificationError if it determines them below `cap`.
Extraction extract_stieltjes(int i_lo, int i_hi, int cap, std::optional<int> work_cap);
// Y_{2i-1}, Y_{2i} for i in [i_lo, i_hi] through the conjectured J-tilde.
Extraction extract_newtype(int i_lo, int i_hi, int cap, std::optional<int> work_cap);

}  // namespace sfcli
