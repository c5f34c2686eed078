#include "extraction.hpp"

#include <algorithm>

#include "slicefrac/contfrac.hpp"
#include "slicefrac/errors.hpp"
#include "slicefrac/slices.hpp"

namespace sfcli {

using sf::BiPoly;

bool Extraction::all_equal() const {
  for (size_t k = 0; k < extracted.size(); ++k)
    if (!(extracted[k] == solver[k])) return false;
  return true;
}

namespace {

// Rungs c_1..c_{2 i_max} at their common cap.
std::vector<BiPoly> stieltjes_at(int i_max, int M) {
  const sf::SliceFamily bw = sf::solve_bw(M);
  std::vector<BiPoly> F;
  for (int n = 0; n <= 2 * i_max; ++n) F.push_back(sf::f_n(n, bw));
  return sf::stieltjes_extract(sf::BiZSeries(std::move(F)), i_max);
}

int common_cap(const std::vector<BiPoly>& c, size_t from) {
  int cap = -1;
  for (size_t k = from; k < c.size(); ++k) cap = cap < 0 ? c[k].cap() : std::min(cap, c[k].cap());
  return cap;
}

void require_cap(int got, int cap, int M) {
  if (got < cap)
    throw sf::VerificationError("work cap " + std::to_string(M) + " determines the coefficients only to cap " +
                                std::to_string(got) + ", below the requested cap " + std::to_string(cap));
}

const BiPoly& stable(const std::vector<BiPoly>& v, int i, int i_max) { return v[size_t(std::min(i, i_max))]; }

}  // namespace

Extraction extract_stieltjes(int i_lo, int i_hi, int cap, std::optional<int> work_cap) {
  Extraction out;
  out.cap = cap;
  std::vector<BiPoly> c;
  if (work_cap) {
    out.work_cap = *work_cap;
    c = stieltjes_at(i_hi, *work_cap);
    require_cap(common_cap(c, 1), cap, *work_cap);
  } else {
    const int limit = sf::max_cap();
    for (int M = cap + 1;; ++M) {
      if (M > limit)
        throw sf::ResourceError("no work cap up to " + std::to_string(limit) + " reaches cap " + std::to_string(cap));
      try {
        c = stieltjes_at(i_hi, M);
      } catch (const sf::DivisionError&) {
        continue;
      }
      if (common_cap(c, 1) >= cap) {
        out.work_cap = M;
        break;
      }
    }
  }

  const sf::SliceFamily bw = sf::solve_bw(cap);
  for (int i = i_lo; i <= i_hi; ++i) {
    out.names.push_back("W_" + std::to_string(2 * i - 1));
    out.extracted.push_back(c[size_t(2 * i - 1)].truncate(cap));
    out.solver.push_back(stable(bw.second, 2 * i - 1, bw.i_max));
    out.names.push_back("B_" + std::to_string(2 * i));
    out.extracted.push_back(c[size_t(2 * i)].truncate(cap));
    out.solver.push_back(stable(bw.first, 2 * i, bw.i_max));
  }
  return out;
}

Extraction extract_newtype(int i_lo, int i_hi, int cap, std::optional<int> work_cap) {
  Extraction out;
  out.cap = cap;
  std::vector<BiPoly> y;
  if (work_cap) {
    out.work_cap = *work_cap;
    y = sf::newtype_from_conjecture_at(i_hi, *work_cap);
    require_cap(common_cap(y, 1), cap, *work_cap);
  } else {
    y = sf::newtype_from_conjecture(i_hi, cap);
    out.work_cap = -1;
  }

  const sf::SliceFamily ref = sf::solve_y(cap);
  const int top = int(ref.first.size()) - 1;
  for (int k = 2 * i_lo - 1; k <= 2 * i_hi; ++k) {
    int r = k;
    while (r > top) r -= 2;
    out.names.push_back("Y_" + std::to_string(k));
    out.extracted.push_back(y[size_t(k)].truncate(cap));
    out.solver.push_back(ref.first[size_t(r)]);
  }
  return out;
}

}  // namespace sfcli
