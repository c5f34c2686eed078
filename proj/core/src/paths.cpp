#include "slicefrac/paths.hpp"

namespace sf {

template BiPoly z_bicolored(const PathSpec&, const WeightTable<BiPoly>&);
template BiPoly z_context(const PathSpec&, const WeightTable<BiPoly>&);
template BiPoly z_elongated(const PathSpec&, const WeightTable<BiPoly>&);
template BiPoly z_const(int, const BiPoly&, const BiPoly&, WeightKind, int);
template MPoly z_bicolored(const PathSpec&, const WeightTable<MPoly>&);
template MPoly z_context(const PathSpec&, const WeightTable<MPoly>&);
template MPoly z_elongated(const PathSpec&, const WeightTable<MPoly>&);

}  // namespace sf
