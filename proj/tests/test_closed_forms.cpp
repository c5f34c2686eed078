#include "doctest.h"
#include "slicefrac/closed_forms.hpp"

using namespace sf;

TEST_CASE("parametrized t_black and t_white") {
  const TT x = eval_tt({ParamFamily::XGamma, 4});
  CHECK(x.tb.coeff(0).is_zero());
  CHECK(x.tw.coeff(0).is_zero());
  CHECK(x.tb.coeff(1) == RatFunc::var());
  CHECK(x.tb.valuation() == 1);
  const TT y = eval_tt({ParamFamily::YAlpha, 4});
  CHECK(y.tw.coeff(1) == RatFunc::var());
  CHECK(y.tb.coeff(1) == RatFunc(1));
  CHECK(y.tw.valuation() == 1);
  CHECK_THROWS_AS(eval_tt({ParamFamily::XGamma, 0}), StructuralError);
}

TEST_CASE("closed forms at i = 0 and swap symmetry") {
  const ParamPoint px{ParamFamily::XGamma, 6};
  CHECK(eval_bw_closed(0, px).B.is_zero());
  CHECK(eval_bw_closed(0, px).W.is_zero());
  const ParamPoint py{ParamFamily::YAlpha, 6};
  CHECK(eval_pqy_closed(0, py).P.is_zero());
  CHECK(eval_pqy_closed(0, py).Q.is_zero());
  CHECK_THROWS_AS(eval_pqy_closed(1, px), StructuralError);

  // gamma -> 1/gamma exchanges the B and W formulas
  const RatFunc g = RatFunc::var();
  auto flip = [&](const ParamSeries& s) {
    return s.map_coeffs([&](const RatFunc& c) { return c.eval(g.inv()); }, RatFunc(1), 'x');
  };
  for (int i = 0; i <= 5; ++i) {
    const BWSeries c = eval_bw_closed(i, px);
    CHECK(flip(c.B) == c.W);
  }
}

TEST_CASE("closed forms tend to the limit") {
  const int M = 5;
  const ParamPoint px{ParamFamily::XGamma, M};
  const LimitSeries L = eval_limit(px);
  for (int i = M + 1; i <= M + 3; ++i) {
    CHECK(eval_bw_closed(i, px).B == L.first);
    CHECK(eval_bw_closed(i, px).W == L.second);
  }
  CHECK(eval_bw_closed(2, px).B != L.first);
}

TEST_CASE("recursions hold for the closed forms") {
  for (auto kind : {SliceKind::BW, SliceKind::PQ, SliceKind::Y}) {
    CHECK_NOTHROW(verify_recursion(kind, 1, 6, 8));
    CHECK_NOTHROW(verify_recursion(kind, 1, 3, 10));
  }
}

TEST_CASE("equivalence of the two parametrizations") {
  CHECK_NOTHROW(param_equivalence(6));
  CHECK_NOTHROW(param_equivalence(8));
  CHECK_NOTHROW(param_equivalence(0));
}

TEST_CASE("solver series match the closed forms") {
  const Report r = series_match(5);
  CHECK(r.items.size() == 3);
}

TEST_CASE("rational identities of the (y, alpha) parametrization") {
  const Report r = parametrization_identities();
  CHECK(r.items.size() >= 15);
}
