#include "slicefrac/slices.hpp"

#include <cstdlib>
#include <string>

#include "slicefrac/errors.hpp"
#include "slicefrac/grading.hpp"
#include "slicefrac/mpoly.hpp"

namespace sf {

int max_cap() {
  if (const char* e = std::getenv("SLICEFRAC_MAX_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(e, &end, 10);
    if (end == e || *end || v < 0 || v > 1000) throw ResourceError("SLICEFRAC_MAX_CAP must be an integer in 0..1000");
    return int(v);
  }
  return 40;
}

namespace {

void check_cap(int N) {
  if (N < 0) throw StructuralError("negative cap");
  if (N > max_cap()) throw ResourceError("cap " + std::to_string(N) + " exceeds SLICEFRAC_MAX_CAP=" + std::to_string(max_cap()));
}

// Gauss-Seidel sweeps until nothing moves.  Sweep k fixes degree k, so more
// than N + 2 sweeps means the update does not converge.
template <class Step>
void iterate(int N, Step step) {
  for (int sweep = 0; sweep <= N + 3; ++sweep)
    if (!step()) return;
  throw VerificationError("fixed-point iteration did not stabilize");
}

bool assign(BiPoly& dst, BiPoly v) {
  if (v == dst) return false;
  dst = std::move(v);
  return true;
}

// v[top] must equal v[top - stride].
void check_stable(const std::vector<BiPoly>& v, int top, int stride, const char* what) {
  if (v[size_t(top)] != v[size_t(top - stride)])
    throw VerificationError(std::string("stabilization failed for ") + what + " at the clamp height");
}

}  // namespace

WeightTable<BiPoly> SliceFamily::table() const {
  switch (kind) {
    case SliceKind::BW: return make_table(WeightKind::Bicolored, first, second);
    case SliceKind::PQ: return make_table(WeightKind::Context, first, second);
    case SliceKind::Y: return make_table(WeightKind::Elongated, first);
  }
  throw StructuralError("unknown slice kind");
}

SliceFamily solve_bw(int N) {
  check_cap(N);
  const int I = N + 2;
  const BiPoly tb = BiPoly::tb(N), tw = BiPoly::tw(N);
  std::vector<BiPoly> B(size_t(I + 2), BiPoly(N)), W = B;
  iterate(N, [&] {
    bool moved = false;
    for (int i = 1; i <= I; ++i) {
      B[size_t(I + 1)] = B[size_t(I)];
      W[size_t(I + 1)] = W[size_t(I)];
      moved |= assign(B[size_t(i)], tb + B[size_t(i)] * (W[size_t(i - 1)] + B[size_t(i)] + W[size_t(i + 1)]));
      moved |= assign(W[size_t(i)], tw + W[size_t(i)] * (B[size_t(i - 1)] + W[size_t(i)] + B[size_t(i + 1)]));
    }
    return moved;
  });
  check_stable(B, I, 1, "B");
  check_stable(W, I, 1, "W");
  B.pop_back();
  W.pop_back();
  return {SliceKind::BW, N, I, std::move(B), std::move(W)};
}

SliceFamily solve_pq(int N) {
  check_cap(N);
  const int I = N + 2;
  const BiPoly tb = BiPoly::tb(N), tw = BiPoly::tw(N);
  std::vector<BiPoly> P(size_t(I + 2), BiPoly(N)), Q = P;
  iterate(N, [&] {
    bool moved = false;
    for (int i = 1; i <= I; ++i) {
      P[size_t(I + 1)] = P[size_t(I)];
      Q[size_t(I + 1)] = Q[size_t(I)];
      const BiPoly& p = P[size_t(i)];
      moved |= assign(P[size_t(i)], tb + p * (P[size_t(i - 1)] + Q[size_t(i)] + Q[size_t(i + 1)]));
      const BiPoly& q = Q[size_t(i)];
      moved |= assign(Q[size_t(i)], tw + q * (P[size_t(i - 1)] + q) + P[size_t(i)] * Q[size_t(i + 1)]);
    }
    return moved;
  });
  check_stable(P, I, 1, "P");
  check_stable(Q, I, 1, "Q");
  P.pop_back();
  Q.pop_back();
  return {SliceKind::PQ, N, I, std::move(P), std::move(Q)};
}

SliceFamily solve_y(int N) {
  check_cap(N);
  const int I = N + 2, top = 2 * I;
  const BiPoly tb = BiPoly::tb(N), tw = BiPoly::tw(N);
  std::vector<BiPoly> Y(size_t(top + 3), BiPoly(N));
  iterate(N, [&] {
    bool moved = false;
    for (int i = 1; i <= I; ++i) {
      Y[size_t(top + 1)] = Y[size_t(top - 1)];
      Y[size_t(top + 2)] = Y[size_t(top)];
      const size_t e = size_t(2 * i), o = e - 1;
      moved |= assign(Y[o], tw - tb + Y[o] * (Y[o - 1] + Y[o] + Y[e]));
      moved |= assign(Y[e], tb + Y[e] * (Y[e - 2] + Y[e - 1] + Y[e] + Y[e + 1] + Y[e + 2]));
    }
    return moved;
  });
  check_stable(Y, top, 2, "Y (even)");
  check_stable(Y, top - 1, 2, "Y (odd)");
  Y.resize(size_t(top + 1));

  const SliceFamily pq = solve_pq(N);
  for (int i = 1; i <= I; ++i) {
    if (Y[size_t(2 * i)] != pq.first[size_t(i)])
      throw VerificationError("Y_" + std::to_string(2 * i) + " differs from P_" + std::to_string(i));
    if (Y[size_t(2 * i - 1)] != pq.second[size_t(i)] - pq.first[size_t(i)])
      throw VerificationError("Y_" + std::to_string(2 * i - 1) + " differs from Q_i - P_i");
  }
  return {SliceKind::Y, N, I, std::move(Y), {}};
}

LimitPair solve_limit(int N) {
  check_cap(N);
  const BiPoly tb = BiPoly::tb(N), tw = BiPoly::tw(N);
  LimitPair r{BiPoly(N), BiPoly(N)};
  iterate(N, [&] {
    bool moved = assign(r.first, tb + r.first * (r.first + r.second + r.second));
    moved |= assign(r.second, tw + r.second * (r.second + r.first + r.first));
    return moved;
  });
  return r;
}

BiPoly f_n(int n, const SliceFamily& bw) {
  if (bw.kind != SliceKind::BW) throw StructuralError("f_n needs the B/W family");
  return z_bicolored(PathSpec{n, 0, 0}, bw.table());
}

BiPoly j_n(int n, const SliceFamily& pq) {
  if (pq.kind != SliceKind::PQ) throw StructuralError("j_n needs the P/Q family");
  return z_context(PathSpec{n, 0, 0}, pq.table());
}

BiPoly f_n(int n, int N) { return f_n(n, solve_bw(N)); }
BiPoly j_n(int n, int N) { return j_n(n, solve_pq(N)); }

BiPoly f_n_closed(int n, int N) {
  const LimitPair L = solve_limit(N + 1);
  const BiPoly& P = L.first;
  const BiPoly& Q = L.second;
  const BiPoly one = BiPoly::constant(N + 1, 1);
  const BiPoly num = P * (one - P - Q) * z_const(n, P, Q, WeightKind::Context) -
                     P * z_const(n + 1, P, Q, WeightKind::Context);
  return grading_divide(num, BiPoly::tb(N + 1), N);
}

BiPoly f_n_closed_restricted(int n, int N) {
  const LimitPair L = solve_limit(N + 1);
  const BiPoly& B = L.first;
  const BiPoly& W = L.second;
  const BiPoly corr = z_const(n + 1, B, W, WeightKind::Bicolored, 2) * B;
  return z_const(n, B, W, WeightKind::Bicolored).truncate(N) - grading_divide(corr, BiPoly::tb(N + 1), N);
}

namespace {

BiPoly conserved(int n, int d, const SliceFamily& fam, SliceKind kind) {
  if (fam.kind != kind) throw StructuralError("wrong slice family for this conserved quantity");
  if (n < 1 || d < 0) throw StructuralError("conserved quantity needs n >= 1, d >= 0");
  const int N = fam.cap - 1;
  if (N < 0) throw StructuralError("family cap too small");
  const WeightTable<BiPoly> w = fam.table();
  const bool bic = kind == SliceKind::BW;
  auto z = [&](const PathSpec& s) { return bic ? z_bicolored(s, w) : z_context(s, w); };
  const BiPoly main = z(PathSpec{n, d, 0}).truncate(N);
  const BiPoly corr = z(PathSpec{n + 1, d, 2}) * w.a(d);
  return main - grading_divide(corr, BiPoly::tb(fam.cap), N);
}

}  // namespace

BiPoly conserved_f(int n, int d, const SliceFamily& bw) { return conserved(n, d, bw, SliceKind::BW); }
BiPoly conserved_j(int n, int d, const SliceFamily& pq) { return conserved(n, d, pq, SliceKind::PQ); }
BiPoly conserved_f(int n, int d, int N) { return conserved_f(n, d, solve_bw(N + 1)); }
BiPoly conserved_j(int n, int d, int N) { return conserved_j(n, d, solve_pq(N + 1)); }

std::pair<BiPoly, BiPoly> y1_two_routes(int N) {
  const LimitPair L = solve_limit(N + 1);
  const BiPoly& P = L.first;
  const BiPoly& Q = L.second;
  const BiPoly one = BiPoly::constant(N + 1, 1);
  const BiPoly tb = BiPoly::tb(N + 1), tw = BiPoly::tw(N + 1);
  const BiPoly route1 = ((Q - P) * (one - P - Q - Q) * (one - Q - Q).inv()).truncate(N);
  const BiPoly route2 = grading_divide(tb * (tw - tb), tb - tb * Q + Q * P * P, N);
  return {route1, route2};
}

std::string conserved_symbolic_check(int i_max) {
  VarList vars;
  const int t = vars.id("tb");
  const int H = i_max + 4;
  std::vector<MPoly> B, W, P, Q;
  for (int j = 0; j <= H; ++j) {
    B.push_back(MPoly::var(vars, "B" + std::to_string(j)));
    W.push_back(MPoly::var(vars, "W" + std::to_string(j)));
    P.push_back(MPoly::var(vars, "P" + std::to_string(j)));
    Q.push_back(MPoly::var(vars, "Q" + std::to_string(j)));
  }
  const MPoly tb = MPoly::var(t);
  WeightTable<MPoly> bw = make_table(WeightKind::Bicolored, B, W);
  WeightTable<MPoly> pq = make_table(WeightKind::Context, P, Q);
  bw.strict = pq.strict = true;

  // t_black * (Z(2n) - Z^{2 last down}(2n+2) w_d / t_black)
  auto general = [&](const WeightTable<MPoly>& w, bool bic, int n, int d) {
    auto z = [&](const PathSpec& s) { return bic ? z_bicolored(s, w) : z_context(s, w); };
    return tb * z(PathSpec{n, d, 0}) - z(PathSpec{n + 1, d, 2}) * w.a(d);
  };

  for (int i = 1; i <= i_max; ++i) {
    const int d = i - 1;
    const size_t u = size_t(i);
    const MPoly F1 = tb * W[u] - B[u + 1] * W[u] * B[u - 1];
    const MPoly F2 = tb * (W[u] * W[u] + B[u + 1] * W[u]) - (W[u] + B[u + 1] + W[u + 2]) * B[u + 1] * W[u] * B[u - 1];
    const MPoly J1 = tb * Q[u] - Q[u + 1] * P[u] * P[u - 1];
    const MPoly J2 = tb * (Q[u] * Q[u] + Q[u + 1] * P[u]) -
                     ((Q[u] + Q[u + 1]) * Q[u + 1] + Q[u + 2] * P[u + 1]) * P[u] * P[u - 1];
    const std::string at = " at i=" + std::to_string(i);
    if (general(bw, true, 1, d) != F1) return "F_1 display" + at;
    if (general(bw, true, 2, d) != F2) return "F_2 display" + at;
    if (general(pq, false, 1, d) != J1) return "J_1 display" + at;
    if (general(pq, false, 2, d) != J2) return "J_2 display" + at;
  }
  return {};
}

}  // namespace sf
