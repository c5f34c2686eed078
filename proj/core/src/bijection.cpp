#include <map>
#include <queue>
#include <set>
#include <utility>

#include "slicefrac/errors.hpp"
#include "slicefrac/maps.hpp"

namespace sf {

namespace {

// A map under construction.  New darts are only ever added next to existing
// ones, so each dart carries the vertex tag of the dart it was inserted
// before; the darts of the starting map are dropped at the end.
struct Surgery {
  std::vector<int> sig, inv, alp, tag;
  int original = 0;
  int fresh_vertex = 0;

  explicit Surgery(const RootedMap& m) : sig(m.sigma), alp(m.alpha), original(m.n_darts) {
    const MapStats s = analyze(m);
    tag = s.vertex_of;
    fresh_vertex = s.vertices;
    inv.resize(sig.size());
    for (size_t d = 0; d < sig.size(); ++d) inv[size_t(sig[d])] = int(d);
  }

  int add_dart(int t) {
    sig.push_back(-1);
    inv.push_back(-1);
    alp.push_back(-1);
    tag.push_back(t);
    return int(sig.size()) - 1;
  }
  // e goes into the corner of a, just before a counterclockwise.
  void insert_before(int e, int a) {
    const int s = inv[size_t(a)];
    sig[size_t(s)] = e;
    inv[size_t(e)] = s;
    sig[size_t(e)] = a;
    inv[size_t(a)] = e;
  }
  std::pair<int, int> chord(int a, int b) {
    const int e1 = add_dart(tag[size_t(a)]);
    const int e2 = add_dart(tag[size_t(b)]);
    alp[size_t(e1)] = e2;
    alp[size_t(e2)] = e1;
    insert_before(e1, a);
    insert_before(e2, b);
    return {e1, e2};
  }
  // A new vertex hanging into the corner of a; returns (dart at a, dart at the new vertex).
  std::pair<int, int> pendant(int a) {
    const int e = add_dart(tag[size_t(a)]);
    const int w = add_dart(fresh_vertex++);
    alp[size_t(e)] = w;
    alp[size_t(w)] = e;
    sig[size_t(w)] = inv[size_t(w)] = w;
    insert_before(e, a);
    return {e, w};
  }

  // Drop the starting darts; returns the new map and the vertex tag of each
  // of its darts.
  std::pair<RootedMap, std::vector<int>> finish(int root) {
    for (int d = 0; d < original; ++d) {
      const int s = inv[size_t(d)], t = sig[size_t(d)];
      sig[size_t(s)] = t;
      inv[size_t(t)] = s;
    }
    RootedMap m;
    m.n_darts = int(sig.size()) - original;
    for (int d = original; d < int(sig.size()); ++d) {
      m.sigma.push_back(sig[size_t(d)] - original);
      m.alpha.push_back(alp[size_t(d)] - original);
    }
    m.root_dart = root - original;
    return {m, std::vector<int>(tag.begin() + original, tag.end())};
  }
};

constexpr int kCenter = -1;

// The faces being subdivided, as cyclic lists of corners.  A corner is the
// index of a corner of the starting face (or kCenter) and the dart whose
// corner it currently is.
struct Corner {
  int id;
  int dart;
};

class Subdivision {
 public:
  Subdivision(Surgery& s, std::vector<Corner> face) : s_(s) { faces_.push_back(std::move(face)); }

  // The unique face holding both corners.
  int find(int p, int t) const {
    int hit = -1;
    for (size_t f = 0; f < faces_.size(); ++f)
      if (pos(f, p) >= 0 && pos(f, t) >= 0) {
        if (hit >= 0) throw StructuralError("corner pair lies on two faces");
        hit = int(f);
      }
    if (hit < 0) throw StructuralError("corners do not share a face");
    return hit;
  }

  // Edge from corner p to corner t inside face f; returns its dart at p and
  // the face that keeps index f (the one on the right of that dart).
  int chord(int f, int p, int t) {
    std::vector<Corner>& c = faces_[size_t(f)];
    const int k = int(c.size());
    const int i = pos(size_t(f), p), j = pos(size_t(f), t);
    if (i < 0 || j < 0) throw StructuralError("corner not on face");
    const auto [e1, e2] = s_.chord(c[size_t(i)].dart, c[size_t(j)].dart);
    std::vector<Corner> A{{p, e1}}, B{{t, e2}};
    const int la = i == j ? k : (i - j + k) % k;
    for (int r = 0; r < la; ++r) A.push_back(c[size_t((j + r) % k)]);
    for (int r = 0; r < k - la; ++r) B.push_back(c[size_t((i + r) % k)]);
    c = std::move(A);
    faces_.push_back(std::move(B));
    return e1;
  }
  int chord(int p, int t) { return chord(find(p, t), p, t); }

  // The center vertex hanging from corner p.
  void pendant(int p) {
    int f = -1, i = -1;
    for (size_t g = 0; g < faces_.size() && f < 0; ++g)
      if ((i = pos(g, p)) >= 0) f = int(g);
    if (f < 0) throw StructuralError("corner not on any face");
    std::vector<Corner>& c = faces_[size_t(f)];
    const auto [e, w] = s_.pendant(c[size_t(i)].dart);
    c.insert(c.begin() + i, {Corner{p, e}, Corner{kCenter, w}});
  }

 private:
  // A corner split by a pendant edge shows up twice; the part after the
  // pendant is the one meant.
  int pos(size_t f, int id) const {
    const auto& c = faces_[f];
    const size_t k = c.size();
    int at = -1, hits = 0;
    for (size_t r = 0; r < k; ++r)
      if (c[r].id == id) {
        ++hits;
        if (at < 0 || c[(r + k - 1) % k].id == kCenter) at = int(r);
      }
    if (hits > 2 || (hits == 2 && c[(size_t(at) + k - 1) % k].id != kCenter))
      throw StructuralError("corner repeated on a face");
    return at;
  }

  Surgery& s_;
  std::vector<std::vector<Corner>> faces_;
};

// Face cycles in phi order; the external one starts at the root.
std::vector<std::vector<int>> face_cycles(const RootedMap& m, const MapStats& s) {
  std::vector<std::vector<int>> f(size_t(s.faces));
  std::vector<char> seen(size_t(m.n_darts), 0);
  auto walk = [&](int d0) {
    auto& cyc = f[size_t(s.face_of[size_t(d0)])];
    for (int d = d0; !seen[size_t(d)]; d = m.phi(d)) {
      seen[size_t(d)] = 1;
      cyc.push_back(d);
    }
  };
  walk(m.root_dart);
  for (int d = 0; d < m.n_darts; ++d)
    if (!seen[size_t(d)]) walk(d);
  return f;
}

std::vector<Corner> corners_of(const std::vector<int>& cyc) {
  std::vector<Corner> c;
  for (size_t i = 0; i < cyc.size(); ++i) c.push_back({int(i), cyc[i]});
  return c;
}

// Joins the given corners of the external face cyclically, returns the dart
// leaving the first one.
int join_cyclically(Surgery& s, const std::vector<int>& outer, const std::vector<int>& chosen) {
  Subdivision sub(s, corners_of(outer));
  int first = -1;
  const size_t n = chosen.size();
  for (size_t k = 0; k < n; ++k) {
    // The remaining external face always keeps index 0.
    const int e = sub.chord(0, chosen[k], chosen[(k + 1) % n]);
    if (k == 0) first = e;
  }
  // A single loop: the empty side is the one on the right of its second dart.
  return n == 1 ? s.alp[size_t(first)] : first;
}

void require_bridgeless(const RootedMap& m, const char* what) {
  if (has_boundary_bridge(m)) throw VerificationError(std::string(what) + ": boundary has a bridge");
}

}  // namespace

ABImage ab_forward_labeled(const LabeledQuad& q) {
  const MapStats s = validate(q.map);
  const auto faces = face_cycles(q.map, s);
  auto label = [&](int d) { return q.dist[size_t(s.vertex_of[size_t(d)])]; };
  auto rises = [&](int d) { return label(q.map.phi(d)) > label(d); };
  Surgery surg(q.map);
  for (size_t f = 0; f < faces.size(); ++f) {
    if (int(f) == s.outer_face) continue;
    std::vector<int> sel;
    for (size_t i = 0; i < faces[f].size(); ++i)
      if (rises(faces[f][i])) sel.push_back(int(i));
    if (sel.size() != 2) throw VerificationError("inner face without exactly two rising corners");
    Subdivision(surg, corners_of(faces[f])).chord(sel[0], sel[1]);
  }
  const auto& outer = faces[size_t(s.outer_face)];
  std::vector<int> sel;
  for (size_t i = 0; i < outer.size(); ++i)
    if (rises(outer[i])) sel.push_back(int(i));
  if (int(sel.size()) * 2 != q.boundary_len || sel.empty() || sel[0] != 0)
    throw VerificationError("external face does not have n rising corners starting at the root");
  const int root = join_cyclically(surg, outer, sel);
  auto [m, tags] = surg.finish(root);
  const MapStats ms = validate(m);
  require_bridgeless(m, "ab_forward");
  ABImage img;
  img.map = std::move(m);
  img.label.assign(size_t(ms.vertices), -1);
  for (int d = 0; d < img.map.n_darts; ++d) img.label[size_t(ms.vertex_of[size_t(d)])] = q.dist[size_t(tags[size_t(d)])];
  return img;
}

RootedMap ab_forward(const LabeledQuad& q) { return ab_forward_labeled(q).map; }

std::vector<int> oriented_distances(const RootedMap& m) {
  const MapStats s = validate(m);
  std::vector<int> dist(size_t(s.vertices), -1);
  std::queue<int> bfs;
  dist[size_t(s.root_vertex)] = 0;
  bfs.push(s.root_vertex);
  std::vector<std::vector<int>> out(size_t(s.vertices));
  for (int d = 0; d < m.n_darts; ++d)
    if (s.face_of[size_t(m.alpha[size_t(d)])] != s.outer_face)
      out[size_t(s.vertex_of[size_t(d)])].push_back(s.vertex_of[size_t(m.alpha[size_t(d)])]);
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (int w : out[size_t(v)])
      if (dist[size_t(w)] < 0) {
        dist[size_t(w)] = dist[size_t(v)] + 1;
        bfs.push(w);
      }
  }
  for (int x : dist)
    if (x < 0) throw VerificationError("vertex unreachable by oriented paths");
  return dist;
}

Report oriented_distance_check(const RootedMap& m, const LabeledQuad& q) {
  const ABImage img = ab_forward_labeled(q);
  if (!rooted_isomorphic(img.map, m)) throw StructuralError("map is not the image of the quadrangulation");
  const std::vector<int> od = oriented_distances(img.map);
  if (od != img.label) throw VerificationError("oriented distance differs from the quadrangulation distance");
  Report rep("oriented_distance");
  rep.add("vertices", (long long)od.size());
  return rep;
}

LabeledQuad ab_inverse(const RootedMap& m) {
  const MapStats s = validate(m);
  require_bridgeless(m, "ab_inverse");
  const std::vector<int> lab = oriented_distances(m);
  const auto faces = face_cycles(m, s);
  Surgery surg(m);
  for (size_t f = 0; f < faces.size(); ++f) {
    if (int(f) == s.outer_face) continue;
    const auto& cyc = faces[f];
    const int k = int(cyc.size());
    auto L = [&](int i) { return lab[size_t(s.vertex_of[size_t(cyc[size_t(i)])])]; };
    std::vector<std::pair<int, int>> chords;
    std::vector<int> top;
    for (int i = 0; i < k; ++i) {
      int succ = -1;
      for (int r = 1; r < k && succ < 0; ++r)
        if (L((i - r + k) % k) == L(i) + 1) succ = (i - r + k) % k;
      if (succ >= 0)
        chords.emplace_back(i, succ);
      else
        top.push_back(i);
    }
    // The star first: chords into a top corner then land after its edge to
    // the new vertex, counterclockwise around the corner.
    Subdivision sub(surg, corners_of(cyc));
    sub.pendant(top.at(0));
    for (size_t r = 1; r < top.size(); ++r) sub.chord(top[r], kCenter);
    for (auto [i, t] : chords) sub.chord(i, t);
  }
  const int root = surg.sig[size_t(m.root_dart)];
  auto [qm, tags] = surg.finish(root);
  LabeledQuad q = label_quad(qm);
  if (q.boundary_len != 2 * s.face_degree[size_t(s.outer_face)])
    throw VerificationError("ab_inverse: boundary length is not doubled");
  // The quadrangulation distances are the oriented labels on the old vertices.
  const MapStats qs = analyze(qm);
  for (int d = 0; d < qm.n_darts; ++d) {
    const int t = tags[size_t(d)];
    if (t < s.vertices && q.dist[size_t(qs.vertex_of[size_t(d)])] != lab[size_t(t)])
      throw VerificationError("ab_inverse: distance differs from the oriented label");
  }
  return q;
}

LabeledQuad white_vertex_quad(const RootedMap& m) {
  const MapStats s = validate(m);
  require_bridgeless(m, "white_vertex_quad");
  const auto faces = face_cycles(m, s);
  Surgery surg(m);
  for (size_t f = 0; f < faces.size(); ++f) {
    if (int(f) == s.outer_face) continue;
    Subdivision sub(surg, corners_of(faces[f]));
    sub.pendant(0);
    for (int i = 1; i < int(faces[f].size()); ++i) sub.chord(i, kCenter);
  }
  const int root = surg.sig[size_t(m.root_dart)];
  auto [qm, tags] = surg.finish(root);
  LabeledQuad q = label_quad(qm);
  const MapStats qs = analyze(qm);
  for (int d = 0; d < qm.n_darts; ++d)
    if ((tags[size_t(d)] < s.vertices) != (q.color[size_t(qs.vertex_of[size_t(d)])] == Color::Black))
      throw VerificationError("white_vertex_quad: colors do not match vertices and faces");
  return q;
}

RootedMap black_diagonal_map(const LabeledQuad& q) {
  const MapStats s = validate(q.map);
  const auto faces = face_cycles(q.map, s);
  auto black = [&](int d) { return q.color[size_t(s.vertex_of[size_t(d)])] == Color::Black; };
  Surgery surg(q.map);
  for (size_t f = 0; f < faces.size(); ++f) {
    if (int(f) == s.outer_face) continue;
    std::vector<int> sel;
    for (size_t i = 0; i < faces[f].size(); ++i)
      if (black(faces[f][i])) sel.push_back(int(i));
    if (sel.size() != 2) throw StructuralError("inner face without two black corners");
    Subdivision(surg, corners_of(faces[f])).chord(sel[0], sel[1]);
  }
  const auto& outer = faces[size_t(s.outer_face)];
  std::vector<int> sel;
  for (size_t i = 0; i < outer.size(); i += 2) sel.push_back(int(i));
  const int root = join_cyclically(surg, outer, sel);
  RootedMap m = surg.finish(root).first;
  validate(m);
  require_bridgeless(m, "black_diagonal_map");
  return m;
}

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw VerificationError("bijection: " + what);
}

struct Counts {
  int vertices = 0, inner = 0;
};
Counts counts(const RootedMap& m) {
  const MapStats s = validate(m);
  return {s.vertices, s.faces - 1};
}

}  // namespace

Report bijection_suite(int n_max, int f_max) {
  Report rep("bijection");
  long long quads = 0, maps = 0;
  for (int n = 1; n <= n_max; ++n)
    for (int f = 0; f <= f_max; ++f) {
      const std::string at = " at n=" + std::to_string(n) + ", f=" + std::to_string(f);
      const std::vector<LabeledQuad> qs = enumerate_quads_exact(n, f);
      const std::vector<RootedMap> ms = enumerate_bridgeless(n, n + f);
      expect(qs.size() == ms.size(), "class counts differ" + at);
      std::set<std::vector<int>> codomain, image, white_image;
      for (const RootedMap& m : ms) codomain.insert(canonical_code(m));
      for (const LabeledQuad& q : qs) {
        int lmax = 0, black = 0;
        for (size_t v = 0; v < q.dist.size(); ++v) {
          lmax += q.is_local_max[v];
          black += q.color[v] == Color::Black;
        }
        const int V = int(q.dist.size());
        const ABImage img = ab_forward_labeled(q);
        const Counts c = counts(img.map);
        expect(c.vertices == V - lmax && c.inner == lmax, "vertex/face transport" + at);
        expect(analyze(img.map).face_degree[size_t(analyze(img.map).outer_face)] == n, "boundary length" + at);
        expect(oriented_distances(img.map) == img.label, "oriented distance" + at);
        expect(rooted_isomorphic(ab_inverse(img.map).map, q.map), "ab_inverse(ab_forward(q)) != q" + at);
        const auto code = canonical_code(img.map);
        expect(codomain.count(code) == 1, "image outside the enumerated codomain" + at);
        image.insert(code);

        const RootedMap d = black_diagonal_map(q);
        const Counts cd = counts(d);
        expect(cd.vertices == black && cd.inner == V - black, "color transport" + at);
        expect(rooted_isomorphic(white_vertex_quad(d).map, q.map), "white vertex round trip" + at);
        white_image.insert(canonical_code(d));
      }
      expect(image.size() == qs.size(), "ab_forward not injective" + at);
      expect(white_image.size() == qs.size(), "black diagonals not injective" + at);
      for (const RootedMap& m : ms) {
        expect(!has_boundary_bridge(m), "bridge in codomain" + at);
        const LabeledQuad q = ab_inverse(m);
        expect(q.boundary_len == 2 * n && q.inner_faces() == f, "ab_inverse sizes" + at);
        expect(rooted_isomorphic(ab_forward(q), m), "ab_forward(ab_inverse(m)) != m" + at);
        const LabeledQuad w = white_vertex_quad(m);
        expect(rooted_isomorphic(black_diagonal_map(w), m), "black diagonal round trip" + at);
      }
      quads += (long long)qs.size();
      maps += (long long)ms.size();
    }
  rep.add("quadrangulations", quads);
  rep.add("general maps", maps);
  return rep;
}

}  // namespace sf
