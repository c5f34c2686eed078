#include "slicefrac/maps.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <future>
#include <map>
#include <queue>
#include <sstream>

#include "slicefrac/errors.hpp"

namespace sf {

namespace {

std::vector<int> cycle_ids(const std::vector<int>& perm, int& count) {
  std::vector<int> id(perm.size(), -1);
  count = 0;
  for (size_t d = 0; d < perm.size(); ++d) {
    if (id[d] >= 0) continue;
    for (size_t e = d; id[e] < 0; e = size_t(perm[e])) id[e] = count;
    ++count;
  }
  return id;
}

bool is_permutation_of(const std::vector<int>& p, int n) {
  if (int(p.size()) != n) return false;
  std::vector<char> hit(size_t(n), 0);
  for (int x : p) {
    if (x < 0 || x >= n || hit[size_t(x)]) return false;
    hit[size_t(x)] = 1;
  }
  return true;
}

bool transitive(const std::vector<int>& sigma, const std::vector<int>& alpha) {
  const size_t n = sigma.size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t count = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int e : {sigma[size_t(d)], alpha[size_t(d)]})
      if (!seen[size_t(e)]) {
        seen[size_t(e)] = 1;
        ++count;
        stack.push_back(e);
      }
  }
  return count == n;
}

}  // namespace

MapStats analyze(const RootedMap& m) {
  const int n = m.n_darts;
  if (n <= 0 || n % 2) throw StructuralError("dart count must be positive and even");
  if (!is_permutation_of(m.sigma, n) || !is_permutation_of(m.alpha, n))
    throw StructuralError("sigma and alpha must be permutations of the darts");
  for (int d = 0; d < n; ++d)
    if (m.alpha[size_t(d)] == d || m.alpha[size_t(m.alpha[size_t(d)])] != d)
      throw StructuralError("alpha must be a fixed-point-free involution");
  if (m.root_dart < 0 || m.root_dart >= n) throw StructuralError("root dart out of range");
  MapStats s;
  s.edges = n / 2;
  s.vertex_of = cycle_ids(m.sigma, s.vertices);
  std::vector<int> phi(static_cast<size_t>(n));
  for (int d = 0; d < n; ++d) phi[size_t(d)] = m.phi(d);
  s.face_of = cycle_ids(phi, s.faces);
  s.face_degree.assign(size_t(s.faces), 0);
  for (int f : s.face_of) ++s.face_degree[size_t(f)];
  s.root_vertex = s.vertex_of[size_t(m.root_dart)];
  s.outer_face = s.face_of[size_t(m.root_dart)];
  return s;
}

MapStats validate(const RootedMap& m) {
  MapStats s = analyze(m);
  if (!transitive(m.sigma, m.alpha)) throw StructuralError("map is not connected");
  if (s.vertices - s.edges + s.faces != 2) throw StructuralError("map is not planar");
  return s;
}

RootedMap canonical(const RootedMap& m) {
  const size_t n = size_t(m.n_darts);
  std::vector<int> label(n, -1), order;
  order.reserve(n);
  label[size_t(m.root_dart)] = 0;
  order.push_back(m.root_dart);
  for (size_t k = 0; k < order.size(); ++k) {
    const int d = order[k];
    for (int e : {m.sigma[size_t(d)], m.alpha[size_t(d)]})
      if (label[size_t(e)] < 0) {
        label[size_t(e)] = int(order.size());
        order.push_back(e);
      }
  }
  if (order.size() != n) throw StructuralError("map is not connected");
  RootedMap c;
  c.n_darts = m.n_darts;
  c.sigma.resize(n);
  c.alpha.resize(n);
  for (size_t d = 0; d < n; ++d) {
    c.sigma[size_t(label[d])] = label[size_t(m.sigma[d])];
    c.alpha[size_t(label[d])] = label[size_t(m.alpha[d])];
  }
  c.root_dart = 0;
  return c;
}

std::vector<int> canonical_code(const RootedMap& m) {
  const RootedMap c = canonical(m);
  std::vector<int> code;
  code.reserve(size_t(2 * c.n_darts));
  for (int d = 0; d < c.n_darts; ++d) {
    code.push_back(c.sigma[size_t(d)]);
    code.push_back(c.alpha[size_t(d)]);
  }
  return code;
}

bool rooted_isomorphic(const RootedMap& a, const RootedMap& b) {
  return a.n_darts == b.n_darts && canonical_code(a) == canonical_code(b);
}

std::string to_text(const RootedMap& m) {
  std::ostringstream os;
  os << m.n_darts << "; ";
  std::vector<char> seen(size_t(m.n_darts), 0);
  for (int d = 0; d < m.n_darts; ++d) {
    if (seen[size_t(d)]) continue;
    os << '(';
    for (int e = d; !seen[size_t(e)]; e = m.sigma[size_t(e)]) {
      if (e != d) os << ' ';
      os << e;
      seen[size_t(e)] = 1;
    }
    os << ')';
  }
  os << "; ";
  for (int d = 0; d < m.n_darts; ++d)
    if (d < m.alpha[size_t(d)]) os << '(' << d << ' ' << m.alpha[size_t(d)] << ')';
  os << "; " << m.root_dart;
  return os.str();
}

RootedMap from_text(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string p; std::getline(ss, p, ';');) parts.push_back(p);
  if (parts.size() != 4) throw StructuralError("map text needs four ';'-separated fields");
  auto cycles = [](const std::string& t) {
    std::vector<std::vector<int>> out;
    std::string tok;
    bool open = false;
    for (char ch : t) {
      if (ch == '(') {
        if (open) throw StructuralError("nested '(' in map text");
        open = true;
        out.emplace_back();
      } else if (ch == ')' || ch == ' ') {
        if (!tok.empty()) {
          if (!open) throw StructuralError("number outside a cycle in map text");
          out.back().push_back(std::stoi(tok));
          tok.clear();
        }
        if (ch == ')') open = false;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        tok += ch;
      } else {
        throw StructuralError(std::string("unexpected character '") + ch + "' in map text");
      }
    }
    if (open) throw StructuralError("unterminated cycle in map text");
    return out;
  };
  RootedMap m;
  try {
    m.n_darts = std::stoi(parts[0]);
    m.root_dart = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw StructuralError("bad dart count or root in map text");
  }
  if (m.n_darts <= 0) throw StructuralError("dart count must be positive");
  m.sigma.assign(size_t(m.n_darts), -1);
  m.alpha.assign(size_t(m.n_darts), -1);
  auto fill = [&](std::vector<int>& perm, const std::vector<std::vector<int>>& cyc) {
    for (const auto& c : cyc)
      for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] >= m.n_darts || perm[size_t(c[k])] >= 0) throw StructuralError("bad dart in map text");
        perm[size_t(c[k])] = c[(k + 1) % c.size()];
      }
  };
  fill(m.sigma, cycles(parts[1]));
  const auto pairs = cycles(parts[2]);
  for (const auto& p : pairs)
    if (p.size() != 2) throw StructuralError("alpha entries must be pairs");
  fill(m.alpha, pairs);
  analyze(m);
  return m;
}

bool has_boundary_bridge(const RootedMap& m) {
  const MapStats s = analyze(m);
  for (int d = 0; d < m.n_darts; ++d)
    if (s.face_of[size_t(d)] == s.outer_face && s.face_of[size_t(m.alpha[size_t(d)])] == s.outer_face) return true;
  return false;
}

// E = 2f + n.
int LabeledQuad::inner_faces() const { return (map.n_darts / 2 - boundary_len / 2) / 2; }

LabeledQuad label_quad(const RootedMap& m) {
  const MapStats s = validate(m);
  const int outer = s.face_degree[size_t(s.outer_face)];
  if (outer % 2) throw StructuralError("external face has odd degree");
  for (int f = 0; f < s.faces; ++f)
    if (f != s.outer_face && s.face_degree[size_t(f)] != 4) throw StructuralError("inner face of degree != 4");
  LabeledQuad q;
  q.map = m;
  q.boundary_len = outer;
  q.dist.assign(size_t(s.vertices), -1);
  std::vector<std::vector<int>> adj(size_t(s.vertices));
  for (int d = 0; d < m.n_darts; ++d)
    adj[size_t(s.vertex_of[size_t(d)])].push_back(s.vertex_of[size_t(m.alpha[size_t(d)])]);
  std::queue<int> bfs;
  q.dist[size_t(s.root_vertex)] = 0;
  bfs.push(s.root_vertex);
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (int w : adj[size_t(v)])
      if (q.dist[size_t(w)] < 0) {
        q.dist[size_t(w)] = q.dist[size_t(v)] + 1;
        bfs.push(w);
      }
  }
  q.color.resize(size_t(s.vertices));
  q.is_local_max.assign(size_t(s.vertices), true);
  for (int v = 0; v < s.vertices; ++v) {
    q.color[size_t(v)] = q.dist[size_t(v)] % 2 ? Color::White : Color::Black;
    for (int w : adj[size_t(v)]) {
      if (std::abs(q.dist[size_t(w)] - q.dist[size_t(v)]) != 1)
        throw StructuralError("distance labels do not differ by 1 along an edge");
      if (q.dist[size_t(w)] != q.dist[size_t(v)] - 1) q.is_local_max[size_t(v)] = false;
    }
    if (adj[size_t(v)].empty()) q.is_local_max[size_t(v)] = false;
  }
  if (q.is_local_max[size_t(s.root_vertex)]) throw StructuralError("root vertex is a local maximum");
  return q;
}

int max_darts() {
  if (const char* e = std::getenv("SLICEFRAC_MAX_DARTS")) {
    char* end = nullptr;
    const long v = std::strtol(e, &end, 10);
    if (end == e || *end || v < 2 || v > 64) throw ResourceError("SLICEFRAC_MAX_DARTS must be an integer in 2..64");
    return int(v);
  }
  return 20;
}

namespace {

// Glues the polygons of a fixed face permutation phi in every possible way and
// keeps the connected genus-0 results, one per rooted class.  Dart 0 is the
// root.  The search is split by the partner of dart 0.
class Gluer {
 public:
  Gluer(std::vector<int> phi, int vertices, int outer_len, bool bridgeless)
      : phi_(std::move(phi)), n_(int(phi_.size())), vertices_(vertices), outer_len_(outer_len), bridgeless_(bridgeless) {}

  std::map<std::vector<int>, RootedMap> run() const {
    std::vector<std::future<std::map<std::vector<int>, RootedMap>>> parts;
    for (int e = 1; e < n_; ++e)
      parts.push_back(std::async(std::launch::async, [this, e] {
        Search s{this, std::vector<int>(size_t(n_), -1), {}};
        s.alpha[0] = e;
        s.alpha[size_t(e)] = 0;
        s.rec();
        return std::move(s.found);
      }));
    std::map<std::vector<int>, RootedMap> all;
    for (auto& p : parts) all.merge(p.get());
    return all;
  }

 private:
  struct Search {
    const Gluer* g;
    std::vector<int> alpha;
    std::map<std::vector<int>, RootedMap> found;

    void rec() {
      int d = 0;
      while (d < g->n_ && alpha[size_t(d)] >= 0) ++d;
      if (d == g->n_) return leaf();
      for (int e = d + 1; e < g->n_; ++e) {
        if (alpha[size_t(e)] >= 0) continue;
        alpha[size_t(d)] = e;
        alpha[size_t(e)] = d;
        rec();
        alpha[size_t(d)] = alpha[size_t(e)] = -1;
      }
    }

    void leaf() {
      const size_t n = size_t(g->n_);
      std::vector<int> sigma(n);
      for (size_t d = 0; d < n; ++d) sigma[d] = g->phi_[size_t(alpha[d])];
      std::uint64_t seen = 0;
      int cycles = 0;
      for (size_t d = 0; d < n; ++d) {
        if (seen >> d & 1) continue;
        if (++cycles > g->vertices_) return;
        for (size_t e = d; !(seen >> e & 1); e = size_t(sigma[e])) seen |= std::uint64_t(1) << e;
      }
      if (cycles != g->vertices_ || !transitive(sigma, alpha)) return;
      if (g->bridgeless_)
        for (int d = 0; d < g->outer_len_; ++d)
          if (alpha[size_t(d)] < g->outer_len_) return;
      RootedMap m{g->n_, sigma, alpha, 0};
      found.emplace(canonical_code(m), canonical(m));
    }
  };

  std::vector<int> phi_;
  int n_, vertices_, outer_len_;
  bool bridgeless_;
};

// Polygons of the given degrees, the first one external, darts numbered
// consecutively.
std::vector<int> polygon_phi(const std::vector<int>& degrees) {
  std::vector<int> phi;
  for (int k : degrees) {
    const int base = int(phi.size());
    for (int i = 0; i < k; ++i) phi.push_back(base + (i + 1) % k);
  }
  return phi;
}

void guard(int darts) {
  const int cap = max_darts();
  if (darts > cap)
    throw ResourceError("enumeration needs " + std::to_string(darts) + " darts, bound is " + std::to_string(cap) +
                        " (SLICEFRAC_MAX_DARTS)");
  if (darts > 64) throw ResourceError("enumeration is limited to 64 darts");
}

void partitions(int total, int largest, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(total, largest); k >= 1; --k) {
    cur.push_back(k);
    partitions(total - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<LabeledQuad> enumerate_quads_exact(int n, int f) {
  if (n < 1 || f < 0) throw StructuralError("need n >= 1 and f >= 0");
  const int darts = 4 * f + 2 * n;
  guard(darts);
  std::vector<int> degrees{2 * n};
  degrees.insert(degrees.end(), size_t(f), 4);
  const auto found = Gluer(polygon_phi(degrees), f + n + 1, 2 * n, false).run();
  std::vector<LabeledQuad> out;
  out.reserve(found.size());
  for (const auto& [code, m] : found) out.push_back(label_quad(m));
  return out;
}

std::vector<LabeledQuad> enumerate_quads(int n, int f_max) {
  if (f_max < 0) throw StructuralError("f_max must be non-negative");
  guard(4 * f_max + 2 * n);
  std::vector<LabeledQuad> out;
  for (int f = 0; f <= f_max; ++f) {
    auto part = enumerate_quads_exact(n, f);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<RootedMap> enumerate_bridgeless(int n, int edges) {
  if (n < 1 || edges < 1) throw StructuralError("need n >= 1 and at least one edge");
  guard(2 * edges);
  std::vector<RootedMap> out;
  const int inner = 2 * edges - n;
  if (inner < 0) return out;
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(inner, inner, cur, parts);
  std::map<std::vector<int>, RootedMap> all;
  for (const auto& p : parts) {
    std::vector<int> degrees{n};
    degrees.insert(degrees.end(), p.begin(), p.end());
    const int vertices = edges - int(degrees.size()) + 2;
    if (vertices < 1) continue;
    all.merge(Gluer(polygon_phi(degrees), vertices, n, true).run());
  }
  for (auto& [code, m] : all) out.push_back(std::move(m));
  return out;
}

namespace {

BiPoly weigh(int n, int f_max, bool by_color) {
  const int cap = n + 1 + f_max;
  BiPoly p(cap);
  for (const LabeledQuad& q : enumerate_quads(n, f_max)) {
    int a = 0, b = 0;
    const int root = analyze(q.map).root_vertex;
    for (size_t v = 0; v < q.dist.size(); ++v) {
      if (int(v) == root) continue;
      const bool second = by_color ? q.color[v] == Color::White : bool(q.is_local_max[v]);
      ++(second ? b : a);
    }
    p.add_to(a, b, 1);
  }
  return p;
}

}  // namespace

BiPoly bf_F(int n, int f_max) { return weigh(n, f_max, true); }
BiPoly bf_J(int n, int f_max) { return weigh(n, f_max, false); }

}  // namespace sf
