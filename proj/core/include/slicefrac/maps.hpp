#pragma once

// Rooted planar maps as dart permutations, exhaustive enumeration of
// quadrangulations with a boundary and of general maps with a bridgeless
// boundary, the two weightings, and the bijections between them.
//
// Conventions: sigma turns counterclockwise around a vertex, alpha swaps the
// two darts of an edge, phi = sigma o alpha walks a face with the face on the
// right (clockwise around it).  The external face is the phi-cycle of the root
// dart.  The corner of dart d is the sector between sigma^-1(d) and d; it
// belongs to the face of d.

#include <cstdint>
#include <string>
#include <vector>

#include "slicefrac/bipoly.hpp"
#include "slicefrac/report.hpp"

namespace sf {

struct RootedMap {
  int n_darts = 0;
  std::vector<int> sigma, alpha;
  int root_dart = 0;

  int phi(int d) const { return sigma[size_t(alpha[size_t(d)])]; }
};

struct MapStats {
  int vertices = 0, edges = 0, faces = 0;
  std::vector<int> vertex_of, face_of;  // per dart, numbered by first dart
  std::vector<int> face_degree;
  int root_vertex = 0, outer_face = 0;
};

// Throws StructuralError unless sigma, alpha are permutations of the right kind.
MapStats analyze(const RootedMap& m);
// Transitivity and Euler genus 0 on top of analyze.
MapStats validate(const RootedMap& m);

// Breadth-first relabeling from the root (root becomes dart 0).
RootedMap canonical(const RootedMap& m);
std::vector<int> canonical_code(const RootedMap& m);
bool rooted_isomorphic(const RootedMap& a, const RootedMap& b);

// "2E; (sigma cycles); (alpha pairs); root"
std::string to_text(const RootedMap& m);
RootedMap from_text(const std::string& s);

// An edge of the external face with the external face on both sides.
bool has_boundary_bridge(const RootedMap& m);

enum class Color : std::uint8_t { Black, White };

struct LabeledQuad {
  RootedMap map;
  int boundary_len = 0;  // 2n
  // Per vertex, in MapStats numbering.
  std::vector<int> dist;
  std::vector<Color> color;
  std::vector<bool> is_local_max;

  int inner_faces() const;
};

// Distances, colors and local maxima; throws StructuralError if m is not a
// quadrangulation with a boundary.
LabeledQuad label_quad(const RootedMap& m);

// Dart bound from SLICEFRAC_MAX_DARTS (default 20).
int max_darts();

// One representative per rooted class, all f <= f_max, ordered by f.
std::vector<LabeledQuad> enumerate_quads(int n, int f_max);
std::vector<LabeledQuad> enumerate_quads_exact(int n, int f);
// General maps with E edges and a bridgeless boundary of length n.
std::vector<RootedMap> enumerate_bridgeless(int n, int edges);

// t_b^a t_w^b over the enumerated quadrangulations, cap n + 1 + f_max.
// bf_F counts non-root black and white vertices, bf_J non-root non-maxima and
// local maxima.
BiPoly bf_F(int n, int f_max);
BiPoly bf_J(int n, int f_max);

// Ambjorn-Budd rules: a diagonal in each inner face between the two corners
// followed clockwise by a larger label, the selected external corners joined
// cyclically.
struct ABImage {
  RootedMap map;
  std::vector<int> label;  // q-distance of each vertex of map
};
ABImage ab_forward_labeled(const LabeledQuad& q);
RootedMap ab_forward(const LabeledQuad& q);

// Labels by oriented distance, a new vertex in each inner face, every corner
// joined to the nearest corner counterclockwise along the face with label one
// more, or to the new vertex when there is none.
LabeledQuad ab_inverse(const RootedMap& m);

// Per vertex: distance from the root vertex with inner edges usable both ways
// and boundary edges only counterclockwise around the map.
std::vector<int> oriented_distances(const RootedMap& m);
Report oriented_distance_check(const RootedMap& m, const LabeledQuad& q);

// A white vertex in each inner face joined to all its corners, and back by
// joining the black corners of each face.
LabeledQuad white_vertex_quad(const RootedMap& m);
RootedMap black_diagonal_map(const LabeledQuad& q);

// All of the above on the full corpus n <= n_max, f <= f_max.
Report bijection_suite(int n_max, int f_max);

}  // namespace sf
