#include <cstdlib>

#include "doctest.h"
#include "slicefrac/errors.hpp"
#include "slicefrac/maps.hpp"
#include "slicefrac/slices.hpp"

using namespace sf;

namespace {

// A single edge: two darts, two vertices, one face.
RootedMap single_edge() { return from_text("2; (0)(1); (0 1); 0"); }

int count_f(int n, int f) { return int(enumerate_quads_exact(n, f).size()); }

}  // namespace

TEST_CASE("map text format and canonical forms") {
  const RootedMap e = single_edge();
  const MapStats s = validate(e);
  CHECK(s.vertices == 2);
  CHECK(s.faces == 1);
  CHECK(s.face_degree[0] == 2);
  CHECK(to_text(e) == "2; (0)(1); (0 1); 0");

  // A loop looks the same from both darts; a path does not.
  const RootedMap loop = from_text("2; (0 1); (0 1); 0");
  RootedMap other = loop;
  other.root_dart = 1;
  CHECK(validate(loop).faces == 2);
  CHECK(rooted_isomorphic(loop, other));
  const RootedMap end = from_text("4; (0)(1 2)(3); (0 1)(2 3); 0");
  RootedMap middle = end;
  middle.root_dart = 1;
  CHECK_FALSE(rooted_isomorphic(end, middle));
  CHECK(has_boundary_bridge(e));
  CHECK_FALSE(has_boundary_bridge(loop));

  // Relabeling darts does not change the canonical code.
  const RootedMap path = from_text("4; (0)(1 2)(3); (0 1)(2 3); 0");
  const RootedMap perm = from_text("4; (3)(2 0)(1); (3 2)(0 1); 3");
  CHECK(rooted_isomorphic(path, perm));
  CHECK(canonical(perm).root_dart == 0);
  CHECK(to_text(canonical(perm)) == to_text(canonical(path)));

  CHECK_THROWS_AS(from_text("2; (0 1); (0 1)"), StructuralError);
  CHECK_THROWS_AS(from_text("2; (0)(1); (0 0); 0"), StructuralError);
  CHECK_THROWS_AS(from_text("3; (0 1 2); (0 1)(2); 0"), StructuralError);
  // Two separate edges are not connected.
  CHECK_THROWS_AS(validate(from_text("4; (0)(1)(2)(3); (0 1)(2 3); 0")), StructuralError);
  // One vertex with two interleaved loops lives on the torus.
  CHECK_THROWS_AS(validate(from_text("4; (0 1 2 3); (0 2)(1 3); 0")), StructuralError);
}

TEST_CASE("labeled quadrangulations") {
  const LabeledQuad q = label_quad(single_edge());
  CHECK(q.boundary_len == 2);
  CHECK(q.inner_faces() == 0);
  CHECK(q.dist == std::vector<int>{0, 1});
  CHECK(q.color == std::vector<Color>{Color::Black, Color::White});
  CHECK(q.is_local_max == std::vector<bool>{false, true});
  // A triangle is not a quadrangulation.
  CHECK_THROWS_AS(label_quad(from_text("6; (0 5)(1 2)(3 4); (0 1)(2 3)(4 5); 0")), StructuralError);
}

TEST_CASE("enumeration counts") {
  CHECK(count_f(1, 0) == 1);
  CHECK(count_f(2, 0) == 2);  // plane trees with two edges
  CHECK(count_f(3, 0) == 5);
  // Boundary 2: closing the digon gives a quadrangulation with f faces
  // rooted on an edge, 2 * 3^f (2f)! / (f! (f+2)!).
  CHECK(count_f(1, 1) == 2);
  CHECK(count_f(1, 2) == 9);
  CHECK(count_f(1, 3) == 54);
  CHECK(enumerate_quads(1, 1).size() == 3);
  for (const LabeledQuad& q : enumerate_quads(2, 2)) {
    CHECK(q.boundary_len == 4);
    CHECK(validate(q.map).vertices == q.inner_faces() + 3);
  }
}

TEST_CASE("resource guard") {
  CHECK_THROWS_AS(enumerate_quads(5, 3), ResourceError);
  setenv("SLICEFRAC_MAX_DARTS", "6", 1);
  CHECK_THROWS_AS(enumerate_quads_exact(1, 2), ResourceError);
  CHECK_NOTHROW(enumerate_quads_exact(1, 1));
  setenv("SLICEFRAC_MAX_DARTS", "junk", 1);
  CHECK_THROWS_AS(max_darts(), ResourceError);
  unsetenv("SLICEFRAC_MAX_DARTS");
  CHECK(max_darts() == 20);
}

TEST_CASE("both weightings") {
  CHECK(bf_F(1, 0) == BiPoly::tw(2));
  CHECK(bf_J(1, 0) == BiPoly::tw(2));
  const BiPoly F1 = bf_F(1, 1);
  CHECK(F1.coeff(0, 1) == 1);
  CHECK(F1.coeff(0, 2) == 1);
  CHECK(F1.coeff(1, 1) == 1);
  for (int n = 1; n <= 2; ++n)
    for (int f = 0; f <= 3; ++f) CHECK(bf_F(n, f) == bf_J(n, f));
}

TEST_CASE("enumeration against the slice generating function") {
  for (int n = 1; n <= 3; ++n) {
    const int f_max = n == 3 ? 2 : 3;
    const BiPoly e = bf_F(n, f_max);
    const BiPoly s = f_n(n, n + f_max);
    for (int d = 0; d <= n + f_max; ++d)
      for (int a = 0; a <= d; ++a) CHECK(e.coeff(a, d - a) == s.coeff(a, d - a));
  }
}

TEST_CASE("Ambjorn-Budd on the single edge") {
  const LabeledQuad q = label_quad(single_edge());
  const ABImage img = ab_forward_labeled(q);
  const MapStats s = validate(img.map);
  CHECK(s.vertices == 1);
  CHECK(s.edges == 1);
  CHECK(s.face_degree[size_t(s.outer_face)] == 1);
  CHECK(img.label == std::vector<int>{0});
  CHECK(rooted_isomorphic(ab_inverse(img.map).map, q.map));
  CHECK_NOTHROW(oriented_distance_check(img.map, q));
  CHECK_THROWS_AS(ab_inverse(single_edge()), VerificationError);
  CHECK(rooted_isomorphic(white_vertex_quad(img.map).map, q.map));
}

TEST_CASE("bijection suite") {
  const Report r = bijection_suite(2, 3);
  CHECK(r.items.size() == 2);
  CHECK_NOTHROW(bijection_suite(3, 2));
  for (const LabeledQuad& q : enumerate_quads(3, 2)) CHECK_NOTHROW(oriented_distance_check(ab_forward(q), q));
}
