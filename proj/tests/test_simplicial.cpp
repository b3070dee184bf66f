#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "gvd/corpus.hpp"
#include "gvd/decompose.hpp"
#include "gvd/parse.hpp"
#include "gvd/reference.hpp"
#include "gvd/simplicial.hpp"

using namespace gvd;

namespace {

Polynomial p(const std::string& s, const RingPtr& r) {
  return parse_polynomial(s, r);
}

std::vector<std::vector<int>> facet_list(const SimplicialComplex& c) {
  return c.facets();
}

}  // namespace

TEST_CASE("link and deletion golden examples") {
  SimplicialComplex c3 = reference::triangle_complex();
  SimplicialComplex lk = c3.link("z");
  SimplicialComplex del = c3.deletion("z");
  CHECK(facet_list(lk) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(facet_list(del) == std::vector<std::vector<int>>{{0, 1}});
  CHECK(lk.vertices() == std::vector<std::string>{"x", "y"});

  // Cone: link = deletion = base.
  SimplicialComplex cone = SimplicialComplex::from_names(
      {"a", "1", "2", "3"},
      {{"a", "1", "2"}, {"a", "2", "3"}, {"a", "1", "3"}});
  CHECK(cone.is_cone_vertex(0));
  CHECK(facet_list(cone.link("a")) == facet_list(cone.deletion("a")));

  SimplicialComplex simplex =
      SimplicialComplex::from_names({"1", "2", "3"}, {{"1", "2", "3"}});
  CHECK(facet_list(simplex.link("1")) ==
        std::vector<std::vector<int>>{{0, 1}});
  CHECK(facet_list(simplex.deletion("1")) ==
        std::vector<std::vector<int>>{{0, 1}});
  CHECK_THROWS(simplex.link("q"));
}

TEST_CASE("facet minimization and purity") {
  SimplicialComplex c = SimplicialComplex::from_names(
      {"1", "2", "3"}, {{"1", "2"}, {"1"}, {"2", "1"}});
  CHECK(facet_list(c) == std::vector<std::vector<int>>{{0, 1}});
  CHECK(c.is_pure());
  SimplicialComplex mixed =
      SimplicialComplex::from_names({"1", "2", "3"}, {{"1", "2"}, {"3"}});
  CHECK(!mixed.is_pure());
  CHECK(mixed.dimension() == 1);
  CHECK_THROWS(is_vertex_decomposable_pure(mixed));
}

TEST_CASE("stanley-reisner golden examples") {
  Ideal tri = stanley_reisner_ideal(reference::triangle_complex());
  const RingPtr& R = tri.ring();
  CHECK(ideals_equal(tri, Ideal(R, {p("x*y*z", R)})));

  SimplicialComplex simplex =
      SimplicialComplex::from_names({"1", "2", "3"}, {{"1", "2", "3"}});
  CHECK(is_zero_ideal(stanley_reisner_ideal(simplex)));

  SimplicialComplex two_points =
      SimplicialComplex::from_names({"a", "b"}, {{"a"}, {"b"}});
  Ideal tp = stanley_reisner_ideal(two_points);
  CHECK(ideals_equal(tp, Ideal(tp.ring(), {p("a*b", tp.ring())})));

  // Empty complex: every vertex is a minimal non-face.
  SimplicialComplex empty = SimplicialComplex::empty_complex({"a", "b"});
  Ideal ie = stanley_reisner_ideal(empty);
  CHECK(is_variable_generated(ie));
  CHECK(generated_variables(ie).size() == 2);
}

TEST_CASE("vertex decomposability verdicts") {
  CHECK(is_vertex_decomposable_pure(reference::triangle_complex())
            .decomposable);

  SimplicialComplex simplex = SimplicialComplex::from_names(
      {"1", "2", "3", "4"}, {{"1", "2", "3", "4"}});
  VDTrace t = is_vertex_decomposable_pure(simplex);
  CHECK(t.decomposable);
  CHECK(t.root->kind == VDKind::Base);

  // Cycles of any length are decomposable 1-complexes.
  for (int n = 4; n <= 6; ++n) {
    std::vector<std::string> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
    std::vector<std::vector<std::string>> facets;
    for (int i = 0; i < n; ++i)
      facets.push_back({verts[i], verts[(i + 1) % n]});
    CHECK(is_vertex_decomposable_pure(
              SimplicialComplex::from_names(verts, facets))
              .decomposable);
  }

  CHECK_THROWS(is_vertex_decomposable_pure(
      SimplicialComplex({"a"}, std::vector<std::vector<int>>{})));
}

TEST_CASE("projective plane triangulation is pure and undecomposable") {
  SimplicialComplex rp = reference::projective_plane_six();
  CHECK(rp.is_pure());
  CHECK(rp.dimension() == 2);
  REQUIRE(rp.facets().size() == 10);
  // Closed surface: every edge lies in exactly two triangles.
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& f : rp.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j)
        ++edge_count[{f[i], f[j]}];
  CHECK(edge_count.size() == 15);
  for (const auto& [e, c] : edge_count) CHECK(c == 2);

  VDTrace t = is_vertex_decomposable_pure(rp);
  CHECK(!t.decomposable);
}

TEST_CASE("regularity recursion golden examples") {
  VDTrace tri = is_vertex_decomposable_pure(reference::triangle_complex());
  CHECK(reg_via_vd_recursion(tri) == 2);

  SimplicialComplex simplex =
      SimplicialComplex::from_names({"1", "2"}, {{"1", "2"}});
  CHECK(reg_via_vd_recursion(is_vertex_decomposable_pure(simplex)) == 0);

  // Cone over the triangle: regularity equals the base value.
  SimplicialComplex cone = SimplicialComplex::from_names(
      {"a", "x", "y", "z"},
      {{"a", "x", "y"}, {"a", "y", "z"}, {"a", "x", "z"}});
  VDTrace ct = is_vertex_decomposable_pure(cone);
  REQUIRE(ct.decomposable);
  CHECK(reg_via_vd_recursion(ct) == 2);
  Ideal sr = stanley_reisner_ideal(cone);
  CHECK(*invariants_direct(sr, CmStatus::Certified).reg == 2);

  VDTrace bad = is_vertex_decomposable_pure(reference::projective_plane_six());
  CHECK_THROWS(reg_via_vd_recursion(bad));
}

TEST_CASE("recursion equals direct regularity on seeded pure complexes") {
  Rng rng(67);
  int verified = 0;
  for (int i = 0; i < 40 && verified < 12; ++i) {
    SimplicialComplex c = random_pure_complex(rng, 7);
    VDTrace t = is_vertex_decomposable_pure(c);
    if (!t.decomposable) continue;
    Ideal sr = stanley_reisner_ideal(c);
    if (is_unit_ideal(sr)) continue;
    CHECK(reg_via_vd_recursion(t) ==
          *invariants_direct(sr, CmStatus::Certified).reg);
    ++verified;
  }
  CHECK(verified >= 8);
}

TEST_CASE("decomposable complexes give decomposable ideals") {
  Rng rng(71);
  int verified = 0;
  for (int i = 0; i < 25 && verified < 6; ++i) {
    SimplicialComplex c = random_pure_complex(rng, 6);
    VDTrace t = is_vertex_decomposable_pure(c);
    if (!t.decomposable) continue;
    CHECK(is_gvd(stanley_reisner_ideal(c)).certified);
    ++verified;
  }
  CHECK(verified >= 4);
}

TEST_CASE("splits of Stanley-Reisner ideals match link and star") {
  // At a vertex v: N + <v> is the deletion ideal and C the star ideal.
  SimplicialComplex c3 = reference::triangle_complex();
  Ideal sr = stanley_reisner_ideal(c3);
  const RingPtr& R = sr.ring();
  GVDSplit s = one_step_split(sr, 2);  // split at z
  REQUIRE(s.valid);
  CHECK(ideals_equal(s.C, Ideal(R, {p("x*y", R)})));  // star of z
  Ideal deletion_ideal(R, {p("z", R)});  // deletion of z, in the full ring
  CHECK(ideals_equal(sum(s.N, Polynomial::variable(R, 2)), deletion_ideal));
}
