#include "doctest.h"
#include "hfgrade/atlas.hpp"
#include "hfgrade/layers.hpp"
#include "support.hpp"

#include <map>

using namespace hfgrade;
using zlattice::Vector;

namespace {

std::array<Integer, 4> quad(long a, long b, long c, long d) { return {a, b, c, d}; }

Vector by_name(const HeegaardDiagram& d, const std::map<std::string, long>& values) {
  Vector v(d.region_count());
  for (const auto& [name, value] : values) v[*d.find_region(name)] = value;
  return v;
}

std::vector<HeegaardDiagram> audit_sample() {
  std::vector<HeegaardDiagram> out{load_diagram(fixtures::kWinding), load_diagram(fixtures::kDoubleS1S2),
                                   load_diagram(fixtures::kRectangle)};
  for (const auto& m : fixtures::atlas_sample(true)) out.push_back(m.diagram);
  return out;
}

}  // namespace

TEST_CASE("classify: convex, concave and interior") {
  auto c = classify_corner(quad(1, 0, 0, 0), 1, Membership::x);
  REQUIRE(c.size() == 1);
  CHECK(c[0].kind == CornerKind::convex);
  CHECK(c[0].shape == CornerShape::convex);
  CHECK(c[0].quadrants == std::vector<int>{0});

  c = classify_corner(quad(1, 1, 1, 0), 1, Membership::y);
  REQUIRE(c.size() == 1);
  CHECK(c[0].kind == CornerKind::concave);
  CHECK(c[0].quadrants == std::vector<int>{0, 1, 2});

  c = classify_corner(quad(3, 3, 3, 3), 2, Membership::none);
  REQUIRE(c.size() == 1);
  CHECK(c[0].kind == CornerKind::interior);
  CHECK(classify_corner(quad(3, 3, 3, 3), 4, Membership::none).empty());
}

TEST_CASE("classify: two quadrants") {
  auto c = classify_corner(quad(0, 1, 1, 0), 1, Membership::none);
  REQUIRE(c.size() == 1);
  CHECK(c[0].kind == CornerKind::edge_point);
  CHECK(c[0].shape == CornerShape::none);
  c = classify_corner(quad(1, 0, 0, 1), 1, Membership::x);  // wraps around
  REQUIRE(c.size() == 1);
  CHECK(c[0].quadrants == std::vector<int>{3, 0});
  c = classify_corner(quad(1, 0, 1, 0), 1, Membership::none);
  REQUIRE(c.size() == 2);
  CHECK(c[0].shape == CornerShape::convex);
  CHECK(c[1].shape == CornerShape::convex);
}

TEST_CASE("classify: auxiliary corners and their sign") {
  auto c = classify_corner(quad(2, 1, 1, 1), 2, Membership::none);
  REQUIRE(c.size() == 1);
  CHECK(c[0].kind == CornerKind::auxiliary);
  CHECK(c[0].shape == CornerShape::convex);
  CHECK(c[0].sign == 1);
  CHECK(classify_corner(quad(1, 2, 1, 1), 2, Membership::none)[0].sign == -1);
  // concave: the missing quadrant decides
  CHECK(classify_corner(quad(1, 2, 2, 2), 2, Membership::none)[0].sign == 1);
  CHECK(classify_corner(quad(2, 1, 2, 2), 2, Membership::none)[0].sign == -1);
}

TEST_CASE("classify: degenerate corners") {
  auto c = classify_corner(quad(1, 0, 0, 0), 1, Membership::both);
  REQUIRE(c.size() == 1);
  CHECK(c[0].kind == CornerKind::boundary_degenerate);
  CHECK(c[0].shape == CornerShape::convex);
  CHECK(classify_corner(quad(1, 1, 0, 0), 1, Membership::both)[0].kind == CornerKind::boundary_degenerate);
  CHECK(classify_corner(quad(1, 1, 1, 1), 1, Membership::both)[0].kind == CornerKind::interior_degenerate);
}

TEST_CASE("decompose: examples") {
  const auto lens = load_diagram(fixtures::kLens21);
  const auto gens = enumerate_generators(lens);
  CHECK(decompose_layers(lens, gens[0], gens[0], Vector(2)).empty());
  CHECK(decompose_layers(lens, gens[0], gens[0], Vector{1, 1}).size() == 1);
  const auto layers = decompose_layers(lens, gens[0], gens[0], Vector{2, 1});
  REQUIRE(layers.size() == 2);
  CHECK(layers[0].regions == std::vector<RegionId>{0, 1});
  CHECK(layers[1].regions == std::vector<RegionId>{0});
  CHECK_THROWS_AS(decompose_layers(lens, gens[0], gens[0], Vector{1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(decompose_layers(lens, gens[0], gens[0], Vector{1}), zlattice::DimensionError);
}

TEST_CASE("layer Euler characteristic: examples") {
  // one rectangle of L(2,1): its two corners at each vertex are opposite quadrants
  const auto lens = load_diagram(fixtures::kLens21);
  const auto g = enumerate_generators(lens).front();
  CHECK(layer_euler(decompose_layers(lens, g, g, Vector{1, 0}).front()) == 1);
  // the whole torus
  const auto s3 = load_diagram(fixtures::kSphere);
  const auto only = enumerate_generators(s3).front();
  const auto torus = decompose_layers(s3, only, only, Vector{1}).front();
  CHECK(torus.clusters.size() == 1);
  CHECK(torus.edges.size() == 2);
  CHECK(layer_euler(torus) == 0);
  // an annulus region
  const auto d = build_s1s2().diagram;
  const auto x = enumerate_generators(d).front();
  CHECK(layer_euler(decompose_layers(d, x, x, by_name(d, {{"a0:x0+", 1}})).front()) == 0);
}

TEST_CASE("layer index: examples") {
  const auto d = build_s1s2().diagram;
  const Generator x = parse_generator(d, "x1"), y = parse_generator(d, "x0");
  const auto bigon = decompose_layers(d, x, y, by_name(d, {{"a0:x0-", 1}}));
  REQUIRE(bigon.size() == 1);
  CHECK(layer_index(d, x, y, bigon.front()) == 1);

  const auto r = load_diagram(fixtures::kRectangle);
  const Generator rx = parse_generator(r, "x0,x4"), ry = parse_generator(r, "x2,x3");
  const Vector rect = by_name(r, {{"a0:x3-", 1}});
  REQUIRE(fixtures::connects(r, rect, rx, ry));
  const auto layers = decompose_layers(r, rx, ry, rect);
  REQUIRE(layers.size() == 1);
  CHECK(layer_euler_measure(layers.front()) == 0);
  CHECK(layer_index(r, rx, ry, layers.front()) == 1);
}

TEST_CASE("audit: examples") {
  const auto d = build_s1s2().diagram;
  const Generator x = parse_generator(d, "x1"), y = parse_generator(d, "x0");
  const auto bigon = audit_index(d, x, y, by_name(d, {{"a0:x0-", 1}}));
  CHECK(bigon.single_layer_case);
  REQUIRE(bigon.layers.size() == 1);
  CHECK(bigon.layers[0].chi == 1);
  CHECK(bigon.layers[0].q == 0);
  CHECK(bigon.maslov == 1);

  const auto zero = audit_index(d, x, x, Vector(3));
  CHECK(zero.layers.empty());
  CHECK(zero.maslov == 0);
  CHECK(zero.layer_sum == 0);

  const auto raised = audit_index(d, x, y, by_name(d, {{"a0:x0+", 1}, {"a0:x0-", 2}, {"a0:x1+", 1}}));
  CHECK(raised.layers.size() == 2);
  CHECK(raised.maslov == 3);
  CHECK(raised.layer_sum == 3);
}

TEST_CASE("audit: periodic domains report the balance without asserting it") {
  // Both auxiliary corners of this layer stack sit at x1 with the same sign.
  const auto d = build_s1s2().diagram;
  const Generator x = parse_generator(d, "x0");
  const Vector p = by_name(d, {{"a0:x0+", 2}, {"a0:x1+", 4}});
  REQUIRE(fixtures::connects(d, p, x, x));
  const auto audit = audit_index(d, x, x, p);
  CHECK_FALSE(audit.balance_asserted);
  CHECK_FALSE(audit.balance_holds);
  CHECK(audit.balance_x == 2);
  CHECK(audit.balance_y == 0);
  CHECK(audit.layer_sum == audit.maslov);
}

TEST_CASE("layer identities over positive domains") {
  long domains = 0, single = 0, with_auxiliary = 0;
  for (const auto& d : audit_sample()) {
    const auto gens = enumerate_generators(d);
    for (const auto& x : gens)
      for (const auto& y : gens)
        for (const auto& a : fixtures::positive_domains(d, x, y, 3, 2)) {
          REQUIRE(fixtures::connects(d, a, x, y));
          ++domains;
          const auto layers = decompose_layers(d, x, y, a);
          // nesting and per-vertex cluster counts
          for (std::size_t l = 1; l < layers.size(); ++l)
            CHECK(std::includes(layers[l - 1].regions.begin(), layers[l - 1].regions.end(),
                                layers[l].regions.begin(), layers[l].regions.end()));
          for (const auto& layer : layers) {
            std::map<VertexId, int> per_vertex;
            for (const auto& c : layer.clusters) ++per_vertex[c.vertex];
            for (const auto& [v, n] : per_vertex) CHECK(n <= 2);
          }
          Rational sum;
          for (const auto& layer : layers) sum += layer_index(d, x, y, layer);
          CHECK(sum == fixtures::index_oracle(d, a, x, y));

          const auto audit = audit_index(d, x, y, a);
          if (audit.single_layer_case) {
            ++single;
            CHECK(Rational(audit.layers[0].chi + audit.layers[0].q) == Rational(audit.maslov));
          }
          long aux = 0;
          for (const auto& row : audit.layers) aux += row.auxiliary_positive + row.auxiliary_negative;
          bool disjoint = true;
          for (auto v : x.vertices)
            disjoint = disjoint && std::find(y.vertices.begin(), y.vertices.end(), v) == y.vertices.end();
          CHECK(audit.balance_asserted == disjoint);
          if (disjoint) {
            CHECK(audit.balance_holds);
            with_auxiliary += aux > 0;
          }
        }
  }
  CHECK(domains >= 100);
  CHECK(single > 0);
  CHECK(with_auxiliary > 0);  // the sign convention is exercised
}

TEST_CASE("audit: a periodic piece through a shared vertex breaks the balance") {
  // x0 stays fixed while the second factor moves; the annulus on a0 adds two
  // auxiliary corners at x1.
  const auto d = load_diagram(fixtures::kDoubleS1S2);
  const Generator x = parse_generator(d, "x0,y0"), y = parse_generator(d, "x0,y1");
  const Vector a = by_name(d, {{"a0:x0+", 1}, {"a0:x1+", 2}, {"a1:y1+", 1}});
  REQUIRE(fixtures::connects(d, a, x, y));
  const auto audit = audit_index(d, x, y, a);
  CHECK_FALSE(audit.balance_asserted);
  CHECK_FALSE(audit.balance_holds);
  CHECK(audit.layer_sum == audit.maslov);
}
