#pragma once

// Shared fixtures and brute-force oracles for the test binaries. Oracles here
// deliberately avoid the library's own solvers.

#include "hfgrade/atlas.hpp"
#include "hfgrade/diagram.hpp"
#include "hfgrade/grading.hpp"
#include "hfgrade/zlattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace fixtures {

using hfgrade::Integer;
using hfgrade::Rational;
using hfgrade::zlattice::Vector;

inline const char* const kSphere =
    "heegaard v1\n"
    "genus: 1\n"
    "alpha a0: x0+\n"
    "beta b0: x0\n"
    "basepoint: a0 x0 left-after\n";

inline const char* const kLens31 =
    "heegaard v1\n"
    "genus: 1\n"
    "alpha a0: x0+ x1+ x2+\n"
    "beta  b0: x0 x1 x2\n"
    "basepoint: a0 x0 left-after\n";

inline const char* const kLens21 =
    "heegaard v1\n"
    "genus: 1\n"
    "alpha a0: x0+ x1+\n"
    "beta b0: x0 x1\n"
    "basepoint: a0 x0 left-after\n";

// Genus one, alpha and beta homologous: two bigons, two hexagons, H1 = Z and
// a non-torsion class.
inline const char* const kWinding =
    "heegaard v1\n"
    "genus: 1\n"
    "alpha a0: x0+ x1+ x2- x3-\n"
    "beta b0: x0 x1 x2 x3\n"
    "basepoint: a0 x0 left-after\n";

// Connected sum of two copies of the S1xS2 diagram: the two annuli are joined
// into one four-holed sphere.
inline const char* const kDoubleS1S2 =
    "heegaard v1\n"
    "genus: 2\n"
    "alpha a0: x0- x1+\n"
    "alpha a1: y0- y1+\n"
    "beta b0: x0 x1\n"
    "beta b1: y0 y1\n"
    "basepoint: a0 x1 right-after\n"
    "region r0: genus=0 circles=a0:x0+,a0:x1-,a1:y0+,a1:y1-\n";

// Genus two diagram of S3 in which region a0:x3- is a rectangle from
// (x0, x4) to (x2, x3).
inline const char* const kRectangle =
    "heegaard v1\n"
    "genus: 2\n"
    "alpha a0: x1- x3+ x0+\n"
    "alpha a1: x4+ x2+\n"
    "beta b0: x2 x0 x1\n"
    "beta b1: x4 x3\n"
    "basepoint: a0 x1 left-after\n";

// Every atlas builder over small parameters.
inline std::vector<hfgrade::MarkedDiagram> atlas_sample(bool with_stabilizations) {
  std::vector<hfgrade::MarkedDiagram> out;
  for (long p = 1; p <= 5; ++p) out.push_back(hfgrade::build_torus_diagram(p, 1));
  out.push_back(hfgrade::build_torus_diagram(5, 2));
  out.push_back(hfgrade::build_s1s2());
  for (long n = -2; n <= 4; ++n) out.push_back(hfgrade::build_annulus_open_book(n));
  if (with_stabilizations) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) out.push_back(hfgrade::stabilize(out[i]).result);
  }
  return out;
}

// Generators by exhaustive search over g-subsets of vertices.
inline std::set<std::vector<std::string>> brute_generators(const hfgrade::HeegaardDiagram& d) {
  const std::size_t g = static_cast<std::size_t>(d.genus());
  const std::size_t v = d.vertex_count();
  std::set<std::vector<std::string>> out;
  std::vector<bool> pick(v, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(g, v)), true);
  if (g > v) return out;
  std::sort(pick.begin(), pick.end(), std::greater<>());
  do {
    std::set<std::size_t> alphas, betas;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < v; ++i)
      if (pick[i]) {
        alphas.insert(d.vertex(i).alpha);
        betas.insert(d.vertex(i).beta);
        names.push_back(d.vertex(i).name);
      }
    if (alphas.size() == g && betas.size() == g) {
      std::sort(names.begin(), names.end());
      out.insert(names);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// 0-chain boundary of the part of dD on one curve family, retraced arc by arc:
// an arc u -> v carrying coefficient c contributes c * (v - u).
inline Vector boundary_chain(const hfgrade::HeegaardDiagram& d, const Vector& a, hfgrade::Family family) {
  Vector chain(d.vertex_count());
  for (hfgrade::ArcId e = 0; e < d.arc_count(); ++e) {
    const auto& arc = d.arc(e);
    if (arc.family != family) continue;
    const Integer c = a[d.left_of(e)] - a[d.right_of(e)];
    chain[arc.to] += c;
    chain[arc.from] -= c;
  }
  return chain;
}

// y - x as a 0-chain.
inline Vector point_difference(const hfgrade::HeegaardDiagram& d, const hfgrade::Generator& x,
                               const hfgrade::Generator& y) {
  Vector chain(d.vertex_count());
  for (auto v : y.vertices) chain[v] += 1;
  for (auto v : x.vertices) chain[v] -= 1;
  return chain;
}

inline bool connects(const hfgrade::HeegaardDiagram& d, const Vector& a, const hfgrade::Generator& x,
                     const hfgrade::Generator& y) {
  Vector expected = point_difference(d, x, y);
  if (boundary_chain(d, a, hfgrade::Family::alpha) != expected) return false;
  for (auto& c : expected) c = -c;
  return boundary_chain(d, a, hfgrade::Family::beta) == expected;
}

// Lipshitz index evaluated from region data and quadrant ownership.
inline Rational index_oracle(const hfgrade::HeegaardDiagram& d, const Vector& a, const hfgrade::Generator& x,
                             const hfgrade::Generator& y) {
  Rational total;
  for (std::size_t r = 0; r < d.region_count(); ++r) {
    const auto& region = d.region(r);
    total += Rational(a[r]) * (Rational(region.euler_characteristic()) - Rational(region.corners, 4));
  }
  for (const auto* g : {&x, &y})
    for (auto v : g->vertices)
      for (const auto& q : d.quadrants_at(v)) total += Rational(a[q.region], 4);
  total.canonicalize();
  return total;
}

// Calls f on every integer combination of `basis` with coefficients in [-r, r].
inline void for_each_combination(const std::vector<Vector>& basis, std::size_t dim, int r,
                                 const std::function<void(const Vector&)>& f) {
  std::vector<int> c(basis.size(), -r);
  for (;;) {
    Vector v(dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < dim; ++j) v[j] += c[i] * basis[i][j];
    f(v);
    std::size_t i = 0;
    while (i < c.size() && c[i] == r) c[i++] = -r;
    if (i == c.size()) break;
    ++c[i];
  }
}

// Every domain in the box [-r, r]^regions connecting x to y, by the boundary
// oracle alone. Only for diagrams with a handful of regions.
inline std::vector<Vector> box_domains(const hfgrade::HeegaardDiagram& d, const hfgrade::Generator& x,
                                       const hfgrade::Generator& y, int r) {
  std::vector<Vector> unit;
  for (std::size_t i = 0; i < d.region_count(); ++i) {
    Vector e(d.region_count());
    e[i] = 1;
    unit.push_back(e);
  }
  std::vector<Vector> out;
  for_each_combination(unit, d.region_count(), r, [&](const Vector& v) {
    if (connects(d, v, x, y)) out.push_back(v);
  });
  return out;
}

// Nonnegative domains from x to y with every coefficient at most `top`, found
// as lattice translates of a particular solution. Callers confirm them with connects().
inline std::vector<Vector> positive_domains(const hfgrade::HeegaardDiagram& d, const hfgrade::Generator& x,
                                            const hfgrade::Generator& y, long top, int radius = 3) {
  const hfgrade::DomainSolver solver(d);
  auto domain = solver.solve(x, y);
  if (!domain) return {};
  std::vector<Vector> shifted;
  for (const auto& k : solver.periodic_basis()) {
    Vector p = k;
    for (auto& e : p) e -= k[0];
    shifted.push_back(p);
  }
  const auto directions = hfgrade::zlattice::lattice_basis(shifted, d.region_count());
  std::set<Vector> seen;
  for_each_combination(directions, d.region_count(), radius, [&](const Vector& step) {
    Vector v = domain->coefficients;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += step[j];
    const Integer lo = *std::min_element(v.begin(), v.end());
    for (long t = 0; t <= top; ++t) {
      Vector w = v;
      for (auto& e : w) e += t - lo;
      const Integer hi = *std::max_element(w.begin(), w.end());
      if (hi > top || hi == 0) continue;
      seen.insert(w);
    }
  });
  return {seen.begin(), seen.end()};
}

}  // namespace fixtures
