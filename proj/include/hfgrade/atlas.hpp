#pragma once

// Builders for benchmark diagrams and the stabilization move.

#include "hfgrade/diagram.hpp"
#include "hfgrade/grading.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hfgrade {

struct MarkedDiagram {
  HeegaardDiagram diagram;
  std::optional<Generator> contact;  // marked contact generator, if any
  std::string provenance;            // builder name and parameters
};

// Genus one: alpha a (1,0) curve, beta a curve meeting it p times with equal
// signs, in the cyclic order k -> q*k mod p. H1 = Z/p.
MarkedDiagram build_torus_diagram(long p, long q);

// Genus one, two vertices: a finger of beta pushed across alpha. One bigon,
// one two-cornered disk, one annulus; the basepoint sits in the annulus.
MarkedDiagram build_s1s2();

struct Stabilization {
  MarkedDiagram result;
  VertexId new_vertex = 0;          // in result.diagram
  std::vector<Generator> sources;   // generators of the input diagram
  std::vector<Generator> images;    // x -> (x, w), parallel to sources

  Generator map(const Generator& x) const;
};

// Connected sum with the one-vertex torus diagram inside the basepoint region.
Stabilization stabilize(const HeegaardDiagram& diagram);
Stabilization stabilize(const MarkedDiagram& marked);

// Open book with annulus page and monodromy the n-th power of the core Dehn
// twist. The surface is the doubled page; alpha is the doubled cocore arc a,
// beta the doubled push-off b whose page-0 copy carries the twist. Vertex x0 is
// the point a and b share on the page S x {1/2}; it is the contact generator.
// Twists run in the direction for which n = 1 gives the one-vertex diagram of
// S^3. |H1| = |n| for n != 0 and H1 = Z for n = 0.
MarkedDiagram build_annulus_open_book(long n);

}  // namespace hfgrade
