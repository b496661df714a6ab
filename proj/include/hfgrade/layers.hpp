#pragma once

// Layer surfaces of a nonnegative domain: F_l is the level set {multiplicity >= l}
// with each vertex split into cyclic clusters of included quadrants. Corners of
// the layers are classified and the index identities are audited layer by layer.

#include "hfgrade/diagram.hpp"
#include "hfgrade/grading.hpp"
#include "hfgrade/numeric.hpp"

#include <array>
#include <vector>

namespace hfgrade {

enum class Membership { none, x, y, both };

enum class CornerKind {
  interior,             // all four quadrants included
  edge_point,           // two adjacent quadrants: a boundary point, not a corner
  convex,               // one quadrant, at an x or y point
  concave,              // three quadrants, at an x or y point
  boundary_degenerate,  // x_i = y_j on the boundary of the layer
  interior_degenerate,  // x_i = y_j in the interior of the layer
  auxiliary,            // convex or concave corner at a point of neither x nor y
};

enum class CornerShape { none, convex, concave };

struct CornerClass {
  CornerKind kind = CornerKind::interior;
  CornerShape shape = CornerShape::none;
  int sign = 0;  // +1 / -1 for auxiliary corners
  Membership role = Membership::none;
  std::vector<int> quadrants;  // positions 0..3 forming this cluster
};

// One entry per vertex cluster at the given level (empty if no quadrant reaches it).
//
// Quadrants 0 and 2 are the ones a lone convex x-corner can occupy (and 1, 3
// for y). An auxiliary corner is positive when it looks like a convex x-corner
// or a concave y-corner, i.e. when its lone quadrant (convex) or its missing
// quadrant (concave) has even position.
std::vector<CornerClass> classify_corner(const std::array<Integer, 4>& multiplicities, long level, Membership role);

struct VertexCluster {
  VertexId vertex = 0;
  CornerClass corner;
};

struct LayerSurface {
  long level = 0;
  std::vector<RegionId> regions;          // a_k >= level
  std::vector<long> region_characteristics;  // parallel to regions
  std::vector<ArcId> edges;               // at least one side included
  std::vector<VertexCluster> clusters;
};

// Throws std::invalid_argument on negative coefficients.
std::vector<LayerSurface> decompose_layers(const HeegaardDiagram& diagram, const Generator& x, const Generator& y,
                                           const zlattice::Vector& coefficients);

// V_l - E_l + sum of region characteristics.
long layer_euler(const LayerSurface& layer);

// chi(F_l) - p_l/4 + q_l/4, counting every convex / concave cluster.
Rational layer_euler_measure(const LayerSurface& layer);

// e(F_l) + n_x(F_l) + n_y(F_l).
Rational layer_index(const HeegaardDiagram& diagram, const Generator& x, const Generator& y, const LayerSurface& layer);

struct LayerAudit {
  long level = 0;
  long chi = 0;
  long convex = 0;   // p: every convex corner
  long concave = 0;  // every concave corner
  long q = 0;        // concave corners at x or y points (nondegenerate, not auxiliary)
  long boundary_degenerate = 0;
  long interior_degenerate = 0;
  long auxiliary_positive = 0;  // convex auxiliary corners by sign
  long auxiliary_negative = 0;
  long signed_auxiliary = 0;    // positive minus negative
  long degenerate_total = 0;    // boundary degenerate + 2 per interior degenerate
  long interior_x = 0;  // nondegenerate x points in the interior of the layer
  long interior_y = 0;
  Rational euler_measure;
  Rational n_x;
  Rational n_y;
  Rational index;
};

struct IndexAudit {
  std::vector<LayerAudit> layers;
  Integer maslov;          // e(D) + n_x(D) + n_y(D), computed region by region
  Rational layer_sum;      // sum of layer indices
  bool single_layer_case = false;  // one layer, no degenerate or auxiliary corners
  long balance_x = 0;      // interior x corners + positive auxiliaries
  long balance_y = 0;      // interior y corners + negative auxiliaries
  bool balance_holds = true;
  bool balance_asserted = false;  // x and y share no vertex
};

// Decomposes and checks: the layer sum equals the domain index; for a single
// nondegenerate layer chi + q equals the index; when x and y share no vertex the
// interior-corner balance holds. Any failure throws ConsistencyError. Otherwise
// the balance is only reported: a domain with a periodic piece through a shared
// vertex can carry auxiliary corners that do not cancel.
IndexAudit audit_index(const HeegaardDiagram& diagram, const Generator& x, const Generator& y,
                       const zlattice::Vector& coefficients);

}  // namespace hfgrade
