#include "hfgrade/layers.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfgrade {

namespace {

CornerClass lone_corner(CornerShape shape, int position, Membership role) {
  // position: the lone included quadrant (convex) or the lone missing one (concave)
  CornerClass c;
  c.shape = shape;
  c.role = role;
  switch (role) {
    case Membership::none:
      c.kind = CornerKind::auxiliary;
      c.sign = position % 2 == 0 ? 1 : -1;
      break;
    case Membership::both:
      c.kind = CornerKind::boundary_degenerate;
      break;
    default:
      c.kind = shape == CornerShape::convex ? CornerKind::convex : CornerKind::concave;
  }
  return c;
}

}  // namespace

std::vector<CornerClass> classify_corner(const std::array<Integer, 4>& multiplicities, long level, Membership role) {
  std::array<bool, 4> in{};
  int count = 0;
  for (int i = 0; i < 4; ++i) count += (in[i] = multiplicities[i] >= level);

  std::vector<CornerClass> out;
  if (count == 0) return out;
  if (count == 4) {
    CornerClass c;
    c.kind = role == Membership::both ? CornerKind::interior_degenerate : CornerKind::interior;
    c.role = role;
    c.quadrants = {0, 1, 2, 3};
    out.push_back(c);
    return out;
  }
  // maximal cyclic runs of included quadrants
  for (int start = 0; start < 4; ++start) {
    if (!in[start] || in[(start + 3) % 4]) continue;
    std::vector<int> run;
    for (int i = start; in[i % 4] && run.size() < 4; ++i) run.push_back(i % 4);

    CornerClass c;
    if (run.size() == 1) {
      c = lone_corner(CornerShape::convex, run[0], role);
    } else if (run.size() == 3) {
      c = lone_corner(CornerShape::concave, (run[0] + 3) % 4, role);
    } else {
      c.kind = role == Membership::both ? CornerKind::boundary_degenerate : CornerKind::edge_point;
      c.role = role;
    }
    c.quadrants = std::move(run);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<LayerSurface> decompose_layers(const HeegaardDiagram& diagram, const Generator& x, const Generator& y,
                                           const zlattice::Vector& coefficients) {
  if (coefficients.size() != diagram.region_count())
    throw zlattice::DimensionError("domain length does not match the region count");
  for (const auto& a : coefficients)
    if (a < 0) throw std::invalid_argument("layer decomposition needs a nonnegative domain");

  std::vector<Membership> role(diagram.vertex_count(), Membership::none);
  for (VertexId v : x.vertices) role[v] = Membership::x;
  for (VertexId v : y.vertices) role[v] = role[v] == Membership::x ? Membership::both : Membership::y;

  Integer top;
  for (const auto& a : coefficients) top = std::max(top, a);

  std::vector<LayerSurface> layers;
  for (long l = 1; l <= top; ++l) {
    LayerSurface layer;
    layer.level = l;
    for (RegionId r = 0; r < diagram.region_count(); ++r)
      if (coefficients[r] >= l) {
        layer.regions.push_back(r);
        layer.region_characteristics.push_back(diagram.region(r).euler_characteristic());
      }
    for (ArcId a = 0; a < diagram.arc_count(); ++a)
      if (coefficients[diagram.left_of(a)] >= l || coefficients[diagram.right_of(a)] >= l) layer.edges.push_back(a);
    for (VertexId v = 0; v < diagram.vertex_count(); ++v) {
      std::array<Integer, 4> m;
      const auto quadrants = diagram.quadrants_at(v);
      for (int q = 0; q < 4; ++q) m[q] = coefficients[quadrants[q].region];
      for (auto& corner : classify_corner(m, l, role[v])) layer.clusters.push_back(VertexCluster{v, std::move(corner)});
    }
    layers.push_back(std::move(layer));
  }
  return layers;
}

long layer_euler(const LayerSurface& layer) {
  long chi = static_cast<long>(layer.clusters.size()) - static_cast<long>(layer.edges.size());
  for (long c : layer.region_characteristics) chi += c;
  return chi;
}

Rational layer_euler_measure(const LayerSurface& layer) {
  long p = 0, q = 0;
  for (const auto& c : layer.clusters) {
    p += c.corner.shape == CornerShape::convex;
    q += c.corner.shape == CornerShape::concave;
  }
  Rational e(4 * layer_euler(layer) - p + q, 4);
  e.canonicalize();
  return e;
}

namespace {

// n_w restricted to the layer: a quarter per included quadrant at w.
Rational layer_point_measure(const LayerSurface& layer, const Generator& g) {
  long quarters = 0;
  for (const auto& cluster : layer.clusters)
    if (std::find(g.vertices.begin(), g.vertices.end(), cluster.vertex) != g.vertices.end())
      quarters += static_cast<long>(cluster.corner.quadrants.size());
  Rational r(quarters, 4);
  r.canonicalize();
  return r;
}

bool shares_vertex(const Generator& x, const Generator& y) {
  for (auto v : x.vertices)
    if (std::find(y.vertices.begin(), y.vertices.end(), v) != y.vertices.end()) return true;
  return false;
}

}  // namespace

Rational layer_index(const HeegaardDiagram& /*diagram*/, const Generator& x, const Generator& y,
                     const LayerSurface& layer) {
  return layer_euler_measure(layer) + layer_point_measure(layer, x) + layer_point_measure(layer, y);
}

IndexAudit audit_index(const HeegaardDiagram& diagram, const Generator& x, const Generator& y,
                       const zlattice::Vector& coefficients) {
  IndexAudit audit;
  const auto layers = decompose_layers(diagram, x, y, coefficients);
  audit.maslov = maslov_index(diagram, x, y, coefficients);

  bool degenerate_or_auxiliary = false;
  for (const auto& layer : layers) {
    LayerAudit row;
    row.level = layer.level;
    row.chi = layer_euler(layer);
    for (const auto& cluster : layer.clusters) {
      const CornerClass& c = cluster.corner;
      row.convex += c.shape == CornerShape::convex;
      row.concave += c.shape == CornerShape::concave;
      switch (c.kind) {
        case CornerKind::concave:
          ++row.q;
          break;
        case CornerKind::boundary_degenerate:
          ++row.boundary_degenerate;
          break;
        case CornerKind::interior_degenerate:
          ++row.interior_degenerate;
          break;
        case CornerKind::auxiliary:
          if (c.shape == CornerShape::convex) (c.sign > 0 ? row.auxiliary_positive : row.auxiliary_negative) += 1;
          break;
        case CornerKind::interior:
          row.interior_x += c.role == Membership::x;
          row.interior_y += c.role == Membership::y;
          break;
        default:
          break;
      }
      if (c.kind == CornerKind::boundary_degenerate || c.kind == CornerKind::interior_degenerate ||
          c.kind == CornerKind::auxiliary)
        degenerate_or_auxiliary = true;
    }
    row.euler_measure = layer_euler_measure(layer);
    row.n_x = layer_point_measure(layer, x);
    row.n_y = layer_point_measure(layer, y);
    row.index = row.euler_measure + row.n_x + row.n_y;
    row.signed_auxiliary = row.auxiliary_positive - row.auxiliary_negative;
    row.degenerate_total = row.boundary_degenerate + 2 * row.interior_degenerate;
    audit.layer_sum += row.index;
    audit.balance_x += row.interior_x + row.auxiliary_positive;
    audit.balance_y += row.interior_y + row.auxiliary_negative;
    audit.layers.push_back(std::move(row));
  }

  if (audit.layer_sum != Rational(audit.maslov))
    throw ConsistencyError("layer indices sum to " + to_string(audit.layer_sum) + " but the domain index is " +
                           to_string(audit.maslov));
  audit.single_layer_case = audit.layers.size() == 1 && !degenerate_or_auxiliary;
  if (audit.single_layer_case) {
    const auto& only = audit.layers.front();
    if (Rational(only.chi + only.q) != audit.maslov)
      throw ConsistencyError("single-layer identity fails: chi + q = " + std::to_string(only.chi + only.q) +
                             ", index = " + to_string(audit.maslov));
  }
  audit.balance_holds = audit.balance_x == audit.balance_y;
  audit.balance_asserted = !shares_vertex(x, y);
  if (audit.balance_asserted && !audit.balance_holds)
    throw ConsistencyError("interior-corner balance fails: " + std::to_string(audit.balance_x) +
                           " (x side) vs " + std::to_string(audit.balance_y) + " (y side)");
  return audit;
}

}  // namespace hfgrade
