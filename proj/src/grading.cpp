#include "hfgrade/grading.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hfgrade {

using zlattice::Vector;

NoPositive::NoPositive(int radius)
    : std::runtime_error("no nonnegative lattice translate within search radius " + std::to_string(radius)),
      radius_(radius) {}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

std::string generator_name(const HeegaardDiagram& diagram, const Generator& x) {
  std::string out;
  for (std::size_t i = 0; i < x.vertices.size(); ++i) {
    if (i) out += ",";
    out += diagram.vertex(x.vertices[i]).name;
  }
  return out;
}

std::vector<std::string> generator_key(const HeegaardDiagram& diagram, const Generator& x) {
  std::vector<std::string> key;
  for (VertexId v : x.vertices) key.push_back(diagram.vertex(v).name);
  std::sort(key.begin(), key.end());
  return key;
}

bool is_generator(const HeegaardDiagram& diagram, const Generator& x) {
  const auto g = static_cast<std::size_t>(diagram.genus());
  if (x.diagram != diagram.id() || x.vertices.size() != g) return false;
  std::vector<bool> beta_used(g, false);
  for (std::size_t i = 0; i < g; ++i) {
    if (x.vertices[i] >= diagram.vertex_count()) return false;
    const Vertex& v = diagram.vertex(x.vertices[i]);
    if (v.alpha != i || beta_used[v.beta]) return false;
    beta_used[v.beta] = true;
  }
  return true;
}

Generator parse_generator(const HeegaardDiagram& diagram, std::string_view names) {
  const auto g = static_cast<std::size_t>(diagram.genus());
  Generator x{diagram.id(), std::vector<VertexId>(g, diagram.vertex_count())};
  std::stringstream ss{std::string(names)};
  std::string name;
  std::size_t count = 0;
  while (std::getline(ss, name, ',')) {
    auto v = diagram.find_vertex(name);
    if (!v) throw std::invalid_argument("unknown vertex '" + name + "'");
    const std::size_t a = diagram.vertex(*v).alpha;
    if (x.vertices[a] != diagram.vertex_count())
      throw std::invalid_argument("two vertices on alpha curve '" + diagram.alpha_curves()[a].name + "'");
    x.vertices[a] = *v;
    ++count;
  }
  if (count != g || !is_generator(diagram, x))
    throw std::invalid_argument("'" + std::string(names) + "' does not choose one vertex on each alpha and beta curve");
  return x;
}

std::vector<Generator> enumerate_generators(const HeegaardDiagram& diagram) {
  const auto g = static_cast<std::size_t>(diagram.genus());
  std::vector<Generator> out;
  Generator current{diagram.id(), std::vector<VertexId>(g)};
  std::vector<bool> beta_used(g, false);

  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == g) {
      out.push_back(current);
      return;
    }
    for (VertexId v : diagram.alpha_curves()[i].vertices) {
      const std::size_t b = diagram.vertex(v).beta;
      if (beta_used[b]) continue;
      beta_used[b] = true;
      current.vertices[i] = v;
      self(self, i + 1);
      beta_used[b] = false;
    }
  };
  extend(extend, 0);

  std::sort(out.begin(), out.end(), [&](const Generator& a, const Generator& b) {
    return generator_key(diagram, a) < generator_key(diagram, b);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Corner system
// ---------------------------------------------------------------------------

namespace {

void require_generators(const HeegaardDiagram& diagram, const Generator& x, const Generator& y) {
  if (x.diagram != diagram.id() || y.diagram != diagram.id())
    throw std::invalid_argument("generators belong to a different diagram");
  if (!is_generator(diagram, x) || !is_generator(diagram, y)) throw std::invalid_argument("invalid generator");
}

zlattice::IntMatrix corner_matrix(const HeegaardDiagram& diagram) {
  zlattice::IntMatrix m(2 * diagram.vertex_count(), diagram.region_count());
  // coefficient of arc a in the boundary, added with the given weight
  auto add_arc = [&](std::size_t row, ArcId a, long weight) {
    m(row, diagram.left_of(a)) += weight;
    m(row, diagram.right_of(a)) -= weight;
  };
  for (VertexId v = 0; v < diagram.vertex_count(); ++v) {
    const Vertex& vx = diagram.vertex(v);
    add_arc(2 * v, vx.alpha_in, 1);
    add_arc(2 * v, vx.alpha_out, -1);
    add_arc(2 * v + 1, vx.beta_in, 1);
    add_arc(2 * v + 1, vx.beta_out, -1);
  }
  return m;
}

Vector corner_rhs(const HeegaardDiagram& diagram, const Generator& x, const Generator& y) {
  Vector rhs(2 * diagram.vertex_count());
  for (VertexId v : x.vertices) {
    rhs[2 * v] -= 1;
    rhs[2 * v + 1] += 1;
  }
  for (VertexId v : y.vertices) {
    rhs[2 * v] += 1;
    rhs[2 * v + 1] -= 1;
  }
  return rhs;
}

}  // namespace

CornerSystem build_corner_system(const HeegaardDiagram& diagram, const Generator& x, const Generator& y) {
  require_generators(diagram, x, y);
  return CornerSystem{corner_matrix(diagram), corner_rhs(diagram, x, y)};
}

Vector surface_class(const HeegaardDiagram& diagram) { return Vector(diagram.region_count(), Integer(1)); }

DomainSolver::DomainSolver(const HeegaardDiagram& diagram) : diagram_(diagram), system_(corner_matrix(diagram)) {}

std::optional<Domain> DomainSolver::solve(const Generator& x, const Generator& y) const {
  require_generators(diagram_, x, y);
  auto p = system_.particular(corner_rhs(diagram_, x, y));
  if (!p) return std::nullopt;
  return Domain{std::move(*p), x, y};
}

bool DomainSolver::connected(const Generator& x, const Generator& y) const {
  require_generators(diagram_, x, y);
  return system_.particular(corner_rhs(diagram_, x, y)).has_value();
}

std::optional<Domain> solve_domain(const HeegaardDiagram& diagram, const Generator& x, const Generator& y) {
  return DomainSolver(diagram).solve(x, y);
}

// ---------------------------------------------------------------------------
// Positive representatives
// ---------------------------------------------------------------------------

Domain positive_representative(const Domain& domain, const std::vector<Vector>& lattice, int radius) {
  if (radius < 0) throw std::invalid_argument("search radius must be nonnegative");
  const std::size_t n = domain.coefficients.size();
  const Vector ones(n, Integer(1));
  const bool translate_freely = n > 0 && zlattice::lattice_contains(lattice, ones);

  std::vector<Vector> directions;
  if (translate_freely) {
    // Complement of the surface class: kill the first coordinate.
    std::vector<Vector> projected;
    for (const auto& k : lattice) {
      Vector p = k;
      for (auto& e : p) e -= k[0];
      projected.push_back(std::move(p));
    }
    directions = zlattice::lattice_basis(projected, n);
  } else {
    directions = lattice;
  }

  const std::size_t m = directions.size();
  double box = 1;
  for (std::size_t i = 0; i < m; ++i) box *= 2.0 * radius + 1;
  if (box > 2e7) throw std::invalid_argument("positive-representative search box too large; lower the radius");

  std::optional<Vector> best;
  Integer best_sum;
  long best_steps = 0;
  std::vector<long> c(m, -radius);
  for (;;) {
    Vector v = domain.coefficients;
    long steps = 0;
    for (std::size_t i = 0; i < m; ++i) {
      steps += c[i] < 0 ? -c[i] : c[i];
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += c[i] * directions[i][j];
    }
    bool admissible = true;
    if (translate_freely) {
      const Integer low = *std::min_element(v.begin(), v.end());
      for (auto& e : v) e -= low;
    } else {
      admissible = std::all_of(v.begin(), v.end(), [](const Integer& e) { return sgn(e) >= 0; });
    }
    if (admissible) {
      Integer sum;
      for (const auto& e : v) sum += e;
      if (!best || sum < best_sum || (sum == best_sum && (steps < best_steps || (steps == best_steps && v < *best)))) {
        best = v;
        best_sum = sum;
        best_steps = steps;
      }
    }
    std::size_t i = 0;
    while (i < m && c[i] == radius) c[i++] = -radius;
    if (i == m) break;
    ++c[i];
  }
  if (!best) throw NoPositive(radius);
  return Domain{std::move(*best), domain.source, domain.target};
}

// ---------------------------------------------------------------------------
// Measures and indices
// ---------------------------------------------------------------------------

namespace {

void require_length(const HeegaardDiagram& diagram, const Vector& coefficients) {
  if (coefficients.size() != diagram.region_count())
    throw zlattice::DimensionError("domain has " + std::to_string(coefficients.size()) + " coefficients, diagram has " +
                                   std::to_string(diagram.region_count()) + " regions");
}

}  // namespace

Rational euler_measure(const HeegaardDiagram& diagram, const Vector& coefficients) {
  require_length(diagram, coefficients);
  Rational total;
  for (RegionId r = 0; r < diagram.region_count(); ++r) {
    if (sgn(coefficients[r]) == 0) continue;
    const Region& region = diagram.region(r);
    Rational e(Integer(4 * region.euler_characteristic()) - Integer(static_cast<unsigned long>(region.corners)), 4);
    e.canonicalize();
    total += Rational(coefficients[r]) * e;
  }
  return total;
}

Rational point_measure(const HeegaardDiagram& diagram, const Vector& coefficients, VertexId w) {
  require_length(diagram, coefficients);
  Integer quarters;
  for (const auto& q : diagram.quadrants_at(w)) quarters += coefficients[q.region];
  Rational out(quarters, 4);
  out.canonicalize();
  return out;
}

Rational point_measure(const HeegaardDiagram& diagram, const Vector& coefficients, const Generator& x) {
  Rational total;
  for (VertexId v : x.vertices) total += point_measure(diagram, coefficients, v);
  return total;
}

Integer basepoint_multiplicity(const HeegaardDiagram& diagram, const Vector& coefficients) {
  require_length(diagram, coefficients);
  return coefficients[diagram.basepoint_region()];
}

Integer maslov_index(const HeegaardDiagram& diagram, const Generator& x, const Generator& y,
                     const Vector& coefficients) {
  const Rational mu =
      euler_measure(diagram, coefficients) + point_measure(diagram, coefficients, x) + point_measure(diagram, coefficients, y);
  if (!is_integral(mu)) throw ConsistencyError("Maslov index " + to_string(mu) + " is not an integer");
  return mu.get_num();
}

Integer maslov_index(const HeegaardDiagram& diagram, const Domain& domain) {
  return maslov_index(diagram, domain.source, domain.target, domain.coefficients);
}

Integer grading_difference(const HeegaardDiagram& diagram, const Domain& domain) {
  return maslov_index(diagram, domain) - 2 * basepoint_multiplicity(diagram, domain.coefficients);
}

Integer divisibility(const HeegaardDiagram& diagram, const DomainSolver& solver, const Generator& x) {
  // 4 * (mu - 2 n_z) per region for periodic domains based at x.
  Vector functional(diagram.region_count());
  for (RegionId r = 0; r < diagram.region_count(); ++r) {
    const Region& region = diagram.region(r);
    functional[r] = 4 * region.euler_characteristic() - static_cast<long>(region.corners);
  }
  for (VertexId v : x.vertices)
    for (const auto& q : diagram.quadrants_at(v)) functional[q.region] += 2;
  functional[diagram.basepoint_region()] -= 8;

  const Integer g = zlattice::gcd_over_lattice(solver.periodic_basis(), functional);
  if (!mpz_divisible_ui_p(g.get_mpz_t(), 4))
    throw ConsistencyError("periodic domains have non-integral index (gcd " + to_string(g) + "/4)");
  return g / 4;
}

Integer divisibility(const HeegaardDiagram& diagram, const Generator& x) {
  return divisibility(diagram, DomainSolver(diagram), x);
}

// ---------------------------------------------------------------------------
// Spin^c classes and gradings
// ---------------------------------------------------------------------------

std::optional<std::size_t> SpincPartition::index_of(const Generator& x) const {
  auto it = std::find(generators.begin(), generators.end(), x);
  if (it == generators.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators.begin());
}

SpincPartition spinc_partition(const HeegaardDiagram& diagram) {
  SpincPartition out;
  out.generators = enumerate_generators(diagram);
  const DomainSolver solver(diagram);
  const std::size_t n = out.generators.size();
  out.class_of.assign(n, 0);

  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (auto& c : out.classes)
      if (solver.connected(out.generators[c.anchor], out.generators[i])) {
        c.members.push_back(i);
        out.class_of[i] = c.id;
        placed = true;
        break;
      }
    if (!placed) {
      SpincClass c;
      c.id = out.classes.size();
      c.anchor = i;  // generators are sorted, so the first member is the smallest
      c.members.push_back(i);
      out.class_of[i] = c.id;
      out.classes.push_back(std::move(c));
    }
  }

  // Solvability must be an equivalence relation matching the partition.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (solver.connected(out.generators[i], out.generators[j]) != (out.class_of[i] == out.class_of[j]))
        throw ConsistencyError("corner-system solvability is not transitive");

  for (auto& c : out.classes) {
    c.divisibility = divisibility(diagram, solver, out.generators[c.anchor]);
    for (std::size_t member : c.members)
      if (divisibility(diagram, solver, out.generators[member]) != c.divisibility)
        throw ConsistencyError("divisibility differs between generators of one class");
  }
  return out;
}

Integer relative_grading(const HeegaardDiagram& diagram, const Generator& x, const Generator& y) {
  const DomainSolver solver(diagram);
  auto domain = solver.solve(x, y);
  if (!domain) throw NoConnectingClass();
  return reduce_mod(grading_difference(diagram, *domain), divisibility(diagram, solver, x));
}

GradingLabel shift_label(const GradingLabel& label, const Integer& i) {
  GradingLabel out = label;
  out.offset = reduce_mod(label.offset + 2 * i, label.modulus);
  out.level = label.level + i;
  return out;
}

const GradingLabel& GradingTable::label_of(const Generator& x) const {
  auto index = partition.index_of(x);
  if (!index) throw std::invalid_argument("generator is not in the grading table");
  return rows[*index].label;
}

GradingTable grading_table(const HeegaardDiagram& diagram) {
  GradingTable table;
  table.partition = spinc_partition(diagram);
  const DomainSolver solver(diagram);
  const auto& gens = table.partition.generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const SpincClass& c = table.partition.classes[table.partition.class_of[i]];
    GradingLabel label;
    label.class_id = c.id;
    label.modulus = c.divisibility;
    if (i != c.anchor) {
      auto domain = solver.solve(gens[i], gens[c.anchor]);
      if (!domain) throw ConsistencyError("class member is not connected to its anchor");
      label.offset = reduce_mod(grading_difference(diagram, *domain), c.divisibility);
    }
    table.rows.push_back(GradingRow{gens[i], std::move(label)});
  }
  return table;
}

GradingLabel twisted_label(const GradingTable& table, const TwistedElement& element) {
  if (element.empty()) throw std::invalid_argument("twisted element has no summands");
  const GradingLabel& first = table.label_of(element.front().generator);
  for (const auto& term : element)
    if (!(table.label_of(term.generator) == first))
      throw MixedLabelError("twisted element is not homogeneous: summands carry different grading labels");
  return first;
}

ThetaShift theta_and_shift(const Rational& c1_squared, const Integer& chi, const Integer& sigma) {
  ThetaShift out;
  out.theta = c1_squared - Rational(2 * chi) - Rational(3 * sigma);
  out.theta.canonicalize();
  out.shift = out.theta / 4;
  out.shift.canonicalize();
  return out;
}

Rational gr0_of_theta(const Rational& theta) {
  Rational out = (Rational(2) + theta) / 4;
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// First homology
// ---------------------------------------------------------------------------

Integer FirstHomology::order() const {
  if (b1 > 0) return 0;
  Integer n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

std::string FirstHomology::describe() const {
  std::vector<std::string> parts;
  if (b1 == 1) parts.push_back("Z");
  if (b1 > 1) parts.push_back("Z^" + std::to_string(b1));
  for (const auto& t : torsion) parts.push_back("Z/" + to_string(t));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

FirstHomology homology_of_y(const HeegaardDiagram& diagram) {
  const auto g = static_cast<std::size_t>(diagram.genus());
  zlattice::IntMatrix intersections(g, g);
  for (VertexId v = 0; v < diagram.vertex_count(); ++v) {
    const Vertex& vx = diagram.vertex(v);
    intersections(vx.alpha, vx.beta) += vx.sign == Sign::positive ? 1 : -1;
  }
  FirstHomology out;
  for (const auto& d : zlattice::smith_invariants(intersections)) {
    if (d == 0)
      ++out.b1;
    else if (d > 1)
      out.torsion.push_back(d);
  }
  return out;
}

}  // namespace hfgrade
