#pragma once

// Generators, domains, Spin^c classes and gradings of a Heegaard diagram.
//
// A domain is an integer combination of regions. Its boundary coefficient on
// an oriented arc is (left multiplicity) - (right multiplicity); a domain
// connects x to y when the alpha part of its boundary has 0-chain boundary
// y - x and the beta part x - y. The Maslov index is the Lipshitz formula
// e(D) + n_x(D) + n_y(D), and gr(x, y) = mu - 2 n_z modulo the divisibility.

#include "hfgrade/diagram.hpp"
#include "hfgrade/numeric.hpp"
#include "hfgrade/zlattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hfgrade {

// Raised when an identity that must hold by construction fails.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoConnectingClass : public std::runtime_error {
 public:
  NoConnectingClass() : std::runtime_error("no connecting class: generators lie in different Spin^c classes") {}
};

class NoPositive : public std::runtime_error {
 public:
  explicit NoPositive(int radius);
  int radius() const { return radius_; }

 private:
  int radius_;
};

class MixedLabelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Generator {
  std::uint64_t diagram = 0;
  std::vector<VertexId> vertices;  // vertices[i] lies on alpha curve i

  bool operator==(const Generator& other) const { return diagram == other.diagram && vertices == other.vertices; }
};

// Comma-joined vertex names in alpha-curve order, e.g. "x0,x4,x7".
std::string generator_name(const HeegaardDiagram& diagram, const Generator& x);

// Vertex names sorted; the ordering key used for anchors and listings.
std::vector<std::string> generator_key(const HeegaardDiagram& diagram, const Generator& x);

// Accepts vertex names in any order. Throws std::invalid_argument when the
// names do not pick exactly one vertex on every alpha and every beta curve.
Generator parse_generator(const HeegaardDiagram& diagram, std::string_view names);

bool is_generator(const HeegaardDiagram& diagram, const Generator& x);

// Sorted by generator_key.
std::vector<Generator> enumerate_generators(const HeegaardDiagram& diagram);

struct CornerSystem {
  zlattice::IntMatrix matrix;  // rows: (alpha, beta) pair per vertex; columns: regions
  zlattice::Vector rhs;
};

CornerSystem build_corner_system(const HeegaardDiagram& diagram, const Generator& x, const Generator& y);

struct Domain {
  zlattice::Vector coefficients;  // one per region
  Generator source;
  Generator target;
};

// The all-regions vector: the class of the whole surface.
zlattice::Vector surface_class(const HeegaardDiagram& diagram);

// Factorizes the corner matrix once; every (x, y) query reuses it.
class DomainSolver {
 public:
  explicit DomainSolver(const HeegaardDiagram& diagram);

  const HeegaardDiagram& diagram() const { return diagram_; }
  std::optional<Domain> solve(const Generator& x, const Generator& y) const;
  bool connected(const Generator& x, const Generator& y) const;

  // Basis of the periodic (homogeneous) lattice.
  const std::vector<zlattice::Vector>& periodic_basis() const { return system_.kernel(); }

 private:
  const HeegaardDiagram& diagram_;
  zlattice::IntegerSystem system_;
};

std::optional<Domain> solve_domain(const HeegaardDiagram& diagram, const Generator& x, const Generator& y);

constexpr int kDefaultSearchRadius = 8;

// Nonnegative lattice translate of the domain. When the lattice contains the
// surface class, translates by it are unrestricted and the box of radius R is
// searched over a complementary basis; otherwise the whole box is searched and
// NoPositive is thrown if it holds no nonnegative translate. Among candidates
// the smallest total multiplicity wins, then the fewest lattice steps.
Domain positive_representative(const Domain& domain, const std::vector<zlattice::Vector>& lattice,
                               int radius = kDefaultSearchRadius);

Rational euler_measure(const HeegaardDiagram& diagram, const zlattice::Vector& coefficients);
Rational point_measure(const HeegaardDiagram& diagram, const zlattice::Vector& coefficients, VertexId w);
Rational point_measure(const HeegaardDiagram& diagram, const zlattice::Vector& coefficients, const Generator& x);
Integer basepoint_multiplicity(const HeegaardDiagram& diagram, const zlattice::Vector& coefficients);

// Exact Lipshitz index; throws ConsistencyError when the value is not an integer.
Integer maslov_index(const HeegaardDiagram& diagram, const Generator& x, const Generator& y,
                     const zlattice::Vector& coefficients);
Integer maslov_index(const HeegaardDiagram& diagram, const Domain& domain);

// mu(D) - 2 n_z(D), before any reduction.
Integer grading_difference(const HeegaardDiagram& diagram, const Domain& domain);

// gcd of mu(P) - 2 n_z(P) over periodic domains P based at x; 0 means Z-valued.
Integer divisibility(const HeegaardDiagram& diagram, const DomainSolver& solver, const Generator& x);
Integer divisibility(const HeegaardDiagram& diagram, const Generator& x);

struct SpincClass {
  std::size_t id = 0;
  std::vector<std::size_t> members;  // indices into SpincPartition::generators
  std::size_t anchor = 0;            // index into SpincPartition::generators
  Integer divisibility;
};

struct SpincPartition {
  std::vector<Generator> generators;
  std::vector<SpincClass> classes;
  std::vector<std::size_t> class_of;  // per generator

  std::optional<std::size_t> index_of(const Generator& x) const;
};

SpincPartition spinc_partition(const HeegaardDiagram& diagram);

// gr(x, y) reduced modulo the divisibility (nonnegative residue when d > 0).
// Throws NoConnectingClass when x and y lie in different classes.
Integer relative_grading(const HeegaardDiagram& diagram, const Generator& x, const Generator& y);

// Affine coordinate within a Spin^c class: label(x) - label(y) = gr(x, y).
struct GradingLabel {
  std::size_t class_id = 0;
  Integer offset;
  Integer modulus;  // divisibility of the class; 0 for Z-valued
  Integer level;    // accumulated i of the [x, i] action

  bool operator==(const GradingLabel& other) const {
    return class_id == other.class_id && offset == other.offset && modulus == other.modulus;
  }
};

// Offset increases by 2i, reduced modulo the class divisibility.
GradingLabel shift_label(const GradingLabel& label, const Integer& i);

struct GradingRow {
  Generator generator;
  GradingLabel label;
};

struct GradingTable {
  SpincPartition partition;
  std::vector<GradingRow> rows;  // same order as partition.generators

  const GradingLabel& label_of(const Generator& x) const;
};

GradingTable grading_table(const HeegaardDiagram& diagram);

// e^xi . x summands; the exponent vector is over a fixed H^1 basis.
struct TwistedTerm {
  zlattice::Vector exponents;
  Generator generator;
};
using TwistedElement = std::vector<TwistedTerm>;

// Common label of every summand; the twisted coefficient plays no role.
GradingLabel twisted_label(const GradingTable& table, const TwistedElement& element);

struct ThetaShift {
  Rational theta;  // c1^2 - 2 chi - 3 sigma
  Rational shift;  // theta / 4
};

ThetaShift theta_and_shift(const Rational& c1_squared, const Integer& chi, const Integer& sigma);

// (2 + theta) / 4
Rational gr0_of_theta(const Rational& theta);

struct FirstHomology {
  int b1 = 0;
  std::vector<Integer> torsion;  // invariant factors greater than 1

  Integer order() const;  // 0 when infinite
  std::string describe() const;
};

// H1(Y) as the cokernel of the signed alpha/beta intersection matrix.
FirstHomology homology_of_y(const HeegaardDiagram& diagram);

}  // namespace hfgrade
