#pragma once

// Combinatorial Heegaard diagrams: oriented alpha/beta curves listed as cyclic
// vertex sequences, crossing signs giving the rotation system at each vertex,
// traced face circles and regions, plus the text file format.
//
// Rotation convention (counterclockwise around a vertex):
//   positive crossing: alpha-out, beta-out, alpha-in, beta-in
//   negative crossing: alpha-out, beta-in,  alpha-in, beta-out
// Quadrant i sits between rotation slots i and i+1.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hfgrade {

using VertexId = std::size_t;
using ArcId = std::size_t;
using RegionId = std::size_t;
using CircleId = std::size_t;

enum class Sign { positive, negative };
enum class Family { alpha, beta };
enum class Side { left_after, right_after };

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceLocation where);
  SourceLocation where() const { return where_; }

 private:
  SourceLocation where_;
};

// Structural problems found while assembling a parsed input into a diagram.
class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Parsed input
// ---------------------------------------------------------------------------

struct CurveVertex {
  std::string name;
  std::optional<Sign> sign;  // alpha listings only
  SourceLocation where;
};

struct CurveListing {
  std::string name;
  std::vector<CurveVertex> vertices;  // cyclic order along the oriented curve
  SourceLocation where;
};

struct BasepointLocator {
  std::string curve;
  std::string vertex;
  Side side = Side::left_after;
  SourceLocation where;
};

// Groups traced face circles (named by one of their darts, "curve:vertex+" or
// "curve:vertex-") into a single region of the given genus. `automatic` is the
// explicit spelling of the default: every unclaimed circle is its own disk.
struct RegionDirective {
  std::string label;
  int genus = 0;
  bool automatic = false;
  std::vector<std::string> darts;
  SourceLocation where;
};

struct CurveSystemInput {
  int genus = 0;
  std::vector<CurveListing> alpha;
  std::vector<CurveListing> beta;
  BasepointLocator basepoint;
  std::vector<RegionDirective> regions;
};

CurveSystemInput parse_diagram(std::string_view text);

// Canonical form: curves sorted by name, each cycle rotated to start at its
// lexicographically smallest vertex, directives sorted by label.
std::string serialize(const CurveSystemInput& input);

// ---------------------------------------------------------------------------
// Skeleton: the embedded graph determined by the curve listings
// ---------------------------------------------------------------------------

struct HalfEdge {
  ArcId arc = 0;
  bool outgoing = false;  // true: arc starts here; false: arc ends here
  bool operator==(const HalfEdge&) const = default;
};

// A directed side of an arc. The face on the left of the traversal owns it.
struct Dart {
  ArcId arc = 0;
  bool forward = true;
  bool operator==(const Dart&) const = default;
  auto operator<=>(const Dart&) const = default;
};

struct Arc {
  std::string name;  // "<curve>:<start vertex>"
  Family family = Family::alpha;
  std::size_t curve = 0;
  VertexId from = 0;
  VertexId to = 0;
};

struct Vertex {
  std::string name;
  std::size_t alpha = 0;  // index into alpha curves (sorted by name)
  std::size_t beta = 0;
  Sign sign = Sign::positive;
  ArcId alpha_out = 0, alpha_in = 0, beta_out = 0, beta_in = 0;
  std::array<HalfEdge, 4> rotation{};  // counterclockwise
};

struct Curve {
  std::string name;
  Family family = Family::alpha;
  std::vector<VertexId> vertices;  // listing order
  std::vector<ArcId> arcs;         // arcs[i] runs vertices[i] -> vertices[i+1]
};

struct Skeleton {
  int genus = 0;
  std::vector<Curve> alpha;
  std::vector<Curve> beta;
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
  std::map<std::string, VertexId> vertex_index;
  std::map<std::string, ArcId> arc_index;

  std::string dart_name(const Dart& d) const;
  std::optional<Dart> find_dart(const std::string& name) const;
  // The dart along the arc leaving `vertex` on `curve`, on the requested side.
  std::optional<Dart> locate(const std::string& curve, const std::string& vertex, Side side) const;
};

// Validates listing-level invariants (each vertex once per family, signs,
// curve counts) and builds the rotation system.
Skeleton build_skeleton(const CurveSystemInput& input);

using FaceCircle = std::vector<Dart>;

// Face tracing of the rotation system: every dart lies on exactly one circle.
std::vector<FaceCircle> trace_faces(const Skeleton& skeleton);
std::vector<FaceCircle> trace_faces(const CurveSystemInput& input);

// ---------------------------------------------------------------------------
// Assembled diagram
// ---------------------------------------------------------------------------

struct Region {
  std::string name;   // smallest dart name over its circles
  std::string label;  // directive label, empty for default disks
  int genus = 0;
  std::vector<CircleId> circles;
  std::size_t corners = 0;

  // 2 - 2*genus - circles
  long euler_characteristic() const;
};

struct Quadrant {
  VertexId vertex = 0;
  int position = 0;  // 0..3, between rotation slots position and position+1
  RegionId region = 0;
};

class HeegaardDiagram {
 public:
  static HeegaardDiagram assemble(const CurveSystemInput& input);

  std::uint64_t id() const { return id_; }
  int genus() const { return skeleton_.genus; }
  const CurveSystemInput& input() const { return input_; }
  const Skeleton& skeleton() const { return skeleton_; }

  std::size_t vertex_count() const { return skeleton_.vertices.size(); }
  std::size_t arc_count() const { return skeleton_.arcs.size(); }
  std::size_t region_count() const { return regions_.size(); }

  const Vertex& vertex(VertexId v) const { return skeleton_.vertices.at(v); }
  const Arc& arc(ArcId a) const { return skeleton_.arcs.at(a); }
  const Region& region(RegionId r) const { return regions_.at(r); }
  const std::vector<Region>& regions() const { return regions_; }
  const std::vector<Curve>& alpha_curves() const { return skeleton_.alpha; }
  const std::vector<Curve>& beta_curves() const { return skeleton_.beta; }
  const std::vector<FaceCircle>& circles() const { return circles_; }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<RegionId> find_region(const std::string& name) const;

  RegionId region_of_circle(CircleId c) const { return circle_region_.at(c); }
  RegionId region_of_dart(const Dart& d) const;
  RegionId left_of(ArcId a) const { return region_of_dart({a, true}); }
  RegionId right_of(ArcId a) const { return region_of_dart({a, false}); }
  RegionId basepoint_region() const { return basepoint_region_; }

  std::array<Quadrant, 4> quadrants_at(VertexId v) const;
  std::array<Quadrant, 4> quadrants_at(const std::string& vertex_name) const;

 private:
  HeegaardDiagram() = default;

  std::uint64_t id_ = 0;
  CurveSystemInput input_;
  Skeleton skeleton_;
  std::vector<FaceCircle> circles_;
  std::vector<CircleId> dart_circle_;  // indexed by 2*arc + (forward ? 0 : 1)
  std::vector<RegionId> circle_region_;
  std::vector<Region> regions_;
  std::vector<std::array<RegionId, 4>> quadrant_region_;
  RegionId basepoint_region_ = 0;
};

// Parse + assemble.
HeegaardDiagram load_diagram(std::string_view text);
HeegaardDiagram load_diagram_file(const std::string& path);

// ---------------------------------------------------------------------------
// Relisting utilities (same embedded diagram, different presentation)
// ---------------------------------------------------------------------------

// Reverses the listed direction of one curve. Crossing signs on that curve
// flip and darts/locators referring to its arcs are rewritten, so the result
// describes the same surface with that curve's orientation reversed.
CurveSystemInput reverse_curve_listing(const CurveSystemInput& input, const std::string& curve);

// Renames vertices and curves; names missing from the maps are kept.
CurveSystemInput rename(const CurveSystemInput& input, const std::map<std::string, std::string>& vertex_names,
                        const std::map<std::string, std::string>& curve_names);

}  // namespace hfgrade
