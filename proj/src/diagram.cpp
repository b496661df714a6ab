#include "hfgrade/diagram.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace hfgrade {

ParseError::ParseError(const std::string& message, SourceLocation where)
    : std::runtime_error("line " + std::to_string(where.line) + ", column " + std::to_string(where.column) + ": " +
                         message),
      where_(where) {}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Token {
  std::string text;
  SourceLocation where;
};

std::vector<Token> tokenize(std::string_view line, std::size_t line_number) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), {line_number, start + 1}});
  }
  return tokens;
}

bool is_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

void require_name(const std::string& name, SourceLocation where, const char* what) {
  if (!is_name(name)) throw ParseError(std::string("invalid ") + what + " name '" + name + "'", where);
}

// Splits "name:" or "name: rest" forms: the keyword's argument token carries a trailing colon.
std::string strip_colon(const Token& t, const char* what) {
  if (t.text.size() < 2 || t.text.back() != ':')
    throw ParseError(std::string("expected '<") + what + ">:' but found '" + t.text + "'", t.where);
  return t.text.substr(0, t.text.size() - 1);
}

int parse_nonnegative(const std::string& text, SourceLocation where, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      text.size() > 6)
    throw ParseError(std::string("expected a nonnegative integer for ") + what + ", found '" + text + "'", where);
  return std::stoi(text);
}

bool split_dart(const std::string& dart, std::string& curve, std::string& vertex, bool& forward) {
  if (dart.size() < 4) return false;
  const char last = dart.back();
  if (last != '+' && last != '-') return false;
  const auto colon = dart.find(':');
  if (colon == std::string::npos) return false;
  curve = dart.substr(0, colon);
  vertex = dart.substr(colon + 1, dart.size() - colon - 2);
  forward = last == '+';
  return is_name(curve) && is_name(vertex);
}

std::string join_dart(const std::string& curve, const std::string& vertex, bool forward) {
  return curve + ":" + vertex + (forward ? "+" : "-");
}

}  // namespace

CurveSystemInput parse_diagram(std::string_view text) {
  CurveSystemInput input;
  bool have_header = false;
  bool have_genus = false;
  bool have_basepoint = false;
  SourceLocation genus_where;
  std::size_t line_number = 0;
  std::set<std::string> curve_names;
  std::set<std::string> region_labels;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line, line_number);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    const Token& head = tokens.front();
    if (!have_header) {
      if (tokens.size() != 2 || head.text != "heegaard" || tokens[1].text != "v1")
        throw ParseError("expected header 'heegaard v1'", head.where);
      have_header = true;
      continue;
    }

    if (head.text == "genus:") {
      if (have_genus) throw ParseError("duplicate genus line", head.where);
      if (tokens.size() != 2) throw ParseError("expected 'genus: <n>'", head.where);
      input.genus = parse_nonnegative(tokens[1].text, tokens[1].where, "genus");
      have_genus = true;
      genus_where = head.where;
    } else if (head.text == "alpha" || head.text == "beta") {
      const bool alpha = head.text == "alpha";
      if (tokens.size() < 3) throw ParseError("curve line needs a name and at least one vertex", head.where);
      CurveListing curve;
      curve.name = strip_colon(tokens[1], "curve");
      curve.where = tokens[1].where;
      require_name(curve.name, curve.where, "curve");
      if (!curve_names.insert(curve.name).second)
        throw ParseError("duplicate curve name '" + curve.name + "'", curve.where);
      std::set<std::string> seen;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        CurveVertex v;
        v.where = tokens[i].where;
        std::string name = tokens[i].text;
        const char last = name.empty() ? '\0' : name.back();
        if (last == '+' || last == '-') {
          if (!alpha) throw ParseError("crossing signs belong on alpha lines only", v.where);
          v.sign = last == '+' ? Sign::positive : Sign::negative;
          name.pop_back();
        } else if (alpha) {
          throw ParseError("missing crossing sign on vertex '" + name + "'", v.where);
        }
        require_name(name, v.where, "vertex");
        if (!seen.insert(name).second)
          throw ParseError("vertex '" + name + "' listed twice on curve '" + curve.name + "'", v.where);
        v.name = std::move(name);
        curve.vertices.push_back(std::move(v));
      }
      (alpha ? input.alpha : input.beta).push_back(std::move(curve));
    } else if (head.text == "basepoint:") {
      if (have_basepoint) throw ParseError("duplicate basepoint line", head.where);
      if (tokens.size() != 4) throw ParseError("expected 'basepoint: <curve> <vertex> left-after|right-after'", head.where);
      input.basepoint.curve = tokens[1].text;
      input.basepoint.vertex = tokens[2].text;
      require_name(input.basepoint.curve, tokens[1].where, "curve");
      require_name(input.basepoint.vertex, tokens[2].where, "vertex");
      if (tokens[3].text == "left-after")
        input.basepoint.side = Side::left_after;
      else if (tokens[3].text == "right-after")
        input.basepoint.side = Side::right_after;
      else
        throw ParseError("basepoint side must be left-after or right-after", tokens[3].where);
      input.basepoint.where = head.where;
      have_basepoint = true;
    } else if (head.text == "region") {
      if (tokens.size() != 4) throw ParseError("expected 'region <label>: genus=<g> circles=<darts>|auto'", head.where);
      RegionDirective directive;
      directive.where = head.where;
      directive.label = strip_colon(tokens[1], "label");
      require_name(directive.label, tokens[1].where, "region");
      if (!region_labels.insert(directive.label).second)
        throw ParseError("duplicate region label '" + directive.label + "'", tokens[1].where);
      if (tokens[2].text.rfind("genus=", 0) != 0) throw ParseError("expected 'genus=<g>'", tokens[2].where);
      directive.genus = parse_nonnegative(tokens[2].text.substr(6), tokens[2].where, "region genus");
      if (tokens[3].text.rfind("circles=", 0) != 0) throw ParseError("expected 'circles=...'", tokens[3].where);
      const std::string list = tokens[3].text.substr(8);
      if (list == "auto") {
        directive.automatic = true;
      } else {
        std::stringstream ss(list);
        std::string dart;
        while (std::getline(ss, dart, ',')) {
          std::string c, v;
          bool f = true;
          if (!split_dart(dart, c, v, f))
            throw ParseError("malformed circle reference '" + dart + "' (expected <curve>:<vertex>+ or -)",
                             tokens[3].where);
          directive.darts.push_back(dart);
        }
        if (directive.darts.empty()) throw ParseError("region lists no circles", tokens[3].where);
      }
      input.regions.push_back(std::move(directive));
    } else {
      throw ParseError("unrecognized line starting with '" + head.text + "'", head.where);
    }
    if (end == text.size()) break;
  }

  if (!have_header) throw ParseError("empty diagram file (expected header 'heegaard v1')", {line_number, 1});
  if (!have_genus) throw ParseError("missing 'genus:' line", {line_number, 1});
  if (!have_basepoint) throw ParseError("missing 'basepoint:' line", {line_number, 1});
  if (input.alpha.size() != static_cast<std::size_t>(input.genus) ||
      input.beta.size() != static_cast<std::size_t>(input.genus))
    throw ParseError("genus " + std::to_string(input.genus) + " requires " + std::to_string(input.genus) +
                         " alpha and beta curves, found " + std::to_string(input.alpha.size()) + " and " +
                         std::to_string(input.beta.size()),
                     genus_where);

  std::map<std::string, SourceLocation> on_alpha;
  for (const auto& c : input.alpha)
    for (const auto& v : c.vertices)
      if (!on_alpha.emplace(v.name, v.where).second)
        throw ParseError("vertex '" + v.name + "' appears on more than one alpha curve", v.where);
  std::set<std::string> on_beta;
  for (const auto& c : input.beta)
    for (const auto& v : c.vertices) {
      if (!on_beta.insert(v.name).second)
        throw ParseError("vertex '" + v.name + "' appears on more than one beta curve", v.where);
      if (!on_alpha.count(v.name)) throw ParseError("vertex '" + v.name + "' is not on any alpha curve", v.where);
    }
  for (const auto& [name, where] : on_alpha)
    if (!on_beta.count(name)) throw ParseError("vertex '" + name + "' is not on any beta curve", where);
  return input;
}

namespace {

std::vector<CurveVertex> canonical_cycle(const std::vector<CurveVertex>& cycle) {
  if (cycle.empty()) return cycle;
  auto first = std::min_element(cycle.begin(), cycle.end(),
                                [](const CurveVertex& a, const CurveVertex& b) { return a.name < b.name; });
  std::vector<CurveVertex> out(first, cycle.end());
  out.insert(out.end(), cycle.begin(), first);
  return out;
}

std::vector<CurveListing> sorted_curves(std::vector<CurveListing> curves) {
  std::sort(curves.begin(), curves.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return curves;
}

}  // namespace

std::string serialize(const CurveSystemInput& input) {
  std::ostringstream out;
  out << "heegaard v1\n";
  out << "genus: " << input.genus << "\n";
  for (const auto& c : sorted_curves(input.alpha)) {
    out << "alpha " << c.name << ":";
    for (const auto& v : canonical_cycle(c.vertices))
      out << " " << v.name << (v.sign.value_or(Sign::positive) == Sign::positive ? "+" : "-");
    out << "\n";
  }
  for (const auto& c : sorted_curves(input.beta)) {
    out << "beta " << c.name << ":";
    for (const auto& v : canonical_cycle(c.vertices)) out << " " << v.name;
    out << "\n";
  }
  out << "basepoint: " << input.basepoint.curve << " " << input.basepoint.vertex << " "
      << (input.basepoint.side == Side::left_after ? "left-after" : "right-after") << "\n";
  std::vector<RegionDirective> directives;
  for (const auto& d : input.regions)
    if (!d.automatic) directives.push_back(d);
  std::sort(directives.begin(), directives.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  for (auto d : directives) {
    std::sort(d.darts.begin(), d.darts.end());
    out << "region " << d.label << ": genus=" << d.genus << " circles=";
    for (std::size_t i = 0; i < d.darts.size(); ++i) out << (i ? "," : "") << d.darts[i];
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Skeleton and face tracing
// ---------------------------------------------------------------------------

std::string Skeleton::dart_name(const Dart& d) const { return arcs.at(d.arc).name + (d.forward ? "+" : "-"); }

std::optional<Dart> Skeleton::find_dart(const std::string& name) const {
  if (name.size() < 2) return std::nullopt;
  const char last = name.back();
  if (last != '+' && last != '-') return std::nullopt;
  auto it = arc_index.find(name.substr(0, name.size() - 1));
  if (it == arc_index.end()) return std::nullopt;
  return Dart{it->second, last == '+'};
}

std::optional<Dart> Skeleton::locate(const std::string& curve, const std::string& vertex, Side side) const {
  return find_dart(join_dart(curve, vertex, side == Side::left_after));
}

Skeleton build_skeleton(const CurveSystemInput& input) {
  if (input.genus < 1) throw DiagramError("genus must be at least 1");
  if (input.alpha.size() != static_cast<std::size_t>(input.genus) ||
      input.beta.size() != static_cast<std::size_t>(input.genus))
    throw DiagramError("curve counts do not match the genus");

  Skeleton s;
  s.genus = input.genus;
  const auto alpha = sorted_curves(input.alpha);
  const auto beta = sorted_curves(input.beta);

  for (std::size_t c = 0; c < alpha.size(); ++c) {
    if (alpha[c].vertices.empty()) throw DiagramError("alpha curve '" + alpha[c].name + "' has no vertices");
    Curve curve{alpha[c].name, Family::alpha, {}, {}};
    for (const auto& v : alpha[c].vertices) {
      if (!v.sign) throw DiagramError("vertex '" + v.name + "' has no crossing sign");
      if (!s.vertex_index.emplace(v.name, s.vertices.size()).second)
        throw DiagramError("vertex '" + v.name + "' appears twice on alpha curves");
      Vertex vertex;
      vertex.name = v.name;
      vertex.alpha = c;
      vertex.sign = *v.sign;
      curve.vertices.push_back(s.vertices.size());
      s.vertices.push_back(std::move(vertex));
    }
    s.alpha.push_back(std::move(curve));
  }
  std::vector<bool> on_beta(s.vertices.size(), false);
  for (std::size_t c = 0; c < beta.size(); ++c) {
    if (beta[c].vertices.empty()) throw DiagramError("beta curve '" + beta[c].name + "' has no vertices");
    Curve curve{beta[c].name, Family::beta, {}, {}};
    for (const auto& v : beta[c].vertices) {
      auto it = s.vertex_index.find(v.name);
      if (it == s.vertex_index.end()) throw DiagramError("vertex '" + v.name + "' is not on any alpha curve");
      if (on_beta[it->second]) throw DiagramError("vertex '" + v.name + "' appears twice on beta curves");
      on_beta[it->second] = true;
      s.vertices[it->second].beta = c;
      curve.vertices.push_back(it->second);
    }
    s.beta.push_back(std::move(curve));
  }
  for (std::size_t v = 0; v < s.vertices.size(); ++v)
    if (!on_beta[v]) throw DiagramError("vertex '" + s.vertices[v].name + "' is not on any beta curve");

  auto add_arcs = [&s](std::vector<Curve>& curves, Family family) {
    for (std::size_t c = 0; c < curves.size(); ++c) {
      auto& curve = curves[c];
      const std::size_t n = curve.vertices.size();
      for (std::size_t i = 0; i < n; ++i) {
        Arc arc;
        arc.family = family;
        arc.curve = c;
        arc.from = curve.vertices[i];
        arc.to = curve.vertices[(i + 1) % n];
        arc.name = curve.name + ":" + s.vertices[arc.from].name;
        const ArcId id = s.arcs.size();
        s.arc_index.emplace(arc.name, id);
        curve.arcs.push_back(id);
        if (family == Family::alpha) {
          s.vertices[arc.from].alpha_out = id;
          s.vertices[arc.to].alpha_in = id;
        } else {
          s.vertices[arc.from].beta_out = id;
          s.vertices[arc.to].beta_in = id;
        }
        s.arcs.push_back(std::move(arc));
      }
    }
  };
  add_arcs(s.alpha, Family::alpha);
  add_arcs(s.beta, Family::beta);

  for (auto& v : s.vertices) {
    const HalfEdge ao{v.alpha_out, true}, ai{v.alpha_in, false};
    const HalfEdge bo{v.beta_out, true}, bi{v.beta_in, false};
    v.rotation = v.sign == Sign::positive ? std::array<HalfEdge, 4>{ao, bo, ai, bi}
                                          : std::array<HalfEdge, 4>{ao, bi, ai, bo};
  }
  return s;
}

namespace {

std::size_t dart_index(const Dart& d) { return 2 * d.arc + (d.forward ? 0 : 1); }

// The dart that arrives at a vertex through half-edge h.
Dart arriving_through(const HalfEdge& h) { return Dart{h.arc, !h.outgoing}; }

Dart next_dart(const Skeleton& s, const Dart& d) {
  const Arc& arc = s.arcs[d.arc];
  const VertexId v = d.forward ? arc.to : arc.from;
  const HalfEdge arriving{d.arc, !d.forward};
  const auto& rot = s.vertices[v].rotation;
  const auto pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), arriving) - rot.begin());
  const HalfEdge& leave = rot[(pos + 3) % 4];
  return Dart{leave.arc, leave.outgoing};
}

}  // namespace

std::vector<FaceCircle> trace_faces(const Skeleton& s) {
  std::vector<FaceCircle> circles;
  std::vector<bool> used(2 * s.arcs.size(), false);
  for (std::size_t start = 0; start < used.size(); ++start) {
    if (used[start]) continue;
    FaceCircle circle;
    Dart d{start / 2, start % 2 == 0};
    while (!used[dart_index(d)]) {
      used[dart_index(d)] = true;
      circle.push_back(d);
      d = next_dart(s, d);
    }
    circles.push_back(std::move(circle));
  }
  return circles;
}

std::vector<FaceCircle> trace_faces(const CurveSystemInput& input) { return trace_faces(build_skeleton(input)); }

// ---------------------------------------------------------------------------
// Assembly
// ---------------------------------------------------------------------------

long Region::euler_characteristic() const { return 2 - 2L * genus - static_cast<long>(circles.size()); }

namespace {

std::atomic<std::uint64_t> next_diagram_id{1};

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t components() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) n += find(i) == i;
    return n;
  }
};

}  // namespace

HeegaardDiagram HeegaardDiagram::assemble(const CurveSystemInput& input) {
  HeegaardDiagram d;
  d.input_ = input;
  d.skeleton_ = build_skeleton(input);
  const Skeleton& s = d.skeleton_;
  d.circles_ = trace_faces(s);

  d.dart_circle_.assign(2 * s.arcs.size(), 0);
  for (CircleId c = 0; c < d.circles_.size(); ++c)
    for (const Dart& dart : d.circles_[c]) d.dart_circle_[dart_index(dart)] = c;

  // Group circles into regions.
  struct Draft {
    std::string label;
    int genus = 0;
    std::vector<CircleId> circles;
  };
  std::vector<Draft> drafts;
  std::vector<bool> claimed(d.circles_.size(), false);
  for (const auto& directive : input.regions) {
    if (directive.automatic) {
      if (directive.genus != 0)
        throw DiagramError("region '" + directive.label + "': automatic regions are disks and must have genus 0");
      continue;
    }
    Draft draft{directive.label, directive.genus, {}};
    for (const auto& name : directive.darts) {
      auto dart = s.find_dart(name);
      if (!dart) throw DiagramError("region '" + directive.label + "' refers to unknown circle '" + name + "'");
      const CircleId c = d.dart_circle_[dart_index(*dart)];
      if (claimed[c])
        throw DiagramError("region '" + directive.label + "': circle '" + name + "' is claimed twice");
      claimed[c] = true;
      draft.circles.push_back(c);
    }
    drafts.push_back(std::move(draft));
  }
  for (CircleId c = 0; c < d.circles_.size(); ++c)
    if (!claimed[c]) drafts.push_back(Draft{"", 0, {c}});

  for (auto& draft : drafts) {
    Region r;
    r.label = draft.label;
    r.genus = draft.genus;
    std::sort(draft.circles.begin(), draft.circles.end());
    r.circles = draft.circles;
    std::optional<std::string> best;
    for (CircleId c : r.circles)
      for (const Dart& dart : d.circles_[c]) {
        std::string name = s.dart_name(dart);
        if (!best || name < *best) best = std::move(name);
      }
    r.name = *best;
    d.regions_.push_back(std::move(r));
  }
  std::sort(d.regions_.begin(), d.regions_.end(), [](const Region& a, const Region& b) { return a.name < b.name; });
  d.circle_region_.assign(d.circles_.size(), 0);
  for (RegionId r = 0; r < d.regions_.size(); ++r)
    for (CircleId c : d.regions_[r].circles) d.circle_region_[c] = r;

  d.quadrant_region_.resize(s.vertices.size());
  for (VertexId v = 0; v < s.vertices.size(); ++v)
    for (int q = 0; q < 4; ++q) {
      const Dart arriving = arriving_through(s.vertices[v].rotation[(q + 1) % 4]);
      const RegionId r = d.circle_region_[d.dart_circle_[dart_index(arriving)]];
      d.quadrant_region_[v][q] = r;
      ++d.regions_[r].corners;
    }

  long chi = static_cast<long>(s.vertices.size()) - static_cast<long>(s.arcs.size());
  for (const auto& r : d.regions_) chi += r.euler_characteristic();
  if (chi != 2 - 2L * s.genus)
    throw DiagramError("Euler characteristic mismatch: V - E + sum of region characteristics is " +
                       std::to_string(chi) + " but genus " + std::to_string(s.genus) + " requires " +
                       std::to_string(2 - 2L * s.genus));

  // The graph together with the regions must form one piece.
  {
    DisjointSets sets(s.vertices.size());
    for (const auto& arc : s.arcs) sets.unite(arc.from, arc.to);
    for (const auto& r : d.regions_) {
      std::optional<VertexId> first;
      for (CircleId c : r.circles)
        for (const Dart& dart : d.circles_[c]) {
          const VertexId v = s.arcs[dart.arc].from;
          if (first)
            sets.unite(*first, v);
          else
            first = v;
        }
    }
    if (sets.components() != 1) throw DiagramError("diagram is disconnected");
  }
  // Cutting along one family must leave the complement connected.
  for (Family cut : {Family::alpha, Family::beta}) {
    DisjointSets sets(d.regions_.size());
    for (ArcId a = 0; a < s.arcs.size(); ++a)
      if (s.arcs[a].family != cut) sets.unite(d.left_of(a), d.right_of(a));
    if (sets.components() != 1)
      throw DiagramError(std::string("complement of the ") + (cut == Family::alpha ? "alpha" : "beta") +
                         " curves is disconnected (curves are not independent)");
  }

  const auto& bp = input.basepoint;
  auto located = s.locate(bp.curve, bp.vertex, bp.side);
  if (!located)
    throw DiagramError("basepoint locator '" + bp.curve + " " + bp.vertex + "' does not name a vertex on that curve");
  d.basepoint_region_ = d.region_of_dart(*located);
  d.id_ = next_diagram_id.fetch_add(1);
  return d;
}

RegionId HeegaardDiagram::region_of_dart(const Dart& dart) const {
  return circle_region_.at(dart_circle_.at(dart_index(dart)));
}

std::optional<VertexId> HeegaardDiagram::find_vertex(const std::string& name) const {
  auto it = skeleton_.vertex_index.find(name);
  if (it == skeleton_.vertex_index.end()) return std::nullopt;
  return it->second;
}

std::optional<RegionId> HeegaardDiagram::find_region(const std::string& name) const {
  for (RegionId r = 0; r < regions_.size(); ++r)
    if (regions_[r].name == name || (!regions_[r].label.empty() && regions_[r].label == name)) return r;
  return std::nullopt;
}

std::array<Quadrant, 4> HeegaardDiagram::quadrants_at(VertexId v) const {
  if (v >= quadrant_region_.size()) throw std::out_of_range("unknown vertex id " + std::to_string(v));
  std::array<Quadrant, 4> out;
  for (int q = 0; q < 4; ++q) out[q] = Quadrant{v, q, quadrant_region_[v][q]};
  return out;
}

std::array<Quadrant, 4> HeegaardDiagram::quadrants_at(const std::string& vertex_name) const {
  auto v = find_vertex(vertex_name);
  if (!v) throw std::out_of_range("unknown vertex '" + vertex_name + "'");
  return quadrants_at(*v);
}

HeegaardDiagram load_diagram(std::string_view text) { return HeegaardDiagram::assemble(parse_diagram(text)); }

HeegaardDiagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_diagram(buffer.str());
}

// ---------------------------------------------------------------------------
// Relisting
// ---------------------------------------------------------------------------

CurveSystemInput reverse_curve_listing(const CurveSystemInput& input, const std::string& curve) {
  CurveSystemInput out = input;
  CurveListing* listing = nullptr;
  bool is_alpha = false;
  for (auto& c : out.alpha)
    if (c.name == curve) listing = &c, is_alpha = true;
  for (auto& c : out.beta)
    if (c.name == curve) listing = &c;
  if (!listing) throw std::invalid_argument("no curve named '" + curve + "'");

  // successor of each vertex along the original orientation
  std::map<std::string, std::string> next;
  const auto& vs = listing->vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) next[vs[i].name] = vs[(i + 1) % vs.size()].name;
  std::reverse(listing->vertices.begin(), listing->vertices.end());

  std::set<std::string> on_curve;
  for (const auto& v : listing->vertices) on_curve.insert(v.name);
  auto flip = [](std::optional<Sign>& s) {
    if (s) s = *s == Sign::positive ? Sign::negative : Sign::positive;
  };
  if (is_alpha) {
    for (auto& v : listing->vertices) flip(v.sign);
  } else {
    for (auto& c : out.alpha)
      for (auto& v : c.vertices)
        if (on_curve.count(v.name)) flip(v.sign);
  }

  // The arc that left v now arrives at v from next[v]; sides swap.
  if (out.basepoint.curve == curve) {
    out.basepoint.vertex = next.at(out.basepoint.vertex);
    out.basepoint.side = out.basepoint.side == Side::left_after ? Side::right_after : Side::left_after;
  }
  for (auto& directive : out.regions)
    for (auto& dart : directive.darts) {
      std::string c, v;
      bool forward = true;
      if (split_dart(dart, c, v, forward) && c == curve && next.count(v)) dart = join_dart(c, next.at(v), !forward);
    }
  return out;
}

CurveSystemInput rename(const CurveSystemInput& input, const std::map<std::string, std::string>& vertex_names,
                        const std::map<std::string, std::string>& curve_names) {
  auto map_name = [](const std::map<std::string, std::string>& m, const std::string& name) {
    auto it = m.find(name);
    return it == m.end() ? name : it->second;
  };
  CurveSystemInput out = input;
  for (auto* family : {&out.alpha, &out.beta})
    for (auto& c : *family) {
      c.name = map_name(curve_names, c.name);
      for (auto& v : c.vertices) v.name = map_name(vertex_names, v.name);
    }
  out.basepoint.curve = map_name(curve_names, out.basepoint.curve);
  out.basepoint.vertex = map_name(vertex_names, out.basepoint.vertex);
  for (auto& directive : out.regions)
    for (auto& dart : directive.darts) {
      std::string c, v;
      bool forward = true;
      if (split_dart(dart, c, v, forward))
        dart = join_dart(map_name(curve_names, c), map_name(vertex_names, v), forward);
    }
  return out;
}

}  // namespace hfgrade
