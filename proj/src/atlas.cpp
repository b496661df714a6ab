#include "hfgrade/atlas.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace hfgrade {

namespace {

std::string vertex_name(long i) { return "x" + std::to_string(i); }

CurveListing listing(const std::string& name, const std::vector<std::string>& vertices,
                     const std::vector<Sign>* signs = nullptr) {
  CurveListing c;
  c.name = name;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    CurveVertex v;
    v.name = vertices[i];
    if (signs) v.sign = (*signs)[i];
    c.vertices.push_back(std::move(v));
  }
  return c;
}

CurveSystemInput genus_one(const std::vector<std::string>& alpha, const std::vector<Sign>& signs,
                           const std::vector<std::string>& beta, BasepointLocator basepoint) {
  CurveSystemInput in;
  in.genus = 1;
  in.alpha.push_back(listing("a0", alpha, &signs));
  in.beta.push_back(listing("b0", beta));
  in.basepoint = std::move(basepoint);
  return in;
}

std::string fresh(const std::set<std::string>& taken, std::string name) {
  while (taken.count(name)) name += "_s";
  return name;
}

}  // namespace

MarkedDiagram build_torus_diagram(long p, long q) {
  if (p < 1) throw std::invalid_argument("torus diagram needs p >= 1");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
  std::vector<std::string> alpha, beta;
  for (long j = 0; j < p; ++j) alpha.push_back(vertex_name(j));
  for (long k = 0; k < p; ++k) beta.push_back(vertex_name(((q % p) * k % p + p) % p));
  auto in = genus_one(alpha, std::vector<Sign>(alpha.size(), Sign::positive), beta,
                      BasepointLocator{"a0", "x0", Side::left_after, {}});
  return MarkedDiagram{HeegaardDiagram::assemble(in), std::nullopt,
                       "torus(" + std::to_string(p) + "," + std::to_string(q) + ")"};
}

MarkedDiagram build_s1s2() {
  auto in = genus_one({"x0", "x1"}, {Sign::negative, Sign::positive}, {"x0", "x1"},
                      BasepointLocator{"a0", "x1", Side::right_after, {}});
  RegionDirective annulus;
  annulus.label = "r0";
  annulus.darts = {"a0:x0+", "a0:x1-"};
  in.regions.push_back(annulus);
  return MarkedDiagram{HeegaardDiagram::assemble(in), std::nullopt, "s1s2"};
}

MarkedDiagram build_annulus_open_book(long n) {
  // x0 lies on the page S x {1/2}; the remaining crossings come from the
  // page-0 copy of b, which winds n times around the core.
  std::vector<std::string> names{"x0"};
  std::vector<Sign> signs{Sign::positive};
  const long extra = n >= 1 ? n - 1 : 1 - n;
  const Sign twist_sign = n >= 1 ? Sign::positive : Sign::negative;
  for (long i = 1; i <= extra; ++i) {
    names.push_back(vertex_name(i));
    signs.push_back(twist_sign);
  }
  auto in = genus_one(names, signs, names, BasepointLocator{"a0", "x0", Side::right_after, {}});
  if (n == 0) {
    // a and its push-off are parallel: the complement of the two thin bigons
    // is an annulus through the binding.
    RegionDirective annulus;
    annulus.label = "r0";
    annulus.darts = {"a0:x0-", "a0:x1+"};
    in.regions.push_back(annulus);
  }
  MarkedDiagram out{HeegaardDiagram::assemble(in), std::nullopt, "openbook-annulus(" + std::to_string(n) + ")"};
  out.contact = Generator{out.diagram.id(), {*out.diagram.find_vertex("x0")}};
  return out;
}

Generator Stabilization::map(const Generator& x) const {
  for (std::size_t i = 0; i < sources.size(); ++i)
    if (sources[i] == x) return images[i];
  throw std::invalid_argument("generator does not belong to the stabilized diagram");
}

Stabilization stabilize(const HeegaardDiagram& diagram) {
  CurveSystemInput in = diagram.input();
  std::set<std::string> curves, vertices, labels;
  for (const auto* family : {&in.alpha, &in.beta})
    for (const auto& c : *family) {
      curves.insert(c.name);
      for (const auto& v : c.vertices) vertices.insert(v.name);
    }
  for (const auto& r : in.regions) labels.insert(r.label);

  const std::string g = std::to_string(in.genus);
  const std::string alpha_name = fresh(curves, "a" + g);
  const std::string beta_name = fresh(curves, "b" + g);
  const std::string w = fresh(vertices, vertex_name(static_cast<long>(diagram.vertex_count())));
  in.genus += 1;
  const std::vector<Sign> plus{Sign::positive};
  in.alpha.push_back(listing(alpha_name, {w}, &plus));
  in.beta.push_back(listing(beta_name, {w}));

  // The new square's circle joins the basepoint region, which keeps its genus.
  const std::string square = alpha_name + ":" + w + "+";
  const Region& zone = diagram.region(diagram.basepoint_region());
  bool merged = false;
  if (!zone.label.empty())
    for (auto& r : in.regions)
      if (r.label == zone.label) {
        r.darts.push_back(square);
        merged = true;
      }
  if (!merged) {
    RegionDirective r;
    r.label = fresh(labels, "stab" + g);
    r.genus = zone.genus;
    r.darts = {zone.name, square};
    in.regions.push_back(std::move(r));
  }

  Stabilization out{MarkedDiagram{HeegaardDiagram::assemble(in), std::nullopt, "stabilize"}, 0, {}, {}};
  out.new_vertex = *out.result.diagram.find_vertex(w);
  out.sources = enumerate_generators(diagram);
  for (const auto& x : out.sources)
    out.images.push_back(parse_generator(out.result.diagram, generator_name(diagram, x) + "," + w));
  return out;
}

Stabilization stabilize(const MarkedDiagram& marked) {
  Stabilization out = stabilize(marked.diagram);
  out.result.provenance = "stabilize(" + marked.provenance + ")";
  if (marked.contact) out.result.contact = out.map(*marked.contact);
  return out;
}

}  // namespace hfgrade
