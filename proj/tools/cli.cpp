#include "cli.hpp"

#include "CLI11.hpp"
#include "hfgrade/atlas.hpp"
#include "hfgrade/diagram.hpp"
#include "hfgrade/grading.hpp"
#include "hfgrade/layers.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace hfgrade::cli {

namespace {

Json number(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return to_string(value);
}

Json number(const Rational& value) { return to_string(value); }

Json digest(const HeegaardDiagram& diagram) {
  const FirstHomology h1 = homology_of_y(diagram);
  return Json{{"genus", diagram.genus()},
              {"vertices", diagram.vertex_count()},
              {"edges", diagram.arc_count()},
              {"regions", diagram.region_count()},
              {"H1", h1.describe()}};
}

Json coefficients_json(const HeegaardDiagram& diagram, const zlattice::Vector& coefficients) {
  Json out = Json::object();
  for (RegionId r = 0; r < diagram.region_count(); ++r) out[diagram.region(r).name] = number(coefficients[r]);
  return out;
}

Json domain_json(const HeegaardDiagram& diagram, const Domain& domain) {
  const auto& a = domain.coefficients;
  return Json{{"coefficients", coefficients_json(diagram, a)},
              {"euler_measure", number(euler_measure(diagram, a))},
              {"n_x", number(point_measure(diagram, a, domain.source))},
              {"n_y", number(point_measure(diagram, a, domain.target))},
              {"n_z", number(basepoint_multiplicity(diagram, a))},
              {"maslov_index", number(maslov_index(diagram, domain))},
              {"mu_minus_2nz", number(grading_difference(diagram, domain))}};
}

const char* kind_name(CornerKind kind) {
  switch (kind) {
    case CornerKind::interior: return "interior";
    case CornerKind::edge_point: return "edge-point";
    case CornerKind::convex: return "convex";
    case CornerKind::concave: return "concave";
    case CornerKind::boundary_degenerate: return "boundary-degenerate";
    case CornerKind::interior_degenerate: return "interior-degenerate";
    case CornerKind::auxiliary: return "auxiliary";
  }
  return "?";
}

const char* shape_name(CornerShape shape) {
  switch (shape) {
    case CornerShape::convex: return "convex";
    case CornerShape::concave: return "concave";
    default: return "none";
  }
}

Json audit_json(const HeegaardDiagram& diagram, const Generator& x, const Generator& y, const Domain& domain) {
  const IndexAudit audit = audit_index(diagram, x, y, domain.coefficients);
  const auto surfaces = decompose_layers(diagram, x, y, domain.coefficients);
  Json layers = Json::array();
  for (std::size_t i = 0; i < audit.layers.size(); ++i) {
    const LayerAudit& row = audit.layers[i];
    Json corners = Json::array();
    for (const auto& cluster : surfaces[i].clusters) {
      const CornerClass& c = cluster.corner;
      if (c.kind == CornerKind::interior || c.kind == CornerKind::edge_point) continue;
      Json corner{{"vertex", diagram.vertex(cluster.vertex).name},
                  {"kind", kind_name(c.kind)},
                  {"shape", shape_name(c.shape)}};
      if (c.kind == CornerKind::auxiliary) corner["sign"] = c.sign;
      corners.push_back(std::move(corner));
    }
    layers.push_back(Json{{"level", row.level},
                          {"regions", surfaces[i].regions.size()},
                          {"chi", row.chi},
                          {"convex", row.convex},
                          {"concave", row.concave},
                          {"q", row.q},
                          {"boundary_degenerate", row.boundary_degenerate},
                          {"interior_degenerate", row.interior_degenerate},
                          {"degenerate_total", row.degenerate_total},
                          {"auxiliary_positive", row.auxiliary_positive},
                          {"auxiliary_negative", row.auxiliary_negative},
                          {"signed_auxiliary", row.signed_auxiliary},
                          {"interior_x", row.interior_x},
                          {"interior_y", row.interior_y},
                          {"euler_measure", number(row.euler_measure)},
                          {"n_x", number(row.n_x)},
                          {"n_y", number(row.n_y)},
                          {"index", number(row.index)},
                          {"corners", std::move(corners)}});
  }
  return Json{{"domain", coefficients_json(diagram, domain.coefficients)},
              {"maslov_index", number(audit.maslov)},
              {"layer_sum", number(audit.layer_sum)},
              {"single_layer_case", audit.single_layer_case},
              {"balance_x", audit.balance_x},
              {"balance_y", audit.balance_y},
              {"balance_holds", audit.balance_holds},
              {"balance_asserted", audit.balance_asserted},
              {"layers", std::move(layers)}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

// ---------------------------------------------------------------------------
// Randomized self-test
// ---------------------------------------------------------------------------

MarkedDiagram random_atlas_diagram(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0: {
      std::uniform_int_distribution<long> pd(1, 6);
      const long p = pd(rng);
      std::vector<long> qs;
      for (long q = 1; q <= p; ++q)
        if (std::gcd(p, q) == 1) qs.push_back(q);
      return build_torus_diagram(p, qs[std::uniform_int_distribution<std::size_t>(0, qs.size() - 1)(rng)]);
    }
    case 1:
      return build_s1s2();
    default:
      return build_annulus_open_book(std::uniform_int_distribution<long>(-2, 4)(rng));
  }
}

struct SelftestCounts {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> first_failures;

  void record(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (first_failures.size() < 5) first_failures.push_back(what);
  }
};

// mu - 2 n_z agrees modulo d for two random representatives of one class.
void check_well_defined(std::mt19937_64& rng, const HeegaardDiagram& d, SelftestCounts& counts) {
  const DomainSolver solver(d);
  const auto gens = enumerate_generators(d);
  std::uniform_int_distribution<std::size_t> g(0, gens.size() - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  const Generator& x = gens[g(rng)];
  const Generator& y = gens[g(rng)];
  auto domain = solver.solve(x, y);
  if (!domain) return;
  const auto& basis = solver.periodic_basis();
  auto translate = [&] {
    Domain out = *domain;
    for (const auto& p : basis) {
      const int k = c(rng);
      for (std::size_t i = 0; i < p.size(); ++i) out.coefficients[i] += k * p[i];
    }
    return out;
  };
  const Integer modulus = divisibility(d, solver, x);
  const Integer a = grading_difference(d, translate());
  const Integer b = grading_difference(d, translate());
  counts.record(reduce_mod(a - b, modulus) == 0,
                "grading not well defined on " + generator_name(d, x) + " -> " + generator_name(d, y));
}

struct Shape {
  std::vector<std::size_t> sizes;
  std::vector<Integer> divisibilities;
  std::vector<std::vector<Integer>> gradings;  // per class, relative to the first member by name
  bool operator==(const Shape&) const = default;
};

Shape shape_of(const HeegaardDiagram& d, const std::map<std::string, std::string>& vertex_names = {}) {
  const GradingTable table = grading_table(d);
  auto renamed = [&](const Generator& x) {
    std::vector<std::string> key = generator_key(d, x);
    for (auto& k : key) {
      auto it = vertex_names.find(k);
      if (it != vertex_names.end()) k = it->second;
    }
    std::sort(key.begin(), key.end());
    return key;
  };
  std::vector<std::pair<std::vector<std::vector<std::string>>, std::pair<Integer, std::vector<Integer>>>> classes;
  for (const auto& c : table.partition.classes) {
    std::vector<std::pair<std::vector<std::string>, Integer>> members;
    for (std::size_t m : c.members)
      members.emplace_back(renamed(table.partition.generators[m]), table.rows[m].label.offset);
    std::sort(members.begin(), members.end());
    std::vector<std::vector<std::string>> keys;
    std::vector<Integer> offsets;
    for (const auto& [k, o] : members) {
      keys.push_back(k);
      offsets.push_back(reduce_mod(o - members.front().second, c.divisibility));
    }
    classes.emplace_back(std::move(keys), std::make_pair(c.divisibility, std::move(offsets)));
  }
  std::sort(classes.begin(), classes.end());
  Shape s;
  for (auto& [keys, rest] : classes) {
    s.sizes.push_back(keys.size());
    s.divisibilities.push_back(rest.first);
    s.gradings.push_back(rest.second);
  }
  return s;
}

// Reversing a curve and renaming everything leaves the grading data unchanged.
void check_relisting(std::mt19937_64& rng, const HeegaardDiagram& d, SelftestCounts& counts) {
  const Shape before = shape_of(d);
  CurveSystemInput in = d.input();
  std::vector<std::string> curves;
  for (const auto* family : {&in.alpha, &in.beta})
    for (const auto& c : *family) curves.push_back(c.name);
  in = reverse_curve_listing(in, curves[std::uniform_int_distribution<std::size_t>(0, curves.size() - 1)(rng)]);

  std::vector<std::string> vertices;
  for (const auto& v : in.alpha.front().vertices) vertices.push_back(v.name);
  for (std::size_t i = 1; i < in.alpha.size(); ++i)
    for (const auto& v : in.alpha[i].vertices) vertices.push_back(v.name);
  std::vector<std::string> fresh = vertices;
  std::shuffle(fresh.begin(), fresh.end(), rng);
  std::map<std::string, std::string> vertex_names, curve_names;
  for (std::size_t i = 0; i < vertices.size(); ++i) vertex_names[vertices[i]] = "v_" + fresh[i];
  for (const auto& c : curves) curve_names[c] = "c_" + c;
  const HeegaardDiagram relisted = HeegaardDiagram::assemble(rename(in, vertex_names, curve_names));

  std::map<std::string, std::string> back;
  for (const auto& [from, to] : vertex_names) back[to] = from;
  counts.record(shape_of(relisted, back) == before, "relisting changed the grading data");
}

Json selftest(std::uint64_t seed, long trials) {
  std::mt19937_64 rng(seed);
  SelftestCounts well_defined, relisting;
  for (long t = 0; t < trials; ++t) {
    MarkedDiagram m = random_atlas_diagram(rng);
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) m = stabilize(m).result;
    check_well_defined(rng, m.diagram, well_defined);
    if (t % 10 == 0) check_relisting(rng, m.diagram, relisting);
  }
  auto summary = [](const SelftestCounts& c) {
    Json out{{"checks", c.checks}, {"failures", c.failures}};
    if (!c.first_failures.empty()) out["examples"] = c.first_failures;
    return out;
  };
  return Json{{"seed", seed},
              {"trials", trials},
              {"well_defined", summary(well_defined)},
              {"relisting", summary(relisting)},
              {"passed", well_defined.failures == 0 && relisting.failures == 0}};
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& item : v)
    if (item.is_structured()) return false;
  return true;
}

void render(const Json& value, const std::string& indent, std::ostringstream& os) {
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      if (!item.is_structured()) {
        os << indent << key << ": " << scalar_text(item) << '\n';
      } else if (is_flat(item)) {
        os << indent << key << ":";
        for (const auto& x : item) os << ' ' << scalar_text(x);
        os << '\n';
      } else {
        os << indent << key << ":\n";
        render(item, indent + "  ", os);
      }
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (item.is_structured()) {
        os << indent << "-\n";
        render(item, indent + "  ", os);
      } else {
        os << indent << "- " << scalar_text(item) << '\n';
      }
    }
  } else {
    os << indent << scalar_text(value) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& value) {
  std::ostringstream os;
  render(value, "", os);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heegaard diagram grading calculator", "hfgrade"};
  app.fallthrough();
  app.require_subcommand(1);

  bool json = false;
  int radius = kDefaultSearchRadius;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "Structured output");
  app.add_option("--radius", radius, "Positive-representative search radius")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for selftest");

  std::string file, x_name, y_name, output;
  bool positive = false;
  long p = 0, q = 0, n = 0, trials = 100;
  std::string c1sq;
  long chi = 0, sigma = 0;

  auto* validate = app.add_subcommand("validate", "Parse and check a diagram");
  auto* info = app.add_subcommand("info", "Regions, vertices and lattice data");
  auto* generators = app.add_subcommand("generators", "List generators");
  auto* spinc = app.add_subcommand("spinc", "Spin^c partition");
  auto* grade = app.add_subcommand("grade", "Grading table");
  for (auto* sub : {validate, info, generators, spinc, grade}) sub->add_option("FILE", file)->required();

  auto* domain = app.add_subcommand("domain", "Domain connecting two generators");
  auto* audit = app.add_subcommand("audit", "Layer audit of a positive connecting domain");
  for (auto* sub : {domain, audit}) {
    sub->add_option("FILE", file)->required();
    sub->add_option("X", x_name)->required();
    sub->add_option("Y", y_name)->required();
  }
  domain->add_flag("--positive", positive, "Also find a nonnegative representative");

  auto* stab = app.add_subcommand("stabilize", "Stabilize a diagram");
  stab->add_option("FILE", file)->required();
  stab->add_option("-o,--output", output, "Output diagram file")->required();

  auto* atlas = app.add_subcommand("atlas", "Write a benchmark diagram");
  atlas->require_subcommand(1);
  auto* torus = atlas->add_subcommand("torus", "Genus-one torus diagram");
  torus->add_option("P", p)->required();
  torus->add_option("Q", q)->required();
  auto* s1s2 = atlas->add_subcommand("s1s2", "S1 x S2 diagram");
  auto* openbook = atlas->add_subcommand("openbook-annulus", "Annulus open book");
  openbook->add_option("N", n)->required();
  for (auto* sub : {torus, s1s2, openbook}) sub->add_option("-o,--output", output, "Output diagram file");

  auto* shift = app.add_subcommand("shift", "Absolute grading shift arithmetic");
  shift->add_option("--c1sq", c1sq)->required();
  shift->add_option("--chi", chi)->required();
  shift->add_option("--sigma", sigma)->required();

  auto* self = app.add_subcommand("selftest", "Randomized property checks");
  self->add_option("--trials", trials)->check(CLI::PositiveNumber);

  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg == "--radius" || arg == "--seed") ++i;
    if (arg.empty() || arg[0] == '-') continue;
    if (!app.get_subcommand_no_throw(arg)) {
      err << "unknown command '" << arg << "'\n" << "Run with --help for more information.\n";
      return kUsageError;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  Json report;
  report["command"] = args;
  report["diagram"] = nullptr;
  Json payload = Json::object();
  int status = kOk;
  std::optional<std::string> raw_text;  // atlas without -o prints the diagram itself

  try {
    if (validate->parsed() || info->parsed() || generators->parsed() || spinc->parsed() || grade->parsed() ||
        domain->parsed() || audit->parsed() || stab->parsed()) {
      const HeegaardDiagram d = [&] {
        try {
          return load_diagram_file(file);
        } catch (const ParseError& e) {
          throw std::runtime_error(file + ": " + e.what());
        }
      }();
      report["diagram"] = digest(d);

      if (validate->parsed()) {
        payload["valid"] = true;
      } else if (info->parsed()) {
        Json regions = Json::array();
        for (const auto& r : d.regions())
          regions.push_back(Json{{"name", r.name},
                                 {"label", r.label},
                                 {"genus", r.genus},
                                 {"circles", r.circles.size()},
                                 {"corners", r.corners},
                                 {"euler_characteristic", r.euler_characteristic()}});
        Json vertices = Json::array();
        for (VertexId v = 0; v < d.vertex_count(); ++v) {
          const Vertex& vx = d.vertex(v);
          vertices.push_back(Json{{"name", vx.name},
                                  {"sign", vx.sign == Sign::positive ? "+" : "-"},
                                  {"alpha", d.alpha_curves()[vx.alpha].name},
                                  {"beta", d.beta_curves()[vx.beta].name}});
        }
        const FirstHomology h1 = homology_of_y(d);
        Json torsion = Json::array();
        for (const auto& t : h1.torsion) torsion.push_back(number(t));
        payload["regions"] = std::move(regions);
        payload["vertices"] = std::move(vertices);
        payload["basepoint_region"] = d.region(d.basepoint_region()).name;
        payload["b1"] = h1.b1;
        payload["torsion"] = std::move(torsion);
        payload["periodic_rank"] = DomainSolver(d).periodic_basis().size();
      } else if (generators->parsed()) {
        Json names = Json::array();
        for (const auto& g : enumerate_generators(d)) names.push_back(generator_name(d, g));
        payload["count"] = names.size();
        payload["generators"] = std::move(names);
      } else if (spinc->parsed() || grade->parsed()) {
        const GradingTable table = grading_table(d);
        const auto& part = table.partition;
        Json classes = Json::array();
        for (const auto& c : part.classes) {
          Json members = Json::array();
          for (std::size_t m : c.members) members.push_back(generator_name(d, part.generators[m]));
          classes.push_back(Json{{"id", c.id},
                                 {"anchor", generator_name(d, part.generators[c.anchor])},
                                 {"divisibility", number(c.divisibility)},
                                 {"size", c.members.size()},
                                 {"members", std::move(members)}});
        }
        payload["classes"] = std::move(classes);
        if (grade->parsed()) {
          Json rows = Json::array();
          for (const auto& row : table.rows)
            rows.push_back(Json{{"generator", generator_name(d, row.generator)},
                                {"class", row.label.class_id},
                                {"offset", number(row.label.offset)},
                                {"modulus", number(row.label.modulus)}});
          payload["rows"] = std::move(rows);
        }
      } else if (domain->parsed() || audit->parsed()) {
        const Generator x = parse_generator(d, x_name);
        const Generator y = parse_generator(d, y_name);
        const DomainSolver solver(d);
        payload["x"] = generator_name(d, x);
        payload["y"] = generator_name(d, y);
        auto found = solver.solve(x, y);
        if (!found) {
          payload["connected"] = false;
          payload["result"] = "no connecting class";
        } else {
          payload["connected"] = true;
          payload["divisibility"] = number(divisibility(d, solver, x));
          try {
            if (domain->parsed()) {
              payload["domain"] = domain_json(d, *found);
              payload["relative_grading"] = number(relative_grading(d, x, y));
              if (positive)
                payload["positive"] = domain_json(d, positive_representative(*found, solver.periodic_basis(), radius));
            } else {
              const Domain rep = positive_representative(*found, solver.periodic_basis(), radius);
              payload["audit"] = audit_json(d, x, y, rep);
            }
          } catch (const NoPositive& e) {
            payload["positive"] = nullptr;
            payload["result"] = "no positive representative";
            payload["radius"] = e.radius();
          }
        }
      } else if (stab->parsed()) {
        const Stabilization s = stabilize(d);
        write_file(output, serialize(s.result.diagram.input()));
        payload["output"] = output;
        payload["new_vertex"] = s.result.diagram.vertex(s.new_vertex).name;
        payload["result"] = digest(s.result.diagram);
        payload["generators"] = s.images.size();
      }
    } else if (atlas->parsed()) {
      const MarkedDiagram m = torus->parsed() ? build_torus_diagram(p, q)
                              : s1s2->parsed() ? build_s1s2()
                                               : build_annulus_open_book(n);
      report["diagram"] = digest(m.diagram);
      const std::string text = serialize(m.diagram.input());
      payload["builder"] = m.provenance;
      if (m.contact) payload["contact"] = generator_name(m.diagram, *m.contact);
      if (!output.empty()) {
        write_file(output, text);
        payload["output"] = output;
      } else {
        payload["text"] = text;
        raw_text = text;
      }
    } else if (shift->parsed()) {
      const ThetaShift ts = theta_and_shift(parse_rational(c1sq), Integer(chi), Integer(sigma));
      payload["theta"] = number(ts.theta);
      payload["shift"] = number(ts.shift);
      payload["gr0_of_theta"] = number(gr0_of_theta(ts.theta));
    } else if (self->parsed()) {
      payload = selftest(seed, trials);
      if (!payload["passed"].get<bool>()) status = kInconsistent;
    }
  } catch (const ConsistencyError& e) {
    payload = Json{{"error", "consistency"}, {"message", e.what()}};
    status = kInconsistent;
  } catch (const std::exception& e) {
    payload = Json{{"error", "input"}, {"message", e.what()}};
    status = kInputError;
  }

  report["payload"] = payload;
  report["status"] = status;
  if (status != kOk) err << "error: " << payload.value("message", std::string("self-test failures")) << '\n';

  if (json) {
    out << report.dump(2) << '\n';
  } else if (raw_text && status == kOk) {
    out << *raw_text;
  } else {
    Json shown = Json::object();
    if (!report["diagram"].is_null()) shown["diagram"] = report["diagram"];
    for (const auto& [key, item] : payload.items()) shown[key] = item;
    out << render_text(shown);
  }
  return status;
}

}  // namespace hfgrade::cli
