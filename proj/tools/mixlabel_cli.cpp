// mixlabel: command-line front end.
//   exit 0 ok, 2 invalid input, 3 infeasible, 4 verification mismatch

#include <CLI11.hpp>

#include "mixlabel/mixlabel.hpp"

#include <iostream>
#include <sstream>

using namespace mixlabel;

namespace {

constexpr int kOk = 0, kInvalid = 2, kInfeasible = 3, kMismatch = 4;

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DirFlags {
  std::optional<double> theta;
  std::string direction;

  void add(CLI::App* app) {
    auto* t = app->add_option("--theta", theta, "leader slope in radians, [0, 2pi)");
    auto* d = app->add_option("--direction", direction, "leader direction as dx,dy (exact decimals)");
    t->excludes(d);
  }

  /// Flag, then the given fallback, then the instance, then theta = 0.
  Direction resolve(const Instance& inst, std::optional<Direction> fallback = std::nullopt) const {
    if (theta) return direction_from_theta(*theta);
    if (!direction.empty()) {
      auto comma = direction.find(',');
      if (comma == std::string::npos) throw ParseError("--direction expects dx,dy");
      Scalar dx = parse_decimal(direction.substr(0, comma)), dy = parse_decimal(direction.substr(comma + 1));
      if (dx == 0 && dy == 0) throw ParseError("--direction must be nonzero");
      return Direction(dx, dy);
    }
    if (fallback) return *fallback;
    if (inst.direction) return *inst.direction;
    return Direction(-1, 0);
  }
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

Instance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

std::string svg_for(const Instance& inst, const Labeling* lab, const Routing* routing, const Direction& d) {
  SvgScene sc;
  sc.inst = &inst;
  sc.map = MapPolygon::of(inst);
  sc.labeling = lab;
  sc.routing = routing;
  sc.direction = d;
  return render_svg(sc);
}

int run_solve(const std::string& input, const DirFlags& df, const std::string& mode, const std::string& output,
              const std::string& svg, bool oracle_check, std::size_t cap) {
  const Instance inst = load_instance(input);
  const Direction d = df.resolve(inst);
  Solution s = solve_instance(inst, d, parse_mode(mode));
  const MapPolygon map = MapPolygon::of(inst);
  Routing routing = route_outer(inst, s.labeling, d, map);
  if (auto bad = check_labeling(inst, s.labeling, d, &routing.externals))
    throw Mismatch("solver produced an invalid labeling: " + *bad);
  if (oracle_check) {
    auto o = brute_force(inst, d, cap);
    if (o.optimum != s.optimum)
      throw Mismatch("oracle optimum " + std::to_string(o.optimum) + " differs from solver optimum " +
                     std::to_string(s.optimum));
    std::cerr << "oracle agrees: " << o.optimum << "\n";
  }
  LabelingFile f{s.labeling, routing.externals, s.optimum, d, s.solver, true};
  Json j = labeling_to_json(f);
  j["delta"] = s.obstacles.delta;
  j["obstacle_forced_internal"] = s.obstacles.forced_internal;
  j["obstacle_forced_external"] = s.obstacles.forced_external;
  if (!routing.path_contacts.empty()) {
    j["outer_path_contacts"] = Json::array();
    for (auto [a, b] : routing.path_contacts) j["outer_path_contacts"].push_back({a, b});
  }
  emit(output, j.dump(2) + "\n");
  if (!svg.empty()) write_text_file(svg, svg_for(inst, &s.labeling, &routing, d));
  std::cerr << "internal labels: " << s.optimum << " of " << inst.size() << " (" << s.solver << ")\n";
  return kOk;
}

int run_sweep(const std::string& input, const std::string& report, const std::string& output, const std::string& svg) {
  const Instance inst = load_instance(input);
  const bool scale = !inst.unit_labels();
  const Instance work = scale ? scale_instance(inst, inst.label_w, inst.label_h) : inst;
  obstacle_fixpoint(work, Direction(-1, 0));  // rejects buried points up front
  SweepResult res = sweep_solve(work);
  auto back = [&](const Direction& d) {
    return scale ? Direction(Scalar(d.dx()) * inst.label_w, Scalar(d.dy()) * inst.label_h) : d;
  };
  std::ostringstream csv;
  csv << "interval,lo_dx,lo_dy,hi_dx,hi_dy,rep_dx,rep_dy,rep_theta,value\n";
  for (std::size_t i = 0; i < res.intervals.size(); ++i) {
    const auto& iv = res.intervals[i];
    const Direction lo = back(iv.lo), hi = back(iv.hi), rep = back(iv.representative);
    char th[32];
    std::snprintf(th, sizeof th, "%.9f", rep.theta());
    csv << i << ',' << lo.dx() << ',' << lo.dy() << ',' << hi.dx() << ',' << hi.dy() << ',' << rep.dx() << ','
        << rep.dy() << ',' << th << ',' << (iv.value ? std::to_string(*iv.value) : std::string("infeasible")) << '\n';
  }
  if (!report.empty()) {
    write_text_file(report, csv.str());
  } else if (output.empty()) {
    std::cout << csv.str();
  }
  const auto& b = res.best();
  const Direction rep = back(b.representative);
  Json j{{"argmax", res.argmax},
         {"direction", direction_to_json(rep)},
         {"theta", rep.theta()},
         {"value", *b.value},
         {"intervals", res.intervals.size()}};
  if (!output.empty()) {
    emit(output, j.dump(2) + "\n");
  } else {
    std::cerr << "argmax interval " << res.argmax << " direction " << rep.to_string() << " value " << *b.value << "\n";
  }
  if (!svg.empty()) {
    const Solution s = solve_instance(inst, rep);
    const Routing routing = route_outer(inst, s.labeling, rep, MapPolygon::of(inst));
    write_text_file(svg, svg_for(inst, &s.labeling, &routing, rep));
  }
  return kOk;
}

int run_gen(std::size_t n, std::uint64_t seed, const std::string& dmin, const std::string& box,
            const std::string& output) {
  GenOptions g;
  g.n = n;
  g.seed = seed;
  g.dmin = parse_decimal(dmin);
  g.box = parse_decimal(box);
  emit(output, instance_to_json(generate(g)).dump(2) + "\n");
  return kOk;
}

int run_check(const std::string& input, const std::string& labeling, const DirFlags& df) {
  const Instance inst = load_instance(input);
  const LabelingFile f = labeling_from_json(read_json_file(labeling));
  const bool has_dir = read_json_file(labeling).contains("direction");
  const Direction d = df.resolve(inst, has_dir ? std::optional<Direction>(f.direction) : std::nullopt);
  auto bad = check_labeling(inst, f.labeling, d, f.routes.empty() ? nullptr : &f.routes);
  if (bad) {
    std::cout << "invalid: " << *bad << "\n";
    return kMismatch;
  }
  std::cout << "valid: " << f.labeling.internal.size() << " internal, " << f.labeling.external.size()
            << " external\n";
  if (!f.valid) std::cout << "note: the file did not attest validity\n";
  return kOk;
}

int run_oracle(const std::string& input, const DirFlags& df, std::size_t cap, const std::string& output) {
  const Instance inst = load_instance(input);
  const Direction d = df.resolve(inst);
  auto o = brute_force(inst, d, cap);
  LabelingFile f{o.witness, {}, o.optimum, d, "oracle", true};
  Json j = labeling_to_json(f);
  j["enumerated"] = o.enumerated;
  emit(output, j.dump(2) + "\n");
  std::cerr << "optimum: " << o.optimum << "\n";
  return kOk;
}

int run_render(const std::string& input, const std::string& labeling, const DirFlags& df, const std::string& svg,
               const std::string& output) {
  const Instance inst = load_instance(input);
  std::optional<LabelingFile> f;
  if (!labeling.empty()) f = labeling_from_json(read_json_file(labeling));
  const Direction d = df.resolve(inst, f ? std::optional<Direction>(f->direction) : std::nullopt);
  Routing routing;
  if (f) routing = route_outer(inst, f->labeling, d, MapPolygon::of(inst));
  const std::string text = svg_for(inst, f ? &f->labeling : nullptr, f ? &routing : nullptr, d);
  emit(svg.empty() ? output : svg, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed internal/external point labeling with sloped leaders"};
  app.require_subcommand(1);

  std::string input, output, svg, report, mode = "auto", labeling, dmin = "0.5", box = "10";
  bool oracle_check = false;
  std::size_t cap = 16, n = 10;
  std::uint64_t seed = 1;
  DirFlags df_solve, df_check, df_oracle, df_render;

  auto* solve = app.add_subcommand("solve", "maximize internal labels for one leader direction");
  solve->add_option("--input", input, "instance JSON")->required();
  solve->add_option("--output", output, "labeling JSON (default stdout)");
  df_solve.add(solve);
  solve->add_option("--mode", mode, "auto, left or general")->check(CLI::IsMember({"auto", "left", "general"}));
  solve->add_option("--svg", svg, "write an SVG drawing");
  solve->add_flag("--oracle-check", oracle_check, "compare with exhaustive search");
  solve->add_option("--cap", cap, "largest n the oracle accepts");

  auto* sweep = app.add_subcommand("sweep", "best leader direction over all slopes");
  sweep->add_option("--input", input, "instance JSON")->required();
  sweep->add_option("--report", report, "per-interval CSV (default stdout)");
  sweep->add_option("--output", output, "argmax summary JSON");
  sweep->add_option("--svg", svg, "draw the optimum at the best direction");

  auto* gen = app.add_subcommand("gen", "random instance");
  gen->add_option("-n,--n", n, "number of points");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--dmin", dmin, "minimum pairwise distance");
  gen->add_option("--box", box, "side of the square [0, box]^2");
  gen->add_option("--output", output, "instance JSON (default stdout)");

  auto* check = app.add_subcommand("check", "validate a labeling");
  check->add_option("--input", input, "instance JSON")->required();
  check->add_option("--labeling", labeling, "labeling JSON")->required();
  df_check.add(check);

  auto* oracle = app.add_subcommand("oracle", "exhaustive optimum for small instances");
  oracle->add_option("--input", input, "instance JSON")->required();
  oracle->add_option("--output", output, "labeling JSON (default stdout)");
  oracle->add_option("--cap", cap, "largest n accepted");
  df_oracle.add(oracle);

  auto* render = app.add_subcommand("render", "draw an instance and optionally a labeling");
  render->add_option("--input", input, "instance JSON")->required();
  render->add_option("--labeling", labeling, "labeling JSON");
  render->add_option("--svg", svg, "SVG path");
  render->add_option("--output", output, "SVG path (alias)");
  df_render.add(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*solve) return run_solve(input, df_solve, mode, output, svg, oracle_check, cap);
    if (*sweep) return run_sweep(input, report, output, svg);
    if (*gen) return run_gen(n, seed, dmin, box, output);
    if (*check) return run_check(input, labeling, df_check);
    if (*oracle) return run_oracle(input, df_oracle, cap, output);
    if (*render) return run_render(input, labeling, df_render, svg, output);
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const Mismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const ParseError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kInvalid;
}
