// concentric-gons: command-line front end.
//
// Exit codes: 0 success/feasible, 1 usage or parse error, 2 mathematically
// infeasible or empty result, 3 numerical diagnostic (phase search failed).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "concentric/io.hpp"
#include "concentric/oracle.hpp"
#include "concentric/svg.hpp"

namespace {

using namespace concentric;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNumerical = 3;

constexpr double kIdentityTolerance = 1e-10;
constexpr double kSweepTolerance = 1e-8;
constexpr double kSweepAgreement = 1e-6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double tol = Tolerance{}.relative_eps;
  bool json = false;
  int max_n = kDefaultMaxOrder;
  std::string radii;
  std::string center;
  std::string input;
  std::string svg;
  std::string output;
  std::uint64_t seed = 1;
  int n = 3;
  int index = 0;
  bool point_second = false;
};

Tolerance tolerance(const Options& opt) { return Tolerance(opt.tol, Tolerance{}.absolute_floor); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

void emit(const Options& opt, const Json& doc, const std::string& human) {
  if (opt.json) {
    std::cout << io::dump(doc);
  } else {
    std::cout << human;
  }
}

Json header(std::string_view command) {
  Json j;
  j["format"] = io::kFormatTag;
  j["command"] = command;
  return j;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void check_order(const Options& opt, int n) {
  if (n > opt.max_n) {
    throw UsageError("n = " + std::to_string(n) + " exceeds --max-n " +
                     std::to_string(opt.max_n) +
                     " (moments overflow for large n; prescale radii to geometric mean 1 "
                     "and raise --max-n)");
  }
}

// Circle family from --radii/--center or from --input.
CircleFamily load_family(const Options& opt) {
  if (!opt.radii.empty() && !opt.input.empty()) {
    throw UsageError("give either --radii or --input, not both");
  }
  CircleFamily family = [&] {
    if (!opt.radii.empty()) {
      PlanePoint center{};
      if (!opt.center.empty()) {
        const auto c = io::parse_number_list(opt.center);
        if (c.size() != 2) throw UsageError("--center takes x,y");
        center = {c[0], c[1]};
      }
      bool reordered = false;
      std::vector<double> radii = io::parse_number_list(opt.radii);
      if (radii.size() < 3) throw UsageError("need at least 3 radii");
      CircleFamily f = CircleFamily::from_unsorted(center, std::move(radii), &reordered);
      if (reordered) std::cerr << "warning: radii were not ascending; sorted internally\n";
      return f;
    }
    if (opt.input.empty()) throw UsageError("give --radii or --input");
    io::InstanceDocument doc = io::load_instance(opt.input);
    if (doc.radii_reordered) std::cerr << "warning: radii were not ascending; sorted on load\n";
    if (doc.circles) return *doc.circles;
    if (doc.m_point) return CircleFamily(*doc.m_point, distance_multiset(doc.polygons[0], *doc.m_point));
    throw UsageError("instance has no circle family");
  }();
  check_order(opt, family.size());
  return family;
}

int run_check(const Options& opt) {
  const Tolerance tol = tolerance(opt);
  const CircleFamily family = load_family(opt);
  const int n = family.size();
  const CyclicAverages av = cyclic_averages(family);
  const FeasibilityReport report = assess_feasibility(av, tol);

  Json doc = header("check");
  doc["n"] = n;
  doc["circles"] = io::to_json(family);
  doc["report"] = io::to_json(report, tol);
  std::optional<RadiiPair> radii;
  if (report.condition1_ok) {
    try {
      radii = recover_circumradii(av, tol);
    } catch (const GeometryError&) {
    }
  }
  doc["circumradii"] = radii ? io::to_json(*radii) : Json(nullptr);

  const auto& d = family.radii();
  if (n == 3) {
    doc["triangle"] = io::to_json(triangle_feasibility(d[0], d[1], d[2], tol));
  } else if (n == 4) {
    const std::array<double, 4> q{d[0], d[1], d[2], d[3]};
    Json square = io::to_json(square_feasibility(q, tol));
    const SquareCubicResidual cubic = square_cubic_residual(q);
    square["degree6_residual"] = cubic.degree6_residual;
    square["factor_product"] = cubic.factor_product;
    doc["square"] = square;
  }

  std::string text = "n = " + std::to_string(n) + "\n";
  text += "condition I: ratio " + fmt(report.condition1_ratio) +
          (report.condition1_ok ? " [ok]\n" : " [fail]\n");
  if (report.condition2_residuals.empty()) {
    text += "condition II: vacuous for n = 3 [ok]\n";
  }
  for (std::size_t i = 0; i < report.condition2_residuals.size(); ++i) {
    const double r = report.condition2_residuals[i];
    text += "condition II m=" + std::to_string(i + 3) + ": residual " + fmt(r) +
            (r <= tol.relative_eps + tol.absolute_floor ? " [ok]\n" : " [fail]\n");
  }
  if (report.feasible() && radii) {
    text += "feasible: r1 = " + fmt(radii->r1) + ", r2 = " + fmt(radii->r2);
    text += radii->degenerate ? " (degenerate: a single polygon)\n" : "\n";
  } else {
    text += "infeasible\n";
  }
  emit(opt, doc, text);
  return report.feasible() ? kExitOk : kExitInfeasible;
}

int run_reconstruct(const Options& opt) {
  const Tolerance tol = tolerance(opt);
  const CircleFamily family = load_family(opt);
  Json doc = header("reconstruct");
  doc["n"] = family.size();
  doc["circles"] = io::to_json(family);
  try {
    const Reconstruction rec = reconstruct_polygons(family, tol);
    doc["report"] = io::to_json(rec.report, tol);
    doc["reconstruction"] = io::to_json(rec);
    if (!opt.svg.empty()) {
      write_file(opt.svg, io::render_svg({family.center(), family.radii(),
                                          {rec.first, rec.second}, family.center()}));
    }
    std::string text = "polygon 1: R = " + fmt(rec.first.circumradius()) + ", center (" +
                       fmt(rec.first.center().x) + ", " + fmt(rec.first.center().y) +
                       "), phase " + fmt(rec.first.phase()) + "\n";
    text += "polygon 2: R = " + fmt(rec.second.circumradius()) + ", center (" +
            fmt(rec.second.center().x) + ", " + fmt(rec.second.center().y) + "), phase " +
            fmt(rec.second.phase()) + (rec.second_is_point ? " (point polygon)\n" : "\n");
    text += "residuals: " + fmt(rec.first_residual) + ", " + fmt(rec.second_residual) + "\n";
    emit(opt, doc, text);
    return kExitOk;
  } catch (const InfeasibleFamilyError& e) {
    doc["report"] = io::to_json(e.report(), tol);
    doc["reconstruction"] = nullptr;
    doc["error"] = e.what();
    emit(opt, doc, std::string("infeasible: ") + e.what() + "\n");
    return kExitInfeasible;
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::PhaseSearchFailed) throw;
    doc["reconstruction"] = nullptr;
    doc["error"] = e.what();
    emit(opt, doc, std::string("diagnostic: ") + e.what() + "\n");
    return kExitNumerical;
  }
}

io::InstanceDocument load_pair(const Options& opt) {
  if (opt.input.empty()) throw UsageError("pair needs --input with a polygon_pair instance");
  io::InstanceDocument doc = io::load_instance(opt.input);
  if (doc.kind != io::InstanceKind::PolygonPair) {
    throw UsageError("instance kind must be polygon_pair");
  }
  if (doc.polygons[0].n() != doc.polygons[1].n()) {
    throw UsageError("polygons have different vertex counts (" +
                     std::to_string(doc.polygons[0].n()) + " and " +
                     std::to_string(doc.polygons[1].n()) + ")");
  }
  check_order(opt, doc.polygons[0].n());
  return doc;
}

int run_pair(const Options& opt) {
  const Tolerance tol = tolerance(opt);
  const io::InstanceDocument input = load_pair(opt);
  const RegularPolygon& p1 = input.polygons[0];
  const RegularPolygon& p2 = input.polygons[1];

  Json doc = header("pair");
  doc["n"] = p1.n();
  doc["polygons"] = Json::array({io::to_json(p1), io::to_json(p2)});
  Json aux = Json::array();
  for (const AuxiliaryCircle& c : auxiliary_circles(p1, p2)) {
    aux.push_back({{"center", io::to_json(c.center)}, {"radius", c.radius}});
  }
  doc["auxiliary_circles"] = aux;
  doc["intersection_feasible"] = intersection_feasible(p1, p2, tol);

  PairingReport report;
  try {
    report = pair_polygons(p1, p2, tol);
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::CoincidentAuxiliaryCircles) throw;
    doc["degenerate_continuum"] = true;
    doc["results"] = Json::array();
    doc["error"] = e.what();
    emit(opt, doc, std::string("degenerate: ") + e.what() + "\n");
    return kExitInfeasible;
  }
  doc["degenerate_continuum"] = false;
  Json results = Json::array();
  for (const PairingResult& r : report.results) results.push_back(io::to_json(r));
  doc["results"] = results;
  doc["diagnostics"] = report.diagnostics;

  if (!opt.svg.empty() && !report.results.empty()) {
    const auto k = static_cast<std::size_t>(opt.index);
    if (k >= report.results.size()) throw UsageError("--index out of range");
    const PairingResult& r = report.results[k];
    write_file(opt.svg, io::render_svg({r.m_point, r.circles.radii(), {p1, r.aligned_second},
                                        r.m_point}));
  }

  std::string text = std::to_string(report.results.size()) + " circle set(s)\n";
  for (const PairingResult& r : report.results) {
    text += "M = (" + fmt(r.m_point.x) + ", " + fmt(r.m_point.y) + "), second phase " +
            fmt(r.aligned_second.phase()) + ", radii:";
    for (double d : r.circles.radii()) text += " " + fmt(d);
    text += "\n";
  }
  for (const std::string& diag : report.diagnostics) text += "diagnostic: " + diag + "\n";
  emit(opt, doc, text);
  return report.results.empty() ? kExitInfeasible : kExitOk;
}

Json residual_list(const std::vector<double>& residuals, double limit, bool& pass) {
  Json list = Json::array();
  Json failing = Json::array();
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    const int m = static_cast<int>(i) + 1;
    list.push_back({{"m", m}, {"residual", residuals[i]}});
    if (!(residuals[i] <= limit)) failing.push_back(m);
  }
  pass = failing.empty();
  return {{"residuals", list}, {"failing_m", failing}, {"pass", pass}};
}

Json sweep_section(const CircleFamily& family, const Tolerance& tol, bool& pass) {
  const int n = family.size();
  const RadiiPair radii = recover_circumradii_clamped(cyclic_averages(family), tol);
  // the sweep works about the origin; shift the family there
  const std::vector<double>& target = family.radii();
  const SweepResult first = angle_sweep(radii.r1, radii.r2, n, target);
  const SweepResult second = angle_sweep(radii.r2, radii.r1, n, target);
  const double scale = std::fmax(1.0, target.back());
  pass = first.best_residual <= kSweepTolerance * scale &&
         second.best_residual <= kSweepTolerance * scale;

  Json j;
  j["r1"] = radii.r1;
  j["r2"] = radii.r2;
  j["first"] = {{"best_phase", first.best_phase}, {"best_residual", first.best_residual}};
  j["second"] = {{"best_phase", second.best_phase}, {"best_residual", second.best_residual}};
  try {
    const Reconstruction rec = reconstruct_polygons(family, tol);
    const bool agree = std::fabs(rec.first_residual - first.best_residual) <= kSweepAgreement &&
                       std::fabs(rec.second_residual - second.best_residual) <= kSweepAgreement;
    j["reconstruct_residuals"] = Json::array({rec.first_residual, rec.second_residual});
    j["agreement"] = agree;
    pass = pass && agree;
  } catch (const GeometryError&) {
    j["reconstruct_residuals"] = nullptr;
    j["agreement"] = nullptr;
  }
  j["pass"] = pass;
  return j;
}

int run_verify(const Options& opt) {
  const Tolerance tol = tolerance(opt);
  io::InstanceDocument input;
  if (!opt.input.empty()) {
    input = io::load_instance(opt.input);
  } else {
    if (opt.n < 3) throw UsageError("--n must be >= 3");
    const RandomInstance inst = random_instance(opt.n, opt.seed, opt.point_second);
    input.kind = io::InstanceKind::PolygonPair;
    input.polygons = {inst.first, inst.second};
    input.m_point = inst.m_point;
    input.circles = inst.family;
  }

  Json doc = header("verify");
  doc["kind"] = input.kind == io::InstanceKind::Circles ? "circles" : "polygon_pair";
  doc["tolerances"] = {{"distance_identity", kIdentityTolerance},
                       {"sweep", kSweepTolerance},
                       {"sweep_agreement", kSweepAgreement}};
  bool all_pass = true;
  std::string text;

  if (input.kind == io::InstanceKind::PolygonPair) {
    const RegularPolygon& p1 = input.polygons[0];
    const RegularPolygon& p2 = input.polygons[1];
    if (p1.n() != p2.n()) throw UsageError("polygons have different vertex counts");
    check_order(opt, p1.n());
    std::vector<PlanePoint> points;
    if (input.m_point) {
      points.push_back(*input.m_point);
    } else {
      try {
        for (const PairingResult& r : pair_polygons(p1, p2, tol).results) {
          points.push_back(r.m_point);
        }
      } catch (const GeometryError&) {
      }
    }

    Json identity = Json::array();
    for (std::size_t pi = 0; pi < 2; ++pi) {
      for (const PlanePoint m : points) {
        std::vector<double> residuals;
        for (int k = 1; k < p1.n(); ++k) residuals.push_back(distance_identity_residual(input.polygons[pi], m, k));
        bool pass = false;
        Json entry = {{"polygon", pi + 1}, {"m_point", io::to_json(m)}};
        entry.update(residual_list(residuals, kIdentityTolerance, pass));
        all_pass = all_pass && pass;
        text += "distance identity polygon " + std::to_string(pi + 1) + (pass ? ": pass\n" : ": FAIL\n");
        identity.push_back(entry);
      }
    }
    doc["distance_identity"] = identity;

    if (input.circles) {
      const CircleFamily& family = *input.circles;
      Json family_checks = Json::array();
      for (std::size_t pi = 0; pi < 2; ++pi) {
        const RegularPolygon& poly = input.polygons[pi];
        if (poly.n() != family.size()) throw UsageError("circle count differs from polygon order");
        const double l = distance(family.center(), poly.center());
        std::vector<double> residuals;
        for (int k = 1; k < poly.n(); ++k) {
          residuals.push_back(power_sum_residual(family.radii(), poly.circumradius(), l, k));
        }
        bool pass = false;
        Json entry = {{"polygon", pi + 1}};
        entry.update(residual_list(residuals, kIdentityTolerance, pass));
        all_pass = all_pass && pass;
        text += "radii vs polygon " + std::to_string(pi + 1);
        if (pass) {
          text += ": pass\n";
        } else {
          text += ": FAIL at m =";
          for (const Json& m : entry["failing_m"]) text += " " + std::to_string(m.get<int>());
          text += "\n";
        }
        family_checks.push_back(entry);
      }
      doc["family_identity"] = family_checks;
    }
  }

  std::optional<CircleFamily> family = input.circles;
  if (!family && input.m_point) {
    family = CircleFamily(*input.m_point, distance_multiset(input.polygons[0], *input.m_point));
  }
  if (family) {
    check_order(opt, family->size());
    bool pass = false;
    doc["angle_sweep"] = sweep_section(*family, tol, pass);
    all_pass = all_pass && pass;
    text += std::string("angle sweep: ") + (pass ? "pass\n" : "FAIL\n");
  }
  doc["pass"] = all_pass;
  text += all_pass ? "verify: pass\n" : "verify: FAIL\n";
  emit(opt, doc, text);
  return all_pass ? kExitOk : kExitInfeasible;
}

int run_render(const Options& opt) {
  const Tolerance tol = tolerance(opt);
  io::SvgScene scene;
  bool have_pair = false;
  if (!opt.input.empty()) {
    const io::InstanceDocument doc = io::load_instance(opt.input);
    have_pair = doc.kind == io::InstanceKind::PolygonPair;
  }
  if (have_pair) {
    const io::InstanceDocument doc = load_pair(opt);
    const PairingReport report = pair_polygons(doc.polygons[0], doc.polygons[1], tol);
    if (report.results.empty()) {
      scene = {doc.polygons[0].center(), {}, doc.polygons, std::nullopt};
    } else {
      const auto k = static_cast<std::size_t>(opt.index);
      if (k >= report.results.size()) throw UsageError("--index out of range");
      const PairingResult& r = report.results[k];
      scene = {r.m_point, r.circles.radii(), {doc.polygons[0], r.aligned_second}, r.m_point};
    }
  } else {
    const CircleFamily family = load_family(opt);
    try {
      const Reconstruction rec = reconstruct_polygons(family, tol);
      scene = {family.center(), family.radii(), {rec.first, rec.second}, family.center()};
    } catch (const InfeasibleFamilyError& e) {
      std::cerr << "infeasible: " << e.what() << "; drawing the circles only\n";
      scene = {family.center(), family.radii(), {}, family.center()};
    }
  }
  const std::string svg = io::render_svg(scene);
  if (opt.svg.empty()) {
    std::cout << svg;
  } else {
    write_file(opt.svg, svg);
  }
  return kExitOk;
}

int run_generate(const Options& opt) {
  if (opt.n < 3) throw UsageError("--n must be >= 3");
  check_order(opt, opt.n);
  const RandomInstance inst = random_instance(opt.n, opt.seed, opt.point_second);
  io::InstanceDocument doc;
  doc.kind = io::InstanceKind::PolygonPair;
  doc.polygons = {inst.first, inst.second};
  doc.m_point = inst.m_point;
  doc.circles = inst.family;
  doc.metadata["generator"] = "splitmix64";
  doc.metadata["seed"] = std::to_string(opt.seed);
  const std::string text = io::dump(io::to_json(doc));
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    write_file(opt.output, text);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concentric circles through the vertices of two regular polygons"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--tol", opt.tol, "relative tolerance (default 1e-9)");
  app.add_flag("--json", opt.json, "machine-readable JSON on standard output");
  app.add_option("--max-n", opt.max_n, "largest accepted vertex count (default 64)");

  auto add_family_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--radii", opt.radii, "comma-separated circle radii");
    cmd->add_option("--center", opt.center, "circle center as x,y (default 0,0)");
    cmd->add_option("--input", opt.input, "instance JSON file");
  };

  CLI::App* check = app.add_subcommand("check", "decide whether two polygons fit the circles");
  add_family_inputs(check);

  CLI::App* reconstruct = app.add_subcommand("reconstruct", "place both polygons on the circles");
  add_family_inputs(reconstruct);
  reconstruct->add_option("--svg", opt.svg, "write an SVG drawing");

  CLI::App* pair = app.add_subcommand("pair", "find circle sets threading two polygons");
  pair->add_option("--input", opt.input, "polygon_pair instance JSON file")->required();
  pair->add_option("--svg", opt.svg, "write an SVG drawing of one result");
  pair->add_option("--index", opt.index, "result drawn by --svg (default 0)");

  CLI::App* verify = app.add_subcommand("verify", "brute-force oracle checks of an instance");
  verify->add_option("--input", opt.input, "instance JSON file");
  verify->add_option("--seed", opt.seed, "seed for a generated instance when --input is absent");
  verify->add_option("--n", opt.n, "vertex count for a generated instance");
  verify->add_flag("--point-second", opt.point_second, "generated instance with r2 = 0");

  CLI::App* render = app.add_subcommand("render", "draw a configuration as SVG");
  add_family_inputs(render);
  render->add_option("--svg", opt.svg, "output file (default: standard output)");
  render->add_option("--index", opt.index, "pairing result to draw (default 0)");

  CLI::App* generate = app.add_subcommand("generate", "write a seeded random polygon_pair instance");
  generate->add_option("--n", opt.n, "vertex count")->required();
  generate->add_option("--seed", opt.seed, "seed");
  generate->add_option("--output", opt.output, "output file (default: standard output)");
  generate->add_flag("--point-second", opt.point_second, "force the second circumradius to 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (opt.max_n < 3) throw UsageError("--max-n must be >= 3");
    tolerance(opt);
    if (*check) return run_check(opt);
    if (*reconstruct) return run_reconstruct(opt);
    if (*pair) return run_pair(opt);
    if (*verify) return run_verify(opt);
    if (*render) return run_render(opt);
    if (*generate) return run_generate(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InvalidArgument:
      case ErrorCode::MismatchedOrder:
      case ErrorCode::UnsortedRadii:
        return kExitUsage;
      default:
        return kExitInfeasible;
    }
  }
  return kExitUsage;
}
