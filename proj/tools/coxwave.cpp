// coxwave: construct Coxeter-group wavelet-set scenes, verify their tiling /
// congruence / spectral properties, and run WSK sampling experiments.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxwave/coxwave.hpp"

using namespace coxwave;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Small parsing helpers
// ---------------------------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

RatVec parse_ratvec(const std::string& text) {
  RatVec v;
  for (const auto& part : split(text, ',')) v.push_back(rat_from_string(part));
  return v;
}

/// "diag:2,2" (or plain "2,2") -> per-axis scales.
RatVec parse_scheme(const std::string& text) {
  std::string body = text;
  if (body.rfind("diag:", 0) == 0) body = body.substr(5);
  return parse_ratvec(body);
}

Rat rat_approx(double x, long den = 4096) {
  return Rat(std::llround(x * double(den)), den);
}

struct FamilyContext {
  RootSystem rs;
  SimpleSystem pi;
  DualBasis dual;
  ReflectionGroup group;
};

FamilyContext build_family(const std::string& name) {
  RootSystem rs = build_root_system(FamilySpec::parse(name));
  SimpleSystem pi = simple_system(rs);
  DualBasis dual = dual_basis(pi);
  ReflectionGroup group = generate_group(rs);
  return FamilyContext{std::move(rs), std::move(pi), std::move(dual),
                       std::move(group)};
}

std::vector<Eigen::MatrixXd> rotation_matrices(int m) {
  std::vector<Eigen::MatrixXd> out;
  for (int j = 0; j < m; ++j) {
    double t = 2 * 3.14159265358979323846 * j / m;
    Eigen::MatrixXd r(2, 2);
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    out.push_back(r);
  }
  return out;
}

/// Ambient cube annulus r_lo <= |x|_inf < r_hi used as a sampling window.
Region annulus_window(int dim, double r_lo, double r_hi) {
  Frame id = Frame::identity(dim);
  Rat lo = rat_approx(r_lo), hi = rat_approx(r_hi);
  Region outer = Region::box(id, RatVec(dim, -hi), RatVec(dim, hi));
  Region inner = Region::box(id, RatVec(dim, -lo), RatVec(dim, lo));
  return subtract(outer, inner);
}

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

// ---------------------------------------------------------------------------
// Shared options and config-file merging
// ---------------------------------------------------------------------------

struct Options {
  // construct
  std::string method;
  std::string family;
  std::string scheme = "";
  std::string sides = "";
  int depth = 16;
  int alpha_index = 1;
  std::string a = "2";
  int m = 4;
  std::string out;
  std::string svg;
  std::string config;
  // verify
  std::string scene;
  std::uint64_t seed = 7;
  std::size_t samples = 100000;
  int kmax = 20;
  std::string window = "1,2";
  double gram_radius = 5.0;
  double tol_translation = 1e-3;
  double tol_gram = 1e-2;
  double tol_gram_exact = 1e-10;
  double min_mult_fraction = 0.99;
  // sample
  std::string plan_path;
  std::string signal_path;
  std::string radii = "8,16,32,64";
  int grid = 4;
  // report
  std::string in_path;
};

/// Applies a strict config file: every key must be known, CLI flags win.
void merge_config(Options& opt, const CLI::App* cmd) {
  if (opt.config.empty()) return;
  json cfg = read_json_file(opt.config);
  auto overridden = [&](const std::string& flag) {
    auto* o = cmd->get_option_no_throw("--" + flag);
    return o != nullptr && o->count() > 0;
  };
  for (const auto& [key, value] : cfg.items()) {
    if (key == "method") { if (!overridden(key)) opt.method = value; }
    else if (key == "family") { if (!overridden(key)) opt.family = value; }
    else if (key == "scheme") { if (!overridden(key)) opt.scheme = value; }
    else if (key == "sides") { if (!overridden(key)) opt.sides = value; }
    else if (key == "depth") { if (!overridden(key)) opt.depth = value; }
    else if (key == "alpha_index") { if (!overridden("alpha-index")) opt.alpha_index = value; }
    else if (key == "a") { if (!overridden(key)) opt.a = value.is_string() ? value.get<std::string>() : std::to_string(value.get<int>()); }
    else if (key == "m") { if (!overridden(key)) opt.m = value; }
    else if (key == "out") { if (!overridden(key)) opt.out = value; }
    else if (key == "svg") { if (!overridden(key)) opt.svg = value; }
    else if (key == "seed") { if (!overridden(key)) opt.seed = value; }
    else if (key == "samples") { if (!overridden(key)) opt.samples = value; }
    else if (key == "kmax") { if (!overridden(key)) opt.kmax = value; }
    else if (key == "window") { if (!overridden(key)) opt.window = value; }
    else if (key == "gram_radius") { if (!overridden("gram-radius")) opt.gram_radius = value; }
    else if (key == "tolerances") {
      for (const auto& [tk, tv] : value.items()) {
        if (tk == "translation") opt.tol_translation = tv;
        else if (tk == "gram") opt.tol_gram = tv;
        else if (tk == "min_multiplicity_fraction") opt.min_mult_fraction = tv;
        else throw InvalidInputError("unknown tolerance key '" + tk + "'");
      }
    }
    else throw InvalidInputError("unknown config key '" + key + "'");
  }
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

json scheme_bundle(const DilationScheme& scheme) {
  return json{{"B", matrix_to_json(scheme.b_matrix())},
              {"a", to_json(scheme.scales())},
              {"q", scheme.q().convert_to<std::int64_t>()}};
}

void write_scene_svg(const std::string& path, const std::vector<SvgLayer>& layers) {
  write_text_file(path, svg_render(layers));
  std::cout << "wrote " << path << "\n";
}

int cmd_construct(Options& opt) {
  if (opt.out.empty()) throw InvalidInputError("construct needs --out");
  json scene;

  if (opt.method == "mra") {
    if (opt.family.empty()) throw InvalidInputError("--method mra needs --family");
    FamilyContext ctx = build_family(opt.family);
    const int dim = ctx.rs.dim;
    RatVec sides = opt.sides.empty() ? RatVec(dim, Rat(1)) : parse_ratvec(opt.sides);
    RatVec scales = opt.scheme.empty() ? RatVec(dim, Rat(2)) : parse_scheme(opt.scheme);
    MraBundle bundle = build_mra_multiwavelets(ctx.dual, sides, scales, opt.gram_radius);

    json omegas = json::array();
    for (const Region& w : bundle.wavelet_sets) omegas.push_back(to_json(w));
    json digits = json::array();
    for (const RatVec& v : bundle.digits.digits) digits.push_back(to_json(v));
    scene = json{{"type", "mra"},
                 {"family", opt.family},
                 {"K", to_json(bundle.k)},
                 {"scheme", scheme_bundle(bundle.scheme)},
                 {"digits", digits},
                 {"wavelet_sets", omegas},
                 {"checks", to_json(bundle.checks)},
                 {"lattice_periods", to_json(sides)},
                 {"group", group_document(ctx.rs, ctx.pi, ctx.dual, ctx.group)}};
    if (dim == 3) {
      json boxes = box_list_3d(bundle.k, "K");
      for (std::size_t i = 0; i < bundle.wavelet_sets.size(); ++i)
        for (auto& b : box_list_3d(bundle.wavelet_sets[i], "Omega_" + std::to_string(i + 1)))
          boxes.push_back(b);
      scene["box_list"] = boxes;
    }
    write_text_file(opt.out, scene.dump(2) + "\n");
    std::cout << "wrote " << opt.out << " (" << bundle.wavelet_sets.size()
              << " wavelet sets)\n";
    if (dim == 2) {
      std::vector<SvgLayer> layers{{&bundle.k, "#000000", "P"}};
      for (std::size_t i = 0; i < bundle.wavelet_sets.size(); ++i)
        layers.push_back({&bundle.wavelet_sets[i], kPalette[i % 8],
                          "Omega_" + std::to_string(i + 1)});
      write_scene_svg(opt.svg.empty() ? opt.out + ".svg" : opt.svg, layers);
    }
    return 0;
  }

  if (opt.method == "section5") {
    std::optional<FamilyContext> ctx;
    Frame frame = Frame::identity(2);
    if (!opt.family.empty()) {
      ctx = build_family(opt.family);
      frame = Frame(ctx->dual.matrix());
    }
    const int dim = frame.dim();
    RatVec sides = opt.sides.empty() ? RatVec(dim, Rat(1)) : parse_ratvec(opt.sides);
    RatVec scales = opt.scheme.empty() ? RatVec(dim, Rat(2)) : parse_scheme(opt.scheme);
    Region p = Region::box(frame, RatVec(dim, Rat(0)), sides);
    DilationScheme scheme(frame, scales);
    RecursionState state = construct_section5(p, scheme, opt.alpha_index, opt.depth);

    scene = json{{"type", "section5"},
                 {"P", to_json(p)},
                 {"omega", to_json(state.omega)},
                 {"scheme", scheme_bundle(scheme)},
                 {"depth", state.depth},
                 {"alpha_index", state.translation_index},
                 {"residual_volume", rat_to_string(state.residual_volume)},
                 {"residual_volume_float", to_double(state.residual_volume)},
                 {"piece_overlap_volume", rat_to_string(state.piece_overlap_volume)},
                 {"lattice_periods", to_json(sides)}};
    if (!opt.family.empty()) scene["family"] = opt.family;
    write_text_file(opt.out, scene.dump(2) + "\n");
    std::cout << "wrote " << opt.out << " (residual "
              << to_double(state.residual_volume) << ")\n";
    if (dim == 2) {
      std::vector<SvgLayer> layers{{&p, "#bbbbbb", "P"},
                                   {&state.omega, "#000000", "W"}};
      write_scene_svg(opt.svg.empty() ? opt.out + ".svg" : opt.svg, layers);
    }
    return 0;
  }

  if (opt.method == "example31") {
    Rat a = rat_from_string(opt.a);
    RecursionState state = construct_example31(a, opt.m, opt.depth);
    Region e = example31_base_set(opt.m);
    scene = json{{"type", "example31"},
                 {"a", rat_to_string(a)},
                 {"m", opt.m},
                 {"E", to_json(e)},
                 {"omega", to_json(state.omega)},
                 {"depth", state.depth},
                 {"residual_volume", rat_to_string(state.residual_volume)},
                 {"residual_volume_float", to_double(state.residual_volume)},
                 {"piece_overlap_volume", rat_to_string(state.piece_overlap_volume)},
                 {"lattice_periods", to_json(RatVec{Rat(1), Rat(1)})},
                 {"base_gram", example31_base_gram(opt.m)}};
    write_text_file(opt.out, scene.dump(2) + "\n");
    std::cout << "wrote " << opt.out << " (residual "
              << to_double(state.residual_volume) << ")\n";
    std::vector<SvgLayer> layers{{&e, "#bbbbbb", "E"}, {&state.omega, "#000000", "Omega"}};
    write_scene_svg(opt.svg.empty() ? opt.out + ".svg" : opt.svg, layers);
    return 0;
  }

  throw InvalidInputError("unknown method '" + opt.method +
                          "' (expected mra, section5, or example31)");
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  json scene = read_json_file(opt.scene);
  std::string type = scene.at("type");
  json report{{"scene_type", type}, {"seed", opt.seed}};
  bool pass = true;

  if (type == "mra") {
    Region k = region_from_json(scene.at("K"));
    RatVec periods = ratvec_from_json(scene.at("lattice_periods"));
    RatVec scales = ratvec_from_json(scene.at("scheme").at("a"));
    DilationScheme scheme(k.frame(), scales);
    Lattice t = Lattice::diagonal(k.frame(), periods);
    std::vector<Region> omegas;
    for (const auto& j : scene.at("wavelet_sets")) omegas.push_back(region_from_json(j));

    TileReport k_tile = is_translation_tile(k, t);
    pass = pass && k_tile.is_tile;
    report["checks"]["k_tile"] = to_json(k_tile);

    Region k_fold = reduce_mod_lattice(k, t).support;
    bool congruence = true;
    json omega_tiles = json::array();
    for (const Region& omega : omegas) {
      ReducedRegion fold = reduce_mod_lattice(omega, t);
      bool ok = fold.overlap.is_empty() && region_equal(fold.support, k_fold);
      congruence = congruence && ok;
      TileReport tr = is_translation_tile(omega, t);
      omega_tiles.push_back(to_json(tr));
      pass = pass && tr.is_tile;
    }
    report["checks"]["congruence"] = congruence;
    report["checks"]["omega_tiles"] = omega_tiles;
    pass = pass && congruence;

    Region bk = scale_axes(k, scales);
    Region covered = k;
    for (const Region& omega : omegas) covered = unite(covered, omega);
    bool refinement = region_equal(bk, covered);
    report["checks"]["refinement"] = refinement;
    pass = pass && refinement;

    double gram = 0;
    Lattice spectrum = spectrum_lattice_for_box(k.frame(), periods);
    for (const Region& omega : omegas)
      gram = std::max(gram, gram_max_offdiag(omega, spectrum, opt.gram_radius));
    report["checks"]["gram"] = gram;
    report["tolerances"]["gram"] = opt.tol_gram_exact;
    pass = pass && gram <= opt.tol_gram_exact;
  } else if (type == "section5" || type == "example31") {
    Region omega = region_from_json(scene.at("omega"));
    RatVec periods = ratvec_from_json(scene.at("lattice_periods"));
    const int dim = omega.dim();

    RatVec scales;
    std::vector<Eigen::MatrixXd> group_elements;
    if (type == "section5") {
      scales = ratvec_from_json(scene.at("scheme").at("a"));
      std::string family = scene.value("family", dim == 2 ? "I2:2" : "I2:2xA1");
      group_elements = build_family(family).group.elements();
    } else {
      Rat a = rat_from_string(scene.at("a").get<std::string>());
      scales = RatVec(dim, a);
      group_elements = rotation_matrices(scene.at("m").get<int>());
    }
    DilationScheme scheme(omega.frame(), scales);
    Lattice gamma = Lattice::diagonal(omega.frame(), periods);

    TileReport translation = is_translation_tile(omega, gamma);
    report["checks"]["translation"] = to_json(translation);
    bool tr_ok = translation.overlap_volume_exact == 0 &&
                 translation.gap_volume <= opt.tol_translation;
    report["tolerances"]["translation"] = opt.tol_translation;
    pass = pass && tr_ok;

    auto wparts = split(opt.window, ',');
    if (wparts.size() != 2) throw InvalidInputError("--window expects r_lo,r_hi");
    Region window = annulus_window(dim, std::stod(wparts[0]), std::stod(wparts[1]));
    auto family = dilation_family(group_elements, scheme, opt.kmax, omega);
    MultiplicityReport mult =
        multiplicative_multiplicity(family, window, opt.samples, opt.seed);
    report["checks"]["dilation"] = to_json(mult);
    report["tolerances"]["min_multiplicity_fraction"] = opt.min_mult_fraction;
    pass = pass && mult.fraction(1) >= opt.min_mult_fraction;

    double gram = gram_max_offdiag(
        omega, spectrum_lattice_for_box(omega.frame(), periods), opt.gram_radius);
    report["checks"]["gram"] = gram;
    report["tolerances"]["gram"] = opt.tol_gram;
    pass = pass && gram <= opt.tol_gram;
  } else {
    throw InvalidInputError("scene type '" + type + "' is not verifiable");
  }

  report["pass"] = pass;
  std::string text = report.dump(2) + "\n";
  if (!opt.out.empty()) write_text_file(opt.out, text);
  else std::cout << text;

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0).count();
  std::cout << "verify: " << (pass ? "PASS" : "FAIL") << " (" << ms << " ms)\n";
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

int cmd_sample(Options& opt) {
  SamplingPlan plan = plan_from_json(read_json_file(opt.plan_path));
  BandlimitedSignal signal = signal_from_json(read_json_file(opt.signal_path));
  if (!plan.p.frame().same_as(signal.frame(), 1e-9))
    throw InvalidInputError("plan and signal frames disagree");
  double defect = plan.spectral_defect();
  if (defect > 1e-10)
    throw InvalidInputError("plan violates the spectral-pair hypothesis (gram " +
                            std::to_string(defect) + ")");

  const int dim = plan.p.dim();
  std::vector<Eigen::VectorXd> grid;
  for (int flat = 0; flat < std::pow(opt.grid, dim); ++flat) {
    int rem = flat;
    Eigen::VectorXd t(dim);
    for (int j = 0; j < dim; ++j) {
      int idx = rem % opt.grid;
      rem /= opt.grid;
      t[j] = -1.5 + 3.0 * (idx + 0.5) / opt.grid;
    }
    grid.push_back(plan.p.frame().to_ambient(t));
  }

  json results = json::array();
  std::cout << "R      l2_rel_error   sup_error      interp_max_abs_err\n";
  for (const auto& rtext : split(opt.radii, ',')) {
    SamplingPlan p(plan.p, plan.gamma, std::stoi(rtext), plan.level, plan.scheme);
    SampleMap samples = take_samples(p, signal);

    double num = 0, den = 0, sup = 0;
    for (const auto& x : grid) {
      Complex exact = signal_eval(signal, x);
      Complex approx = wsk_reconstruct_dilated(p, samples, x);
      num += std::norm(exact - approx);
      den += std::norm(exact);
      sup = std::max(sup, std::abs(exact - approx));
    }
    double l2_rel = den > 0 ? std::sqrt(num / den) : std::sqrt(num);

    Eigen::MatrixXd lj = Eigen::MatrixXd::Identity(dim, dim);
    for (int i = 0; i < p.level; ++i) lj = p.scheme.l_matrix() * lj;
    double interp = 0;
    int probe = std::min(2, p.radius);
    for (const auto& k : p.indices()) {
      bool near = true;
      for (auto ki : k) near = near && std::abs(ki) <= probe;
      if (!near) continue;
      Eigen::VectorXd xs = -(lj * p.gamma.point_ambient(k));
      interp = std::max(interp,
                        std::abs(wsk_reconstruct_dilated(p, samples, xs) - samples.at(k)));
    }

    std::printf("%-6d %-14.6e %-14.6e %-14.6e\n", p.radius, l2_rel, sup, interp);
    results.push_back(json{{"R", p.radius},
                           {"l2_rel_error", l2_rel},
                           {"sup_error", sup},
                           {"interp_max_abs_err", interp}});
  }

  json report{{"level", plan.level}, {"seed", opt.seed}, {"results", results}};
  if (!opt.out.empty()) write_text_file(opt.out, report.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

int cmd_report(Options& opt) {
  json doc = read_json_file(opt.in_path);
  if (doc.contains("wavelet_sets")) {
    std::cout << "MRA scene (" << doc.value("family", std::string("?")) << "): "
              << doc["wavelet_sets"].size() << " wavelet sets, q = "
              << doc["scheme"]["q"] << "\n";
    if (doc.contains("checks")) {
      const auto& c = doc["checks"];
      std::cout << "  partition " << c.value("partition", false)
                << ", congruence " << c.value("congruence", false)
                << ", refinement " << c.value("refinement", false)
                << ", gram " << c.value("gram", 0.0) << "\n";
    }
  } else if (doc.contains("omega")) {
    std::cout << doc.value("type", std::string("?")) << " scene, depth "
              << doc.value("depth", 0) << ", residual "
              << doc.value("residual_volume_float",
                           doc.value("residual_volume", std::string("?")) == "?" ? 0.0 : 0.0)
              << " (" << doc["omega"]["cells"].size() << " cells)\n";
  } else if (doc.contains("results")) {
    std::cout << "sampling experiment, level " << doc.value("level", 0) << "\n";
    for (const auto& r : doc["results"])
      std::cout << "  R=" << r["R"] << "  l2_rel=" << r["l2_rel_error"]
                << "  sup=" << r["sup_error"] << "  interp="
                << r["interp_max_abs_err"] << "\n";
  } else if (doc.contains("pass")) {
    std::cout << "verification report (" << doc.value("scene_type", std::string("?"))
              << "): " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  } else {
    std::cout << "unrecognized document with keys:";
    for (const auto& [k, v] : doc.items()) std::cout << " " << k;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter-group wavelet sets, SMRA multiwavelets, and sampling"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* construct = app.add_subcommand("construct", "build a scene and export it");
  construct->add_option("--method", opt.method, "mra | section5 | example31");
  construct->add_option("--family", opt.family, "I2:m | A3 | B3 | I2:mxA1");
  construct->add_option("--scheme", opt.scheme, "diagonal scales, e.g. diag:2,2");
  construct->add_option("--sides", opt.sides, "box side lengths, e.g. 1,1");
  construct->add_option("--depth", opt.depth, "recursion depth N");
  construct->add_option("--alpha-index", opt.alpha_index, "translating dual-basis index");
  construct->add_option("--a", opt.a, "planar example dilation parameter");
  construct->add_option("--m", opt.m, "planar example rotation order");
  construct->add_option("--gram-radius", opt.gram_radius, "gram check cutoff");
  construct->add_option("--out", opt.out, "scene JSON path");
  construct->add_option("--svg", opt.svg, "SVG path (2D scenes)");
  construct->add_option("--config", opt.config, "JSON config file (strict keys)");

  CLI::App* verify = app.add_subcommand("verify", "check a scene's defining properties");
  verify->add_option("--scene", opt.scene, "scene JSON path")->required();
  verify->add_option("--out", opt.out, "report JSON path (default: stdout)");
  verify->add_option("--seed", opt.seed, "Monte Carlo seed");
  verify->add_option("--samples", opt.samples, "Monte Carlo sample count");
  verify->add_option("--kmax", opt.kmax, "dilation power range");
  verify->add_option("--window", opt.window, "annulus window r_lo,r_hi");
  verify->add_option("--gram-radius", opt.gram_radius, "gram check cutoff");
  verify->add_option("--tol-translation", opt.tol_translation, "max tiling gap");
  verify->add_option("--tol-gram", opt.tol_gram, "max gram off-diagonal");
  verify->add_option("--min-mult-fraction", opt.min_mult_fraction,
                     "required multiplicity-1 fraction");
  verify->add_option("--config", opt.config, "JSON config file (strict keys)");

  CLI::App* sample = app.add_subcommand("sample", "run a WSK reconstruction experiment");
  sample->add_option("--plan", opt.plan_path, "sampling plan JSON")->required();
  sample->add_option("--signal", opt.signal_path, "signal JSON")->required();
  sample->add_option("--radii", opt.radii, "truncation radii, e.g. 8,16,32,64");
  sample->add_option("--grid", opt.grid, "evaluation grid points per axis");
  sample->add_option("--seed", opt.seed, "echoed into the report");
  sample->add_option("--out", opt.out, "report JSON path");

  CLI::App* report = app.add_subcommand("report", "summarize a coxwave JSON document");
  report->add_option("--in", opt.in_path, "document path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) {
      merge_config(opt, construct);
      return cmd_construct(opt);
    }
    if (verify->parsed()) {
      merge_config(opt, verify);
      return cmd_verify(opt);
    }
    if (sample->parsed()) return cmd_sample(opt);
    if (report->parsed()) return cmd_report(opt);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
