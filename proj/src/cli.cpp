#include "hessplus/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hessplus/critical.hpp"
#include "hessplus/groundtruth.hpp"
#include "hessplus/hess_region.hpp"
#include "hessplus/levelset.hpp"
#include "hessplus/parse.hpp"
#include "hessplus/report.hpp"
#include "hessplus/version.hpp"

namespace hessplus {

namespace {

using Clock = std::chrono::steady_clock;

Box parse_box_flag(const std::string& text) {
  std::istringstream is(text);
  double v[4];
  char sep = ',';
  for (int i = 0; i < 4; ++i) {
    if (i && !(is >> sep && sep == ',')) throw precondition_error("--box expects xmin,xmax,ymin,ymax");
    if (!(is >> v[i])) throw precondition_error("--box expects xmin,xmax,ymin,ymax");
  }
  std::string rest;
  if (is >> rest) throw precondition_error("--box expects exactly four numbers");
  const Box box{v[0], v[1], v[2], v[3]};
  if (!(box.xmin < box.xmax) || !(box.ymin < box.ymax))
    throw precondition_error("--box must satisfy xmin < xmax and ymin < ymax");
  return box;
}

struct CommonFlags {
  std::string box_text;
  int resolution = 600;
  std::uint64_t seed = 0;
  double tol = 1e-2;
  std::string out_path;
  std::string format = "json";
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonFlags* flags, bool with_format) {
  cmd->add_option("--box", flags->box_text, "analysis window as xmin,xmax,ymin,ymax");
  cmd->add_option("--res", flags->resolution, "grid resolution per axis")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", flags->seed, "random seed echoed in reports");
  cmd->add_option("--tol", flags->tol, "tolerance for bracketing searches");
  cmd->add_option("--out", flags->out_path, "write the document to this path");
  if (with_format)
    cmd->add_option("--format", flags->format, "output format")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
  cmd->add_flag("--timings", flags->timings, "include wall-clock stage timings");
}

Box resolve_box(const CommonFlags& flags, const ParsedField& parsed) {
  if (!flags.box_text.empty()) return parse_box_flag(flags.box_text);
  return default_family_box(parsed.axis_parameter);
}

void emit(const CommonFlags& flags, const std::string& document) {
  if (flags.out_path.empty()) {
    std::cout << document;
    return;
  }
  write_text_atomic(flags.out_path, document);
}

OrderedJson report_header(const std::string& input, const CommonFlags& flags) {
  OrderedJson j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["input"] = input;
  j["seed"] = flags.seed;
  return j;
}

// Stage timings keyed by name, reported only with --timings so default
// documents stay byte-identical across runs.
class StageClock {
 public:
  void record(const std::string& name, Clock::time_point start) {
    entries_.push_back({name, std::chrono::duration<double, std::milli>(Clock::now() - start).count()});
  }
  OrderedJson json() const {
    OrderedJson j;
    for (const auto& [name, ms] : entries_) j[name] = ms;
    return j;
  }

 private:
  std::vector<std::pair<std::string, double>> entries_;
};

int cmd_analyze(const std::string& spec_text, const CommonFlags& flags) {
  StageClock stages;

  auto t0 = Clock::now();
  const ParsedField parsed = parse_field_spec(spec_text);
  const Box box = resolve_box(flags, parsed);
  stages.record("parse", t0);

  OrderedJson j = report_header(parsed.echo, flags);
  j["box"] = json_box(box);
  j["resolution"] = flags.resolution;

  t0 = Clock::now();
  const CriticalSet cs = find_critical_points(parsed.field, box);
  stages.record("critical-points", t0);
  j["critical_set"] = json_critical_set(cs);
  j["critical_values"] = json_point(cs.critical_values);
  if (cs.points.empty())
    j["mu_max"] = nullptr;
  else
    j["mu_max"] = mu_max(cs);

  t0 = Clock::now();
  const double spacing = std::max(box.width(), box.height()) / 400.0;
  const auto complement = scan_complement(parsed.field, box, spacing);
  OrderedJson comp;
  comp["count"] = complement.size();
  comp["sample_spacing"] = spacing;
  if (!complement.empty()) {
    Box bbox{complement[0][0], complement[0][0], complement[0][1], complement[0][1]};
    for (const auto& p : complement) {
      bbox.xmin = std::min(bbox.xmin, p[0]);
      bbox.xmax = std::max(bbox.xmax, p[0]);
      bbox.ymin = std::min(bbox.ymin, p[1]);
      bbox.ymax = std::max(bbox.ymax, p[1]);
    }
    comp["bbox"] = json_box(bbox);
  } else {
    comp["bbox"] = nullptr;
  }
  j["complement"] = comp;

  std::optional<HMaxEstimate> hm;
  if (!complement.empty()) hm = h_max_estimate(parsed.field, complement);
  if (hm)
    j["h_max"] = json_h_max(*hm);
  else
    j["h_max"] = nullptr;
  stages.record("complement-scan", t0);

  t0 = Clock::now();
  OrderedJson cert_json = nullptr;
  try {
    if (parsed.family) {
      cert_json = json_certificate(certify_complement_bounded(*parsed.family));
    } else if (parsed.poly) {
      if (const auto form = radial_decompose(*parsed.poly))
        cert_json = json_certificate(certify_complement_bounded(*form, parsed.echo));
      else
        cert_json = OrderedJson{
            {"status", "unavailable"},
            {"note", "polynomial is not a radial profile plus low-degree remainder"}};
    }
  } catch (const std::exception& e) {
    cert_json = OrderedJson{{"status", "unavailable"}, {"note", e.what()}};
  }
  j["certificate"] = cert_json;
  stages.record("certificate", t0);

  t0 = Clock::now();
  double base = 0.0;
  if (!cs.points.empty()) base = std::max(base, mu_max(cs));
  if (hm) base = std::max(base, hm->value);
  OrderedJson levels = OrderedJson::array();
  for (const double offset : {1.0, 2.0, 5.0}) {
    const double c = base + offset;
    const LevelCurve curve = extract_level(parsed.field, c, box, flags.resolution);
    OrderedJson jl;
    jl["level"] = c;
    jl["curve"] = json_level_curve_meta(curve);
    jl["regularity"] = json_regularity(is_regular_level(parsed.field, curve, cs));
    jl["convexity"] = json_convexity(convexity_via_D(parsed.field, curve));
    levels.push_back(jl);
  }
  j["levels"] = levels;
  stages.record("levels", t0);

  if (flags.timings) j["timings"] = stages.json();
  emit(flags, j.dump(2) + "\n");
  return 0;
}

int cmd_level(const std::string& spec_text, double level, const CommonFlags& flags) {
  const ParsedField parsed = parse_field_spec(spec_text);
  const Box box = resolve_box(flags, parsed);

  const LevelCurve curve = extract_level(parsed.field, level, box, flags.resolution);
  if (curve.components.empty())
    std::cerr << "warning: level " << level << " has no curve inside the box\n";

  const CriticalSet cs = find_critical_points(parsed.field, box);
  const RegularityVerdict reg = is_regular_level(parsed.field, curve, cs);
  const ConvexityReport conv = convexity_via_D(parsed.field, curve);

  std::ostringstream summary;
  summary << "components: " << curve.components.size() << ", regular: "
          << (reg.regular ? "yes" : "no");
  for (std::size_t i = 0; i < conv.components.size(); ++i) {
    const auto& c = conv.components[i];
    summary << ", component " << i << ": " << to_string(c.d_sign);
    if (c.geometric_convex)
      summary << " / " << (*c.geometric_convex ? "convex" : "nonconvex");
  }
  summary << "\n";

  std::string document;
  if (flags.format == "csv") {
    document = csv_for_curve(curve);
  } else if (flags.format == "svg") {
    document = svg_for_curve(curve);
  } else {
    OrderedJson j = report_header(parsed.echo, flags);
    j["level"] = level;
    j["box"] = json_box(box);
    j["resolution"] = flags.resolution;
    j["curve"] = json_level_curve_meta(curve);
    j["regularity"] = json_regularity(reg);
    j["convexity"] = json_convexity(conv);
    document = j.dump(2) + "\n";
  }

  if (flags.out_path.empty()) {
    std::cout << document;
    std::cerr << summary.str();
  } else {
    write_text_atomic(flags.out_path, document);
    std::cout << summary.str();
  }
  return 0;
}

int cmd_critical(const std::string& spec_text, const CommonFlags& flags) {
  const ParsedField parsed = parse_field_spec(spec_text);
  const Box box = resolve_box(flags, parsed);
  const CriticalSet cs = find_critical_points(parsed.field, box);

  OrderedJson j = report_header(parsed.echo, flags);
  j["box"] = json_box(box);
  j["critical_set"] = json_critical_set(cs);
  if (cs.points.empty())
    j["mu_max"] = nullptr;
  else
    j["mu_max"] = mu_max(cs);
  emit(flags, j.dump(2) + "\n");
  return 0;
}

int cmd_certify(const std::string& spec_text, const CommonFlags& flags) {
  const ParsedField parsed = parse_field_spec(spec_text);

  BoundednessCertificate cert;
  if (parsed.family) {
    cert = certify_complement_bounded(*parsed.family);
  } else if (parsed.poly) {
    const auto form = radial_decompose(*parsed.poly);
    if (!form)
      throw precondition_error(
          "polynomial is not a radial profile plus low-degree remainder; cannot certify");
    cert = certify_complement_bounded(*form, parsed.echo);
  } else {
    throw precondition_error("certification needs a family or polynomial input");
  }

  OrderedJson j = report_header(parsed.echo, flags);
  j["certificate"] = json_certificate(cert);
  emit(flags, j.dump(2) + "\n");
  return cert.status == "certified" ? 0 : 1;
}

int cmd_first_convex(const std::string& spec_text, double lo, double hi,
                     const CommonFlags& flags) {
  const ParsedField parsed = parse_field_spec(spec_text);
  const Box box = resolve_box(flags, parsed);

  const FirstConvexLevel res =
      first_convex_level(parsed.field, lo, hi, flags.tol, box, flags.resolution);

  OrderedJson j = report_header(parsed.echo, flags);
  j["box"] = json_box(box);
  j["resolution"] = flags.resolution;
  j["first_convex"] = json_first_convex(res);
  emit(flags, j.dump(2) + "\n");
  return 0;
}

int cmd_verify(const CommonFlags& flags) {
  const auto results = run_ground_truth_suite();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-26s %8.1f ms  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.elapsed_ms,
                r.pass ? r.detail.c_str() : r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d/%d checks passed\n", static_cast<int>(results.size()) - failed,
              static_cast<int>(results.size()));
  if (!flags.out_path.empty())
    write_text_atomic(flags.out_path, ground_truth_matrix(results).dump(2) + "\n");
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Analyze where a planar field's Hessian is positive definite: critical sets, "
               "complement certificates, level-curve regularity and convexity.",
               std::string(kToolName)};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  std::string spec_text;
  double level_c = 0.0;
  double lo = 0.5, hi = 100.0;

  CommonFlags fa, fl, fc, fz, ff, fv;

  CLI::App* analyze = app.add_subcommand("analyze", "full report for a field");
  analyze->add_option("spec", spec_text, "field expression")->required();
  add_common(analyze, &fa, false);

  CLI::App* level = app.add_subcommand("level", "extract one level curve and judge it");
  level->add_option("spec", spec_text, "field expression")->required();
  level->add_option("-c,--level", level_c, "level value")->required();
  add_common(level, &fl, true);

  CLI::App* critical = app.add_subcommand("critical", "critical points and values");
  critical->add_option("spec", spec_text, "field expression")->required();
  add_common(critical, &fc, false);

  CLI::App* certify = app.add_subcommand("certify", "complement boundedness certificate");
  certify->add_option("spec", spec_text, "family or polynomial expression")->required();
  add_common(certify, &fz, false);

  CLI::App* first = app.add_subcommand("first-convex", "bracket the first convex level");
  first->add_option("spec", spec_text, "field expression")->required();
  first->add_option("--lo", lo, "bracket low end (not convex)");
  first->add_option("--hi", hi, "bracket high end (convex)");
  add_common(first, &ff, false);

  CLI::App* verify = app.add_subcommand("verify-paper", "run the built-in ground-truth suite");
  verify->add_option("--out", fv.out_path, "write the JSON matrix to this path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string stage = "setup";
  try {
    if (analyze->parsed()) {
      stage = "analyze";
      return cmd_analyze(spec_text, fa);
    }
    if (level->parsed()) {
      stage = "level";
      return cmd_level(spec_text, level_c, fl);
    }
    if (critical->parsed()) {
      stage = "critical";
      return cmd_critical(spec_text, fc);
    }
    if (certify->parsed()) {
      stage = "certify";
      return cmd_certify(spec_text, fz);
    }
    if (first->parsed()) {
      stage = "first-convex";
      return cmd_first_convex(spec_text, lo, hi, ff);
    }
    if (verify->parsed()) {
      stage = "verify";
      return cmd_verify(fv);
    }
  } catch (const parse_error& e) {
    std::cerr << caret_diagnostic(spec_text, e) << "\n";
    return 2;
  } catch (const construction_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error in stage '" << stage << "': " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace hessplus
