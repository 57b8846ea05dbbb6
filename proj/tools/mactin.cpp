// mactin: rate regions of the two-user uplink with heterogeneous blocklengths.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mactin/config.hpp"
#include "mactin/density.hpp"
#include "mactin/design.hpp"
#include "mactin/detmodel.hpp"
#include "mactin/errors.hpp"
#include "mactin/fbl.hpp"
#include "mactin/sweep.hpp"

namespace {

enum Exit { kOk = 0, kDomain = 1, kUsage = 2 };

// Flags shared by the subcommands that read a run config. Values are kept as
// text and pushed through apply_setting so that file and flag parsing agree.
struct CommonFlags {
  std::string config;
  std::map<std::string, std::string> overrides;
  bool quiet = false;

  void add_to(CLI::App* app, bool with_out) {
    app->add_option("--config", config, "key = value config file (defaults: reference experiment)");
    add_setting(app, "--seed", "seed", "root seed; all randomness derives from it");
    add_setting(app, "--samples", "samples", "Monte-Carlo samples per estimate");
    add_setting(app, "--exponent-mode", "exponent_mode", "exact-log | ceiled");
    if (with_out) add_setting(app, "--out", "out", "output CSV path");
    app->add_flag("-q,--quiet", quiet, "only print errors");
  }

  void add_setting(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(
        flag, [this, key](const std::string& v) { overrides[key] = v; }, help);
  }

  mactin::RunConfig load() const {
    mactin::RunConfig cfg;
    if (!config.empty()) cfg = mactin::load_run_config(config);
    for (const auto& [k, v] : overrides) mactin::apply_setting(cfg, k, v);
    if (quiet) cfg.verbosity = 0;
    return cfg;
  }
};

struct TupleFlags {
  int m1 = 0;
  int m21 = 0;
  std::optional<int> m22;

  void add_to(CLI::App* app) {
    app->add_option("--m1", m1, "user 1 rate / QAM order")->required();
    app->add_option("--m21", m21, "user 2 overlapping rate / QAM order")->required();
    app->add_option("--m22", m22, "user 2 clean rate / QAM order (default n2)");
  }
};

std::string tuple_str(const mactin::ModTuple& t) {
  return "(" + std::to_string(t.m1) + "," + std::to_string(t.m21) + "," + std::to_string(t.m22) + ")";
}

void print_matrix(const char* name, const mactin::BinaryMatrix& m) {
  std::printf("%s (%zu x %zu)\n", name, m.rows(), m.cols());
  if (m.cols() == 0) {
    std::printf("  (empty)\n");
    return;
  }
  std::istringstream rows(m.to_string());
  for (std::string line; std::getline(rows, line);) std::printf("  %s\n", line.c_str());
}

// Pareto-optimal points of one scheme, in increasing r1.
std::vector<mactin::RatePoint> frontier(std::vector<mactin::RatePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.r1 != b.r1 ? a.r1 > b.r1 : a.r2 > b.r2;
  });
  std::vector<mactin::RatePoint> out;
  double best_r2 = -1.0;
  for (const auto& p : pts)
    if (p.r2 > best_r2) {
      out.push_back(p);
      best_r2 = p.r2;
    }
  std::reverse(out.begin(), out.end());
  return out;
}

int cmd_region(const CommonFlags& flags, const std::string& schemes, const std::string& tuples) {
  auto cfg = flags.load();
  if (!schemes.empty()) mactin::apply_setting(cfg, "schemes", schemes);
  if (!tuples.empty()) mactin::apply_setting(cfg, "tuples", tuples);
  const auto spec = cfg.sweep();
  const auto result = mactin::run_sweep(spec);
  mactin::emit_csv(result.points, cfg.out);

  for (const auto& e : result.errors)
    std::fprintf(stderr, "tuple %s skipped: %s\n", tuple_str(e.tuple).c_str(), e.message.c_str());

  if (cfg.verbosity > 0) {
    std::printf("SNR (%.4g, %.4g) dB, N (%ld, %ld), eps (%.3g, %.3g), %zu samples, seed %llu\n", cfg.snr1_db,
                cfg.snr2_db, cfg.blocklength1, cfg.blocklength2, cfg.eps1, cfg.eps2, cfg.samples,
                static_cast<unsigned long long>(cfg.seed));
    for (const auto scheme : spec.schemes) {
      std::vector<mactin::RatePoint> pts;
      for (const auto& p : result.points)
        if (p.scheme == scheme) pts.push_back(p);
      const auto front = frontier(pts);
      std::printf("%-17s %zu points, %zu on the frontier\n", std::string(mactin::scheme_tag(scheme)).c_str(),
                  pts.size(), front.size());
      for (std::size_t i = 0; i < front.size(); ++i) {
        // Long frontiers (the SIC segment) are shown by their ends.
        if (front.size() > 8 && i == 3) {
          std::printf("    ...\n");
          i = front.size() - 4;
          continue;
        }
        const auto& p = front[i];
        std::printf("    r1 = %.4f  r2 = %.4f%s\n", p.r1, p.r2, p.mod ? ("  " + tuple_str(*p.mod)).c_str() : "");
      }
    }
    if (std::find(spec.schemes.begin(), spec.schemes.end(), mactin::Scheme::GaussianSic) != spec.schemes.end())
      std::printf("gaussian-sic assumes perfect cancellation (outer bound)\n");
    std::printf("wrote %zu rows to %s\n", result.points.size(), cfg.out.c_str());
  }
  return result.errors.empty() ? kOk : kDomain;
}

int cmd_detmodel(int n1, int n2, const TupleFlags& t) {
  const int m22 = t.m22.value_or(n2);
  if (!mactin::in_det_region(n1, n2, t.m1, t.m21, m22)) {
    std::fprintf(stderr,
                 "(m1, m21, m22) = (%d, %d, %d) is outside the deterministic region for (n1, n2) = (%d, %d): "
                 "need m1 + m21 <= %d, weak user's rate <= %d, m22 <= %d\n",
                 t.m1, t.m21, m22, n1, n2, std::max(n1, n2), std::min(n1, n2), n2);
    return kDomain;
  }
  const auto p = mactin::DetModelParams::make(n1, n2, t.m1, t.m21, m22);
  const auto g = mactin::build_generators(p);
  std::printf("strong user %d, q = %d, split top/bottom = %d/%d%s\n", static_cast<int>(p.strong), p.q,
              p.strong_top, p.strong_bottom, p.is_boundary() ? ", boundary point" : "");
  print_matrix("G1", g.g1);
  print_matrix("G21", g.g21);
  print_matrix("G22", g.g22);
  const auto mi = mactin::det_tin_mi(p, g);
  std::printf("I = (%d, %d, %d)\n", mi.i1, mi.i21, mi.i22);
  return kOk;
}

int cmd_constellation(const CommonFlags& flags, const TupleFlags& t, const std::string& export_prefix) {
  const auto cfg = flags.load();
  const auto ch = cfg.channel();
  const int n1 = mactin::bit_levels(ch.snr1());
  const int n2 = mactin::bit_levels(ch.snr2());
  const int m22 = t.m22.value_or(n2);
  if (!mactin::in_det_region(n1, n2, t.m1, t.m21, m22))
    throw mactin::DomainError("tuple " + tuple_str({t.m1, t.m21, m22}) + " is outside the deterministic region for " +
                              "(n1, n2) = (" + std::to_string(n1) + ", " + std::to_string(n2) + ")");
  const auto p = mactin::DetModelParams::make(n1, n2, t.m1, t.m21, m22);
  const auto d = mactin::build_design(ch, p, cfg.exponent_mode);

  std::printf("n = (%d, %d), strong user %d, exponent mode %s\n", n1, n2, static_cast<int>(d.strong),
              std::string(mactin::exponent_mode_name(cfg.exponent_mode)).c_str());
  std::printf("eta = %.6g  eta' = %.6g  E_strong = %.6g  E_weak = %.6g  weak exponent = %.6g\n", d.eta,
              d.eta_prime, d.strong_energy, d.weak_energy, d.weak_exponent);
  const auto report = [](const char* name, const mactin::Constellation& c, double budget) {
    std::printf("%-8s %5zu points  energy %.6f (budget %.6g)  d_min %.6g\n", name, c.size(), c.mean_energy(), budget,
                c.min_distance());
  };
  report("lambda1", d.lambda1, ch.p1);
  report("lambda21", d.lambda21, ch.p2);
  report("lambda22", d.lambda22, ch.p2);
  const double dmin = mactin::min_distance_check(d, ch);
  const bool ok = dmin >= std::sqrt(3.0) - 1e-6;
  std::printf("received d_min = %.6f  (>= sqrt(3): %s)%s\n", dmin, ok ? "pass" : "fail",
              p.is_boundary() ? "" : "  [not a boundary point]");

  if (!export_prefix.empty()) {
    for (const auto& [suffix, c] : {std::pair{"lambda1", &d.lambda1}, std::pair{"lambda21", &d.lambda21},
                                    std::pair{"lambda22", &d.lambda22}}) {
      const std::string path = export_prefix + "_" + suffix + ".csv";
      std::ofstream os(path);
      if (!os) throw mactin::IoError("cannot open " + path + " for writing");
      mactin::write_points_csv(os, *c);
      if (!os) throw mactin::IoError("failed writing " + path);
      std::printf("wrote %s\n", path.c_str());
    }
  }
  return kOk;
}

void print_stats(const char* name, const mactin::MiDispersion& s) {
  std::printf("%-4s mi = %.6f +- %.2g bits  V = %.6f +- %.2g bits^2\n", name, s.mi, s.std_error, s.dispersion,
              s.dispersion_std_error);
}

int cmd_estimate(const CommonFlags& flags, const TupleFlags& t, const std::string& scheme_tag) {
  const auto cfg = flags.load();
  const auto ch = cfg.channel();
  const mactin::EstimatorSettings est{cfg.samples, cfg.seed};
  const auto scheme = mactin::parse_scheme(scheme_tag);
  if (!scheme) throw mactin::ConfigError("unknown scheme '" + scheme_tag + "'");

  std::vector<mactin::RatePoint> pts;
  switch (*scheme) {
    case mactin::Scheme::ProposedQamTin: {
      const int n1 = mactin::bit_levels(ch.snr1());
      const int n2 = mactin::bit_levels(ch.snr2());
      const mactin::ModTuple tuple{t.m1, t.m21, t.m22.value_or(n2)};
      const auto p = mactin::DetModelParams::make(n1, n2, tuple.m1, tuple.m21, tuple.m22);
      pts.push_back(mactin::proposed_rate_point(ch, mactin::build_design(ch, p, cfg.exponent_mode), tuple, est, 0));
      break;
    }
    case mactin::Scheme::GaussianSic: {
      const auto sic = mactin::benchmark_gaussian_sic(ch, est, 2);
      pts = {sic.front(), sic.back()};
      break;
    }
    case mactin::Scheme::Orthogonal:
      pts.push_back(mactin::benchmark_orthogonal(ch, est));
      break;
    case mactin::Scheme::GaussianTin:
      pts = mactin::benchmark_gaussian_tin(ch, est, cfg.tin_power_fractions);
      break;
  }
  for (const auto& p : pts) {
    std::printf("%s%s\n", std::string(mactin::scheme_tag(p.scheme)).c_str(),
                p.mod ? (" " + tuple_str(*p.mod)).c_str() : "");
    print_stats("u1", p.u1);
    print_stats("u21", p.u21);
    print_stats("u22", p.u22);
    const auto err = mactin::rate_std_errors(p, ch);
    std::printf("r1 = %.6f +- %.2g  r2 = %.6f +- %.2g\n", p.r1, err.r1, p.r2, err.r2);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-blocklength rate regions of a two-user uplink with QAM and treating interference as noise"};
  app.require_subcommand(1);

  CommonFlags region_flags;
  std::string schemes, tuples;
  auto* region = app.add_subcommand("region", "sweep design points and benchmarks, write a CSV");
  region_flags.add_to(region, true);
  region->add_option("--schemes", schemes, "comma-separated scheme tags");
  region->add_option("--tuples", tuples, "design points, e.g. \"0,8,8;4,4,8\"");

  int n1 = 0, n2 = 0;
  TupleFlags det_tuple;
  auto* det = app.add_subcommand("detmodel", "generator matrices and rank-based MI of a deterministic design");
  det->add_option("--n1", n1, "user 1 bit-levels")->required()->check(CLI::NonNegativeNumber);
  det->add_option("--n2", n2, "user 2 bit-levels")->required()->check(CLI::NonNegativeNumber);
  det_tuple.add_to(det);

  CommonFlags cons_flags;
  TupleFlags cons_tuple;
  std::string export_prefix;
  auto* cons = app.add_subcommand("constellation", "build the QAM constellations of a design point");
  cons_flags.add_to(cons, false);
  cons_tuple.add_to(cons);
  cons->add_option("--export", export_prefix, "write <prefix>_lambda{1,21,22}.csv");

  CommonFlags est_flags;
  TupleFlags est_tuple;
  std::string est_scheme = "proposed-qam-tin";
  auto* estimate = app.add_subcommand("estimate", "MI/dispersion and rates of a single point");
  est_flags.add_to(estimate, false);
  estimate->add_option("--m1", est_tuple.m1, "user 1 rate / QAM order");
  estimate->add_option("--m21", est_tuple.m21, "user 2 overlapping rate / QAM order");
  estimate->add_option("--m22", est_tuple.m22, "user 2 clean rate / QAM order (default n2)");
  estimate->add_option("--scheme", est_scheme, "scheme tag");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*region) return cmd_region(region_flags, schemes, tuples);
    if (*det) return cmd_detmodel(n1, n2, det_tuple);
    if (*cons) return cmd_constellation(cons_flags, cons_tuple, export_prefix);
    if (*estimate) return cmd_estimate(est_flags, est_tuple, est_scheme);
  } catch (const mactin::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kUsage;
  } catch (const mactin::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kUsage;
  } catch (const mactin::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kDomain;
  }
  return kOk;
}
