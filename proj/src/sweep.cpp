#include "mactin/sweep.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mactin/errors.hpp"

namespace mactin {

std::vector<ModTuple> reference_tuples() {
  return {{0, 8, 8}, {2, 6, 8}, {4, 4, 8}, {4, 2, 8}, {4, 0, 8}, {4, 0, 0}};
}

SweepSpec reference_sweep() {
  SweepSpec spec;
  spec.cfg = reference_config();
  spec.tuples = reference_tuples();
  spec.schemes = {Scheme::ProposedQamTin, Scheme::GaussianSic, Scheme::Orthogonal, Scheme::GaussianTin};
  return spec;
}

RatePoint proposed_rate_point(const ChannelConfig& cfg, const SignalingDesign& design, const ModTuple& tuple,
                              const EstimatorSettings& est, std::size_t point_index) {
  const auto seed = [&](std::uint64_t slot) {
    return stream_seed(est.seed, Scheme::ProposedQamTin, point_index, slot);
  };
  const auto x1 = InputSpec::discrete(design.lambda1, Role::User1);
  const auto x21 = InputSpec::discrete(design.lambda21, Role::User2Sub1);
  const auto x22 = InputSpec::discrete(design.lambda22, Role::User2Sub2);
  const MiDispersion u1 = estimate_mi_dispersion(cfg, x1, x21, est.samples, seed(0));
  const MiDispersion u21 = estimate_mi_dispersion(cfg, x21, x1, est.samples, seed(1));
  const MiDispersion u22 = estimate_mi_dispersion(cfg, x22, std::nullopt, est.samples, seed(2));
  RatePoint p = make_rate_point(Scheme::ProposedQamTin, cfg, u1, u21, u22);
  p.mod = tuple;
  p.samples = est.samples;
  p.seed = est.seed;
  return p;
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.cfg.validate();
  const EstimatorSettings est{spec.samples, spec.seed};
  SweepResult result;
  std::vector<Scheme> done;
  for (Scheme scheme : spec.schemes) {
    if (std::find(done.begin(), done.end(), scheme) != done.end()) continue;
    done.push_back(scheme);
    switch (scheme) {
      case Scheme::ProposedQamTin: {
        const int n1 = bit_levels(spec.cfg.snr1());
        const int n2 = bit_levels(spec.cfg.snr2());
        for (std::size_t i = 0; i < spec.tuples.size(); ++i) {
          const ModTuple& t = spec.tuples[i];
          try {
            const auto params = DetModelParams::make(n1, n2, t.m1, t.m21, t.m22);
            const auto design = build_design(spec.cfg, params, spec.exponent_mode);
            result.points.push_back(proposed_rate_point(spec.cfg, design, t, est, i));
          } catch (const std::exception& e) {
            result.errors.push_back({t, e.what()});
          }
        }
        break;
      }
      case Scheme::GaussianSic: {
        auto pts = benchmark_gaussian_sic(spec.cfg, est, spec.sic_grid);
        result.points.insert(result.points.end(), pts.begin(), pts.end());
        break;
      }
      case Scheme::Orthogonal:
        result.points.push_back(benchmark_orthogonal(spec.cfg, est));
        break;
      case Scheme::GaussianTin: {
        auto pts = benchmark_gaussian_tin(spec.cfg, est, spec.tin_power_fractions);
        result.points.insert(result.points.end(), pts.begin(), pts.end());
        break;
      }
    }
  }
  return result;
}

std::string_view csv_header() noexcept {
  return "scheme,m1,m21,m22,r1,r2,mi1,mi21,mi22,v1,v21,v22,stderr_mi1,stderr_mi21,stderr_mi22,samples,seed";
}

namespace {

void put_real(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  os << ',' << buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

void write_csv(std::ostream& os, std::span<const RatePoint> points) {
  os << csv_header() << '\n';
  for (const auto& p : points) {
    os << scheme_tag(p.scheme);
    if (p.mod)
      os << ',' << p.mod->m1 << ',' << p.mod->m21 << ',' << p.mod->m22;
    else
      os << ",,,";
    for (double v : {p.r1, p.r2, p.u1.mi, p.u21.mi, p.u22.mi, p.u1.dispersion, p.u21.dispersion,
                     p.u22.dispersion, p.u1.std_error, p.u21.std_error, p.u22.std_error})
      put_real(os, v);
    os << ',' << p.samples << ',' << p.seed << '\n';
  }
}

void emit_csv(std::span<const RatePoint> points, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(os, points);
  os.flush();
  if (!os) throw IoError("write to '" + path.string() + "' failed");
}

std::vector<RatePoint> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != csv_header()) throw ConfigError("CSV header mismatch");
  std::vector<RatePoint> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 17) throw ConfigError("CSV line " + std::to_string(lineno) + ": expected 17 fields");
    RatePoint p;
    const auto scheme = parse_scheme(cells[0]);
    if (!scheme) throw ConfigError("CSV line " + std::to_string(lineno) + ": unknown scheme");
    p.scheme = *scheme;
    try {
      if (!cells[1].empty()) p.mod = ModTuple{std::stoi(cells[1]), std::stoi(cells[2]), std::stoi(cells[3])};
      double* dst[] = {&p.r1, &p.r2, &p.u1.mi, &p.u21.mi, &p.u22.mi, &p.u1.dispersion, &p.u21.dispersion,
                       &p.u22.dispersion, &p.u1.std_error, &p.u21.std_error, &p.u22.std_error};
      for (std::size_t k = 0; k < 11; ++k) *dst[k] = std::stod(cells[4 + k]);
      p.samples = std::stoull(cells[15]);
      p.seed = std::stoull(cells[16]);
    } catch (const std::logic_error&) {
      throw ConfigError("CSV line " + std::to_string(lineno) + ": malformed number");
    }
    p.u1.samples = p.u21.samples = p.u22.samples = p.samples;
    out.push_back(p);
  }
  return out;
}

namespace {

// Standard error of sqrt(S) given the standard error of S.
double sqrt_error(double s, double s_err) { return s > 0.0 ? s_err / (2.0 * std::sqrt(s)) : 0.0; }

}  // namespace

RateErrors rate_std_errors(const RatePoint& p, const ChannelConfig& cfg) {
  RateErrors e;
  const auto n1 = static_cast<double>(cfg.blocklength1);
  const auto n2 = static_cast<double>(cfg.blocklength2);
  const double tail = n2 - n1;
  if (p.r1 > 0.0) {
    const double pen = q_inv(cfg.eps1) / std::sqrt(n1) * sqrt_error(p.u1.dispersion, p.u1.dispersion_std_error);
    e.r1 = std::hypot(p.u1.std_error, pen);
  }
  if (p.r2 > 0.0) {
    const double mean_err = std::hypot(n1 * p.u21.std_error, tail * p.u22.std_error) / n2;
    const double s = n1 * p.u21.dispersion + tail * p.u22.dispersion;
    const double s_err = std::hypot(n1 * p.u21.dispersion_std_error, tail * p.u22.dispersion_std_error);
    const double pen = q_inv(cfg.eps2) / n2 * sqrt_error(s, s_err);
    e.r2 = std::hypot(mean_err, pen);
  }
  return e;
}

bool dominated_by(const RatePoint& p, const RatePoint& q, const ChannelConfig& cfg, double k) {
  const auto ep = rate_std_errors(p, cfg);
  const auto eq = rate_std_errors(q, cfg);
  return q.r1 > p.r1 + k * std::hypot(ep.r1, eq.r1) && q.r2 > p.r2 + k * std::hypot(ep.r2, eq.r2);
}

bool inside_sic_region(const RatePoint& p, std::span<const RatePoint> sic, const ChannelConfig& cfg, double k) {
  if (sic.empty()) throw DomainError("inside_sic_region: empty SIC benchmark");
  const RatePoint& a = sic.front();  // user 1 decoded first: smaller r1, larger r2
  const RatePoint& b = sic.back();
  const auto ep = rate_std_errors(p, cfg);
  const auto ea = rate_std_errors(a, cfg);
  const auto eb = rate_std_errors(b, cfg);
  const double x = std::max(0.0, p.r1 - k * std::hypot(ep.r1, std::max(ea.r1, eb.r1)));
  const double y = std::max(0.0, p.r2 - k * std::hypot(ep.r2, std::max(ea.r2, eb.r2)));
  const double r1_max = std::max(a.r1, b.r1);
  const double r2_max = std::max(a.r2, b.r2);
  if (x > r1_max || y > r2_max) return false;
  // Below the line through the corners (a on the upper left, b on the lower right).
  const double cross = (b.r1 - a.r1) * (y - a.r2) - (b.r2 - a.r2) * (x - a.r1);
  return cross <= 0.0;
}

RatePoint sic_point_at_r1(std::span<const RatePoint> sic, double r1) {
  if (sic.empty()) throw DomainError("sic_point_at_r1: empty SIC benchmark");
  const RatePoint& a = sic.front();
  const RatePoint& b = sic.back();
  double w = 1.0;  // weight on corner a
  if (b.r1 != a.r1) w = std::clamp((b.r1 - r1) / (b.r1 - a.r1), 0.0, 1.0);
  const auto mix = [w](double u, double v) { return w * u + (1.0 - w) * v; };
  const auto mix_md = [&](const MiDispersion& u, const MiDispersion& v) {
    MiDispersion m;
    m.mi = mix(u.mi, v.mi);
    m.dispersion = mix(u.dispersion, v.dispersion);
    m.std_error = mix(u.std_error, v.std_error);
    m.dispersion_std_error = mix(u.dispersion_std_error, v.dispersion_std_error);
    m.samples = std::max(u.samples, v.samples);
    return m;
  };
  RatePoint out = a;
  out.r1 = mix(a.r1, b.r1);
  out.r2 = mix(a.r2, b.r2);
  out.u1 = mix_md(a.u1, b.u1);
  out.u21 = mix_md(a.u21, b.u21);
  out.u22 = mix_md(a.u22, b.u22);
  return out;
}

std::pair<double, double> user2_dispersion(const RatePoint& p, const ChannelConfig& cfg) {
  const auto n1 = static_cast<double>(cfg.blocklength1);
  const auto n2 = static_cast<double>(cfg.blocklength2);
  const double v = (n1 * p.u21.dispersion + (n2 - n1) * p.u22.dispersion) / n2;
  const double err = std::hypot(n1 * p.u21.dispersion_std_error, (n2 - n1) * p.u22.dispersion_std_error) / n2;
  return {v, err};
}

}  // namespace mactin
