#include "mactin/config.hpp"

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "mactin/errors.hpp"

namespace mactin {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(std::string_view key, std::string_view v) {
  const std::string s(v);
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
    throw ConfigError("'" + std::string(key) + "': expected a number, got '" + s + "'");
  return x;
}

template <class Int>
Int to_int(std::string_view key, std::string_view v) {
  Int x{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError("'" + std::string(key) + "': expected an integer, got '" + std::string(v) + "'");
  return x;
}

}  // namespace

ChannelConfig RunConfig::channel() const {
  return ChannelConfig::from_snr_db(snr1_db, snr2_db, blocklength1, blocklength2, eps1, eps2, p1, p2);
}

SweepSpec RunConfig::sweep() const {
  SweepSpec spec;
  spec.cfg = channel();
  spec.tuples = tuples;
  spec.samples = samples;
  spec.seed = seed;
  spec.schemes = schemes;
  spec.exponent_mode = exponent_mode;
  spec.sic_grid = sic_grid;
  spec.tin_power_fractions = tin_power_fractions;
  return spec;
}

std::vector<ModTuple> parse_tuples(std::string_view text) {
  std::vector<ModTuple> out;
  if (trim(text).empty()) return out;
  for (auto item : split(text, ';')) {
    const auto parts = split(item, ',');
    if (parts.size() != 3) throw ConfigError("tuple '" + std::string(item) + "' needs three integers m1,m21,m22");
    out.push_back({to_int<int>("tuples", parts[0]), to_int<int>("tuples", parts[1]), to_int<int>("tuples", parts[2])});
  }
  return out;
}

std::vector<Scheme> parse_schemes(std::string_view text) {
  std::vector<Scheme> out;
  for (auto item : split(text, ',')) {
    const auto s = parse_scheme(item);
    if (!s) throw ConfigError("unknown scheme '" + std::string(item) + "'");
    out.push_back(*s);
  }
  return out;
}

ExponentMode parse_exponent_mode(std::string_view text) {
  if (text == "exact-log") return ExponentMode::ExactLog;
  if (text == "ceiled") return ExponentMode::Ceiled;
  throw ConfigError("exponent mode must be 'exact-log' or 'ceiled', got '" + std::string(text) + "'");
}

std::string_view exponent_mode_name(ExponentMode m) noexcept {
  return m == ExponentMode::ExactLog ? "exact-log" : "ceiled";
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view raw) {
  const auto value = trim(raw);
  if (key == "snr1_db") cfg.snr1_db = to_double(key, value);
  else if (key == "snr2_db") cfg.snr2_db = to_double(key, value);
  else if (key == "p1") cfg.p1 = to_double(key, value);
  else if (key == "p2") cfg.p2 = to_double(key, value);
  else if (key == "blocklength1") cfg.blocklength1 = to_int<long>(key, value);
  else if (key == "blocklength2") cfg.blocklength2 = to_int<long>(key, value);
  else if (key == "eps1") cfg.eps1 = to_double(key, value);
  else if (key == "eps2") cfg.eps2 = to_double(key, value);
  else if (key == "tuples") cfg.tuples = parse_tuples(value);
  else if (key == "samples") cfg.samples = to_int<std::size_t>(key, value);
  else if (key == "seed") cfg.seed = to_int<std::uint64_t>(key, value);
  else if (key == "schemes") cfg.schemes = parse_schemes(value);
  else if (key == "exponent_mode") cfg.exponent_mode = parse_exponent_mode(value);
  else if (key == "sic_grid") cfg.sic_grid = to_int<std::size_t>(key, value);
  else if (key == "tin_power_fractions") {
    cfg.tin_power_fractions.clear();
    for (auto v : split(value, ',')) cfg.tin_power_fractions.push_back(to_double(key, v));
  } else if (key == "out") cfg.out = std::string(value);
  else if (key == "verbosity") cfg.verbosity = to_int<int>(key, value);
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

RunConfig parse_run_config(std::istream& is, const std::string& origin) {
  RunConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    try {
      apply_setting(cfg, trim(view.substr(0, eq)), view.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file '" + path.string() + "'");
  return parse_run_config(is, path.string());
}

std::string format_run_config(const RunConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "snr1_db = " << cfg.snr1_db << "\nsnr2_db = " << cfg.snr2_db << "\np1 = " << cfg.p1
     << "\np2 = " << cfg.p2 << "\nblocklength1 = " << cfg.blocklength1
     << "\nblocklength2 = " << cfg.blocklength2 << "\neps1 = " << cfg.eps1 << "\neps2 = " << cfg.eps2
     << "\ntuples = ";
  for (std::size_t i = 0; i < cfg.tuples.size(); ++i)
    os << (i ? ";" : "") << cfg.tuples[i].m1 << ',' << cfg.tuples[i].m21 << ',' << cfg.tuples[i].m22;
  os << "\nsamples = " << cfg.samples << "\nseed = " << cfg.seed << "\nschemes = ";
  for (std::size_t i = 0; i < cfg.schemes.size(); ++i) os << (i ? "," : "") << scheme_tag(cfg.schemes[i]);
  os << "\nexponent_mode = " << exponent_mode_name(cfg.exponent_mode) << "\nsic_grid = " << cfg.sic_grid
     << "\ntin_power_fractions = ";
  for (std::size_t i = 0; i < cfg.tin_power_fractions.size(); ++i)
    os << (i ? "," : "") << cfg.tin_power_fractions[i];
  os << "\nout = " << cfg.out << "\nverbosity = " << cfg.verbosity << '\n';
  return os.str();
}

}  // namespace mactin
