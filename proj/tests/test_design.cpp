#include "doctest.h"
#include "mactin/design.hpp"
#include "mactin/errors.hpp"
#include "oracles.hpp"

using mactin::DetModelParams;
using mactin::User;

namespace {

std::vector<mactin::Point> as_vector(const mactin::Constellation& c) {
  return {c.points().begin(), c.points().end()};
}

const std::vector<std::array<int, 3>> kReference = {
    {0, 8, 8}, {2, 6, 8}, {4, 4, 8}, {4, 2, 8}, {4, 0, 8}, {4, 0, 0}};

}  // namespace

TEST_CASE("weak layer energy matches its closed form and brute force") {
  const double l1 = std::log2(std::pow(10.0, 1.2));
  const double l2 = std::log2(std::pow(10.0, 2.4));
  const double exponent = l1 - 4 + 8 - l2;
  const double closed = std::exp2(8 + l1 - l2) * (1 - std::exp2(-4)) / 6;
  CHECK(mactin::weak_layer_energy(exponent, 4) == doctest::Approx(closed).epsilon(1e-12));

  const auto pts = oracle::qam_grid(4, std::exp2(exponent / 2));
  CHECK(oracle::mean_energy(pts) == doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("strong layer energy by brute force") {
  for (int nw : {2, 4, 6})
    for (int top : {0, 2, 4})
      for (int bottom = 0; bottom <= nw; bottom += 2) {
        std::vector<mactin::Point> pts;
        for (const auto& a : oracle::qam_grid(bottom, 1.0))
          for (const auto& b : oracle::qam_grid(top, 1.0)) pts.push_back(a + std::exp2(nw / 2) * b);
        CHECK(mactin::strong_layer_energy(nw, top, bottom) ==
              doctest::Approx(oracle::mean_energy(pts)).epsilon(1e-12));
      }
}

TEST_CASE("reference designs respect the power budget and distance floor") {
  const auto cfg = mactin::reference_config();
  for (const auto& [m1, m21, m22] : kReference) {
    CAPTURE(m1);
    CAPTURE(m21);
    CAPTURE(m22);
    const auto p = DetModelParams::make(4, 8, m1, m21, m22);
    const auto d = mactin::build_design(cfg, p);
    CHECK(d.strong == User::Two);
    CHECK(d.lambda1.mean_energy() <= cfg.p1 * (1 + 1e-12));
    CHECK(d.lambda21.mean_energy() <= cfg.p2 * (1 + 1e-12));
    CHECK(d.lambda22.mean_energy() <= cfg.p2 * (1 + 1e-12));
    // One of the two overlapping constellations meets its budget exactly.
    const double r1 = d.lambda1.mean_energy() / cfg.p1;
    const double r2 = d.lambda21.mean_energy() / cfg.p2;
    CHECK(std::max(r1, r2) == doctest::Approx(1.0).epsilon(1e-12));
    if (m22 > 0) CHECK(d.lambda22.mean_energy() == doctest::Approx(cfg.p2).epsilon(1e-12));
    CHECK(d.lambda1.size() == (std::size_t{1} << m1));
    CHECK(d.lambda21.size() == (std::size_t{1} << m21));
    CHECK(d.lambda22.size() == (std::size_t{1} << m22));

    const double dmin = mactin::min_distance_check(d, cfg);
    if (m1 > 0 && m21 > 0) {
      CHECK(dmin >= std::sqrt(3.0));
      std::vector<mactin::Point> rx;
      for (const auto& a : d.lambda1.points())
        for (const auto& b : d.lambda21.points()) rx.push_back(cfg.h1 * a + cfg.h2 * b);
      CHECK(dmin == doctest::Approx(oracle::min_distance(rx)).epsilon(1e-12));
    }
  }
}

TEST_CASE("received overlap is a unit lattice when SNRs are powers of two") {
  // Relative to the strong bottom layer the weak step is 2^{(n_w - m_w)/2},
  // which tiles the gap up to the strong top layer exactly.
  mactin::ChannelConfig cfg;
  cfg.h1 = 4.0;
  cfg.h2 = 16.0;
  cfg.blocklength1 = 150;
  cfg.blocklength2 = 200;
  cfg.eps1 = 1e-6;
  cfg.eps2 = 1e-5;
  for (const auto mode : {mactin::ExponentMode::ExactLog, mactin::ExponentMode::Ceiled})
    for (const auto& [m1, m21, m22] : kReference) {
      if (m1 == 0 || m21 == 0) continue;
      const auto d = mactin::build_design(cfg, DetModelParams::make(4, 8, m1, m21, m22), mode);
      const double unit = d.eta * std::sqrt(cfg.p2) * cfg.h2;
      const auto rx = mactin::superimpose(d.lambda1.scaled(cfg.h1 / unit), d.lambda21, cfg.h2 / unit);
      CHECK(rx.size() == d.lambda1.size() * d.lambda21.size());
      CHECK(rx.min_distance() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("clean sub-block and swapped roles") {
  const auto cfg = mactin::reference_config();
  const auto d = mactin::build_design(cfg, DetModelParams::make(4, 8, 4, 4, 8));
  CHECK(oracle::same_point_set(as_vector(d.lambda22), oracle::qam_grid(8, d.eta_prime)));
  CHECK(d.eta_prime == doctest::Approx(1.0 / std::sqrt(255.0 / 6.0)));

  // Strong user 1: mirror of the reference SNRs.
  const auto mirrored = mactin::ChannelConfig::from_snr_db(24, 12, 150, 200, 1e-6, 1e-5);
  const auto dm = mactin::build_design(mirrored, DetModelParams::make(8, 4, 6, 2, 4));
  CHECK(dm.strong == User::One);
  CHECK(dm.lambda1.size() == 64);
  CHECK(dm.lambda21.size() == 4);
  CHECK(mactin::min_distance_check(dm, mirrored) >= std::sqrt(3.0));
}

TEST_CASE("design errors") {
  const auto cfg = mactin::reference_config();
  CHECK_THROWS_AS(mactin::build_design(cfg, DetModelParams::make(4, 8, 3, 5, 8)), mactin::UnsupportedOrder);
  CHECK_THROWS_AS(mactin::build_design(cfg, DetModelParams::make(4, 8, 4, 4, 7)), mactin::UnsupportedOrder);
  CHECK_THROWS_AS(mactin::build_design(cfg, DetModelParams::make(8, 4, 2, 2, 2)), mactin::ConfigError);
  CHECK_THROWS_AS(mactin::build_design(cfg, DetModelParams::make(6, 8, 2, 2, 2)), mactin::ConfigError);
}

TEST_CASE("bit to symbol mapping") {
  const auto cfg = mactin::reference_config();
  const auto d = mactin::build_design(cfg, DetModelParams::make(4, 8, 4, 2, 4));
  // User 2 with N1 = 2, N2 = 3: two 4-QAM symbols, then one 16-QAM symbol.
  const std::vector<std::uint8_t> bits = {1, 0, 0, 1, 1, 1, 0, 1};
  const auto sym = mactin::map_bits_to_symbols(bits, d, 2, 3, User::Two);
  REQUIRE(sym.size() == 3);
  CHECK(sym[0] == d.lambda21[2]);
  CHECK(sym[1] == d.lambda21[1]);
  CHECK(sym[2] == d.lambda22[13]);

  const std::vector<std::uint8_t> u1 = {0, 0, 1, 1, 1, 1, 1, 1};
  const auto s1 = mactin::map_bits_to_symbols(u1, d, 2, 3, User::One);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == d.lambda1[3]);
  CHECK(s1[1] == d.lambda1[15]);

  CHECK_THROWS_AS(mactin::map_bits_to_symbols(std::span(bits).first(7), d, 2, 3, User::Two),
                  mactin::DomainError);
  CHECK_THROWS_AS(mactin::map_bits_to_symbols(std::span(bits).first(6), d, 2, 3, User::One), mactin::DomainError);
}
