#include "doctest.h"
#include "mactin/errors.hpp"
#include "mactin/fbl.hpp"
#include "oracles.hpp"

TEST_CASE("inverse Q function") {
  CHECK(mactin::q_inv(0.5) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mactin::q_inv(1e-5) == doctest::Approx(4.26489).epsilon(1e-6));
  CHECK(mactin::q_inv(1e-6) == doctest::Approx(4.75342).epsilon(1e-6));
  for (double eps : {1e-9, 1e-6, 1e-5, 1e-3, 0.1, 0.3, 0.5, 0.7, 0.99})
    CHECK(std::abs(mactin::q_inv(eps) - oracle::q_inv_bisection(eps)) < 1e-10);
  CHECK_THROWS_AS(mactin::q_inv(0.0), mactin::DomainError);
  CHECK_THROWS_AS(mactin::q_inv(1.0), mactin::DomainError);
  CHECK_THROWS_AS(mactin::q_inv(-0.1), mactin::DomainError);
}

TEST_CASE("inverse Q round trip") {
  for (double x = -6.0; x <= 6.0; x += 0.05) {
    const double q = 0.5 * std::erfc(x / std::sqrt(2.0));
    CHECK(std::abs(mactin::q_inv(q) - x) < 1e-8);
  }
}

TEST_CASE("user 1 rate") {
  CHECK(mactin::rate_user1(2, 0, 150, 1e-6) == 2.0);
  CHECK(mactin::rate_user1(1, 4, 100, 0.5) == doctest::Approx(1.0));
  CHECK(mactin::rate_user1(3, 2, 150, 1e-6) == doctest::Approx(3 - std::sqrt(2.0 / 150) * 4.75342).epsilon(1e-6));
  CHECK(mactin::rate_user1(0.1, 10, 10, 1e-6) == 0.0);
  // Longer blocks and looser targets never lower the rate.
  CHECK(mactin::rate_user1(3, 2, 300, 1e-6) > mactin::rate_user1(3, 2, 150, 1e-6));
  CHECK(mactin::rate_user1(3, 2, 150, 1e-3) > mactin::rate_user1(3, 2, 150, 1e-6));
}

TEST_CASE("user 2 rate") {
  // Homogeneous blocklengths reduce to the single-block formula.
  CHECK(mactin::rate_user2(2.5, 7.0, 1.3, 0.4, 150, 150, 1e-5) ==
        doctest::Approx(mactin::rate_user1(2.5, 1.3, 150, 1e-5)).epsilon(1e-14));

  // Weighted combination of the two sub-blocks.
  const double n1 = 150, n2 = 200, q = mactin::q_inv(1e-5);
  const double expected = (n1 * 3.0 + (n2 - n1) * 7.0) / n2 - std::sqrt(n1 * 1.5 + (n2 - n1) * 0.5) / n2 * q;
  CHECK(mactin::rate_user2(3.0, 7.0, 1.5, 0.5, 150, 200, 1e-5) == doctest::Approx(expected).epsilon(1e-14));

  // Zero overlap information with zero dispersion on both parts.
  CHECK(mactin::rate_user2(0, 8, 0, 0, 150, 200, 1e-5) == doctest::Approx(2.0));
  CHECK(mactin::rate_user2(0, 0, 1, 1, 150, 200, 1e-5) == 0.0);
  CHECK(mactin::rate_user2(3, 7, 1.5, 0.5, 150, 200, 1e-5) < mactin::rate_user2(3, 7.5, 1.5, 0.5, 150, 200, 1e-5));
}

TEST_CASE("scheme tags") {
  for (auto s : {mactin::Scheme::ProposedQamTin, mactin::Scheme::GaussianSic, mactin::Scheme::Orthogonal,
                 mactin::Scheme::GaussianTin})
    CHECK(mactin::parse_scheme(mactin::scheme_tag(s)) == s);
  CHECK_FALSE(mactin::parse_scheme("qam"));
  CHECK(mactin::scheme_tag(mactin::Scheme::GaussianSic) == "gaussian-sic");
}

TEST_CASE("rate point assembly") {
  const auto cfg = mactin::reference_config();
  mactin::MiDispersion a{3.0, 1.0, 0.0, 0.0, 10}, b{2.0, 0.5, 0.0, 0.0, 10}, c{7.0, 0.2, 0.0, 0.0, 10};
  const auto p = mactin::make_rate_point(mactin::Scheme::ProposedQamTin, cfg, a, b, c);
  CHECK(p.r1 == mactin::rate_user1(3.0, 1.0, 150, 1e-6));
  CHECK(p.r2 == mactin::rate_user2(2.0, 7.0, 0.5, 0.2, 150, 200, 1e-5));
}

TEST_CASE("Gaussian benchmarks") {
  const auto cfg = mactin::reference_config();
  const mactin::EstimatorSettings est{100000, 4};

  const auto sic = mactin::benchmark_gaussian_sic(cfg, est, 5);
  REQUIRE(sic.size() == 5);
  // Corner A decodes user 1 under interference; corner B gives user 1 the clean channel.
  CHECK(sic.front().r1 < sic.back().r1);
  CHECK(sic.front().r2 > sic.back().r2);
  CHECK(sic[2].r1 == doctest::Approx(0.5 * (sic.front().r1 + sic.back().r1)));
  const double sum_a = sic.front().r1 + sic.front().r2;
  for (const auto& p : sic) CHECK(p.r1 + p.r2 <= std::max(sum_a, sic.back().r1 + sic.back().r2) + 1e-12);

  const auto orth = mactin::benchmark_orthogonal(cfg, est);
  CHECK(orth.u21.mi == 0.0);
  CHECK(std::abs(orth.u1.mi - std::log2(1 + cfg.snr1())) <= 3 * orth.u1.std_error);
  CHECK(orth.r2 == doctest::Approx(mactin::rate_user2(0, orth.u22.mi, 0, orth.u22.dispersion, 150, 200, 1e-5)));
  // User 1 alone on its symbols equals the clean SIC corner for user 1 up to noise.
  CHECK(std::abs(orth.u1.mi - sic.back().u1.mi) <= 3 * std::hypot(orth.u1.std_error, sic.back().u1.std_error));

  const auto tin = mactin::benchmark_gaussian_tin(cfg, est, {0.0, 1.0});
  REQUIRE(tin.size() == 2);
  // With user 2 silent on the overlap, TIN is the orthogonal scheme.
  CHECK(tin[0].u21.mi == 0.0);
  CHECK(std::abs(tin[0].r1 - orth.r1) <= 0.05);
  CHECK(tin[1].r1 < tin[0].r1);
  CHECK_THROWS_AS(mactin::benchmark_gaussian_tin(cfg, est, {1.5}), mactin::DomainError);
  CHECK_THROWS_AS(mactin::benchmark_gaussian_sic(cfg, est, 1), mactin::DomainError);
}

TEST_CASE("stream seeds are distinct per scheme, point and slot") {
  CHECK(mactin::stream_seed(1, mactin::Scheme::GaussianSic, 0, 0) !=
        mactin::stream_seed(1, mactin::Scheme::Orthogonal, 0, 0));
  CHECK(mactin::stream_seed(1, mactin::Scheme::ProposedQamTin, 0, 1) !=
        mactin::stream_seed(1, mactin::Scheme::ProposedQamTin, 1, 1));
}
