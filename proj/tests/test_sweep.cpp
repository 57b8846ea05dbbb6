#include <sstream>

#include "doctest.h"
#include "mactin/errors.hpp"
#include "mactin/sweep.hpp"

using mactin::ModTuple;
using mactin::Scheme;

namespace {

mactin::SweepSpec small_spec() {
  auto spec = mactin::reference_sweep();
  spec.samples = 4000;
  spec.seed = 17;
  spec.sic_grid = 5;
  return spec;
}

std::string to_csv(const std::vector<mactin::RatePoint>& pts) {
  std::ostringstream os;
  mactin::write_csv(os, pts);
  return os.str();
}

}  // namespace

TEST_CASE("reference sweep layout") {
  const auto spec = mactin::reference_sweep();
  CHECK(spec.tuples.size() == 6);
  CHECK(spec.tuples.front() == ModTuple{0, 8, 8});
  CHECK(spec.tuples.back() == ModTuple{4, 0, 0});
  CHECK(spec.schemes.size() == 4);
}

TEST_CASE("small sweep") {
  const auto res = mactin::run_sweep(small_spec());
  CHECK(res.errors.empty());
  // 6 proposed + 5 SIC + 1 orthogonal + 1 TIN
  REQUIRE(res.points.size() == 13);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(res.points[i].scheme == Scheme::ProposedQamTin);
    REQUIRE(res.points[i].mod);
    CHECK(*res.points[i].mod == mactin::reference_tuples()[i]);
    CHECK(res.points[i].r1 >= 0.0);
    CHECK(res.points[i].r2 >= 0.0);
  }
  CHECK(res.points[0].r1 == 0.0);  // (0,8,8): user 1 silent
  CHECK(res.points[5].r2 == 0.0);  // (4,0,0): user 2 silent
  CHECK(res.points[6].scheme == Scheme::GaussianSic);
  CHECK(res.points[11].scheme == Scheme::Orthogonal);
  CHECK(res.points[12].scheme == Scheme::GaussianTin);
}

TEST_CASE("sweeps are reproducible") {
  const auto a = mactin::run_sweep(small_spec());
  const auto b = mactin::run_sweep(small_spec());
  CHECK(to_csv(a.points) == to_csv(b.points));
  auto other = small_spec();
  other.seed = 18;
  CHECK(to_csv(mactin::run_sweep(other).points) != to_csv(a.points));
}

TEST_CASE("infeasible tuples are reported and skipped") {
  auto spec = small_spec();
  spec.schemes = {Scheme::ProposedQamTin};
  spec.tuples = {{4, 4, 8}, {3, 5, 8}, {2, 7, 8}, {4, 0, 0}};
  const auto res = mactin::run_sweep(spec);
  CHECK(res.points.size() == 2);
  REQUIRE(res.errors.size() == 2);
  CHECK(res.errors[0].tuple == ModTuple{3, 5, 8});
  CHECK(res.errors[1].tuple == ModTuple{2, 7, 8});
  CHECK_FALSE(res.errors[1].message.empty());
}

TEST_CASE("csv output") {
  CHECK(to_csv({}) == std::string(mactin::csv_header()) + "\n");

  auto spec = small_spec();
  spec.tuples = {{4, 4, 8}};
  spec.schemes = {Scheme::ProposedQamTin, Scheme::Orthogonal};
  const auto res = mactin::run_sweep(spec);
  const auto text = to_csv(res.points);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);

  std::istringstream is(text);
  const auto back = mactin::read_csv(is);
  REQUIRE(back.size() == 2);
  CHECK(back[0].mod == ModTuple{4, 4, 8});
  CHECK_FALSE(back[1].mod);
  CHECK(back[1].scheme == Scheme::Orthogonal);
  CHECK(back[0].r1 == doctest::Approx(res.points[0].r1).epsilon(1e-11));
  CHECK(back[0].u22.dispersion == doctest::Approx(res.points[0].u22.dispersion).epsilon(1e-11));
  CHECK(to_csv(back) == text);

  std::istringstream bad("scheme,m1\nfoo,1\n");
  CHECK_THROWS_AS(mactin::read_csv(bad), mactin::ConfigError);

  CHECK_THROWS_AS(mactin::emit_csv(res.points, "/nonexistent-dir/x.csv"), mactin::IoError);
}

TEST_CASE("region helpers") {
  const auto cfg = mactin::reference_config();
  mactin::RatePoint a, b;
  a.r1 = 1.0;
  a.r2 = 1.0;
  b.r1 = 2.0;
  b.r2 = 2.0;
  CHECK(mactin::dominated_by(a, b, cfg));
  CHECK_FALSE(mactin::dominated_by(b, a, cfg));

  mactin::RatePoint ca, cb;
  ca.r1 = 0.0;
  ca.r2 = 6.0;
  cb.r1 = 3.0;
  cb.r2 = 4.0;
  const std::vector<mactin::RatePoint> sic{ca, cb};
  mactin::RatePoint p;
  p.r1 = 1.5;
  p.r2 = 4.9;
  CHECK(mactin::inside_sic_region(p, sic, cfg));
  p.r2 = 5.1;
  CHECK_FALSE(mactin::inside_sic_region(p, sic, cfg));
  p.r1 = 3.2;
  p.r2 = 1.0;
  CHECK_FALSE(mactin::inside_sic_region(p, sic, cfg));
  CHECK(mactin::sic_point_at_r1(sic, 1.5).r2 == doctest::Approx(5.0));
  CHECK(mactin::sic_point_at_r1(sic, 9.0).r2 == doctest::Approx(4.0));
}
