#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lct/geometry.hpp"
#include "lct/sampling.hpp"

using namespace lct;

TEST_CASE("minkowski square in light-cone coordinates") {
  CHECK(minkowski_square({gauss(0, 1), gauss(0, 1)}) == gauss(-1, 0));
  CHECK(minkowski_square({gauss(1, 0), gauss(-1, 0)}) == gauss(-1, 0));
  // (1+i)(1-i) = 2, recomputed directly
  GaussianRational u = gauss(1, 1), v = gauss(1, -1);
  CHECK(minkowski_square({u, v}) == u * v);
  CHECK(minkowski_square({u, v}) == gauss(2, 0));
}

TEST_CASE("cartesian conversion round-trips exactly") {
  LightConeVector w{gauss(3, 4, 1, 2), gauss(-5, 7, 0, 1)};
  auto [z0, z1] = to_cartesian(w);
  CHECK(from_cartesian(z0, z1) == w);
  CHECK(z0 + z1 == w.u);
  CHECK(z0 - z1 == w.v);
}

TEST_CASE("to_diffs spec values") {
  PointConfig zeros{{{gauss(0, 0), gauss(0, 0)}, {gauss(0, 0), gauss(0, 0)}}};
  CHECK(to_diffs(zeros).diffs == std::vector<LightConeVector>{{gauss(0, 0), gauss(0, 0)}});

  PointConfig p2{{{gauss(2, 0), gauss(3, 0)}, {gauss(1, 0), gauss(1, 0)}}};
  CHECK(to_diffs(p2).diffs == std::vector<LightConeVector>{{gauss(1, 0), gauss(2, 0)}});

  // componentwise subtraction recomputed by hand:
  // (i,0)-(0,i) = (i,-i); (0,i)-(-i,0) = (i,i)
  PointConfig p3{{{gauss(0, 1), gauss(0, 0)},
                  {gauss(0, 0), gauss(0, 1)},
                  {gauss(0, -1), gauss(0, 0)}}};
  DiffConfig d3 = to_diffs(p3);
  REQUIRE(d3.size() == 2);
  CHECK(d3.diffs[0] == LightConeVector{gauss(0, 1), gauss(0, -1)});
  CHECK(d3.diffs[1] == LightConeVector{gauss(0, 1), gauss(0, 1)});

  PointConfig single{{{gauss(0, 0), gauss(0, 0)}}};
  CHECK_THROWS_AS(to_diffs(single), Error);
}

TEST_CASE("lorentz_scale spec values") {
  DiffConfig cfg{{{gauss(0, 1), gauss(0, 1)}}};
  CHECK(lorentz_scale(cfg, gauss(1, 0)).diffs == cfg.diffs);

  DiffConfig refl = lorentz_scale(cfg, gauss(-1, 0));
  CHECK(refl.diffs[0] == LightConeVector{gauss(0, -1), gauss(0, -1)});
  CHECK(minkowski_square(refl.diffs[0]) == gauss(-1, 0));

  // lambda = 2 on (u=1+i, v=2i): (2+2i, i); square -2+2i preserved
  DiffConfig c2{{{gauss(1, 1), gauss(0, 2)}}};
  GaussianRational before = minkowski_square(c2.diffs[0]);
  DiffConfig scaled = lorentz_scale(c2, gauss(2, 0));
  CHECK(scaled.diffs[0] == LightConeVector{gauss(2, 2), gauss(0, 1)});
  CHECK(before == gauss(-2, 2));
  CHECK(minkowski_square(scaled.diffs[0]) == before);

  CHECK_THROWS_AS(lorentz_scale(cfg, gauss(0, 0)), Error);
}

TEST_CASE("lorentz_scale preserves squares and inverts exactly") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 400; ++k) {
    DiffConfig cfg = random_diff_config(1 + k % 4, rng);
    GaussianRational lambda = random_nonzero_gaussian(rng);
    DiffConfig scaled = lorentz_scale(cfg, lambda);
    for (int j = 0; j < cfg.size(); ++j)
      CHECK(minkowski_square(scaled.diffs[j]) == minkowski_square(cfg.diffs[j]));
    DiffConfig back = lorentz_scale(scaled, lambda.inverse());
    CHECK(back.diffs == cfg.diffs);
  }
}

TEST_CASE("to_diffs is translation invariant") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) {
    PointConfig cfg;
    int m = 2 + k % 4;
    for (int i = 0; i < m; ++i)
      cfg.points.push_back({random_gaussian(rng), random_gaussian(rng)});
    LightConeVector shift{random_gaussian(rng), random_gaussian(rng)};
    CHECK(to_diffs(translate(cfg, shift)).diffs == to_diffs(cfg).diffs);
  }
}

TEST_CASE("from_diffs inverts to_diffs") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    DiffConfig diffs = random_diff_config(1 + k % 5, rng);
    CHECK(to_diffs(from_diffs(diffs)).diffs == diffs.diffs);
  }
}
