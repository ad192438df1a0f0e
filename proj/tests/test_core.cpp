#include "doctest.h"

#include "zonotile/context.hpp"
#include "zonotile/eulerian.hpp"
#include "zonotile/polytope_vectors.hpp"
#include "zonotile/tiling.hpp"
#include "zonotile/volumes.hpp"

#include <algorithm>

using namespace zonotile;

namespace {

// 1-based element lists, matching the written examples.
Mask S(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= Mask{1} << (x - 1);
  return m;
}

RatVec rv(std::initializer_list<long long> xs) {
  RatVec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

Configuration line_config(std::initializer_list<long long> xs) {
  std::vector<RatVec> pts;
  for (long long x : xs) pts.push_back({Rat(x)});
  return Configuration::from_points(2, pts);
}

// n=4, d=2 with lift columns (2,1),(1,1),(0,1),(-1,1).
Configuration four_points() { return line_config({2, 1, 0, -1}); }

// n=5, d=2 with a repeated direction v3 = v4.
Configuration five_points_repeated() { return line_config({2, 1, 0, 0, -1}); }

// Convex fivegon (0,0),(1,0),(2,1),(1,2),(0,1).
Configuration fivegon() {
  std::vector<RatVec> pts = {{Rat(0), Rat(0)},
                             {Rat(1), Rat(0)},
                             {Rat(2), Rat(1)},
                             {Rat(1), Rat(2)},
                             {Rat(0), Rat(1)}};
  return Configuration::from_points(3, pts);
}

Configuration parabola(int n) {
  std::vector<RatVec> pts;
  for (int i = 1; i <= n; ++i) pts.push_back({Rat(i), Rat(i) * Rat(i)});
  return Configuration::from_points(3, pts);
}

Configuration ones_config(int n) {
  std::vector<RatVec> pts(n);  // d = 1: points are empty tuples
  return Configuration::from_points(1, pts);
}

// The worked n=4 tiling whose tiles are read off the fiber-vector expansion.
Tiling example_tiling(const ContextPtr& ctx) {
  std::vector<std::pair<Mask, Mask>> tiles = {
      {S({}), S({2, 4})}, {S({}), S({1, 2})}, {S({4}), S({2, 3})},
      {S({2}), S({3, 4})}, {S({2}), S({1, 3})}, {S({2, 3}), S({1, 4})}};
  std::vector<Mask> labels(ctx->basis_list.size());
  for (auto [A, B] : tiles) labels[ctx->basis_index.at(B)] = A;
  return Tiling(ctx, labels);
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat::parse("3/6").str() == "1/2");
  CHECK(Rat::parse("-7").str() == "-7");
  CHECK((Rat(1, 3) + Rat(2, 5)).str() == "11/15");
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("abc"));
  CHECK(Rat(1, 2) < Rat(2, 3));
}

TEST_CASE("volume of lift columns") {
  Configuration cfg = four_points();
  // vol({i,j}) = j - i for this configuration.
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      CHECK(basis_volume(cfg, S({i, j})) == Rat(j - i));
  CHECK_THROWS_AS(basis_volume(cfg, S({1})), InputError);

  CHECK(basis_volume(five_points_repeated(), S({3, 4})) == Rat(0));
  CHECK(basis_volume(ones_config(3), S({2})) == Rat(1));
}

TEST_CASE("bases enumeration") {
  CHECK(bases(four_points()).size() == 6);
  CHECK(bases(five_points_repeated()).size() == 9);  // all pairs except {3,4}
  CHECK(bases(ones_config(5)).size() == 5);
  // Oracle for the n=5 count: direct 2x2 determinants x_j - x_i.
  long long xs[5] = {2, 1, 0, 0, -1};
  int nz = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (xs[j] - xs[i] != 0) ++nz;
  CHECK(nz == 9);
}

TEST_CASE("circuit enumeration") {
  SUBCASE("hexagon circuits are the alternating quadruples") {
    Configuration cfg = parabola(6);
    std::vector<Circuit> cs = circuits(cfg);
    CHECK(cs.size() == 15);
    for (const Circuit& c : cs) {
      std::vector<int> idx = mask_to_vec(c.support());
      REQUIRE(idx.size() == 4);
      CHECK(c.plus == ((Mask{1} << idx[0]) | (Mask{1} << idx[2])));
      CHECK(c.minus == ((Mask{1} << idx[1]) | (Mask{1} << idx[3])));
    }
  }
  SUBCASE("d=1 circuits are all pairs") {
    std::vector<Circuit> cs = circuits(ones_config(4));
    CHECK(cs.size() == 6);
    for (const Circuit& c : cs) {
      CHECK(popcount(c.plus) == 1);
      CHECK(popcount(c.minus) == 1);
    }
  }
  SUBCASE("repeated column gives a two-element circuit") {
    std::vector<Circuit> cs = circuits(five_points_repeated());
    Circuit two{S({3}), S({4})};
    CHECK(std::count(cs.begin(), cs.end(), two) == 1);
  }
}

TEST_CASE("dependence vectors") {
  SUBCASE("worked flip circuit") {
    Configuration cfg = four_points();
    Circuit c{S({3}), S({1, 4})};
    CHECK(dependence_vector(cfg, c) == rv({-1, 0, 3, -2}));
  }
  SUBCASE("repeated-direction circuit per contraction basis") {
    Configuration cfg = five_points_repeated();
    Circuit c{S({3}), S({4})};
    std::vector<Mask> ctr = contraction_bases(cfg, c);
    CHECK(ctr == std::vector<Mask>{S({1}), S({2}), S({5})});
    CHECK(dependence_vector(cfg, c, S({1})) == rv({0, 0, 2, -2, 0}));
    CHECK(dependence_vector(cfg, c, S({2})) == rv({0, 0, 1, -1, 0}));
    CHECK(dependence_vector(cfg, c, S({5})) == rv({0, 0, 1, -1, 0}));
    CHECK_THROWS_AS(dependence_vector(cfg, c, S({3})), InputError);
    CHECK_THROWS_AS(dependence_vector(cfg, c, 0), InputError);
  }
  SUBCASE("fivegon table") {
    Configuration cfg = fivegon();
    CHECK(dependence_vector(cfg, {S({1, 3}), S({2, 4})}) == rv({2, -3, 2, -1, 0}));
    CHECK(dependence_vector(cfg, {S({1, 3}), S({2, 5})}) == rv({2, -2, 1, 0, -1}));
    CHECK(dependence_vector(cfg, {S({1, 4}), S({2, 5})}) == rv({2, -1, 0, 1, -2}));
    CHECK(dependence_vector(cfg, {S({1, 4}), S({3, 5})}) == rv({2, 0, -1, 2, -3}));
    // The volume-product vector here is (0,2,-2,2,-2); the table prints its
    // primitive rescaling.
    CHECK(dependence_vector(cfg, {S({2, 4}), S({3, 5})}) == rv({0, 2, -2, 2, -2}));
    CHECK(primitive_vector(dependence_vector(cfg, {S({2, 4}), S({3, 5})})) ==
          rv({0, 1, -1, 1, -1}));
  }
  SUBCASE("generic full-size circuit has the empty contraction basis") {
    Configuration cfg = four_points();
    for (const Circuit& c : circuits(cfg))
      CHECK(contraction_bases(cfg, c) == std::vector<Mask>{0});
    Configuration d1 = ones_config(3);
    for (const Circuit& c : circuits(d1))
      CHECK(contraction_bases(d1, c) == std::vector<Mask>{0});
  }
  SUBCASE("every dependence vector kills the lift") {
    for (const Configuration& cfg : {four_points(), five_points_repeated(), fivegon()}) {
      for (const Circuit& c : circuits(cfg)) {
        for (Mask J : contraction_bases(cfg, c)) {
          RatVec a = dependence_vector(cfg, c, J);
          for (int r = 0; r < cfg.d; ++r) {
            Rat s;
            for (int i = 0; i < cfg.n(); ++i) s += a[i] * cfg.lift[i][r];
            CHECK(s.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("eulerian numbers") {
  CHECK(EulerianTable::value(3, 0) == 1);
  CHECK(EulerianTable::value(3, 1) == 4);
  CHECK(EulerianTable::value(3, 2) == 1);
  CHECK(EulerianTable::value(0, 0) == 1);
  CHECK(EulerianTable::value(3, 3) == 0);
  for (int d = 1; d <= 10; ++d) {
    mpz_class row_sum(0);
    for (int r = 0; r < d; ++r) row_sum += EulerianTable::value(d, r);
    CHECK(row_sum == EulerianTable::factorial(d));
    for (int r = 0; r < d; ++r) {
      mpz_class lhs = (d - r) * EulerianTable::value(d - 1, r - 1) +
                      (r + 1) * EulerianTable::value(d - 1, r);
      CHECK(lhs == EulerianTable::value(d, r));
    }
  }
}

TEST_CASE("orientations from heights") {
  ContextPtr ctx = Context::make(fivegon());
  RatVec h = rv({1, 0, 3, 0, 0});
  REQUIRE(is_generic(*ctx, h));
  CircuitOrientation o = orientation_from_heights(ctx, h);
  CHECK(o.of({S({1, 3}), S({2, 4})}) == +1);
  CHECK(o.of({S({1, 3}), S({2, 5})}) == +1);
  CHECK(o.of({S({1, 4}), S({2, 5})}) == +1);
  CHECK(o.of({S({1, 4}), S({3, 5})}) == -1);
  CHECK(o.of({S({2, 4}), S({3, 5})}) == -1);
  CHECK(o.of({S({2, 4}), S({1, 3})}) == -1);  // opposite signed set

  CHECK_FALSE(is_generic(*ctx, RatVec(5, Rat(0))));
  CHECK_THROWS_AS(orientation_from_heights(ctx, RatVec(5, Rat(0))), NonGenericHeight);

  ContextPtr d1 = Context::make(ones_config(4));
  RatVec hh = rv({8, 7, 5, 1});
  CircuitOrientation od = orientation_from_heights(d1, hh);
  for (const Circuit& c : d1->circuit_list) CHECK(od.of(c) == +1);
}

TEST_CASE("tilings from heights") {
  SUBCASE("fivegon vertex labels at k = 2") {
    ContextPtr ctx = Context::make(fivegon());
    Tiling t = tiling_from_heights(ctx, rv({1, 0, 3, 0, 0}));
    std::vector<Mask> want = {S({1, 2}), S({2, 3}), S({3, 4}), S({4, 5}),
                              S({1, 5}), S({1, 3}), S({3, 5})};
    std::sort(want.begin(), want.end());
    std::vector<Mask> got;
    for (Mask v : vertex_labels(t))
      if (popcount(v) == 2) got.push_back(v);
    CHECK(got == want);
  }
  SUBCASE("d=1 tiling sorts by height") {
    ContextPtr ctx = Context::make(ones_config(4));
    // Heights ordered by w = (3,1,4,2): h_3 > h_1 > h_4 > h_2.
    Tiling t = tiling_from_heights(ctx, rv({7, 1, 9, 4}));
    CHECK(t.label_of(S({3})) == S({}));
    CHECK(t.label_of(S({1})) == S({3}));
    CHECK(t.label_of(S({4})) == S({1, 3}));
    CHECK(t.label_of(S({2})) == S({1, 3, 4}));
  }
  SUBCASE("tile count equals basis count") {
    for (const Configuration& cfg : {four_points(), five_points_repeated(), fivegon()}) {
      ContextPtr ctx = Context::make(cfg);
      Tiling t = tiling_from_heights(ctx, canonical_height(*ctx));
      CHECK(t.num_tiles() == static_cast<int>(bases(cfg).size()));
    }
  }
  SUBCASE("orientation roundtrip") {
    ContextPtr ctx = Context::make(fivegon());
    RatVec h = rv({1, 0, 3, 0, 0});
    CircuitOrientation o = orientation_from_heights(ctx, h);
    Tiling t = tiling_from_orientation(o);
    CHECK(orientation_from_tiling(t) == o);
  }
}

TEST_CASE("opposite tiling") {
  ContextPtr ctx = Context::make(four_points());
  Tiling t = example_tiling(ctx);
  validate_tiling(t);
  Tiling op = opposite(t);
  validate_tiling(op);
  CHECK(opposite(op) == t);
  // Figure values.
  CHECK(level_vector(t, 1) == rv({0, 3, 0, 1}));
  CHECK(level_vector(t, 2) == rv({0, 3, 3, 0}));
  CHECK(level_vector(op, 1) == rv({2, 0, 0, 2}));
  CHECK(level_vector(op, 2) == rv({2, 0, 3, 1}));
  // Negating a generic height gives the opposite tiling.
  ContextPtr f = Context::make(fivegon());
  RatVec h = rv({1, 0, 3, 0, 0});
  RatVec nh = rv({-1, 0, -3, 0, 0});
  CHECK(opposite(tiling_from_heights(f, h)) == tiling_from_heights(f, nh));
}

TEST_CASE("level volumes and drops") {
  ContextPtr ctx = Context::make(four_points());
  CHECK(level_volume(*ctx, 0) == Rat(3));
  CHECK(level_volume(*ctx, 1) == Rat(4));
  CHECK(level_volume(*ctx, 2) == Rat(3));
  CHECK(level_volume(*ctx, 3) == Rat(0));
  CHECK(level_volume(*ctx, -1) == Rat(0));
  CHECK(level_volume_drop(*ctx, 0) == rv({1, 0, 0, 1}));
  CHECK(level_volume_drop(*ctx, 1) == rv({2, 1, 1, 2}));
  CHECK(level_volume_drop(*ctx, 2) == rv({3, 3, 3, 3}));

  SUBCASE("d=1 level volumes are all one") {
    for (int n = 2; n <= 6; ++n) {
      ContextPtr c1 = Context::make(ones_config(n));
      for (int k = 0; k <= n - 1; ++k) CHECK(level_volume(*c1, k) == Rat(1));
    }
  }
  SUBCASE("d=2 gamma equals the next section length") {
    for (const Configuration& cfg : {four_points(), five_points_repeated()}) {
      ContextPtr c = Context::make(cfg);
      for (int k = 0; k <= cfg.n() - 2; ++k)
        CHECK(level_volume(*c, k) == section_volume_geometric(*c, k + 1));
    }
  }
  SUBCASE("formula beta matches geometric beta") {
    for (const Configuration& cfg :
         {four_points(), five_points_repeated(), fivegon(), parabola(6), ones_config(5)}) {
      ContextPtr c = Context::make(cfg);
      for (int k = 0; k <= cfg.n(); ++k)
        CHECK(section_volume(*c, k) ==
              ((k >= 1 && k <= cfg.n() - 1) ? section_volume_geometric(*c, k) : Rat(0)));
    }
  }
  SUBCASE("zonotope volume splits across levels") {
    for (const Configuration& cfg : {four_points(), fivegon(), parabola(6)}) {
      ContextPtr c = Context::make(cfg);
      Rat sum;
      for (int k = 0; k <= cfg.n() - cfg.d; ++k) sum += level_volume(*c, k);
      CHECK(sum == c->zonotope_volume);
    }
  }
}

TEST_CASE("polytope vertex vectors on the worked example") {
  ContextPtr ctx = Context::make(four_points());
  Tiling t = example_tiling(ctx);
  CHECK(ctx->zonotope_volume == Rat(10));

  RatVec fib = fiber_vector(t);
  CHECK(fib == Rat(1, 10) * rv({3, 8, 5, 4}));
  CHECK(section_fiber_vector(t, 1) == Rat(1, 6) * rv({1, 3, 0, 2}));
  CHECK(section_fiber_vector(t, 2) == Rat(1, 8) * rv({2, 7, 4, 3}));
  CHECK(section_fiber_vector(t, 3) == Rat(1, 2) * rv({1, 2, 2, 1}));
  CHECK_THROWS_AS(section_fiber_vector(t, 4), InputError);
  CHECK_THROWS_AS(section_fiber_vector(t, 0), InputError);

  CHECK(level_vector(t, 0) == rv({0, 0, 0, 0}));
  CHECK(level_vector(t, 3) == rv({0, 0, 0, 0}));

  // Duality at k = 1: phi_1(T) + phi_2(op) = 3*ones - (1,0,0,1).
  Tiling op = opposite(t);
  CHECK(level_vector(t, 1) + level_vector(op, 2) == rv({2, 3, 3, 2}));

  IdentityReport rep = verify_vertex_identities(t);
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
  CHECK(verify_vertex_identities(op).all_pass());
}

TEST_CASE("identities on assorted tilings") {
  for (const Configuration& cfg :
       {four_points(), five_points_repeated(), fivegon(), parabola(6), ones_config(5)}) {
    ContextPtr ctx = Context::make(cfg);
    Tiling t = tiling_from_heights(ctx, canonical_height(*ctx));
    IdentityReport rep = verify_vertex_identities(t);
    INFO("n=", cfg.n(), " d=", cfg.d);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("d=2 section fiber specialization") {
  // For d = 2 the section fiber vector reduces to
  // (phi_k + phi_{k-1} + drop(k-1)) / (2 beta_k).
  for (const Configuration& cfg : {four_points(), five_points_repeated()}) {
    ContextPtr ctx = Context::make(cfg);
    Tiling t = tiling_from_heights(ctx, canonical_height(*ctx));
    for (int k = 1; k <= cfg.n() - 1; ++k) {
      RatVec rhs = level_vector(t, k) + level_vector(t, k - 1) + level_volume_drop(*ctx, k - 1);
      Rat inv = Rat(1) / (Rat(2) * section_volume(*ctx, k));
      for (Rat& x : rhs) x *= inv;
      CHECK(section_fiber_vector(t, k) == rhs);
    }
  }
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(Configuration::from_points(2, {{Rat(1)}}), InputError);
  CHECK_THROWS_AS(Configuration::from_points(3, {{Rat(0), Rat(0)},
                                                 {Rat(1), Rat(1)},
                                                 {Rat(2), Rat(2)}}),
                  InputError);  // collinear: lift rank 2
  CHECK_THROWS_AS(Configuration::from_points(2, {{Rat(1), Rat(2)}, {Rat(1), Rat(2)}}),
                  InputError);  // wrong point arity
}
