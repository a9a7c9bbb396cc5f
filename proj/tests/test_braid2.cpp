#include "doctest.h"
#include "goeritz/braid2.hpp"
#include "goeritz/random.hpp"
#include "oracles.hpp"

using namespace goeritz;

namespace {

Braid2Elt gen(const PlanarModel& m, Braid2Kind k, int i = 0) { return Braid2Elt::generator(m, k, i); }

// Compares the library's image table with an oracle table in library numbering.
bool same_images(const Braid2Elt& x, const std::vector<oracle::Word>& images) {
  for (int k = 1; k <= x.model().rank(); ++k) {
    const FWord expected = FWord::reduce(images[k - 1], x.model().rank());
    if (!(x.aut().image(k) == expected)) return false;
  }
  return true;
}

std::vector<Braid2Elt> generators(const PlanarModel& m) {
  std::vector<Braid2Elt> g{gen(m, Braid2Kind::Rotor)};
  for (int i = 1; i <= m.p; ++i) {
    g.push_back(gen(m, Braid2Kind::Anchored, i));
    g.push_back(gen(m, Braid2Kind::Freewheel, i));
  }
  return g;
}

Braid2Elt random_braid(Rng& rng, const std::vector<Braid2Elt>& gens, int max_len) {
  Braid2Elt x = Braid2Elt::identity(gens.front().model());
  const int len = uniform_below(rng, max_len + 1);
  for (int k = 0; k < len; ++k) {
    const Braid2Elt& g = gens[uniform_below(rng, static_cast<int>(gens.size()))];
    x = x * (uniform_below(rng, 2) ? g : g.inverse());
  }
  return x;
}

}  // namespace

TEST_SUITE("braid2") {
  TEST_CASE("planar model") {
    const PlanarModel m(3);
    CHECK(m.rank() == 5);
    CHECK(m.boundary_word().to_string() == "x2 x1 x4 x5 x3^-1");
    CHECK(m.name(4) == "u0");
    CHECK(m.name(5) == "u1");
    CHECK(m.name(2) == "c2");
    CHECK_THROWS_AS(PlanarModel(0), MalformedWord);
  }

  TEST_CASE("rotor swaps the marked points") {
    const PlanarModel m(2);
    const Braid2Elt r = gen(m, Braid2Kind::Rotor);
    CHECK(r.swap() == 1);
    CHECK(r.aut().image(m.u1()) == FWord::generator(m.rank(), m.u0()));
    CHECK(conjugate(r.aut().image(m.u0()), FWord::generator(m.rank(), m.u1())));
    CHECK(invariant_violations(r).empty());
  }

  TEST_CASE("generators agree with Artin braid products") {
    for (int p = 1; p <= 6; ++p) {
      const PlanarModel m(p);
      const oracle::ArtinPlanar art{p};
      CHECK(same_images(gen(m, Braid2Kind::Rotor), art.to_model(art.rotor())));
      for (int i = 1; i < p; ++i) {
        CHECK(same_images(gen(m, Braid2Kind::Anchored, i), art.to_model(art.anchored_hole(i))));
        CHECK(same_images(gen(m, Braid2Kind::Freewheel, i), art.to_model(art.freewheel_hole(i))));
      }
      CHECK(same_images(gen(m, Braid2Kind::Anchored, p), art.to_model(art.anchored_outer())));
      // Around the outer boundary the freewheel differs from the geometric
      // loop by the central element rho^2.
      const auto geo = oracle::comp(art.freewheel_outer_geometric(),
                                    oracle::comp(art.rotor(), art.rotor()));
      CHECK(same_images(gen(m, Braid2Kind::Freewheel, p), art.to_model(geo)));
    }
  }

  TEST_CASE("anchored generators fix u0 and have even parity") {
    for (int p = 1; p <= 4; ++p) {
      const PlanarModel m(p);
      for (int i = 1; i <= p; ++i) {
        const Braid2Elt a = gen(m, Braid2Kind::Anchored, i);
        CHECK(a.swap() == 0);
        if (i < p) CHECK(a.aut().image(m.u0()) == FWord::generator(m.rank(), m.u0()));
        CHECK(gen(m, Braid2Kind::Freewheel, i).swap() == 0);
      }
    }
  }

  TEST_CASE("every generator satisfies the element invariants") {
    for (int p = 1; p <= 6; ++p) {
      for (const auto& g : generators(PlanarModel(p))) {
        CHECK(invariant_violations(g).empty());
        CHECK(invariant_violations(g.inverse()).empty());
      }
    }
  }

  TEST_CASE("rotor squared is the product of the anchored generators") {
    for (int p = 1; p <= 6; ++p) {
      const PlanarModel m(p);
      const Braid2Elt rho = gen(m, Braid2Kind::Rotor);
      for (int k = 1; k <= 3; ++k) {
        Braid2Elt prod = Braid2Elt::identity(m);
        for (int i = 1; i <= p; ++i) prod = prod * gen(m, Braid2Kind::Anchored, i);
        CHECK(b2_equal(prod.pow(k), rho.pow(2 * k)));
      }
    }
  }

  TEST_CASE("rotor has infinite order on the disk") {
    const PlanarModel m(1);
    const Braid2Elt rho = gen(m, Braid2Kind::Rotor);
    for (int k = 1; k <= 20; ++k) CHECK_FALSE(b2_equal(rho.pow(k), Braid2Elt::identity(m)));
  }

  TEST_CASE("composition basics and parity") {
    const PlanarModel m(3);
    Rng rng(41);
    const auto gens = generators(m);
    CHECK(b2_parity(gen(m, Braid2Kind::Rotor)) == 1);
    CHECK(b2_parity(gen(m, Braid2Kind::Rotor).pow(2)) == 0);
    for (int k = 0; k < 100; ++k) {
      const Braid2Elt x = random_braid(rng, gens, 4);
      const Braid2Elt y = random_braid(rng, gens, 3);
      CHECK(b2_equal(x * x.inverse(), Braid2Elt::identity(m)));
      CHECK(b2_parity(x * y) == (b2_parity(x) ^ b2_parity(y)));
      CHECK(invariant_violations(x * y).empty());
      CHECK(winding(y * x * y.inverse()) == winding(x));
    }
    CHECK_THROWS_AS(gen(PlanarModel(2), Braid2Kind::Rotor) * gen(m, Braid2Kind::Rotor), ModelMismatch);
    CHECK_THROWS_AS(b2_equal(gen(PlanarModel(2), Braid2Kind::Rotor), gen(m, Braid2Kind::Rotor)), ModelMismatch);
  }

  TEST_CASE("index errors") {
    const PlanarModel m(2);
    CHECK_THROWS_AS(gen(m, Braid2Kind::Anchored, 0), MalformedWord);
    CHECK_THROWS_AS(gen(m, Braid2Kind::Anchored, 3), MalformedWord);
    CHECK_THROWS_AS(gen(m, Braid2Kind::Freewheel, 3), MalformedWord);
  }

  TEST_CASE("invariant checker detects a violation") {
    const PlanarModel m(2);
    // The rotor automorphism paired with swap bit 0 misplaces u0 and u1.
    const Braid2Elt bad(m, gen(m, Braid2Kind::Rotor).aut(), 0);
    CHECK_FALSE(invariant_violations(bad).empty());
  }
}
