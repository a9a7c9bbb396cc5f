#include "doctest.h"
#include "goeritz/goeritz.hpp"
#include "goeritz/random.hpp"

using namespace goeritz;
using surface::a;
using surface::b;

namespace {

SurfaceWord sw(std::initializer_list<Letter> l, int g) { return SurfaceWord::normalize(l, g); }

ArcClass random_arc(Rng& rng, int g) {
  return {SurfaceWord::normalize(random_surface_letters(rng, g, uniform_below(rng, 12)), g), uniform_below(rng, 2)};
}

std::vector<GoeritzGen> all_generators(int g) {
  std::vector<GoeritzGen> out{GoeritzGen::Rho0(), GoeritzGen::Rho0(-1)};
  for (int e : {1, -1}) {
    for (int i = 1; i <= g; ++i) {
      out.push_back(GoeritzGen::A(i, e));
      out.push_back(GoeritzGen::APrime(i, e));
    }
    for (int j = 1; j <= 2 * g; ++j) out.push_back(GoeritzGen::F(j, e));
  }
  return out;
}

}  // namespace

TEST_SUITE("goeritz") {
  TEST_CASE("model tables") {
    for (int g = 1; g <= 3; ++g) {
      const HandlebodyModel m(g);
      std::vector<Letter> prod;
      for (int i = 1; i <= g; ++i) {
        // gamma_i and gamma'_i are meridian classes: conjugates of a_i^{+-1}.
        CHECK(m.gamma(i).abelianization() == sw({a(i)}, g).abelianization());
        const auto& gp = m.gamma_prime(i).letters();
        CHECK(surface_equal(m.gamma_prime(i), sw({b(i), -a(i), -b(i)}, g)));
        for (auto x : m.gamma(i).letters()) prod.push_back(x);
        prod.insert(prod.end(), gp.begin(), gp.end());
      }
      // gamma_1 gamma'_1 ... gamma_g gamma'_g is the surface relator.
      CHECK(SurfaceWord::normalize(prod, g).is_identity());
      for (int i = 1; i <= g; ++i) {
        CHECK(m.crossings(2 * i - 1).empty());
        CHECK(m.crossings(2 * i) == std::vector<Crossing>{{i, 1}});
        CHECK(is_realizable(m.gamma(i)));
        CHECK(is_realizable(m.gamma_prime(i)));
        CHECK_FALSE(is_realizable(m.loop(2 * i)));
      }
    }
    CHECK_THROWS_AS(HandlebodyModel(0), MalformedWord);
  }

  TEST_CASE("single generator actions") {
    const int g = 2;
    const HandlebodyModel m(g);
    const ArcClass id = ArcClass::identity(g);
    CHECK(arc_equal(g_act(m, GoeritzGen::A(1), id), {m.gamma(1), 0}));
    CHECK(arc_equal(g_act(m, GoeritzGen::APrime(2, -1), id), {m.gamma_prime(2).inverse(), 0}));
    for (int j = 1; j <= 2 * g; ++j) CHECK(arc_equal(g_act(m, GoeritzGen::F(j), id), id));
    const ArcClass x{sw({a(1), b(2)}, g), 1};
    CHECK(arc_equal(g_act(m, GoeritzGen::Rho0(), x), {sw({-b(2), -a(1)}, g), 0}));
    // F(j) moves both ends along c_j: w -> c_j^-1 w c_j.
    CHECK(arc_equal(g_act(m, GoeritzGen::F(2), x), {sw({-b(1), a(1), b(2), b(1)}, g), 1}));
    CHECK_THROWS_AS(g_act(m, GoeritzGen::A(1), ArcClass::identity(3)), ModelMismatch);
    CHECK_THROWS_AS(g_act(m, GoeritzGen::A(3), id), MalformedWord);
  }

  TEST_CASE("rotor is an involution on arcs and inverse pairs act trivially") {
    Rng rng(7);
    for (int k = 0; k < 200; ++k) {
      const int g = 1 + uniform_below(rng, 3);
      const HandlebodyModel m(g);
      const ArcClass x = random_arc(rng, g);
      CHECK(arc_equal(g_act(m, GoeritzGen::Rho0(), g_act(m, GoeritzGen::Rho0(), x)), x));
      for (const auto& gen : all_generators(g)) CHECK(arc_equal(g_act(m, gen.inverse(), g_act(m, gen, x)), x));
    }
  }

  TEST_CASE("terminal arc examples") {
    CHECK(arc_equal(g_tau(GoeritzWord(2)), ArcClass::identity(2)));
    CHECK(arc_equal(g_tau(GoeritzWord(2, {GoeritzGen::Rho0(), GoeritzGen::Rho0()})), ArcClass::identity(2)));
    CHECK(arc_equal(g_tau(GoeritzWord(2, {GoeritzGen::A(1), GoeritzGen::A(1, -1)})), ArcClass::identity(2)));
    // The product of all anchored loops is the relator, so its terminal arc is alpha_0.
    for (int g = 1; g <= 3; ++g) {
      GoeritzWord w(g);
      for (int i = 1; i <= g; ++i) {
        w.push_back(GoeritzGen::A(i));
        w.push_back(GoeritzGen::APrime(i));
      }
      CHECK(arc_equal(g_tau(w), ArcClass::identity(g)));
    }
  }

  TEST_CASE("inserting an inverse pair does not change the terminal arc") {
    Rng rng(8);
    for (int k = 0; k < 200; ++k) {
      const int g = 1 + uniform_below(rng, 3);
      const GoeritzWord w = random_goeritz_word(rng, g, 20);
      const auto gens = all_generators(g);
      const GoeritzGen x = gens[uniform_below(rng, static_cast<int>(gens.size()))];
      std::vector<GoeritzGen> v = w.gens();
      const int pos = uniform_below(rng, static_cast<int>(v.size()) + 1);
      v.insert(v.begin() + pos, {x, x.inverse()});
      CHECK(arc_equal(g_tau(GoeritzWord(g, v)), g_tau(w)));
      CHECK(arc_equal(g_tau(w.reduced()), g_tau(w)));
    }
  }

  TEST_CASE("terminal arc is an action: tau(uv) = act_v(tau(u))") {
    Rng rng(9);
    for (int k = 0; k < 200; ++k) {
      const int g = 1 + uniform_below(rng, 3);
      const HandlebodyModel m(g);
      const GoeritzWord u = random_goeritz_word(rng, g, 15);
      const GoeritzWord v = random_goeritz_word(rng, g, 15);
      ArcClass t = g_tau(u);
      for (const auto& x : v.gens()) t = g_act(m, x, t);
      CHECK(arc_equal(g_tau(u * v), t));
      CHECK(arc_equal(g_tau(u * u.inverse()), ArcClass::identity(g)));
      CHECK(is_realizable(g_tau(u).w));
    }
  }

  TEST_CASE("conjugating by the rotor swaps the roles of the ends") {
    Rng rng(10);
    for (int g = 1; g <= 3; ++g) {
      const HandlebodyModel m(g);
      for (const auto& x : all_generators(g)) {
        const GoeritzWord conj(g, {GoeritzGen::Rho0(), x, GoeritzGen::Rho0(-1)});
        CHECK(arc_equal(g_tau(conj), g_act_end_swapped(m, x, ArcClass::identity(g))));
        for (int k = 0; k < 20; ++k) {
          const ArcClass s = random_arc(rng, g);
          ArcClass t = s;
          for (const auto& y : conj.gens()) t = g_act(m, y, t);
          CHECK(arc_equal(t, g_act_end_swapped(m, x, s)));
        }
      }
    }
  }

  TEST_CASE("freewheeling predicate") {
    Rng rng(12);
    for (int k = 0; k < 200; ++k) {
      const int g = 1 + uniform_below(rng, 3);
      GoeritzWord w(g);
      const int len = uniform_below(rng, 20);
      for (int j = 0; j < len; ++j) {
        const int e = uniform_below(rng, 2) ? 1 : -1;
        const int c = uniform_below(rng, 2 * g + 1);
        w.push_back(c == 0 ? GoeritzGen::Rho0(e) : GoeritzGen::F(c, e));
      }
      CHECK(g_is_freewheeling(w));
    }
    CHECK_FALSE(g_is_freewheeling(GoeritzWord(2, {GoeritzGen::A(1)})));
    // A(1) F(2) A(1)^-1 leaves a1 b2^-1 a1 b2 a1^-1 after conjugation, which
    // abelianizes to a1 and is therefore nontrivial.
    const GoeritzWord w(2, {GoeritzGen::A(1), GoeritzGen::F(2), GoeritzGen::A(1, -1)});
    const ArcClass t = g_tau(w);
    CHECK(surface_equal(t.w, sw({-b(1), a(1), b(1), -a(1)}, 2)));
    CHECK(t.w.abelianization() == std::vector<long>{0, 0, 0, 0});
    CHECK_FALSE(g_is_freewheeling(w));
  }

  TEST_CASE("factor examples") {
    CHECK(g_factor(ArcClass::identity(2)).empty());
    const HandlebodyModel m(2);
    CHECK(g_factor({m.gamma(1), 0}) == GoeritzWord(2, {GoeritzGen::A(1)}));
    CHECK(g_factor({m.gamma_prime(2), 0}) == GoeritzWord(2, {GoeritzGen::APrime(2)}));
    CHECK(g_factor({m.gamma_prime(2).inverse(), 0}) == GoeritzWord(2, {GoeritzGen::APrime(2, -1)}));
    CHECK(g_factor({SurfaceWord(2), 1}) == GoeritzWord(2, {GoeritzGen::Rho0()}));
    const ArcClass t{sw({b(1), a(2), -b(1), a(1)}, 2), 1};
    CHECK(arc_equal(g_tau(g_factor(t)), t));
    CHECK_THROWS_AS(g_factor({sw({b(1)}, 2), 0}), NotRealizable);
    CHECK_THROWS_AS(g_factor({sw({b(1), b(1), a(1)}, 1), 0}), NotRealizable);
  }

  TEST_CASE("factor round trip on random realizable targets") {
    Rng rng(13);
    for (int k = 0; k < 300; ++k) {
      const int g = 1 + uniform_below(rng, 3);
      const ArcClass t{g_tau(random_goeritz_word(rng, g, 30)).w, uniform_below(rng, 2)};
      const GoeritzWord f = g_factor(t);
      CHECK(arc_equal(g_tau(f), t));
      for (const auto& x : f.gens()) CHECK((x.kind != GenKind::Rho0 || &x == &f.gens().front()));
    }
  }

  TEST_CASE("decomposition") {
    Rng rng(14);
    const GoeritzWord pure_f(2, {GoeritzGen::F(1), GoeritzGen::Rho0(), GoeritzGen::F(4, -1)});
    const Decomposition d0 = g_decompose(pure_f);
    CHECK(d0.anchored_part.empty());
    CHECK(d0.residual == pure_f);
    const Decomposition d1 = g_decompose(GoeritzWord(2, {GoeritzGen::A(1)}));
    CHECK(d1.anchored_part == GoeritzWord(2, {GoeritzGen::A(1)}));
    CHECK(g_is_freewheeling(d1.residual));
    for (int k = 0; k < 300; ++k) {
      const int g = 1 + uniform_below(rng, 3);
      const GoeritzWord w = random_goeritz_word(rng, g, 30);
      const Decomposition d = g_decompose(w);
      CHECK(g_is_freewheeling(d.residual));
      CHECK(surface_equal(g_tau(d.anchored_part).w, g_tau(w).w));
      // residual * anchored_part is the input up to cancelling inverse pairs.
      CHECK((d.residual * d.anchored_part).reduced() == w.reduced());
    }
  }

  TEST_CASE("rotor exponent and printing") {
    const GoeritzWord w(2, {GoeritzGen::Rho0(), GoeritzGen::A(2), GoeritzGen::Rho0(), GoeritzGen::Rho0(-1),
                            GoeritzGen::APrime(1, -1), GoeritzGen::F(3)});
    CHECK(rotor_exponent(w) == 1);
    CHECK(w.to_string() == "r a2 r r^-1 a1'^-1 f3");
    CHECK(w.inverse().to_string() == "f3^-1 a1' r r^-1 a2^-1 r^-1");
    CHECK(w.reduced().to_string() == "r a2 a1'^-1 f3");
    CHECK_THROWS_AS(GoeritzWord(2, {GoeritzGen::F(5)}), MalformedWord);
    CHECK_THROWS_AS(GoeritzWord(2, {GoeritzGen::A(1, 2)}), MalformedWord);
    CHECK_THROWS_AS(GoeritzWord(2) * GoeritzWord(3), ModelMismatch);
  }
}
