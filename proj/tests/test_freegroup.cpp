#include "doctest.h"
#include "goeritz/freegroup.hpp"
#include "goeritz/random.hpp"

using namespace goeritz;

namespace {

FWord random_word(Rng& rng, int rank, int len) {
  std::vector<Letter> raw;
  for (int k = 0; k < len; ++k) {
    const Letter x = 1 + uniform_below(rng, rank);
    raw.push_back(uniform_below(rng, 2) ? x : -x);
  }
  return FWord::reduce(raw, rank);
}

// Random automorphism as a product of elementary Nielsen moves, built
// together with its inverse.
FAut random_aut(Rng& rng, int rank, int moves) {
  FAut a = FAut::identity(rank);
  for (int m = 0; m < moves; ++m) {
    const int i = 1 + uniform_below(rng, rank);
    int j = 1 + uniform_below(rng, rank - 1);
    if (j >= i) ++j;
    std::vector<FWord> img, inv;
    for (int k = 1; k <= rank; ++k) {
      img.push_back(FWord::generator(rank, k));
      inv.push_back(FWord::generator(rank, k));
    }
    // x_i -> x_i x_j, inverse x_i -> x_i x_j^-1
    img[i - 1] = FWord::reduce({i, j}, rank);
    inv[i - 1] = FWord::reduce({i, -j}, rank);
    a = compose(FAut(img, inv), a);
  }
  return a;
}

}  // namespace

TEST_SUITE("freegroup") {
  TEST_CASE("free reduction examples") {
    const int a = 1, b = 2, c = 3;
    CHECK(FWord::reduce({a, -a, b}, 3).letters() == std::vector<Letter>{b});
    CHECK(FWord::reduce({}, 3).empty());
    CHECK(FWord::reduce({a, b, -b, -a, c}, 3).letters() == std::vector<Letter>{c});
  }

  TEST_CASE("out-of-range letters are rejected") {
    CHECK_THROWS_AS(FWord::reduce({1, 4}, 3), MalformedWord);
    CHECK_THROWS_AS(FWord::reduce({0}, 3), MalformedWord);
    CHECK_THROWS_AS(FWord::reduce({-5}, 3), MalformedWord);
    CHECK_THROWS_AS(FWord::generator(2, 3), MalformedWord);
  }

  TEST_CASE("reduction is idempotent and never lengthens") {
    Rng rng(11);
    for (int k = 0; k < 300; ++k) {
      std::vector<Letter> raw;
      const int len = uniform_below(rng, 25);
      for (int j = 0; j < len; ++j) raw.push_back((1 + uniform_below(rng, 3)) * (uniform_below(rng, 2) ? 1 : -1));
      const FWord w = FWord::reduce(raw, 3);
      CHECK(w.size() <= raw.size());
      CHECK(FWord::reduce(w.letters(), 3) == w);
      for (std::size_t i = 1; i < w.size(); ++i) CHECK(w.letters()[i] != -w.letters()[i - 1]);
    }
  }

  TEST_CASE("word arithmetic") {
    const FWord x = FWord::reduce({1, 2, -1}, 2);
    CHECK((x * x.inverse()).empty());
    CHECK(x.pow(3) == FWord::reduce({1, 2, 2, 2, -1}, 2));
    CHECK(x.pow(-1) == x.inverse());
    CHECK(x.pow(0).empty());
    CHECK(x.exponent_sum(1) == 0);
    CHECK(x.exponent_sum(2) == 1);
    CHECK(x.to_string() == "x1 x2 x1^-1");
    CHECK(FWord(2).to_string() == "1");
    CHECK_THROWS_AS(x * FWord::generator(3, 1), RankMismatch);
  }

  TEST_CASE("cyclic core and conjugacy") {
    const FWord w = FWord::reduce({1, 2, 3, -1}, 3);
    CHECK(cyclic_core(w) == FWord::reduce({2, 3}, 3));
    CHECK(conjugate(w, FWord::reduce({3, 2}, 3)));
    CHECK_FALSE(conjugate(w, FWord::reduce({2, 2}, 3)));
    CHECK_FALSE(conjugate(FWord::generator(3, 1), FWord::generator(3, 1).inverse()));
    CHECK(conjugate(FWord(3), FWord(3)));
  }

  TEST_CASE("automorphism application examples") {
    // sigma: x1 -> x1 x2 x1^-1, x2 -> x1
    const FAut sigma({FWord::reduce({1, 2, -1}, 2), FWord::reduce({1}, 2)},
                     {FWord::reduce({2}, 2), FWord::reduce({-2, 1, 2}, 2)});
    const FWord w = FWord::reduce({1, 2, -1, -1, 2}, 2);
    CHECK(FAut::identity(2).apply(w) == w);
    CHECK(sigma.apply(FWord::generator(2, 2)) == FWord::generator(2, 1));
    CHECK((compose(sigma, sigma.inverse()) == FAut::identity(2)));
    CHECK(compose(sigma, sigma).image(2) == FWord::reduce({1, 2, -1}, 2));
    CHECK_THROWS_AS(sigma.apply(FWord::generator(3, 1)), RankMismatch);
    CHECK_THROWS_AS(compose(sigma, FAut::identity(3)), RankMismatch);
  }

  TEST_CASE("non-invertible tables are rejected") {
    // x1 -> x1^2 is an endomorphism with no inverse; any claimed inverse fails.
    CHECK_THROWS_AS(FAut({FWord::reduce({1, 1}, 2), FWord::generator(2, 2)},
                         {FWord::generator(2, 1), FWord::generator(2, 2)}),
                    InvariantViolation);
    CHECK_THROWS_AS(FAut({FWord::generator(2, 1)}, {FWord::generator(2, 1)}), Error);
  }

  TEST_CASE("automorphisms are homomorphisms and composition is associative") {
    Rng rng(5);
    for (int k = 0; k < 60; ++k) {
      const FAut s = random_aut(rng, 3, 4), t = random_aut(rng, 3, 4), u = random_aut(rng, 3, 4);
      const FWord x = random_word(rng, 3, 12), y = random_word(rng, 3, 12);
      CHECK(s.apply(x * y) == s.apply(x) * s.apply(y));
      CHECK((compose(compose(s, t), u) == compose(s, compose(t, u))));
      CHECK(compose(s, t).apply(x) == s.apply(t.apply(x)));
      CHECK(s.inverse().apply(s.apply(x)) == x);
      CHECK((compose(s, s.inverse()) == FAut::identity(3)));
    }
  }
}
