#include <catch2/catch.hpp>

#include "roots/color_rules.hpp"

using namespace roots;

TEST_CASE("colors are integers greater than one") {
  CHECK_THROWS_AS(Color(1), InvalidColorError);
  CHECK_THROWS_AS(Color(0), InvalidColorError);
  CHECK_THROWS_AS(Color(-3), InvalidColorError);
  CHECK(Color(2).value == 2);
}

TEST_CASE("pairs are admissible exactly when equal") {
  CHECK(pair_admissible(Color(3), Color(3)));
  CHECK(pair_admissible(Color(2), Color(2)));
  CHECK_FALSE(pair_admissible(Color(2), Color(3)));
  for (int a = 2; a <= 12; ++a)
    for (int b = 2; b <= 12; ++b)
      CHECK(pair_admissible(Color(a), Color(b)) == (a == b));
}

TEST_CASE("triples follow the (2,2,n) and (2,3,k) patterns") {
  CHECK(triple_admissible(Color(2), Color(2), Color(7)));
  CHECK(triple_admissible(Color(2), Color(3), Color(5)));
  CHECK_FALSE(triple_admissible(Color(2), Color(3), Color(6)));
  CHECK_FALSE(triple_admissible(Color(3), Color(3), Color(3)));

  // Exhaustive pattern check over sorted triples, all values <= 12.
  for (int a = 2; a <= 12; ++a)
    for (int b = 2; b <= 12; ++b)
      for (int c = 2; c <= 12; ++c) {
        int t[3] = {a, b, c};
        std::sort(t, t + 3);
        bool expected = (t[0] == 2 && t[1] == 2) ||
                        (t[0] == 2 && t[1] == 3 && t[2] >= 3 && t[2] <= 5);
        CHECK(triple_admissible(Color(a), Color(b), Color(c)) == expected);
      }
}

TEST_CASE("triples are order-insensitive") {
  int values[3] = {2, 3, 5};
  std::sort(values, values + 3);
  do {
    CHECK(triple_admissible(Color(values[0]), Color(values[1]),
                            Color(values[2])));
  } while (std::next_permutation(values, values + 3));
}

TEST_CASE("profile admissibility by size") {
  CHECK(profile_admissible(IntersectionProfile{}));        // clean
  CHECK_FALSE(profile_admissible(IntersectionProfile{4})); // no single colors
  CHECK(profile_admissible(IntersectionProfile{2, 2, 2}));
  CHECK(profile_admissible(IntersectionProfile{5, 5}));
  CHECK_FALSE(profile_admissible(IntersectionProfile{2, 5}));
  CHECK_THROWS_AS(profile_admissible(IntersectionProfile{2, 2, 2, 2}),
                  ProfileTooLargeError);
}

TEST_CASE("profiles are multisets: permutation never matters") {
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b)
      for (int c = 2; c <= 6; ++c)
        CHECK(profile_admissible(IntersectionProfile{a, b, c}) ==
              profile_admissible(IntersectionProfile{c, a, b}));
}

TEST_CASE("profiles reject colors below two") {
  CHECK_THROWS_AS(IntersectionProfile{1}, InvalidColorError);
}
