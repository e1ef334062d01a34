#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "rgal/bsgs.hpp"
#include "rgal/cube.hpp"
#include "rgal/perm.hpp"

using namespace rgal;

TEST_CASE("cycle parsing") {
  Perm p = Perm::parse_cycles("(1,2,3)", 3);
  CHECK(p.images() == std::vector<int>{1, 2, 0});
  CHECK(Perm::parse_cycles("", 5) == Perm(5));
  CHECK_THROWS(Perm::parse_cycles("(1,1)", 3));
  CHECK_THROWS(Perm::parse_cycles("(1,4)", 3));
  CHECK_THROWS(Perm::parse_cycles("(1,2)(2,3)", 3));
}

TEST_CASE("the first face move has five 4-cycles") {
  Perm t1 = cube_moves()[0];
  std::vector<int> want{4, 4, 4, 4, 4};
  want.insert(want.end(), 28, 1);
  CHECK(t1.cycle_type() == want);
  CHECK(t1.sign() == -1);
  CHECK(t1.order() == 4);
}

TEST_CASE("group-law basics") {
  Perm p = Perm::parse_cycles("(1,2,3,4)", 4);
  CHECK(p.then(Perm(4)) == p);
  CHECK(p.power(4) == Perm(4));
  CHECK(p.then(p.inverse()) == Perm(4));
  CHECK(p.inverse() == p.power(-1));
  CHECK_THROWS(p.then(Perm(5)));
}

TEST_CASE("cycle type, sign and order") {
  CHECK(Perm(48).cycle_type() == std::vector<int>(48, 1));
  CHECK(Perm(48).sign() == 1);
  CHECK(Perm(48).order() == 1);
  Perm q = Perm::parse_cycles("(1,2)(3,4,5)", 5);
  CHECK(q.cycle_type() == std::vector<int>{3, 2});
  CHECK(q.sign() == -1);
  CHECK(q.order() == 6);
}

TEST_CASE("sign is a homomorphism and cycle type is conjugation-invariant") {
  std::mt19937_64 rng(31337);
  auto random_perm = [&](int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Perm::from_images(img);
  };
  for (int i = 0; i < 200; ++i) {
    Perm p = random_perm(12), q = random_perm(12);
    CHECK(p.then(q).sign() == p.sign() * q.sign());
    CHECK(q.inverse().then(p).then(q).cycle_type() == p.cycle_type());
  }
}

TEST_CASE("small BSGS orders") {
  CHECK(BSGS({Perm::parse_cycles("(1,2)", 2)}).order() == 2);
  CHECK(BSGS({Perm::parse_cycles("(1,2)", 4), Perm::parse_cycles("(1,2,3,4)", 4)})
            .order() == 24);
  CHECK_THROWS(BSGS({}));
}

TEST_CASE("the six moves generate the full cube group") {
  BSGS g(cube_moves());
  CHECK(g.order() == Int("43252003274489856000"));
  CHECK_FALSE(g.contains(Perm::parse_cycles("(1,2)", 48)));
  CHECK(g.contains(Perm(48)));
  // both printed two-element words sift into <T1..T6>
  for (const Perm& p : cube_two_generators()) CHECK(g.contains(p));
}

TEST_CASE("random words stay inside the group they were built from") {
  auto moves = cube_moves();
  BSGS g(moves);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int i = 0; i < 50; ++i) {
    Perm w(48);
    for (int j = 0; j < 20; ++j) w = w.then(moves[pick(rng)]);
    CHECK(g.contains(w));
  }
}

TEST_CASE("uniform sampling from a group of order two") {
  BSGS g({Perm::parse_cycles("(1,2)", 2)});
  std::mt19937_64 rng(17);
  int identity = 0;
  const int kDraws = 10000;
  for (int i = 0; i < kDraws; ++i)
    if (g.random_element(rng).is_identity()) ++identity;
  CHECK(identity > kDraws * 0.48);
  CHECK(identity < kDraws * 0.52);
}

TEST_CASE("sampled cube elements are members") {
  BSGS g(cube_moves());
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) CHECK(g.contains(g.random_element(rng)));
}
