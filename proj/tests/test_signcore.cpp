#include <doctest.h>

#include <random>

#include "kscyc/linalg.hpp"
#include "kscyc/signcore.hpp"
#include "kscyc/truncation.hpp"

using namespace kscyc;

namespace {

// Oracle: bubble the right block to the front one adjacent swap at a time.
int koszul_by_transpositions(std::vector<GradedSymbol> left, std::vector<GradedSymbol> right) {
  std::vector<GradedSymbol> seq = left;
  seq.insert(seq.end(), right.begin(), right.end());
  int sign = 1;
  std::size_t front = 0;
  for (std::size_t r = left.size(); r < seq.size(); ++r, ++front)
    for (std::size_t i = r; i > front; --i) {
      const auto& a = seq[i - 1];
      const auto& b = seq[i];
      if ((a.shifted_degree * b.shifted_degree + a.sharp * b.sharp) % 2 != 0) sign = -sign;
      std::swap(seq[i - 1], seq[i]);
    }
  return sign;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+2/1") == 2);
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(Rational(4) / 2) == "2");
  for (const char* bad : {"", "1/0", "x", "1.5", "2/", "/3", "1 /2"})
    CHECK_THROWS_AS(parse_rational(bad), InputError);
}

TEST_CASE("koszul sign agrees with adjacent transpositions") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(-3, 4), sharp(-1, 1), len(0, 4);
  for (int k = 0; k < 500; ++k) {
    std::vector<GradedSymbol> l(len(rng)), r(len(rng));
    for (auto& s : l) s = {deg(rng), sharp(rng)};
    for (auto& s : r) s = {deg(rng), sharp(rng)};
    CHECK(koszul_sign(l, r) == koszul_by_transpositions(l, r));
  }
}

TEST_CASE("koszul sign on single symbols") {
  const GradedSymbol even{0, 0}, odd{1, 0}, dx{1, 1};
  CHECK(koszul_sign(std::vector{even}, std::vector{even}) == 1);
  CHECK(koszul_sign(std::vector{odd}, std::vector{odd}) == -1);
  CHECK(koszul_sign(std::vector{dx}, std::vector{dx}) == 1);
}

TEST_CASE("shifted degree of words") {
  const BasisElement u{"u", 0, true}, t{"t", 2, false};
  CHECK(shifted_degree_of_word(std::vector<BasisElement>{}) == 0);
  CHECK(shifted_degree_of_word(std::vector{u}) == -1);
  CHECK(shifted_degree_of_word(std::vector{t, t}) == 2);
}

TEST_CASE("swap exponent and parity helpers") {
  CHECK(sign_of(3) == -1);
  CHECK(sign_of(-2) == 1);
  CHECK(parity_of(-1) == 1);
  CHECK(swap_exponent(1, 1) == 1);
  CHECK(swap_exponent(1, 1, 1, 1) == 0);
  CHECK(swap_exponent(0, 1, 1, 0) == 0);
}

TEST_CASE("basis validation and shifted degrees") {
  Basis b({{"u", 0, true}, {"t", 2, false}});
  CHECK(b.size() == 2);
  CHECK(b.unit() == 0);
  CHECK(b.index_of("t") == 1);
  CHECK_THROWS_AS(b.index_of("s"), InputError);
  CHECK(b.parity(0) == 1);
  CHECK(b.parity(1) == 1);
  CHECK(b.shifted_degree({0, 1, 1}) == 1);
  CHECK(b.word_parity({0, 1}) == 0);
  CHECK(b.format_word({1, 0}) == "[t,u]");

  CHECK_THROWS_AS(Basis({{"u", 0, false}, {"u", 2, false}}), InputError);
  CHECK_THROWS_AS(Basis({{"u", 0, true}, {"v", 0, true}}), InputError);
}

TEST_CASE("sparse maps never store zeros") {
  Vec v;
  add_term(v, Mono{0, {1}}, 2);
  add_term(v, Mono{0, {1}}, -2);
  CHECK(v.empty());
  add_term(v, Mono{0, {1}}, 0);
  CHECK(v.empty());
  const Vec a = single({0, 1}, 3), b = single({0, 1}, 3, 1);
  CHECK(plus(a, b).size() == 2);
  CHECK(minus(a, a).empty());
  CHECK(scaled(a, 0).empty());
  const auto idx = index_by_word(plus(a, b));
  REQUIRE(idx.size() == 1);
  CHECK(idx.begin()->second.size() == 2);
}

TEST_CASE("truncation levels and orders") {
  Truncation t;
  t.order = 6;
  t.cutoff = Rational(4);
  t.levels = {0, 1, 2, 3};
  CHECK(t.level(Rational(0)) == 0);
  CHECK(t.level(Rational(2)) == 2);
  CHECK(t.level(Rational(3, 2)) == 2);
  CHECK(t.exact_level(Rational(3, 2)) == std::nullopt);
  CHECK(t.order_of(Rational(1), 3) == 5);
  CHECK(t.keep(Rational(1), 4));
  CHECK_FALSE(t.keep(Rational(1), 5));
  CHECK_FALSE(t.keep(Rational(4), 1));

  Vec v = plus(single({0}, 1), single({0, 0, 0, 0, 0}, 1, 1));
  CHECK(truncate(v, t).size() == 1);
  CHECK(min_order(v, t) == 1);
  CHECK(min_order(Vec{}, t) == std::nullopt);

  // 2 letters: 2 + 4 + 8 words of length 1..3
  CHECK(all_words({0, 1}, 1, 3).size() == 14);
  CHECK(all_words({0, 1}, 0, 0).size() == 1);
  CHECK(all_words({0, 1, 2}, 2, 2).front() == Word{0, 0});
}

TEST_CASE("exact elimination") {
  // rank 2: third row is the sum of the first two
  Matrix a{{1, 2, 3}, {0, 1, 1}, {1, 3, 4}};
  CHECK(rank(a) == 2);
  CHECK(rank(transpose(a)) == 2);
  CHECK_FALSE(solve(a, {1, 0, 0}).has_value());
  auto x = solve(a, {1, 1, 2});
  REQUIRE(x.has_value());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += a[i][j] * (*x)[j];
    CHECK(s == std::vector<Rational>{1, 1, 2}[i]);
  }

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int k = 0; k < 50; ++k) {
    Eliminator e(5);
    Matrix m(4, std::vector<Rational>(5));
    for (auto& row : m) {
      SparseRow sr;
      for (int j = 0; j < 5; ++j) {
        row[j] = c(rng);
        if (!is_zero(row[j])) sr[j] = row[j];
      }
      e.add_row(sr);
    }
    const auto ns = e.nullspace();
    CHECK(e.rank() + static_cast<int>(ns.size()) == 5);
    CHECK(e.rank() == rank(m));
    for (const auto& n : ns)
      for (const auto& row : m) {
        Rational s = 0;
        for (const auto& [j, v] : n) s += row[j] * v;
        CHECK(is_zero(s));
      }
  }
}
