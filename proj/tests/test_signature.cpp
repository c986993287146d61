#include <algorithm>
#include <random>

#include "doctest.h"
#include "nec/signature.hpp"
#include "support.hpp"

using namespace nec;
using nec::test::area_oracle;

namespace {

Rational rat(std::pair<std::int64_t, std::int64_t> q) {
  return Rational(q.first, q.second);
}

Rational oracle_area(NecSignature const& s) {
  return rat(area_oracle(s.genus(), s.sign() == Sign::plus, s.proper_periods(),
                         s.period_cycles()));
}

bool has_violation(NecSignature const& sig, std::string const& field) {
  auto const v = validate_signature(sig);
  return std::ranges::any_of(v, [&](Violation const& x) { return x.field == field; });
}

std::vector<std::string> generator_names(Presentation const& pres) {
  std::vector<std::string> out;
  for (auto const& g : pres.generators()) out.push_back(g.name);
  return out;
}

std::vector<std::string> relator_texts(Presentation const& pres) {
  std::vector<std::string> out;
  for (auto const& r : pres.relators()) out.push_back(pres.format_relator(r));
  return out;
}

}  // namespace

TEST_CASE("validate_signature") {
  CHECK(validate_signature(parse_signature("(0;+;[ ];{(2,3),( )})")).empty());

  CHECK(has_violation(parse_signature("(0;-;[ ];{ })"), "sign"));

  // -1 + 1/2 (1/2 + 2/3 + 5/6) = 0
  auto const v = validate_signature(parse_signature("(0;+;[ ];{(2,3,6)})"));
  REQUIRE(v.size() == 1);
  CHECK(v[0].field == "area");
  CHECK(v[0].message.find("Euclidean") != std::string::npos);

  CHECK(has_violation(parse_signature("(0;+;[2,3];{})"), "area"));
  CHECK(has_violation(NecSignature(0, Sign::plus, {0, 3, 7}, {}), "proper_periods"));
  CHECK(has_violation(NecSignature(0, Sign::plus, {}, {{2, -4, 7}}), "period_cycles"));
  CHECK(has_violation(NecSignature(-1, Sign::plus, {2, 3, 7}, {}), "genus"));
}

TEST_CASE("period-1 entries are dropped at construction") {
  NecSignature const sig(0, Sign::plus, {1, 3, 1}, {{1, 2, 1}, {1}});
  CHECK(sig.proper_periods() == std::vector<int>{3});
  CHECK(sig.period_cycles() == std::vector<PeriodCycle>{{2}, {}});
  CHECK(sig.number_of_cycles() == 2);
}

TEST_CASE("reduced_area") {
  auto const ex2 = parse_signature("(0;+;[ ];{(2,3),( )})");
  auto const ex3 = parse_signature("(0;+;[6,6];{(5,8,12)})");
  auto const ex2_sub = parse_signature("(1;-;[ ];{(3),( ),( )})");

  CHECK(reduced_area(ex2) == oracle_area(ex2));
  CHECK(reduced_area(ex3) == oracle_area(ex3));
  CHECK(reduced_area(ex2_sub) == oracle_area(ex2_sub));

  CHECK(oracle_area(ex2) == Rational(7, 12));
  CHECK(oracle_area(ex3) == Rational(157, 80));
  CHECK(oracle_area(ex2_sub) == Rational(7, 3));

  CHECK(reduced_area(ex2_sub) == Rational(4) * reduced_area(ex2));
  auto const ex3_sub = parse_signature("(9;-;[2,3,6,8];{(2,2,5)})");
  CHECK(reduced_area(ex3_sub) == Rational(6) * reduced_area(ex3));
}

TEST_CASE("canonical_fuchsian") {
  CHECK(canonical_fuchsian(parse_signature("(0;+;[ ];{(2,3),( )})")) ==
        FuchsianSignature{1, {2, 3}});
  CHECK(canonical_fuchsian(parse_signature("(1;-;[ ];{(3),( ),( )})")) ==
        FuchsianSignature{3, {3}});
  for (auto const& [a, b, c] : {std::tuple{2, 3, 7}, {4, 6, 8}, {3, 3, 4}, {5, 2, 5}}) {
    NecSignature const tri(0, Sign::plus, {}, {{a, b, c}});
    CHECK(canonical_fuchsian(tri) == FuchsianSignature{0, {a, b, c}});
  }
  CHECK(canonical_fuchsian(parse_signature("(0;+;[6,6];{(5,8,12)})")) ==
        FuchsianSignature{0, {6, 6, 6, 6, 5, 8, 12}});
  // no reflections: the formula still applies, doubling everything
  CHECK(canonical_fuchsian(parse_signature("(2;+;[3];{})")) ==
        FuchsianSignature{3, {3, 3}});
  CHECK(format_fuchsian(FuchsianSignature{1, {2, 3}}) == "(1; 2,3)");
}

TEST_CASE("canonical_presentation") {
  SUBCASE("extended triangle group") {
    auto const pres = canonical_presentation(parse_signature("(0;+;[ ];{(4,6,8)})"));
    CHECK(generator_names(pres) ==
          std::vector<std::string>{"e1", "c1.0", "c1.1", "c1.2", "c1.3"});
    CHECK(relator_texts(pres) ==
          std::vector<std::string>{"c1.0^2", "c1.1^2", "c1.2^2", "c1.3^2",
                                   "(c1.0 c1.1)^4", "(c1.1 c1.2)^6",
                                   "(c1.2 c1.3)^8", "e1 c1.0 e1^-1 c1.3", "e1"});
    CHECK(pres.relators().back().kind == RelatorKind::long_relation);
  }
  SUBCASE("example 3 group") {
    auto const pres = canonical_presentation(parse_signature("(0;+;[6,6];{(5,8,12)})"));
    CHECK(generator_names(pres) ==
          std::vector<std::string>{"x1", "x2", "e1", "c1.0", "c1.1", "c1.2", "c1.3"});
    CHECK(relator_texts(pres) ==
          std::vector<std::string>{"x1^6", "x2^6", "c1.0^2", "c1.1^2", "c1.2^2",
                                   "c1.3^2", "(c1.0 c1.1)^5", "(c1.1 c1.2)^8",
                                   "(c1.2 c1.3)^12", "e1 c1.0 e1^-1 c1.3",
                                   "x1 x2 e1"});
  }
  SUBCASE("smallest nonorientable") {
    auto const pres = canonical_presentation(parse_signature("(1;-;[ ];{ })"));
    CHECK(generator_names(pres) == std::vector<std::string>{"a1"});
    CHECK(relator_texts(pres) == std::vector<std::string>{"a1 a1"});
  }
  SUBCASE("surface generators, sign plus") {
    auto const pres = canonical_presentation(parse_signature("(2;+;[ ];{ })"));
    CHECK(generator_names(pres) == std::vector<std::string>{"a1", "b1", "a2", "b2"});
    CHECK(relator_texts(pres) ==
          std::vector<std::string>{"a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1"});
  }
}

TEST_CASE("orientation_sign") {
  auto const minus = canonical_presentation(parse_signature("(1;-;[3];{(2,2),()})"));
  CHECK(orientation_sign(minus, "c1.0") == -1);
  CHECK(orientation_sign(minus, "c2.0") == -1);
  CHECK(orientation_sign(minus, "e1") == 1);
  CHECK(orientation_sign(minus, "x1") == 1);
  CHECK(orientation_sign(minus, "a1") == -1);
  auto const plus = canonical_presentation(parse_signature("(1;+;[3];{})"));
  CHECK(orientation_sign(plus, "a1") == 1);
  CHECK(orientation_sign(plus, "b1") == 1);
  CHECK_THROWS_AS(orientation_sign(plus, "c1.0"), std::invalid_argument);
  CHECK_THROWS_AS(orientation_sign(plus, "zz"), std::invalid_argument);
}

TEST_CASE("normalize") {
  CHECK(normalize(parse_signature("(9;-;[8,2,6,3];{(5,2,2)})")) ==
        parse_signature("(9;-;[2,3,6,8];{(2,2,5)})"));
  auto const normal = parse_signature("(1;-;[ ];{(3),( ),( )})");
  CHECK(normalize(normal) == normal);
  CHECK(normalize(parse_signature("(0;+;[ ];{(3,2,2)})")) ==
        normalize(parse_signature("(0;+;[ ];{(2,2,3)})")));

  // Brute force: the least of all rotations and reflections.
  PeriodCycle const c{4, 2, 3, 2, 5};
  PeriodCycle best = c;
  for (int flip = 0; flip < 2; ++flip) {
    PeriodCycle r = c;
    if (flip) std::ranges::reverse(r);
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::ranges::rotate(r, r.begin() + 1);
      best = std::min(best, r);
    }
  }
  CHECK(canonical_cycle(c) == best);
  CHECK(canonical_cycle({}) == PeriodCycle{});
}

TEST_CASE("genus_from_area") {
  CHECK(genus_from_area(Rational(7, 3), Sign::minus, {}, {{3}, {}, {}}) == 1);
  CHECK(genus_from_area(Rational(471, 40), Sign::minus, {2, 3, 6, 8}, {{2, 2, 5}}) == 9);

  // (3,4,6) triangle group has area 1/8; its kernel with c1.2 inside
  auto const tri = parse_signature("(0;+;[ ];{(3,4,6)})");
  CHECK(Rational(2) * reduced_area(tri) == Rational(1, 4));
  CHECK(genus_from_area(Rational(1, 4), Sign::plus, {3}, {{2, 3}}) == 0);

  // residual 1 is odd
  CHECK_THROWS_AS(genus_from_area(Rational(7, 3), Sign::plus, {}, {{3}, {}, {}}),
                  InconsistentAnalysis);
  // residual 0 is not positive
  CHECK_THROWS_AS(genus_from_area(Rational(4, 3), Sign::minus, {}, {{3}, {}, {}}),
                  InconsistentAnalysis);
  CHECK_THROWS_AS(genus_from_area(Rational(7, 4), Sign::minus, {}, {{3}, {}, {}}),
                  InconsistentAnalysis);
  CHECK_THROWS_AS(genus_from_area(Rational(1, 4), Sign::plus, {3}, {{2, 3}, {}, {}}),
                  InconsistentAnalysis);
}

TEST_CASE("parse and format") {
  auto const sig = parse_signature("  ( 0 ; + ; [ ] ; { ( 2 , 3 ) , ( ) } ) ");
  CHECK(sig == NecSignature(0, Sign::plus, {}, {{2, 3}, {}}));
  CHECK(format_signature(sig) == "(0; +; [ ]; {(2,3),()})");
  CHECK(format_signature(parse_signature("(9;-;[2,3,6,8];{(2,2,5)})")) ==
        "(9; -; [2,3,6,8]; {(2,2,5)})");
  CHECK(format_signature(parse_signature("(0;+;[2,3,7];{})")) == "(0; +; [2,3,7]; {})");
  CHECK(parse_signature("(1;−;[ ];{ })").sign() == Sign::minus);
  CHECK(parse_signature("(0;+;[1,3];{(1,1)})") == parse_signature("(0;+;[3];{()})"));

  for (char const* bad : {"", "(0;+;[ ];{ }", "(0;*;[ ];{ })", "(x;+;[ ];{ })",
                          "(0;+;[2,];{ })", "(0;+;[ ];{(2,3})", "(0;+;[ ];{ }) tail",
                          "(0;+;{ })"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_signature(bad), SyntaxError);
  }
  try {
    parse_signature("(0;+;[2,x];{ })");
    FAIL("no error");
  } catch (SyntaxError const& e) {
    CHECK(e.offset() == 8);
  }
}

TEST_CASE("signature properties on random signatures") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 300; ++trial) {
    auto const sig = nec::test::random_signature(rng);
    CAPTURE(format_signature(sig));

    CHECK(reduced_area(sig) == oracle_area(sig));
    CHECK(fuchsian_area(canonical_fuchsian(sig)) == Rational(2) * reduced_area(sig));
    CHECK(genus_from_area(reduced_area(sig), sig.sign(), sig.proper_periods(),
                          sig.period_cycles()) == sig.genus());

    auto const norm = normalize(sig);
    CHECK(normalize(norm) == norm);
    CHECK(parse_signature(format_signature(sig)) == sig);

    // shuffle periods and cycles, rotate and reverse each cycle
    auto periods = sig.proper_periods();
    auto cycles = sig.period_cycles();
    std::ranges::shuffle(periods, rng);
    std::ranges::shuffle(cycles, rng);
    for (auto& c : cycles) {
      if (c.empty()) continue;
      std::ranges::rotate(c, c.begin() + std::uniform_int_distribution<std::size_t>(
                                             0, c.size() - 1)(rng));
      if (rng() % 2) std::ranges::reverse(c);
    }
    CHECK(normalize(NecSignature(sig.genus(), sig.sign(), periods, cycles)) == norm);

    Presentation const pres(sig);
    std::size_t expected = sig.proper_periods().size() + sig.period_cycles().size() +
                           sig.genus() * (sig.sign() == Sign::plus ? 2 : 1);
    for (auto const& c : sig.period_cycles()) expected += c.size() + 1;
    CHECK(pres.generators().size() == expected);
  }
}
