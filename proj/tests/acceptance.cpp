// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "nec/io.hpp"
#include "nec/lowindex.hpp"
#include "support.hpp"

using namespace nec;

namespace {

struct Outcome {
  std::vector<std::string> problems;
  void require(bool ok, std::string const& what) {
    if (!ok) problems.push_back(what);
  }
};

int failures = 0;

void criterion(int number, std::string const& title, double seconds,
               std::function<void(Outcome&)> const& body) {
  Outcome out;
  auto const start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (std::exception const& e) {
    out.problems.push_back(std::string("exception: ") + e.what());
  }
  double const took =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (took >= seconds) {
    std::ostringstream os;
    os << "took " << took << " s, bound " << seconds << " s";
    out.problems.push_back(os.str());
  }
  bool const ok = out.problems.empty();
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ("
            << static_cast<int>(took * 1000) << " ms)";
  for (auto const& p : out.problems) std::cout << "\n    " << p;
  std::cout << std::endl;
}

std::vector<std::string> tokens(Chain const& c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    out.push_back(c.vertices[i].name());
    out.push_back(std::to_string(c.periods[i]));
  }
  return out;
}

bool same_cycle(std::vector<std::string> a, std::vector<std::string> const& b) {
  if (a.size() != b.size()) return false;
  for (int flip = 0; flip < 2; ++flip) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (a == b) return true;
      std::ranges::rotate(a, a.begin() + 1);
    }
    std::ranges::reverse(a);
  }
  return false;
}

bool witness_ok(CosetAction const& action, Witness const& w) {
  Point at = w.base;
  for (auto const& s : w.steps) {
    auto const& g = action.image(s.generator);
    Point const to = s.inverse ? g.inverse()(at) : g(at);
    if (s.from != at || s.to != to) return false;
    at = to;
  }
  return !w.steps.empty() && at == w.base &&
         word_sign(action.presentation(), w.word()) == -1;
}

Rational oracle_area(NecSignature const& s) {
  auto const q = nec::test::area_oracle(s.genus(), s.sign() == Sign::plus,
                                        s.proper_periods(), s.period_cycles());
  return Rational(q.first, q.second);
}

// Signatures for the search-based property criteria, with the largest degree
// searched for each.
std::vector<std::pair<std::string, int>> const search_fixtures{
    {"(0;+;[ ];{(4,6,8)})", 5},   {"(0;+;[ ];{(2,3),( )})", 5},
    {"(0;+;[ ];{(4,4,4)})", 5},   {"(0;+;[3];{(2,2)})", 5},
    {"(1;-;[ ];{(2)})", 5},       {"(0;+;[2,4];{(4)})", 5},
    {"(3;-;[ ];{ })", 5},         {"(1;+;[2];{ })", 5},
    {"(0;+;[2,3];{( )})", 5},     {"(0;+;[6,6];{(5,8,12)})", 4}};

std::vector<SubgroupReport> searched_reports;

}  // namespace

int main() {
  criterion(1, "example 2 end to end", 1.0, [](Outcome& out) {
    auto const report = subgroup_signature(nec::test::example2());
    out.require(report.signature == parse_signature("(1;-;[ ];{(3),( ),( )})"),
                "signature " + format_signature(report.signature));
    auto const hexagon = std::ranges::find_if(
        report.chains, [](Chain const& c) { return c.vertices.size() == 6; });
    out.require(hexagon != report.chains.end() &&
                    same_cycle(tokens(*hexagon),
                               {"c1.1@1", "1", "c1.1@2", "3", "c1.2@2", "1", "c1.0@3", "1",
                                "c1.0@4", "1", "c1.2@4", "1"}),
                "six-link chain");
    int empty_from_d = 0;
    for (auto const& c : report.chains) {
      if (c.cycle.empty() && c.vertices.size() == 1 && c.vertices[0].cycle == 2) ++empty_from_d;
    }
    out.require(empty_from_d == 2, "two empty cycles from c2.0");
    auto const& v = report.orientability;
    out.require(v.kind == OrientabilityKind::nonorientable && v.witness &&
                    witness_ok(report.action, *v.witness) && v.witness->steps.size() == 3,
                "negative triangle witness");
    out.require(report.area.parent_area == Rational(7, 12) &&
                    report.area.subgroup_area == Rational(7, 3) && report.area.genus == 1,
                "area 7/12 -> 7/3 -> g=1");
    auto const trace = render_text(report, true);
    out.require(trace.find("7/12") != std::string::npos &&
                    trace.find("7/3") != std::string::npos,
                "trace shows the area derivation");
  });

  criterion(2, "example 3 end to end", 1.0, [](Outcome& out) {
    auto const report = subgroup_signature(nec::test::example3());
    out.require(report.signature == parse_signature("(9;-;[2,3,6,8];{(2,2,5)})"),
                "signature " + format_signature(report.signature));
    std::multiset<int> from_x1, from_orbit, others;
    for (auto const& c : report.elliptic_contributions) {
      if (c.origin == "x1") {
        from_x1.insert(c.period);
      } else if (c.origin == "<c1.1,c1.2>" && c.cosets == std::vector<Point>{2, 6}) {
        from_orbit.insert(c.period);
      } else {
        others.insert(c.period);
      }
    }
    out.require(from_x1 == std::multiset<int>{2, 3, 6}, "periods 2,3,6 from x1");
    out.require(from_orbit == std::multiset<int>{8}, "period 8 from orbit {2,6}");
    out.require(others.empty(), "no other proper periods");
    auto const printed = nec::test::example3_printed();
    auto const check = validate_action(printed);
    out.require(check.failures.size() == 1 && check.failures[0].text == "x1 x2 e1" &&
                    check.only_long_relation_fails(printed.presentation()),
                "printed action fails exactly the long relation");
  });

  criterion(3, "index-2 subgroups of (4,6,8)", 1.0, [](Outcome& out) {
    auto const subs = index_two_subgroups(parse_signature("(0;+;[];{(4,6,8)})"));
    std::multiset<std::string> got, want;
    for (auto const& s : subs) got.insert(format_signature(normalize(s.report.signature)));
    for (auto const& s : nec::test::triangle_index_two({4, 6, 8})) want.insert(format_signature(s));
    out.require(subs.size() == 7, "count " + std::to_string(subs.size()));
    out.require(got == want, "signature set");
  });

  criterion(4, "area multiplicativity over searched actions", 60.0, [](Outcome& out) {
    std::size_t count = 0;
    for (auto const& [text, max_degree] : search_fixtures) {
      auto const sig = parse_signature(text);
      for (int n = 1; n <= max_degree; ++n) {
        auto const found = search_actions(sig, n);
        out.require(!found.truncated, text + " truncated at degree " + std::to_string(n));
        for (auto const& action : found.actions) {
          ++count;
          try {
            auto report = subgroup_signature(action);
            if (reduced_area(report.signature) != Rational(n) * oracle_area(sig)) {
              out.require(false, "area mismatch for " + text);
            }
            searched_reports.push_back(std::move(report));
          } catch (InconsistentAnalysis const& e) {
            out.require(false, text + ": " + e.what());
          }
        }
      }
    }
    out.require(count >= 200, "only " + std::to_string(count) + " actions");
    std::cout << "    " << count << " actions over " << search_fixtures.size()
              << " signatures\n";
  });

  criterion(5, "canonical Fuchsian cross-check", 60.0, [](Outcome& out) {
    out.require(!searched_reports.empty(), "no reports from criterion 4");
    for (auto const& r : searched_reports) {
      if (!fuchsian_cross_check(r)) {
        out.require(false, "cross-check fails for " + format_signature(r.signature));
      }
    }
    out.require(canonical_fuchsian(parse_signature("(0;+;[ ];{(2,3),( )})")) ==
                    FuchsianSignature{1, {2, 3}},
                "(1; 2,3)");
    out.require(canonical_fuchsian(parse_signature("(1;-;[ ];{(3),( ),( )})")) ==
                    FuchsianSignature{3, {3}},
                "(3; 3)");
    for (auto const& [a, b, c] : {std::tuple{2, 3, 7}, {4, 6, 8}, {3, 5, 7}}) {
      out.require(canonical_fuchsian(NecSignature(0, Sign::plus, {}, {{a, b, c}})) ==
                      FuchsianSignature{0, {a, b, c}},
                  "(0; n1,n2,n3)");
    }
  });

  criterion(6, "orientability suite", 1.0, [](Outcome& out) {
    struct Case {
      CosetAction action;
      OrientabilityKind kind;
      char const* name;
    };
    std::vector<Case> const cases{
        {nec::test::example2(), OrientabilityKind::nonorientable, "example 2"},
        {load_action_file(nec::test::fixture("triangle_237_theta1.yaml")),
         OrientabilityKind::fuchsian, "theta1"},
        {load_action_file(nec::test::fixture("triangle_468_theta2.yaml")),
         OrientabilityKind::orientable_nec, "theta2"}};
    for (auto const& c : cases) {
      for (std::optional<std::uint64_t> seed = std::nullopt;;
           seed = seed ? *seed + 1 : 0) {
        if (seed && *seed == 10) break;
        auto const v = orientability(c.action, seed);
        out.require(v.kind == c.kind, std::string(c.name) + " verdict");
        if (c.kind == OrientabilityKind::nonorientable) {
          out.require(v.witness && witness_ok(c.action, *v.witness),
                      std::string(c.name) + " witness");
        }
      }
    }
  });

  criterion(7, "degree-1 identity", 1.0, [](Outcome& out) {
    std::vector<NecSignature> sigs;
    for (auto const& entry : std::filesystem::directory_iterator(NEC_FIXTURES)) {
      std::ifstream in(entry.path());
      std::string line;
      while (std::getline(in, line)) {
        if (line.starts_with("signature:")) sigs.push_back(parse_signature(line.substr(10)));
      }
    }
    for (auto const& [text, degree] : search_fixtures) sigs.push_back(parse_signature(text));
    out.require(sigs.size() >= 10, "fixture signatures found");
    for (auto const& sig : sigs) {
      auto const report = subgroup_signature(CosetAction::trivial(sig));
      out.require(report.signature == normalize(sig), format_signature(sig));
    }
  });

  return failures;
}
