#include "nec/hoare.hpp"

#include <algorithm>
#include <map>

namespace nec {

std::string InducedReflection::name() const {
  return "c" + std::to_string(cycle) + "." + std::to_string(position) + "@" +
         std::to_string(coset);
}

namespace {

InducedReflection induced(Presentation const& pres, int generator, Point k) {
  auto const& g = pres.generators()[generator];
  return {g.cycle, g.position, k};
}

std::string orbit_text(std::vector<Point> const& orbit) {
  std::string s = "{";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    s += (i ? "," : "") + std::to_string(orbit[i]);
  }
  return s + "}";
}

}  // namespace

std::vector<InducedReflection> induced_reflections(CosetAction const& action) {
  auto const& pres = action.presentation();
  std::vector<InducedReflection> out;
  for (std::size_t g = 0; g < pres.generators().size(); ++g) {
    if (pres.generators()[g].kind != GeneratorKind::reflection) continue;
    for (Point k : action.image(static_cast<int>(g)).fixed_points()) {
      out.push_back(induced(pres, static_cast<int>(g), k));
    }
  }
  std::ranges::sort(out);
  return out;
}

std::vector<EllipticContribution> proper_periods_from_elliptics(
    CosetAction const& action) {
  auto const& pres = action.presentation();
  auto const& periods = action.signature().proper_periods();
  std::vector<EllipticContribution> out;
  for (std::size_t j = 1; j <= periods.size(); ++j) {
    int const x = pres.elliptic(static_cast<int>(j));
    int const n = periods[j - 1];
    for (auto const& cycle : action.image(x).cycles()) {
      int const m = static_cast<int>(cycle.size());
      if (n % m != 0) {
        throw InconsistentAction(
            "inconsistent action: " + pres.generators()[x].name +
            " has a cycle of length " + std::to_string(m) +
            " not dividing its period " + std::to_string(n));
      }
      if (n / m > 1) {
        auto sorted = cycle;
        std::ranges::sort(sorted);
        out.push_back({EllipticContribution::Source::elliptic_generator,
                       pres.generators()[x].name, std::move(sorted), n / m});
      }
    }
  }
  return out;
}

std::vector<OrbitAnalysis> analyze_dihedral_pair(int c, int d, int n,
                                                 CosetAction const& action) {
  auto const& pres = action.presentation();
  auto const& pc = action.image(c);
  auto const& pd = action.image(d);
  Permutation const cd = compose(pc, pd);
  std::string const pair_name =
      "<" + pres.generators()[c].name + "," + pres.generators()[d].name + ">";

  // (cd)-cycle length through each point.
  std::vector<int> cycle_length(action.degree() + 1, 0);
  for (auto const& cyc : cd.cycles()) {
    for (Point p : cyc) cycle_length[p] = static_cast<int>(cyc.size());
  }

  std::vector<Permutation> const gens{pc, pd};
  std::vector<OrbitAnalysis> out;
  for (auto const& orbit : orbits(gens, action.degree())) {
    auto fail = [&](std::string const& why) {
      return InconsistentAction("inconsistent action: orbit " +
                                orbit_text(orbit) + " of " + pair_name + " " +
                                why);
    };
    OrbitAnalysis a;
    a.orbit = orbit;
    a.m = cycle_length[orbit.front()];
    for (Point p : orbit) {
      if (cycle_length[p] != a.m) {
        throw fail("has (cd)-cycles of different lengths");
      }
    }
    if (n % a.m != 0) {
      throw fail("has (cd)-cycle length " + std::to_string(a.m) +
                 " not dividing " + std::to_string(n));
    }
    a.period = n / a.m;

    std::vector<InducedReflection> fixed_c, fixed_d;
    for (Point p : orbit) {
      if (pc(p) == p) fixed_c.push_back(induced(pres, c, p));
      if (pd(p) == p) fixed_d.push_back(induced(pres, d, p));
    }
    std::size_t const incidences = fixed_c.size() + fixed_d.size();
    int const size = static_cast<int>(orbit.size());
    if (incidences == 0) {
      if (size != 2 * a.m) {
        throw fail("has no fixed cosets but size " + std::to_string(size) +
                   " != 2m = " + std::to_string(2 * a.m));
      }
      a.kind = OrbitKind::elliptic;
    } else if (incidences == 2) {
      if (size != a.m) {
        throw fail("has fixed cosets but size " + std::to_string(size) +
                   " != m = " + std::to_string(a.m));
      }
      bool const one_each = fixed_c.size() == 1;
      if ((a.m % 2 == 1) != one_each) {
        throw fail("violates the fixed-coset parity rule for m = " +
                   std::to_string(a.m));
      }
      a.kind = OrbitKind::link;
      if (one_each) {
        a.end1 = fixed_c[0];
        a.end2 = fixed_d[0];
      } else {
        auto const& both = fixed_c.empty() ? fixed_d : fixed_c;
        a.end1 = both[0];
        a.end2 = both[1];
      }
    } else {
      throw fail("has " + std::to_string(incidences) +
                 " fixed-coset incidences, expected 0 or 2");
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Link> closing_links(int cycle, CosetAction const& action) {
  auto const& pres = action.presentation();
  int const s =
      static_cast<int>(action.signature().period_cycles().at(cycle - 1).size());
  int const cs = pres.reflection(cycle, s);
  auto const& e = action.image(pres.connecting(cycle));
  std::vector<Link> out;
  for (Point k : action.image(cs).fixed_points()) {
    out.push_back({{cycle, s, k}, {cycle, 0, e(k)}, 1, true});
  }
  return out;
}

std::vector<Chain> assemble_chains(std::vector<Link> const& links) {
  std::map<InducedReflection, std::vector<std::pair<std::size_t, int>>>
      incidence;  // vertex -> (link, side)
  for (std::size_t l = 0; l < links.size(); ++l) {
    incidence[links[l].end1].emplace_back(l, 0);
    incidence[links[l].end2].emplace_back(l, 1);
  }
  for (auto const& [v, inc] : incidence) {
    if (inc.size() != 2) {
      throw InconsistentAction("inconsistent links: " + v.name() +
                               " has degree " + std::to_string(inc.size()));
    }
  }

  auto end = [&](std::size_t l, int side) -> InducedReflection const& {
    return side == 0 ? links[l].end1 : links[l].end2;
  };

  std::vector<bool> used(links.size(), false);
  std::vector<Chain> chains;
  for (auto const& [start, inc] : incidence) {
    if (used[inc[0].first]) continue;
    // Leave through the link whose far end is smaller.
    auto first = inc[0], second = inc[1];
    auto key = [&](std::pair<std::size_t, int> const& x) {
      return std::tuple(end(x.first, 1 - x.second), links[x.first].period,
                        x.first);
    };
    if (key(second) < key(first)) std::swap(first, second);

    Chain chain;
    auto current = first;
    InducedReflection vertex = start;
    while (true) {
      auto const [l, side] = current;
      used[l] = true;
      chain.vertices.push_back(vertex);
      chain.periods.push_back(links[l].period);
      vertex = end(l, 1 - side);
      auto const& here = incidence.at(vertex);
      std::pair<std::size_t, int> const arrived{l, 1 - side};
      current = here[0] == arrived ? here[1] : here[0];
      if (current == first) break;
    }
    for (int p : chain.periods) {
      if (p != 1) chain.cycle.push_back(p);
    }
    chain.cycle = canonical_cycle(chain.cycle);
    chains.push_back(std::move(chain));
  }
  std::ranges::sort(chains, [](Chain const& a, Chain const& b) {
    return std::tie(a.cycle, a.vertices) < std::tie(b.cycle, b.vertices);
  });
  return chains;
}

SubgroupReport subgroup_signature(CosetAction const& action,
                                  PipelineOptions const& options) {
  auto const& pres = action.presentation();
  auto const& sig = action.signature();

  auto const check = validate_action(action);
  bool unverified = false;
  if (!check.ok()) {
    if (options.allow_invalid_relators && check.only_long_relation_fails(pres)) {
      unverified = true;
    } else {
      std::string msg = "invalid action:";
      for (auto const& f : check.failures) msg += " relator '" + f.text + "' fails;";
      if (!check.transitive) {
        msg += " intransitive (" + std::to_string(check.orbits.size()) +
               " orbits);";
      }
      throw ActionError(msg);
    }
  }

  SubgroupReport report(action);
  report.unverified_input = unverified;
  report.induced_reflections = induced_reflections(action);
  report.elliptic_contributions = proper_periods_from_elliptics(action);

  for (int i = 1; i <= sig.number_of_cycles(); ++i) {
    auto const& cycle = sig.period_cycles()[i - 1];
    for (int j = 1; j <= static_cast<int>(cycle.size()); ++j) {
      int const c = pres.reflection(i, j - 1);
      int const d = pres.reflection(i, j);
      int const n = cycle[j - 1];
      DihedralPairAnalysis pair{i, j, n,
                                compose(action.image(c), action.image(d)),
                                analyze_dihedral_pair(c, d, n, action)};
      std::string const origin = "<" + pres.generators()[c].name + "," +
                                 pres.generators()[d].name + ">";
      for (auto const& a : pair.orbits) {
        if (a.kind == OrbitKind::link) {
          report.links.push_back({a.end1, a.end2, a.period, false});
        } else if (a.period > 1) {
          report.elliptic_contributions.push_back(
              {EllipticContribution::Source::dihedral_orbit, origin, a.orbit,
               a.period});
        }
      }
      report.dihedral_pairs.push_back(std::move(pair));
    }
    auto closing = closing_links(i, action);
    report.links.insert(report.links.end(), closing.begin(), closing.end());
  }

  report.chains = assemble_chains(report.links);
  {
    std::vector<InducedReflection> vertices;
    for (auto const& chain : report.chains) {
      vertices.insert(vertices.end(), chain.vertices.begin(),
                      chain.vertices.end());
    }
    std::ranges::sort(vertices);
    if (vertices != report.induced_reflections) {
      throw InconsistentAction(
          "inconsistent links: chain vertices differ from induced reflections");
    }
  }
  for (auto const& link : report.links) {
    if (link.self_link() && link.period > 1) {
      report.flags.push_back("self-link with period " +
                             std::to_string(link.period) + " at " +
                             link.end1.name());
    }
  }

  for (auto const& c : report.elliptic_contributions) {
    report.proper_periods.push_back(c.period);
  }
  std::ranges::sort(report.proper_periods);
  for (auto const& chain : report.chains) {
    report.period_cycles.push_back(chain.cycle);
  }

  report.orientability = orientability(action);
  Sign const sign = report.orientability.kind == OrientabilityKind::nonorientable
                        ? Sign::minus
                        : Sign::plus;

  auto& area = report.area;
  area.parent_area = reduced_area(sig);
  area.index = action.degree();
  area.subgroup_area = area.parent_area * Rational(area.index);
  area.genus = genus_from_area(area.subgroup_area, sign, report.proper_periods,
                               report.period_cycles);
  area.residual = Rational(sign == Sign::plus ? 2 * area.genus : area.genus);

  report.signature = normalize(NecSignature(area.genus, sign,
                                            report.proper_periods,
                                            report.period_cycles));
  if (!validate_signature(report.signature).empty() ||
      reduced_area(report.signature) != area.subgroup_area) {
    throw InconsistentAnalysis("inconsistent analysis: computed signature " +
                               format_signature(report.signature) +
                               " fails validation");
  }
  if (unverified) report.flags.push_back("unverified input");
  return report;
}

bool fuchsian_cross_check(SubgroupReport const& report) {
  auto const& input = report.action.signature();
  Rational const n(report.area.index);
  if (report.orientability.kind == OrientabilityKind::fuchsian) {
    FuchsianSignature const plus{report.signature.genus(),
                                 report.signature.proper_periods()};
    return report.signature.period_cycles().empty() &&
           fuchsian_area(plus) == n * reduced_area(input);
  }
  return fuchsian_area(canonical_fuchsian(report.signature)) ==
         n * fuchsian_area(canonical_fuchsian(input));
}

}  // namespace nec
