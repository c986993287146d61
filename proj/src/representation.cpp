#include "nec/representation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace nec {

CosetAction::CosetAction(NecSignature const& sig, int degree,
                         std::map<std::string, Permutation> const& images)
    : presentation_(sig), degree_(degree) {
  if (degree < 1) {
    throw ActionError("degree must be positive");
  }
  std::vector<std::string> missing;
  for (auto const& gen : presentation_.generators()) {
    auto it = images.find(gen.name);
    if (it == images.end()) {
      missing.push_back(gen.name);
      continue;
    }
    if (it->second.degree() != degree) {
      throw ActionError("generator " + gen.name + " has degree " +
                        std::to_string(it->second.degree()) + ", expected " +
                        std::to_string(degree));
    }
    images_.push_back(it->second);
  }
  std::vector<std::string> unknown;
  for (auto const& [name, perm] : images) {
    if (presentation_.find(name) < 0) unknown.push_back(name);
  }
  if (!missing.empty() || !unknown.empty()) {
    std::string msg;
    auto list = [](std::vector<std::string> const& names) {
      std::string s;
      for (auto const& n : names) s += (s.empty() ? "" : ", ") + n;
      return s;
    };
    if (!unknown.empty()) msg += "unknown generators: " + list(unknown) + "; ";
    if (!missing.empty()) msg += "missing generators: " + list(missing) + "; ";
    msg += "expected exactly: " + expected_generator_names(presentation_);
    throw ActionError(msg);
  }
}

CosetAction::CosetAction(NecSignature const& sig,
                         std::vector<Permutation> images)
    : presentation_(sig), images_(std::move(images)) {
  if (images_.size() != presentation_.generators().size()) {
    throw ActionError("expected " +
                      std::to_string(presentation_.generators().size()) +
                      " generator images, got " +
                      std::to_string(images_.size()));
  }
  degree_ = images_.empty() ? 1 : images_.front().degree();
  for (auto const& p : images_) {
    if (p.degree() != degree_) throw ActionError("inconsistent degrees");
  }
}

CosetAction CosetAction::trivial(NecSignature const& sig) {
  Presentation const pres(sig);
  return CosetAction(sig, std::vector<Permutation>(pres.generators().size(),
                                                   Permutation::identity(1)));
}

Permutation const& CosetAction::image(std::string_view name) const {
  int const g = presentation_.find(name);
  if (g < 0) {
    throw ActionError("unknown generator '" + std::string(name) + "'");
  }
  return images_[g];
}

Permutation CosetAction::evaluate(std::vector<Letter> const& word) const {
  Permutation result = Permutation::identity(degree_);
  for (auto const& letter : word) {
    auto const& p = images_.at(letter.generator);
    result = compose(result, letter.inverse ? p.inverse() : p);
  }
  return result;
}

Permutation CosetAction::evaluate(Relator const& rel) const {
  return power(evaluate(rel.word), rel.exponent);
}

std::string expected_generator_names(Presentation const& pres) {
  std::string s;
  for (auto const& g : pres.generators()) {
    s += (s.empty() ? "" : ", ") + g.name;
  }
  return s;
}

bool ActionReport::only_long_relation_fails(Presentation const& pres) const {
  return transitive && !failures.empty() &&
         std::ranges::all_of(failures, [&](RelatorFailure const& f) {
           return pres.relators()[f.relator].kind == RelatorKind::long_relation;
         });
}

ActionReport validate_action(CosetAction const& action) {
  ActionReport report;
  auto const& pres = action.presentation();
  for (std::size_t r = 0; r < pres.relators().size(); ++r) {
    auto const& rel = pres.relators()[r];
    auto image = action.evaluate(rel);
    ++report.relators_checked;
    if (!image.is_identity()) {
      report.failures.push_back(
          {static_cast<int>(r), pres.format_relator(rel), std::move(image)});
    }
  }
  report.orbits = orbits(action.images(), action.degree());
  report.transitive = report.orbits.size() == 1;
  return report;
}

CosetAction restrict_to_orbit(CosetAction const& action, Point p) {
  if (p < 1 || p > action.degree()) {
    throw ActionError("point " + std::to_string(p) + " out of range 1.." +
                      std::to_string(action.degree()));
  }
  auto const all = orbits(action.images(), action.degree());
  auto const& orbit = *std::ranges::find_if(
      all, [&](auto const& o) { return std::ranges::binary_search(o, p); });
  std::vector<Point> order{p};
  for (Point q : orbit) {
    if (q != p) order.push_back(q);
  }
  std::vector<Point> relabel(action.degree() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    relabel[order[i]] = static_cast<Point>(i + 1);
  }
  std::vector<Permutation> images;
  for (auto const& g : action.images()) {
    std::vector<Point> imgs(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      imgs[i] = relabel[g(order[i])];
    }
    images.emplace_back(std::move(imgs));
  }
  return CosetAction(action.signature(), std::move(images));
}

int point_stabilizer_index(CosetAction const& action) {
  auto const parts = orbits(action.images(), action.degree());
  if (parts.size() != 1) {
    throw ActionError("action is intransitive (" +
                      std::to_string(parts.size()) + " orbits)");
  }
  return action.degree();
}

std::string to_string(OrientabilityKind kind) {
  switch (kind) {
    case OrientabilityKind::fuchsian:
      return "fuchsian";
    case OrientabilityKind::orientable_nec:
      return "orientable_nec";
    case OrientabilityKind::nonorientable:
      return "nonorientable";
  }
  return "?";
}

std::vector<Letter> Witness::word() const {
  std::vector<Letter> out;
  for (auto const& s : steps) out.push_back({s.generator, s.inverse});
  return out;
}

int word_sign(Presentation const& pres, std::vector<Letter> const& word) {
  int sign = 1;
  for (auto const& letter : word) sign *= pres.orientation_sign(letter.generator);
  return sign;
}

OrientabilityVerdict orientability(CosetAction const& action,
                                   std::optional<std::uint64_t> shuffle_seed) {
  auto const& pres = action.presentation();
  int const n = action.degree();
  int const ngens = static_cast<int>(pres.generators().size());

  std::vector<Permutation> inverses;
  for (auto const& p : action.images()) inverses.push_back(p.inverse());

  OrientabilityVerdict verdict;
  for (int g = 0; g < ngens; ++g) {
    if (pres.generators()[g].kind == GeneratorKind::reflection) {
      verdict.reflection_loops +=
          static_cast<int>(action.image(g).fixed_points().size());
    }
  }

  std::vector<Point> roots(n);
  std::iota(roots.begin(), roots.end(), 1);
  std::vector<int> gen_order(ngens);
  std::iota(gen_order.begin(), gen_order.end(), 0);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::ranges::shuffle(roots, rng);
    std::ranges::shuffle(gen_order, rng);
  }

  // sign[v] in {+1, -1}, 0 = unvisited; parent[v] = step that reached v.
  std::vector<int> sign(n + 1, 0);
  std::vector<std::optional<WitnessStep>> parent(n + 1);

  auto path_to_root = [&](Point v) {
    std::vector<Point> chain{v};
    while (parent[chain.back()]) chain.push_back(parent[chain.back()]->from);
    return chain;
  };

  auto make_witness = [&](WitnessStep const& closing) {
    auto const up_from = path_to_root(closing.from);
    auto const up_to = path_to_root(closing.to);
    // Lowest common ancestor: both chains end at the same root.
    std::size_t a = up_from.size(), b = up_to.size();
    while (a > 0 && b > 0 && up_from[a - 1] == up_to[b - 1]) {
      --a;
      --b;
    }
    Point const lca = up_from[a];
    Witness w;
    w.base = lca;
    // lca -> closing.from
    for (std::size_t i = a; i-- > 0;) {
      w.steps.push_back(*parent[up_from[i]]);
    }
    w.steps.push_back(closing);
    // closing.to -> lca, walking parent steps backwards
    for (std::size_t i = 0; i < b; ++i) {
      auto const& s = *parent[up_to[i]];
      w.steps.push_back({s.to, s.generator, !s.inverse, s.from});
    }
    return w;
  };

  for (Point root : roots) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::vector<Point> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Point const v = queue[head];
      for (int g : gen_order) {
        bool const reflection =
            pres.generators()[g].kind == GeneratorKind::reflection;
        for (bool inverse : {false, true}) {
          Point const w = inverse ? inverses[g](v) : action.image(g)(v);
          if (reflection && w == v) continue;  // reflection loop
          int const expected = sign[v] * pres.orientation_sign(g);
          WitnessStep const step{v, g, inverse, w};
          if (sign[w] == 0) {
            sign[w] = expected;
            parent[w] = step;
            queue.push_back(w);
          } else if (sign[w] != expected) {
            verdict.kind = OrientabilityKind::nonorientable;
            verdict.witness = make_witness(step);
            return verdict;
          }
        }
      }
    }
  }
  verdict.kind = verdict.reflection_loops == 0
                     ? OrientabilityKind::fuchsian
                     : OrientabilityKind::orientable_nec;
  return verdict;
}

}  // namespace nec
