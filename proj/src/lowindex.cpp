#include "nec/lowindex.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nec {

std::vector<IndexTwoSubgroup> index_two_subgroups(NecSignature const& sig) {
  Presentation const pres(sig);
  auto const ngens = pres.generators().size();
  if (ngens >= 31) {
    throw std::invalid_argument("too many generators for sign enumeration");
  }
  auto const t = parse_cycles("(1,2)", 2);
  auto const id = Permutation::identity(2);

  std::vector<IndexTwoSubgroup> out;
  for (std::uint32_t mask = 1; mask < (1u << ngens); ++mask) {
    bool ok = true;
    for (auto const& rel : pres.relators()) {
      std::int64_t odd = 0;
      for (auto const& letter : rel.word) odd += (mask >> letter.generator) & 1u;
      if ((odd * rel.exponent) % 2 != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> signs(ngens);
    std::vector<Permutation> images;
    for (std::size_t g = 0; g < ngens; ++g) {
      bool const odd = (mask >> g) & 1u;
      signs[g] = odd ? -1 : 1;
      images.push_back(odd ? t : id);
    }
    CosetAction action(sig, std::move(images));
    auto report = subgroup_signature(action);
    out.push_back({std::move(signs), std::move(action), std::move(report)});
  }
  return out;
}

CosetAction canonical_labeling(CosetAction const& action) {
  int const n = action.degree();
  std::vector<Point> label(n + 1, 0);
  std::vector<Point> order{1};
  label[1] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (auto const& g : action.images()) {
      Point const q = g(order[head]);
      if (label[q] == 0) {
        order.push_back(q);
        label[q] = static_cast<Point>(order.size());
      }
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw ActionError("canonical labeling requires a transitive action");
  }
  std::vector<Permutation> images;
  for (auto const& g : action.images()) {
    std::vector<Point> imgs(n);
    for (Point p = 1; p <= n; ++p) imgs[label[p] - 1] = label[g(p)];
    images.emplace_back(std::move(imgs));
  }
  return CosetAction(action.signature(), std::move(images));
}

namespace {

using Perm = std::array<std::uint8_t, max_search_degree>;

struct Step {
  int generator = -1;
  int solve_relator = -1;  // >= 0: image determined by this relator
  std::vector<int> checks;  // relators fully assigned after this step
};

class ActionSearch {
 public:
  ActionSearch(NecSignature const& sig, int degree, std::size_t limit)
      : sig_(sig), pres_(sig), n_(degree), limit_(limit) {
    identity_.fill(0);
    std::iota(identity_.begin(), identity_.begin() + n_, 0);
    build_candidates();
    build_plan();
    images_.assign(pres_.generators().size(), identity_);
    inverses_ = images_;
  }

  SearchResult run() {
    dfs(0);
    return std::move(result_);
  }

 private:
  Perm mul(Perm const& a, Perm const& b) const {
    Perm r{};
    for (int i = 0; i < n_; ++i) r[i] = b[a[i]];
    return r;
  }

  Perm inv(Perm const& a) const {
    Perm r{};
    for (int i = 0; i < n_; ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  Perm letter(Letter const& l) const {
    return l.inverse ? inverses_[l.generator] : images_[l.generator];
  }

  Perm word(std::vector<Letter> const& w, std::size_t from, std::size_t to) const {
    Perm r = identity_;
    for (std::size_t i = from; i < to; ++i) r = mul(r, letter(w[i]));
    return r;
  }

  bool holds(Relator const& rel) const {
    Perm const base = word(rel.word, 0, rel.word.size());
    Perm r = identity_;
    for (int e = 0; e < rel.exponent; ++e) r = mul(r, base);
    return r == identity_;
  }

  void build_candidates() {
    Perm p = identity_;
    std::vector<Perm> all;
    do {
      all.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n_));

    candidates_.resize(pres_.generators().size());
    for (std::size_t g = 0; g < pres_.generators().size(); ++g) {
      for (auto const& q : all) {
        bool ok = true;
        for (auto const& rel : pres_.relators()) {
          if (rel.word.size() != 1 || rel.word[0].generator != static_cast<int>(g)) {
            continue;
          }
          Perm r = identity_;
          for (int e = 0; e < rel.exponent; ++e) r = mul(r, q);
          ok = ok && r == identity_;
        }
        if (ok) candidates_[g].push_back(q);
      }
    }
  }

  void build_plan() {
    auto const& rels = pres_.relators();
    auto const ngens = pres_.generators().size();
    std::vector<bool> assigned(ngens, false);
    std::vector<bool> done(rels.size(), false);

    auto unassigned_in = [&](Relator const& rel) {
      std::vector<int> gens;
      for (auto const& l : rel.word) {
        if (!assigned[l.generator]) gens.push_back(l.generator);
      }
      return gens;
    };

    for (std::size_t count = 0; count < ngens; ++count) {
      Step step;
      for (std::size_t r = 0; r < rels.size() && step.generator < 0; ++r) {
        if (done[r] || rels[r].exponent != 1) continue;
        auto const open = unassigned_in(rels[r]);
        if (open.size() == 1) {
          step.generator = open[0];
          step.solve_relator = static_cast<int>(r);
        }
      }
      if (step.generator < 0) {
        // Branch on the generator completing the most relators.
        int best_score = -1;
        for (std::size_t g = 0; g < ngens; ++g) {
          if (assigned[g]) continue;
          int completed = 0;
          for (std::size_t r = 0; r < rels.size(); ++r) {
            if (done[r]) continue;
            auto const open = unassigned_in(rels[r]);
            if (!open.empty() && std::ranges::all_of(open, [&](int x) {
                  return x == static_cast<int>(g);
                })) {
              ++completed;
            }
          }
          bool const better =
              completed > best_score ||
              (completed == best_score &&
               candidates_[g].size() < candidates_[step.generator].size());
          if (better) {
            best_score = completed;
            step.generator = static_cast<int>(g);
          }
        }
      }
      assigned[step.generator] = true;
      for (std::size_t r = 0; r < rels.size(); ++r) {
        if (done[r] || !unassigned_in(rels[r]).empty()) continue;
        done[r] = true;
        if (static_cast<int>(r) != step.solve_relator) {
          step.checks.push_back(static_cast<int>(r));
        }
      }
      plan_.push_back(std::move(step));
    }
  }

  bool checks_pass(Step const& step) const {
    return std::ranges::all_of(step.checks, [&](int r) {
      return holds(pres_.relators()[r]);
    });
  }

  void assign(int g, Perm const& p) {
    images_[g] = p;
    inverses_[g] = inv(p);
  }

  void dfs(std::size_t depth) {
    if (result_.truncated) return;
    ++result_.nodes;
    if (depth == plan_.size()) {
      record();
      return;
    }
    auto const& step = plan_[depth];
    if (step.solve_relator >= 0) {
      // u g^(+-1) v = 1  =>  g^(+-1) = u^-1 v^-1
      auto const& w = pres_.relators()[step.solve_relator].word;
      std::size_t pos = 0;
      while (w[pos].generator != step.generator) ++pos;
      Perm const u = word(w, 0, pos);
      Perm const v = word(w, pos + 1, w.size());
      Perm const value = mul(inv(u), inv(v));
      assign(step.generator, w[pos].inverse ? inv(value) : value);
      if (checks_pass(step)) dfs(depth + 1);
      return;
    }
    for (auto const& p : candidates_[step.generator]) {
      assign(step.generator, p);
      if (checks_pass(step)) dfs(depth + 1);
      if (result_.truncated) return;
    }
  }

  void record() {
    std::vector<Permutation> images;
    for (auto const& p : images_) {
      std::vector<Point> imgs(n_);
      for (int i = 0; i < n_; ++i) imgs[i] = p[i] + 1;
      images.emplace_back(std::move(imgs));
    }
    if (orbits(images, n_).size() != 1) return;
    CosetAction canon = canonical_labeling(CosetAction(sig_, std::move(images)));
    if (!seen_.insert(canon.images()).second) return;
    if (result_.actions.size() >= limit_) {
      result_.truncated = true;
      return;
    }
    result_.actions.push_back(std::move(canon));
  }

  NecSignature sig_;
  Presentation pres_;
  int n_;
  std::size_t limit_;
  Perm identity_{};
  std::vector<std::vector<Perm>> candidates_;
  std::vector<Step> plan_;
  std::vector<Perm> images_;
  std::vector<Perm> inverses_;
  std::set<std::vector<Permutation>> seen_;
  SearchResult result_;
};

}  // namespace

SearchResult search_actions(NecSignature const& sig, int degree,
                            std::size_t limit) {
  if (degree < 1 || degree > max_search_degree) {
    throw std::invalid_argument("search degree must be in 1.." +
                                std::to_string(max_search_degree));
  }
  return ActionSearch(sig, degree, limit).run();
}

}  // namespace nec
