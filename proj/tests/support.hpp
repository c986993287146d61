#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nec/io.hpp"
#include "nec/representation.hpp"
#include "nec/signature.hpp"

namespace nec::test {

inline std::string fixture(std::string const& name) {
  return std::string(NEC_FIXTURES) + "/" + name;
}

inline CosetAction make_action(
    std::string const& sig, int degree,
    std::vector<std::pair<std::string, std::string>> const& cycles) {
  std::map<std::string, Permutation> images;
  for (auto const& [name, text] : cycles) {
    images.emplace(name, parse_cycles(text, degree));
  }
  return CosetAction(parse_signature(sig), degree, images);
}

inline CosetAction example2() { return load_action_file(fixture("example2.yaml")); }

inline CosetAction example3() {
  return load_action_file(fixture("example3_corrected.yaml"));
}

inline CosetAction example3_printed() {
  return load_action_file(fixture("example3_printed.yaml"));
}

/// Reduced area as an exact fraction computed over the common denominator
/// 2 * lcm(all periods), with plain integers.
inline std::pair<std::int64_t, std::int64_t> area_oracle(
    int genus, bool plus, std::vector<int> const& periods,
    std::vector<std::vector<int>> const& cycles) {
  std::int64_t l = 1;
  for (int m : periods) l = std::lcm(l, static_cast<std::int64_t>(m));
  for (auto const& c : cycles) {
    for (int n : c) l = std::lcm(l, static_cast<std::int64_t>(n));
  }
  std::int64_t const den = 2 * l;
  std::int64_t num = ((plus ? 2 : 1) * genus + static_cast<std::int64_t>(cycles.size()) - 2) * den;
  for (int m : periods) num += den - den / m;
  for (auto const& c : cycles) {
    for (int n : c) num += (den - den / n) / 2;
  }
  std::int64_t const g = std::gcd(num, den);
  return {num / g, den / g};
}

/// Random valid signature with small entries.
inline NecSignature random_signature(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1), small(0, 3), period(2, 9);
  while (true) {
    Sign const sign = coin(rng) ? Sign::plus : Sign::minus;
    int const genus = small(rng) + (sign == Sign::minus ? 1 : 0);
    std::vector<int> periods(small(rng));
    for (auto& m : periods) m = period(rng);
    std::vector<PeriodCycle> cycles(small(rng));
    for (auto& c : cycles) {
      c.resize(small(rng));
      for (auto& n : c) n = period(rng);
    }
    NecSignature sig(genus, sign, periods, cycles);
    if (validate_signature(sig).empty()) return sig;
  }
}

/// Index-2 subgroups of the extended triangle group with link periods
/// p[0] (c1,c2), p[1] (c2,c3), p[2] (c3,c1), by hand from the kernel
/// descriptions: the Fuchsian kernel, then for each reflection c_k whose two
/// adjacent periods are even, the kernel with c_k alone in it
/// (0;+;[opposite];{(a/2,b/2)}) and the kernel with c_k alone outside it
/// (0;+;[ ];{(a/2,opposite,b/2,opposite)}).
inline std::vector<NecSignature> triangle_index_two(std::array<int, 3> p) {
  std::vector<NecSignature> out{normalize(NecSignature(0, Sign::plus, {p[0], p[1], p[2]}, {}))};
  for (int k = 0; k < 3; ++k) {
    // c_{k+1} sits between p[(k+2)%3] and p[k]; the opposite period is p[(k+1)%3]
    int const a = p[(k + 2) % 3], b = p[k], opposite = p[(k + 1) % 3];
    if (a % 2 != 0 || b % 2 != 0) continue;
    out.push_back(normalize(NecSignature(0, Sign::plus, {opposite}, {{a / 2, b / 2}})));
    out.push_back(normalize(
        NecSignature(0, Sign::plus, {}, {{a / 2, opposite, b / 2, opposite}})));
  }
  return out;
}

inline Permutation random_permutation(std::mt19937& rng, int degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::ranges::shuffle(images, rng);
  return Permutation(images);
}

}  // namespace nec::test
