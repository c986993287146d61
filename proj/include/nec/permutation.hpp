#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nec {

/// 1-based point label, as used in all I/O.
using Point = int;

/// Bijection of {1..N}. Composition is left-to-right (right action):
/// (p * q)(i) = q(p(i)), matching the coset action K(gh) = (Kg)h.
class Permutation {
 public:
  Permutation() = default;

  /// `images[i]` is the image of point i + 1, 1-based.
  /// Throws std::invalid_argument if `images` is not a bijection of {1..N}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  Point operator()(Point p) const { return images_[p - 1]; }
  std::vector<Point> const& images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  Permutation inverse() const;

  /// lcm of the cycle lengths.
  std::int64_t order() const;

  /// Cycles including fixed points; each starts at its minimum, sorted by
  /// minimum.
  std::vector<std::vector<Point>> cycles() const;

  std::vector<Point> fixed_points() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  struct unchecked_tag {};
  Permutation(std::vector<Point> images, unchecked_tag)
      : images_(std::move(images)) {}
  friend Permutation compose(Permutation const& p, Permutation const& q);

  std::vector<Point> images_;
};

/// Apply p, then q. Throws std::invalid_argument on degree mismatch.
Permutation compose(Permutation const& p, Permutation const& q);

inline Permutation operator*(Permutation const& p, Permutation const& q) {
  return compose(p, q);
}

Permutation power(Permutation const& p, std::int64_t exponent);

/// Finest partition of {1..degree} closed under `gens`, each block sorted and
/// blocks ordered by minimum.
std::vector<std::vector<Point>> orbits(std::span<Permutation const> gens,
                                       int degree);

class CycleSyntaxError : public std::runtime_error {
 public:
  CycleSyntaxError(std::string const& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Cycle notation, e.g. "(1,2)(3)(4)". Omitted points are fixed; whitespace
/// is ignored.
Permutation parse_cycles(std::string_view text, int degree);

/// Nontrivial cycles only; the identity formats as "()".
std::string format_cycles(Permutation const& p);

/// All cycles including fixed points, e.g. "(1,6,2,3,4)(5)".
std::string format_cycles_full(Permutation const& p);

}  // namespace nec
