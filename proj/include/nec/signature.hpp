#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace nec {

using Rational = boost::rational<std::int64_t>;

std::string to_string(Rational const& q);

enum class Sign { plus, minus };

/// Raised when an exact area computation cannot be reconciled with an
/// integral genus. Signals a bug or an action that is not a valid
/// permutation representation.
class InconsistentAnalysis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text parsers. `offset` is a 0-based byte offset into the
/// parsed string.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string const& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

using PeriodCycle = std::vector<int>;

/// Signature (g; ±; [m_1..m_r]; {(n_11..n_1s_1), ..., (n_k1..n_ks_k)}) of a
/// cocompact NEC group. Period entries equal to 1 are dropped on
/// construction; an empty period cycle is kept as an empty vector.
class NecSignature {
 public:
  NecSignature() = default;
  NecSignature(int genus, Sign sign, std::vector<int> proper_periods,
               std::vector<PeriodCycle> period_cycles);

  int genus() const noexcept { return genus_; }
  Sign sign() const noexcept { return sign_; }
  std::vector<int> const& proper_periods() const noexcept {
    return proper_periods_;
  }
  std::vector<PeriodCycle> const& period_cycles() const noexcept {
    return period_cycles_;
  }
  int number_of_cycles() const noexcept {
    return static_cast<int>(period_cycles_.size());
  }

  friend bool operator==(NecSignature const&, NecSignature const&) = default;

 private:
  int genus_ = 0;
  Sign sign_ = Sign::plus;
  std::vector<int> proper_periods_;
  std::vector<PeriodCycle> period_cycles_;
};

struct FuchsianSignature {
  int genus = 0;
  std::vector<int> periods;

  friend bool operator==(FuchsianSignature const&,
                         FuchsianSignature const&) = default;
};

struct Violation {
  std::string field;
  std::string message;
};

/// Empty result means the signature is valid.
std::vector<Violation> validate_signature(NecSignature const& sig);

/// alpha*g + k - 2 + sum(1 - 1/m_i) + 1/2 sum(1 - 1/n_ij), alpha = 2 for
/// sign plus and 1 for sign minus.
Rational reduced_area(NecSignature const& sig);

/// 2g - 2 + sum(1 - 1/p).
Rational fuchsian_area(FuchsianSignature const& sig);

FuchsianSignature canonical_fuchsian(NecSignature const& sig);

NecSignature normalize(NecSignature const& sig);

/// Lexicographically least rotation or reversed rotation.
PeriodCycle canonical_cycle(PeriodCycle const& cycle);

/// The unique genus g with reduced_area((g; sign; periods; cycles)) == target.
/// Throws InconsistentAnalysis when the residual is not an admissible integer.
int genus_from_area(Rational const& target, Sign sign,
                    std::vector<int> const& proper_periods,
                    std::vector<PeriodCycle> const& period_cycles);

// Text syntax: (g; +|-; [m1,...]; {(n11,...),(),...}), whitespace-insensitive.
NecSignature parse_signature(std::string_view text);
std::string format_signature(NecSignature const& sig);
std::string format_fuchsian(FuchsianSignature const& sig);

// ---------------------------------------------------------------------------
// Canonical presentation

enum class GeneratorKind { reflection, elliptic, connecting, hyperbolic, glide };

/// Canonical generator. Names: c{i}.{j} (reflection j of period cycle i),
/// x{j}, e{i}, a{l}, b{l}. Indices i, j of x/e/a/b are 1-based, reflection
/// positions are 0-based as in c_{i0}..c_{is_i}.
struct Generator {
  std::string name;
  GeneratorKind kind;
  int cycle = 0;     // reflections and connecting generators
  int position = 0;  // reflections: j; others: their 1-based index
};

struct Letter {
  int generator;  // index into Presentation::generators
  bool inverse = false;

  friend bool operator==(Letter const&, Letter const&) = default;
};

enum class RelatorKind { power, dihedral, connecting, long_relation };

/// word^exponent = 1
struct Relator {
  RelatorKind kind;
  std::vector<Letter> word;
  int exponent = 1;
};

class Presentation {
 public:
  explicit Presentation(NecSignature const& sig);

  NecSignature const& signature() const noexcept { return sig_; }
  std::vector<Generator> const& generators() const noexcept {
    return generators_;
  }
  std::vector<Relator> const& relators() const noexcept { return relators_; }

  /// -1 if no such generator.
  int find(std::string_view name) const;
  int reflection(int cycle, int position) const;
  int connecting(int cycle) const;
  int elliptic(int index) const;

  /// +1 for orientation-preserving generators, -1 for reflections and for
  /// glide reflections (a{l} when the sign is minus).
  int orientation_sign(int generator) const;

  std::string format_word(std::vector<Letter> const& word) const;
  std::string format_relator(Relator const& rel) const;

 private:
  void add_generator(std::string name, GeneratorKind kind, int cycle,
                     int position);

  NecSignature sig_;
  std::vector<Generator> generators_;
  std::vector<Relator> relators_;
};

inline Presentation canonical_presentation(NecSignature const& sig) {
  return Presentation(sig);
}

/// Throws std::invalid_argument for names not in the presentation.
int orientation_sign(Presentation const& pres, std::string_view name);

}  // namespace nec
