#include "nec/signature.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nec {

std::string to_string(Rational const& q) {
  if (q.denominator() == 1) {
    return std::to_string(q.numerator());
  }
  return std::to_string(q.numerator()) + "/" +
         std::to_string(q.denominator());
}

namespace {

std::vector<int> drop_ones(std::vector<int> periods) {
  std::erase(periods, 1);
  return periods;
}

Rational defect(int period) { return Rational(1) - Rational(1, period); }

// Area contribution of everything except the genus term.
Rational base_area(std::vector<int> const& proper_periods,
                   std::vector<PeriodCycle> const& cycles) {
  Rational area(static_cast<std::int64_t>(cycles.size()) - 2);
  for (int m : proper_periods) {
    area += defect(m);
  }
  for (auto const& cycle : cycles) {
    for (int n : cycle) {
      area += defect(n) / 2;
    }
  }
  return area;
}

bool structurally_sound(NecSignature const& sig) {
  auto ok = [](int p) { return p >= 2; };
  if (sig.genus() < 0) return false;
  if (!std::ranges::all_of(sig.proper_periods(), ok)) return false;
  return std::ranges::all_of(sig.period_cycles(), [&](auto const& c) {
    return std::ranges::all_of(c, ok);
  });
}

}  // namespace

NecSignature::NecSignature(int genus, Sign sign,
                           std::vector<int> proper_periods,
                           std::vector<PeriodCycle> period_cycles)
    : genus_(genus),
      sign_(sign),
      proper_periods_(drop_ones(std::move(proper_periods))) {
  period_cycles_.reserve(period_cycles.size());
  for (auto& cycle : period_cycles) {
    period_cycles_.push_back(drop_ones(std::move(cycle)));
  }
}

std::vector<Violation> validate_signature(NecSignature const& sig) {
  std::vector<Violation> out;
  if (sig.genus() < 0) {
    out.push_back({"genus", "genus must be nonnegative"});
  }
  if (sig.sign() == Sign::minus && sig.genus() < 1) {
    out.push_back({"sign", "sign minus requires genus >= 1"});
  }
  for (std::size_t i = 0; i < sig.proper_periods().size(); ++i) {
    if (sig.proper_periods()[i] < 2) {
      out.push_back({"proper_periods",
                     "proper period " + std::to_string(i + 1) + " is " +
                         std::to_string(sig.proper_periods()[i]) +
                         ", must be >= 2"});
    }
  }
  for (std::size_t i = 0; i < sig.period_cycles().size(); ++i) {
    auto const& cycle = sig.period_cycles()[i];
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (cycle[j] < 2) {
        out.push_back({"period_cycles",
                       "link period " + std::to_string(j + 1) +
                           " of cycle " + std::to_string(i + 1) + " is " +
                           std::to_string(cycle[j]) + ", must be >= 2"});
      }
    }
  }
  if (structurally_sound(sig)) {
    auto const area = reduced_area(sig);
    if (area == Rational(0)) {
      out.push_back({"area", "reduced area = 0 (Euclidean)"});
    } else if (area < Rational(0)) {
      out.push_back(
          {"area", "reduced area = " + to_string(area) + " < 0 (spherical)"});
    }
  }
  return out;
}

Rational reduced_area(NecSignature const& sig) {
  std::int64_t const alpha = sig.sign() == Sign::plus ? 2 : 1;
  return Rational(alpha * sig.genus()) +
         base_area(sig.proper_periods(), sig.period_cycles());
}

Rational fuchsian_area(FuchsianSignature const& sig) {
  Rational area(2 * static_cast<std::int64_t>(sig.genus) - 2);
  for (int p : sig.periods) {
    area += defect(p);
  }
  return area;
}

FuchsianSignature canonical_fuchsian(NecSignature const& sig) {
  FuchsianSignature out;
  int const alpha = sig.sign() == Sign::plus ? 2 : 1;
  out.genus = alpha * sig.genus() + sig.number_of_cycles() - 1;
  for (int m : sig.proper_periods()) {
    out.periods.push_back(m);
    out.periods.push_back(m);
  }
  for (auto const& cycle : sig.period_cycles()) {
    out.periods.insert(out.periods.end(), cycle.begin(), cycle.end());
  }
  return out;
}

PeriodCycle canonical_cycle(PeriodCycle const& cycle) {
  PeriodCycle best = cycle;
  PeriodCycle work = cycle;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < work.size(); ++r) {
      std::ranges::rotate(work, work.begin() + 1);
      best = std::min(best, work);
    }
    std::ranges::reverse(work);
  }
  return best;
}

NecSignature normalize(NecSignature const& sig) {
  auto periods = sig.proper_periods();
  std::ranges::sort(periods);
  std::vector<PeriodCycle> cycles;
  for (auto const& cycle : sig.period_cycles()) {
    cycles.push_back(canonical_cycle(cycle));
  }
  // Lexicographic, except that empty cycles go last.
  std::ranges::sort(cycles, [](PeriodCycle const& a, PeriodCycle const& b) {
    if (a.empty() || b.empty()) return !a.empty() && b.empty();
    return a < b;
  });
  return {sig.genus(), sig.sign(), std::move(periods), std::move(cycles)};
}

int genus_from_area(Rational const& target, Sign sign,
                    std::vector<int> const& proper_periods,
                    std::vector<PeriodCycle> const& period_cycles) {
  Rational const residual = target - base_area(proper_periods, period_cycles);
  auto fail = [&](std::string const& why) {
    return InconsistentAnalysis("inconsistent analysis: residual area " +
                                to_string(residual) + " " + why);
  };
  if (residual.denominator() != 1) {
    throw fail("is not an integer");
  }
  auto const value = residual.numerator();
  if (sign == Sign::plus) {
    if (value < 0 || value % 2 != 0) {
      throw fail("is not an even nonnegative integer (sign plus)");
    }
    return static_cast<int>(value / 2);
  }
  if (value < 1) {
    throw fail("is not a positive integer (sign minus)");
  }
  return static_cast<int>(value);
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

class SignatureParser {
 public:
  explicit SignatureParser(std::string_view text) : text_(text) {}

  NecSignature parse() {
    expect('(');
    int const genus = integer();
    expect(';');
    Sign const sign = parse_sign();
    expect(';');
    expect('[');
    auto periods = integer_list(']');
    expect(';');
    expect('{');
    std::vector<PeriodCycle> cycles;
    skip_space();
    if (peek() != '}') {
      do {
        expect('(');
        cycles.push_back(integer_list(')'));
      } while (accept(','));
    }
    expect('}');
    expect(')');
    skip_space();
    if (pos_ != text_.size()) {
      throw SyntaxError("trailing characters after signature", pos_);
    }
    return {genus, sign, std::move(periods), std::move(cycles)};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
  }

  Sign parse_sign() {
    skip_space();
    if (accept('+')) return Sign::plus;
    if (accept('-')) return Sign::minus;
    // U+2212 MINUS SIGN
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return Sign::minus;
    }
    throw SyntaxError("expected sign '+' or '-'", pos_);
  }

  int integer() {
    skip_space();
    std::size_t const start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::int64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) {
        throw SyntaxError("integer out of range", start);
      }
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      throw SyntaxError("expected integer", start);
    }
    return static_cast<int>(negative ? -value : value);
  }

  std::vector<int> integer_list(char close) {
    std::vector<int> out;
    if (accept(close)) return out;
    do {
      out.push_back(integer());
    } while (accept(','));
    expect(close);
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void join(std::ostream& os, std::vector<int> const& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
}

}  // namespace

NecSignature parse_signature(std::string_view text) {
  return SignatureParser(text).parse();
}

std::string format_signature(NecSignature const& sig) {
  std::ostringstream os;
  os << '(' << sig.genus() << "; " << (sig.sign() == Sign::plus ? '+' : '-')
     << "; [";
  if (sig.proper_periods().empty()) {
    os << ' ';
  } else {
    join(os, sig.proper_periods());
  }
  os << "]; {";
  for (std::size_t i = 0; i < sig.period_cycles().size(); ++i) {
    if (i) os << ',';
    os << '(';
    join(os, sig.period_cycles()[i]);
    os << ')';
  }
  os << "})";
  return os.str();
}

std::string format_fuchsian(FuchsianSignature const& sig) {
  std::ostringstream os;
  os << '(' << sig.genus;
  if (!sig.periods.empty()) {
    os << "; ";
    join(os, sig.periods);
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Presentation

void Presentation::add_generator(std::string name, GeneratorKind kind,
                                 int cycle, int position) {
  generators_.push_back({std::move(name), kind, cycle, position});
}

Presentation::Presentation(NecSignature const& sig) : sig_(sig) {
  int const r = static_cast<int>(sig.proper_periods().size());
  int const k = sig.number_of_cycles();
  for (int j = 1; j <= r; ++j) {
    add_generator("x" + std::to_string(j), GeneratorKind::elliptic, 0, j);
  }
  for (int i = 1; i <= k; ++i) {
    add_generator("e" + std::to_string(i), GeneratorKind::connecting, i, i);
  }
  for (int i = 1; i <= k; ++i) {
    int const s = static_cast<int>(sig.period_cycles()[i - 1].size());
    for (int j = 0; j <= s; ++j) {
      add_generator("c" + std::to_string(i) + "." + std::to_string(j),
                    GeneratorKind::reflection, i, j);
    }
  }
  for (int l = 1; l <= sig.genus(); ++l) {
    if (sig.sign() == Sign::plus) {
      add_generator("a" + std::to_string(l), GeneratorKind::hyperbolic, 0, l);
      add_generator("b" + std::to_string(l), GeneratorKind::hyperbolic, 0, l);
    } else {
      add_generator("a" + std::to_string(l), GeneratorKind::glide, 0, l);
    }
  }

  for (int j = 1; j <= r; ++j) {
    relators_.push_back({RelatorKind::power,
                         {{elliptic(j)}},
                         sig.proper_periods()[j - 1]});
  }
  for (int i = 1; i <= k; ++i) {
    auto const& cycle = sig.period_cycles()[i - 1];
    int const s = static_cast<int>(cycle.size());
    for (int j = 0; j <= s; ++j) {
      relators_.push_back({RelatorKind::power, {{reflection(i, j)}}, 2});
    }
    for (int j = 1; j <= s; ++j) {
      relators_.push_back({RelatorKind::dihedral,
                           {{reflection(i, j - 1)}, {reflection(i, j)}},
                           cycle[j - 1]});
    }
    int const e = connecting(i);
    relators_.push_back({RelatorKind::connecting,
                         {{e}, {reflection(i, 0)}, {e, true}, {reflection(i, s)}},
                         1});
  }
  Relator long_rel{RelatorKind::long_relation, {}, 1};
  for (int j = 1; j <= r; ++j) long_rel.word.push_back({elliptic(j)});
  for (int i = 1; i <= k; ++i) long_rel.word.push_back({connecting(i)});
  for (int l = 1; l <= sig.genus(); ++l) {
    int const a = find("a" + std::to_string(l));
    if (sig.sign() == Sign::plus) {
      int const b = find("b" + std::to_string(l));
      long_rel.word.insert(long_rel.word.end(),
                           {{a}, {b}, {a, true}, {b, true}});
    } else {
      long_rel.word.insert(long_rel.word.end(), {{a}, {a}});
    }
  }
  relators_.push_back(std::move(long_rel));
}

int Presentation::find(std::string_view name) const {
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (generators_[g].name == name) return static_cast<int>(g);
  }
  return -1;
}

int Presentation::reflection(int cycle, int position) const {
  return find("c" + std::to_string(cycle) + "." + std::to_string(position));
}

int Presentation::connecting(int cycle) const {
  return find("e" + std::to_string(cycle));
}

int Presentation::elliptic(int index) const {
  return find("x" + std::to_string(index));
}

int Presentation::orientation_sign(int generator) const {
  switch (generators_.at(generator).kind) {
    case GeneratorKind::reflection:
    case GeneratorKind::glide:
      return -1;
    default:
      return 1;
  }
}

std::string Presentation::format_word(std::vector<Letter> const& word) const {
  std::string out;
  for (auto const& letter : word) {
    if (!out.empty()) out += ' ';
    out += generators_.at(letter.generator).name;
    if (letter.inverse) out += "^-1";
  }
  return out;
}

std::string Presentation::format_relator(Relator const& rel) const {
  if (rel.word.empty()) return "1";
  std::string const base = format_word(rel.word);
  if (rel.exponent == 1) return base;
  if (rel.word.size() == 1) return base + "^" + std::to_string(rel.exponent);
  return "(" + base + ")^" + std::to_string(rel.exponent);
}

int orientation_sign(Presentation const& pres, std::string_view name) {
  int const g = pres.find(name);
  if (g < 0) {
    throw std::invalid_argument("unknown generator '" + std::string(name) +
                                "'");
  }
  return pres.orientation_sign(g);
}

}  // namespace nec
