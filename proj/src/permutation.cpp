#include "nec/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace nec {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p < 1 || p > degree() || seen[p - 1]) {
      throw std::invalid_argument("image list is not a bijection");
    }
    seen[p - 1] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Point>(i + 1)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i] - 1] = static_cast<Point>(i + 1);
  }
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

std::int64_t Permutation::order() const {
  std::int64_t result = 1;
  for (auto const& cycle : cycles()) {
    result = std::lcm(result, static_cast<std::int64_t>(cycle.size()));
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 1; start <= degree(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p - 1]; p = (*this)(p)) {
      seen[p - 1] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> out;
  for (Point p = 1; p <= degree(); ++p) {
    if ((*this)(p) == p) out.push_back(p);
  }
  return out;
}

Permutation compose(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("degree mismatch: " +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (Point i = 1; i <= p.degree(); ++i) {
    images[i - 1] = q(p(i));
  }
  return Permutation(std::move(images), Permutation::unchecked_tag{});
}

Permutation power(Permutation const& p, std::int64_t exponent) {
  Permutation base = exponent < 0 ? p.inverse() : p;
  exponent = exponent < 0 ? -exponent : exponent;
  Permutation result = Permutation::identity(p.degree());
  while (exponent > 0) {
    if (exponent & 1) result = compose(result, base);
    base = compose(base, base);
    exponent >>= 1;
  }
  return result;
}

std::vector<std::vector<Point>> orbits(std::span<Permutation const> gens,
                                       int degree) {
  for (auto const& g : gens) {
    if (g.degree() != degree) {
      throw std::invalid_argument("degree mismatch in orbit computation");
    }
  }
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree, false);
  for (Point start = 1; start <= degree; ++start) {
    if (seen[start - 1]) continue;
    std::vector<Point> orbit{start};
    seen[start - 1] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (auto const& g : gens) {
        Point const next = g(orbit[head]);
        if (!seen[next - 1]) {
          seen[next - 1] = true;
          orbit.push_back(next);
        }
      }
    }
    std::ranges::sort(orbit);
    out.push_back(std::move(orbit));
  }
  return out;
}

Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 1) {
    throw CycleSyntaxError("degree must be positive", 0);
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto number = [&]() -> Point {
    skip();
    std::size_t const start = pos;
    long value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > degree) {
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
        break;
      }
      ++pos;
    }
    if (pos == start) throw CycleSyntaxError("expected point", start);
    if (value < 1 || value > degree) {
      throw CycleSyntaxError("point " + std::string(text.substr(start, pos - start)) +
                                 " out of range 1.." + std::to_string(degree),
                             start);
    }
    if (used[value - 1]) {
      throw CycleSyntaxError("repeated point " + std::to_string(value), start);
    }
    used[value - 1] = true;
    return static_cast<Point>(value);
  };

  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') throw CycleSyntaxError("expected '('", pos);
    ++pos;
    skip();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;  // "()" is the identity
      skip();
      continue;
    }
    std::vector<Point> cycle{number()};
    skip();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      cycle.push_back(number());
      skip();
    }
    if (pos >= text.size() || text[pos] != ')') {
      throw CycleSyntaxError("expected ',' or ')'", pos);
    }
    ++pos;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    }
    skip();
  }
  return Permutation(std::move(images));
}

namespace {

std::string format_impl(Permutation const& p, bool with_fixed) {
  std::ostringstream os;
  for (auto const& cycle : p.cycles()) {
    if (cycle.size() == 1 && !with_fixed) continue;
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) os << ',';
      os << cycle[i];
    }
    os << ')';
  }
  auto s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace

std::string format_cycles(Permutation const& p) { return format_impl(p, false); }

std::string format_cycles_full(Permutation const& p) {
  return format_impl(p, true);
}

}  // namespace nec
