#ifndef LEXSTATE_TESTS_ORACLES_HPP
#define LEXSTATE_TESTS_ORACLES_HPP

// Independent reference computations and random generators for the tests.
// Nothing here calls the library's algebra code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

/// Element (a, g) of the perfect MV-algebra Γ(Z ×lex Z^k, (1,0)), with Z^k
/// ordered componentwise. a is 0 (g >= 0) or 1 (g <= 0).
struct Perfect {
  std::int64_t a = 0;
  std::vector<std::int64_t> g;
  friend bool operator==(const Perfect&, const Perfect&) = default;
};

inline Perfect add(const Perfect& x, const Perfect& y) {
  Perfect r{x.a + y.a, x.g};
  for (std::size_t i = 0; i < r.g.size(); ++i) r.g[i] += y.g[i];
  return r;
}

inline Perfect sub(const Perfect& x, const Perfect& y) {
  Perfect r{x.a - y.a, x.g};
  for (std::size_t i = 0; i < r.g.size(); ++i) r.g[i] -= y.g[i];
  return r;
}

/// Meet in the lexicographic product: the first coordinate decides, ties
/// are resolved componentwise.
inline Perfect lex_meet(const Perfect& x, const Perfect& y) {
  if (x.a != y.a) return x.a < y.a ? x : y;
  Perfect r{x.a, x.g};
  for (std::size_t i = 0; i < r.g.size(); ++i) r.g[i] = std::min(x.g[i], y.g[i]);
  return r;
}

inline Perfect lex_join(const Perfect& x, const Perfect& y) {
  if (x.a != y.a) return x.a > y.a ? x : y;
  Perfect r{x.a, x.g};
  for (std::size_t i = 0; i < r.g.size(); ++i) r.g[i] = std::max(x.g[i], y.g[i]);
  return r;
}

inline Perfect unit(std::size_t k) { return {1, std::vector<std::int64_t>(k, 0)}; }
inline Perfect zero(std::size_t k) { return {0, std::vector<std::int64_t>(k, 0)}; }

inline Perfect oplus(const Perfect& x, const Perfect& y) { return lex_meet(add(x, y), unit(x.g.size())); }
inline Perfect neg(const Perfect& x) { return sub(unit(x.g.size()), x); }
inline Perfect times(const Perfect& x, const Perfect& y) { return neg(oplus(neg(x), neg(y))); }
inline Perfect impl(const Perfect& x, const Perfect& y) { return oplus(neg(x), y); }

// ---------------------------------------------------------------------------

/// Values r + εs scaled by a common denominator D: (R, S) = (D r, D s).
struct Scaled {
  std::int64_t r, s;
  friend bool operator==(const Scaled&, const Scaled&) = default;
  friend bool operator<(const Scaled& x, const Scaled& y) { return x.r != y.r ? x.r < y.r : x.s < y.s; }
};

inline Scaled scaled_oplus(Scaled x, Scaled y, std::int64_t d) {
  Scaled sum{x.r + y.r, x.s + y.s};
  Scaled one{d, 0};
  return sum < one ? sum : one;
}

inline Scaled scaled_otimes(Scaled x, Scaled y, std::int64_t d) {
  Scaled t{x.r + y.r - d, x.s + y.s};
  Scaled zero{0, 0};
  return t < zero ? zero : t;
}

// ---------------------------------------------------------------------------

/// Seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  /// Numerator and denominator with |value| bounded by `magnitude`.
  std::pair<std::int64_t, std::int64_t> fraction(std::int64_t max_den, std::int64_t magnitude) {
    const std::int64_t d = integer(1, max_den);
    return {integer(-magnitude * d, magnitude * d), d};
  }

  std::vector<std::int64_t> cone_element(std::size_t rank, std::int64_t bound) {
    std::vector<std::int64_t> m(rank);
    for (auto& v : m) v = integer(0, bound);
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

/// All weight vectors of the given length with entries k/d (d <= max_den)
/// summing to 1, deduplicated, as (numerator, denominator) pairs over the
/// least common multiple of 1..max_den.
inline std::vector<std::vector<std::int64_t>> simplex_points(std::size_t atoms, std::int64_t max_den,
                                                             std::int64_t& common) {
  common = 1;
  for (std::int64_t d = 1; d <= max_den; ++d) common = std::lcm(common, d);
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t d = 1; d <= max_den; ++d) {
    std::vector<std::int64_t> parts(atoms, 0);
    // Enumerate compositions of d into `atoms` nonnegative parts.
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
      if (i + 1 == atoms) {
        parts[i] = left;
        std::vector<std::int64_t> scaled(atoms);
        for (std::size_t k = 0; k < atoms; ++k) scaled[k] = parts[k] * (common / d);
        out.push_back(scaled);
        return;
      }
      for (std::int64_t v = 0; v <= left; ++v) {
        parts[i] = v;
        self(self, i + 1, left - v);
      }
    };
    rec(rec, 0, d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oracle

#endif  // LEXSTATE_TESTS_ORACLES_HPP
