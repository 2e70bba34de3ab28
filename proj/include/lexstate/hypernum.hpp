#ifndef LEXSTATE_HYPERNUM_HPP
#define LEXSTATE_HYPERNUM_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "lexstate/rational.hpp"

// Numbers r + εs with r, s rational, where ε is a formal positive
// infinitesimal. ε is positional only: it is the second coordinate of the
// lexicographic product Q ×lex Q and is never given a numeric value.

namespace lexstate {

/// Element of the ordered group Q ×lex Q. Used for unrestricted sums and
/// differences of hyperstate values.
struct LexValue {
  Rational standard;
  Rational infinitesimal;

  friend LexValue operator+(const LexValue& a, const LexValue& b) {
    return {a.standard + b.standard, a.infinitesimal + b.infinitesimal};
  }
  friend LexValue operator-(const LexValue& a, const LexValue& b) {
    return {a.standard - b.standard, a.infinitesimal - b.infinitesimal};
  }
  LexValue operator-() const { return {-standard, -infinitesimal}; }
  friend LexValue operator*(const Rational& k, const LexValue& a) {
    return {k * a.standard, k * a.infinitesimal};
  }

  friend bool operator==(const LexValue&, const LexValue&) = default;
  friend std::strong_ordering operator<=>(const LexValue& a, const LexValue& b) {
    if (auto c = a.standard <=> b.standard; c != 0) return c;
    return a.infinitesimal <=> b.infinitesimal;
  }

  std::string str() const;
  static LexValue parse(std::string_view text);
};

/// Thrown when a pair does not lie in the interval [(0,0), (1,0)].
class OutOfUnitInterval : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of the MV-algebra Γ(Q ×lex Q, (1,0)): a LexValue between 0 and 1
/// in the lexicographic order. In particular a zero standard part forces a
/// nonnegative infinitesimal part, and a unit standard part forces a
/// nonpositive one.
class DualRational {
 public:
  /// The bottom element (0, 0).
  DualRational() = default;
  DualRational(Rational standard, Rational infinitesimal);
  explicit DualRational(const LexValue& v) : DualRational(v.standard, v.infinitesimal) {}

  static bool in_unit_interval(const LexValue& v);
  static DualRational zero() { return {}; }
  static DualRational one() { return {Rational(1), Rational(0)}; }

  const Rational& standard() const { return value_.standard; }
  const Rational& infinitesimal() const { return value_.infinitesimal; }
  const LexValue& value() const { return value_; }

  friend bool operator==(const DualRational&, const DualRational&) = default;

  /// "r+es", e.g. "1/2+e-3/4"; parse(str()) is the identity.
  std::string str() const { return value_.str(); }
  static DualRational parse(std::string_view text);

 private:
  LexValue value_;
};

/// Lexicographic comparison: standard parts first, infinitesimal parts
/// break ties.
std::strong_ordering lex_compare(const DualRational& x, const DualRational& y);

/// Truncated sum (x + y) ∧ (1, 0).
DualRational mv_oplus(const DualRational& x, const DualRational& y);

/// Truncated product (x + y - (1, 0)) ∨ (0, 0).
DualRational mv_otimes(const DualRational& x, const DualRational& y);

/// (1, 0) - x.
DualRational mv_neg(const DualRational& x);

/// (standard part, infinitesimal coefficient).
std::pair<Rational, Rational> parts(const DualRational& x);

}  // namespace lexstate

#endif  // LEXSTATE_HYPERNUM_HPP
