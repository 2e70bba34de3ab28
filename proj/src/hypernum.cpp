#include "lexstate/hypernum.hpp"

namespace lexstate {

namespace {

const LexValue kOne{Rational(1), Rational(0)};
const LexValue kZero{Rational(0), Rational(0)};

}  // namespace

std::string LexValue::str() const { return standard.str() + "+e" + infinitesimal.str(); }

LexValue LexValue::parse(std::string_view text) {
  auto pos = text.find("+e");
  if (pos == std::string_view::npos || text.find('e', pos + 2) != std::string_view::npos) {
    throw std::invalid_argument("expected 'r+es', got '" + std::string(text) + "'");
  }
  return {Rational::parse(text.substr(0, pos)), Rational::parse(text.substr(pos + 2))};
}

bool DualRational::in_unit_interval(const LexValue& v) { return kZero <= v && v <= kOne; }

DualRational::DualRational(Rational standard, Rational infinitesimal)
    : value_{std::move(standard), std::move(infinitesimal)} {
  if (!in_unit_interval(value_)) {
    throw OutOfUnitInterval("'" + value_.str() + "' is outside [0, 1] of Q x_lex Q");
  }
}

DualRational DualRational::parse(std::string_view text) { return DualRational(LexValue::parse(text)); }

std::strong_ordering lex_compare(const DualRational& x, const DualRational& y) { return x.value() <=> y.value(); }

DualRational mv_oplus(const DualRational& x, const DualRational& y) {
  LexValue sum = x.value() + y.value();
  return DualRational(sum < kOne ? sum : kOne);
}

DualRational mv_otimes(const DualRational& x, const DualRational& y) {
  LexValue v = x.value() + y.value() - kOne;
  return DualRational(v > kZero ? v : kZero);
}

DualRational mv_neg(const DualRational& x) { return DualRational(kOne - x.value()); }

std::pair<Rational, Rational> parts(const DualRational& x) { return {x.standard(), x.infinitesimal()}; }

}  // namespace lexstate
