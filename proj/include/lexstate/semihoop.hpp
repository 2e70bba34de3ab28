#ifndef LEXSTATE_SEMIHOOP_HPP
#define LEXSTATE_SEMIHOOP_HPP

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexstate/lmonoid.hpp"
#include "lexstate/rational.hpp"
#include "lexstate/report.hpp"
#include "lexstate/table.hpp"
#include "lexstate/tuple.hpp"

namespace lexstate {

/// Anything with the semihoop signature (·, →, ∧, 1). Order and pseudo-join
/// are derived: x <= y iff x ∧ y = x, and
///   x ∨ y = ((x → y) → y) ∧ ((y → x) → x).
template <class H>
concept SemihoopLike = requires(const H& h, const typename H::element_type& x) {
  { h.mul(x, x) } -> std::convertible_to<typename H::element_type>;
  { h.impl(x, x) } -> std::convertible_to<typename H::element_type>;
  { h.meet(x, x) } -> std::convertible_to<typename H::element_type>;
  { h.top() } -> std::convertible_to<typename H::element_type>;
  { h.label(x) } -> std::convertible_to<std::string>;
};

template <SemihoopLike H>
bool hoop_leq(const H& h, const typename H::element_type& x, const typename H::element_type& y) {
  return h.meet(x, y) == x;
}

template <SemihoopLike H>
typename H::element_type pseudo_join(const H& h, const typename H::element_type& x,
                                     const typename H::element_type& y) {
  return h.meet(h.impl(h.impl(x, y), y), h.impl(h.impl(y, x), x));
}

// ---------------------------------------------------------------------------
// Concrete semihoops

/// Semihoop on {0, ..., n-1} given by tables for ·, → and ∧.
class FiniteSemihoop {
 public:
  using element_type = Index;

  /// Throws StructuralError on size mismatch or an out-of-range top.
  FiniteSemihoop(Table times, Table impl, Table meet, Index top);

  std::size_t size() const { return times_.size(); }
  Index mul(Index x, Index y) const { return times_(x, y); }
  Index impl(Index x, Index y) const { return impl_(x, y); }
  Index meet(Index x, Index y) const { return meet_(x, y); }
  Index top() const { return top_; }
  std::string label(Index x) const { return std::to_string(x); }
  std::vector<Index> carrier() const;

  const Table& times_table() const { return times_; }
  const Table& impl_table() const { return impl_; }
  const Table& meet_table() const { return meet_; }
  /// Table of the pseudo-join.
  Table join_table() const;

  friend bool operator==(const FiniteSemihoop&, const FiniteSemihoop&) = default;

 private:
  Table times_, impl_, meet_;
  Index top_;
};

/// Cancellative basic hoop on N^k: a tuple m stands for the product of
/// generators g_i^{m_i}. x·y = x + y, x → y = y ∸ x (componentwise), and the
/// order is reversed: m <= n iff m >= n componentwise. The unit is 0.
class SymbolicConeHoop {
 public:
  using element_type = IntTuple;

  explicit SymbolicConeHoop(std::size_t rank);

  std::size_t rank() const { return rank_; }
  IntTuple mul(const IntTuple& x, const IntTuple& y) const { return x + y; }
  IntTuple impl(const IntTuple& x, const IntTuple& y) const { return monus(y, x); }
  IntTuple meet(const IntTuple& x, const IntTuple& y) const { return pointwise_max(x, y); }
  IntTuple top() const { return zero_tuple(rank_); }
  std::string label(const IntTuple& x) const { return tuple_str(x); }
  /// Tuples with coordinates <= bound.
  std::vector<IntTuple> window(int bound) const { return tuple_window(rank_, bound); }

 private:
  std::size_t rank_;
};

/// Nonpositive rationals with +, x → y = min(0, y - x) and min: the
/// canonical codomain of semihoop states.
struct NegativeRationals {
  using element_type = Rational;
  Rational mul(const Rational& x, const Rational& y) const { return x + y; }
  Rational impl(const Rational& x, const Rational& y) const { return min(Rational(0), y - x); }
  Rational meet(const Rational& x, const Rational& y) const { return min(x, y); }
  Rational top() const { return Rational(0); }
  std::string label(const Rational& x) const { return x.str(); }
};

/// The l-monoid reduct (H, ·, ∧, ∨, 1) with ∨ the pseudo-join.
FiniteLMonoid lmonoid_reduct(const FiniteSemihoop& h);
/// N^k with + and the reversed order.
SymbolicCancellativeMonoid lmonoid_reduct(const SymbolicConeHoop& h);

// ---------------------------------------------------------------------------
// States

/// Finite form: one nonpositive value per carrier element.
struct TableState {
  std::vector<Rational> values;
  Rational operator()(Index x) const { return values.at(x); }
  friend bool operator==(const TableState&, const TableState&) = default;
};

/// Symbolic form on a cone: w(m) = -<lambda, m>.
struct WeightState {
  std::vector<Rational> lambda;
  Rational operator()(const IntTuple& m) const;
  friend bool operator==(const WeightState&, const WeightState&) = default;
};

// ---------------------------------------------------------------------------
// Validators. All take the carrier (or window) to quantify over explicitly;
// evaluation itself is exact and never truncated to the window.

namespace detail {

template <SemihoopLike H>
using Elem = typename H::element_type;

template <SemihoopLike H>
std::vector<std::string> labels(const H& h, std::initializer_list<Elem<H>> xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(h.label(x));
  return out;
}

}  // namespace detail

/// Semihoop axioms (i)-(iv) as checks; (Pre), pseudo-join associativity,
/// (Div) and (Canc) as properties. Flags: prelinear, lattice, divisible,
/// basic, cancellative.
template <SemihoopLike H>
ValidationReport validate_semihoop(const H& h, std::span<const detail::Elem<H>> carrier,
                                   std::optional<int> window = std::nullopt) {
  using E = detail::Elem<H>;
  ValidationReport r("semihoop", window);
  auto L = [&](std::initializer_list<E> xs) { return detail::labels(h, xs); };
  const E one = h.top();

  auto pairs = [&](CheckResult& c, auto body) {
    for (const E& x : carrier) {
      for (const E& y : carrier) {
        ++c.instances;
        body(x, y);
      }
    }
  };
  auto triples = [&](CheckResult& c, auto body) {
    for (const E& x : carrier) {
      for (const E& y : carrier) {
        for (const E& z : carrier) {
          ++c.instances;
          body(x, y, z);
        }
      }
    }
  };

  {
    CheckResult& c = r.add("(i) meet idempotent");
    for (const E& x : carrier) {
      ++c.instances;
      if (h.meet(x, x) != x) c.fail(L({x}), h.label(h.meet(x, x)), h.label(x));
    }
  }
  {
    CheckResult& c = r.add("(i) meet commutative");
    pairs(c, [&](const E& x, const E& y) {
      if (h.meet(x, y) != h.meet(y, x)) c.fail(L({x, y}), h.label(h.meet(x, y)), h.label(h.meet(y, x)));
    });
  }
  {
    CheckResult& c = r.add("(i) meet associative");
    triples(c, [&](const E& x, const E& y, const E& z) {
      E l = h.meet(h.meet(x, y), z), rr = h.meet(x, h.meet(y, z));
      if (l != rr) c.fail(L({x, y, z}), h.label(l), h.label(rr));
    });
  }
  {
    CheckResult& c = r.add("(i) upper bound");
    for (const E& x : carrier) {
      ++c.instances;
      if (h.meet(x, one) != x) c.fail(L({x}), h.label(h.meet(x, one)), h.label(x));
    }
  }
  {
    CheckResult& c = r.add("(ii) product commutative");
    pairs(c, [&](const E& x, const E& y) {
      if (h.mul(x, y) != h.mul(y, x)) c.fail(L({x, y}), h.label(h.mul(x, y)), h.label(h.mul(y, x)));
    });
  }
  {
    CheckResult& c = r.add("(ii) product associative");
    triples(c, [&](const E& x, const E& y, const E& z) {
      E l = h.mul(h.mul(x, y), z), rr = h.mul(x, h.mul(y, z));
      if (l != rr) c.fail(L({x, y, z}), h.label(l), h.label(rr));
    });
  }
  {
    CheckResult& c = r.add("(ii) product unit");
    for (const E& x : carrier) {
      ++c.instances;
      if (h.mul(x, one) != x) c.fail(L({x}), h.label(h.mul(x, one)), h.label(x));
    }
  }
  {
    CheckResult& c = r.add("(ii) product isotone");
    triples(c, [&](const E& x, const E& y, const E& z) {
      if (hoop_leq(h, x, y) && !hoop_leq(h, h.mul(x, z), h.mul(y, z))) {
        c.fail(L({x, y, z}), h.label(h.mul(x, z)), h.label(h.mul(y, z)));
      }
    });
  }
  {
    CheckResult& c = r.add("(iii)");
    pairs(c, [&](const E& x, const E& y) {
      if (hoop_leq(h, x, y) != (h.impl(x, y) == one)) c.fail(L({x, y}), h.label(h.impl(x, y)), h.label(one));
    });
  }
  {
    CheckResult& c = r.add("(iv)");
    triples(c, [&](const E& x, const E& y, const E& z) {
      E l = h.impl(h.mul(x, y), z), rr = h.impl(x, h.impl(y, z));
      if (l != rr) c.fail(L({x, y, z}), h.label(l), h.label(rr));
    });
  }

  CheckResult& pre = r.add_property("(Pre)");
  triples(pre, [&](const E& x, const E& y, const E& z) {
    E l = h.impl(h.impl(x, y), z);
    E rr = h.impl(h.impl(h.impl(y, x), z), z);
    if (!hoop_leq(h, l, rr)) pre.fail(L({x, y, z}), h.label(l), h.label(rr));
  });
  CheckResult& lat = r.add_property("pseudo-join associative");
  triples(lat, [&](const E& x, const E& y, const E& z) {
    E l = pseudo_join(h, pseudo_join(h, x, y), z), rr = pseudo_join(h, x, pseudo_join(h, y, z));
    if (l != rr) lat.fail(L({x, y, z}), h.label(l), h.label(rr));
  });
  CheckResult& div = r.add_property("(Div)");
  pairs(div, [&](const E& x, const E& y) {
    E l = h.mul(x, h.impl(x, y)), rr = h.mul(y, h.impl(y, x));
    if (l != rr) div.fail(L({x, y}), h.label(l), h.label(rr));
  });
  CheckResult& canc = r.add_property("(Canc)");
  pairs(canc, [&](const E& x, const E& y) {
    E l = h.impl(h.impl(x, h.mul(x, y)), y);
    if (l != one) canc.fail(L({x, y}), h.label(l), h.label(one));
  });

  r.set_flag("prelinear", r.ok() && pre.passed());
  r.set_flag("lattice", lat.passed());
  r.set_flag("divisible", div.passed());
  r.set_flag("basic", r.ok() && pre.passed() && div.passed());
  r.set_flag("cancellative", r.ok() && pre.passed() && div.passed() && canc.passed());
  return r;
}

ValidationReport validate_semihoop(const FiniteSemihoop& h);
/// Window of all tuples with coordinates <= bound; reported as window-verified.
ValidationReport validate_semihoop(const SymbolicConeHoop& h, int bound);

/// True iff the pseudo-join is associative over the carrier.
template <SemihoopLike H>
bool lattice_check(const H& h, std::span<const detail::Elem<H>> carrier) {
  for (const auto& x : carrier) {
    for (const auto& y : carrier) {
      for (const auto& z : carrier) {
        if (pseudo_join(h, pseudo_join(h, x, y), z) != pseudo_join(h, x, pseudo_join(h, y, z))) return false;
      }
    }
  }
  return true;
}

/// Checks (v1) w(1) = 0, (v2) w(x·y) = w(x) + w(y), (v3) monotonicity and a
/// nonpositive codomain over the carrier.
template <SemihoopLike H, class W>
ValidationReport validate_state(const H& h, const W& w, std::span<const detail::Elem<H>> carrier,
                                std::optional<int> window = std::nullopt) {
  using E = detail::Elem<H>;
  ValidationReport r("semihoop state", window);
  auto L = [&](std::initializer_list<E> xs) { return detail::labels(h, xs); };
  {
    CheckResult& c = r.add("(v1)");
    ++c.instances;
    Rational v = w(h.top());
    if (!v.is_zero()) c.fail(L({h.top()}), v.str(), "0");
  }
  {
    CheckResult& c = r.add("(v2)");
    for (const E& x : carrier) {
      for (const E& y : carrier) {
        ++c.instances;
        Rational l = w(h.mul(x, y)), rr = w(x) + w(y);
        if (l != rr) c.fail(L({x, y}), l.str(), rr.str());
      }
    }
  }
  {
    CheckResult& c = r.add("(v3)");
    for (const E& x : carrier) {
      for (const E& y : carrier) {
        ++c.instances;
        if (hoop_leq(h, x, y) && w(x) > w(y)) c.fail(L({x, y}), w(x).str(), w(y).str());
      }
    }
  }
  {
    CheckResult& c = r.add("codomain");
    for (const E& x : carrier) {
      ++c.instances;
      if (w(x) > Rational(0)) c.fail(L({x}), w(x).str(), "0");
    }
  }
  return r;
}

struct HoopKind {
  bool prelinear = true;
  bool basic = false;
  bool divisible = false;
};

/// Valuation identity w(x∧y) + w(x∨y) = w(x) + w(y) (prelinear H), Bosbach
/// identity w(x) + w(x→y) = w(y) + w(y→x) (basic H), and for divisible H
/// that (v1), (v2) and a nonpositive codomain already force (v3), through
/// x = y·(y→x) whenever x <= y.
template <SemihoopLike H, class W>
ValidationReport state_properties(const H& h, const W& w,
                                  std::span<const std::pair<detail::Elem<H>, detail::Elem<H>>> pairs,
                                  HoopKind kind, std::optional<int> window = std::nullopt) {
  using E = detail::Elem<H>;
  ValidationReport r("state properties", window);
  auto L = [&](std::initializer_list<E> xs) { return detail::labels(h, xs); };
  if (kind.prelinear) {
    CheckResult& c = r.add("valuation");
    for (const auto& [x, y] : pairs) {
      ++c.instances;
      Rational l = w(h.meet(x, y)) + w(pseudo_join(h, x, y)), rr = w(x) + w(y);
      if (l != rr) c.fail(L({x, y}), l.str(), rr.str());
    }
  }
  if (kind.basic) {
    CheckResult& c = r.add("Bosbach");
    for (const auto& [x, y] : pairs) {
      ++c.instances;
      Rational l = w(x) + w(h.impl(x, y)), rr = w(y) + w(h.impl(y, x));
      if (l != rr) c.fail(L({x, y}), l.str(), rr.str());
    }
  }
  if (kind.divisible) {
    bool premises = true;
    if (!w(h.top()).is_zero()) premises = false;
    for (const auto& [x, y] : pairs) {
      if (w(x) > Rational(0) || w(y) > Rational(0) || w(h.mul(x, y)) != w(x) + w(y)) premises = false;
    }
    CheckResult& c = r.add("(v3) redundant");
    if (!premises) {
      c.note = "premises (v1), (v2), codomain fail; not applicable";
    } else {
      for (const auto& [x, y] : pairs) {
        if (!hoop_leq(h, x, y)) continue;
        ++c.instances;
        E factored = h.mul(y, h.impl(y, x));
        if (factored != x) {
          c.fail(L({x, y}), h.label(factored), h.label(x));
        } else if (w(x) > w(y)) {
          c.fail(L({x, y}), w(x).str(), w(y).str());
        }
      }
    }
  }
  return r;
}

/// All pairs of the carrier.
template <class E>
std::vector<std::pair<E, E>> all_pairs(std::span<const E> carrier) {
  std::vector<std::pair<E, E>> out;
  out.reserve(carrier.size() * carrier.size());
  for (const E& x : carrier) {
    for (const E& y : carrier) out.emplace_back(x, y);
  }
  return out;
}

/// Solves (v1) and (v2) as a linear system over Q and intersects the
/// solution space with the (v3) and codomain constraints. Finite semihoops
/// admit only the zero state; a nontrivial solution space is reported as a
/// ConsistencyError since this routine returns an explicit finite set.
std::vector<TableState> enumerate_states_finite(const FiniteSemihoop& h);

// ---------------------------------------------------------------------------
// States of the envelope K(Ĥ). The value of a class [x, y] is w(x) - w(y), so
// that σ̂(h(x)) = w(x·x) - w(x) = w(x).

/// σ̂ on the finite envelope, one value per class.
struct FiniteGroupState {
  FiniteKGroup group;
  std::vector<Rational> values;  // indexed by class id
  Rational operator()(const FinitePair& e) const { return values[group.class_of(e)]; }
};

struct FiniteGroupStateResult {
  FiniteGroupState sigma;
  /// Additivity, positivity and σ̂∘h = w over all classes.
  ValidationReport report;
};

/// Throws ConsistencyError when two representatives of a class disagree.
FiniteGroupStateResult state_to_kgroup_state(const FiniteSemihoop& h, const TableState& w);

/// σ̂ on the symbolic envelope Z^k (reversed order): σ̂(e) = -<lambda, canonical(e)>.
struct SymbolicGroupState {
  SymbolicKGroup group;
  std::vector<Rational> lambda;
  Rational operator()(const TuplePair& e) const;
};

SymbolicGroupState state_to_kgroup_state(const SymbolicConeHoop& h, const WeightState& w);

struct RecoveredState {
  TableState w;
  ValidationReport report;
};
struct RecoveredWeights {
  WeightState w;
  ValidationReport report;
};

/// w = σ∘h, validated over the carrier.
RecoveredState kgroup_state_to_state(const FiniteSemihoop& h, const FiniteGroupState& sigma);
/// w = σ∘h, validated over the window of the given bound.
RecoveredWeights kgroup_state_to_state(const SymbolicConeHoop& h, const SymbolicGroupState& sigma, int bound);

/// What the two candidate sign conventions yield on h(x): the adopted
/// w(x·x) - w(x) and the alternative w(x) - w(x·x).
struct SignConventionDiagnostic {
  Rational adopted;
  Rational alternative;
  Rational target;  // w(x)
};

template <SemihoopLike H, class W>
SignConventionDiagnostic sign_convention_diagnostic(const H& h, const W& w, const detail::Elem<H>& x) {
  const auto xx = h.mul(x, x);
  return {w(xx) - w(x), w(x) - w(xx), w(x)};
}

}  // namespace lexstate

#endif  // LEXSTATE_SEMIHOOP_HPP
