#ifndef LEXSTATE_STATES_HPP
#define LEXSTATE_STATES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <variant>
#include <vector>

#include "lexstate/hypernum.hpp"
#include "lexstate/ibp0.hpp"

// Probability measures on finite Boolean skeletons and hyperstates of
// IBP0-algebras, with values in Γ(Q ×lex Q, (1,0)).
//
// A hyperstate given by a measure p and cone weights lambda evaluates as
//   s(a) = p(b_a) + ε (w(¬b_a ∨ c_a) - w(b_a ∨ c_a)),
// where (b_a, c_a) is the decomposition of a and w(m) = -<lambda, m> on the
// radical coordinates.

namespace lexstate {

/// Finitely additive measure given by one weight per skeleton atom.
struct ProbabilityMeasure {
  std::vector<Element> atoms;
  std::vector<Rational> weights;
  friend bool operator==(const ProbabilityMeasure&, const ProbabilityMeasure&) = default;
};

/// Explicit values on finitely many elements.
struct HyperstateTable {
  std::unordered_map<Element, DualRational, ElementHash> values;
};

/// The (p, lambda) form; lambda has one entry per cone coordinate.
struct HyperstateParams {
  ProbabilityMeasure p;
  std::vector<Rational> lambda;
};

struct Hyperstate {
  std::variant<HyperstateTable, HyperstateParams> form;
};

// ---------------------------------------------------------------------------

/// The elements a hyperstate check needs, evaluated once: the window, its
/// negations, all window pair results of ⊕, ·, ∧, ∨, and the decomposition
/// parts of every window element. Every interned element carries the atoms
/// below its b-part and the radical coordinates of c-parts, so that
/// (p, lambda) hyperstates tabulate without further algebra operations.
class Frame {
 public:
  using Id = std::uint32_t;

  /// Throws PreconditionError unless `a` is IBP0 on the window, or when the
  /// skeleton has more than 64 atoms.
  Frame(const Algebra& a, int bound);

  const Algebra& algebra() const { return a_; }
  int bound() const { return bound_; }
  std::optional<int> window_tag() const;
  /// Window element ids are 0..window_size()-1, in window order.
  const std::vector<Element>& window() const { return window_; }
  std::size_t window_size() const { return window_size_; }
  std::size_t size() const { return elements_.size(); }
  const Element& element(Id i) const { return elements_[i]; }
  std::optional<Id> find(const Element& x) const;

  Id oplus(Id x, Id y) const { return pair_[4 * (x * window_size_ + y)]; }
  Id mul(Id x, Id y) const { return pair_[4 * (x * window_size_ + y) + 1]; }
  Id meet(Id x, Id y) const { return pair_[4 * (x * window_size_ + y) + 2]; }
  Id join(Id x, Id y) const { return pair_[4 * (x * window_size_ + y) + 3]; }
  Id neg(Id x) const { return neg_[x]; }
  bool leq(Id x, Id y) const { return meet(x, y) == x; }

  Id bot() const { return bot_; }
  Id top() const { return top_; }
  const Skeleton& skeleton() const { return skeleton_; }
  const std::vector<Id>& skeleton_ids() const { return skeleton_ids_; }
  const std::vector<Id>& radical_ids() const { return radical_ids_; }
  const std::vector<Id>& coradical_ids() const { return coradical_ids_; }

  struct Parts {
    Id b, c, neg_b_or_c, b_or_c;
  };
  /// Decomposition of an interned element; the parts are interned too.
  const Parts& parts(Id x) const { return parts_[x]; }
  /// Bitmask of the skeleton atoms below b_x.
  std::uint64_t atom_mask(Id x) const { return mask_[x]; }
  /// coordinates(b_x ∨ c_x) - coordinates(¬b_x ∨ c_x).
  const IntTuple& delta(Id x) const { return delta_[x]; }
  /// Radical coordinates; zero for elements outside the radical.
  const IntTuple& coordinates(Id x) const { return coords_[x]; }
  bool radical(Id x) const { return radical_[x]; }

 private:
  Id intern(const Element& x);

  Algebra a_;
  int bound_;
  std::size_t window_size_ = 0;
  std::vector<Element> window_;
  std::vector<Element> elements_;
  std::unordered_map<Element, Id, ElementHash> index_;
  std::vector<Id> pair_;
  std::vector<Id> neg_;
  std::vector<Parts> parts_;
  std::vector<std::uint64_t> mask_;
  std::vector<IntTuple> delta_;
  std::vector<IntTuple> coords_;
  std::vector<bool> radical_;
  Id bot_ = 0, top_ = 0;
  Skeleton skeleton_;
  std::vector<Id> skeleton_ids_, radical_ids_, coradical_ids_;
};

/// Values of s on every frame element; nullopt where a table has no entry.
using Tabulation = std::vector<std::optional<LexValue>>;

Tabulation tabulate(const Frame& f, const Hyperstate& s);

/// p(b) for a skeleton element b.
Rational measure_of(const Frame& f, const ProbabilityMeasure& p, Frame::Id b);

/// Normalization p(1) = 1, nonnegative weights, p(b) in [0,1] on the
/// skeleton and p(b ∨ b') = p(b) + p(b') for disjoint b, b'. Throws
/// StructuralError when the atoms are not those of the skeleton.
ValidationReport validate_probability(const Frame& f, const ProbabilityMeasure& p);

/// Uniform weights on the skeleton atoms.
ProbabilityMeasure uniform_measure(const Frame& f);

/// Values in [0,1]; (s1) s(1) = 1 and s(0) = 0; (s2) on every window pair
/// whose results have values; (s3) zero infinitesimal part on the skeleton.
/// Throws StructuralError when a window element has no value.
ValidationReport validate_hyperstate(const Frame& f, const Hyperstate& s);
ValidationReport validate_hyperstate(const Frame& f, const Tabulation& t);

/// The derived properties (i)-(viii), each as a check over the window.
ValidationReport hyperstate_properties(const Frame& f, const Tabulation& t);

struct SplitResult {
  ProbabilityMeasure p;
  /// Weights with w(x) = -<lambda, coordinates(x)> on the radical.
  std::vector<Rational> lambda;
  /// (element, w(element)) for every radical window element.
  std::vector<std::pair<Element, Rational>> w;
  /// s(a) - (p(b_a) + ε (w(¬b_a ∨ c_a) - w(b_a ∨ c_a))) for every window element.
  std::vector<std::pair<Element, LexValue>> residuals;
  ValidationReport report;
};

/// A guaranteed identity failed on an input that passed validation.
class TheoremViolation : public ConsistencyError {
 public:
  TheoremViolation(const std::string& what, ValidationReport report)
      : ConsistencyError(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// p from the standard parts on the skeleton atoms, w from the infinitesimal
/// parts on the radical. Throws PreconditionError if s is not a valid
/// hyperstate, TheoremViolation (with the report) if the decomposition
/// identity or the fitted weights fail at some window element.
SplitResult split_hyperstate(const Frame& f, const Hyperstate& s);

struct JoinResult {
  Hyperstate s;
  /// validate_hyperstate of s; failures are data.
  ValidationReport report;
};

/// s from (p, lambda) by the decomposition formula, always revalidated.
JoinResult join_hyperstate(const Frame& f, const ProbabilityMeasure& p, const std::vector<Rational>& lambda);

struct CancellativeForm {
  ProbabilityMeasure p;
  SymbolicGroupState sigma;
  /// s(a) = p(b_a) + ε σ([¬b_a ∨ c_a, b_a ∨ c_a]) on the window, and
  /// agreement with split_hyperstate.
  ValidationReport report;
};

/// Throws PreconditionError when the radical has no cone coordinates or is
/// not cancellative on the window.
CancellativeForm cancellative_form(const Frame& f, const Hyperstate& s);

}  // namespace lexstate

#endif  // LEXSTATE_STATES_HPP
