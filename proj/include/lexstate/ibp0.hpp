#ifndef LEXSTATE_IBP0_HPP
#define LEXSTATE_IBP0_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexstate/algebra.hpp"
#include "lexstate/report.hpp"
#include "lexstate/semihoop.hpp"

namespace lexstate {

/// Default window bound for symbolic algebras.
inline constexpr int kDefaultWindow = 8;

/// How universally quantified axioms range over a carrier.
struct ScanPolicy {
  /// Exhaustive triple scans are used while |carrier|^3 stays below this;
  /// larger products are validated factor by factor plus `samples` random
  /// mixed triples over the product window.
  std::size_t triple_budget = 40'000'000;
  std::size_t samples = 20'000;
  std::uint64_t seed = 0x1b9d0;
};

/// Bounded commutative integral residuated lattice axioms plus
/// prelinearity (x → y) ∨ (y → x) = 1, over the given carrier.
ValidationReport validate_mtl(const Algebra& a, std::span<const Element> carrier,
                              std::optional<int> window = std::nullopt);

/// MTL axioms, (DL) (2x)^2 = 2(x^2) and (Inv) ¬¬x = x over the window of the
/// given bound. Products too large for exhaustive scans are checked per
/// factor (identities hold in a product iff they hold in every factor) and
/// on random mixed triples.
ValidationReport validate_ibp0(const Algebra& a, int bound = kDefaultWindow, const ScanPolicy& policy = {});

/// Throws PreconditionError with the first witness unless validate_ibp0 passes.
void require_ibp0(const Algebra& a, int bound);

// ---------------------------------------------------------------------------

struct Skeleton {
  /// Window elements with a ∨ ¬a = 1, in window order.
  std::vector<Element> elements;
  /// Minimal nonzero skeleton elements, in window order.
  std::vector<Element> atoms;
  /// Closure under ·, ⊕, ¬ and the Boolean identities · = ∧, ⊕ = ∨.
  ValidationReport report;
};

Skeleton boolean_skeleton(const Algebra& a, int bound = kDefaultWindow);

bool in_skeleton(const Algebra& a, const Element& x);
/// x > ¬x.
bool in_radical(const Algebra& a, const Element& x);
/// ¬x > x.
bool in_coradical(const Algebra& a, const Element& x);

/// The radical viewed as a semihoop with the restricted operations.
class RadicalSemihoop {
 public:
  using element_type = Element;
  explicit RadicalSemihoop(const Algebra& a) : a_(&a) {}
  Element mul(const Element& x, const Element& y) const { return a_->mul(x, y); }
  Element impl(const Element& x, const Element& y) const { return a_->impl(x, y); }
  Element meet(const Element& x, const Element& y) const { return a_->meet(x, y); }
  Element top() const { return a_->top(); }
  std::string label(const Element& x) const { return a_->label(x); }

 private:
  const Algebra* a_;
};

struct Radical {
  std::vector<Element> elements;    // ℋ(A) within the window
  std::vector<Element> coradical;   // their negations
  /// Table form of ℋ(A), reindexed in window order, for finite algebras.
  std::optional<FiniteSemihoop> table;
  /// Semihoop axioms on the induced structure plus the closure b ∨ c ∈ ℋ(A)
  /// for skeleton b and radical c.
  ValidationReport report;
};

/// Throws PreconditionError unless `a` is IBP0 on the window.
Radical radical(const Algebra& a, int bound = kDefaultWindow);

/// Concatenated cone exponents of the rotation components of a radical
/// element (finite components carry no coordinates).
IntTuple radical_coordinates(const Algebra& a, const Element& x);
/// The radical element with the given rotation coordinates and top finite
/// components.
Element radical_element(const Algebra& a, const IntTuple& coords);

struct Decomposition {
  Element b;  // ¬((¬a²)²), in the skeleton
  Element c;  // a ∨ ¬a, in the radical
};

/// Throws ConsistencyError if b is not complemented, c is not radical, or
/// (b ∨ ¬c) ∧ (¬b ∨ c) differs from a.
Decomposition decompose_element(const Algebra& a, const Element& x);

/// Inverse of decompose_element.
Element recompose(const Algebra& a, const Decomposition& d);

/// Rotation of a finite prelinear semihoop as tables: index x is +x and
/// index n + x is -x. The result is validated; a failing validator rejects
/// the construction with PreconditionError naming the witness.
FiniteMTL rotate(const FiniteSemihoop& h);
/// Rotation of a cone hoop, validated on a window (bound chosen so the
/// window stays at most 162 elements).
Algebra rotate(const SymbolicConeHoop& h);

/// Componentwise product; every factor is validated first.
Algebra product(const std::vector<Algebra>& factors, int bound = kDefaultWindow);

}  // namespace lexstate

#endif  // LEXSTATE_IBP0_HPP
