#ifndef LEXSTATE_ALGEBRA_HPP
#define LEXSTATE_ALGEBRA_HPP

#include <boost/container/small_vector.hpp>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lexstate/semihoop.hpp"
#include "lexstate/table.hpp"
#include "lexstate/tuple.hpp"

// Bounded commutative integral residuated lattices (·, →, ∧, ∨, 0, 1) in
// three forms: finite Cayley tables, the disconnected rotation of a cone
// hoop (a perfect MV-algebra of Chang type), and finite products of those.
//
// Derived operations: ¬x = x → 0, x ⊕ y = ¬x → y.

namespace lexstate {

/// Finite table algebra on {0, ..., n-1}.
class FiniteMTL {
 public:
  /// Throws StructuralError on size mismatch or out-of-range constants.
  FiniteMTL(Table times, Table impl, Table meet, Table join, Index bot, Index top);

  std::size_t size() const { return times_.size(); }
  Index mul(Index x, Index y) const { return times_(x, y); }
  Index impl(Index x, Index y) const { return impl_(x, y); }
  Index meet(Index x, Index y) const { return meet_(x, y); }
  Index join(Index x, Index y) const { return join_(x, y); }
  Index bot() const { return bot_; }
  Index top() const { return top_; }

  const Table& times_table() const { return times_; }
  const Table& impl_table() const { return impl_; }
  const Table& meet_table() const { return meet_; }
  const Table& join_table() const { return join_; }

  friend bool operator==(const FiniteMTL&, const FiniteMTL&) = default;

 private:
  Table times_, impl_, meet_, join_;
  Index bot_, top_;
};

/// Element of a rotation: the radical copy (+m) or the coradical copy (-m)
/// of a cone element m.
struct SignedTuple {
  bool radical = true;
  IntTuple exponent;
  friend bool operator==(const SignedTuple&, const SignedTuple&) = default;
};

/// Disconnected rotation of the cone hoop of rank k. Carrier +H ⊎ -H with
/// every -x below every +y; -x <= -y iff y <= x in H. Products:
///   +x · +y = +(x·y),  +x · -y = -(x → y),  -x · -y = -1 (the bottom).
/// The residuum is the one determined by residuation.
/// At rank 1 this is Chang's algebra Γ(Z ×lex Z, (1,0)) with +m ↔ (1,-m)
/// and -m ↔ (0,m).
class RotationAlgebra {
 public:
  explicit RotationAlgebra(std::size_t rank) : core_(rank) {}

  std::size_t rank() const { return core_.rank(); }
  const SymbolicConeHoop& core() const { return core_; }

  SignedTuple mul(const SignedTuple& x, const SignedTuple& y) const;
  SignedTuple impl(const SignedTuple& x, const SignedTuple& y) const;
  SignedTuple meet(const SignedTuple& x, const SignedTuple& y) const;
  SignedTuple join(const SignedTuple& x, const SignedTuple& y) const;
  SignedTuple bot() const { return {false, core_.top()}; }
  SignedTuple top() const { return {true, core_.top()}; }
  std::vector<SignedTuple> window(int bound) const;

  friend bool operator==(const RotationAlgebra& a, const RotationAlgebra& b) { return a.rank() == b.rank(); }

 private:
  SymbolicConeHoop core_;
};

/// Component of an element in one factor.
using Component = std::variant<Index, SignedTuple>;
using Factor = std::variant<FiniteMTL, RotationAlgebra>;

/// Element of an Algebra: one component per factor.
class Element {
 public:
  Element() = default;
  explicit Element(Component c) { parts_.push_back(std::move(c)); }

  std::size_t arity() const { return parts_.size(); }
  const Component& operator[](std::size_t i) const { return parts_[i]; }
  Component& operator[](std::size_t i) { return parts_[i]; }
  void push_back(Component c) { parts_.push_back(std::move(c)); }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// Carrier index of a single finite factor.
  Index index() const { return std::get<Index>(parts_.at(0)); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  boost::container::small_vector<Component, 2> parts_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

/// A finite product of finite and rotation factors. A single factor is the
/// algebra itself; nested products are flattened.
class Algebra {
 public:
  Algebra(FiniteMTL a);       // NOLINT: implicit
  Algebra(RotationAlgebra a);  // NOLINT: implicit
  /// Throws PreconditionError on an empty list.
  static Algebra product(const std::vector<Algebra>& factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_finite() const;
  bool is_product() const { return factors_.size() > 1; }
  /// The single finite factor; throws std::bad_variant_access otherwise.
  const FiniteMTL& finite() const;
  /// Sum of the ranks of the rotation factors.
  std::size_t cone_rank() const;

  Element mul(const Element& x, const Element& y) const;
  Element impl(const Element& x, const Element& y) const;
  Element meet(const Element& x, const Element& y) const;
  Element join(const Element& x, const Element& y) const;
  Element bot() const;
  Element top() const;
  Element neg(const Element& x) const { return impl(x, bot()); }
  Element oplus(const Element& x, const Element& y) const { return impl(neg(x), y); }
  Element square(const Element& x) const { return mul(x, x); }
  Element twice(const Element& x) const { return oplus(x, x); }
  bool leq(const Element& x, const Element& y) const { return meet(x, y) == x; }
  bool lt(const Element& x, const Element& y) const { return x != y && leq(x, y); }

  /// Finite factors contribute their whole carrier; rotation factors the
  /// signed tuples with coordinates <= bound. Finite algebras ignore bound.
  std::vector<Element> window(int bound) const;

  /// Text form: "3" (finite), "+[1,0]" / "-[2]" (rotation), and
  /// "(3;+[1];-[0])" for products.
  std::string label(const Element& x) const;
  /// Inverse of label; throws StructuralError on text that does not name an
  /// element of this algebra.
  Element parse(std::string_view text) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  Algebra() = default;
  std::vector<Factor> factors_;
};

std::string component_label(const Component& c);

}  // namespace lexstate

#endif  // LEXSTATE_ALGEBRA_HPP
