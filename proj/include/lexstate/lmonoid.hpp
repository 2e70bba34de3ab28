#ifndef LEXSTATE_LMONOID_HPP
#define LEXSTATE_LMONOID_HPP

#include <optional>
#include <string>
#include <vector>

#include "lexstate/report.hpp"
#include "lexstate/table.hpp"
#include "lexstate/tuple.hpp"

// Lattice-ordered commutative monoids and their Grothendieck envelopes.
//
// The envelope K(M) is M x M modulo [x,y] ~ [x',y'] iff z + x + y' = z + x' + y
// for some z, ordered by [x1,y1] <= [x2,y2] iff z + x1 + y2 <= z + y1 + x2
// for some z, with
//   [x1,y1] join [x2,y2] = [x1 + x2, (x1 + y2) meet (x2 + y1)]
//   [x1,y1] meet [x2,y2] = [(x1 + y2) meet (x2 + y1), y1 + y2]
// and embedding h(x) = [x + x, x].

namespace lexstate {

/// l-monoid on {0, ..., n-1} given by Cayley tables.
class FiniteLMonoid {
 public:
  /// Throws StructuralError if the tables are not size x size or the unit is
  /// out of range. Axioms are not checked here; see validate_lmonoid.
  FiniteLMonoid(Table add, Table meet, Table join, Index unit);

  std::size_t size() const { return add_.size(); }
  Index add(Index x, Index y) const { return add_(x, y); }
  Index meet(Index x, Index y) const { return meet_(x, y); }
  Index join(Index x, Index y) const { return join_(x, y); }
  Index unit() const { return unit_; }
  bool leq(Index x, Index y) const { return meet_(x, y) == x; }

  const Table& add_table() const { return add_; }
  const Table& meet_table() const { return meet_; }
  const Table& join_table() const { return join_; }

  friend bool operator==(const FiniteLMonoid&, const FiniteLMonoid&) = default;

 private:
  Table add_, meet_, join_;
  Index unit_;
};

/// Lattice orientation of a symbolic cone N^k.
enum class ConeOrder {
  natural,   // (N^k, +, min, max, 0): the unit is the bottom
  reversed,  // (N^k, +, max, min, 0): the unit is the top (hoop reduct of a cone hoop)
};

/// N^k with componentwise addition and a componentwise lattice order.
/// Cancellative by construction.
class SymbolicCancellativeMonoid {
 public:
  explicit SymbolicCancellativeMonoid(std::size_t rank, ConeOrder order = ConeOrder::natural);

  std::size_t rank() const { return rank_; }
  ConeOrder order() const { return order_; }

  IntTuple add(const IntTuple& x, const IntTuple& y) const { return x + y; }
  IntTuple meet(const IntTuple& x, const IntTuple& y) const;
  IntTuple join(const IntTuple& x, const IntTuple& y) const;
  IntTuple unit() const { return zero_tuple(rank_); }
  bool leq(const IntTuple& x, const IntTuple& y) const;

  /// Throws StructuralError unless x is a nonnegative tuple of this rank.
  void require_element(const IntTuple& x) const;

 private:
  std::size_t rank_;
  ConeOrder order_;
};

/// Axiom report for the finite table form: monoid laws, lattice laws and the
/// distribution laws D1 (+ over meet) and D2 (+ over join).
ValidationReport validate_lmonoid(const FiniteLMonoid& m);

/// Brute force over all triples for finite monoids.
bool is_cancellative(const FiniteLMonoid& m);
/// True by construction.
bool is_cancellative(const SymbolicCancellativeMonoid& m);

/// True iff the unit is the top element (x <= 0 for every x).
bool is_integral(const FiniteLMonoid& m);
/// True iff the unit is the bottom element.
bool is_positive(const FiniteLMonoid& m);

// ---------------------------------------------------------------------------
// Finite envelope

/// Representative pair [pos, neg] over a finite carrier.
struct FinitePair {
  Index pos = 0;
  Index neg = 0;
  friend bool operator==(const FinitePair&, const FinitePair&) = default;
  friend auto operator<=>(const FinitePair&, const FinitePair&) = default;
};

/// K(M) for finite M, with the equivalence classes of M x M materialized.
class FiniteKGroup {
 public:
  explicit FiniteKGroup(FiniteLMonoid base);

  const FiniteLMonoid& base() const { return base_; }
  std::size_t class_count() const { return reps_.size(); }
  /// Canonical representatives: the lexicographically least pair of each
  /// class, sorted.
  const std::vector<FinitePair>& representatives() const { return reps_; }
  std::size_t class_of(const FinitePair& e) const { return class_id_[e.pos * base_.size() + e.neg]; }
  FinitePair canonical(const FinitePair& e) const { return reps_[class_of(e)]; }

  FinitePair zero() const { return {base_.unit(), base_.unit()}; }
  FinitePair add(const FinitePair& a, const FinitePair& b) const;
  FinitePair negate(const FinitePair& a) const { return {a.neg, a.pos}; }
  FinitePair embed(Index x) const { return {base_.add(x, x), x}; }

  /// Some z with z + x1 + y2 = z + x2 + y1, if any.
  std::optional<Index> equal_witness(const FinitePair& a, const FinitePair& b) const;
  /// Some z with z + x1 + y2 <= z + y1 + x2, if any.
  std::optional<Index> leq_witness(const FinitePair& a, const FinitePair& b) const;

  bool h_injective() const;

 private:
  FiniteLMonoid base_;
  std::vector<FinitePair> reps_;
  std::vector<std::size_t> class_id_;
};

struct FiniteEnvelope {
  FiniteKGroup group;
  /// h(x) for every carrier element x.
  std::vector<FinitePair> embedding;
};

FiniteEnvelope k_envelope(const FiniteLMonoid& m);

bool k_equal(const FiniteKGroup& k, const FinitePair& a, const FinitePair& b);
bool k_leq(const FiniteKGroup& k, const FinitePair& a, const FinitePair& b);
FinitePair k_join(const FiniteKGroup& k, const FinitePair& a, const FinitePair& b);
FinitePair k_meet(const FiniteKGroup& k, const FinitePair& a, const FinitePair& b);

/// An element of the image subgroup below [a,b]: h(a meet b) when the unit is
/// the top of M, -h(b) when the unit is the bottom. Throws PreconditionError
/// when the unit is neither.
FinitePair image_bound(const FiniteKGroup& k, const FinitePair& e);

std::string pair_str(const FinitePair& e);

// ---------------------------------------------------------------------------
// Symbolic envelope

/// Pair of cone elements; its canonical form is pos - neg in Z^k.
struct TuplePair {
  IntTuple pos;
  IntTuple neg;
  friend bool operator==(const TuplePair&, const TuplePair&) = default;
};

/// K(N^k) = Z^k, ordered componentwise (natural) or reverse-componentwise
/// (reversed), with h(x) = [2x, x] whose canonical form is x itself.
class SymbolicKGroup {
 public:
  explicit SymbolicKGroup(SymbolicCancellativeMonoid base) : base_(base) {}

  const SymbolicCancellativeMonoid& base() const { return base_; }
  IntTuple canonical(const TuplePair& e) const { return e.pos - e.neg; }

  TuplePair zero() const { return {base_.unit(), base_.unit()}; }
  TuplePair add(const TuplePair& a, const TuplePair& b) const { return {a.pos + b.pos, a.neg + b.neg}; }
  TuplePair negate(const TuplePair& a) const { return {a.neg, a.pos}; }
  TuplePair embed(const IntTuple& x) const { return {x + x, x}; }

 private:
  SymbolicCancellativeMonoid base_;
};

struct SymbolicEnvelope {
  SymbolicKGroup group;
};

SymbolicEnvelope k_envelope(const SymbolicCancellativeMonoid& m);

bool k_equal(const SymbolicKGroup& k, const TuplePair& a, const TuplePair& b);
bool k_leq(const SymbolicKGroup& k, const TuplePair& a, const TuplePair& b);
TuplePair k_join(const SymbolicKGroup& k, const TuplePair& a, const TuplePair& b);
TuplePair k_meet(const SymbolicKGroup& k, const TuplePair& a, const TuplePair& b);
TuplePair image_bound(const SymbolicKGroup& k, const TuplePair& e);

std::string pair_str(const TuplePair& e);

}  // namespace lexstate

#endif  // LEXSTATE_LMONOID_HPP
