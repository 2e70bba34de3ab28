#ifndef LEXSTATE_CORPUS_HPP
#define LEXSTATE_CORPUS_HPP

#include <string>
#include <vector>

#include "lexstate/algebra.hpp"
#include "lexstate/lmonoid.hpp"
#include "lexstate/semihoop.hpp"

// Named test structures.

namespace lexstate::corpus {

/// Boolean algebra on the subsets of k atoms, as bitmasks.
FiniteMTL boolean_algebra(std::size_t atoms);
/// Łukasiewicz chain {0, 1/(n-1), ..., 1}; index i stands for i/(n-1).
FiniteMTL lukasiewicz_chain(std::size_t n);

/// Gödel chain 0 < 1 < ... < n-1 as a semihoop: x·y = min, x → y = 1 if
/// x <= y and y otherwise.
FiniteSemihoop godel_semihoop(std::size_t n);
/// Łukasiewicz chain as a semihoop.
FiniteSemihoop lukasiewicz_semihoop(std::size_t n);
/// Nilpotent minimum chain on n elements: x·y = min(x,y) if x + y > n-1,
/// else 0.
FiniteSemihoop nilpotent_minimum_semihoop(std::size_t n);
/// Componentwise product; element (x, y) has index x·|B| + y.
FiniteSemihoop product_semihoop(const FiniteSemihoop& a, const FiniteSemihoop& b);

/// {0,...,n-1} with min(x + y, n-1) and the natural order; unit 0 is the bottom.
FiniteLMonoid truncated_addition(std::size_t n);
/// {1, a} with a + a = a and a < 1.
FiniteLMonoid idempotent_pair();
FiniteLMonoid trivial_lmonoid();
/// {0,1}^2 with pointwise max as addition and the pointwise order.
FiniteLMonoid boolean_square();

template <class T>
struct Named {
  std::string name;
  T value;
};

/// Finite semihoops of sizes 1 to 6.
std::vector<Named<FiniteSemihoop>> finite_semihoops();
/// l-monoids of size at most 4: the hand-made ones and semihoop reducts.
std::vector<Named<FiniteLMonoid>> small_lmonoids();

/// Boolean 2, 4, 8, rotations of the Gödel 3- and 4-chains, Chang rank 1, 2.
std::vector<Named<Algebra>> base_algebras();
/// Products of every unordered pair of base algebras (including squares).
std::vector<Named<Algebra>> pairwise_products();

}  // namespace lexstate::corpus

#endif  // LEXSTATE_CORPUS_HPP
