#ifndef LEXSTATE_SRC_INTERNED_HPP
#define LEXSTATE_SRC_INTERNED_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexstate/algebra.hpp"

namespace lexstate::detail {

/// An algebra restricted to integer ids for fast exhaustive scans. The
/// carrier gets ids 0..W-1. Results of one operation on carrier elements are
/// interned, and operations with one argument in the carrier and the other
/// among those results are tabulated densely. Anything else is evaluated
/// exactly on demand and memoized.
class InternedAlgebra {
 public:
  using element_type = std::uint32_t;
  using Id = std::uint32_t;

  InternedAlgebra(const Algebra& a, std::span<const Element> carrier) : a_(&a), w_(carrier.size()) {
    for (const auto& x : carrier) intern(x);
    bot_ = intern(a.bot());
    top_ = intern(a.top());
    for (Id x = 0; x < w_; ++x) {
      for (Id y = 0; y < w_; ++y) {
        for (int k = 0; k < 4; ++k) intern(eval(k, elems_[x], elems_[y]));
      }
    }
    e1_ = elems_.size();
    for (int k = 0; k < 4; ++k) {
      left_[k].resize(e1_ * w_);
      right_[k].resize(w_ * e1_);
      for (Id e = 0; e < e1_; ++e) {
        for (Id x = 0; x < w_; ++x) {
          left_[k][e * w_ + x] = intern(eval(k, elems_[e], elems_[x]));
          right_[k][x * e1_ + e] = intern(eval(k, elems_[x], elems_[e]));
        }
      }
    }
  }

  Id mul(Id x, Id y) const { return op(0, x, y); }
  Id impl(Id x, Id y) const { return op(1, x, y); }
  Id meet(Id x, Id y) const { return op(2, x, y); }
  Id join(Id x, Id y) const { return op(3, x, y); }
  Id top() const { return top_; }
  Id bot() const { return bot_; }
  Id neg(Id x) const { return impl(x, bot_); }
  Id oplus(Id x, Id y) const { return impl(neg(x), y); }
  bool leq(Id x, Id y) const { return meet(x, y) == x; }
  std::string label(Id x) const { return a_->label(elems_[x]); }
  const Element& element(Id x) const { return elems_[x]; }
  std::size_t carrier_size() const { return w_; }

 private:
  Element eval(int k, const Element& x, const Element& y) const {
    switch (k) {
      case 0: return a_->mul(x, y);
      case 1: return a_->impl(x, y);
      case 2: return a_->meet(x, y);
      default: return a_->join(x, y);
    }
  }

  Id intern(const Element& x) const {
    auto [it, inserted] = index_.try_emplace(x, static_cast<Id>(elems_.size()));
    if (inserted) elems_.push_back(x);
    return it->second;
  }

  Id op(int k, Id x, Id y) const {
    if (y < w_ && x < e1_) return left_[k][x * w_ + y];
    if (x < w_ && y < e1_) return right_[k][x * e1_ + y];
    const std::uint64_t key = (std::uint64_t{x} << 32) | y;
    auto it = memo_[k].find(key);
    if (it != memo_[k].end()) return it->second;
    const Id r = intern(eval(k, elems_[x], elems_[y]));
    memo_[k].emplace(key, r);
    return r;
  }

  const Algebra* a_;
  std::size_t w_;
  std::size_t e1_ = 0;
  Id bot_ = 0, top_ = 0;
  mutable std::vector<Element> elems_;
  mutable std::unordered_map<Element, Id, ElementHash> index_;
  std::array<std::vector<Id>, 4> left_, right_;
  mutable std::array<std::unordered_map<std::uint64_t, Id>, 4> memo_;
};

}  // namespace lexstate::detail

#endif  // LEXSTATE_SRC_INTERNED_HPP
