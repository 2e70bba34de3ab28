#ifndef LEXSTATE_TUPLE_HPP
#define LEXSTATE_TUPLE_HPP

#include <boost/container/static_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lexstate {

/// Largest rank of a symbolic cone (and of any concatenation of cones).
inline constexpr std::size_t kMaxRank = 8;

/// Integer k-tuple, k <= kMaxRank. Holds cone exponents (all entries
/// nonnegative) and envelope canonical forms (any sign).
using IntTuple = boost::container::static_vector<std::int64_t, kMaxRank>;

IntTuple zero_tuple(std::size_t rank);
IntTuple unit_tuple(std::size_t rank, std::size_t axis);

IntTuple operator+(const IntTuple& a, const IntTuple& b);
IntTuple operator-(const IntTuple& a, const IntTuple& b);
/// Componentwise max(0, a - b).
IntTuple monus(const IntTuple& a, const IntTuple& b);
IntTuple pointwise_min(const IntTuple& a, const IntTuple& b);
IntTuple pointwise_max(const IntTuple& a, const IntTuple& b);
bool pointwise_leq(const IntTuple& a, const IntTuple& b);
bool is_nonnegative(const IntTuple& a);

/// "[1,0,2]"
std::string tuple_str(const IntTuple& t);
IntTuple parse_tuple(std::string_view text);

/// All tuples of the given rank with every coordinate in [0, bound], in
/// lexicographic order.
std::vector<IntTuple> tuple_window(std::size_t rank, std::int64_t bound);

struct IntTupleHash {
  std::size_t operator()(const IntTuple& t) const noexcept {
    std::size_t h = t.size();
    for (auto v : t) h = h * 1000003u ^ std::hash<std::int64_t>{}(v);
    return h;
  }
};

}  // namespace lexstate

#endif  // LEXSTATE_TUPLE_HPP
