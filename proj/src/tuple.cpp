#include "lexstate/tuple.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace lexstate {

namespace {

void require_same_rank(const IntTuple& a, const IntTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple rank mismatch");
}

template <class F>
IntTuple zip(const IntTuple& a, const IntTuple& b, F f) {
  require_same_rank(a, b);
  IntTuple out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a[i], b[i]);
  return out;
}

}  // namespace

IntTuple zero_tuple(std::size_t rank) {
  if (rank > kMaxRank) throw std::invalid_argument("rank exceeds " + std::to_string(kMaxRank));
  return IntTuple(rank, 0);
}

IntTuple unit_tuple(std::size_t rank, std::size_t axis) {
  IntTuple t = zero_tuple(rank);
  t.at(axis) = 1;
  return t;
}

IntTuple operator+(const IntTuple& a, const IntTuple& b) {
  return zip(a, b, [](std::int64_t x, std::int64_t y) { return x + y; });
}

IntTuple operator-(const IntTuple& a, const IntTuple& b) {
  return zip(a, b, [](std::int64_t x, std::int64_t y) { return x - y; });
}

IntTuple monus(const IntTuple& a, const IntTuple& b) {
  return zip(a, b, [](std::int64_t x, std::int64_t y) { return x > y ? x - y : std::int64_t{0}; });
}

IntTuple pointwise_min(const IntTuple& a, const IntTuple& b) {
  return zip(a, b, [](std::int64_t x, std::int64_t y) { return std::min(x, y); });
}

IntTuple pointwise_max(const IntTuple& a, const IntTuple& b) {
  return zip(a, b, [](std::int64_t x, std::int64_t y) { return std::max(x, y); });
}

bool pointwise_leq(const IntTuple& a, const IntTuple& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool is_nonnegative(const IntTuple& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v >= 0; });
}

std::string tuple_str(const IntTuple& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + "]";
}

IntTuple parse_tuple(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("malformed tuple '" + std::string(text) + "'");
  }
  IntTuple out;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || out.size() == kMaxRank) {
      throw std::invalid_argument("malformed tuple '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw std::invalid_argument("malformed tuple '" + std::string(text) + "'");
  }
  return out;
}

std::vector<IntTuple> tuple_window(std::size_t rank, std::int64_t bound) {
  std::vector<IntTuple> out;
  IntTuple t = zero_tuple(rank);
  while (true) {
    out.push_back(t);
    std::size_t i = rank;
    while (i > 0) {
      --i;
      if (t[i] < bound) {
        ++t[i];
        break;
      }
      t[i] = 0;
      if (i == 0) return out;
    }
    if (rank == 0) return out;
  }
}

}  // namespace lexstate
