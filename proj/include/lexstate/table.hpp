#ifndef LEXSTATE_TABLE_HPP
#define LEXSTATE_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lexstate/report.hpp"

namespace lexstate {

using Index = std::uint32_t;

/// Square Cayley table of a binary operation on the carrier {0, ..., n-1}.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Index fill = 0) : n_(n), cells_(n * n, fill) {}

  /// Builds from rows; throws StructuralError naming `field` if the rows are
  /// ragged or an entry is out of range.
  static Table from_rows(const std::vector<std::vector<std::int64_t>>& rows, const std::string& field);

  std::size_t size() const { return n_; }
  Index operator()(Index x, Index y) const { return cells_[x * n_ + y]; }
  Index& at(Index x, Index y) { return cells_[x * n_ + y]; }

  std::vector<std::vector<Index>> rows() const;

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Index> cells_;
};

/// Checks that `index` addresses the carrier, else throws StructuralError.
void require_index(std::int64_t index, std::size_t size, const std::string& field);

}  // namespace lexstate

#endif  // LEXSTATE_TABLE_HPP
