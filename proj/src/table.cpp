#include "lexstate/table.hpp"

namespace lexstate {

Table Table::from_rows(const std::vector<std::vector<std::int64_t>>& rows, const std::string& field) {
  const std::size_t n = rows.size();
  Table t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw StructuralError("table '" + field + "' row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      require_index(rows[i][j], n, field + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
      t.at(static_cast<Index>(i), static_cast<Index>(j)) = static_cast<Index>(rows[i][j]);
    }
  }
  return t;
}

std::vector<std::vector<Index>> Table::rows() const {
  std::vector<std::vector<Index>> out(n_, std::vector<Index>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = cells_[i * n_ + j];
  }
  return out;
}

void require_index(std::int64_t index, std::size_t size, const std::string& field) {
  if (index < 0 || static_cast<std::size_t>(index) >= size) {
    throw StructuralError("index " + std::to_string(index) + " out of range in '" + field + "' (size " +
                          std::to_string(size) + ")");
  }
}

}  // namespace lexstate
