#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tqa {

// Shortest form carrying 17 significant digits. Throws NumericalError for
// NaN or infinity; no non-finite value is ever written.
std::string format_real(double x);

// Header first, then rows. Empty optional cells are written as empty fields.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);

  using Cell = std::optional<double>;
  void row(const std::vector<Cell>& cells);
  void row(std::initializer_list<Cell> cells) { row(std::vector<Cell>(cells)); }

 private:
  std::ostream& out_;
  std::size_t columns_;
};

}  // namespace tqa
