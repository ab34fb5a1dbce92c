#include "twistqa/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "twistqa/error.hpp"

namespace tqa {

std::string format_real(double x) {
  if (!std::isfinite(x)) throw NumericalError("refusing to write a non-finite value");
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  if (ec != std::errc{}) throw Error("format_real: conversion failed");
  return std::string(buf.data(), ptr);
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out), columns_(header.size()) {
  for (std::size_t k = 0; k < header.size(); ++k) out_ << (k ? "," : "") << header[k];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_) {
    throw DimensionError("CsvWriter: row has " + std::to_string(cells.size()) + " cells, header has " +
                         std::to_string(columns_));
  }
  std::string line;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) line += ',';
    if (cells[k]) line += format_real(*cells[k]);
  }
  out_ << line << '\n';
}

}  // namespace tqa
