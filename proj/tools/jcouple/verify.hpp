#pragma once

#include <ostream>
#include <string>

#include "output.hpp"

namespace jcouple::cli {

struct GridOptions {
  std::size_t n = 2;
  HalfInt jmax = 1;
  std::string interp = "same-state";
};

/// Parses "n=2,jmax=1[,interp=paper-literal]".
GridOptions parse_grid(const std::string& text);

struct VerifySummary {
  std::size_t agree = 0;
  std::size_t diverge = 0;
};

/// Writes one verdict record per input tuple, ordered by sorted input.
VerifySummary run_verify(const std::string& prop, const GridOptions& grid, Format format, std::ostream& out);

}  // namespace jcouple::cli
