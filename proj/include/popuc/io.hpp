#pragma once

#include <string>
#include <vector>

#include "popuc/schur.hpp"

namespace popuc::io {

// Complex literal in `re+imi` form, e.g. "0.5-0.25i", "1", "2i", "-i".
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

// "start:end:step"
struct Range {
  double start = 0.0, end = 0.0, step = 0.0;
  std::vector<double> grid() const;
};
Range parse_range(const std::string& text);

// Parameter file with keys `alphas` (comma-separated complex list) and `tau`.
schur::SchurParameters read_parameters_file(const std::string& path);
void write_parameters_file(const std::string& path, const schur::SchurParameters& params);
schur::SchurParameters parse_parameters_text(const std::string& text);

// Fixed 9-significant-digit rendering used by every CSV emitter.
std::string format_number(double v);

// Writes content to path via a temporary file and rename; no partial output.
void write_file_atomic(const std::string& path, const std::string& content);

std::vector<std::string> split(const std::string& line, char sep);
std::string trim(const std::string& s);

}  // namespace popuc::io
