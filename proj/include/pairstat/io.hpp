#ifndef PAIRSTAT_IO_HPP_
#define PAIRSTAT_IO_HPP_

#include <iosfwd>
#include <string>

#include "pairstat/workload.hpp"

namespace pairstat {

// Plain-text dense matrix format: first line "k_rows k_cols", then one
// whitespace-separated row per line. Values round-trip exactly (%.17g).

void write_matrix(std::ostream& os, const Matrix& m);
Matrix read_matrix(std::istream& is);

void write_matrix_file(const std::string& path, const Matrix& m);
Matrix read_matrix_file(const std::string& path);

/// Factorization bundle: header line "alpha <value>", then L, R, and the
/// target W in the matrix format, separated by blank lines.
struct FactorizationBundle {
  Factorization fact;
  Matrix target;
};

void write_bundle(const std::string& path, const Factorization& f,
                  const Matrix& target);
FactorizationBundle read_bundle(const std::string& path);

/// Canonical decimal formatting used for all text output (17 significant
/// digits, round-trip safe).
std::string format_double(double v);

}  // namespace pairstat

#endif  // PAIRSTAT_IO_HPP_
