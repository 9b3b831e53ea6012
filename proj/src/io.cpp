#include "pairstat/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pairstat {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_matrix(std::ostream& os, const Matrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << format_double(m(i, j));
    }
    os << '\n';
  }
}

Matrix read_matrix(std::istream& is) {
  long rows = 0, cols = 0;
  if (!(is >> rows >> cols) || rows < 1 || cols < 1) {
    throw std::runtime_error("matrix header: expected \"k_rows k_cols\"");
  }
  Matrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) {
      if (!(is >> m(i, j))) {
        throw std::runtime_error("matrix body: not enough entries");
      }
    }
  }
  return m;
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_matrix(os, m);
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return read_matrix(is);
}

void write_bundle(const std::string& path, const Factorization& f,
                  const Matrix& target) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << "alpha " << format_double(f.alpha) << '\n' << '\n';
  write_matrix(os, f.left);
  os << '\n';
  write_matrix(os, f.right);
  os << '\n';
  write_matrix(os, target);
}

FactorizationBundle read_bundle(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  std::string word;
  double alpha = 0.0;
  if (!(is >> word >> alpha) || word != "alpha") {
    throw std::runtime_error("bundle header: expected \"alpha <value>\"");
  }
  Matrix l = read_matrix(is);
  Matrix r = read_matrix(is);
  Matrix t = read_matrix(is);
  return FactorizationBundle{Factorization(std::move(l), std::move(r), alpha),
                             std::move(t)};
}

}  // namespace pairstat
