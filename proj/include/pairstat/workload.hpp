#ifndef PAIRSTAT_WORKLOAD_HPP_
#define PAIRSTAT_WORKLOAD_HPP_

#include <Eigen/Dense>
#include <vector>

namespace pairstat {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A real workload matrix W. For quadratic forms W is k x k; the entries are
/// kernel values W[i][j] = f(i, j) or linear-query coefficients.
struct WorkloadMatrix {
  Matrix entries;
  bool symmetric = false;

  WorkloadMatrix() = default;
  /// Validates that all entries are finite and, if symmetric_flag is set,
  /// that entries[i][j] == entries[j][i] exactly.
  WorkloadMatrix(Matrix m, bool symmetric_flag);

  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
};

/// User inputs x_1..x_n, each a value in [1, k].
struct Dataset {
  std::vector<int> values;
  int k = 0;

  Dataset() = default;
  Dataset(std::vector<int> v, int domain_size);

  long n() const { return static_cast<long>(values.size()); }
};

/// Normalized histogram: nonnegative weights summing to 1 (tol 1e-12).
struct Histogram {
  Vector weights;

  Histogram() = default;
  explicit Histogram(Vector w);

  int k() const { return static_cast<int>(weights.size()); }
};

/// A factorization L^T R ~= W with both factors ell x k and a declared
/// entrywise slack alpha (||L^T R - W||_inf <= alpha for the target W).
struct Factorization {
  Matrix left;
  Matrix right;
  double alpha = 0.0;

  Factorization() = default;
  Factorization(Matrix l, Matrix r, double slack);

  int ell() const { return static_cast<int>(left.rows()); }
  int domain() const { return static_cast<int>(left.cols()); }
  Matrix product() const { return left.transpose() * right; }
};

Histogram histogram_of(const Dataset& data);

/// h^T W h, accumulated row-major for reproducibility.
double quadratic_form_exact(const WorkloadMatrix& w, const Histogram& h);

/// W h.
Vector linear_queries_exact(const WorkloadMatrix& w, const Histogram& h);

/// Maximum absolute entry.
double inf_norm(const Matrix& m);

/// Maximum l2 norm over columns (the 1->2 norm).
double one_to_two_norm(const Matrix& m);

/// ||L^T R - W||_inf.
double factorization_residual(const Factorization& f, const WorkloadMatrix& w);

/// Rescales (L, R) -> (cL, R/c) so both 1->2 norms equal
/// sqrt(||L||_{1->2} ||R||_{1->2}); the product L^T R is unchanged.
Factorization fact_balance(const Factorization& f);

/// Row-stacks so that L^T R = A + B. Slack adds.
Factorization fact_sum(const Factorization& a, const Factorization& b);

/// Kronecker product of factors, so L^T R = A (x) B. Slack grows by the
/// conservative bound alpha_A ||B~||_inf + alpha_B ||A~||_inf + alpha_A alpha_B.
Factorization fact_kron(const Factorization& a, const Factorization& b);

/// Multiplies L by c (R unchanged), so L^T R = c A. Slack |c| alpha.
Factorization fact_scale(const Factorization& f, double c);

}  // namespace pairstat

#endif  // PAIRSTAT_WORKLOAD_HPP_
