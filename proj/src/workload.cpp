#include "pairstat/workload.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pairstat {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool all_finite(const Matrix& m) {
  return m.allFinite();
}

}  // namespace

WorkloadMatrix::WorkloadMatrix(Matrix m, bool symmetric_flag)
    : entries(std::move(m)), symmetric(symmetric_flag) {
  require(entries.size() > 0, "workload matrix must be non-empty");
  require(all_finite(entries), "workload matrix has non-finite entries");
  if (symmetric) {
    require(entries.rows() == entries.cols(),
            "symmetric workload must be square");
    for (int i = 0; i < entries.rows(); ++i) {
      for (int j = i + 1; j < entries.cols(); ++j) {
        require(entries(i, j) == entries(j, i),
                "workload flagged symmetric but entries differ at (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

Dataset::Dataset(std::vector<int> v, int domain_size)
    : values(std::move(v)), k(domain_size) {
  require(k >= 1, "domain size must be >= 1");
  require(!values.empty(), "dataset must have n >= 1");
  for (int x : values) {
    require(x >= 1 && x <= k, "dataset value " + std::to_string(x) +
                                  " outside [1, " + std::to_string(k) + "]");
  }
}

Histogram::Histogram(Vector w) : weights(std::move(w)) {
  require(weights.size() >= 1, "histogram must be non-empty");
  double sum = 0.0;
  for (int b = 0; b < weights.size(); ++b) {
    require(std::isfinite(weights(b)) && weights(b) >= 0.0,
            "histogram weights must be finite and nonnegative");
    sum += weights(b);
  }
  require(std::abs(sum - 1.0) <= 1e-12, "histogram weights must sum to 1");
}

Factorization::Factorization(Matrix l, Matrix r, double slack)
    : left(std::move(l)), right(std::move(r)), alpha(slack) {
  require(left.rows() >= 1, "factorization needs ell >= 1");
  require(left.rows() == right.rows() && left.cols() == right.cols(),
          "factorization factors must have identical shape");
  require(all_finite(left) && all_finite(right),
          "factorization factors must be finite");
  require(std::isfinite(alpha) && alpha >= 0.0,
          "factorization slack must be nonnegative");
}

Histogram histogram_of(const Dataset& data) {
  Vector w = Vector::Zero(data.k);
  for (int x : data.values) w(x - 1) += 1.0;
  w /= static_cast<double>(data.n());
  return Histogram(std::move(w));
}

double quadratic_form_exact(const WorkloadMatrix& w, const Histogram& h) {
  require(w.rows() == w.cols(), "quadratic form needs a square workload");
  require(w.cols() == h.k(), "workload/histogram dimension mismatch");
  // Fixed row-major accumulation: sum_i h_i * (sum_j W_ij h_j).
  double total = 0.0;
  for (int i = 0; i < w.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < w.cols(); ++j) row += w.entries(i, j) * h.weights(j);
    total += h.weights(i) * row;
  }
  return total;
}

Vector linear_queries_exact(const WorkloadMatrix& w, const Histogram& h) {
  require(w.cols() == h.k(), "workload/histogram dimension mismatch");
  Vector out(w.rows());
  for (int i = 0; i < w.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < w.cols(); ++j) row += w.entries(i, j) * h.weights(j);
    out(i) = row;
  }
  return out;
}

double inf_norm(const Matrix& m) {
  double best = 0.0;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) best = std::max(best, std::abs(m(i, j)));
  return best;
}

double one_to_two_norm(const Matrix& m) {
  double best = 0.0;
  for (int j = 0; j < m.cols(); ++j) {
    double sq = 0.0;
    for (int i = 0; i < m.rows(); ++i) sq += m(i, j) * m(i, j);
    best = std::max(best, std::sqrt(sq));
  }
  return best;
}

double factorization_residual(const Factorization& f, const WorkloadMatrix& w) {
  require(f.domain() == w.cols() && f.domain() == w.rows(),
          "factorization/workload dimension mismatch");
  return inf_norm(f.product() - w.entries);
}

Factorization fact_balance(const Factorization& f) {
  const double ln = one_to_two_norm(f.left);
  const double rn = one_to_two_norm(f.right);
  require(ln > 0.0 && rn > 0.0, "cannot balance a zero factor");
  const double c = std::sqrt(rn / ln);
  return Factorization(c * f.left, f.right / c, f.alpha);
}

Factorization fact_sum(const Factorization& a, const Factorization& b) {
  require(a.domain() == b.domain(), "fact_sum: column counts differ");
  Matrix l(a.ell() + b.ell(), a.domain());
  Matrix r(a.ell() + b.ell(), a.domain());
  l << a.left, b.left;
  r << a.right, b.right;
  return Factorization(std::move(l), std::move(r), a.alpha + b.alpha);
}

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

Factorization fact_kron(const Factorization& a, const Factorization& b) {
  double slack = a.alpha + b.alpha;
  if (a.alpha > 0.0 || b.alpha > 0.0) {
    const double an = inf_norm(a.product());
    const double bn = inf_norm(b.product());
    slack = a.alpha * bn + b.alpha * an + a.alpha * b.alpha;
  } else {
    slack = 0.0;
  }
  return Factorization(kron(a.left, b.left), kron(a.right, b.right), slack);
}

Factorization fact_scale(const Factorization& f, double c) {
  require(std::isfinite(c), "fact_scale: scale must be finite");
  return Factorization(c * f.left, f.right, std::abs(c) * f.alpha);
}

}  // namespace pairstat
