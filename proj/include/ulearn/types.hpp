#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>

namespace ulearn {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using CountsVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Point on the K-simplex: entries >= 0 and summing to one within 1e-12.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(Vector entries);
  ProbabilityVector(std::initializer_list<double> entries);

  /// Rescales nonnegative weights with a positive sum onto the simplex.
  static ProbabilityVector normalized(const Vector& weights);

  Eigen::Index size() const { return entries_.size(); }
  double operator[](Eigen::Index i) const { return entries_[i]; }
  const Vector& entries() const { return entries_; }

 private:
  Vector entries_;
};

/// Histogram of event counts over K symbol categories. `total()` is kept in
/// sync with the coordinate sum.
class CountVector {
 public:
  explicit CountVector(CountsVec counts);
  CountVector(std::initializer_list<std::int64_t> counts);
  static CountVector zeros(Eigen::Index size);

  Eigen::Index size() const { return counts_.size(); }
  std::int64_t operator[](Eigen::Index i) const { return counts_[i]; }
  std::int64_t total() const { return total_; }
  const CountsVec& counts() const { return counts_; }
  Vector as_reals() const { return counts_.cast<double>(); }

  void increment(Eigen::Index i);

  friend bool operator==(const CountVector&, const CountVector&);

 private:
  CountsVec counts_;
  std::int64_t total_;
};

/// A probability (or ratio of probabilities) carried as its natural log.
/// -inf encodes exact zero probability. NaN is rejected at construction and
/// by arithmetic; producing one anywhere in the log-domain pipeline is a
/// defect, not a value.
class LogValue {
 public:
  LogValue() : v_(0.0) {}  // log 1
  explicit LogValue(double log_value);

  static LogValue zero_probability();

  double value() const { return v_; }
  operator double() const { return v_; }
  bool is_zero_probability() const;

  LogValue& operator+=(LogValue rhs);
  friend LogValue operator+(LogValue a, LogValue b) { return a += b; }

 private:
  double v_;
};

}  // namespace ulearn
