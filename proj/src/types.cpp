#include "ulearn/types.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ulearn {

namespace {
constexpr double kSimplexTol = 1e-12;
}

ProbabilityVector::ProbabilityVector(Vector entries)
    : entries_(std::move(entries)) {
  if (entries_.size() == 0)
    throw std::invalid_argument("ProbabilityVector: empty");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < entries_.size(); ++i) {
    const double e = entries_[i];
    if (!(e >= 0.0))  // also rejects NaN
      throw std::invalid_argument("ProbabilityVector: negative entry");
    sum += e;
  }
  if (std::abs(sum - 1.0) > kSimplexTol)
    throw std::invalid_argument("ProbabilityVector: entries do not sum to 1");
}

ProbabilityVector::ProbabilityVector(std::initializer_list<double> entries)
    : ProbabilityVector(Vector{Eigen::Map<const Vector>(
          entries.begin(), static_cast<Eigen::Index>(entries.size()))}) {}

ProbabilityVector ProbabilityVector::normalized(const Vector& weights) {
  const double sum = weights.sum();
  if (!(sum > 0.0))
    throw std::invalid_argument("ProbabilityVector: nonpositive weight sum");
  Vector scaled = weights / sum;
  // renormalize the residual rounding error onto the largest coordinate
  Eigen::Index imax;
  scaled.maxCoeff(&imax);
  scaled[imax] += 1.0 - scaled.sum();
  return ProbabilityVector(std::move(scaled));
}

CountVector::CountVector(CountsVec counts) : counts_(std::move(counts)) {
  if (counts_.size() == 0) throw std::invalid_argument("CountVector: empty");
  total_ = 0;
  for (Eigen::Index i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < 0)
      throw std::invalid_argument("CountVector: negative count");
    total_ += counts_[i];
  }
}

CountVector::CountVector(std::initializer_list<std::int64_t> counts)
    : CountVector(CountsVec{Eigen::Map<const CountsVec>(
          counts.begin(), static_cast<Eigen::Index>(counts.size()))}) {}

CountVector CountVector::zeros(Eigen::Index size) {
  return CountVector(CountsVec::Zero(size));
}

void CountVector::increment(Eigen::Index i) {
  ++counts_[i];
  ++total_;
}

bool operator==(const CountVector& a, const CountVector& b) {
  return a.counts_.size() == b.counts_.size() &&
         (a.counts_.array() == b.counts_.array()).all();
}

LogValue::LogValue(double log_value) : v_(log_value) {
  if (std::isnan(v_)) throw std::invalid_argument("LogValue: NaN");
}

LogValue LogValue::zero_probability() {
  return LogValue(-std::numeric_limits<double>::infinity());
}

bool LogValue::is_zero_probability() const {
  return v_ == -std::numeric_limits<double>::infinity();
}

LogValue& LogValue::operator+=(LogValue rhs) {
  const double s = v_ + rhs.v_;
  if (std::isnan(s)) throw std::domain_error("LogValue: 0 * inf product");
  v_ = s;
  return *this;
}

}  // namespace ulearn
