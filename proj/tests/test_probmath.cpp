#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "ulearn/probmath.hpp"
#include "ulearn/rng.hpp"

using namespace ulearn;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Independent ln Gamma oracle: Stirling series after shifting the argument
// above 10 through the recurrence ln G(x) = ln G(x+n) - sum ln(x+i).
// Absolute accuracy ~1e-13 or better on [1e-3, 1e6].
double stirling_log_gamma(double x) {
  double shift = 0.0;
  while (x < 10.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = inv / 12.0;
  series -= inv * inv2 / 360.0;
  series += inv * inv2 * inv2 / 1260.0;
  series -= inv * inv2 * inv2 * inv2 / 1680.0;
  series += inv * inv2 * inv2 * inv2 * inv2 / 1188.0;
  return shift + (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * M_PI) + series;
}

// all K-part compositions of n, in lexicographic order
void compositions(std::int64_t n, int parts, std::vector<std::int64_t>& prefix,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (parts == 1) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::int64_t first = 0; first <= n; ++first) {
    prefix.push_back(first);
    compositions(n - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<CountVector> all_compositions(std::int64_t n, int parts) {
  std::vector<std::vector<std::int64_t>> raw;
  std::vector<std::int64_t> prefix;
  compositions(n, parts, prefix, raw);
  std::vector<CountVector> out;
  out.reserve(raw.size());
  for (const auto& c : raw) {
    CountsVec v(parts);
    for (int i = 0; i < parts; ++i) v[i] = c[static_cast<size_t>(i)];
    out.emplace_back(std::move(v));
  }
  return out;
}

Vector random_alpha(int k, Rng& rng, double max_value = 5.0) {
  Vector a(k);
  for (int i = 0; i < k; ++i) a[i] = 0.05 + (max_value - 0.05) * rng.uniform01();
  return a;
}

ProbabilityVector random_simplex_point(int k, Rng& rng) {
  Vector w(k);
  for (int i = 0; i < k; ++i) w[i] = -std::log(1.0 - rng.uniform01());
  return ProbabilityVector::normalized(w);
}

}  // namespace

TEST_CASE("log_gamma at known points") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-14);  // Gamma(5) = 4!
  CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(M_PI)) < 1e-14);
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-3.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("log_gamma matches the Stirling oracle over [1e-3, 1e6]") {
  // relative to max(1, |ref|): ln Gamma has zeros at 1 and 2 where a bare
  // relative error is ill-conditioned
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double t = rng.uniform01();
    const double x = std::pow(10.0, -3.0 + 9.0 * t);
    const double ref = stirling_log_gamma(x);
    CHECK(std::abs(log_gamma(x) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("log_beta hand values") {
  CHECK(log_beta(Vector{{1.0, 1.0}}) == doctest::Approx(0.0).epsilon(1e-14));
  // Gamma(3)Gamma(1)/Gamma(4) = 2/6
  CHECK(std::abs(log_beta(Vector{{3.0, 1.0}}) - std::log(1.0 / 3.0)) < 1e-14);
  // Gamma(1)^3/Gamma(3) = 1/2
  CHECK(std::abs(log_beta(Vector{{1.0, 1.0, 1.0}}) - std::log(0.5)) < 1e-14);
  CHECK_THROWS_AS(log_beta(Vector{{1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(log_beta(Vector{{1.0, 0.0}}), std::domain_error);
  CHECK_THROWS_AS(log_beta(Vector{{1.0, -2.0}}), std::domain_error);
}

TEST_CASE("log_beta of a ones vector cancels log_gamma of its length") {
  for (int k = 2; k <= 12; ++k) {
    const double lb = log_beta(Vector::Ones(k));
    CHECK(std::abs(lb + log_gamma(static_cast<double>(k))) <= 1e-12);
  }
}

TEST_CASE("log_dirichlet_pdf hand values and edge behavior") {
  CHECK(log_dirichlet_pdf(ProbabilityVector{0.5, 0.5}, Vector{{1.0, 1.0}}).value() ==
        doctest::Approx(0.0).epsilon(1e-14));
  // (1/Beta(3,1)) * 0.5^2 = 3/4
  CHECK(std::abs(log_dirichlet_pdf(ProbabilityVector{0.5, 0.5}, Vector{{3.0, 1.0}}).value() -
                 std::log(0.75)) < 1e-13);
  // 1/Beta(2,2) = 6, density 6 * 0.2 * 0.8
  CHECK(std::abs(log_dirichlet_pdf(ProbabilityVector{0.2, 0.8}, Vector{{2.0, 2.0}}).value() -
                 std::log(0.96)) < 1e-13);

  // zero coordinate: -inf for alpha > 1, neutral for alpha == 1, error below 1
  CHECK(log_dirichlet_pdf(ProbabilityVector{0.0, 1.0}, Vector{{2.0, 1.0}})
            .is_zero_probability());
  CHECK(log_dirichlet_pdf(ProbabilityVector{0.0, 1.0}, Vector{{1.0, 1.0}}).value() ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(log_dirichlet_pdf(ProbabilityVector{0.0, 1.0}, Vector{{0.5, 1.0}}),
                  std::domain_error);
  CHECK_THROWS_AS(log_dirichlet_pdf(ProbabilityVector{0.5, 0.5}, Vector{{1.0, 1.0, 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("dirichlet-multinomial pmf hand values") {
  // n = 2 over two symbols with uniform prior: uniform over 3 compositions
  CHECK(std::abs(log_dirichlet_multinomial_pmf(CountVector{1, 1}, Vector{{1.0, 1.0}}, 2) -
                 std::log(1.0 / 3.0)) < 1e-13);
  CHECK(std::abs(log_dirichlet_multinomial_pmf(CountVector{2, 0}, Vector{{1.0, 1.0}}, 2) -
                 std::log(1.0 / 3.0)) < 1e-13);
  CHECK(log_dirichlet_multinomial_pmf(CountVector{0, 0}, Vector{{1.0, 1.0}}, 0) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(log_dirichlet_multinomial_pmf(CountVector{1, 1}, Vector{{1.0, 1.0}}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(log_dirichlet_multinomial_pmf(CountVector{1, 1}, Vector{{1.0, -1.0}}, 2),
                  std::domain_error);
}

TEST_CASE("dirichlet-multinomial pmf sums to one over all compositions") {
  Rng rng(29);
  for (int rep = 0; rep < 50; ++rep) {
    const int k = 2 + static_cast<int>(rng.uniform_int(0, 2));
    const std::int64_t n = rng.uniform_int(0, 8);
    const Vector alpha = random_alpha(k, rng);
    double total = 0.0;
    for (const CountVector& x : all_compositions(n, k))
      total += std::exp(log_dirichlet_multinomial_pmf(x, alpha, n));
    CHECK(std::abs(total - 1.0) <= 1e-9);
  }
}

TEST_CASE("log_dm_ratio hand values") {
  // hand-evaluated pmfs: (2/3) / (1/2)
  CHECK(std::abs(log_dm_ratio(CountVector{1, 0}, Vector{{2.0, 1.0}}, Vector{{1.0, 1.0}}, 1) -
                 std::log(4.0 / 3.0)) < 1e-13);
  // hand-evaluated pmfs: (3/10) / (1/3)
  CHECK(std::abs(log_dm_ratio(CountVector{1, 1}, Vector{{3.0, 1.0}}, Vector{{1.0, 1.0}}, 2) -
                 std::log(9.0 / 10.0)) < 1e-13);
}

TEST_CASE("log_dm_ratio equals identical-parameter zero and the naive difference") {
  Rng rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const int k = 2 + static_cast<int>(rng.uniform_int(0, 2));
    const std::int64_t n = rng.uniform_int(0, 40);
    const Vector alpha = random_alpha(k, rng);
    const Vector beta = random_alpha(k, rng);
    CountsVec xv = CountsVec::Zero(k);
    for (std::int64_t t = 0; t < n; ++t)
      ++xv[static_cast<Eigen::Index>(rng.uniform_int(0, k - 1))];
    const CountVector x(xv);

    CHECK(log_dm_ratio(x, alpha, alpha, n) == 0.0);
    const double naive = log_dirichlet_multinomial_pmf(x, alpha, n) -
                         log_dirichlet_multinomial_pmf(x, beta, n);
    CHECK(std::abs(log_dm_ratio(x, alpha, beta, n) - naive) <= 1e-10);
  }
}

TEST_CASE("kl_divergence values and properties") {
  const ProbabilityVector half{0.5, 0.5};
  const ProbabilityVector point{1.0, 0.0};
  CHECK(kl_divergence(half, half) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(kl_divergence(point, half) - std::log(2.0)) < 1e-14);
  CHECK(kl_divergence(half, point) == kInf);
  CHECK_THROWS_AS(kl_divergence(half, ProbabilityVector{1.0, 0.0, 0.0}),
                  std::invalid_argument);

  Rng rng(37);
  for (int rep = 0; rep < 200; ++rep) {
    const int k = 2 + static_cast<int>(rng.uniform_int(0, 3));
    const ProbabilityVector p = random_simplex_point(k, rng);
    const ProbabilityVector q = random_simplex_point(k, rng);
    CHECK(kl_divergence(p, q) >= 0.0);
    CHECK(kl_divergence(p, p) == doctest::Approx(0.0).epsilon(1e-12));
    if (kl_divergence(p, q) == 0.0)
      CHECK((p.entries() - q.entries()).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("probability vector validates the simplex") {
  CHECK_THROWS_AS(ProbabilityVector(Vector{{0.5, 0.6}}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityVector(Vector{{-0.1, 1.1}}), std::invalid_argument);
  const ProbabilityVector p = ProbabilityVector::normalized(Vector{{2.0, 2.0, 4.0}});
  CHECK(p[2] == doctest::Approx(0.5));
  CHECK_THROWS_AS(ProbabilityVector::normalized(Vector{{0.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("count vector tracks totals and rejects negatives") {
  CountVector c{2, 0, 3};
  CHECK(c.total() == 5);
  c.increment(1);
  CHECK(c.total() == 6);
  CHECK(c[1] == 1);
  CHECK_THROWS_AS(CountVector({-1, 2}), std::invalid_argument);
}

TEST_CASE("log value refuses NaN and flags exact zeros") {
  CHECK_THROWS_AS(LogValue(std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
  CHECK(LogValue::zero_probability().is_zero_probability());
  CHECK(!LogValue(0.0).is_zero_probability());
  const LogValue product = LogValue(-1.5) + LogValue(0.5);
  CHECK(product.value() == doctest::Approx(-1.0));
}
