#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "pf/div/feature_set.hpp"
#include "pf/div/frechet.hpp"
#include "pf/div/kid.hpp"
#include "pf/div/quadrature.hpp"
#include "pf/div/tv.hpp"
#include "pf/div/wasserstein.hpp"
#include "pf/stats/density.hpp"
#include "pf/stats/kde.hpp"
#include "pf/stats/pmf.hpp"
#include "pf/stats/rng.hpp"

namespace {

pf::FeatureSet random_features(std::size_t rows, std::size_t dim,
                               std::uint64_t seed, double spread = 1.0) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> gauss(0.0, spread);
  std::vector<double> data(rows * dim);
  for (double& x : data) x = gauss(eng);
  return pf::FeatureSet(rows, dim, std::move(data));
}

pf::DiscretePmf random_pmf(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = expo(eng);
    total += x;
  }
  for (double& x : w) x /= total;
  // Re-normalize exactly enough for the pmf validator.
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) s += w[i];
  w[n - 1] = 1.0 - s;
  return pf::DiscretePmf(w);
}

pf::GaussianMoments random_psd_moments(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd a(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = gauss(eng);
  }
  Eigen::MatrixXd cov = a * a.transpose() + 0.5 * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  pf::GaussianMoments m;
  m.mean.resize(d);
  for (double& x : m.mean) x = gauss(eng);
  m.covariance.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m.covariance[i * d + j] = cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Discrete total variation

TEST_CASE("tv_discrete: hand cases, symmetry, errors") {
  pf::DiscretePmf p({0.5, 0.5});
  pf::DiscretePmf q({0.2, 0.8});
  CHECK(pf::tv_discrete(p, p) == 0.0);
  CHECK(pf::tv_discrete(p, q) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(pf::tv_discrete(q, p) == pf::tv_discrete(p, q));

  pf::DiscretePmf point_a({1.0, 0.0});
  pf::DiscretePmf point_b({0.0, 1.0});
  CHECK(pf::tv_discrete(point_a, point_b) == 1.0);

  pf::DiscretePmf r({0.3, 0.3, 0.4});
  CHECK_THROWS_AS(pf::tv_discrete(p, r), std::invalid_argument);
}

TEST_CASE("tv_discrete: triangle inequality and range on random pmfs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto p = random_pmf(6, 3 * seed + 1);
    auto q = random_pmf(6, 3 * seed + 2);
    auto r = random_pmf(6, 3 * seed + 3);
    const double pq = pf::tv_discrete(p, q);
    const double qr = pf::tv_discrete(q, r);
    const double pr = pf::tv_discrete(p, r);
    CHECK(pq >= 0.0);
    CHECK(pq <= 1.0);
    CHECK(pr <= pq + qr + 1e-15);
  }
}

// ---------------------------------------------------------------------------
// Continuous total variation

TEST_CASE("tv_continuous_1d: identical densities give zero") {
  pf::NormalDensity a(0.3, 1.1);
  CHECK(pf::tv_continuous_1d(a, a) <= 1e-10);
}

TEST_CASE("tv_continuous_1d: two unit normals shifted by one") {
  // TV(N(0,1), N(1,1)) = 2 Phi(1/2) - 1.
  pf::NormalDensity a(0.0, 1.0);
  pf::NormalDensity b(1.0, 1.0);
  const double tv = pf::tv_continuous_1d(a, b);
  CHECK(std::abs(tv - 0.3829249225480262) < 1e-6);
  // Bit-identical under argument swap: the integrand |a - b| is symmetric.
  CHECK(pf::tv_continuous_1d(b, a) == tv);
}

TEST_CASE("tv_continuous_1d: disjoint truncated normals are at distance one") {
  pf::TruncatedNormalDensity above(pf::TruncationSide::above_cut, 1.0);
  pf::TruncatedNormalDensity below(pf::TruncationSide::below_cut, 1.0);
  pf::QuadratureSpec spec;
  spec.breakpoints = {1.0};
  const double tv = pf::tv_continuous_1d(above, below, spec);
  CHECK(std::abs(tv - 1.0) < 1e-6);
}

TEST_CASE("tv_continuous_1d: triangle inequality across three normals") {
  pf::NormalDensity a(0.0, 1.0);
  pf::NormalDensity b(0.5, 1.2);
  pf::NormalDensity c(-0.3, 0.8);
  const double ab = pf::tv_continuous_1d(a, b);
  const double bc = pf::tv_continuous_1d(b, c);
  const double ac = pf::tv_continuous_1d(a, c);
  CHECK(ac <= ab + bc + 2e-6);
  CHECK(ab > 0.0);
  CHECK(ab <= 1.0);
}

TEST_CASE("quadrature: spec validation and unreachable tolerance") {
  pf::NormalDensity a(0.0, 1.0);
  pf::NormalDensity b(1.0, 1.0);

  pf::QuadratureSpec bad_range;
  bad_range.lo = 2.0;
  bad_range.hi = -2.0;
  CHECK_THROWS_AS(pf::tv_continuous_1d(a, b, bad_range), std::invalid_argument);

  pf::QuadratureSpec bad_breaks;
  bad_breaks.breakpoints = {-20.0};
  CHECK_THROWS_AS(pf::tv_continuous_1d(a, b, bad_breaks), std::invalid_argument);

  pf::QuadratureSpec unsorted_breaks;
  unsorted_breaks.breakpoints = {1.0, 0.5};
  CHECK_THROWS_AS(pf::tv_continuous_1d(a, b, unsorted_breaks),
                  std::invalid_argument);

  pf::QuadratureSpec too_few;
  too_few.points_per_segment = 2;
  CHECK_THROWS_AS(pf::tv_continuous_1d(a, b, too_few), std::invalid_argument);

  pf::QuadratureSpec unreachable;
  unreachable.points_per_segment = 11;
  unreachable.tolerance = 1e-18;
  CHECK_THROWS_AS(pf::tv_continuous_1d(a, b, unreachable), std::runtime_error);
}

TEST_CASE("tv_continuous_1d: kde fits approach the target density as n grows") {
  pf::NormalDensity truth(0.0, 1.0);
  double prev = 2.0;
  for (std::size_t n : {1000UL, 10000UL, 100000UL}) {
    auto kde = pf::kde_fit(pf::sample_standard_normal(n, 1234), 1.0);
    const double tv = pf::tv_continuous_1d(kde, truth);
    INFO("n=", n, " tv=", tv);
    CHECK(tv < prev);
    prev = tv;
  }
  CHECK(prev < 0.02);  // n = 100000 lands well under 2% already
}

// ---------------------------------------------------------------------------
// Wasserstein-1

TEST_CASE("wasserstein1: hand cases") {
  std::vector<double> zero{0.0};
  std::vector<double> one{1.0};
  CHECK(pf::wasserstein1_empirical(zero, zero) == 0.0);
  CHECK(pf::wasserstein1_empirical(zero, one) == 1.0);

  std::vector<double> a{0.0, 1.0};
  std::vector<double> b{0.0, 2.0};
  // Equal sizes: mean of sorted differences = (0 + 1) / 2.
  CHECK(pf::wasserstein1_empirical(a, b) == doctest::Approx(0.5).epsilon(1e-15));

  // Unequal sizes: F jumps by 1/2 at {0,1}, G by 1/3 at {0,1,2};
  // integral of |F-G| = |1/2-1/3| * 1 + |1-2/3| * 1 = 1/2.
  std::vector<double> c{0.0, 1.0, 2.0};
  CHECK(pf::wasserstein1_empirical(a, c) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("wasserstein1: symmetry, permutation invariance, identity") {
  std::mt19937_64 eng(7);
  std::normal_distribution<double> gauss(0.0, 2.0);
  std::vector<double> xs(401), ys(256);
  for (double& x : xs) x = gauss(eng);
  for (double& y : ys) y = gauss(eng);

  const double w = pf::wasserstein1_empirical(xs, ys);
  CHECK(w > 0.0);
  CHECK(pf::wasserstein1_empirical(ys, xs) == w);
  CHECK(pf::wasserstein1_empirical(xs, xs) == 0.0);

  auto xs_shuffled = xs;
  std::shuffle(xs_shuffled.begin(), xs_shuffled.end(), eng);
  CHECK(pf::wasserstein1_empirical(xs_shuffled, ys) == w);
}

TEST_CASE("wasserstein1: equal sizes equal the mean absolute sorted difference") {
  std::mt19937_64 eng(8);
  std::uniform_real_distribution<double> unif(-4.0, 4.0);
  std::vector<double> xs(300), ys(300);
  for (double& x : xs) x = unif(eng);
  for (double& y : ys) y = unif(eng);
  auto xs_sorted = xs;
  auto ys_sorted = ys;
  std::sort(xs_sorted.begin(), xs_sorted.end());
  std::sort(ys_sorted.begin(), ys_sorted.end());
  double ref = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ref += std::abs(xs_sorted[i] - ys_sorted[i]);
  }
  ref /= static_cast<double>(xs.size());
  CHECK(pf::wasserstein1_empirical(xs, ys) == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("wasserstein1: translation covariance on dyadic inputs") {
  // Integer samples and a power-of-two shift keep every intermediate exact,
  // so covariance under translation holds bitwise.
  std::vector<double> xs{0.0, 1.0, 3.0, 7.0, 2.0};
  std::vector<double> ys{-1.0, 4.0, 2.0};
  const double base = pf::wasserstein1_empirical(xs, ys);
  auto xs_shift = xs;
  auto ys_shift = ys;
  for (double& x : xs_shift) x += 8.0;
  for (double& y : ys_shift) y += 8.0;
  CHECK(pf::wasserstein1_empirical(xs_shift, ys_shift) == base);
}

TEST_CASE("wasserstein1: input validation") {
  std::vector<double> ok{1.0};
  std::vector<double> empty;
  std::vector<double> bad{std::nan("")};
  CHECK_THROWS_AS(pf::wasserstein1_empirical(empty, ok), std::invalid_argument);
  CHECK_THROWS_AS(pf::wasserstein1_empirical(ok, empty), std::invalid_argument);
  CHECK_THROWS_AS(pf::wasserstein1_empirical(ok, bad), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Feature sets and the polynomial kernel

TEST_CASE("FeatureSet validation") {
  CHECK_NOTHROW(pf::FeatureSet(2, 3, {1, 2, 3, 4, 5, 6}));
  CHECK_THROWS_AS(pf::FeatureSet(2, 3, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(pf::FeatureSet(0, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(pf::FeatureSet(1, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(pf::FeatureSet(1, 2, {1.0, std::nan("")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pf::FeatureSet::from_rows({{1.0, 2.0}, {3.0}}),
                  std::invalid_argument);

  auto fs = pf::FeatureSet::from_rows({{1.0, 2.0}, {3.0, 4.0}});
  CHECK(fs.rows() == 2);
  CHECK(fs.dim() == 2);
  CHECK(fs.row(1)[0] == 3.0);
}

TEST_CASE("polynomial kernel: hand values and errors") {
  std::vector<double> x{1.0, 2.0};
  std::vector<double> y{3.0, 4.0};
  // ((11)/2 + 1)^3 = 6.5^3 = 274.625, exactly representable.
  CHECK(pf::polynomial_kernel(x, y) == 274.625);
  std::vector<double> z{1.0};
  CHECK(pf::polynomial_kernel(z, z) == 8.0);  // (1 + 1)^3
  CHECK_THROWS_AS(pf::polynomial_kernel(x, z), std::invalid_argument);
  std::vector<double> empty;
  CHECK_THROWS_AS(pf::polynomial_kernel(empty, empty), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// KID

TEST_CASE("kid: dyadic hand cases") {
  // 1-D, a = b = {0, 1}. Within-set terms: k(0,1) = 1 each. Cross terms:
  // k(0,0)=1, k(0,1)=1, k(1,0)=1, k(1,1)=8.
  auto a = pf::FeatureSet::from_rows({{0.0}, {1.0}});
  auto b = pf::FeatureSet::from_rows({{0.0}, {1.0}});
  // Unbiased: 1 + 1 - 2 * 11/4 = -3.5 (negative on identical sets).
  CHECK(pf::kid(a, b) == -3.5);
  // Biased: 11/4 + 11/4 - 2 * 11/4 = 0 exactly on identical sets.
  CHECK(pf::kid(a, b, std::nullopt, pf::KidEstimator::biased) == 0.0);

  // 2-D: a = {(1,0),(0,1)}, b = {(1,1),(2,0)}.
  // within-a: k((1,0),(0,1)) = 1;  within-b: k((1,1),(2,0)) = 8.
  // cross: 3.375 + 8 + 3.375 + 1 = 15.75 -> KID = 1 + 8 - 15.75/2 = 1.125.
  auto c = pf::FeatureSet::from_rows({{1.0, 0.0}, {0.0, 1.0}});
  auto d = pf::FeatureSet::from_rows({{1.0, 1.0}, {2.0, 0.0}});
  CHECK(pf::kid(c, d) == 1.125);
}

TEST_CASE("kid: matches the brute-force reference on random sets") {
  const std::size_t sizes[] = {2, 3, 7, 20, 64, 128, 200};
  const std::size_t dims[] = {1, 3, 8};
  std::uint64_t seed = 100;
  for (std::size_t n : sizes) {
    for (std::size_t d : dims) {
      const std::size_t m = (n == 2) ? 5 : n - 1;  // exercise n != m
      auto a = random_features(n, d, seed++);
      auto b = random_features(m, d, seed++, 1.3);
      const double got = pf::kid(a, b);
      const double want = oracle::kid_reference(a, b);
      INFO("n=", n, " m=", m, " d=", d);
      CHECK(std::abs(got - want) <= 1e-9);
      CHECK(pf::kid(b, a) == doctest::Approx(got).epsilon(1e-12));
    }
  }
}

TEST_CASE("kid: validation") {
  auto a = random_features(4, 2, 1);
  auto b = random_features(4, 3, 2);
  CHECK_THROWS_AS(pf::kid(a, b), std::invalid_argument);
  auto single = random_features(1, 2, 3);
  CHECK_THROWS_AS(pf::kid(single, a), std::invalid_argument);
  CHECK_THROWS_AS(pf::kid(a, single), std::invalid_argument);
}

TEST_CASE("kid: block averaging is deterministic and consistent") {
  auto a = random_features(60, 4, 11);
  auto b = random_features(60, 4, 12, 1.1);

  pf::KidBlocks blocks{20, 8, 777};
  const double r1 = pf::kid(a, b, blocks);
  const double r2 = pf::kid(a, b, blocks);
  CHECK(r1 == r2);  // bit-identical reruns

  pf::KidBlocks other_seed{20, 8, 778};
  CHECK(pf::kid(a, b, other_seed) != r1);  // seed participates

  // Subsets of the full size reduce to the plain estimator regardless of
  // the permutation the subset sampler applies.
  pf::KidBlocks full{60, 3, 5};
  CHECK(pf::kid(a, b, full) == doctest::Approx(pf::kid(a, b)).epsilon(1e-12));

  // Block means hover near the full estimator.
  CHECK(r1 == doctest::Approx(pf::kid(a, b)).epsilon(0.5));

  CHECK_THROWS_AS(pf::kid(a, b, pf::KidBlocks{1, 4, 0}), std::invalid_argument);
  CHECK_THROWS_AS(pf::kid(a, b, pf::KidBlocks{61, 4, 0}), std::invalid_argument);
  CHECK_THROWS_AS(pf::kid(a, b, pf::KidBlocks{20, 0, 0}), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Gaussian moments and the Fréchet distance

TEST_CASE("fit_gaussian_moments: hand cases") {
  // 1-D {0, 2}: mean 1, unbiased variance 2.
  auto m = pf::fit_gaussian_moments(pf::FeatureSet::from_rows({{0.0}, {2.0}}));
  CHECK(m.mean.size() == 1);
  CHECK(m.mean[0] == 1.0);
  CHECK(m.covariance[0] == 2.0);

  // 2-D three-point cloud: mean (1, 1/3), cov [[1, 0], [0, 1/3]].
  auto m2 = pf::fit_gaussian_moments(
      pf::FeatureSet::from_rows({{0.0, 0.0}, {1.0, 1.0}, {2.0, 0.0}}));
  CHECK(m2.mean[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m2.mean[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(m2.covariance[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m2.covariance[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(m2.covariance[2] == m2.covariance[1]);  // symmetric by construction
  CHECK(m2.covariance[3] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  // Identical rows: zero covariance (and that is fine downstream).
  auto mz = pf::fit_gaussian_moments(
      pf::FeatureSet::from_rows({{1.0, 2.0}, {1.0, 2.0}, {1.0, 2.0}}));
  for (double c : mz.covariance) CHECK(c == 0.0);
  CHECK(pf::frechet_distance(mz, mz) == 0.0);

  CHECK_THROWS_AS(pf::fit_gaussian_moments(pf::FeatureSet::from_rows({{1.0}})),
                  std::invalid_argument);
}

TEST_CASE("fit_gaussian_moments: permutation invariance") {
  auto fs = random_features(97, 5, 21);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < fs.rows(); ++i) {
    rows.emplace_back(fs.row(i).begin(), fs.row(i).end());
  }
  std::mt19937_64 eng(5);
  std::shuffle(rows.begin(), rows.end(), eng);
  auto m1 = pf::fit_gaussian_moments(fs);
  auto m2 = pf::fit_gaussian_moments(pf::FeatureSet::from_rows(rows));
  for (std::size_t i = 0; i < m1.mean.size(); ++i) {
    CHECK(m1.mean[i] == doctest::Approx(m2.mean[i]).epsilon(1e-12));
  }
  for (std::size_t i = 0; i < m1.covariance.size(); ++i) {
    CHECK(m1.covariance[i] == doctest::Approx(m2.covariance[i]).epsilon(1e-12));
  }
}

TEST_CASE("frechet_distance: closed-form 1-D and diagonal cases") {
  // 1-D: (m1-m2)^2 + s1 + s2 - 2 sqrt(s1 s2).
  pf::GaussianMoments p{{0.0}, {1.0}};
  pf::GaussianMoments q{{1.0}, {1.0}};
  CHECK(std::abs(pf::frechet_distance(p, q) - 1.0) <= 1e-9);

  pf::GaussianMoments p2{{2.0}, {4.0}};
  pf::GaussianMoments q2{{-1.0}, {9.0}};
  // 9 + 4 + 9 - 2*6 = 10.
  CHECK(std::abs(pf::frechet_distance(p2, q2) - 10.0) <= 1e-9);

  // Commuting diagonal covariances: 5 + 5 - 2 tr(diag(2,2)) = 2.
  pf::GaussianMoments dp{{0.0, 0.0}, {1.0, 0.0, 0.0, 4.0}};
  pf::GaussianMoments dq{{0.0, 0.0}, {4.0, 0.0, 0.0, 1.0}};
  CHECK(std::abs(pf::frechet_distance(dp, dq) - 2.0) <= 1e-9);

  // Identical gaussians: zero.
  auto r = random_psd_moments(4, 31);
  CHECK(pf::frechet_distance(r, r) <= 1e-9);
}

TEST_CASE("frechet_distance: symmetry and rotation invariance") {
  auto p = random_psd_moments(3, 41);
  auto q = random_psd_moments(3, 42);
  const double pq = pf::frechet_distance(p, q);
  const double qp = pf::frechet_distance(q, p);
  CHECK(std::abs(pq - qp) <= 1e-8);
  CHECK(pq >= 0.0);

  // Rotate both gaussians by a common orthogonal matrix.
  std::mt19937_64 eng(43);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd raw(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) raw(i, j) = gauss(eng);
  }
  Eigen::MatrixXd qmat = Eigen::HouseholderQR<Eigen::MatrixXd>(raw).householderQ();
  auto rotate = [&qmat](const pf::GaussianMoments& m) {
    Eigen::Map<const Eigen::Vector3d> mu(m.mean.data());
    Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>> cov(
        m.covariance.data());
    Eigen::Vector3d mu2 = qmat * mu;
    Eigen::Matrix3d cov2 = qmat * cov * qmat.transpose();
    cov2 = 0.5 * (cov2 + cov2.transpose()).eval();  // kill rounding skew
    pf::GaussianMoments out;
    out.mean.assign(mu2.data(), mu2.data() + 3);
    out.covariance.resize(9);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) out.covariance[static_cast<std::size_t>(3 * i + j)] = cov2(i, j);
    }
    return out;
  };
  const double rotated = pf::frechet_distance(rotate(p), rotate(q));
  CHECK(std::abs(rotated - pq) <= 1e-6);
}

TEST_CASE("frechet_distance: via fitted moments end to end") {
  auto mp = pf::fit_gaussian_moments(pf::FeatureSet::from_rows({{0.0}, {2.0}}));
  auto mq = pf::fit_gaussian_moments(pf::FeatureSet::from_rows({{1.0}, {3.0}}));
  // means 1 and 2, variances 2 and 2: (1-2)^2 + 2 + 2 - 2*2 = 1.
  CHECK(std::abs(pf::frechet_distance(mp, mq) - 1.0) <= 1e-9);
}

TEST_CASE("frechet_distance: validation and diagnostics") {
  pf::GaussianMoments p{{0.0, 0.0}, {1.0, 0.0, 0.0, 1.0}};

  pf::GaussianMoments mismatched{{0.0}, {1.0}};
  CHECK_THROWS_AS(pf::frechet_distance(p, mismatched), std::invalid_argument);

  pf::GaussianMoments indefinite{{0.0, 0.0}, {1.0, 2.0, 2.0, 1.0}};  // eig -1, 3
  CHECK_THROWS_AS(pf::frechet_distance(p, indefinite), std::invalid_argument);

  pf::GaussianMoments asymmetric{{0.0, 0.0}, {1.0, 0.5, 0.2, 1.0}};
  CHECK_THROWS_AS(pf::frechet_distance(p, asymmetric), std::invalid_argument);

  auto a = random_psd_moments(3, 77);
  auto b = random_psd_moments(3, 78);
  pf::FrechetInfo info;
  const double fd = pf::frechet_distance(a, b, &info);
  CHECK(fd > 0.0);
  CHECK(info.max_eigenvalue > 0.0);
  CHECK_FALSE(info.clamped_warning);
}
