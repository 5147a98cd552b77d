#pragma once

#include <cstddef>
#include <span>

namespace pf {

struct Interval {
  double lo;
  double hi;
};

//! A one-dimensional probability density: nonnegative everywhere and
//! integrating to 1 over the declared effective support (up to quadrature
//! tolerance). Implementations are immutable and safe for concurrent reads.
class Density1d {
 public:
  virtual ~Density1d() = default;

  //! Density value at x.
  virtual double operator()(double x) const = 0;

  //! Density values at the uniform grid grid0 + j * step, j = 0..m-1.
  //! The default evaluates pointwise; implementations may use a faster
  //! grid-specific path that agrees with pointwise evaluation to ~1e-10
  //! relative.
  virtual void evaluate_uniform_grid(double grid0, double step, std::size_t m,
                                     std::span<double> out) const;

  //! Interval outside which the density carries negligible mass.
  virtual Interval support() const = 0;
};

//! Standard normal pdf phi(x) = exp(-x^2/2) / sqrt(2 pi).
double normal_pdf(double x);

//! Standard normal cdf Phi(x), evaluated via erfc for tail accuracy.
double normal_cdf(double x);

enum class TruncationSide { above_cut, below_cut };

//! Standard normal truncated at `cut`: for above_cut, phi(x)/(1 - Phi(cut))
//! on x >= cut and 0 below; for below_cut, phi(x)/Phi(cut) on x < cut and 0
//! above.
double truncated_normal_pdf(double x, TruncationSide side, double cut);

//! N(mean, sd^2) as a Density1d.
class NormalDensity final : public Density1d {
 public:
  NormalDensity(double mean, double sd);
  double operator()(double x) const override;
  Interval support() const override;

 private:
  double mean_;
  double sd_;
};

//! Standard normal truncated at a cut, as a Density1d.
class TruncatedNormalDensity final : public Density1d {
 public:
  TruncatedNormalDensity(TruncationSide side, double cut);
  double operator()(double x) const override;
  Interval support() const override;

 private:
  TruncationSide side_;
  double cut_;
};

}  // namespace pf
