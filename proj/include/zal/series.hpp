#pragma once

#include <complex>
#include <span>
#include <vector>

namespace zal {

using Complex = std::complex<double>;

/// Truncated power series without constant term, stored 1-based: the vector
/// holds a_1..a_N so that subscripts in code match the usual normalization
/// f(z) = z + a_2 z^2 + ... of univalent-function theory.  The same carrier
/// is used for Caratheodory coefficient lists p_1..p_N, where the constant
/// term 1 is implicit.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// coefficients[0] becomes a_1.
  explicit TruncatedSeries(std::vector<Complex> coefficients);

  static TruncatedSeries zero(int order);
  /// The identity function z, zero-padded up to `order`.
  static TruncatedSeries identity(int order);

  /// Number of stored coefficients N; indices 1..N are valid.
  int order() const { return static_cast<int>(coeffs_.size()); }
  Complex a(int k) const;
  void set(int k, Complex value);
  std::span<const Complex> coefficients() const { return coeffs_; }

 private:
  std::vector<Complex> coeffs_;
};

/// Truncated power series with constant term, stored 0-based: c_0..c_N.
/// Products and derivatives of normalized series live here.
class PowerSeries {
 public:
  PowerSeries() = default;
  /// coefficients[0] becomes c_0.
  explicit PowerSeries(std::vector<Complex> coefficients);

  static PowerSeries zero(int degree);
  static PowerSeries constant(Complex value, int degree);

  /// Largest stored index N; the series holds N + 1 coefficients.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex c(int k) const;
  void set(int k, Complex value);
  std::span<const Complex> coefficients() const { return coeffs_; }

  /// Copy truncated or zero-padded so that degree() == new_degree.
  PowerSeries resized(int new_degree) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Cauchy product truncated at `order`; both inputs must reach that degree.
PowerSeries multiply(const PowerSeries& f, const PowerSeries& g, int order);

PowerSeries add(const PowerSeries& f, const PowerSeries& g);

/// Termwise derivative of a normalized series: coefficient k of the result
/// is (k+1) a_{k+1}.  Requires order >= 2.
PowerSeries differentiate(const TruncatedSeries& f);
PowerSeries differentiate(const PowerSeries& f);

/// Horner evaluation inside the open unit disk (|z| < 1 enforced).
Complex evaluate(const TruncatedSeries& f, Complex z);
Complex evaluate(const PowerSeries& f, Complex z);

/// Rotation f_c(z) = conj(c) f(c z) for unimodular c: a_k -> c^{k-1} a_k.
TruncatedSeries rotate(const TruncatedSeries& f, Complex c);

}  // namespace zal
