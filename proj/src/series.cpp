#include "zal/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace zal {

namespace {

[[noreturn]] void bad_index(const char* what, int k, int limit) {
  throw std::out_of_range(std::string(what) + " index " + std::to_string(k) +
                          " outside 1.." + std::to_string(limit));
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coefficients)
    : coeffs_(std::move(coefficients)) {}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  return TruncatedSeries(std::vector<Complex>(static_cast<size_t>(order)));
}

TruncatedSeries TruncatedSeries::identity(int order) {
  if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
  TruncatedSeries f = zero(order);
  f.set(1, Complex{1.0, 0.0});
  return f;
}

Complex TruncatedSeries::a(int k) const {
  if (k < 1 || k > order()) bad_index("coefficient", k, order());
  return coeffs_[static_cast<size_t>(k - 1)];
}

void TruncatedSeries::set(int k, Complex value) {
  if (k < 1 || k > order()) bad_index("coefficient", k, order());
  coeffs_[static_cast<size_t>(k - 1)] = value;
}

PowerSeries::PowerSeries(std::vector<Complex> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty())
    throw std::invalid_argument("series with constant term needs at least c_0");
}

PowerSeries PowerSeries::zero(int degree) {
  if (degree < 0) throw std::invalid_argument("series degree must be nonnegative");
  return PowerSeries(std::vector<Complex>(static_cast<size_t>(degree) + 1));
}

PowerSeries PowerSeries::constant(Complex value, int degree) {
  PowerSeries f = zero(degree);
  f.set(0, value);
  return f;
}

Complex PowerSeries::c(int k) const {
  if (k < 0 || k > degree()) bad_index("coefficient", k, degree());
  return coeffs_[static_cast<size_t>(k)];
}

void PowerSeries::set(int k, Complex value) {
  if (k < 0 || k > degree()) bad_index("coefficient", k, degree());
  coeffs_[static_cast<size_t>(k)] = value;
}

PowerSeries PowerSeries::resized(int new_degree) const {
  if (new_degree < 0) throw std::invalid_argument("series degree must be nonnegative");
  std::vector<Complex> c(coeffs_);
  c.resize(static_cast<size_t>(new_degree) + 1);
  return PowerSeries(std::move(c));
}

PowerSeries multiply(const PowerSeries& f, const PowerSeries& g, int order) {
  if (order < 0) throw std::invalid_argument("product order must be nonnegative");
  if (f.degree() < order || g.degree() < order)
    throw std::invalid_argument("product inputs must carry coefficients up to the requested order");
  std::vector<Complex> out(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Complex acc{0.0, 0.0};
    for (int i = 0; i <= k; ++i) acc += f.c(i) * g.c(k - i);
    out[static_cast<size_t>(k)] = acc;
  }
  return PowerSeries(std::move(out));
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
  const int degree = std::max(f.degree(), g.degree());
  PowerSeries out = PowerSeries::zero(degree);
  for (int k = 0; k <= degree; ++k) {
    Complex v{0.0, 0.0};
    if (k <= f.degree()) v += f.c(k);
    if (k <= g.degree()) v += g.c(k);
    out.set(k, v);
  }
  return out;
}

PowerSeries differentiate(const TruncatedSeries& f) {
  if (f.order() < 2)
    throw std::invalid_argument("differentiate needs order >= 2");
  std::vector<Complex> out(static_cast<size_t>(f.order()));
  for (int k = 1; k <= f.order(); ++k)
    out[static_cast<size_t>(k - 1)] = static_cast<double>(k) * f.a(k);
  return PowerSeries(std::move(out));
}

PowerSeries differentiate(const PowerSeries& f) {
  if (f.degree() < 1)
    throw std::invalid_argument("differentiate needs degree >= 1");
  std::vector<Complex> out(static_cast<size_t>(f.degree()));
  for (int k = 1; k <= f.degree(); ++k)
    out[static_cast<size_t>(k - 1)] = static_cast<double>(k) * f.c(k);
  return PowerSeries(std::move(out));
}

namespace {

void require_in_disk(Complex z) {
  if (std::abs(z) >= 1.0)
    throw std::domain_error("evaluation point must satisfy |z| < 1");
}

}  // namespace

Complex evaluate(const TruncatedSeries& f, Complex z) {
  require_in_disk(z);
  Complex acc{0.0, 0.0};
  for (int k = f.order(); k >= 1; --k) acc = acc * z + f.a(k);
  return acc * z;
}

Complex evaluate(const PowerSeries& f, Complex z) {
  require_in_disk(z);
  Complex acc{0.0, 0.0};
  for (int k = f.degree(); k >= 0; --k) acc = acc * z + f.c(k);
  return acc;
}

TruncatedSeries rotate(const TruncatedSeries& f, Complex c) {
  if (std::abs(std::abs(c) - 1.0) > 1e-12)
    throw std::invalid_argument("rotation parameter must be unimodular");
  TruncatedSeries out = TruncatedSeries::zero(f.order());
  Complex power{1.0, 0.0};  // c^{k-1}
  for (int k = 1; k <= f.order(); ++k) {
    out.set(k, power * f.a(k));
    power *= c;
  }
  return out;
}

}  // namespace zal
