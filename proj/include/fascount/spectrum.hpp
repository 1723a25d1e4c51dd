#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fascount {

// Cardinality spectrum of a solution family: coefficient k counts the
// solutions of size exactly k. Coefficients are exact unbounded integers.
class CountSpectrum {
public:
  CountSpectrum() = default;
  explicit CountSpectrum(int degree) : coeff_(static_cast<size_t>(degree) + 1) {}
  static CountSpectrum from_coefficients(std::vector<mpz_class> coeff);

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  const mpz_class& operator[](int k) const { return coeff_[static_cast<size_t>(k)]; }
  mpz_class& at(int k) { return coeff_[static_cast<size_t>(k)]; }
  const std::vector<mpz_class>& coefficients() const { return coeff_; }

  mpz_class total() const;
  std::vector<std::string> to_decimal_strings() const;

  friend bool operator==(const CountSpectrum&, const CountSpectrum&) = default;

private:
  std::vector<mpz_class> coeff_;
};

struct MinimumCount {
  int cardinality = 0;
  mpz_class count;
  friend bool operator==(const MinimumCount&, const MinimumCount&) = default;
};

// Smallest k with spectrum[k] > 0. Throws ConsistencyError on an all-zero
// spectrum (no such solution family exists in this toolkit).
MinimumCount minimum_of_spectrum(const CountSpectrum& s);

// Exact binomial coefficient.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace fascount
