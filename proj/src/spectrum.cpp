#include "fascount/spectrum.hpp"

#include <stdexcept>

#include "fascount/errors.hpp"

namespace fascount {

CountSpectrum CountSpectrum::from_coefficients(std::vector<mpz_class> coeff) {
  if (coeff.empty()) throw std::invalid_argument("spectrum needs at least coefficient 0");
  CountSpectrum s;
  s.coeff_ = std::move(coeff);
  return s;
}

mpz_class CountSpectrum::total() const {
  mpz_class sum = 0;
  for (const mpz_class& c : coeff_) sum += c;
  return sum;
}

std::vector<std::string> CountSpectrum::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeff_.size());
  for (const mpz_class& c : coeff_) out.push_back(c.get_str());
  return out;
}

MinimumCount minimum_of_spectrum(const CountSpectrum& s) {
  for (int k = 0; k <= s.degree(); ++k)
    if (s[k] > 0) return MinimumCount{k, s[k]};
  throw ConsistencyError("all-zero spectrum has no minimum");
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace fascount
