#include "fascount/interpolate.hpp"

#include <stdexcept>

namespace fascount {

std::vector<mpq_class> interpolate_rational(const std::vector<mpz_class>& nodes,
                                            const std::vector<mpz_class>& values) {
  const size_t n = nodes.size();
  if (n == 0 || values.size() != n)
    throw std::invalid_argument("interpolate_rational needs matching nonempty nodes and values");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (nodes[i] == nodes[j]) throw std::invalid_argument("interpolation nodes must be distinct");

  // dd[j] holds the divided difference f[x_j .. x_{j+level}] as levels grow.
  std::vector<mpq_class> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = values[i];
  std::vector<mpq_class> newton(n);
  newton[0] = dd[0];
  for (size_t level = 1; level < n; ++level) {
    for (size_t j = 0; j + level < n; ++j) {
      dd[j] = (dd[j + 1] - dd[j]) / mpq_class(nodes[j + level] - nodes[j]);
      dd[j].canonicalize();
    }
    newton[level] = dd[0];
  }

  // Expand sum_k newton[k] * prod_{i<k} (x - nodes[i]).
  std::vector<mpq_class> coeff(n, 0);
  std::vector<mpq_class> basis(n, 0);
  basis[0] = 1;
  size_t basis_len = 1;
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < basis_len; ++i) coeff[i] += newton[k] * basis[i];
    if (k + 1 < n) {
      // basis *= (x - nodes[k]), in place, highest coefficient first
      const mpq_class c(nodes[k]);
      basis[basis_len] = basis[basis_len - 1];
      for (size_t i = basis_len - 1; i > 0; --i) basis[i] = basis[i - 1] - c * basis[i];
      basis[0] = -c * basis[0];
      ++basis_len;
    }
  }
  for (mpq_class& c : coeff) c.canonicalize();
  return coeff;
}

}  // namespace fascount
