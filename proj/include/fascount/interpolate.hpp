#pragma once

#include <gmpxx.h>

#include <vector>

namespace fascount {

// Coefficients (constant term first) of the unique polynomial of degree
// < nodes.size() through the given points, computed exactly over the
// rationals (Newton divided differences, then expansion to the monomial
// basis). Nodes must be pairwise distinct.
std::vector<mpq_class> interpolate_rational(const std::vector<mpz_class>& nodes,
                                            const std::vector<mpz_class>& values);

}  // namespace fascount
