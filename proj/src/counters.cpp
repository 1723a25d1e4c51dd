#include "fascount/counters.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "fascount/detail/mask_acyclic.hpp"
#include "fascount/errors.hpp"

namespace fascount {

namespace {

using detail::MaskChecker;

void require(bool ok, const std::string& message) {
  if (!ok) throw CapExceeded(message);
}

std::uint64_t full_mask(int bits) {
  return bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

void check_brute_cap(const Digraph& d, const Caps& caps, const char* who) {
  require(caps.brute_force_arcs <= kBruteForceArcCeiling,
          std::string(who) + ": brute_force_arcs cap exceeds hard ceiling " +
              std::to_string(kBruteForceArcCeiling));
  require(d.arc_count() <= caps.brute_force_arcs,
          std::string(who) + ": " + std::to_string(d.arc_count()) + " arcs exceeds brute_force_arcs cap " +
              std::to_string(caps.brute_force_arcs));
}

CountSpectrum spectrum_from_counts(const std::vector<unsigned long long>& counts) {
  std::vector<mpz_class> coeff;
  coeff.reserve(counts.size());
  for (unsigned long long c : counts) coeff.emplace_back(static_cast<unsigned long>(c));
  return CountSpectrum::from_coefficients(std::move(coeff));
}

}  // namespace

CountSpectrum fas_spectrum_bruteforce(const Digraph& d, const Caps& caps) {
  check_brute_cap(d, caps, "fas_spectrum_bruteforce");
  const int m = d.arc_count();
  const MaskChecker checker(d);
  const std::uint64_t full = full_mask(m);
  std::vector<unsigned long long> counts(m + 1, 0);
  for (std::uint64_t del = 0;; ++del) {
    if (checker.acyclic_kept(full & ~del)) ++counts[std::popcount(del)];
    if (del == full) break;
  }
  return spectrum_from_counts(counts);
}

mpz_class fas_count_bruteforce(const Digraph& d, const Caps& caps) {
  return fas_spectrum_bruteforce(d, caps).total();
}

mpz_class card_fas_bruteforce(const Digraph& d, int k, const Caps& caps, unsigned long long budget) {
  (void)caps;
  const int m = d.arc_count();
  if (k < 0 || k > m) return 0;
  mpz_class combos = binomial(m, k);
  require(combos <= static_cast<unsigned long>(budget),
          "card_fas_bruteforce: C(" + std::to_string(m) + "," + std::to_string(k) + ") = " +
              combos.get_str() + " exceeds enumeration budget " + std::to_string(budget));
  const MaskChecker checker(d);
  const std::uint64_t full = full_mask(m);
  unsigned long long hits = 0;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::uint64_t del = 0;
    for (int i : pick) del |= std::uint64_t{1} << i;
    if (checker.acyclic_kept(full & ~del)) ++hits;
    // next k-combination of {0..m-1} in lexicographic order
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return mpz_class(static_cast<unsigned long>(hits));
}

CountSpectrum fas_spectrum_dp(const Digraph& d, const Caps& caps) {
  const int n = d.vertex_count();
  const int m = d.arc_count();
  require(n <= caps.dp_vertices, "fas_spectrum_dp: " + std::to_string(n) +
                                     " vertices exceeds dp_vertices cap " + std::to_string(caps.dp_vertices));

  // Pascal rows up to m, for expanding (1+x)^cnt.
  std::vector<std::vector<mpz_class>> binom_row(m + 1);
  binom_row[0] = {mpz_class(1)};
  for (int r = 1; r <= m; ++r) {
    binom_row[r].resize(r + 1);
    binom_row[r][0] = 1;
    binom_row[r][r] = 1;
    for (int c = 1; c < r; ++c) binom_row[r][c] = binom_row[r - 1][c - 1] + binom_row[r - 1][c];
  }

  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<int> tail(m), head(m);
  for (int i = 0; i < m; ++i) {
    tail[i] = d.arc(i).from;
    head[i] = d.arc(i).to;
  }

  // arcs_within[S]: arcs with both endpoints in S; fixes the length of A(S).
  std::vector<int> arcs_within(static_cast<size_t>(all) + 1, 0);
  for (std::uint32_t S = 0;; ++S) {
    int cnt = 0;
    for (int i = 0; i < m; ++i)
      if (((S >> tail[i]) & 1) && ((S >> head[i]) & 1)) ++cnt;
    arcs_within[S] = cnt;
    if (S == all) break;
  }

  std::vector<std::vector<mpz_class>> A(static_cast<size_t>(all) + 1);
  A[0] = {mpz_class(1)};
  if (all != 0) {
    for (std::uint32_t S = 1;; ++S) {
      std::vector<mpz_class> acc(arcs_within[S] + 1);
      const std::uint32_t lowbit = S & (~S + 1);
      for (std::uint32_t T = S;; T = (T - 1) & S) {
        int cnt_in = 0;   // arcs from S into T: deleted, x each
        int cnt_out = 0;  // arcs from T into S\T: unconstrained, 1+x each
        for (int i = 0; i < m; ++i) {
          const bool head_in_T = (T >> head[i]) & 1;
          if (head_in_T && ((S >> tail[i]) & 1)) {
            ++cnt_in;
          } else if (!head_in_T && ((T >> tail[i]) & 1) && ((S >> head[i]) & 1)) {
            ++cnt_out;
          }
        }
        const std::vector<mpz_class>& rest = A[S & ~T];
        const std::vector<mpz_class>& row = binom_row[cnt_out];
        const bool add = std::popcount(T) % 2 == 1;
        for (size_t i = 0; i < rest.size(); ++i) {
          if (rest[i] == 0) continue;
          for (size_t j = 0; j < row.size(); ++j) {
            mpz_class& slot = acc[i + j + cnt_in];
            if (add)
              mpz_addmul(slot.get_mpz_t(), rest[i].get_mpz_t(), row[j].get_mpz_t());
            else
              mpz_submul(slot.get_mpz_t(), rest[i].get_mpz_t(), row[j].get_mpz_t());
          }
        }
        if (T == lowbit) break;
      }
      A[S] = std::move(acc);
      if (S == all) break;
    }
  }

  std::vector<mpz_class> coeff = std::move(A[all]);
  coeff.resize(m + 1);
  return CountSpectrum::from_coefficients(std::move(coeff));
}

CountSpectrum vc_spectrum(const UGraph& g, const Caps& caps) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  require(n <= caps.subset_vertices, "vc_spectrum: " + std::to_string(n) +
                                         " vertices exceeds subset_vertices cap " +
                                         std::to_string(caps.subset_vertices));
  require(m <= 64, "vc_spectrum: edge mask supports at most 64 edges");
  std::vector<std::uint64_t> covers(n, 0);
  for (int e = 0; e < m; ++e) {
    covers[g.edge(e).a] |= std::uint64_t{1} << e;
    covers[g.edge(e).b] |= std::uint64_t{1} << e;
  }
  const std::uint64_t all_edges = full_mask(m);
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<unsigned long long> counts(n + 1, 0);
  for (std::uint32_t S = 0;; ++S) {
    std::uint64_t covered = 0;
    for (std::uint32_t rem = S; rem; rem &= rem - 1) covered |= covers[std::countr_zero(rem)];
    if (covered == all_edges) ++counts[std::popcount(S)];
    if (S == all) break;
  }
  return spectrum_from_counts(counts);
}

CountSpectrum fvs_spectrum(const Digraph& d, const Caps& caps) {
  const int n = d.vertex_count();
  require(n <= caps.subset_vertices, "fvs_spectrum: " + std::to_string(n) +
                                         " vertices exceeds subset_vertices cap " +
                                         std::to_string(caps.subset_vertices));
  require(n <= 32, "fvs_spectrum: vertex mask supports at most 32 vertices");
  std::vector<std::uint32_t> out_nbr(n, 0);
  for (const Arc& a : d.arcs()) out_nbr[a.from] |= 1u << a.to;
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<unsigned long long> counts(n + 1, 0);
  for (std::uint32_t S = 0;; ++S) {
    if (detail::acyclic_induced(out_nbr, all & ~S)) ++counts[std::popcount(S)];
    if (S == all) break;
  }
  return spectrum_from_counts(counts);
}

mpz_class minimal_fas_count(const Digraph& d, const Caps& caps) {
  check_brute_cap(d, caps, "minimal_fas_count");
  const int m = d.arc_count();
  const MaskChecker checker(d);
  const std::uint64_t full = full_mask(m);
  std::vector<bool> fas(static_cast<size_t>(full) + 1);
  for (std::uint64_t del = 0;; ++del) {
    fas[del] = checker.acyclic_kept(full & ~del);
    if (del == full) break;
  }
  // Minimality needs only single-arc removals (see header).
  unsigned long long minimal = 0;
  for (std::uint64_t del = 0;; ++del) {
    if (fas[del]) {
      bool is_minimal = true;
      for (std::uint64_t rem = del; rem; rem ^= rem & (~rem + 1)) {
        if (fas[del ^ (rem & (~rem + 1))]) {
          is_minimal = false;
          break;
        }
      }
      if (is_minimal) ++minimal;
    }
    if (del == full) break;
  }
  return mpz_class(static_cast<unsigned long>(minimal));
}

}  // namespace fascount
