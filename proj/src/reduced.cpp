#include "fascount/reduced.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "fascount/errors.hpp"

namespace fascount {

namespace {

// Dense polynomial in x, normalized (no trailing zeros); empty means zero.
using Poly = std::vector<mpz_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_one() { return {mpz_class(1)}; }

Poly poly_mul(const Poly& a, const Poly& b, int max_deg) {
  if (a.empty() || b.empty()) return {};
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  const int dr = std::min(da + db, max_deg);
  if (dr < 0) return {};
  Poly r(dr + 1);
  for (int i = 0; i <= da && i <= dr; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= db && i + j <= dr; ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a.size() >= b.size() ? a : b;
  const Poly& s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  trim(r);
  return r;
}

void poly_acc(Poly& acc, const Poly& term, bool add) {
  if (acc.size() < term.size()) acc.resize(term.size());
  for (size_t i = 0; i < term.size(); ++i) {
    if (add)
      acc[i] += term[i];
    else
      acc[i] -= term[i];
  }
}

int poly_min_deg(const Poly& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;  // zero polynomial
}

struct Bundle {
  int tail = 0;
  int head = 0;
  Poly open;
  Poly cut;
};

struct Reduction {
  Poly outside;                // product of freed and forced factors
  std::vector<Bundle> core;    // endpoints relabeled 0..core_n-1
  int core_n = 0;
};

Reduction reduce(const Digraph& d, int max_deg) {
  const int n = d.vertex_count();
  std::vector<Bundle> bundles;
  bundles.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) {
    Bundle b;
    b.tail = a.from;
    b.head = a.to;
    b.open = poly_one();
    b.cut = max_deg >= 1 ? Poly{mpz_class(0), mpz_class(1)} : Poly{};
    bundles.push_back(std::move(b));
  }

  Poly outside = poly_one();
  std::vector<bool> alive(bundles.size(), true);

  // Every action strictly shrinks (#live bundles + #involved vertices), so
  // the fixpoint loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;

    for (size_t i = 0; i < bundles.size(); ++i) {
      if (alive[i] && bundles[i].tail == bundles[i].head) {
        outside = poly_mul(outside, bundles[i].cut, max_deg);
        alive[i] = false;
        changed = true;
      }
    }

    // parallel merges: first live bundle per endpoint pair absorbs the rest
    {
      std::vector<std::pair<std::pair<int, int>, size_t>> slots;
      for (size_t i = 0; i < bundles.size(); ++i) {
        if (!alive[i]) continue;
        auto key = std::make_pair(bundles[i].tail, bundles[i].head);
        auto it = std::find_if(slots.begin(), slots.end(), [&](const auto& s) { return s.first == key; });
        if (it == slots.end()) {
          slots.push_back({key, i});
        } else {
          Bundle& dst = bundles[it->second];
          const Bundle& src = bundles[i];
          Poly open = poly_add(poly_add(poly_mul(dst.open, src.open, max_deg), poly_mul(dst.open, src.cut, max_deg)),
                               poly_mul(dst.cut, src.open, max_deg));
          dst.cut = poly_mul(dst.cut, src.cut, max_deg);
          dst.open = std::move(open);
          alive[i] = false;
          changed = true;
        }
      }
    }

    std::vector<int> indeg(n, 0), outdeg(n, 0);
    std::vector<int> in_at(n, -1), out_at(n, -1);
    for (size_t i = 0; i < bundles.size(); ++i) {
      if (!alive[i]) continue;
      ++outdeg[bundles[i].tail];
      ++indeg[bundles[i].head];
      out_at[bundles[i].tail] = static_cast<int>(i);
      in_at[bundles[i].head] = static_cast<int>(i);
    }

    // prune one source or sink, then rescan
    bool acted = false;
    for (int v = 0; v < n && !acted; ++v) {
      const bool source = indeg[v] == 0 && outdeg[v] > 0;
      const bool sink = outdeg[v] == 0 && indeg[v] > 0;
      if (!source && !sink) continue;
      for (size_t i = 0; i < bundles.size(); ++i) {
        if (!alive[i]) continue;
        if (bundles[i].tail == v || bundles[i].head == v) {
          outside = poly_mul(outside, poly_add(bundles[i].open, bundles[i].cut), max_deg);
          alive[i] = false;
        }
      }
      acted = true;
      changed = true;
    }
    if (acted) continue;

    // series suppression of one degree-(1,1) vertex
    for (int v = 0; v < n; ++v) {
      if (indeg[v] != 1 || outdeg[v] != 1) continue;
      const int bi = in_at[v];
      const int bo = out_at[v];
      if (bi == bo) continue;  // loop; handled above next round
      Bundle merged;
      merged.tail = bundles[bi].tail;
      merged.head = bundles[bo].head;
      merged.open = poly_mul(bundles[bi].open, bundles[bo].open, max_deg);
      merged.cut = poly_add(poly_add(poly_mul(bundles[bi].cut, bundles[bo].cut, max_deg),
                                     poly_mul(bundles[bi].cut, bundles[bo].open, max_deg)),
                            poly_mul(bundles[bi].open, bundles[bo].cut, max_deg));
      alive[bi] = false;
      alive[bo] = false;
      bundles.push_back(std::move(merged));
      alive.push_back(true);
      changed = true;
      break;
    }
  }

  Reduction r;
  r.outside = std::move(outside);
  std::vector<int> label(n, -1);
  for (size_t i = 0; i < bundles.size(); ++i) {
    if (!alive[i]) continue;
    for (int v : {bundles[i].tail, bundles[i].head})
      if (label[v] < 0) label[v] = r.core_n++;
  }
  for (size_t i = 0; i < bundles.size(); ++i) {
    if (!alive[i]) continue;
    Bundle b = std::move(bundles[i]);
    b.tail = label[b.tail];
    b.head = label[b.head];
    r.core.push_back(std::move(b));
  }
  std::sort(r.core.begin(), r.core.end(),
            [](const Bundle& a, const Bundle& b) { return std::make_pair(a.tail, a.head) < std::make_pair(b.tail, b.head); });
  return r;
}

// Same inclusion-exclusion as fas_spectrum_dp, with bundle weights: bundles
// into the source set T are blocked (cut), bundles leaving T are
// unconstrained (open + cut), bundles inside S \ T recurse.
Poly weighted_spectrum(const Reduction& r, int max_deg, const Caps& caps) {
  if (r.core_n > caps.reduced_core_vertices)
    throw CapExceeded("fas_spectrum_reduced: reduced core has " + std::to_string(r.core_n) +
                      " vertices, exceeds reduced_core_vertices cap " + std::to_string(caps.reduced_core_vertices));

  const int n = r.core_n;
  const int nb = static_cast<int>(r.core.size());
  std::vector<Poly> free_weight(nb);
  std::vector<int> cut_min(nb);
  for (int i = 0; i < nb; ++i) {
    free_weight[i] = poly_add(r.core[i].open, r.core[i].cut);
    cut_min[i] = poly_min_deg(r.core[i].cut);
  }

  const std::uint32_t all = (n >= 32) ? ~0u : ((1u << n) - 1);
  std::vector<Poly> A(static_cast<size_t>(all) + 1);
  A[0] = poly_one();
  if (all != 0) {
    std::vector<int> cut_idx(nb), free_idx(nb);
    for (std::uint32_t S = 1;; ++S) {
      Poly acc;
      const std::uint32_t lowbit = S & (~S + 1);
      for (std::uint32_t T = S;; T = (T - 1) & S) {
        int n_cut = 0, n_free = 0, min_sum = 0;
        bool dead = false;
        for (int i = 0; i < nb; ++i) {
          const Bundle& b = r.core[i];
          if (((T >> b.head) & 1) && ((S >> b.tail) & 1)) {
            if (cut_min[i] < 0) {
              dead = true;  // cut weight is identically zero
              break;
            }
            min_sum += cut_min[i];
            if (min_sum > max_deg) {
              dead = true;
              break;
            }
            cut_idx[n_cut++] = i;
          } else if (((T >> b.tail) & 1) && !((T >> b.head) & 1) && ((S >> b.head) & 1)) {
            free_idx[n_free++] = i;
          }
        }
        if (!dead) {
          Poly term = A[S & ~T];
          for (int i = 0; i < n_cut && !term.empty(); ++i) term = poly_mul(term, r.core[cut_idx[i]].cut, max_deg);
          for (int i = 0; i < n_free && !term.empty(); ++i) term = poly_mul(term, free_weight[free_idx[i]], max_deg);
          if (!term.empty()) poly_acc(acc, term, std::popcount(T) % 2 == 1);
        }
        if (T == lowbit) break;
      }
      trim(acc);
      A[S] = std::move(acc);
      if (S == all) break;
    }
  }
  return poly_mul(A[all], r.outside, max_deg);
}

}  // namespace

CountSpectrum fas_spectrum_reduced(const Digraph& d, int max_degree, const Caps& caps) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  const int deg = std::min(max_degree, d.arc_count());
  Reduction r = reduce(d, deg);
  Poly result = weighted_spectrum(r, deg, caps);
  std::vector<mpz_class> coeff(deg + 1);
  for (size_t i = 0; i < result.size(); ++i) coeff[i] = std::move(result[i]);
  CountSpectrum s = CountSpectrum::from_coefficients(std::move(coeff));
  for (int k = 0; k <= s.degree(); ++k)
    if (s[k] < 0)
      throw ConsistencyError("fas_spectrum_reduced: negative coefficient at cardinality " + std::to_string(k));
  return s;
}

mpz_class fas_count_reduced(const Digraph& d, const Caps& caps) {
  return fas_spectrum_reduced(d, d.arc_count(), caps).total();
}

MinimumCount minimum_fas_reduced(const Digraph& d, const Caps& caps) {
  const int m = d.arc_count();
  int depth = 0;
  while (true) {
    CountSpectrum s = fas_spectrum_reduced(d, depth, caps);
    for (int k = 0; k <= s.degree(); ++k)
      if (s[k] > 0) return MinimumCount{k, s[k]};
    if (depth >= m) throw ConsistencyError("minimum_fas_reduced: no feedback arc set found up to full depth");
    depth = std::min(m, depth == 0 ? 2 : depth * 2);
  }
}

}  // namespace fascount
