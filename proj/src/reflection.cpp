#include "tiled/reflection.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "tiled/errors.hpp"
#include "tiled/runtime.hpp"

namespace tiled {

namespace {

constexpr int kLabelLimit = 9;     // S_9 is the largest space we scan fully
constexpr int kParallelCutoff = 8; // below this a sequential scan is cheaper

std::vector<int> divisors_ascending(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Scans the block of permutations with img[0] == first in lexicographic
// order; returns the least one accepted by pred, if any.
template <class Pred>
std::optional<std::vector<int>> scan_block(int n, int first, const Pred& pred) {
  std::vector<int> img(n);
  img[0] = first;
  for (int i = 0, v = 0; i < n - 1; ++v)
    if (v != first) img[++i] = v;
  do {
    if (pred(img)) return img;
  } while (std::next_permutation(img.begin() + 1, img.end()));
  return std::nullopt;
}

// Lexicographically least permutation of {0,...,n-1} accepted by pred.
// The parallel path partitions by the first image and picks the least
// block with a match, so the result equals the sequential scan.
template <class Pred>
std::optional<std::vector<int>> first_match(int n, const Pred& pred) {
  const unsigned workers = std::min<unsigned>(max_threads(), n);
  if (n < kParallelCutoff || workers <= 1) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
      if (pred(img)) return img;
    } while (std::next_permutation(img.begin(), img.end()));
    return std::nullopt;
  }

  std::vector<std::optional<std::vector<int>>> found(n);
  std::atomic<int> next{0};
  std::atomic<int> best_block{n};
  auto work = [&] {
    for (;;) {
      const int f = next.fetch_add(1);
      if (f >= n) return;
      if (f > best_block.load()) continue;
      auto r = scan_block(n, f, pred);
      if (r) {
        found[f] = std::move(r);
        int cur = best_block.load();
        while (f < cur && !best_block.compare_exchange_weak(cur, f)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (int f = 0; f < n; ++f)
    if (found[f]) return std::move(found[f]);
  return std::nullopt;
}

int moved_points(const std::vector<int>& img) {
  int moved = 0;
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != static_cast<int>(i)) ++moved;
  return moved;
}

// Canonical witness: the accepted permutation moving the fewest points,
// ties broken lexicographically.  A full scan, so self-comparisons yield
// the identity and simple transpositions beat longer cycles.
template <class Pred>
std::optional<std::vector<int>> best_match(int n, const Pred& pred) {
  std::optional<std::vector<int>> best;
  int best_moved = n + 1;
  auto consider = [&](const std::vector<int>& img) {
    const int moved = moved_points(img);
    if (!best || moved < best_moved || (moved == best_moved && img < *best)) {
      best = img;
      best_moved = moved;
    }
  };

  const unsigned workers = std::min<unsigned>(max_threads(), n);
  if (n < kParallelCutoff || workers <= 1) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
      if (pred(img)) consider(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return best;
  }

  std::vector<std::optional<std::vector<int>>> block_best(n);
  std::vector<int> block_moved(n, n + 1);
  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      const int f = next.fetch_add(1);
      if (f >= n) return;
      std::vector<int> img(n);
      img[0] = f;
      for (int i = 0, v = 0; i < n - 1; ++v)
        if (v != f) img[++i] = v;
      do {
        if (!pred(img)) continue;
        const int moved = moved_points(img);
        if (!block_best[f] || moved < block_moved[f] ||
            (moved == block_moved[f] && img < *block_best[f])) {
          block_best[f] = img;
          block_moved[f] = moved;
        }
      } while (std::next_permutation(img.begin() + 1, img.end()));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (int f = 0; f < n; ++f)
    if (block_best[f]) consider(*block_best[f]);
  return best;
}

// All accepted permutations in lexicographic order.
template <class Pred>
std::vector<std::vector<int>> all_matches(int n, const Pred& pred) {
  const unsigned workers = std::min<unsigned>(max_threads(), n);
  std::vector<std::vector<int>> out;
  if (n < kParallelCutoff || workers <= 1) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
      if (pred(img)) out.push_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

  std::vector<std::vector<std::vector<int>>> blocks(n);
  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      const int f = next.fetch_add(1);
      if (f >= n) return;
      std::vector<int> img(n);
      img[0] = f;
      for (int i = 0, v = 0; i < n - 1; ++v)
        if (v != f) img[++i] = v;
      do {
        if (pred(img)) blocks[f].push_back(img);
      } while (std::next_permutation(img.begin() + 1, img.end()));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (auto& b : blocks)
    for (auto& img : b) out.push_back(std::move(img));
  return out;
}

// target_ijl == source_{sigma(i) sigma(j) sigma(l)} for all i, j, l.
bool tensor_matches(const InvariantTensor& source, const InvariantTensor& target,
                    const std::vector<int>& img) {
  const int n = source.n;
  const std::int64_t* s = source.m.data();
  const std::int64_t* t = target.m.data();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::int64_t* trow = t + (i * n + j) * n;
      const std::int64_t* srow = s + (img[i] * n + img[j]) * n;
      for (int l = 0; l < n; ++l)
        if (trow[l] != srow[img[l]]) return false;
    }
  return true;
}

// Every disjoint cycle length of img shares a factor with n.
bool cycles_admissible(const std::vector<int>& img, int n) {
  std::uint64_t seen = 0; // n stays far below 64 in practice
  for (int i = 0; i < n; ++i) {
    if (seen & (std::uint64_t{1} << i)) continue;
    int len = 0, j = i;
    while (!(seen & (std::uint64_t{1} << j))) {
      seen |= std::uint64_t{1} << j;
      ++len;
      j = img[j];
    }
    if (std::gcd(len, n) == 1) return false;
  }
  return true;
}

int xi_type(const ExponentMatrix& e, const std::vector<int>& img) {
  const int n = e.size();
  std::int64_t sum = 0;
  for (int i = 0; i < n; ++i) sum += e.mu(i, 0) - e.mu(img[i], img[0]);
  return mod_residue(sum, n);
}

std::vector<std::int64_t> sorted_edge_invariants(const InvariantTensor& inv) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<size_t>(inv.n) * (inv.n - 1));
  for (int i = 0; i < inv.n; ++i)
    for (int j = 0; j < inv.n; ++j)
      if (i != j) out.push_back(inv.at(i, j, i));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::optional<Permutation> are_isomorphic(const ExponentMatrix& e1,
                                          const ExponentMatrix& e2) {
  const int n = e1.size();
  if (e2.size() != n)
    throw error(errc::dimension_mismatch, "orders have different sizes");
  const InvariantTensor m1 = structural_invariants(e1);
  const InvariantTensor m2 = structural_invariants(e2);
  // The multiset {m_iji} is permutation invariant; a mismatch rules out
  // any witness without scanning S_n.
  if (sorted_edge_invariants(m1) != sorted_edge_invariants(m2))
    return std::nullopt;
  auto r = best_match(n, [&](const std::vector<int>& img) {
    return tensor_matches(m1, m2, img);
  });
  if (!r) return std::nullopt;
  return Permutation::from_images(std::move(*r));
}

std::optional<Permutation> reflection_equivalent(const ExponentMatrix& e1,
                                                 const ExponentMatrix& e2) {
  const int n = e1.size();
  if (e2.size() != n)
    throw error(errc::dimension_mismatch, "orders have different sizes");
  const InvariantTensor m1 = structural_invariants(e1);
  const InvariantTensor m2 = structural_invariants(e2);
  const TypeVector t1 = vertex_types(e1);
  const TypeVector t2 = vertex_types(e2);
  auto r = best_match(n, [&](const std::vector<int>& img) {
    for (int i = 0; i < n; ++i)
      if (t2.t[i] != t1.t[img[i]]) return false;
    return tensor_matches(m1, m2, img);
  });
  if (!r) return std::nullopt;
  return Permutation::from_images(std::move(*r));
}

NormalizerData normalizer(const ExponentMatrix& e) {
  const int n = e.size();
  const InvariantTensor inv = structural_invariants(e);
  NormalizerData data;
  for (auto& img : all_matches(n, [&](const std::vector<int>& img) {
         return tensor_matches(inv, inv, img);
       })) {
    data.xi_types.push_back(xi_type(e, img));
    data.h.push_back(Permutation::from_images(std::move(img)));
  }
  std::int64_t d = n;
  for (int t : data.xi_types) d = std::gcd(d, static_cast<std::int64_t>(t));
  data.d = static_cast<int>(d);
  return data;
}

int norm_exponent(const ExponentMatrix& e) { return normalizer(e).d; }

int reflection_class_count(const ExponentMatrix& e) {
  const int n = e.size();
  const InvariantTensor inv = structural_invariants(e);
  const TypeVector tv = vertex_types(e);

  std::vector<char> present(n, 0);
  for (int t : tv.t) present[t] = 1;

  for (int d : divisors_ascending(n)) {
    if (d == n) return n; // sigma = identity always witnesses the full shift
    bool shift_possible = true;
    for (int j = 0; j < n && shift_possible; ++j)
      shift_possible = present[(tv.t[j] + d) % n];
    if (!shift_possible) continue;
    auto witness = first_match(n, [&](const std::vector<int>& img) {
      for (int j = 0; j < n; ++j)
        if (tv.t[img[j]] != (tv.t[j] + d) % n) return false;
      if (!cycles_admissible(img, n)) return false;
      return tensor_matches(inv, inv, img);
    });
    if (witness) return d;
  }
  return n;
}

int reflection_class_count_prime(const ExponentMatrix& e) {
  const int p = e.size();
  if (!is_prime(p))
    throw error(errc::not_prime, std::to_string(p) + " is not prime", {p}, 1);
  const TypeVector tv = vertex_types(e);

  std::vector<int> position(p, -1);
  for (int j = 0; j < p; ++j) {
    if (position[tv.t[j]] != -1) return p; // repeated type
    position[tv.t[j]] = j;
  }

  // All p residues occur exactly once: the unique p-cycle shifting types by 1.
  std::vector<int> img(p);
  for (int j = 0; j < p; ++j) img[j] = position[(tv.t[j] + 1) % p];
  const InvariantTensor inv = structural_invariants(e);
  return tensor_matches(inv, inv, img) ? 1 : p;
}

int oracle_reflection_class_count(const ExponentMatrix& e) {
  const int n = e.size();
  if (n > kLabelLimit)
    throw error(errc::too_large,
                "exhaustive search is limited to n <= " +
                    std::to_string(kLabelLimit),
                {n}, 1);
  const InvariantTensor inv = structural_invariants(e);
  const TypeVector tv = vertex_types(e);
  for (int s = 1; s <= n; ++s) {
    std::vector<std::int64_t> alpha(n, 0);
    alpha[0] = s;
    const ExponentMatrix shifted =
        conjugate_by_monomial(e, MonomialMatrix(Permutation(n), alpha));
    const InvariantTensor inv_s = structural_invariants(shifted);
    const TypeVector tv_s = vertex_types(shifted);
    auto witness = first_match(n, [&](const std::vector<int>& img) {
      for (int i = 0; i < n; ++i)
        if (tv_s.t[i] != tv.t[img[i]]) return false;
      return tensor_matches(inv, inv_s, img);
    });
    if (witness) return s;
  }
  return n;
}

ReflectionClassLabel class_label(const ExponentMatrix& e) {
  const int n = e.size();
  if (n > kLabelLimit)
    throw error(errc::too_large,
                "canonicalization is limited to n <= " +
                    std::to_string(kLabelLimit),
                {n}, 1);
  const InvariantTensor inv = structural_invariants(e);
  const TypeVector tv = vertex_types(e);

  ReflectionClassLabel best;
  best.n = n;
  best.invariants = inv.m;
  best.types = tv.t;

  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  const std::int64_t* m = inv.m.data();
  while (std::next_permutation(img.begin(), img.end())) {
    // Lazy lexicographic comparison against the current minimum; the
    // candidate tensor is materialized only when it improves.
    int cmp = 0;
    size_t idx = 0;
    for (int i = 0; i < n && cmp == 0; ++i)
      for (int j = 0; j < n && cmp == 0; ++j)
        for (int l = 0; l < n; ++l, ++idx) {
          const std::int64_t v = m[(img[i] * n + img[j]) * n + img[l]];
          if (v != best.invariants[idx]) {
            cmp = v < best.invariants[idx] ? -1 : 1;
            break;
          }
        }
    if (cmp == 0) {
      for (int i = 0; i < n; ++i) {
        const int v = tv.t[img[i]];
        if (v != best.types[i]) {
          cmp = v < best.types[i] ? -1 : 1;
          break;
        }
      }
    }
    if (cmp < 0) {
      size_t k = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l, ++k)
            best.invariants[k] = m[(img[i] * n + img[j]) * n + img[l]];
      for (int i = 0; i < n; ++i) best.types[i] = tv.t[img[i]];
    }
  }
  return best;
}

} // namespace tiled
