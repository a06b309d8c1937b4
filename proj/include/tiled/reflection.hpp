#ifndef TILED_REFLECTION_HPP
#define TILED_REFLECTION_HPP

#include <optional>
#include <vector>

#include "tiled/exponent_matrix.hpp"

namespace tiled {

// Permutation shadow of the normalizer: the subgroup H of S_n preserving the
// structural invariants, the type t(xi_sigma) of the monomial lift of each
// member, and the exponent d generating {t(xi_sigma)} as a subgroup of Z/nZ.
struct NormalizerData {
  std::vector<Permutation> h; // lexicographic order; h[0] is the identity
  std::vector<int> xi_types;  // parallel to h, residues in [0, n)
  int d = 0;                  // gcd of n and all xi_types
};

// Searches for sigma with m2_ijl = m1_{sigma(i) sigma(j) sigma(l)} for all
// i, j, l.  Returns the lexicographically least witness, or nullopt.
std::optional<Permutation> are_isomorphic(const ExponentMatrix& e1,
                                          const ExponentMatrix& e2);

// As are_isomorphic, additionally requiring t2_i = t1_{sigma(i)} mod n.
std::optional<Permutation> reflection_equivalent(const ExponentMatrix& e1,
                                                 const ExponentMatrix& e2);

NormalizerData normalizer(const ExponentMatrix& e);

// The divisor d of n with nr(N(Gamma)) = (k^x)^d R^x.
int norm_exponent(const ExponentMatrix& e);

// Number of reflection classes: iterates divisors of n in increasing order
// and returns the first d admitting sigma with t_j + d = t_{sigma(j)} mod n
// whose disjoint cycle lengths all share a factor with n and which preserves
// the invariants.  The divisor n always succeeds.
int reflection_class_count(const ExponentMatrix& e);

// Prime-degree shortcut: requires n prime (NotPrime otherwise) and returns
// 1 or n without touching the normalizer.
int reflection_class_count_prime(const ExponentMatrix& e);

// Independent brute force: conjugates by diag(pi^s, 1, ..., 1) for s = 1..n
// and returns the least s with a full unpruned S_n reflection equivalence.
// Requires n <= 9 (TooLarge otherwise).
int oracle_reflection_class_count(const ExponentMatrix& e);

// Canonical representative of the pair (invariants, types) under the
// simultaneous S_n action: the lexicographic minimum over all permutations.
// Equal labels are equivalent to reflection_equivalent succeeding.
struct ReflectionClassLabel {
  int n = 0;
  std::vector<std::int64_t> invariants; // flattened in index order
  std::vector<int> types;

  friend bool operator==(const ReflectionClassLabel&,
                         const ReflectionClassLabel&) = default;
};

// Requires n <= 9 (TooLarge otherwise).
ReflectionClassLabel class_label(const ExponentMatrix& e);

} // namespace tiled

#endif
