#ifndef TILED_EXPONENT_MATRIX_HPP
#define TILED_EXPONENT_MATRIX_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "tiled/permutation.hpp"

namespace tiled {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// The exponent matrix (mu_ij) of a tiled order in M_n(D): zero diagonal and
// mu_ij + mu_jk >= mu_ik for all i, j, k.  Entries may have either sign.
// |mu_ij| must stay below 2^31; larger entries are rejected at validation
// instead of silently widening the arithmetic.
class ExponentMatrix {
public:
  // Validates and constructs; throws tiled::error with kind NotSquare,
  // EntryOutOfRange, NonzeroDiagonal(i) or RingConditionViolated(i,j,k)
  // (indices 1-based).
  static ExponentMatrix validate(int n, const IntMatrix& mu);

  int size() const noexcept { return n_; }
  std::int64_t mu(int i, int j) const { return mu_[i * n_ + j]; }
  IntMatrix rows() const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

private:
  ExponentMatrix(int n, std::vector<std::int64_t> mu)
      : n_(n), mu_(std::move(mu)) {}

  int n_ = 0;
  std::vector<std::int64_t> mu_;
};

// The n^3 structural invariants m_ijl = mu_ij + mu_jl - mu_il.
struct InvariantTensor {
  int n = 0;
  std::vector<std::int64_t> m; // index (i*n + j)*n + l

  std::int64_t at(int i, int j, int l) const { return m[(i * n + j) * n + l]; }
  // (m_123, m_132, m_213, m_231, m_312, m_321) for n = 3.
  std::array<std::int64_t, 6> six_tuple() const;
};

// Types of the distinguished vertices: t_j = sum_i mu_ij mod n, in [0, n).
struct TypeVector {
  int n = 0;
  std::vector<int> t;

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
};

// Monomial matrix with entry pi^alpha_i in row i, column sigma(i).
struct MonomialMatrix {
  Permutation sigma;
  std::vector<std::int64_t> alpha;

  MonomialMatrix(Permutation s, std::vector<std::int64_t> a);
  static MonomialMatrix identity(int n);

  int size() const noexcept { return sigma.size(); }
  // Inverse has permutation sigma^-1 and exponents alpha'_i = -alpha_{sigma^-1(i)}.
  MonomialMatrix inverse() const;
};

InvariantTensor structural_invariants(const ExponentMatrix& e);
TypeVector vertex_types(const ExponentMatrix& e);

// Conjugate: mu'_ij = alpha_i - alpha_j + mu_{sigma(i) sigma(j)}.
// The result satisfies the ring condition automatically.
ExponentMatrix conjugate_by_monomial(const ExponentMatrix& e,
                                     const MonomialMatrix& xi);

// t(xi) = sum_i alpha_i mod n, in [0, n).
int monomial_type(const MonomialMatrix& xi);

// True iff all structural invariants vanish (the polytope is a single vertex).
bool is_maximal(const ExponentMatrix& e);

// Canonical residue of x modulo n in [0, n).
int mod_residue(std::int64_t x, int n);

} // namespace tiled

#endif
