#include "tiled/exponent_matrix.hpp"

#include <cstdlib>
#include <string>

#include "tiled/errors.hpp"

namespace tiled {

namespace {
constexpr std::int64_t kEntryBound = std::int64_t{1} << 31;
}

int mod_residue(std::int64_t x, int n) {
  std::int64_t r = x % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

ExponentMatrix ExponentMatrix::validate(int n, const IntMatrix& mu) {
  if (n < 2 || static_cast<int>(mu.size()) != n)
    throw error(errc::not_square, "matrix must be n x n with n >= 2");
  for (const auto& row : mu)
    if (static_cast<int>(row.size()) != n)
      throw error(errc::not_square, "matrix must be n x n with n >= 2");

  std::vector<std::int64_t> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (std::llabs(mu[i][j]) >= kEntryBound)
        throw error(errc::entry_out_of_range,
                    "entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") exceeds the 2^31 bound",
                    {i + 1, j + 1}, 2);
      flat[i * n + j] = mu[i][j];
    }

  for (int i = 0; i < n; ++i)
    if (flat[i * n + i] != 0)
      throw error(errc::nonzero_diagonal,
                  "diagonal entry " + std::to_string(i + 1) + " is nonzero",
                  {i + 1}, 1);

  // Scan each intermediate index j against all pairs (i, k).
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (flat[i * n + j] + flat[j * n + k] < flat[i * n + k])
          throw error(errc::ring_condition_violated,
                      "mu_" + std::to_string(i + 1) + std::to_string(j + 1) +
                          " + mu_" + std::to_string(j + 1) +
                          std::to_string(k + 1) + " < mu_" +
                          std::to_string(i + 1) + std::to_string(k + 1),
                      {i + 1, j + 1, k + 1}, 3);

  return ExponentMatrix(n, std::move(flat));
}

IntMatrix ExponentMatrix::rows() const {
  IntMatrix out(n_, std::vector<std::int64_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = mu(i, j);
  return out;
}

std::array<std::int64_t, 6> InvariantTensor::six_tuple() const {
  if (n != 3)
    throw error(errc::unsupported_dimension,
                "the 6-tuple report is defined for n = 3 only", {n}, 1);
  return {at(0, 1, 2), at(0, 2, 1), at(1, 0, 2),
          at(1, 2, 0), at(2, 0, 1), at(2, 1, 0)};
}

MonomialMatrix::MonomialMatrix(Permutation s, std::vector<std::int64_t> a)
    : sigma(std::move(s)), alpha(std::move(a)) {
  if (static_cast<int>(alpha.size()) != sigma.size())
    throw error(errc::dimension_mismatch,
                "exponent vector length must match the permutation size");
  for (std::int64_t v : alpha)
    if (std::llabs(v) >= kEntryBound)
      throw error(errc::entry_out_of_range,
                  "monomial exponent exceeds the 2^31 bound");
}

MonomialMatrix MonomialMatrix::identity(int n) {
  return MonomialMatrix(Permutation(n), std::vector<std::int64_t>(n, 0));
}

MonomialMatrix MonomialMatrix::inverse() const {
  Permutation inv = sigma.inverse();
  std::vector<std::int64_t> a(alpha.size());
  for (int i = 0; i < sigma.size(); ++i) a[i] = -alpha[inv(i)];
  return MonomialMatrix(std::move(inv), std::move(a));
}

InvariantTensor structural_invariants(const ExponentMatrix& e) {
  const int n = e.size();
  InvariantTensor t;
  t.n = n;
  t.m.resize(static_cast<size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        t.m[(i * n + j) * n + l] = e.mu(i, j) + e.mu(j, l) - e.mu(i, l);
  return t;
}

TypeVector vertex_types(const ExponentMatrix& e) {
  const int n = e.size();
  TypeVector tv;
  tv.n = n;
  tv.t.resize(n);
  for (int j = 0; j < n; ++j) {
    std::int64_t sum = 0;
    for (int i = 0; i < n; ++i) sum += e.mu(i, j);
    tv.t[j] = mod_residue(sum, n);
  }
  return tv;
}

ExponentMatrix conjugate_by_monomial(const ExponentMatrix& e,
                                     const MonomialMatrix& xi) {
  const int n = e.size();
  if (xi.size() != n)
    throw error(errc::dimension_mismatch,
                "monomial matrix size does not match the order");
  IntMatrix out(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[i][j] = xi.alpha[i] - xi.alpha[j] + e.mu(xi.sigma(i), xi.sigma(j));
  return ExponentMatrix::validate(n, out);
}

int monomial_type(const MonomialMatrix& xi) {
  std::int64_t sum = 0;
  for (std::int64_t v : xi.alpha) sum += v;
  return mod_residue(sum, xi.size());
}

bool is_maximal(const ExponentMatrix& e) {
  const int n = e.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        if (e.mu(i, j) + e.mu(j, l) != e.mu(i, l)) return false;
  return true;
}

} // namespace tiled
