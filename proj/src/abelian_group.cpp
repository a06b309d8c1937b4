#include "tiled/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "tiled/errors.hpp"

namespace tiled {

FinAbGroup::FinAbGroup(std::vector<std::int64_t> factors) {
  std::erase(factors, std::int64_t{1});
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2)
      throw error(errc::invalid_invariant_factors,
                  "invariant factors must be positive");
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      throw error(errc::invalid_invariant_factors,
                  std::to_string(factors[i]) + " does not divide " +
                      std::to_string(factors[i + 1]));
  }
  factors_ = std::move(factors);
}

std::int64_t FinAbGroup::order() const {
  std::int64_t ord = 1;
  for (std::int64_t d : factors_)
    if (__builtin_mul_overflow(ord, d, &ord))
      throw error(errc::overflow, "group order exceeds 64 bits");
  return ord;
}

GroupElement FinAbGroup::reduce(const GroupElement& coords) const {
  if (coords.size() != factors_.size())
    throw error(errc::dimension_mismatch,
                "element has " + std::to_string(coords.size()) +
                    " coordinates, group has rank " +
                    std::to_string(factors_.size()));
  GroupElement out(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    std::int64_t r = coords[i] % factors_[i];
    if (r < 0) r += factors_[i];
    out[i] = r;
  }
  return out;
}

std::int64_t FinAbGroup::element_order(const GroupElement& coords) const {
  const GroupElement c = reduce(coords);
  std::int64_t ord = 1;
  for (size_t i = 0; i < c.size(); ++i)
    ord = std::lcm(ord, factors_[i] / std::gcd(factors_[i], c[i]));
  return ord;
}

namespace {

using BigMatrix = std::vector<std::vector<mpz_class>>;

bool is_lone_pivot(const BigMatrix& a, size_t s) {
  for (size_t i = s + 1; i < a.size(); ++i)
    if (a[i][s] != 0) return false;
  for (size_t j = s + 1; j < a[s].size(); ++j)
    if (a[s][j] != 0) return false;
  return true;
}

// Locates the entry of least nonzero absolute value in the trailing block.
bool locate_pivot(const BigMatrix& a, size_t s, size_t& pi, size_t& pj) {
  bool found = false;
  mpz_class best;
  for (size_t i = s; i < a.size(); ++i)
    for (size_t j = s; j < a[i].size(); ++j) {
      if (a[i][j] == 0) continue;
      mpz_class v = abs(a[i][j]);
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

std::int64_t narrow(const mpz_class& v) {
  if (!v.fits_slong_p())
    throw error(errc::overflow, "Smith normal form entry exceeds 64 bits");
  return static_cast<std::int64_t>(v.get_si());
}

} // namespace

std::vector<std::int64_t> smith_normal_form(const RelationMatrix& input) {
  const size_t rows = input.size();
  const size_t cols = rows == 0 ? 0 : input[0].size();
  for (const auto& r : input)
    if (r.size() != cols)
      throw error(errc::not_square, "matrix rows have unequal lengths");

  BigMatrix a(rows, std::vector<mpz_class>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(input[i][j]);

  const size_t steps = std::min(rows, cols);
  for (size_t s = 0; s < steps; ++s) {
    for (;;) {
      size_t pi = s, pj = s;
      if (!locate_pivot(a, s, pi, pj)) break; // trailing block is zero
      if (pi != s) std::swap(a[pi], a[s]);
      if (pj != s)
        for (auto& row : a) std::swap(row[pj], row[s]);

      for (size_t i = s + 1; i < rows; ++i) {
        if (a[i][s] == 0) continue;
        mpz_class q = a[i][s] / a[s][s];
        for (size_t j = s; j < cols; ++j) a[i][j] -= q * a[s][j];
      }
      for (size_t j = s + 1; j < cols; ++j) {
        if (a[s][j] == 0) continue;
        mpz_class q = a[s][j] / a[s][s];
        for (size_t i = s; i < rows; ++i) a[i][j] -= q * a[i][s];
      }
      if (!is_lone_pivot(a, s)) continue;

      // Fold in any entry the pivot does not divide and reduce again.
      bool divides_all = true;
      for (size_t i = s + 1; i < rows && divides_all; ++i)
        for (size_t j = s + 1; j < cols; ++j)
          if (a[i][j] % a[s][s] != 0) {
            for (size_t c = s; c < cols; ++c) a[s][c] += a[i][c];
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (a[s][s] < 0) a[s][s] = -a[s][s];
  }

  std::vector<std::int64_t> diag(steps);
  for (size_t s = 0; s < steps; ++s) diag[s] = narrow(a[s][s]);
  return diag;
}

FinAbGroup quotient_by(const FinAbGroup& g,
                       const std::vector<GroupElement>& relations) {
  const int k = g.rank();
  RelationMatrix stacked;
  stacked.reserve(k + relations.size());
  for (int i = 0; i < k; ++i) {
    std::vector<std::int64_t> row(k, 0);
    row[i] = g.factors()[i];
    stacked.push_back(std::move(row));
  }
  for (const auto& rel : relations) stacked.push_back(g.reduce(rel));

  std::vector<std::int64_t> diag = smith_normal_form(stacked);
  std::vector<std::int64_t> factors;
  for (std::int64_t d : diag)
    if (d > 1) factors.push_back(d);
  return FinAbGroup(std::move(factors));
}

std::int64_t power_quotient_size(const FinAbGroup& g, std::int64_t n) {
  if (n < 1)
    throw error(errc::invalid_local_exponent, "power exponent must be >= 1");
  std::int64_t size = 1;
  for (std::int64_t d : g.factors())
    if (__builtin_mul_overflow(size, std::gcd(d, n), &size))
      throw error(errc::overflow, "power quotient size exceeds 64 bits");
  return size;
}

} // namespace tiled
