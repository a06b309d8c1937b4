#ifndef TILED_ABELIAN_GROUP_HPP
#define TILED_ABELIAN_GROUP_HPP

#include <cstdint>
#include <vector>

namespace tiled {

using GroupElement = std::vector<std::int64_t>;
using RelationMatrix = std::vector<std::vector<std::int64_t>>;

// Finite abelian group given by invariant factors d_1 | d_2 | ... | d_k with
// every d_i >= 2; the trivial group has no factors.  Unit factors are
// stripped on construction so equality is representation equality.
class FinAbGroup {
public:
  FinAbGroup() = default;
  // Throws InvalidInvariantFactors if the divisibility chain fails or a
  // factor is nonpositive.
  explicit FinAbGroup(std::vector<std::int64_t> factors);

  int rank() const noexcept { return static_cast<int>(factors_.size()); }
  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  bool trivial() const noexcept { return factors_.empty(); }
  std::int64_t order() const;

  // Coordinates reduced into [0, d_i); throws DimensionMismatch.
  GroupElement reduce(const GroupElement& coords) const;
  // Order of the element in the group.
  std::int64_t element_order(const GroupElement& coords) const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

private:
  std::vector<std::int64_t> factors_;
};

// Diagonal of the Smith normal form of an integer matrix: min(rows, cols)
// nonnegative entries s_1 | s_2 | ..., zeros last.  Row reduction runs over
// arbitrary-precision integers; results are narrowed back to 64 bits.
std::vector<std::int64_t> smith_normal_form(const RelationMatrix& a);

// G modulo the subgroup generated by the given coordinate vectors: stacks
// diag(d_i) over the relation rows, takes the Smith normal form and strips
// unit factors.
FinAbGroup quotient_by(const FinAbGroup& g,
                       const std::vector<GroupElement>& relations);

// #(G / G^n) = prod_i gcd(d_i, n).
std::int64_t power_quotient_size(const FinAbGroup& g, std::int64_t n);

} // namespace tiled

#endif
