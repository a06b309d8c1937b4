#ifndef TILED_PERMUTATION_HPP
#define TILED_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace tiled {

// Permutation of {0, ..., n-1}.  External I/O uses 1-based cycle notation,
// e.g. "(1 3)(2 4)"; fixed points are omitted and the identity prints as "()".
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n) : images_(n) {
    for (int i = 0; i < n; ++i) images_[i] = i;
  }

  // Throws tiled::error if images is not a bijection of {0,...,n-1}.
  static Permutation from_images(std::vector<int> images);
  // Parses 1-based cycle notation; elements separated by spaces or commas.
  static Permutation from_cycles(int n, const std::string& text);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Composition acting left to right on points: result(i) = (*this)(inner(i)).
  Permutation after(const Permutation& inner) const;

  // Nontrivial cycles, 0-based, each starting at its least element,
  // ordered by least element.
  std::vector<std::vector<int>> cycles() const;
  // Lengths of all cycles including fixed points.
  std::vector<int> cycle_lengths() const;
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

} // namespace tiled

#endif
