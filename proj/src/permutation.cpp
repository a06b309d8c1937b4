#include "tiled/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tiled/errors.hpp"

namespace tiled {

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v])
      throw error(errc::dimension_mismatch,
                  "image list is not a permutation of {0,...,n-1}");
    seen[v] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::string& text) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  std::vector<char> moved(n, 0);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw error(errc::dimension_mismatch,
                  "cycle notation must consist of parenthesized cycles");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
      if (pos >= text.size())
        throw error(errc::dimension_mismatch, "unterminated cycle");
      if (text[pos] == ')') { ++pos; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw error(errc::dimension_mismatch, "unexpected character in cycle");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > n)
        throw error(errc::dimension_mismatch, "cycle entry out of range");
      if (moved[v - 1])
        throw error(errc::dimension_mismatch, "repeated entry in cycles");
      moved[v - 1] = 1;
      cycle.push_back(v - 1);
    }
    for (size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return from_images(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::after(const Permutation& inner) const {
  std::vector<int> out(images_.size());
  for (int i = 0; i < size(); ++i) out[i] = images_[inner(i)];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i] || images_[i] == i) { seen[i] = 1; continue; }
    std::vector<int> cycle;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cycle.push_back(j);
      j = images_[j];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      ++len;
      j = images_[j];
    }
    out.push_back(len);
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

} // namespace tiled
