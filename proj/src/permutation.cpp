#include "strandtrace/permutation.hpp"

#include <algorithm>

#include "strandtrace/error.hpp"

namespace strandtrace {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidInput("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) id[static_cast<std::size_t>(k)] = k + 1;
  return Permutation(std::move(id));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw InvalidInput("composing permutations of different sizes");
  std::vector<int> out(images_.size());
  for (int k = 1; k <= size(); ++k) out[static_cast<std::size_t>(k - 1)] = (*this)(other(k));
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int k = 1; k <= size(); ++k) out[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return Permutation(std::move(out));
}

std::string Permutation::one_line() const {
  std::string s;
  const bool wide = size() > 9;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(images_[i]);
  }
  return s;
}

Partition cycle_type_of_images(const std::vector<std::uint8_t>& zero_based) {
  const std::size_t n = zero_based.size();
  std::vector<bool> seen(n, false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = zero_based[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

Partition cycle_type(const Permutation& sigma) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(sigma.size()));
  for (int k = 1; k <= sigma.size(); ++k) img[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>(sigma(k) - 1);
  return cycle_type_of_images(img);
}

}  // namespace strandtrace
