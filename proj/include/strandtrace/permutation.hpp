#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "strandtrace/partition.hpp"

namespace strandtrace {

/// A bijection of [n] stored in one-line notation with 1-based images.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `images` is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const noexcept { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  /// (this ∘ other)(k) = this(other(k)).
  Permutation after(const Permutation& other) const;
  Permutation inverse() const;

  std::string one_line() const;  // "1324"; comma separated once n > 9

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Cycle lengths, sorted decreasingly.
Partition cycle_type(const Permutation& sigma);

/// Same, on a raw 0-based image table (hot path for enumerations).
Partition cycle_type_of_images(const std::vector<std::uint8_t>& zero_based);

}  // namespace strandtrace
