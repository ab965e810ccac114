#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace strandtrace {

/// An integer partition stored as a weakly decreasing list of positive parts.
///
/// Construction sorts the parts, so `Partition{1, 3, 1}` and `Partition{3, 1, 1}`
/// are the same value. Zero or negative parts are rejected with InvalidInput.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based part access, zero-padded past the length.
  int part(int i) const noexcept;

  /// Number of parts equal to `value`.
  int multiplicity(int value) const noexcept;

  /// Sorted concatenation (the index of a product of multiplicative basis elements).
  Partition merged(const Partition& other) const;

  std::string to_string() const;  // "(3,1,1)", "()" for the empty partition

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Plain lexicographic order on the part sequences.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Order used for serialization: by size, then comparing part sequences read
/// from the smallest part upward. Degree 4 comes out as 1111, 211, 31, 22, 4.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const noexcept;
};

/// All partitions of n, in canonical order.
std::vector<Partition> partitions_of(int n);

}  // namespace strandtrace
