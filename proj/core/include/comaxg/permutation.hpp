#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace comaxg {

/// Bijection on {0, ..., degree-1}, stored as its image array.
class Permutation {
 public:
  /// Throws BadParameter unless `images` is a bijection on 0..size-1.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  /// Points not mentioned are fixed. Throws BadParameter on repeated or
  /// out-of-range points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  /// Composition that applies *this first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  bool is_identity() const noexcept;
  bool is_even() const;

  /// Cycle notation without fixed points, e.g. "(0 1 2)(3 4)"; "()" for identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace comaxg
