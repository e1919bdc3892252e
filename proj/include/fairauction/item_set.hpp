#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace fairauction {

/// A subset of the auction's resources, stored as a bitmask over resource
/// indices. Instances are limited to kMaxResources resources.
class ItemSet
{
public:
  static constexpr std::size_t kMaxResources = 64;

  constexpr ItemSet() = default;
  constexpr explicit ItemSet(std::uint64_t mask)
    : mask_(mask)
  {}
  ItemSet(std::initializer_list<std::size_t> indices)
  {
    for (auto i : indices)
    {
      insert(i);
    }
  }

  static constexpr ItemSet single(std::size_t index)
  {
    return ItemSet(std::uint64_t{1} << index);
  }
  /// All of the first `count` resources.
  static constexpr ItemSet first_n(std::size_t count)
  {
    return count >= 64 ? ItemSet(~std::uint64_t{0}) : ItemSet((std::uint64_t{1} << count) - 1);
  }

  constexpr std::uint64_t mask() const
  {
    return mask_;
  }
  constexpr bool empty() const
  {
    return mask_ == 0;
  }
  constexpr std::size_t size() const
  {
    return static_cast<std::size_t>(std::popcount(mask_));
  }
  constexpr bool contains(std::size_t index) const
  {
    return index < 64 && ((mask_ >> index) & 1U) != 0;
  }
  constexpr bool intersects(ItemSet other) const
  {
    return (mask_ & other.mask_) != 0;
  }
  constexpr bool is_subset_of(ItemSet other) const
  {
    return (mask_ & ~other.mask_) == 0;
  }
  /// Index of the lowest resource. Undefined on an empty set.
  constexpr std::size_t lowest() const
  {
    return static_cast<std::size_t>(std::countr_zero(mask_));
  }

  void insert(std::size_t index)
  {
    mask_ |= std::uint64_t{1} << index;
  }

  std::vector<std::size_t> indices() const;

  friend constexpr ItemSet operator|(ItemSet a, ItemSet b)
  {
    return ItemSet(a.mask_ | b.mask_);
  }
  friend constexpr ItemSet operator&(ItemSet a, ItemSet b)
  {
    return ItemSet(a.mask_ & b.mask_);
  }
  friend constexpr ItemSet operator-(ItemSet a, ItemSet b)
  {
    return ItemSet(a.mask_ & ~b.mask_);
  }

  friend constexpr bool operator==(ItemSet a, ItemSet b) = default;

  /// Lexicographic order of the ascending index sequences, so {0,2} < {1}
  /// and {0} < {0,1}.
  friend std::strong_ordering operator<=>(ItemSet a, ItemSet b);

private:
  std::uint64_t mask_ = 0;
};

}  // namespace fairauction
