#include "fairauction/item_set.hpp"

namespace fairauction {

std::vector<std::size_t> ItemSet::indices() const
{
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1)
  {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

std::strong_ordering operator<=>(ItemSet a, ItemSet b)
{
  std::uint64_t x = a.mask_;
  std::uint64_t y = b.mask_;
  while (x != 0 && y != 0)
  {
    auto const lx = std::countr_zero(x);
    auto const ly = std::countr_zero(y);
    if (lx != ly)
    {
      return lx < ly ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    x &= x - 1;
    y &= y - 1;
  }
  if (x == 0 && y == 0)
  {
    return std::strong_ordering::equal;
  }
  // the exhausted sequence is a prefix of the other
  return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace fairauction
