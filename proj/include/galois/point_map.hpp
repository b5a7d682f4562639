#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "galois/errors.hpp"
#include "galois/subset.hpp"

namespace galois {

// A total function between two indexed universes.
struct PointMap {
  int from_n = 0;
  int to_n = 0;
  std::vector<int> image;  // image[x] < to_n for all x < from_n

  PointMap() = default;
  PointMap(int from_n_, int to_n_, std::vector<int> image_)
      : from_n(from_n_), to_n(to_n_), image(std::move(image_)) {
    if (static_cast<int>(image.size()) != from_n)
      throw arity_error("point map image length does not match source universe");
    for (int v : image)
      if (v < 0 || v >= to_n)
        throw arity_error("point map target index out of range");
  }

  static PointMap identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return PointMap(n, n, std::move(img));
  }

  int operator()(int x) const { return image[static_cast<std::size_t>(x)]; }

  // Forward image of a subset of the source, as a mask over the target.
  std::uint64_t forward(std::uint64_t a) const {
    std::uint64_t r = 0;
    for (int x = 0; x < from_n; ++x)
      if ((a >> x) & 1u) r |= std::uint64_t{1} << image[static_cast<std::size_t>(x)];
    return r;
  }

  // Preimage of a subset of the target.
  std::uint64_t preimage(std::uint64_t b) const {
    std::uint64_t r = 0;
    for (int x = 0; x < from_n; ++x)
      if ((b >> image[static_cast<std::size_t>(x)]) & 1u) r |= std::uint64_t{1} << x;
    return r;
  }

  bool injective() const {
    std::uint64_t seen = 0;
    for (int x = 0; x < from_n; ++x) {
      std::uint64_t bit = std::uint64_t{1} << image[static_cast<std::size_t>(x)];
      if (seen & bit) return false;
      seen |= bit;
    }
    return true;
  }

  bool surjective() const {
    return forward(Subset::mask_of(from_n)) == Subset::mask_of(to_n);
  }

  friend bool operator==(const PointMap& a, const PointMap& b) = default;
};

}  // namespace galois
