#include "uninorm/kernels.hpp"

namespace uninorm::kernels {
namespace {

std::optional<Pair> noncommutative(const std::uint8_t* t, const std::uint8_t* tt, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t[a * kStride + b] != tt[a * kStride + b]) {
        return Pair{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Triple> nonassociative(const std::uint8_t* t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    const std::uint8_t* row_a = t + a * kStride;
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint8_t* row_ab = t + row_a[b] * kStride;
      const std::uint8_t* row_b = t + b * kStride;
      for (std::size_t c = 0; c < n; ++c) {
        if (row_ab[c] != row_a[row_b[c]]) {
          return Triple{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Triple> nonmonotone(const std::uint8_t* t, std::size_t n, const std::uint8_t* order,
                                  const std::uint8_t* leq) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !order[a * kStride + b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!leq[t[a * kStride + c] * kStride + t[b * kStride + c]]) {
          return Triple{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)};
        }
      }
    }
  }
  return std::nullopt;
}

constexpr KernelSet kScalar{"scalar", noncommutative, nonassociative, nonmonotone};

}  // namespace

const KernelSet& scalar() { return kScalar; }

}  // namespace uninorm::kernels
