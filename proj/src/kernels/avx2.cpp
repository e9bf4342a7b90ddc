#include <immintrin.h>

#include <bit>

#include "uninorm/kernels.hpp"

namespace uninorm::kernels {
namespace {

std::uint32_t lane_mask(std::size_t valid) {
  return valid >= 32 ? 0xFFFFFFFFu : (std::uint32_t{1} << valid) - 1;
}

std::optional<Pair> noncommutative(const std::uint8_t* t, const std::uint8_t* tt, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c0 = 0; c0 < n; c0 += 32) {
      __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + a * kStride + c0));
      __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(tt + a * kStride + c0));
      std::uint32_t diff = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, y)));
      diff &= lane_mask(n - c0);
      if (diff != 0) {
        return Pair{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(c0 + std::countr_zero(diff))};
      }
    }
  }
  return std::nullopt;
}

// 64-entry byte lookup: four in-lane shuffles selected by the two high index bits.
struct Lut64 {
  __m256i part[4];

  explicit Lut64(const std::uint8_t* row) {
    for (int i = 0; i < 4; ++i) {
      part[i] = _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(row + 16 * i)));
    }
  }

  __m256i operator()(__m256i idx) const {
    const __m256i low = _mm256_and_si256(idx, _mm256_set1_epi8(0x0F));
    const __m256i high = _mm256_and_si256(_mm256_srli_epi16(idx, 4), _mm256_set1_epi8(0x0F));
    __m256i r = _mm256_shuffle_epi8(part[0], low);
    r = _mm256_blendv_epi8(r, _mm256_shuffle_epi8(part[1], low), _mm256_cmpeq_epi8(high, _mm256_set1_epi8(1)));
    r = _mm256_blendv_epi8(r, _mm256_shuffle_epi8(part[2], low), _mm256_cmpeq_epi8(high, _mm256_set1_epi8(2)));
    r = _mm256_blendv_epi8(r, _mm256_shuffle_epi8(part[3], low), _mm256_cmpeq_epi8(high, _mm256_set1_epi8(3)));
    return r;
  }
};

std::optional<Triple> nonassociative(const std::uint8_t* t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    const std::uint8_t* row_a = t + a * kStride;
    const Lut64 lut(row_a);
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint8_t* row_ab = t + row_a[b] * kStride;
      const std::uint8_t* row_b = t + b * kStride;
      for (std::size_t c0 = 0; c0 < n; c0 += 32) {
        __m256i bc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_b + c0));
        __m256i lhs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_ab + c0));
        __m256i rhs = lut(bc);
        std::uint32_t diff = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(lhs, rhs)));
        diff &= lane_mask(n - c0);
        if (diff != 0) {
          return Triple{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                        static_cast<std::uint8_t>(c0 + std::countr_zero(diff))};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Triple> nonmonotone(const std::uint8_t* t, std::size_t n, const std::uint8_t* order,
                                  const std::uint8_t* leq) {
  const int* base = reinterpret_cast<const int*>(leq);
  const __m256i low_byte = _mm256_set1_epi32(0xFF);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !order[a * kStride + b]) continue;
      for (std::size_t c0 = 0; c0 < n; c0 += 8) {
        __m256i va = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(t + a * kStride + c0)));
        __m256i vb = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(t + b * kStride + c0)));
        __m256i idx = _mm256_add_epi32(_mm256_slli_epi32(va, 6), vb);
        __m256i ok = _mm256_and_si256(_mm256_i32gather_epi32(base, idx, 1), low_byte);
        __m256i bad = _mm256_cmpeq_epi32(ok, _mm256_setzero_si256());
        std::uint32_t mask = static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(bad)));
        mask &= lane_mask(n - c0) & 0xFFu;
        if (mask != 0) {
          return Triple{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                        static_cast<std::uint8_t>(c0 + std::countr_zero(mask))};
        }
      }
    }
  }
  return std::nullopt;
}

constexpr KernelSet kAvx2{"avx2", noncommutative, nonassociative, nonmonotone};

}  // namespace

const KernelSet& avx2_impl() { return kAvx2; }

}  // namespace uninorm::kernels
