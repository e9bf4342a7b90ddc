#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

// Exhaustive axiom scans over byte tables. Every table uses a row stride of kStride; unused
// cells are zero. Each scan reports the lexicographically first violation so that all
// kernel variants agree on witnesses as well as on verdicts.
namespace uninorm::kernels {

inline constexpr std::size_t kStride = 64;

struct Pair {
  std::uint8_t a;
  std::uint8_t b;
  bool operator==(const Pair&) const = default;
};

struct Triple {
  std::uint8_t a;
  std::uint8_t b;
  std::uint8_t c;
  bool operator==(const Triple&) const = default;
};

struct KernelSet {
  const char* name;
  // First (a, b) with t[a][b] != t[b][a]; needs the transpose `tt` of `t`.
  std::optional<Pair> (*first_noncommutative)(const std::uint8_t* t, const std::uint8_t* tt, std::size_t n);
  // First (a, b, c) with t[t[a][b]][c] != t[a][t[b][c]]; every value must be < n.
  std::optional<Triple> (*first_nonassociative)(const std::uint8_t* t, std::size_t n);
  // First (a, b, c) with a != b, order[a][b] set and leq[t[a][c]][t[b][c]] clear. `order` is
  // indexed by row/column positions, `leq` by the values stored in `t` (both stride kStride);
  // `leq` must have kStride * kStride + 3 readable bytes.
  std::optional<Triple> (*first_nonmonotone)(const std::uint8_t* t, std::size_t n, const std::uint8_t* order,
                                             const std::uint8_t* leq);
};

const KernelSet& scalar();
// nullptr when the variant is not compiled in or the CPU lacks the instructions.
const KernelSet* avx2();
// Fastest available variant; UNINORM_KERNELS=scalar forces the reference kernels.
const KernelSet& active();

}  // namespace uninorm::kernels
