// Copyright 2026 The bubblelat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BUBBLE_BITSET_HPP
#define BUBBLE_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bubble {

using Word64 = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline bool bit_test(std::span<const Word64> row, std::size_t i) {
  return (row[i >> 6] >> (i & 63)) & 1u;
}

inline std::size_t bit_count(std::span<const Word64> row) {
  std::size_t c = 0;
  for (Word64 w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

// a ⊆ b
inline bool bit_subset(std::span<const Word64> a, std::span<const Word64> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

inline bool bit_disjoint(std::span<const Word64> a, std::span<const Word64> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

template <typename F>
void for_each_bit(std::span<const Word64> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word64 bits = row[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      f(w * 64 + static_cast<std::size_t>(b));
      bits &= bits - 1;
    }
  }
}

/// Square matrix of bits stored row-major, one padded block of words per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), stride_(words_for(n)), data_(n * stride_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t stride() const { return stride_; }

  bool test(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c) { data_[r * stride_ + (c >> 6)] |= Word64{1} << (c & 63); }
  void reset(std::size_t r, std::size_t c) {
    data_[r * stride_ + (c >> 6)] &= ~(Word64{1} << (c & 63));
  }

  std::span<const Word64> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word64> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  void or_row(std::size_t dst, std::size_t src) {
    Word64* d = data_.data() + dst * stride_;
    const Word64* s = data_.data() + src * stride_;
    for (std::size_t i = 0; i < stride_; ++i) d[i] |= s[i];
  }

  BitMatrix transposed() const {
    BitMatrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for_each_bit(row(r), [&](std::size_t c) { t.set(c, r); });
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word64> data_;
};

}  // namespace bubble

#endif  // BUBBLE_BITSET_HPP
