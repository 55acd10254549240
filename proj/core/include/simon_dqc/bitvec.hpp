// Copyright 2026 The simon-dqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace simon_dqc {

/**
 * Fixed-length bit string over GF(2).
 *
 * Bit order is big-endian throughout: bit 0 is the leftmost character of the
 * text form and the most significant bit of the integer value, so
 * to_int() == sum bits[i] * 2^(L-1-i). The length is fixed at construction;
 * binary operations require equal lengths and throw UsageError otherwise.
 *
 * Bits are packed MSB-first into 64-bit words; unused tail bits of the last
 * word are kept zero so equality and hashing are plain word comparisons.
 */
class BitVec {
  public:
    /// Zero vector of length 0.
    BitVec() = default;

    /// Zero vector of the given length.
    explicit BitVec(std::size_t length);

    static BitVec from_string(std::string_view bits);
    static BitVec from_int(std::uint64_t value, std::size_t length);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    int bit(std::size_t i) const;
    void set_bit(std::size_t i, int value);
    void flip_bit(std::size_t i);

    bool is_zero() const;
    std::size_t popcount() const;

    /// Big-endian integer value; defined for lengths up to 64 bits.
    std::uint64_t to_int() const;

    std::string to_string() const;

    /// Componentwise sum mod 2.
    BitVec operator^(const BitVec& other) const;
    BitVec& operator^=(const BitVec& other);

    bool operator==(const BitVec& other) const;
    bool operator!=(const BitVec& other) const { return !(*this == other); }

    /// Lexicographic order on the bit strings (shorter prefix sorts first).
    bool operator<(const BitVec& other) const;

    /// Bits [pos, pos + width).
    BitVec slice(std::size_t pos, std::size_t width) const;

    /// XORs `value` into bits [pos, pos + value.size()).
    void xor_range(std::size_t pos, const BitVec& value);

    /// Overwrites bits [pos, pos + value.size()) with `value`.
    void set_range(std::size_t pos, const BitVec& value);

    std::size_t hash() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;

    void clear_tail();
};

/// Inner product mod 2 of two equal-length vectors.
int dot(const BitVec& a, const BitVec& b);

/// a followed by b.
BitVec concat(const BitVec& a, const BitVec& b);

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace simon_dqc
