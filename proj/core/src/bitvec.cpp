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

#include "simon_dqc/bitvec.hpp"

#include <bit>

#include "simon_dqc/errors.hpp"

namespace simon_dqc {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t len) {
    return (len + kWordBits - 1) / kWordBits;
}

// Mask selecting bit i within its word (MSB-first packing).
std::uint64_t bit_mask(std::size_t i) {
    return std::uint64_t{1} << (kWordBits - 1 - (i % kWordBits));
}

}  // namespace

BitVec::BitVec(std::size_t length) : len_(length), words_(word_count(length), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char c = bits[i];
        if (c == '1') {
            v.words_[i / kWordBits] |= bit_mask(i);
        } else if (c != '0') {
            throw UsageError("BitVec text form must contain only '0' and '1'");
        }
    }
    return v;
}

BitVec BitVec::from_int(std::uint64_t value, std::size_t length) {
    if (length > kWordBits) {
        throw UsageError("from_int supports lengths up to 64 bits");
    }
    if (length < kWordBits && (value >> length) != 0) {
        throw UsageError("integer value does not fit in the requested length");
    }
    BitVec v(length);
    if (length > 0) {
        v.words_[0] = value << (kWordBits - length);
    }
    return v;
}

int BitVec::bit(std::size_t i) const {
    if (i >= len_) {
        throw UsageError("bit index out of range");
    }
    return (words_[i / kWordBits] & bit_mask(i)) != 0 ? 1 : 0;
}

void BitVec::set_bit(std::size_t i, int value) {
    if (i >= len_) {
        throw UsageError("bit index out of range");
    }
    if (value) {
        words_[i / kWordBits] |= bit_mask(i);
    } else {
        words_[i / kWordBits] &= ~bit_mask(i);
    }
}

void BitVec::flip_bit(std::size_t i) {
    if (i >= len_) {
        throw UsageError("bit index out of range");
    }
    words_[i / kWordBits] ^= bit_mask(i);
}

bool BitVec::is_zero() const {
    for (std::uint64_t w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::size_t BitVec::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::uint64_t BitVec::to_int() const {
    if (len_ > kWordBits) {
        throw UsageError("to_int supports lengths up to 64 bits");
    }
    if (len_ == 0) return 0;
    return words_[0] >> (kWordBits - len_);
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (words_[i / kWordBits] & bit_mask(i)) s[i] = '1';
    }
    return s;
}

BitVec BitVec::operator^(const BitVec& other) const {
    BitVec result = *this;
    result ^= other;
    return result;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (len_ != other.len_) {
        throw UsageError("BitVec length mismatch in xor");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

bool BitVec::operator==(const BitVec& other) const {
    return len_ == other.len_ && words_ == other.words_;
}

bool BitVec::operator<(const BitVec& other) const {
    // MSB-first packing makes word comparison agree with lexicographic
    // comparison of the padded bit strings.
    std::size_t common = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (words_[i] != other.words_[i]) return words_[i] < other.words_[i];
    }
    return len_ < other.len_;
}

BitVec BitVec::slice(std::size_t pos, std::size_t width) const {
    if (pos + width > len_) {
        throw UsageError("slice out of range");
    }
    BitVec out(width);
    std::size_t wi = pos / kWordBits;
    std::size_t sh = pos % kWordBits;
    for (std::size_t k = 0; k < out.words_.size(); ++k) {
        std::uint64_t w = 0;
        if (wi + k < words_.size()) {
            w = words_[wi + k] << sh;
            if (sh != 0 && wi + k + 1 < words_.size()) {
                w |= words_[wi + k + 1] >> (kWordBits - sh);
            }
        }
        out.words_[k] = w;
    }
    out.clear_tail();
    return out;
}

void BitVec::xor_range(std::size_t pos, const BitVec& value) {
    if (pos + value.len_ > len_) {
        throw UsageError("xor_range out of range");
    }
    std::size_t wi = pos / kWordBits;
    std::size_t sh = pos % kWordBits;
    for (std::size_t k = 0; k < value.words_.size(); ++k) {
        std::uint64_t w = value.words_[k];
        words_[wi + k] ^= w >> sh;
        if (sh != 0 && wi + k + 1 < words_.size()) {
            words_[wi + k + 1] ^= w << (kWordBits - sh);
        }
    }
    clear_tail();
}

void BitVec::set_range(std::size_t pos, const BitVec& value) {
    BitVec delta = slice(pos, value.size());
    delta ^= value;
    xor_range(pos, delta);
}

std::size_t BitVec::hash() const {
    // FNV-1a over the packed words plus the length.
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(len_);
    for (std::uint64_t w : words_) mix(w);
    return static_cast<std::size_t>(h);
}

void BitVec::clear_tail() {
    std::size_t used = len_ % kWordBits;
    if (used != 0 && !words_.empty()) {
        words_.back() &= ~std::uint64_t{0} << (kWordBits - used);
    }
}

int dot(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) {
        throw UsageError("BitVec length mismatch in dot");
    }
    std::uint64_t parity = 0;
    for (std::size_t i = 0; i < a.words().size(); ++i) {
        parity ^= std::uint64_t(std::popcount(a.words()[i] & b.words()[i]));
    }
    return static_cast<int>(parity & 1);
}

BitVec concat(const BitVec& a, const BitVec& b) {
    BitVec out(a.size() + b.size());
    out.xor_range(0, a);
    out.xor_range(a.size(), b);
    return out;
}

}  // namespace simon_dqc
