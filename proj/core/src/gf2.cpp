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

#include "simon_dqc/gf2.hpp"

#include <algorithm>

#include "simon_dqc/errors.hpp"

namespace simon_dqc {

namespace {

std::size_t leading_bit(const BitVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.bit(i)) return i;
    }
    return v.size();
}

}  // namespace

bool Gf2Basis::insert(BitVec z) {
    if (z.size() != width_) {
        throw UsageError("basis width mismatch");
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (z.bit(pivots_[r])) z ^= rows_[r];
    }
    std::size_t pivot = leading_bit(z);
    if (pivot == width_) {
        return false;
    }
    // Keep the basis fully reduced: clear the new pivot column everywhere.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].bit(pivot)) rows_[r] ^= z;
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(z));
    return true;
}

std::optional<BitVec> Gf2Basis::solve_hidden() const {
    if (rank() + 1 < width_) {
        return std::nullopt;
    }
    if (rank() == width_) {
        return BitVec(width_);
    }
    // Exactly one column is pivot-free; setting it to 1 determines the rest.
    std::vector<bool> is_pivot(width_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::size_t free_col = width_;
    for (std::size_t i = 0; i < width_; ++i) {
        if (!is_pivot[i]) {
            free_col = i;
            break;
        }
    }
    BitVec s(width_);
    s.set_bit(free_col, 1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        // row . s = s[pivot] + row[free_col] must be 0.
        s.set_bit(pivots_[r], rows_[r].bit(free_col));
    }
    return s;
}

}  // namespace simon_dqc
