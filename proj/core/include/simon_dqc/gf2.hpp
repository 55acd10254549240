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

#include <optional>
#include <vector>

#include "simon_dqc/bitvec.hpp"

namespace simon_dqc {

/**
 * Incremental GF(2) row basis in reduced row-echelon form.
 *
 * Vectors are inserted one at a time; each insertion reduces the incoming
 * vector against the stored rows and, when it is independent, re-reduces the
 * stored rows against it. The rank is always the number of stored rows, so a
 * sampling loop can stop the moment the rank it needs is reached.
 */
class Gf2Basis {
  public:
    explicit Gf2Basis(std::size_t width) : width_(width) {}

    /// Returns true iff z was independent of the current rows.
    bool insert(BitVec z);

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<BitVec>& rows() const { return rows_; }

    /**
     * Recovers the hidden string annihilated by every stored row.
     *
     * rank == width-1: the unique nonzero vector orthogonal to all rows.
     * rank == width:   the zero vector (only the degenerate solution is left).
     * rank <  width-1: the system is underdetermined; returns nullopt.
     */
    std::optional<BitVec> solve_hidden() const;

  private:
    std::size_t width_;
    std::vector<BitVec> rows_;    // sorted by pivot position, ascending
    std::vector<std::size_t> pivots_;
};

}  // namespace simon_dqc
