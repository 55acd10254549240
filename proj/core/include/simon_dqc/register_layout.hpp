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
#include <string>
#include <vector>

namespace simon_dqc {

struct Segment {
    std::string name;
    std::size_t width = 0;
    std::size_t offset = 0;  // big-endian bit offset within the register
};

/**
 * Named, ordered qubit segments. Offsets are contiguous in declaration
 * order; segment 0 holds the most significant bits of a basis string.
 */
class RegisterLayout {
  public:
    RegisterLayout() = default;
    explicit RegisterLayout(std::vector<Segment> segments);

    std::size_t total_width() const { return total_width_; }
    const std::vector<Segment>& segments() const { return segments_; }

    bool has(const std::string& name) const;
    const Segment& segment(const std::string& name) const;

    /// Name of the i-th value block.
    static std::string value_block_name(std::size_t i);

    /// Circuit layout of the indexed-combiner run:
    /// control (n-t) | index (t) | 2^t value blocks (m each) | target (m).
    static RegisterLayout improved(int n, int t, int m);

    /// Circuit layout of the sorting-combiner run:
    /// control (n-t) | 2^t value blocks (m each) | sort_target (2^t * m).
    static RegisterLayout baseline(int n, int t, int m);

    /// Centralized circuit layout: input (n) | output (m).
    static RegisterLayout classic(int n, int m);

  private:
    std::vector<Segment> segments_;
    std::size_t total_width_ = 0;
};

}  // namespace simon_dqc
