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

#include "simon_dqc/register_layout.hpp"

#include "simon_dqc/errors.hpp"

namespace simon_dqc {

namespace {

void check_split_params(int n, int t, int m) {
    if (n < 2) throw ParameterError("n must be at least 2");
    if (t < 1 || t >= n) throw ParameterError("t must satisfy 1 <= t < n");
    if (m < 1) throw ParameterError("m must be at least 1");
}

}  // namespace

RegisterLayout::RegisterLayout(std::vector<Segment> segments) : segments_(std::move(segments)) {
    std::size_t offset = 0;
    for (Segment& seg : segments_) {
        if (seg.width == 0) throw UsageError("segment width must be nonzero");
        for (const Segment& other : segments_) {
            if (&other != &seg && other.name == seg.name) {
                throw UsageError("duplicate segment name: " + seg.name);
            }
        }
        seg.offset = offset;
        offset += seg.width;
    }
    total_width_ = offset;
}

bool RegisterLayout::has(const std::string& name) const {
    for (const Segment& seg : segments_) {
        if (seg.name == name) return true;
    }
    return false;
}

const Segment& RegisterLayout::segment(const std::string& name) const {
    for (const Segment& seg : segments_) {
        if (seg.name == name) return seg;
    }
    throw UsageError("unknown register segment: " + name);
}

std::string RegisterLayout::value_block_name(std::size_t i) {
    return "value" + std::to_string(i);
}

RegisterLayout RegisterLayout::improved(int n, int t, int m) {
    check_split_params(n, t, m);
    std::vector<Segment> segs;
    segs.push_back({"control", static_cast<std::size_t>(n - t)});
    segs.push_back({"index", static_cast<std::size_t>(t)});
    std::size_t blocks = std::size_t{1} << t;
    for (std::size_t i = 0; i < blocks; ++i) {
        segs.push_back({value_block_name(i), static_cast<std::size_t>(m)});
    }
    segs.push_back({"target", static_cast<std::size_t>(m)});
    return RegisterLayout(std::move(segs));
}

RegisterLayout RegisterLayout::baseline(int n, int t, int m) {
    check_split_params(n, t, m);
    std::vector<Segment> segs;
    segs.push_back({"control", static_cast<std::size_t>(n - t)});
    std::size_t blocks = std::size_t{1} << t;
    for (std::size_t i = 0; i < blocks; ++i) {
        segs.push_back({value_block_name(i), static_cast<std::size_t>(m)});
    }
    segs.push_back({"sort_target", blocks * static_cast<std::size_t>(m)});
    return RegisterLayout(std::move(segs));
}

RegisterLayout RegisterLayout::classic(int n, int m) {
    if (n < 1) throw ParameterError("n must be at least 1");
    if (m < 1) throw ParameterError("m must be at least 1");
    std::vector<Segment> segs;
    segs.push_back({"input", static_cast<std::size_t>(n)});
    segs.push_back({"output", static_cast<std::size_t>(m)});
    return RegisterLayout(std::move(segs));
}

}  // namespace simon_dqc
