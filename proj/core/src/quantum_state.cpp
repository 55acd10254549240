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

#include "simon_dqc/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "simon_dqc/errors.hpp"
#include "simon_dqc/rng.hpp"

namespace simon_dqc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Amplitudes below this are treated as exact cancellations. True amplitudes
// in these circuits are never smaller than 2^-2n >= 2^-28.
constexpr double kPruneThreshold = 1e-15;

std::uint64_t dense_size(std::size_t width) {
    return std::uint64_t{1} << width;
}

// Dense indices use the same big-endian convention as BitVec: segment bits
// at offset o and width k live at integer bit positions W-o-k .. W-o-1.
std::uint64_t extract_field(std::uint64_t idx, std::size_t total, const Segment& seg) {
    std::uint64_t mask = (seg.width == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << seg.width) - 1);
    return (idx >> (total - seg.offset - seg.width)) & mask;
}

std::vector<const Segment*> resolve_segments(const RegisterLayout& layout,
                                             const std::vector<std::string>& names) {
    std::vector<const Segment*> segs;
    segs.reserve(names.size());
    for (const std::string& name : names) {
        segs.push_back(&layout.segment(name));
    }
    return segs;
}

}  // namespace

QuantumState::QuantumState(RegisterLayout layout, Repr repr)
    : layout_(std::move(layout)), repr_(repr) {
    if (repr_ == Repr::Dense) {
        if (layout_.total_width() > kDenseWidthCap) {
            throw UsageError("dense representation caps total width at 24 qubits");
        }
        dense_.assign(dense_size(layout_.total_width()), Amplitude{0.0, 0.0});
    }
}

QuantumState QuantumState::zero_state(RegisterLayout layout) {
    Repr repr = layout.total_width() <= kDenseDefaultMax ? Repr::Dense : Repr::Sparse;
    return zero_state(std::move(layout), repr);
}

QuantumState QuantumState::zero_state(RegisterLayout layout, Repr repr) {
    QuantumState state(std::move(layout), repr);
    if (repr == Repr::Dense) {
        state.dense_[0] = Amplitude{1.0, 0.0};
    } else {
        state.sparse_.emplace(BitVec(state.layout_.total_width()), Amplitude{1.0, 0.0});
    }
    return state;
}

QuantumState QuantumState::basis_state(RegisterLayout layout, const BitVec& basis, Repr repr) {
    if (basis.size() != layout.total_width()) {
        throw UsageError("basis string width does not match the layout");
    }
    QuantumState state(std::move(layout), repr);
    if (repr == Repr::Dense) {
        state.dense_[basis.to_int()] = Amplitude{1.0, 0.0};
    } else {
        state.sparse_.emplace(basis, Amplitude{1.0, 0.0});
    }
    return state;
}

Amplitude QuantumState::amplitude(const BitVec& basis) const {
    if (basis.size() != layout_.total_width()) {
        throw UsageError("basis string width does not match the layout");
    }
    if (repr_ == Repr::Dense) {
        return dense_[basis.to_int()];
    }
    auto it = sparse_.find(basis);
    return it == sparse_.end() ? Amplitude{0.0, 0.0} : it->second;
}

double QuantumState::norm() const {
    double sum = 0.0;
    if (repr_ == Repr::Dense) {
        for (const Amplitude& a : dense_) sum += std::norm(a);
    } else {
        for (const auto& [bits, a] : sparse_) sum += std::norm(a);
    }
    return std::sqrt(sum);
}

std::size_t QuantumState::support_size() const {
    if (repr_ == Repr::Sparse) return sparse_.size();
    std::size_t count = 0;
    for (const Amplitude& a : dense_) {
        if (a != Amplitude{0.0, 0.0}) ++count;
    }
    return count;
}

void QuantumState::for_each(const std::function<void(const BitVec&, Amplitude)>& visit) const {
    if (repr_ == Repr::Dense) {
        std::size_t width = layout_.total_width();
        for (std::uint64_t idx = 0; idx < dense_.size(); ++idx) {
            if (dense_[idx] != Amplitude{0.0, 0.0}) {
                visit(BitVec::from_int(idx, width), dense_[idx]);
            }
        }
    } else {
        for (const auto& [bits, a] : sparse_) visit(bits, a);
    }
}

std::string QuantumState::dump() const {
    std::vector<std::pair<BitVec, Amplitude>> entries;
    for_each([&entries](const BitVec& bits, Amplitude a) { entries.emplace_back(bits, a); });
    std::sort(entries.begin(), entries.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    std::string out;
    char buf[128];
    for (const auto& [bits, a] : entries) {
        std::snprintf(buf, sizeof(buf), " %.12g %.12g\n", a.real(), a.imag());
        out += bits.to_string();
        out += buf;
    }
    return out;
}

void QuantumState::add_amplitude(const BitVec& basis, Amplitude a) {
    if (basis.size() != layout_.total_width()) {
        throw UsageError("basis string width does not match the layout");
    }
    if (repr_ == Repr::Dense) {
        dense_[basis.to_int()] += a;
    } else {
        sparse_[basis] += a;
    }
}

QuantumState hadamard_layer(QuantumState state, const std::vector<std::string>& segment_names) {
    auto segs = resolve_segments(state.layout(), segment_names);
    std::vector<std::size_t> positions;
    for (const Segment* seg : segs) {
        for (std::size_t i = 0; i < seg->width; ++i) positions.push_back(seg->offset + i);
    }

    std::size_t total = state.layout().total_width();
    if (state.repr_ == QuantumState::Repr::Dense) {
        for (std::size_t pos : positions) {
            std::uint64_t stride = std::uint64_t{1} << (total - 1 - pos);
            for (std::uint64_t base = 0; base < state.dense_.size(); base += 2 * stride) {
                for (std::uint64_t lo = base; lo < base + stride; ++lo) {
                    Amplitude a = state.dense_[lo];
                    Amplitude b = state.dense_[lo + stride];
                    state.dense_[lo] = (a + b) * kInvSqrt2;
                    state.dense_[lo + stride] = (a - b) * kInvSqrt2;
                }
            }
        }
        return state;
    }

    for (std::size_t pos : positions) {
        std::unordered_map<BitVec, Amplitude, BitVecHash> next;
        next.reserve(state.sparse_.size() * 2);
        for (const auto& [bits, a] : state.sparse_) {
            Amplitude half = a * kInvSqrt2;
            BitVec lo = bits;
            lo.set_bit(pos, 0);
            BitVec hi = lo;
            hi.set_bit(pos, 1);
            next[lo] += half;
            next[hi] += bits.bit(pos) ? -half : half;
        }
        // Equal-magnitude opposite-sign contributions cancel exactly, so the
        // threshold only sheds float dust.
        for (auto it = next.begin(); it != next.end();) {
            if (std::abs(it->second.real()) <= kPruneThreshold &&
                std::abs(it->second.imag()) <= kPruneThreshold) {
                it = next.erase(it);
            } else {
                ++it;
            }
        }
        state.sparse_ = std::move(next);
    }
    return state;
}

QuantumState apply_basis_xor(QuantumState state, const std::function<BitVec(const BitVec&)>& xor_mask) {
    std::size_t total = state.layout().total_width();
    if (state.repr_ == QuantumState::Repr::Dense) {
        std::vector<Amplitude> next(state.dense_.size(), Amplitude{0.0, 0.0});
        for (std::uint64_t idx = 0; idx < state.dense_.size(); ++idx) {
            if (state.dense_[idx] == Amplitude{0.0, 0.0}) continue;
            BitVec key = BitVec::from_int(idx, total);
            std::uint64_t target = idx ^ xor_mask(key).to_int();
            next[target] += state.dense_[idx];
        }
        state.dense_ = std::move(next);
        return state;
    }
    std::unordered_map<BitVec, Amplitude, BitVecHash> next;
    next.reserve(state.sparse_.size());
    for (const auto& [bits, a] : state.sparse_) {
        BitVec key = bits;
        key ^= xor_mask(bits);
        next[std::move(key)] += a;
    }
    state.sparse_ = std::move(next);
    return state;
}

QuantumState apply_suboracle(QuantumState state, const SubfunctionFamily& fam, const BitVec& w,
                             const std::string& target_segment) {
    const RegisterLayout& layout = state.layout();
    const Segment& control = layout.segment("control");
    const Segment& target = layout.segment(target_segment);
    if (control.width != static_cast<std::size_t>(fam.n() - fam.t())) {
        throw UsageError("control segment width must be n - t");
    }
    if (target.width != static_cast<std::size_t>(fam.m())) {
        throw UsageError("suboracle target segment width must be m");
    }
    std::size_t total = layout.total_width();
    std::uint64_t w_index = w.to_int();
    // Plain offsets, captured by value: the state is moved away below.
    Segment control_seg = control;
    Segment target_seg = target;
    return apply_basis_xor(std::move(state),
                           [&fam, w_index, total, control_seg, target_seg](const BitVec& key) {
        std::uint64_t u = key.slice(control_seg.offset, control_seg.width).to_int();
        BitVec mask(total);
        mask.xor_range(target_seg.offset, fam.eval_at(w_index, u));
        return mask;
    });
}

QuantumState apply_oracle(QuantumState state, const SimonFunction& f,
                          const std::string& control_segment, const std::string& target_segment) {
    const RegisterLayout& layout = state.layout();
    const Segment& control = layout.segment(control_segment);
    const Segment& target = layout.segment(target_segment);
    if (control.width != static_cast<std::size_t>(f.n()) ||
        target.width != static_cast<std::size_t>(f.m())) {
        throw UsageError("oracle segment widths must match the function");
    }
    std::size_t total = layout.total_width();
    Segment control_seg = control;
    Segment target_seg = target;
    return apply_basis_xor(std::move(state),
                           [&f, total, control_seg, target_seg](const BitVec& key) {
        std::uint64_t x = key.slice(control_seg.offset, control_seg.width).to_int();
        BitVec mask(total);
        mask.xor_range(target_seg.offset, f.value_at(x));
        return mask;
    });
}

QuantumState apply_V(QuantumState state) {
    const RegisterLayout& layout = state.layout();
    if (!layout.has("index") || !layout.has("target")) {
        throw UsageError("layout has no index/target segments for the indexed combiner");
    }
    Segment index = layout.segment("index");
    Segment target = layout.segment("target");
    std::uint64_t blocks = std::uint64_t{1} << index.width;
    std::vector<Segment> value_blocks;
    for (std::uint64_t i = 0; i < blocks; ++i) {
        value_blocks.push_back(layout.segment(RegisterLayout::value_block_name(i)));
    }
    std::size_t total = layout.total_width();
    return apply_basis_xor(std::move(state),
                           [index, target, value_blocks, total](const BitVec& key) {
        std::uint64_t i = key.slice(index.offset, index.width).to_int();
        const Segment& block = value_blocks[i];
        BitVec mask(total);
        mask.xor_range(target.offset, key.slice(block.offset, block.width));
        return mask;
    });
}

QuantumState apply_usort(QuantumState state) {
    const RegisterLayout& layout = state.layout();
    if (!layout.has("sort_target")) {
        throw UsageError("layout has no sort_target segment for the sorting combiner");
    }
    Segment target = layout.segment("sort_target");
    std::vector<Segment> value_blocks;
    for (std::size_t i = 0; layout.has(RegisterLayout::value_block_name(i)); ++i) {
        value_blocks.push_back(layout.segment(RegisterLayout::value_block_name(i)));
    }
    if (value_blocks.empty() || target.width != value_blocks.size() * value_blocks[0].width) {
        throw UsageError("sort_target width must equal the combined value-block width");
    }
    std::size_t total = layout.total_width();
    return apply_basis_xor(std::move(state), [target, value_blocks, total](const BitVec& key) {
        std::vector<BitVec> values;
        values.reserve(value_blocks.size());
        for (const Segment& block : value_blocks) {
            values.push_back(key.slice(block.offset, block.width));
        }
        std::stable_sort(values.begin(), values.end());
        BitVec mask(total);
        std::size_t pos = target.offset;
        for (const BitVec& v : values) {
            mask.xor_range(pos, v);
            pos += v.size();
        }
        return mask;
    });
}

std::vector<MeasurementOutcome> measure_distribution(const QuantumState& state,
                                                     const std::vector<std::string>& segment_names) {
    auto segs = resolve_segments(state.layout(), segment_names);
    std::size_t out_width = 0;
    for (const Segment* seg : segs) out_width += seg->width;

    std::map<BitVec, double> grouped;
    std::size_t total = state.layout().total_width();
    if (state.repr() == QuantumState::Repr::Dense && out_width <= 64) {
        std::map<std::uint64_t, double> fast;
        state.for_each([&](const BitVec& bits, Amplitude a) {
            std::uint64_t key = 0;
            std::uint64_t idx = bits.to_int();
            for (const Segment* seg : segs) {
                key = (key << seg->width) | extract_field(idx, total, *seg);
            }
            fast[key] += std::norm(a);
        });
        std::vector<MeasurementOutcome> outcomes;
        outcomes.reserve(fast.size());
        for (const auto& [key, p] : fast) {
            outcomes.push_back({BitVec::from_int(key, out_width), p});
        }
        return outcomes;
    }

    state.for_each([&](const BitVec& bits, Amplitude a) {
        BitVec key(out_width);
        std::size_t pos = 0;
        for (const Segment* seg : segs) {
            key.xor_range(pos, bits.slice(seg->offset, seg->width));
            pos += seg->width;
        }
        grouped[key] += std::norm(a);
    });
    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(grouped.size());
    for (const auto& [key, p] : grouped) {
        outcomes.push_back({key, p});
    }
    return outcomes;
}

double probability_of(const std::vector<MeasurementOutcome>& distribution, const BitVec& bits) {
    for (const MeasurementOutcome& outcome : distribution) {
        if (outcome.bits == bits) return outcome.probability;
    }
    return 0.0;
}

BitVec sample(const QuantumState& state, const std::vector<std::string>& segment_names,
              std::mt19937_64& rng) {
    auto distribution = measure_distribution(state, segment_names);
    double u = uniform_unit(rng);
    double cdf = 0.0;
    for (const MeasurementOutcome& outcome : distribution) {
        cdf += outcome.probability;
        if (u < cdf) return outcome.bits;
    }
    return distribution.back().bits;
}

BitVec sample(const QuantumState& state, const std::vector<std::string>& segment_names,
              std::uint64_t seed) {
    auto rng = make_rng(seed);
    return sample(state, segment_names, rng);
}

double max_amplitude_difference(const QuantumState& a, const QuantumState& b) {
    double worst = 0.0;
    a.for_each([&](const BitVec& bits, Amplitude amp) {
        worst = std::max(worst, std::abs(amp - b.amplitude(bits)));
    });
    b.for_each([&](const BitVec& bits, Amplitude amp) {
        worst = std::max(worst, std::abs(amp - a.amplitude(bits)));
    });
    return worst;
}

}  // namespace simon_dqc
