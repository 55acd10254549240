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

#include "simon_dqc/simon_function.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "simon_dqc/errors.hpp"
#include "simon_dqc/rng.hpp"

namespace simon_dqc {

namespace {

void check_params(int n, int m, const BitVec& s) {
    if (n < 1 || n > SimonFunction::kMaxInputBits) {
        throw ParameterError("n must be in [1, 14]");
    }
    if (m < 1 || m > 62) {
        throw ParameterError("m must be in [1, 62]");
    }
    if (static_cast<int>(s.size()) != n) {
        throw ParameterError("hidden string must have length n");
    }
    if (!s.is_zero() && m < n - 1) {
        throw ParameterError("m >= n-1 required: 2^(n-1) coset values must be distinct");
    }
    if (s.is_zero() && m < n) {
        throw ParameterError("m >= n required for s = 0: the table must be injective");
    }
}

// K distinct values sampled uniformly from [0, 2^m) without materializing the
// codomain: sparse Fisher-Yates over the virtual shuffled prefix.
std::vector<std::uint64_t> sample_distinct_values(std::uint64_t k, int m, std::mt19937_64& rng) {
    std::uint64_t domain = std::uint64_t{1} << m;
    std::unordered_map<std::uint64_t, std::uint64_t> moved;
    std::vector<std::uint64_t> picks;
    picks.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t j = i + uniform_below(rng, domain - i);
        auto it = moved.find(j);
        std::uint64_t value = (it == moved.end()) ? j : it->second;
        auto self = moved.find(i);
        moved[j] = (self == moved.end()) ? i : self->second;
        picks.push_back(value);
    }
    return picks;
}

}  // namespace

SimonFunction::SimonFunction(int n, int m, BitVec s, std::vector<BitVec> table)
    : n_(n), m_(m), s_(std::move(s)), table_(std::move(table)) {}

SimonFunction SimonFunction::generate(int n, int m, const BitVec& s, std::uint64_t seed) {
    check_params(n, m, s);
    std::uint64_t size = std::uint64_t{1} << n;
    std::uint64_t cosets = s.is_zero() ? size : size / 2;

    auto rng = make_rng(seed);
    std::vector<std::uint64_t> values = sample_distinct_values(cosets, m, rng);

    std::vector<BitVec> table(size);
    std::uint64_t s_int = s.to_int();
    std::uint64_t next_value = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
        if (!table[x].empty()) continue;  // partner already assigned
        BitVec v = BitVec::from_int(values[next_value++], static_cast<std::size_t>(m));
        table[x] = v;
        if (s_int != 0) table[x ^ s_int] = v;
    }
    return SimonFunction(n, m, BitVec(s), std::move(table));
}

SimonFunction SimonFunction::from_table(int n, int m, BitVec s, std::vector<BitVec> table) {
    if (n < 1 || n > kMaxInputBits) {
        throw ParameterError("n must be in [1, 14]");
    }
    if (static_cast<int>(s.size()) != n) {
        throw ParameterError("hidden string must have length n");
    }
    if (table.size() != (std::uint64_t{1} << n)) {
        throw ParameterError("table must have 2^n entries");
    }
    for (const BitVec& v : table) {
        if (static_cast<int>(v.size()) != m) {
            throw ParameterError("table entries must have length m");
        }
    }
    return SimonFunction(n, m, std::move(s), std::move(table));
}

const BitVec& SimonFunction::value(const BitVec& x) const {
    if (static_cast<int>(x.size()) != n_) {
        throw UsageError("input length mismatch");
    }
    return table_[x.to_int()];
}

bool SimonFunction::verify_promise() const {
    std::uint64_t size = std::uint64_t{1} << n_;
    std::uint64_t s_int = s_.to_int();
    // Group preimages by value; the promise holds iff every value's preimage
    // set is exactly one coset {x, x xor s}.
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> preimages;
    for (std::uint64_t x = 0; x < size; ++x) {
        preimages[table_[x].to_int()].push_back(x);
    }
    if (s_int == 0) {
        return preimages.size() == size;
    }
    for (const auto& [value, xs] : preimages) {
        if (xs.size() != 2 || (xs[0] ^ xs[1]) != s_int) {
            return false;
        }
    }
    return true;
}

BitVec SimonFunction::classical_solve() const {
    std::uint64_t size = std::uint64_t{1} << n_;
    std::unordered_map<std::uint64_t, std::uint64_t> first_seen;
    first_seen.reserve(size);
    for (std::uint64_t x = 0; x < size; ++x) {
        auto [it, inserted] = first_seen.try_emplace(table_[x].to_int(), x);
        if (!inserted) {
            return BitVec::from_int(x ^ it->second, static_cast<std::size_t>(n_));
        }
    }
    return BitVec(static_cast<std::size_t>(n_));
}

void SimonFunction::store(std::ostream& out) const {
    out << "simon " << n_ << ' ' << m_ << ' ' << s_.to_string() << '\n';
    for (const BitVec& v : table_) {
        out << v.to_string() << '\n';
    }
}

SimonFunction SimonFunction::load(std::istream& in) {
    std::string magic;
    int n = 0;
    int m = 0;
    std::string s_bits;
    if (!(in >> magic >> n >> m >> s_bits) || magic != "simon") {
        throw ParameterError("bad function-table header; expected `simon <n> <m> <s-bits>`");
    }
    if (n < 1 || n > kMaxInputBits || m < 1 || m > 62) {
        throw ParameterError("function-table header out of range");
    }
    if (static_cast<int>(s_bits.size()) != n) {
        throw ParameterError("header s must have n bits");
    }
    BitVec s = BitVec::from_string(s_bits);
    std::uint64_t size = std::uint64_t{1} << n;
    std::vector<BitVec> table;
    table.reserve(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        std::string line;
        if (!(in >> line)) {
            throw ParameterError("function table truncated: expected 2^n output lines");
        }
        if (static_cast<int>(line.size()) != m) {
            throw ParameterError("table line has wrong width");
        }
        table.push_back(BitVec::from_string(line));
    }
    return from_table(n, m, std::move(s), std::move(table));
}

void SimonFunction::store_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw ParameterError("cannot open output file: " + path);
    }
    store(out);
}

SimonFunction SimonFunction::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParameterError("cannot open function table: " + path);
    }
    return load(in);
}

SubfunctionFamily::SubfunctionFamily(const SimonFunction& f, int t) : f_(&f), t_(t) {
    if (t < 1 || t >= f.n()) {
        throw ParameterError("split width t must satisfy 1 <= t < n");
    }
}

const BitVec& SubfunctionFamily::eval(const BitVec& w, const BitVec& u) const {
    if (static_cast<int>(w.size()) != t_ || static_cast<int>(u.size()) != f_->n() - t_) {
        throw UsageError("subfunction argument width mismatch");
    }
    return eval_at(w.to_int(), u.to_int());
}

const BitVec& SubfunctionFamily::eval_at(std::uint64_t w_index, std::uint64_t u_index) const {
    return f_->value_at((u_index << t_) | w_index);
}

SubfunctionFamily split(const SimonFunction& f, int t) {
    return SubfunctionFamily(f, t);
}

std::optional<BitVec> try_find_s2(const SubfunctionFamily& fam, const BitVec& s1) {
    int t = fam.t();
    if (static_cast<int>(s1.size()) != fam.n() - t) {
        throw UsageError("s1 must have length n - t");
    }
    const BitVec& target = fam.eval_at(0, s1.to_int());  // f(s1 || 0^t)
    std::optional<BitVec> zero_match;
    for (std::uint64_t w = 0; w < fam.subfunction_count(); ++w) {
        if (fam.eval_at(w, 0) == target) {  // f(0^(n-t) || w)
            if (w != 0) {
                return BitVec::from_int(w, static_cast<std::size_t>(t));
            }
            zero_match = BitVec(static_cast<std::size_t>(t));
        }
    }
    return zero_match;
}

BitVec find_s2(const SubfunctionFamily& fam, const BitVec& s1) {
    auto v = try_find_s2(fam, s1);
    if (!v) {
        throw PromiseViolation("no v with f(0^(n-t) v) = f(s1 0^t); s1 is not the hidden prefix");
    }
    return *v;
}

}  // namespace simon_dqc
