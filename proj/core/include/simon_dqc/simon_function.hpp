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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simon_dqc/bitvec.hpp"

namespace simon_dqc {

/**
 * A function f : {0,1}^n -> {0,1}^m with a hidden shift s such that
 * f(x) = f(y) iff x xor y is 0^n or s. The truth table is materialized;
 * n is capped at 14 so tables stay desk-sized.
 *
 * Immutable after construction and safe to share across threads.
 */
class SimonFunction {
  public:
    static constexpr int kMaxInputBits = 14;

    /**
     * A uniformly random table satisfying the promise for the planted s:
     * inputs are partitioned into cosets {x, x xor s} and each coset gets a
     * distinct random m-bit value.
     *
     * Requires m >= n-1 for nonzero s (2^(n-1) distinct values must fit) and
     * m >= n for s = 0 (the table must be injective).
     */
    static SimonFunction generate(int n, int m, const BitVec& s, std::uint64_t seed);

    /// Wraps an explicit table; validates shape only, not the promise.
    static SimonFunction from_table(int n, int m, BitVec s, std::vector<BitVec> table);

    int n() const { return n_; }
    int m() const { return m_; }
    const BitVec& hidden_string() const { return s_; }
    const std::vector<BitVec>& table() const { return table_; }

    const BitVec& value(const BitVec& x) const;
    const BitVec& value_at(std::uint64_t index) const { return table_[index]; }

    /// Full check of f(x) = f(y) <=> x xor y in {0, s} over the whole table.
    bool verify_promise() const;

    /**
     * Ground-truth classical recovery by exhaustive collision search: the
     * first colliding pair x != y gives s = x xor y; an injective table
     * yields 0^n.
     */
    BitVec classical_solve() const;

    /// Text form: header `simon <n> <m> <s-bits>` then 2^n output lines.
    void store(std::ostream& out) const;
    static SimonFunction load(std::istream& in);
    void store_file(const std::string& path) const;
    static SimonFunction load_file(const std::string& path);

  private:
    SimonFunction(int n, int m, BitVec s, std::vector<BitVec> table);

    int n_;
    int m_;
    BitVec s_;
    std::vector<BitVec> table_;
};

/**
 * The 2^t restrictions f_w(u) = f(u || w) of a SimonFunction, one per value
 * of the trailing t input bits. Views only; the underlying function must
 * outlive the family.
 */
class SubfunctionFamily {
  public:
    SubfunctionFamily(const SimonFunction& f, int t);

    int n() const { return f_->n(); }
    int m() const { return f_->m(); }
    int t() const { return t_; }
    std::uint64_t subfunction_count() const { return std::uint64_t{1} << t_; }

    const SimonFunction& function() const { return *f_; }

    /// f_w(u) for a t-bit w and an (n-t)-bit u.
    const BitVec& eval(const BitVec& w, const BitVec& u) const;

    /// f_w(u) with both parts given as integers.
    const BitVec& eval_at(std::uint64_t w_index, std::uint64_t u_index) const;

  private:
    const SimonFunction* f_;
    int t_;
};

/// fam with f_w(u) = f(u || w).
SubfunctionFamily split(const SimonFunction& f, int t);

/**
 * Finds v with f(0^(n-t) || v) = f(s1 || 0^t) using one query per
 * subfunction plus one extra query of f_{0^t}, so that s = s1 || v whenever
 * s1 is the true prefix of the hidden string. Prefers a nonzero v when both
 * v = 0 and a nonzero v collide (the s1 = 0 case).
 *
 * Returns nullopt when no v exists, which means s1 is not the true prefix.
 */
std::optional<BitVec> try_find_s2(const SubfunctionFamily& fam, const BitVec& s1);

/// As try_find_s2 but throws PromiseViolation when no v exists.
BitVec find_s2(const SubfunctionFamily& fam, const BitVec& s1);

}  // namespace simon_dqc
