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

#include <doctest.h>

#include <sstream>

#include "simon_dqc/errors.hpp"
#include "simon_dqc/simon_function.hpp"
#include "test_util.hpp"

using simon_dqc::BitVec;
using simon_dqc::concat;
using simon_dqc::find_s2;
using simon_dqc::ParameterError;
using simon_dqc::SimonFunction;
using simon_dqc::split;
using simon_dqc::try_find_s2;

namespace {

// Naive pairwise promise oracle, quadratic on purpose.
bool promise_holds_pairwise(const SimonFunction& f) {
    std::uint64_t size = std::uint64_t{1} << f.n();
    std::uint64_t s = f.hidden_string().to_int();
    for (std::uint64_t x = 0; x < size; ++x) {
        for (std::uint64_t y = 0; y < size; ++y) {
            bool collide = f.value_at(x) == f.value_at(y);
            bool related = (x ^ y) == 0 || (x ^ y) == s;
            if (collide != related) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("n=2 m=1 s=11 admits exactly the two coset patterns") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        SimonFunction f = SimonFunction::generate(2, 1, BitVec::from_string("11"), seed);
        CHECK(f.value_at(0b00) == f.value_at(0b11));
        CHECK(f.value_at(0b01) == f.value_at(0b10));
        CHECK(f.value_at(0b00) != f.value_at(0b01));
        CHECK(promise_holds_pairwise(f));
    }
}

TEST_CASE("generate rejects out-of-range parameters") {
    CHECK_THROWS_AS(SimonFunction::generate(4, 2, BitVec::from_string("1011"), 1), ParameterError);
    // s = 0 needs an injective table, impossible with m < n.
    CHECK_THROWS_AS(SimonFunction::generate(3, 2, BitVec::from_string("000"), 1), ParameterError);
    CHECK_THROWS_AS(SimonFunction::generate(3, 3, BitVec::from_string("01"), 1), ParameterError);
    CHECK_THROWS_AS(SimonFunction::generate(15, 14, BitVec(15), 1), ParameterError);
}

TEST_CASE("generated tables satisfy the promise") {
    auto gen = test_util::rng(3);
    for (int n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            int m = (n - 1) + static_cast<int>(gen() % 3);
            BitVec s = test_util::random_nonzero_bitvec(gen, static_cast<std::size_t>(n));
            SimonFunction f = SimonFunction::generate(n, m, s, gen());
            CHECK(f.verify_promise());
            if (n <= 6) CHECK(promise_holds_pairwise(f));
            CHECK(f.classical_solve() == s);
        }
        // s = 0: injective table.
        SimonFunction f0 = SimonFunction::generate(n, n, BitVec(static_cast<std::size_t>(n)), gen());
        CHECK(f0.verify_promise());
        CHECK(f0.classical_solve().is_zero());
    }
}

TEST_CASE("verify_promise catches perturbed tables") {
    SimonFunction f = SimonFunction::generate(4, 3, BitVec::from_string("1011"), 5);
    auto table = f.table();
    table[3].flip_bit(0);  // break one collision
    SimonFunction broken = SimonFunction::from_table(4, 3, f.hidden_string(), table);
    CHECK_FALSE(broken.verify_promise());
    CHECK(promise_holds_pairwise(broken) == broken.verify_promise());

    // Injective table with a declared nonzero s lacks the required collisions.
    std::vector<BitVec> injective;
    for (std::uint64_t x = 0; x < 8; ++x) injective.push_back(BitVec::from_int(x, 3));
    SimonFunction wrong = SimonFunction::from_table(3, 3, BitVec::from_string("101"), injective);
    CHECK_FALSE(wrong.verify_promise());
}

TEST_CASE("split views the table as f_w(u) = f(u||w)") {
    auto gen = test_util::rng(9);
    for (int n = 2; n <= 10; n += 2) {
        BitVec s = test_util::random_nonzero_bitvec(gen, static_cast<std::size_t>(n));
        SimonFunction f = SimonFunction::generate(n, n - 1, s, gen());
        for (int t = 1; t < n; ++t) {
            auto fam = split(f, t);
            // Exhaustive tiling: every (u, w) hits its own table entry once.
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
                BitVec input = BitVec::from_int(x, static_cast<std::size_t>(n));
                BitVec u = input.slice(0, static_cast<std::size_t>(n - t));
                BitVec w = input.slice(static_cast<std::size_t>(n - t), static_cast<std::size_t>(t));
                CHECK(fam.eval(w, u) == f.value(input));
                CHECK(concat(u, w) == input);
            }
        }
    }
    SimonFunction f = SimonFunction::generate(3, 2, BitVec::from_string("110"), 1);
    CHECK_THROWS_AS(split(f, 0), ParameterError);
    CHECK_THROWS_AS(split(f, 3), ParameterError);
    // n=3, t=2: f_{01}(1) = f(101).
    auto fam = split(f, 2);
    CHECK(fam.eval(BitVec::from_string("01"), BitVec::from_string("1")) ==
          f.value(BitVec::from_string("101")));
}

TEST_CASE("find_s2 recovers the suffix from the prefix") {
    // n=2, t=1, s=11: f(10) = f(01), so v = 1.
    SimonFunction f = SimonFunction::generate(2, 1, BitVec::from_string("11"), 2);
    auto fam = split(f, 1);
    CHECK(find_s2(fam, BitVec::from_string("1")) == BitVec::from_string("1"));

    // s = s1 || 0^t gives v = 0^t.
    SimonFunction g = SimonFunction::generate(4, 3, BitVec::from_string("1100"), 3);
    CHECK(find_s2(split(g, 2), BitVec::from_string("11")) == BitVec::from_string("00"));

    // A wrong nonzero prefix admits no colliding suffix.
    SimonFunction h = SimonFunction::generate(3, 2, BitVec::from_string("110"), 4);
    CHECK_FALSE(try_find_s2(split(h, 1), BitVec::from_string("01")).has_value());
    CHECK_THROWS_AS(find_s2(split(h, 1), BitVec::from_string("01")), simon_dqc::PromiseViolation);

    // Existence for the true prefix, across random instances.
    auto gen = test_util::rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(gen() % 5);
        int t = 1 + static_cast<int>(gen() % (n - 1));
        BitVec s = test_util::random_nonzero_bitvec(gen, static_cast<std::size_t>(n));
        SimonFunction fn = SimonFunction::generate(n, n - 1, s, gen());
        BitVec s1 = s.slice(0, static_cast<std::size_t>(n - t));
        BitVec v = find_s2(split(fn, t), s1);
        CHECK(concat(s1, v) == s);
    }
}

TEST_CASE("table files round-trip") {
    SimonFunction f = SimonFunction::generate(4, 3, BitVec::from_string("1011"), 17);
    std::stringstream buffer;
    f.store(buffer);
    SimonFunction loaded = SimonFunction::load(buffer);
    CHECK(loaded.n() == f.n());
    CHECK(loaded.m() == f.m());
    CHECK(loaded.hidden_string() == f.hidden_string());
    CHECK(loaded.table() == f.table());
}

TEST_CASE("malformed table files are rejected") {
    {
        std::stringstream bad("nope 2 1 11\n0\n1\n1\n0\n");
        CHECK_THROWS_AS(SimonFunction::load(bad), ParameterError);
    }
    {
        std::stringstream truncated("simon 2 1 11\n0\n1\n");
        CHECK_THROWS_AS(SimonFunction::load(truncated), ParameterError);
    }
    {
        std::stringstream wrong_width("simon 2 2 11\n00\n011\n01\n00\n");
        CHECK_THROWS_AS(SimonFunction::load(wrong_width), ParameterError);
    }
}
