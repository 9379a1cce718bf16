// Copyright 2026 The polarspread Authors
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

#ifndef POLARSPREAD_COUNTING_H
#define POLARSPREAD_COUNTING_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polarspread/spread.h"

namespace polarspread {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(unsigned base, std::uint64_t exp);
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Result of comparing binom(n, k) + extra against a bound.
///
/// The partial products binom(n - k + j, j) increase with j, so the
/// evaluation may stop as soon as one of them pushes the left side past the
/// bound. In that case value holds the last partial product, a lower bound.
struct BoundedBinomial {
    BigInt value;
    bool exact;
};
BoundedBinomial binomial_until_exceeds(std::uint64_t n, std::uint64_t k, const BigInt &bound);

enum class Verdict { Equality, StrictlyLess, Violated };
std::string verdict_name(Verdict v);

/// Steps of the sufficient-condition chain, kept separate from the exact
/// comparison it must never contradict.
struct InequalityChain {
    /// d^{N-1} >= N(N+3)/2.
    bool gate;
    /// prod (d^i + 1) <= d^{N(N+3)/2}, checked exactly.
    bool rhs_upper_bound_holds;
    /// binom(d^N + 1, d^{N-1} + 1) (d^{N-1} + 1) >= (d^N + 1) d^{d^{N-1}},
    /// checked exactly when the binomial was evaluated in full.
    std::optional<bool> binomial_lower_bound_holds;
    bool implies_violation;
};

struct BruteForceSummary {
    std::size_t subsets = 0;
    std::size_t exactly_one = 0;
    std::size_t at_least_one = 0;
    std::size_t none = 0;
    /// Subsets whose covered generators all give complete partial spreads
    /// of size d^N - d^{N-1} + 1 after replacing the subset.
    std::size_t completions_ok = 0;
    std::size_t distinct_covered = 0;
    /// First subset (in lexicographic order of positions) violating
    /// "exactly one", as spread member indices.
    std::optional<std::vector<std::size_t>> failing_subset;
    bool holds = false;
};

struct ConjectureReport {
    unsigned d;
    unsigned n;
    std::uint64_t spread_size;
    std::uint64_t subset_size;
    BigInt binomial;
    bool binomial_exact;
    BigInt lhs;
    BigInt rhs;
    Verdict verdict;
    InequalityChain chain;
    std::optional<BruteForceSummary> brute_force;
};

/// lhs = binom(d^N + 1, d^{N-1} + 1) + (d^N + 1) against
/// rhs = prod_{i=1..N} (d^i + 1).
ConjectureReport conjecture_counts(unsigned d, unsigned n);

/// d^{M-1} >= M(M+3)/2.
bool asymptotic_gate(unsigned d, unsigned m);

constexpr std::size_t kMaxBruteForceSubsets = 1000000;

/// For every (d^{N-1} + 1)-subset of the spread s, counts the generators
/// covered by the subset and checks that replacing the subset by each of
/// them gives a complete partial spread of size d^N - d^{N-1} + 1.
BruteForceSummary brute_force_conjecture(const PartialSpread &s);

}  // namespace polarspread

#endif
