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

#include "polarspread/counting.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "polarspread/error.h"

namespace polarspread {

BigInt big_pow(unsigned base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) {
            result *= b;
        }
        exp >>= 1;
        if (exp > 0) {
            b *= b;
        }
    }
    return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t j = 1; j <= k; j++) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

BoundedBinomial binomial_until_exceeds(std::uint64_t n, std::uint64_t k, const BigInt &bound) {
    if (k > n) {
        return {0, true};
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t j = 1; j <= k; j++) {
        r *= n - k + j;
        r /= j;
        if (r > bound && j < k) {
            return {r, false};
        }
    }
    return {r, true};
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Equality:
            return "Equality";
        case Verdict::StrictlyLess:
            return "StrictlyLess";
        case Verdict::Violated:
            return "Violated";
    }
    return "?";
}

bool asymptotic_gate(unsigned d, unsigned m) {
    if (m < 1) {
        throw Error(ErrorKind::InvalidArgument, "M must be positive");
    }
    BigInt lhs = big_pow(d, m - 1);
    return lhs * 2 >= BigInt(m) * (m + 3);
}

namespace {

// Past this many factors the full binomial is not evaluated.
constexpr std::uint64_t kMaxExactFactors = 4096;

}  // namespace

ConjectureReport conjecture_counts(unsigned d, unsigned n) {
    if (!is_prime(d)) {
        throw Error(ErrorKind::NotPrime, std::to_string(d) + " is not prime");
    }
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "N must be at least 2");
    }
    ConjectureReport r{};
    r.d = d;
    r.n = n;
    BigInt spread = big_pow(d, n) + 1;
    BigInt subset = big_pow(d, n - 1) + 1;
    r.spread_size = static_cast<std::uint64_t>(spread);
    r.subset_size = static_cast<std::uint64_t>(subset);
    r.rhs = 1;
    for (unsigned i = 1; i <= n; i++) {
        r.rhs *= big_pow(d, i) + 1;
    }

    std::uint64_t factors = std::min(r.subset_size, r.spread_size - r.subset_size);
    if (factors <= kMaxExactFactors) {
        r.binomial = binomial(r.spread_size, r.subset_size);
        r.binomial_exact = true;
    } else {
        auto bounded = binomial_until_exceeds(r.spread_size, r.subset_size, r.rhs);
        r.binomial = bounded.value;
        r.binomial_exact = bounded.exact;
    }
    r.lhs = r.binomial + spread;
    if (r.lhs > r.rhs) {
        r.verdict = Verdict::Violated;
    } else if (!r.binomial_exact) {
        throw Error(ErrorKind::StructureViolation, "bounded binomial stopped below the right side");
    } else {
        r.verdict = r.lhs == r.rhs ? Verdict::Equality : Verdict::StrictlyLess;
    }

    r.chain.gate = asymptotic_gate(d, n);
    r.chain.rhs_upper_bound_holds = r.rhs <= big_pow(d, static_cast<std::uint64_t>(n) * (n + 3) / 2);
    if (r.binomial_exact) {
        r.chain.binomial_lower_bound_holds =
            r.binomial * subset >= spread * big_pow(d, r.subset_size - 1);
    }
    // binom > d^{d^{N-1}} >= d^{N(N+3)/2} >= rhs, the first step strict
    // because (d^N + 1)/(d^{N-1} + 1) > 1.
    r.chain.implies_violation = r.chain.gate && r.chain.rhs_upper_bound_holds &&
                                r.chain.binomial_lower_bound_holds.value_or(true);
    return r;
}

BruteForceSummary brute_force_conjecture(const PartialSpread &s) {
    const auto &space = s.space();
    if (!s.is_spread()) {
        throw Error(ErrorKind::NotASpread, "brute-force sweep needs a spread");
    }
    std::size_t m = s.size();
    std::size_t k = static_cast<std::size_t>(ipow(space.d(), space.rank() - 1) + 1);
    BigInt count = binomial(m, k);
    if (count > kMaxBruteForceSubsets) {
        throw Error(ErrorKind::ScaleExceeded, "too many subsets for a brute-force sweep");
    }
    std::size_t completed_size = static_cast<std::size_t>(ipow(space.d(), space.rank()) -
                                                          ipow(space.d(), space.rank() - 1) + 1);

    BruteForceSummary out;
    std::set<std::size_t> covered_union;
    std::vector<std::size_t> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
        std::vector<std::size_t> subset;
        for (auto p : pos) {
            subset.push_back(s.members()[p]);
        }
        PartialSpread sub(space, subset);
        auto covered = covered_generators(sub);
        out.subsets++;
        if (covered.empty()) {
            out.none++;
        } else {
            out.at_least_one++;
            if (covered.size() == 1) {
                out.exactly_one++;
            }
        }
        if (covered.size() != 1 && !out.failing_subset) {
            out.failing_subset = subset;
        }
        bool all_ok = !covered.empty();
        PartialSpread rest = s.without(subset);
        for (auto g : covered) {
            covered_union.insert(g);
            PartialSpread replaced = rest.with(g);
            if (replaced.size() != completed_size || !is_complete(replaced).complete) {
                all_ok = false;
            }
        }
        if (all_ok) {
            out.completions_ok++;
        }

        std::size_t i = k;
        while (i > 0 && pos[i - 1] == m - k + i - 1) {
            i--;
        }
        if (i == 0) {
            break;
        }
        pos[i - 1]++;
        for (std::size_t j = i; j < k; j++) {
            pos[j] = pos[j - 1] + 1;
        }
    }
    out.distinct_covered = covered_union.size();
    out.holds = out.exactly_one == out.subsets && out.completions_ok == out.subsets;
    return out;
}

}  // namespace polarspread
