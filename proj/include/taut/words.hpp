#pragma once

// Unbordered and 1-unbordered words over the alphabet {0,...,q-1}:
// predicates, exhaustive counters, the a_n / b_n recursions, and the
// generating-function machinery that solves them in closed form.  The
// N_q(n,0) census column is b_{n+1}/q (short_column below).

#include <cstdint>
#include <vector>

#include "taut/bigint.hpp"
#include "taut/errors.hpp"

namespace taut::words {

inline constexpr std::uint64_t kDefaultWordBudget = 100'000'000;

// A finite base-q digit string.
struct DigitWord {
    int q = 2;
    std::vector<std::uint8_t> digits;

    DigitWord(int q_, std::vector<std::uint8_t> d);
    std::size_t size() const { return digits.size(); }
};

// True iff some nonempty proper suffix of w equals the prefix of the same
// length.  Words of length <= 1 are unbordered.
bool is_bordered(const DigitWord& w);

// True iff no nonempty proper suffix equals the same-length prefix P nor P'
// (P with its first digit incremented mod q).  Requires a nonempty word;
// the n = 0 convention b_0 = 1 lives in the counting functions.
bool is_one_unbordered(const DigitWord& w);

// Exact integer sequence indexed from 0.
struct CountSequence {
    int q = 2;
    std::vector<BigInt> values;
};

// Exhaustive counts over all q^n words.  `shards` partitions the word space;
// the result is independent of the partitioning.
BigInt count_unbordered_brute(int q, int n,
                              std::uint64_t budget = kDefaultWordBudget,
                              int shards = 1);
BigInt count_one_unbordered_brute(int q, int n,
                                  std::uint64_t budget = kDefaultWordBudget,
                                  int shards = 1);

// a_0 = 1, a_{2n+1} = q a_{2n}, a_{2n} = q a_{2n-1} - a_n.
CountSequence count_unbordered_recursive(int q, int n_max);

// b_0 = 1, b_{2n+1} = q b_{2n}, b_{2n} = q b_{2n-1} - 2 b_n.
CountSequence count_one_unbordered_recursive(int q, int n_max);

// h(0) = 1; for n > 0, h(n) = (-q)^{s(n)} (1 - (-2)^{k(n)}) where 2^{k(n)}
// is the largest power of two dividing n and s(n) is the binary digit sum.
BigInt h_value(int q, std::uint64_t n);

// Truncation of a formal power series; coeffs[n] is the t^n coefficient and
// the truncation length is coeffs.size() - 1.
struct SeriesCoefficients {
    int q = 2;
    std::vector<BigInt> coeffs;
};

// Coefficients 0..n_max of H(t) * prod_j (1 - q t^{2^j})^{-1}; equals the
// b_n sequence coefficientwise.
SeriesCoefficients beta_closed_form(int q, int n_max);

// Coefficients 0..n_max of
//   1 + q * sum_j (-1)^j t^{2^j} prod_{i<=j} (1 - q t^{2^i})^{-1};
// equals the a_n sequence coefficientwise.
SeriesCoefficients alpha_series(int q, int n_max);

// Coefficients 0..n_max of prod_{2^k <= n_max} (1 - q t^{2^k}); by the
// closed-form identity this equals sum_n (-q)^{s(n)} t^n.
SeriesCoefficients lacunary_product(int q, int n_max);

// N_q(n,0) for n = 0..n_max as b_{n+1}/q.  Throws InternalError if the
// divisibility b_{n+1} = 0 mod q ever fails.  For q = 2 the lamination is
// empty and the column is 1, 0, 0, ...
CountSequence short_column(int q, int n_max);

}  // namespace taut::words
