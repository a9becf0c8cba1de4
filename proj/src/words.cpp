#include "taut/words.hpp"

#include <algorithm>
#include <thread>
#include <utility>

namespace taut::words {

namespace {

void require_q(int q) {
    if (q < 2) throw InvalidInput("alphabet size q must be at least 2");
}

std::uint64_t pow_or_budget(int q, int n, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / static_cast<std::uint64_t>(q))
            throw BudgetError("word enumeration budget exceeded: q^n > " +
                              std::to_string(budget));
        total *= static_cast<std::uint64_t>(q);
    }
    if (total > budget)
        throw BudgetError("word enumeration budget exceeded: q^n > " +
                          std::to_string(budget));
    return total;
}

// Suffix of length k equals prefix of length k, optionally with the prefix's
// first digit incremented mod q.
bool suffix_matches(const DigitWord& w, std::size_t k, bool bump_first) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < k; ++i) {
        int p = w.digits[i];
        if (bump_first && i == 0) p = (p + 1) % w.q;
        if (w.digits[n - k + i] != p) return false;
    }
    return true;
}

template <class Pred>
BigInt count_words(int q, int n, std::uint64_t budget, int shards, Pred pred) {
    require_q(q);
    if (n < 0) throw InvalidInput("word length must be nonnegative");
    if (n == 0) return 1;  // the empty word
    const std::uint64_t total = pow_or_budget(q, n, budget);
    if (shards < 1) shards = 1;
    shards = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(shards), total));

    std::vector<std::uint64_t> partial(shards, 0);
    auto run = [&](int s) {
        const std::uint64_t lo = total / shards * s +
                                 std::min<std::uint64_t>(s, total % shards);
        const std::uint64_t hi = total / shards * (s + 1) +
                                 std::min<std::uint64_t>(s + 1, total % shards);
        DigitWord w(q, std::vector<std::uint8_t>(n, 0));
        // Seed the odometer at word index lo (most significant digit first).
        std::uint64_t v = lo;
        for (int i = n - 1; i >= 0; --i) {
            w.digits[i] = static_cast<std::uint8_t>(v % q);
            v /= q;
        }
        std::uint64_t count = 0;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (pred(w)) ++count;
            for (int i = n - 1; i >= 0; --i) {
                if (++w.digits[i] < q) break;
                w.digits[i] = 0;
            }
        }
        partial[s] = count;
    };

    if (shards == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(shards);
        for (int s = 0; s < shards; ++s) pool.emplace_back(run, s);
        for (auto& t : pool) t.join();
    }
    BigInt sum = 0;
    for (auto c : partial) sum += c;
    return sum;
}

}  // namespace

DigitWord::DigitWord(int q_, std::vector<std::uint8_t> d)
    : q(q_), digits(std::move(d)) {
    require_q(q);
    for (auto digit : digits)
        if (digit >= q) throw InvalidInput("digit out of range [0, q)");
}

bool is_bordered(const DigitWord& w) {
    const std::size_t n = w.size();
    if (n <= 1) return false;
    // A bordered word has a border of at most half its length, so short
    // suffixes suffice, but checking all proper suffixes is just as correct.
    for (std::size_t k = 1; k < n; ++k)
        if (suffix_matches(w, k, false)) return true;
    return false;
}

bool is_one_unbordered(const DigitWord& w) {
    const std::size_t n = w.size();
    if (n == 0) throw InvalidInput("is_one_unbordered requires a nonempty word");
    for (std::size_t k = 1; k < n; ++k)
        if (suffix_matches(w, k, false) || suffix_matches(w, k, true))
            return false;
    return true;
}

BigInt count_unbordered_brute(int q, int n, std::uint64_t budget, int shards) {
    return count_words(q, n, budget, shards,
                       [](const DigitWord& w) { return !is_bordered(w); });
}

BigInt count_one_unbordered_brute(int q, int n, std::uint64_t budget,
                                  int shards) {
    return count_words(q, n, budget, shards,
                       [](const DigitWord& w) { return is_one_unbordered(w); });
}

CountSequence count_unbordered_recursive(int q, int n_max) {
    require_q(q);
    if (n_max < 0) throw InvalidInput("n_max must be nonnegative");
    CountSequence seq{q, {}};
    seq.values.reserve(n_max + 1);
    seq.values.push_back(1);
    for (int n = 1; n <= n_max; ++n) {
        if (n % 2 == 1)
            seq.values.push_back(q * seq.values[n - 1]);
        else
            seq.values.push_back(q * seq.values[n - 1] - seq.values[n / 2]);
    }
    return seq;
}

CountSequence count_one_unbordered_recursive(int q, int n_max) {
    require_q(q);
    if (n_max < 0) throw InvalidInput("n_max must be nonnegative");
    CountSequence seq{q, {}};
    seq.values.reserve(n_max + 1);
    seq.values.push_back(1);
    for (int n = 1; n <= n_max; ++n) {
        if (n % 2 == 1)
            seq.values.push_back(q * seq.values[n - 1]);
        else
            seq.values.push_back(q * seq.values[n - 1] - 2 * seq.values[n / 2]);
    }
    return seq;
}

BigInt h_value(int q, std::uint64_t n) {
    require_q(q);
    if (n == 0) return 1;
    int s = 0;
    for (std::uint64_t v = n; v != 0; v >>= 1) s += static_cast<int>(v & 1);
    int k = 0;
    for (std::uint64_t v = n; (v & 1) == 0; v >>= 1) ++k;
    const BigInt sign_pow = pow_big(BigInt(-q), static_cast<unsigned>(s));
    const BigInt two_pow = pow_big(BigInt(-2), static_cast<unsigned>(k));
    return sign_pow * (1 - two_pow);
}

namespace {

// In-place multiplication of a truncated series by 1/(1 - q t^step):
// c[i] += q * c[i - step] running forward.
void apply_geometric_factor(std::vector<BigInt>& c, int q, std::size_t step) {
    for (std::size_t i = step; i < c.size(); ++i) c[i] += q * c[i - step];
}

}  // namespace

SeriesCoefficients beta_closed_form(int q, int n_max) {
    require_q(q);
    if (n_max < 0) throw InvalidInput("n_max must be nonnegative");
    SeriesCoefficients s{q, std::vector<BigInt>(n_max + 1)};
    for (int n = 0; n <= n_max; ++n) s.coeffs[n] = h_value(q, n);
    // Factors with 2^j > n_max only contribute the constant 1 at this order.
    for (std::size_t step = 1; step <= static_cast<std::size_t>(n_max);
         step *= 2)
        apply_geometric_factor(s.coeffs, q, step);
    return s;
}

SeriesCoefficients alpha_series(int q, int n_max) {
    require_q(q);
    if (n_max < 0) throw InvalidInput("n_max must be nonnegative");
    std::vector<BigInt> out(n_max + 1);
    out[0] = 1;
    std::vector<BigInt> running(n_max + 1);
    running[0] = 1;  // running = prod_{i<=j} (1 - q t^{2^i})^{-1}
    int sign = 1;
    for (std::size_t step = 1; step <= static_cast<std::size_t>(n_max);
         step *= 2) {
        apply_geometric_factor(running, q, step);
        for (std::size_t i = step; i <= static_cast<std::size_t>(n_max); ++i)
            out[i] += sign * q * running[i - step];
        sign = -sign;
    }
    return SeriesCoefficients{q, std::move(out)};
}

SeriesCoefficients lacunary_product(int q, int n_max) {
    require_q(q);
    if (n_max < 0) throw InvalidInput("n_max must be nonnegative");
    std::vector<BigInt> prod(n_max + 1);
    prod[0] = 1;
    for (std::size_t step = 1; step <= static_cast<std::size_t>(n_max);
         step *= 2) {
        // Multiply by (1 - q t^step), highest coefficient first.
        for (std::size_t i = static_cast<std::size_t>(n_max); i >= step; --i)
            prod[i] -= q * prod[i - step];
    }
    return SeriesCoefficients{q, std::move(prod)};
}

CountSequence short_column(int q, int n_max) {
    require_q(q);
    if (n_max < 0) throw InvalidInput("n_max must be nonnegative");
    CountSequence col{q, {}};
    col.values.reserve(n_max + 1);
    if (q == 2) {
        // The lamination is empty in degree 2: a single full-length component
        // at n = 0 and nothing short afterwards (b_{n+1} = 0 for n >= 1).
        col.values.push_back(1);
        for (int n = 1; n <= n_max; ++n) col.values.push_back(0);
        return col;
    }
    const CountSequence b = count_one_unbordered_recursive(q, n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        const BigInt& num = b.values[n + 1];
        if (num % q != 0)
            throw InternalError("b_{n+1} not divisible by q at n = " +
                                std::to_string(n));
        col.values.push_back(num / q);
    }
    return col;
}

}  // namespace taut::words
