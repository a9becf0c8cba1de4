#include "taut/lamination.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <random>
#include <thread>

namespace taut::lamination {

namespace {

std::uint64_t pow_u64_checked(int q, int e) {
    std::uint64_t g = 1;
    for (int i = 0; i < e; ++i) {
        if (g > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(q))
            throw InvalidInput("q^n exceeds the 64-bit grid limit");
        g *= static_cast<std::uint64_t>(q);
    }
    return g;
}

// A point of the digit-rule linking test: grid value at scale q^{k+1} plus
// the digit count of the word.  All perturbations point below the grid
// value, and a longer word's perturbation is smaller, so the order is
// lexicographic on (value, digit count); an all-zero word wraps to the top
// of the circle.
struct TestPoint {
    std::uint64_t g;
    int len;
};

inline bool pt_less(const TestPoint& a, const TestPoint& b) {
    return a.g != b.g ? a.g < b.g : a.len < b.len;
}

inline bool pt_between(const TestPoint& lo, const TestPoint& hi,
                       const TestPoint& t) {
    return pt_less(lo, t) && pt_less(t, hi);
}

// Computes partner words for depth-k leaves, one leaf at a time, reusing
// its buffers.  Digits x_1..x_{k-1} act as an odometer over the mid range.
class LeafWorker {
  public:
    LeafWorker(int q, int k) : q_(q), k_(k) {
        powq_.resize(k + 2);
        powq_[0] = 1;
        for (int i = 1; i <= k + 1; ++i)
            powq_[i] = powq_[i - 1] * static_cast<std::uint64_t>(q);
        x_.assign(k + 1, 0);
        y_.assign(k + 1, 0);
        tx_.assign(k + 2, 0);
        ty_.assign(k + 2, 0);
        x_[0] = q - 2;
    }

    // Positions the odometer at the given mid value.
    void seek(std::uint64_t mid) {
        for (int i = k_ - 1; i >= 1; --i) {
            x_[i] = static_cast<int>(mid % q_);
            mid /= q_;
        }
    }

    void advance() {
        for (int i = k_ - 1; i >= 1; --i) {
            if (++x_[i] < q_) return;
            x_[i] = 0;
        }
    }

    // Leaf for the current mid digits and type j; endpoints at scale q^k.
    void leaf(int j, std::uint64_t& a, std::uint64_t& b) {
        x_[k_] = j - 1;
        tx_[k_ + 1] = 0;
        for (int i = k_; i >= 1; --i)
            tx_[i] = static_cast<std::uint64_t>(x_[i]) * powq_[k_ - i] + tx_[i + 1];
        const std::uint64_t vx =
            static_cast<std::uint64_t>(q_ - 2) * powq_[k_] + tx_[1];
        const TestPoint qx{vx, k_ + 1};
        const TestPoint qz{vx + powq_[k_], k_ + 1};  // first digit q-1 instead

        y_[k_] = j;
        ty_[k_] = static_cast<std::uint64_t>(j);
        for (int i = k_ - 1; i >= 1; --i) {
            if (x_[i] != q_ - 2 && x_[i] != q_ - 1) {
                y_[i] = x_[i];
            } else {
                const bool low_ok = candidate_unlinked(i, q_ - 2, qx, qz);
                const bool high_ok = candidate_unlinked(i, q_ - 1, qx, qz);
                if (low_ok == high_ok)
                    throw InternalError(
                        "digit rule: partner digit not unique at depth " +
                        std::to_string(k_));
                y_[i] = low_ok ? q_ - 2 : q_ - 1;
            }
            ty_[i] = static_cast<std::uint64_t>(y_[i]) * powq_[k_ - i] + ty_[i + 1];
        }
        a = tx_[1];
        b = ty_[1];
    }

  private:
    bool candidate_unlinked(int i, int cand, const TestPoint& qx,
                            const TestPoint& qz) const {
        const int len = k_ - i + 1;
        TestPoint px{tx_[i] == 0 ? powq_[k_ + 1] : tx_[i] * powq_[i], len};
        TestPoint py{(static_cast<std::uint64_t>(cand) * powq_[k_ - i] +
                      ty_[i + 1]) *
                         powq_[i],
                     len};
        if (pt_less(py, px)) std::swap(px, py);
        return pt_between(px, py, qx) == pt_between(px, py, qz);
    }

    int q_, k_;
    std::vector<std::uint64_t> powq_;
    std::vector<int> x_, y_;
    std::vector<std::uint64_t> tx_, ty_;
};

// Enumerates leaves of depth k with linear index in [lo, hi), where the
// index runs over (j - 1) * q^{k-1} + mid.  fn(index, a, b, j).
template <typename F>
void enumerate_depth_range(int q, int k, std::uint64_t lo, std::uint64_t hi,
                           F&& fn) {
    const std::uint64_t block = pow_u64_checked(q, k - 1);
    LeafWorker worker(q, k);
    std::uint64_t idx = lo;
    while (idx < hi) {
        const int j = static_cast<int>(idx / block) + 1;
        const std::uint64_t mid = idx % block;
        const std::uint64_t stop = std::min(hi, (idx - mid) + block);
        worker.seek(mid);
        for (; idx < stop; ++idx) {
            std::uint64_t a, b;
            worker.leaf(j, a, b);
            fn(idx, a, b, j);
            worker.advance();
        }
    }
}

// Splits [0, work_items) into shard slices and runs them, on threads when
// shards > 1.  Every slice writes to disjoint output, so results do not
// depend on the shard count.
void run_sharded(int shards, std::uint64_t work_items,
                 const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
    if (shards < 1) shards = 1;
    if (static_cast<std::uint64_t>(shards) > work_items) shards = 1;
    if (shards == 1) {
        fn(0, work_items);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(shards);
    for (int s = 0; s < shards; ++s) {
        const std::uint64_t lo = work_items / shards * s +
                                 std::min<std::uint64_t>(s, work_items % shards);
        const std::uint64_t hi =
            work_items / shards * (s + 1) +
            std::min<std::uint64_t>(s + 1, work_items % shards);
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

template <typename I>
CensusTable census_impl(int q, int n, int shards) {
    const std::uint64_t grid = pow_u64_checked(q, n);
    const std::uint64_t total = total_leaf_count(q, n);

    std::vector<std::pair<I, I>> chords(total);
    std::uint64_t offset = 0;
    for (int k = 1; k <= n && q >= 3; ++k) {
        const std::uint64_t dk = depth_leaf_count(q, k);
        const std::uint64_t rescale = pow_u64_checked(q, n - k);
        const std::uint64_t base = offset;
        run_sharded(shards, dk, [&](std::uint64_t lo, std::uint64_t hi) {
            enumerate_depth_range(
                q, k, lo, hi,
                [&](std::uint64_t idx, std::uint64_t a, std::uint64_t b, int) {
                    a *= rescale;
                    b *= rescale;
                    chords[base + idx] = {static_cast<I>(std::min(a, b)),
                                          static_cast<I>(std::max(a, b))};
                });
        });
        offset += dk;
    }
    std::sort(chords.begin(), chords.end(),
              [](const std::pair<I, I>& x, const std::pair<I, I>& y) {
                  return x.first != y.first ? x.first < y.first
                                            : x.second > y.second;
              });
    if (std::adjacent_find(chords.begin(), chords.end()) != chords.end())
        throw InternalError("duplicate leaf generated");

    std::array<std::uint64_t, 64> buckets{};
    std::uint64_t faces = 0;
    detail::sweep_faces<I>(
        static_cast<I>(grid), chords,
        [](I a, I b) { return static_cast<std::uint64_t>(b - a); },
        [&](std::uint64_t len) {
            if (len == 0 || !std::has_single_bit(len))
                throw InternalError("component length " + std::to_string(len) +
                                    " is not a power of 2");
            ++buckets[static_cast<std::size_t>(std::countr_zero(len))];
            ++faces;
        });
    if (faces != total + 1)
        throw InternalError("component count != chord count + 1");

    CensusTable table(q, n);
    for (int m = 0; m < 64; ++m) {
        if (buckets[m] == 0) continue;
        if (m > n) throw InternalError("component longer than the whole circle");
        table.counts[m] = buckets[m];
    }
    return table;
}

}  // namespace

std::uint64_t depth_leaf_count(int q, int k) {
    return pow_u64_checked(q, k - 1) * static_cast<std::uint64_t>(q - 2);
}

std::uint64_t total_leaf_count(int q, int n) {
    if (q == 2) return 0;
    std::uint64_t total = 0;
    for (int k = 1; k <= n; ++k) total += depth_leaf_count(q, k);
    return total;
}

std::vector<Chord> depth_leaves(int q, int n) {
    if (q < 3) throw InvalidInput("depth_leaves requires q >= 3");
    if (n < 1) throw InvalidInput("depth_leaves requires n >= 1");
    pow_u64_checked(q, n + 1);
    std::vector<Chord> out;
    out.reserve(depth_leaf_count(q, n));
    enumerate_depth_range(
        q, n, 0, depth_leaf_count(q, n),
        [&](std::uint64_t, std::uint64_t a, std::uint64_t b, int j) {
            out.emplace_back(CirclePoint(q, n, static_cast<std::int64_t>(a)),
                             CirclePoint(q, n, static_cast<std::int64_t>(b)), n,
                             j);
        });
    return out;
}

Lamination build_lamination(int q, int n, const LaminationOptions& opts) {
    if (q < 2) throw InvalidInput("build_lamination requires q >= 2");
    if (n < 0) throw InvalidInput("build_lamination requires n >= 0");
    pow_u64_checked(q, n + 1);
    const std::uint64_t total = total_leaf_count(q, n);
    if (total > opts.chord_cap)
        throw BudgetError("lamination of " + std::to_string(total) +
                          " chords exceeds the cap of " +
                          std::to_string(opts.chord_cap));

    Lamination lam{q, n, {}};
    lam.chords.resize(total);
    std::size_t base = 0;
    for (int k = 1; k <= n && q >= 3; ++k) {
        const std::uint64_t dk = depth_leaf_count(q, k);
        const std::size_t at = base;
        run_sharded(opts.shards, dk, [&](std::uint64_t lo, std::uint64_t hi) {
            enumerate_depth_range(
                q, k, lo, hi,
                [&](std::uint64_t idx, std::uint64_t a, std::uint64_t b, int j) {
                    lam.chords[at + idx] =
                        Chord(CirclePoint(q, k, static_cast<std::int64_t>(a)),
                              CirclePoint(q, k, static_cast<std::int64_t>(b)), k,
                              j);
                });
        });
        base += dk;
    }

    if (opts.validate && lam.chords.size() > 1) {
        const std::size_t count = lam.chords.size();
        if (count <= opts.full_unlink_check_max) {
            for (std::size_t i = 0; i < count; ++i)
                for (std::size_t j = i + 1; j < count; ++j)
                    if (links(lam.chords[i], lam.chords[j]))
                        throw InternalError("linked leaves in lamination");
        } else {
            std::mt19937_64 rng(0x7a757431u);
            std::uniform_int_distribution<std::size_t> pick(0, count - 1);
            for (std::size_t t = 0; t < opts.sampled_unlink_checks; ++t) {
                const std::size_t i = pick(rng);
                const std::size_t j = pick(rng);
                if (i != j && links(lam.chords[i], lam.chords[j]))
                    throw InternalError("linked leaves in lamination");
            }
        }
    }
    return lam;
}

std::vector<Chord> short_leaves(int q, int n) {
    if (q < 3) throw InvalidInput("short_leaves requires q >= 3");
    if (n < 1) throw InvalidInput("short_leaves requires n >= 1");
    pow_u64_checked(q, n + 1);
    std::vector<Chord> out;
    enumerate_depth_range(
        q, n, 0, depth_leaf_count(q, n),
        [&](std::uint64_t, std::uint64_t a, std::uint64_t b, int j) {
            const std::uint64_t lo = std::min(a, b), hi = std::max(a, b);
            if (hi - lo == 1)
                out.emplace_back(CirclePoint(q, n, static_cast<std::int64_t>(lo)),
                                 CirclePoint(q, n, static_cast<std::int64_t>(hi)),
                                 n, j);
        });
    return out;
}

CensusTable census(int q, int n, const CensusOptions& opts) {
    if (q < 2) throw InvalidInput("census requires q >= 2");
    if (n < 0) throw InvalidInput("census requires n >= 0");
    const std::uint64_t grid = pow_u64_checked(q, n);
    pow_u64_checked(q, n + 1);  // digit-rule tests live one scale finer
    if (grid < (std::uint64_t{1} << 32))
        return census_impl<std::uint32_t>(q, n, opts.shards);
    return census_impl<std::uint64_t>(q, n, opts.shards);
}

}  // namespace taut::lamination
