#include "lcseq/correlate.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "lcseq/nt.hpp"

namespace lcseq::correlate {

int64_t autocorrelation(const BinSeq& s, int64_t t) {
    const int64_t n = s.n();
    if (t < 1 || t >= n) fail(Errc::DelayOutOfRange, "autocorrelation delay must be in [1, N-1]");
    int64_t acc = 0;
    for (int64_t i = 0; i < n; ++i) {
        int64_t k = i + t;
        if (k >= n) k -= n;
        acc += static_cast<int64_t>(s.values[i]) * s.values[k];
    }
    return acc;
}

int64_t cross_correlation(const BinSeq& u, const BinSeq& v, int64_t t) {
    const int64_t n = u.n();
    if (v.n() != n) fail(Errc::LengthMismatch, "sequences must have equal length");
    if (t < 0 || t >= n) fail(Errc::DelayOutOfRange, "cross delay must be in [0, N-1]");
    int64_t acc = 0;
    for (int64_t i = 0; i < n; ++i) {
        int64_t k = i + t;
        if (k >= n) k -= n;
        acc += static_cast<int64_t>(u.values[i]) * v.values[k];
    }
    return acc;
}

int64_t bound(uint64_t q) { return 4 + static_cast<int64_t>(nt::isqrt(4 * q)); }

namespace {

// v concatenated with itself bitwise, so any rotation is a contiguous slice.
std::vector<uint64_t> doubled_bits(const std::vector<uint64_t>& v, int64_t n) {
    std::vector<uint64_t> d((2 * n + 63) / 64, 0);
    for (int64_t i = 0; i < n; ++i) {
        if ((v[i / 64] >> (i % 64)) & 1) {
            d[i / 64] |= uint64_t{1} << (i % 64);
            const int64_t k = i + n;
            d[k / 64] |= uint64_t{1} << (k % 64);
        }
    }
    return d;
}

// popcount(u XOR (bits t..t+n of vd)), vd in doubled form.
int64_t xor_popcount_shifted(const std::vector<uint64_t>& u, const std::vector<uint64_t>& vd,
                             int64_t n, int64_t t) {
    const int64_t words = (n + 63) / 64;
    const int64_t ws = t / 64, bs = t % 64;
    int64_t count = 0;
    for (int64_t k = 0; k < words; ++k) {
        uint64_t slice = vd[k + ws] >> bs;
        if (bs != 0 && static_cast<size_t>(k + ws + 1) < vd.size())
            slice |= vd[k + ws + 1] << (64 - bs);
        uint64_t x = u[k] ^ slice;
        if (k == words - 1 && n % 64 != 0) x &= (uint64_t{1} << (n % 64)) - 1;
        count += std::popcount(x);
    }
    return count;
}

} // namespace

int64_t packed_correlation_kernel(const std::vector<uint64_t>& u, const std::vector<uint64_t>& v,
                                  int64_t n, int64_t t) {
    if (u.size() != v.size()) fail(Errc::LengthMismatch, "packed words must have equal length");
    if (t < 0 || t >= n) fail(Errc::DelayOutOfRange, "delay must be in [0, N-1]");
    return n - 2 * xor_popcount_shifted(u, doubled_bits(v, n), n, t);
}

namespace {

struct CrossBest {
    int64_t value = -1;
    int i = 0, j = 0;
    int64_t t = 0;

    void consider(int64_t v, int ci, int cj, int64_t ct) {
        if (v > value) {
            value = v;
            i = ci;
            j = cj;
            t = ct;
        }
    }
    void merge(const CrossBest& o) {
        if (o.value > value ||
            (o.value == value && std::tuple(o.i, o.j, o.t) < std::tuple(i, j, t)))
            *this = o;
    }
};

} // namespace

CorrelationReport family_correlation(const std::vector<BinSeq>& seqs, uint64_t q, Path path,
                                     int jobs) {
    if (seqs.empty()) fail(Errc::OutOfRange, "family must contain at least one sequence");
    const int64_t n = seqs.front().n();
    for (const auto& s : seqs)
        if (s.n() != n) fail(Errc::LengthMismatch, "family sequences differ in length");
    const int size = static_cast<int>(seqs.size());
    // entries are +-1 and N <= q+1, so 64-bit accumulators cannot overflow
    if (n > (1 << 20)) fail(Errc::Overflow, "sequence length exceeds supported scale");

    std::vector<std::vector<uint64_t>> doubled;
    if (path == Path::Packed) {
        doubled.reserve(seqs.size());
        for (const auto& s : seqs) doubled.push_back(doubled_bits(s.packed, n));
    }

    auto cross_at = [&](int i, int j, int64_t t) -> int64_t {
        if (path == Path::Packed)
            return n - 2 * xor_popcount_shifted(seqs[i].packed, doubled[j], n, t);
        return cross_correlation(seqs[i], seqs[j], t);
    };

    CorrelationReport rep;
    rep.n = n;
    rep.family_size = size;

    AutoWitness best_auto;
    best_auto.value = -1;
    for (int i = 0; i < size; ++i) {
        for (int64_t t = 1; t < n; ++t) {
            const int64_t v = std::abs(cross_at(i, i, t));
            if (v > best_auto.value) best_auto = AutoWitness{v, i + 1, t};
        }
    }
    if (best_auto.value < 0) best_auto = AutoWitness{0, 0, 0}; // n == 1: no valid delay
    rep.max_auto = best_auto;

    if (size >= 2) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<size_t>(size) * (size - 1) / 2);
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) pairs.emplace_back(i, j);

        auto scan_range = [&](size_t lo, size_t hi) {
            CrossBest best;
            for (size_t k = lo; k < hi; ++k) {
                const auto [i, j] = pairs[k];
                for (int64_t t = 0; t < n; ++t)
                    best.consider(std::abs(cross_at(i, j, t)), i + 1, j + 1, t);
            }
            return best;
        };

        CrossBest best;
        const int workers = std::max(1, jobs);
        if (workers == 1 || pairs.size() < 2) {
            best = scan_range(0, pairs.size());
        } else {
            const size_t chunk = (pairs.size() + workers - 1) / workers;
            std::vector<CrossBest> partial(workers);
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w) {
                const size_t lo = std::min(pairs.size(), w * chunk);
                const size_t hi = std::min(pairs.size(), lo + chunk);
                threads.emplace_back([&, w, lo, hi] { partial[w] = scan_range(lo, hi); });
            }
            for (auto& th : threads) th.join();
            for (const auto& pb : partial) best.merge(pb);
        }
        rep.max_cross = CrossWitness{best.value, best.i, best.j, best.t};
    }

    rep.cor = std::max<int64_t>(rep.max_auto.value,
                                rep.max_cross ? rep.max_cross->value : int64_t{0});
    rep.bound = bound(q);
    rep.within_bound = rep.cor <= rep.bound;
    return rep;
}

} // namespace lcseq::correlate
