#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcseq/construct.hpp"

namespace lcseq::correlate {

using construct::BinSeq;

/// Periodic autocorrelation sum_{i} s_i s_{i+t mod N}; 1 <= t <= N-1.
int64_t autocorrelation(const BinSeq& s, int64_t t);

/// Periodic cross-correlation sum_i u_i v_{i+t mod N}; 0 <= t <= N-1.
int64_t cross_correlation(const BinSeq& u, const BinSeq& v, int64_t t);

/// The family correlation bound 4 + floor(2 sqrt(q)), via exact isqrt(4q).
int64_t bound(uint64_t q);

/// Popcount path: N - 2 * popcount(u XOR rotate(v, t)). Bit-exact match with
/// the naive sum is a tested invariant, not an assumption.
int64_t packed_correlation_kernel(const std::vector<uint64_t>& u, const std::vector<uint64_t>& v,
                                  int64_t n, int64_t t);

struct AutoWitness {
    int64_t value = 0; // |A_t|
    int i = 0;         // 1-based sequence index
    int64_t t = 0;
    friend bool operator==(const AutoWitness&, const AutoWitness&) = default;
};

struct CrossWitness {
    int64_t value = 0; // |C_t|
    int i = 0, j = 0;  // 1-based, i < j
    int64_t t = 0;
    friend bool operator==(const CrossWitness&, const CrossWitness&) = default;
};

struct CorrelationReport {
    int64_t n = 0;
    int64_t family_size = 0;
    AutoWitness max_auto;
    std::optional<CrossWitness> max_cross; // absent for singleton families
    int64_t cor = 0;
    int64_t bound = 0;
    bool within_bound = false;

    friend bool operator==(const CorrelationReport&, const CorrelationReport&) = default;
};

enum class Path { Packed, Naive };

/// Exact maxima of |A_t| (t = 1..N-1) and |C_t| (t = 0..N-1, pairs i < j);
/// witnesses are the lexicographically smallest (i, j, t) achieving the
/// maximum, independent of the worker count.
CorrelationReport family_correlation(const std::vector<BinSeq>& seqs, uint64_t q,
                                     Path path = Path::Packed, int jobs = 1);

} // namespace lcseq::correlate
