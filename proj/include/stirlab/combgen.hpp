#pragma once

/*
 * Exhaustive generators for permutations, signed permutations and k-Stirling
 * permutations, plus standard cycle decomposition.  Generation is a pure
 * function of (n, k) with a fixed deterministic order, so streams are
 * restartable and golden files stay stable.  Size guards fail fast with the
 * estimated object count.
 */

#include "stirlab/rational.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace stirlab {

struct Perm {
    std::vector<int> v; // one-line notation, values 1..n
    int size() const { return static_cast<int>(v.size()); }
};

struct SignedPerm {
    std::vector<int> v; // +/- values, absolute values a permutation of 1..n
    int size() const { return static_cast<int>(v.size()); }
};

struct StirlingWord {
    std::vector<int> w; // length n*k over the multiset {1^k, ..., n^k}
    int n = 0;
    int k = 1;
};

struct CycleForm {
    std::vector<std::vector<int>> cycles; // smallest entry first, ascending
};

inline constexpr int kDefaultPermGuard = 10;
inline constexpr int kDefaultSignedGuard = 8;
inline constexpr long long kDefaultStirlingGuard = 5'000'000;

Int perm_count(int n);
Int signed_perm_count(int n);
/// prod_{m=1..n} (k(m-1) + 1); (2n-1)!! for k = 2 and n! for k = 1.
Int stirling_count(int n, int k);

/// Stirling condition from the definition: whenever w[i] == w[j] with
/// i < s < j, then w[s] >= w[i].  Also checks the multiset shape.
bool is_stirling_word(const std::vector<int>& w, int n, int k);

CycleForm cycle_form(const Perm& p);

namespace detail {
void check_perm_guard(int n, int guard);
void check_signed_guard(int n, int guard);
void check_stirling_guard(int n, int k, long long guard);

template <class F>
void stirling_rec(std::vector<int>& w, int m, int n, int k, F& f) {
    if (m > n) {
        f(w);
        return;
    }
    for (size_t gap = 0; gap <= w.size(); ++gap) {
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(gap), static_cast<size_t>(k), m);
        stirling_rec(w, m + 1, n, k, f);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(gap),
                w.begin() + static_cast<std::ptrdiff_t>(gap) + k);
    }
}
} // namespace detail

/// All n! permutations in lexicographic one-line order.
template <class F>
void for_each_perm(int n, F&& f, int guard = kDefaultPermGuard) {
    detail::check_perm_guard(n, guard);
    Perm p;
    p.v.resize(static_cast<size_t>(n));
    std::iota(p.v.begin(), p.v.end(), 1);
    do {
        f(static_cast<const Perm&>(p));
    } while (std::next_permutation(p.v.begin(), p.v.end()));
}

/// All 2^n n! signed permutations: lexicographic base permutation, then sign
/// masks ascending (bit i flips position i).
template <class F>
void for_each_signed_perm(int n, F&& f, int guard = kDefaultSignedGuard) {
    detail::check_signed_guard(n, guard);
    Perm base;
    base.v.resize(static_cast<size_t>(n));
    std::iota(base.v.begin(), base.v.end(), 1);
    SignedPerm s;
    s.v.resize(static_cast<size_t>(n));
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i)
                s.v[static_cast<size_t>(i)] =
                    (mask >> i) & 1u ? -base.v[static_cast<size_t>(i)] : base.v[static_cast<size_t>(i)];
            f(static_cast<const SignedPerm&>(s));
        }
    } while (std::next_permutation(base.v.begin(), base.v.end()));
}

/// All k-Stirling permutations, generated by inserting the block m^k into
/// every gap (ascending position) at step m.
template <class F>
void for_each_stirling(int n, int k, F&& f, long long guard = kDefaultStirlingGuard) {
    detail::check_stirling_guard(n, k, guard);
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n) * static_cast<size_t>(k));
    StirlingWord sw;
    sw.n = n;
    sw.k = k;
    sw.w.reserve(w.capacity());
    auto visit = [&](const std::vector<int>& word) {
        sw.w = word;
        f(static_cast<const StirlingWord&>(sw));
    };
    detail::stirling_rec(w, 1, n, k, visit);
}

std::vector<Perm> gen_perms(int n, int guard = kDefaultPermGuard);
std::vector<SignedPerm> gen_signed_perms(int n, int guard = kDefaultSignedGuard);
std::vector<StirlingWord> gen_stirling(int n, int k, long long guard = kDefaultStirlingGuard);

} // namespace stirlab
