#include "stirlab/combgen.hpp"

#include <map>

namespace stirlab {

Int perm_count(int n) { return factorial(n); }

Int signed_perm_count(int n) {
    Int r = factorial(n);
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    return r;
}

Int stirling_count(int n, int k) {
    Int r = 1;
    for (int m = 1; m <= n; ++m) r *= k * (m - 1) + 1;
    return r;
}

namespace detail {

void check_perm_guard(int n, int guard) {
    if (n < 0) throw Error("negative n");
    if (n > guard)
        throw GuardError("would enumerate " + perm_count(n).get_str() + " permutations (n=" +
                         std::to_string(n) + " exceeds guard " + std::to_string(guard) +
                         "); raise the guard with --max-objects");
}

void check_signed_guard(int n, int guard) {
    if (n < 0) throw Error("negative n");
    if (n > guard)
        throw GuardError("would enumerate " + signed_perm_count(n).get_str() +
                         " signed permutations (n=" + std::to_string(n) + " exceeds guard " +
                         std::to_string(guard) + "); raise the guard with --max-objects");
}

void check_stirling_guard(int n, int k, long long guard) {
    if (n < 0) throw Error("negative n");
    if (k < 1) throw Error("k must be positive");
    Int count = stirling_count(n, k);
    if (count > Int(static_cast<long>(guard)))
        throw GuardError("would enumerate " + count.get_str() + " k-Stirling permutations (n=" +
                         std::to_string(n) + ", k=" + std::to_string(k) +
                         " exceeds guard " + std::to_string(guard) +
                         "); raise the guard with --max-objects");
}

} // namespace detail

bool is_stirling_word(const std::vector<int>& w, int n, int k) {
    if (w.size() != static_cast<size_t>(n) * static_cast<size_t>(k)) return false;
    std::map<int, int> mult;
    for (int x : w) ++mult[x];
    for (int v = 1; v <= n; ++v)
        if (mult[v] != k) return false;
    if (static_cast<int>(mult.size()) != n && n > 0) return false;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j])
                for (size_t s = i + 1; s < j; ++s)
                    if (w[s] < w[i]) return false;
    return true;
}

CycleForm cycle_form(const Perm& p) {
    const int n = p.size();
    CycleForm cf;
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cyc;
        int cur = start;
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = true;
            cyc.push_back(cur);
            cur = p.v[static_cast<size_t>(cur - 1)];
        }
        cf.cycles.push_back(std::move(cyc));
    }
    return cf;
}

std::vector<Perm> gen_perms(int n, int guard) {
    std::vector<Perm> out;
    for_each_perm(n, [&](const Perm& p) { out.push_back(p); }, guard);
    return out;
}

std::vector<SignedPerm> gen_signed_perms(int n, int guard) {
    std::vector<SignedPerm> out;
    for_each_signed_perm(n, [&](const SignedPerm& s) { out.push_back(s); }, guard);
    return out;
}

std::vector<StirlingWord> gen_stirling(int n, int k, long long guard) {
    std::vector<StirlingWord> out;
    for_each_stirling(n, k, [&](const StirlingWord& w) { out.push_back(w); }, guard);
    return out;
}

} // namespace stirlab
