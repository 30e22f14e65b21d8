#include "stirlab/stats.hpp"

#include <atomic>

namespace stirlab {

namespace {
std::atomic<CorruptStat> g_corrupt{CorruptStat::none};

int& field_of(PermStatRecord& r, CorruptStat which) {
    switch (which) {
        case CorruptStat::des: return r.des;
        case CorruptStat::asc: return r.asc;
        case CorruptStat::des_star: return r.des_star;
        case CorruptStat::asc_star: return r.asc_star;
        case CorruptStat::exc: return r.exc;
        case CorruptStat::drop: return r.drop;
        case CorruptStat::fix: return r.fix;
        case CorruptStat::cyc: return r.cyc;
        case CorruptStat::lrmin: return r.lrmin;
        case CorruptStat::rlmin: return r.rlmin;
        case CorruptStat::lrmax: return r.lrmax;
        case CorruptStat::rlmax: return r.rlmax;
        case CorruptStat::pk: return r.pk;
        case CorruptStat::val: return r.val;
        case CorruptStat::dasc: return r.dasc;
        case CorruptStat::ddes: return r.ddes;
        case CorruptStat::pasc: return r.pasc;
        case CorruptStat::pdes: return r.pdes;
        case CorruptStat::impasc: return r.impasc;
        case CorruptStat::impdes: return r.impdes;
        case CorruptStat::pasc_hat: return r.pasc_hat;
        case CorruptStat::impasc_hat: return r.impasc_hat;
        default: throw Error("not a permutation statistic");
    }
}

bool is_primary_perm_field(CorruptStat which) {
    switch (which) {
        case CorruptStat::impasc:
        case CorruptStat::impdes:
        case CorruptStat::impasc_hat: return false;
        default: return true;
    }
}
} // namespace

void set_corrupt_stat(CorruptStat which) { g_corrupt.store(which); }
CorruptStat corrupt_stat() { return g_corrupt.load(); }

const char* corrupt_stat_name(CorruptStat which) {
    switch (which) {
        case CorruptStat::none: return "none";
        case CorruptStat::des: return "des";
        case CorruptStat::asc: return "asc";
        case CorruptStat::des_star: return "des_star";
        case CorruptStat::asc_star: return "asc_star";
        case CorruptStat::exc: return "exc";
        case CorruptStat::drop: return "drop";
        case CorruptStat::fix: return "fix";
        case CorruptStat::cyc: return "cyc";
        case CorruptStat::lrmin: return "lrmin";
        case CorruptStat::rlmin: return "rlmin";
        case CorruptStat::lrmax: return "lrmax";
        case CorruptStat::rlmax: return "rlmax";
        case CorruptStat::pk: return "pk";
        case CorruptStat::val: return "val";
        case CorruptStat::dasc: return "dasc";
        case CorruptStat::ddes: return "ddes";
        case CorruptStat::pasc: return "pasc";
        case CorruptStat::pdes: return "pdes";
        case CorruptStat::impasc: return "impasc";
        case CorruptStat::impdes: return "impdes";
        case CorruptStat::pasc_hat: return "pasc_hat";
        case CorruptStat::impasc_hat: return "impasc_hat";
        case CorruptStat::ap: return "ap";
        case CorruptStat::lap: return "lap";
        case CorruptStat::ap2: return "ap2";
        case CorruptStat::plap: return "plap";
        case CorruptStat::implap: return "implap";
        case CorruptStat::word_lrmin: return "word_lrmin";
        case CorruptStat::word_rlmin: return "word_rlmin";
        case CorruptStat::des_B: return "des_B";
    }
    return "?";
}

const std::vector<CorruptStat>& all_corruptible_stats() {
    static const std::vector<CorruptStat> all = {
        CorruptStat::des, CorruptStat::asc, CorruptStat::des_star, CorruptStat::asc_star,
        CorruptStat::exc, CorruptStat::drop, CorruptStat::fix, CorruptStat::cyc,
        CorruptStat::lrmin, CorruptStat::rlmin, CorruptStat::lrmax, CorruptStat::rlmax,
        CorruptStat::pk, CorruptStat::val, CorruptStat::dasc, CorruptStat::ddes,
        CorruptStat::pasc, CorruptStat::pdes, CorruptStat::impasc, CorruptStat::impdes,
        CorruptStat::pasc_hat, CorruptStat::impasc_hat,
        CorruptStat::ap, CorruptStat::lap, CorruptStat::ap2, CorruptStat::plap,
        CorruptStat::implap, CorruptStat::word_lrmin, CorruptStat::word_rlmin,
        CorruptStat::des_B,
    };
    return all;
}

PermStatRecord perm_stats(const Perm& p) {
    const int n = p.size();
    PermStatRecord r;
    if (n == 0) return r;

    auto at = [&](int i) -> int { // sentinel boundary pi(0) = pi(n+1) = 0
        return (i < 1 || i > n) ? 0 : p.v[static_cast<size_t>(i - 1)];
    };

    // position of each value, plus prefix maxima / suffix minima of positions
    // over value ranges, for the "all smaller values before/after" tests.
    std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) pos[static_cast<size_t>(at(i))] = i;
    std::vector<int> max_pos_le(static_cast<size_t>(n) + 1, 0);
    std::vector<int> min_pos_le(static_cast<size_t>(n) + 1, n + 1);
    for (int v = 1; v <= n; ++v) {
        max_pos_le[static_cast<size_t>(v)] = std::max(max_pos_le[static_cast<size_t>(v - 1)],
                                                      pos[static_cast<size_t>(v)]);
        min_pos_le[static_cast<size_t>(v)] = std::min(min_pos_le[static_cast<size_t>(v - 1)],
                                                      pos[static_cast<size_t>(v)]);
    }

    for (int i = 1; i <= n; ++i) {
        const int prev = at(i - 1), cur = at(i), next = at(i + 1);
        if (cur > next) ++r.des;
        if (prev < cur) ++r.asc;
        if (i <= n - 1 && cur > next) ++r.des_star;
        if (i <= n - 1 && cur < next) ++r.asc_star;
        if (cur > i) ++r.exc;
        if (cur < i) ++r.drop;
        if (cur == i) ++r.fix;
        if (prev < cur && cur > next) ++r.pk;
        if (prev > cur && cur < next) ++r.val;
        if (prev < cur && cur < next) ++r.dasc;
        if (prev > cur && cur > next) ++r.ddes;

        const bool smaller_all_left = max_pos_le[static_cast<size_t>(cur - 1)] < i;
        const bool smaller_all_right = min_pos_le[static_cast<size_t>(cur - 1)] > i;
        if (i >= 2 && prev < cur && smaller_all_left) ++r.pasc;
        if (i <= n - 1 && cur > next && smaller_all_right) ++r.pdes;
        if (prev < cur && smaller_all_left) ++r.pasc_hat;
    }

    for (int i = 1; i <= n; ++i) {
        bool lr = true, rl = true;
        for (int j = 1; j < i; ++j)
            if (at(j) <= at(i)) { lr = false; break; }
        if (lr) ++r.lrmin;
        for (int j = i + 1; j <= n; ++j)
            if (at(j) <= at(i)) { rl = false; break; }
        if (rl) ++r.rlmin;
        bool lrx = true, rlx = true;
        for (int j = 1; j < i; ++j)
            if (at(j) >= at(i)) { lrx = false; break; }
        if (lrx) ++r.lrmax;
        for (int j = i + 1; j <= n; ++j)
            if (at(j) >= at(i)) { rlx = false; break; }
        if (rlx) ++r.rlmax;
    }

    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int s = 1; s <= n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++r.cyc;
        int c = s;
        while (!seen[static_cast<size_t>(c)]) {
            seen[static_cast<size_t>(c)] = true;
            c = at(c);
        }
    }

    const CorruptStat corrupt = g_corrupt.load(std::memory_order_relaxed);
    if (corrupt != CorruptStat::none && is_primary_perm_field(corrupt)) {
        switch (corrupt) {
            case CorruptStat::ap: case CorruptStat::lap: case CorruptStat::ap2:
            case CorruptStat::plap: case CorruptStat::implap:
            case CorruptStat::word_lrmin: case CorruptStat::word_rlmin:
            case CorruptStat::des_B:
                break; // word / signed statistics, not ours
            default: ++field_of(r, corrupt);
        }
    }

    r.impasc = r.asc_star - r.pasc;
    r.impdes = r.des_star - r.pdes;
    r.impasc_hat = r.asc - r.pasc_hat;

    if (corrupt == CorruptStat::impasc || corrupt == CorruptStat::impdes ||
        corrupt == CorruptStat::impasc_hat)
        ++field_of(r, corrupt);

    return r;
}

StirlingStatRecord stirling_stats(const StirlingWord& word) {
    const auto& w = word.w;
    const int L = static_cast<int>(w.size());
    const int k = word.k;
    StirlingStatRecord r;
    if (L == 0) return r;

    auto at = [&](int i) -> int { // sigma_0 = sigma_{kn+1} = 0
        return (i < 1 || i > L) ? 0 : w[static_cast<size_t>(i - 1)];
    };

    // last position of each value, prefix maxima over value ranges
    std::vector<int> last_pos(static_cast<size_t>(word.n) + 1, 0);
    for (int i = 1; i <= L; ++i)
        last_pos[static_cast<size_t>(at(i))] = std::max(last_pos[static_cast<size_t>(at(i))], i);
    std::vector<int> max_last_le(static_cast<size_t>(word.n) + 1, 0);
    for (int v = 1; v <= word.n; ++v)
        max_last_le[static_cast<size_t>(v)] =
            std::max(max_last_le[static_cast<size_t>(v - 1)], last_pos[static_cast<size_t>(v)]);

    auto full_run = [&](int i) {
        for (int t = 1; t < k; ++t)
            if (at(i + t) != at(i)) return false;
        return true;
    };

    for (int i = 1; i <= L - k + 1; ++i) {
        if (at(i - 1) >= at(i) || !full_run(i)) continue;
        ++r.lap;
        if (i >= 2) ++r.ap;
        if (max_last_le[static_cast<size_t>(at(i) - 1)] < i) ++r.plap;
    }
    for (int i = 2; i <= L - 1; ++i)
        if (at(i - 1) < at(i) && at(i) == at(i + 1)) ++r.ap2;

    for (int i = 1; i <= L; ++i) {
        bool lr = true, rl = true;
        for (int j = 1; j < i; ++j)
            if (at(j) <= at(i)) { lr = false; break; }
        if (lr) ++r.lrmin;
        for (int j = i + 1; j <= L; ++j)
            if (at(j) <= at(i)) { rl = false; break; }
        if (rl) ++r.rlmin;
    }

    const CorruptStat corrupt = g_corrupt.load(std::memory_order_relaxed);
    switch (corrupt) {
        case CorruptStat::ap: ++r.ap; break;
        case CorruptStat::lap: ++r.lap; break;
        case CorruptStat::ap2: ++r.ap2; break;
        case CorruptStat::plap: ++r.plap; break;
        case CorruptStat::word_lrmin: ++r.lrmin; break;
        case CorruptStat::word_rlmin: ++r.rlmin; break;
        default: break;
    }

    r.implap = r.lap - r.plap;
    if (corrupt == CorruptStat::implap) ++r.implap;
    return r;
}

SignedStatRecord signed_stats(const SignedPerm& s) {
    const int n = s.size();
    SignedStatRecord r;
    auto at = [&](int i) -> int { return i == 0 ? 0 : s.v[static_cast<size_t>(i - 1)]; };
    for (int i = 0; i <= n - 1; ++i)
        if (at(i) > at(i + 1)) ++r.des_B;
    if (n > 0 && g_corrupt.load(std::memory_order_relaxed) == CorruptStat::des_B) ++r.des_B;
    return r;
}

} // namespace stirlab
