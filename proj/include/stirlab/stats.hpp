#pragma once

/*
 * Statistics on permutations, signed permutations and k-Stirling
 * permutations.  Boundary conventions: permutations get sentinels
 * pi(0) = pi(n+1) = 0, words get sigma_0 = sigma_{kn+1} = 0.
 *
 * "Proper" statistics use the set-containment reading: a position is proper
 * when every strictly smaller value lies entirely on the prescribed side.
 * Each evaluation precomputes value -> positions once, so a full record
 * costs O(n) aside from cycle finding.
 */

#include "stirlab/combgen.hpp"

namespace stirlab {

struct PermStatRecord {
    int des = 0, asc = 0, des_star = 0, asc_star = 0;
    int exc = 0, drop = 0, fix = 0, cyc = 0;
    int lrmin = 0, rlmin = 0, lrmax = 0, rlmax = 0;
    int pk = 0, val = 0, dasc = 0, ddes = 0;
    int pasc = 0, pdes = 0, impasc = 0, impdes = 0;
    int pasc_hat = 0, impasc_hat = 0;
};

struct StirlingStatRecord {
    int ap = 0, lap = 0, ap2 = 0, plap = 0, implap = 0;
    int lrmin = 0, rlmin = 0;
};

struct SignedStatRecord {
    int des_B = 0;
};

PermStatRecord perm_stats(const Perm& p);
StirlingStatRecord stirling_stats(const StirlingWord& w);
SignedStatRecord signed_stats(const SignedPerm& s);

// ---------------------------------------------------------------------------
// Mutation test hook.  When a corruption is armed, the named field of every
// record for a nonempty object is shifted by one *before* dependent fields
// are derived from it, so downstream enumerators in the identity suite see
// the corruption.  Only tests arm this.
enum class CorruptStat {
    none,
    des, asc, des_star, asc_star, exc, drop, fix, cyc,
    lrmin, rlmin, lrmax, rlmax, pk, val, dasc, ddes,
    pasc, pdes, impasc, impdes, pasc_hat, impasc_hat,
    ap, lap, ap2, plap, implap, word_lrmin, word_rlmin,
    des_B,
};

void set_corrupt_stat(CorruptStat which);
CorruptStat corrupt_stat();
const char* corrupt_stat_name(CorruptStat which);
const std::vector<CorruptStat>& all_corruptible_stats();

} // namespace stirlab
