#include "stirlab/combgen.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace stirlab;

TEST_CASE("permutation generation") {
    CHECK(gen_perms(0).size() == 1);
    CHECK(gen_perms(0)[0].v.empty());
    CHECK(gen_perms(3).size() == 6);
    auto p5 = gen_perms(5);
    CHECK(p5.size() == 120);
    std::set<std::vector<int>> distinct;
    for (const auto& p : p5) distinct.insert(p.v);
    CHECK(distinct.size() == 120);
    CHECK_THROWS_AS(gen_perms(11), const GuardError&);
}

TEST_CASE("signed permutation generation") {
    auto s1 = gen_signed_perms(1);
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].v == std::vector<int>{1});
    CHECK(s1[1].v == std::vector<int>{-1});
    CHECK(gen_signed_perms(2).size() == 8);
    CHECK(gen_signed_perms(4).size() == 384);
    CHECK_THROWS_AS(gen_signed_perms(9), const GuardError&);
}

TEST_CASE("k-Stirling generation counts and membership") {
    auto q22 = gen_stirling(2, 2);
    std::set<std::vector<int>> got;
    for (const auto& w : q22) got.insert(w.w);
    CHECK(got == std::set<std::vector<int>>{{1, 1, 2, 2}, {1, 2, 2, 1}, {2, 2, 1, 1}});

    CHECK(gen_stirling(3, 2).size() == 15);
    CHECK(gen_stirling(3, 3).size() == 28);
    CHECK(stirling_count(3, 2) == 15);
    CHECK(stirling_count(3, 3) == 28);

    // double factorial for k = 2
    for (int n = 0; n <= 6; ++n) {
        Int dfact = 1;
        for (int i = 1; i <= 2 * n - 1; i += 2) dfact *= i;
        CHECK(stirling_count(n, 2) == dfact);
    }
    CHECK_THROWS_AS(gen_stirling(9, 2, kDefaultStirlingGuard), const GuardError&);
}

TEST_CASE("generated words satisfy the Stirling condition and are distinct") {
    for (int k = 1; k <= 3; ++k) {
        for (int n = 0; n <= 4; ++n) {
            std::set<std::vector<int>> seen;
            for_each_stirling(n, k, [&](const StirlingWord& w) {
                CHECK(is_stirling_word(w.w, n, k));
                seen.insert(w.w);
            });
            CHECK(Int(static_cast<long>(seen.size())) == stirling_count(n, k));
        }
    }
}

TEST_CASE("brute-force filter oracle agrees with insertion") {
    // all multiset permutations, filtered by the condition, n <= 4
    for (int k = 2; k <= 3; ++k) {
        for (int n = 0; n <= 4 - (k - 2); ++n) {
            std::vector<int> multiset;
            for (int v = 1; v <= n; ++v)
                for (int c = 0; c < k; ++c) multiset.push_back(v);
            std::sort(multiset.begin(), multiset.end());
            std::set<std::vector<int>> filtered;
            do {
                if (is_stirling_word(multiset, n, k)) filtered.insert(multiset);
            } while (std::next_permutation(multiset.begin(), multiset.end()));
            std::set<std::vector<int>> generated;
            for_each_stirling(n, k, [&](const StirlingWord& w) { generated.insert(w.w); });
            CHECK(filtered == generated);
        }
    }
}

TEST_CASE("k = 1 words are exactly the permutations") {
    for (int n = 0; n <= 5; ++n) {
        std::set<std::vector<int>> words, perms;
        for_each_stirling(n, 1, [&](const StirlingWord& w) { words.insert(w.w); });
        for_each_perm(n, [&](const Perm& p) { perms.insert(p.v); });
        CHECK(words == perms);
    }
}

TEST_CASE("generation is deterministic and restartable") {
    auto first = gen_stirling(3, 2);
    auto second = gen_stirling(3, 2);
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) CHECK(first[i].w == second[i].w);
}

TEST_CASE("standard cycle form") {
    CHECK(cycle_form(Perm{{1, 2, 3}}).cycles ==
          std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(cycle_form(Perm{{2, 4, 1, 3}}).cycles == std::vector<std::vector<int>>{{1, 2, 4, 3}});
    // one-line 3 6 5 2 1 4 7 has cycles (1,3,5)(2,6,4)(7)
    CHECK(cycle_form(Perm{{3, 6, 5, 2, 1, 4, 7}}).cycles ==
          std::vector<std::vector<int>>{{1, 3, 5}, {2, 6, 4}, {7}});

    // concatenating the cycles visits every value once
    for (const auto& p : gen_perms(5)) {
        auto cf = cycle_form(p);
        std::set<int> seen;
        int prev_head = 0;
        for (const auto& cyc : cf.cycles) {
            CHECK(*std::min_element(cyc.begin(), cyc.end()) == cyc.front());
            CHECK(cyc.front() > prev_head);
            prev_head = cyc.front();
            for (int v : cyc) seen.insert(v);
        }
        CHECK(seen.size() == 5);
    }
}
