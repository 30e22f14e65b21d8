#include "stirlab/identities.hpp"
#include "stirlab/grammar.hpp"
#include "stirlab/stats.hpp"

#include <doctest.h>

using namespace stirlab;

TEST_CASE("registry is populated and sorted output is stable") {
    const auto& reg = identity_registry();
    CHECK(reg.size() >= 30);
    CHECK_THROWS_AS(run_identity("no-such-identity"), const Error&);
}

TEST_CASE("small worked instances") {
    auto proper = run_identity("thmproper", 2);
    CHECK(proper.pass);

    auto t24 = run_identity("thm24", 1);
    CHECK(t24.pass);

    auto convo = run_identity("convo-typeB", 3);
    CHECK(convo.pass);
}

TEST_CASE("degenerate bound still passes") {
    for (const auto& check : identity_registry()) {
        auto r = run_identity(check.id, 1);
        CHECK_MESSAGE(r.pass, check.id, ": ", r.counterexample);
    }
}

TEST_CASE("reports are reproducible") {
    auto a = run_identity("dumont", 4);
    auto b = run_identity("dumont", 4);
    CHECK(a.pass == b.pass);
    CHECK(a.bound == b.bound);
    CHECK(a.counterexample == b.counterexample);
}

TEST_CASE("sampling check is labeled") {
    auto r = run_identity("xu01-sample", 2);
    CHECK(r.pass);
    CHECK(r.sampling);
    CHECK(!r.note.empty());
}

TEST_CASE("a corrupted statistic fails with a counterexample") {
    struct Reset {
        ~Reset() { set_corrupt_stat(CorruptStat::none); }
    } reset;
    set_corrupt_stat(CorruptStat::exc);
    auto r = run_identity("lemmacycle", 3);
    CHECK_FALSE(r.pass);
    CHECK(!r.counterexample.empty());
    set_corrupt_stat(CorruptStat::none);
    CHECK(run_identity("lemmacycle", 3).pass);
}

TEST_CASE("run_all with tight bounds, sequential and parallel") {
    std::map<std::string, int> bounds;
    for (const auto& check : identity_registry()) bounds[check.id] = 2;
    auto seq = run_all(bounds, 1);
    auto par = run_all(bounds, 4);
    REQUIRE(seq.size() == par.size());
    for (size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].id == par[i].id);
        CHECK_MESSAGE(seq[i].pass, seq[i].id, ": ", seq[i].counterexample);
        CHECK(par[i].pass);
        if (i > 0) CHECK(seq[i - 1].id < seq[i].id);
    }
}
