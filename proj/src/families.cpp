#include "stirlab/families.hpp"

#include "stirlab/combgen.hpp"
#include "stirlab/decomp.hpp"
#include "stirlab/grammar.hpp"
#include "stirlab/stats.hpp"

#include <array>
#include <functional>

namespace stirlab {

namespace {

const Poly& X() { static const Poly x = Poly::var("x"); return x; }
const Poly& one() { static const Poly p(1L); return p; }

Poly kpoly(std::optional<int> k) { return k ? Poly(static_cast<long>(*k)) : Poly::var("k"); }

struct NameTag {
    const char* name;
    FamilyTag tag;
};
constexpr std::array<NameTag, 16> kNames = {{
    {"A", FamilyTag::A}, {"B", FamilyTag::B}, {"M", FamilyTag::M}, {"N", FamilyTag::N},
    {"Ak", FamilyTag::Ak}, {"PQ", FamilyTag::PQ}, {"AlphaBeta", FamilyTag::AlphaBeta},
    {"Pxy", FamilyTag::Pxy}, {"Mq", FamilyTag::Mq}, {"GammaK", FamilyTag::GammaK},
    {"ZetaK2", FamilyTag::ZetaK2}, {"XiEta", FamilyTag::XiEta}, {"FG", FamilyTag::FG},
    {"ABdecomp", FamilyTag::ABdecomp}, {"Fn", FamilyTag::Fn}, {"ank", FamilyTag::Ank},
}};

} // namespace

std::optional<FamilyTag> family_from_string(const std::string& name) {
    for (const auto& nt : kNames)
        if (name == nt.name) return nt.tag;
    return std::nullopt;
}

std::string family_name(FamilyTag tag) {
    for (const auto& nt : kNames)
        if (tag == nt.tag) return nt.name;
    return "?";
}

bool family_is_table(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::GammaK: case FamilyTag::ZetaK2: case FamilyTag::XiEta:
        case FamilyTag::FG: case FamilyTag::ABdecomp: case FamilyTag::Fn:
        case FamilyTag::Ank:
            return true;
        default: return false;
    }
}

std::optional<Route> route_from_string(const std::string& name) {
    if (name == "enum" || name == "enumeration") return Route::enumeration;
    if (name == "rec" || name == "recurrence") return Route::recurrence;
    if (name == "grammar") return Route::grammar;
    return std::nullopt;
}

bool has_route(FamilyTag tag, Route route, bool symbolic_k) {
    switch (route) {
        case Route::enumeration:
            switch (tag) {
                case FamilyTag::A: case FamilyTag::B: case FamilyTag::M: case FamilyTag::N:
                case FamilyTag::Ak: case FamilyTag::PQ: case FamilyTag::AlphaBeta:
                case FamilyTag::Pxy: case FamilyTag::Mq:
                    return true;
                default: return false;
            }
        case Route::recurrence:
            switch (tag) {
                case FamilyTag::A: case FamilyTag::B: case FamilyTag::M: case FamilyTag::N:
                case FamilyTag::Ak: case FamilyTag::PQ: case FamilyTag::AlphaBeta:
                case FamilyTag::Pxy: case FamilyTag::Mq: case FamilyTag::Fn:
                    return true;
                default: return false;
            }
        case Route::grammar:
            switch (tag) {
                case FamilyTag::A: case FamilyTag::M: case FamilyTag::N: case FamilyTag::PQ:
                case FamilyTag::AlphaBeta: case FamilyTag::Pxy: case FamilyTag::Mq:
                    return true;
                case FamilyTag::Ak:
                    return !symbolic_k; // rules need a concrete exponent
                default: return false;
            }
    }
    return false;
}

// --- enumeration route ------------------------------------------------------

Poly build_by_enumeration(FamilyTag tag, int n, std::optional<int> k) {
    Poly out;
    switch (tag) {
        case FamilyTag::A:
            for_each_perm(n, [&](const Perm& p) {
                out.add_term(Monomial::var("x", perm_stats(p).des), Rat(1));
            });
            return out;
        case FamilyTag::B:
            for_each_signed_perm(n, [&](const SignedPerm& s) {
                out.add_term(Monomial::var("x", signed_stats(s).des_B), Rat(1));
            });
            return out;
        case FamilyTag::M:
            for_each_stirling(n, 2, [&](const StirlingWord& w) {
                out.add_term(Monomial::var("x", stirling_stats(w).ap), Rat(1));
            });
            return out;
        case FamilyTag::N:
            for_each_stirling(n, 2, [&](const StirlingWord& w) {
                out.add_term(Monomial::var("x", stirling_stats(w).lap), Rat(1));
            });
            return out;
        case FamilyTag::Ak: {
            if (k && *k < 1) throw Error("Ak: k must be positive");
            for_each_perm(n, [&](const Perm& p) {
                auto st = perm_stats(p);
                if (k)
                    out.add_term(Monomial::var("x", st.exc),
                                 rat_pow(Rat(static_cast<long>(*k)), n - st.cyc));
                else
                    out.add_term(Monomial::of({{"x", st.exc}, {"k", n - st.cyc}}), Rat(1));
            });
            return out;
        }
        case FamilyTag::PQ:
            for_each_perm(n, [&](const Perm& p) {
                auto st = perm_stats(p);
                out.add_term(Monomial::of({{"x", st.exc}, {"y", st.drop}, {"p", st.fix}, {"q", st.cyc}}),
                             Rat(1));
            });
            return out;
        case FamilyTag::AlphaBeta:
            for_each_perm(n + 1, [&](const Perm& p) {
                auto st = perm_stats(p);
                out.add_term(Monomial::of({{"x", st.asc_star},
                                           {"y", st.des_star},
                                           {"alpha", st.lrmax - 1},
                                           {"beta", st.rlmax - 1}}),
                             Rat(1));
            });
            return out;
        case FamilyTag::Pxy:
            for_each_stirling(n, 2, [&](const StirlingWord& w) {
                auto st = stirling_stats(w);
                out.add_term(Monomial::of({{"x", st.lap}, {"y", st.ap}}), Rat(1));
            });
            return out;
        case FamilyTag::Mq:
            for_each_stirling(n, 2, [&](const StirlingWord& w) {
                auto st = stirling_stats(w);
                out.add_term(Monomial::of({{"x", st.ap}, {"q", st.lrmin}}), Rat(1));
            });
            return out;
        default:
            throw Error("family " + family_name(tag) + " has no enumeration route");
    }
}

// --- recurrence route -------------------------------------------------------

namespace {

// common shape: F_{n+1} = lin * F_n + scale * x(1-x) F_n'
Poly iterate_eulerian(int n, const Poly& init,
                      const std::function<Poly(int)>& lin, const Poly& deriv_scale) {
    Poly f = init;
    const Poly xx = X() * (one() - X());
    for (int m = 0; m < n; ++m) f = lin(m) * f + deriv_scale * xx * f.derivative("x");
    return f;
}

} // namespace

Poly pq_polynomial_recurrence(int n) {
    // A_{n+1} = p q A_n + x y (d/dx + d/dy + d/dp) A_n
    Poly a(1L);
    const Poly pq = Poly::var("p") * Poly::var("q");
    const Poly xy = Poly::var("x") * Poly::var("y");
    for (int m = 0; m < n; ++m)
        a = pq * a + xy * (a.derivative("x") + a.derivative("y") + a.derivative("p"));
    return a;
}

Poly transform_pq(const Poly& pq, const VarName& pvar, const VarName& qvar,
                  const Poly& P, const Poly& Q) {
    Poly out;
    for (const auto& [m, c] : pq.terms()) {
        const int f = m.exponent(pvar);
        const int cyc = m.exponent(qvar);
        if (f > cyc)
            throw Error("transform_pq: exponent of " + pvar + " exceeds exponent of " + qvar);
        Monomial rest = m.with_exponent(pvar, 0).with_exponent(qvar, 0);
        out += Poly::term(c, rest) * P.pow(f) * Q.pow(cyc - f);
    }
    return out;
}

std::pair<std::vector<Poly>, std::vector<Poly>> xi_eta_rows(int n) {
    if (n < 1) throw Error("xi_eta_rows: need n >= 1");
    std::vector<Poly> xi = {one()}, eta = {one()};
    auto get = [](const std::vector<Poly>& v, int i) -> Poly {
        return (i < 0 || i >= static_cast<int>(v.size())) ? Poly() : v[static_cast<size_t>(i)];
    };
    for (int m = 1; m < n; ++m) {
        std::vector<Poly> xi2(static_cast<size_t>((m + 1) / 2) + 1);
        std::vector<Poly> eta2(static_cast<size_t>(m / 2) + 1);
        for (int i = 0; i < static_cast<int>(xi2.size()); ++i)
            xi2[static_cast<size_t>(i)] = Rat(1 + 2 * i) * get(xi, i) +
                                          Rat(4L * (m - 2 * i + 2)) * get(xi, i - 1) +
                                          get(eta, i - 1);
        for (int j = 0; j < static_cast<int>(eta2.size()); ++j)
            eta2[static_cast<size_t>(j)] = Rat(2 + 2 * j) * get(eta, j) +
                                           Rat(4L * (m - 2 * j + 1)) * get(eta, j - 1) +
                                           get(xi, j);
        xi = std::move(xi2);
        eta = std::move(eta2);
    }
    while (xi.size() > 1 && xi.back().is_zero()) xi.pop_back();
    while (eta.size() > 1 && eta.back().is_zero()) eta.pop_back();
    return {xi, eta};
}

std::pair<std::vector<Poly>, std::vector<Poly>> fg_rows(int n) {
    if (n < 1) throw Error("fg_rows: need n >= 1");
    const Poly q = Poly::var("q");
    std::vector<Poly> f = {q}, g = {Poly(2L) - q};
    auto get = [](const std::vector<Poly>& v, int i) -> Poly {
        return (i < 0 || i >= static_cast<int>(v.size())) ? Poly() : v[static_cast<size_t>(i)];
    };
    for (int m = 1; m < n; ++m) {
        std::vector<Poly> f2(static_cast<size_t>((m + 1) / 2) + 1);
        std::vector<Poly> g2(static_cast<size_t>(m / 2) + 1);
        for (int i = 0; i < static_cast<int>(f2.size()); ++i)
            f2[static_cast<size_t>(i)] = (q + Poly(2L * i)) * get(f, i) +
                                         Rat(4L * (m - 2 * i + 2)) * get(f, i - 1) +
                                         q * get(g, i - 1);
        for (int j = 0; j < static_cast<int>(g2.size()); ++j)
            g2[static_cast<size_t>(j)] = Rat(2L * (1 + j)) * get(g, j) +
                                         Rat(4L * (m - 2 * j + 1)) * get(g, j - 1) +
                                         (Poly(2L) - q) * get(f, j);
        f = std::move(f2);
        g = std::move(g2);
    }
    while (f.size() > 1 && f.back().is_zero()) f.pop_back();
    while (g.size() > 1 && g.back().is_zero()) g.pop_back();
    return {f, g};
}

std::pair<Poly, Poly> ab_decomp_pair(int n) {
    if (n < 1) throw Error("ab_decomp_pair: need n >= 1");
    Poly a(1L), b;
    const Poly xx2 = Rat(2) * X() * (one() - X());
    for (int m = 1; m < n; ++m) {
        Poly a2 = (one() + X() + Rat(2L * (m - 1)) * X()) * a + xx2 * a.derivative("x") + X() * b;
        Poly b2 = Rat(2) * (one() + Rat(m - 1) * X()) * b + xx2 * b.derivative("x") + a;
        a = std::move(a2);
        b = std::move(b2);
    }
    return {a, b};
}

std::vector<Poly> ank_row(int n) {
    if (n < 1) throw Error("ank_row: need n >= 1");
    std::vector<Poly> row = {Poly(), one()}; // a(1,1) = 1; index 0 unused
    auto get = [](const std::vector<Poly>& v, int i) -> Poly {
        return (i < 0 || i >= static_cast<int>(v.size())) ? Poly() : v[static_cast<size_t>(i)];
    };
    for (int m = 2; m <= n; ++m) {
        std::vector<Poly> row2(static_cast<size_t>((m + 1) / 2) + 1);
        for (int j = 1; j < static_cast<int>(row2.size()); ++j)
            row2[static_cast<size_t>(j)] =
                Rat(j) * get(row, j) + Rat(2L * m - 4L * j + 4L) * get(row, j - 1);
        row = std::move(row2);
    }
    return row;
}

Poly pxy_from_xi_eta(int n) {
    auto [xi, eta] = xi_eta_rows(n);
    const Poly x = Poly::var("x");
    const Poly xy = Poly::var("x") * Poly::var("y");
    const Poly u = one() + xy;
    Poly out;
    for (size_t i = 0; i < xi.size(); ++i)
        out += x * xi[i] * xy.pow(static_cast<int>(i)) * u.pow(n - 2 * static_cast<int>(i));
    for (size_t j = 0; j < eta.size(); ++j)
        out += xy * eta[j] * xy.pow(static_cast<int>(j)) * u.pow(n - 1 - 2 * static_cast<int>(j));
    return out;
}

Poly mq_from_fg(int n) {
    auto [f, g] = fg_rows(n - 1);
    const Poly q = Poly::var("q");
    const Poly x = X();
    const Poly u = one() + x;
    Poly out;
    for (size_t i = 0; i < f.size(); ++i)
        out += q * f[i] * x.pow(static_cast<int>(i)) * u.pow(n - 1 - 2 * static_cast<int>(i));
    for (size_t j = 0; j < g.size(); ++j)
        out += x * q * g[j] * x.pow(static_cast<int>(j)) * u.pow(n - 2 - 2 * static_cast<int>(j));
    return out;
}

Poly build_by_recurrence(FamilyTag tag, int n, std::optional<int> k) {
    switch (tag) {
        case FamilyTag::A:
            return iterate_eulerian(n, one(), [](int m) { return Rat(m + 1) * X(); }, one());
        case FamilyTag::B:
            return iterate_eulerian(n, one(),
                                    [](int m) { return Rat(2L * m) * X() + one() + X(); }, Poly(2L));
        case FamilyTag::M:
            return iterate_eulerian(n, one(),
                                    [](int m) { return Rat(2L * m) * X() + one(); }, Poly(2L));
        case FamilyTag::N:
            return iterate_eulerian(n, one(),
                                    [](int m) { return Rat(2L * m + 1) * X(); }, Poly(2L));
        case FamilyTag::Ak: {
            if (n == 0) return one();
            const Poly K = kpoly(k);
            Poly a(1L);
            const Poly xx = X() * (one() - X());
            for (int m = 1; m < n; ++m)
                a = (Rat(m) * K * X() + one()) * a + K * xx * a.derivative("x");
            return a;
        }
        case FamilyTag::PQ:
            return pq_polynomial_recurrence(n);
        case FamilyTag::AlphaBeta: {
            const Poly alpha = Poly::var("alpha"), beta = Poly::var("beta");
            return transform_pq(pq_polynomial_recurrence(n), "p", "q",
                                alpha * Poly::var("x") + beta * Poly::var("y"), alpha + beta);
        }
        case FamilyTag::Pxy:
            if (n == 0) return one();
            if (n == 1) return X();
            return pxy_from_xi_eta(n - 1);
        case FamilyTag::Mq:
            if (n == 0) return one();
            if (n == 1) return Poly::var("q");
            return mq_from_fg(n);
        case FamilyTag::Fn: {
            Poly f(1L);
            const Poly x = X();
            const Poly x2 = x * x;
            for (int m = 0; m < n; ++m)
                f = (one() + x + Rat(4L * m) * x2) * f + x * (one() - Rat(4) * x2) * f.derivative("x");
            return f;
        }
        default:
            throw Error("family " + family_name(tag) + " has no scalar recurrence route");
    }
}

// --- grammar route ----------------------------------------------------------

namespace {

const Grammar& dumont_grammar() {
    static const Grammar g = parse_grammar("a -> a*b\nb -> a*b\n");
    return g;
}

const Grammar& cycle_pq_grammar() {
    static const Grammar g = parse_grammar("I -> I*p*q\np -> x*y\nx -> x*y\ny -> x*y\n");
    return g;
}

const Grammar& alpha_beta_grammar() {
    static const Grammar g =
        parse_grammar("a -> a*alpha*x\nb -> b*beta*y\nx -> x*y\ny -> x*y\n");
    return g;
}

const Grammar& lap_ap_grammar() {
    static const Grammar g =
        parse_grammar("I -> J*z\nJ -> J*z^2 + I*x*z\nx -> 2*x*z^2\nz -> x*z\n");
    return g;
}

Grammar left_plateau_grammar(int k) {
    const std::string kxz = std::to_string(k) + "*x*z";
    return parse_grammar("I -> I*y\ny -> " + kxz + "\nx -> " + kxz + "\nz -> " + kxz + "\n");
}

Grammar q_plateau_grammar(int k) {
    return parse_grammar("I -> q*I*y^" + std::to_string(k) +
                         "\nx -> 2*x*y^" + std::to_string(k) +
                         "\ny -> x*y^" + std::to_string(k - 1) + "\n");
}

Grammar stirling_word_grammar(int k) {
    return parse_grammar("a -> a*b^" + std::to_string(k) +
                         "\nb -> a^" + std::to_string(k) + "*b\n");
}

} // namespace

Poly ank_from_grammar(int n, int k) {
    if (k < 1) throw Error("ank_from_grammar: k must be positive");
    const Poly d = derive_n(stirling_word_grammar(k), Poly::var("a"), n)
                       .substitute({{"b", one()}});
    // terms are c_j a^(kj+1); read off A_n^{(k)} = sum c_j x^j
    Poly out;
    for (const auto& [m, c] : d.terms()) {
        const int e = m.exponent("a");
        if ((e - 1) % k != 0 || m.degree() != e)
            throw Error("ank_from_grammar: unexpected monomial " + m.to_string());
        out.add_term(Monomial::var("x", (e - 1) / k), c);
    }
    return out;
}

Poly build_by_grammar(FamilyTag tag, int n, std::optional<int> k) {
    switch (tag) {
        case FamilyTag::A:
            if (n == 0) return one(); // the derivation identity starts at n = 1
            return derive_then_substitute(dumont_grammar(), Poly::var("a"), n,
                                          {{"a", X()}, {"b", one()}});
        case FamilyTag::N:
            // left-plateau enumerator: substitute both plateau markers by x
            return derive_then_substitute(left_plateau_grammar(2), Poly::var("I"), n,
                                          {{"I", one()}, {"y", X()}, {"z", one()}});
        case FamilyTag::M:
            return build_by_grammar(FamilyTag::N, n, k).reverse_in("x", n);
        case FamilyTag::Ak:
            if (!k) throw Error("Ak grammar route needs a concrete k");
            return ank_from_grammar(n, *k);
        case FamilyTag::PQ:
            return derive_then_substitute(cycle_pq_grammar(), Poly::var("I"), n, {{"I", one()}});
        case FamilyTag::AlphaBeta:
            return derive_then_substitute(alpha_beta_grammar(),
                                          Poly::var("a") * Poly::var("b"), n,
                                          {{"a", one()}, {"b", one()}});
        case FamilyTag::Pxy:
            return derive_then_substitute(lap_ap_grammar(), Poly::var("I"), n,
                                          {{"I", one()},
                                           {"J", X()},
                                           {"x", X() * Poly::var("y")},
                                           {"z", one()}});
        case FamilyTag::Mq:
            return derive_then_substitute(q_plateau_grammar(2), Poly::var("I"), n,
                                          {{"I", one()}, {"y", one()}});
        default:
            throw Error("family " + family_name(tag) + " has no grammar route");
    }
}

Poly build(FamilyTag tag, Route route, int n, std::optional<int> k) {
    switch (route) {
        case Route::enumeration: return build_by_enumeration(tag, n, k);
        case Route::recurrence: return build_by_recurrence(tag, n, k);
        case Route::grammar: return build_by_grammar(tag, n, k);
    }
    throw Error("unknown route");
}

CoeffTables coeff_table(FamilyTag tag, int n, std::optional<int> k) {
    CoeffTables t;
    switch (tag) {
        case FamilyTag::GammaK:
            t.primary = partial_gamma(n, k);
            return t;
        case FamilyTag::ZetaK2:
            t.primary = zeta_table(n);
            return t;
        case FamilyTag::XiEta: {
            auto [xi, eta] = xi_eta_rows(n);
            for (size_t i = 0; i < xi.size(); ++i)
                if (!xi[i].is_zero()) t.primary[{static_cast<int>(i), 0}] = xi[i];
            for (size_t j = 0; j < eta.size(); ++j)
                if (!eta[j].is_zero()) t.secondary[{static_cast<int>(j), 0}] = eta[j];
            return t;
        }
        case FamilyTag::FG: {
            auto [f, g] = fg_rows(n);
            for (size_t i = 0; i < f.size(); ++i)
                if (!f[i].is_zero()) t.primary[{static_cast<int>(i), 0}] = f[i];
            for (size_t j = 0; j < g.size(); ++j)
                if (!g[j].is_zero()) t.secondary[{static_cast<int>(j), 0}] = g[j];
            return t;
        }
        case FamilyTag::ABdecomp: {
            auto [a, b] = ab_decomp_pair(n);
            t.primary[{0, 0}] = a;
            t.secondary[{0, 0}] = b;
            return t;
        }
        case FamilyTag::Fn:
            t.primary[{0, 0}] = build_by_recurrence(FamilyTag::Fn, n, {});
            return t;
        case FamilyTag::Ank: {
            auto row = ank_row(n);
            for (size_t j = 1; j < row.size(); ++j)
                if (!row[j].is_zero()) t.primary[{static_cast<int>(j), 0}] = row[j];
            return t;
        }
        default:
            throw Error("family " + family_name(tag) + " is not a coefficient table");
    }
}

Poly table_get(const std::map<std::pair<int, int>, Poly>& t, int i, int j) {
    auto it = t.find({i, j});
    return it == t.end() ? Poly() : it->second;
}

} // namespace stirlab
