#include "stirlab/decomp.hpp"

namespace stirlab {

namespace {

// Exact division by (1 - v) via q_i = p_i + q_{i-1}; the final carry must
// vanish, otherwise the division is inexact.
Poly div_exact_one_minus(const Poly& p, const VarName& var) {
    if (p.is_zero()) return p;
    auto cs = p.coeff_list(var);
    Poly carry;
    Poly out;
    for (size_t i = 0; i < cs.size(); ++i) {
        carry += cs[i];
        out += carry * Poly::term(Rat(1), Monomial::var(var, static_cast<int>(i)));
    }
    if (!carry.is_zero())
        throw Error("division by (1-" + var + ") is not exact; degree/reference mismatch");
    // the top coefficient of `out` equals carry and was zero, so out is the quotient
    return out;
}

bool all_rational(const std::vector<Poly>& cs) {
    for (const auto& c : cs)
        if (!c.is_constant()) return false;
    return true;
}

} // namespace

bool is_palindromic(const Poly& f, int n, const VarName& var) {
    if (f.degree_in(var) > n) return false;
    for (int i = 0; 2 * i <= n; ++i)
        if (f.coeff_of(var, i) != f.coeff_of(var, n - i)) return false;
    return true;
}

SymmetricDecomposition symmetric_decompose(const Poly& f, int n, const VarName& var) {
    if (f.degree_in(var) > n)
        throw Error("symmetric_decompose: degree exceeds reference degree n=" + std::to_string(n));
    const Poly rev = f.reverse_in(var, n); // v^n f(1/v)
    const Poly x = Poly::var(var);
    SymmetricDecomposition d;
    d.n = n;
    d.a = div_exact_one_minus(f - x * rev, var);
    d.b = div_exact_one_minus(rev - f, var);
    if (d.a + x * d.b != f) throw Error("symmetric_decompose: internal reconstruction failed");
    return d;
}

std::vector<Poly> gamma_expand(const Poly& f, int n, const VarName& var) {
    if (!is_palindromic(f, n, var))
        throw Error("gamma_expand: polynomial is not symmetric with center " +
                    std::to_string(n) + "/2 in " + var);
    const Poly x = Poly::var(var);
    std::vector<Poly> gammas(static_cast<size_t>(n / 2) + 1);
    Poly rest = f;
    for (int j = 0; 2 * j <= n; ++j) {
        Poly g = rest.coeff_of(var, j);
        gammas[static_cast<size_t>(j)] = g;
        if (!g.is_zero())
            rest -= g * x.pow(j) * (Poly(1L) + x).pow(n - 2 * j);
    }
    if (!rest.is_zero()) throw Error("gamma_expand: expansion did not terminate");
    return gammas;
}

Poly gamma_reconstruct(const std::vector<Poly>& gammas, int n, const VarName& var) {
    const Poly x = Poly::var(var);
    Poly out;
    for (size_t j = 0; j < gammas.size(); ++j)
        out += gammas[j] * x.pow(static_cast<int>(j)) *
               (Poly(1L) + x).pow(n - 2 * static_cast<int>(j));
    return out;
}

PositivityReport positivity_report(const Poly& f, int n, const VarName& var) {
    if (f.degree_in(var) > n)
        throw Error("positivity_report: degree exceeds reference degree");
    auto cs = f.coeff_list(var);
    cs.resize(static_cast<size_t>(n) + 1);
    if (!all_rational(cs))
        throw Error("positivity_report: coefficients are symbolic; substitute parameter "
                    "values first");
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = cs[static_cast<size_t>(i)].constant_value();

    PositivityReport r;
    r.symmetric = is_palindromic(f, n, var);

    // unimodal: rises then falls
    {
        int i = 0;
        while (i + 1 <= n && c[static_cast<size_t>(i)] <= c[static_cast<size_t>(i + 1)]) ++i;
        bool ok = true;
        for (; i + 1 <= n; ++i)
            if (c[static_cast<size_t>(i)] < c[static_cast<size_t>(i + 1)]) { ok = false; break; }
        r.unimodal = ok;
    }

    // alternatingly increasing: f_0 <= f_n <= f_1 <= f_{n-1} <= ...
    {
        std::vector<int> order; // 0, n, 1, n-1, 2, ... until the indices meet
        int lo = 0, hi = n;
        while (lo <= hi) {
            order.push_back(lo);
            if (hi != lo) order.push_back(hi);
            ++lo;
            --hi;
        }
        bool ok = true;
        for (size_t t = 0; t + 1 < order.size(); ++t)
            if (c[static_cast<size_t>(order[t])] > c[static_cast<size_t>(order[t + 1])]) {
                ok = false;
                break;
            }
        r.alternatingly_increasing = ok;
    }

    if (r.symmetric) {
        bool pos = true;
        for (const auto& g : gamma_expand(f, n, var))
            if (!g.is_zero() && g.constant_value() < 0) { pos = false; break; }
        r.gamma_positive = pos;
    }

    {
        auto d = symmetric_decompose(f, n, var);
        auto nonneg_gammas = [&](const Poly& part, int deg) {
            if (part.is_zero()) return true;
            if (!is_palindromic(part, deg, var)) return false;
            for (const auto& g : gamma_expand(part, deg, var))
                if (!g.is_zero() && g.constant_value() < 0) return false;
            return true;
        };
        r.bi_gamma_positive = nonneg_gammas(d.a, n) && nonneg_gammas(d.b, n - 1);
    }
    return r;
}

namespace {

// gamma_{n+1,i,j} = gamma_{n,i-1,j} + (k+k^2)(i+1) gamma_{n,i+1,j-1}
//                 + k j gamma_{n,i,j} + 2k(n-i-2j+2) gamma_{n,i,j-1}
PartialGammaTable next_gamma_row(const PartialGammaTable& row, int n, const Poly& K) {
    PartialGammaTable out;
    auto get = [&](int i, int j) -> Poly {
        auto it = row.find({i, j});
        return it == row.end() ? Poly() : it->second;
    };
    int max_i = 0, max_j = 0;
    for (const auto& [ij, v] : row) {
        max_i = std::max(max_i, ij.first);
        max_j = std::max(max_j, ij.second);
    }
    const Poly kk = K + K * K; // k + k^2
    for (int i = 0; i <= max_i + 1; ++i) {
        for (int j = 0; j <= max_j + 1; ++j) {
            Poly v = get(i - 1, j);
            v += kk * Rat(i + 1) * get(i + 1, j - 1);
            v += K * Rat(j) * get(i, j);
            v += K * Rat(2L * (n - i - 2 * j + 2)) * get(i, j - 1);
            if (!v.is_zero()) out[{i, j}] = std::move(v);
        }
    }
    return out;
}

} // namespace

PartialGammaTable partial_gamma(int n, std::optional<int> k) {
    if (n < 1) throw Error("partial_gamma: need n >= 1");
    const Poly K = k ? Poly(static_cast<long>(*k)) : Poly::var("k");
    PartialGammaTable row;
    row[{1, 0}] = Poly(1L); // gamma_{1,1,0} = 1
    for (int m = 1; m < n; ++m) row = next_gamma_row(row, m, K);
    return row;
}

Poly partial_gamma_reconstruct(const PartialGammaTable& table, int n, std::optional<int> k) {
    const Poly x = Poly::var("x");
    const Poly K = k ? Poly(static_cast<long>(*k)) : Poly::var("k");
    const Poly one_kx = Poly(1L) + K * x;
    const Poly one_x = Poly(1L) + x;
    Poly out;
    for (const auto& [ij, g] : table) {
        const auto [i, j] = ij;
        int e = n - i - 2 * j;
        if (e < 0) throw Error("partial_gamma_reconstruct: negative basis exponent");
        out += one_kx.pow(i) * g * x.pow(j) * one_x.pow(e);
    }
    return out;
}

PartialGammaTable zeta_table(int n) {
    if (n < 1) throw Error("zeta_table: need n >= 1");
    PartialGammaTable row;
    row[{1, 0}] = Poly(1L);
    auto get = [](const PartialGammaTable& t, int i, int j) -> Poly {
        auto it = t.find({i, j});
        return it == t.end() ? Poly() : it->second;
    };
    // zeta_{n+1,i,j} = zeta_{n,i-1,j} + 3(i+1) zeta_{n,i+1,j-1}
    //                + 2j zeta_{n,i,j} + 2(n-i-2j+2) zeta_{n,i,j-1}
    for (int m = 1; m < n; ++m) {
        PartialGammaTable out;
        int max_i = 0, max_j = 0;
        for (const auto& [ij, v] : row) {
            max_i = std::max(max_i, ij.first);
            max_j = std::max(max_j, ij.second);
        }
        for (int i = 0; i <= max_i + 1; ++i) {
            for (int j = 0; j <= max_j + 1; ++j) {
                Poly v = get(row, i - 1, j);
                v += Rat(3L * (i + 1)) * get(row, i + 1, j - 1);
                v += Rat(2L * j) * get(row, i, j);
                v += Rat(2L * (m - i - 2 * j + 2)) * get(row, i, j - 1);
                if (!v.is_zero()) out[{i, j}] = std::move(v);
            }
        }
        row = std::move(out);
    }
    return row;
}

} // namespace stirlab
