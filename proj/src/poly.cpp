#include "stirlab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace stirlab {

Monomial Monomial::var(const VarName& v, int exp) {
    if (v.empty()) throw Error("variable name must be nonempty");
    Monomial m;
    if (exp < 0) throw Error("negative exponent in monomial");
    if (exp > 0) m.exps_[v] = exp;
    return m;
}

Monomial Monomial::of(std::initializer_list<std::pair<VarName, int>> vs) {
    Monomial m;
    for (const auto& [v, e] : vs) {
        if (v.empty()) throw Error("variable name must be nonempty");
        if (e < 0) throw Error("negative exponent in monomial");
        if (e > 0) m.exps_[v] += e;
    }
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

int Monomial::exponent(const VarName& v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m = *this;
    for (const auto& [v, e] : o.exps_) m.exps_[v] += e;
    return m;
}

Monomial Monomial::with_exponent(const VarName& v, int e) const {
    Monomial m = *this;
    if (e < 0) throw Error("negative exponent in monomial");
    if (e == 0)
        m.exps_.erase(v);
    else
        m.exps_[v] = e;
    return m;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(exps_.begin(), exps_.end(),
                                        o.exps_.begin(), o.exps_.end());
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << v;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

Poly::Poly(long v) {
    if (v != 0) terms_[Monomial()] = Rat(v);
}

Poly::Poly(const Int& v) {
    if (v != 0) terms_[Monomial()] = Rat(v);
}

Poly::Poly(const Rat& v) {
    if (v != 0) terms_[Monomial()] = v;
}

Poly Poly::var(const VarName& v) { return term(Rat(1), Monomial::var(v)); }

Poly Poly::term(const Rat& coeff, const Monomial& m) {
    Poly p;
    if (coeff != 0) p.terms_[m] = coeff;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw Error("constant_value: polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

std::set<VarName> Poly::vars() const {
    std::set<VarName> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents()) s.insert(v);
    return s;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Poly::degree_in(const VarName& v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p;
    for (const auto& [m, c] : terms_) p.terms_[m] = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly p;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) p.add_term(ma * mb, ca * cb);
    return p;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::operator*(const Rat& c) const {
    Poly p;
    if (c == 0) return p;
    for (const auto& [m, cc] : terms_) p.terms_[m] = cc * c;
    return p;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw Error("pow: negative exponent");
    Poly r(1L);
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return r;
}

Poly Poly::derivative(const VarName& v) const {
    Poly p;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        p.add_term(m.with_exponent(v, e - 1), c * e);
    }
    return p;
}

Poly Poly::substitute(const std::map<VarName, Poly>& bindings) const {
    Poly result;
    for (const auto& [m, c] : terms_) {
        Poly prod(c);
        Monomial untouched;
        for (const auto& [v, e] : m.exponents()) {
            auto it = bindings.find(v);
            if (it == bindings.end())
                untouched = untouched * Monomial::var(v, e);
            else
                prod *= it->second.pow(e);
        }
        result += prod * Poly::term(Rat(1), untouched);
    }
    return result;
}

Poly Poly::reverse_in(const VarName& v, int n) const {
    int d = degree_in(v);
    if (d > n)
        throw Error("reverse_in: degree " + std::to_string(d) + " in " + v +
                    " exceeds reference degree " + std::to_string(n));
    Poly p;
    for (const auto& [m, c] : terms_)
        p.add_term(m.with_exponent(v, n - m.exponent(v)), c);
    return p;
}

Poly Poly::coeff_of(const VarName& v, int e) const {
    if (e < 0) throw Error("coeff_of: negative exponent");
    Poly p;
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) == e) p.add_term(m.with_exponent(v, 0), c);
    return p;
}

std::vector<Poly> Poly::coeff_list(const VarName& v) const {
    std::vector<Poly> cs(static_cast<size_t>(degree_in(v)) + 1);
    for (const auto& [m, c] : terms_)
        cs[static_cast<size_t>(m.exponent(v))].add_term(m.with_exponent(v, 0), c);
    return cs;
}

Poly Poly::truncate_in(const VarName& v, int bound) const {
    Poly p;
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) <= bound) p.add_term(m, c);
    return p;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (m.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << m.to_string();
        else
            os << mag.get_str() << "*" << m.to_string();
    }
    return os.str();
}

} // namespace stirlab
