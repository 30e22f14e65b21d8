#include "stirlab/series.hpp"

#include <sstream>

namespace stirlab {

TruncSeries::TruncSeries(int order) : order_(order) {
    if (order < 0) throw Error("series order must be nonnegative");
    c_.resize(static_cast<size_t>(order) + 1);
}

TruncSeries TruncSeries::constant(const Poly& c, int order) {
    TruncSeries s(order);
    s.c_[0] = c;
    return s;
}

const Poly& TruncSeries::coeff(int i) const {
    if (i < 0 || i > order_) throw Error("series coefficient index out of range");
    return c_[static_cast<size_t>(i)];
}

void TruncSeries::set_coeff(int i, Poly p) {
    if (i < 0 || i > order_) throw Error("series coefficient index out of range");
    c_[static_cast<size_t>(i)] = std::move(p);
}

void TruncSeries::check_same_order(const TruncSeries& o) const {
    if (order_ != o.order_)
        throw Error("series order mismatch: " + std::to_string(order_) + " vs " +
                    std::to_string(o.order_));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_same_order(o);
    TruncSeries s(order_);
    for (int i = 0; i <= order_; ++i) s.c_[i] = c_[i] + o.c_[i];
    return s;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    check_same_order(o);
    TruncSeries s(order_);
    for (int i = 0; i <= order_; ++i) s.c_[i] = c_[i] - o.c_[i];
    return s;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_same_order(o);
    TruncSeries s(order_);
    for (int i = 0; i <= order_; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (o.c_[j].is_zero()) continue;
            s.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return s;
}

TruncSeries TruncSeries::pow(int e) const {
    if (e < 0) throw Error("series pow: negative exponent");
    TruncSeries r = constant(Poly(1L), order_);
    TruncSeries b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return order_ == o.order_ && c_ == o.c_;
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    for (int i = 0; i <= order_; ++i) {
        if (i > 0) os << " + ";
        os << "(" << c_[i].to_string() << ")";
        if (i == 1) os << "*z";
        if (i > 1) os << "*z^" << i;
    }
    return os.str();
}

TruncSeries exp_poly(const Poly& c, int order) {
    TruncSeries s(order);
    Poly power(1L);
    Int fact = 1;
    s.set_coeff(0, Poly(1L));
    for (int i = 1; i <= order; ++i) {
        power *= c;
        fact *= i;
        s.set_coeff(i, power * Rat(Int(1), fact));
    }
    return s;
}

TruncSeries egf_of(const std::vector<Poly>& polys) {
    if (polys.empty()) throw Error("egf_of: empty coefficient list");
    TruncSeries s(static_cast<int>(polys.size()) - 1);
    Int fact = 1;
    for (size_t i = 0; i < polys.size(); ++i) {
        if (i > 1) fact *= static_cast<long>(i);
        s.set_coeff(static_cast<int>(i), polys[i] * Rat(Int(1), fact));
    }
    return s;
}

namespace {

// A_{n+1}^{(k)} = (nkx+1) A_n^{(k)} + kx(1-x) d/dx A_n^{(k)},  A_1^{(k)} = 1.
Poly one_over_k_eulerian(int n, int k) {
    Poly a(1L);
    const Poly x = Poly::var("x");
    for (int m = 1; m < n; ++m) {
        Poly next = (x * Rat(static_cast<long>(m) * k) + Poly(1L)) * a +
                    x * (Poly(1L) - x) * a.derivative("x") * Rat(k);
        a = next;
    }
    return a;
}

// Binomial series of (1-x)^(-1/k): coefficients prod_{j<t} (j + 1/k) / t!.
std::vector<Rat> binomial_series_coeffs(int k, int orderX) {
    std::vector<Rat> cs(static_cast<size_t>(orderX) + 1);
    Rat c = 1;
    cs[0] = c;
    for (int t = 1; t <= orderX; ++t) {
        c *= Rat(Int(1), Int(k)) + Rat(t - 1);
        c /= t;
        c.canonicalize();
        cs[static_cast<size_t>(t)] = c;
    }
    return cs;
}

// Coefficients of (1-x)^(-n): C(n-1+t, t).
std::vector<Rat> neg_power_coeffs(int n, int orderX) {
    std::vector<Rat> cs(static_cast<size_t>(orderX) + 1);
    for (int t = 0; t <= orderX; ++t) cs[static_cast<size_t>(t)] = Rat(binomial(n - 1 + t, t));
    return cs;
}

Poly series_from_coeffs(const std::vector<Rat>& cs) {
    Poly p;
    for (size_t t = 0; t < cs.size(); ++t)
        p.add_term(Monomial::var("x", static_cast<int>(t)), cs[t]);
    return p;
}

} // namespace

bool ogf_operator_check_with(int n, int k, int orderX, const Poly& ank,
                             const Poly& ank_reversed) {
    if (n < 1 || k < 1) throw Error("ogf_operator_check: need n >= 1 and k >= 1");
    if (orderX < n + 2) throw Error("ogf_operator_check: order too small, need >= n+2");

    const auto base = binomial_series_coeffs(k, orderX);
    const auto negn = neg_power_coeffs(n, orderX);

    // Term-wise action of the operators on x^t.
    Poly lhs_shifted, lhs_plain;
    for (int t = 0; t <= orderX; ++t) {
        Rat kt1 = rat_pow(Rat(static_cast<long>(k) * t + 1), n);
        Rat kt = rat_pow(Rat(static_cast<long>(k) * t), n);
        lhs_shifted.add_term(Monomial::var("x", t), base[static_cast<size_t>(t)] * kt1);
        lhs_plain.add_term(Monomial::var("x", t), base[static_cast<size_t>(t)] * kt);
    }

    const Poly expansion = (series_from_coeffs(negn) * series_from_coeffs(base)).truncate_in("x", orderX);
    const Poly rhs_shifted = (ank * expansion).truncate_in("x", orderX);
    const Poly rhs_plain = (ank_reversed * expansion).truncate_in("x", orderX);

    return lhs_shifted == rhs_shifted && lhs_plain == rhs_plain;
}

bool ogf_operator_check(int n, int k, int orderX) {
    const Poly ank = one_over_k_eulerian(n, k);
    return ogf_operator_check_with(n, k, orderX, ank, ank.reverse_in("x", n));
}

} // namespace stirlab
