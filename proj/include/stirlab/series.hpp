#pragma once

/*
 * Truncated power series in the distinguished variable z, with Poly
 * coefficients.  Arithmetic discards degrees beyond the truncation order,
 * so products are exact through z^order.  Used to check exponential
 * generating function identities in cross-multiplied polynomial form.
 */

#include "stirlab/poly.hpp"

#include <vector>

namespace stirlab {

class TruncSeries {
public:
    explicit TruncSeries(int order);
    static TruncSeries constant(const Poly& c, int order);

    int order() const { return order_; }
    const Poly& coeff(int i) const;
    void set_coeff(int i, Poly p);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries pow(int e) const;

    bool operator==(const TruncSeries& o) const;
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_same_order(const TruncSeries& o) const;
    int order_;
    std::vector<Poly> c_;
};

/// exp(c z) truncated: sum of c^i z^i / i! for i <= order.
TruncSeries exp_poly(const Poly& c, int order);

/// Series whose z^n coefficient is polys[n] / n!; order = polys.size() - 1.
TruncSeries egf_of(const std::vector<Poly>& polys);

/// Checks the two differential-operator identities for the 1/k-Eulerian
/// polynomial against the binomial series of (1-x)^(-1/k), expanded to
/// x^orderX with exact rational coefficients.  Returns false on mismatch.
bool ogf_operator_check(int n, int k, int orderX);

/// Same check with the polynomial pair supplied by the caller, so tests can
/// verify that a perturbed polynomial breaks the identity.
bool ogf_operator_check_with(int n, int k, int orderX, const Poly& ank,
                             const Poly& ank_reversed);

} // namespace stirlab
