#pragma once

// Exact arithmetic with sums of roots of unity, represented in the
// group ring Q[x]/(x^e - 1).  Character values built from explicit
// roots stay canonical under ring operations (they mirror eigenvalue
// multisets), so equality of representatives is the right notion for
// representation arithmetic.  Reduction modulo the e-th cyclotomic
// polynomial recovers the underlying complex value when a genuine
// number is needed (orthogonality checks, integrality extraction).

#include <gmpxx.h>

#include <string>
#include <vector>

namespace grw::rep {

class Cyclo {
public:
    Cyclo() : e_(1), c_(1, 0) {}
    explicit Cyclo(int e) : e_(e), c_(e, 0) {}

    static Cyclo root(int e, int64_t k);  // x^k
    static Cyclo integer(int e, const mpq_class& n);

    int modulus() const { return e_; }
    const mpq_class& coeff(int k) const { return c_.at(k); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool operator==(const Cyclo& o) const { return e_ == o.e_ && c_ == o.c_; }

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator*(const mpq_class& s) const;

    Cyclo conj() const;                  // x -> x^{e-1}
    Cyclo subst_power(int64_t k) const;  // x -> x^k

    // Remainder modulo Phi_e: coordinates of the actual complex value
    // in the power basis of Q(zeta_e).
    std::vector<mpq_class> primitive_part() const;
    // The value is the rational q (i.e. the remainder is constant q).
    bool is_rational_value(mpq_class& q) const;

    std::string str() const;

private:
    int e_;
    std::vector<mpq_class> c_;
};

// Coefficients of the cyclotomic polynomial Phi_e (degree phi(e)),
// computed by iterated exact division of x^e - 1; memoized.
const std::vector<mpz_class>& cyclotomic_poly(int e);

}  // namespace grw::rep
