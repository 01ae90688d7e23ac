#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace vinberg {

using Rat = mpq_class;
using Int = mpz_class;

// "p/q" with the "/q" omitted for integers; exact round trip.
std::string rat_str(const Rat& q);
Rat rat_parse(const std::string& s);

// exact conversion; throws std::domain_error unless q is a machine integer
long rat_to_long(const Rat& q);

long euler_phi(long m);
std::vector<long> divisors(long m);

// Phi_m, monic over Z, coefficients low -> high, degree phi(m).
const std::vector<Int>& cyclotomic_poly(long m);

// An element of Q(zeta_m) on the power basis 1, zeta, ..., zeta^{phi(m)-1}.
// Always stored reduced mod Phi_m; the conductor is not auto-minimized
// (use reduced() for the minimal-conductor canonical form).
class Cyclo {
public:
    Cyclo() : m_(1), c_(1) {}
    explicit Cyclo(const Rat& r) : m_(1), c_{r} {}
    explicit Cyclo(long n) : m_(1), c_{Rat(n)} {}
    Cyclo(long m, std::vector<Rat> zeta_poly);  // reduces mod Phi_m

    static Cyclo zeta(long m, long power = 1);

    long conductor() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;  // after conductor reduction
    Rat to_rational() const;   // throws std::domain_error if not rational

    // Canonical representative in the minimal conductor containing the value.
    Cyclo reduced() const;
    // The same value viewed in Q(zeta_n); n must be a multiple of conductor().
    Cyclo lifted(long n) const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

    Cyclo inverse() const;  // throws std::domain_error on zero
    Cyclo pow(long e) const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    std::string str() const;  // human-readable, e.g. "1/3 - 2*z^2"

private:
    long m_;
    std::vector<Rat> c_;  // length phi(m_)
};

inline Cyclo operator*(const Rat& r, Cyclo a) { return a *= Cyclo(r); }

}  // namespace vinberg
