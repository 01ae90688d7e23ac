#include "vinberg/scalars.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vinberg {

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

long rat_to_long(const Rat& q) {
    if (q.get_den() != 1) throw std::domain_error("rat_to_long: not an integer");
    Int n = q.get_num();
    if (!n.fits_slong_p()) throw std::domain_error("rat_to_long: out of range");
    return n.get_si();
}

long euler_phi(long m) {
    long r = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

std::vector<long> divisors(long m) {
    std::vector<long> d;
    for (long k = 1; k * k <= m; ++k) {
        if (m % k == 0) {
            d.push_back(k);
            if (k != m / k) d.push_back(m / k);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

// Exact division of integer polynomials, b monic. Coefficients low -> high.
std::vector<Int> poly_divexact(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    for (long i = (long)a.size() - 1; i >= (long)b.size() - 1; --i) {
        Int c = a[i];
        if (c == 0) continue;
        long k = i - ((long)b.size() - 1);
        q[k] = c;
        for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    for (const Int& c : a)
        if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    return q;
}

std::map<long, std::vector<Int>> g_phi_cache;
std::recursive_mutex g_phi_mutex;

const std::vector<Int>& cyclotomic_poly_locked(long m) {
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;
    // x^m - 1 divided by Phi_d for all proper divisors d of m.
    std::vector<Int> f(m + 1);
    f[0] = -1;
    f[m] = 1;
    for (long d : divisors(m)) {
        if (d == m) continue;
        f = poly_divexact(std::move(f), cyclotomic_poly_locked(d));
    }
    auto [jt, ok] = g_phi_cache.emplace(m, std::move(f));
    return jt->second;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be >= 1");
    std::lock_guard<std::recursive_mutex> lock(g_phi_mutex);
    return cyclotomic_poly_locked(m);
}

namespace {

// Remainder of a rational polynomial mod the (monic, integral) Phi_m.
void reduce_mod_phi(std::vector<Rat>& a, long m) {
    const std::vector<Int>& phi = cyclotomic_poly(m);
    long deg = (long)phi.size() - 1;
    if ((long)a.size() <= deg) {
        a.resize(deg, Rat(0));
        return;
    }
    for (long i = (long)a.size() - 1; i >= deg; --i) {
        Rat c = a[i];
        if (c != 0) {
            for (long j = 0; j < deg; ++j) a[i - deg + j] -= c * Rat(phi[j]);
        }
        a[i] = 0;
    }
    a.resize(deg);
}

}  // namespace

Cyclo::Cyclo(long m, std::vector<Rat> zeta_poly) : m_(m) {
    if (m < 1) throw std::invalid_argument("Cyclo: conductor must be >= 1");
    reduce_mod_phi(zeta_poly, m);
    c_ = std::move(zeta_poly);
}

Cyclo Cyclo::zeta(long m, long power) {
    long p = ((power % m) + m) % m;
    std::vector<Rat> v(p + 1);
    v[p] = 1;
    return Cyclo(m, std::move(v));
}

bool Cyclo::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

Cyclo Cyclo::lifted(long n) const {
    if (n == m_) return *this;
    if (n % m_ != 0) throw std::invalid_argument("Cyclo::lifted: not a multiple of conductor");
    long step = n / m_;
    std::vector<Rat> v;
    v.resize((c_.size() - 1) * step + 1, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) v[k * step] = c_[k];
    return Cyclo(n, std::move(v));
}

namespace {

// Solve for the expression of v as a Q-combination of the given vectors.
// Returns false if v is not in their span.
bool in_span(const std::vector<std::vector<Rat>>& basis, const std::vector<Rat>& v,
             std::vector<Rat>* coeffs_out) {
    size_t n = v.size(), k = basis.size();
    // augmented matrix, columns = basis vectors | v
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + 1));
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < n; ++i) a[i][j] = basis[j][i];
    for (size_t i = 0; i < n; ++i) a[i][k] = v[i];
    std::vector<long> pivot_col(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < k && row < n; ++col) {
        size_t p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        Rat inv = 1 / a[row][col];
        for (size_t j = col; j <= k; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i != row && a[i][col] != 0) {
                Rat f = a[i][col];
                for (size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
            }
        }
        pivot_col[row] = (long)col;
        ++row;
    }
    // consistent iff no row of the form (0 ... 0 | nonzero)
    for (size_t i = row; i < n; ++i)
        if (a[i][k] != 0) return false;
    if (coeffs_out) {
        coeffs_out->assign(k, Rat(0));
        for (size_t i = 0; i < row; ++i) (*coeffs_out)[pivot_col[i]] = a[i][k];
    }
    return true;
}

}  // namespace

Cyclo Cyclo::reduced() const {
    if (m_ == 1) return *this;
    for (long d : divisors(m_)) {
        if (d == m_) return *this;
        long phd = euler_phi(d);
        std::vector<std::vector<Rat>> basis;
        basis.reserve(phd);
        for (long k = 0; k < phd; ++k) {
            Cyclo b = Cyclo::zeta(d, k).lifted(m_);
            basis.push_back(b.c_);
        }
        std::vector<Rat> coeffs;
        if (in_span(basis, c_, &coeffs)) return Cyclo(d, std::move(coeffs));
    }
    return *this;  // unreachable: d == m_ always matches
}

bool Cyclo::is_rational() const {
    Cyclo r = reduced();
    return r.m_ <= 2;
}

Rat Cyclo::to_rational() const {
    Cyclo r = reduced();
    if (r.m_ > 2) throw std::domain_error("Cyclo::to_rational: value is irrational");
    return r.c_[0];  // the power basis of Q(zeta_1) and Q(zeta_2) is {1}
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    long n = std::lcm(m_, o.m_);
    if (n != m_) *this = lifted(n);
    Cyclo b = (o.m_ == n) ? o : o.lifted(n);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    long n = std::lcm(m_, o.m_);
    if (n != m_) *this = lifted(n);
    Cyclo b = (o.m_ == n) ? o : o.lifted(n);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    long n = std::lcm(m_, o.m_);
    if (n != m_) *this = lifted(n);
    Cyclo b = (o.m_ == n) ? o : o.lifted(n);
    std::vector<Rat> prod(2 * c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] != 0) prod[i + j] += c_[i] * b.c_[j];
        }
    }
    reduce_mod_phi(prod, n);
    c_ = std::move(prod);
    return *this;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    // extended Euclid for gcd(a, Phi_m) over Q[x]; gcd is a nonzero constant
    const std::vector<Int>& phi_int = cyclotomic_poly(m_);
    std::vector<Rat> r0(phi_int.size()), r1(c_);
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
    auto deg = [](const std::vector<Rat>& p) {
        for (long i = (long)p.size() - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1L;
    };
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // s tracks the coefficient of a
    while (true) {
        long d1 = deg(r1);
        if (d1 < 0) throw std::logic_error("Cyclo::inverse: unexpected zero remainder");
        if (d1 == 0) {
            Rat inv = 1 / r1[0];
            std::vector<Rat> res(s1.size());
            for (size_t i = 0; i < s1.size(); ++i) res[i] = s1[i] * inv;
            return Cyclo(m_, std::move(res));
        }
        long d0 = deg(r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        // r0 -= (lead0/lead1) x^{d0-d1} r1, same on s
        Rat f = r0[d0] / r1[d1];
        long shift = d0 - d1;
        for (long i = 0; i <= d1; ++i) r0[i + shift] -= f * r1[i];
        if ((long)s0.size() < (long)s1.size() + shift) s0.resize(s1.size() + shift, Rat(0));
        for (size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= f * s1[i];
    }
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inverse(); }

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo r(1);
    Cyclo b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    Cyclo ra = a.reduced(), rb = b.reduced();
    return ra.m_ == rb.m_ && ra.c_ == rb.c_;
}

std::string Cyclo::str() const {
    Cyclo r = reduced();
    if (r.m_ <= 2) return rat_str(r.to_rational());
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < r.c_.size(); ++k) {
        if (r.c_[k] == 0) continue;
        Rat v = r.c_[k];
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        Rat av = abs(v);
        first = false;
        if (k == 0) {
            os << rat_str(av);
        } else {
            if (av != 1) os << rat_str(av) << "*";
            os << "z" << r.m_;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace vinberg
