#include "superz/scalar.hpp"

#include <sstream>

namespace superz {

bool is_prime_number(int64_t n)
{
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(int64_t p)
{
    if (p <= 0 || p >= (int64_t(1) << 31) || !is_prime_number(p))
        throw Error("NonPrimeModulus", "modulus " + std::to_string(p) + " is not a prime below 2^31");
    return Field(uint32_t(p));
}

std::string Field::name() const
{
    return m_p ? "F_" + std::to_string(m_p) : std::string("Q");
}

Field field_make(const std::string& kind, int64_t p)
{
    if (kind == "rational" || kind == "Q") return Field::rationals();
    if (kind == "prime") return Field::prime(p);
    throw Error("BadParams", "unknown field kind " + kind);
}

static uint64_t modp(int64_t v, uint32_t p)
{
    int64_t r = v % int64_t(p);
    return uint64_t(r < 0 ? r + p : r);
}

Scalar::Scalar(const Field& f, int64_t v) : m_bound(true), m_p(f.p())
{
    if (m_p) m_r = modp(v, m_p);
    else m_q = std::make_shared<const mpq_class>(mpz_class(long(v)));
}

Scalar::Scalar(const Field& f, const mpq_class& q0)
{
    mpq_class q = q0;
    q.canonicalize();
    if (f.is_rational()) {
        *this = fromQ(q);
        return;
    }
    uint32_t p = f.p();
    mpz_class pp((unsigned long)p);
    mpz_class dn = mpz_class(q.get_den() % pp);
    if (dn == 0) throw Error("DivisionByZero", "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
    mpz_class nn = mpz_class(q.get_num() % pp);
    if (nn < 0) nn += pp;
    mpz_class di;
    mpz_invert(di.get_mpz_t(), dn.get_mpz_t(), pp.get_mpz_t());
    mpz_class r = (nn * di) % pp;
    *this = fromR(p, r.get_ui());
}

Scalar Scalar::fromQ(mpq_class q)
{
    Scalar s;
    s.m_bound = true;
    s.m_q = std::make_shared<const mpq_class>(std::move(q));
    return s;
}

Scalar Scalar::fromR(uint32_t p, uint64_t r)
{
    Scalar s;
    s.m_bound = true;
    s.m_p = p;
    s.m_r = r;
    return s;
}

Scalar reduce(const mpq_class& q, const Field& f)
{
    return Scalar(f, q);
}

Scalar Scalar::parse(const Field& f, const std::string& s)
{
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("BadParams", "cannot parse scalar '" + s + "'");
    q.canonicalize();
    return Scalar(f, q);
}

Field Scalar::fieldOf() const
{
    return m_p ? Field::prime(m_p) : Field::rationals();
}

bool Scalar::is_zero() const
{
    if (!m_bound) return true;
    if (m_p) return m_r == 0;
    return sgn(*m_q) == 0;
}

bool Scalar::is_one() const
{
    if (!m_bound) return false;
    if (m_p) return m_r == 1;
    return *m_q == 1;
}

mpq_class Scalar::rational() const
{
    if (!m_bound) return mpq_class(0);
    if (m_p) return mpq_class(mpz_class((unsigned long)m_r));
    return *m_q;
}

std::string Scalar::str() const
{
    if (!m_bound) return "0";
    if (m_p) return std::to_string(m_r);
    return m_q->get_str();
}

void Scalar::check(const Scalar& o) const
{
    if (m_bound && o.m_bound && m_p != o.m_p)
        throw Error("FieldMismatch", "arithmetic between " + fieldOf().name() + " and " + o.fieldOf().name());
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check(o);
    if (!o.m_bound) return *this;
    if (!m_bound) return o;
    if (m_p) {
        uint64_t r = m_r + o.m_r;
        return fromR(m_p, r >= m_p ? r - m_p : r);
    }
    return fromQ(*m_q + *o.m_q);
}

Scalar Scalar::operator-() const
{
    if (!m_bound) return *this;
    if (m_p) return fromR(m_p, m_r ? m_p - m_r : 0);
    return fromQ(-*m_q);
}

Scalar Scalar::operator-(const Scalar& o) const
{
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check(o);
    if (!m_bound) return *this;
    if (!o.m_bound) return o;
    if (m_p) return fromR(m_p, (m_r * o.m_r) % m_p);
    return fromQ(*m_q * *o.m_q);
}

Scalar inv(const Scalar& x)
{
    if (x.is_zero()) throw Error("DivisionByZero", "inverse of zero");
    if (x.m_p) {
        // Fermat is fine at p < 2^31
        uint64_t p = x.m_p, b = x.m_r, e = p - 2, r = 1;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return Scalar::fromR(x.m_p, r);
    }
    return Scalar::fromQ(1 / *x.m_q);
}

Scalar Scalar::operator/(const Scalar& o) const
{
    return *this * inv(o);
}

bool Scalar::operator==(const Scalar& o) const
{
    check(o);
    if (!m_bound || !o.m_bound) return is_zero() && o.is_zero();
    if (m_p) return m_r == o.m_r;
    return *m_q == *o.m_q;
}

Vec zero_vec(const Field& f, size_t n)
{
    return Vec(n, Scalar(f, 0));
}

Vec unit_vec(const Field& f, size_t n, size_t i)
{
    Vec v = zero_vec(f, n);
    v[i] = Scalar(f, 1);
    return v;
}

bool is_zero(const Vec& v)
{
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

void axpy(Vec& y, const Scalar& a, const Vec& x)
{
    if (a.is_zero()) return;
    for (size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec scaled(const Vec& x, const Scalar& a)
{
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] * a;
    return r;
}

}
