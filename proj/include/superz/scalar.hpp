#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace superz {

struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
};

// p == 0 means the rationals
class Field {
public:
    static Field prime(int64_t p);
    static Field rationals() { return Field(0); }

    bool is_prime() const { return m_p != 0; }
    bool is_rational() const { return m_p == 0; }
    uint32_t p() const { return m_p; }
    std::string name() const;

    bool operator==(const Field& o) const { return m_p == o.m_p; }
    bool operator!=(const Field& o) const { return m_p != o.m_p; }

private:
    explicit Field(uint32_t p) : m_p(p) {}
    uint32_t m_p;
};

bool is_prime_number(int64_t n);

class Scalar {
public:
    Scalar() = default;   // unbound zero, adopts the field of the other operand
    Scalar(const Field& f, int64_t v);
    Scalar(const Field& f, const mpq_class& q);
    static Scalar parse(const Field& f, const std::string& s);

    Field field() const { return m_bound ? fieldOf() : Field::rationals(); }
    bool bound() const { return m_bound; }
    bool is_zero() const;
    bool is_one() const;

    // residue in [0,p) for prime fields
    uint64_t residue() const { return m_r; }
    mpq_class rational() const;
    std::string str() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    friend Scalar inv(const Scalar& x);

private:
    Field fieldOf() const;
    void check(const Scalar& o) const;
    static Scalar fromQ(mpq_class q);
    static Scalar fromR(uint32_t p, uint64_t r);

    bool m_bound = false;
    uint32_t m_p = 0;
    uint64_t m_r = 0;
    std::shared_ptr<const mpq_class> m_q;
};

Scalar inv(const Scalar& x);

Field field_make(const std::string& kind, int64_t p = 0);

// reduce a rational into a field; throws if the denominator vanishes mod p
Scalar reduce(const mpq_class& q, const Field& f);

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, size_t n);
Vec unit_vec(const Field& f, size_t n, size_t i);
bool is_zero(const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);   // y += a x
Vec scaled(const Vec& x, const Scalar& a);

}
