#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace koszul {

class Scalar;

/// Coefficient field: Q, or F_p for a prime p < 2^32.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);
    /// Accepts "Q", "F7", "F_7", "F:7", "F 7".
    static Field parse(std::string_view text);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_rational(const mpq_class& q) const;
    /// Integer or fraction literal such as "-3" or "2/5".
    Scalar parse_scalar(std::string_view text) const;

    friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

class Scalar {
public:
    Scalar() = default;

    Field field() const;
    std::uint32_t modulus() const noexcept { return p_; }

    bool is_zero() const noexcept { return p_ ? r_ == 0 : sgn(q_) == 0; }
    bool is_one() const noexcept;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    /// this += a * b
    void add_mul(const Scalar& a, const Scalar& b);
    /// this -= a * b
    void sub_mul(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;
    const mpq_class& rational() const noexcept { return q_; }
    std::uint64_t residue() const noexcept { return r_; }

private:
    friend class Field;
    void check_same(const Scalar& o) const;

    std::uint32_t p_ = 0;
    std::uint64_t r_ = 0;
    mpq_class q_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
bool is_zero(const Vector& v);

}  // namespace koszul
