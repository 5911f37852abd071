#include "koszul/scalar.hpp"

#include <cctype>
#include <charconv>

#include "koszul/error.hpp"

namespace koszul {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::uint64_t mpz_mod_u(const mpz_class& z, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw FieldError("field modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "Q" || t == "q") return rationals();
    if (!t.empty() && (t[0] == 'F' || t[0] == 'f')) {
        std::size_t at = 1;
        if (at < t.size() && (t[at] == '_' || t[at] == ':')) ++at;
        std::uint32_t p = 0;
        auto [ptr, ec] = std::from_chars(t.data() + at, t.data() + t.size(), p);
        if (ec == std::errc() && ptr == t.data() + t.size() && at < t.size()) return prime(p);
    }
    throw FieldError("unrecognized field '" + std::string(text) + "' (expected Q or F_p)");
}

std::string Field::name() const { return p_ ? "F_" + std::to_string(p_) : "Q"; }

Scalar Field::zero() const {
    Scalar s;
    s.p_ = p_;
    return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
    Scalar s;
    s.p_ = p_;
    if (p_) {
        long m = v % static_cast<long>(p_);
        if (m < 0) m += p_;
        s.r_ = static_cast<std::uint64_t>(m);
    } else {
        s.q_ = v;
    }
    return s;
}

Scalar Field::from_rational(const mpq_class& q) const {
    Scalar s;
    s.p_ = p_;
    if (!p_) {
        s.q_ = q;
        return s;
    }
    std::uint64_t den = mpz_mod_u(q.get_den(), p_);
    if (den == 0) throw FieldError("denominator divisible by the characteristic " + std::to_string(p_));
    s.r_ = mpz_mod_u(q.get_num(), p_) * pow_mod(den, p_ - 2, p_) % p_;
    return s;
}

Scalar Field::parse_scalar(std::string_view text) const {
    std::string t(text);
    mpq_class q;
    if (t.empty() || q.set_str(t, 10) != 0 || q.get_den() == 0)
        throw FieldError("bad scalar literal '" + t + "'");
    q.canonicalize();
    return from_rational(q);
}

Field Scalar::field() const { return p_ ? Field::prime(p_) : Field::rationals(); }

bool Scalar::is_one() const noexcept { return p_ ? r_ == 1 : q_ == 1; }

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_) throw FieldError("scalars from different fields");
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_)
        s.r_ = r_ ? p_ - r_ : 0;
    else
        mpq_neg(s.q_.get_mpq_t(), q_.get_mpq_t());
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (p_) {
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
    } else {
        q_ += o.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (p_)
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    else
        q_ -= o.q_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (p_)
        r_ = r_ * o.r_ % p_;
    else
        q_ *= o.q_;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    Scalar s = *this;
    if (p_)
        s.r_ = pow_mod(r_, p_ - 2, p_);
    else
        mpq_inv(s.q_.get_mpq_t(), q_.get_mpq_t());
    return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inverse();
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
    check_same(a);
    check_same(b);
    if (p_) {
        r_ = (r_ + a.r_ * b.r_) % p_;
    } else {
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
        mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
    }
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
    check_same(a);
    check_same(b);
    if (p_) {
        r_ = (r_ + (p_ - a.r_ * b.r_ % p_)) % p_;
    } else {
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
        mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
    }
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
}

std::string Scalar::to_string() const { return p_ ? std::to_string(r_) : q_.get_str(); }

Vector zero_vector(Field f, std::size_t n) { return Vector(n, f.zero()); }

bool is_zero(const Vector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace koszul
