#pragma once

#include <cstdint>
#include <string>

#include "syzygy/common.hpp"

namespace syzygy {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

constexpr std::uint64_t kDefaultPrime = 32003;

// Prime-field scalar with one modulus per process session.  The modulus is
// set before any arithmetic happens (the CLI and the tests do this up
// front); mixing moduli within a session is not supported.
class fp {
public:
    fp() : v_(0) {}
    fp(long x) {  // NOLINT: implicit from integer literals mirrors mpq_class
        long m = static_cast<long>(modulus());
        long r = x % m;
        if (r < 0) r += m;
        v_ = static_cast<std::uint64_t>(r);
    }
    explicit fp(const mpz_class& x) {
        mpz_class m(static_cast<unsigned long>(modulus()));
        mpz_class r = x % m;
        if (r < 0) r += m;
        v_ = r.get_ui();
    }

    static void set_modulus(std::uint64_t p) {
        require(is_prime_u64(p), "fp modulus must be prime");
        require(p < (1ULL << 31), "fp modulus too large");
        modulus_slot() = p;
    }
    static std::uint64_t modulus() { return modulus_slot(); }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend fp operator+(fp a, fp b) { return from_raw((a.v_ + b.v_) % modulus()); }
    friend fp operator-(fp a, fp b) { return from_raw((a.v_ + modulus() - b.v_) % modulus()); }
    friend fp operator*(fp a, fp b) { return from_raw((a.v_ * b.v_) % modulus()); }
    friend fp operator/(fp a, fp b) { return a * b.inverse(); }
    fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
    fp& operator+=(fp o) { return *this = *this + o; }
    fp& operator-=(fp o) { return *this = *this - o; }
    fp& operator*=(fp o) { return *this = *this * o; }
    fp& operator/=(fp o) { return *this = *this / o; }
    friend bool operator==(fp a, fp b) { return a.v_ == b.v_; }
    friend bool operator!=(fp a, fp b) { return a.v_ != b.v_; }

    fp inverse() const {
        check(v_ != 0, "fp: division by zero");
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(modulus()), new_r = static_cast<std::int64_t>(v_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(modulus());
        return from_raw(static_cast<std::uint64_t>(t));
    }

    std::string str() const { return std::to_string(v_); }

private:
    static fp from_raw(std::uint64_t v) {
        fp x;
        x.v_ = v;
        return x;
    }
    static std::uint64_t& modulus_slot() {
        static std::uint64_t p = kDefaultPrime;
        return p;
    }
    std::uint64_t v_;
};

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero(const fp& x) { return x.is_zero(); }

inline std::string scalar_str(const mpq_class& x) { return x.get_str(); }
inline std::string scalar_str(const fp& x) { return x.str(); }

template <class K>
struct field_traits;

template <>
struct field_traits<mpq_class> {
    static constexpr bool is_rational = true;
    static mpq_class zero() { return mpq_class(0); }
    static mpq_class one() { return mpq_class(1); }
    static mpq_class from_int(long n) { return mpq_class(n); }
    static mpq_class from_mpq(const mpq_class& q) { return q; }
    static std::string name() { return "q"; }
};

template <>
struct field_traits<fp> {
    static constexpr bool is_rational = false;
    static fp zero() { return fp(0); }
    static fp one() { return fp(1); }
    static fp from_int(long n) { return fp(n); }
    static fp from_mpq(const mpq_class& q) {
        fp num(mpz_class(q.get_num()));
        fp den(mpz_class(q.get_den()));
        require(!den.is_zero(), "rational has denominator divisible by the prime");
        return num / den;
    }
    static std::string name() { return "fp:" + std::to_string(fp::modulus()); }
};

}  // namespace syzygy
