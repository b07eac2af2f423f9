#pragma once
// Exact scalar arithmetic: rationals, prime fields, and dual numbers k[eps]/(eps^2).
// No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zalg {

// expression templates off: operators must return concrete values so the
// generic linear algebra can deduce its scalar type
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline std::string scalar_str(const Rational& x) { return x.str(); }

// Prime field with a runtime modulus held in a thread-local context,
// NTL-style. Set the modulus once per computation with GFpContext.
class GFp {
public:
    GFp() : v_(0) {}
    GFp(long long x) {
        long long p = static_cast<long long>(modulus());
        long long r = x % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint64_t>(r);
    }

    static std::uint64_t& modulus() {
        thread_local std::uint64_t p = 0;
        return p;
    }

    std::uint64_t value() const { return v_; }

    friend GFp operator+(GFp a, GFp b) {
        std::uint64_t p = modulus(), s = a.v_ + b.v_;
        return from_raw(s >= p ? s - p : s);
    }
    friend GFp operator-(GFp a, GFp b) {
        std::uint64_t p = modulus();
        return from_raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_);
    }
    friend GFp operator*(GFp a, GFp b) {
        std::uint64_t p = modulus();
        return from_raw(static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a.v_) * b.v_) % p));
    }
    friend GFp operator/(GFp a, GFp b) { return a * b.inv(); }
    GFp operator-() const {
        return from_raw(v_ == 0 ? 0 : modulus() - v_);
    }
    GFp& operator+=(GFp o) { return *this = *this + o; }
    GFp& operator-=(GFp o) { return *this = *this - o; }
    GFp& operator*=(GFp o) { return *this = *this * o; }
    GFp& operator/=(GFp o) { return *this = *this / o; }
    friend bool operator==(GFp a, GFp b) { return a.v_ == b.v_; }
    friend bool operator!=(GFp a, GFp b) { return a.v_ != b.v_; }

    GFp inv() const {
        if (v_ == 0) throw std::domain_error("GFp: division by zero");
        // extended Euclid
        long long p = static_cast<long long>(modulus());
        long long a = static_cast<long long>(v_), b = p, x0 = 1, x1 = 0;
        while (b) {
            long long q = a / b;
            a -= q * b; std::swap(a, b);
            x0 -= q * x1; std::swap(x0, x1);
        }
        if (x0 < 0) x0 += p;
        return from_raw(static_cast<std::uint64_t>(x0));
    }

private:
    static GFp from_raw(std::uint64_t v) { GFp g; g.v_ = v; return g; }
    std::uint64_t v_;
};

inline std::string scalar_str(const GFp& x) { return std::to_string(x.value()); }

struct GFpContext {
    explicit GFpContext(std::uint64_t p) : prev_(GFp::modulus()) {
        if (p < 2) throw std::invalid_argument("GFp modulus must be a prime >= 2");
        GFp::modulus() = p;
    }
    ~GFpContext() { GFp::modulus() = prev_; }
    GFpContext(const GFpContext&) = delete;
    GFpContext& operator=(const GFpContext&) = delete;
private:
    std::uint64_t prev_;
};

// Dual numbers a + b*eps over a field F, with eps^2 = 0. A local ring, not a
// field: a + b*eps is a unit iff a != 0.
template <class F>
struct Dual {
    F a{0}, b{0};

    Dual() = default;
    Dual(long long x) : a(x), b(0) {}
    Dual(F base) : a(std::move(base)), b(0) {}
    Dual(F base, F eps) : a(std::move(base)), b(std::move(eps)) {}

    static Dual eps() { return Dual(F(0), F(1)); }

    friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
    friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
    friend Dual operator*(const Dual& x, const Dual& y) {
        return {x.a * y.a, x.a * y.b + x.b * y.a};
    }
    Dual operator-() const { return {-a, -b}; }
    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }

    bool is_unit() const { return a != F(0); }
    Dual inv() const {
        if (!is_unit()) throw std::domain_error("Dual: inverse of non-unit");
        F ia = F(1) / a;
        return {ia, -(ia * ia * b)};
    }
    friend Dual operator/(const Dual& x, const Dual& y) { return x * y.inv(); }
};

template <class F>
inline std::string scalar_str(const Dual<F>& x) {
    return scalar_str(x.a) + " + (" + scalar_str(x.b) + ")eps";
}

template <class T> struct is_field : std::false_type {};
template <> struct is_field<Rational> : std::true_type {};
template <> struct is_field<GFp> : std::true_type {};
template <class T> inline constexpr bool is_field_v = is_field<T>::value;

template <class T> struct is_dual : std::false_type {};
template <class F> struct is_dual<Dual<F>> : std::true_type {};
template <class T> inline constexpr bool is_dual_v = is_dual<T>::value;

// base field of a scalar ring
template <class T> struct base_field { using type = T; };
template <class F> struct base_field<Dual<F>> { using type = F; };
template <class T> using base_field_t = typename base_field<T>::type;

template <class F> inline F reduce_eps(const Dual<F>& x) { return x.a; }
template <class F> inline F eps_part(const Dual<F>& x) { return x.b; }

template <class T> inline bool is_unit_scalar(const T& x) {
    if constexpr (is_dual_v<T>) return x.is_unit();
    else return x != T(0);
}
template <class T> inline T inv_scalar(const T& x) {
    if constexpr (is_dual_v<T>) return x.inv();
    else return T(1) / x;
}

} // namespace zalg
