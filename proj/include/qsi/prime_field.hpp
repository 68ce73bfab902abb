#ifndef QSI_PRIME_FIELD_HPP
#define QSI_PRIME_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsi {

// Residue modulo a prime p, used as a fast alternative field for sampling.
// A modulus of 0 marks a plain integer literal; it adopts the modulus of
// the other operand on the first binary operation. Sampling callers must
// use p >= 32003.
class Fp {
public:
    Fp() = default;
    explicit Fp(long long v, std::uint64_t p = 0) : p_(p) { set(v); }

    std::uint64_t modulus() const { return p_; }
    std::uint64_t value() const { return v_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a, b);
        return from_raw((a.rv(p) + b.rv(p)) % mod(p), p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a, b);
        return from_raw((a.rv(p) + mod(p) - b.rv(p)) % mod(p), p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a, b);
        return from_raw((a.rv(p) * b.rv(p)) % mod(p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    friend bool operator==(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a, b);
        return a.rv(p) == b.rv(p);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (p_ == 0 || v_ == 0) throw std::domain_error("Fp: not invertible");
        // Fermat: v^(p-2) mod p
        std::uint64_t r = 1, base = v_, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return from_raw(r, p_);
    }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp from_raw(std::uint64_t v, std::uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    static std::uint64_t join(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw std::domain_error("Fp: mixed moduli");
        return a.p_ ? a.p_ : b.p_;
    }
    // Plain-integer values are held reduced mod 2^64; reduce once the
    // modulus is known.
    static std::uint64_t mod(std::uint64_t p) { return p ? p : UINT64_MAX; }
    std::uint64_t rv(std::uint64_t p) const { return p ? v_ % p : v_; }
    void set(long long v) {
        if (p_ == 0) {
            if (v < 0) throw std::domain_error("Fp: negative literal needs modulus");
            v_ = static_cast<std::uint64_t>(v);
        } else {
            long long m = static_cast<long long>(p_);
            long long r = v % m;
            if (r < 0) r += m;
            v_ = static_cast<std::uint64_t>(r);
        }
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }

} // namespace qsi

#endif
