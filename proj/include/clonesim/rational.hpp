#ifndef CLONESIM_RATIONAL_HPP
#define CLONESIM_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace clonesim {

/// Unsigned arbitrary-precision integer, base 2^32 limbs (little endian).
/// Big enough arithmetic for exact binomial sums at any (N, M) a caller
/// might reasonably pass on the command line.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t value);

    bool is_zero() const { return limbs_.empty(); }
    std::size_t bit_length() const;

    // -1 / 0 / +1 for < / == / >
    int compare(const BigNat& other) const;

    BigNat& operator+=(const BigNat& other);
    /// Requires *this >= other.
    BigNat& operator-=(const BigNat& other);

    friend BigNat operator+(BigNat a, const BigNat& b) { a += b; return a; }
    friend BigNat operator-(BigNat a, const BigNat& b) { a -= b; return a; }
    friend BigNat operator*(const BigNat& a, const BigNat& b);

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigNat& a, const BigNat& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigNat& a, const BigNat& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigNat& a, const BigNat& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigNat& a, const BigNat& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigNat& a, const BigNat& b) { return a.compare(b) >= 0; }

    BigNat& mul_small(std::uint32_t factor);
    /// Divides in place by a small divisor, returns the remainder.
    std::uint32_t divmod_small(std::uint32_t divisor);

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<BigNat, BigNat> divmod(const BigNat& numerator, const BigNat& divisor);
    static BigNat gcd(BigNat a, BigNat b);

    BigNat shifted_left(std::size_t bits) const;

    std::string to_string() const;
    double to_double() const;

private:
    void trim();
    bool bit(std::size_t i) const;

    std::vector<std::uint32_t> limbs_;
};

/// Signed arbitrary-precision integer.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t value);
    BigInt(BigNat magnitude, bool negative = false);

    bool is_zero() const { return mag_.is_zero(); }
    bool negative() const { return negative_; }
    const BigNat& magnitude() const { return mag_; }

    int compare(const BigInt& other) const;

    friend BigInt operator-(BigInt a) { if (!a.is_zero()) a.negative_ = !a.negative_; return a; }
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }

    std::string to_string() const;
    double to_double() const;

private:
    BigNat mag_;
    bool negative_ = false;
};

/// Exact rational, always kept in canonical form: positive denominator,
/// gcd(num, den) = 1, and 0 represented as 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(BigInt numerator, BigNat denominator);
    Rational(std::int64_t numerator, std::int64_t denominator);

    const BigInt& num() const { return num_; }
    const BigNat& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "num/den", or just "num" when den == 1.
    std::string to_string() const;
    double to_double() const;

private:
    void normalize();

    BigInt num_;
    BigNat den_;
};

/// Exact binomial coefficient C(n, k); zero when k > n.
BigNat binomial(std::uint32_t n, std::uint32_t k);

/// C(n, k) as a double (exact conversion of the exact integer).
double binomial_double(std::uint32_t n, std::uint32_t k);

} // namespace clonesim

#endif
