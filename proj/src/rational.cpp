#include "clonesim/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clonesim {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

BigNat::BigNat(std::uint64_t value) {
    if (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
    }
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigNat::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) { ++bits; top >>= 1; }
    return bits;
}

bool BigNat::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

int BigNat::compare(const BigNat& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigNat& BigNat::operator+=(const BigNat& other) {
    limbs_.resize(std::max(limbs_.size(), other.limbs_.size()), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < other.limbs_.size()) sum += other.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& other) {
    if (compare(other) < 0) throw std::logic_error("BigNat subtraction underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < other.limbs_.size()) diff -= other.limbs_[i];
        if (diff < 0) { diff += static_cast<std::int64_t>(kBase); borrow = 1; } else borrow = 0;
        limbs_[i] = static_cast<std::uint32_t>(diff);
    }
    trim();
    return *this;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
    BigNat result;
    if (a.is_zero() || b.is_zero()) return result;
    result.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = result.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            result.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = result.limbs_[k] + carry;
            result.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    result.trim();
    return result;
}

BigNat& BigNat::mul_small(std::uint32_t factor) {
    if (factor == 0) { limbs_.clear(); return *this; }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

std::uint32_t BigNat::divmod_small(std::uint32_t divisor) {
    if (divisor == 0) throw std::domain_error("division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigNat BigNat::shifted_left(std::size_t bits) const {
    if (is_zero() || bits == 0) return *this;
    std::size_t limb_shift = bits / 32;
    unsigned bit_shift = static_cast<unsigned>(bits % 32);
    BigNat result;
    result.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t chunk = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
        result.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(chunk & 0xffffffffu);
        result.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(chunk >> 32);
    }
    result.trim();
    return result;
}

// Shift-subtract long division, bit by bit.
std::pair<BigNat, BigNat> BigNat::divmod(const BigNat& numerator, const BigNat& divisor) {
    if (divisor.is_zero()) throw std::domain_error("division by zero");
    if (numerator.compare(divisor) < 0) return {BigNat{}, numerator};
    if (divisor.limbs_.size() == 1) {
        BigNat q = numerator;
        std::uint32_t r = q.divmod_small(divisor.limbs_[0]);
        return {std::move(q), BigNat{r}};
    }
    std::size_t nbits = numerator.bit_length();
    BigNat quotient, remainder;
    quotient.limbs_.assign((nbits + 31) / 32, 0);
    for (std::size_t i = nbits; i-- > 0;) {
        remainder = remainder.shifted_left(1);
        if (numerator.bit(i)) {
            if (remainder.limbs_.empty()) remainder.limbs_.push_back(1);
            else remainder.limbs_[0] |= 1u;
        }
        if (remainder.compare(divisor) >= 0) {
            remainder -= divisor;
            quotient.limbs_[i / 32] |= (1u << (i % 32));
        }
    }
    quotient.trim();
    return {std::move(quotient), std::move(remainder)};
}

BigNat BigNat::gcd(BigNat a, BigNat b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Stein's algorithm: only shifts and subtractions.
    std::size_t shift = 0;
    auto trailing_zero = [](const BigNat& x) {
        std::size_t n = 0;
        for (std::size_t i = 0; i < x.limbs_.size(); ++i) {
            if (x.limbs_[i] == 0) { n += 32; continue; }
            std::uint32_t limb = x.limbs_[i];
            while (!(limb & 1u)) { ++n; limb >>= 1; }
            break;
        }
        return n;
    };
    auto shr = [](BigNat& x, std::size_t bits) {
        std::size_t limb_shift = bits / 32;
        unsigned bit_shift = static_cast<unsigned>(bits % 32);
        if (limb_shift >= x.limbs_.size()) { x.limbs_.clear(); return; }
        x.limbs_.erase(x.limbs_.begin(), x.limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
        if (bit_shift) {
            for (std::size_t i = 0; i < x.limbs_.size(); ++i) {
                x.limbs_[i] >>= bit_shift;
                if (i + 1 < x.limbs_.size())
                    x.limbs_[i] |= x.limbs_[i + 1] << (32 - bit_shift);
            }
        }
        x.trim();
    };
    std::size_t za = trailing_zero(a), zb = trailing_zero(b);
    shift = std::min(za, zb);
    shr(a, za);
    shr(b, zb);
    while (!b.is_zero()) {
        shr(b, trailing_zero(b));
        if (a.compare(b) > 0) std::swap(a, b);
        b -= a;
    }
    return a.shifted_left(shift);
}

std::string BigNat::to_string() const {
    if (is_zero()) return "0";
    BigNat tmp = *this;
    std::string digits;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.divmod_small(1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigNat::to_double() const {
    if (is_zero()) return 0.0;
    std::size_t bits = bit_length();
    if (bits <= 64) {
        std::uint64_t v = limbs_[0];
        if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        return static_cast<double>(v);
    }
    // Top 64 bits and a power-of-two exponent.
    std::uint64_t mantissa = 0;
    for (std::size_t i = 0; i < 64; ++i) {
        if (bit(bits - 1 - i)) mantissa |= std::uint64_t{1} << (63 - i);
    }
    return std::ldexp(static_cast<double>(mantissa), static_cast<int>(bits) - 64);
}

BigInt::BigInt(std::int64_t value) {
    if (value < 0) {
        negative_ = true;
        mag_ = BigNat{static_cast<std::uint64_t>(-(value + 1)) + 1};
    } else {
        mag_ = BigNat{static_cast<std::uint64_t>(value)};
    }
}

BigInt::BigInt(BigNat magnitude, bool negative)
    : mag_(std::move(magnitude)), negative_(negative && !mag_.is_zero()) {}

int BigInt::compare(const BigInt& other) const {
    if (negative_ != other.negative_) return negative_ ? -1 : 1;
    int mag_cmp = mag_.compare(other.mag_);
    return negative_ ? -mag_cmp : mag_cmp;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.negative_ == b.negative_) return BigInt(a.mag_ + b.mag_, a.negative_);
    int cmp = a.mag_.compare(b.mag_);
    if (cmp == 0) return BigInt{};
    if (cmp > 0) return BigInt(a.mag_ - b.mag_, a.negative_);
    return BigInt(b.mag_ - a.mag_, b.negative_);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    return BigInt(a.mag_ * b.mag_, a.negative_ != b.negative_);
}

std::string BigInt::to_string() const {
    return negative_ ? "-" + mag_.to_string() : mag_.to_string();
}

double BigInt::to_double() const {
    double v = mag_.to_double();
    return negative_ ? -v : v;
}

Rational::Rational(BigInt numerator, BigNat denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    normalize();
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    bool neg = (numerator < 0) != (denominator < 0);
    auto mag = [](std::int64_t v) {
        return v < 0 ? BigNat{static_cast<std::uint64_t>(-(v + 1)) + 1}
                     : BigNat{static_cast<std::uint64_t>(v)};
    };
    num_ = BigInt(mag(numerator), neg);
    den_ = mag(denominator);
    normalize();
}

void Rational::normalize() {
    if (num_.is_zero()) { den_ = BigNat{1}; return; }
    BigNat g = BigNat::gcd(num_.magnitude(), den_);
    if (g > BigNat{1}) {
        num_ = BigInt(BigNat::divmod(num_.magnitude(), g).first, num_.negative());
        den_ = BigNat::divmod(den_, g).first;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    BigInt num = a.num_ * BigInt(b.den_) + b.num_ * BigInt(a.den_);
    return Rational(std::move(num), a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational");
    BigInt num = a.num_ * BigInt(b.den_);
    BigNat den = a.den_ * b.num_.magnitude();
    if (b.num_.negative()) num = -num;
    return Rational(std::move(num), std::move(den));
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * BigInt(b.den_);
    BigInt rhs = b.num_ * BigInt(a.den_);
    return lhs.compare(rhs) < 0;
}

std::string Rational::to_string() const {
    if (den_ == BigNat{1}) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    // Scale so the integer quotient carries ~64 significant bits.
    std::size_t num_bits = num_.magnitude().bit_length();
    std::size_t den_bits = den_.bit_length();
    std::size_t shift = den_bits + 64 > num_bits ? den_bits + 64 - num_bits : 0;
    BigNat q = BigNat::divmod(num_.magnitude().shifted_left(shift), den_).first;
    double v = std::ldexp(q.to_double(), -static_cast<int>(shift));
    return num_.negative() ? -v : v;
}

BigNat binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return BigNat{};
    if (k > n - k) k = n - k;
    BigNat result{1};
    for (std::uint32_t i = 0; i < k; ++i) {
        result.mul_small(n - i);
        result.divmod_small(i + 1); // exact at every step
    }
    return result;
}

double binomial_double(std::uint32_t n, std::uint32_t k) {
    return binomial(n, k).to_double();
}

} // namespace clonesim
