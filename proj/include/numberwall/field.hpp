#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nwall {

/** Raised for malformed inputs: non-prime moduli, bad indices, bad files. */
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Raised when an exact division would need the inverse of zero. */
class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

bool is_prime(std::int64_t n);

/** A prime modulus; construction rejects composites. */
class Modulus {
public:
    explicit Modulus(std::int64_t p);

    std::int64_t value() const { return p_; }
    std::int64_t reduce(std::int64_t x) const {
        x %= p_;
        return x < 0 ? x + p_ : x;
    }
    bool operator==(const Modulus& o) const { return p_ == o.p_; }
    bool operator!=(const Modulus& o) const { return p_ != o.p_; }

private:
    std::int64_t p_;
};

/** Immutable element of F_p. */
class FieldElement {
public:
    FieldElement(std::int64_t value, Modulus mod) : mod_(mod), v_(mod.reduce(value)) {}

    std::int64_t value() const { return v_; }
    const Modulus& modulus() const { return mod_; }
    bool is_zero() const { return v_ == 0; }

    bool operator==(const FieldElement& o) const { return mod_ == o.mod_ && v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    Modulus mod_;
    std::int64_t v_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }

/// Modular inverse by the extended Euclidean algorithm.
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

/**
 * Table-driven arithmetic on raw residues for the hot loops.
 * Residues travel as uint8_t, so p must stay below 255
 * (255 is reserved as an "unknown" marker by the wall builder).
 */
class SmallField {
public:
    explicit SmallField(Modulus mod);

    int p() const { return p_; }
    const Modulus& modulus() const { return mod_; }

    int add(int a, int b) const { int s = a + b; return s >= p_ ? s - p_ : s; }
    int sub(int a, int b) const { int s = a - b; return s < 0 ? s + p_ : s; }
    int mul(int a, int b) const { return (a * b) % p_; }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }
    int inv(int a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
        return inv_[a];
    }
    int div(int a, int b) const { return mul(a, inv(b)); }

private:
    Modulus mod_;
    int p_;
    std::vector<int> inv_;
};

}  // namespace nwall
