#include "numberwall/field.hpp"

namespace nwall {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Modulus::Modulus(std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
}

namespace {
void same_field(const FieldElement& a, const FieldElement& b) {
    if (a.modulus() != b.modulus())
        throw DomainError("modulus mismatch: " + std::to_string(a.modulus().value()) + " vs " +
                          std::to_string(b.modulus().value()));
}
}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.value() + b.value(), a.modulus()};
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.value() - b.value(), a.modulus()};
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.value() * b.value(), a.modulus()};
}

FieldElement neg(const FieldElement& a) { return {-a.value(), a.modulus()}; }

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    // r0 = gcd = 1 since p is prime
    s0 %= p;
    return s0 < 0 ? s0 + p : s0;
}

FieldElement inv(const FieldElement& a) {
    return {inverse_mod(a.value(), a.modulus().value()), a.modulus()};
}

SmallField::SmallField(Modulus mod) : mod_(mod), p_(static_cast<int>(mod.value())) {
    if (mod.value() >= 255) throw DomainError("table arithmetic supports p < 255");
    inv_.assign(p_, 0);
    for (int a = 1; a < p_; ++a) inv_[a] = static_cast<int>(inverse_mod(a, p_));
}

}  // namespace nwall
