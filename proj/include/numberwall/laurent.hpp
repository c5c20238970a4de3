#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "numberwall/field.hpp"
#include "numberwall/sequences.hpp"

namespace nwall {

inline constexpr std::int64_t kNegInfDegree = std::numeric_limits<std::int64_t>::min();

/** Polynomial over F_p, constant term first, no trailing zeros. */
class Poly {
public:
    explicit Poly(Modulus mod) : mod_(mod) {}
    Poly(Modulus mod, std::vector<int> coeffs);
    static Poly monomial(Modulus mod, std::int64_t degree, int coeff = 1);

    const Modulus& modulus() const { return mod_; }
    std::int64_t degree() const { return c_.empty() ? kNegInfDegree : static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    int coeff(std::int64_t i) const { return i >= 0 && i < static_cast<std::int64_t>(c_.size()) ? c_[i] : 0; }
    const std::vector<int>& coeffs() const { return c_; }
    int leading() const { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const Poly& o) const { return mod_ == o.mod_ && c_ == o.c_; }

private:
    void trim();
    Modulus mod_;
    std::vector<int> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/** Theta = sum_{n=1..N} theta_n t^{-n}, known exactly through t^{-N}. */
struct LaurentTruncation {
    Modulus mod;
    std::vector<int> coeffs;  // coeffs[i] = theta_{i+1}

    std::int64_t precision() const { return static_cast<std::int64_t>(coeffs.size()); }
    /// theta_{shift+1}, ..., theta_{shift+N} of a sequence: the fractional part of t^shift * Theta.
    static LaurentTruncation from_source(const SequenceSource& s, std::int64_t shift, std::int64_t N);
};

struct CFProfile {
    std::vector<std::int64_t> degrees;  // partial quotients found from the data
    std::size_t certified = 0;          // leading entries of `degrees` that are trusted
    std::vector<Poly> quotients;

    std::int64_t max_certified() const;
};

/**
 * Partial quotients of the fractional series. A quotient of degree d following quotients summing to h
 * is certified while 2h + d < N; expansion stops at the first quotient the data cannot determine.
 */
CFProfile continued_fraction(const LaurentTruncation& theta, std::size_t max_terms = SIZE_MAX);

/// Max certified partial-quotient degree over t^k Theta for 0 <= k <= K.
std::int64_t deficiency_via_cf(const SequenceSource& source, std::int64_t K, std::int64_t N);

/// Convergent numerators and denominators p_j/q_j, j = 1..(number of quotients).
struct Convergents {
    std::vector<Poly> numerators, denominators;
};
Convergents convergents(const CFProfile& cf, Modulus mod);

enum class Quadratic { Phi, Pi };
/// Phi^2 + Phi + t/(1+t^4) = 0 for the coefficient list f_1..f_N, checked through t^{-N} (p = 2).
bool phi_identity_holds(const std::vector<int>& f, std::int64_t N);
/// Pi^2 + ((1+t^2)/t) Pi + 1/t = 0 for pi_1..pi_N, checked through t^{-N} (p = 2).
bool pi_identity_holds(const std::vector<int>& pi, std::int64_t N);
/// Both identities for the paper-folding series; throws DomainError unless mod is 2.
bool check_quadratic_f2(Quadratic which, std::int64_t N, Modulus mod);

/// (l+1)x(l+1) Hankel determinant with top-left theta_n.
FieldElement hankel_det(const SequenceSource& source, std::int64_t n, std::int64_t l);

}  // namespace nwall
