#include "numberwall/laurent.hpp"

#include <algorithm>

#include "numberwall/wall.hpp"

namespace nwall {

Poly::Poly(Modulus mod, std::vector<int> coeffs) : mod_(mod), c_(std::move(coeffs)) {
    for (int& x : c_) x = static_cast<int>(mod_.reduce(x));
    trim();
}

Poly Poly::monomial(Modulus mod, std::int64_t degree, int coeff) {
    std::vector<int> c(static_cast<std::size_t>(degree + 1), 0);
    c.back() = coeff;
    return Poly(mod, std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

namespace {
void same(const Poly& a, const Poly& b) {
    if (a.modulus() != b.modulus()) throw DomainError("polynomial modulus mismatch");
}
}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    same(a, b);
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(a.modulus(), std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    same(a, b);
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Poly(a.modulus(), std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.modulus());
    const std::int64_t p = a.modulus().value();
    std::vector<std::int64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::int64_t>(a.coeffs()[i]) * b.coeffs()[j]) % p;
    }
    std::vector<int> c(acc.begin(), acc.end());
    return Poly(a.modulus(), std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    same(a, b);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Modulus& mod = a.modulus();
    const std::int64_t p = mod.value();
    if (a.degree() < b.degree()) return {Poly(mod), a};
    std::vector<std::int64_t> r(a.coeffs().begin(), a.coeffs().end());
    const auto& bc = b.coeffs();
    const std::int64_t db = b.degree();
    const std::int64_t lead_inv = inverse_mod(b.leading(), p);
    std::vector<int> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    for (std::int64_t i = a.degree(); i >= db; --i) {
        const std::int64_t top = r[i] % p;
        if (top == 0) continue;
        const std::int64_t f = top * lead_inv % p;
        q[i - db] = static_cast<int>(f);
        for (std::int64_t j = 0; j <= db; ++j) r[i - db + j] = ((r[i - db + j] - f * bc[j]) % p + p) % p;
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(mod, std::move(q)), Poly(mod, std::vector<int>(r.begin(), r.end()))};
}

LaurentTruncation LaurentTruncation::from_source(const SequenceSource& s, std::int64_t shift, std::int64_t N) {
    return {s.modulus(), s.residues(shift + 1, shift + N)};
}

std::int64_t CFProfile::max_certified() const {
    std::int64_t best = 0;
    for (std::size_t i = 0; i < certified; ++i) best = std::max(best, degrees[i]);
    return best;
}

CFProfile continued_fraction(const LaurentTruncation& theta, std::size_t max_terms) {
    const std::int64_t N = theta.precision();
    if (N < 1) throw DomainError("continued fraction needs precision N >= 1");
    // The truncation is the rational A / t^N; Euclid on (t^N, A) yields its partial quotients.
    std::vector<int> a(static_cast<std::size_t>(N), 0);
    for (std::int64_t n = 1; n <= N; ++n) a[N - n] = theta.coeffs[n - 1];
    Poly prev = Poly::monomial(theta.mod, N), cur(theta.mod, std::move(a));

    CFProfile out;
    std::int64_t h = 0;
    bool trusted = true;
    while (!cur.is_zero() && out.degrees.size() < max_terms) {
        auto [q, r] = divmod(prev, cur);
        const std::int64_t d = q.degree();
        if (2 * h + d > N) break;  // beyond what the known coefficients determine
        trusted = trusted && 2 * h + d < N;
        out.degrees.push_back(d);
        out.quotients.push_back(q);
        if (trusted) out.certified = out.degrees.size();
        h += d;
        prev = std::move(cur);
        cur = std::move(r);
    }
    return out;
}

std::int64_t deficiency_via_cf(const SequenceSource& source, std::int64_t K, std::int64_t N) {
    if (K < 0) throw DomainError("number of shifts must be >= 0");
    std::int64_t best = 0;
    for (std::int64_t k = 0; k <= K; ++k)
        best = std::max(best, continued_fraction(LaurentTruncation::from_source(source, k, N)).max_certified());
    return best;
}

Convergents convergents(const CFProfile& cf, Modulus mod) {
    Convergents out;
    Poly p_prev(mod, {1}), p_cur(mod), q_prev(mod), q_cur(mod, {1});
    for (const Poly& a : cf.quotients) {
        Poly p_next = a * p_cur + p_prev, q_next = a * q_cur + q_prev;
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
        p_cur = p_next;
        q_cur = q_next;
        out.numerators.push_back(p_cur);
        out.denominators.push_back(q_cur);
    }
    return out;
}

namespace {

// Coefficients of t^e for e in [-N, top], stored from the top exponent down; arithmetic over F_2.
struct Series2 {
    std::int64_t top, N;
    std::vector<int> c;

    Series2(std::int64_t top_, std::int64_t N_) : top(top_), N(N_), c(static_cast<std::size_t>(top_ + N_ + 1), 0) {}
    int get(std::int64_t e) const { return e > top || e < -N ? 0 : c[static_cast<std::size_t>(top - e)]; }
    void flip(std::int64_t e, int v) {
        if (e <= top && e >= -N) c[static_cast<std::size_t>(top - e)] ^= (v & 1);
    }
};

// Fractional series sum_{n>=1} x_n t^{-n} from a coefficient list.
Series2 fractional(const std::vector<int>& x, std::int64_t N) {
    Series2 s(0, N);
    for (std::int64_t n = 1; n <= N && n <= static_cast<std::int64_t>(x.size()); ++n) s.flip(-n, x[n - 1]);
    return s;
}

}  // namespace

bool phi_identity_holds(const std::vector<int>& f, std::int64_t N) {
    if (static_cast<std::int64_t>(f.size()) < N) throw DomainError("need N coefficients");
    const Series2 phi = fractional(f, N);
    Series2 sum(0, N);
    // squaring over F_2 is the Frobenius map: sum f_n t^{-2n}
    for (std::int64_t n = 1; 2 * n <= N; ++n) sum.flip(-2 * n, f[n - 1]);
    for (std::int64_t e = -1; e >= -N; --e) sum.flip(e, phi.get(e));
    for (std::int64_t e = -3; e >= -N; e -= 4) sum.flip(e, 1);  // t/(1+t^4) = sum_j t^{-3-4j}
    for (std::int64_t e = 0; e >= -N; --e)
        if (sum.get(e)) return false;
    return true;
}

bool pi_identity_holds(const std::vector<int>& pi, std::int64_t N) {
    if (static_cast<std::int64_t>(pi.size()) < N + 1) throw DomainError("need N+1 coefficients");
    const Series2 s = fractional(pi, N + 1);
    Series2 sum(0, N);
    for (std::int64_t n = 1; 2 * n <= N; ++n) sum.flip(-2 * n, pi[n - 1]);
    for (std::int64_t e = -1; e >= -N - 1; --e) {
        sum.flip(e - 1, s.get(e));  // t^{-1} * Pi
        sum.flip(e + 1, s.get(e));  // t * Pi
    }
    sum.flip(-1, 1);
    for (std::int64_t e = 0; e >= -N; --e)
        if (sum.get(e)) return false;
    return true;
}

bool check_quadratic_f2(Quadratic which, std::int64_t N, Modulus mod) {
    if (mod.value() != 2) throw DomainError("the quadratic identities are stated over F_2");
    std::vector<int> x;
    for (std::int64_t n = 1; n <= N + 1; ++n)
        x.push_back(static_cast<int>(which == Quadratic::Phi ? paper_folding(n, mod).value() : pagoda(n, mod).value()));
    return which == Quadratic::Phi ? phi_identity_holds(x, N) : pi_identity_holds(x, N);
}

FieldElement hankel_det(const SequenceSource& source, std::int64_t n, std::int64_t l) {
    if (l < 0) throw DomainError("Hankel size must be >= 1");
    const auto theta = source.residues(n, n + 2 * l);
    const std::size_t s = static_cast<std::size_t>(l + 1);
    std::vector<std::vector<int>> a(s, std::vector<int>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) a[i][j] = theta[i + j];
    return {determinant_mod(std::move(a), SmallField(source.modulus())), source.modulus()};
}

}  // namespace nwall
