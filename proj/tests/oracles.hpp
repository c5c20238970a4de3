// Independent reference computations shared by the unit tests and the acceptance runner.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "numberwall/laurent.hpp"
#include "numberwall/wall.hpp"
#include "numberwall/windows.hpp"

namespace oracle {

inline int pmod(std::int64_t a, int p) { return static_cast<int>(((a % p) + p) % p); }

inline int inv(int a, int p) {
    // Fermat; p is prime and small
    int r = 1, b = a % p;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r;
}

/// Determinant by straightforward elimination with column swaps.
inline int det(std::vector<std::vector<int>> a, int p) {
    const std::size_t n = a.size();
    int d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] % p == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = pmod(-d, p);
        }
        d = d * pmod(a[c][c], p) % p;
        const int iv = inv(pmod(a[c][c], p), p);
        for (std::size_t r = c + 1; r < n; ++r) {
            const int f = pmod(a[r][c], p) * iv % p;
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k) a[r][k] = pmod(a[r][k] - f * a[c][k], p);
        }
    }
    return d;
}

/// Toeplitz determinant det[theta(n + j - i)] of size m+1.
template <class F>
int toeplitz(F&& theta, std::int64_t m, std::int64_t n, int p) {
    if (m == -1) return 1;
    if (m < -1) return 0;
    const std::size_t s = static_cast<std::size_t>(m + 1);
    std::vector<std::vector<int>> a(s, std::vector<int>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            a[i][j] = theta(n + static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i));
    return det(std::move(a), p);
}

inline std::vector<int> random_residues(std::mt19937_64& rng, int p, std::size_t n) {
    std::uniform_int_distribution<int> d(0, p - 1);
    std::vector<int> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

/**
 * Partial-quotient degrees of x = sum c_i t^{-i} (c[0] is the t^{-1} coefficient) by repeated series
 * inversion: 1/x = a + x', deg a = valuation of x. Stops when the next valuation is not visible
 * inside the known coefficients.
 */
inline std::vector<std::int64_t> cf_by_inversion(std::vector<int> c, int p) {
    std::vector<std::int64_t> out;
    // x = t^{-v} (c_v + c_{v+1} t^{-1} + ...); known through t^{-N}
    while (true) {
        std::size_t v = 0;
        while (v < c.size() && c[v] == 0) ++v;
        if (v == c.size()) break;
        const std::int64_t d = static_cast<std::int64_t>(v) + 1;  // valuation
        // u = c_v + c_{v+1} s + ..., s = t^{-1}; known to s^{K} with K = N - d
        const std::size_t K = c.size() - v - 1;
        std::vector<int> u(c.begin() + static_cast<std::ptrdiff_t>(v), c.end());
        // w = 1/u as a power series in s, through s^K
        std::vector<int> w(K + 1, 0);
        const int iu = inv(u[0], p);
        w[0] = iu;
        for (std::size_t i = 1; i <= K; ++i) {
            int acc = 0;
            for (std::size_t j = 1; j <= i; ++j) acc = pmod(acc + u[j] * w[i - j], p);
            w[i] = pmod(-acc * iu, p);
        }
        // 1/x = t^d w(s) = (w_0 t^d + ... + w_d) + sum_{i>d} w_i t^{d-i}; fractional part known to t^{-(K-d)}
        out.push_back(d);
        if (K <= static_cast<std::size_t>(d)) break;
        c.assign(w.begin() + static_cast<std::ptrdiff_t>(d) + 1, w.end());
    }
    return out;
}

struct CfWallReport {
    bool ok = true;
    std::string why;
    std::int64_t cf_max = 1;         // max certified degree over all shifts
    std::int64_t cf_comparable = 1;  // max certified degree whose window the census sees as unbroken
    std::int64_t wall_max = 1;       // max deficiency over unbroken census windows in rows >= 0
};

/**
 * Wall for the finite data theta_1..theta_L against continued fractions of t^k Theta, k = 0..L-1.
 * Each certified quotient of degree d at accumulated degree h must show as d-1 zeros on the wall
 * diagonal (h + i, k + 1 + h + i) followed by a nonzero entry wherever the wall knows them; every
 * unbroken census window must appear as a certified quotient with degree equal to its deficiency.
 */
inline CfWallReport cf_wall_agreement(const std::vector<int>& theta, nwall::Modulus mod) {
    using namespace nwall;
    CfWallReport rep;
    const auto L = static_cast<std::int64_t>(theta.size());
    const WallSegment w = build_from_values(mod, 1, theta, -2, L / 2, 1, L);
    // (row, col) of a window's top-left corner -> certified degree found there
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> quotient_at;
    for (std::int64_t k = 0; k < L; ++k) {
        LaurentTruncation t{mod, std::vector<int>(theta.begin() + k, theta.end())};
        const CFProfile cf = continued_fraction(t);
        std::int64_t h = 0;
        for (std::size_t j = 0; j < cf.certified; ++j) {
            const std::int64_t d = cf.degrees[j];
            rep.cf_max = std::max(rep.cf_max, d);
            for (std::int64_t i = 0; i < d; ++i) {
                const std::int64_t m = h + i, n = k + 1 + h + i;
                if (!w.contains(m, n) || !w.valid(m, n)) continue;
                const bool zero = w.at(m, n) == 0;
                if (zero != (i < d - 1)) {
                    rep.ok = false;
                    rep.why = "diagonal mismatch at shift " + std::to_string(k) + " row " + std::to_string(m);
                    return rep;
                }
            }
            if (d >= 2) quotient_at[{h, k + 1 + h}] = d;
            h += d;
        }
    }
    // rows 0..R, columns 2R..L-2R: determined by theta_1..theta_L, with room for frames of side < R
    const std::int64_t R = L / 6;
    Census c;
    try {
        c = census(w, {0, R, 2 * R, L - 2 * R});
    } catch (const std::logic_error& e) {
        rep.ok = false;
        rep.why = std::string("census: ") + e.what();
        return rep;
    }
    for (const auto& win : c.windows) {
        if (win.broken || win.m < 0) continue;
        rep.wall_max = std::max(rep.wall_max, win.deficiency);
        const auto it = quotient_at.find({win.m, win.n});
        if (it == quotient_at.end() || it->second != win.deficiency) {
            rep.ok = false;
            rep.why = "window at (" + std::to_string(win.m) + ", " + std::to_string(win.n) +
                      ") has no matching certified quotient";
            return rep;
        }
        rep.cf_comparable = std::max(rep.cf_comparable, it->second);
    }
    if (rep.cf_comparable != rep.wall_max || rep.cf_max < rep.wall_max) {
        rep.ok = false;
        rep.why = "maxima disagree";
    }
    return rep;
}

}  // namespace oracle
