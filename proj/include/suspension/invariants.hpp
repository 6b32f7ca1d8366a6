#pragma once

#include "newton.hpp"

namespace suspension {

// gcd-derived integers of the pair (f, n). Vectors indexed by k are 1-based:
// d[k] for 0 <= k <= s; h, h_tilde, p_prime, a_prime for 1 <= k <= s
// with slot 0 unused.
struct SuspensionInvariants {
    NewtonData data;
    Integer n;
    std::vector<Integer> d;
    std::vector<Integer> h;
    std::vector<Integer> h_tilde;
    std::vector<Integer> p_prime;
    std::vector<Integer> a_prime;

    std::size_t s() const { return data.s(); }

    Integer h_product(std::size_t from) const {
        Integer r = 1;
        for (std::size_t k = from; k <= s(); ++k) r *= h[k];
        return r;
    }
    Integer p_prime_product(std::size_t from) const {
        Integer r = 1;
        for (std::size_t k = from; k <= s(); ++k) r *= p_prime[k];
        return r;
    }
};

inline SuspensionInvariants suspension_invariants(const NewtonPairs& pairs, const Integer& n) {
    SuspensionInvariants inv;
    inv.data = NewtonData::make(pairs, n);
    inv.n = n;
    const std::size_t s = inv.s();
    inv.d.assign(s + 1, 1);
    for (std::size_t k = 0; k < s; ++k) inv.d[k] = gcd(n, inv.data.p_tail(k + 1));
    inv.h.assign(s + 1, 0);
    inv.h_tilde.assign(s + 1, 0);
    inv.p_prime.assign(s + 1, 0);
    inv.a_prime.assign(s + 1, 0);
    for (std::size_t k = 1; k <= s; ++k) {
        inv.h[k] = inv.d[k - 1] / inv.d[k];
        inv.p_prime[k] = inv.data.p(k) / inv.h[k];
        inv.h_tilde[k] = gcd(inv.data.a_k(k), n / inv.d[k]);
        inv.a_prime[k] = inv.data.a_k(k) / inv.h_tilde[k];
    }
    return inv;
}

// gcd of the multiplicities over a vertex and its neighbours, at the marked vertices
// of the embedded curve graph; indexed like MarkedCurveGraph.
struct MarkGcds {
    std::vector<Integer> v;
    std::vector<Integer> vbar;
};

inline MarkGcds predicted_mark_gcds(const NewtonPairs& pairs) {
    auto data = NewtonData::make(pairs);
    const std::size_t s = data.s();
    MarkGcds m;
    m.v.assign(s + 1, 0);
    m.vbar.assign(s + 1, 0);
    m.vbar[0] = data.p_tail(1);
    for (std::size_t k = 1; k <= s; ++k) {
        m.vbar[k] = data.a_k(k) * data.p_tail(k + 1);
        m.v[k] = data.p_tail(k + 1);
    }
    return m;
}

struct FiberPrediction {
    Integer count;
    Integer multiplicity;
    Integer genus;
};

struct CoverPrediction {
    std::vector<FiberPrediction> v;     // 1 <= k <= s
    std::vector<FiberPrediction> vbar;  // 0 <= k <= s
};

// Fibre sizes, multiplicities and genera over the marked vertices.
inline CoverPrediction predicted_fibers(const NewtonPairs& pairs, const Integer& n) {
    auto inv = suspension_invariants(pairs, n);
    const std::size_t s = inv.s();
    CoverPrediction c;
    c.v.resize(s + 1);
    c.vbar.resize(s + 1);
    c.vbar[0] = {inv.h_product(1), inv.p_prime_product(1), 0};
    for (std::size_t k = 1; k <= s; ++k) {
        c.v[k].count = inv.h_product(k + 1);
        c.v[k].multiplicity = inv.a_prime[k] * inv.p_prime_product(k);
        c.v[k].genus = (inv.h[k] - 1) * (inv.h_tilde[k] - 1) / 2;
        c.vbar[k].count = inv.h_tilde[k] * inv.h_product(k + 1);
        c.vbar[k].multiplicity = inv.a_prime[k] * inv.p_prime_product(k + 1);
        c.vbar[k].genus = 0;
    }
    return c;
}

// Determinants of the maximal strings attached to the fibres of the marked vertices.
struct StringDeterminants {
    std::vector<Integer> v;     // D(v_k), 1 <= k <= s
    std::vector<Integer> vbar;  // D(vbar_k), 0 <= k <= s
};

inline StringDeterminants predicted_string_determinants(const NewtonPairs& pairs, const Integer& n) {
    auto inv = suspension_invariants(pairs, n);
    const std::size_t s = inv.s();
    StringDeterminants D;
    D.v.assign(s + 1, 0);
    D.vbar.assign(s + 1, 0);
    D.vbar[0] = inv.a_prime[1];
    for (std::size_t k = 1; k <= s; ++k) D.vbar[k] = inv.p_prime[k];
    D.v[s] = n / (inv.h[s] * inv.h_tilde[s]);
    for (std::size_t k = 1; k < s; ++k)
        D.v[k] = n * inv.data.q(k + 1) / (inv.d[k - 1] * inv.h_tilde[k] * inv.h_tilde[k + 1]);
    return D;
}

struct PmDeterminants {
    Integer minus_v2;                // D_-(v_2), closed form
    Integer plus_before_last;        // D_+(v_{s-1})
    std::vector<Rational> minus;     // D_-(v_k) by the inductive formula, 1 <= k <= s
};

inline PmDeterminants predicted_pm_determinants(const NewtonPairs& pairs, const Integer& n) {
    if (pairs.size() < 2) throw Error(ErrorCode::RequiresSGe2, "needs at least two Newton pairs");
    auto inv = suspension_invariants(pairs, n);
    auto D = predicted_string_determinants(pairs, n);
    const std::size_t s = inv.s();
    PmDeterminants pm;
    pm.minus_v2 = power(inv.a_prime[1], inv.h[1] - 1) * power(inv.p_prime[1], inv.h_tilde[1] - 1) * inv.a_prime[2];
    pm.plus_before_last = n * power(D.v[s - 1], inv.h[s] - 1) * power(D.vbar[s], inv.h_tilde[s] - 1) /
                          (inv.h[s] * inv.h[s - 1] * inv.h_tilde[s - 1]);
    pm.minus.assign(s + 1, Rational(0));
    pm.minus[1] = Rational(inv.a_prime[1]);
    for (std::size_t k = 2; k <= s; ++k) {
        Rational prev = pm.minus[k - 1] / Rational(inv.a_prime[k - 1]);
        Rational r(power(numerator(prev), inv.h[k - 1]), power(denominator(prev), inv.h[k - 1]));
        r *= Rational(power(inv.a_prime[k - 1], inv.h[k - 1] - 1) * power(inv.p_prime[k - 1], inv.h_tilde[k - 1] - 1));
        pm.minus[k] = r * Rational(inv.a_prime[k]);
    }
    return pm;
}

// (i, j) with a*i + p*j = 1.
inline std::pair<Integer, Integer> bezout(const Integer& a, const Integer& p) {
    if (a < 0 || p < 0) throw Error(ErrorCode::InvalidInput, "bezout expects non-negative arguments");
    auto b = extended_gcd(a, p);
    if (b.g != 1) throw Error(ErrorCode::NotCoprime, a.str() + " and " + p.str() + " are not coprime");
    return {b.x, b.y};
}

// Determinant of the resolution string of the normalisation of
// {z^q = x y^p, w^N = z^r y}: Nq / ((N, r)(N, rp + q)).
inline Integer hj_determinant(const Integer& q, const Integer& p, const Integer& N, const Integer& r) {
    if (gcd(q, p) != 1) throw Error(ErrorCode::NotCoprime, "q and p must be coprime");
    return N * q / (gcd(N, r) * gcd(N, r * p + q));
}

inline Integer milnor_number_s1(const Integer& h1, const Integer& h1t, const Integer& l) {
    return (h1 - 1) * (h1t - 1) * (h1t * h1 * l - 1);
}

inline Integer milnor_number_s2(const Integer& genus_v1, const Integer& p2, const Integer& a2, const Integer& n) {
    return (2 * genus_v1 * p2 + (p2 - 1) * (a2 - 1)) * (n - 1);
}

// Milnor number of f + z^n: mu(f) (n - 1), mu(f) = sum_k (p_k - 1)(a_k - 1) p_{k+1}...p_s.
inline Integer milnor_number(const NewtonPairs& pairs, const Integer& n) {
    auto data = NewtonData::make(pairs, n);
    Integer mu = 0;
    for (std::size_t k = 1; k <= data.s(); ++k) mu += (data.p(k) - 1) * (data.a_k(k) - 1) * data.p_tail(k + 1);
    return mu * (n - 1);
}

}  // namespace suspension
