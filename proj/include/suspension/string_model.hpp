#pragma once

#include "continued_fraction.hpp"

namespace suspension {

// Resolution string of the normalisation of {u^a v^b + w^N = 0}, read from the
// u-side (left) to the v-side (right).
struct StringModel {
    Integer a, b, N;
    Integer lambda;
    std::vector<Integer> quotients;       // vertex i has self-intersection -quotients[i]
    std::vector<Integer> multiplicities;  // multiplicity of the pulled-back function on vertex i
    Integer left_multiplicity;            // a/(a,N)
    Integer right_multiplicity;           // b/(b,N)
    Integer left_germ;                    // N/(a,N)
    Integer right_germ;                   // N/(b,N)

    bool empty() const { return quotients.empty(); }
    std::size_t length() const { return quotients.size(); }

    // det of the chain; N/((a,N)(b,N)).
    Integer determinant() const { return N / (gcd(a, N) * gcd(b, N)); }
};

inline StringModel string_model(const Integer& a, const Integer& b, const Integer& N) {
    if (a < 1 || b < 1 || N < 1) throw Error(ErrorCode::InvalidInput, "string parameters must be positive");
    if (gcd(a, b, N) != 1) throw Error(ErrorCode::InvalidInput, "string parameters must satisfy gcd(a,b,N)=1");
    StringModel st;
    st.a = a;
    st.b = b;
    st.N = N;
    Integer ga = gcd(a, N);
    Integer gb = gcd(b, N);
    Integer A = a / ga;
    Integer M = N / ga;
    st.left_multiplicity = A;
    st.right_multiplicity = b / gb;
    st.left_germ = M;
    st.right_germ = N / gb;

    // b + lambda*A = m_1*M with 0 <= lambda < M.
    Integer lam = (-b % M + M) % M * inverse_mod(A, M) % M;
    st.lambda = lam;
    Integer m1 = (b + lam * A) / M;
    if (lam == 0) return st;

    st.quotients = neg_cf(M, lam, 2);
    st.multiplicities.push_back(m1);
    Integer before = A;
    for (std::size_t i = 0; i + 1 < st.quotients.size(); ++i) {
        Integer next = st.quotients[i] * st.multiplicities[i] - before;
        before = st.multiplicities[i];
        st.multiplicities.push_back(next);
    }
    if (st.quotients.back() * st.multiplicities.back() != before + st.right_multiplicity)
        throw Error(ErrorCode::Internal, "string multiplicities do not close up");
    for (const auto& m : st.multiplicities)
        if (m <= 0) throw Error(ErrorCode::Internal, "non-positive string multiplicity");
    return st;
}

}  // namespace suspension
