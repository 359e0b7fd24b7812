#pragma once
#include <vector>

#include "loopdec/errors.hpp"

namespace loopdec {

// GF(q) for a prime power q = p^k up to a configured bound.  Elements are
// encoded as integers 0..q-1 whose base-p digits are the coefficients of the
// residue polynomial (for prime fields the encoding is the element itself).
// Multiplication and coset queries go through discrete-log tables built once
// from a deterministically chosen primitive element; for extension fields the
// modulus is the lexicographically least monic irreducible polynomial of
// degree k.
class Field {
public:
    explicit Field(long long q, long long bound = 1 << 20);

    long long q() const { return q_; }
    long long p() const { return p_; }
    int k() const { return k_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long e) const;

    int primitive_element() const { return gen_; }
    // Discrete log base the primitive element; a must be nonzero.
    int dlog(int a) const;
    int exp(long long e) const; // gen^e, exponent reduced mod q-1

    // Monic modulus polynomial, coefficient of x^i at index i (size k+1).
    // For prime fields this is the empty vector.
    const std::vector<int>& modulus() const { return modulus_; }

private:
    long long q_ = 0, p_ = 0;
    int k_ = 1;
    int gen_ = 0;
    std::vector<int> modulus_;
    std::vector<int> exp_, log_;
    int mul_direct(int a, int b) const;
};

// Cosets of the index-m subgroup C_0 of the multiplicative group.  Cosets are
// numbered 0..m-1 with coset 0 the subgroup itself; coset_of is O(1) via the
// field's log table.
class CosetSystem {
public:
    CosetSystem(const Field& f, int m);

    int m() const { return m_; }
    int coset_of(int x) const; // x must be nonzero
    const std::vector<std::vector<int>>& cosets() const { return cosets_; }

private:
    const Field& f_;
    int m_;
    std::vector<std::vector<int>> cosets_;
};

// A {1,-1}-transversal of the index-m subgroup: one representative from each
// pair {x, -x} in C_0, least encoding per pair, ascending.  Requires
// q = 1 (mod 2m), which is exactly the condition -1 in C_0.
std::vector<int> pm1_transversal(const Field& f, int m);

} // namespace loopdec
