#include "loopdec/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace loopdec {

namespace {

std::vector<long long> prime_factors(long long x) {
    std::vector<long long> ps;
    for (long long d = 2; d * d <= x; d++) {
        if (x % d) continue;
        ps.push_back(d);
        while (x % d == 0) x /= d;
    }
    if (x > 1) ps.push_back(x);
    return ps;
}

// Small dense polynomials over GF(p), coefficient of x^i at index i.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, long long p) {
    Poly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
    }
    int k = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(r.size()) - 1; i >= k; i--) {
        if (!r[i]) continue;
        int coef = r[i];
        for (int j = 0; j <= k; j++) {
            long long t = r[i - k + j] - 1LL * coef * mod[j] % p;
            r[i - k + j] = static_cast<int>((t % p + p) % p);
        }
    }
    r.resize(k);
    return r;
}

Poly poly_pow_mod(Poly base, long long e, const Poly& mod, long long p) {
    Poly r{1};
    r.resize(mod.size() - 1, 0);
    base.resize(mod.size() - 1, 0);
    while (e > 0) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& b, long long p) {
    trim(a);
    int db = static_cast<int>(b.size()) - 1;
    long long lead_inv = 1;
    // b is monic everywhere we call this
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        long long coef = a[da] * lead_inv % p;
        for (int j = 0; j <= db; j++) {
            long long t = a[da - db + j] - coef * b[j] % p;
            a[da - db + j] = static_cast<int>((t % p + p) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic before reducing
        long long inv = 1, lead = b.back(), e = p - 2;
        long long base = lead;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        Poly bm = b;
        for (auto& x : bm) x = static_cast<int>(x * inv % p);
        Poly r = poly_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Poly& f, long long p) {
    int k = static_cast<int>(f.size()) - 1;
    Poly x{0, 1};
    // x^(p^k) == x (mod f), and x^(p^(k/r)) - x coprime to f for prime r | k.
    Poly t = x;
    for (int i = 0; i < k; i++) t = poly_pow_mod(t, p, f, p);
    Poly xr = x;
    xr.resize(k, 0);
    if (t != xr) return false;
    for (long long r : prime_factors(k)) {
        Poly u = x;
        for (int i = 0; i < k / r; i++) u = poly_pow_mod(u, p, f, p);
        Poly diff(std::max(u.size(), xr.size()), 0);
        for (size_t i = 0; i < u.size(); i++) diff[i] = u[i];
        for (size_t i = 0; i < xr.size(); i++)
            diff[i] = static_cast<int>(((diff[i] - xr[i]) % p + p) % p);
        Poly g = poly_gcd(f, diff, p);
        if (static_cast<int>(g.size()) - 1 != 0) return false;
    }
    return true;
}

} // namespace

Field::Field(long long q, long long bound) : q_(q) {
    if (q > bound)
        fail("FieldBoundExceeded",
             "q = " + std::to_string(q) + " exceeds bound " + std::to_string(bound));
    if (q < 2) fail("NotPrimePower", std::to_string(q) + " is not a prime power");
    long long x = q;
    long long p = 0;
    for (long long d = 2; d * d <= x; d++) {
        if (x % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = x; // q itself prime
    int k = 0;
    while (x % p == 0) {
        x /= p;
        k++;
    }
    if (x != 1)
        fail("NotPrimePower", std::to_string(q) + " is not a prime power");
    p_ = p;
    k_ = k;

    if (k_ > 1) {
        // Lexicographically least monic irreducible modulus: scan the
        // non-leading coefficient vector as a base-p counter.
        long long found = -1;
        for (long long t = 0; t < q_; t++) {
            Poly f(k_ + 1, 0);
            f[k_] = 1;
            long long tt = t;
            for (int i = 0; i < k_; i++) {
                f[i] = static_cast<int>(tt % p_);
                tt /= p_;
            }
            if (is_irreducible(f, p_)) {
                modulus_.assign(f.begin(), f.end());
                found = t;
                break;
            }
        }
        if (found < 0) fail("Internal", "no irreducible modulus found"); // unreachable
    }

    // Deterministic primitive element: least encoding of full order q-1.
    if (q_ == 2) gen_ = 1;
    auto factors = prime_factors(q_ - 1);
    for (int g = 2; g < q_ && gen_ == 0; g++) {
        bool ok = true;
        for (long long r : factors) {
            // direct powering, tables do not exist yet
            long long e = (q_ - 1) / r;
            int acc = 1, base = g;
            long long ee = e;
            while (ee) {
                if (ee & 1) acc = mul_direct(acc, base);
                base = mul_direct(base, base);
                ee >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) gen_ = g;
    }

    exp_.resize(q_ - 1);
    log_.assign(q_, -1);
    int cur = 1;
    for (long long i = 0; i < q_ - 1; i++) {
        exp_[i] = cur;
        log_[cur] = static_cast<int>(i);
        cur = mul_direct(cur, gen_);
    }
}

int Field::mul_direct(int a, int b) const {
    if (k_ == 1) return static_cast<int>(1LL * a * b % p_);
    Poly pa(k_), pb(k_);
    long long ta = a, tb = b;
    for (int i = 0; i < k_; i++) {
        pa[i] = static_cast<int>(ta % p_);
        ta /= p_;
        pb[i] = static_cast<int>(tb % p_);
        tb /= p_;
    }
    Poly pm(modulus_.begin(), modulus_.end());
    Poly r = poly_mul_mod(pa, pb, pm, p_);
    long long enc = 0;
    for (int i = k_ - 1; i >= 0; i--) enc = enc * p_ + r[i];
    return static_cast<int>(enc);
}

int Field::add(int a, int b) const {
    if (k_ == 1) return static_cast<int>((a + 0LL + b) % p_);
    long long enc = 0, mult = 1;
    for (int i = 0; i < k_; i++) {
        long long da = a % p_, db = b % p_;
        a = static_cast<int>(a / p_);
        b = static_cast<int>(b / p_);
        enc += (da + db) % p_ * mult;
        mult *= p_;
    }
    return static_cast<int>(enc);
}

int Field::neg(int a) const {
    if (k_ == 1) return static_cast<int>((p_ - a) % p_);
    long long enc = 0, mult = 1;
    for (int i = 0; i < k_; i++) {
        long long da = a % p_;
        a = static_cast<int>(a / p_);
        enc += (p_ - da) % p_ * mult;
        mult *= p_;
    }
    return static_cast<int>(enc);
}

int Field::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + 0LL + log_[b]) % (q_ - 1)];
}

int Field::inv(int a) const {
    if (a == 0) fail("InvalidParameter", "zero has no inverse");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int Field::pow(int a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) fail("InvalidParameter", "zero has no inverse");
        return 0;
    }
    long long le = log_[a] % (q_ - 1) * (e % (q_ - 1)) % (q_ - 1);
    le = ((le % (q_ - 1)) + q_ - 1) % (q_ - 1);
    return exp_[le];
}

int Field::dlog(int a) const {
    if (a == 0) fail("InvalidParameter", "zero has no discrete log");
    return log_[a];
}

int Field::exp(long long e) const {
    long long r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[r];
}

CosetSystem::CosetSystem(const Field& f, int m) : f_(f), m_(m) {
    if (m < 1 || (f.q() - 1) % m != 0)
        fail("IndexDoesNotDivide",
             "index " + std::to_string(m) + " does not divide q-1 = " +
                 std::to_string(f.q() - 1));
    cosets_.assign(m, {});
    for (int x = 1; x < f.q(); x++) cosets_[f.dlog(x) % m].push_back(x);
    for (auto& cs : cosets_) std::sort(cs.begin(), cs.end());
}

int CosetSystem::coset_of(int x) const {
    if (x == 0) fail("InvalidParameter", "zero lies in no coset");
    return f_.dlog(x) % m_;
}

std::vector<int> pm1_transversal(const Field& f, int m) {
    if (m < 1 || (f.q() - 1) % (2LL * m) != 0)
        fail("MinusOneNotInSubgroup",
             "need q = 1 (mod 2m): -1 must lie in the index-" + std::to_string(m) +
                 " subgroup of GF(" + std::to_string(f.q()) + ")*");
    std::vector<int> t;
    for (int x = 1; x < f.q(); x++) {
        if (f.dlog(x) % m != 0) continue; // not in C_0
        if (f.neg(x) > x) t.push_back(x); // least of each pair {x, -x}
    }
    return t;
}

} // namespace loopdec
