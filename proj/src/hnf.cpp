#include "loopdec/hnf.hpp"

#include <algorithm>

#include "loopdec/errors.hpp"

namespace loopdec {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b; // truncated
    if ((a % b) != 0 && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

namespace {

// g = x*a + y*b with g = gcd(a, b) >= 0.
Int xgcd(Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

void axpy(std::vector<Int>& dst, const Int& coef, const std::vector<Int>& src) {
    for (size_t i = 0; i < dst.size(); i++) dst[i] += coef * src[i];
}

} // namespace

LatticeBasis::LatticeBasis(int dim, int comb_capacity)
    : dim_(dim), comb_capacity_(comb_capacity) {}

bool LatticeBasis::insert(std::vector<Int> g) {
    if (static_cast<int>(g.size()) != dim_)
        fail("InvalidParameter", "generator has wrong dimension");
    Vec cur;
    cur.v = std::move(g);
    if (comb_capacity_ > 0) {
        if (inserted_ >= comb_capacity_)
            fail("InvalidParameter", "generator capacity exceeded");
        cur.comb.assign(comb_capacity_, 0);
        cur.comb[inserted_] = 1;
    }
    inserted_++;

    bool changed = false;
    size_t slot = 0; // basis_ index whose pivot we are at or past
    for (int r = 0; r < dim_; r++) {
        if (cur.v[r] == 0) {
            if (slot < basis_.size() && basis_[slot].pivot == r) slot++;
            continue;
        }
        if (slot < basis_.size() && basis_[slot].pivot == r) {
            Vec& b = basis_[slot];
            if (cur.v[r] % b.v[r] == 0) {
                Int q = -(cur.v[r] / b.v[r]);
                axpy(cur.v, q, b.v);
                if (comb_capacity_ > 0) axpy(cur.comb, q, b.comb);
            } else {
                // Euclid step: basis vector takes the gcd pivot, the
                // remainder vector keeps a zero at row r.
                Int x, y;
                Int p = b.v[r], a = cur.v[r];
                Int d = xgcd(p, a, x, y);
                Vec nb, ng;
                nb.pivot = r;
                nb.v.resize(dim_);
                ng.v.resize(dim_);
                for (int i = 0; i < dim_; i++) {
                    nb.v[i] = x * b.v[i] + y * cur.v[i];
                    ng.v[i] = (a / d) * b.v[i] - (p / d) * cur.v[i];
                }
                if (comb_capacity_ > 0) {
                    nb.comb.resize(comb_capacity_);
                    ng.comb.resize(comb_capacity_);
                    for (int i = 0; i < comb_capacity_; i++) {
                        nb.comb[i] = x * b.comb[i] + y * cur.comb[i];
                        ng.comb[i] = (a / d) * b.comb[i] - (p / d) * cur.comb[i];
                    }
                }
                basis_[slot] = std::move(nb);
                cur = std::move(ng);
                changed = true;
            }
            slot++;
        } else {
            // New pivot row; normalize the pivot sign and insert here.
            if (cur.v[r] < 0) {
                for (auto& e : cur.v) e = -e;
                for (auto& e : cur.comb) e = -e;
            }
            cur.pivot = r;
            basis_.insert(basis_.begin() + slot, std::move(cur));
            changed = true;
            cur.v.clear();
            break;
        }
    }
    if (changed) reduce_off_pivots();
    return changed;
}

void LatticeBasis::reduce_off_pivots() {
    // Entries of every basis vector on later pivot rows are reduced into
    // [0, pivot), restoring the canonical form and keeping numbers small.
    for (size_t j = basis_.size(); j-- > 0;) {
        for (size_t k = j + 1; k < basis_.size(); k++) {
            int r = basis_[k].pivot;
            if (basis_[j].v[r] == 0) continue;
            Int q = -floor_div(basis_[j].v[r], basis_[k].v[r]);
            if (q == 0) continue;
            axpy(basis_[j].v, q, basis_[k].v);
            if (comb_capacity_ > 0) axpy(basis_[j].comb, q, basis_[k].comb);
        }
    }
}

std::optional<std::vector<Int>> LatticeBasis::member(std::vector<Int> x,
                                                     int* stuck_row) const {
    if (static_cast<int>(x.size()) != dim_)
        fail("InvalidParameter", "query vector has wrong dimension");
    std::vector<Int> coeffs(comb_capacity_ > 0 ? comb_capacity_ : 0, 0);
    size_t slot = 0;
    for (int r = 0; r < dim_; r++) {
        bool have_pivot = slot < basis_.size() && basis_[slot].pivot == r;
        if (x[r] != 0) {
            if (!have_pivot || x[r] % basis_[slot].v[r] != 0) {
                if (stuck_row) *stuck_row = r;
                return std::nullopt;
            }
            Int q = -(x[r] / basis_[slot].v[r]);
            axpy(x, q, basis_[slot].v);
            if (comb_capacity_ > 0) axpy(coeffs, -q, basis_[slot].comb);
        }
        if (have_pivot) slot++;
    }
    return coeffs;
}

} // namespace loopdec
