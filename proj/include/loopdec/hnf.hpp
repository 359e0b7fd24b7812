#pragma once
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace loopdec {

using Int = boost::multiprecision::cpp_int;

// Integer lattice basis kept in column Hermite form: at most one basis
// vector per pivot row, pivot entries positive, entries of other basis
// vectors on a pivot row reduced into [0, pivot).  All arithmetic is exact
// arbitrary precision; intermediate coefficient growth is unbounded in
// principle, so no fixed-width fast path.
//
// When built with comb_capacity > 0 the basis additionally tracks how every
// basis vector is composed from the inserted generators, so that membership
// queries can name a certificate over the original generators.
class LatticeBasis {
public:
    LatticeBasis(int dim, int comb_capacity = 0);

    // Adds a generator; returns true when the spanned lattice grows.
    bool insert(std::vector<Int> g);

    // Membership test.  On success returns coefficients over the inserted
    // generators (empty vector when combinations are not tracked); on failure
    // returns nullopt and, if given, stores the row where reduction stuck.
    std::optional<std::vector<Int>> member(std::vector<Int> x,
                                           int* stuck_row = nullptr) const;

    int rank() const { return static_cast<int>(basis_.size()); }
    int generators_inserted() const { return inserted_; }

private:
    struct Vec {
        int pivot = 0;
        std::vector<Int> v;
        std::vector<Int> comb;
    };

    void reduce_off_pivots();

    int dim_;
    int comb_capacity_;
    int inserted_ = 0;
    std::vector<Vec> basis_; // ordered by pivot row
};

// Floor division (quotient rounded toward minus infinity).
Int floor_div(const Int& a, const Int& b);

} // namespace loopdec
