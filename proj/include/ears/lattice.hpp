#pragma once

#include "ears/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ears {

using IntVec = std::vector<std::int64_t>;

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t floordiv(std::int64_t a, std::int64_t b);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t from_mpz(const Z& z);
} // namespace checked

// Row-style Hermite normal form: nonzero rows only, pivot columns strictly
// increasing, pivots positive, entries above a pivot reduced into [0, pivot).
std::vector<IntVec> hermite_normal_form(const std::vector<IntVec>& rows, std::size_t ncols);

// Common denominator D and integer vector D*v.
std::int64_t denominator_of(const RationalVector& v);
IntVec scale_to_int(const RationalVector& v, std::int64_t den);
RationalVector from_scaled(const IntVec& v, std::int64_t den);

// A finitely generated subgroup of Q^n, stored as (1/den) * (integer HNF rows).
class Lattice {
public:
    Lattice() = default;
    static Lattice zero(std::size_t n);
    static Lattice standard(std::size_t n, const Q& scale = 1);
    static Lattice generated(std::size_t n, const std::vector<RationalVector>& gens);
    static Lattice from_int(std::size_t n, std::int64_t den, const std::vector<IntVec>& gens);

    std::size_t dim() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    bool full_rank() const { return rows_.size() == n_; }
    std::int64_t den() const { return den_; }
    const std::vector<IntVec>& rows() const { return rows_; }
    std::vector<RationalVector> basis() const;
    // rows of den' * L, requires den() | den'
    std::vector<IntVec> rows_at(std::int64_t den) const;

    bool contains(const RationalVector& v) const;
    bool contains_int(const IntVec& v, std::int64_t den) const;
    bool subset_of(const Lattice& o) const;
    bool operator==(const Lattice& o) const { return n_ == o.n_ && den_ == o.den_ && rows_ == o.rows_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    Lattice operator+(const Lattice& o) const;
    Lattice intersect(const Lattice& o) const;
    Lattice scaled(const Q& s) const;
    // index [o : *this] for full-rank this subset o
    std::int64_t index_in(const Lattice& o) const;
    std::string str() const;

private:
    void normalize();
    std::size_t n_ = 0;
    std::int64_t den_ = 1;
    std::vector<IntVec> rows_;
};

// Finite union of cosets of a full-rank lattice M in Q^n:
//   { (r + m) / den : r in reps, m in den*M }.
class CosetSet {
public:
    CosetSet() = default;
    static CosetSet empty(std::size_t n);
    static CosetSet of_lattice(const Lattice& l);
    static CosetSet from(const Lattice& modulus, const std::vector<RationalVector>& reps);

    std::size_t dim() const { return n_; }
    std::int64_t den() const { return den_; }
    bool is_empty() const { return reps_.empty(); }
    Lattice modulus() const;
    // integer modulus rows and reps at den()
    const std::vector<IntVec>& modulus_rows() const { return mod_; }
    const std::vector<IntVec>& int_reps() const { return reps_; }
    std::vector<RationalVector> reps() const;
    std::size_t num_reps() const { return reps_.size(); }

    bool contains(const RationalVector& v) const;
    bool contains_int(const IntVec& v, std::int64_t den) const;
    // v is given at den(); no rescaling
    bool contains_native(const IntVec& v) const;

    CosetSet unite(const CosetSet& o) const;
    CosetSet intersect(const CosetSet& o) const;
    CosetSet minus(const CosetSet& o) const;
    bool subset_of(const CosetSet& o) const;
    bool operator==(const CosetSet& o) const;
    bool operator!=(const CosetSet& o) const { return !(*this == o); }

    CosetSet plus(const CosetSet& o) const;
    CosetSet plus(const Lattice& l) const;
    CosetSet negate() const;
    CosetSet scaled(const Q& s) const;
    CosetSet translated(const RationalVector& v) const;
    // same set described with a finer modulus K (K subset of modulus)
    CosetSet refined(const Lattice& k) const;

    Lattice generated() const;
    // elements with max-norm <= bound, sorted
    std::vector<RationalVector> window(const Q& bound) const;
    std::vector<IntVec> window_native(const Q& bound) const;
    // canonical representative of v modulo the modulus (v at den())
    IntVec reduce_native(IntVec v) const;
    std::string str() const;

private:
    static void align(CosetSet& a, CosetSet& b);
    CosetSet at_den(std::int64_t d) const;
    void canonicalize();

    std::size_t n_ = 0;
    std::int64_t den_ = 1;
    std::vector<IntVec> mod_;
    std::vector<IntVec> reps_;
};

// Reduction of integer v modulo the full-rank upper-triangular HNF rows.
IntVec reduce_mod(const std::vector<IntVec>& hnf_rows, IntVec v);
// Complete residue system of the full-rank sublattice K in M (both integer HNF rows).
std::vector<IntVec> coset_representatives(const std::vector<IntVec>& k, const std::vector<IntVec>& m);
// Lattice points r + x*M with max-norm <= b (integer data, M full-rank HNF).
std::vector<IntVec> enumerate_box(const std::vector<IntVec>& m, const IntVec& r, std::int64_t b);

} // namespace ears
