#pragma once

#include "ears/lattice.hpp"
#include "ears/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ears {

// A (translated) semilattice S in Q^nu. The input is C + 2<B>; once S + 2<S>
// is known to lie in S it is stored as cosets of 2<S>.
class SemilatticeData {
public:
    SemilatticeData() = default;
    static SemilatticeData make(std::size_t nu, const std::vector<RationalVector>& basis,
                                const std::vector<RationalVector>& cosets, bool translated = false);
    static SemilatticeData from_lattice(const Lattice& l);
    static SemilatticeData from_set(const CosetSet& s, bool translated = false);

    std::size_t rank() const { return nu_; }
    bool translated() const { return translated_; }
    // <S>
    const Lattice& lattice() const { return lat_; }
    bool spans() const { return lat_.full_rank(); }
    // true when S + 2<S> is contained in S and S spans
    bool canonical() const { return canonical_; }
    // S as a coset set modulo 2<S>; requires canonical()
    const CosetSet& set() const;
    std::vector<RationalVector> cosets() const { return set().reps(); }
    std::size_t num_cosets() const { return set().num_reps(); }
    bool is_lattice() const;

    bool contains(const RationalVector& v) const;
    std::vector<RationalVector> window(const Q& bound) const;

    bool operator==(const SemilatticeData& o) const;
    bool operator!=(const SemilatticeData& o) const { return !(*this == o); }
    std::string str() const;

    // first c + 2g outside S for c in C and g = +-generator of <S>
    std::optional<RationalVector> closure_witness() const;

private:
    std::size_t nu_ = 0;
    bool translated_ = false;
    bool canonical_ = false;
    Lattice raw2_; // 2<B>
    std::vector<RationalVector> raw_cosets_;
    Lattice lat_;
    CosetSet set_;
};

struct SemilatticeReport {
    bool spans = false;
    bool closed = false;
    bool zero_ok = false;
    std::vector<std::string> failures;
    std::optional<RationalVector> witness;
    bool pass() const { return spans && closed && zero_ok; }
};

SemilatticeReport verify_semilattice(const SemilatticeData& s);

// A + kB subset of A, decided as A + k<B> subset of A.
bool sum_condition(const SemilatticeData& a, const SemilatticeData& b, std::int64_t k);
// A intersect 2B is empty
bool disjoint_from_double(const SemilatticeData& a, const SemilatticeData& b);

} // namespace ears
