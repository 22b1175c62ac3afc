#include "ears/semilattice.hpp"

#include "ears/error.hpp"

#include <algorithm>
#include <sstream>

namespace ears {

SemilatticeData SemilatticeData::make(std::size_t nu, const std::vector<RationalVector>& basis,
                                      const std::vector<RationalVector>& cosets, bool translated) {
    for (const auto& v : basis)
        if (v.dim() != nu) throw DimensionMismatch("semilattice basis vector " + v.str());
    for (const auto& v : cosets)
        if (v.dim() != nu) throw DimensionMismatch("semilattice coset " + v.str());
    SemilatticeData s;
    s.nu_ = nu;
    s.translated_ = translated;
    s.raw2_ = Lattice::generated(nu, basis).scaled(2);
    s.raw_cosets_ = cosets;
    std::sort(s.raw_cosets_.begin(), s.raw_cosets_.end());
    s.raw_cosets_.erase(std::unique(s.raw_cosets_.begin(), s.raw_cosets_.end()), s.raw_cosets_.end());
    if (cosets.empty()) {
        s.lat_ = Lattice::zero(nu);
    } else {
        std::vector<RationalVector> gens = cosets;
        for (const auto& b : s.raw2_.basis()) gens.push_back(b);
        s.lat_ = Lattice::generated(nu, gens);
    }
    s.canonical_ = s.spans() && !s.closure_witness();
    if (s.canonical_) {
        Lattice m = s.lat_.scaled(2);
        s.set_ = CosetSet::from(s.raw2_ + m, s.raw_cosets_).refined(m);
    }
    return s;
}

SemilatticeData SemilatticeData::from_lattice(const Lattice& l) { return from_set(CosetSet::of_lattice(l), false); }

SemilatticeData SemilatticeData::from_set(const CosetSet& s, bool translated) {
    std::vector<RationalVector> half;
    for (const auto& b : s.modulus().basis()) half.push_back(b * Q(1, 2));
    return make(s.dim(), half, s.reps(), translated);
}

const CosetSet& SemilatticeData::set() const {
    if (!canonical_) throw ConstraintViolation("S + 2S not contained in S (no canonical coset form)");
    return set_;
}

bool SemilatticeData::is_lattice() const {
    return canonical_ && set_.num_reps() == (std::size_t{1} << nu_);
}

bool SemilatticeData::contains(const RationalVector& v) const {
    if (v.dim() != nu_) throw DimensionMismatch("semilattice membership");
    if (canonical_) return set_.contains(v);
    for (const auto& c : raw_cosets_)
        if (raw2_.contains(v - c)) return true;
    return false;
}

std::optional<RationalVector> SemilatticeData::closure_witness() const {
    for (const auto& c : raw_cosets_)
        for (const auto& g : lat_.basis())
            for (int sgn : {1, -1}) {
                RationalVector x = c + g * Q(2 * sgn);
                bool in = false;
                for (const auto& d : raw_cosets_)
                    if (raw2_.contains(x - d)) {
                        in = true;
                        break;
                    }
                if (!in) return x;
            }
    return std::nullopt;
}

std::vector<RationalVector> SemilatticeData::window(const Q& bound) const {
    if (canonical_) return set_.window(bound);
    if (!spans()) throw ConstraintViolation("S does not span");
    std::vector<RationalVector> out;
    for (const auto& v : CosetSet::of_lattice(lat_).window(bound))
        if (contains(v)) out.push_back(v);
    return out;
}

bool SemilatticeData::operator==(const SemilatticeData& o) const {
    if (nu_ != o.nu_) return false;
    if (canonical_ && o.canonical_) return set_ == o.set_;
    return canonical_ == o.canonical_ && raw2_ == o.raw2_ && raw_cosets_ == o.raw_cosets_;
}

std::string SemilatticeData::str() const {
    std::ostringstream os;
    if (canonical_) {
        os << set_.str();
    } else {
        os << "{";
        for (std::size_t i = 0; i < raw_cosets_.size(); ++i) os << (i ? ", " : "") << raw_cosets_[i].str();
        os << "} + " << raw2_.str();
    }
    if (translated_) os << " (translated)";
    return os.str();
}

SemilatticeReport verify_semilattice(const SemilatticeData& s) {
    SemilatticeReport r;
    r.spans = s.spans();
    if (!r.spans) r.failures.push_back("S does not span");
    auto w = s.closure_witness();
    r.closed = !w;
    if (w) {
        r.failures.push_back("S + 2S not contained in S: " + w->str());
        r.witness = w;
    }
    r.zero_ok = s.translated() || s.contains(RationalVector(s.rank()));
    if (!r.zero_ok) {
        r.failures.push_back("0 not in S");
        if (!r.witness) r.witness = RationalVector(s.rank());
    }
    return r;
}

bool sum_condition(const SemilatticeData& a, const SemilatticeData& b, std::int64_t k) {
    if (a.rank() != b.rank()) throw RankMismatch("sum_condition");
    if (!a.canonical() || !b.canonical()) return false;
    auto gens = b.lattice().basis();
    for (const auto& r : a.cosets())
        for (const auto& g : gens)
            for (std::int64_t sgn : {1, -1})
                if (!a.set().contains(r + g * Q(static_cast<long>(sgn * k)))) return false;
    return true;
}

bool disjoint_from_double(const SemilatticeData& a, const SemilatticeData& b) {
    if (a.rank() != b.rank()) throw RankMismatch("disjoint_from_double");
    return a.set().intersect(b.set().scaled(2)).is_empty();
}

} // namespace ears
