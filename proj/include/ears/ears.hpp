#pragma once

#include "ears/finite_root.hpp"
#include "ears/lattice.hpp"
#include "ears/linalg.hpp"
#include "ears/semilattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ears {

enum class RootKind { Anisotropic, Isotropic, NotRoot };
const char* kind_name(RootKind k);

// A root alpdot + sigma. fin indexes the finite roots; -1 means alpdot = 0.
// sig holds den * sigma.
struct WindowRoot {
    int fin = -1;
    IntVec sig;
    bool operator<(const WindowRoot& o) const { return fin != o.fin ? fin < o.fin : sig < o.sig; }
    bool operator==(const WindowRoot& o) const { return fin == o.fin && sig == o.sig; }
};

class EarsDescriptor {
public:
    EarsDescriptor() = default;

    const FiniteRootSystem& finite() const { return fin_; }
    const TypeSymbol& type() const { return fin_.type(); }
    int nullity() const { return nu_; }
    int ell() const { return fin_.rank(); }
    const AmbientSpace& space() const { return space_; }
    const SemilatticeData& S() const { return s_; }
    const std::optional<SemilatticeData>& L() const { return l_; }
    const std::optional<SemilatticeData>& E() const { return e_; }
    // semilattice attached to a length class, nullptr if the class is empty
    const SemilatticeData* class_set(int c) const;
    int k() const { return fin_.type().family == Family::G ? 3 : 2; }
    // R0 = S + S, as a subset of V0
    const CosetSet& isotropic() const { return iso_; }
    // common denominator of all sigma coordinates
    std::int64_t den() const { return den_; }
    const std::vector<RationalVector>& extra_roots() const { return extra_; }

    RationalVector vec(const WindowRoot& r) const;
    RationalVector vec(int fin, const RationalVector& sigma) const;
    std::optional<WindowRoot> locate(const RationalVector& v) const;
    bool contains_struct(int fin, const IntVec& sig) const;

    friend EarsDescriptor construct_ears(const TypeSymbol& x, int nu, const SemilatticeData& s,
                                         const std::optional<SemilatticeData>& l,
                                         const std::optional<SemilatticeData>& e);
    friend EarsDescriptor with_extra_roots(const EarsDescriptor& r, const std::vector<RationalVector>& extra);

private:
    FiniteRootSystem fin_;
    int nu_ = 0;
    AmbientSpace space_;
    SemilatticeData s_;
    std::optional<SemilatticeData> l_, e_;
    std::array<int, 3> which_{{-1, -1, -1}}; // 0 = S, 1 = L, 2 = E
    CosetSet iso_;
    std::int64_t den_ = 1;
    std::vector<RationalVector> extra_;
};

EarsDescriptor construct_ears(const TypeSymbol& x, int nu, const SemilatticeData& s,
                              const std::optional<SemilatticeData>& l = std::nullopt,
                              const std::optional<SemilatticeData>& e = std::nullopt);
// Adds arbitrary vectors to R; used to build deliberately broken inputs.
EarsDescriptor with_extra_roots(const EarsDescriptor& r, const std::vector<RationalVector>& extra);

RootKind is_root(const EarsDescriptor& r, const RationalVector& v);

// Roots whose V0 part has max-norm <= b. The finite part is always complete.
std::vector<WindowRoot> anisotropic_window_struct(const EarsDescriptor& r, const Q& b);
std::vector<RationalVector> anisotropic_window(const EarsDescriptor& r, const Q& b);
std::vector<RationalVector> isotropic_window(const EarsDescriptor& r, const Q& b);
std::vector<RationalVector> root_window(const EarsDescriptor& r, const Q& b);

struct AxiomResult {
    std::string axiom;
    bool pass = true;
    std::string detail;
    std::vector<RationalVector> witness;
    std::size_t checked = 0;
};

struct AxiomReport {
    std::int64_t window = 0;
    std::vector<AxiomResult> results;
    bool pass() const;
    const AxiomResult& at(const std::string& axiom) const;
    std::string caveat() const { return "verified on window " + std::to_string(window); }
};

AxiomReport verify_axioms(const EarsDescriptor& r, std::int64_t bound);

// ((R - R) cap V0) cup R for an explicit finite set of vectors.
std::vector<RationalVector> irc(const std::vector<RationalVector>& r_cross, const AmbientSpace& space);
// Isotropic part of IRC(R^x) for the whole descriptor: the union of X_c - X_c.
CosetSet irc_isotropic(const EarsDescriptor& r);

struct TrimResult {
    EarsDescriptor trimmed;
    CosetSet s_prime;
    SemilatticeReport s_prime_report;
    bool s_prime_closed = false;   // S' + 2S' in S'
    bool l_plus_2s_prime = true;   // L + 2S' in L
    bool s_prime_plus_l = true;    // S' + L in S'
};

TrimResult trim_report(const EarsDescriptor& r);
EarsDescriptor trim(const EarsDescriptor& r);
// Reflection matrices of R^x in window b against those of trim(R)^x, both ways.
bool trim_same_reflections(const EarsDescriptor& r, const EarsDescriptor& t, std::int64_t b);

struct CharacterizeReport {
    bool invariant = false;  // reflections of the set preserve it (within the window)
    bool finite_root_system = false;
    bool lattice = false;
    bool no_doubles = false;
    bool anisotropic = false;
    std::optional<TypeSymbol> type;
    std::vector<std::string> failures;
    std::vector<RationalVector> witness;
    bool pass() const { return invariant && finite_root_system && lattice && no_doubles && anisotropic; }
};

CharacterizeReport characterize(const std::vector<RationalVector>& r_cross, const AmbientSpace& space);

} // namespace ears
