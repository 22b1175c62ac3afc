#pragma once

#include "ears/lattice.hpp"
#include "ears/linalg.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ears {

enum class Family { A, B, C, D, E, F, G, BC };

struct TypeSymbol {
    Family family = Family::A;
    int rank = 1;

    std::string str() const;
    static TypeSymbol parse(const std::string& s);
    bool operator==(const TypeSymbol& o) const { return family == o.family && rank == o.rank; }
    bool operator!=(const TypeSymbol& o) const { return !(*this == o); }
    bool operator<(const TypeSymbol& o) const;
    bool simply_laced() const;
    bool reduced() const { return family != Family::BC; }
};

enum LengthClass { Sh = 0, Lg = 1, Ex = 2 };
const char* class_name(int c);

// Roots are kept in simple-root coordinates; the form is stored doubled so
// that it is integral for every type.
class FiniteRootSystem {
public:
    FiniteRootSystem() = default;

    const TypeSymbol& type() const { return type_; }
    int rank() const { return type_.rank; }
    const std::vector<IntVec>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    int root_class(std::size_t i) const { return cls_[i]; }
    const std::vector<std::size_t>& simple() const { return simple_; }
    const std::vector<std::size_t>& class_members(int c) const { return members_[c]; }
    bool has_class(int c) const { return !members_[c].empty(); }
    // class of a squared length (doubled), -1 if no root has it
    int class_of_norm2(std::int64_t n2) const;

    int index_of(const IntVec& u) const;
    std::int64_t pair2(const IntVec& u, const IntVec& v) const;
    std::int64_t norm2(const IntVec& u) const { return pair2(u, u); }
    Q pair(const IntVec& u, const IntVec& v) const;
    // (u, beta^vee) for the root with index b
    Q coroot_pairing(const IntVec& u, std::size_t b) const;
    const std::vector<std::vector<std::int64_t>>& gram2() const { return g2_; }
    RationalMatrix gram() const;
    IntVec reflect(std::size_t b, const IntVec& u) const;
    bool is_positive(std::size_t i) const;

    friend FiniteRootSystem build_finite(const TypeSymbol& t);
    friend FiniteRootSystem build_finite_from(const TypeSymbol& t, std::vector<std::int64_t> sq2,
                                              const std::vector<std::pair<int, int>>& edges, bool add_doubles);

private:
    TypeSymbol type_;
    std::vector<std::vector<std::int64_t>> g2_;
    std::vector<IntVec> roots_;
    std::vector<int> cls_;
    std::vector<std::size_t> simple_;
    std::array<std::vector<std::size_t>, 3> members_;
    std::array<std::int64_t, 3> class_norm2_{{0, 0, 0}};
    std::map<IntVec, int> index_;
};

FiniteRootSystem build_finite(const TypeSymbol& t);
FiniteRootSystem build_finite(Family f, int rank);

struct LengthClasses {
    std::vector<IntVec> sh, lg, ex;
};
LengthClasses length_classes(const FiniteRootSystem& r);

struct IntMatrix {
    std::size_t n = 0;
    std::vector<std::int64_t> a;
    IntMatrix operator*(const IntMatrix& o) const;
    IntVec operator*(const IntVec& v) const;
    bool operator<(const IntMatrix& o) const { return a < o.a; }
    bool operator==(const IntMatrix& o) const { return a == o.a; }
    static IntMatrix identity(std::size_t n);
};

struct FiniteWeylGroup {
    std::vector<IntMatrix> elements; // sorted
    std::vector<IntMatrix> generators;
    std::size_t order() const { return elements.size(); }
};

// Closure of the simple reflections (matrices act on simple-root coordinates).
FiniteWeylGroup finite_weyl(const FiniteRootSystem& r, std::size_t cap = 2000000);
// Closure of the reflections of an arbitrary list of roots of r.
FiniteWeylGroup reflection_subgroup(const FiniteRootSystem& r, const std::vector<IntVec>& roots,
                                    std::size_t cap = 2000000);
// W_P = W iff the orbit of P under its own reflections meets every line of R.
bool reflections_generate(const FiniteRootSystem& r, const std::vector<IntVec>& p);

struct LabeledSubset {
    int class_mask = 0;
    std::vector<IntVec> roots;
    TypeSymbol type;
};
std::vector<LabeledSubset> invariant_generating_subsets(const FiniteRootSystem& r);

// Type of a finite set of vectors, if it is an irreducible crystallographic
// root system with respect to the given (rational) Gram matrix.
std::optional<TypeSymbol> detect_type(const std::vector<RationalVector>& roots, const RationalMatrix& gram);
std::optional<TypeSymbol> detect_type(const FiniteRootSystem& r, const std::vector<IntVec>& roots);

} // namespace ears
