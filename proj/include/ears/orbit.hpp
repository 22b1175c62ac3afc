#pragma once

#include "ears/ears.hpp"

#include <map>
#include <string>
#include <vector>

namespace ears {

// W.alpha = alpha - alpdot + Wdot.alpdot + T
struct OrbitDescriptor {
    RationalVector base;
    int fin = -1; // -1 when alpha lies in V0
    int cls = -1;
    std::vector<std::size_t> finite_orbit;
    Lattice translation;
    RationalVector offset; // V0 part of alpha

    bool contains(const EarsDescriptor& r, const RationalVector& v) const;
    std::string str() const;
};

// gcd of (alpdot, betadot^vee) over betadot of class c2, alpdot any root of class c1
std::int64_t class_gcd(const FiniteRootSystem& f, int c1, int c2);
// T for roots of class c, given the class sets x[c] (missing classes skipped)
Lattice translation_lattice(const FiniteRootSystem& f, int c, const std::array<const CosetSet*, 3>& x, std::size_t nu);
Lattice translation_lattice(const EarsDescriptor& r, int c);

OrbitDescriptor orbit_closed_form(const EarsDescriptor& r, const RationalVector& alpha);

// Orbits of reflections by roots with |sigma| <= 2 acting on roots inside
// window bound + pad. Components are computed once and reused.
class OrbitBfs {
public:
    OrbitBfs(const EarsDescriptor& r, std::int64_t bound, std::int64_t pad = 2);
    std::vector<RationalVector> orbit(const RationalVector& alpha) const;

private:
    const EarsDescriptor* r_;
    std::int64_t bound_;
    std::vector<WindowRoot> states_;
    std::map<WindowRoot, std::size_t> index_;
    std::vector<std::size_t> comp_;
};

std::vector<RationalVector> orbit_bfs(const EarsDescriptor& r, const RationalVector& alpha, std::int64_t bound);

// One W-orbit in R^x: a length class and a coset of T in its class set.
struct RootOrbit {
    int id = 0;
    int cls = 0;
    CosetSet coset;
    RationalVector rep;
    Q min_norm2;
    int group = 0; // index of its ~-saturated group
};

struct OrbitTable {
    std::vector<RootOrbit> orbits;
    std::vector<std::vector<int>> groups;
    // orbit id of an anisotropic root, -1 otherwise
    int orbit_of(const EarsDescriptor& r, const RationalVector& v) const;
};

// Sorted by descending minimal |sigma|^2, then class, then representative.
// The representative is the lexicographically least (sigma, alpdot) with
// |sigma| minimal in the coset.
OrbitTable root_orbits(const EarsDescriptor& r);

} // namespace ears
