#include "ears/orbit.hpp"

#include "ears/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace ears {

namespace {

Q norm2(const RationalVector& v) {
    Q s = 0;
    for (const auto& x : v.coords()) s += x * x;
    return s;
}

Q max_norm(const RationalVector& v) {
    Q m = 0;
    for (const auto& x : v.coords()) m = std::max(m, Q(abs(x)));
    return m;
}

std::int64_t max_abs(const IntVec& v) {
    std::int64_t m = 0;
    for (auto x : v) m = std::max(m, std::abs(x));
    return m;
}

struct UnionFind {
    std::vector<std::size_t> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

std::vector<std::size_t> finite_orbit_of(const FiniteRootSystem& f, std::size_t i) {
    std::set<std::size_t> seen{i};
    std::deque<std::size_t> q{i};
    while (!q.empty()) {
        std::size_t a = q.front();
        q.pop_front();
        for (auto s : f.simple()) {
            auto b = static_cast<std::size_t>(f.index_of(f.reflect(s, f.roots()[a])));
            if (seen.insert(b).second) q.push_back(b);
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

std::int64_t class_gcd(const FiniteRootSystem& f, int c1, int c2) {
    if (!f.has_class(c1) || !f.has_class(c2)) return 0;
    const IntVec& a = f.roots()[f.class_members(c1).front()];
    std::int64_t g = 0;
    for (auto b : f.class_members(c2)) g = std::gcd(g, f.coroot_pairing(a, b).get_num().get_si());
    return g;
}

Lattice translation_lattice(const FiniteRootSystem& f, int c, const std::array<const CosetSet*, 3>& x, std::size_t nu) {
    Lattice t = Lattice::zero(nu);
    for (int c2 = 0; c2 < 3; ++c2) {
        if (!x[c2] || x[c2]->is_empty() || !f.has_class(c2)) continue;
        std::int64_t g = class_gcd(f, c, c2);
        if (g == 0) continue;
        t = t + x[c2]->generated().scaled(Q(g));
    }
    return t;
}

Lattice translation_lattice(const EarsDescriptor& r, int c) {
    std::array<const CosetSet*, 3> x{};
    for (int k = 0; k < 3; ++k)
        if (const SemilatticeData* s = r.class_set(k)) x[k] = &s->set();
    return translation_lattice(r.finite(), c, x, static_cast<std::size_t>(r.nullity()));
}

OrbitDescriptor orbit_closed_form(const EarsDescriptor& r, const RationalVector& alpha) {
    const auto& sp = r.space();
    if (alpha.dim() != sp.dim()) throw DimensionMismatch("orbit base");
    if (!sp.dual_part(alpha).is_zero()) throw NotOverFinitePart("nonzero dual component " + alpha.str());
    OrbitDescriptor o;
    o.base = alpha;
    o.offset = sp.v0_part(alpha);
    RationalVector d = sp.dot_part(alpha);
    if (d.is_zero()) {
        o.translation = Lattice::zero(static_cast<std::size_t>(r.nullity()));
        return o;
    }
    int idx = d.is_integral() ? r.finite().index_of(scale_to_int(d, 1)) : -1;
    if (idx < 0) throw NotOverFinitePart(alpha.str() + " does not reduce to a finite root");
    o.fin = idx;
    o.cls = r.finite().root_class(static_cast<std::size_t>(idx));
    o.finite_orbit = finite_orbit_of(r.finite(), static_cast<std::size_t>(idx));
    o.translation = translation_lattice(r, o.cls);
    return o;
}

bool OrbitDescriptor::contains(const EarsDescriptor& r, const RationalVector& v) const {
    const auto& sp = r.space();
    if (v.dim() != sp.dim()) throw DimensionMismatch("orbit membership");
    if (fin < 0) return v == base;
    if (!sp.dual_part(v).is_zero()) return false;
    RationalVector d = sp.dot_part(v);
    if (!d.is_integral()) return false;
    int idx = r.finite().index_of(scale_to_int(d, 1));
    if (idx < 0 || !std::binary_search(finite_orbit.begin(), finite_orbit.end(), static_cast<std::size_t>(idx)))
        return false;
    return translation.contains(sp.v0_part(v) - offset);
}

std::string OrbitDescriptor::str() const {
    std::ostringstream os;
    if (fin < 0) {
        os << "{" << base.str() << "}";
        return os.str();
    }
    os << base.str() << " - alpdot + Wdot.alpdot (" << finite_orbit.size() << " finite roots) + T, T = "
       << translation.str();
    return os.str();
}

OrbitBfs::OrbitBfs(const EarsDescriptor& r, std::int64_t bound, std::int64_t pad) : r_(&r), bound_(bound) {
    const auto& f = r.finite();
    states_ = anisotropic_window_struct(r, Q(bound + pad));
    for (std::size_t i = 0; i < states_.size(); ++i) index_[states_[i]] = i;
    std::vector<WindowRoot> gens;
    for (const auto& g : anisotropic_window_struct(r, Q(2)))
        if (f.is_positive(static_cast<std::size_t>(g.fin))) gens.push_back(g);
    std::size_t nf = f.size();
    std::vector<int> refl(nf * nf);
    std::vector<std::int64_t> cor(nf * nf);
    for (std::size_t g = 0; g < nf; ++g)
        for (std::size_t s = 0; s < nf; ++s) {
            refl[g * nf + s] = f.index_of(f.reflect(g, f.roots()[s]));
            cor[g * nf + s] = f.coroot_pairing(f.roots()[s], g).get_num().get_si();
        }
    UnionFind uf(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) {
        const auto& s = states_[i];
        for (const auto& g : gens) {
            auto gi = static_cast<std::size_t>(g.fin), si = static_cast<std::size_t>(s.fin);
            WindowRoot img{refl[gi * nf + si], s.sig};
            std::int64_t c = cor[gi * nf + si];
            for (std::size_t k = 0; k < img.sig.size(); ++k) img.sig[k] -= c * g.sig[k];
            auto it = index_.find(img);
            if (it != index_.end()) uf.unite(i, it->second);
        }
    }
    comp_.resize(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) comp_[i] = uf.find(i);
}

std::vector<RationalVector> OrbitBfs::orbit(const RationalVector& alpha) const {
    auto w = r_->locate(alpha);
    if (w && w->fin < 0) return {alpha};
    std::map<WindowRoot, std::size_t>::const_iterator it;
    if (!w || (it = index_.find(*w)) == index_.end()) return orbit_bfs(*r_, alpha, bound_);
    std::vector<RationalVector> out;
    std::size_t c = comp_[it->second];
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (comp_[i] == c && max_abs(states_[i].sig) <= bound_ * r_->den()) out.push_back(r_->vec(states_[i]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RationalVector> orbit_bfs(const EarsDescriptor& r, const RationalVector& alpha, std::int64_t bound) {
    const auto& sp = r.space();
    if (alpha.dim() != sp.dim()) throw DimensionMismatch("orbit_bfs");
    auto w = r.locate(alpha);
    if (w && w->fin >= 0 && r.contains_struct(w->fin, w->sig) && max_abs(w->sig) <= (bound + 2) * r.den())
        return OrbitBfs(r, bound).orbit(alpha);
    RationalVector d = sp.dot_part(alpha);
    if (!sp.dual_part(alpha).is_zero() || d.is_zero()) return {alpha};
    // alpha is not a window root: explore vectors directly
    std::vector<RationalVector> gens;
    for (const auto& g : anisotropic_window_struct(r, Q(2)))
        if (r.finite().is_positive(static_cast<std::size_t>(g.fin))) gens.push_back(r.vec(g));
    Q lim(bound + 2);
    std::set<RationalVector> seen{alpha};
    std::deque<RationalVector> q{alpha};
    while (!q.empty()) {
        RationalVector v = q.front();
        q.pop_front();
        for (const auto& g : gens) {
            RationalVector u = reflect(sp, g, v);
            if (max_norm(sp.v0_part(u)) > lim) continue;
            if (seen.insert(u).second) q.push_back(u);
        }
    }
    std::vector<RationalVector> out;
    for (const auto& v : seen)
        if (max_norm(sp.v0_part(v)) <= Q(bound)) out.push_back(v);
    return out;
}

OrbitTable root_orbits(const EarsDescriptor& r) {
    const auto& f = r.finite();
    OrbitTable t;
    for (int c = 0; c < 3; ++c) {
        const SemilatticeData* x = r.class_set(c);
        if (!x) continue;
        Lattice tl = translation_lattice(r, c);
        CosetSet parts = x->set().plus(tl);
        for (const auto& rho : parts.reps()) {
            RootOrbit o;
            o.cls = c;
            o.coset = CosetSet::from(tl, {rho});
            std::int64_t rad = 1;
            std::vector<RationalVector> best;
            for (;;) {
                auto w = o.coset.window(Q(rad));
                if (!w.empty()) {
                    Q m = norm2(w.front());
                    for (const auto& v : w) m = std::min(m, norm2(v));
                    if (m <= Q(rad * rad)) {
                        o.min_norm2 = m;
                        for (const auto& v : w)
                            if (norm2(v) == m) best.push_back(v);
                        break;
                    }
                }
                rad *= 2;
            }
            bool first = true;
            for (auto fi : f.class_members(c))
                for (const auto& s : best) {
                    RationalVector v = r.vec(static_cast<int>(fi), s);
                    if (first || v < o.rep) o.rep = v;
                    first = false;
                }
            t.orbits.push_back(o);
        }
    }
    std::sort(t.orbits.begin(), t.orbits.end(), [](const RootOrbit& a, const RootOrbit& b) {
        if (a.min_norm2 != b.min_norm2) return a.min_norm2 > b.min_norm2;
        if (a.cls != b.cls) return a.cls < b.cls;
        return a.rep < b.rep;
    });
    for (std::size_t i = 0; i < t.orbits.size(); ++i) t.orbits[i].id = static_cast<int>(i);

    UnionFind uf(t.orbits.size());
    for (const auto& a : t.orbits)
        for (const auto& b : t.orbits)
            if (a.cls == Sh && b.cls == Ex && !a.coset.scaled(Q(2)).intersect(b.coset).is_empty())
                uf.unite(static_cast<std::size_t>(a.id), static_cast<std::size_t>(b.id));
    std::map<std::size_t, int> gid;
    for (auto& o : t.orbits) {
        std::size_t root = uf.find(static_cast<std::size_t>(o.id));
        auto it = gid.find(root);
        if (it == gid.end()) {
            it = gid.emplace(root, static_cast<int>(t.groups.size())).first;
            t.groups.emplace_back();
        }
        o.group = it->second;
        t.groups[static_cast<std::size_t>(o.group)].push_back(o.id);
    }
    return t;
}

int OrbitTable::orbit_of(const EarsDescriptor& r, const RationalVector& v) const {
    auto w = r.locate(v);
    if (!w || w->fin < 0 || !r.contains_struct(w->fin, w->sig)) return -1;
    int c = r.finite().root_class(static_cast<std::size_t>(w->fin));
    RationalVector sigma = r.space().v0_part(v);
    for (const auto& o : orbits)
        if (o.cls == c && o.coset.contains(sigma)) return o.id;
    return -1;
}

} // namespace ears
