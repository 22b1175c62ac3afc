#include "ears/finite_root.hpp"

#include "ears/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ears {

namespace {

const char* family_name(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
    }
    return "?";
}

void check_rank(Family f, int l) {
    bool ok = false;
    switch (f) {
    case Family::A: ok = l >= 1; break;
    case Family::B: ok = l >= 2; break;
    case Family::C: ok = l >= 3; break;
    case Family::D: ok = l >= 4; break;
    case Family::E: ok = l >= 6 && l <= 8; break;
    case Family::F: ok = l == 4; break;
    case Family::G: ok = l == 2; break;
    case Family::BC: ok = l >= 1; break;
    }
    if (!ok) throw InvalidRank(std::string(family_name(f)) + std::to_string(l));
}

bool parallel(const IntVec& u, const IntVec& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

} // namespace

std::string TypeSymbol::str() const { return std::string(family_name(family)) + std::to_string(rank); }

TypeSymbol TypeSymbol::parse(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    std::string f = s.substr(0, i), r = s.substr(i);
    if (r.empty() || !std::all_of(r.begin(), r.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad type symbol '" + s + "'");
    TypeSymbol t;
    if (f == "A") t.family = Family::A;
    else if (f == "B") t.family = Family::B;
    else if (f == "C") t.family = Family::C;
    else if (f == "D") t.family = Family::D;
    else if (f == "E") t.family = Family::E;
    else if (f == "F") t.family = Family::F;
    else if (f == "G") t.family = Family::G;
    else if (f == "BC") t.family = Family::BC;
    else throw ParseError("bad type symbol '" + s + "'");
    if (r.size() > 2) throw ParseError("bad type symbol '" + s + "'");
    t.rank = std::stoi(r);
    int lo = 1, hi = 8;
    switch (t.family) {
    case Family::B: lo = 2; break;
    case Family::C: lo = 3; break;
    case Family::D: lo = 4; break;
    case Family::E: lo = 6; break;
    case Family::F: lo = hi = 4; break;
    case Family::G: lo = hi = 2; break;
    default: break;
    }
    if (t.rank < lo || t.rank > hi) throw InvalidRank("no irreducible root system of type " + s + " (rank <= 8)");
    return t;
}

bool TypeSymbol::operator<(const TypeSymbol& o) const {
    if (family != o.family) return static_cast<int>(family) < static_cast<int>(o.family);
    return rank < o.rank;
}

bool TypeSymbol::simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
}

const char* class_name(int c) {
    switch (c) {
    case Sh: return "sh";
    case Lg: return "lg";
    case Ex: return "ex";
    }
    return "?";
}

int FiniteRootSystem::class_of_norm2(std::int64_t n2) const {
    for (int c = 0; c < 3; ++c)
        if (!members_[c].empty() && class_norm2_[c] == n2) return c;
    return -1;
}

int FiniteRootSystem::index_of(const IntVec& u) const {
    auto it = index_.find(u);
    return it == index_.end() ? -1 : it->second;
}

std::int64_t FiniteRootSystem::pair2(const IntVec& u, const IntVec& v) const {
    std::int64_t s = 0;
    std::size_t l = g2_.size();
    for (std::size_t i = 0; i < l; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < l; ++j) s += u[i] * g2_[i][j] * v[j];
    }
    return s;
}

Q FiniteRootSystem::pair(const IntVec& u, const IntVec& v) const {
    Q r(pair2(u, v), 2);
    r.canonicalize();
    return r;
}

Q FiniteRootSystem::coroot_pairing(const IntVec& u, std::size_t b) const {
    Q r(2 * pair2(u, roots_[b]), norm2(roots_[b]));
    r.canonicalize();
    return r;
}

RationalMatrix FiniteRootSystem::gram() const {
    std::size_t l = g2_.size();
    RationalMatrix g(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            g(i, j) = Q(g2_[i][j]) / Q(2);
            g(i, j).canonicalize();
        }
    return g;
}

IntVec FiniteRootSystem::reflect(std::size_t b, const IntVec& u) const {
    const IntVec& a = roots_[b];
    std::int64_t c = 2 * pair2(u, a) / norm2(a);
    IntVec r(u);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * a[i];
    return r;
}

bool FiniteRootSystem::is_positive(std::size_t i) const {
    for (auto x : roots_[i])
        if (x < 0) return false;
    return true;
}

FiniteRootSystem build_finite_from(const TypeSymbol& t, std::vector<std::int64_t> sq2,
                                   const std::vector<std::pair<int, int>>& edges, bool add_doubles) {
    FiniteRootSystem r;
    r.type_ = t;
    std::size_t l = sq2.size();
    r.g2_.assign(l, std::vector<std::int64_t>(l, 0));
    for (std::size_t i = 0; i < l; ++i) r.g2_[i][i] = sq2[i];
    for (auto [i, j] : edges) {
        std::int64_t v = -std::max(sq2[i], sq2[j]) / 2;
        r.g2_[i][j] = r.g2_[j][i] = v;
    }
    std::set<IntVec> seen;
    std::deque<IntVec> queue;
    for (std::size_t i = 0; i < l; ++i) {
        IntVec e(l, 0);
        e[i] = 1;
        if (seen.insert(e).second) queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVec u = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < l; ++i) {
            std::int64_t p = 0;
            for (std::size_t j = 0; j < l; ++j) p += u[j] * r.g2_[j][i];
            std::int64_t c = 2 * p / r.g2_[i][i];
            IntVec v(u);
            v[i] -= c;
            if (seen.insert(v).second) queue.push_back(v);
        }
    }
    std::vector<IntVec> roots(seen.begin(), seen.end());
    if (add_doubles) {
        std::int64_t shortest = *std::min_element(sq2.begin(), sq2.end());
        std::vector<IntVec> extra;
        for (const auto& u : roots) {
            std::int64_t n = 0;
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = 0; j < l; ++j) n += u[i] * r.g2_[i][j] * u[j];
            if (n == shortest) {
                IntVec v(u);
                for (auto& x : v) x *= 2;
                extra.push_back(v);
            }
        }
        roots.insert(roots.end(), extra.begin(), extra.end());
    }
    std::sort(roots.begin(), roots.end());
    r.roots_ = roots;
    for (std::size_t i = 0; i < roots.size(); ++i) r.index_[roots[i]] = static_cast<int>(i);

    std::set<std::int64_t> norms;
    for (const auto& u : roots) norms.insert(r.norm2(u));
    std::vector<std::int64_t> ns(norms.begin(), norms.end());
    if (ns.size() == 1) {
        r.class_norm2_[Sh] = ns[0];
    } else if (ns.size() == 2 && t.family == Family::BC) {
        r.class_norm2_[Sh] = ns[0];
        r.class_norm2_[Ex] = ns[1];
    } else if (ns.size() == 2) {
        r.class_norm2_[Sh] = ns[0];
        r.class_norm2_[Lg] = ns[1];
    } else {
        r.class_norm2_[Sh] = ns[0];
        r.class_norm2_[Lg] = ns[1];
        r.class_norm2_[Ex] = ns[2];
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        std::int64_t n = r.norm2(roots[i]);
        int c = 0;
        for (int k = 0; k < 3; ++k)
            if (r.class_norm2_[k] == n) c = k;
        r.cls_.push_back(c);
        r.members_[c].push_back(i);
    }
    for (std::size_t i = 0; i < l; ++i) {
        IntVec e(l, 0);
        e[i] = 1;
        r.simple_.push_back(static_cast<std::size_t>(r.index_.at(e)));
    }
    return r;
}

FiniteRootSystem build_finite(const TypeSymbol& t) {
    check_rank(t.family, t.rank);
    int l = t.rank;
    std::vector<std::pair<int, int>> chain;
    for (int i = 0; i + 1 < l; ++i) chain.emplace_back(i, i + 1);
    std::vector<std::int64_t> sq2(static_cast<std::size_t>(l), 2);
    switch (t.family) {
    case Family::A: return build_finite_from(t, sq2, chain, false);
    case Family::B:
    case Family::BC:
        for (int i = 0; i + 1 < l; ++i) sq2[i] = 4;
        return build_finite_from(t, sq2, chain, t.family == Family::BC);
    case Family::C:
        sq2[l - 1] = 4;
        return build_finite_from(t, sq2, chain, false);
    case Family::D: {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 2 < l; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(l - 3, l - 1);
        return build_finite_from(t, sq2, e, false);
    }
    case Family::E: {
        std::vector<std::pair<int, int>> e{{0, 2}, {2, 3}, {3, 4}, {1, 3}};
        for (int i = 4; i + 1 < l; ++i) e.emplace_back(i, i + 1);
        return build_finite_from(t, sq2, e, false);
    }
    case Family::F: return build_finite_from(t, {4, 4, 2, 2}, chain, false);
    case Family::G: return build_finite_from(t, {2, 6}, chain, false);
    }
    throw InvalidRank(t.str());
}

FiniteRootSystem build_finite(Family f, int rank) { return build_finite(TypeSymbol{f, rank}); }

LengthClasses length_classes(const FiniteRootSystem& r) {
    if (!detect_type(r, r.roots())) throw NotIrreducible(r.type().str());
    LengthClasses lc;
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto& dst = r.root_class(i) == Sh ? lc.sh : r.root_class(i) == Lg ? lc.lg : lc.ex;
        dst.push_back(r.roots()[i]);
    }
    return lc;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m;
    m.n = n;
    m.a.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m.a[i * n + i] = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix m;
    m.n = n;
    m.a.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::int64_t x = a[i * n + k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) m.a[i * n + j] += x * o.a[k * n + j];
        }
    return m;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    IntVec r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i] += a[i * n + j] * v[j];
    return r;
}

namespace {

IntMatrix reflection_int(const FiniteRootSystem& r, const IntVec& root) {
    std::size_t l = static_cast<std::size_t>(r.rank());
    IntMatrix m;
    m.n = l;
    m.a.assign(l * l, 0);
    std::int64_t n2 = r.norm2(root);
    for (std::size_t j = 0; j < l; ++j) {
        IntVec e(l, 0);
        e[j] = 1;
        std::int64_t c = 2 * r.pair2(e, root);
        if (c % n2 != 0) throw Error("reflection_int: non-crystallographic pairing");
        c /= n2;
        for (std::size_t i = 0; i < l; ++i) m.a[i * l + j] = e[i] - c * root[i];
    }
    return m;
}

FiniteWeylGroup closure(std::vector<IntMatrix> gens, std::size_t n, std::size_t cap) {
    FiniteWeylGroup g;
    g.generators = gens;
    std::set<IntMatrix> seen;
    std::deque<IntMatrix> queue;
    IntMatrix id = IntMatrix::identity(n);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        IntMatrix m = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            IntMatrix p = m * s;
            if (seen.insert(p).second) {
                if (seen.size() > cap) throw Error("finite_weyl: group order exceeds cap");
                queue.push_back(p);
            }
        }
    }
    g.elements.assign(seen.begin(), seen.end());
    return g;
}

} // namespace

FiniteWeylGroup finite_weyl(const FiniteRootSystem& r, std::size_t cap) {
    std::vector<IntMatrix> gens;
    for (auto i : r.simple()) gens.push_back(reflection_int(r, r.roots()[i]));
    return closure(gens, static_cast<std::size_t>(r.rank()), cap);
}

FiniteWeylGroup reflection_subgroup(const FiniteRootSystem& r, const std::vector<IntVec>& roots, std::size_t cap) {
    std::set<IntMatrix> gens;
    for (const auto& u : roots) gens.insert(reflection_int(r, u));
    return closure(std::vector<IntMatrix>(gens.begin(), gens.end()), static_cast<std::size_t>(r.rank()), cap);
}

bool reflections_generate(const FiniteRootSystem& r, const std::vector<IntVec>& p) {
    std::set<IntVec> phi;
    std::deque<IntVec> queue;
    for (const auto& u : p) {
        IntVec m(u);
        for (auto& x : m) x = -x;
        for (const auto& v : {u, m})
            if (phi.insert(v).second) queue.push_back(v);
    }
    std::vector<IntVec> gens(phi.begin(), phi.end());
    while (!queue.empty()) {
        IntVec u = queue.front();
        queue.pop_front();
        for (const auto& a : gens) {
            std::int64_t c = 2 * r.pair2(u, a) / r.norm2(a);
            IntVec v(u);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * a[i];
            if (phi.insert(v).second) {
                queue.push_back(v);
                gens.push_back(v);
            }
        }
    }
    for (const auto& b : r.roots()) {
        bool hit = false;
        for (const auto& u : phi)
            if (parallel(u, b)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

std::vector<LabeledSubset> invariant_generating_subsets(const FiniteRootSystem& r) {
    if (!detect_type(r, r.roots())) throw NotIrreducible(r.type().str());
    std::vector<int> present;
    for (int c = 0; c < 3; ++c)
        if (r.has_class(c)) present.push_back(c);
    std::vector<LabeledSubset> out;
    int full = 0;
    for (int c : present) full |= 1 << c;
    for (int mask = 1; mask <= full; ++mask) {
        if ((mask & ~full) != 0) continue;
        std::vector<IntVec> p;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (mask & (1 << r.root_class(i))) p.push_back(r.roots()[i]);
        if (!reflections_generate(r, p)) continue;
        auto t = detect_type(r, p);
        if (!t) throw Error("invariant_generating_subsets: generating subset is not a root system");
        out.push_back(LabeledSubset{mask, p, *t});
    }
    std::stable_sort(out.begin(), out.end(), [full](const LabeledSubset& a, const LabeledSubset& b) {
        if ((a.class_mask == full) != (b.class_mask == full)) return a.class_mask == full;
        if (a.roots.size() != b.roots.size()) return a.roots.size() > b.roots.size();
        return a.class_mask < b.class_mask;
    });
    return out;
}

namespace {

std::optional<TypeSymbol> classify(std::size_t n, std::size_t rk, const std::vector<Q>& norms,
                                   const std::vector<Q>& distinct, bool nonreduced) {
    std::size_t k = distinct.size();
    std::size_t r = rk;
    if (r == 0) return std::nullopt;
    auto count_norm = [&](const Q& v) {
        return static_cast<std::size_t>(std::count(norms.begin(), norms.end(), v));
    };
    if (k == 1 && !nonreduced) {
        if (n == r * (r + 1)) return TypeSymbol{Family::A, static_cast<int>(r)};
        if (r >= 4 && n == 2 * r * (r - 1)) return TypeSymbol{Family::D, static_cast<int>(r)};
        if ((r == 6 && n == 72) || (r == 7 && n == 126) || (r == 8 && n == 240))
            return TypeSymbol{Family::E, static_cast<int>(r)};
        return std::nullopt;
    }
    if (k == 2) {
        Q ratio = distinct[1] / distinct[0];
        if (nonreduced) {
            if (r == 1 && ratio == 4 && n == 4) return TypeSymbol{Family::BC, 1};
            return std::nullopt;
        }
        std::size_t s = count_norm(distinct[0]);
        if (ratio == 2) {
            if (r == 4 && n == 48 && s == 24) return TypeSymbol{Family::F, 4};
            if (n == 2 * r * r) {
                if (r == 2) return TypeSymbol{Family::B, 2};
                if (s == 2 * r) return TypeSymbol{Family::B, static_cast<int>(r)};
                if (s == 2 * r * (r - 1)) return TypeSymbol{Family::C, static_cast<int>(r)};
            }
            return std::nullopt;
        }
        if (ratio == 3 && r == 2 && n == 12) return TypeSymbol{Family::G, 2};
        return std::nullopt;
    }
    if (k == 3 && nonreduced) {
        if (distinct[1] / distinct[0] == 2 && distinct[2] / distinct[0] == 4 && n == 2 * r * r + 2 * r)
            return TypeSymbol{Family::BC, static_cast<int>(r)};
    }
    return std::nullopt;
}

std::size_t vsize(const IntVec& v) { return v.size(); }
std::size_t vsize(const RationalVector& v) { return v.dim(); }

template <class Vec, class PairFn>
std::optional<TypeSymbol> detect_generic(const std::vector<Vec>& roots, PairFn pair, std::size_t rk) {
    std::size_t n = roots.size();
    if (n == 0) return std::nullopt;
    std::map<Vec, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx[roots[i]] = i;
    if (idx.size() != n) return std::nullopt;
    std::vector<std::vector<Q>> p(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) p[i][j] = p[j][i] = pair(roots[i], roots[j]);
    std::vector<Q> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        norms[i] = p[i][i];
        if (norms[i] <= 0) return std::nullopt;
    }
    bool nonreduced = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Q c = 2 * p[i][j] / p[j][j];
            if (c.get_den() != 1) return std::nullopt;
            Vec v = roots[i];
            for (std::size_t t = 0; t < vsize(v); ++t) v[t] = v[t] - roots[j][t] * c.get_num().get_si();
            if (!idx.count(v)) return std::nullopt;
            if (i != j && c == 4) nonreduced = true;
        }
    std::vector<int> comp(n, -1);
    std::deque<std::size_t> q{0};
    comp[0] = 0;
    while (!q.empty()) {
        std::size_t i = q.front();
        q.pop_front();
        for (std::size_t j = 0; j < n; ++j)
            if (comp[j] < 0 && p[i][j] != 0) {
                comp[j] = 0;
                q.push_back(j);
            }
    }
    if (std::count(comp.begin(), comp.end(), -1) != 0) return std::nullopt;
    std::set<Q> ds(norms.begin(), norms.end());
    return classify(n, rk, norms, std::vector<Q>(ds.begin(), ds.end()), nonreduced);
}

} // namespace

std::optional<TypeSymbol> detect_type(const std::vector<RationalVector>& roots, const RationalMatrix& gram) {
    BilinearForm f(gram);
    return detect_generic(roots, [&](const RationalVector& a, const RationalVector& b) { return f(a, b); },
                          rank(roots));
}

std::optional<TypeSymbol> detect_type(const FiniteRootSystem& r, const std::vector<IntVec>& roots) {
    std::vector<RationalVector> rv;
    for (const auto& u : roots) rv.push_back(RationalVector::from_ints(u));
    return detect_generic(roots, [&](const IntVec& a, const IntVec& b) { return r.pair(a, b); }, rank(rv));
}

} // namespace ears
