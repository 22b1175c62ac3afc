#include "ears/lattice.hpp"

#include "ears/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace ears {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("int64 addition");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow("int64 subtraction");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("int64 multiplication");
    return r;
}

std::int64_t floordiv(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return mul(a / gcd(a, b), b < 0 ? -b : b);
}

std::int64_t from_mpz(const Z& z) {
    if (!z.fits_slong_p()) throw Overflow("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

} // namespace checked

std::vector<IntVec> hermite_normal_form(const std::vector<IntVec>& rows, std::size_t ncols) {
    std::vector<std::vector<Z>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != ncols) throw DimensionMismatch("hnf row length");
        std::vector<Z> zr(ncols);
        bool nz = false;
        for (std::size_t j = 0; j < ncols; ++j) {
            zr[j] = Z(static_cast<long>(r[j]));
            nz = nz || r[j] != 0;
        }
        if (nz) a.push_back(std::move(zr));
    }
    std::size_t m = a.size(), r = 0;
    for (std::size_t c = 0; c < ncols && r < m; ++c) {
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (a[i][c] != 0 && (best == m || abs(a[i][c]) < abs(a[best][c]))) best = i;
            if (best == m) break;
            std::swap(a[r], a[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a[i][c] == 0) continue;
                Z q;
                mpz_tdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                for (std::size_t j = c; j < ncols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r >= m || a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (std::size_t j = c; j < ncols; ++j) a[r][j] = -a[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            if (a[i][c] == 0) continue;
            Z q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            for (std::size_t j = c; j < ncols; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < r; ++i) {
        IntVec v(ncols);
        for (std::size_t j = 0; j < ncols; ++j) v[j] = checked::from_mpz(a[i][j]);
        out.push_back(std::move(v));
    }
    return out;
}

std::int64_t denominator_of(const RationalVector& v) {
    std::int64_t d = 1;
    for (std::size_t i = 0; i < v.dim(); ++i) d = checked::lcm(d, checked::from_mpz(v[i].get_den()));
    return d;
}

IntVec scale_to_int(const RationalVector& v, std::int64_t den) {
    IntVec r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        Q x = v[i] * Q(static_cast<long>(den));
        if (x.get_den() != 1) throw Error("scale_to_int: non-integral result for " + v.str());
        r[i] = checked::from_mpz(x.get_num());
    }
    return r;
}

RationalVector from_scaled(const IntVec& v, std::int64_t den) {
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        r[i] = Q(Z(static_cast<long>(v[i])), Z(static_cast<long>(den)));
        r[i].canonicalize();
    }
    return r;
}

namespace {

IntVec scaled_vec(const IntVec& v, std::int64_t f) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = checked::mul(v[i], f);
    return r;
}

bool echelon_member(const std::vector<IntVec>& rows, IntVec v) {
    for (const auto& row : rows) {
        std::size_t p = 0;
        while (row[p] == 0) ++p;
        if (v[p] % row[p] != 0) return false;
        std::int64_t q = v[p] / row[p];
        if (q != 0)
            for (std::size_t j = p; j < v.size(); ++j) v[j] = checked::sub(v[j], checked::mul(q, row[j]));
    }
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

IntVec reduce_mod(const std::vector<IntVec>& m, IntVec v) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::int64_t q = checked::floordiv(v[i], m[i][i]);
        if (q != 0)
            for (std::size_t j = i; j < v.size(); ++j) v[j] = checked::sub(v[j], checked::mul(q, m[i][j]));
    }
    return v;
}

std::vector<IntVec> coset_representatives(const std::vector<IntVec>& k, const std::vector<IntVec>& m) {
    std::size_t n = m.size();
    // coordinates of K's rows in the basis M (M upper triangular)
    std::vector<IntVec> a;
    for (const auto& row : k) {
        IntVec x(n);
        std::vector<Z> rest(n);
        for (std::size_t j = 0; j < n; ++j) rest[j] = Z(static_cast<long>(row[j]));
        for (std::size_t j = 0; j < n; ++j) {
            Z mj(static_cast<long>(m[j][j]));
            if (rest[j] % mj != 0) throw Error("coset_representatives: K is not contained in M");
            Z q = rest[j] / mj;
            x[j] = checked::from_mpz(q);
            for (std::size_t l = j; l < n; ++l) rest[l] -= q * Z(static_cast<long>(m[j][l]));
        }
        a.push_back(x);
    }
    auto h = hermite_normal_form(a, n);
    if (h.size() != n) throw Error("coset_representatives: K is not of full rank");
    std::vector<IntVec> out;
    IntVec x(n, 0);
    while (true) {
        IntVec v(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] != 0)
                for (std::size_t j = i; j < n; ++j) v[j] = checked::add(v[j], checked::mul(x[i], m[i][j]));
        out.push_back(v);
        std::size_t i = 0;
        while (i < n) {
            if (++x[i] < h[i][i]) break;
            x[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

std::vector<IntVec> enumerate_box(const std::vector<IntVec>& m, const IntVec& r, std::int64_t b) {
    std::size_t n = r.size();
    std::vector<IntVec> out;
    IntVec cur = r;
    // cur holds r + sum_{i<j} x_i m_i while choosing x_j
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            out.push_back(cur);
            return;
        }
        std::int64_t c = cur[j], p = m[j][j];
        std::int64_t lo = -checked::floordiv(checked::add(b, c), p);
        std::int64_t hi = checked::floordiv(checked::sub(b, c), p);
        for (std::int64_t x = lo; x <= hi; ++x) {
            IntVec saved = cur;
            if (x != 0)
                for (std::size_t l = j; l < n; ++l) cur[l] = checked::add(cur[l], checked::mul(x, m[j][l]));
            self(self, j + 1);
            cur = std::move(saved);
        }
    };
    rec(rec, 0);
    return out;
}

// Lattice

Lattice Lattice::zero(std::size_t n) {
    Lattice l;
    l.n_ = n;
    return l;
}

Lattice Lattice::standard(std::size_t n, const Q& scale) {
    std::vector<RationalVector> g;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector e(n);
        e[i] = scale;
        g.push_back(e);
    }
    return generated(n, g);
}

Lattice Lattice::generated(std::size_t n, const std::vector<RationalVector>& gens) {
    std::int64_t d = 1;
    for (const auto& g : gens) {
        if (g.dim() != n) throw DimensionMismatch("lattice generator");
        d = checked::lcm(d, denominator_of(g));
    }
    std::vector<IntVec> rows;
    for (const auto& g : gens) rows.push_back(scale_to_int(g, d));
    return from_int(n, d, rows);
}

Lattice Lattice::from_int(std::size_t n, std::int64_t den, const std::vector<IntVec>& gens) {
    Lattice l;
    l.n_ = n;
    l.den_ = den;
    l.rows_ = hermite_normal_form(gens, n);
    l.normalize();
    return l;
}

void Lattice::normalize() {
    std::int64_t g = den_;
    for (const auto& r : rows_)
        for (auto x : r) g = checked::gcd(g, x);
    if (g > 1) {
        den_ /= g;
        for (auto& r : rows_)
            for (auto& x : r) x /= g;
    }
    if (rows_.empty()) den_ = 1;
}

std::vector<RationalVector> Lattice::basis() const {
    std::vector<RationalVector> b;
    for (const auto& r : rows_) b.push_back(from_scaled(r, den_));
    return b;
}

std::vector<IntVec> Lattice::rows_at(std::int64_t den) const {
    if (den % den_ != 0) throw Error("Lattice::rows_at: incompatible denominator");
    std::int64_t f = den / den_;
    std::vector<IntVec> out;
    for (const auto& r : rows_) out.push_back(scaled_vec(r, f));
    return out;
}

bool Lattice::contains_int(const IntVec& v, std::int64_t vden) const {
    if (v.size() != n_) throw DimensionMismatch("lattice membership");
    std::int64_t d = checked::lcm(den_, vden);
    return echelon_member(rows_at(d), scaled_vec(v, d / vden));
}

bool Lattice::contains(const RationalVector& v) const {
    std::int64_t d = denominator_of(v);
    return contains_int(scale_to_int(v, d), d);
}

bool Lattice::subset_of(const Lattice& o) const {
    for (const auto& r : rows_)
        if (!o.contains_int(r, den_)) return false;
    return true;
}

Lattice Lattice::operator+(const Lattice& o) const {
    if (o.n_ != n_) throw DimensionMismatch("lattice sum");
    std::int64_t d = checked::lcm(den_, o.den_);
    auto rows = rows_at(d);
    for (auto& r : o.rows_at(d)) rows.push_back(r);
    return from_int(n_, d, rows);
}

Lattice Lattice::intersect(const Lattice& o) const {
    if (o.n_ != n_) throw DimensionMismatch("lattice intersection");
    std::int64_t d = checked::lcm(den_, o.den_);
    std::vector<IntVec> big;
    for (const auto& r : rows_at(d)) {
        IntVec v(2 * n_, 0);
        for (std::size_t j = 0; j < n_; ++j) v[j] = v[n_ + j] = r[j];
        big.push_back(v);
    }
    for (const auto& r : o.rows_at(d)) {
        IntVec v(2 * n_, 0);
        for (std::size_t j = 0; j < n_; ++j) v[j] = r[j];
        big.push_back(v);
    }
    auto h = hermite_normal_form(big, 2 * n_);
    std::vector<IntVec> rows;
    for (const auto& r : h) {
        bool top_zero = std::all_of(r.begin(), r.begin() + static_cast<long>(n_), [](auto x) { return x == 0; });
        if (top_zero) rows.emplace_back(r.begin() + static_cast<long>(n_), r.end());
    }
    return from_int(n_, d, rows);
}

Lattice Lattice::scaled(const Q& s) const {
    if (s == 0) return zero(n_);
    std::int64_t p = checked::from_mpz(s.get_num());
    std::int64_t q = checked::from_mpz(s.get_den());
    std::vector<IntVec> rows;
    for (const auto& r : rows_) rows.push_back(scaled_vec(r, p));
    return from_int(n_, checked::mul(den_, q), rows);
}

std::int64_t Lattice::index_in(const Lattice& o) const {
    if (!full_rank() || !o.full_rank()) throw Error("index_in: lattices must have full rank");
    if (!subset_of(o)) throw Error("index_in: not a sublattice");
    std::int64_t d = checked::lcm(den_, o.den_);
    auto a = rows_at(d), b = o.rows_at(d);
    Z num = 1, den = 1;
    for (std::size_t i = 0; i < n_; ++i) {
        num *= Z(static_cast<long>(a[i][i]));
        den *= Z(static_cast<long>(b[i][i]));
    }
    return checked::from_mpz(num / den);
}

std::string Lattice::str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? ", " : "") << from_scaled(rows_[i], den_).str();
    os << ">";
    return os.str();
}

// CosetSet

CosetSet CosetSet::empty(std::size_t n) {
    CosetSet c;
    c.n_ = n;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        c.mod_.push_back(e);
    }
    return c;
}

CosetSet CosetSet::of_lattice(const Lattice& l) { return from(l, {RationalVector(l.dim())}); }

CosetSet CosetSet::from(const Lattice& modulus, const std::vector<RationalVector>& reps) {
    if (!modulus.full_rank()) throw Error("CosetSet modulus must have full rank");
    CosetSet c;
    c.n_ = modulus.dim();
    std::int64_t d = modulus.den();
    for (const auto& r : reps) {
        if (r.dim() != c.n_) throw DimensionMismatch("coset representative");
        d = checked::lcm(d, denominator_of(r));
    }
    c.den_ = d;
    c.mod_ = modulus.rows_at(d);
    for (const auto& r : reps) c.reps_.push_back(reduce_mod(c.mod_, scale_to_int(r, d)));
    c.canonicalize();
    return c;
}

void CosetSet::canonicalize() {
    for (auto& r : reps_) r = reduce_mod(mod_, r);
    std::sort(reps_.begin(), reps_.end());
    reps_.erase(std::unique(reps_.begin(), reps_.end()), reps_.end());
    std::int64_t g = den_;
    for (const auto& r : mod_)
        for (auto x : r) g = checked::gcd(g, x);
    for (const auto& r : reps_)
        for (auto x : r) g = checked::gcd(g, x);
    if (g > 1) {
        den_ /= g;
        for (auto& r : mod_)
            for (auto& x : r) x /= g;
        for (auto& r : reps_)
            for (auto& x : r) x /= g;
    }
}

Lattice CosetSet::modulus() const { return Lattice::from_int(n_, den_, mod_); }

std::vector<RationalVector> CosetSet::reps() const {
    std::vector<RationalVector> out;
    for (const auto& r : reps_) out.push_back(from_scaled(r, den_));
    return out;
}

IntVec CosetSet::reduce_native(IntVec v) const { return reduce_mod(mod_, std::move(v)); }

bool CosetSet::contains_native(const IntVec& v) const {
    return std::binary_search(reps_.begin(), reps_.end(), reduce_mod(mod_, v));
}

bool CosetSet::contains_int(const IntVec& v, std::int64_t vden) const {
    if (v.size() != n_) throw DimensionMismatch("coset membership");
    if (vden == den_) return contains_native(v);
    IntVec w(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Z x = Z(static_cast<long>(v[i])) * Z(static_cast<long>(den_));
        if (x % Z(static_cast<long>(vden)) != 0) return false;
        w[i] = checked::from_mpz(x / Z(static_cast<long>(vden)));
    }
    return contains_native(w);
}

bool CosetSet::contains(const RationalVector& v) const {
    std::int64_t d = denominator_of(v);
    return contains_int(scale_to_int(v, d), d);
}

CosetSet CosetSet::at_den(std::int64_t d) const {
    if (d % den_ != 0) throw Error("CosetSet::at_den: incompatible denominator");
    CosetSet c = *this;
    std::int64_t f = d / den_;
    c.den_ = d;
    for (auto& r : c.mod_) r = scaled_vec(r, f);
    for (auto& r : c.reps_) r = scaled_vec(r, f);
    return c;
}

CosetSet CosetSet::refined(const Lattice& k) const {
    if (k.dim() != n_) throw DimensionMismatch("refine");
    std::int64_t d = checked::lcm(den_, k.den());
    CosetSet c = at_den(d);
    auto krows = k.rows_at(d);
    auto t = coset_representatives(krows, c.mod_);
    std::vector<IntVec> reps;
    for (const auto& r : c.reps_)
        for (const auto& s : t) {
            IntVec v(n_);
            for (std::size_t i = 0; i < n_; ++i) v[i] = checked::add(r[i], s[i]);
            reps.push_back(reduce_mod(krows, v));
        }
    c.mod_ = krows;
    c.reps_ = reps;
    std::sort(c.reps_.begin(), c.reps_.end());
    c.reps_.erase(std::unique(c.reps_.begin(), c.reps_.end()), c.reps_.end());
    return c;
}

void CosetSet::align(CosetSet& a, CosetSet& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("coset set dimensions differ");
    std::int64_t d = checked::lcm(a.den_, b.den_);
    a = a.at_den(d);
    b = b.at_den(d);
    if (a.mod_ == b.mod_) return;
    Lattice k = Lattice::from_int(a.n_, d, a.mod_).intersect(Lattice::from_int(a.n_, d, b.mod_));
    a = a.refined(k).at_den(d);
    b = b.refined(k).at_den(d);
}

CosetSet CosetSet::unite(const CosetSet& o) const {
    CosetSet a = *this, b = o;
    align(a, b);
    std::vector<IntVec> r;
    std::set_union(a.reps_.begin(), a.reps_.end(), b.reps_.begin(), b.reps_.end(), std::back_inserter(r));
    a.reps_ = r;
    a.canonicalize();
    return a;
}

CosetSet CosetSet::intersect(const CosetSet& o) const {
    CosetSet a = *this, b = o;
    align(a, b);
    std::vector<IntVec> r;
    std::set_intersection(a.reps_.begin(), a.reps_.end(), b.reps_.begin(), b.reps_.end(),
                          std::back_inserter(r));
    a.reps_ = r;
    a.canonicalize();
    return a;
}

CosetSet CosetSet::minus(const CosetSet& o) const {
    CosetSet a = *this, b = o;
    align(a, b);
    std::vector<IntVec> r;
    std::set_difference(a.reps_.begin(), a.reps_.end(), b.reps_.begin(), b.reps_.end(), std::back_inserter(r));
    a.reps_ = r;
    a.canonicalize();
    return a;
}

bool CosetSet::subset_of(const CosetSet& o) const {
    if (is_empty()) return true;
    CosetSet a = *this, b = o;
    align(a, b);
    return std::includes(b.reps_.begin(), b.reps_.end(), a.reps_.begin(), a.reps_.end());
}

bool CosetSet::operator==(const CosetSet& o) const {
    if (n_ != o.n_) return false;
    if (is_empty() || o.is_empty()) return is_empty() && o.is_empty();
    CosetSet a = *this, b = o;
    align(a, b);
    return a.reps_ == b.reps_;
}

CosetSet CosetSet::plus(const CosetSet& o) const {
    if (is_empty() || o.is_empty()) return empty(n_);
    std::int64_t d = checked::lcm(den_, o.den_);
    CosetSet a = at_den(d), b = o.at_den(d);
    auto rows = a.mod_;
    for (const auto& r : b.mod_) rows.push_back(r);
    a.mod_ = hermite_normal_form(rows, n_);
    std::vector<IntVec> reps;
    for (const auto& r : a.reps_)
        for (const auto& s : b.reps_) {
            IntVec v(n_);
            for (std::size_t i = 0; i < n_; ++i) v[i] = checked::add(r[i], s[i]);
            reps.push_back(v);
        }
    a.reps_ = reps;
    a.canonicalize();
    return a;
}

CosetSet CosetSet::plus(const Lattice& l) const { return plus(CosetSet::from(l.full_rank() ? l : l + modulus(), {RationalVector(n_)})); }

CosetSet CosetSet::negate() const {
    CosetSet c = *this;
    for (auto& r : c.reps_)
        for (auto& x : r) x = -x;
    c.canonicalize();
    return c;
}

CosetSet CosetSet::scaled(const Q& s) const {
    if (s == 0) throw Error("CosetSet::scaled by zero");
    std::int64_t p = checked::from_mpz(s.get_num());
    std::int64_t q = checked::from_mpz(s.get_den());
    CosetSet c;
    c.n_ = n_;
    c.den_ = checked::mul(den_, q);
    std::vector<IntVec> rows;
    for (const auto& r : mod_) rows.push_back(scaled_vec(r, p));
    c.mod_ = hermite_normal_form(rows, n_);
    for (const auto& r : reps_) c.reps_.push_back(scaled_vec(r, p));
    c.canonicalize();
    return c;
}

CosetSet CosetSet::translated(const RationalVector& v) const {
    if (v.dim() != n_) throw DimensionMismatch("translate");
    std::int64_t d = checked::lcm(den_, denominator_of(v));
    CosetSet c = at_den(d);
    IntVec w = scale_to_int(v, d);
    for (auto& r : c.reps_)
        for (std::size_t i = 0; i < n_; ++i) r[i] = checked::add(r[i], w[i]);
    c.canonicalize();
    return c;
}

Lattice CosetSet::generated() const {
    auto rows = mod_;
    for (const auto& r : reps_) rows.push_back(r);
    if (is_empty()) return Lattice::zero(n_);
    return Lattice::from_int(n_, den_, rows);
}

std::vector<IntVec> CosetSet::window_native(const Q& bound) const {
    Q b = bound * Q(static_cast<long>(den_));
    Z fl;
    mpz_fdiv_q(fl.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    std::int64_t bi = checked::from_mpz(fl);
    std::vector<IntVec> out;
    if (bi < 0) return out;
    for (const auto& r : reps_) {
        auto pts = enumerate_box(mod_, r, bi);
        out.insert(out.end(), pts.begin(), pts.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RationalVector> CosetSet::window(const Q& bound) const {
    std::vector<RationalVector> out;
    for (const auto& v : window_native(bound)) out.push_back(from_scaled(v, den_));
    std::sort(out.begin(), out.end());
    return out;
}

std::string CosetSet::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < reps_.size(); ++i) os << (i ? ", " : "") << from_scaled(reps_[i], den_).str();
    os << "} + " << modulus().str();
    return os.str();
}

} // namespace ears
