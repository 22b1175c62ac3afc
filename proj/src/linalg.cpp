#include "ears/linalg.hpp"

#include "ears/error.hpp"

#include <sstream>

namespace ears {

std::string to_string(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    Q q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

RationalVector::RationalVector(std::initializer_list<long> xs) {
    c_.reserve(xs.size());
    for (long x : xs) c_.emplace_back(x);
}

RationalVector RationalVector::from_ints(const std::vector<std::int64_t>& xs) {
    RationalVector v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v.c_[i] = Q(static_cast<long>(xs[i]));
    return v;
}

RationalVector RationalVector::operator+(const RationalVector& o) const {
    RationalVector r(*this);
    r += o;
    return r;
}

RationalVector RationalVector::operator-(const RationalVector& o) const {
    RationalVector r(*this);
    r -= o;
    return r;
}

RationalVector RationalVector::operator-() const {
    RationalVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.c_[i] = -c_[i];
    return r;
}

RationalVector RationalVector::operator*(const Q& s) const {
    RationalVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
    if (o.dim() != dim()) throw DimensionMismatch("vector add");
    for (std::size_t i = 0; i < dim(); ++i) c_[i] += o.c_[i];
    return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
    if (o.dim() != dim()) throw DimensionMismatch("vector sub");
    for (std::size_t i = 0; i < dim(); ++i) c_[i] -= o.c_[i];
    return *this;
}

bool RationalVector::operator==(const RationalVector& o) const { return c_ == o.c_; }

bool RationalVector::operator<(const RationalVector& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (c_[i] < o.c_[i]) return true;
        if (o.c_[i] < c_[i]) return false;
    }
    return false;
}

bool RationalVector::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool RationalVector::is_integral() const {
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

RationalVector RationalVector::slice(std::size_t from, std::size_t len) const {
    RationalVector r(len);
    for (std::size_t i = 0; i < len; ++i) r.c_[i] = c_.at(from + i);
    return r;
}

std::string RationalVector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < dim(); ++i) os << (i ? "," : "") << to_string(c_[i]);
    os << ")";
    return os.str();
}

RationalVector concat(const RationalVector& a, const RationalVector& b) {
    RationalVector r(a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.dim(); ++i) r[a.dim() + i] = b[i];
    return r;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t k = rows.empty() ? 0 : rows[0].size();
    RationalMatrix m(rows.size(), k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != k) throw DimensionMismatch("ragged matrix");
        for (std::size_t j = 0; j < k; ++j) m(i, j) = Q(rows[i][j]);
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    std::size_t k = rows.empty() ? 0 : rows[0].dim();
    RationalMatrix m(rows.size(), k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].dim() != k) throw DimensionMismatch("ragged matrix");
        for (std::size_t j = 0; j < k; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (k_ != o.r_) throw DimensionMismatch("matrix product");
    RationalMatrix m(r_, o.k_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t l = 0; l < k_; ++l) {
            const Q& x = (*this)(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.k_; ++j) m(i, j) += x * o(l, j);
        }
    return m;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
    if (k_ != v.dim()) throw DimensionMismatch("matrix-vector product");
    RationalVector r(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < k_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (r_ != o.r_ || k_ != o.k_) throw DimensionMismatch("matrix add");
    RationalMatrix m(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (r_ != o.r_ || k_ != o.k_) throw DimensionMismatch("matrix sub");
    RationalMatrix m(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix m(k_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < k_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
    RationalVector v(k_);
    for (std::size_t j = 0; j < k_; ++j) v[j] = (*this)(i, j);
    return v;
}

RationalVector RationalMatrix::col(std::size_t j) const {
    RationalVector v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return r_ == o.r_ && k_ == o.k_ && a_ == o.a_;
}

bool RationalMatrix::operator<(const RationalMatrix& o) const {
    if (r_ != o.r_) return r_ < o.r_;
    if (k_ != o.k_) return k_ < o.k_;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] < o.a_[i]) return true;
        if (o.a_[i] < a_[i]) return false;
    }
    return false;
}

bool RationalMatrix::is_identity() const {
    if (r_ != k_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < k_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool RationalMatrix::is_integral() const {
    for (const auto& x : a_)
        if (x.get_den() != 1) return false;
    return true;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < k_; ++j) os << (j ? " " : "") << to_string((*this)(i, j));
        os << "]\n";
    }
    return os.str();
}

std::size_t rank(const RationalMatrix& m0) {
    RationalMatrix m(m0);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Q f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank(const std::vector<RationalVector>& vs) {
    if (vs.empty()) return 0;
    return rank(RationalMatrix::from_rows(vs));
}

bool is_nilpotent(const RationalMatrix& m) {
    RationalMatrix p = m;
    for (std::size_t k = 1; k < m.rows(); ++k) p = p * m;
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            if (p(i, j) != 0) return false;
    return true;
}

BilinearForm::BilinearForm(RationalMatrix gram) : g_(std::move(gram)) {
    if (g_.rows() != g_.cols()) throw DimensionMismatch("gram matrix not square");
    if (g_ != g_.transpose()) throw Error("gram matrix not symmetric");
}

Q BilinearForm::operator()(const RationalVector& v, const RationalVector& w) const {
    if (v.dim() != dim() || w.dim() != dim()) throw DimensionMismatch("form argument");
    Q s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (g_(i, j) != 0 && w[j] != 0) s += v[i] * g_(i, j) * w[j];
    }
    return s;
}

AmbientSpace::AmbientSpace(int nu, const RationalMatrix& dot_gram)
    : nu_(nu), ell_(static_cast<int>(dot_gram.rows())), dot_(dot_gram) {
    if (nu < 0) throw DimensionMismatch("negative nullity");
    std::size_t n = dim();
    RationalMatrix g(n, n);
    for (int i = 0; i < nu_; ++i) {
        g(i, nu_ + ell_ + i) = 1;
        g(nu_ + ell_ + i, i) = 1;
    }
    for (int i = 0; i < ell_; ++i)
        for (int j = 0; j < ell_; ++j) g(nu_ + i, nu_ + j) = dot_(i, j);
    form_ = BilinearForm(g);
}

std::vector<RationalVector> AmbientSpace::radical_basis() const {
    std::vector<RationalVector> b;
    for (int i = 0; i < nu_; ++i) {
        RationalVector e(dim());
        e[i] = 1;
        b.push_back(e);
    }
    return b;
}

RationalVector AmbientSpace::embed(const RationalVector& sigma, const RationalVector& u) const {
    if (sigma.dim() != static_cast<std::size_t>(nu_) || u.dim() != static_cast<std::size_t>(ell_))
        throw DimensionMismatch("embed");
    RationalVector v(dim());
    for (int i = 0; i < nu_; ++i) v[i] = sigma[i];
    for (int i = 0; i < ell_; ++i) v[nu_ + i] = u[i];
    return v;
}

void AmbientSpace::check_dim(const RationalVector& v) const {
    if (v.dim() != dim())
        throw DimensionMismatch("expected dimension " + std::to_string(dim()) + ", got " +
                                std::to_string(v.dim()));
}

RationalVector reflect(const AmbientSpace& space, const RationalVector& alpha, const RationalVector& v) {
    space.check_dim(alpha);
    space.check_dim(v);
    Q aa = space.pair(alpha, alpha);
    if (aa == 0) throw IsotropicRoot(alpha.str());
    Q c = 2 * space.pair(v, alpha) / aa;
    return v - alpha * c;
}

RationalMatrix reflection_matrix(const AmbientSpace& space, const RationalVector& alpha) {
    space.check_dim(alpha);
    Q aa = space.pair(alpha, alpha);
    if (aa == 0) throw IsotropicRoot(alpha.str());
    std::size_t n = space.dim();
    // M = I - alpha * (2/(a,a)) * (G alpha)^T
    RationalVector ga = space.form().gram() * alpha;
    RationalMatrix m = RationalMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (ga[j] != 0) m(i, j) -= 2 * alpha[i] * ga[j] / aa;
    }
    return m;
}

RationalVector coroot(const AmbientSpace& space, const RationalVector& alpha) {
    space.check_dim(alpha);
    Q aa = space.pair(alpha, alpha);
    if (aa == 0) throw IsotropicRoot(alpha.str());
    return alpha * (Q(2) / aa);
}

} // namespace ears
