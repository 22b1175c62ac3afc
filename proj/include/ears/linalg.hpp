#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ears {

using Q = mpq_class;
using Z = mpz_class;

std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : c_(dim) {}
    RationalVector(std::initializer_list<long> xs);
    explicit RationalVector(std::vector<Q> xs) : c_(std::move(xs)) {}
    static RationalVector from_ints(const std::vector<std::int64_t>& xs);

    std::size_t dim() const { return c_.size(); }
    const Q& operator[](std::size_t i) const { return c_[i]; }
    Q& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Q>& coords() const { return c_; }

    RationalVector operator+(const RationalVector& o) const;
    RationalVector operator-(const RationalVector& o) const;
    RationalVector operator-() const;
    RationalVector operator*(const Q& s) const;
    RationalVector& operator+=(const RationalVector& o);
    RationalVector& operator-=(const RationalVector& o);

    bool operator==(const RationalVector& o) const;
    bool operator!=(const RationalVector& o) const { return !(*this == o); }
    bool operator<(const RationalVector& o) const;

    bool is_zero() const;
    bool is_integral() const;
    RationalVector slice(std::size_t from, std::size_t len) const;
    std::string str() const;

private:
    std::vector<Q> c_;
};

RationalVector concat(const RationalVector& a, const RationalVector& b);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : r_(rows), k_(cols), a_(rows * cols) {}
    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return k_; }
    const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * k_ + j]; }
    Q& operator()(std::size_t i, std::size_t j) { return a_[i * k_ + j]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalVector operator*(const RationalVector& v) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix transpose() const;
    RationalVector row(std::size_t i) const;
    RationalVector col(std::size_t j) const;

    bool operator==(const RationalMatrix& o) const;
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }
    bool operator<(const RationalMatrix& o) const;
    bool is_identity() const;
    bool is_integral() const;
    std::string str() const;

private:
    std::size_t r_ = 0, k_ = 0;
    std::vector<Q> a_;
};

// rank over Q of a list of vectors
std::size_t rank(const std::vector<RationalVector>& vs);
// rank of a matrix
std::size_t rank(const RationalMatrix& m);
// true if m^k == 0 for k = rows
bool is_nilpotent(const RationalMatrix& m);

class BilinearForm {
public:
    BilinearForm() = default;
    explicit BilinearForm(RationalMatrix gram);
    const RationalMatrix& gram() const { return g_; }
    std::size_t dim() const { return g_.rows(); }
    Q operator()(const RationalVector& v, const RationalVector& w) const;

private:
    RationalMatrix g_;
};

// V = V0 (nu) + Vdot (ell) + V0* (nu), basis in that order.
class AmbientSpace {
public:
    AmbientSpace() = default;
    AmbientSpace(int nu, const RationalMatrix& dot_gram);

    int nu() const { return nu_; }
    int ell() const { return ell_; }
    std::size_t dim() const { return static_cast<std::size_t>(2 * nu_ + ell_); }
    const BilinearForm& form() const { return form_; }
    const RationalMatrix& dot_gram() const { return dot_; }
    std::vector<RationalVector> radical_basis() const;

    Q pair(const RationalVector& v, const RationalVector& w) const { return form_(v, w); }
    RationalVector zero() const { return RationalVector(dim()); }
    // (sigma, u, 0)
    RationalVector embed(const RationalVector& sigma, const RationalVector& u) const;
    RationalVector v0_part(const RationalVector& v) const { return v.slice(0, nu_); }
    RationalVector dot_part(const RationalVector& v) const { return v.slice(nu_, ell_); }
    RationalVector dual_part(const RationalVector& v) const { return v.slice(nu_ + ell_, nu_); }
    void check_dim(const RationalVector& v) const;

private:
    int nu_ = 0, ell_ = 0;
    RationalMatrix dot_;
    BilinearForm form_;
};

RationalVector reflect(const AmbientSpace& space, const RationalVector& alpha, const RationalVector& v);
RationalMatrix reflection_matrix(const AmbientSpace& space, const RationalVector& alpha);
RationalVector coroot(const AmbientSpace& space, const RationalVector& alpha);

} // namespace ears
