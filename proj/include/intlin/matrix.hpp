#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <initializer_list>
#include <string>
#include <vector>

namespace intlin {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Matrices act on column vectors: A : Z^cols -> Z^rows.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const std::vector<Int>& d);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[size_t(i) * cols_ + j];
    }
    const Int& at(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[size_t(i) * cols_ + j];
    }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix transpose() const;

    /// Columns selected by index list (in order).
    IntMatrix select_cols(const std::vector<int>& idx) const;
    IntMatrix select_rows(const std::vector<int>& idx) const;

    /// [A | B] side by side; A over B.
    static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);
    /// Block diagonal.
    static IntMatrix dsum(const IntMatrix& a, const IntMatrix& b);

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

}  // namespace intlin
