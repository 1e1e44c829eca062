#include "intlin/snf.hpp"

#include <stdexcept>

namespace intlin {

namespace {

struct Worker {
    IntMatrix d, u, uinv, v, vinv;

    explicit Worker(const IntMatrix& a)
        : d(a),
          u(IntMatrix::identity(a.rows())),
          uinv(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          vinv(IntMatrix::identity(a.cols())) {}

    // row_i -= q * row_t  (D and U), inverse op on Uinv columns
    void row_sub(int i, int t, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < d.cols(); ++j) d.at(i, j) -= q * d.at(t, j);
        for (int j = 0; j < u.cols(); ++j) u.at(i, j) -= q * u.at(t, j);
        for (int r = 0; r < uinv.rows(); ++r) uinv.at(r, t) += q * uinv.at(r, i);
    }
    void col_sub(int j, int t, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < d.rows(); ++i) d.at(i, j) -= q * d.at(i, t);
        for (int i = 0; i < v.rows(); ++i) v.at(i, j) -= q * v.at(i, t);
        for (int c = 0; c < vinv.cols(); ++c) vinv.at(t, c) += q * vinv.at(j, c);
    }
    void row_swap(int i, int t) {
        if (i == t) return;
        for (int j = 0; j < d.cols(); ++j) std::swap(d.at(i, j), d.at(t, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(i, j), u.at(t, j));
        for (int r = 0; r < uinv.rows(); ++r) std::swap(uinv.at(r, i), uinv.at(r, t));
    }
    void col_swap(int j, int t) {
        if (j == t) return;
        for (int i = 0; i < d.rows(); ++i) std::swap(d.at(i, j), d.at(i, t));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, j), v.at(i, t));
        for (int c = 0; c < vinv.cols(); ++c) std::swap(vinv.at(j, c), vinv.at(t, c));
    }
    void row_negate(int i) {
        for (int j = 0; j < d.cols(); ++j) d.at(i, j) = -d.at(i, j);
        for (int j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
        for (int r = 0; r < uinv.rows(); ++r) uinv.at(r, i) = -uinv.at(r, i);
    }

    // smallest |entry| != 0 in the block starting at (t,t); ties: lowest row,
    // then lowest column
    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        Int best;
        for (int i = t; i < d.rows(); ++i)
            for (int j = t; j < d.cols(); ++j) {
                const Int& x = d.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void eliminate_from(int t0) {
        int n = std::min(d.rows(), d.cols());
        for (int t = t0; t < n; ++t) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) return;
            row_swap(pi, t);
            col_swap(pj, t);
            for (;;) {
                bool clean = true;
                for (int i = t + 1; i < d.rows(); ++i) {
                    if (d.at(i, t) == 0) continue;
                    Int q = d.at(i, t) / d.at(t, t);
                    row_sub(i, t, q);
                    if (d.at(i, t) != 0) {  // remainder became the new, smaller pivot
                        row_swap(i, t);
                        clean = false;
                        break;
                    }
                }
                if (!clean) continue;
                for (int j = t + 1; j < d.cols(); ++j) {
                    if (d.at(t, j) == 0) continue;
                    Int q = d.at(t, j) / d.at(t, t);
                    col_sub(j, t, q);
                    if (d.at(t, j) != 0) {
                        col_swap(j, t);
                        clean = false;
                        break;
                    }
                }
                if (clean) break;
            }
            if (d.at(t, t) < 0) row_negate(t);
        }
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    Worker w(a);
    w.eliminate_from(0);
    // divisibility chain d_i | d_{i+1}
    int n = std::min(a.rows(), a.cols());
    for (;;) {
        int bad = -1;
        for (int i = 0; i + 1 < n; ++i) {
            const Int& x = w.d.at(i, i);
            const Int& y = w.d.at(i + 1, i + 1);
            if (x != 0 && y % x != 0) {
                bad = i;
                break;
            }
        }
        if (bad < 0) break;
        // merge the two diagonal entries into gcd/lcm
        w.col_sub(bad, bad + 1, Int(-1));  // col_bad += col_{bad+1}
        w.eliminate_from(bad);
    }
    SmithForm s;
    s.U = std::move(w.u);
    s.Uinv = std::move(w.uinv);
    s.D = std::move(w.d);
    s.V = std::move(w.v);
    s.Vinv = std::move(w.vinv);
    s.rank = 0;
    for (int i = 0; i < n; ++i)
        if (s.D.at(i, i) != 0) ++s.rank;
    return s;
}

int rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

IntMatrix kernel_basis(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    std::vector<int> idx;
    for (int j = s.rank; j < a.cols(); ++j) idx.push_back(j);
    return s.V.select_cols(idx);
}

IntMatrix image_saturation_basis(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    std::vector<int> idx;
    for (int i = 0; i < s.rank; ++i) idx.push_back(i);
    return s.Uinv.select_cols(idx);
}

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    SmithForm s = smith_normal_form(a);
    IntMatrix y = s.U * b;
    IntMatrix t(a.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        for (int i = 0; i < a.rows(); ++i) {
            Int di = s.diag(i);
            if (di != 0) {
                if (y.at(i, c) % di != 0) return std::nullopt;
                if (i < a.cols()) t.at(i, c) = y.at(i, c) / di;
            } else if (y.at(i, c) != 0) {
                return std::nullopt;
            }
        }
    }
    return s.V * t;
}

IntMatrix solve_must(const IntMatrix& a, const IntMatrix& b) {
    auto x = solve(a, b);
    if (!x) throw std::logic_error("solve_must: no integral solution");
    return *x;
}


IntMatrix saturation_quotient(const IntMatrix& s, int ambient) {
    if (s.cols() == 0) return IntMatrix::identity(ambient);
    auto snf = smith_normal_form(s);
    std::vector<int> idx;
    for (int i = snf.rank; i < ambient; ++i) idx.push_back(i);
    return snf.U.select_rows(idx);
}

IntMatrix saturation_quotient_section(const IntMatrix& s, int ambient) {
    if (s.cols() == 0) return IntMatrix::identity(ambient);
    auto snf = smith_normal_form(s);
    std::vector<int> idx;
    for (int i = snf.rank; i < ambient; ++i) idx.push_back(i);
    return snf.Uinv.select_cols(idx);
}

}  // namespace intlin

