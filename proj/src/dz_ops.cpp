#include <stdexcept>

#include "dz/complex.hpp"

namespace dz {

namespace {

// basis bookkeeping for hom/tensor totalizations
struct BlockIndex {
    // per total degree: list of (i, p, q) blocks flattened
    std::map<int, std::vector<std::array<int, 3>>> basis;
    std::map<int, std::map<std::array<int, 3>, int>> pos;

    void add(int deg, int i, int p, int q) {
        auto& b = basis[deg];
        pos[deg][{i, p, q}] = int(b.size());
        b.push_back({i, p, q});
    }
    int find(int deg, int i, int p, int q) const {
        auto itd = pos.find(deg);
        if (itd == pos.end()) return -1;
        auto it = itd->second.find({i, p, q});
        return it == itd->second.end() ? -1 : it->second;
    }
};

}  // namespace

FreeComplex hom_complex(const FreeComplex& x, const FreeComplex& y) {
    if (x.is_zero() || y.is_zero()) return FreeComplex::zero();
    BlockIndex ix;
    int nlo = y.lo() - x.hi(), nhi = y.hi() - x.lo();
    for (int n = nlo; n <= nhi; ++n)
        for (int i = x.lo(); i <= x.hi(); ++i)
            for (int q = 0; q < x.rank(i); ++q)
                for (int p = 0; p < y.rank(i + n); ++p) ix.add(n, i, p, q);
    ComplexBuilder cb;
    for (int n = nlo; n <= nhi; ++n) cb.set_rank(n, int(ix.basis[n].size()));
    for (int n = nlo; n <= nhi; ++n) {
        for (int col = 0; col < int(ix.basis[n].size()); ++col) {
            auto [i, p, q] = ix.basis[n][col];
            // d(f) = d_Y . f - (-1)^n f . d_X  on the elementary map E_pq in block i
            IntMatrix dy = y.diff(i + n);
            for (int p2 = 0; p2 < dy.rows(); ++p2) {
                if (dy.at(p2, p) == 0) continue;
                int row = ix.find(n + 1, i, p2, q);
                if (row >= 0) cb.add_entry(n, row, col, dy.at(p2, p));
            }
            IntMatrix dx = x.diff(i - 1);
            Int sgn = (n % 2 == 0) ? -1 : 1;
            for (int q2 = 0; q2 < dx.cols(); ++q2) {
                if (dx.at(q, q2) == 0) continue;
                int row = ix.find(n + 1, i - 1, p, q2);
                if (row >= 0) cb.add_entry(n, row, col, sgn * dx.at(q, q2));
            }
        }
    }
    return std::move(cb).build();
}

FreeComplex tensor_complex(const FreeComplex& x, const FreeComplex& y) {
    if (x.is_zero() || y.is_zero()) return FreeComplex::zero();
    BlockIndex ix;
    int nlo = x.lo() + y.lo(), nhi = x.hi() + y.hi();
    for (int n = nlo; n <= nhi; ++n)
        for (int i = x.lo(); i <= x.hi(); ++i)
            for (int p = 0; p < x.rank(i); ++p)
                for (int q = 0; q < y.rank(n - i); ++q) ix.add(n, i, p, q);
    ComplexBuilder cb;
    for (int n = nlo; n <= nhi; ++n) cb.set_rank(n, int(ix.basis[n].size()));
    for (int n = nlo; n <= nhi; ++n) {
        for (int col = 0; col < int(ix.basis[n].size()); ++col) {
            auto [i, p, q] = ix.basis[n][col];
            IntMatrix dx = x.diff(i);
            for (int p2 = 0; p2 < dx.rows(); ++p2) {
                if (dx.at(p2, p) == 0) continue;
                int row = ix.find(n + 1, i + 1, p2, q);
                if (row >= 0) cb.add_entry(n, row, col, dx.at(p2, p));
            }
            IntMatrix dy = y.diff(n - i);
            Int sgn = (i % 2 == 0) ? 1 : -1;
            for (int q2 = 0; q2 < dy.rows(); ++q2) {
                if (dy.at(q2, q) == 0) continue;
                int row = ix.find(n + 1, i, p, q2);
                if (row >= 0) cb.add_entry(n, row, col, sgn * dy.at(q2, q));
            }
        }
    }
    return std::move(cb).build();
}

FreeComplex dual_complex(const FreeComplex& x) {
    return hom_complex(x, FreeComplex::free_module(1, 0));
}

std::vector<ChainMap> chain_map_basis(const FreeComplex& x, const FreeComplex& y) {
    std::vector<ChainMap> out;
    if (x.is_zero() || y.is_zero()) return out;
    FreeComplex h = hom_complex(x, y);
    if (h.rank(0) == 0) return out;
    IntMatrix k = intlin::kernel_basis(h.diff(0));
    // decode each kernel column back into degreewise matrices
    int idx = 0;
    std::map<std::array<int, 3>, int> pos;
    for (int i = x.lo(); i <= x.hi(); ++i)
        for (int q = 0; q < x.rank(i); ++q)
            for (int p = 0; p < y.rank(i); ++p) pos[{i, p, q}] = idx++;
    for (int c = 0; c < k.cols(); ++c) {
        ChainMap f;
        f.source = x;
        f.target = y;
        for (int i = x.lo(); i <= x.hi(); ++i) {
            if (!x.rank(i) || !y.rank(i)) continue;
            IntMatrix m(y.rank(i), x.rank(i));
            bool nz = false;
            for (int q = 0; q < x.rank(i); ++q)
                for (int p = 0; p < y.rank(i); ++p) {
                    m.at(p, q) = k.at(pos[{i, p, q}], c);
                    if (m.at(p, q) != 0) nz = true;
                }
            if (nz) f.mats[i] = std::move(m);
        }
        f.validate();
        out.push_back(std::move(f));
    }
    return out;
}

std::optional<std::map<int, IntMatrix>> null_homotopy(const ChainMap& f) {
    const FreeComplex &x = f.source, &y = f.target;
    if (x.is_zero() || y.is_zero()) return std::map<int, IntMatrix>{};
    // unknowns: h^i : X^i -> Y^{i-1}; equation d_Y h + h d_X = f
    std::map<std::array<int, 2>, int> hpos;  // (degree i, p*xrank+q) -> var
    int nvars = 0;
    for (int i = x.lo(); i <= x.hi(); ++i) nvars += x.rank(i) * y.rank(i - 1);
    std::map<std::array<int, 3>, int> hvar;
    {
        int v = 0;
        for (int i = x.lo(); i <= x.hi(); ++i)
            for (int q = 0; q < x.rank(i); ++q)
                for (int p = 0; p < y.rank(i - 1); ++p) hvar[{i, p, q}] = v++;
    }
    int neq = 0;
    std::map<std::array<int, 3>, int> eqpos;
    for (int i = x.lo(); i <= x.hi(); ++i)
        for (int q = 0; q < x.rank(i); ++q)
            for (int p = 0; p < y.rank(i); ++p) eqpos[{i, p, q}] = neq++;
    IntMatrix a(neq, nvars), b(neq, 1);
    for (const auto& [key, row] : eqpos) {
        auto [i, p, q] = key;
        b.at(row, 0) = f.mat(i).at(p, q);
        IntMatrix dy = y.diff(i - 1);
        for (int v = 0; v < y.rank(i - 1); ++v) {
            if (dy.at(p, v) == 0) continue;
            a.at(row, hvar[{i, v, q}]) += dy.at(p, v);
        }
        IntMatrix dx = x.diff(i);
        for (int w = 0; w < x.rank(i + 1); ++w) {
            if (dx.at(w, q) == 0) continue;
            auto it = hvar.find({i + 1, p, w});
            if (it != hvar.end()) a.at(row, it->second) += dx.at(w, q);
        }
    }
    auto sol = intlin::solve(a, b);
    if (!sol) return std::nullopt;
    std::map<int, IntMatrix> h;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        if (!x.rank(i) || !y.rank(i - 1)) continue;
        IntMatrix m(y.rank(i - 1), x.rank(i));
        for (int q = 0; q < x.rank(i); ++q)
            for (int p = 0; p < y.rank(i - 1); ++p) m.at(p, q) = sol->at(hvar[{i, p, q}], 0);
        h[i] = std::move(m);
    }
    return h;
}

bool is_null_homotopic(const ChainMap& f) { return null_homotopy(f).has_value(); }

TruncLe std_truncate_le(const FreeComplex& x, int n) {
    TruncLe t;
    if (x.is_zero() || n < x.lo()) {
        t.part = FreeComplex::zero();
        t.incl = ChainMap::zero(t.part, x);
        return t;
    }
    if (n >= x.hi()) {
        t.part = x;
        t.incl = ChainMap::identity(x);
        return t;
    }
    IntMatrix k = intlin::kernel_basis(x.diff(n));
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int d = x.lo(); d < n; ++d) ranks.push_back(x.rank(d));
    ranks.push_back(k.cols());
    for (int d = x.lo(); d + 1 < n; ++d) diffs.push_back(x.diff(d));
    if (n > x.lo()) diffs.push_back(intlin::solve_must(k, x.diff(n - 1)));
    t.part = FreeComplex::from_parts(x.lo(), std::move(ranks), std::move(diffs));
    t.incl.source = t.part;
    t.incl.target = x;
    for (int d = x.lo(); d < n; ++d)
        if (x.rank(d)) t.incl.mats[d] = IntMatrix::identity(x.rank(d));
    if (k.cols()) t.incl.mats[n] = k;
    t.incl.validate();
    return t;
}

namespace {

TruncGe ge_from_quotient(const FreeComplex& x, int n, const IntMatrix& kill) {
    // complex [ X^n/kill -> X^{n+1} -> ... ] with the projection map from x
    TruncGe t;
    IntMatrix q = intlin::saturation_quotient(kill, x.rank(n));
    IntMatrix sec = intlin::saturation_quotient_section(kill, x.rank(n));
    IntMatrix dbar = x.diff(n) * sec;
    std::vector<int> ranks{q.rows()};
    std::vector<IntMatrix> diffs;
    for (int d = n + 1; d <= x.hi(); ++d) ranks.push_back(x.rank(d));
    if (n < x.hi()) {
        diffs.push_back(dbar);
        for (int d = n + 1; d < x.hi(); ++d) diffs.push_back(x.diff(d));
    }
    t.part = FreeComplex::from_parts(n, std::move(ranks), std::move(diffs));
    t.proj.source = x;
    t.proj.target = t.part;
    if (q.rows() && x.rank(n)) t.proj.mats[n] = q;
    for (int d = n + 1; d <= x.hi(); ++d)
        if (x.rank(d)) t.proj.mats[d] = IntMatrix::identity(x.rank(d));
    t.proj.validate();
    return t;
}

}  // namespace

TruncGe std_truncate_ge(const FreeComplex& x, int n) {
    TruncGe t;
    if (x.is_zero() || n > x.hi()) {
        t.part = FreeComplex::zero();
        t.proj = ChainMap::zero(x, t.part);
        return t;
    }
    if (n <= x.lo()) {
        t.part = x;
        t.proj = ChainMap::identity(x);
        return t;
    }
    // abelian-category truncation: coker d^{n-1} in degree n; the cokernel may
    // have torsion, so re-normalize by splicing a two-term free resolution:
    // equivalently, quotient by ker d^{n-1}-orthogonal... use the mapping-cone
    // route: cone(tau_le(n-1) -> X) is free and quasi-isomorphic to tau_ge(n).
    TruncLe below = std_truncate_le(x, n - 1);
    Triangle tri = cone(below.incl);
    Reduction red = minimize(tri.cone);
    t.part = red.reduced;
    t.proj = red.proj.compose_after(tri.into_cone);
    t.proj.validate();
    return t;
}

TruncLe qa_truncate_le(const FreeComplex& x, long long twice_s) {
    if ((twice_s % 2 + 2) % 2 == 0) {
        long long n = twice_s / 2;
        return std_truncate_le(x, int(n));  // Ker d^n is the lattice kernel
    }
    // s = n + 1/2 with 2n+1 = twice_s: ... -> X^n -> Im d^n -> 0,
    // Im the saturation of the set image
    long long n = (twice_s - 1) / 2;
    TruncLe t;
    if (x.is_zero() || n >= x.hi()) {
        t.part = x;
        t.incl = ChainMap::identity(x);
        return t;
    }
    if (n < x.lo() - 1) {
        t.part = FreeComplex::zero();
        t.incl = ChainMap::zero(t.part, x);
        return t;
    }
    IntMatrix sat = intlin::image_saturation_basis(x.diff(int(n)));
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int d = x.lo(); d <= int(n); ++d) ranks.push_back(x.rank(d));
    ranks.push_back(sat.cols());
    for (int d = x.lo(); d < int(n); ++d) diffs.push_back(x.diff(d));
    if (int(n) >= x.lo()) diffs.push_back(intlin::solve_must(sat, x.diff(int(n))));
    t.part = FreeComplex::from_parts(x.lo(), std::move(ranks), std::move(diffs));
    t.incl.source = t.part;
    t.incl.target = x;
    for (int d = x.lo(); d <= int(n); ++d)
        if (x.rank(d)) t.incl.mats[d] = IntMatrix::identity(x.rank(d));
    if (sat.cols()) t.incl.mats[int(n) + 1] = sat;
    t.incl.validate();
    return t;
}

TruncGe qa_truncate_ge(const FreeComplex& x, long long twice_s) {
    TruncGe t;
    if ((twice_s % 2 + 2) % 2 == 0) {
        // [ Coker_F d^{n-1} -> X^n+1 ... ] with Coker_F = X^n / sat(im)
        int n = int(twice_s / 2);
        if (x.is_zero() || n <= x.lo()) {
            t.part = x;
            t.proj = ChainMap::identity(x);
            return t;
        }
        if (n > x.hi()) {
            t.part = FreeComplex::zero();
            t.proj = ChainMap::zero(x, t.part);
            return t;
        }
        return ge_from_quotient(x, n, intlin::image_saturation_basis(x.diff(n - 1)));
    }
    // s = n + 1/2: [ Coim d^n -> X^{n+1} -> ... ], Coim = X^n/Ker
    int n = int((twice_s - 1) / 2);
    if (x.is_zero() || n > x.hi()) {
        t.part = FreeComplex::zero();
        t.proj = ChainMap::zero(x, t.part);
        return t;
    }
    if (n < x.lo()) {
        t.part = x;
        t.proj = ChainMap::identity(x);
        return t;
    }
    return ge_from_quotient(x, n, intlin::kernel_basis(x.diff(n)));
}

}  // namespace dz
