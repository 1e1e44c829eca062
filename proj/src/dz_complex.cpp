#include "dz/complex.hpp"

#include <stdexcept>

namespace dz {

FreeComplex FreeComplex::free_module(int rank, int degree) {
    if (rank == 0) return zero();
    FreeComplex x;
    x.lo_ = degree;
    x.ranks_ = {rank};
    return x;
}

FreeComplex FreeComplex::from_parts(int lo, std::vector<int> ranks, std::vector<IntMatrix> diffs) {
    FreeComplex x;
    x.lo_ = lo;
    x.ranks_ = std::move(ranks);
    x.diffs_ = std::move(diffs);
    if (!x.ranks_.empty() && x.diffs_.size() + 1 != x.ranks_.size())
        throw std::invalid_argument("from_parts: need one differential per adjacent pair");
    x.trim();
    x.validate();
    return x;
}

void FreeComplex::trim() {
    while (!ranks_.empty() && ranks_.front() == 0) {
        ranks_.erase(ranks_.begin());
        if (!diffs_.empty()) diffs_.erase(diffs_.begin());
        ++lo_;
    }
    while (!ranks_.empty() && ranks_.back() == 0) {
        ranks_.pop_back();
        if (!diffs_.empty()) diffs_.pop_back();
    }
    if (ranks_.empty()) {
        lo_ = 0;
        diffs_.clear();
    }
}

int FreeComplex::total_rank() const {
    int t = 0;
    for (int r : ranks_) t += r;
    return t;
}

IntMatrix FreeComplex::diff(int degree) const {
    int k = degree - lo_;
    if (k >= 0 && k + 1 < int(ranks_.size())) return diffs_[k];
    return IntMatrix(rank(degree + 1), rank(degree));
}

void FreeComplex::validate() const {
    for (int k = 0; k + 1 < int(ranks_.size()); ++k) {
        if (diffs_[k].rows() != ranks_[k + 1] || diffs_[k].cols() != ranks_[k])
            throw std::invalid_argument("complex: differential shape mismatch at degree " +
                                        std::to_string(lo_ + k));
    }
    for (int k = 0; k + 2 < int(ranks_.size()); ++k) {
        if (!(diffs_[k + 1] * diffs_[k]).is_zero())
            throw std::invalid_argument("complex: d.d != 0 at degree " + std::to_string(lo_ + k));
    }
}

bool FreeComplex::operator==(const FreeComplex& o) const {
    return lo_ == o.lo_ && ranks_ == o.ranks_ && diffs_ == o.diffs_;
}

void ComplexBuilder::set_rank(int degree, int rank) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    if (rank > 0) ranks_[degree] = rank;
    else ranks_.emplace(degree, 0);
}

void ComplexBuilder::add_entry(int degree, int row, int col, const Int& v) {
    entries_[degree][{row, col}] += v;
}

void ComplexBuilder::set_diff(int degree, IntMatrix m) { whole_[degree] = std::move(m); }

FreeComplex ComplexBuilder::build() && {
    if (ranks_.empty()) return FreeComplex::zero();
    int lo = ranks_.begin()->first, hi = ranks_.rbegin()->first;
    std::vector<int> ranks;
    for (int d = lo; d <= hi; ++d) {
        auto it = ranks_.find(d);
        ranks.push_back(it == ranks_.end() ? 0 : it->second);
    }
    std::vector<IntMatrix> diffs;
    for (int d = lo; d < hi; ++d) {
        auto w = whole_.find(d);
        if (w != whole_.end()) {
            diffs.push_back(w->second);
            continue;
        }
        IntMatrix m(ranks[d + 1 - lo], ranks[d - lo]);
        auto it = entries_.find(d);
        if (it != entries_.end())
            for (const auto& [rc, v] : it->second) m.at(rc.first, rc.second) = v;
        diffs.push_back(std::move(m));
    }
    return FreeComplex::from_parts(lo, std::move(ranks), std::move(diffs));
}

IntMatrix ChainMap::mat(int degree) const {
    auto it = mats.find(degree);
    if (it != mats.end()) return it->second;
    return IntMatrix(target.rank(degree), source.rank(degree));
}

void ChainMap::validate() const {
    for (const auto& [d, m] : mats)
        if (m.rows() != target.rank(d) || m.cols() != source.rank(d))
            throw std::invalid_argument("chain map: shape mismatch at degree " + std::to_string(d));
    int lo = std::min(source.lo(), target.lo());
    int hi = std::max(source.hi(), target.hi());
    for (int d = lo; d <= hi; ++d)
        if (target.diff(d) * mat(d) != mat(d + 1) * source.diff(d))
            throw std::invalid_argument("chain map: does not commute at degree " + std::to_string(d));
}

ChainMap ChainMap::zero(FreeComplex src, FreeComplex tgt) {
    ChainMap f;
    f.source = std::move(src);
    f.target = std::move(tgt);
    return f;
}

ChainMap ChainMap::identity(const FreeComplex& x) {
    ChainMap f;
    f.source = f.target = x;
    for (int d = x.lo(); d <= x.hi(); ++d)
        if (x.rank(d)) f.mats[d] = IntMatrix::identity(x.rank(d));
    return f;
}

ChainMap ChainMap::compose_after(const ChainMap& first) const {
    ChainMap f;
    f.source = first.source;
    f.target = target;
    for (int d = f.source.lo(); d <= f.source.hi(); ++d) {
        if (!f.source.rank(d) || !f.target.rank(d)) continue;
        IntMatrix m = mat(d) * first.mat(d);
        if (!m.is_zero()) f.mats[d] = std::move(m);
    }
    return f;
}

ChainMap ChainMap::shifted(int n) const {
    ChainMap f;
    f.source = shift(source, n);
    f.target = shift(target, n);
    for (const auto& [d, m] : mats) f.mats[d - n] = m;
    return f;
}

FgAbGroup cohomology(const FreeComplex& x, int degree) {
    if (x.rank(degree) == 0) return FgAbGroup::zero();
    IntMatrix k = intlin::kernel_basis(x.diff(degree));
    if (k.cols() == 0) return FgAbGroup::zero();
    IntMatrix rel = intlin::solve_must(k, x.diff(degree - 1));
    return intlin::group_from_presentation(rel);
}

std::map<int, FgAbGroup> cohomology_all(const FreeComplex& x) {
    std::map<int, FgAbGroup> h;
    FreeComplex core = minimize_only(x);
    for (int d = core.lo(); d <= core.hi(); ++d) {
        FgAbGroup g = cohomology(core, d);
        if (!g.is_zero()) h[d] = std::move(g);
    }
    return h;
}

bool is_exact(const FreeComplex& x) { return cohomology_all(x).empty(); }

FreeComplex shift(const FreeComplex& x, int n) {
    if (x.is_zero() || n == 0) return x;
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int d = x.lo(); d <= x.hi(); ++d) ranks.push_back(x.rank(d));
    for (int d = x.lo(); d < x.hi(); ++d) {
        IntMatrix m = x.diff(d);
        if (n % 2 != 0) m = -m;
        diffs.push_back(std::move(m));
    }
    return FreeComplex::from_parts(x.lo() - n, std::move(ranks), std::move(diffs));
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int d = lo; d <= hi; ++d) ranks.push_back(a.rank(d) + b.rank(d));
    for (int d = lo; d < hi; ++d) diffs.push_back(IntMatrix::dsum(a.diff(d), b.diff(d)));
    return FreeComplex::from_parts(lo, std::move(ranks), std::move(diffs));
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
    ChainMap h;
    h.source = direct_sum(f.source, g.source);
    h.target = direct_sum(f.target, g.target);
    for (int d = h.source.lo(); d <= h.source.hi(); ++d) {
        if (!h.source.rank(d) || !h.target.rank(d)) continue;
        // block layout matches direct_sum: a-part first
        IntMatrix m(h.target.rank(d), h.source.rank(d));
        IntMatrix fm = f.mat(d), gm = g.mat(d);
        for (int i = 0; i < fm.rows(); ++i)
            for (int j = 0; j < fm.cols(); ++j) m.at(i, j) = fm.at(i, j);
        for (int i = 0; i < gm.rows(); ++i)
            for (int j = 0; j < gm.cols(); ++j)
                m.at(f.target.rank(d) + i, f.source.rank(d) + j) = gm.at(i, j);
        if (!m.is_zero()) h.mats[d] = std::move(m);
    }
    return h;
}

Triangle cone(const ChainMap& f) {
    const FreeComplex &x = f.source, &y = f.target;
    int lo = std::min(y.lo(), x.lo() - 1), hi = std::max(y.hi(), x.hi() - 1);
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int d = lo; d <= hi; ++d) ranks.push_back(y.rank(d) + x.rank(d + 1));
    for (int d = lo; d < hi; ++d) {
        int r = ranks[d - lo + 1], c = ranks[d - lo];
        IntMatrix m(r, c);
        IntMatrix dy = y.diff(d), fx = f.mat(d + 1), dx = x.diff(d + 1);
        for (int i = 0; i < dy.rows(); ++i)
            for (int j = 0; j < dy.cols(); ++j) m.at(i, j) = dy.at(i, j);
        for (int i = 0; i < fx.rows(); ++i)
            for (int j = 0; j < fx.cols(); ++j) m.at(i, y.rank(d) + j) = fx.at(i, j);
        for (int i = 0; i < dx.rows(); ++i)
            for (int j = 0; j < dx.cols(); ++j) m.at(y.rank(d + 1) + i, y.rank(d) + j) = -dx.at(i, j);
        diffs.push_back(std::move(m));
    }
    Triangle t;
    t.cone = FreeComplex::from_parts(lo, std::move(ranks), std::move(diffs));
    t.into_cone.source = y;
    t.into_cone.target = t.cone;
    for (int d = y.lo(); d <= y.hi(); ++d) {
        if (!y.rank(d) || !t.cone.rank(d)) continue;
        IntMatrix m(t.cone.rank(d), y.rank(d));
        for (int i = 0; i < y.rank(d); ++i) m.at(i, i) = 1;
        t.into_cone.mats[d] = std::move(m);
    }
    FreeComplex xs = shift(x, 1);
    t.onto_shift.source = t.cone;
    t.onto_shift.target = xs;
    for (int d = t.cone.lo(); d <= t.cone.hi(); ++d) {
        if (!t.cone.rank(d) || !xs.rank(d)) continue;
        IntMatrix m(xs.rank(d), t.cone.rank(d));
        for (int i = 0; i < xs.rank(d); ++i) m.at(i, y.rank(d) + i) = 1;
        t.onto_shift.mats[d] = std::move(m);
    }
    return t;
}

FreeComplex cone_complex(const ChainMap& f) { return cone(f).cone; }

Fiber fiber(const ChainMap& f) {
    Triangle t = cone(f);
    Fiber fb;
    fb.fib = shift(t.cone, -1);
    fb.to_source.source = fb.fib;
    fb.to_source.target = f.source;
    const FreeComplex& y = f.target;
    for (int d = fb.fib.lo(); d <= fb.fib.hi(); ++d) {
        int rs = fb.fib.rank(d), rt = f.source.rank(d);
        if (!rs || !rt) continue;
        IntMatrix m(rt, rs);
        for (int i = 0; i < rt; ++i) m.at(i, y.rank(d - 1) + i) = 1;
        fb.to_source.mats[d] = std::move(m);
    }
    return fb;
}

ChainMap map_to_fiber(const ChainMap& f, const Fiber& fb, const ChainMap& g,
                      const std::map<int, IntMatrix>& h) {
    // fiber components in degree d: Y^{d-1} + X^d; send w to (h(w), g(w))
    ChainMap out;
    out.source = g.source;
    out.target = fb.fib;
    const FreeComplex& y = f.target;
    for (int d = g.source.lo(); d <= g.source.hi(); ++d) {
        int rs = g.source.rank(d), rt = fb.fib.rank(d);
        if (!rs || !rt) continue;
        IntMatrix m(rt, rs);
        auto ith = h.find(d);
        if (ith != h.end())
            for (int i = 0; i < ith->second.rows(); ++i)
                for (int j = 0; j < ith->second.cols(); ++j) m.at(i, j) = ith->second.at(i, j);
        IntMatrix gm = g.mat(d);
        for (int i = 0; i < gm.rows(); ++i)
            for (int j = 0; j < gm.cols(); ++j) m.at(y.rank(d - 1) + i, j) = gm.at(i, j);
        if (!m.is_zero()) out.mats[d] = std::move(m);
    }
    out.validate();
    return out;
}

bool is_quasi_iso(const ChainMap& f) { return is_exact(cone_complex(f)); }

}  // namespace dz
