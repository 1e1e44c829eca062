#include "tmod/tmod.hpp"

#include <stdexcept>

#include "intlin/abelian.hpp"

namespace tmod {

using dz::Fiber;
using dz::Reduction;
using dz::Triangle;
using intlin::Codim;
using intlin::IntMatrix;
using intlin::Rational;

bool member_half(const std::map<int, FgAbGroup>& h, HalfInt s, Side side) {
    if (side == Side::Le) {
        if (s.is_integer()) {
            long long n = s.integer();
            for (const auto& [i, g] : h)
                if (i > n && !g.is_zero()) return false;
            return true;
        }
        long long n = (s.twice + 1) / 2;  // s = n - 1/2
        for (const auto& [i, g] : h) {
            if (i > n && !g.is_zero()) return false;
            if (i == n && !g.is_torsion()) return false;
        }
        return true;
    }
    if (!s.is_integer()) {
        long long n = (s.twice + 1) / 2;
        for (const auto& [i, g] : h)
            if (i < n && !g.is_zero()) return false;
        return true;
    }
    long long n = s.integer();
    for (const auto& [i, g] : h) {
        if (i < n && !g.is_zero()) return false;
        if (i == n && !g.is_torsion_free()) return false;
    }
    return true;
}

namespace {

// codimension route for the <= side: codim(H^i) >= 2(i - c)
bool member_codim_le(const std::map<int, FgAbGroup>& h, const Rational& c) {
    for (const auto& [i, g] : h) {
        Codim cd = intlin::codim_support(g);
        if (!cd.at_least(Rational(2) * (Rational(i) - c))) return false;
    }
    return true;
}

// local cohomology route for the >= side: H^i RGamma_Z X = 0 for all closed Z
// and i < c + codim(Z)/2; over Spec Z this means H^i(X) = 0 for i < c and,
// for every prime, vanishing of H^i[X -> X[1/p]] for i < c + 1/2; quantifying
// over all p turns the latter into rank H^{i-1} = 0 and torsion H^i = 0.
bool member_local_ge(const std::map<int, FgAbGroup>& h, const Rational& c) {
    for (const auto& [i, g] : h) {
        if (g.is_zero()) continue;
        if (Rational(i) < c) return false;
        if (Rational(i + 1) < c + Rational(1, 2) && g.rank > 0) return false;
        if (Rational(i) < c + Rational(1, 2) && !g.torsion.empty()) return false;
    }
    return true;
}

}  // namespace

bool member(const FreeComplex& x, const CutParam& c, Side side) {
    auto h = dz::cohomology_all(x);
    HalfInt s = (side == Side::Le) ? c.canon_le() : c.canon_ge();
    bool a = member_half(h, s, side);
    bool b = (side == Side::Le) ? member_codim_le(h, c.c) : member_local_ge(h, c.c);
    if (a != b) throw std::logic_error("tmod::member: route disagreement (bug)");
    return a;
}

bool member_strict(const FreeComplex& x, const CutParam& c, Side side) {
    auto h = dz::cohomology_all(x);
    HalfInt s = (side == Side::Le) ? c.canon_lt() : c.canon_gt();
    return member_half(h, s, side);
}

std::optional<HalfInt> le_threshold(const std::map<int, FgAbGroup>& h) {
    std::optional<HalfInt> t;
    for (const auto& [i, g] : h) {
        if (g.is_zero()) continue;
        HalfInt s = g.rank > 0 ? HalfInt::whole(i) : HalfInt{2 * i - 1};
        if (!t || s > *t) t = s;
    }
    return t;
}

std::optional<HalfInt> ge_threshold(const std::map<int, FgAbGroup>& h) {
    for (const auto& [i, g] : h) {
        if (g.is_zero()) continue;
        return g.is_torsion_free() ? HalfInt::whole(i) : HalfInt{2 * i - 1};
    }
    return std::nullopt;
}

std::optional<HalfInt> std_le_threshold(const std::map<int, FgAbGroup>& h) {
    std::optional<HalfInt> t;
    for (const auto& [i, g] : h)
        if (!g.is_zero()) t = HalfInt::whole(i);
    return t;
}

std::optional<HalfInt> std_ge_threshold(const std::map<int, FgAbGroup>& h) {
    for (const auto& [i, g] : h)
        if (!g.is_zero()) return HalfInt::whole(i);
    return std::nullopt;
}

namespace {

// triangle from an explicit inclusion-like map lower0 -> x; minimizes the
// lower part and takes the cone for the upper part
TruncTriangle assemble(const ChainMap& lower_to_x_raw, const FreeComplex& x) {
    Reduction red = dz::minimize(lower_to_x_raw.source);
    TruncTriangle t;
    t.lower = red.reduced;
    t.lower_to_x = lower_to_x_raw.compose_after(red.incl);
    Triangle tri = dz::cone(t.lower_to_x);
    Reduction up = dz::minimize(tri.cone);
    t.upper = up.reduced;
    t.x_to_upper = up.proj.compose_after(tri.into_cone);
    t.upper_to_shift = tri.onto_shift.compose_after(up.incl);
    return t;
}

// lower part of the split at half-integer boundary b, as a map into x:
// at b = n the standard tau_le; at b = n - 1/2 the fiber of
// tau_le(n) -> (H^n / torsion)[-n]
ChainMap lower_map_at(const FreeComplex& x, HalfInt b) {
    if (b.is_integer()) return dz::std_truncate_le(x, int(b.integer())).incl;
    long long n = (b.twice + 1) / 2;
    dz::TruncLe le = dz::std_truncate_le(x, int(n));
    const FreeComplex& t = le.part;
    // free part of H^n(t): quotient of the kernel lattice (= top degree of t)
    // by the saturation of the image of d^{n-1}
    int k = t.rank(int(n));
    if (k == 0) return le.incl;
    IntMatrix sat = intlin::image_saturation_basis(t.diff(int(n) - 1));
    IntMatrix q = intlin::saturation_quotient(sat, k);
    if (q.rows() == 0) return le.incl;  // H^n already torsion
    ChainMap phi;
    phi.source = t;
    phi.target = FreeComplex::free_module(q.rows(), int(n));
    phi.mats[int(n)] = q;
    phi.validate();
    Fiber fb = dz::fiber(phi);
    return le.incl.compose_after(fb.to_source);
}

}  // namespace

TruncTriangle p_truncate(const FreeComplex& x, const CutParam& c, Flavor flavor) {
    HalfInt b = (flavor == Flavor::LeGt) ? c.canon_le() : HalfInt{c.canon_ge().twice - 1};
    return assemble(lower_map_at(x, b), x);
}

TruncTriangle torsion_pair_truncate(const FreeComplex& x, HalfInt boundary) {
    if (boundary.is_integer())
        return assemble(dz::std_truncate_le(x, int(boundary.integer())).incl, x);
    // subcomplex route: [ ... -> X^{n-1} -> sat(im d^{n-1}) ], whose top
    // cohomology is exactly the torsion of H^n
    long long n = (boundary.twice + 1) / 2;
    if (x.is_zero() || n > x.hi()) return assemble(ChainMap::identity(x), x);
    if (n <= x.lo()) {
        // only the torsion of H^lo survives at n = lo; below that nothing
        if (n < x.lo()) return assemble(ChainMap::zero(FreeComplex::zero(), x), x);
    }
    IntMatrix sat = intlin::image_saturation_basis(x.diff(int(n) - 1));
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int d = x.lo(); d < int(n); ++d) ranks.push_back(x.rank(d));
    ranks.push_back(sat.cols());
    for (int d = x.lo(); d + 1 < int(n); ++d) diffs.push_back(x.diff(d));
    if (int(n) > x.lo()) diffs.push_back(intlin::solve_must(sat, x.diff(int(n) - 1)));
    ChainMap incl;
    incl.source = FreeComplex::from_parts(x.lo(), std::move(ranks), std::move(diffs));
    incl.target = x;
    for (int d = x.lo(); d < int(n); ++d)
        if (x.rank(d)) incl.mats[d] = IntMatrix::identity(x.rank(d));
    if (sat.cols()) incl.mats[int(n)] = sat;
    incl.validate();
    return assemble(incl, x);
}

bool check_triangle(const TruncTriangle& t, const FreeComplex& x) {
    ChainMap comp = t.x_to_upper.compose_after(t.lower_to_x);
    if (!dz::is_null_homotopic(comp)) return false;
    return dz::cohomology_all(dz::cone_complex(t.lower_to_x)) == dz::cohomology_all(t.upper);
}

}  // namespace tmod
