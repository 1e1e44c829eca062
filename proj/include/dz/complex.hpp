#pragma once

#include <map>
#include <optional>
#include <vector>

#include "intlin/abelian.hpp"

namespace dz {

using intlin::FgAbGroup;
using intlin::Int;
using intlin::IntMatrix;
using intlin::Rational;

/// Bounded complex of finite-rank free abelian groups. Degree i carries
/// Z^{rank(i)}; diff(i) maps degree i to degree i+1 and acts on column
/// vectors. The zero complex has an empty degree range.
class FreeComplex {
public:
    FreeComplex() = default;
    static FreeComplex zero() { return FreeComplex(); }
    /// Z^rank concentrated in one degree.
    static FreeComplex free_module(int rank, int degree);
    static FreeComplex from_parts(int lo, std::vector<int> ranks, std::vector<IntMatrix> diffs);

    bool is_zero() const { return ranks_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return ranks_.empty() ? lo_ - 1 : lo_ + int(ranks_.size()) - 1; }
    int rank(int degree) const {
        int k = degree - lo_;
        return (k >= 0 && k < int(ranks_.size())) ? ranks_[k] : 0;
    }
    int total_rank() const;
    /// Differential out of `degree`, shaped rank(degree+1) x rank(degree).
    IntMatrix diff(int degree) const;

    void validate() const;  // shapes match and d.d = 0

    bool operator==(const FreeComplex& o) const;

private:
    int lo_ = 0;
    std::vector<int> ranks_;
    std::vector<IntMatrix> diffs_;  // diffs_[k] : degree lo_+k -> lo_+k+1

    void trim();
    friend class ComplexBuilder;
};

/// Incremental builder: declare ranks, then set differentials.
class ComplexBuilder {
public:
    void set_rank(int degree, int rank);
    void add_entry(int degree, int row, int col, const Int& v);  // into diff(degree)
    void set_diff(int degree, IntMatrix m);
    FreeComplex build() &&;

private:
    std::map<int, int> ranks_;
    std::map<int, std::map<std::pair<int, int>, Int>> entries_;
    std::map<int, IntMatrix> whole_;
};

/// Degreewise map of complexes commuting with the differentials.
struct ChainMap {
    FreeComplex source, target;
    std::map<int, IntMatrix> mats;  // missing degree = zero map

    IntMatrix mat(int degree) const;
    void validate() const;

    static ChainMap zero(FreeComplex src, FreeComplex tgt);
    static ChainMap identity(const FreeComplex& x);

    ChainMap compose_after(const ChainMap& first) const;  // this . first
    ChainMap shifted(int n) const;
};

// -- basic functors ---------------------------------------------------------

FgAbGroup cohomology(const FreeComplex& x, int degree);
std::map<int, FgAbGroup> cohomology_all(const FreeComplex& x);
bool is_exact(const FreeComplex& x);

/// X[n]: degree i component X^{i+n}, differential scaled by (-1)^n.
FreeComplex shift(const FreeComplex& x, int n);

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);

struct Triangle {
    FreeComplex cone;     // C(f) for f : X -> Y
    ChainMap into_cone;   // Y -> C
    ChainMap onto_shift;  // C -> X[1]
};

/// Mapping cone C^i = Y^i + X^{i+1}, d(y,x) = (dy + fx, -dx).
Triangle cone(const ChainMap& f);
FreeComplex cone_complex(const ChainMap& f);

struct Fiber {
    FreeComplex fib;  // cone(f)[-1], components Y^{i-1} + X^i
    ChainMap to_source;  // fib -> X
};
Fiber fiber(const ChainMap& f);

/// Map W -> fiber(f) from g : W -> X plus h with d_Y h + h d_W = -(f.g).
ChainMap map_to_fiber(const ChainMap& f, const Fiber& fb, const ChainMap& g,
                      const std::map<int, IntMatrix>& h);

/// Hom complex: degree n part is the sum over i of Hom(X^i, Y^{i+n});
/// H^0 is Hom in the derived category.
FreeComplex hom_complex(const FreeComplex& x, const FreeComplex& y);

/// Total complex of the double tensor with Koszul signs.
FreeComplex tensor_complex(const FreeComplex& x, const FreeComplex& y);

/// RHom(X, Z[0]); free inputs make this the derived dual.
FreeComplex dual_complex(const FreeComplex& x);

bool is_quasi_iso(const ChainMap& f);

/// Chain maps X -> Y modulo nothing: a lattice basis of cycle maps, plus
/// helpers to pick one or test null-homotopy.
std::vector<ChainMap> chain_map_basis(const FreeComplex& x, const FreeComplex& y);
std::optional<std::map<int, IntMatrix>> null_homotopy(const ChainMap& f);
bool is_null_homotopic(const ChainMap& f);

// -- truncation -------------------------------------------------------------

struct TruncLe {
    FreeComplex part;
    ChainMap incl;  // part -> X
};
struct TruncGe {
    FreeComplex part;
    ChainMap proj;  // X -> part
};

/// Standard t-structure truncations of D(Ab). tau_le keeps cohomology <= n
/// (subcomplex with ker d^n in degree n); tau_ge keeps >= n.
TruncLe std_truncate_le(const FreeComplex& x, int n);
TruncGe std_truncate_ge(const FreeComplex& x, int n);

/// Quasi-abelian truncations on lattice complexes (torsion-free f.g. groups):
/// half steps use the saturated image / coimage. s is twice the cut, so
/// s = 2n for tau^{<=n} and s = 2n+1 for tau^{<=n+1/2}.
TruncLe qa_truncate_le(const FreeComplex& x, long long twice_s);
TruncGe qa_truncate_ge(const FreeComplex& x, long long twice_s);

// -- reduction --------------------------------------------------------------

struct Reduction {
    FreeComplex reduced;
    ChainMap incl;  // reduced -> x, a quasi-isomorphism
    ChainMap proj;  // x -> reduced, proj . incl = id
};

/// Gauss-eliminate +-1 entries of the differentials; the result is chain
/// homotopy equivalent with no unit entries left.
Reduction minimize(const FreeComplex& x);
FreeComplex minimize_only(const FreeComplex& x);

}  // namespace dz
