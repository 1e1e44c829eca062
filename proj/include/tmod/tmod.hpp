#pragma once

#include "dz/complex.hpp"
#include "dz/cut.hpp"

namespace tmod {

using dz::ChainMap;
using dz::CutParam;
using dz::FreeComplex;
using dz::HalfInt;
using intlin::FgAbGroup;

enum class Side { Le, Ge };
enum class Flavor { LeGt, LtGe };

/// Membership in the self-dual t-structure pD^{<=c} / pD^{>=c} on D^b(Z).
/// Computed from the torsion-pair tables and cross-checked internally against
/// the codimension inequality (<= side) and the local-cohomology criterion
/// (>= side); a disagreement throws.
bool member(const FreeComplex& x, const CutParam& c, Side side);
bool member_strict(const FreeComplex& x, const CutParam& c, Side side);  // pD^{<c} / pD^{>c}

/// Same tests on precomputed cohomology, at a canonical half-integer cut.
bool member_half(const std::map<int, FgAbGroup>& h, HalfInt s, Side side);

/// Edges of the membership window. member(x, s, Le) holds iff s >= *le, and
/// member(x, s, Ge) iff s <= *ge; nullopt for the zero object (always member).
std::optional<HalfInt> le_threshold(const std::map<int, FgAbGroup>& h);
std::optional<HalfInt> ge_threshold(const std::map<int, FgAbGroup>& h);
/// Standard t-structure edges (max / min nonvanishing degree).
std::optional<HalfInt> std_le_threshold(const std::map<int, FgAbGroup>& h);
std::optional<HalfInt> std_ge_threshold(const std::map<int, FgAbGroup>& h);

/// Truncation triangle lower -> X -> upper -> lower[1].
struct TruncTriangle {
    FreeComplex lower, upper;
    ChainMap lower_to_x;
    ChainMap x_to_upper;
    ChainMap upper_to_shift;  // upper -> lower[1]
};

/// Splits X at the half-integer boundary b: lower in pD^{<=b}, upper in
/// pD^{>=b+1/2}. Flavor picks b from the cut: (<=c, >c) uses canon_le(c),
/// (<c, >=c) uses canon_ge(c) - 1/2.
TruncTriangle p_truncate(const FreeComplex& x, const CutParam& c, Flavor flavor);

/// The same triangle built through the torsion pair (Tor, TF): the lower part
/// at a half-step is the subcomplex carved out by the saturation of the image
/// lattice. Agrees with p_truncate up to quasi-isomorphism.
TruncTriangle torsion_pair_truncate(const FreeComplex& x, HalfInt boundary);

/// Triangle sanity: composite lower -> X -> upper is null-homotopic and
/// cone(lower -> X) has the cohomology of upper.
bool check_triangle(const TruncTriangle& t, const FreeComplex& x);

}  // namespace tmod
