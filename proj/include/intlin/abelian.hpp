#pragma once

#include <string>
#include <utility>
#include <vector>

#include "intlin/snf.hpp"

namespace intlin {

/// Codimension of a support inside Spec Z: 0, 1 or infinity (zero module).
struct Codim {
    bool infinite = false;
    int value = 0;  // meaningful only when !infinite

    static Codim inf() { return Codim{true, 0}; }
    static Codim of(int v) { return Codim{false, v}; }

    bool operator==(const Codim& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    /// Exact comparison codim >= 2*(i - c) with rational right-hand side.
    bool at_least(const Rational& bound) const {
        return infinite || Rational(value) >= bound;
    }
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

/// Finitely generated abelian group in canonical form: free rank plus
/// invariant factors d_1 | d_2 | ... | d_k, each >= 2. Canonical forms are
/// the equality notion for groups everywhere in this project.
struct FgAbGroup {
    int rank = 0;
    std::vector<Int> torsion;

    FgAbGroup() = default;
    FgAbGroup(int r, std::vector<Int> t) : rank(r), torsion(std::move(t)) {}

    static FgAbGroup zero() { return FgAbGroup(); }
    static FgAbGroup free(int r) { return FgAbGroup(r, {}); }
    static FgAbGroup cyclic(const Int& n);  // Z/n (n >= 2), or Z for n = 0

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool is_torsion() const { return rank == 0; }
    bool is_torsion_free() const { return torsion.empty(); }

    bool operator==(const FgAbGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

    FgAbGroup direct_sum(const FgAbGroup& o) const;
    std::string str() const;
};

/// coker(relations : Z^cols -> Z^rows) in canonical form.
FgAbGroup group_from_presentation(const IntMatrix& relations);

/// codim of the support over Spec Z: 0 if rank > 0, 1 if nonzero torsion
/// group, +inf for the zero group.
Codim codim_support(const FgAbGroup& m);

/// (torsion subgroup, free rank); M is their direct sum.
std::pair<FgAbGroup, int> torsion_split(const FgAbGroup& m);

struct LocalCohomology {
    FgAbGroup h0;          // p-primary torsion of M
    bool h1_nonzero = false;  // coker(M -> M[1/p]) != 0, i.e. rank(M) > 0
};

/// RGamma_{V(p)} M = [M -> M[1/p]]; rejects non-prime p.
LocalCohomology local_cohomology_at_prime(const FgAbGroup& m, const Int& p);

bool is_prime(const Int& p);

}  // namespace intlin
