#include "intlin/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace intlin {

FgAbGroup FgAbGroup::cyclic(const Int& n) {
    if (n == 0) return free(1);
    Int m = abs(n);
    if (m == 1) return zero();
    return FgAbGroup(0, {m});
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& o) const {
    std::vector<Int> d;
    d.insert(d.end(), torsion.begin(), torsion.end());
    d.insert(d.end(), o.torsion.begin(), o.torsion.end());
    FgAbGroup g = group_from_presentation(IntMatrix::diagonal(d));
    g.rank += rank + o.rank;
    return g;
}

std::string FgAbGroup::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank == 1) {
        os << "Z";
        first = false;
    } else if (rank > 1) {
        os << "Z^" << rank;
        first = false;
    }
    for (const auto& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbGroup group_from_presentation(const IntMatrix& relations) {
    SmithForm s = smith_normal_form(relations);
    FgAbGroup g;
    g.rank = relations.rows() - s.rank;
    for (int i = 0; i < s.rank; ++i) {
        Int d = s.D.at(i, i);
        if (d >= 2) g.torsion.push_back(d);
    }
    return g;
}

Codim codim_support(const FgAbGroup& m) {
    if (m.is_zero()) return Codim::inf();
    return Codim::of(m.rank > 0 ? 0 : 1);
}

std::pair<FgAbGroup, int> torsion_split(const FgAbGroup& m) {
    return {FgAbGroup(0, m.torsion), m.rank};
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

LocalCohomology local_cohomology_at_prime(const FgAbGroup& m, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("local_cohomology_at_prime: p must be prime");
    LocalCohomology lc;
    lc.h1_nonzero = m.rank > 0;
    std::vector<Int> pp;
    for (const auto& d : m.torsion) {
        Int q = 1, r = d;
        while (r % p == 0) {
            q *= p;
            r /= p;
        }
        if (q >= 2) pp.push_back(q);
    }
    lc.h0 = FgAbGroup(0, pp);  // p-parts of a divisibility chain stay a chain
    return lc;
}

}  // namespace intlin
