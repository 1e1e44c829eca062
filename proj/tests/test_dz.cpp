#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dz/complex.hpp"
#include "dz/cut.hpp"

using namespace dz;
using intlin::FgAbGroup;
using intlin::IntMatrix;

namespace {

// [Z --m--> Z] in degrees n-1, n: a free model of Z/m placed in degree n
FreeComplex zmod_model(long long m, int n) {
    return FreeComplex::from_parts(n - 1, {1, 1}, {IntMatrix::from_rows({{m}})});
}

FreeComplex z_in_degree(int n, int rank = 1) { return FreeComplex::free_module(rank, n); }

FreeComplex random_complex(std::mt19937_64& rng, int max_rank = 3, int dlo = -2, int dhi = 2,
                           int entry = 3) {
    // random ranks, then a random differential projected to d.d = 0 by
    // building up from a random map's cone pieces: here we instead sample
    // matrices and repair: d_{i+1} is sampled inside ker(- . d_i)
    std::uniform_int_distribution<int> rk(0, max_rank), en(-entry, entry);
    std::vector<int> ranks;
    for (int d = dlo; d <= dhi; ++d) ranks.push_back(rk(rng));
    std::vector<IntMatrix> diffs;
    for (size_t k = 0; k + 1 < ranks.size(); ++k) {
        IntMatrix m(ranks[k + 1], ranks[k]);
        if (k == 0 || diffs.back().is_zero() || ranks[k] == 0) {
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) m.at(i, j) = en(rng);
        } else {
            // columns must kill the image of the previous differential:
            // pick from kernel of previous transpose composition
            IntMatrix prev = diffs.back();
            IntMatrix k0 = intlin::kernel_basis(prev.transpose()).transpose();
            // rows of k0 span maps Z^{ranks[k]} -> Z killing im(prev)
            for (int i = 0; i < m.rows(); ++i) {
                if (k0.rows() == 0) break;
                for (int r = 0; r < k0.rows(); ++r) {
                    int coef = en(rng);
                    if (!coef) continue;
                    for (int j = 0; j < m.cols(); ++j) m.at(i, j) += coef * k0.at(r, j);
                }
            }
        }
        diffs.push_back(std::move(m));
    }
    return FreeComplex::from_parts(dlo, std::move(ranks), std::move(diffs));
}

std::map<int, FgAbGroup> groups(const FreeComplex& x) { return cohomology_all(x); }

}  // namespace

TEST_CASE("cohomology: frozen examples") {
    FreeComplex m2 = zmod_model(2, 1);  // [Z -2-> Z] degrees 0,1
    CHECK(cohomology(m2, 0).is_zero());
    CHECK(cohomology(m2, 1) == FgAbGroup(0, {2}));

    CHECK(cohomology(z_in_degree(0), 0) == FgAbGroup::free(1));

    FreeComplex iso = FreeComplex::from_parts(0, {1, 1}, {IntMatrix::from_rows({{1}})});
    CHECK(cohomology(iso, 0).is_zero());
    CHECK(cohomology(iso, 1).is_zero());
}

TEST_CASE("shift") {
    FreeComplex z0 = z_in_degree(0);
    CHECK(shift(z0, 1).rank(-1) == 1);
    CHECK(shift(z0, 0) == z0);
    FreeComplex x = zmod_model(4, 0);
    CHECK(shift(shift(x, 1), -1) == x);
}

TEST_CASE("cone: frozen examples") {
    FreeComplex z0 = z_in_degree(0);
    // cone of identity is acyclic
    CHECK(is_exact(cone_complex(ChainMap::identity(z0))));
    // cone(0 -> Z) = Z
    ChainMap from_zero = ChainMap::zero(FreeComplex::zero(), z0);
    CHECK(groups(cone_complex(from_zero)) == groups(z0));
    // cone(x2 : Z -> Z) has H^0 = Z/2
    ChainMap two;
    two.source = two.target = z0;
    two.mats[0] = IntMatrix::from_rows({{2}});
    CHECK(cohomology(cone_complex(two), 0) == FgAbGroup(0, {2}));
}

TEST_CASE("cone: long exact sequence on random maps") {
    std::mt19937_64 rng(41);
    int done = 0;
    for (int iter = 0; iter < 200 && done < 60; ++iter) {
        FreeComplex x = random_complex(rng), y = random_complex(rng);
        auto maps = chain_map_basis(x, y);
        if (maps.empty()) continue;
        ChainMap f = maps[iter % maps.size()];
        ++done;
        Triangle t = cone(f);
        t.into_cone.validate();
        t.onto_shift.validate();
        // composite Y -> C -> X[1] is zero on the nose here
        auto comp = t.onto_shift.compose_after(t.into_cone);
        for (auto& [d, m] : comp.mats) CHECK(m.is_zero());
        // exactness of ... -> H^i X -> H^i Y -> H^i C -> H^{i+1} X -> ...
        // checked numerically via euler-characteristic style rank counting on
        // the cone of the cone inclusion: cone(Y -> C) must be q-iso to X[1]
        CHECK(groups(cone_complex(t.into_cone)) == groups(shift(x, 1)));
    }
    CHECK(done >= 40);
}

TEST_CASE("hom complex: frozen examples") {
    FreeComplex z0 = z_in_degree(0);
    CHECK(groups(hom_complex(z0, z0)) == groups(z0));
    // RHom(Z/2, Z) = Z/2 in degree 1 (Ext^1)
    auto h = groups(hom_complex(zmod_model(2, 0), z0));
    REQUIRE(h.size() == 1);
    CHECK(h.at(1) == FgAbGroup(0, {2}));
    // shift compatibility on cohomology
    std::mt19937_64 rng(7);
    for (int it = 0; it < 10; ++it) {
        FreeComplex x = random_complex(rng, 2), y = random_complex(rng, 2);
        int n = int(rng() % 3) - 1;
        CHECK(groups(hom_complex(x, shift(y, n))) == groups(shift(hom_complex(x, y), n)));
    }
}

TEST_CASE("tensor complex: frozen examples") {
    FreeComplex z0 = z_in_degree(0);
    std::mt19937_64 rng(11);
    FreeComplex x = random_complex(rng);
    CHECK(groups(tensor_complex(z0, x)) == groups(x));
    CHECK(is_exact(tensor_complex(zmod_model(2, 0), zmod_model(3, 0))));
    auto g = groups(tensor_complex(zmod_model(2, 0), zmod_model(2, 0)));
    CHECK(g.at(0) == FgAbGroup(0, {2}));
    CHECK(g.at(-1) == FgAbGroup(0, {2}));  // Tor_1(Z/2, Z/2)
    CHECK(g.size() == 2);
}

TEST_CASE("dual: frozen examples and biduality") {
    FreeComplex z0 = z_in_degree(0);
    CHECK(groups(dual_complex(z0)) == groups(z0));
    auto d = groups(dual_complex(zmod_model(2, 0)));
    REQUIRE(d.size() == 1);
    CHECK(d.at(1) == FgAbGroup(0, {2}));
    CHECK(groups(dual_complex(z_in_degree(3))) == groups(z_in_degree(-3)));
    std::mt19937_64 rng(13);
    for (int it = 0; it < 40; ++it) {
        FreeComplex x = random_complex(rng);
        CHECK(groups(dual_complex(dual_complex(x))) == groups(x));
    }
}

TEST_CASE("adjunction on cohomology") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 25; ++it) {
        FreeComplex x = random_complex(rng, 2, -1, 1), y = random_complex(rng, 2, -1, 1),
                    z = random_complex(rng, 2, -1, 1);
        FgAbGroup a = cohomology(minimize_only(hom_complex(tensor_complex(x, y), z)), 0);
        FgAbGroup b = cohomology(minimize_only(hom_complex(x, hom_complex(y, z))), 0);
        CHECK(a == b);
    }
}

TEST_CASE("standard truncation") {
    FreeComplex z0 = z_in_degree(0);
    CHECK(std_truncate_le(z0, 0).part == z0);
    CHECK(std_truncate_le(zmod_model(2, 1), 0).part.is_zero());
    // tau_ge(1) of [Z -2-> Z] is Z/2 in degree 1
    auto ge = std_truncate_ge(zmod_model(2, 1), 1);
    auto g = groups(ge.part);
    REQUIRE(g.size() == 1);
    CHECK(g.at(1) == FgAbGroup(0, {2}));
    // triangle: cohomology of cone(tau_le -> X) equals tau_ge(n+1)
    std::mt19937_64 rng(19);
    for (int it = 0; it < 40; ++it) {
        FreeComplex x = random_complex(rng);
        int n = int(rng() % 5) - 2;
        auto le = std_truncate_le(x, n);
        auto want = groups(std_truncate_ge(x, n + 1).part);
        CHECK(groups(cone_complex(le.incl)) == want);
        // cohomology agreement in the kept range
        auto hx = groups(x);
        for (auto& [d, gg] : groups(le.part)) {
            CHECK(d <= n);
            CHECK(hx.at(d) == gg);
        }
    }
}

TEST_CASE("quasi-abelian truncation: frozen examples") {
    FreeComplex x = zmod_model(2, 1);  // [Z -2-> Z] degrees 0,1
    // tau^{<= 1/2} keeps everything: Im d^0 saturates to the full lattice
    auto a = qa_truncate_le(x, 1);
    CHECK(a.part == x);
    // tau^{<= 0} kills it: Ker d^0 = 0
    CHECK(qa_truncate_le(x, 0).part.is_zero());
    // tau^{>= 1/2} of Z[0] is zero: Coim of the zero map out of degree 0
    CHECK(qa_truncate_ge(z_in_degree(0), 1).part.is_zero());
    // integer cuts agree with the standard lattice truncation
    std::mt19937_64 rng(23);
    for (int it = 0; it < 30; ++it) {
        FreeComplex y = random_complex(rng);
        int n = int(rng() % 5) - 2;
        CHECK(qa_truncate_le(y, 2 * n).part == std_truncate_le(y, n).part);
    }
}

TEST_CASE("is_quasi_iso") {
    FreeComplex z0 = z_in_degree(0);
    CHECK(is_quasi_iso(ChainMap::identity(z0)));
    ChainMap two;
    two.source = two.target = z0;
    two.mats[0] = IntMatrix::from_rows({{2}});
    CHECK_FALSE(is_quasi_iso(two));
    // free model of Z/2 in degree 1 vs presentation: comparison map
    FreeComplex m = zmod_model(2, 1);
    // map m -> m multiplying degree-1 part by odd unit stays a q-iso
    ChainMap f;
    f.source = f.target = m;
    f.mats[0] = IntMatrix::from_rows({{3}});
    f.mats[1] = IntMatrix::from_rows({{3}});
    f.validate();
    CHECK(is_quasi_iso(f));
}

TEST_CASE("minimize: homotopy equivalence") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 60; ++it) {
        FreeComplex x = random_complex(rng, 4);
        Reduction r = minimize(x);
        CHECK(groups(r.reduced) == groups(x));
        CHECK(is_quasi_iso(r.incl));
        auto pi = r.proj.compose_after(r.incl);
        // proj . incl = id on the reduced complex
        for (int d = r.reduced.lo(); d <= r.reduced.hi(); ++d) {
            if (!r.reduced.rank(d)) continue;
            CHECK(pi.mat(d) == IntMatrix::identity(r.reduced.rank(d)));
        }
        // nothing unit-sized left
        for (int d = r.reduced.lo(); d < r.reduced.hi(); ++d) {
            IntMatrix m = r.reduced.diff(d);
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) CHECK(abs(m.at(i, j)) != 1);
        }
    }
}

TEST_CASE("null homotopy solver") {
    FreeComplex z0 = z_in_degree(0);
    ChainMap two;
    two.source = two.target = z0;
    two.mats[0] = IntMatrix::from_rows({{2}});
    CHECK_FALSE(is_null_homotopic(two));
    // the identity of an acyclic complex is null-homotopic
    FreeComplex ac = FreeComplex::from_parts(0, {1, 1}, {IntMatrix::from_rows({{1}})});
    CHECK(is_null_homotopic(ChainMap::identity(ac)));
    // composite Y -> cone(f) -> X[1] for random f
    std::mt19937_64 rng(31);
    int done = 0;
    for (int it = 0; it < 60 && done < 15; ++it) {
        FreeComplex x = random_complex(rng, 2), y = random_complex(rng, 2);
        auto maps = chain_map_basis(x, y);
        if (maps.empty()) continue;
        ++done;
        Triangle t = cone(maps[0]);
        CHECK(is_null_homotopic(t.onto_shift.compose_after(t.into_cone)));
    }
}

TEST_CASE("cut canonicalization") {
    CutParam c(intlin::Rational(-1, 4));
    CHECK(c.canon_le() == HalfInt{-1});   // -1/2
    CHECK(c.canon_ge() == HalfInt{0});    // 0
    CHECK(c.canon_lt() == HalfInt{-1});
    CHECK(c.canon_gt() == HalfInt{0});
    CutParam h(intlin::Rational(1, 2));
    CHECK(h.canon_le() == HalfInt{1});
    CHECK(h.canon_ge() == HalfInt{1});
    CHECK(h.canon_lt() == HalfInt{0});
    CHECK(h.canon_gt() == HalfInt{2});
    CHECK(CutParam::parse("-3/2").c == intlin::Rational(-3, 2));
    CHECK(CutParam::parse("2").c == 2);
    CHECK_THROWS_AS(CutParam::parse("x"), std::invalid_argument);
    CHECK(HalfInt{3}.ceil_int() == 2);
    CHECK(HalfInt{3}.floor_int() == 1);
    CHECK(HalfInt{-3}.ceil_int() == -1);
    CHECK(HalfInt{-3}.floor_int() == -2);
}
