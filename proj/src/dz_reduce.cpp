#include <map>
#include <set>

#include "dz/complex.hpp"

namespace dz {

namespace {

// Sparse Gauss elimination of +-1 entries across the whole complex. Each
// elimination removes one generator in adjacent degrees and corrects the
// remaining entries of that one differential; the neighbouring differentials
// only lose the corresponding row/column (their corrections vanish since
// d.d = 0). Optionally tracks the homotopy equivalence with the original.
struct Reducer {
    int lo = 0;
    int nd = 0;  // number of degrees
    std::vector<std::vector<char>> alive;
    // diff k: degree lo+k -> lo+k+1, sparse in both orientations
    std::vector<std::vector<std::map<int, Int>>> bycol;  // [k][c] = {r: v}
    std::vector<std::vector<std::map<int, Int>>> byrow;  // [k][r] = {c: v}
    bool track;
    std::vector<IntMatrix> incl, proj;  // per degree: original <- current, original -> current

    explicit Reducer(const FreeComplex& x, bool track_maps) : track(track_maps) {
        lo = x.lo();
        nd = x.is_zero() ? 0 : x.hi() - x.lo() + 1;
        alive.resize(nd);
        bycol.resize(std::max(nd - 1, 0));
        byrow.resize(std::max(nd - 1, 0));
        for (int k = 0; k < nd; ++k) alive[k].assign(x.rank(lo + k), 1);
        for (int k = 0; k + 1 < nd; ++k) {
            IntMatrix d = x.diff(lo + k);
            bycol[k].resize(d.cols());
            byrow[k].resize(d.rows());
            for (int i = 0; i < d.rows(); ++i)
                for (int j = 0; j < d.cols(); ++j)
                    if (d.at(i, j) != 0) {
                        bycol[k][j][i] = d.at(i, j);
                        byrow[k][i][j] = d.at(i, j);
                    }
        }
        if (track) {
            for (int k = 0; k < nd; ++k) {
                incl.push_back(IntMatrix::identity(int(alive[k].size())));
                proj.push_back(IntMatrix::identity(int(alive[k].size())));
            }
        }
    }

    void set_entry(int k, int r, int c, const Int& v) {
        if (v == 0) {
            byrow[k][r].erase(c);
            bycol[k][c].erase(r);
        } else {
            byrow[k][r][c] = v;
            bycol[k][c][r] = v;
        }
    }

    // pick a unit entry minimizing fill, deterministic tie-break
    bool find_pivot(int& pk, int& pr, int& pc) const {
        bool found = false;
        long long best = 0;
        for (int k = 0; k + 1 < nd; ++k)
            for (int r = 0; r < int(byrow[k].size()); ++r)
                for (const auto& [c, v] : byrow[k][r]) {
                    if (v != 1 && v != -1) continue;
                    long long fill =
                        (long long)(byrow[k][r].size() - 1) * (long long)(bycol[k][c].size() - 1);
                    if (!found || fill < best) {
                        found = true;
                        best = fill;
                        pk = k;
                        pr = r;
                        pc = c;
                        if (best == 0) return true;
                    }
                }
        return found;
    }

    void eliminate(int k, int r, int c) {
        Int phi = byrow[k][r].at(c);  // +-1
        // corrections within diff k
        std::vector<std::pair<int, Int>> colent(bycol[k][c].begin(), bycol[k][c].end());
        std::vector<std::pair<int, Int>> rowent(byrow[k][r].begin(), byrow[k][r].end());
        for (const auto& [r2, vr] : colent) {
            if (r2 == r) continue;
            for (const auto& [c2, vc] : rowent) {
                if (c2 == c) continue;
                Int cur = 0;
                auto it = byrow[k][r2].find(c2);
                if (it != byrow[k][r2].end()) cur = it->second;
                set_entry(k, r2, c2, cur - vr * phi * vc);
            }
        }
        if (track) {
            // column ops on degree k (source side): a_{c2} -= q a_c with
            // q = phi^{-1} d[r][c2]; row ops on degree k+1 (target side):
            // b_r gains q b_{r2} for each cleared d[r2][c] = q phi
            for (const auto& [c2, vc] : rowent) {
                if (c2 == c) continue;
                Int q = phi * vc;
                for (int i = 0; i < incl[k].rows(); ++i) incl[k].at(i, c2) -= q * incl[k].at(i, c);
                for (int j = 0; j < proj[k].cols(); ++j) proj[k].at(c, j) += q * proj[k].at(c2, j);
            }
            for (const auto& [r2, vr] : colent) {
                if (r2 == r) continue;
                Int q = phi * vr;
                for (int i = 0; i < incl[k + 1].rows(); ++i)
                    incl[k + 1].at(i, r) += q * incl[k + 1].at(i, r2);
                for (int j = 0; j < proj[k + 1].cols(); ++j)
                    proj[k + 1].at(r2, j) -= q * proj[k + 1].at(r, j);
            }
        }
        // drop the pair; adjacent differentials just lose the line
        for (const auto& [r2, v] : colent) byrow[k][r2].erase(c);
        bycol[k][c].clear();
        for (const auto& [c2, v] : rowent) bycol[k][c2].erase(r);
        byrow[k][r].clear();
        alive[k][c] = 0;
        alive[k + 1][r] = 0;
        if (k >= 1) {
            for (const auto& [cc, v] : byrow[k - 1][c]) bycol[k - 1][cc].erase(c);
            byrow[k - 1][c].clear();
        }
        if (k + 2 < nd) {
            for (const auto& [rr, v] : bycol[k + 1][r]) byrow[k + 1][rr].erase(r);
            bycol[k + 1][r].clear();
        }
    }

    void run() {
        int pk, pr, pc;
        while (find_pivot(pk, pr, pc)) eliminate(pk, pr, pc);
    }

    Reduction result(const FreeComplex& orig) {
        std::vector<std::vector<int>> keep(nd);
        std::vector<int> ranks;
        for (int k = 0; k < nd; ++k) {
            for (int i = 0; i < int(alive[k].size()); ++i)
                if (alive[k][i]) keep[k].push_back(i);
            ranks.push_back(int(keep[k].size()));
        }
        std::vector<IntMatrix> diffs;
        for (int k = 0; k + 1 < nd; ++k) {
            IntMatrix m(ranks[k + 1], ranks[k]);
            for (int j = 0; j < ranks[k]; ++j) {
                for (const auto& [r, v] : bycol[k][keep[k][j]]) {
                    int i = int(std::lower_bound(keep[k + 1].begin(), keep[k + 1].end(), r) -
                                keep[k + 1].begin());
                    m.at(i, j) = v;
                }
            }
            diffs.push_back(std::move(m));
        }
        Reduction red;
        if (nd == 0)
            red.reduced = FreeComplex::zero();
        else
            red.reduced = FreeComplex::from_parts(lo, ranks, diffs);
        if (track) {
            red.incl.source = red.reduced;
            red.incl.target = orig;
            red.proj.source = orig;
            red.proj.target = red.reduced;
            for (int k = 0; k < nd; ++k) {
                if (keep[k].empty() || orig.rank(lo + k) == 0) continue;
                IntMatrix mi = incl[k].select_cols(keep[k]);
                if (!mi.is_zero()) red.incl.mats[lo + k] = std::move(mi);
                IntMatrix mp = proj[k].select_rows(keep[k]);
                if (!mp.is_zero()) red.proj.mats[lo + k] = std::move(mp);
            }
        }
        return red;
    }
};

}  // namespace

Reduction minimize(const FreeComplex& x) {
    Reducer r(x, true);
    r.run();
    Reduction red = r.result(x);
    red.incl.validate();
    red.proj.validate();
    return red;
}

FreeComplex minimize_only(const FreeComplex& x) {
    Reducer r(x, false);
    r.run();
    return r.result(x).reduced;
}

}  // namespace dz
