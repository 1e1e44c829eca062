#!/usr/bin/env python3
"""Build a small simplicial triangulation of RP^3 and print its facet list.

Construction: barycentric subdivision of the boundary of the 4-dimensional
cross-polytope, quotient by the antipodal map (free, simplicial on the
subdivision), then greedy link-condition edge contractions to shrink it.
The result is verified (pseudomanifold, vertex links are 2-spheres,
H_* = Z, Z/2, 0, Z) before printing.
"""

import itertools
import sys
from fractions import Fraction


# ---------- simplicial complex helpers (facet-set representation) ----------

def faces_of(simplex):
    s = tuple(sorted(simplex))
    out = set()
    for k in range(1, len(s) + 1):
        out.update(itertools.combinations(s, k))
    return out


def all_faces(facets):
    out = set()
    for f in facets:
        out.update(faces_of(f))
    return out


def f_vector(facets, dim):
    fv = [0] * (dim + 1)
    for s in all_faces(facets):
        fv[len(s) - 1] += 1
    return fv


def link(facets, face):
    face = frozenset(face)
    lk = set()
    for f in facets:
        fs = frozenset(f)
        if face <= fs:
            lk.add(tuple(sorted(fs - face)))
    return lk


def closure(simplices):
    out = set()
    for s in simplices:
        out.update(faces_of(s))
    return out


def is_pseudomanifold(facets, dim):
    # every (dim-1)-face in exactly two facets
    count = {}
    for f in facets:
        for r in itertools.combinations(sorted(f), dim):
            count[r] = count.get(r, 0) + 1
    return all(v == 2 for v in count.values())


def is_two_sphere(tri_facets):
    """tri_facets: set of triangles (2-simplices). Check S^2 combinatorially:
    pseudomanifold, connected, Euler characteristic 2, vertex links cycles."""
    if not tri_facets:
        return False
    if not is_pseudomanifold(tri_facets, 2):
        return False
    fv = f_vector(tri_facets, 2)
    if fv[0] - fv[1] + fv[2] != 2:
        return False
    # connectivity of the facet adjacency graph
    tris = list(tri_facets)
    edge_to = {}
    for i, t in enumerate(tris):
        for e in itertools.combinations(sorted(t), 2):
            edge_to.setdefault(e, []).append(i)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for e in itertools.combinations(sorted(tris[i]), 2):
            for j in edge_to[e]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
    return len(seen) == len(tris)


# ---------- integer homology via Smith normal form ----------

def smith_diagonal(mat, rows, cols):
    """Return the diagonal of the Smith normal form of a sparse matrix given
    as dict {(i,j): value}. Plain fraction-free elimination; fine at our sizes."""
    a = {k: v for k, v in mat.items() if v != 0}
    rowidx = {}
    colidx = {}
    for (i, j), v in a.items():
        rowidx.setdefault(i, set()).add(j)
        colidx.setdefault(j, set()).add(i)

    def entry(i, j):
        return a.get((i, j), 0)

    def setent(i, j, v):
        if v == 0:
            if (i, j) in a:
                del a[(i, j)]
                rowidx[i].discard(j)
                colidx[j].discard(i)
        else:
            if (i, j) not in a:
                rowidx.setdefault(i, set()).add(j)
                colidx.setdefault(j, set()).add(i)
            a[(i, j)] = v

    diag = []
    while a:
        # pick entry of smallest absolute value (prefer units)
        (pi, pj) = min(a, key=lambda k: (abs(a[k]), k))
        while True:
            # reduce column then row
            changed = False
            for i in list(colidx.get(pj, ())):
                if i == pi:
                    continue
                q = entry(i, pj) // entry(pi, pj)
                if q:
                    for j in list(rowidx[pi]):
                        setent(i, j, entry(i, j) - q * entry(pi, j))
                    changed = True
                if entry(i, pj) != 0:
                    # remainder smaller than pivot: swap roles
                    pi = i
                    changed = True
                    break
            else:
                for j in list(rowidx.get(pi, ())):
                    if j == pj:
                        continue
                    q = entry(pi, j) // entry(pi, pj)
                    if q:
                        for i in list(colidx[pj]):
                            setent(i, j, entry(i, j) - q * entry(i, pj))
                        changed = True
                    if entry(pi, j) != 0:
                        pj = j
                        changed = True
                        break
                else:
                    if not changed:
                        break
            continue
        d = abs(entry(pi, pj))
        # clear pivot row/col (they are already zero except pivot)
        for j in list(rowidx.get(pi, ())):
            setent(pi, j, 0)
        for i in list(colidx.get(pj, ())):
            setent(i, pj, 0)
        diag.append(d)
    # enforce divisibility chain via elementary ops on the diagonal
    change = True
    while change:
        change = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                if diag[j] % diag[i] != 0:
                    import math
                    g = math.gcd(diag[i], diag[j])
                    l = diag[i] * diag[j] // g
                    diag[i], diag[j] = g, l
                    change = True
    return diag


def homology(facets, dim):
    """Simplicial homology of the complex with given facets; returns list of
    (rank, [torsion coefficients]) for degrees 0..dim."""
    faces = sorted(all_faces(facets), key=lambda s: (len(s), s))
    index = {}
    per_dim = [[] for _ in range(dim + 1)]
    for s in faces:
        d = len(s) - 1
        index[s] = len(per_dim[d])
        per_dim[d].append(s)
    # boundary matrices d_k : C_k -> C_{k-1}
    bnd = [None] * (dim + 1)
    for k in range(1, dim + 1):
        m = {}
        for s in per_dim[k]:
            j = index[s]
            for pos in range(len(s)):
                t = s[:pos] + s[pos + 1:]
                m[(index[t], j)] = (-1) ** pos
        bnd[k] = (m, len(per_dim[k - 1]), len(per_dim[k]))
    result = []
    ranks = [0] * (dim + 2)
    smiths = [None] * (dim + 2)
    for k in range(1, dim + 1):
        m, r, c = bnd[k]
        diag = smith_diagonal(m, r, c)
        ranks[k] = len([d for d in diag if d != 0])
        smiths[k] = [d for d in diag if d > 1]
    for k in range(dim + 1):
        n_k = len(per_dim[k])
        rank_k = n_k - (ranks[k] if k >= 1 else 0) - ranks[k + 1] if k + 1 <= dim else n_k - ranks[k]
        if k + 1 <= dim:
            tors = smiths[k + 1] or []
        else:
            tors = []
        # betti = dim ker d_k - rank d_{k+1}
        ker = n_k - (ranks[k] if k >= 1 else 0)
        betti = ker - (ranks[k + 1] if k + 1 <= dim else 0)
        result.append((betti, tors))
    return result


# ---------- the construction ----------

def build_quotient():
    # boundary of the 4-dim cross-polytope: vertices +-1..+-4, facets all sign
    # choices of {1,2,3,4}
    facets16 = []
    for signs in itertools.product([1, -1], repeat=4):
        facets16.append(tuple(s * (i + 1) for i, s in enumerate(signs)))
    # faces of the 16-cell boundary complex
    cells = sorted(all_faces(facets16), key=lambda s: (len(s), s))
    # barycentric subdivision: vertices = cells, facets = maximal chains
    cellset = set(cells)

    def chains_from(c, remaining):
        # maximal chains of faces ending at facet c
        out = []
        def rec(chain):
            if len(chain[0]) == 1:
                out.append(tuple(chain))
                return
            s = chain[0]
            for v in s:
                t = tuple(x for x in s if x != v)
                rec([t] + chain)
        rec([c])
        return out

    sd_facets = []
    for f in facets16:
        sd_facets.extend(chains_from(tuple(sorted(f)), None))
    # antipodal map on subdivision vertices
    def anti(cell):
        return tuple(sorted(-x for x in cell))
    # orbit representatives
    rep = {}
    for c in cells:
        a = anti(c)
        rep[c] = min(c, a)
    # check freeness
    for c in cells:
        assert anti(c) != c
    # quotient facets
    qfacets = set()
    for ch in sd_facets:
        qf = tuple(sorted(rep[c] for c in ch))
        assert len(set(qf)) == 4
        qfacets.add(qf)
    # relabel vertices 0..n-1
    verts = sorted({v for f in qfacets for v in f})
    vid = {v: i for i, v in enumerate(verts)}
    return {tuple(sorted(vid[v] for v in f)) for f in qfacets}


def contractible(facets, u, v):
    """Link condition for edge (u,v) in a 3-manifold triangulation."""
    if tuple(sorted((u, v))) not in all_faces(facets):
        return False
    lku = closure(link(facets, (u,)))
    lkv = closure(link(facets, (v,)))
    lkuv = closure(link(facets, (u, v)))
    return (lku & lkv) == lkuv


def contract(facets, u, v):
    """Contract edge (u,v): replace u by v."""
    out = set()
    for f in facets:
        g = tuple(sorted(set(v if x == u else x for x in f)))
        if len(g) == 4:
            out.add(g)
    return out


def simplify(facets):
    changed = True
    while changed:
        changed = False
        edges = sorted(s for s in all_faces(facets) if len(s) == 2)
        for (u, v) in edges:
            if contractible(facets, u, v):
                cand = contract(facets, u, v)
                if is_pseudomanifold(cand, 3):
                    ok = True
                    for w in sorted({x for f in cand for x in f}):
                        if not is_two_sphere(link(cand, (w,))):
                            ok = False
                            break
                    if ok:
                        facets = cand
                        changed = True
                        break
    return facets


def main():
    q = build_quotient()
    print("quotient f-vector:", f_vector(q, 3), file=sys.stderr)
    assert is_pseudomanifold(q, 3)
    q = simplify(q)
    # relabel compactly
    verts = sorted({v for f in q for v in f})
    vid = {v: i for i, v in enumerate(verts)}
    q = sorted(tuple(sorted(vid[x] for x in f)) for f in q)
    fv = f_vector(set(q), 3)
    print("final f-vector:", fv, file=sys.stderr)
    assert is_pseudomanifold(set(q), 3)
    for w in range(len(verts)):
        assert is_two_sphere(link(set(q), (w,))), w
    H = homology(set(q), 3)
    print("homology:", H, file=sys.stderr)
    assert H[0] == (1, []), H
    assert H[1][0] == 0 and H[1][1] == [2], H
    assert H[2] == (0, []), H
    assert H[3] == (1, []), H
    print("{")
    for i in range(0, len(q), 8):
        row = ", ".join("{%d,%d,%d,%d}" % f for f in q[i:i + 8])
        print("    " + row + ("," if i + 8 < len(q) else ""))
    print("}")
    print("// f-vector: %s  (facets: %d, vertices: %d)" % (fv, len(q), len(verts)), file=sys.stderr)


if __name__ == "__main__":
    main()
