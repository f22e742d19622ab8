#!/usr/bin/env python3
"""Generate and verify the fixed triangulation data files shipped under data/.

Five complexes are produced:

  rp2_6    -- the 6-vertex projective plane (antipodal icosahedron quotient)
  torus_7  -- the 7-vertex Moebius-Kantor torus
  klein_8  -- an 8-vertex Klein bottle, obtained by edge-contracting a
              3x3 twisted-grid Klein bottle
  rp3_11   -- the 11-vertex real projective 3-space, obtained by bistellar
              reduction of the antipodal quotient of the barycentrically
              subdivided 16-cell boundary
  cp2_9    -- the 9-vertex complex projective plane, found as a union of
              four Z3xZ3 vertex-translation orbits of 5-sets and certified
              by link and homology checks

Every complex is verified before writing: closed pseudomanifold, connected
vertex links, expected Euler characteristic, GF(2) Betti numbers, expected
orientability, and (in dimension >= 3) sphere links.  The reduction moves
used for rp3_11 (link-condition edge contractions, Pachner 2-3/3-2 moves)
each preserve PL type, so the output is genuinely RP^3.

Deterministic: seeded RNG, lexicographic tie-breaking.
"""

import itertools
import json
import os
import random
import sys

# ---------------------------------------------------------------- basics


def closure(facets):
    faces = set()
    for f in facets:
        fs = tuple(sorted(f))
        for k in range(1, len(fs) + 1):
            for sub in itertools.combinations(fs, k):
                faces.add(sub)
    return faces


def faces_by_dim(facets):
    out = {}
    for f in closure(facets):
        out.setdefault(len(f) - 1, set()).add(f)
    return out


def f_vector(facets):
    fb = faces_by_dim(facets)
    return tuple(len(fb[k]) for k in sorted(fb))


def euler_char(facets):
    fv = f_vector(facets)
    return sum((-1) ** k * n for k, n in enumerate(fv))


def is_closed_pseudomanifold(facets):
    d = len(next(iter(facets))) - 1
    ridge_count = {}
    for f in facets:
        fs = tuple(sorted(f))
        for r in itertools.combinations(fs, d):
            ridge_count[r] = ridge_count.get(r, 0) + 1
    return all(c == 2 for c in ridge_count.values())


def link(facets, simplex):
    s = frozenset(simplex)
    lk = set()
    for f in facets:
        fs = frozenset(f)
        if s <= fs:
            rest = tuple(sorted(fs - s))
            if rest:
                lk.add(rest)
    return lk  # facets of the link


def connected(facets):
    verts = set(v for f in facets for v in f)
    if not verts:
        return True
    adj = {v: set() for v in verts}
    for f in facets:
        for a, b in itertools.combinations(sorted(f), 2):
            adj[a].add(b)
            adj[b].add(a)
    seen = {min(verts)}
    stack = [min(verts)]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def gf2_rank(rows):
    rows = [r for r in rows if r]
    rank = 0
    for _ in range(len(rows)):
        if not rows:
            break
        piv = min(rows, key=lambda r: r & -r)
        low = piv & -piv
        rows = [r ^ piv if r & low else r for r in rows if r != piv]
        rows = [r for r in rows if r]
        rank += 1
    return rank


def betti_gf2(facets):
    fb = faces_by_dim(facets)
    d = max(fb)
    idx = {k: {s: i for i, s in enumerate(sorted(fb[k]))} for k in fb}
    ranks = {}
    for k in range(1, d + 1):
        rows = []
        for s in sorted(fb[k]):
            m = 0
            for drop in range(k + 1):
                face = s[:drop] + s[drop + 1:]
                m |= 1 << idx[k - 1][face]
            rows.append(m)
        ranks[k] = gf2_rank(rows)
    ranks[0] = 0
    ranks[d + 1] = 0
    return tuple(len(fb[k]) - ranks[k] - ranks[k + 1] for k in range(d + 1))


def orientable(facets):
    """Propagate facet orientations across ridges; True iff consistent."""
    facets = [tuple(sorted(f)) for f in facets]
    d = len(facets[0]) - 1
    by_ridge = {}
    for i, f in enumerate(facets):
        for drop in range(d + 1):
            r = f[:drop] + f[drop + 1:]
            by_ridge.setdefault(r, []).append((i, drop))
    orient = {}
    for start in range(len(facets)):
        if start in orient:
            continue
        orient[start] = 1
        stack = [start]
        while stack:
            i = stack.pop()
            f = facets[i]
            for drop in range(d + 1):
                r = f[:drop] + f[drop + 1:]
                for j, jdrop in by_ridge[r]:
                    if j == i:
                        continue
                    # Induced orientations on the shared ridge must cancel.
                    need = -orient[i] * (-1) ** (drop + jdrop)
                    if j not in orient:
                        orient[j] = need
                        stack.append(j)
                    elif orient[j] != need:
                        return False
    return True


def is_surface(facets):
    if not is_closed_pseudomanifold(facets):
        return False
    for v in set(v for f in facets for v in f):
        lk = link(facets, (v,))
        # Link of a vertex in a closed surface is a single circle.
        deg = {}
        for e in lk:
            for w in e:
                deg[w] = deg.get(w, 0) + 1
        if any(c != 2 for c in deg.values()) or not connected(lk):
            return False
    return True


def is_3manifold(facets):
    if not is_closed_pseudomanifold(facets):
        return False
    for v in set(v for f in facets for v in f):
        lk = link(facets, (v,))
        if not (is_surface(lk) and euler_char(lk) == 2 and connected(lk)):
            return False  # vertex link must be S^2
    return True


def is_4manifold(facets):
    if not is_closed_pseudomanifold(facets):
        return False
    for v in set(v for f in facets for v in f):
        lk = link(facets, (v,))
        if not is_3manifold(lk):
            return False
        # A <=10-vertex closed 3-manifold with the GF(2) homology of S^3
        # is S^3 (census of small 3-manifold triangulations).
        if len(set(w for f in lk for w in f)) > 10:
            return False
        if betti_gf2(lk) != (1, 0, 0, 1):
            return False
    return True


def relabel_dense(facets):
    verts = sorted(set(v for f in facets for v in f))
    m = {v: i for i, v in enumerate(verts)}
    return sorted(tuple(sorted(m[v] for v in f)) for f in facets)


# -------------------------------------------------------- fixed surfaces

RP2_6 = [
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
    (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5),
]

TORUS_7 = [tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)] + \
          [tuple(sorted(((i) % 7, (i + 2) % 7, (i + 3) % 7))) for i in range(7)]


def make_klein_grid():
    """3x3 grid Klein bottle: straight vertical wrap, reflected horizontal wrap."""
    def vid(i, j):
        return 3 * (i % 3) + (j % 3)

    facets = []
    for i in range(3):
        for j in range(3):
            if i < 2:
                a, b = vid(i, j), vid(i + 1, j)
                c, dd = vid(i, j + 1), vid(i + 1, j + 1)
            else:
                # crossing the reflected seam: row j glues to row -j
                a, b = vid(2, j), vid(0, (-j) % 3)
                c, dd = vid(2, j + 1), vid(0, (-(j + 1)) % 3)
            facets.append(tuple(sorted((a, b, c))))
            facets.append(tuple(sorted((b, c, dd))))
    return facets


def contract_edge(facets, u, v):
    """Contract edge uv (v -> u); caller must have checked the link condition."""
    out = set()
    for f in facets:
        if u in f and v in f:
            continue
        g = tuple(sorted(u if w == v else w for w in f))
        if len(set(g)) != len(g):
            return None
        out.add(g)
    return sorted(out)


def all_faces_set(facets):
    return set(map(frozenset, closure(facets)))


def link_condition(facets, faces, u, v):
    """lk(u) cap lk(v) == lk(uv), computed on full face sets."""
    def lk(s):
        out = set()
        ss = frozenset(s)
        for f in faces:
            if ss <= f:
                rest = f - ss
                if rest:
                    out.add(rest)
        return out

    return lk((u,)) & lk((v,)) == lk((u, v))


def flip_22(facets, faces, rng):
    """Random surface diagonal flip; returns new facet list or None."""
    by_edge = {}
    for f in facets:
        for e in itertools.combinations(f, 2):
            by_edge.setdefault(e, []).append(f)
    cand = sorted(by_edge)
    rng.shuffle(cand)
    for e in cand:
        fs = by_edge[e]
        if len(fs) != 2:
            continue
        x = next(v for v in fs[0] if v not in e)
        y = next(v for v in fs[1] if v not in e)
        if x == y or frozenset((x, y)) in faces:
            continue
        out = set(facets)
        out.discard(fs[0])
        out.discard(fs[1])
        out.add(tuple(sorted((x, y, e[0]))))
        out.add(tuple(sorted((x, y, e[1]))))
        return sorted(out)
    return None


def make_klein_8():
    k9 = make_klein_grid()
    assert is_surface(k9) and euler_char(k9) == 0 and not orientable(k9)
    assert betti_gf2(k9) == (1, 2, 1)
    rng = random.Random(987654)
    cur = k9
    for _ in range(4000):
        faces = all_faces_set(cur)
        edges = sorted(tuple(sorted(e)) for e in faces if len(e) == 2)
        for (u, v) in edges:
            if link_condition(cur, faces, u, v):
                k8 = contract_edge(cur, u, v)
                if k8 is None:
                    continue
                k8 = relabel_dense(k8)
                if is_surface(k8) and euler_char(k8) == 0 and not orientable(k8) \
                        and betti_gf2(k8) == (1, 2, 1):
                    return k8
        nxt = flip_22(cur, faces, rng)
        if nxt is None or not is_surface(nxt):
            raise RuntimeError("klein_8 stirring failed")
        cur = nxt
    raise RuntimeError("no admissible contraction found for klein_8")


# ------------------------------------------------------------- RP^3

def make_rp3_start():
    """Antipodal quotient of the barycentric subdivision of the 16-cell boundary."""
    # vertices 0..7, antipode of i is i+4 mod 8
    facets4 = [tuple(sorted((0 + 4 * a, 1 + 4 * b, 2 + 4 * c, 3 + 4 * d)))
               for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1)]
    faces = sorted(closure(facets4), key=lambda s: (len(s), s))
    antip = {}
    for s in faces:
        antip[s] = tuple(sorted((v + 4) % 8 for v in s))

    # flags F0 < F1 < F2 < F3 of the 16-cell boundary
    flags = []
    for f in facets4:
        for perm in itertools.permutations(f):
            chain = [tuple(sorted(perm[:k])) for k in range(1, 5)]
            flags.append(tuple(chain))
    flags = set(flags)

    # antipodal quotient: orbit representative = lex-min of {F, -F}
    rep = {s: min(s, antip[s]) for s in faces}
    vid = {s: i for i, s in enumerate(sorted(set(rep.values()), key=lambda s: (len(s), s)))}
    quot = set()
    for ch in flags:
        q = tuple(sorted(vid[rep[s]] for s in ch))
        assert len(set(q)) == 4
        quot.add(q)
    return sorted(quot)


def pachner_23(facets, faces, rng):
    """Random 2-3 move; returns new facet list or None."""
    tris = {}
    for f in facets:
        for t in itertools.combinations(f, 3):
            tris.setdefault(t, []).append(f)
    cand = sorted(t for t, fs in tris.items() if len(fs) == 2)
    rng.shuffle(cand)
    for t in cand:
        f1, f2 = tris[t]
        d = next(v for v in f1 if v not in t)
        e = next(v for v in f2 if v not in t)
        if frozenset((d, e)) in faces:
            continue
        out = set(facets)
        out.discard(f1)
        out.discard(f2)
        for drop in t:
            out.add(tuple(sorted(set(t) - {drop} | {d, e})))
        return sorted(out)
    return None


def pachner_32(facets, faces, rng):
    """Random 3-2 move; returns new facet list or None."""
    edges = {}
    for f in facets:
        for e in itertools.combinations(f, 2):
            edges.setdefault(e, []).append(f)
    cand = sorted(e for e, fs in edges.items() if len(fs) == 3)
    rng.shuffle(cand)
    for e in cand:
        f1, f2, f3 = edges[e]
        opp = set()
        for f in (f1, f2, f3):
            opp |= set(f) - set(e)
        if len(opp) != 3:
            continue
        t = tuple(sorted(opp))
        if frozenset(t) in faces:
            continue
        out = set(facets)
        for f in (f1, f2, f3):
            out.discard(f)
        out.add(tuple(sorted(t + (e[0],))))
        out.add(tuple(sorted(t + (e[1],))))
        return sorted(out)
    return None


def reduce_to_min(facets, target_v, seed):
    rng = random.Random(seed)
    best = facets
    cur = facets
    stall = 0
    for _ in range(20000):
        nv = len(set(v for f in cur for v in f))
        if nv <= target_v:
            return relabel_dense(cur)
        faces = all_faces_set(cur)
        edges = sorted(tuple(sorted(e)) for e in faces if len(e) == 2)
        did = False
        for (u, v) in edges:
            if link_condition(cur, faces, u, v):
                nxt = contract_edge(cur, u, v)
                if nxt is not None and is_closed_pseudomanifold(nxt):
                    cur = nxt
                    did = True
                    stall = 0
                    break
        if did:
            if len(cur) < len(best):
                best = cur
            continue
        # stuck: stir with bistellar moves (3-2 shrinks, 2-3 stirs)
        faces = all_faces_set(cur)
        nxt = pachner_32(cur, faces, rng)
        if nxt is None or stall % 3 == 1:
            nxt = pachner_23(cur, faces, rng)
        if nxt is None:
            nxt = pachner_23(cur, faces, rng)
        if nxt is None:
            raise RuntimeError("no moves available")
        cur = nxt
        stall += 1
        if stall > 400:
            cur = best
            stall = 0
    raise RuntimeError("reduction did not reach target vertex count")


def shrink_facets(facets, target_f3, seed):
    """3-2 moves (facet count -1) with 2-3 stirring, vertex count fixed."""
    rng = random.Random(seed)
    cur = facets
    best = facets
    for _ in range(20000):
        if len(cur) <= target_f3:
            return cur
        faces = all_faces_set(cur)
        nxt = pachner_32(cur, faces, rng)
        if nxt is None:
            nxt = pachner_23(cur, faces, rng)
            if nxt is None:
                raise RuntimeError("no moves available while shrinking")
        cur = nxt
        if len(cur) < len(best):
            best = cur
    raise RuntimeError(f"facet shrink stalled at {len(best)}")


def make_rp3_11():
    k = make_rp3_start()
    assert is_3manifold(k) and euler_char(k) == 0
    assert betti_gf2(k) == (1, 1, 1, 1) and orientable(k)
    k = reduce_to_min(k, 11, seed=20240817)
    print("  rp3 at 11 vertices, f =", f_vector(k))
    if f_vector(k) != (11, 51, 80, 40):
        k = shrink_facets(k, 40, seed=424242)
        k = relabel_dense(k)
    assert is_3manifold(k) and euler_char(k) == 0
    assert betti_gf2(k) == (1, 1, 1, 1) and orientable(k)
    assert f_vector(k) == (11, 51, 80, 40)
    return sorted(k)


# ------------------------------------------------------------- CP^2

def make_cp2_9():
    """Search the four Z3xZ3 translation orbits of 5-sets forming CP^2_9."""
    def sigma(v):
        return (v // 3) * 3 + (v + 1) % 3

    def tau(v):
        return (v + 3) % 9

    def orbit(s):
        out = set()
        frontier = [tuple(sorted(s))]
        while frontier:
            t = frontier.pop()
            if t in out:
                continue
            out.add(t)
            frontier.append(tuple(sorted(sigma(v) for v in t)))
            frontier.append(tuple(sorted(tau(v) for v in t)))
        return frozenset(out)

    orbits = set()
    for s in itertools.combinations(range(9), 5):
        orbits.add(orbit(s))
    orbits = sorted(orbits, key=lambda o: min(o))
    assert len(orbits) == 14 and all(len(o) == 9 for o in orbits)

    hits = []
    for combo in itertools.combinations(range(14), 4):
        facets = sorted(set().union(*(orbits[i] for i in combo)))
        tet_count = {}
        ok = True
        for f in facets:
            for t in itertools.combinations(f, 4):
                tet_count[t] = tet_count.get(t, 0) + 1
                if tet_count[t] > 2:
                    ok = False
                    break
            if not ok:
                break
        if not ok or any(c != 2 for c in tet_count.values()):
            continue
        if euler_char(facets) != 3:
            continue
        if not is_4manifold(facets):
            continue
        if betti_gf2(facets) != (1, 0, 1, 0, 1):
            continue
        hits.append(facets)
    if not hits:
        raise RuntimeError("CP^2_9 orbit search failed")
    return min(hits)


# ------------------------------------------------------------- misc oracles

def automorphism_count(facets):
    verts = sorted(set(v for f in facets for v in f))
    fs = set(map(frozenset, facets))
    n = 0
    for p in itertools.permutations(verts):
        m = {verts[i]: p[i] for i in range(len(verts))}
        if all(frozenset(m[v] for v in f) in fs for f in fs):
            n += 1
    return n


def main():
    outdir = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")
    os.makedirs(outdir, exist_ok=True)

    jobs = []

    rp2 = relabel_dense(RP2_6)
    assert is_surface(rp2) and euler_char(rp2) == 1 and not orientable(rp2)
    assert betti_gf2(rp2) == (1, 1, 1) and f_vector(rp2) == (6, 15, 10)
    jobs.append(("rp2_6", rp2))

    t7 = relabel_dense(TORUS_7)
    assert is_surface(t7) and euler_char(t7) == 0 and orientable(t7)
    assert betti_gf2(t7) == (1, 2, 1) and f_vector(t7) == (7, 21, 14)
    jobs.append(("torus_7", t7))

    k8 = make_klein_8()
    assert f_vector(k8) == (8, 24, 16)
    jobs.append(("klein_8", k8))

    rp3 = make_rp3_11()
    jobs.append(("rp3_11", rp3))

    cp2 = make_cp2_9()
    assert f_vector(cp2) == (9, 36, 84, 90, 36)
    jobs.append(("cp2_9", cp2))

    for name, facets in jobs:
        path = os.path.join(outdir, name + ".json")
        doc = {
            "name": name,
            "facets": [list(f) for f in facets],
            "expected_f_vector": list(f_vector(facets)),
        }
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        print(f"wrote {path}: f = {f_vector(facets)}, chi = {euler_char(facets)}, "
              f"betti2 = {betti_gf2(facets)}, orientable = {orientable(facets)}")

    print("aut(rp2_6)   =", automorphism_count(rp2))
    print("aut(torus_7) =", automorphism_count(t7))
    print("aut(klein_8) =", automorphism_count(k8))


if __name__ == "__main__":
    sys.setrecursionlimit(100000)
    main()
