"""Sign-tracked canonical labeling of small edge-typed multigraphs.

Edges are triples ``(u, v, kind)`` on vertices ``0..n-1``.  ``kind == ""``
marks an ordinary graph edge: its direction is orientation data, so
reversing it flips the sign.  Any other kind is a skeleton arc whose
direction is intrinsic and never reversed.

The orientation convention is the (vertex order, edge directions) one:
relabeling by a permutation ``sigma`` and reversing ``r`` graph edges
multiplies the sign by ``sign(sigma) * (-1)**r``.

Labeling is exhaustive backtracking restricted by color refinement, which
is fine for the at most eight vertices used here.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .linalg import parity

Edge = Tuple[int, int, str]


def _refine(n: int, gm, arcs) -> List[int]:
    def nbrs(v):
        out = []
        for u in range(n):
            if u == v:
                continue
            a, b = gm[v][u], (arcs.get((v, u), ()), arcs.get((u, v), ()))
            if a or b[0] or b[1]:
                out.append((a,) + b + (u,))
        return out

    init = [
        (gm[v][v], arcs.get((v, v), ()), sum(gm[v]) + gm[v][v],
         tuple(sorted(k for (a, b), ks in arcs.items() if a == v and b != v for k in ks)),
         tuple(sorted(k for (a, b), ks in arcs.items() if b == v and a != v for k in ks)))
        for v in range(n)
    ]
    keys = sorted(set(init))
    color = [keys.index(c) for c in init]
    adj = [nbrs(v) for v in range(n)]
    while True:
        sig = [
            (color[v], tuple(sorted(e[:3] + (color[e[3]],) for e in adj[v])))
            for v in range(n)
        ]
        keys = sorted(set(sig))
        new = [keys.index(s) for s in sig]
        if len(keys) == len(set(color)):
            return new
        color = new


def canonical_labeling(n: int, edges: Sequence[Edge]) -> Tuple[Tuple[Edge, ...], int]:
    """Return ``(canonical_edges, sign)``.

    ``canonical_edges`` is a sorted tuple on labels ``0..n-1`` with graph
    edges stored low -> high.  ``sign`` relates the input to the canonical
    representative (input == sign * canonical); it is 0 when the input has
    an orientation-reversing automorphism.
    """
    if n == 0:
        return (), 1
    gm = [[0] * n for _ in range(n)]
    arcs: Dict[Tuple[int, int], Tuple[str, ...]] = {}
    has_loop = False
    for u, v, kind in edges:
        if kind:
            arcs[(u, v)] = tuple(sorted(arcs.get((u, v), ()) + (kind,)))
        else:
            gm[u][v] += 1
            if u != v:
                gm[v][u] += 1
            else:
                has_loop = True

    color = _refine(n, gm, arcs)
    target = sorted(color)
    by_color: Dict[int, List[int]] = {}
    for v in range(n):
        by_color.setdefault(color[v], []).append(v)

    best: List = []
    leaves: List[List[int]] = []
    order: List[int] = []
    rows: List = []
    used = [False] * n

    def row_of(i: int):
        a = order[i]
        return tuple(
            (gm[a][b], arcs.get((a, b), ()), arcs.get((b, a), ()))
            for b in order[: i + 1]
        )

    def rec(i: int) -> None:
        nonlocal best, leaves
        if i == n:
            if not best or rows > best:
                best = list(rows)
                leaves = [list(order)]
            elif rows == best:
                leaves.append(list(order))
            return
        for v in by_color[target[i]]:
            if used[v]:
                continue
            used[v] = True
            order.append(v)
            rows.append(row_of(i))
            if not best or rows >= best[: i + 1]:
                rec(i + 1)
            rows.pop()
            order.pop()
            used[v] = False

    rec(0)

    signs = set()
    canon = None
    for lv in leaves:
        label = [0] * n
        for pos, v in enumerate(lv):
            label[v] = pos
        s = parity(lv)
        out = []
        for u, v, kind in edges:
            a, b = label[u], label[v]
            if not kind and a > b:
                a, b = b, a
                s = -s
            out.append((a, b, kind))
        signs.add(s)
        if canon is None:
            canon = tuple(sorted(out))
    if has_loop or len(signs) > 1:
        return canon, 0
    return canon, signs.pop()
