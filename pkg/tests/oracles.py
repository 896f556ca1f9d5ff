"""Slow, obviously-correct reference implementations used by the tests."""

from itertools import combinations_with_replacement, permutations


def perm_parity(p):
    p, s = list(p), 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def brute_canonical(n, edges, sign=1):
    """Minimal relabeled edge list and the sign relating it to the input.

    ``edges`` use vertex positions ``0..n-1``; the orientation is the vertex
    order plus edge directions.  Returns ``(key, s)`` with ``s == 0`` when
    the graph equals its own negative.
    """
    if any(a == b for a, b in edges):
        key = min(_relabel(p, edges)[0] for p in permutations(range(n)))
        return key, 0
    best, signs = None, set()
    for p in permutations(range(n)):
        key, flips = _relabel(p, edges)
        s = perm_parity(p) * (-1) ** flips * sign
        if best is None or key < best:
            best, signs = key, {s}
        elif key == best:
            signs.add(s)
    return best, (signs.pop() if len(signs) == 1 else 0)


def _relabel(p, edges):
    out, flips = [], 0
    for a, b in edges:
        x, y = p[a], p[b]
        if x > y:
            x, y = y, x
            flips += 1
        out.append((x, y))
    return tuple(sorted(out)), flips


def brute_trivalent(n):
    """Every trivalent multigraph on ``n`` labelled vertices (up to edge order)."""
    slots = [(a, b) for a in range(n) for b in range(a, n)]
    out = []
    for es in combinations_with_replacement(slots, 3 * n // 2):
        deg = [0] * n
        for a, b in es:
            deg[a] += 1
            deg[b] += 1
        if all(d == 3 for d in deg):
            out.append(es)
    return out
