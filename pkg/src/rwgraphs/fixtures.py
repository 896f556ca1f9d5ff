"""Reference constants: named graphs, the polywheel table, Wheeling-element
terms, closed forms and the Chern-number gap combinations.

The drawings behind the named graphs are not available as data, so each is
pinned here by an explicit edge list.  Orientations are chosen so that every
table row holds with the printed signs:

* ``theta2``: two digons joined into a ring (4 vertices);
* ``g6``: ring of three digons (6 vertices);
* ``g8a``: ring of four digons (8 vertices);
* ``g8b``: the cube graph (8 vertices).
"""

from __future__ import annotations

from fractions import Fraction as F
from typing import Dict, List, Optional, Tuple

GRAPH_DSL: Dict[str, str] = {
    "theta": "edges: 1-2, 1-2, 1-2",
    "theta2": "edges: 1-2, 1-2, 1-3, 2-4, 3-4, 4-3",
    "g6": "edges: 1-2, 1-2, 1-3, 2-4, 3-5, 3-5, 4-6, 4-6, 6-5",
    "g8a": "edges: 1-2, 1-2, 1-3, 2-4, 3-5, 3-5, 4-6, 4-6, 5-7, 6-8, 7-8, 7-8",
    "g8b": "edges: 1-2, 1-3, 1-4, 2-5, 2-6, 3-5, 3-7, 4-6, 4-7, 5-8, 6-8, 8-7",
}


def named_graph(name: str):
    from .graphs import parse_graph

    text = GRAPH_DSL.get(name)
    return None if text is None else parse_graph(text)


# A row reads: lhs == sum(coef * term); a term is either a tuple of spoke
# counts (a polywheel) or a graph DSL string.
Term = Tuple[F, object]

TABLE1: List[Tuple[int, str, List[Term]]] = [
    (1, "theta", [(F(1), (2,))]),
    (2, "theta^2", [(F(1), (2, 2)), (F(-4, 5), (4,))]),
    (2, "theta2", [(F(2, 5), (4,))]),
    (3, "theta^3", [(F(1), (2, 2, 2)), (F(-12, 5), (2, 4)), (F(64, 35), (6,))]),
    (3, "theta | theta2", [(F(2, 5), (2, 4)), (F(-16, 35), (6,))]),
    (3, "g6", [(F(4, 35), (6,))]),
    (4, "theta^4", [
        (F(1), (2, 2, 2, 2)), (F(-24, 5), (2, 2, 4)), (F(48, 25), (4, 4)),
        (F(256, 35), (2, 6)), (F(-1152, 175), (8,)),
    ]),
    (4, "theta^2 | theta2", [
        (F(2, 5), (2, 2, 4)), (F(-8, 25), (4, 4)), (F(-32, 35), (2, 6)), (F(192, 175), (8,)),
    ]),
    (4, "theta | g6", [
        (F(-1, 2), "theta2^2"), (F(2, 25), (4, 4)), (F(4, 35), (2, 6)), (F(-48, 175), (8,)),
    ]),
    (4, "g8a", [(F(1, 12), "theta2^2"), (F(-1, 75), (4, 4)), (F(8, 175), (8,))]),
    (4, "g8b", [(F(-41, 96), "theta2^2"), (F(41, 600), (4, 4)), (F(-16, 175), (8,))]),
]

# graph that escapes the polywheel span in degree 4
POLYWHEEL_GAP = "theta2^2"


def preferred_basis(k: int):
    """Left-hand graphs of the table in degree ``k`` (plus the gap graph)."""
    from .graphs import parse_graph

    names = [lhs for kk, lhs, _ in TABLE1 if kk == k]
    if k == 4:
        names.append(POLYWHEEL_GAP)
    return [parse_graph(s) for s in names]


# Wheeling element: b_2, b_4 and the degree-4 part as (coef, spoke counts)
OMEGA_B = {2: F(1, 48), 4: F(-1, 5760)}
OMEGA_4_DISPLAY = [(F(1, 2 * 48 ** 2), (2, 2)), (F(1, 2 * 48 ** 2) * F(-4, 5), (4,))]

# k = 2 expansion of the left-hand side of the trivial-bundle identity
WHEELING_LHS_K2 = [F(1), F(2, 24), F(1, 24 ** 2)]


def theta_power_hilbert(k: int) -> int:
    """b_{Theta^k}(S^[k])."""
    return 12 ** k * (k + 3) ** k


def theta_power_kummer(k: int) -> int:
    """b_{Theta^k}(K_k)."""
    return 12 ** k * (k + 1) ** (k + 1)


C4_BOUND = 3024
TD_HALF_FACTOR = 48  # b_{Theta^k} = 48^k k! int Td^{1/2}

# two disjoint unions with equal Chern numbers
GAP_LEFT = "48K[4] + 294S x S[3] + 144S[2] x S[2] + 63S^4"
GAP_RIGHT = "336S[4] + 268S^2 x S[2]"
# b(theta2^2) of GAP_LEFT minus that of GAP_RIGHT, recorded from the first
# successful run as a regression constant
GAP_DIFFERENCE = 442368
