"""State multigraphs of the all-A / all-B resolutions and the
graph-theoretic routes to Jones coefficients.

The A-graph (resp. B-graph) of a diagram has one vertex per loop of the
all-A (all-B) state and one edge per crossing, joining the loops its two
splice strands lie on.  The simple reduction collapses parallel classes.
Two independent evaluation routes are provided for cross-checking:

* ``tutte_eval``: deletion-contraction with memoization on a canonical
  multigraph form;
* ``thistlethwaite_sum``: the subset expansion of T(-t, -1/t) over the
  reduced edge set, with per-class multiplicity polynomials
  P(m) = 1 - t^-1 + ... +- t^-(m-1).

The second coefficients of the X polynomial of a connected alternating
diagram equal e(G') - v(G') + 1 of the B-graph (bottom end) and A-graph
(top end) reductions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .diagram import Diagram, splice_partition
from .errors import PreconditionError, StateLimitError
from .laurent import QuarterLaurentT

__all__ = [
    "StateMultigraph",
    "SimpleReduction",
    "state_graph",
    "reduce_graph",
    "second_coeff_magnitude",
    "tutte_eval",
    "jones_via_tutte",
    "thistlethwaite_sum",
    "graphs_isomorphic",
    "render_state_graph",
]

MAX_SUBSET_EDGES = 20


@dataclass(frozen=True)
class StateMultigraph:
    """Multigraph with state loops as vertices and crossings as edges."""

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]  # (u, v, crossing id), u <= v

    def __post_init__(self):
        for u, v, _ in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError("edge endpoint out of range")
            if u > v:
                raise ValueError("edges must be stored with u <= v")


@dataclass(frozen=True)
class SimpleReduction:
    """Parallel classes collapsed to one edge; self-loops survive as one."""

    vertex_count: int
    simple_edges: frozenset[tuple[int, int]]

    @property
    def edge_count(self) -> int:
        return len(self.simple_edges)


def state_graph(d: Diagram, kind: Literal["A", "B"]) -> StateMultigraph:
    """The A- or B-graph of a diagram.

    Vertices are numbered by the smallest arc label on each loop, in
    ascending order; crossing-free circles contribute trailing isolated
    vertices.
    """
    if kind not in ("A", "B"):
        raise ValueError(f"state graph kind must be 'A' or 'B', not {kind!r}")
    n = len(d.crossings)
    loops, root_of = splice_partition(d, kind * n)
    reps = sorted({root_of[arc] for arc in root_of}, key=lambda r: min(a for a in root_of if root_of[a] == r))
    index = {r: i for i, r in enumerate(reps)}
    edges = []
    for ci, (a, b, c, e) in enumerate(d.crossings):
        if kind == "A":  # strands (a,b) and (c,d)
            u, v = index[root_of[a]], index[root_of[c]]
        else:  # strands (a,d) and (b,c)
            u, v = index[root_of[a]], index[root_of[b]]
        if u > v:
            u, v = v, u
        edges.append((u, v, ci))
    return StateMultigraph(vertex_count=loops + d.unknotted_components, edges=tuple(edges))


def reduce_graph(g: StateMultigraph) -> SimpleReduction:
    """Collapse parallel classes (one representative per vertex pair)."""
    return SimpleReduction(
        vertex_count=g.vertex_count,
        simple_edges=frozenset((u, v) for u, v, _ in g.edges),
    )


def second_coeff_magnitude(d: Diagram, end: Literal["top", "bottom"]) -> int:
    """|X_1| (bottom) or |X-hat_1| (top) via the reduced state graphs.

    Bottom reads the B-graph, top the A-graph; the value is
    e(G') - v(G') + 1.  Requires a connected alternating diagram.
    """
    if end not in ("top", "bottom"):
        raise ValueError(f"end must be 'top' or 'bottom', not {end!r}")
    if d.is_split():
        raise PreconditionError("second-coefficient formula requires a connected diagram")
    if not d.is_alternating():
        raise PreconditionError("second-coefficient formula requires an alternating diagram")
    red = reduce_graph(state_graph(d, "B" if end == "bottom" else "A"))
    return red.edge_count - red.vertex_count + 1


# ---------------------------------------------------------------------------
# Tutte polynomial by deletion-contraction.

_CANON_PERM_CAP = 1920


def _refine_colors(n: int, adj: dict[int, dict[int, int]]) -> list[tuple]:
    """Iterated neighborhood refinement; returns a stable color per vertex."""
    colors: list[tuple] = [
        (sum(m for m in adj[v].values()) + adj[v].get(v, 0),) for v in range(n)
    ]
    for _ in range(n):
        table = {}
        new = []
        for v in range(n):
            sig = (colors[v], tuple(sorted((colors[w], m) for w, m in adj[v].items())))
            new.append(table.setdefault(sig, sig))
        if new == colors:
            break
        colors = new
    return colors


def _canonical_key(n: int, edges: tuple[tuple[int, int], ...]):
    """A memoization key equal across isomorphic multigraphs when the
    class-preserving permutation count stays below a cap; otherwise a
    deterministic labeled key (sound, just fewer cache hits)."""
    adj: dict[int, dict[int, int]] = {v: {} for v in range(n)}
    for u, v in edges:
        adj[u][v] = adj[u].get(v, 0) + 1
        if u != v:
            adj[v][u] = adj[v].get(u, 0) + 1
    colors = _refine_colors(n, adj)
    classes: dict[tuple, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    ordered = [classes[c] for c in sorted(classes)]
    total = 1
    for cls in ordered:
        for k in range(2, len(cls) + 1):
            total *= k
        if total > _CANON_PERM_CAP:
            return ("L", tuple(sorted(colors)), tuple(sorted(edges)))
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in ordered)):
        relabel = {}
        i = 0
        for perm in perms:
            for v in perm:
                relabel[v] = i
                i += 1
        enc = tuple(sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in edges))
        if best is None or enc < best:
            best = enc
    return ("C", n, best)


def _tutte(n: int, edges: tuple[tuple[int, int], ...], x, y, one, memo):
    # Strip self-loops first: each contributes a factor y.
    loops = sum(1 for u, v in edges if u == v)
    rest = tuple(e for e in edges if e[0] != e[1])
    factor = one
    for _ in range(loops):
        factor = factor * y
    if not rest:
        return factor
    key = _canonical_key(n, rest)
    cached = memo.get(key)
    if cached is None:
        # An edge is a bridge iff it is non-parallel and disconnects its
        # component; parallel edges never are.
        mult: dict[tuple[int, int], int] = {}
        for e in rest:
            mult[e] = mult.get(e, 0) + 1

        pick = None
        for e in sorted(mult):
            if mult[e] > 1 or not _is_bridge(rest, e):
                pick = e
                break
        if pick is None:
            # Forest: every edge is a bridge.
            cached = one
            for _ in rest:
                cached = cached * x
        else:
            deleted = _remove_one(rest, pick)
            contracted = _contract(n, rest, pick)
            cached = _tutte(n, deleted, x, y, one, memo) + _tutte(
                contracted[0], contracted[1], x, y, one, memo
            )
        memo[key] = cached
    return factor * cached


def _is_bridge(edges: tuple[tuple[int, int], ...], e: tuple[int, int]) -> bool:
    """Is the (single) edge e a bridge of the graph spanned by ``edges``?"""
    u0, v0 = e
    seen = {u0}
    frontier = [u0]
    removed = False
    pool = list(edges)
    pool.remove(e)
    adj: dict[int, list[int]] = {}
    for a, b in pool:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    while frontier:
        w = frontier.pop()
        for q in adj.get(w, ()):
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return v0 not in seen


def _remove_one(edges: tuple[tuple[int, int], ...], e: tuple[int, int]):
    out = list(edges)
    out.remove(e)
    return tuple(out)


def _contract(n: int, edges: tuple[tuple[int, int], ...], e: tuple[int, int]):
    """Contract edge e = (u, v): merge v into u and compact labels."""
    u, v = e
    out = list(edges)
    out.remove(e)
    merged = []
    for a, b in out:
        a2 = u if a == v else a
        b2 = u if b == v else b
        merged.append((a2, b2) if a2 <= b2 else (b2, a2))
    # Compact vertex labels to 0..m-1 for stable keys.
    used = sorted({w for ed in merged for w in ed} | {u})
    remap = {w: i for i, w in enumerate(used)}
    return len(used), tuple(
        tuple(sorted((remap[a], remap[b]))) for a, b in merged
    )


def tutte_eval(g: StateMultigraph, x, y):
    """Tutte polynomial of the multigraph evaluated at (x, y).

    ``x`` and ``y`` may be ints, Fractions, or the engine's exact Laurent
    values; loops multiply by y and bridges by x.  Disconnected graphs are
    handled by the usual component product (isolated vertices contribute 1).
    """
    one = x ** 0
    # Drop isolated vertices: they do not affect the Tutte polynomial.
    used = sorted({w for u, v, _ in g.edges for w in (u, v)})
    remap = {w: i for i, w in enumerate(used)}
    edges = tuple(tuple(sorted((remap[u], remap[v]))) for u, v, _ in g.edges)
    memo: dict = {}
    return _tutte(len(used), edges, x, y, one, memo)


def jones_via_tutte(d: Diagram) -> QuarterLaurentT:
    """Jones polynomial of a connected alternating diagram through
    (-1)^w t^((|S_A| - |S_B| + 3w)/4) T_{G(B)}(-t, -1/t)."""
    if d.is_split():
        raise PreconditionError("Tutte route requires a connected diagram")
    if not d.is_alternating():
        raise PreconditionError("Tutte route requires an alternating diagram")
    n = len(d.crossings)
    loops_a, _ = splice_partition(d, "A" * n)
    loops_b, _ = splice_partition(d, "B" * n)
    s_a = loops_a + d.unknotted_components
    s_b = loops_b + d.unknotted_components
    w = d.writhe()
    t_val = tutte_eval(state_graph(d, "B"), QuarterLaurentT({4: -1}), QuarterLaurentT({-4: -1}))
    sign = -1 if w % 2 else 1
    prefactor = QuarterLaurentT({s_a - s_b + 3 * w: sign})
    return prefactor * t_val


def _p_poly(m: int) -> QuarterLaurentT:
    """P(m) = 1 - t^-1 + t^-2 - ... +- t^-(m-1)."""
    return QuarterLaurentT({-4 * j: (1 if j % 2 == 0 else -1) for j in range(m)})


def thistlethwaite_sum(g: StateMultigraph) -> QuarterLaurentT:
    """Subset expansion of T_G(-t, -1/t) over the reduced edge set.

    Sums over subsets F of the simple reduction: (-t-1)^(k(F)-1) times
    (-1/t-1)^(|F| - |V| + k(F)) times the product of P(multiplicity) over
    the chosen classes, with k(F) counting components on the full vertex
    set.  Must equal ``tutte_eval(g, -t, -1/t)``.
    """
    classes: dict[tuple[int, int], int] = {}
    for u, v, _ in g.edges:
        classes[(u, v)] = classes.get((u, v), 0) + 1
    simple = sorted(classes)
    if len(simple) > MAX_SUBSET_EDGES:
        raise StateLimitError(len(simple), MAX_SUBSET_EDGES)
    n = g.vertex_count
    neg_t_minus_1 = QuarterLaurentT({4: -1, 0: -1})
    neg_tinv_minus_1 = QuarterLaurentT({-4: -1, 0: -1})
    p_of = {pair: _p_poly(classes[pair]) for pair in simple}

    total = QuarterLaurentT()
    for r in range(len(simple) + 1):
        for subset in itertools.combinations(simple, r):
            parent = list(range(n))

            def find(i: int) -> int:
                while parent[i] != i:
                    parent[i] = parent[parent[i]]
                    i = parent[i]
                return i

            for u, v in subset:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
            k = len({find(i) for i in range(n)})
            term = neg_t_minus_1 ** (k - 1) * neg_tinv_minus_1 ** (r - n + k)
            for pair in subset:
                term = term * p_of[pair]
            total = total + term
    return total


# ---------------------------------------------------------------------------
# Exact multigraph isomorphism (small graphs; used by the proof-relation
# checks on B-graphs under oriented smoothing).

def graphs_isomorphic(g1: StateMultigraph, g2: StateMultigraph) -> bool:
    """Multigraph isomorphism ignoring crossing ids (backtracking search)."""
    if g1.vertex_count != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return False
    n = g1.vertex_count

    def adjacency(g: StateMultigraph) -> dict[int, dict[int, int]]:
        adj: dict[int, dict[int, int]] = {v: {} for v in range(n)}
        for u, v, _ in g.edges:
            adj[u][v] = adj[u].get(v, 0) + 1
            if u != v:
                adj[v][u] = adj[v].get(u, 0) + 1
        return adj

    a1, a2 = adjacency(g1), adjacency(g2)
    c1, c2 = _refine_colors(n, a1), _refine_colors(n, a2)
    if sorted(c1) != sorted(c2):
        return False
    order = sorted(range(n), key=lambda v: (c1[v], v))
    candidates = {v: [w for w in range(n) if c2[w] == c1[v]] for v in range(n)}
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            ok = a1[v].get(v, 0) == a2[w].get(w, 0)
            if ok:
                for p, m in a1[v].items():
                    if p == v or p not in mapping:
                        continue
                    if a2[w].get(mapping[p], 0) != m:
                        ok = False
                        break
            if ok:
                # Reverse direction: mapped neighbors of w must match back.
                for q, m in a2[w].items():
                    if q == w or q not in used:
                        continue
                    src = next(p for p, t in mapping.items() if t == q)
                    if a1[v].get(src, 0) != m:
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0)


def render_state_graph(g: StateMultigraph) -> str:
    """Dump format: ``v=<n>`` then one sorted ``e u v crossing=<id>`` per edge."""
    lines = [f"v={g.vertex_count}"]
    for u, v, ci in sorted(g.edges):
        lines.append(f"e {u} {v} crossing={ci}")
    return "\n".join(lines)
