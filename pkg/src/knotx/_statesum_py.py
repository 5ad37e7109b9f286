"""Pure-Python state-sum kernel.

Enumerates every A/B splice assignment of a diagram by binary counter and
counts the resulting loops with union-find over the arcs.  Returns a
histogram ``{(b_count, loop_count): number of states}`` from which the
Kauffman bracket is assembled exactly; keeping the kernel free of
polynomial arithmetic is what lets the compiled twin replace it.
"""

from __future__ import annotations

__all__ = ["state_histogram"]


def state_histogram(crossings: list[tuple[int, int, int, int]], arc_count: int) -> dict[tuple[int, int], int]:
    n = len(crossings)
    if n == 0:
        return {(0, 0): 1}
    # 0-based arc indices; per crossing, the two splice pairings.
    a_pairs = []
    b_pairs = []
    for a, b, c, d in crossings:
        a_pairs.append((a - 1, b - 1, c - 1, d - 1))
        b_pairs.append((a - 1, d - 1, b - 1, c - 1))

    hist: dict[tuple[int, int], int] = {}
    parent = list(range(arc_count))
    for state in range(1 << n):
        for i in range(arc_count):
            parent[i] = i
        b_count = 0
        for i in range(n):
            if (state >> i) & 1:
                b_count += 1
                x0, y0, x1, y1 = b_pairs[i]
            else:
                x0, y0, x1, y1 = a_pairs[i]
            for x, y in ((x0, y0), (x1, y1)):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[x] = y
        loops = 0
        for i in range(arc_count):
            if parent[i] == i:
                loops += 1
        key = (b_count, loops)
        hist[key] = hist.get(key, 0) + 1
    return hist
