"""Oriented link diagrams as PD codes.

A diagram is a list of crossings ``X[a,b,c,d]``: the four incident arc
labels counterclockwise, starting from the incoming under-strand arc
``a`` (so the under-strand runs a -> c and the over-strand occupies b, d).
Orientation is carried by the arc numbering: travelling each component,
the labels appear in ascending cyclic order.  Crossing-free circles are
not expressible in PD form and are carried as a counter, declared in the
text form by ``O[k]`` terms.

Conventions fixed here (and pinned by the calibration tests):

* the crossing sign is +1 when the over-strand runs d -> b and -1 when it
  runs b -> d; the standard trefoil ``X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]``
  then has writhe -3;
* the A-splice of a crossing joins (a,b) and (c,d), the B-splice joins
  (a,d) and (b,c);
* the orientation-respecting smoothing is the A-splice at a positive
  crossing and the B-splice at a negative one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from .errors import (
    PDSyntaxError,
    PDValidationError,
    PreconditionError,
    UnknownCrossingError,
)

__all__ = [
    "Diagram",
    "SkeinTriple",
    "parse_pd",
    "render_pd",
    "crossing_sign",
    "writhe",
    "crossing_change",
    "smooth",
    "oriented_smoothing",
    "skein_triple",
    "is_alternating_diagram",
    "is_split_diagram",
    "underlying_components",
    "is_reduced",
    "mirror_of",
    "splice_partition",
]

SpliceKind = Literal["A", "B"]

# Slot pairs joined by each splice, as positions within the crossing tuple.
_SPLICE_JOINS: dict[str, tuple[tuple[int, int], tuple[int, int]]] = {
    "A": ((0, 1), (2, 3)),
    "B": ((0, 3), (1, 2)),
}


class Diagram:
    """Immutable oriented link diagram.

    Construction validates arc double-occurrence and orientation
    consistency, traces the components and caches per-crossing signs.
    """

    __slots__ = (
        "crossings",
        "unknotted_components",
        "arc_count",
        "components",
        "_arc_slots",
        "_entering",
        "_signs",
    )

    def __init__(self, crossings: Iterable[tuple[int, int, int, int]], unknotted_components: int = 0):
        crossings = tuple(tuple(int(x) for x in c) for c in crossings)
        if unknotted_components < 0:
            raise PDValidationError("negative circle count")
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "unknotted_components", int(unknotted_components))
        object.__setattr__(self, "arc_count", 2 * len(crossings))
        self._validate_and_orient()

    def __setattr__(self, name, value):
        raise AttributeError("Diagram is immutable")

    # ------------------------------------------------------------------
    # Construction-time validation, component tracing and orientation.

    def _validate_and_orient(self) -> None:
        slots_of: dict[int, list[tuple[int, int]]] = {}
        for ci, tup in enumerate(self.crossings):
            if len(tup) != 4:
                raise PDValidationError(f"crossing {ci} does not have four arcs")
            for pos, arc in enumerate(tup):
                if arc < 1:
                    raise PDValidationError(f"crossing {ci} has non-positive arc label {arc}")
                slots_of.setdefault(arc, []).append((ci, pos))
        for arc, slots in sorted(slots_of.items()):
            if len(slots) != 2:
                raise PDValidationError(
                    f"arc label {arc} appears {len(slots)} times (every arc must appear exactly twice)"
                )
        expected = set(range(1, self.arc_count + 1))
        if set(slots_of) != expected:
            missing = sorted(expected - set(slots_of))
            extra = sorted(set(slots_of) - expected)
            raise PDValidationError(
                f"arc labels must be exactly 1..{self.arc_count}; missing {missing}, unexpected {extra}"
            )
        arc_slots: dict[int, tuple[tuple[int, int], tuple[int, int]]] = {
            arc: (s[0], s[1]) for arc, s in slots_of.items()
        }

        # Trace the closed curves.  A walk enters a crossing at one slot and
        # leaves at the passage partner (0<->2 under, 1<->3 over); between
        # crossings it travels along an arc to the arc's other slot.
        entering: dict[tuple[int, int], bool] = {}
        components: list[tuple[int, ...]] = []
        unvisited = set(arc_slots)
        while unvisited:
            seed = min(unvisited)
            trace = None
            for direction in (0, 1):
                arcs, enters = self._trace(seed, direction, arc_slots)
                if self._orientation_ok(enters):
                    trace = (arcs, enters)
                    break
            if trace is None:
                raise PDValidationError(
                    f"component containing arc {seed} has inconsistent under-strand orientation"
                )
            arcs, enters = trace
            # The traversal must visit the component's labels in ascending
            # cyclic order (orientation is encoded by the numbering).
            start = arcs.index(min(arcs))
            ordered = arcs[start:] + arcs[:start]
            if ordered != sorted(arcs):
                raise PDValidationError(
                    f"component containing arc {seed} is not numbered consecutively along its orientation"
                )
            components.append(tuple(ordered))
            entering.update(enters)
            unvisited.difference_update(arcs)

        signs = []
        for ci in range(len(self.crossings)):
            d_in = entering[(ci, 3)]
            b_in = entering[(ci, 1)]
            if d_in == b_in:
                raise PDValidationError(f"crossing {ci} has no consistent over-strand direction")
            signs.append(1 if d_in else -1)

        object.__setattr__(self, "components", tuple(components))
        object.__setattr__(self, "_arc_slots", arc_slots)
        object.__setattr__(self, "_entering", entering)
        object.__setattr__(self, "_signs", tuple(signs))

    def _trace(self, seed_arc: int, direction: int, arc_slots):
        """Walk the curve through ``seed_arc``, flowing into slot ``direction``.

        Returns the arc labels in traversal order and, for every slot met, a
        flag saying whether the curve enters the crossing there.
        """
        arcs: list[int] = []
        enters: dict[tuple[int, int], bool] = {}
        arc, head = seed_arc, arc_slots[seed_arc][direction]
        while True:
            arcs.append(arc)
            ci, pos = head
            enters[head] = True
            out = (ci, (pos + 2) % 4)
            enters[out] = False
            arc = self.crossings[ci][(pos + 2) % 4]
            s0, s1 = arc_slots[arc]
            head = s1 if s0 == out else s0
            if arc == seed_arc and head == arc_slots[seed_arc][direction]:
                break
            if len(arcs) > self.arc_count:
                raise PDValidationError("component tracing did not close up")
        return arcs, enters

    @staticmethod
    def _orientation_ok(enters: dict[tuple[int, int], bool]) -> bool:
        """Under-passages must be traversed a -> c (enter at slot 0)."""
        for (ci, pos), flag in enters.items():
            if pos == 0 and not flag:
                return False
            if pos == 2 and flag:
                return False
        return True

    # ------------------------------------------------------------------
    # Elementary queries.

    def __len__(self) -> int:
        return len(self.crossings)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return (
            self.crossings == other.crossings
            and self.unknotted_components == other.unknotted_components
        )

    def __hash__(self) -> int:
        return hash((self.crossings, self.unknotted_components))

    def __repr__(self) -> str:
        return f"Diagram({render_pd(self)!r})"

    def _check_crossing(self, c: int) -> None:
        if not 0 <= c < len(self.crossings):
            raise UnknownCrossingError(c, len(self.crossings))

    def crossing_sign(self, c: int) -> int:
        self._check_crossing(c)
        return self._signs[c]

    @property
    def signs(self) -> tuple[int, ...]:
        return self._signs

    def writhe(self) -> int:
        return sum(self._signs)

    def component_count(self) -> int:
        """Number of link components, crossing-free circles included."""
        return len(self.components) + self.unknotted_components

    def arc_head(self, arc: int) -> tuple[int, int]:
        """The slot where ``arc`` flows into a crossing."""
        s0, s1 = self._arc_slots[arc]
        return s0 if self._entering[s0] else s1

    def arc_tail(self, arc: int) -> tuple[int, int]:
        """The slot where ``arc`` flows out of a crossing."""
        s0, s1 = self._arc_slots[arc]
        return s1 if self._entering[s0] else s0

    # ------------------------------------------------------------------
    # Diagram surgery.

    def crossing_change(self, c: int) -> "Diagram":
        """Swap over/under at crossing ``c`` (an involution)."""
        self._check_crossing(c)
        a, b, cc, d = self.crossings[c]
        # Rotate the tuple so the incoming over arc takes the a-seat.
        new = (b, cc, d, a) if self._signs[c] == -1 else (d, a, b, cc)
        crossings = list(self.crossings)
        crossings[c] = new
        return Diagram(crossings, self.unknotted_components)

    def mirror(self) -> "Diagram":
        """Reverse every crossing (the mirror-image diagram)."""
        crossings = []
        for ci, (a, b, cc, d) in enumerate(self.crossings):
            crossings.append((b, cc, d, a) if self._signs[ci] == -1 else (d, a, b, cc))
        return Diagram(crossings, self.unknotted_components)

    def smooth(self, c: int, kind: SpliceKind) -> "Diagram":
        """Replace crossing ``c`` by its A- or B-splice.

        Arcs merged across the splice are renumbered consecutively along
        each component; a loop freed from all remaining crossings
        increments the circle counter.  When the splice respects the old
        orientation (always true for the oriented smoothing) the surviving
        crossings keep their signs.
        """
        self._check_crossing(c)
        if kind not in _SPLICE_JOINS:
            raise ValueError(f"splice kind must be 'A' or 'B', not {kind!r}")
        join_of: dict[tuple[int, int], tuple[int, int]] = {}
        for p, q in _SPLICE_JOINS[kind]:
            join_of[(c, p)] = (c, q)
            join_of[(c, q)] = (c, p)

        visited: set[int] = set()
        cycles: list[list[tuple]] = []  # events: ('arc', label) | ('pass', ci, in_slot)
        for seed in sorted(self._arc_slots):
            if seed in visited:
                continue
            events: list[tuple] = []
            pos = self.arc_tail(seed)  # walk the seed arc in its own direction
            while True:
                arc = self.crossings[pos[0]][pos[1]]
                events.append(("arc", arc))
                visited.add(arc)
                s0, s1 = self._arc_slots[arc]
                reach = s1 if s0 == pos else s0
                if reach[0] == c:
                    pos = join_of[reach]
                else:
                    out = (reach[0], (reach[1] + 2) % 4)
                    events.append(("pass", reach[0], reach))
                    pos = out
                if pos == self.arc_tail(seed):
                    break
            cycles.append(events)

        freed = sum(1 for ev in cycles if not any(e[0] == "pass" for e in ev))

        # Assign new labels chain by chain.  A chain is the run of merged
        # arcs between two consecutive surviving passages.
        slot_label: dict[tuple[int, int], int] = {}
        passage_entry: dict[tuple[int, int], tuple[int, int]] = {}  # (ci, axis) -> in slot
        next_label = 1
        for events in cycles:
            pass_idx = [i for i, e in enumerate(events) if e[0] == "pass"]
            if not pass_idx:
                continue
            # Chains, in walk order: chain k runs after passage k-1 up to
            # passage k (cyclically).
            chains = []
            for k, i in enumerate(pass_idx):
                prev = pass_idx[k - 1]
                if prev < i:
                    members = [e[1] for e in events[prev + 1 : i] if e[0] == "arc"]
                else:  # wrap-around chain
                    members = [e[1] for e in events[prev + 1 :] if e[0] == "arc"]
                    members += [e[1] for e in events[:i] if e[0] == "arc"]
                _, ci, in_slot = events[i]
                out_slot = (events[prev][1], (events[prev][2][1] + 2) % 4)
                chains.append((members, out_slot, in_slot))
            for _, ci, in_slot in (events[i] for i in pass_idx):
                passage_entry[(ci, in_slot[1] % 2)] = in_slot
            # Start numbering at the chain holding the smallest old label.
            smallest = min(min(m) for m, _, _ in chains)
            start = next(k for k, (m, _, _) in enumerate(chains) if smallest in m)
            for k in range(len(chains)):
                members, out_slot, in_slot = chains[(start + k) % len(chains)]
                slot_label[out_slot] = next_label
                slot_label[in_slot] = next_label
                next_label += 1

        new_crossings = []
        for ci in range(len(self.crossings)):
            if ci == c:
                continue
            labels = [slot_label[(ci, pos)] for pos in range(4)]
            if passage_entry[(ci, 0)] == (ci, 0):
                new_crossings.append(tuple(labels))
            else:  # under-strand now traversed c -> a: rotate by two
                new_crossings.append((labels[2], labels[3], labels[0], labels[1]))
        return Diagram(new_crossings, self.unknotted_components + freed)

    def oriented_smoothing(self, c: int) -> "Diagram":
        """The splice compatible with both strand orientations at ``c``."""
        self._check_crossing(c)
        return self.smooth(c, "A" if self._signs[c] == 1 else "B")

    # ------------------------------------------------------------------
    # Predicates.

    def is_alternating(self) -> bool:
        """Over/under passages strictly alternate along every component."""
        for comp in self.components:
            kinds = []
            for arc in comp:
                _, pos = self.arc_head(arc)
                kinds.append(pos % 2)  # 0: under passage, 1: over passage
            if any(kinds[i] == kinds[(i + 1) % len(kinds)] for i in range(len(kinds))):
                return False
        return True

    def underlying_pieces(self) -> int:
        """Connected pieces of the underlying 4-valent graph plus circles."""
        if not self.crossings:
            return self.unknotted_components
        parent = list(range(len(self.crossings)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for s0, s1 in self._arc_slots.values():
            r0, r1 = find(s0[0]), find(s1[0])
            if r0 != r1:
                parent[r0] = r1
        pieces = len({find(i) for i in range(len(self.crossings))})
        return pieces + self.unknotted_components

    def is_split(self) -> bool:
        return self.underlying_pieces() >= 2

    def is_reduced(self) -> bool:
        """No nugatory crossing: neither splice of any crossing splits.

        Precondition: the diagram is non-split.
        """
        if self.is_split():
            raise PreconditionError("is_reduced is defined for non-split diagrams")
        for ci in range(len(self.crossings)):
            if self.smooth(ci, "A").is_split() or self.smooth(ci, "B").is_split():
                return False
        return True


@dataclass(frozen=True)
class SkeinTriple:
    """Oriented skein triple at one site; members differ only there."""

    l_plus: Diagram
    l_minus: Diagram
    l_zero: Diagram
    site: int


# ---------------------------------------------------------------------------
# Splice tracing shared with the bracket state sum and the state graphs.

def splice_partition(d: Diagram, assignment: Iterable[SpliceKind]) -> tuple[int, dict[int, int]]:
    """Loops of the state given by a per-crossing splice assignment.

    Returns the loop count of the spliced arcs (crossing-free circles are
    *not* included) together with a map from arc label to a canonical loop
    representative.
    """
    assignment = tuple(assignment)
    if len(assignment) != len(d.crossings):
        raise ValueError("one splice choice per crossing required")
    parent: dict[int, int] = {arc: arc for arc in range(1, d.arc_count + 1)}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for tup, kind in zip(d.crossings, assignment):
        if kind not in _SPLICE_JOINS:
            raise ValueError(f"splice kind must be 'A' or 'B', not {kind!r}")
        for p, q in _SPLICE_JOINS[kind]:
            rp, rq = find(tup[p]), find(tup[q])
            if rp != rq:
                parent[rp] = rq
    roots = {arc: find(arc) for arc in parent}
    return len(set(roots.values())), roots


# ---------------------------------------------------------------------------
# PD text parsing and rendering.

_TOKEN_RE = re.compile(r"([XO])\[([^\]]*)\]")


def parse_pd(text: str) -> Diagram:
    """Parse PD text: whitespace-separated ``X[a,b,c,d]`` and ``O[k]`` terms.

    ``#`` starts a comment running to the end of the line.  Raises
    :class:`PDSyntaxError` with a character position for malformed text and
    :class:`PDValidationError` for structurally invalid diagrams.
    """
    crossings: list[tuple[int, int, int, int]] = []
    circles = 0
    pos = 0
    n = len(text)
    saw_term = False
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "#":
            nl = text.find("\n", pos)
            pos = n if nl == -1 else nl + 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise PDSyntaxError(f"unexpected character {ch!r}", pos)
        kind, body = m.group(1), m.group(2)
        fields = [f.strip() for f in body.split(",")]
        if not all(f.isdigit() and int(f) > 0 for f in fields):
            raise PDSyntaxError(f"expected positive integers inside {kind}[...]", pos)
        values = [int(f) for f in fields]
        if kind == "X":
            if len(values) != 4:
                raise PDSyntaxError("X terms take exactly four arc labels", pos)
            crossings.append(tuple(values))
        else:
            if len(values) != 1:
                raise PDSyntaxError("O terms take exactly one label", pos)
            circles += 1
        saw_term = True
        pos = m.end()
    if not saw_term:
        raise PDSyntaxError("empty PD text", 0)
    return Diagram(crossings, circles)


def render_pd(d: Diagram) -> str:
    """Canonical PD text for a diagram (inverse of :func:`parse_pd`)."""
    parts = [f"X[{a},{b},{c},{e}]" for a, b, c, e in d.crossings]
    parts.extend(f"O[{k}]" for k in range(1, d.unknotted_components + 1))
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Operation-style aliases over the Diagram methods.

def crossing_sign(d: Diagram, c: int) -> int:
    return d.crossing_sign(c)


def writhe(d: Diagram) -> int:
    return d.writhe()


def crossing_change(d: Diagram, c: int) -> Diagram:
    return d.crossing_change(c)


def smooth(d: Diagram, c: int, kind: SpliceKind) -> Diagram:
    return d.smooth(c, kind)


def oriented_smoothing(d: Diagram, c: int) -> Diagram:
    return d.oriented_smoothing(c)


def skein_triple(d: Diagram, c: int) -> SkeinTriple:
    """The triple (L+, L-, L0) agreeing with ``d`` away from crossing ``c``."""
    d._check_crossing(c)
    changed = d.crossing_change(c)
    zero = d.oriented_smoothing(c)
    if d.crossing_sign(c) == -1:
        return SkeinTriple(l_plus=changed, l_minus=d, l_zero=zero, site=c)
    return SkeinTriple(l_plus=d, l_minus=changed, l_zero=zero, site=c)


def is_alternating_diagram(d: Diagram) -> bool:
    return d.is_alternating()


def is_split_diagram(d: Diagram) -> bool:
    return d.is_split()


def underlying_components(d: Diagram) -> int:
    return d.underlying_pieces()


def is_reduced(d: Diagram) -> bool:
    return d.is_reduced()


def mirror_of(d: Diagram) -> Diagram:
    return d.mirror()
