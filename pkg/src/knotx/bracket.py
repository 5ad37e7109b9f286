"""Kauffman bracket by exhaustive state enumeration, and its offspring:
the writhe-normalized X polynomial, the Jones polynomial, span, and the
degree prediction for the all-B state.

The bracket of a diagram D is the sum over all 2^c splice assignments S of

    A^(a(S) - b(S)) * (-A^2 - A^-2)^(|S| - 1)

where a/b count A/B splices and |S| counts the loops after splicing
(crossing-free circles count as loops in every state).  The X polynomial
multiplies by (-A^3)^(-writhe) and the Jones polynomial substitutes
A = t^(-1/4).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import _kernel
from .diagram import Diagram, splice_partition
from .errors import PreconditionError, StateLimitError
from .laurent import LaurentA, QuarterLaurentT, mono_pow, substitute_A_to_quarter_t

__all__ = [
    "DEFAULT_STATE_LIMIT",
    "StateResolution",
    "enumerate_states",
    "kauffman_bracket",
    "x_polynomial",
    "jones",
    "span_x",
    "predicted_min_deg",
]

DEFAULT_STATE_LIMIT = 20

# -A^2 - A^-2: the loop factor.
_DELTA = LaurentA({2: -1, -2: -1})


@dataclass(frozen=True)
class StateResolution:
    """One splice assignment and the loop count it produces."""

    assignment: tuple[str, ...]
    a_count: int
    b_count: int
    loop_count: int


def _check_limit(d: Diagram, limit: int) -> None:
    if len(d.crossings) > limit:
        raise StateLimitError(len(d.crossings), limit)


def enumerate_states(d: Diagram, limit: int = DEFAULT_STATE_LIMIT) -> Iterator[StateResolution]:
    """Yield all 2^c states in binary-counter order (crossing 0 = low bit)."""
    _check_limit(d, limit)
    n = len(d.crossings)
    for state in range(1 << n):
        assignment = tuple("B" if (state >> i) & 1 else "A" for i in range(n))
        loops, _ = splice_partition(d, assignment)
        b_count = sum(1 for k in assignment if k == "B")
        yield StateResolution(
            assignment=assignment,
            a_count=n - b_count,
            b_count=b_count,
            loop_count=loops + d.unknotted_components,
        )


def kauffman_bracket(d: Diagram, limit: int = DEFAULT_STATE_LIMIT) -> LaurentA:
    """The bracket polynomial <D>, assembled from the state histogram."""
    _check_limit(d, limit)
    if d.component_count() == 0:
        raise PreconditionError("the bracket of the empty diagram is undefined")
    n = len(d.crossings)
    hist = _kernel.state_histogram(list(d.crossings), d.arc_count)
    # Loop factors are shared across states with equal |S|: compute each
    # power of delta once.
    powers: dict[int, LaurentA] = {}

    def delta_power(k: int) -> LaurentA:
        if k not in powers:
            powers[k] = _DELTA ** k
        return powers[k]

    total = LaurentA()
    for (b_count, loops), count in sorted(hist.items()):
        exponent = loops + d.unknotted_components - 1
        term = LaurentA({n - 2 * b_count: count}) * delta_power(exponent)
        total = total + term
    return total


def x_polynomial(d: Diagram, limit: int = DEFAULT_STATE_LIMIT) -> LaurentA:
    """The writhe-normalized bracket (-A^3)^(-w(D)) * <D>."""
    return mono_pow(-1, 3, -d.writhe()) * kauffman_bracket(d, limit)


def jones(d: Diagram, limit: int = DEFAULT_STATE_LIMIT) -> QuarterLaurentT:
    """Jones polynomial via A = t^(-1/4)."""
    v = substitute_A_to_quarter_t(x_polynomial(d, limit))
    # All quarter-degrees of a diagram's Jones value share one parity.
    assert v.uniform_residue_mod2(), "Jones substitution produced mixed parities"
    return v


def span_x(d: Diagram, limit: int = DEFAULT_STATE_LIMIT) -> int:
    """Degree span of the X polynomial (4c for reduced alternating connected)."""
    return x_polynomial(d, limit).span()


def predicted_min_deg(d: Diagram) -> int:
    """Minimum X-degree predicted from the all-B state of a connected
    alternating diagram: -3w - c - 2|S_B| + 2 (the B-splice count of the
    all-B state being the crossing count)."""
    if not d.crossings:
        raise PreconditionError("degree prediction needs at least one crossing")
    if d.is_split():
        raise PreconditionError("degree prediction requires a connected diagram")
    if not d.is_alternating():
        raise PreconditionError("degree prediction requires an alternating diagram")
    loops, _ = splice_partition(d, "B" * len(d.crossings))
    s_b = loops + d.unknotted_components
    return -3 * d.writhe() - len(d.crossings) - 2 * s_b + 2
