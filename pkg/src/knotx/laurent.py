"""Exact sparse Laurent polynomials over the integers.

Two flavours are used throughout the engine:

* :class:`LaurentA` -- polynomials in the bracket variable ``A``; degrees
  are plain integer exponents of ``A``.
* :class:`QuarterLaurentT` -- polynomials in ``t`` where the stored degree
  is the exponent of ``t`` *times four*, so that the substitution
  ``A = t^(-1/4)`` stays in integer bookkeeping.

Terms are held in a dict mapping degree to nonzero coefficient; the zero
polynomial is the empty dict.  Values are immutable after construction and
coefficients are Python ints, so everything is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "ZeroLaurentError",
    "LaurentA",
    "QuarterLaurentT",
    "add",
    "mul",
    "mono_pow",
    "min_deg",
    "max_deg",
    "span_of",
    "coeff_from_bottom",
    "coeff_from_top",
    "substitute_A_to_quarter_t",
    "parse_jones",
]

TermSource = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class ZeroLaurentError(ValueError):
    """Degree queries (min/max/span) are undefined on the zero polynomial."""


class _SparseLaurent:
    """Shared arithmetic core; subclasses fix the display variable."""

    __slots__ = ("_terms",)

    _terms: dict[int, int]

    def __init__(self, terms: TermSource = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for deg, coef in items:
            if not isinstance(deg, int) or not isinstance(coef, int):
                raise TypeError("degrees and coefficients must be ints")
            if coef:
                acc[deg] = acc.get(deg, 0) + coef
                if acc[deg] == 0:
                    del acc[deg]
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # -- basic inspection ------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """A copy of the degree -> coefficient mapping."""
        return dict(self._terms)

    def coeff(self, degree: int) -> int:
        return self._terms.get(degree, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def min_deg(self) -> int:
        if not self._terms:
            raise ZeroLaurentError("zero polynomial has no minimum degree")
        return min(self._terms)

    def max_deg(self) -> int:
        if not self._terms:
            raise ZeroLaurentError("zero polynomial has no maximum degree")
        return max(self._terms)

    def span(self) -> int:
        return self.max_deg() - self.min_deg()

    # -- coefficient slots in steps of four ------------------------------

    def coeff_from_bottom(self, i: int) -> int:
        """Coefficient of degree ``min_deg + 4*i``; vacant slots read 0."""
        if i < 0:
            raise ValueError("slot index must be nonnegative")
        if 4 * i > self.span():
            raise ValueError(f"slot {i} exceeds span {self.span()}")
        return self.coeff(self.min_deg() + 4 * i)

    def coeff_from_top(self, i: int) -> int:
        """Coefficient of degree ``max_deg - 4*i``; vacant slots read 0."""
        if i < 0:
            raise ValueError("slot index must be nonnegative")
        if 4 * i > self.span():
            raise ValueError(f"slot {i} exceeds span {self.span()}")
        return self.coeff(self.max_deg() - 4 * i)

    # -- ring operations --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self)({0: other})
        if type(other) is type(self):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for deg, coef in other._terms.items():
            s = out.get(deg, 0) + coef
            if s:
                out[deg] = s
            else:
                out.pop(deg, None)
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({d: -c for d, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                deg = d1 + d2
                s = out.get(deg, 0) + c1 * c2
                if s:
                    out[deg] = s
                else:
                    del out[deg]
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            # Only unit monomials are invertible in Z[x, x^-1].
            if len(self._terms) != 1:
                raise ValueError("negative powers require a monomial")
            ((deg, coef),) = self._terms.items()
            if coef not in (1, -1):
                raise ValueError("negative powers require a unit coefficient")
            return type(self)({deg * exponent: coef if exponent % 2 else 1})
        result = type(self)({0: 1})
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- equality / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if type(other) is type(self):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.render()!r})"

    def render(self) -> str:
        raise NotImplementedError


class LaurentA(_SparseLaurent):
    """Integer Laurent polynomial in the Kauffman bracket variable ``A``."""

    __slots__ = ()

    def render(self) -> str:
        """Canonical text form: terms by increasing degree, e.g. ``-1*A^-9 + 1*A^-1``."""
        if not self._terms:
            return "0"
        parts = []
        for deg in sorted(self._terms):
            coef = self._terms[deg]
            parts.append(str(coef) if deg == 0 else f"{coef}*A^{deg}")
        return " + ".join(parts)

    def substituted_mirror(self) -> "LaurentA":
        """The image under ``A -> A^-1`` (degree negation)."""
        return LaurentA({-d: c for d, c in self._terms.items()})


class QuarterLaurentT(_SparseLaurent):
    """Integer Laurent polynomial in ``t^(1/4)``; keys are quarter-degrees."""

    __slots__ = ()

    @staticmethod
    def _power_str(quarter: int) -> str:
        e = Fraction(quarter, 4)
        if e == 1:
            return "t"
        if e.denominator == 1:
            return f"t^{e.numerator}"
        return f"t^{e.numerator}/{e.denominator}"

    def render(self) -> str:
        """Canonical Jones-style text, e.g. ``-t^-4 + t^-3 + t^-1``.

        Exponents are reduced fractions of the quarter-degree; unit
        coefficients are suppressed; terms are joined with `` + `` / `` - ``
        in increasing degree.
        """
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for deg in sorted(self._terms):
            coef = self._terms[deg]
            mag = abs(coef)
            if deg == 0:
                body = str(mag)
            elif mag == 1:
                body = self._power_str(deg)
            else:
                body = f"{mag}*{self._power_str(deg)}"
            if not chunks:
                chunks.append(f"-{body}" if coef < 0 else body)
            else:
                chunks.append(f"{'-' if coef < 0 else '+'} {body}")
        return " ".join(chunks)

    def mirrored(self) -> "QuarterLaurentT":
        """The image under ``t -> t^-1`` (Jones of the mirror diagram)."""
        return QuarterLaurentT({-d: c for d, c in self._terms.items()})

    def uniform_residue_mod2(self) -> bool:
        """True when all quarter-degrees share one residue class mod 2."""
        if not self._terms:
            return True
        residues = {d & 1 for d in self._terms}
        return len(residues) == 1


# ---------------------------------------------------------------------------
# Operation-style aliases.  These are the stable functional surface; the
# methods above are the ergonomic one.

def add(p: _SparseLaurent, q: _SparseLaurent) -> _SparseLaurent:
    return p + q


def mul(p: _SparseLaurent, q: _SparseLaurent) -> _SparseLaurent:
    return p * q


def mono_pow(base_sign: int, base_degree: int, exponent: int) -> LaurentA:
    """``(sign * A^base_degree) ** exponent`` with negative exponents allowed."""
    if base_sign not in (1, -1):
        raise ValueError("base_sign must be +1 or -1")
    coef = base_sign if exponent % 2 else 1
    return LaurentA({base_degree * exponent: coef})


def min_deg(p: _SparseLaurent) -> int:
    return p.min_deg()


def max_deg(p: _SparseLaurent) -> int:
    return p.max_deg()


def span_of(p: _SparseLaurent) -> int:
    return p.span()


def coeff_from_bottom(p: _SparseLaurent, i: int) -> int:
    return p.coeff_from_bottom(i)


def coeff_from_top(p: _SparseLaurent, i: int) -> int:
    return p.coeff_from_top(i)


def substitute_A_to_quarter_t(p: LaurentA) -> QuarterLaurentT:
    """Apply ``A = t^(-1/4)``: the term ``c*A^d`` becomes quarter-degree ``-d``."""
    return QuarterLaurentT({-d: c for d, c in p.terms.items()})


# ---------------------------------------------------------------------------
# Parsing of the canonical Jones rendering (used by the knot table loader).

def parse_jones(text: str) -> QuarterLaurentT:
    """Parse the canonical :meth:`QuarterLaurentT.render` form back to a value.

    Raises ValueError on anything the renderer would not emit.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty Jones string")
    if s == "0":
        return QuarterLaurentT()
    # Normalize "a - b" to "a + -b" then split on " + ".
    tokens = s.replace(" - ", " + -").split(" + ")
    terms: dict[int, int] = {}
    for tok in tokens:
        tok = tok.strip()
        if not tok:
            raise ValueError(f"malformed Jones string: {text!r}")
        sign = 1
        if tok.startswith("-"):
            sign = -1
            tok = tok[1:]
        if "*" in tok:
            coef_str, power = tok.split("*", 1)
            coef = sign * int(coef_str)
        elif tok.startswith("t"):
            coef, power = sign, tok
        else:
            coef, power = sign * int(tok), ""
        if not power:
            quarter = 0
        elif power == "t":
            quarter = 4
        elif power.startswith("t^"):
            frac = Fraction(power[2:])
            quarter_f = frac * 4
            if quarter_f.denominator != 1:
                raise ValueError(f"exponent {power[2:]!r} is not a quarter-integer")
            quarter = int(quarter_f)
        else:
            raise ValueError(f"malformed term {tok!r} in Jones string")
        if quarter in terms:
            raise ValueError(f"duplicate degree in Jones string: {text!r}")
        terms[quarter] = coef
    return QuarterLaurentT(terms)
