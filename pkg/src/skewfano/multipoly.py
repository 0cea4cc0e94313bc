"""Sparse multivariate polynomials over an exact field.

Terms are stored in a dict keyed by exponent tuples; no zero coefficient is
ever stored, so equal polynomials have identical representations.  The
graded-lexicographic order is used whenever terms are listed.
"""

from __future__ import annotations

from typing import Dict, Iterable, Tuple

from .errors import FieldMismatchError
from .scalars import Field, Scalar

Exponent = Tuple[int, ...]


def _grlex_key(e: Exponent):
    return (sum(e), e)


class MultiPoly:
    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars: int, field: Field, terms: Dict[Exponent, Scalar] | None = None):
        self.nvars = nvars
        self.field = field
        self.terms: Dict[Exponent, Scalar] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent {e} for {nvars} variables")
                if c.field() != field:
                    raise FieldMismatchError(f"{c.field()} coefficient in {field} polynomial")
                if not c.is_zero():
                    self.terms[tuple(e)] = c

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, field: Field) -> "MultiPoly":
        return cls(nvars, field)

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "MultiPoly":
        return cls(nvars, c.field(), {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int, field: Field) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, field, {tuple(e): field.one()})

    # -- ring structure ------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.nvars, self.field, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, self.field, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, Scalar):
            return self.scale(other)
        self._check(other)
        out: Dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.nvars, self.field, out)

    def scale(self, c: Scalar) -> "MultiPoly":
        if c.field() != self.field:
            raise FieldMismatchError(f"{c.field()} scalar on {self.field} polynomial")
        return MultiPoly(self.nvars, self.field, {e: k * c for e, k in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, self.field, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # -- queries ---------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def coefficient(self, e: Exponent) -> Scalar:
        return self.terms.get(tuple(e), self.field.zero())

    # -- evaluation and calculus ----------------------------------------

    def evaluate(self, point: Iterable[Scalar]) -> Scalar:
        pt = list(point)
        if len(pt) != self.nvars:
            raise ValueError("wrong point length")
        for x in pt:
            if x.field() != self.field:
                raise FieldMismatchError("evaluation point in wrong field")
        acc = self.field.zero()
        for e, c in self.terms.items():
            term = c
            for x, k in zip(pt, e):
                for _ in range(k):
                    term = term * x
            acc = acc + term
        return acc

    def substitute(self, polys: list["MultiPoly"]) -> "MultiPoly":
        """Composition: plug the given polynomials in for the variables."""
        if len(polys) != self.nvars:
            raise ValueError("wrong substitution length")
        n = polys[0].nvars
        out = MultiPoly.zero(n, self.field)
        for e, c in self.terms.items():
            term = MultiPoly.constant(n, c)
            for q, k in zip(polys, e):
                for _ in range(k):
                    term = term * q
            out = out + term
        return out

    def partial(self, i: int) -> "MultiPoly":
        out: Dict[Exponent, Scalar] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c * e[i]
        return MultiPoly(self.nvars, self.field, out)

    def gradient(self) -> list["MultiPoly"]:
        return [self.partial(i) for i in range(self.nvars)]

    def map_coefficients(self, fn, field: Field) -> "MultiPoly":
        return MultiPoly(self.nvars, field, {e: fn(c) for e, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k)
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def monomials_of_degree(nvars: int, d: int) -> list[Exponent]:
    """All exponent tuples of total degree d, in graded-lex order."""
    out: list[Exponent] = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for k in range(remaining, -1, -1):
            rec(prefix + [k], remaining - k, slots - 1)

    rec([], d, nvars)
    return out
