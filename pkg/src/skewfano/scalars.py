"""Exact scalar arithmetic: ℚ, the cyclotomic field ℚ(ζ₁₂), and prime fields.

Every scalar is immutable and carries a field tag.  Mixing tags is a hard
error; ℚ enters the other two fields only through :func:`promote`.  Plain
Python ints are accepted on either side of an operation (n·1 makes sense in
any ring), but `Fraction`s and floats are not.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import BadReduction, FieldMismatchError

IntLike = Union[int, "Scalar"]


class Scalar:
    """Common base for the three field element types."""

    __slots__ = ()

    def field(self) -> "Field":
        raise NotImplementedError

    def is_zero(self) -> bool:
        raise NotImplementedError

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __truediv__(self, other):
        if isinstance(other, int):
            other = self.field().scalar(other)
        return self * other.inverse()


class Field:
    """Field tag.  Instances compare by structure (kind and modulus)."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        self.kind = kind  # "Q", "Qzeta12", "Fp"
        self.p = p

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return {"Q": "QQ", "Qzeta12": "QQ(zeta12)", "Fp": f"GF({self.p})"}[self.kind]

    def zero(self) -> Scalar:
        return self.scalar(0)

    def one(self) -> Scalar:
        return self.scalar(1)

    def scalar(self, n) -> Scalar:
        """Build a field element from an int (or Fraction for Q-based fields)."""
        if self.kind == "Q":
            return Rational(n)
        if self.kind == "Qzeta12":
            return Cyclotomic12((Fraction(n), Fraction(0), Fraction(0), Fraction(0)))
        return PrimeFieldElement(n % self.p, self.p)


QQ = Field("Q")
QZETA12 = Field("Qzeta12")


def GF(p: int) -> Field:
    if p < 2 or p >= 2**61:
        raise ValueError(f"prime modulus out of range: {p}")
    return Field("Fp", p)


class Rational(Scalar):
    """Arbitrary-precision rational, always in lowest terms (Fraction)."""

    __slots__ = ("value",)

    def __init__(self, value):
        if isinstance(value, Rational):
            value = value.value
        if isinstance(value, float):
            raise TypeError("floats are banned from the exact substrate")
        self.value = Fraction(value)

    def field(self):
        return QQ

    def is_zero(self):
        return self.value == 0

    def _coerce(self, other) -> "Rational":
        if isinstance(other, Rational):
            return other
        if isinstance(other, int):
            return Rational(other)
        if isinstance(other, Scalar):
            raise FieldMismatchError(f"cannot mix QQ with {other.field()}")
        raise TypeError(f"cannot interpret {other!r} as a rational scalar")

    def __add__(self, other):
        return Rational(self.value + self._coerce(other).value)

    __radd__ = __add__

    def __mul__(self, other):
        return Rational(self.value * self._coerce(other).value)

    __rmul__ = __mul__

    def __neg__(self):
        return Rational(-self.value)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return Rational(1 / self.value)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        return isinstance(other, Rational) and self.value == other.value

    def __hash__(self):
        return hash(("Q", self.value))

    def __repr__(self):
        return f"{self.value}"


# ζ = ζ₁₂; reduction uses ζ⁴ = ζ² − 1 (the 12th cyclotomic polynomial).
_ZETA_POW = {}  # small cache of ζ^k, k = 0..11, as coordinate 4-tuples


def _zeta_power(k: int):
    k %= 12
    if k in _ZETA_POW:
        return _ZETA_POW[k]
    coords = [Fraction(0)] * 4
    if k < 4:
        coords[k] = Fraction(1)
    else:
        # ζ^k = ζ^(k-4) · ζ⁴ = ζ^(k-4) · (ζ² − 1)
        prev = _zeta_power(k - 4)
        shifted = _cyclo_mul_raw(prev, (Fraction(0), Fraction(0), Fraction(1), Fraction(0)))
        coords = [shifted[i] - prev[i] for i in range(4)]
    _ZETA_POW[k] = tuple(coords)
    return _ZETA_POW[k]


def _cyclo_mul_raw(a, b):
    # multiply two coordinate 4-tuples mod ζ⁴ − ζ² + 1
    prod = [Fraction(0)] * 7
    for i in range(4):
        if a[i] == 0:
            continue
        for j in range(4):
            if b[j] == 0:
                continue
            prod[i + j] += a[i] * b[j]
    # reduce degrees 6, 5, 4 downward via ζ⁴ = ζ² − 1
    for d in (6, 5, 4):
        c = prod[d]
        if c != 0:
            prod[d] = Fraction(0)
            prod[d - 2] += c
            prod[d - 4] -= c
    return tuple(prod[:4])


class Cyclotomic12(Scalar):
    """Element of ℚ(ζ₁₂) in the power basis 1, ζ, ζ², ζ³."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(Fraction(c) for c in coords)
        assert len(self.coords) == 4

    def field(self):
        return QZETA12

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def rational_part(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    def _coerce(self, other) -> "Cyclotomic12":
        if isinstance(other, Cyclotomic12):
            return other
        if isinstance(other, int):
            return Cyclotomic12((Fraction(other), 0, 0, 0))
        if isinstance(other, Scalar):
            raise FieldMismatchError(f"cannot mix QQ(zeta12) with {other.field()}")
        raise TypeError(f"cannot interpret {other!r} in QQ(zeta12)")

    def __add__(self, other):
        o = self._coerce(other)
        return Cyclotomic12(tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __mul__(self, other):
        o = self._coerce(other)
        return Cyclotomic12(_cyclo_mul_raw(self.coords, o.coords))

    __rmul__ = __mul__

    def __neg__(self):
        return Cyclotomic12(tuple(-a for a in self.coords))

    def inverse(self):
        # Solve x·self = 1 via the 4×4 multiplication matrix (columns are
        # self·ζ^j in the power basis).
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in QQ(zeta12)")
        cols = []
        for j in range(4):
            basis = [Fraction(0)] * 4
            basis[j] = Fraction(1)
            cols.append(_cyclo_mul_raw(self.coords, tuple(basis)))
        # Gaussian elimination on the 4×4 system  M x = e0.
        m = [[cols[j][i] for j in range(4)] for i in range(4)]
        rhs = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        for col in range(4):
            piv = next(r for r in range(col, 4) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            inv = 1 / m[col][col]
            m[col] = [v * inv for v in m[col]]
            rhs[col] *= inv
            for r in range(4):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
                    rhs[r] -= f * rhs[col]
        return Cyclotomic12(tuple(rhs))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coords == (Fraction(other), 0, 0, 0)
        return isinstance(other, Cyclotomic12) and self.coords == other.coords

    def __hash__(self):
        return hash(("Qzeta12", self.coords))

    def __repr__(self):
        names = ["", "z", "z^2", "z^3"]
        terms = [f"{c}{('*' + n) if n else ''}" for c, n in zip(self.coords, names) if c != 0]
        return " + ".join(terms) if terms else "0"


class PrimeFieldElement(Scalar):
    __slots__ = ("residue", "p")

    def __init__(self, residue: int, p: int):
        self.residue = residue % p
        self.p = p

    def field(self):
        return GF(self.p)

    def is_zero(self):
        return self.residue == 0

    def _coerce(self, other) -> "PrimeFieldElement":
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.p)
        if isinstance(other, Scalar):
            raise FieldMismatchError(f"cannot mix GF({self.p}) with {other.field()}")
        raise TypeError(f"cannot interpret {other!r} in GF({self.p})")

    def __add__(self, other):
        return PrimeFieldElement(self.residue + self._coerce(other).residue, self.p)

    __radd__ = __add__

    def __mul__(self, other):
        return PrimeFieldElement(self.residue * self._coerce(other).residue, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.p)

    def inverse(self):
        if self.residue == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return PrimeFieldElement(pow(self.residue, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.residue == other % self.p
        return (
            isinstance(other, PrimeFieldElement)
            and self.p == other.p
            and self.residue == other.residue
        )

    def __hash__(self):
        return hash(("Fp", self.p, self.residue))

    def __repr__(self):
        return f"{self.residue} (mod {self.p})"


def rational(n, d: int = 1) -> Rational:
    return Rational(Fraction(n, d))


def promote(x: Rational, target: Field) -> Scalar:
    """Ring-homomorphic image of a rational in ℚ(ζ₁₂) or GF(p)."""
    if not isinstance(x, Rational):
        raise TypeError("promote expects a QQ scalar")
    if target == QQ:
        return x
    if target == QZETA12:
        return Cyclotomic12((x.value, 0, 0, 0))
    if target.kind == "Fp":
        p = target.p
        num, den = x.value.numerator, x.value.denominator
        if den % p == 0:
            raise BadReduction(f"denominator of {x} divisible by {p}")
        return PrimeFieldElement(num * pow(den, p - 2, p) % p, p)
    raise ValueError(f"unknown target field {target}")


def cyclotomic_units() -> tuple[Cyclotomic12, Cyclotomic12]:
    """The units i = ζ³ (i² = −1) and j = ζ⁴ (j³ = 1, j ≠ 1)."""
    i = Cyclotomic12(_zeta_power(3))
    j = Cyclotomic12(_zeta_power(4))
    return i, j


# Order-12 roots mod p and reduction of cyclotomic scalars ------------------


def zeta12_mod_p(p: int) -> int:
    """Smallest element of multiplicative order exactly 12 in GF(p)^×.

    Requires p ≡ 1 (mod 12), the split primes of ℚ(ζ₁₂).
    """
    if (p - 1) % 12 != 0:
        raise BadReduction(f"{p} is not congruent to 1 mod 12")
    for z in range(2, p):
        if pow(z, 12, p) == 1 and all(pow(z, 12 // q, p) != 1 for q in (2, 3)):
            return z
    raise BadReduction(f"no primitive 12th root mod {p}")


def reduce_scalar_mod_p(x: Scalar, p: int) -> int:
    """Image of x in GF(p) as a plain int; picks ζ₁₂ ↦ zeta12_mod_p(p)."""
    if isinstance(x, PrimeFieldElement):
        if x.p != p:
            raise FieldMismatchError(f"GF({x.p}) scalar reduced mod {p}")
        return x.residue
    if isinstance(x, Rational):
        return promote(x, GF(p)).residue
    if isinstance(x, Cyclotomic12):
        z = zeta12_mod_p(p)
        acc = 0
        for k, c in enumerate(x.coords):
            if c.denominator % p == 0:
                raise BadReduction(f"denominator of {x} divisible by {p}")
            acc += c.numerator * pow(c.denominator, p - 2, p) * pow(z, k, p)
        return acc % p
    raise TypeError(f"cannot reduce {x!r}")
