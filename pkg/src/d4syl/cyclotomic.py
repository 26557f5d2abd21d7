"""Exact arithmetic in Z[zeta_p] and the fixed additive character of F_q.

A CycInt stores p integer coordinates in the spanning set
{1, zeta, ..., zeta^(p-1)}, kept canonical by subtracting the relation
1 + zeta + ... + zeta^(p-1) = 0 until the last coordinate is zero.  With
Python integers as backing, every identity checked downstream (orthogonality,
induction sums) is an equality of integers, never a tolerance.

The additive character used everywhere is theta(b) = zeta_p^Tr(b) with Tr the
absolute trace of F_q over Z/p; any other nontrivial choice would permute rows
of the final table without changing its isomorphism type.
"""

from __future__ import annotations


class CycInt:
    """An element of Z[zeta_p] in canonical coordinates."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p:
            raise ValueError(f"need {p} coordinates, got {len(coeffs)}")
        last = coeffs[-1]
        if last:
            coeffs = tuple(c - last for c in coeffs)
        self.p = p
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, p):
        return cls(p, (0,) * p)

    @classmethod
    def from_int(cls, p, n):
        return cls(p, (n,) + (0,) * (p - 1))

    @classmethod
    def root(cls, p, e):
        """zeta_p^e."""
        v = [0] * p
        v[e % p] = 1
        return cls(p, v)

    @classmethod
    def from_counts(cls, p, counts, scale=1):
        """sum_e counts[e] * zeta_p^e, optionally scaled by an integer."""
        return cls(p, tuple(int(c) * scale for c in counts))

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return CycInt(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.p, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % p] += a * b
        return CycInt(p, out)

    __rmul__ = __mul__

    def conjugate(self):
        """Complex conjugation, zeta -> zeta^(-1)."""
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            out[(-i) % p] = a
        return CycInt(p, out)

    def _coerce(self, other):
        if isinstance(other, int):
            return CycInt.from_int(self.p, other)
        if not isinstance(other, CycInt) or other.p != self.p:
            raise TypeError(f"cannot combine CycInt(p={self.p}) with {other!r}")
        return other

    # -- predicates and views ---------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        return (
            isinstance(other, CycInt)
            and other.p == self.p
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def coeff_list(self):
        """The p-1 canonical coordinates, as serialised in exports."""
        return list(self.coeffs[:-1])

    def __complex__(self):
        from math import cos, pi, sin

        return sum(
            c * complex(cos(2 * pi * i / self.p), sin(2 * pi * i / self.p))
            for i, c in enumerate(self.coeffs)
        )

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs[:-1]):
            if c == 0:
                continue
            unit = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            terms.append(f"{c}{'' if i == 0 else '*'}{unit}")
        return "CycInt(0)" if not terms else f"CycInt({' + '.join(terms)})"


# -- module-level ring ops (thin, for callers preferring a functional style) --


def add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def neg(a: CycInt) -> CycInt:
    return -a


def conj(a: CycInt) -> CycInt:
    return a.conjugate()


def int_scale(n: int, a: CycInt) -> CycInt:
    return a * n


def is_zero(a: CycInt) -> bool:
    return a.is_zero()


# -- the fixed additive characters -----------------------------------------


def theta(ctx, b) -> CycInt:
    """The fixed nontrivial character of F_q^+: b -> zeta_p^Tr(b)."""
    return CycInt.root(ctx.p, int(ctx.theta_exp[ctx.fq(b).idx]))


def theta_pi(ctx, x) -> CycInt:
    """theta composed with the projection pi_q, a character of F_{q^3}^+."""
    return CycInt.root(ctx.p, int(ctx.trpi[ctx.fq3(x).idx]))
