"""Congruence classes of integers and the arity-shape solver.

A class ``[[a]]_b`` is the set ``{a + b*k : k in Z}`` with ``0 <= a <= b-1``.
Such a set is closed under summing ``m`` representatives exactly when
``(m-1)*a`` is divisible by ``b``, and under multiplying ``n`` representatives
exactly when ``a**n == a (mod b)``.  The minimal pair ``(m, n)`` satisfying
both, together with the two integer invariants

    add_invariant = (m-1)*a / b
    mul_invariant = (a**n - a) / b

is the arity shape of the class.  Some classes admit no multiplication arity
at all; the solver proves that by detecting a repeat in the residue orbit of
``a`` before ``a`` itself reappears.

All arithmetic is exact on unbounded integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import (
    BadArityShape,
    BadModulus,
    NoAritySolution,
    NotInClass,
    ResidueOutOfRange,
)


@dataclass(frozen=True)
class CongruenceClass:
    """The congruence class [[residue]]_modulus."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise BadModulus(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue <= self.modulus - 1:
            raise ResidueOutOfRange(
                f"residue must lie in [0, {self.modulus - 1}], got {self.residue}"
            )

    def __str__(self) -> str:
        return f"[[{self.residue}]]_{self.modulus}"

    def element(self, k: int) -> "RingElement":
        return RingElement(self, k)

    def element_from_value(self, value: int) -> "RingElement":
        offset = value - self.residue
        if offset % self.modulus != 0:
            raise NotInClass(f"{value} is not in {self}")
        return RingElement(self, offset // self.modulus)

    def contains_value(self, value: int) -> bool:
        return (value - self.residue) % self.modulus == 0


@dataclass(frozen=True)
class RingElement:
    """One representative of a congruence class, identified by its index k.

    The integer value is always residue + modulus*k; two elements are equal
    only when class and index both coincide, so equal decimal values from
    different classes stay distinct.
    """

    congruence: CongruenceClass
    k: int

    @property
    def value(self) -> int:
        return self.congruence.residue + self.congruence.modulus * self.k

    def __repr__(self) -> str:
        return f"RingElement({self.value} = x_{self.k} in {self.congruence})"

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class ArityShape:
    """Arities (add_arity, mul_arity) with the attached integer invariants."""

    add_arity: int
    mul_arity: int
    add_invariant: int
    mul_invariant: int


def make_class(residue: int, modulus: int) -> CongruenceClass:
    """Validate and build the congruence class [[residue]]_modulus."""
    return CongruenceClass(residue, modulus)


def element_from_k(congruence: CongruenceClass, k: int) -> RingElement:
    """The representative residue + modulus*k."""
    return congruence.element(k)


def element_from_value(congruence: CongruenceClass, value: int) -> RingElement:
    """Recover the index of a value, or raise NotInClass."""
    return congruence.element_from_value(value)


def additive_invariant(congruence: CongruenceClass, add_arity: int) -> Optional[int]:
    """(add_arity-1)*a / b when that is an exact integer, else None."""
    if add_arity < 2:
        raise BadArityShape(f"arity must be >= 2, got {add_arity}")
    a, b = congruence.residue, congruence.modulus
    q, r = divmod((add_arity - 1) * a, b)
    return q if r == 0 else None


def multiplicative_invariant(congruence: CongruenceClass, mul_arity: int) -> Optional[int]:
    """(a**mul_arity - a) / b when a**mul_arity == a (mod b), else None."""
    if mul_arity < 2:
        raise BadArityShape(f"arity must be >= 2, got {mul_arity}")
    a, b = congruence.residue, congruence.modulus
    if pow(a, mul_arity, b) != a % b:
        return None
    return (a**mul_arity - a) // b


def _minimal_add_arity(congruence: CongruenceClass) -> int:
    # (m-1)*a == 0 (mod b): the smallest positive multiplier of a that b
    # divides is b/gcd(a, b); for a == 0 every m works, so m = 2.
    a, b = congruence.residue, congruence.modulus
    if a == 0:
        return 2
    return 1 + b // gcd(a, b)


def _minimal_mul_arity(congruence: CongruenceClass) -> Optional[int]:
    # Walk the residue orbit a, a^2, a^3, ... mod b.  The orbit cycles within
    # b steps; if some residue repeats before a itself does, a is outside the
    # cycle and no exponent can bring it back.
    a, b = congruence.residue, congruence.modulus
    target = a % b
    seen = {target}
    r = target
    n = 1
    while True:
        r = (r * a) % b
        n += 1
        if r == target:
            return n
        if r in seen:
            return None
        seen.add(r)


def minimal_arity_shape(congruence: CongruenceClass) -> ArityShape:
    """Smallest arities >= 2 closing the class, with their invariants.

    Raises NoAritySolution when no multiplication arity exists.
    """
    add_arity = _minimal_add_arity(congruence)
    mul_arity = _minimal_mul_arity(congruence)
    if mul_arity is None:
        raise NoAritySolution(f"no multiplication arity closes {congruence}")
    i = additive_invariant(congruence, add_arity)
    j = multiplicative_invariant(congruence, mul_arity)
    assert i is not None and j is not None
    return ArityShape(add_arity, mul_arity, i, j)


@dataclass(frozen=True)
class ShapeTableRow:
    congruence: CongruenceClass
    shape: Optional[ArityShape]


def arity_shape_table(max_modulus: int) -> list[ShapeTableRow]:
    """Shapes for every class with modulus <= max_modulus.

    Rows are ordered by modulus ascending, then residue ascending, so the
    output is byte-identical across runs.  Unsolvable classes carry
    ``shape=None``.
    """
    if max_modulus < 1:
        raise BadModulus(f"max modulus must be >= 1, got {max_modulus}")
    rows: list[ShapeTableRow] = []
    for b in range(1, max_modulus + 1):
        for a in range(b):
            congruence = CongruenceClass(a, b)
            try:
                shape: Optional[ArityShape] = minimal_arity_shape(congruence)
            except NoAritySolution:
                shape = None
            rows.append(ShapeTableRow(congruence, shape))
    return rows
