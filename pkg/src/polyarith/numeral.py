"""Positional numeral systems over polyadic rings.

A numeral over a ring with arities (m, n) is a digit string of length
``mul_count = add_count*(m-1) + 1`` (the consistency constraint between the
number of composed additions and multiplications), so the shortest numeral
has exactly m digits.  Digits are class elements indexed 0 .. base_index-1;
the digit at position i (counting from the least significant) carries weight
``base_value**(i*(n-1))``, i.e. it is multiplied by i nested multiplications
worth of base copies.  The least significant digit is bare: no unit element
is assumed to exist.

Evaluation runs two derivations on every call: the flat place-value
polynomial and the nested operation composition with quantized word widths.
They are asserted equal, so a regression in either path trips immediately.

Decoding inverts the affine structure of the digit alphabet: with
``P = base_value**(n-1)`` and digit values ``a + b*t``, a candidate digit
count L satisfies

    value == a*(P**L - 1)//(P - 1) + b*T

for a non-negative integer T whose base-P digits are the digit indices.
Candidates are scanned in increasing L; for a >= 1 the all-zeros floor value
grows strictly with L, which bounds the scan.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence, Union

from .congruence import ArityShape, RingElement
from .errors import (
    ArityMismatch,
    BadBase,
    BaseMismatch,
    CatalogTooLarge,
    ClassMismatch,
    DigitOutOfRange,
    InconsistentLengths,
    NotRepresentable,
)
from .ring import PolyadicRing, admissible_count

DEFAULT_CATALOG_CAP = 10**6


def length_plan(shape: ArityShape, add_count: int) -> int:
    """Digit count implied by ``add_count`` composed additions."""
    if add_count < 1:
        raise InconsistentLengths(f"addition count must be >= 1, got {add_count}")
    return add_count * (shape.add_arity - 1) + 1


def min_digits(shape: ArityShape) -> int:
    """Fewest digits any numeral over this shape can have (one addition)."""
    return length_plan(shape, 1)


def _check_base(ring: PolyadicRing, base: RingElement) -> None:
    if base.congruence != ring.congruence:
        raise ClassMismatch(f"base {base!r} does not belong to {ring.congruence}")
    if base.k < 2:
        raise BadBase(f"base index must be >= 2 for a two-digit alphabet, got {base.k}")


@dataclass(frozen=True)
class Numeral:
    """A strict numeral: digit indices bounded by the base index.

    ``digits`` holds the indices t with digit values residue + modulus*t,
    most significant first.
    """

    ring: PolyadicRing
    base: RingElement
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.ring, self.base)
        m = self.ring.add_arity
        count = len(self.digits)
        if count < m or (count - 1) % (m - 1) != 0:
            raise InconsistentLengths(
                f"digit count {count} is not add_count*({m}-1)+1 for any "
                f"add_count >= 1"
            )
        for t in self.digits:
            if not 0 <= t <= self.base.k - 1:
                raise DigitOutOfRange(
                    f"digit index {t} outside [0, {self.base.k - 1}]"
                )

    @property
    def add_count(self) -> int:
        return (len(self.digits) - 1) // (self.ring.add_arity - 1)

    @property
    def mul_count(self) -> int:
        return len(self.digits)

    @property
    def lengths(self) -> tuple[int, int]:
        return (self.add_count, self.mul_count)

    @property
    def digit_values(self) -> tuple[int, ...]:
        a = self.ring.congruence.residue
        b = self.ring.congruence.modulus
        return tuple(a + b * t for t in self.digits)

    @property
    def digit_elements(self) -> tuple[RingElement, ...]:
        return tuple(self.ring.element(t) for t in self.digits)

    def __str__(self) -> str:
        return format_digit_string(self)


@dataclass(frozen=True)
class GeneralizedNumeral:
    """A numeral whose digits are arbitrary class elements.

    Digit-wise addition of strict numerals lands here: the length constraint
    still holds but the alphabet bound is dropped.
    """

    ring: PolyadicRing
    base: RingElement
    digits: tuple[RingElement, ...]

    def __post_init__(self) -> None:
        _check_base(self.ring, self.base)
        m = self.ring.add_arity
        count = len(self.digits)
        if count < m or (count - 1) % (m - 1) != 0:
            raise InconsistentLengths(
                f"digit count {count} is not add_count*({m}-1)+1 for any "
                f"add_count >= 1"
            )
        for d in self.digits:
            if d.congruence != self.ring.congruence:
                raise ClassMismatch(f"digit {d!r} not in {self.ring.congruence}")

    @property
    def add_count(self) -> int:
        return (len(self.digits) - 1) // (self.ring.add_arity - 1)

    @property
    def mul_count(self) -> int:
        return len(self.digits)

    @property
    def lengths(self) -> tuple[int, int]:
        return (self.add_count, self.mul_count)

    @property
    def digit_values(self) -> tuple[int, ...]:
        return tuple(d.value for d in self.digits)


AnyNumeral = Union[Numeral, GeneralizedNumeral]


def numeral_from_values(
    ring: PolyadicRing, base_k: int, digit_values: Sequence[int]
) -> Numeral:
    """Build a strict numeral from digit values (not indices)."""
    base = ring.element(base_k)
    indices = []
    for y in digit_values:
        t = ring.element_from_value(y).k
        indices.append(t)
    return Numeral(ring, base, tuple(indices))


def _composed_value(numeral: AnyNumeral) -> int:
    # Nested-composition derivation: term i is the digit times i(n-1) base
    # factors folded by i multiplications, and the terms are folded by
    # add_count additions.  Every word width is re-validated.
    ring = numeral.ring
    n = ring.mul_arity
    base_val = numeral.base.value
    values = numeral.digit_values
    top = len(values) - 1
    terms = []
    for pos, y in enumerate(values):
        i = top - pos
        if i == 0:
            terms.append(y)
            continue
        word = [y] + [base_val] * (i * (n - 1))
        assert admissible_count(n, len(word)) == i
        acc = word[0]
        for factor in word[1:]:
            acc *= factor
        terms.append(acc)
    assert admissible_count(ring.add_arity, len(terms)) == numeral.add_count
    return sum(terms)


def evaluate(numeral: AnyNumeral) -> RingElement:
    """Exact value of a numeral, computed two ways and cross-checked."""
    ring = numeral.ring
    weight = numeral.base.value ** (ring.mul_arity - 1)
    flat = 0
    for y in numeral.digit_values:
        flat = flat * weight + y
    assert flat == _composed_value(numeral)
    return ring.element_from_value(flat)


def _base_digits(t: int, radix: int) -> list[int]:
    # least significant first; empty for t == 0
    out = []
    while t > 0:
        t, d = divmod(t, radix)
        out.append(d)
    return out


def decode(
    ring: PolyadicRing, base: RingElement, value: RingElement
) -> Numeral:
    """The shortest numeral over ``base`` evaluating to ``value``.

    Raises NotRepresentable when no admissible digit count and alphabet-bound
    digit string reproduces the value; over polyadic rings that is the common
    case, not an anomaly.
    """
    _check_base(ring, base)
    if value.congruence != ring.congruence:
        raise ClassMismatch(f"value {value!r} does not belong to {ring.congruence}")
    a = ring.congruence.residue
    b = ring.congruence.modulus
    m = ring.add_arity
    weight = base.value ** (ring.mul_arity - 1)
    kp = base.k
    v = value.value

    if a == 0 and v < 0:
        raise NotRepresentable(f"{v} is negative; digit strings are non-negative")

    add_count = 1
    while True:
        count = add_count * (m - 1) + 1
        floor_val = a * (weight**count - 1) // (weight - 1)
        if a >= 1 and floor_val > v:
            raise NotRepresentable(
                f"{v} is below the smallest {count}-digit numeral over base "
                f"{base.value}"
            )
        offset = v - floor_val
        if offset >= 0:
            t, rem = divmod(offset, b)
            if rem == 0:
                digits = _base_digits(t, weight)
                if len(digits) <= count and all(d <= kp - 1 for d in digits):
                    padded = digits + [0] * (count - len(digits))
                    return Numeral(ring, base, tuple(reversed(padded)))
                if a == 0 and len(digits) <= count:
                    # the extracted digits never change for a == 0, so a
                    # violated alphabet bound cannot be cured by more length
                    raise NotRepresentable(
                        f"{v} needs a digit index above {kp - 1} over base "
                        f"{base.value}"
                    )
        add_count += 1


@dataclass(frozen=True)
class CatalogEntry:
    numeral: Numeral
    element: RingElement


def catalog_size(base: RingElement, mul_count: int) -> int:
    return base.k**mul_count


def iter_catalog(
    ring: PolyadicRing, base: RingElement, add_count: int
) -> Iterator[CatalogEntry]:
    """All numerals of the given addition count, in lexicographic digit
    order (most significant digit varies slowest)."""
    _check_base(ring, base)
    count = length_plan(ring.shape, add_count)
    for combo in product(range(base.k), repeat=count):
        numeral = Numeral(ring, base, combo)
        yield CatalogEntry(numeral, evaluate(numeral))


def enumerate_numerals(
    ring: PolyadicRing,
    base: RingElement,
    add_count: int,
    cap: int = DEFAULT_CATALOG_CAP,
) -> list[CatalogEntry]:
    """Materialized catalog; refuses to build more than ``cap`` records."""
    _check_base(ring, base)
    count = length_plan(ring.shape, add_count)
    size = catalog_size(base, count)
    if size > cap:
        raise CatalogTooLarge(
            f"catalog would hold {size} records, above the cap of {cap}"
        )
    return list(iter_catalog(ring, base, add_count))


def add_numerals(
    ring: PolyadicRing, numerals: Sequence[Numeral]
) -> GeneralizedNumeral:
    """Digit-wise m-ary addition; digits may leave the alphabet."""
    if len(numerals) != ring.add_arity:
        raise ArityMismatch(
            f"numeral addition takes {ring.add_arity} numerals, got {len(numerals)}"
        )
    first = numerals[0]
    for other in numerals[1:]:
        if other.base != first.base:
            raise BaseMismatch(
                f"all numerals must share base {first.base.value}, "
                f"got {other.base.value}"
            )
        if other.lengths != first.lengths:
            raise InconsistentLengths(
                f"all numerals must share lengths {first.lengths}, "
                f"got {other.lengths}"
            )
    columns = zip(*(nm.digit_elements for nm in numerals))
    summed = tuple(ring.add(list(column)) for column in columns)
    out = GeneralizedNumeral(ring, first.base, summed)
    assert evaluate(out) == ring.add([evaluate(nm) for nm in numerals])
    return out


def mul_numerals(
    ring: PolyadicRing, numerals: Sequence[Numeral]
) -> tuple[RingElement, Optional[Numeral]]:
    """n-ary product of numeral values, re-encoded over the shared base when
    representable (None otherwise)."""
    if len(numerals) != ring.mul_arity:
        raise ArityMismatch(
            f"numeral multiplication takes {ring.mul_arity} numerals, "
            f"got {len(numerals)}"
        )
    first = numerals[0]
    for other in numerals[1:]:
        if other.base != first.base:
            raise BaseMismatch(
                f"all numerals must share base {first.base.value}, "
                f"got {other.base.value}"
            )
    element = ring.mul([evaluate(nm) for nm in numerals])
    try:
        return element, decode(ring, first.base, element)
    except NotRepresentable:
        return element, None


def efficiency(symbols: int, base: int) -> float:
    """How many numbers a budget of ``symbols`` symbols can express in the
    given base: base**(symbols/base)."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if symbols < base:
        raise ValueError(f"symbol budget {symbols} is below base {base}")
    return float(base) ** (symbols / base)


def best_integer_base(symbols: int) -> int:
    """The integer base maximizing the efficiency function.

    base**(symbols/base) is compared exactly via p**q versus q**p (the
    symbol budget cancels), so float rounding and the 2-versus-4 tie cannot
    skew the argmax; ties keep the smaller base.
    """
    if symbols < 2:
        raise ValueError(f"symbol budget must be >= 2, got {symbols}")
    best = 2
    for p in range(3, symbols + 1):
        if p**best > best**p:
            best = p
    return best


_DIGIT_STRING = re.compile(r"^\((?P<digits>-?\d+(?:,-?\d+)*)\)_(?P<base>-?\d+)$")


def format_digit_string(numeral: AnyNumeral) -> str:
    """Render as "(v1,v2,...)_base" with digit values, most significant
    first."""
    body = ",".join(str(v) for v in numeral.digit_values)
    return f"({body})_{numeral.base.value}"


def parse_digit_string(ring: PolyadicRing, text: str) -> Numeral:
    """Parse "(v1,v2,...)_base" into a strict numeral.

    Digits are given as class values, not indices; both the digits and the
    base value must be members of the ring's class.
    """
    match = _DIGIT_STRING.match(text.strip())
    if match is None:
        raise ValueError(f"malformed digit string: {text!r}")
    base_value = int(match.group("base"))
    base = ring.element_from_value(base_value)
    values = [int(part) for part in match.group("digits").split(",")]
    return numeral_from_values(ring, base.k, values)
