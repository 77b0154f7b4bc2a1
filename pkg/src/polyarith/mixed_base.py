"""Mixed-radix numeral systems, ordinary and polyadic.

The ordinary (binary-ring) form assigns one base per digit boundary: digit i
is weighted by the product of the i least significant bases, so a clock
reading of days/hours/minutes/seconds with bases (60, 60, 24) evaluates as

    days*24*60*60 + hours*60*60 + minutes*60 + seconds.

Bases are listed least significant first; digits most significant first.
The top digit rolls over into nothing and is therefore unbounded, every
other digit is bounded by the base immediately above it.

The polyadic form generalizes the per-position base: digit position i
carries its own tower of i*(n-1) base elements, consumed by i nested
multiplications, so a scheme with digit_count positions holds
digit_count*(digit_count-1)*(n-1)/2 bases in total.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .congruence import RingElement
from .errors import (
    ClassMismatch,
    DigitOutOfRange,
    InconsistentLengths,
    LengthMismatch,
    TowerShapeMismatch,
)
from .ring import PolyadicRing, admissible_count


@dataclass(frozen=True)
class MixedBaseScheme:
    """Per-boundary bases, least significant first; may be empty for a
    single-digit system."""

    bases: tuple[int, ...]

    def __post_init__(self) -> None:
        for p in self.bases:
            if p < 2:
                raise DigitOutOfRange(f"every base must be >= 2, got {p}")

    @property
    def digit_count(self) -> int:
        return len(self.bases) + 1


def eval_binary_mixed(digits: Sequence[int], scheme: MixedBaseScheme) -> int:
    """Value of a mixed-base digit vector (most significant digit first)."""
    if len(digits) != scheme.digit_count:
        raise LengthMismatch(
            f"{len(scheme.bases)} bases take {scheme.digit_count} digits, "
            f"got {len(digits)}"
        )
    for pos, y in enumerate(digits[1:], start=1):
        # digits[pos] sits at position digit_count-1-pos; its bound is the
        # base directly above that position
        bound = scheme.bases[scheme.digit_count - 1 - pos]
        if not 0 <= y <= bound - 1:
            raise DigitOutOfRange(
                f"digit {y} outside [0, {bound - 1}] for its position"
            )
    total = 0
    weight = 1
    weights = [1]
    for p in scheme.bases:
        weight *= p
        weights.append(weight)
    for pos, y in enumerate(digits):
        total += y * weights[scheme.digit_count - 1 - pos]
    return total


def decode_binary_mixed(value: int, scheme: MixedBaseScheme) -> tuple[int, ...]:
    """Digit vector of a non-negative value (most significant first).

    Successive division by the bases from the least significant up; the top
    digit is the final quotient.
    """
    if value < 0:
        raise DigitOutOfRange(f"value must be >= 0, got {value}")
    rest = value
    digits_lsd = []
    for p in scheme.bases:
        rest, d = divmod(rest, p)
        digits_lsd.append(d)
    digits_lsd.append(rest)
    return tuple(reversed(digits_lsd))


def recurrent_bases(seed: Sequence[int]) -> int:
    """Next base of a recurrent tower: the product of all bases so far."""
    if not seed:
        raise LengthMismatch("recurrent base needs at least one seed base")
    out = 1
    for p in seed:
        if p < 2:
            raise DigitOutOfRange(f"every base must be >= 2, got {p}")
        out *= p
    return out


def base_count(digit_count: int, mul_arity: int) -> int:
    """Total bases a polyadic tower scheme holds for ``digit_count`` digits.

    The ordinary single-base-per-boundary scheme uses digit_count - 1
    instead; the towers grow quadratically.
    """
    if digit_count < 1:
        raise LengthMismatch(f"digit count must be >= 1, got {digit_count}")
    if mul_arity < 2:
        raise LengthMismatch(f"multiplication arity must be >= 2, got {mul_arity}")
    return digit_count * (digit_count - 1) * (mul_arity - 1) // 2


@dataclass(frozen=True)
class PolyadicMixedScheme:
    """Base towers for a polyadic mixed-radix system.

    ``towers[i-1]`` belongs to digit position i and must hold exactly
    i*(mul_arity-1) class elements.
    """

    ring: PolyadicRing
    towers: tuple[tuple[RingElement, ...], ...]

    def __post_init__(self) -> None:
        n = self.ring.mul_arity
        for pos, tower in enumerate(self.towers, start=1):
            expected = pos * (n - 1)
            if len(tower) != expected:
                raise TowerShapeMismatch(
                    f"tower at position {pos} needs {expected} bases, "
                    f"got {len(tower)}"
                )
            for p in tower:
                if p.congruence != self.ring.congruence:
                    raise ClassMismatch(
                        f"base {p!r} does not belong to {self.ring.congruence}"
                    )

    @property
    def digit_count(self) -> int:
        return len(self.towers) + 1

    @property
    def total_bases(self) -> int:
        return sum(len(t) for t in self.towers)


def uniform_scheme(
    ring: PolyadicRing, digit_count: int, base: RingElement
) -> PolyadicMixedScheme:
    """All towers filled with one base element; reduces the polyadic
    mixed-base evaluation to the single-base numeral one."""
    n = ring.mul_arity
    towers = tuple(
        tuple([base] * (pos * (n - 1))) for pos in range(1, digit_count)
    )
    return PolyadicMixedScheme(ring, towers)


def eval_polyadic_mixed(
    digits: Sequence[RingElement],
    scheme: PolyadicMixedScheme,
    add_count: int,
) -> RingElement:
    """Value of a polyadic mixed-base digit vector (most significant first).

    Term i folds the digit into its tower by i nested multiplications; the
    terms are folded by ``add_count`` additions.  The flat exact sum of
    digit-times-tower products is asserted against the composed derivation.
    """
    ring = scheme.ring
    m, n = ring.add_arity, ring.mul_arity
    if add_count < 1:
        raise InconsistentLengths(f"addition count must be >= 1, got {add_count}")
    count = add_count * (m - 1) + 1
    if len(digits) != count:
        raise InconsistentLengths(
            f"{add_count} additions take {count} digits, got {len(digits)}"
        )
    if scheme.digit_count != count:
        raise TowerShapeMismatch(
            f"scheme holds {scheme.digit_count - 1} towers but {count} digits "
            f"need {count - 1}"
        )
    for d in digits:
        if d.congruence != ring.congruence:
            raise ClassMismatch(f"digit {d!r} does not belong to {ring.congruence}")

    top = count - 1
    flat = 0
    terms = []
    for pos, digit in enumerate(digits):
        i = top - pos
        if i == 0:
            terms.append(digit)
            flat += digit.value
            continue
        tower = scheme.towers[i - 1]
        word = [digit, *tower]
        assert admissible_count(n, len(word)) == i
        terms.append(ring.mul_iter(word, i))
        product = digit.value
        for p in tower:
            product *= p.value
        flat += product
    composed = ring.add_iter(terms, add_count)
    assert composed.value == flat
    return composed
