"""Polyadic (m,n)-rings over congruence classes.

A ring here is a congruence class together with an admissible arity pair:
addition takes exactly ``add_arity`` operands, multiplication exactly
``mul_arity``.  Operations act on the exact integer values of the
representatives; the index formulas

    k_result = k_1 + ... + k_m + add_invariant          (addition)
    k_result = s(k_1..k_n, a, b) + mul_invariant        (multiplication)

are recomputed on every call and asserted against the direct arithmetic, so
the two derivations continuously cross-check each other.  The closed
polynomial ``s`` is only known for ternary multiplication; for other arities
``s`` is reported as ``k_result - mul_invariant``.

Composition widths are quantized: ``count`` nested applications of an
arity-``r`` operation consume exactly ``count*(r-1) + 1`` operands, and any
other width is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .congruence import (
    ArityShape,
    CongruenceClass,
    RingElement,
    additive_invariant,
    minimal_arity_shape,
    multiplicative_invariant,
)
from .errors import (
    ArityMismatch,
    BadArityShape,
    ClassMismatch,
    NonAdmissibleWordLength,
)
from .prng import Xorshift64Star


@dataclass(frozen=True)
class WordLength:
    """An admissible composition: ``count`` nested arity-``arity`` operations."""

    count: int
    arity: int

    def __post_init__(self) -> None:
        if self.count < 1:
            raise NonAdmissibleWordLength(
                f"composition count must be >= 1, got {self.count}",
                width=0, below=self.arity, above=self.arity,
            )

    @property
    def width(self) -> int:
        return self.count * (self.arity - 1) + 1


def admissible_count(arity: int, width: int) -> int:
    """Composition count for a word of ``width`` operands, or raise.

    The raised error names the nearest admissible widths on both sides.
    """
    step = arity - 1
    count, rem = divmod(width - 1, step)
    if rem == 0 and count >= 1:
        return count
    below = count * step + 1 if count >= 1 else arity
    above = (count + 1) * step + 1 if count >= 1 else arity
    raise NonAdmissibleWordLength(
        f"width {width} is not admissible for arity {arity}: "
        f"nearest admissible widths are {below} and {above}",
        width=width, below=below, above=above,
    )


@dataclass(frozen=True)
class PolyadicRing:
    """A congruence class equipped with an admissible arity pair."""

    congruence: CongruenceClass
    shape: ArityShape

    def __post_init__(self) -> None:
        m, n = self.shape.add_arity, self.shape.mul_arity
        if m < 2 or n < 2:
            raise BadArityShape(f"arities must be >= 2, got ({m}, {n})")
        if additive_invariant(self.congruence, m) != self.shape.add_invariant:
            raise BadArityShape(
                f"addition arity {m} does not close {self.congruence} "
                f"with invariant {self.shape.add_invariant}"
            )
        if multiplicative_invariant(self.congruence, n) != self.shape.mul_invariant:
            raise BadArityShape(
                f"multiplication arity {n} does not close {self.congruence} "
                f"with invariant {self.shape.mul_invariant}"
            )

    def __str__(self) -> str:
        return f"Z_({self.shape.add_arity},{self.shape.mul_arity})^{self.congruence}"

    @property
    def add_arity(self) -> int:
        return self.shape.add_arity

    @property
    def mul_arity(self) -> int:
        return self.shape.mul_arity

    def element(self, k: int) -> RingElement:
        return self.congruence.element(k)

    def element_from_value(self, value: int) -> RingElement:
        return self.congruence.element_from_value(value)

    # -- basic operations ---------------------------------------------------

    def _require_members(self, xs: Sequence[RingElement]) -> None:
        for x in xs:
            if x.congruence != self.congruence:
                raise ClassMismatch(
                    f"element {x!r} does not belong to {self.congruence}"
                )

    def add(self, xs: Sequence[RingElement]) -> RingElement:
        """m-ary addition: the exact sum of the operand values."""
        if len(xs) != self.add_arity:
            raise ArityMismatch(
                f"addition takes {self.add_arity} operands, got {len(xs)}"
            )
        self._require_members(xs)
        out = self.element_from_value(sum(x.value for x in xs))
        assert out.k == sum(x.k for x in xs) + self.shape.add_invariant
        return out

    def mul(self, xs: Sequence[RingElement]) -> RingElement:
        """n-ary multiplication: the exact product of the operand values."""
        if len(xs) != self.mul_arity:
            raise ArityMismatch(
                f"multiplication takes {self.mul_arity} operands, got {len(xs)}"
            )
        self._require_members(xs)
        prod = 1
        for x in xs:
            prod *= x.value
        out = self.element_from_value(prod)
        assert self.mul_index_decomposition(xs)[0] == out.k
        return out

    def mul_index_decomposition(
        self, xs: Sequence[RingElement]
    ) -> tuple[int, int]:
        """(result index, s-term) for a multiplication word.

        The result index is s + mul_invariant.  For ternary multiplication
        s is evaluated from its closed polynomial; for other arities it is
        recovered from the product.
        """
        a, b = self.congruence.residue, self.congruence.modulus
        j = self.shape.mul_invariant
        if self.mul_arity == 3:
            r1, r2, r3 = (x.k for x in xs)
            s = (
                a * a * (r1 + r2 + r3)
                + a * b * (r1 * r2 + r1 * r3 + r2 * r3)
                + b * b * r1 * r2 * r3
            )
            return s + j, s
        prod = 1
        for x in xs:
            prod *= x.value
        r0 = self.element_from_value(prod).k
        return r0, r0 - j

    # -- quantized compositions ---------------------------------------------

    def _iterate(
        self,
        op,
        arity: int,
        xs: Sequence[RingElement],
        count: Optional[int],
    ) -> RingElement:
        inferred = admissible_count(arity, len(xs))
        if count is not None and count != inferred:
            expected = WordLength(count, arity).width
            raise NonAdmissibleWordLength(
                f"{count} compositions of an arity-{arity} operation take "
                f"{expected} operands, got {len(xs)}",
                width=len(xs), below=expected, above=expected,
            )
        acc = op(xs[:arity])
        pos = arity
        while pos < len(xs):
            acc = op([acc, *xs[pos : pos + arity - 1]])
            pos += arity - 1
        return acc

    def add_iter(
        self, xs: Sequence[RingElement], count: Optional[int] = None
    ) -> RingElement:
        """``count`` nested additions over ``count*(m-1)+1`` operands.

        With ``count=None`` the composition count is inferred from the word
        width; a non-admissible width raises either way.
        """
        out = self._iterate(self.add, self.add_arity, xs, count)
        assert out.value == sum(x.value for x in xs)
        return out

    def mul_iter(
        self, xs: Sequence[RingElement], count: Optional[int] = None
    ) -> RingElement:
        """``count`` nested multiplications over ``count*(n-1)+1`` operands."""
        out = self._iterate(self.mul, self.mul_arity, xs, count)
        flat = 1
        for x in xs:
            flat *= x.value
        assert out.value == flat
        return out

    def power(self, x: RingElement, count: int) -> RingElement:
        """Polyadic power: ``count`` nested multiplications of copies of x,
        i.e. the ordinary power x**(count*(n-1)+1)."""
        width = WordLength(count, self.mul_arity).width
        out = self.mul_iter([x] * width, count)
        assert out.value == x.value**width
        return out

    def querelement(self, x: RingElement) -> RingElement:
        """The additive quasi-inverse q with add([q, x, ..., x]) == x.

        Closed form q = (2 - m)*x; membership in the class is guaranteed by
        the additive quantization condition.
        """
        self._require_members([x])
        q = self.element_from_value((2 - self.add_arity) * x.value)
        assert self.add([q] + [x] * (self.add_arity - 1)) == x
        return q

    # -- special elements and laws ------------------------------------------

    def special_elements(self, k_window: int = 1000) -> "SpecialElementsReport":
        return find_special_elements(self, k_window)

    def verify_laws(
        self,
        sample_count: int = 100,
        k_range: int = 1000,
        seed: int = 0x5EED,
    ) -> "LawReport":
        return verify_ring_laws(self, sample_count, k_range, seed)


def minimal_ring(congruence: CongruenceClass) -> PolyadicRing:
    """The ring with the minimal admissible arity pair for the class."""
    return PolyadicRing(congruence, minimal_arity_shape(congruence))


def ring_with_arities(
    congruence: CongruenceClass, add_arity: int, mul_arity: int
) -> PolyadicRing:
    """A ring with a user-chosen (not necessarily minimal) admissible pair."""
    i = additive_invariant(congruence, add_arity)
    j = multiplicative_invariant(congruence, mul_arity)
    if i is None or j is None:
        raise BadArityShape(
            f"({add_arity}, {mul_arity}) does not close {congruence}"
        )
    return PolyadicRing(congruence, ArityShape(add_arity, mul_arity, i, j))


# -- special-element search ------------------------------------------------


@dataclass(frozen=True)
class SpecialElementsReport:
    """Findings of the bounded search for distinguished elements.

    ``nilpotents`` is None when the ring has no multiplicative zero, in which
    case nilpotency is undefined rather than merely absent.  Every reported
    element has been re-verified against its defining relation on sample
    elements from the search window.
    """

    ring: PolyadicRing
    k_window: int
    zero: Optional[RingElement]
    identities: tuple[RingElement, ...]
    mul_idempotents: tuple[RingElement, ...]
    add_idempotents: tuple[RingElement, ...]
    nilpotents: Optional[tuple[RingElement, ...]]
    neutral_polyads: tuple[tuple[RingElement, ...], ...]


def _sample_elements(ring: PolyadicRing, k_window: int, limit: int = 100):
    ks = range(-k_window, k_window + 1)
    if len(ks) <= limit:
        return [ring.element(k) for k in ks]
    step = len(ks) // limit
    return [ring.element(ks[i]) for i in range(0, len(ks), step)][:limit]


def find_special_elements(
    ring: PolyadicRing, k_window: int = 1000
) -> SpecialElementsReport:
    """Search indices k in [-k_window, k_window] for distinguished elements.

    The multiplicative zero and the unit candidates have analytic forms over
    the integers (0 and +/-1 respectively), so those are derived first and
    then verified by substitution; idempotents are found by direct scan.
    """
    if k_window < 0:
        raise ValueError(f"k_window must be >= 0, got {k_window}")
    a, b = ring.congruence.residue, ring.congruence.modulus
    n = ring.mul_arity
    m = ring.add_arity
    samples = _sample_elements(ring, k_window)

    zero = None
    if a == 0:
        zero = ring.element(0)
        for x in samples[:10]:
            assert ring.mul([zero] + [x] * (n - 1)) == zero

    identities = []
    unit_candidates = [1]
    if n % 2 == 1:
        unit_candidates.append(-1)
    for v in unit_candidates:
        if ring.congruence.contains_value(v):
            e = ring.element_from_value(v)
            if all(ring.mul([x] + [e] * (n - 1)) == x for x in samples):
                identities.append(e)

    mul_idempotents = []
    add_idempotents = []
    nilpotents = [] if zero is not None else None
    for k in range(-k_window, k_window + 1):
        v = a + b * k
        if v**n == v:
            mul_idempotents.append(ring.element(k))
        if m * v == v:
            add_idempotents.append(ring.element(k))
        if nilpotents is not None and v**n == 0:
            nilpotents.append(ring.element(k))

    # A product of integers equals 1 only when every factor is +/-1 with an
    # even count of -1, so the window search reduces to those candidates.
    neutral: list[tuple[RingElement, ...]] = []
    window_units = {
        v: ring.element_from_value(v)
        for v in (-1, 1)
        if ring.congruence.contains_value(v) and abs(v - a) <= b * k_window
    }
    for minus_count in range(0, n, 2):
        plus_count = (n - 1) - minus_count
        if minus_count > 0 and -1 not in window_units:
            continue
        if plus_count > 0 and 1 not in window_units:
            continue
        polyad = tuple(
            [window_units[-1]] * minus_count + [window_units[1]] * plus_count
        )
        if all(ring.mul([x, *polyad]) == x for x in samples):
            neutral.append(polyad)

    return SpecialElementsReport(
        ring=ring,
        k_window=k_window,
        zero=zero,
        identities=tuple(identities),
        mul_idempotents=tuple(mul_idempotents),
        add_idempotents=tuple(add_idempotents),
        nilpotents=tuple(nilpotents) if nilpotents is not None else None,
        neutral_polyads=tuple(neutral),
    )


# -- randomized law verification ---------------------------------------------


@dataclass(frozen=True)
class LawCheck:
    name: str
    samples: int
    passed: bool
    counterexample: Optional[str]


@dataclass(frozen=True)
class LawReport:
    ring: PolyadicRing
    seed: int
    sample_count: int
    k_range: int
    checks: tuple[LawCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_ring_laws(
    ring: PolyadicRing,
    sample_count: int = 100,
    k_range: int = 1000,
    seed: int = 0x5EED,
) -> LawReport:
    """Check the ring laws on reproducible random samples.

    Covered: commutativity of both operations under random permutations,
    total associativity (every placement of the inner operation inside a
    double-length word agrees), every distributivity slot, and the index
    formulas that tie element indices to the direct integer arithmetic.
    All failures are collected in the report, never raised.
    """
    if sample_count < 1:
        raise ValueError(f"sample_count must be >= 1, got {sample_count}")
    rng = Xorshift64Star(seed)
    m, n = ring.add_arity, ring.mul_arity

    def draw(count: int) -> list[RingElement]:
        return [ring.element(rng.randint(-k_range, k_range)) for _ in range(count)]

    def run(name: str, trial) -> LawCheck:
        for _ in range(sample_count):
            failure = trial()
            if failure is not None:
                return LawCheck(name, sample_count, False, failure)
        return LawCheck(name, sample_count, True, None)

    def add_commutativity() -> Optional[str]:
        xs = draw(m)
        ys = rng.shuffled(xs)
        if ring.add(xs) != ring.add(ys):
            return f"add{[x.value for x in xs]} != add{[y.value for y in ys]}"
        return None

    def mul_commutativity() -> Optional[str]:
        xs = draw(n)
        ys = rng.shuffled(xs)
        if ring.mul(xs) != ring.mul(ys):
            return f"mul{[x.value for x in xs]} != mul{[y.value for y in ys]}"
        return None

    def total_associativity(op, arity: int, label: str):
        def trial() -> Optional[str]:
            word = draw(2 * arity - 1)
            results = []
            for t in range(arity):
                inner = op(word[t : t + arity])
                outer = op([*word[:t], inner, *word[t + arity :]])
                results.append(outer)
            if any(r != results[0] for r in results):
                return f"{label} placements disagree on {[x.value for x in word]}"
            return None

        return trial

    def distributivity(slot: int):
        # multiplication with an m-ary sum in one slot must equal the m-ary
        # sum of multiplications with the summands in that slot
        def trial() -> Optional[str]:
            xs = draw(m)
            ys = draw(n)
            lhs_args = list(ys)
            lhs_args[slot] = ring.add(xs)
            lhs = ring.mul(lhs_args)
            terms = []
            for x in xs:
                args = list(ys)
                args[slot] = x
                terms.append(ring.mul(args))
            rhs = ring.add(terms)
            if lhs != rhs:
                return (
                    f"slot {slot + 1}: xs={[x.value for x in xs]} "
                    f"ys={[y.value for y in ys]}"
                )
            return None

        return trial

    def add_index_formula() -> Optional[str]:
        xs = draw(m)
        direct = ring.element_from_value(sum(x.value for x in xs)).k
        formula = sum(x.k for x in xs) + ring.shape.add_invariant
        if direct != formula:
            return f"k formula {formula} != direct {direct}"
        return None

    def mul_index_formula() -> Optional[str]:
        xs = draw(n)
        prod = 1
        for x in xs:
            prod *= x.value
        direct = ring.element_from_value(prod).k
        formula = ring.mul_index_decomposition(xs)[0]
        if direct != formula:
            return f"r formula {formula} != direct {direct}"
        return None

    checks = [
        run("add_commutativity", add_commutativity),
        run("mul_commutativity", mul_commutativity),
        run("add_total_associativity", total_associativity(ring.add, m, "add")),
        run("mul_total_associativity", total_associativity(ring.mul, n, "mul")),
    ]
    for slot in range(n):
        checks.append(run(f"distributivity_slot_{slot + 1}", distributivity(slot)))
    checks.append(run("add_index_formula", add_index_formula))
    if n == 3:
        checks.append(run("mul_index_formula", mul_index_formula))

    return LawReport(
        ring=ring,
        seed=seed,
        sample_count=sample_count,
        k_range=k_range,
        checks=tuple(checks),
    )
