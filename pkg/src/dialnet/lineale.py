"""Lineales: partially ordered commutative monoids with a residual implication.

A lineale bundles a carrier, a partial order, a monoidal product with unit,
and an implication that is right adjoint to the product:

    tensor(b, c) <= a   iff   b <= imp(c, a)

Weights on net arcs live in a lineale, so the same machinery covers
truth values, multiplicities, integer thresholds, probabilities, and
finite products of all of these.  Every instance here is commutative.

Values are immutable and tagged; operations never coerce between
lineales -- applying an operation to values of different tags raises
:class:`~dialnet.errors.TagMismatch`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from .errors import (
    InvalidValue,
    TagMismatch,
    UnknownLineale,
    ValueSyntaxError,
)

__all__ = [
    "LinealeValue",
    "Lineale",
    "PoGroup",
    "from_pogroup",
    "product_lineale",
    "get_lineale",
    "sample",
    "format_value",
    "decimal_display",
    "BOOL2",
    "KLEENE3",
    "NAT",
    "INT",
    "PROB",
    "DEFAULT_SIZE_BOUND",
]

DEFAULT_SIZE_BOUND = 16


@dataclass(frozen=True, slots=True)
class LinealeValue:
    """An element of a lineale: a tag naming the lineale plus a payload.

    Payloads by tag: ``bool2`` holds a bool, ``kleene3`` an int in
    {-1, 0, 1}, ``nat`` a nonnegative int, ``int`` an int, ``prob`` a
    Fraction in [0, 1] (kept in lowest terms by construction), and
    product lineales hold a pair of component LinealeValues.
    """

    tag: str
    payload: Any

    def __str__(self) -> str:
        return format_value(self)


class Lineale:
    """A lineale instance: the order, product, unit, and implication.

    Instances are immutable records of payload-level operations; the
    public methods wrap and unwrap :class:`LinealeValue` and enforce
    that both arguments carry this instance's tag.
    """

    __slots__ = (
        "tag",
        "description",
        "unit_payload",
        "factors",
        "_leq",
        "_tensor",
        "_imp",
        "_sample",
        "_coerce",
        "_validate",
        "_parse",
        "_carrier",
    )

    def __init__(
        self,
        tag: str,
        description: str,
        unit_payload: Any,
        leq: Callable[[Any, Any], bool],
        tensor: Callable[[Any, Any], Any],
        imp: Callable[[Any, Any], Any],
        sample: Callable[[random.Random, int], Any],
        validate: Callable[[Any], None],
        parse: Callable[[str], Any],
        coerce: Optional[Callable[[Any], Any]] = None,
        carrier: Optional[tuple] = None,
        factors: Optional[tuple["Lineale", "Lineale"]] = None,
    ):
        self.tag = tag
        self.description = description
        self.unit_payload = unit_payload
        self.factors = factors
        self._leq = leq
        self._tensor = tensor
        self._imp = imp
        self._sample = sample
        self._coerce = coerce if coerce is not None else lambda p: p
        self._validate = validate
        self._parse = parse
        self._carrier = carrier

    def __repr__(self) -> str:
        return f"Lineale({self.tag!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Lineale) and other.tag == self.tag

    def __hash__(self) -> int:
        return hash(("Lineale", self.tag))

    # -- value construction -------------------------------------------------

    def value(self, payload: Any) -> LinealeValue:
        """Wrap a payload as a value of this lineale, validating invariants."""
        p = self._coerce(payload)
        self._validate(p)
        return LinealeValue(self.tag, p)

    @property
    def unit(self) -> LinealeValue:
        return LinealeValue(self.tag, self.unit_payload)

    def carrier(self) -> Optional[tuple[LinealeValue, ...]]:
        """All elements, for finite lineales; None when the carrier is infinite."""
        if self._carrier is None:
            return None
        return tuple(LinealeValue(self.tag, p) for p in self._carrier)

    def _require(self, v: LinealeValue) -> None:
        if not isinstance(v, LinealeValue) or v.tag != self.tag:
            got = v.tag if isinstance(v, LinealeValue) else type(v).__name__
            raise TagMismatch(f"expected a {self.tag} value, got {got}")

    # -- the four operations ------------------------------------------------

    def leq(self, a: LinealeValue, b: LinealeValue) -> bool:
        """Whether a precedes b in this lineale's partial order."""
        self._require(a)
        self._require(b)
        return self._leq(a.payload, b.payload)

    def tensor(self, a: LinealeValue, b: LinealeValue) -> LinealeValue:
        """Monoidal product of two values."""
        self._require(a)
        self._require(b)
        return LinealeValue(self.tag, self._tensor(a.payload, b.payload))

    def imp(self, a: LinealeValue, b: LinealeValue) -> LinealeValue:
        """Internal hom: the largest c with tensor(c, a) below b."""
        self._require(a)
        self._require(b)
        return LinealeValue(self.tag, self._imp(a.payload, b.payload))

    def sample(self, rng: random.Random, size_bound: int = DEFAULT_SIZE_BOUND) -> LinealeValue:
        """Draw a pseudo-random value; finite carriers sample uniformly."""
        if size_bound <= 0:
            raise InvalidValue("size_bound must be positive")
        return LinealeValue(self.tag, self._sample(rng, size_bound))

    # -- text syntax ----------------------------------------------------------

    def parse(self, text: str) -> LinealeValue:
        """Parse the textual value syntax for this lineale."""
        payload = self._parse(text.strip())
        self._validate(payload)
        return LinealeValue(self.tag, payload)


def sample(lin: Lineale, seed: int, size_bound: int = DEFAULT_SIZE_BOUND) -> LinealeValue:
    """One deterministic sample: the same seed always yields the same value."""
    return lin.sample(random.Random(seed), size_bound)


def format_value(v: LinealeValue) -> str:
    """Canonical text for a value; the inverse of each lineale's parse."""
    p = v.payload
    if isinstance(p, bool):
        return "true" if p else "false"
    if isinstance(p, int):
        return str(p)
    if isinstance(p, Fraction):
        if p.denominator == 1:
            return str(p.numerator)
        return f"{p.numerator}/{p.denominator}"
    if isinstance(p, tuple):
        return f"({format_value(p[0])},{format_value(p[1])})"
    raise InvalidValue(f"unprintable payload {p!r}")


def decimal_display(v: LinealeValue, digits: int = 6) -> str:
    """Lossy decimal rendering for human eyes.

    Never feed this back into parse; exact rationals stay rational in
    every stored or serialized value.
    """
    p = v.payload
    if isinstance(p, Fraction) and p.denominator != 1:
        return f"{float(p):.{digits}g}"
    if isinstance(p, tuple):
        return f"({decimal_display(p[0], digits)},{decimal_display(p[1], digits)})"
    return format_value(v)


# --------------------------------------------------------------------------
# Concrete instances
# --------------------------------------------------------------------------


def _parse_int(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise ValueSyntaxError(f"not an integer: {text!r}") from None


def _bool2() -> Lineale:
    def validate(p):
        if not isinstance(p, bool):
            raise InvalidValue(f"bool2 payload must be a bool, got {p!r}")

    def parse(text):
        if text == "true":
            return True
        if text == "false":
            return False
        raise ValueSyntaxError(f"not a bool2 value: {text!r}")

    return Lineale(
        tag="bool2",
        description="two truth values, conjunction, classical implication",
        unit_payload=True,
        leq=lambda a, b: (not a) or b,
        tensor=lambda a, b: a and b,
        imp=lambda a, b: (not a) or b,
        sample=lambda rng, bound: rng.random() < 0.5,
        validate=validate,
        parse=parse,
        carrier=(False, True),
    )


def _kleene3() -> Lineale:
    def validate(p):
        if type(p) is not int or p not in (-1, 0, 1):
            raise InvalidValue(f"kleene3 payload must be -1, 0 or 1, got {p!r}")

    return Lineale(
        tag="kleene3",
        description="three truth values -1 < 0 < 1, product is minimum",
        unit_payload=1,
        leq=lambda a, b: a <= b,
        tensor=min,
        imp=lambda a, b: 1 if a <= b else b,
        sample=lambda rng, bound: rng.choice((-1, 0, 1)),
        validate=validate,
        parse=_parse_int,
        carrier=(-1, 0, 1),
    )


def _nat() -> Lineale:
    # Order is the reverse of the numeric one: 3 precedes 2.  The product
    # is addition, so "smaller" in the lineale means "needs more".
    def validate(p):
        if type(p) is not int:
            raise InvalidValue(f"nat payload must be an int, got {p!r}")
        if p < 0:
            raise InvalidValue(f"nat payload must be nonnegative, got {p}")

    return Lineale(
        tag="nat",
        description="natural numbers under addition, reverse numeric order",
        unit_payload=0,
        leq=lambda a, b: a >= b,
        tensor=lambda a, b: a + b,
        imp=lambda a, b: max(b - a, 0),
        sample=lambda rng, bound: rng.randint(0, bound),
        validate=validate,
        parse=_parse_int,
    )


def _prob() -> Lineale:
    one = Fraction(1)

    def coerce(p):
        if isinstance(p, float):
            raise InvalidValue(
                "prob payloads are exact rationals; pass a Fraction, not a float"
            )
        if isinstance(p, int) and not isinstance(p, bool):
            return Fraction(p)
        return p

    def validate(p):
        if not isinstance(p, Fraction):
            raise InvalidValue(f"prob payload must be a Fraction, got {p!r}")
        if not 0 <= p <= 1:
            raise InvalidValue(f"prob payload must lie in [0, 1], got {p}")

    def imp(a, b):
        if a == 0 or a < b:
            return one
        return b / a

    def parse(text):
        if "/" in text:
            num_s, _, den_s = text.partition("/")
            num, den = _parse_int(num_s), _parse_int(den_s)
            if den == 0:
                raise ValueSyntaxError(f"zero denominator in {text!r}")
            return Fraction(num, den)
        return Fraction(_parse_int(text))

    def draw(rng, bound):
        den = rng.randint(1, bound)
        return Fraction(rng.randint(0, den), den)

    return Lineale(
        tag="prob",
        description="exact rationals in [0, 1] under multiplication",
        unit_payload=one,
        leq=lambda a, b: a <= b,
        tensor=lambda a, b: a * b,
        imp=imp,
        sample=draw,
        coerce=coerce,
        validate=validate,
        parse=parse,
    )


@dataclass(frozen=True)
class PoGroup:
    """A partially ordered group: a po-monoid with inverses.

    Any po-group yields a lineale by setting imp(a, b) = tensor(b, inverse(a));
    :func:`from_pogroup` performs that construction.
    """

    tag: str
    description: str
    unit: Any
    tensor: Callable[[Any, Any], Any]
    inverse: Callable[[Any], Any]
    leq: Callable[[Any, Any], bool]
    sample: Callable[[random.Random, int], Any]
    validate: Callable[[Any], None]
    parse: Callable[[str], Any]


def from_pogroup(group: PoGroup) -> Lineale:
    """Endow a partially ordered group with its canonical lineale structure."""
    return Lineale(
        tag=group.tag,
        description=group.description,
        unit_payload=group.unit,
        leq=group.leq,
        tensor=group.tensor,
        imp=lambda a, b: group.tensor(b, group.inverse(a)),
        sample=group.sample,
        validate=group.validate,
        parse=group.parse,
    )


def _int_validate(p):
    if type(p) is not int:
        raise InvalidValue(f"int payload must be an int, got {p!r}")


def _int() -> Lineale:
    group = PoGroup(
        tag="int",
        description="integers under addition, usual order",
        unit=0,
        tensor=lambda a, b: a + b,
        inverse=lambda a: -a,
        leq=lambda a, b: a <= b,
        sample=lambda rng, bound: rng.randint(-bound, bound),
        validate=_int_validate,
        parse=_parse_int,
    )
    return from_pogroup(group)


def product_lineale(first: Lineale, second: Lineale) -> Lineale:
    """The componentwise lineale on pairs drawn from two factor lineales."""
    tag = f"prod({first.tag},{second.tag})"

    def validate(p):
        if not (isinstance(p, tuple) and len(p) == 2):
            raise InvalidValue(f"{tag} payload must be a pair, got {p!r}")
        a, b = p
        if not isinstance(a, LinealeValue) or a.tag != first.tag:
            raise InvalidValue(f"first component of {tag} must be a {first.tag} value")
        if not isinstance(b, LinealeValue) or b.tag != second.tag:
            raise InvalidValue(f"second component of {tag} must be a {second.tag} value")

    def coerce(p):
        if isinstance(p, list):
            return tuple(p)
        return p

    def leq(p, q):
        return first.leq(p[0], q[0]) and second.leq(p[1], q[1])

    def tensor(p, q):
        return (first.tensor(p[0], q[0]), second.tensor(p[1], q[1]))

    def imp(p, q):
        return (first.imp(p[0], q[0]), second.imp(p[1], q[1]))

    def draw(rng, bound):
        return (first.sample(rng, bound), second.sample(rng, bound))

    def parse(text):
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueSyntaxError(f"not a pair value: {text!r}")
        body = text[1:-1]
        depth = 0
        split = -1
        for i, ch in enumerate(body):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                split = i
                break
        if split < 0:
            raise ValueSyntaxError(f"missing top-level comma in pair: {text!r}")
        return (first.parse(body[:split]), second.parse(body[split + 1 :]))

    fc, sc = first._carrier, second._carrier
    carrier = None
    if fc is not None and sc is not None:
        carrier = tuple(
            (LinealeValue(first.tag, a), LinealeValue(second.tag, b))
            for a in fc
            for b in sc
        )

    return Lineale(
        tag=tag,
        description=f"componentwise product of {first.tag} and {second.tag}",
        unit_payload=(first.unit, second.unit),
        leq=leq,
        tensor=tensor,
        imp=imp,
        sample=draw,
        coerce=coerce,
        validate=validate,
        parse=parse,
        carrier=carrier,
        factors=(first, second),
    )


BOOL2 = _bool2()
KLEENE3 = _kleene3()
NAT = _nat()
INT = _int()
PROB = _prob()

_BASE = {lin.tag: lin for lin in (BOOL2, KLEENE3, NAT, INT, PROB)}


def get_lineale(tag: str) -> Lineale:
    """Resolve a tag string, including nested ``prod(<tag>,<tag>)`` forms."""
    tag = tag.strip()
    if tag in _BASE:
        return _BASE[tag]
    if tag.startswith("prod(") and tag.endswith(")"):
        body = tag[5:-1]
        depth = 0
        for i, ch in enumerate(body):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return product_lineale(get_lineale(body[:i]), get_lineale(body[i + 1 :]))
        raise UnknownLineale(f"malformed product tag: {tag!r}")
    raise UnknownLineale(f"unknown lineale tag: {tag!r}")
