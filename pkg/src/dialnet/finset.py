"""Finite sets as index ranges, and tables for the functions between them.

Everything downstream (objects, morphisms, nets) works with elements
0..size-1; labels are cosmetic and never affect equality.  Products,
coproducts and exponentials come with fixed index conventions so that
independently built tables agree:

* product: pair (i, j) sits at index i * |B| + j  (row-major)
* coproduct: the left block comes first, inr(j) = |A| + j
* exponential X^B: a table (t_0, .., t_{n-1}) is read as a base-|X|
  numeral with t_0 the most significant digit, so index 0 is the
  constant-0 function and the top index is constant |X|-1

Exponential carriers blow up quickly, so any constructor that builds
one takes a cap (default 4096) and raises CapExceeded beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import CapExceeded, ShapeMismatch

__all__ = [
    "DEFAULT_CAP",
    "FinSet",
    "FnTable",
    "identity",
    "compose",
    "product_set",
    "pair_index",
    "unpair_index",
    "proj1",
    "proj2",
    "pairing",
    "product_fn",
    "swap",
    "diagonal",
    "coproduct_set",
    "inl",
    "inr",
    "copair",
    "singleton",
    "exp_size",
    "exp_set",
    "fn_index",
    "fn_from_index",
    "eval_at",
    "all_tables",
    "curry_fn",
    "uncurry_fn",
]

DEFAULT_CAP = 4096


@dataclass(frozen=True, slots=True)
class FinSet:
    """A finite set {0, .., size-1}, optionally carrying distinct labels."""

    size: int
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.size < 0:
            raise ShapeMismatch(f"set size must be nonnegative, got {self.size}")
        if self.labels is not None:
            if len(self.labels) != self.size:
                raise ShapeMismatch(
                    f"{len(self.labels)} labels for a set of size {self.size}"
                )
            if len(set(self.labels)) != self.size:
                raise ShapeMismatch("labels must be distinct")

    def __eq__(self, other: object) -> bool:
        # labels are presentation only
        return isinstance(other, FinSet) and other.size == self.size

    def __hash__(self) -> int:
        return hash(("FinSet", self.size))

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.size))

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(i)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            raise ShapeMismatch("set has no labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise ShapeMismatch(f"no element labelled {label!r}") from None


@dataclass(frozen=True, slots=True)
class FnTable:
    """A function between finite sets, tabulated: table[i] is the image of i."""

    dom: FinSet
    cod: FinSet
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.dom.size:
            raise ShapeMismatch(
                f"table length {len(self.table)} != domain size {self.dom.size}"
            )
        for i, t in enumerate(self.table):
            if not 0 <= t < self.cod.size:
                raise ShapeMismatch(
                    f"table entry {t} at {i} outside codomain of size {self.cod.size}"
                )

    def __call__(self, i: int) -> int:
        return self.table[i]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FnTable)
            and other.dom.size == self.dom.size
            and other.cod.size == self.cod.size
            and other.table == self.table
        )

    def __hash__(self) -> int:
        return hash(("FnTable", self.dom.size, self.cod.size, self.table))


def identity(a: FinSet) -> FnTable:
    return FnTable(a, a, tuple(range(a.size)))


def compose(g: FnTable, f: FnTable) -> FnTable:
    """g after f."""
    if f.cod.size != g.dom.size:
        raise ShapeMismatch(
            f"cannot compose: middle sizes {f.cod.size} and {g.dom.size} differ"
        )
    return FnTable(f.dom, g.cod, tuple(g.table[t] for t in f.table))


# -- products ---------------------------------------------------------------


def pair_index(i: int, j: int, b_size: int) -> int:
    return i * b_size + j


def unpair_index(k: int, b_size: int) -> tuple[int, int]:
    return divmod(k, b_size)


def product_set(a: FinSet, b: FinSet) -> FinSet:
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = tuple(f"({la},{lb})" for la in a.labels for lb in b.labels)
    return FinSet(a.size * b.size, labels)


def proj1(a: FinSet, b: FinSet) -> FnTable:
    ab = product_set(a, b)
    return FnTable(ab, a, tuple(k // b.size for k in range(ab.size)))


def proj2(a: FinSet, b: FinSet) -> FnTable:
    ab = product_set(a, b)
    return FnTable(ab, b, tuple(k % b.size for k in range(ab.size)))


def pairing(f: FnTable, g: FnTable) -> FnTable:
    """The mediating map <f, g> into a product, from their shared domain."""
    if f.dom.size != g.dom.size:
        raise ShapeMismatch("pairing needs a shared domain")
    cod = product_set(f.cod, g.cod)
    table = tuple(
        pair_index(f.table[i], g.table[i], g.cod.size) for i in range(f.dom.size)
    )
    return FnTable(f.dom, cod, table)


def product_fn(f: FnTable, g: FnTable) -> FnTable:
    """f x g acting componentwise on a product."""
    dom = product_set(f.dom, g.dom)
    cod = product_set(f.cod, g.cod)
    table = tuple(
        pair_index(f.table[i], g.table[j], g.cod.size)
        for i in range(f.dom.size)
        for j in range(g.dom.size)
    )
    return FnTable(dom, cod, table)


def swap(a: FinSet, b: FinSet) -> FnTable:
    """(i, j) |-> (j, i), from a x b to b x a."""
    dom = product_set(a, b)
    cod = product_set(b, a)
    table = tuple(
        pair_index(j, i, a.size) for i in range(a.size) for j in range(b.size)
    )
    return FnTable(dom, cod, table)


def diagonal(a: FinSet) -> FnTable:
    return FnTable(a, product_set(a, a), tuple(pair_index(i, i, a.size) for i in a))


# -- coproducts ---------------------------------------------------------------


def coproduct_set(a: FinSet, b: FinSet) -> FinSet:
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = tuple(f"left.{la}" for la in a.labels) + tuple(
            f"right.{lb}" for lb in b.labels
        )
    return FinSet(a.size + b.size, labels)


def inl(a: FinSet, b: FinSet) -> FnTable:
    return FnTable(a, coproduct_set(a, b), tuple(range(a.size)))


def inr(a: FinSet, b: FinSet) -> FnTable:
    return FnTable(b, coproduct_set(a, b), tuple(a.size + j for j in range(b.size)))


def copair(f: FnTable, g: FnTable) -> FnTable:
    """Case analysis [f, g] out of a coproduct, into their shared codomain."""
    if f.cod.size != g.cod.size:
        raise ShapeMismatch("copairing needs a shared codomain")
    dom = coproduct_set(f.dom, g.dom)
    return FnTable(dom, f.cod, f.table + g.table)


def singleton(label: str = "*") -> FinSet:
    return FinSet(1, (label,))


# -- exponentials -------------------------------------------------------------


def exp_size(base: FinSet, dom: FinSet, cap: int = DEFAULT_CAP) -> int:
    """|base| ** |dom|, guarded by the cap.

    The empty function is the one element of X^0, and 0^B is empty for
    nonempty B.
    """
    n = base.size**dom.size
    if n > cap:
        raise CapExceeded(n, cap, what="function space")
    return n


def exp_set(base: FinSet, dom: FinSet, cap: int = DEFAULT_CAP) -> FinSet:
    n = exp_size(base, dom, cap)
    return FinSet(n, tuple(f"fn{k}" for k in range(n)))


def fn_index(table: tuple[int, ...], base_size: int) -> int:
    k = 0
    for t in table:
        k = k * base_size + t
    return k


def fn_from_index(k: int, dom_size: int, base_size: int) -> tuple[int, ...]:
    digits = [0] * dom_size
    for pos in range(dom_size - 1, -1, -1):
        k, digits[pos] = divmod(k, base_size)
    return tuple(digits)


def eval_at(k: int, b: int, dom_size: int, base_size: int) -> int:
    """Value at b of the function with index k in base^dom, without full decode."""
    return (k // base_size ** (dom_size - 1 - b)) % base_size


def all_tables(dom: FinSet, cod: FinSet, cap: int = DEFAULT_CAP) -> Iterator[FnTable]:
    """Every function dom -> cod, in exponential index order."""
    n = exp_size(cod, dom, cap)
    for k in range(n):
        yield FnTable(dom, cod, fn_from_index(k, dom.size, cod.size))


def curry_fn(f: FnTable, a: FinSet, b: FinSet, cap: int = DEFAULT_CAP) -> FnTable:
    """Transpose a x b -> c into a -> c^b."""
    if f.dom.size != a.size * b.size:
        raise ShapeMismatch("curry: domain is not the expected product")
    cod = exp_set(f.cod, b, cap)
    table = []
    for i in range(a.size):
        row = tuple(f.table[pair_index(i, j, b.size)] for j in range(b.size))
        table.append(fn_index(row, f.cod.size))
    return FnTable(a, cod, tuple(table))


def uncurry_fn(g: FnTable, b: FinSet, c: FinSet) -> FnTable:
    """Transpose a -> c^b back into a x b -> c."""
    if g.cod.size != c.size**b.size:
        raise ShapeMismatch("uncurry: codomain is not the expected function space")
    dom = product_set(g.dom, b)
    table = tuple(
        eval_at(g.table[i], j, b.size, c.size)
        for i in range(g.dom.size)
        for j in range(b.size)
    )
    return FnTable(dom, c, table)
