"""Lineale-weighted relations and the lax maps between them.

An object is a pair of finite carriers with a weight matrix over a
lineale: a "positive" carrier (rows) and a "negative" carrier
(columns).  A morphism is a forward function on positive carriers and
a backward function on negative carriers, subject to a pointwise order
condition:

    weight_A(u, bwd(y))  <=  weight_B(fwd(u), y)   for all u, y.

On Petri nets the positive carrier holds places, the negative one
transitions, and morphisms read as simulations.

The connectives:

* with_product (cartesian): carriers (U x V, X + Y)
* oplus (cocartesian):      carriers (U + V, X x Y)
* tensor_obj:               carriers (U x V, X^V x Y^U)
* hom_obj:                  carriers (V^U x X^Y, U x Y)

tensor and hom are adjoint; curry_dial / uncurry_dial realize the
bijection between hom-sets.  Every constructor here returns morphisms
that are valid by the corresponding proof, but nothing is trusted:
check_morphism recomputes the condition pointwise and the test suite
always recchecks constructor outputs.

Index conventions (row-major pairs, left-block coproducts, numeral
exponentials) are inherited from the finset module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .errors import CapExceeded, InvalidMorphism, ShapeMismatch, TagMismatch
from .finset import (
    DEFAULT_CAP,
    FinSet,
    FnTable,
    coproduct_set,
    exp_set,
    fn_from_index,
    fn_index,
    product_fn,
    product_set,
    singleton,
)
from .finset import compose as table_compose
from .finset import identity as table_identity
from .finset import swap as table_swap
from .lineale import Lineale, LinealeValue

__all__ = [
    "DialObject",
    "DialMorphism",
    "Violation",
    "dial_object",
    "check_morphism",
    "dial_morphism",
    "identity",
    "compose",
    "inverse",
    "with_product",
    "with_proj1",
    "with_proj2",
    "with_pairing",
    "oplus",
    "oplus_inl",
    "oplus_inr",
    "oplus_copair",
    "tensor_unit",
    "tensor_obj",
    "tensor_mor",
    "hom_obj",
    "hom_mor",
    "curry_dial",
    "uncurry_dial",
    "associator",
    "left_unitor",
    "right_unitor",
    "symmetry",
    "enumerate_morphisms",
]


@dataclass(frozen=True, slots=True)
class DialObject:
    """Two finite carriers and a weight matrix between them.

    ``weight[u][x]`` is the lineale value attached to the pair (u, x);
    rows run over the positive carrier, columns over the negative one.
    """

    lin: Lineale
    pos: FinSet
    neg: FinSet
    weight: tuple[tuple[LinealeValue, ...], ...]

    def __post_init__(self):
        if len(self.weight) != self.pos.size:
            raise ShapeMismatch(
                f"{len(self.weight)} weight rows for positive carrier "
                f"of size {self.pos.size}"
            )
        for row in self.weight:
            if len(row) != self.neg.size:
                raise ShapeMismatch(
                    f"weight row of length {len(row)} for negative carrier "
                    f"of size {self.neg.size}"
                )
            for v in row:
                if not isinstance(v, LinealeValue) or v.tag != self.lin.tag:
                    raise TagMismatch(
                        f"weight entry {v!r} does not belong to {self.lin.tag}"
                    )

    def weight_at(self, u: int, x: int) -> LinealeValue:
        return self.weight[u][x]

    def payloads(self) -> list[list[object]]:
        """The weight matrix with values unwrapped, for tight inner loops."""
        return [[v.payload for v in row] for row in self.weight]


def dial_object(
    lin: Lineale,
    pos: FinSet,
    neg: FinSet,
    weight_fn: Callable[[int, int], LinealeValue],
) -> DialObject:
    """Build an object by tabulating a weight function over the carriers."""
    rows = tuple(
        tuple(weight_fn(u, x) for x in range(neg.size)) for u in range(pos.size)
    )
    return DialObject(lin, pos, neg, rows)


class Violation(NamedTuple):
    """One point where the morphism condition fails."""

    u: int
    y: int
    source_weight: LinealeValue
    target_weight: LinealeValue


def _same_lineale(a: DialObject, b: DialObject) -> Lineale:
    if a.lin.tag != b.lin.tag:
        raise TagMismatch(f"objects over {a.lin.tag} and {b.lin.tag} cannot combine")
    return a.lin


def check_morphism(
    source: DialObject, target: DialObject, fwd: FnTable, bwd: FnTable
) -> list[Violation]:
    """All points (u, y) where weight(u, bwd y) is not below weight(fwd u, y).

    An empty list means (fwd, bwd) is a morphism from source to target.
    """
    _same_lineale(source, target)
    if fwd.dom.size != source.pos.size or fwd.cod.size != target.pos.size:
        raise ShapeMismatch("forward table does not map the positive carriers")
    if bwd.dom.size != target.neg.size or bwd.cod.size != source.neg.size:
        raise ShapeMismatch("backward table does not map the negative carriers")
    leq = source.lin.leq
    out = []
    for u in range(source.pos.size):
        fu = fwd.table[u]
        for y in range(target.neg.size):
            a = source.weight[u][bwd.table[y]]
            b = target.weight[fu][y]
            if not leq(a, b):
                out.append(Violation(u, y, a, b))
    return out


@dataclass(frozen=True, slots=True)
class DialMorphism:
    """A forward/backward pair of tables between two objects.

    Construction checks shapes only; use :func:`dial_morphism` to also
    enforce the order condition, or :func:`check_morphism` to audit.
    """

    source: DialObject
    target: DialObject
    fwd: FnTable
    bwd: FnTable

    def __post_init__(self):
        _same_lineale(self.source, self.target)
        if (
            self.fwd.dom.size != self.source.pos.size
            or self.fwd.cod.size != self.target.pos.size
        ):
            raise ShapeMismatch("forward table does not map the positive carriers")
        if (
            self.bwd.dom.size != self.target.neg.size
            or self.bwd.cod.size != self.source.neg.size
        ):
            raise ShapeMismatch("backward table does not map the negative carriers")


def dial_morphism(
    source: DialObject, target: DialObject, fwd: FnTable, bwd: FnTable
) -> DialMorphism:
    """Certify (fwd, bwd) as a morphism, or raise with every violation."""
    violations = check_morphism(source, target, fwd, bwd)
    if violations:
        raise InvalidMorphism(violations)
    return DialMorphism(source, target, fwd, bwd)


def identity(a: DialObject) -> DialMorphism:
    return DialMorphism(a, a, table_identity(a.pos), table_identity(a.neg))


def compose(m2: DialMorphism, m1: DialMorphism) -> DialMorphism:
    """m2 after m1.  Valid whenever both inputs are valid."""
    if m1.target != m2.source:
        raise ShapeMismatch("cannot compose: middle objects differ")
    return DialMorphism(
        m1.source,
        m2.target,
        table_compose(m2.fwd, m1.fwd),
        table_compose(m1.bwd, m2.bwd),
    )


def _invert_table(t: FnTable) -> FnTable:
    if t.dom.size != t.cod.size or len(set(t.table)) != t.dom.size:
        raise ShapeMismatch("table is not a bijection")
    inv = [0] * t.dom.size
    for i, j in enumerate(t.table):
        inv[j] = i
    return FnTable(t.cod, t.dom, tuple(inv))


def inverse(m: DialMorphism) -> DialMorphism:
    """Reverse an isomorphism by inverting both tables.

    Only meaningful for the structural isomorphisms built here; the
    result of inverting an arbitrary valid morphism need not be valid.
    """
    return DialMorphism(m.target, m.source, _invert_table(m.fwd), _invert_table(m.bwd))


def _guard(n: int, cap: int) -> int:
    if n > cap:
        raise CapExceeded(n, cap)
    return n


# -- cartesian and cocartesian structure -------------------------------------


def with_product(a: DialObject, b: DialObject, cap: int = DEFAULT_CAP) -> DialObject:
    """The cartesian product: pairs of rows, disjoint union of columns."""
    lin = _same_lineale(a, b)
    pos = product_set(a.pos, b.pos)
    neg = coproduct_set(a.neg, b.neg)
    _guard(pos.size, cap)
    rows = []
    for u in range(a.pos.size):
        for v in range(b.pos.size):
            rows.append(a.weight[u] + b.weight[v])
    return DialObject(lin, pos, neg, tuple(rows))


def with_proj1(a: DialObject, b: DialObject, cap: int = DEFAULT_CAP) -> DialMorphism:
    from .finset import inl, proj1

    return DialMorphism(
        with_product(a, b, cap), a, proj1(a.pos, b.pos), inl(a.neg, b.neg)
    )


def with_proj2(a: DialObject, b: DialObject, cap: int = DEFAULT_CAP) -> DialMorphism:
    from .finset import inr, proj2

    return DialMorphism(
        with_product(a, b, cap), b, proj2(a.pos, b.pos), inr(a.neg, b.neg)
    )


def with_pairing(
    m1: DialMorphism, m2: DialMorphism, cap: int = DEFAULT_CAP
) -> DialMorphism:
    """The mediating morphism into a cartesian product from a shared source."""
    from .finset import copair, pairing

    if m1.source != m2.source:
        raise ShapeMismatch("pairing needs a shared source object")
    prod = with_product(m1.target, m2.target, cap)
    return DialMorphism(
        m1.source, prod, pairing(m1.fwd, m2.fwd), copair(m1.bwd, m2.bwd)
    )


def oplus(a: DialObject, b: DialObject, cap: int = DEFAULT_CAP) -> DialObject:
    """The coproduct: disjoint union of rows, pairs of columns."""
    lin = _same_lineale(a, b)
    pos = coproduct_set(a.pos, b.pos)
    neg = product_set(a.neg, b.neg)
    _guard(neg.size, cap)
    rows = []
    for u in range(a.pos.size):
        rows.append(
            tuple(
                a.weight[u][x]
                for x in range(a.neg.size)
                for _y in range(b.neg.size)
            )
        )
    for v in range(b.pos.size):
        rows.append(
            tuple(
                b.weight[v][y]
                for _x in range(a.neg.size)
                for y in range(b.neg.size)
            )
        )
    return DialObject(lin, pos, neg, tuple(rows))


def oplus_inl(a: DialObject, b: DialObject, cap: int = DEFAULT_CAP) -> DialMorphism:
    from .finset import inl, proj1

    return DialMorphism(a, oplus(a, b, cap), inl(a.pos, b.pos), proj1(a.neg, b.neg))


def oplus_inr(a: DialObject, b: DialObject, cap: int = DEFAULT_CAP) -> DialMorphism:
    from .finset import inr, proj2

    return DialMorphism(b, oplus(a, b, cap), inr(a.pos, b.pos), proj2(a.neg, b.neg))


def oplus_copair(
    m1: DialMorphism, m2: DialMorphism, cap: int = DEFAULT_CAP
) -> DialMorphism:
    """The mediating morphism out of a coproduct into a shared target."""
    from .finset import copair, pairing

    if m1.target != m2.target:
        raise ShapeMismatch("copairing needs a shared target object")
    cop = oplus(m1.source, m2.source, cap)
    return DialMorphism(
        cop, m1.target, copair(m1.fwd, m2.fwd), pairing(m1.bwd, m2.bwd)
    )


# -- monoidal structure -------------------------------------------------------


def tensor_unit(lin: Lineale) -> DialObject:
    """Singleton carriers weighted by the lineale's unit."""
    return DialObject(lin, singleton(), singleton(), ((lin.unit,),))


def tensor_obj(a: DialObject, b: DialObject, cap: int = DEFAULT_CAP) -> DialObject:
    """Monoidal product.

    Positive carrier U x V; negative carrier X^V x Y^U, read as a pair
    of response tables.  The weight at ((u, v), (f, g)) is
    tensor(weight_a(u, f(v)), weight_b(v, g(u))).
    """
    lin = _same_lineale(a, b)
    pos = product_set(a.pos, b.pos)
    _guard(pos.size, cap)
    xs = exp_set(a.neg, b.pos, cap)
    ys = exp_set(b.neg, a.pos, cap)
    neg = FinSet(
        _guard(xs.size * ys.size, cap),
        tuple(f"({lf},{lg})" for lf in xs.labels for lg in ys.labels),
    )
    f_tabs = [fn_from_index(fi, b.pos.size, a.neg.size) for fi in range(xs.size)]
    g_tabs = [fn_from_index(gi, a.pos.size, b.neg.size) for gi in range(ys.size)]
    tag = lin.tag
    tens = lin._tensor
    alpha = a.payloads()
    beta = b.payloads()
    rows = []
    for u in range(a.pos.size):
        au = alpha[u]
        for v in range(b.pos.size):
            bv = beta[v]
            row = []
            for f in f_tabs:
                afv = au[f[v]]
                for g in g_tabs:
                    row.append(LinealeValue(tag, tens(afv, bv[g[u]])))
            rows.append(tuple(row))
    return DialObject(lin, pos, neg, tuple(rows))


def tensor_mor(
    m1: DialMorphism, m2: DialMorphism, cap: int = DEFAULT_CAP
) -> DialMorphism:
    """Tensor two morphisms.

    Forward acts componentwise.  Backward takes a pair of target
    response tables (f', g') to (F . f' . g, G . g' . f), pre- and
    post-composing with the given maps.
    """
    src = tensor_obj(m1.source, m2.source, cap)
    tgt = tensor_obj(m1.target, m2.target, cap)
    fwd = product_fn(m1.fwd, m2.fwd)

    f, g = m1.fwd.table, m2.fwd.table
    fb, gb = m1.bwd.table, m2.bwd.table
    xn_s, yn_s = m1.source.neg.size, m2.source.neg.size
    xn_t, yn_t = m1.target.neg.size, m2.target.neg.size
    up_s, vp_s = m1.source.pos.size, m2.source.pos.size
    up_t, vp_t = m1.target.pos.size, m2.target.pos.size
    ny_s = yn_s**up_s
    ns_t = yn_t**up_t
    table = []
    for c in range(tgt.neg.size):
        fpi, gpi = divmod(c, ns_t)
        fp = fn_from_index(fpi, vp_t, xn_t)
        gp = fn_from_index(gpi, up_t, yn_t)
        new_f = tuple(fb[fp[g[v]]] for v in range(vp_s))
        new_g = tuple(gb[gp[f[u]]] for u in range(up_s))
        table.append(fn_index(new_f, xn_s) * ny_s + fn_index(new_g, yn_s))
    return DialMorphism(src, tgt, fwd, FnTable(tgt.neg, src.neg, tuple(table)))


def hom_obj(a: DialObject, b: DialObject, cap: int = DEFAULT_CAP) -> DialObject:
    """Internal hom.

    Positive carrier V^U x X^Y: candidate forward/backward table pairs.
    Negative carrier U x Y: the points where a candidate is probed.
    The weight at ((f, F), (u, y)) is imp(weight_a(u, F(y)),
    weight_b(f(u), y)), so a candidate is a morphism exactly when all
    its weights sit above the unit.
    """
    lin = _same_lineale(a, b)
    fs = exp_set(b.pos, a.pos, cap)
    bs = exp_set(a.neg, b.neg, cap)
    pos = FinSet(
        _guard(fs.size * bs.size, cap),
        tuple(f"({lf},{lg})" for lf in fs.labels for lg in bs.labels),
    )
    neg = product_set(a.pos, b.neg)
    _guard(neg.size, cap)
    f_tabs = [fn_from_index(fi, a.pos.size, b.pos.size) for fi in range(fs.size)]
    b_tabs = [fn_from_index(bi, b.neg.size, a.neg.size) for bi in range(bs.size)]
    tag = lin.tag
    imp = lin._imp
    alpha = a.payloads()
    beta = b.payloads()
    rows = []
    for f in f_tabs:
        for bt in b_tabs:
            row = []
            for u in range(a.pos.size):
                au = alpha[u]
                bu = beta[f[u]]
                for y in range(b.neg.size):
                    row.append(LinealeValue(tag, imp(au[bt[y]], bu[y])))
            rows.append(tuple(row))
    return DialObject(lin, pos, neg, tuple(rows))


def hom_mor(
    m_in: DialMorphism, m_out: DialMorphism, cap: int = DEFAULT_CAP
) -> DialMorphism:
    """Hom is contravariant in its first argument, covariant in the second.

    Given m_in: A' -> A and m_out: B -> B', produce
    hom(A, B) -> hom(A', B').  Forward conjugates a candidate pair
    (h, H) to (g . h . f, F . H . G); backward sends a probe (u', y')
    to (f(u'), G(y')).
    """
    a_prime, a = m_in.source, m_in.target
    b, b_prime = m_out.source, m_out.target
    src = hom_obj(a, b, cap)
    tgt = hom_obj(a_prime, b_prime, cap)

    f, fb = m_in.fwd.table, m_in.bwd.table
    g, gb = m_out.fwd.table, m_out.bwd.table
    n_b = a.neg.size ** b.neg.size
    n_b_t = a_prime.neg.size ** b_prime.neg.size
    fwd_table = []
    for idx in range(src.pos.size):
        hi, Hi = divmod(idx, n_b)
        h = fn_from_index(hi, a.pos.size, b.pos.size)
        H = fn_from_index(Hi, b.neg.size, a.neg.size)
        new_h = tuple(g[h[f[u]]] for u in range(a_prime.pos.size))
        new_H = tuple(fb[H[gb[y]]] for y in range(b_prime.neg.size))
        fwd_table.append(
            fn_index(new_h, b_prime.pos.size) * n_b_t
            + fn_index(new_H, a_prime.neg.size)
        )
    bwd_table = []
    for idx in range(tgt.neg.size):
        u_p, y_p = divmod(idx, b_prime.neg.size)
        bwd_table.append(f[u_p] * b.neg.size + gb[y_p])
    return DialMorphism(
        src,
        tgt,
        FnTable(src.pos, tgt.pos, tuple(fwd_table)),
        FnTable(tgt.neg, src.neg, tuple(bwd_table)),
    )


# -- the tensor-hom adjunction ------------------------------------------------


def curry_dial(
    m: DialMorphism, a: DialObject, b: DialObject, cap: int = DEFAULT_CAP
) -> DialMorphism:
    """Transpose m: tensor(a, b) -> c into a -> hom(b, c).

    Forward pairs the transpose of m's forward map with the transpose
    (swapped and re-curried) of the second backward component; backward
    evaluates the first backward component.  The order condition is
    preserved with equality, so the output is valid whenever m is.

    The caller asserts that m.source really is tensor_obj(a, b); only
    the carrier shapes are verified here.
    """
    if m.source.lin.tag != a.lin.tag or a.lin.tag != b.lin.tag:
        raise TagMismatch("factors are over a different lineale than the morphism")
    if m.source.pos.size != a.pos.size * b.pos.size or m.source.neg.size != (
        a.neg.size**b.pos.size
    ) * (b.neg.size**a.pos.size):
        raise ShapeMismatch("morphism source is not shaped like the tensor of the factors")
    c = m.target
    au, bv = a.pos.size, b.pos.size
    ax, by = a.neg.size, b.neg.size
    cw, cz = c.pos.size, c.neg.size
    tgt = hom_obj(b, c, cap)

    f = m.fwd.table
    nyu = by**au
    nyz = by**cz
    first = [fn_from_index(k // nyu, bv, ax) for k in m.bwd.table]
    second = [fn_from_index(k % nyu, au, by) for k in m.bwd.table]
    fwd_table = []
    for u in range(au):
        p = fn_index(tuple(f[u * bv + v] for v in range(bv)), cw)
        q = fn_index(tuple(second[z][u] for z in range(cz)), by)
        fwd_table.append(p * nyz + q)
    bwd_table = []
    for v in range(bv):
        for z in range(cz):
            bwd_table.append(first[z][v])
    return DialMorphism(
        a,
        tgt,
        FnTable(a.pos, tgt.pos, tuple(fwd_table)),
        FnTable(tgt.neg, a.neg, tuple(bwd_table)),
    )


def uncurry_dial(
    m: DialMorphism, b: DialObject, c: DialObject, cap: int = DEFAULT_CAP
) -> DialMorphism:
    """Transpose m: a -> hom(b, c) back into tensor(a, b) -> c."""
    if m.target.lin.tag != b.lin.tag or b.lin.tag != c.lin.tag:
        raise TagMismatch("factors are over a different lineale than the morphism")
    if m.target.pos.size != (c.pos.size**b.pos.size) * (
        b.neg.size**c.neg.size
    ) or m.target.neg.size != b.pos.size * c.neg.size:
        raise ShapeMismatch("morphism target is not shaped like the hom of the factors")
    a = m.source
    au, bv = a.pos.size, b.pos.size
    ax, by = a.neg.size, b.neg.size
    cw, cz = c.pos.size, c.neg.size
    src = tensor_obj(a, b, cap)

    g = m.fwd.table
    G = m.bwd.table
    nyz = by**cz
    nyu = by**au
    fwd_table = []
    for u in range(au):
        g1 = fn_from_index(g[u] // nyz, bv, cw)
        for v in range(bv):
            fwd_table.append(g1[v])
    bwd_table = []
    for z in range(cz):
        c1 = fn_index(tuple(G[v * cz + z] for v in range(bv)), ax)
        c2 = fn_index(
            tuple(fn_from_index(g[u] % nyz, cz, by)[z] for u in range(au)), by
        )
        bwd_table.append(c1 * nyu + c2)
    return DialMorphism(
        src,
        c,
        FnTable(src.pos, c.pos, tuple(fwd_table)),
        FnTable(c.neg, src.neg, tuple(bwd_table)),
    )


# -- structural isomorphisms ----------------------------------------------------


def associator(
    a: DialObject, b: DialObject, c: DialObject, cap: int = DEFAULT_CAP
) -> DialMorphism:
    """The isomorphism tensor(tensor(a, b), c) -> tensor(a, tensor(b, c)).

    Row-major indexing makes the forward table the identity; the
    backward table regroups response tables between the two bracketings
    elementwise.
    """
    src = tensor_obj(tensor_obj(a, b, cap), c, cap)
    tgt = tensor_obj(a, tensor_obj(b, c, cap), cap)
    au, bv, cw = a.pos.size, b.pos.size, c.pos.size
    ax, by, cz = a.neg.size, b.neg.size, c.neg.size

    fwd = FnTable(src.pos, tgt.pos, tuple(range(src.pos.size)))

    byw = by**cw
    czv = cz**bv
    nk = (byw * czv) ** au
    nxv = ax**bv
    nyu = by**au
    inner = nxv * nyu
    nn = cz ** (au * bv)
    table = []
    for idx in range(tgt.neg.size):
        fi, ki = divmod(idx, nk)
        f = fn_from_index(fi, bv * cw, ax)
        kd = fn_from_index(ki, au, byw * czv)
        g = []
        h = []
        for u in range(au):
            gi, hi = divmod(kd[u], czv)
            g.append(fn_from_index(gi, cw, by))
            h.append(fn_from_index(hi, bv, cz))
        m_digits = []
        for w in range(cw):
            p = fn_index(tuple(f[v * cw + w] for v in range(bv)), ax)
            q = fn_index(tuple(g[u][w] for u in range(au)), by)
            m_digits.append(p * nyu + q)
        m_idx = fn_index(tuple(m_digits), inner)
        n_idx = fn_index(
            tuple(h[u][v] for u in range(au) for v in range(bv)), cz
        )
        table.append(m_idx * nn + n_idx)
    return DialMorphism(src, tgt, fwd, FnTable(tgt.neg, src.neg, tuple(table)))


def left_unitor(a: DialObject, cap: int = DEFAULT_CAP) -> DialMorphism:
    """tensor(I, a) -> a.  Both tables are identities under our indexing."""
    i = tensor_unit(a.lin)
    src = tensor_obj(i, a, cap)
    return DialMorphism(
        src,
        a,
        FnTable(src.pos, a.pos, tuple(range(a.pos.size))),
        FnTable(a.neg, src.neg, tuple(range(a.neg.size))),
    )


def right_unitor(a: DialObject, cap: int = DEFAULT_CAP) -> DialMorphism:
    """tensor(a, I) -> a.  Both tables are identities under our indexing."""
    i = tensor_unit(a.lin)
    src = tensor_obj(a, i, cap)
    return DialMorphism(
        src,
        a,
        FnTable(src.pos, a.pos, tuple(range(a.pos.size))),
        FnTable(a.neg, src.neg, tuple(range(a.neg.size))),
    )


def symmetry(a: DialObject, b: DialObject, cap: int = DEFAULT_CAP) -> DialMorphism:
    """tensor(a, b) -> tensor(b, a): swap rows, swap response pairs.

    Valid because every lineale here has a commutative product.
    """
    src = tensor_obj(a, b, cap)
    tgt = tensor_obj(b, a, cap)
    fwd = table_swap(a.pos, b.pos)
    nxv = a.neg.size**b.pos.size
    nyu = b.neg.size**a.pos.size
    table = []
    for idx in range(tgt.neg.size):
        gi, fi = divmod(idx, nxv)
        table.append(fi * nyu + gi)
    return DialMorphism(src, tgt, fwd, FnTable(tgt.neg, src.neg, tuple(table)))


# -- brute-force oracle ---------------------------------------------------------


def enumerate_morphisms(
    a: DialObject, b: DialObject, cap: int = DEFAULT_CAP
) -> list[DialMorphism]:
    """Every valid morphism a -> b, in lexicographic (forward, backward) order.

    The candidate space has |B.pos|^|A.pos| * |A.neg|^|B.neg| elements
    and is capped.  This is the oracle the law suites compare against.
    """
    nf = b.pos.size**a.pos.size
    nb = a.neg.size**b.neg.size
    if nf * nb > cap:
        raise CapExceeded(nf * nb, cap, what="morphism candidate space")
    leq = a.lin._leq
    alpha = a.payloads()
    beta = b.payloads()
    us = range(a.pos.size)
    ys = range(b.neg.size)
    out = []
    for fi in range(nf):
        f = fn_from_index(fi, a.pos.size, b.pos.size)
        rows = [(alpha[u], beta[f[u]]) for u in us]
        for bi in range(nb):
            bt = fn_from_index(bi, b.neg.size, a.neg.size)
            ok = True
            for au, bu in rows:
                for y in ys:
                    if not leq(au[bt[y]], bu[y]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(
                    DialMorphism(
                        a,
                        b,
                        FnTable(a.pos, b.pos, f),
                        FnTable(b.neg, a.neg, bt),
                    )
                )
    return out
