"""Objects are weighted relations, morphisms are forward/backward table
pairs under a pointwise order condition.  The small cases here were
worked out by hand; the law suites in test_laws.py do the heavy lifting.
"""

import itertools

import pytest

from dialnet import (
    BOOL2,
    CapExceeded,
    DialObject,
    FinSet,
    FnTable,
    InvalidMorphism,
    KLEENE3,
    NAT,
    ShapeMismatch,
    TagMismatch,
    Violation,
    associator,
    check_morphism,
    compose,
    curry_dial,
    dial_morphism,
    dial_object,
    enumerate_morphisms,
    hom_mor,
    hom_obj,
    identity,
    inverse,
    left_unitor,
    oplus,
    oplus_copair,
    oplus_inl,
    oplus_inr,
    right_unitor,
    symmetry,
    tensor_mor,
    tensor_obj,
    tensor_unit,
    uncurry_dial,
    with_pairing,
    with_product,
    with_proj1,
    with_proj2,
)
from dialnet.laws import all_objects, random_morphism_from, random_object

T = BOOL2.value(True)
F = BOOL2.value(False)

BOTTOM = DialObject(BOOL2, FinSet(1), FinSet(1), ((F,),))
TOP = DialObject(BOOL2, FinSet(1), FinSet(1), ((T,),))

ID1 = FnTable(FinSet(1), FinSet(1), (0,))


def nat_obj(rows):
    m = [[NAT.value(v) for v in row] for row in rows]
    return DialObject(NAT, FinSet(len(m)), FinSet(len(m[0])), tuple(map(tuple, m)))


def bool_obj(rows):
    m = [[BOOL2.value(bool(v)) for v in row] for row in rows]
    return DialObject(BOOL2, FinSet(len(m)), FinSet(len(m[0])), tuple(map(tuple, m)))


# ---------------------------------------------------------------------------
# objects
# ---------------------------------------------------------------------------


def test_object_shape_is_checked():
    with pytest.raises(ShapeMismatch):
        DialObject(BOOL2, FinSet(2), FinSet(1), ((T,),))
    with pytest.raises(ShapeMismatch):
        DialObject(BOOL2, FinSet(1), FinSet(2), ((T,),))
    with pytest.raises(TagMismatch):
        DialObject(BOOL2, FinSet(1), FinSet(1), ((NAT.value(1),),))


def test_dial_object_tabulates():
    a = dial_object(NAT, FinSet(2), FinSet(3), lambda u, x: NAT.value(u * 3 + x))
    assert a.weight_at(1, 2).payload == 5


# ---------------------------------------------------------------------------
# the morphism condition
# ---------------------------------------------------------------------------


def test_false_maps_into_true():
    assert check_morphism(BOTTOM, TOP, ID1, ID1) == []


def test_true_does_not_map_into_false():
    vs = check_morphism(TOP, BOTTOM, ID1, ID1)
    assert vs == [Violation(0, 0, T, F)]
    with pytest.raises(InvalidMorphism) as exc:
        dial_morphism(TOP, BOTTOM, ID1, ID1)
    assert "1 point(s)" in str(exc.value)


def test_nat_condition_uses_reversed_order():
    # covering weights: 3 sits below 2 in the lineale sense
    three, two = nat_obj([[3]]), nat_obj([[2]])
    assert check_morphism(three, two, ID1, ID1) == []
    assert len(check_morphism(two, three, ID1, ID1)) == 1


def test_condition_quantifies_over_target_negatives():
    # bwd picks the column of the source that each target column must beat
    src = bool_obj([[1, 0]])
    tgt = bool_obj([[1, 1]])
    fwd = ID1
    bwd_good = FnTable(FinSet(2), FinSet(2), (0, 0))
    bwd_bad = FnTable(FinSet(2), FinSet(2), (0, 1))
    assert check_morphism(src, tgt, fwd, bwd_good) == []
    assert check_morphism(src, tgt, fwd, bwd_bad) == []
    # flipping the direction makes column 1 fail
    assert len(check_morphism(tgt, src, fwd, bwd_bad)) == 1


def test_shape_and_tag_guards():
    with pytest.raises(ShapeMismatch):
        check_morphism(BOTTOM, TOP, FnTable(FinSet(2), FinSet(1), (0, 0)), ID1)
    with pytest.raises(TagMismatch):
        check_morphism(BOTTOM, nat_obj([[1]]), ID1, ID1)


def test_compose_and_identity():
    a, b = nat_obj([[4]]), nat_obj([[2]])
    m = dial_morphism(a, b, ID1, ID1)
    assert compose(m, identity(a)).fwd == m.fwd
    assert compose(identity(b), m).bwd == m.bwd
    with pytest.raises(ShapeMismatch):
        compose(m, m)  # b is not a


# ---------------------------------------------------------------------------
# cartesian product and coproduct carriers
# ---------------------------------------------------------------------------


def test_with_product_blocks():
    a, b = nat_obj([[3]]), nat_obj([[7]])
    p = with_product(a, b)
    assert p.pos.size == 1 and p.neg.size == 2
    assert [w.payload for w in p.weight[0]] == [3, 7]


def test_projections_and_pairing_mediate():
    a, b = bool_obj([[1, 0], [0, 1]]), bool_obj([[1], [1]])
    p1, p2 = with_proj1(a, b), with_proj2(a, b)
    assert check_morphism(with_product(a, b), a, p1.fwd, p1.bwd) == []
    assert check_morphism(with_product(a, b), b, p2.fwd, p2.bwd) == []
    c = bool_obj([[0, 0]])
    f = dial_morphism(c, a, FnTable(FinSet(1), FinSet(2), (1,)), FnTable(FinSet(2), FinSet(2), (0, 1)))
    g = dial_morphism(c, b, FnTable(FinSet(1), FinSet(2), (0,)), FnTable(FinSet(1), FinSet(2), (1,)))
    h = with_pairing(f, g)
    assert compose(p1, h) == f
    assert compose(p2, h) == g


def test_oplus_blocks_and_injections():
    a, b = nat_obj([[3]]), nat_obj([[7]])
    s = oplus(a, b)
    assert s.pos.size == 2 and s.neg.size == 1
    assert [row[0].payload for row in s.weight] == [3, 7]
    i1, i2 = oplus_inl(a, b), oplus_inr(a, b)
    assert check_morphism(a, s, i1.fwd, i1.bwd) == []
    assert check_morphism(b, s, i2.fwd, i2.bwd) == []


def test_copair_mediates():
    a, b, c = bool_obj([[1]]), bool_obj([[0]]), bool_obj([[1], [1]])
    f = dial_morphism(a, c, FnTable(FinSet(1), FinSet(2), (0,)), ID1)
    g = dial_morphism(b, c, FnTable(FinSet(1), FinSet(2), (1,)), ID1)
    h = oplus_copair(f, g)
    assert compose(h, oplus_inl(a, b)) == f
    assert compose(h, oplus_inr(a, b)) == g


# ---------------------------------------------------------------------------
# tensor and hom
# ---------------------------------------------------------------------------


def test_tensor_of_singletons_multiplies_weights():
    a, b = nat_obj([[3]]), nat_obj([[7]])
    t = tensor_obj(a, b)
    assert t.pos.size == 1 and t.neg.size == 1
    assert t.weight_at(0, 0).payload == 10  # nat tensor is addition


def test_tensor_weight_formula():
    a = nat_obj([[1, 2], [3, 4]])
    b = nat_obj([[5, 6]])
    t = tensor_obj(a, b)
    # neg carrier: pairs (f: V->X, g: U->Y) with V=1, X=2, U=2, Y=2
    assert t.pos.size == 2 and t.neg.size == 2 * 4
    for u, v in itertools.product(range(2), range(1)):
        for fi in range(2):
            for gi in range(4):
                w = t.weight_at(u * 1 + v, fi * 4 + gi)
                fv = fi  # f has one entry
                gu = (gi >> (1 - u)) & 1  # base-2 numeral, position 0 high
                want = a.weight_at(u, fv).payload + b.weight_at(v, gu).payload
                assert w.payload == want


def test_tensor_unit_weight():
    i = tensor_unit(NAT)
    assert i.pos.size == i.neg.size == 1
    assert i.weight_at(0, 0) == NAT.unit


def test_hom_of_singletons_is_residual():
    a, b = nat_obj([[3]]), nat_obj([[5]])
    h = hom_obj(a, b)
    assert h.pos.size == 1 and h.neg.size == 1
    assert h.weight_at(0, 0).payload == 2  # max(5 - 3, 0)


def test_hom_row_all_true_iff_morphism():
    # over bool2 a hom element has an all-true row exactly when its table
    # pair passes the morphism check
    from dialnet.finset import fn_from_index

    a = bool_obj([[1, 0], [1, 1]])
    b = bool_obj([[0, 1]])
    h = hom_obj(a, b)
    assert h.pos.size == 1**2 * 2**2  # |V|^|U| * |X|^|Y|
    for p in range(h.pos.size):
        fi, ki = divmod(p, 2**2)
        fwd = FnTable(a.pos, b.pos, fn_from_index(fi, 2, 1))
        bwd = FnTable(b.neg, a.neg, fn_from_index(ki, 2, 2))
        row_true = all(h.weight_at(p, n).payload for n in range(h.neg.size))
        assert row_true == (check_morphism(a, b, fwd, bwd) == [])


def test_tensor_mor_acts_pointwise():
    a, b = nat_obj([[2]]), nat_obj([[0]])
    a2, b2 = nat_obj([[1]]), nat_obj([[0]])
    m = dial_morphism(a, a2, ID1, ID1)
    n = dial_morphism(b, b2, ID1, ID1)
    tm = tensor_mor(m, n)
    assert check_morphism(tensor_obj(a, b), tensor_obj(a2, b2), tm.fwd, tm.bwd) == []


def test_hom_mor_is_contravariant_in_first_argument():
    lo, hi = nat_obj([[2]]), nat_obj([[1]])
    c = nat_obj([[5]])
    m = dial_morphism(lo, hi, ID1, ID1)
    hm = hom_mor(m, identity(c))
    # precomposition direction: hom(hi, c) -> hom(lo, c)
    assert hm.source == hom_obj(hi, c)
    assert hm.target == hom_obj(lo, c)


# ---------------------------------------------------------------------------
# structural isomorphisms
# ---------------------------------------------------------------------------


def test_unitors_and_symmetry_are_isos():
    a = bool_obj([[1, 0], [0, 1]])
    b = bool_obj([[1], [0]])
    for m in (left_unitor(a), right_unitor(a), symmetry(a, b)):
        back = inverse(m)
        assert compose(back, m) == identity(m.source)
        assert compose(m, back) == identity(m.target)
        assert check_morphism(m.source, m.target, m.fwd, m.bwd) == []


def test_associator_regroups():
    a, b, c = bool_obj([[1]]), bool_obj([[0]]), bool_obj([[1, 1]])
    m = associator(a, b, c)
    assert m.source == tensor_obj(tensor_obj(a, b), c)
    assert m.target == tensor_obj(a, tensor_obj(b, c))
    assert compose(inverse(m), m) == identity(m.source)


def test_curry_uncurry_roundtrip_small():
    import random

    a, b = bool_obj([[1, 0]]), bool_obj([[1], [0]])
    rng = random.Random(3)
    for _ in range(10):
        m = random_morphism_from(BOOL2, rng, tensor_obj(a, b))
        n = curry_dial(m, a, b)
        assert n.source == a
        assert n.target == hom_obj(b, m.target)
        assert uncurry_dial(n, b, m.target) == m


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def test_enumerate_counts_singletons():
    assert len(enumerate_morphisms(BOTTOM, TOP)) == 1
    assert len(enumerate_morphisms(TOP, BOTTOM)) == 0


def test_enumerate_agrees_with_check_and_is_lexicographic():
    from dialnet.finset import all_tables

    a = bool_obj([[1, 0], [0, 0]])
    b = bool_obj([[1], [1]])
    got = enumerate_morphisms(a, b)
    brute = [
        (f, F)
        for f in all_tables(a.pos, b.pos)
        for F in all_tables(b.neg, a.neg)
        if check_morphism(a, b, f, F) == []
    ]
    assert [(m.fwd, m.bwd) for m in got] == brute
    keys = [(m.fwd.table, m.bwd.table) for m in got]
    assert keys == sorted(keys)


def test_enumerate_respects_cap():
    a = bool_obj([[1, 0], [0, 1]])
    with pytest.raises(CapExceeded):
        enumerate_morphisms(a, a, cap=3)


def test_empty_carriers_are_fine():
    empty_pos = DialObject(BOOL2, FinSet(0), FinSet(1), ())
    ms = enumerate_morphisms(empty_pos, TOP)
    assert len(ms) == 1  # unique empty forward table, unique bwd into 1
    assert identity(empty_pos).fwd.table == ()
    t = tensor_obj(empty_pos, TOP)
    assert t.pos.size == 0


def test_all_objects_census():
    assert len(all_objects(BOOL2, 2)) == 31
    assert len(all_objects(KLEENE3, 2)) == 107


def test_random_generators_produce_valid_morphisms():
    import random

    rng = random.Random(11)
    for _ in range(25):
        a = random_object(KLEENE3, rng)
        m = random_morphism_from(KLEENE3, rng, a)
        assert check_morphism(m.source, m.target, m.fwd, m.bwd) == []
