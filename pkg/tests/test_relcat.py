"""Relative categories: span tensors, axiom checks, fixtures, linearization, functors."""

import pytest

from gen import FIELDS, rand_finfun, rng_for
from relspan import (
    FINSET,
    QQ,
    CoalgCategory,
    FinFun,
    FinSetObj,
    RelativeFunctor,
    SmallCategory,
    SpanOverB,
    check_relative_category,
    check_relative_functor,
    from_small_category,
    linearize_relcat,
    path_coalgebra,
    span_power,
    span_tensor,
)
from relspan.coalg import cid
from relspan.errors import BaseMismatch, LegsNotInClass, NotACategory
from relspan.relcat import (
    RelativeCategory,
    compose_functors,
    composition_table,
    fixture_discrete,
    fixture_groupoid5,
    fixture_one_object_group,
    fixture_poset01,
    fixture_z2,
    linearize_functor,
    unit_span,
)


def ffun(dom, cod, table):
    return FinFun(FinSetObj(dom), FinSetObj(cod), table)


FIXTURES = {
    "discrete3": fixture_discrete(3),
    "poset01": fixture_poset01(),
    "z2": fixture_z2(),
    "groupoid5": fixture_groupoid5(),
}


# -- spans over B -----------------------------------------------------------------


def test_span_tensor_unit_laws():
    from relspan import unit_isos

    rc = from_small_category(fixture_poset01())
    sp = SpanOverB(FINSET, rc.b, rc.a, rc.t, rc.s)
    e = unit_span(FINSET, rc.b)
    left = span_tensor(e, sp)
    right = span_tensor(sp, e)
    # the apexes biject with A via the materialized unit isomorphisms
    assert left.a.size == sp.a.size
    assert right.a.size == sp.a.size
    assert set(left.pullback.payload.pairs) == {(sp.t.table[x], x) for x in range(sp.a.size)}
    assert set(right.pullback.payload.pairs) == {(x, sp.s.table[x]) for x in range(sp.a.size)}
    proj_l, inv_l = unit_isos(left.pullback, "left")
    proj_r, inv_r = unit_isos(right.pullback, "right")
    assert FINSET.compose(proj_l, inv_l) == FINSET.identity(sp.a)
    assert FINSET.compose(proj_r, inv_r) == FINSET.identity(sp.a)


def test_span_tensor_composable_pairs_oracle():
    rng = rng_for("span-tensor")
    for _ in range(10):
        nb, na = rng.randint(1, 3), rng.randint(1, 5)
        t = rand_finfun(rng, na, nb)
        s = rand_finfun(rng, na, nb)
        sp = SpanOverB(FINSET, FinSetObj(nb), FinSetObj(na), t, s)
        sq = span_tensor(sp, sp)
        brute = [(x, y) for x in range(na) for y in range(na) if s.table[x] == t.table[y]]
        assert list(sq.pullback.payload.pairs) == brute
        assert sq.t.table == tuple(t.table[x] for x, _ in brute)
        assert sq.s.table == tuple(s.table[y] for _, y in brute)


def test_span_power_counts():
    # a 2-object, 3-arrow category: its arrow span squared = composable pairs
    cat = fixture_poset01()
    rc = from_small_category(cat)
    sp = SpanOverB(FINSET, rc.b, rc.a, rc.t, rc.s)
    p0 = span_power(sp, 0)
    assert p0.a == rc.b
    p1 = span_power(sp, 1)
    assert p1.a == rc.a
    p2 = span_power(sp, 2)
    brute = [
        (x, y)
        for x in range(rc.a.size)
        for y in range(rc.a.size)
        if rc.s.table[x] == rc.t.table[y]
    ]
    assert p2.a.size == len(brute)
    p3 = span_power(sp, 3)
    brute3 = [
        (xy, z)
        for xy in range(len(brute))
        for z in range(rc.a.size)
        if rc.s.table[brute[xy][1]] == rc.t.table[z]
    ]
    assert p3.a.size == len(brute3)


def test_span_base_mismatch():
    rc = from_small_category(fixture_poset01())
    sp = SpanOverB(FINSET, rc.b, rc.a, rc.t, rc.s)
    e = unit_span(FINSET, FinSetObj(5))
    with pytest.raises(BaseMismatch):
        span_tensor(sp, e)


def test_span_over_noncocommutative_base_rejected():
    field = QQ
    base = CoalgCategory(field)
    p = path_coalgebra(field)
    with pytest.raises(LegsNotInClass):
        SpanOverB(base, p, p, cid(p), cid(p))


# -- small categories and fixtures ------------------------------------------------


def test_fixtures_validate_and_pass():
    for name, cat in FIXTURES.items():
        cat.validate()
        rc = from_small_category(cat)
        rep = check_relative_category(rc)
        assert rep.ok, (name, [c.name for c in rep.failures()])


def test_empty_category():
    cat = SmallCategory(0, 0, (), (), (), ())
    rc = from_small_category(cat)
    assert check_relative_category(rc).ok


def test_round_trip_composition_table():
    for cat in FIXTURES.values():
        rc = from_small_category(cat)
        assert composition_table(rc) == [list(r) for r in cat.comp]


def test_not_a_category_witnesses():
    # broken associativity: a "composition" that ignores its second argument
    bad = SmallCategory(1, 2, (0, 0), (0, 0), (0,), ((0, 0), (1, 0)))
    with pytest.raises(NotACategory):
        bad.validate()
    # identity not an endo-arrow
    bad2 = SmallCategory(2, 2, (0, 1), (1, 0), (0, 1), ((-1, 0), (1, -1)))
    with pytest.raises(NotACategory):
        bad2.validate()


def test_linearized_fixtures_pass():
    for field in FIELDS:
        for name, cat in FIXTURES.items():
            rc = from_small_category(cat)
            rcq = linearize_relcat(rc, field)
            rep = check_relative_category(rcq)
            assert rep.ok, (name, field.tag, [c.name for c in rep.failures()])


def test_linearize_discrete_composition_is_unit_iso():
    rc = from_small_category(fixture_discrete(2))
    rcq = linearize_relcat(rc, QQ)
    # discrete: A = B, composition is the diagonal projection
    assert rcq.d.mat.rows == 2 and rcq.d.mat.cols == 2


def test_poset_linearization_composition_matrix():
    rc = from_small_category(fixture_poset01())
    rcq = linearize_relcat(rc, QQ)
    # 3-dim arrow coalgebra; d is a 0/1 matrix matching the finite table
    assert rcq.d.mat.rows == 3
    assert all(x in (QQ.zero, QQ.one) for row in rcq.d.mat.data for x in row)
    for k, pair in enumerate(rc.pb.payload.pairs):
        col = rcq.d.mat.col_sparse(k)
        assert col == {rc.d.table[k]: QQ.one}
        del pair


# -- violation fixtures --------------------------------------------------------------


def _raw_relcat(cat: SmallCategory) -> RelativeCategory:
    return from_small_category(cat)


def test_violation_bad_section():
    # pointing both identities at arrow 0 breaks t∘i = 1 at object 1
    rc = _raw_relcat(fixture_poset01())
    bad = RelativeCategory(rc.base, rc.b, rc.a, rc.s, rc.t, ffun(2, 3, [0, 0]), rc.d, rc.pb)
    rep = check_relative_category(bad)
    assert not rep.ok
    assert any("(b)" in c.name and not c.ok for c in rep.checks)


def test_violation_wrong_identity_arrow_one_object():
    # in a one-object category (b) is vacuous; a wrong i surfaces at (d)
    rc = _raw_relcat(fixture_z2())
    bad = RelativeCategory(rc.base, rc.b, rc.a, rc.s, rc.t, ffun(1, 2, [1]), rc.d, rc.pb)
    rep = check_relative_category(bad)
    assert not rep.ok
    assert any(c.name.startswith("(d)") and not c.ok for c in rep.checks)


def test_violation_bad_composition_endpoint():
    # poset category with d sending (id1, arrow) to id0: breaks axiom (c)
    rc = _raw_relcat(fixture_poset01())
    d_table = list(rc.d.table)
    pairs = rc.pb.payload.pairs
    idx = pairs.index((1, 2))  # id1 after the 0->1 arrow
    d_table[idx] = 0
    bad = RelativeCategory(
        rc.base, rc.b, rc.a, rc.s, rc.t, rc.i, ffun(len(pairs), 3, d_table), rc.pb
    )
    rep = check_relative_category(bad)
    assert not rep.ok
    assert any(c.name.startswith("(c)") and not c.ok for c in rep.checks)


def test_violation_bad_unit_law():
    # Z/5 with d(0, x) corrupted on one non-identity arrow: breaks (d) or (e)
    rc = _raw_relcat(fixture_groupoid5())
    pairs = rc.pb.payload.pairs
    d_table = list(rc.d.table)
    idx = pairs.index((0, 1))
    d_table[idx] = 2
    bad = RelativeCategory(
        rc.base, rc.b, rc.a, rc.s, rc.t, rc.i, ffun(len(pairs), 5, d_table), rc.pb
    )
    rep = check_relative_category(bad)
    assert not rep.ok
    failed = [c.name for c in rep.failures()]
    assert any(name.startswith("(d)") or name.startswith("(e)") for name in failed)


def test_violation_bad_associativity():
    # one-object table that is unital but not associative
    table = [
        [0, 1, 2],
        [1, 2, 2],
        [2, 2, 1],
    ]
    cat = fixture_one_object_group(table)
    with pytest.raises(NotACategory):
        from_small_category(cat)
    # the same data as a raw relative category must fail axiom (e)
    b = FinSetObj(1)
    a = FinSetObj(3)
    s = ffun(3, 1, [0, 0, 0])
    t = ffun(3, 1, [0, 0, 0])
    i = ffun(1, 3, [0])
    from relspan import relative_pullback

    pb = relative_pullback(FINSET, s, t)
    d = ffun(9, 3, [table[x][y] for x, y in pb.payload.pairs])
    bad = RelativeCategory(FINSET, b, a, s, t, i, d, pb)
    rep = check_relative_category(bad)
    assert not rep.ok
    assert any(c.name.startswith("(e)") and not c.ok for c in rep.checks)


# -- functors ---------------------------------------------------------------------


def test_identity_functor_passes():
    for cat in FIXTURES.values():
        rc = from_small_category(cat)
        fun = RelativeFunctor(FINSET.identity(rc.b), FINSET.identity(rc.a))
        assert check_relative_functor(fun, rc, rc).ok


def test_constant_functor_to_discrete():
    src = from_small_category(fixture_poset01())
    tgt = from_small_category(fixture_discrete(1))
    fun = RelativeFunctor(ffun(2, 1, [0, 0]), ffun(3, 1, [0, 0, 0]))
    assert check_relative_functor(fun, src, tgt).ok


def test_inclusion_functor_and_composition():
    # embed the discrete category on 1 object into poset01 at object 1
    src = from_small_category(fixture_discrete(1))
    mid = from_small_category(fixture_poset01())
    fun1 = RelativeFunctor(ffun(1, 2, [1]), ffun(1, 3, [1]))
    assert check_relative_functor(fun1, src, mid).ok
    tgt = from_small_category(fixture_discrete(1))
    fun2 = RelativeFunctor(ffun(2, 1, [0, 0]), ffun(3, 1, [0, 0, 0]))
    assert check_relative_functor(fun2, mid, tgt).ok
    comp = compose_functors(fun2, fun1, FINSET)
    assert check_relative_functor(comp, src, tgt).ok


def test_functor_violating_unit_compatibility_fails():
    src = from_small_category(fixture_z2())
    tgt = from_small_category(fixture_z2())
    fun = RelativeFunctor(FINSET.identity(src.b), ffun(2, 2, [1, 0]))
    rep = check_relative_functor(fun, src, tgt)
    assert not rep.ok
    assert any("a∘i = i'∘b" in c.name and not c.ok for c in rep.checks)


def test_linearized_functor_passes():
    src = from_small_category(fixture_poset01())
    tgt = from_small_category(fixture_discrete(1))
    fun = RelativeFunctor(ffun(2, 1, [0, 0]), ffun(3, 1, [0, 0, 0]))
    for field in FIELDS:
        srcq = linearize_relcat(src, field)
        tgtq = linearize_relcat(tgt, field)
        funq = linearize_functor(fun, field)
        assert check_relative_functor(funq, srcq, tgtq).ok
