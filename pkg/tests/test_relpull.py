"""Relative pullback calculus: box morphisms, unit/assoc isos, coherence, monoids."""

import pytest

from gen import (
    FIELDS,
    all_monoids,
    finset_monoid,
    group_algebra,
    group_c2,
    group_pullback,
    group_v4,
    rand_box_config,
    rand_box_stage2,
    rand_finfun,
    rng_for,
)
from relspan import (
    FINSET,
    QQ,
    CoalgCategory,
    FinFun,
    FinSetObj,
    Matrix,
    MonoidMorphism,
    box,
    check_monoid,
    check_monoid_morphism,
    check_reflection_instance,
    coherence_pentagon,
    coherence_triangle,
    grouplike,
    linearize_fun,
    monoid_on_pullback,
    path_coalgebra,
    pullback,
    relative_pullback,
    relative_pullback_coalg,
    unit_isos,
)
from relspan.coalg import cid
from relspan.errors import LegsNotInClass, SquaresDoNotCommute, WrongShape
from relspan.relpull import assoc_iso, check_pullback_invariants


def ffun(dom, cod, table):
    return FinFun(FinSetObj(dom), FinSetObj(cod), table)


# -- construction and dispatch -------------------------------------------------


def test_dispatch_finset_equals_plain_pullback():
    rng = rng_for("rp-dispatch")
    f = rand_finfun(rng, 3, 2)
    g = rand_finfun(rng, 4, 2)
    pb = relative_pullback(FINSET, f, g)
    plain = pullback(f, g)
    assert pb.apex == plain.obj and pb.p_a == plain.p_a and pb.p_c == plain.p_c
    assert check_pullback_invariants(pb).ok


def test_dispatch_coalg_equals_coalg_pullback():
    rng = rng_for("rp-dispatch-c")
    for field in FIELDS:
        base = CoalgCategory(field)
        f = linearize_fun(rand_finfun(rng, 3, 2), field)
        g0 = linearize_fun(rand_finfun(rng, 4, 2), field)
        pb = relative_pullback(base, f, g0)
        plain = relative_pullback_coalg(f, g0)
        assert pb.apex == plain.apex
        assert pb.p_a.mat == plain.p_a.mat and pb.p_c.mat == plain.p_c.mat
        assert check_pullback_invariants(pb).ok


def test_trivial_base_gives_product_both_instances():
    pb = relative_pullback(FINSET, ffun(2, 1, [0, 0]), ffun(3, 1, [0, 0, 0]))
    assert pb.apex.size == 6
    for field in FIELDS:
        base = CoalgCategory(field)
        f = linearize_fun(ffun(2, 1, [0, 0]), field)
        g = linearize_fun(ffun(3, 1, [0, 0, 0]), field)
        pbq = relative_pullback(base, f, g)
        assert pbq.apex.dim == 6


def test_legs_not_in_class_rejected():
    field = QQ
    base = CoalgCategory(field)
    p = path_coalgebra(field)
    with pytest.raises(LegsNotInClass):
        relative_pullback(base, cid(p), cid(p))


# -- box morphisms ---------------------------------------------------------------


def test_box_identity_is_identity():
    rng = rng_for("box-id")
    f = rand_finfun(rng, 3, 2)
    g = rand_finfun(rng, 3, 2)
    pb = relative_pullback(FINSET, f, g)
    bm = box(pb, pb, FINSET.identity(f.dom), FINSET.identity(g.dom), FINSET.identity(f.cod))
    assert bm.mor == FINSET.identity(pb.apex)


def test_box_componentwise_on_pairs_and_projections():
    rng = rng_for("box-comp")
    for _ in range(20):
        f, g, f2, g2, a, b, c = rand_box_config(rng)
        src = relative_pullback(FINSET, f, g)
        tgt = relative_pullback(FINSET, f2, g2)
        bm = box(src, tgt, a, c, b)
        for idx, (x, y) in enumerate(src.payload.pairs):
            assert tgt.payload.pairs[bm.mor.table[idx]] == (a.table[x], c.table[y])
        assert FINSET.compose(tgt.p_a, bm.mor) == FINSET.compose(a, src.p_a)
        assert FINSET.compose(tgt.p_c, bm.mor) == FINSET.compose(c, src.p_c)


def test_box_functoriality_finset_and_coalg():
    rng = rng_for("box-fun")
    for field in FIELDS:
        base = CoalgCategory(field)
        for _ in range(8):
            f, g, f2, g2, a, b, c = rand_box_config(rng)
            f4, g4, a2, b2, c2 = rand_box_stage2(rng, f2, g2)

            pb1 = relative_pullback(FINSET, f, g)
            pb2 = relative_pullback(FINSET, f2, g2)
            pb3 = relative_pullback(FINSET, f4, g4)
            bm1 = box(pb1, pb2, a, c, b)
            bm2 = box(pb2, pb3, a2, c2, b2)
            direct = box(
                pb1, pb3, FINSET.compose(a2, a), FINSET.compose(c2, c), FINSET.compose(b2, b)
            )
            assert FINSET.compose(bm2.mor, bm1.mor) == direct.mor

            # linearized configuration exercises the coalgebra instance
            lf = lambda h: linearize_fun(h, field)  # noqa: E731
            q1 = relative_pullback(base, lf(f), lf(g))
            q2 = relative_pullback(base, lf(f2), lf(g2))
            q3 = relative_pullback(base, lf(f4), lf(g4))
            qm1 = box(q1, q2, lf(a), lf(c), lf(b))
            qm2 = box(q2, q3, lf(a2), lf(c2), lf(b2))
            qdirect = box(
                q1,
                q3,
                base.compose(lf(a2), lf(a)),
                base.compose(lf(c2), lf(c)),
                base.compose(lf(b2), lf(b)),
            )
            assert base.compose(qm2.mor, qm1.mor).mat == qdirect.mor.mat


def test_box_rejects_noncommuting_squares():
    f = ffun(2, 2, [0, 1])
    pb = relative_pullback(FINSET, f, f)
    flip = ffun(2, 2, [1, 0])
    with pytest.raises(SquaresDoNotCommute):
        box(pb, pb, flip, FINSET.identity(f.dom), FINSET.identity(f.cod))


# -- unit isomorphisms -------------------------------------------------------------


def test_unit_iso_right_is_graph_of_f():
    rng = rng_for("unit-right")
    f = rand_finfun(rng, 3, 2)
    pb = relative_pullback(FINSET, f, FINSET.identity(f.cod))
    proj, inv = unit_isos(pb, "right")
    assert proj == pb.p_a
    # the apex is the graph of f; the inverse sends a to (a, f(a))
    for a in range(3):
        assert pb.payload.pairs[inv.table[a]] == (a, f.table[a])


def test_unit_iso_left_and_coalg_dims():
    rng = rng_for("unit-left")
    for field in FIELDS:
        base = CoalgCategory(field)
        g0 = rand_finfun(rng, 3, 2)
        g = linearize_fun(g0, field)
        pb = relative_pullback(base, base.identity(g.tgt), g)
        proj, inv = unit_isos(pb, "left")
        assert pb.apex.dim == 3
        assert (proj.mat @ inv.mat) == Matrix.identity(field, 3)


def test_unit_iso_b_box_b():
    b = FinSetObj(3)
    i = FINSET.identity(b)
    pb = relative_pullback(FINSET, i, i)
    for side in ("left", "right"):
        proj, inv = unit_isos(pb, side)
        assert FINSET.compose(proj, inv) == i


def test_unit_iso_wrong_shape():
    f = ffun(2, 2, [0, 0])
    pb = relative_pullback(FINSET, f, f)
    with pytest.raises(WrongShape):
        unit_isos(pb, "right")


# -- associativity isomorphism --------------------------------------------------------


def _chain_pullbacks(base, f, g, h, k):
    pb_xy = relative_pullback(base, f, g)
    pb_yz = relative_pullback(base, h, k)
    pb_xy_z = relative_pullback(base, base.compose(h, pb_xy.p_c), k)
    pb_x_yz = relative_pullback(base, f, base.compose(g, pb_yz.p_a))
    return pb_xy, pb_xy_z, pb_yz, pb_x_yz


def test_assoc_iso_identity_chain():
    b = FinSetObj(2)
    i = FINSET.identity(b)
    pb_xy, pb_xy_z, pb_yz, pb_x_yz = _chain_pullbacks(FINSET, i, i, i, i)
    l, l_inv = assoc_iso(pb_xy, pb_xy_z, pb_yz, pb_x_yz)
    assert FINSET.compose(l_inv, l) == FINSET.identity(pb_xy_z.apex)


def test_assoc_iso_is_rebracketing_bijection():
    rng = rng_for("assoc")
    for _ in range(15):
        f = rand_finfun(rng, rng.randint(1, 4), rng.randint(1, 3))
        g = rand_finfun(rng, rng.randint(1, 4), f.cod.size)
        h = rand_finfun(rng, g.dom.size, rng.randint(1, 3))
        k = rand_finfun(rng, rng.randint(1, 4), h.cod.size)
        pb_xy, pb_xy_z, pb_yz, pb_x_yz = _chain_pullbacks(FINSET, f, g, h, k)
        l, l_inv = assoc_iso(pb_xy, pb_xy_z, pb_yz, pb_x_yz)
        # oracle: decompose indices into matching triples and rebracket
        for idx, (i_xy, z) in enumerate(pb_xy_z.payload.pairs):
            x, y = pb_xy.payload.pairs[i_xy]
            j_yz = pb_yz.payload.pairs.index((y, z))
            want = pb_x_yz.payload.pairs.index((x, j_yz))
            assert l.table[idx] == want
        assert FINSET.compose(l, l_inv) == FINSET.identity(pb_x_yz.apex)


def test_assoc_iso_coalg_is_linearized_permutation():
    rng = rng_for("assoc-coalg")
    field = QQ
    base = CoalgCategory(field)
    for _ in range(5):
        f = rand_finfun(rng, rng.randint(1, 3), rng.randint(1, 2))
        g = rand_finfun(rng, rng.randint(1, 3), f.cod.size)
        h = rand_finfun(rng, g.dom.size, rng.randint(1, 2))
        k = rand_finfun(rng, rng.randint(1, 3), h.cod.size)
        fin = _chain_pullbacks(FINSET, f, g, h, k)
        l_fin, _ = assoc_iso(*fin)
        lf = lambda t: linearize_fun(t, field)  # noqa: E731
        qua = _chain_pullbacks(base, lf(f), lf(g), lf(h), lf(k))
        l_q, _ = assoc_iso(*qua)
        assert l_q.mat == linearize_fun(l_fin, field).mat


def test_unit_constraint_naturality_over_fixed_base():
    rng = rng_for("naturality2")
    for _ in range(15):
        # spans over a fixed B with a span morphism a: A -> A' (t'∘a = t, s'∘a = s)
        nb = rng.randint(1, 3)
        na2 = rng.randint(1, 4)
        t2 = rand_finfun(rng, na2, nb)
        s2 = rand_finfun(rng, na2, nb)
        na = rng.randint(1, 4)
        a = rand_finfun(rng, na, na2)
        t1 = FINSET.compose(t2, a)
        s1 = FINSET.compose(s2, a)
        id_b = FINSET.identity(FinSetObj(nb))
        # right unit: A□_B B -> A, naturality of the projection in A
        pb1 = relative_pullback(FINSET, s1, id_b)
        pb2 = relative_pullback(FINSET, s2, id_b)
        bm = box(pb1, pb2, a, id_b, id_b)
        assert FINSET.compose(pb2.p_a, bm.mor) == FINSET.compose(a, pb1.p_a)
        # left unit: B□_B A -> A
        qb1 = relative_pullback(FINSET, id_b, t1)
        qb2 = relative_pullback(FINSET, id_b, t2)
        qm = box(qb1, qb2, id_b, a, id_b)
        assert FINSET.compose(qb2.p_c, qm.mor) == FINSET.compose(a, qb1.p_c)


def test_assoc_constraint_naturality():
    """l'∘((a□c)□e) = (a□(c□e))∘l for random morphisms of spans over B."""
    rng = rng_for("naturality3")
    for _ in range(10):
        nb = rng.randint(1, 3)
        id_b = FINSET.identity(FinSetObj(nb))

        def rand_span_morphism():
            n2 = rng.randint(1, 4)
            t2 = rand_finfun(rng, n2, nb)
            s2 = rand_finfun(rng, n2, nb)
            n1 = rng.randint(1, 4)
            m = rand_finfun(rng, n1, n2)
            return (FINSET.compose(t2, m), FINSET.compose(s2, m)), (t2, s2), m

        (t1, s1), (t1p, s1p), a = rand_span_morphism()
        (t2, s2), (t2p, s2p), c = rand_span_morphism()
        (t3, s3), (t3p, s3p), e = rand_span_morphism()

        def bracketed(tA, sA, tC, sC, tE, sE):
            pb_xy = relative_pullback(FINSET, sA, tC)
            pb_yz = relative_pullback(FINSET, sC, tE)
            pb_xy_z = relative_pullback(FINSET, FINSET.compose(sC, pb_xy.p_c), tE)
            pb_x_yz = relative_pullback(FINSET, sA, FINSET.compose(tC, pb_yz.p_a))
            return pb_xy, pb_xy_z, pb_yz, pb_x_yz

        lower = bracketed(t1, s1, t2, s2, t3, s3)
        upper = bracketed(t1p, s1p, t2p, s2p, t3p, s3p)
        l_low, _ = assoc_iso(*lower)
        l_up, _ = assoc_iso(*upper)
        ac = box(lower[0], upper[0], a, c, id_b)
        ce = box(lower[2], upper[2], c, e, id_b)
        ac_e = box(lower[1], upper[1], ac.mor, e, id_b)
        a_ce = box(lower[3], upper[3], a, ce.mor, id_b)
        assert FINSET.compose(l_up, ac_e.mor) == FINSET.compose(a_ce.mor, l_low)


# -- coherence ---------------------------------------------------------------------


def test_triangle_finset_and_coalg():
    rng = rng_for("triangle")
    for _ in range(10):
        f = rand_finfun(rng, rng.randint(1, 4), rng.randint(1, 4))
        g = rand_finfun(rng, rng.randint(1, 4), f.cod.size)
        assert coherence_triangle(FINSET, f, g)
        base = CoalgCategory(QQ)
        assert coherence_triangle(base, linearize_fun(f, QQ), linearize_fun(g, QQ))


def test_pentagon_finset_small():
    rng = rng_for("pentagon")
    for _ in range(4):
        sizes = [rng.randint(1, 3) for _ in range(7)]
        f = rand_finfun(rng, sizes[0], sizes[1])
        g = rand_finfun(rng, sizes[2], sizes[1])
        h = rand_finfun(rng, sizes[2], sizes[3])
        k = rand_finfun(rng, sizes[4], sizes[3])
        r = rand_finfun(rng, sizes[4], sizes[5])
        s = rand_finfun(rng, sizes[6], sizes[5])
        assert coherence_pentagon(FINSET, f, g, h, k, r, s)


def test_pentagon_coalg_small():
    rng = rng_for("pentagon-coalg")
    field = QQ
    base = CoalgCategory(field)
    sizes = [rng.randint(1, 2) for _ in range(7)]
    maps = []
    for i in range(6):
        dom = sizes[i] if i % 2 == 0 else sizes[i + 1]
        cod = sizes[i + 1] if i % 2 == 0 else sizes[i]
        maps.append(linearize_fun(rand_finfun(rng, dom, cod), field))
    assert coherence_pentagon(base, *maps)


# -- monoid on pullback ---------------------------------------------------------------


def test_monoid_on_pullback_finset_is_matching_submonoid():
    monoids2 = [finset_monoid(t, u, FINSET) for t, u in all_monoids(2)]
    z2 = finset_monoid((0, 1, 1, 0), 0, FINSET)
    for m1 in monoids2:
        # f, g: the identity hom and the constant-unit hom into Z/2 when valid
        homs = []
        import itertools

        for table in itertools.product(range(2), repeat=2):
            cand = MonoidMorphism(m1, z2, ffun(2, 2, table))
            if check_monoid_morphism(cand).ok:
                homs.append(cand)
        for fm in homs:
            for gm in homs:
                pb = relative_pullback(FINSET, fm.f, gm.f)
                mon = monoid_on_pullback(fm, gm, pb)
                assert check_monoid(mon).ok
                assert check_monoid_morphism(MonoidMorphism(mon, m1, pb.p_a)).ok
                assert check_monoid_morphism(MonoidMorphism(mon, m1, pb.p_c)).ok
                pairs = pb.payload.pairs
                for i1, (a1, c1) in enumerate(pairs):
                    for i2, (a2, c2) in enumerate(pairs):
                        got = pairs[mon.m.table[i1 * len(pairs) + i2]]
                        assert got == (
                            m1.m.table[a1 * 2 + a2],
                            m1.m.table[c1 * 2 + c2],
                        )


def test_monoid_on_pullback_group_algebras():
    for field in FIELDS:
        base = CoalgCategory(field)
        kc2 = group_algebra(field, group_c2())
        kv4 = group_algebra(field, group_v4())
        # C2 -> C2 identity and V4 -> C2 projection onto the first bit
        from gen import group_algebra_hom

        f = group_algebra_hom(field, kc2, kc2, [0, 1])
        g = group_algebra_hom(field, kv4, kc2, [0, 1, 0, 1])
        pb = relative_pullback(base, f.f, g.f)
        mon = monoid_on_pullback(f, g, pb)
        assert check_monoid(mon).ok
        pairs, table = group_pullback(group_c2(), [0, 1], group_v4(), [0, 1, 0, 1])
        want = group_algebra(field, table)
        assert pb.apex.dim == len(pairs)
        assert mon.m.mat == want.m.mat
        assert mon.u.mat == want.u.mat


def test_monoid_on_pullback_identity_leg():
    z2 = finset_monoid((0, 1, 1, 0), 0, FINSET)
    i = MonoidMorphism(z2, z2, FINSET.identity(z2.carrier))
    pb = relative_pullback(FINSET, i.f, i.f)
    mon = monoid_on_pullback(i, i, pb)
    assert check_monoid(mon).ok
    # diagonal: isomorphic to Z/2 via either projection
    assert pb.apex.size == 2


# -- reflection --------------------------------------------------------------------


def test_reflection_finset_always():
    rng = rng_for("refl-fin")
    f = rand_finfun(rng, 3, 2)
    g = rand_finfun(rng, 3, 2)
    pb = relative_pullback(FINSET, f, g)
    if pb.apex.size:
        k = rand_finfun(rng, 2, pb.apex.size)
        l = rand_finfun(rng, 2, 3)
        for side in ("left", "right"):
            assert check_reflection_instance(pb, k, l, side).ok


def test_reflection_coalg_grouplike():
    rng = rng_for("refl-coalg")
    for field in FIELDS:
        base = CoalgCategory(field)
        for _ in range(8):
            f0 = rand_finfun(rng, rng.randint(1, 3), rng.randint(1, 2))
            g0 = rand_finfun(rng, rng.randint(1, 3), f0.cod.size)
            pb = relative_pullback(base, linearize_fun(f0, field), linearize_fun(g0, field))
            if pb.apex.dim == 0:
                continue
            d0 = rng.randint(1, 3)
            k_mat = Matrix.zeros(field, pb.apex.dim, d0)
            for col in range(d0):
                k_mat.data[rng.randrange(pb.apex.dim)][col] = field.one
            d = grouplike(field, d0)
            from relspan import CoalgMap

            k = CoalgMap(d, pb.apex, k_mat)
            l0 = linearize_fun(rand_finfun(rng, d0, 3), field)
            l = CoalgMap(d, l0.tgt, l0.mat)
            rep = check_reflection_instance(pb, k, l, "left")
            assert rep.ok, [c.name for c in rep.failures()]
