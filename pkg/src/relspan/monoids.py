"""Monoids in a symmetric monoidal base category.

Generic over a BaseCategory instance: monoid axioms, the induced morphism
q = m∘(f⊗g), distributive laws and the product monoid they induce, the
factorization of an invertible q through a distributive law, the bijection
between monoid morphisms out of a product and compatible pairs, and the
factorization of pairs through an invertible q.

Over finite sets these are ordinary monoids; over coalgebras a monoid is a
bialgebra, and check_monoid additionally verifies that the multiplication and
unit are coalgebra maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .catcore import BaseCategory, Report
from .coalg import CoalgCategory, CoalgMap, check_coalg_map
from .errors import (
    CodomainMismatch,
    CompatibilityFails,
    NotADistLaw,
    NotInverse,
    ShapeMismatch,
)


@dataclass
class MonoidObj:
    base: BaseCategory
    carrier: object
    m: object  # carrier⊗carrier -> carrier
    u: object  # I -> carrier


@dataclass
class MonoidMorphism:
    src: MonoidObj
    tgt: MonoidObj
    f: object


@dataclass
class DistLaw:
    a: MonoidObj
    b: MonoidObj
    x: object  # B⊗A -> A⊗B


def _extra_instance_checks(m: MonoidObj) -> list:
    """In the coalgebra instance, monoid means bialgebra: the structure maps
    must themselves be comonoid morphisms."""
    out = []
    if isinstance(m.base, CoalgCategory):
        for label, mor in (("multiplication", m.m), ("unit", m.u)):
            if isinstance(mor, CoalgMap):
                sub = check_coalg_map(mor)
                for c in sub.checks:
                    out.append((f"{label} is a coalgebra map: {c.name}", c.ok, c.witness))
    return out


def check_monoid(mon: MonoidObj) -> Report:
    base = mon.base
    a = mon.carrier
    if not base.equal_obj(base.dom(mon.m), base.tensor_obj(a, a)) or not base.equal_obj(
        base.cod(mon.m), a
    ):
        raise ShapeMismatch("multiplication has the wrong shape")
    if not base.equal_obj(base.dom(mon.u), base.unit_obj()) or not base.equal_obj(
        base.cod(mon.u), a
    ):
        raise ShapeMismatch("unit has the wrong shape")
    ida = base.identity(a)
    rep = Report()
    rep.add(
        "associativity",
        base.equal_mor(
            base.compose(mon.m, base.tensor_mor(mon.m, ida)),
            base.compose(mon.m, base.tensor_mor(ida, mon.m)),
        ),
        "m∘(m⊗1) != m∘(1⊗m)",
    )
    rep.add(
        "left unit",
        base.equal_mor(base.compose(mon.m, base.tensor_mor(mon.u, ida)), ida),
        "m∘(u⊗1) != 1",
    )
    rep.add(
        "right unit",
        base.equal_mor(base.compose(mon.m, base.tensor_mor(ida, mon.u)), ida),
        "m∘(1⊗u) != 1",
    )
    for name, ok, witness in _extra_instance_checks(mon):
        rep.add(name, ok, witness)
    return rep


def check_monoid_morphism(mm: MonoidMorphism) -> Report:
    base = mm.src.base
    rep = Report()
    rep.add(
        "multiplicative",
        base.equal_mor(
            base.compose(mm.f, mm.src.m),
            base.compose(mm.tgt.m, base.tensor_mor(mm.f, mm.f)),
        ),
        "f∘m != m'∘(f⊗f)",
    )
    rep.add(
        "unital",
        base.equal_mor(base.compose(mm.f, mm.src.u), mm.tgt.u),
        "f∘u != u'",
    )
    return rep


def check_dist_law(dl: DistLaw) -> Report:
    base = dl.a.base
    a, b = dl.a, dl.b
    ida = base.identity(a.carrier)
    idb = base.identity(b.carrier)
    x = dl.x
    rep = Report()
    rep.add(
        "x∘(m⊗1) = (1⊗m)∘(x⊗1)∘(1⊗x)",
        base.equal_mor(
            base.compose(x, base.tensor_mor(b.m, ida)),
            base.compose(
                base.tensor_mor(ida, b.m),
                base.compose(base.tensor_mor(x, idb), base.tensor_mor(idb, x)),
            ),
        ),
        "multiplication of B not respected",
    )
    rep.add(
        "x∘(u⊗1) = 1⊗u",
        base.equal_mor(
            base.compose(x, base.tensor_mor(b.u, ida)), base.tensor_mor(ida, b.u)
        ),
        "unit of B not respected",
    )
    rep.add(
        "x∘(1⊗m) = (m⊗1)∘(1⊗x)∘(x⊗1)",
        base.equal_mor(
            base.compose(x, base.tensor_mor(idb, a.m)),
            base.compose(
                base.tensor_mor(a.m, idb),
                base.compose(base.tensor_mor(ida, x), base.tensor_mor(x, ida)),
            ),
        ),
        "multiplication of A not respected",
    )
    rep.add(
        "x∘(1⊗u) = u⊗1",
        base.equal_mor(
            base.compose(x, base.tensor_mor(idb, a.u)), base.tensor_mor(a.u, idb)
        ),
        "unit of A not respected",
    )
    return rep


class InducedQ(NamedTuple):
    q: object
    epi: bool


def induced_q(f: MonoidMorphism, g: MonoidMorphism) -> InducedQ:
    """q = m_C∘(f⊗g): A⊗B -> C; epi-ness of q certifies (f, g) joint epi."""
    base = f.src.base
    if f.tgt is not g.tgt and not base.equal_obj(f.tgt.carrier, g.tgt.carrier):
        raise CodomainMismatch("induced_q needs a common codomain monoid")
    q = base.compose(f.tgt.m, base.tensor_mor(f.f, g.f))
    return InducedQ(q, base.is_epi(q))


def product_monoid(dl: DistLaw) -> MonoidObj:
    """The monoid on A⊗B induced by a distributive law: unit u⊗u and
    multiplication (m⊗m)∘(1⊗x⊗1)."""
    rep = check_dist_law(dl)
    if not rep.ok:
        raise NotADistLaw("; ".join(c.name for c in rep.failures()))
    base = dl.a.base
    a, b = dl.a, dl.b
    ida = base.identity(a.carrier)
    idb = base.identity(b.carrier)
    carrier = base.tensor_obj(a.carrier, b.carrier)
    m = base.compose(
        base.tensor_mor(a.m, b.m), base.tensor_mor(ida, base.tensor_mor(dl.x, idb))
    )
    u = base.tensor_mor(a.u, b.u)
    return MonoidObj(base, carrier, m, u)


def inclusion_a(dl: DistLaw, prod: MonoidObj) -> MonoidMorphism:
    """A -> A⊗B via 1⊗u."""
    base = dl.a.base
    return MonoidMorphism(dl.a, prod, base.tensor_mor(base.identity(dl.a.carrier), dl.b.u))


def inclusion_b(dl: DistLaw, prod: MonoidObj) -> MonoidMorphism:
    """B -> A⊗B via u⊗1."""
    base = dl.a.base
    return MonoidMorphism(dl.b, prod, base.tensor_mor(dl.a.u, base.identity(dl.b.carrier)))


def factorization_dlaw(f: MonoidMorphism, g: MonoidMorphism, q_inverse=None) -> DistLaw:
    """For monoid morphisms f: A -> C <- B :g with invertible q, the unique
    distributive law x = q^{-1}∘m∘(g⊗f) making q a monoid isomorphism from
    the product monoid to C."""
    base = f.src.base
    qres = induced_q(f, g)
    if q_inverse is None:
        q_inverse = base.invert(qres.q)
        if q_inverse is None:
            raise NotInverse("q is not invertible and no inverse was supplied")
    dom_q = base.dom(qres.q)
    cod_q = base.cod(qres.q)
    if not (
        base.equal_mor(base.compose(qres.q, q_inverse), base.identity(cod_q))
        and base.equal_mor(base.compose(q_inverse, qres.q), base.identity(dom_q))
    ):
        raise NotInverse("supplied q_inverse is not a two-sided inverse of q")
    x = base.compose(q_inverse, base.compose(f.tgt.m, base.tensor_mor(g.f, f.f)))
    dl = DistLaw(f.src, g.src, x)
    rep = check_dist_law(dl)
    if not rep.ok:
        raise NotADistLaw("; ".join(c.name for c in rep.failures()))
    return dl


def morphism_from_pair(dl: DistLaw, a: MonoidMorphism, b: MonoidMorphism) -> MonoidMorphism:
    """The monoid morphism m∘(a⊗b): A⊗B -> C from a compatible pair
    (requires m∘(a⊗b)∘x = m∘(b⊗a))."""
    base = dl.a.base
    c = a.tgt
    lhs = base.compose(base.compose(c.m, base.tensor_mor(a.f, b.f)), dl.x)
    rhs = base.compose(c.m, base.tensor_mor(b.f, a.f))
    if not base.equal_mor(lhs, rhs):
        raise CompatibilityFails("m∘(a⊗b)∘x != m∘(b⊗a)")
    prod = product_monoid(dl)
    return MonoidMorphism(prod, c, base.compose(c.m, base.tensor_mor(a.f, b.f)))


def pair_from_morphism(dl: DistLaw, c: MonoidMorphism):
    """The pair (c∘(1⊗u), c∘(u⊗1)) of monoid morphisms out of A and B."""
    base = dl.a.base
    fa = base.compose(c.f, base.tensor_mor(base.identity(dl.a.carrier), dl.b.u))
    fb = base.compose(c.f, base.tensor_mor(dl.a.u, base.identity(dl.b.carrier)))
    return (
        MonoidMorphism(dl.a, c.tgt, fa),
        MonoidMorphism(dl.b, c.tgt, fb),
    )


def factor_through(
    f: MonoidMorphism, g: MonoidMorphism, q_inverse, a: MonoidMorphism, b: MonoidMorphism
) -> MonoidMorphism:
    """The unique c: C -> D with c∘f = a and c∘g = b, for an invertible q and a
    compatible pair (a, b): c = m∘(a⊗b)∘q^{-1}."""
    base = f.src.base
    qres = induced_q(f, g)
    if not (
        base.equal_mor(base.compose(qres.q, q_inverse), base.identity(base.cod(qres.q)))
        and base.equal_mor(base.compose(q_inverse, qres.q), base.identity(base.dom(qres.q)))
    ):
        raise NotInverse("supplied q_inverse is not a two-sided inverse of q")
    d = a.tgt
    m_ab = base.compose(d.m, base.tensor_mor(a.f, b.f))
    compat_lhs = base.compose(
        m_ab, base.compose(q_inverse, base.compose(f.tgt.m, base.tensor_mor(g.f, f.f)))
    )
    compat_rhs = base.compose(d.m, base.tensor_mor(b.f, a.f))
    if not base.equal_mor(compat_lhs, compat_rhs):
        raise CompatibilityFails("m∘(a⊗b)∘q⁻¹∘m∘(g⊗f) != m∘(b⊗a)")
    c = MonoidMorphism(f.tgt, d, base.compose(m_ab, q_inverse))
    return c
