"""Language-neutral categorical interfaces.

A BaseCategory bundles the operations a symmetric monoidal category instance
must provide (identity, composition, monoidal product, unit, symmetry) over
opaque object/morphism types.  A SpanClass is a membership predicate on spans.
Admissibility of a class is not decidable in general, so this module only
exposes instance-level checks of (POST), (PRE), (UNITAL), (MULTIPLICATIVE) and
the split-epimorphism implication suite; the shipped classes are closed by
theorems, making every instance check a test of the implementation.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from .errors import CompositionMismatch, NotASection


# -- reports ----------------------------------------------------------------


@dataclass
class Check:
    name: str
    ok: bool
    witness: str | None = None

    def as_dict(self):
        d = {"name": self.name, "status": "pass" if self.ok else "fail"}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name, ok, witness=None):
        self.checks.append(Check(name, ok, witness if not ok else None))

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness))

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def __repr__(self):
        status = "ok" if self.ok else "FAIL"
        return f"Report({status}, {len(self.checks)} checks)"


# -- spans and cospans --------------------------------------------------------


@dataclass(frozen=True)
class Span:
    """A pair of morphisms out of a common apex: X <-left- A -right-> Y."""

    left: object
    right: object


@dataclass(frozen=True)
class Cospan:
    """A pair of morphisms into a common codomain: A -left-> B <-right- C."""

    left: object
    right: object


# -- the base-category interface ----------------------------------------------


class BaseCategory(ABC):
    """Symmetric monoidal category instance over opaque objects/morphisms."""

    name: str

    @abstractmethod
    def identity(self, obj): ...

    @abstractmethod
    def compose(self, g, f):
        """g∘f (f first)."""

    @abstractmethod
    def dom(self, f): ...

    @abstractmethod
    def cod(self, f): ...

    @abstractmethod
    def equal_mor(self, f, g) -> bool: ...

    @abstractmethod
    def equal_obj(self, x, y) -> bool: ...

    @abstractmethod
    def tensor_obj(self, x, y): ...

    @abstractmethod
    def tensor_mor(self, f, g): ...

    @abstractmethod
    def unit_obj(self): ...

    @abstractmethod
    def symmetry(self, x, y):
        """The braiding c: x⊗y -> y⊗x (an involution in both instances)."""

    @abstractmethod
    def is_epi(self, f) -> bool: ...

    def invert(self, f):
        """Two-sided inverse of f when it exists, else None."""
        raise NotImplementedError

    @property
    @abstractmethod
    def span_class(self) -> "SpanClass":
        """The admissible class this instance ships with."""

    # convenience

    def apex(self, span: Span):
        return self.dom(span.left)

    def check_span(self, span: Span):
        if not self.equal_obj(self.dom(span.left), self.dom(span.right)):
            raise CompositionMismatch("span legs must share their apex")


# -- span classes --------------------------------------------------------------


class SpanClass(ABC):
    """Membership predicate realizing an admissible class of spans."""

    base: BaseCategory

    @abstractmethod
    def failure_witness(self, span: Span) -> str | None:
        """None if the span is a member, else a human-readable witness."""

    def contains(self, span: Span) -> bool:
        return self.failure_witness(span) is None


class AllSpans(SpanClass):
    """The class of all spans (admissible and monoidal for trivial reasons)."""

    def __init__(self, base: BaseCategory):
        self.base = base

    def failure_witness(self, span: Span) -> str | None:
        self.base.check_span(span)
        return None


# -- instance-level admissibility checks ---------------------------------------


def legs_in_class(cls: SpanClass, cs: Cospan) -> bool:
    """Both identity-padded spans of the cospan A -f-> B <-g- C are members."""
    base = cls.base
    if not base.equal_obj(base.cod(cs.left), base.cod(cs.right)):
        raise CompositionMismatch("cospan legs must share their codomain")
    a = base.dom(cs.left)
    c = base.dom(cs.right)
    return cls.contains(Span(base.identity(a), cs.left)) and cls.contains(
        Span(cs.right, base.identity(c))
    )


def check_post_instance(cls: SpanClass, span: Span, f2, g2) -> bool:
    """Single-instance witness of (POST): (f2∘f, A, g2∘g) is a member too."""
    base = cls.base
    base.check_span(span)
    if not base.equal_obj(base.dom(f2), base.cod(span.left)):
        raise CompositionMismatch("f2 does not postcompose with the left leg")
    if not base.equal_obj(base.dom(g2), base.cod(span.right)):
        raise CompositionMismatch("g2 does not postcompose with the right leg")
    return cls.contains(Span(base.compose(f2, span.left), base.compose(g2, span.right)))


def check_pre_instance(cls: SpanClass, span: Span, h) -> bool:
    """Single-instance witness of (PRE): both legs precomposed with h: B -> A."""
    base = cls.base
    base.check_span(span)
    if not base.equal_obj(base.cod(h), base.apex(span)):
        raise CompositionMismatch("h does not precompose with the span")
    return cls.contains(Span(base.compose(span.left, h), base.compose(span.right, h)))


def check_monoidal_instance(cls: SpanClass, span1: Span, span2: Span) -> bool:
    """Single-instance witness of (MULTIPLICATIVE): the product span is a member."""
    base = cls.base
    base.check_span(span1)
    base.check_span(span2)
    return cls.contains(
        Span(base.tensor_mor(span1.left, span2.left), base.tensor_mor(span1.right, span2.right))
    )


def check_unital_instance(cls: SpanClass, f, g) -> bool:
    """Single-instance witness of (UNITAL): a span with apex I is a member."""
    base = cls.base
    unit = base.unit_obj()
    if not (base.equal_obj(base.dom(f), unit) and base.equal_obj(base.dom(g), unit)):
        raise CompositionMismatch("unitality check needs legs out of the monoidal unit")
    return cls.contains(Span(f, g))


def split_epi_class_facts(cls: SpanClass, i, s, probes=()) -> Report:
    """Implication suite for a split epimorphism s: A -> B with section i: B -> A.

    Checks, on the supplied probe spans out of B, the cycle
    (a) => (b) => (c) => (a) where
      (a) the identity span on B is a member,
      (b) every span out of B is a member (witnessed on the probes),
      (c) the span (A <-i- B === B) is a member,
    and part (2): if (A === A -s-> B) is a member then (c) holds.
    """
    base = cls.base
    b_obj = base.dom(i)
    a_obj = base.cod(i)
    if not base.equal_mor(base.compose(s, i), base.identity(b_obj)):
        raise NotASection("s∘i is not the identity")

    id_b = base.identity(b_obj)
    a_holds = cls.contains(Span(id_b, id_b))
    c_holds = cls.contains(Span(i, id_b))
    part2_premise = cls.contains(Span(base.identity(a_obj), s))

    rep = Report()
    rep.add("(a) identity span on B in class", a_holds)
    for k, (f, g) in enumerate(probes):
        if not base.equal_obj(base.dom(f), b_obj) or not base.equal_obj(base.dom(g), b_obj):
            raise CompositionMismatch("probe spans must have apex B")
        member = cls.contains(Span(f, g))
        rep.add(
            f"(a)=>(b) probe {k}",
            (not a_holds) or member,
            f"probe span {k} escaped the class although (a) holds",
        )
    rep.add(
        "(b)=>(c) on the (i, id) instance",
        (not a_holds) or c_holds,
        "(c) fails although every span out of B should be a member",
    )
    rep.add("(c)=>(a) via s∘i = id", (not c_holds) or a_holds, "(a) fails although (c) holds")
    rep.add(
        "(2) (A === A -s-> B) in class => (c)",
        (not part2_premise) or c_holds,
        "(c) fails although the part-(2) premise holds",
    )
    return rep
