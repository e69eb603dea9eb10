"""Finite sets and functions: the Cartesian base instance.

Objects are sets {0, .., n-1}, morphisms are lookup tables.  The monoidal
product is the Cartesian product with the row-major pairing index
(x, y) -> x * |Y| + y, which makes the product strictly associative and
strictly unital against the singleton, matching the tensor conventions of the
linear instance.  The admissible span class here is the class of all spans,
and relative pullbacks are ordinary pullbacks on lexicographically ordered
matching pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import coalg
from .catcore import AllSpans, BaseCategory, Report
from .errors import CodomainMismatch, ShapeMismatch, SquareDoesNotCommute
from .linalg import Matrix


@dataclass(frozen=True)
class FinSetObj:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ShapeMismatch("negative set size")


@dataclass(frozen=True)
class FinFun:
    dom: FinSetObj
    cod: FinSetObj
    table: tuple

    def __init__(self, dom, cod, table):
        table = tuple(table)
        if len(table) != dom.size:
            raise ShapeMismatch("table length does not match the domain size")
        for v in table:
            if not (0 <= v < cod.size):
                raise ShapeMismatch(f"table value {v} outside the codomain")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "table", table)

    def __call__(self, x):
        return self.table[x]


def fid(x: FinSetObj) -> FinFun:
    return FinFun(x, x, range(x.size))


class FinSetCategory(BaseCategory):
    name = "finset"

    def __init__(self):
        self._class = AllSpans(self)

    def identity(self, obj):
        return fid(obj)

    def compose(self, g: FinFun, f: FinFun) -> FinFun:
        if f.cod != g.dom:
            raise CodomainMismatch("compose: cod(f) != dom(g)")
        return FinFun(f.dom, g.cod, tuple(g.table[v] for v in f.table))

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def equal_mor(self, f, g):
        return f == g

    def equal_obj(self, x, y):
        return x == y

    def tensor_obj(self, x, y):
        return FinSetObj(x.size * y.size)

    def tensor_mor(self, f: FinFun, g: FinFun) -> FinFun:
        gm = g.cod.size
        table = []
        for a in f.table:
            base = a * gm
            table.extend(base + b for b in g.table)
        return FinFun(self.tensor_obj(f.dom, g.dom), self.tensor_obj(f.cod, g.cod), table)

    def unit_obj(self):
        return FinSetObj(1)

    def symmetry(self, x: FinSetObj, y: FinSetObj) -> FinFun:
        m, n = x.size, y.size
        table = [0] * (m * n)
        for i in range(m):
            for j in range(n):
                table[i * n + j] = j * m + i
        return FinFun(FinSetObj(m * n), FinSetObj(n * m), table)

    def is_epi(self, f: FinFun) -> bool:
        return set(f.table) == set(range(f.cod.size))

    def invert(self, f: FinFun):
        if f.dom.size != f.cod.size or len(set(f.table)) != f.dom.size:
            return None
        inv = [0] * f.dom.size
        for x, y in enumerate(f.table):
            inv[y] = x
        return FinFun(f.cod, f.dom, inv)

    @property
    def span_class(self):
        return self._class


FINSET = FinSetCategory()


class FinSetPullback(NamedTuple):
    obj: FinSetObj
    p_a: FinFun
    p_c: FinFun
    pairs: tuple
    f: FinFun
    g: FinFun

    def index(self, a, c):
        return self.pairs.index((a, c))


def pullback(f: FinFun, g: FinFun) -> FinSetPullback:
    """Ordinary pullback of f: A -> B <- C :g on lexicographic matching pairs."""
    if f.cod != g.cod:
        raise CodomainMismatch("pullback needs a common codomain")
    pairs = tuple(
        (a, c) for a in range(f.dom.size) for c in range(g.dom.size) if f.table[a] == g.table[c]
    )
    p = FinSetObj(len(pairs))
    p_a = FinFun(p, f.dom, tuple(a for a, _ in pairs))
    p_c = FinFun(p, g.dom, tuple(c for _, c in pairs))
    return FinSetPullback(p, p_a, p_c, pairs, f, g)


def universal_factor(pb: FinSetPullback, a: FinFun, c: FinFun) -> FinFun:
    """The unique h with p_A∘h = a and p_C∘h = c, for a commuting span (a, c)."""
    if a.dom != c.dom:
        raise ShapeMismatch("span legs must share their domain")
    if a.cod != pb.f.dom or c.cod != pb.g.dom:
        raise ShapeMismatch("span legs do not match the pullback cospan")
    idx = {pair: k for k, pair in enumerate(pb.pairs)}
    table = []
    for x in range(a.dom.size):
        if pb.f.table[a.table[x]] != pb.g.table[c.table[x]]:
            raise SquareDoesNotCommute(f"f(a({x})) != g(c({x}))")
        table.append(idx[(a.table[x], c.table[x])])
    return FinFun(a.dom, pb.obj, table)


def finset_monoid_check(m_obj: FinSetObj, m: FinFun, u: int) -> Report:
    """Exhaustive associativity and two-sided unit check of a multiplication table."""
    n = m_obj.size
    if m.dom.size != n * n or m.cod != m_obj:
        raise ShapeMismatch("multiplication table has the wrong shape")
    if not (0 <= u < n) and n > 0:
        raise ShapeMismatch("unit element outside the carrier")
    mul = lambda a, b: m.table[a * n + b]
    rep = Report()
    assoc_witness = None
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul(mul(a, b), c) != mul(a, mul(b, c)):
                    assoc_witness = f"({a},{b},{c})"
                    break
            if assoc_witness:
                break
        if assoc_witness:
            break
    rep.add("associativity", assoc_witness is None, assoc_witness)
    unit_witness = None
    for a in range(n):
        if mul(u, a) != a or mul(a, u) != a:
            unit_witness = str(a)
            break
    rep.add("two-sided unit", unit_witness is None, unit_witness)
    return rep


def linearize_obj(x: FinSetObj, fld) -> coalg.Coalgebra:
    """The group-like coalgebra k[X]: δ(e_x) = e_x⊗e_x, ε(e_x) = 1."""
    return coalg.grouplike(fld, x.size)


def linearize_fun(f: FinFun, fld) -> coalg.CoalgMap:
    """e_x -> e_{f(x)}; a comonoid morphism between group-like coalgebras."""
    src = linearize_obj(f.dom, fld)
    tgt = linearize_obj(f.cod, fld)
    mat = Matrix.zeros(fld, f.cod.size, f.dom.size)
    for x, y in enumerate(f.table):
        mat.data[y][x] = fld.one
    return coalg.CoalgMap(src, tgt, mat)
