"""Regenerate the shipped JSON fixtures (run from the repository root)."""

import json
import os

from relspan import GF, QQ, grouplike, linearize_fun, path_coalgebra
from relspan.finset import FINSET, FinFun, FinSetObj
from relspan.jsonio import coalgebra_to_json, matrix_to_json, small_category_to_json
from relspan.relcat import (
    fixture_discrete,
    fixture_groupoid5,
    fixture_poset01,
    fixture_z2,
    from_small_category,
)

HERE = os.path.dirname(os.path.abspath(__file__))


def write(name, doc):
    with open(os.path.join(HERE, name), "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def coalg_map_json(src, tgt, mat):
    return {"kind": "coalgebra_map", "src": src, "tgt": tgt, "matrix": matrix_to_json(mat)}


def main():
    # coalgebras: valid group-like, a corrupted copy, the non-cocommutative path
    k2 = grouplike(QQ, 2)
    broken = coalgebra_to_json(k2)
    broken["delta"]["entries"][0][1] = "1"  # e1 now also hits e0⊗e0
    write(
        "coalgebras.json",
        {
            "k2": coalgebra_to_json(k2),
            "k2_broken": broken,
            "path": coalgebra_to_json(path_coalgebra(QQ)),
        },
    )

    # finite-set cospan
    write(
        "cospan_finset.json",
        {
            "f": {"kind": "finset_fun", "fun": {"dom": 2, "cod": 2, "table": [0, 1]}},
            "g": {"kind": "finset_fun", "fun": {"dom": 3, "cod": 2, "table": [0, 1, 0]}},
            "cs": {"kind": "cospan", "left": "f", "right": "g"},
        },
    )

    # coalgebra cospan over F5 (group-like) plus a class-violating one
    f5 = GF(5)
    f0 = FinFun(FinSetObj(3), FinSetObj(2), (0, 1, 0))
    g0 = FinFun(FinSetObj(2), FinSetObj(2), (1, 0))
    f = linearize_fun(f0, f5)
    g = linearize_fun(g0, f5)
    p = path_coalgebra(f5)
    write(
        "cospan_coalg.json",
        {
            "A": coalgebra_to_json(f.src),
            "B": coalgebra_to_json(f.tgt),
            "C": coalgebra_to_json(g.src),
            "P": coalgebra_to_json(p),
            "f": coalg_map_json("A", "B", f.mat),
            "g": coalg_map_json("C", "B", g.mat),
            "idp": coalg_map_json("P", "P", __import__("relspan").Matrix.identity(f5, 3)),
            "cs": {"kind": "cospan", "left": "f", "right": "g"},
            "bad": {"kind": "cospan", "left": "idp", "right": "idp"},
        },
    )

    # chains for the coherence command
    write(
        "chains.json",
        {
            "tri": {
                "kind": "chain",
                "instance": "finset",
                "sizes": [3, 2, 4],
                "maps": [[0, 1, 0], [1, 0, 1, 1]],
            },
            "pent": {
                "kind": "chain",
                "instance": "finset",
                "sizes": [2, 2, 3, 2, 3, 2, 2],
                "maps": [
                    [0, 1],
                    [0, 1, 1],
                    [1, 0, 1],
                    [0, 1, 0],
                    [1, 0, 0],
                    [0, 0],
                ],
            },
        },
    )

    # relative categories: the four shipped fixtures plus a functor between two
    cats = {
        "discrete3": fixture_discrete(3),
        "poset01": fixture_poset01(),
        "z2": fixture_z2(),
        "groupoid5": fixture_groupoid5(),
    }
    doc = {name: small_category_to_json(cat) for name, cat in cats.items()}
    doc["collapse"] = {
        "kind": "functor",
        "src": "poset01",
        "tgt": "discrete3",
        "b": [0, 0],
        "a": [0, 0, 0],
    }
    doc["bad_functor"] = {
        "kind": "functor",
        "src": "z2",
        "tgt": "z2",
        "b": [0],
        "a": [1, 0],  # swaps the identity with the flip: unit law breaks
    }
    write("relcats.json", doc)

    # single-axiom violations as raw relative-category declarations
    rc = from_small_category(fixture_poset01())
    pairs = rc.pb.payload.pairs
    d = list(rc.d.table)
    d_bad_c = list(d)
    d_bad_c[pairs.index((1, 2))] = 0
    z5 = from_small_category(fixture_groupoid5())
    z5_pairs = z5.pb.payload.pairs
    d_z5 = list(z5.d.table)
    d_bad_unit = list(d_z5)
    d_bad_unit[z5_pairs.index((0, 1))] = 2
    nonassoc = [[0, 1, 2], [1, 2, 2], [2, 2, 1]]
    base = {"kind": "relative_category", "instance": "finset"}
    write(
        "relcat_violations.json",
        {
            "bad_section": {
                **base,
                "objects": 2,
                "arrows": 3,
                "s": list(rc.s.table),
                "t": list(rc.t.table),
                "i": [0, 0],
                "d": d,
            },
            "bad_composition": {
                **base,
                "objects": 2,
                "arrows": 3,
                "s": list(rc.s.table),
                "t": list(rc.t.table),
                "i": list(rc.i.table),
                "d": d_bad_c,
            },
            "bad_unit_law": {
                **base,
                "objects": 1,
                "arrows": 5,
                "s": list(z5.s.table),
                "t": list(z5.t.table),
                "i": list(z5.i.table),
                "d": d_bad_unit,
            },
            "bad_associativity": {
                **base,
                "objects": 1,
                "arrows": 3,
                "s": [0, 0, 0],
                "t": [0, 0, 0],
                "i": [0],
                "d": [nonassoc[x][y] for x in range(3) for y in range(3)],
            },
        },
    )

    # monoids: Z/2 as a table and the group algebra of C2 as a bialgebra
    kc2 = coalgebra_to_json(grouplike(QQ, 2))
    kc2["kind"] = "bialgebra"
    m_mat = __import__("relspan").Matrix.zeros(QQ, 2, 4)
    for a in range(2):
        for b in range(2):
            m_mat.data[a ^ b][a * 2 + b] = QQ.one
    u_mat = __import__("relspan").Matrix.zeros(QQ, 2, 1)
    u_mat.data[0][0] = QQ.one
    kc2["m"] = matrix_to_json(m_mat)
    kc2["u"] = matrix_to_json(u_mat)
    write(
        "monoids.json",
        {
            "z2": {"kind": "finset_monoid", "size": 2, "table": [0, 1, 1, 0], "unit": 0},
            "bad_z2": {"kind": "finset_monoid", "size": 2, "table": [0, 1, 0, 0], "unit": 0},
            "kc2": kc2,
        },
    )


if __name__ == "__main__":
    main()
