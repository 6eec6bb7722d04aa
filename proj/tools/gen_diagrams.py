#!/usr/bin/env python3
"""Regenerate the shipped diagram files under data/.

Faces are written as the cyclic sequence of labels met while walking the
boundary, with the sign of every shape parameter xi = +-w/(u u'). Edge
directions are derived from those signs: the first edge is taken "with" the
walk and each crossing of sign s flips the next edge unless s = -1, i.e.
eps_next = -s * eps_prev. A face whose signs cannot close up is rejected.

Usage: gen_diagrams.py [outdir]   (default: data/ next to this script)
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

import sympy as sp


def number(q):
    q = sp.nsimplify(q)
    re, im = sp.re(q), sp.im(q)
    fr, fi = Fraction(str(re)), Fraction(str(im))
    return [fr.numerator, fr.denominator, fi.numerator, fi.denominator]


def expr(text):
    e = sp.expand(sp.sympify(text, locals={"I": sp.I}))
    syms = sorted(e.free_symbols, key=lambda s: s.name)
    terms = {}
    for s in syms:
        c = e.coeff(s)
        if c.free_symbols:
            raise ValueError(f"label {text!r} is not affine")
        terms[s.name] = number(c)
    const = e.subs({s: 0 for s in syms})
    return {"const": number(const), "terms": terms}


def face(fid, seq):
    """seq alternates edge labels and (crossing label, xi sign) pairs, edge first."""
    if len(seq) % 2:
        raise ValueError(f"face {fid}: odd sequence")
    eps = [1]
    for k in range(1, len(seq), 2):
        _, sign = seq[k]
        eps.append(-sign * eps[-1])
    if eps[-1] != eps[0]:
        raise ValueError(f"face {fid}: shape-parameter signs are not cyclically consistent")
    entries = []
    for k, item in enumerate(seq):
        if k % 2 == 0:
            entries.append({"kind": "edge", "expr": expr(item),
                            "direction": "with" if eps[k // 2] > 0 else "against"})
        else:
            entries.append({"kind": "crossing", "expr": expr(item[0])})
    return {"id": fid, "entries": entries}


def circle(cid, omega, half_twist="none", strands="parallel", slots=None):
    c = {"id": cid, "omega": omega, "half_twist": half_twist, "strands": strands}
    if slots:
        c["slots"] = slots
    return c


def component(cid, edges, k=0, shear_sign=1):
    return {"id": cid, "edges": [[v, s] for v, s in edges], "half_twist_passes": k, "shear_sign": shear_sign}


def diagram(variables, faces, circles=(), components=(), generic=False):
    return {"generic": generic, "variables": list(variables), "faces": list(faces),
            "circles": list(circles), "components": list(components)}


# Borromean rings FAL. Both circles are labeled so that the edge labels come
# out as u = -w; the projection-plane component is walked against its edges.
BORROMEAN_FACES = [
    face("aleph", ["u1", ("w2", -1), "1", ("w2", -1), "u2", ("1/4", -1)]),
    face("beth", ["u3", ("w2", -1), "1", ("w2", -1), "u4", ("1/4", -1)]),
    face("gimel", ["u3", ("w1", -1), "1", ("w1", -1), "u2", ("1/4", -1)]),
]
BORROMEAN_VARS = ["w1", "w2", "u1", "u2", "u3", "u4"]
BORROMEAN_COMPONENT = [("u1", -1), ("u2", -1), ("u3", -1), ("u4", -1)]


def borromean():
    return diagram(BORROMEAN_VARS, BORROMEAN_FACES,
                   [circle("c1", "w1"), circle("c2", "w2")],
                   [component("k", BORROMEAN_COMPONENT)])


def borromean_ht():
    return diagram(BORROMEAN_VARS, BORROMEAN_FACES,
                   [circle("p", "w2"), circle("q", "w1", half_twist="left")],
                   [component("k", BORROMEAN_COMPONENT)])


# Hamantash link, a generic alternating diagram. Components are the three
# link components; each longitude is the sum of the two edge labels it runs
# along.
def hamantash():
    faces = [
        face("aleph", ["u1", ("w1", 1), "1", ("w1", 1), "u2", ("w3", 1), "1", ("w3", 1)]),
        face("beth", ["u4", ("w1", 1), "1", ("w1", 1), "u3", ("w2", 1), "1", ("w2", 1)]),
        face("gimel", ["1", ("w3", 1), "u6", ("w2", 1), "1", ("w2", 1), "u5", ("w3", 1)]),
        face("daleth", ["-1+u2", ("w1", -1), "-1+u4", ("w2", -1), "-1+u6", ("w3", -1)]),
    ]
    return diagram(["w1", "w2", "w3", "u1", "u2", "u3", "u4", "u5", "u6"], faces, [],
                   [component("red", [("u1", 1), ("u2", 1)]),
                    component("blue", [("u3", 1), ("u4", 1)]),
                    component("green", [("u5", 1), ("u6", 1)])],
                   generic=True)


# FAL of the figure-eight knot. Circle 3 is labeled with the opposite
# orientation (-w3 on its crossings) so that every w agrees at the solution.
def fal41():
    faces = [
        face("aleph", ["1", ("w1", -1), "u2", ("w2", -1), "1", ("w2", -1), "u1", ("w1", -1)]),
        face("beth", ["u5", ("1/4", -1), "u3", ("w1", -1), "1", ("w1", -1), "u4", ("1/4", -1)]),
        face("gimel", ["u6", ("1/4", -1), "u8", ("1/4", -1), "u7", ("w2", -1), "1", ("w2", -1)]),
        face("daleth", ["u4", ("1/4", -1), "u1", ("1/4", -1), "u7", ("-w3", 1), "1", ("-w3", 1)]),
        face("he", ["1", ("w4", -1), "u5", ("-w3", 1), "1", ("-w3", 1), "u8", ("w4", -1)]),
    ]
    return diagram(["w1", "w2", "w3", "w4"] + [f"u{k}" for k in range(1, 9)], faces,
                   [circle(f"c{k}", f"w{k}") for k in range(1, 5)])


# 3-pretzel FAL. Circles 2 and 3 carry -w on the crossings of the regions
# between them (orientation flip), which makes all three w equal.
PRETZEL_FACES = [
    face("aleph", ["u3", ("1/4", -1), "u1", ("1/4", -1), "u2", ("1/4", -1)]),
    face("beth", ["u6", ("1/4", -1), "u4", ("1/4", -1), "u5", ("1/4", -1)]),
    face("gimel", ["1", ("w1", 1), "u4", ("-w2", -1), "1", ("-w2", -1), "u2", ("w1", 1)]),
    face("daleth", ["1", ("-w2", -1), "u5", ("-w3", -1), "1", ("-w3", -1), "u3", ("-w2", -1)]),
]
PRETZEL_VARS = ["w1", "w2", "w3"] + [f"u{k}" for k in range(1, 7)]


def pretzel3():
    return diagram(PRETZEL_VARS, PRETZEL_FACES,
                   [circle("p", "w1"), circle("q", "w2"), circle("r", "w3")],
                   [component("sy", [("u1", 1), ("u6", 1)]),
                    component("tv", [("u2", 1), ("u4", 1)]),
                    component("ux", [("u3", 1), ("u5", 1)])])


def pretzel3_ht():
    return diagram(PRETZEL_VARS, PRETZEL_FACES,
                   [circle("p", "w1", half_twist="left"), circle("n", "w2"), circle("m", "w3")],
                   [component("rstq", [("u2", 1), ("u6", 1), ("u1", 1), ("u4", 1)], k=4),
                    component("uv", [("u3", 1), ("u5", 1)])])


# A single thrice-punctured sphere: the two triangular halves of its hexagon,
# with raw labels tagged into circle slots for apply_fal_labeling.
def tps(parallel):
    if parallel:
        a = ["u", ("wa", 1), "h1", ("s1", -1), "h2", ("wc", 1)]
        b = ["u", ("wb", 1), "h3", ("s2", -1), "h4", ("wd", 1)]
    else:
        a = ["u", ("wa", 1), "h1", ("s1", 1), "h2", ("wc", -1)]
        b = ["u", ("wb", 1), "h3", ("s2", 1), "h4", ("wd", -1)]
    fa = face("aleph_a", a)
    fb = face("aleph_b", b)
    # The halves walk the shared edge u in opposite senses; reversing every
    # edge of one face leaves its shape-parameter signs unchanged.
    flip = {"with": "against", "against": "with"}
    for e in fa["entries"]:
        if e["kind"] == "edge":
            e["direction"] = flip[e["direction"]]
    slots = {"bigon_a": ["wa", "wb"], "bigon_b": ["wc", "wd"], "sphere": ["s1", "s2"],
             "meridians": [], "half_edges": ["h1", "h2", "h3", "h4"]}
    return diagram(["wa", "wb", "wc", "wd", "s1", "s2", "h1", "h2", "h3", "h4", "u"], [fa, fb],
                   [circle("c", "wa", strands="parallel" if parallel else "antiparallel", slots=slots)])


DIAGRAMS = {
    "borromean.json": borromean,
    "borromean-ht.json": borromean_ht,
    "hamantash.json": hamantash,
    "fal41.json": fal41,
    "3-pretzel.json": pretzel3,
    "3-pretzel-ht.json": pretzel3_ht,
    "tps_parallel.json": lambda: tps(True),
    "tps_antiparallel.json": lambda: tps(False),
}

REFERENCES = {
    # Numerical cusp shape of each Hamantash component.
    "hamantash_ref.json": {c: [1.5, 1.32287565553] for c in ("red", "blue", "green")},
}


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    (out / "diagrams").mkdir(parents=True, exist_ok=True)
    (out / "references").mkdir(parents=True, exist_ok=True)
    for name, make in DIAGRAMS.items():
        (out / "diagrams" / name).write_text(json.dumps(make(), indent=2) + "\n")
    for name, ref in REFERENCES.items():
        (out / "references" / name).write_text(json.dumps(ref, indent=2) + "\n")


if __name__ == "__main__":
    main()
