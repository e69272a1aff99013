#!/usr/bin/env python3
"""Generate data/catalog.json and the frozen oracle tables under tests/data.

Weighted projective records are given by degrees and coefficients; the local
incidence data (which singular points each general member passes through, in
which coordinate direction, with which contact order) is derived here from the
monomials of the general member and then frozen into the JSON.  Toric records
are reconstructed from their singularity lists with the fan calculus in
toric.py.  Graph records are transcribed from the dual graphs.

Usage: gen_catalog.py [--out data/catalog.json] [--tests tests/data]
"""
import argparse
import json
import os
import sys
from fractions import Fraction as F
from math import gcd

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
import oracle  # noqa: E402
import toric  # noqa: E402

SCHEMA_VERSION = 1
SIX7 = F(6, 7)


def fs(x):
    x = F(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def std(k):
    return F(k - 1, k)


# ====================================================================== WPS

def local_exponents(a, i, d, drop=()):
    j, k = [x for x in range(3) if x != i]
    out = set()
    for p in range(d + 1):
        for r in range(d + 1):
            s = p * a[j] + r * a[k]
            if s <= d and (d - s) % a[i] == 0 and (p, r) not in drop:
                out.add((p, r))
    return j, k, out


def local_shape(a, i, d, drop=()):
    """Shape of the general member of O(d) at the vertex P_i, or None."""
    j, k, S = local_exponents(a, i, d, drop)
    if (0, 0) in S:
        return None
    lin_j, lin_k = (1, 0) in S, (0, 1) in S
    pure_k = min((r for p, r in S if p == 0), default=None)
    pure_j = min((p for p, r in S if r == 0), default=None)
    if lin_j and lin_k:
        return {"kind": "line", "j": j, "k": k, "contact": {j: pure_k, k: pure_j}}
    if lin_j:
        return {"kind": "axis", "var": j, "contact": pure_k, "j": j, "k": k}
    if lin_k:
        return {"kind": "axis", "var": k, "contact": pure_j, "j": j, "k": k}
    if (1, 1) in S:
        return {"kind": "node", "j": j, "k": k}
    p0, r0 = pure_j, pure_k
    if p0 is None or r0 is None:
        raise ValueError("unsupported singular branch at P%d" % (i + 1))
    for p, r in S:
        if F(p, p0) + F(r, r0) < 1:
            raise ValueError("degenerate Newton polygon at P%d" % (i + 1))
    return {"kind": "cusp", "pure": {j: p0, k: r0}, "p": p0, "r": r0, "j": j, "k": k}


def q_of(a, n, xvar, yvar):
    wx, wy = a[xvar] % n, a[yvar] % n
    return (wx * pow(wy, -1, n)) % n


def wps_points(a, curves, overrides):
    """Germs at the torus-fixed points and at smooth intersection points.

    curves: list of (name, degree).  overrides: dict with optional keys
      drop: {(curve, point index): [(p, r), ...]}  monomials removed
      contact: {(curve1, curve2, point index): m}  forced tangency at a vertex
      smooth_tangent: [(curve1, curve2, order, count)]
    """
    points = []
    local_int = {}
    for i in range(3):
        n = a[i]
        if n == 1:
            continue
        passing = []
        for name, d in curves:
            drop = overrides.get("drop", {}).get((name, i), ())
            sh = local_shape(a, i, d, drop)
            if sh is not None:
                passing.append((name, sh))
        pid = "P%d" % (i + 1)
        j, k = [x for x in range(3) if x != i]
        if not passing:
            points.append({"id": pid, "n": n, "q": q_of(a, n, j, k), "count": 1, "branches": []})
            continue
        if len(passing) > 2:
            raise ValueError("three boundary curves through %s" % pid)
        if len(passing) == 2 and passing[0][1]["kind"] == "cusp" and passing[1][1]["kind"] in ("line", "axis"):
            passing.reverse()
        first, sh1 = passing[0]
        branches = []
        if sh1["kind"] == "node":
            if len(passing) > 1:
                raise ValueError("node meets another curve at %s" % pid)
            xv, yv = j, k
            branches = [{"curve": first, "shape": "axis1"}, {"curve": first, "shape": "axis2"}]
        elif sh1["kind"] == "cusp":
            if len(passing) > 1:
                raise ValueError("cusp meets another curve at %s" % pid)
            xv, yv = j, k
            branches = [{"curve": first, "shape": "newton", "p": sh1["p"], "r": sh1["r"]}]
        else:
            if sh1["kind"] == "axis":
                xv = sh1["var"]
            else:
                xv = j
                if len(passing) == 2 and passing[1][1]["kind"] == "axis" and passing[1][1]["var"] == j:
                    xv = k
            yv = j + k - xv
            branches = [{"curve": first, "shape": "axis1"}]
            if len(passing) == 2:
                second, sh2 = passing[1]
                forced = overrides.get("contact", {}).get((first, second, i))
                if sh2["kind"] == "node":
                    raise ValueError("node meets another curve at %s" % pid)
                if sh2["kind"] == "cusp":
                    p, r = sh2["pure"][xv], sh2["pure"][yv]
                    branches.append({"curve": second, "shape": "newton", "p": p, "r": r})
                    local_int[(first, second)] = local_int.get((first, second), F(0)) + F(r, n)
                    points.append({"id": pid, "n": n, "q": q_of(a, n, xv, yv), "count": 1, "branches": branches})
                    continue
                if forced:
                    m = forced
                elif sh2["kind"] == "line" or sh2["var"] != xv:
                    m = None
                else:
                    c1 = sh1["contact"] if sh1["kind"] == "axis" else sh1["contact"][xv]
                    cs = [c for c in (c1, sh2["contact"]) if c is not None]
                    if not cs:
                        raise ValueError("two curves share a coordinate axis at %s" % pid)
                    m = min(cs)
                if m is None:
                    branches.append({"curve": second, "shape": "axis2"})
                    local_int[(first, second)] = local_int.get((first, second), F(0)) + F(1, n)
                else:
                    if (a[xv] - m * a[yv]) % n:
                        raise ValueError("tangency not equivariant at %s" % pid)
                    branches.append({"curve": second, "shape": "newton", "p": 1, "r": m})
                    local_int[(first, second)] = local_int.get((first, second), F(0)) + F(m, n)
        points.append({"id": pid, "n": n, "q": q_of(a, n, xv, yv), "count": 1, "branches": branches})
    # smooth intersection points
    tangents = overrides.get("smooth_tangent", [])
    names = [c[0] for c in curves]
    degs = dict(curves)
    for x in range(len(names)):
        for y in range(x + 1, len(names)):
            c1, c2 = names[x], names[y]
            total = F(degs[c1] * degs[c2], a[0] * a[1] * a[2])
            rest = total - local_int.get((c1, c2), 0) - local_int.get((c2, c1), 0)
            for t1, t2, order, count in tangents:
                if {t1, t2} == {c1, c2}:
                    rest -= order * count
                    points.append({"id": "%s.%s~%d" % (t1, t2, order), "n": 1, "q": 0, "count": count,
                                   "branches": [{"curve": t1, "shape": "axis1"},
                                                {"curve": t2, "shape": "newton", "p": 1, "r": order}]})
            if rest < 0 or rest.denominator != 1:
                raise ValueError("intersection %s.%s inconsistent: %s" % (c1, c2, rest))
            if rest:
                points.append({"id": "%s.%s" % (c1, c2), "n": 1, "q": 0, "count": int(rest),
                               "branches": [{"curve": c1, "shape": "axis1"},
                                            {"curve": c2, "shape": "axis2"}]})
    return points


RECORDS = []


def wps(case, marker, weights, C, B, high, params=None, variant="", open_=False,
        overrides=None, row="", endpoint=None, diagram=None, fixed=False):
    """C: degree of C (or None for a fixed D = 6/7 X_7 + ...); B: [(coef, deg)]."""
    a = list(weights)
    curves = [("C", C)] + [("B%d" % (i + 1), d) for i, (_, d) in enumerate(B)]
    boundary = [{"curve": "C", "degree": C, "coeff": "t"}]
    for i, (c, d) in enumerate(B):
        boundary.append({"curve": "B%d" % (i + 1), "degree": d, "coeff": fs(c)})
    pts = wps_points(a, curves, overrides or {})
    rec = base_record(case, marker, params, variant, row)
    rec["surface"] = {"type": "wps", "weights": a}
    rec["boundary"] = boundary
    rec["points"] = pts
    finish(rec, high, open_, endpoint, diagram, fixed)


def base_record(case, marker, params, variant, row):
    fam = int(case.split("-")[0])
    rid = "%s(%s)" % (case, marker)
    key = case
    tags = ["%s=%s" % kv for kv in (params or {}).items()]
    if variant:
        tags.append(variant)
    if tags:
        key += "[" + ",".join(tags) + "]"
    return {"key": key, "id": rid, "case": case, "family": fam, "marker": marker,
            "params": dict(params or {}), "variant": variant, "row": row}


def finish(rec, high, open_, endpoint, diagram, fixed):
    high = SIX7 if fixed else F(high)
    rec["interval"] = {"low": fs(SIX7), "high": fs(high), "high_open": bool(open_)}
    if endpoint:
        rec["endpoint"] = {"t": fs(endpoint[0]), "delta": endpoint[1]}
    if diagram:
        rec["diagram"] = diagram
    RECORDS.append(rec)


# ---------------------------------------------------------------- diagrams

def aff(c, s):
    """Affine label c + s*b as strings."""
    return {"c": fs(c), "s": fs(s)}


TOWER_A1 = {"param": "b", "vertices": [
    {"self": -1, "label": aff(13, -15)}, {"self": -2, "label": aff(8, -9)},
    {"self": -3, "label": aff(3, -3)}],
    "edges": [[0, 1], [1, 2]], "boundary": [{"vertex": 0, "mult": aff(6, -6)}]}
TOWER_A2 = {"param": "b", "vertices": [
    {"self": -1, "label": aff(19, -22)}, {"self": -2, "label": aff(14, -16)},
    {"self": -2, "label": aff(9, -10)}, {"self": -3, "label": aff(4, -4)},
    {"self": -2, "label": aff(2, -2)}],
    "edges": [[0, 1], [1, 2], [2, 3], [3, 4]], "boundary": [{"vertex": 0, "mult": aff(6, -6)}]}
PIC_51 = {"param": "b", "vertices": [
    {"self": -2, "label": aff(2, -2)}, {"self": -2, "label": aff(4, -4)},
    {"self": -6, "label": aff(6, -6)}, {"self": -2, "label": aff(3, -3)},
    {"self": -1, "label": aff(25, -29)}, {"self": -2, "label": aff(20, -23)},
    {"self": -2, "label": aff(15, -17)}, {"self": -3, "label": aff(10, -11)},
    {"self": -1, "label": aff(14, -16)}],
    "edges": [[0, 1], [1, 2], [2, 3], [2, 4], [4, 5], [5, 6], [6, 7], [7, 8]],
    "boundary": [{"vertex": 8, "mult": aff(5, -5)}]}
PIC_52 = {"param": "b", "vertices": [
    {"self": -1, "label": aff(6, -7)}, {"self": -3, "label": aff(3, -3)},
    {"self": -2, "label": aff(2, -2)}, {"self": -2, "label": aff(1, -1)}],
    "edges": [[0, 1], [1, 2], [2, 3]], "boundary": [{"vertex": 0, "mult": aff(4, -4)}]}
PIC_53 = {"param": "b", "vertices": [
    {"self": -2, "label": aff(2, -2)}, {"self": -2, "label": aff(4, -4)},
    {"self": -2, "label": aff(6, -6)}, {"self": -2, "label": aff(3, -3)},
    {"self": -3, "label": aff(5, -5)}, {"self": -1, "label": aff(8, -9)}],
    "edges": [[0, 1], [1, 2], [2, 3], [2, 4], [4, 5]],
    "boundary": [{"vertex": 5, "mult": aff(4, -4)}]}
PIC_54 = {"param": "b", "vertices": [
    {"self": -2, "label": aff(F(2, 7), 0)}, {"self": -3, "label": aff(F(4, 7), 0)},
    {"self": -2, "label": aff(F(3, 7), 0)}, {"self": -2, "label": aff(F(2, 7), 0)},
    {"self": -2, "label": aff(F(1, 7), 0)}, {"self": -1, "label": aff(0, 0)}],
    "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [1, 5]],
    "boundary": [{"vertex": 5, "mult": aff(F(3, 7), 0)}]}


# ---------------------------------------------------------------- graph helper

def graph(case, marker, vertices, edges, handles, meets, boundary, high, params=None,
          variant="", open_=False, row="", diagram=None, fixed=False):
    rec = base_record(case, marker, params, variant, row)
    rec["surface"] = {
        "type": "graph",
        "vertices": [{"id": v, "self": s} for v, s in vertices],
        "edges": [list(e) for e in edges],
        "handles": [{"name": n, "self": s, "rational": r} for n, s, r in handles],
        "meets": [{"a": a_, "b": b_, "count": c} for a_, b_, c in meets],
    }
    rec["boundary"] = [{"curve": n, "coeff": c if c == "t" else fs(c)} for n, c in boundary]
    rec["points"] = []
    finish(rec, high, open_, None, diagram, fixed)


def chain(prefix, selfs):
    vs = [("%s%d" % (prefix, i + 1), s) for i, s in enumerate(selfs)]
    es = [(vs[i][0], vs[i + 1][0]) for i in range(len(vs) - 1)]
    return vs, es


# ---------------------------------------------------------------- toric helper

TORIC_TYPES = {
    43: [(2, 1), (4, 1), (14, 9)],
    44: [(3, 1), (3, 1), (15, 11)],
    45: [(3, 1), (3, 2), (9, 4)],
    46: [(4, 1), (2, 1), (6, 5)],
    47: [(2, 1), (2, 1), (4, 3)],
    48: [(2, 1), (2, 1), (8, 5)],
    49: [(2, 1), (6, 5), (16, 11)],
    50: [(4, 1), (4, 3), (16, 13)],
}

# orbit through points (1,2) is ray index 2, (2,3) is ray 0, (1,3) is ray 1
ORBIT_12, ORBIT_23, ORBIT_13 = 2, 0, 1


def toric_graph(fan, C, B):
    """C, B: ("orbit", ray) or ("general", coefficient vector on the 3 rays)."""
    m = fan.m_refined()
    exc = [i for i, (_, o) in enumerate(fan.refined) if o is None]
    vname = {i: "E%d" % (n + 1) for n, i in enumerate(exc)}
    vertices = [(vname[i], fan.selfint[i]) for i in exc]
    edges = []
    for i in range(m):
        j = (i + 1) % m
        if i in vname and j in vname:
            edges.append((vname[i], vname[j]))
    handles, meets, classes = [], [], {}
    used_orbits = {}
    for name, spec in (("C", C), ("B1", B)):
        if spec[0] == "orbit":
            used_orbits[spec[1]] = name
    for r in range(3):
        name = used_orbits.get(r, "O%d" % (r + 1))
        idx = fan.orbit_index(r)
        classes[name] = fan.unit(idx)
        handles.append((name, fan.selfint[idx], True))
    orbit_names = [h[0] for h in handles]
    flags = []
    for name, spec in (("C", C), ("B1", B)):
        if spec[0] != "general":
            continue
        h, bpf, composite, pts = fan.moving_part(spec[1])
        if not bpf:
            flags.append("%s has base points on the resolution" % name)
        if composite:
            flags.append("%s is composed with a pencil" % name)
        classes[name] = h
        handles.append((name, fan.dot_X(h, h), False))
    # meets between orbit handles and vertices come from fan adjacency
    for r in range(3):
        idx = fan.orbit_index(r)
        for nb in ((idx - 1) % m, (idx + 1) % m):
            if nb in vname:
                meets.append((orbit_names[r], vname[nb], 1))
        for r2 in range(r + 1, 3):
            idx2 = fan.orbit_index(r2)
            if (idx2 - idx) % m in (1, m - 1):
                meets.append((orbit_names[r], orbit_names[r2], 1))
    general = [n for n, s in (("C", C), ("B1", B)) if s[0] == "general"]
    for g in general:
        for i in exc:
            c = fan.dot_X(classes[g], fan.unit(i))
            if c:
                meets.append((g, vname[i], c))
        for o in orbit_names:
            c = fan.dot_X(classes[g], classes[o])
            if c:
                meets.append((g, o, c))
    if len(general) == 2:
        c = fan.dot_X(classes["C"], classes["B1"])
        if c:
            meets.append(("C", "B1", c))
    return vertices, edges, handles, meets, flags


def toric_case(case, marker, fam, C, B, coeffB, high, open_=False, row=""):
    fans = toric.find_fans(TORIC_TYPES[fam])
    if not fans:
        raise ValueError("no fan for family %d" % fam)
    fan = fans[0]
    v, e, h, m, flags = toric_graph(fan, C, B)
    if flags:
        raise ValueError("family %d: %s" % (fam, "; ".join(flags)))
    graph(case, marker, v, e, h, m, [("C", "t"), ("B1", coeffB)], high, open_=open_, row=row)
    RECORDS[-1]["surface"]["fan"] = [list(x) for x in fan.u]


# ====================================================================== table

def build():
    h = F(1, 2)
    t3 = F(2, 3)

    # ---- P^2
    P2 = (1, 1, 1)
    for k in (3, 4):
        wps("1-1", "+4", P2, 2, [(h, 1), (std(k), 1)], F(3, 4) + F(1, 2 * k), {"k": k},
            row="P2: D = tX_2 + 1/2 X_1 + (k-1)/k X_1, k=3,4; t in [6/7, 3/4+1/(2k)]")
    for k in (5, 6):
        wps("1-2", "+1", P2, 1, [(h, 1), (F(3, 4), 1), (std(k), 1)], F(3, 4) + F(1, k), {"k": k},
            row="P2: D = tX_1 + 1/2 X_1 + 3/4 X_1 + (k-1)/k X_1, k=5,6; t in [6/7, 3/4+1/k]")
    wps("1-3", "+1", P2, 1, [(h, 1), (F(4, 5), 1), (F(4, 5), 1)], F(9, 10),
        row="P2: D = tX_1 + 1/2 X_1 + 4/5 X_1 + 4/5 X_1; t in [6/7, 9/10]")
    row14 = "P2: D = tX_1 + 2/3 X_2 + (k-1)/k X_1, k=4,5; t in [6/7, 2/3+1/k]"
    for k in (4, 5):
        wps("1-4", "+1", P2, 1, [(t3, 2), (std(k), 1)], t3 + F(1, k), {"k": k}, row=row14)
        wps("1-4", "+1", P2, 1, [(t3, 1), (t3, 1), (std(k), 1)], t3 + F(1, k), {"k": k},
            variant="X1+X1", row=row14 + "; X_2 replaced by X_1 + X_1")
    wps("1-4", "+1", P2, 1, [(t3, 2), (std(4), 1)], t3 + F(1, 4), {"k": 4}, variant="tangent",
        overrides={"smooth_tangent": [("B1", "B2", 2, 1)]},
        row=row14 + "; line tangent to the conic")

    # ---- P(1,1,2)
    W = (1, 1, 2)
    wps("2-1", "ell", W, 4, [(h, 1)], F(7, 8), row="P(1,1,2): D = tX_4 + 1/2 X_1; t in [6/7, 7/8]")
    wps("2-1", "ell", W, 4, [(h, 1)], F(7, 8), variant="tangent",
        overrides={"smooth_tangent": [("C", "B1", 2, 1)]},
        row="P(1,1,2): D = tX_4 + 1/2 X_1; t in [6/7, 7/8]; B_1 tangent to C")
    wps("2-2", "+4", W, 3, [(t3, 2)], F(8, 9), row="P(1,1,2): D = tX_3 + 2/3 X_2; t in [6/7, 8/9]")
    wps("2-3", "+2", W, 2, [(F(5, 6), 2), (h, 1)], F(11, 12),
        row="P(1,1,2): D = tX_2 + 5/6 X_2 + 1/2 X_1; t in [6/7, 11/12]")
    for k in (2, 3):
        wps("2-4", "+2", W, 2, [(F(4, 5), 2), (std(k), 1)], F(6, 5) - F(k - 1, 2 * k), {"k": k},
            row="P(1,1,2): D = tX_2 + 4/5 X_2 + (k-1)/k X_1, k=2,3; t in [6/7, 6/5-(k-1)/(2k)]")
    for k in (3, 4):
        wps("2-5", "+2", W, 2, [(F(3, 4), 2), (std(k), 1)], F(5, 4) - F(k - 1, 2 * k), {"k": k},
            row="P(1,1,2): D = tX_2 + 3/4 X_2 + (k-1)/k X_1, k=3,4; t in [6/7, 5/4-(k-1)/(2k)]")
    for k in (4, 5, 6):
        wps("2-6", "+2", W, 2, [(t3, 2), (std(k), 1)], F(4, 3) - F(k - 1, 2 * k), {"k": k},
            row="P(1,1,2): D = tX_2 + 2/3 X_2 + (k-1)/k X_1, k=4,5,6; t in [6/7, 4/3-(k-1)/(2k)]")
    row27 = "P(1,1,2): D = tX_2 + 1/2 X_3 + (k-1)/k X_1, k=3,4; t in [6/7, 5/4-(k-1)/(2k)]"
    for k in (3, 4):
        wps("2-7", "+2", W, 2, [(h, 3), (std(k), 1)], F(5, 4) - F(k - 1, 2 * k), {"k": k}, row=row27)
        wps("2-7", "+2", W, 2, [(h, 2), (h, 1), (std(k), 1)], F(5, 4) - F(k - 1, 2 * k), {"k": k},
            variant="X2+X1", row=row27 + "; X_3 replaced by X_2 + X_1")
    for k in (4, 5):
        wps("2-8", "0", W, 1, [(h, 2), (t3, 2), (std(k), 1)], t3 + F(1, k), {"k": k},
            row="P(1,1,2): D = tX_1 + 1/2 X_2 + 2/3 X_2 + (k-1)/k X_1, k=4,5; t in [6/7, 2/3+1/k]")
    row29 = "P(1,1,2): D = tX_1 + 1/2 X_3 + 4/5 X_2; t in [6/7, 9/10]"
    wps("2-9", "0", W, 1, [(h, 3), (F(4, 5), 2)], F(9, 10), row=row29)
    wps("2-9", "0", W, 1, [(h, 2), (h, 1), (F(4, 5), 2)], F(9, 10), variant="X2+X1",
        row=row29 + "; X_3 replaced by X_2 + X_1")
    wps("2-10", "0", W, 1, [(F(3, 4), 2), (F(4, 5), 2)], F(9, 10),
        row="P(1,1,2): D = tX_1 + 3/4 X_2 + 4/5 X_2; t in [6/7, 9/10]")

    # ---- P(1,1,3)
    W = (1, 1, 3)
    wps("3-1", "+5", W, 4, [(h, 3)], F(7, 8), row="P(1,1,3): D = tX_4 + 1/2 X_3; t in [6/7, 7/8]")
    for k in (4, 5):
        wps("3-2", "+3", W, 3, [(std(k), 3)], F(5, 3) - std(k), {"k": k},
            row="P(1,1,3): D = tX_3 + (k-1)/k X_3, k=4,5; t in [6/7, 5/3-(k-1)/k]")
    for k in (3, 4, 5, 6):
        wps("3-3", "+3", W, 3, [(h, 3), (std(k), 1)], F(5, 6) + F(1, 3 * k), {"k": k},
            row="P(1,1,3): D = tX_3 + 1/2 X_3 + (k-1)/k X_1, 3<=k<=6; t in [6/7, 5/6+1/(3k)]")

    # ---- P(1,1,4), P(1,1,5)
    row4 = "P(1,1,4): D = tX_4 + 1/2 X_5 or D = tX_4 + 1/2 X_4 + 1/2 X_1; t in [6/7, 7/8]"
    wps("4", "+4", (1, 1, 4), 4, [(h, 5)], F(7, 8), row=row4)
    wps("4", "+4", (1, 1, 4), 4, [(h, 4), (h, 1)], F(7, 8), variant="X4+X1", row=row4)
    wps("5", "+5", (1, 1, 5), 5, [(h, 5)], F(9, 10), row="P(1,1,5): D = tX_5 + 1/2 X_5; t in [6/7, 9/10]")

    # ---- P(1,2,3)
    W = (1, 2, 3)
    for k in range(2, 7):
        wps("6-1", "ell", W, 6, [(std(k), 1)], 1 - F(k - 1, 6 * k), {"k": k},
            row="P(1,2,3): D = tX_6 + (k-1)/k X_1, 2<=k<=6; t in [6/7, 1-(k-1)/(6k)]")
    wps("6-2", "ell", W, 7, [], SIX7, fixed=True, row="P(1,2,3): D = 6/7 X_7")
    wps("6-3", "+3", W, 5, [(h, 3)], F(9, 10), row="P(1,2,3): D = tX_5 + 1/2 X_3; t in [6/7, 9/10]")
    for k in (4, 5, 6):
        wps("6-4", "+2", W, 4, [(std(k), 3)], F(3, 4) + F(3, 4 * k), {"k": k},
            row="P(1,2,3): D = tX_4 + (k-1)/k X_3, k=4,5,6; t in [6/7, 3/4+3/(4k)]")
    row65 = "P(1,2,3): D = tX_4 + 1/2 X_5; t in [6/7, 7/8]"
    wps("6-5", "+2", W, 4, [(h, 5)], F(7, 8), row=row65)
    wps("6-5", "+2", W, 4, [(h, 3), (h, 2)], F(7, 8), variant="X3+X2",
        row=row65 + "; X_5 replaced by X_3 + X_2")
    for k1, k2 in ((2, 5), (2, 6), (3, 3), (4, 2), (5, 2)):
        wps("6-6", "+1", W, 3, [(std(k1), 3), (std(k2), 2)], F(1, 3) + F(1, k1) + F(2, 3 * k2),
            {"k1": k1, "k2": k2},
            row="P(1,2,3): D = tX_3 + (k1-1)/k1 X_3 + (k2-1)/k2 X_2; t in [6/7, 1/3+1/k1+2/(3k2)]")
    wps("6-7", "+1", W, 3, [(h, 4), (t3, 2)], F(8, 9), row="P(1,2,3): D = tX_3 + 1/2 X_4 + 2/3 X_2; t in [6/7, 8/9]")
    wps("6-8", "+1", W, 3, [(t3, 5)], F(8, 9), row="P(1,2,3): D = tX_3 + 2/3 X_5; t in [6/7, 8/9]")
    wps("6-9", "+1", W, 3, [(t3, 4), (h, 1)], F(17, 18),
        row="P(1,2,3): D = tX_3 + 2/3 X_4 + 1/2 X_1; t in [6/7, 17/18]")
    for k in (5, 6):
        wps("6-10", "+1", W, 3, [(std(k), 4)], t3 + F(4, 3 * k), {"k": k},
            row="P(1,2,3): D = tX_3 + (k-1)/k X_4, k=5,6; t in [6/7, 2/3+4/(3k)]")
    wps("6-11", "0", W, 2, [(h, 3), (t3, 4)], F(11, 12),
        row="P(1,2,3): D = tX_2 + 1/2 X_3 + 2/3 X_4; t in [6/7, 11/12]")
    wps("6-12", "0", W, 2, [(F(3, 4), 3), (h, 4)], F(7, 8),
        row="P(1,2,3): D = tX_2 + 3/4 X_3 + 1/2 X_4; t in [6/7, 7/8]")
    wps("6-13", "0", W, 2, [(t3, 3), (F(3, 4), 3)], F(7, 8),
        row="P(1,2,3): D = tX_2 + 2/3 X_3 + 3/4 X_3; t in [6/7, 7/8]")

    # ---- P(1,2,5)
    W = (1, 2, 5)
    wps("7-1", "+3", W, 6, [(h, 5)], F(11, 12), row="P(1,2,5): D = tX_6 + 1/2 X_5; t in [6/7, 11/12]")
    wps("7-2", "+2", W, 5, [(t3, 5)], F(14, 15), row="P(1,2,5): D = tX_5 + 2/3 X_5; t in [6/7, 14/15]")
    row73 = "P(1,2,5): D = tX_5 + 1/2 X_7; t in [6/7, 9/10]"
    wps("7-3", "+2", W, 5, [(h, 7)], F(9, 10), row=row73)
    wps("7-3", "+2", W, 5, [(h, 5), (h, 2)], F(9, 10), variant="X5+X2",
        row=row73 + "; X_7 replaced by X_5 + X_2")
    wps("7-4", "+2", W, 5, [(h, 6), (h, 1)], F(9, 10),
        row="P(1,2,5): D = tX_5 + 1/2 X_6 + 1/2 X_1; t in [6/7, 9/10]")
    wps("7-5", "0", W, 2, [(h, 5), (F(3, 4), 5)], F(7, 8),
        row="P(1,2,5): D = tX_2 + 1/2 X_5 + 3/4 X_5; t in [6/7, 7/8]")

    # ---- P(1,3,4)
    W = (1, 3, 4)
    wps("8-1", "ell", W, 9, [], F(8, 9), diagram=TOWER_A1, row="P(1,3,4): D = tX_9; t in [6/7, 8/9]")
    wps("8-2", "+3", W, 7, [(h, 4)], SIX7, fixed=True, row="P(1,3,4): D = 6/7 X_7 + 1/2 X_4")
    row83 = ("P(1,3,4): D = tX_4 + (k1-1)/k1 X_4 + (k2-1)/k2 X_3; t in [6/7, 3/4+3/(4k2)] if k1=2, "
             "t in [6/7, 19/21) if k1=3")
    for k1, k2 in ((2, 4), (2, 5), (2, 6)):
        wps("8-3", "+1", W, 4, [(std(k1), 4), (std(k2), 3)], F(3, 4) + F(3, 4 * k2),
            {"k1": k1, "k2": k2}, row=row83)
    wps("8-3", "+1", W, 4, [(std(3), 4), (std(2), 3)], F(19, 21), {"k1": 3, "k2": 2},
        open_=True, row=row83)
    row84 = "P(1,3,4): D = tX_4 + 1/2 X_9; t in [6/7, 7/8]"
    wps("8-4", "+1", W, 4, [(h, 9)], F(7, 8), row=row84)
    wps("8-4", "+1", W, 4, [(h, 6), (h, 3)], F(7, 8), variant="X6+X3",
        row=row84 + "; X_9 replaced by X_6 + X_3")
    wps("8-5", "+1", W, 4, [(F(3, 4), 6)], F(7, 8), row="P(1,3,4): D = tX_4 + 3/4 X_6; t in [6/7, 7/8]")
    for k in (5, 6):
        wps("8-6", "0", W, 3, [(h, 4), (std(k), 4)], t3 + F(4, 3 * k), {"k": k},
            row="P(1,3,4): D = tX_3 + 1/2 X_4 + (k-1)/k X_4, k=5,6; t in [6/7, 2/3+4/(3k)]")
    row87 = "P(1,3,4): D = tX_3 + 2/3 X_8; t in [6/7, 8/9]"
    wps("8-7", "0", W, 3, [(t3, 8)], F(8, 9), row=row87)
    wps("8-7", "0", W, 3, [(t3, 4), (t3, 4)], F(8, 9), variant="X4+X4",
        row=row87 + "; X_8 replaced by X_4 + X_4")

    # ---- P(1,3,5)
    W = (1, 3, 5)
    wps("9-1", "ell", W, 10, [], F(9, 10), diagram=TOWER_A2, row="P(1,3,5): D = tX_10; t in [6/7, 9/10]")
    for k in (3, 4):
        wps("9-2", "+2", W, 6, [(std(k), 5)], t3 + F(5, 6 * k), {"k": k},
            row="P(1,3,5): D = tX_6 + (k-1)/k X_5, k=3,4; t in [6/7, 2/3+5/(6k)]")
    row93 = "P(1,3,5): D = tX_5 + 1/2 X_9; t in [6/7, 9/10]"
    wps("9-3", "+1", W, 5, [(h, 9)], F(9, 10), row=row93)
    wps("9-3", "+1", W, 5, [(h, 9)], F(9, 10), variant="no-x1x2x3",
        overrides={"drop": {("B1", 2): [(1, 1)]}},
        row=row93 + "; monomial x1x2x3 absent")
    wps("9-3", "+1", W, 5, [(h, 6), (h, 3)], F(9, 10), variant="X6+X3",
        row=row93 + "; X_9 replaced by X_6 + X_3")
    wps("9-4", "+1", W, 5, [(F(3, 4), 6)], F(9, 10), row="P(1,3,5): D = tX_5 + 3/4 X_6; t in [6/7, 9/10]")
    wps("9-5", "0", W, 3, [(t3, 5), (h, 6)], F(8, 9),
        row="P(1,3,5): D = tX_3 + 2/3 X_5 + 1/2 X_6; t in [6/7, 8/9]")
    wps("9-6", "0", W, 3, [(h, 5), (F(3, 4), 5)], F(11, 12),
        row="P(1,3,5): D = tX_3 + 1/2 X_5 + 3/4 X_5; t in [6/7, 11/12]")

    # ---- P(1,2,7)
    W = (1, 2, 7)
    wps("10-1", "+3", W, 7, [(h, 8)], SIX7, fixed=True, row="P(1,2,7): D = 6/7 X_7 + 1/2 X_8")
    wps("10-2", "+3", W, 7, [(h, 7)], F(13, 14), row="P(1,2,7): D = tX_7 + 1/2 X_7; t in [6/7, 13/14]")
    row103 = "P(1,2,7): D = tX_2 + 1/2 X_7 + 2/3 X_7; t in [6/7, 11/12]"
    wps("10-3", "0", W, 2, [(h, 7), (t3, 7)], F(11, 12), row=row103)
    wps("10-3", "0", W, 2, [(h, 7), (t3, 7)], F(11, 12), variant="contact-3/2",
        overrides={"contact": {("B1", "B2", 1): 3}},
        row=row103 + "; (B_1.B_2) at (0:1:0) equal to 3/2")

    # ---- P(1,4,5)
    W = (1, 4, 5)
    row111 = ("P(1,4,5): D = tX_5 + 1/2 X_5 + (k-1)/k X_4, k=3,4,5; t in [6/7, 19/21) if k=3, "
              "t in [6/7, 7/10+4/(5k)] if k>=4")
    wps("11-1", "+1", W, 5, [(h, 5), (std(3), 4)], F(19, 21), {"k": 3}, open_=True, row=row111)
    for k in (4, 5):
        wps("11-1", "+1", W, 5, [(h, 5), (std(k), 4)], F(7, 10) + F(4, 5 * k), {"k": k}, row=row111)
    wps("11-2", "+1", W, 5, [(t3, 8)], F(14, 15), row="P(1,4,5): D = tX_5 + 2/3 X_8; t in [6/7, 14/15]")
    for k in (4, 5):
        wps("11-3", "0", W, 4, [(h, 5), (std(k), 5)], F(5, 8) + F(5, 4 * k), {"k": k},
            row="P(1,4,5): D = tX_4 + 1/2 X_5 + (k-1)/k X_5, k=4,5; t in [6/7, 5/8+5/(4k)]")

    # ---- P(2,3,5)
    W = (2, 3, 5)
    wps("12-1", "+1", W, 8, [(h, 5)], F(15, 16), row="P(2,3,5): D = tX_8 + 1/2 X_5; t in [6/7, 15/16]")
    row122 = "P(2,3,5): D = tX_5 + 1/2 X_11; t in [6/7, 9/10]"
    wps("12-2", "0", W, 5, [(h, 11)], F(9, 10), row=row122)
    wps("12-2", "0", W, 5, [(h, 6), (h, 5)], F(9, 10), variant="X6+X5",
        row=row122 + "; X_11 replaced by X_6 + X_5")
    wps("12-3", "0", W, 5, [(t3, 8)], F(19, 21), open_=True,
        row="P(2,3,5): D = tX_5 + 2/3 X_8; t in [6/7, 19/21)")

    # ---- P(1,3,7)
    W = (1, 3, 7)
    wps("13-1", "+2", W, 7, [(t3, 7)], F(19, 21), open_=True, endpoint=(F(19, 21), 2),
        row="P(1,3,7): D = tX_7 + 2/3 X_7; t in [6/7, 19/21); delta = 2 at t = 19/21")
    row132 = "P(1,3,7): D = 6/7 X_7 + 1/2 X_10"
    wps("13-2", "+2", W, 7, [(h, 10)], SIX7, fixed=True, row=row132)
    wps("13-2", "+2", W, 7, [(h, 7), (h, 3)], SIX7, fixed=True, variant="X7+X3",
        row=row132 + "; X_10 replaced by X_7 + X_3")
    wps("13-3", "+2", W, 7, [(h, 9)], F(13, 14), row="P(1,3,7): D = tX_7 + 1/2 X_9; t in [6/7, 13/14]")
    wps("13-4", "0", W, 3, [(h, 7), (t3, 7)], F(17, 18),
        row="P(1,3,7): D = tX_3 + 1/2 X_7 + 2/3 X_7; t in [6/7, 17/18]")

    # ---- P(1,3,8)
    W = (1, 3, 8)
    wps("14-1", "+3", W, 9, [(h, 8)], F(8, 9), row="P(1,3,8): D = tX_9 + 1/2 X_8; t in [6/7, 8/9]")
    wps("14-2", "+2", W, 8, [(h, 9)], F(15, 16), row="P(1,3,8): D = tX_8 + 1/2 X_9; t in [6/7, 15/16]")
    wps("14-3", "0", W, 3, [(h, 8), (t3, 8)], F(8, 9),
        row="P(1,3,8): D = tX_3 + 1/2 X_8 + 2/3 X_8; t in [6/7, 8/9]")

    # ---- P(1,4,7)
    W = (1, 4, 7)
    wps("15-1", "+2", W, 8, [(t3, 7)], F(11, 12), row="P(1,4,7): D = tX_8 + 2/3 X_7; t in [6/7, 11/12]")
    row152 = "P(1,4,7): D = 6/7 X_7 + 1/2 X_12"
    wps("15-2", "+1", W, 7, [(h, 12)], SIX7, fixed=True, row=row152)
    wps("15-2", "+1", W, 7, [(h, 8), (h, 4)], SIX7, fixed=True, variant="X8+X4",
        row=row152 + "; X_12 replaced by X_8 + X_4")
    for k in (3, 4):
        wps("15-3", "+1", W, 7, [(std(k), 8)], F(4, 7) + F(8, 7 * k), {"k": k},
            row="P(1,4,7): D = tX_7 + (k-1)/k X_8, k=3,4; t in [6/7, 4/7+8/(7k)]")

    wps("16", "0", (1, 5, 6), 5, [(h, 6), (F(3, 4), 6)], F(9, 10),
        row="P(1,5,6): D = tX_5 + 1/2 X_6 + 3/4 X_6; t in [6/7, 9/10]")

    # ---- P(2,3,7)
    W = (2, 3, 7)
    wps("17-1", "+1", W, 9, [(h, 7)], F(17, 18), row="P(2,3,7): D = tX_9 + 1/2 X_7; t in [6/7, 17/18]")
    wps("17-2", "0", W, 7, [(h, 12)], SIX7, fixed=True, row="P(2,3,7): D = 6/7 X_7 + 1/2 X_12")
    wps("17-3", "0", W, 7, [(t3, 9)], SIX7, fixed=True, row="P(2,3,7): D = 6/7 X_7 + 2/3 X_9")
    wps("17-4", "-1", W, 3, [(t3, 14)], F(8, 9), row="P(2,3,7): D = tX_3 + 2/3 X_14; t in [6/7, 8/9]")

    # ---- P(3,4,5)
    W = (3, 4, 5)
    wps("18-1", "+1", W, 13, [], F(12, 13), row="P(3,4,5): D = tX_13; t in [6/7, 12/13]")
    wps("18-2", "0", W, 9, [(h, 8)], F(8, 9), row="P(3,4,5): D = tX_9 + 1/2 X_8; t in [6/7, 8/9]")
    wps("18-3", "0", W, 8, [(h, 9)], F(25, 28), open_=True,
        row="P(3,4,5): D = tX_8 + 1/2 X_9; t in [6/7, 25/28)")
    wps("18-4", "0", W, 8, [(h, 10)], F(7, 8), row="P(3,4,5): D = tX_8 + 1/2 X_10; t in [6/7, 7/8]")
    wps("18-5", "-1", W, 5, [(h, 15)], F(9, 10), row="P(3,4,5): D = tX_5 + 1/2 X_15; t in [6/7, 9/10]")

    single = [
        ("19", "ell", (1, 5, 7), 15, [], F(13, 15), TOWER_A1, False),
        ("20", "+3", (1, 3, 10), 10, [(h, 10)], F(9, 10), None, False),
        ("21-1", "+2", (1, 4, 9), 9, [(h, 12)], F(8, 9), None, False),
        ("21-2", "0", (1, 4, 9), 4, [(h, 9), (t3, 9)], F(7, 8), None, False),
        ("22-1", "ell", (1, 5, 8), 16, [], F(7, 8), TOWER_A2, False),
        ("22-2", "+1", (1, 5, 8), 8, [(t3, 10)], F(11, 12), None, False),
        ("23", "0", (3, 4, 7), 7, [(h, 15)], F(13, 14), None, True),
        ("24", "+1", (1, 5, 9), 9, [(t3, 10)], F(25, 27), None, False),
        ("25-1", "+1", (3, 5, 7), 17, [], F(15, 17), None, False),
        ("25-2", "-1", (3, 5, 7), 5, [(h, 21)], F(9, 10), None, False),
        ("26", "+2", (1, 4, 11), 11, [(h, 12)], F(10, 11), None, False),
        ("27", "+1", (2, 3, 11), 11, [(h, 11)], F(21, 22), None, False),
        ("28", "0", (2, 5, 9), 9, [(h, 15)], F(17, 18), None, False),
        ("29", "+3", (1, 4, 13), 13, [(h, 13)], F(23, 26), None, False),
        ("30", "+1", (1, 6, 11), 11, [(t3, 12)], F(10, 11), None, False),
        ("31", "0", (2, 5, 11), 11, [(h, 15)], F(21, 22), None, False),
        ("32", "0", (3, 4, 11), 11, [(h, 15)], F(21, 22), None, False),
        ("34", "+2", (1, 5, 13), 13, [(h, 15)], F(23, 26), None, False),
        ("35", "ell", (1, 7, 11), 22, [], F(19, 22), TOWER_A2, False),
        ("36", "+2", (1, 5, 14), 14, [(h, 15)], F(25, 28), None, False),
        ("37", "0", (2, 5, 13), 13, [(h, 15)], F(25, 26), None, False),
        ("38", "0", (3, 4, 13), 13, [(h, 16)], F(12, 13), None, False),
        ("39", "-1", (4, 5, 11), 11, [(h, 20)], F(10, 11), None, False),
        ("40", "+2", (1, 6, 17), 17, [(h, 18)], F(15, 17), None, False),
        ("41", "0", (3, 5, 17), 17, [(h, 20)], F(15, 17), None, False),
        ("42", "+1", (3, 4, 19), 19, [(h, 19)], F(33, 38), None, False),
    ]
    for case, marker, W, C, B, high, diag, op in single:
        terms = "tX_%d" % C + "".join(" + %s X_%d" % (fs(c), d) for c, d in B)
        row = "P%s: D = %s; t in [6/7, %s%s" % (str(W).replace(" ", ""), terms, fs(high), ")" if op else "]")
        wps(case, marker, W, C, B, high, open_=op, diagram=diag, row=row)
        if case == "32":
            wps("33", "-1", (3, 7, 8), 7, [(h, 24)], SIX7, fixed=True, row="P(3,7,8): D = 6/7 X_7 + 1/2 X_24")

    # ---- toric surfaces
    O = lambda r: ("orbit", r)  # noqa: E731

    def gen(*rays):
        c = [0, 0, 0]
        for r, mult in rays:
            c[r] += mult
        return ("general", c)

    toric_case("43", "+1", 43, O(ORBIT_12), gen((ORBIT_12, 1)), h, F(13, 14), open_=True,
          row="S(A_1 + 1/4(1,1) + 1/14(9,1)): D = tC + 1/2 B_1, C ~ B_1 orbit through points 1,2; t in [6/7, 13/14)")
    toric_case("44", "+1", 44, O(ORBIT_12), gen((ORBIT_12, 1)), h, F(9, 10),
          row="S(1/3(1,1) + 1/3(1,1) + 1/15(11,1)): D = tC + 1/2 B_1, C ~ B_1 orbit through points 1,2; t in [6/7, 9/10]")
    toric_case("45", "+1", 45, gen((ORBIT_12, 1), (ORBIT_23, 1)), O(ORBIT_12), h, F(7, 8),
          row="S(1/3(1,1) + A_2 + 1/9(4,1)): D = tC + 1/2 B_1, B_1 orbit through points 1,2, C ~ B_1 + T, T orbit through points 2,3; t in [6/7, 7/8]")
    toric_case("46", "+1", 46, gen((ORBIT_12, 1), (ORBIT_23, 1)), O(ORBIT_12), h, F(9, 10),
          row="S(1/4(1,1) + A_1 + A_5): D = tC + 1/2 B_1, structure as in 45; t in [6/7, 9/10]")
    toric_case("47-1", "+1", 47, gen((ORBIT_12, 1), (ORBIT_23, 1)), O(ORBIT_12), t3, F(8, 9),
          row="S(A_1 + A_1 + A_3): D = tC + 2/3 B_1, structure as in 45; t in [6/7, 8/9]")
    toric_case("47-2", "0", 47, O(ORBIT_12), gen((ORBIT_13, 3)), F(3, 4), F(7, 8),
          row="S(A_1 + A_1 + A_3): D = tC + 3/4 B_1, C orbit through points 1,2, B_1 ~ 3T, T orbit through points 1,3; t in [6/7, 7/8]")
    toric_case("48", "+1", 48, O(ORBIT_12), gen((ORBIT_12, 1), (ORBIT_23, 1)), h, F(7, 8),
          row="S(A_1 + A_1 + 1/8(5,1)): D = tC + 1/2 B_1, C orbit through points 1,2, B_1 ~ C + T, T orbit through points 2,3; t in [6/7, 7/8]")
    toric_case("49", "0", 49, O(ORBIT_12), gen((ORBIT_13, 3)), h, F(15, 16),
          row="S(A_1 + A_5 + 1/16(11,1)): D = tC + 1/2 B_1, C orbit through points 1,2, B_1 ~ 3T, T orbit through points 1,3; t in [6/7, 15/16]")
    toric_case("50", "0", 50, O(ORBIT_12), gen((ORBIT_13, 5)), h, F(7, 8),
          row="S(1/4(1,1) + A_3 + 1/16(13,1)): D = tC + 1/2 B_1, C orbit through points 1,2, B_1 ~ 5T, T orbit through points 1,3; t in [6/7, 7/8]")

    # ---- graph surfaces
    A4, A4e = chain("V", [-2, -2, -2, -2])
    for k in (2, 3):
        graph("51-1", "ell", A4, A4e, [("C", 5, False), ("B1", -1, True)],
              [("B1", "V3", 1), ("B1", "C", 1)], [("C", "t"), ("B1", std(k))],
              1 - F(k - 1, 5 * k), {"k": k},
              row="graph 51-1: D = tC + (k-1)/k B_1, k=2,3; t in [6/7, 1-(k-1)/(5k)]")
    for k in (1, 2):
        v, e = chain("V", [-2, -2, -3, -2])
        bnd = [("C", "t")] + ([("B1", std(k))] if k > 1 else [])
        graph("51-2", "ell", v + [("W1", -2)], e, [("C", 5, False), ("B1", -1, True)],
              [("B1", "V3", 1), ("B1", "W1", 1), ("C", "W1", 1)], bnd,
              F(10, 11) - F(k - 1, 11 * k), {"k": k}, diagram=PIC_51,
              row="graph 51-2: D = tC + (k-1)/k B_1, k=1,2; t in [6/7, 10/11-(k-1)/(11k)]")
    for case, mid, tail, high in (("51-3", -4, 2, F(15, 17)), ("51-4", -5, 3, F(20, 23)),
                                  ("51-5", -6, 4, F(25, 29))):
        v, e = chain("V", [-2, -2, mid, -2])
        w, we = chain("W", [-2] * tail)
        graph(case, "ell", v + w, e + we, [("C", 5, False), ("G", -1, True)],
              [("G", "V3", 1), ("G", "W1", 1), ("C", "W%d" % tail, 1)], [("C", "t")], high,
              diagram=PIC_51, row="graph %s: D = tC; t in [6/7, %s]" % (case, fs(high)))
    v, e = chain("V", [-2, -2, -3, -2])
    graph("51-6", "ell", v + [("X1", -2), ("Y1", -3)], e + [("V3", "X1")],
          [("C", 5, False), ("G", -1, True)],
          [("G", "X1", 1), ("G", "Y1", 1), ("C", "Y1", 1)], [("C", "t")], F(7, 8), diagram=PIC_51,
          row="graph 51-6: D = tC; t in [6/7, 7/8]")

    v, e = chain("A", [-2, -2, -2])
    graph("52-1", "ell", v + [("L1", -2), ("R1", -2)], e,
          [("C", 4, False), ("B1", -1, True), ("G", -1, True)],
          [("B1", "A1", 1), ("B1", "L1", 1), ("B1", "C", 1), ("G", "C", 1), ("G", "A3", 1), ("G", "R1", 1)],
          [("C", "t"), ("B1", h)], F(7, 8), row="graph 52-1: D = tC + 1/2 B_1; t in [6/7, 7/8]")
    v, e = chain("A", [-3, -2, -2])
    u, ue = chain("U", [-2, -2])
    graph("52-2", "ell", v + u + [("W1", -2)], e + ue,
          [("C", 4, False), ("G1", -1, True), ("G2", -1, True)],
          [("G1", "A1", 1), ("G1", "U1", 1), ("C", "U1", 1), ("C", "G2", 1), ("G2", "A3", 1), ("G2", "W1", 1)],
          [("C", "t")], SIX7, fixed=True, diagram=PIC_52, row="graph 52-2: D = 6/7 C; S = P(2,3,7)")

    graph("53-1", "ell", A4 + [("X1", -2)], A4e + [("V3", "X1")],
          [("C", 4, False), ("B1", -1, True)],
          [("B1", "X1", 1), ("B1", "C", 1)], [("C", "t"), ("B1", h)], F(7, 8),
          row="graph 53-1: D = tC + 1/2 B_1; t in [6/7, 7/8]")
    graph("53-2", "ell", A4 + [("Y1", -3), ("Z1", -2)], A4e + [("V3", "Y1")],
          [("C", 4, False), ("G", -1, True)],
          [("G", "Y1", 1), ("G", "Z1", 1), ("C", "Z1", 1)], [("C", "t")], F(8, 9), diagram=PIC_53,
          row="graph 53-2: D = tC; t in [6/7, 8/9]")

    v, e = chain("V", [-2, -3, -2, -2, -2])
    graph("54", "ell", v + [("W1", -2), ("W2", -2)], e,
          [("C", 3, False), ("G1", -1, True), ("G2", -1, True)],
          [("G1", "V2", 1), ("G1", "W1", 1), ("C", "W1", 1), ("C", "G2", 1), ("G2", "V5", 1), ("G2", "W2", 1)],
          [("C", "t")], SIX7, fixed=True, diagram=PIC_54, row="graph 54: D = 6/7 C")

    b4, b4e = chain("Q", [-2, -2, -2, -2])
    c3, c3e = chain("K", [-3, -2, -2])
    graph("55", "0", [("A1", -2)] + b4 + c3, b4e + c3e,
          [("C", 0, False), ("G1", -1, True), ("G2", -1, True)],
          [("C", "A1", 1), ("C", "Q1", 1), ("C", "K1", 1), ("G1", "Q1", 1), ("G1", "K3", 1),
           ("G2", "K1", 1), ("G2", "Q4", 1)],
          [("C", "t")], F(10, 11), row="graph 55: D = tC; t in [6/7, 10/11]")

    r3, r3e = chain("R", [-2, -2, -2])
    s3, s3e = chain("S", [-2, -3, -2])
    u2, u2e = chain("U", [-2, -2])
    graph("56", "0", r3 + s3 + u2, r3e + s3e + u2e,
          [("C", 0, False), ("G1", -1, True), ("G2", -1, True), ("G3", -1, True)],
          [("C", "R1", 1), ("C", "S1", 1), ("C", "U1", 1), ("G1", "U2", 1), ("G1", "S2", 1),
           ("G2", "S1", 1), ("G2", "R3", 1), ("G3", "R1", 1), ("G3", "S3", 1)],
          [("C", "t")], SIX7, fixed=True, row="graph 56: D = 6/7 C")


# ====================================================================== checks

def family_sort_key(rec):
    parts = rec["case"].split("-")
    return (int(parts[0]), int(parts[1]) if len(parts) > 1 else 0, rec["key"])


def self_check(records):
    """Compare the independent oracle with every printed claim; returns issues."""
    issues = []
    for rec in records:
        lo = SIX7
        hi = F(rec["interval"]["high"])
        tm = oracle.t_max(rec)
        s = oracle.summary(rec)
        mk = oracle.marker_from_summary(s)
        if mk != rec["marker"]:
            issues.append("%s: marker %s computed %s" % (rec["key"], rec["marker"], mk))
        if rec["interval"]["high_open"]:
            if tm < hi:
                issues.append("%s: t_max %s below open end %s" % (rec["key"], tm, hi))
            td = oracle.first_deep_t(rec, lo, tm)
            if td != hi:
                issues.append("%s: open end %s, first delta>=2 at %s (t_max %s)" % (rec["key"], hi, td, tm))
        else:
            if tm != hi:
                issues.append("%s: t_max %s printed %s" % (rec["key"], tm, hi))
            if hi > lo:
                td = oracle.first_deep_t(rec, lo, hi)
                if td is not None and td <= hi:
                    issues.append("%s: closed end %s, first delta>=2 at %s" % (rec["key"], hi, td))
        for t in (lo, (lo + hi) / 2):
            d = oracle.delta(rec, t)
            if d != 1:
                issues.append("%s: delta(%s) = %d" % (rec["key"], t, d))
        if s["C2"] <= 0:
            issues.append("%s: C^2 = %s" % (rec["key"], s["C2"]))
    return issues


def oracle_table(records):
    out = []
    for rec in records:
        s = oracle.summary(rec)
        hi = F(rec["interval"]["high"])
        tm = oracle.t_max(rec)
        row = {"key": rec["key"], "t_max": fs(tm), "C2": fs(s["C2"]), "KC": fs(s["KC"]),
               "deg_diff": fs(s["deg_diff"]), "C2_tilde": fs(s["C2_tilde"]),
               "delta_low": oracle.delta(rec, SIX7),
               "delta_mid": oracle.delta(rec, (SIX7 + hi) / 2),
               "delta_high": oracle.delta(rec, hi) if hi < 1 else None}
        td = oracle.first_deep_t(rec, SIX7, min(tm, F(99, 100)))
        row["first_delta2"] = fs(td) if td is not None else None
        out.append(row)
    return out


def dual_encodings():
    """Graph encodings of P(1,1,2), P(1,1,3), P(1,2,3) with handles X_d."""
    out = []
    for w in ((1, 1, 2), (1, 1, 3), (1, 2, 3)):
        # rays with w0 u0 + w1 u1 + w2 u2 = 0, counterclockwise
        u1, u2 = (1, 0), (0, 1)
        u0 = (-(w[1] * u1[0] + w[2] * u2[0]) // w[0], -(w[1] * u1[1] + w[2] * u2[1]) // w[0])
        fan = toric.Fan([u0, u1, u2])
        m = fan.m_refined()
        exc = [i for i, (_, o) in enumerate(fan.refined) if o is None]
        vname = {i: "E%d" % (n + 1) for n, i in enumerate(exc)}
        handles, meets, classes = [], [], {}
        degrees = sorted({1, 2, 3, 4, 5, 6, 7, 9} | set(w))
        for d in degrees:
            if len(fan.polygon([d, 0, 0])) == 1:
                r = w.index(d)
                h = fan.unit(fan.orbit_index(r))
            else:
                h, bpf, composite, _ = fan.moving_part([d, 0, 0])
                if not bpf or composite:
                    raise ValueError("X_%d not a free irreducible system on P%s" % (d, w))
            classes["X%d" % d] = h
            handles.append({"name": "X%d" % d, "degree": d, "self": fan.dot_X(h, h)})
        names = list(classes)
        for a_ in names:
            for i in exc:
                c = fan.dot_X(classes[a_], fan.unit(i))
                if c:
                    meets.append({"a": a_, "b": vname[i], "count": c})
        for x in range(len(names)):
            for y in range(x + 1, len(names)):
                c = fan.dot_X(classes[names[x]], classes[names[y]])
                if c:
                    meets.append({"a": names[x], "b": names[y], "count": c})
        edges = [[vname[i], vname[(i + 1) % m]] for i in exc if (i + 1) % m in vname]
        out.append({"weights": list(w),
                    "graph": {"type": "graph",
                              "vertices": [{"id": vname[i], "self": fan.selfint[i]} for i in exc],
                              "edges": edges,
                              "handles": [{"name": h_["name"], "self": h_["self"], "rational": h_["name"] == "X1"}
                                          for h_ in handles],
                              "meets": meets},
                    "degrees": {h_["name"]: h_["degree"] for h_ in handles}})
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    here = os.path.dirname(os.path.abspath(__file__))
    root = os.path.dirname(os.path.dirname(here))
    ap.add_argument("--out", default=os.path.join(root, "data", "catalog.json"))
    ap.add_argument("--tests", default=os.path.join(root, "tests", "data"))
    args = ap.parse_args()

    build()
    records = sorted(RECORDS, key=family_sort_key)
    keys = [r["key"] for r in records]
    dup = {k for k in keys if keys.count(k) > 1}
    if dup:
        raise SystemExit("duplicate keys: %s" % sorted(dup))
    fams = sorted({r["family"] for r in records})
    if fams != list(range(1, 57)):
        raise SystemExit("families present: %s" % fams)

    issues = self_check(records)
    for i in issues:
        print("oracle: " + i, file=sys.stderr)

    doc = {"schema": "ldp-catalog", "version": SCHEMA_VERSION, "records": records}
    with open(args.out, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")
    os.makedirs(args.tests, exist_ok=True)
    with open(os.path.join(args.tests, "oracle_values.json"), "w") as fh:
        json.dump(oracle_table(records), fh, indent=1)
        fh.write("\n")
    with open(os.path.join(args.tests, "dual_encodings.json"), "w") as fh:
        json.dump(dual_encodings(), fh, indent=1)
        fh.write("\n")
    print("%d records, %d families, %d oracle issues" % (len(records), len(fams), len(issues)))


if __name__ == "__main__":
    main()
