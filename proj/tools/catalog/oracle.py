"""Independent exact oracle for catalog records.

Written separately from the C++ library so that the values it freezes into
tests/data are an external cross-check: intersection numbers, adjunction data,
nef thresholds and delta counts, all with fractions.Fraction.
"""
from fractions import Fraction as F
from math import gcd

DEEP = F(1, 7)


def frac(s):
    return F(s) if not isinstance(s, F) else s


def coeff_at(expr, t):
    """Boundary coefficients are either "t" or a rational string."""
    return t if expr == "t" else F(expr)


# ---------------------------------------------------------------- germs

def branch_value(shape, x, y):
    kind = shape["shape"]
    if kind == "axis1":
        return x
    if kind == "axis2":
        return y
    return min(shape["p"] * x, shape["r"] * y)


def lattice_points(n, q, xmax, ymax):
    """Points (x, y) of Z^2 + Z(q/n, 1/n) with 0 < x <= xmax, 0 < y <= ymax."""
    out = []
    ymax_i = int(ymax * n)
    for Y in range(1, ymax_i + 1):
        X0 = (q * Y) % n if n > 1 else 0
        X = X0
        while F(X, n) <= xmax:
            if X > 0:
                out.append((X, Y))
            X += n
    return out


def primitive(n, q, X, Y):
    g = gcd(X, Y)
    for k in range(2, g + 1):
        if g % k:
            continue
        Xk, Yk = X // k, Y // k
        if n == 1 or (Xk - q * Yk) % n == 0:
            return False
    return True


def germ_log_discrepancy(branches, x, y):
    val = x + y
    for c, shape in branches:
        val -= c * branch_value(shape, x, y)
    return val


def deep_in_germ(n, q, branches, thr=DEEP):
    """Count exceptional valuations with log discrepancy <= thr.

    branches: list of (coefficient value, shape dict).
    Chart 1: monomial valuations in (x, y).  Chart 2: for a branch
    x + y^m (or y + x^m) the coordinates where it becomes an axis.
    Chart 2 for a cusp x^p + y^r (p, r >= 2) treats the point where the
    strict transform meets the weighted exceptional curve as a smooth
    normal crossing.
    """
    c1 = sum(c for c, s in branches if s["shape"] == "axis1")
    c2 = sum(c for c, s in branches if s["shape"] == "axis2")
    if c1 >= 1 or c2 >= 1:
        raise ValueError("not klt along an axis")
    found = []
    xmax = thr / (1 - c1)
    ymax = thr / (1 - c2)
    for X, Y in lattice_points(n, q, xmax, ymax):
        if not primitive(n, q, X, Y):
            continue
        x, y = F(X, n), F(Y, n)
        l = germ_log_discrepancy(branches, x, y)
        if l <= 0:
            raise ValueError("not klt")
        if l <= thr:
            found.append(("chart1", x, y, l))
    for c, s in branches:
        if s["shape"] != "newton":
            continue
        p, r = s["p"], s["r"]
        if p == 1 or r == 1:
            # flip so that the branch is x + y^m, tangent to {x = 0}
            if p == 1:
                m, other_c1, other_c2, qq = r, c1, c2, q
            else:
                m, other_c1, other_c2 = p, c2, c1
                qq = pow(q, -1, n) if n > 1 else 0
            base = m + 1 - other_c1 * m - c * m - other_c2
            if base <= 0:
                raise ValueError("not klt")
            bmax = thr / base
            dmax = thr / (1 - c)
            Ymax = int(bmax * n)
            for Y in range(1, Ymax + 1):
                Xlo = m * Y
                X = Xlo + 1
                while True:
                    if n > 1 and (X - qq * Y) % n:
                        X += 1
                        continue
                    d = F(X, n) - F(m * Y, n)
                    if d > dmax:
                        break
                    if primitive(n, qq, X, Y):
                        a, b = F(X, n), F(Y, n)
                        l = a + b - other_c1 * m * b - c * a - other_c2 * b
                        if l <= 0:
                            raise ValueError("not klt")
                        if l <= thr:
                            found.append(("chart2", a, b, l))
                    X += 1
        else:
            # weighted divisor through which the cusp separates
            g = gcd(p, r)
            pr, rr = p // g, r // g
            k = 1
            while n > 1 and (k * rr - q * k * pr) % n:
                k += 1
            w = (F(k * rr, n), F(k * pr, n))
            lw = germ_log_discrepancy(branches, *w)
            if lw <= 0 or c >= 1:
                raise ValueError("not klt")
            gmax = int(thr / lw) + 1
            dmax = int(thr / (1 - c)) + 1
            for g in range(1, gmax + 1):
                for d in range(1, dmax + 1):
                    if gcd(g, d) != 1:
                        continue
                    l = g * lw + d * (1 - c)
                    if l <= thr:
                        found.append(("chart2", g, d, l))
    return found


# ---------------------------------------------------------------- WPS records

def wps_dot(weights, d, e):
    a1, a2, a3 = weights
    return F(d * e, a1 * a2 * a3)


def wps_summary(rec):
    w = rec["surface"]["weights"]
    curves = {b["curve"]: b for b in rec["boundary"]}
    dC = curves["C"]["degree"]
    C2 = wps_dot(w, dC, dC)
    KC = -wps_dot(w, sum(w), dC)
    deg_diff = F(0)
    qsum = F(0)
    for pt in rec["points"]:
        on_c = [b for b in pt["branches"] if b["curve"] == "C"]
        if not on_c or pt["n"] == 1:
            continue
        n = pt["n"]
        deg_diff += (1 - F(1, n)) * pt.get("count", 1)
        role = on_c[0]["shape"]
        q = pt["q"] if role == "axis1" else pow(pt["q"], -1, n)
        qsum += F(q, n) * pt.get("count", 1)
    return {"C2": C2, "KC": KC, "deg_diff": deg_diff, "C2_tilde": C2 - qsum}


def t_max_wps(rec):
    w = rec["surface"]["weights"]
    rest = sum(w)
    dC = None
    for b in rec["boundary"]:
        if b["coeff"] == "t":
            dC = b["degree"]
        else:
            rest -= F(b["coeff"]) * b["degree"]
    return F(rest) / dC


def delta_wps(rec, t):
    count = 0
    coeffs = {b["curve"]: coeff_at(b["coeff"], t) for b in rec["boundary"]}
    for c in coeffs.values():
        if c >= F(6, 7):
            count += 1
    for pt in rec["points"]:
        br = [(coeffs[b["curve"]], b) for b in pt["branches"]]
        if pt["n"] == 1 and len(br) <= 1 and all(b["shape"] != "newton" for _, b in br):
            continue
        found = deep_in_germ(pt["n"], pt["q"], br)
        count += len(found) * pt.get("count", 1)
    return count


# ---------------------------------------------------------------- graph records

def solve(M, rhs):
    """Exact Gaussian elimination."""
    n = len(M)
    A = [row[:] + [rhs[i]] for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [v / pv for v in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [A[i][n] for i in range(n)]


class Graph:
    def __init__(self, surf):
        self.vid = [v["id"] for v in surf["vertices"]]
        self.idx = {v: i for i, v in enumerate(self.vid)}
        n = len(self.vid)
        self.M = [[F(0)] * n for _ in range(n)]
        for i, v in enumerate(surf["vertices"]):
            self.M[i][i] = F(v["self"])
        for a, b in surf["edges"]:
            i, j = self.idx[a], self.idx[b]
            self.M[i][j] += 1
            self.M[j][i] += 1
        self.handles = {h["name"]: h for h in surf["handles"]}
        self.hv = {h: [F(0)] * n for h in self.handles}
        self.hh = {}
        for h in self.handles:
            self.hh[(h, h)] = F(self.handles[h]["self"])
        for m in surf["meets"]:
            a, b, c = m["a"], m["b"], m.get("count", 1)
            if a in self.handles and b in self.handles:
                self.hh[(a, b)] = self.hh.get((a, b), F(0)) + c
                self.hh[(b, a)] = self.hh.get((b, a), F(0)) + c
            else:
                h, v = (a, b) if a in self.handles else (b, a)
                self.hv[h][self.idx[v]] += c

    def pullback(self, h):
        return solve(self.M, [-x for x in self.hv[h]])

    def dot(self, h1, h2):
        base = self.hh.get((h1, h2), F(0))
        corr = self.pullback(h2)
        return base + sum(c * x for c, x in zip(corr, self.hv[h1]))

    def k_coeffs(self):
        rhs = [2 + self.M[i][i] for i in range(len(self.vid))]
        return solve(self.M, rhs)  # e with sum e_i E_i.E_j = 2 + E_j^2

    def K_dot(self, h):
        ref = next(n for n, d in self.handles.items() if d.get("rational"))
        e = self.k_coeffs()
        k_ref = -2 - self.hh[(ref, ref)] + sum(a * b for a, b in zip(e, self.hv[ref]))
        return k_ref * self.dot(ref, h) / self.dot(ref, ref)

    def log_discrepancies(self, coeffs):
        """Vertex log discrepancies for boundary handle coefficients."""
        n = len(self.vid)
        rhs = []
        for j in range(n):
            r = 2 + self.M[j][j]
            for h, c in coeffs.items():
                r -= c * self.hv[h][j]
            rhs.append(r)
        e = solve(self.M, rhs)  # e_i = negated discrepancy
        return [1 - x for x in e]


def graph_summary(rec):
    g = Graph(rec["surface"])
    C2 = g.dot("C", "C")
    KC = g.K_dot("C")
    # singular points on C: components of the vertex graph met by C
    comps = components(g)
    deg_diff = F(0)
    for comp in comps:
        if any(g.hv["C"][i] for i in comp):
            sub = [[g.M[i][j] for j in comp] for i in comp]
            deg_diff += 1 - F(1, abs_det(sub))
    return {"C2": C2, "KC": KC, "deg_diff": deg_diff, "C2_tilde": F(g.handles["C"]["self"])}


def components(g):
    n = len(g.vid)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and g.M[i][j] != 0 and not seen[j]:
                    seen[j] = True
                    stack.append(j)
        out.append(sorted(comp))
    return out


def abs_det(M):
    n = len(M)
    A = [[F(x) for x in r] for r in M]
    det = F(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return abs(int(det))


def t_max_graph(rec):
    g = Graph(rec["surface"])
    kc = g.K_dot("C")
    rest = -kc
    for b in rec["boundary"]:
        if b["coeff"] != "t":
            rest -= F(b["coeff"]) * g.dot(b["curve"], "C")
    return rest / g.dot("C", "C")


def edge_count(a, b, thr):
    """Coprime (w1, w2) >= 1 with w1 a + w2 b <= thr."""
    out = 0
    if a <= 0 or b <= 0:
        raise ValueError("not klt")
    w1 = 1
    while w1 * a + b <= thr:
        w2 = 1
        while w1 * a + w2 * b <= thr:
            if gcd(w1, w2) == 1:
                out += 1
            w2 += 1
        w1 += 1
    return out


def delta_graph(rec, t):
    g = Graph(rec["surface"])
    coeffs = {b["curve"]: coeff_at(b["coeff"], t) for b in rec["boundary"]}
    A = g.log_discrepancies(coeffs)
    count = sum(1 for c in coeffs.values() if c >= F(6, 7))
    count += sum(1 for a in A if a <= DEEP)
    n = len(g.vid)
    for i in range(n):
        for j in range(i + 1, n):
            if g.M[i][j] != 0:
                count += int(g.M[i][j]) * edge_count(A[i], A[j], DEEP)
    for h in g.handles:
        ah = 1 - coeffs.get(h, F(0))
        for i in range(n):
            if g.hv[h][i]:
                count += int(g.hv[h][i]) * edge_count(A[i], ah, DEEP)
    names = sorted(g.handles)
    for x in range(len(names)):
        for y in range(x + 1, len(names)):
            c = g.hh.get((names[x], names[y]), 0)
            if c:
                count += int(c) * edge_count(1 - coeffs.get(names[x], F(0)),
                                             1 - coeffs.get(names[y], F(0)), DEEP)
    return count


# ---------------------------------------------------------------- dispatch

def summary(rec):
    if rec["surface"]["type"] == "wps":
        return wps_summary(rec)
    return graph_summary(rec)


def t_max(rec):
    if rec["surface"]["type"] == "wps":
        return t_max_wps(rec)
    return t_max_graph(rec)


def delta(rec, t):
    if rec["surface"]["type"] == "wps":
        return delta_wps(rec, t)
    return delta_graph(rec, t)


def marker_from_summary(s):
    pa2 = s["KC"] + s["C2"] - s["deg_diff"] + 2  # 2 p_a
    if pa2 == 2:
        return "ell"
    if pa2 == 0:
        q = s["C2_tilde"]
        return ("+" if q > 0 else "") + str(q)
    return "pa=%s" % (pa2 / 2)


def first_deep_t(rec, lo, hi, den_max=60):
    """Smallest t in (lo, hi] with delta >= 2 among fractions with small denominators."""
    cands = sorted({F(a, d) for d in range(1, den_max + 1)
                    for a in range(d * 0, d + 1) if lo < F(a, d) <= hi})
    for t in cands:
        if delta(rec, t) >= 2:
            return t
    return None
