"""Fan calculus for complete toric surfaces with three rays.

Used once to reconstruct the toric families from their singularity lists and
to build graph encodings of weighted projective planes for the dual-encoding
tests.  Everything is exact.
"""
from fractions import Fraction as F
from math import gcd


def det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def pair(m, u):
    return m[0] * u[0] + m[1] * u[1]


def cone_q(u, v):
    """q with (q*u + v)/n integral, n = det(u, v); the cone is 1/n(q,1) with
    the first coordinate axis being the orbit of u."""
    n = det(u, v)
    assert n > 0
    if n == 1:
        return 0
    for q in range(1, n):
        if (q * u[0] + v[0]) % n == 0 and (q * u[1] + v[1]) % n == 0:
            return q
    raise ValueError("not a lattice cone")


def same_type(n, q, n2, q2):
    if n != n2:
        return False
    if n == 1:
        return True
    return q == q2 or (q * q2) % n == 1


def resolve_cone(u, v):
    """Interior rays of the minimal resolution of cone(u, v), from u to v."""
    out = []
    while det(u, v) > 1:
        n = det(u, v)
        q = cone_q(u, v)
        w = ((q * u[0] + v[0]) // n, (q * u[1] + v[1]) // n)
        out.append(w)
        u = w
    return out


class Fan:
    """Three rays u[0], u[1], u[2] in counterclockwise order.

    Point i (0-based) is the fixed point of the cone spanned by the two rays
    other than u[i]; the orbit closure D_i of u[i] passes through the two
    points j != i.
    """

    def __init__(self, rays):
        self.u = [tuple(r) for r in rays]
        self.refined = []   # list of (ray, original index or None)
        for i in range(3):
            a, b = self.u[i], self.u[(i + 1) % 3]
            self.refined.append((a, i))
            for w in resolve_cone(a, b):
                self.refined.append((w, None))
        self.selfint = []
        m = len(self.refined)
        for i in range(m):
            p = self.refined[i - 1][0]
            c = self.refined[i][0]
            nx = self.refined[(i + 1) % m][0]
            s = (p[0] + nx[0], p[1] + nx[1])
            if c[0] != 0:
                assert s[0] % c[0] == 0
                b = s[0] // c[0]
            else:
                b = s[1] // c[1]
            assert (b * c[0], b * c[1]) == s
            self.selfint.append(-b)

    def point_cone(self, i):
        j, k = (i + 1) % 3, (i + 2) % 3
        return self.u[j], self.u[k]

    def point_type(self, i):
        a, b = self.point_cone(i)
        return det(a, b), cone_q(a, b)

    def lam(self):
        return [det(self.u[(i + 1) % 3], self.u[(i + 2) % 3]) for i in range(3)]

    def dot_S(self, c1, c2):
        """Intersection on S of torus-invariant Weil divisors sum c[i] D_i."""
        l = self.lam()
        tot = l[0] * l[1] * l[2]
        d1 = sum(F(c1[i], 1) * l[i] for i in range(3))
        d2 = sum(F(c2[i], 1) * l[i] for i in range(3))
        return d1 * d2 / tot

    def K_S(self):
        return [-1, -1, -1]

    # ---- smooth resolution

    def m_refined(self):
        return len(self.refined)

    def dot_X(self, h1, h2):
        """Intersection on the resolution of divisors given as coefficient
        vectors over refined rays."""
        m = len(self.refined)
        tot = 0
        for i in range(m):
            if not h1[i]:
                continue
            for j in range(m):
                if not h2[j]:
                    continue
                if i == j:
                    v = self.selfint[i]
                elif (j - i) % m in (1, m - 1):
                    v = 1 if m > 2 else 2
                else:
                    v = 0
                tot += h1[i] * h2[j] * v
        return tot

    def unit(self, i):
        v = [0] * len(self.refined)
        v[i] = 1
        return v

    def orbit_index(self, i):
        return next(k for k, (_, o) in enumerate(self.refined) if o == i)

    def polygon(self, c, box=80):
        pts = []
        for x in range(-box, box + 1):
            for y in range(-box, box + 1):
                if all(pair((x, y), self.u[i]) >= -c[i] for i in range(3)):
                    pts.append((x, y))
        return pts

    def moving_part(self, c):
        """Coefficients on refined rays of the strict transform of a general
        member of |sum c_i D_i|, plus a base-point-freeness flag."""
        pts = self.polygon(c)
        if len(pts) < 2:
            raise ValueError("linear system has no moving part")
        h = [-min(pair(m, r) for m in pts) for r, _ in self.refined]
        m = len(self.refined)
        bpf = True
        for i in range(m):
            a, b = self.refined[i][0], self.refined[(i + 1) % m][0]
            if not any(pair(p, a) == -h[i] and pair(p, b) == -h[(i + 1) % m] for p in pts):
                bpf = False
        xs = {p[0] - pts[0][0] for p in pts}
        ys = {p[1] - pts[0][1] for p in pts}
        g = 0
        for p in pts:
            g = gcd(g, gcd(p[0] - pts[0][0], p[1] - pts[0][1]))
        composite = g > 1
        return h, bpf, composite, pts


def find_fans(types, bound=200):
    """All fans (up to the normalisation u0=(1,0)... ) whose points have the
    given ordered types [(n, q)], one per point 0, 1, 2."""
    n0, n1, n2 = (t[0] for t in types)
    # point 2 is cone(u0, u1): put u0 = (1, 0), u1 = (a, n2)
    out = []
    for a in range(n2):
        if gcd(a, n2) != 1:
            continue
        u0, u1 = (1, 0), (a, n2)
        # point 1 is cone(u2, u0): det(u2, u0) = -y = n1
        y = -n1
        # point 0 is cone(u1, u2): a*y - n2*x = n0
        num = a * y - n0
        if num % n2:
            continue
        x = num // n2
        u2 = (x, y)
        if gcd(abs(x), abs(y)) != 1:
            continue
        fan = Fan([u0, u1, u2])
        ok = all(same_type(*fan.point_type(i), *types[i]) for i in range(3))
        if ok:
            out.append(fan)
    return out
