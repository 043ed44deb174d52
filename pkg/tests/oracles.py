"""Independent oracles used only by the tests.

``annulus_alexander`` builds a genus-1 doubly-pointed diagram straight from
Rasmussen-style data (p, q, c, u): the torus is an annulus with alpha as its
core, beta is q top rainbows, q bottom rainbows shifted by c, and p - 2q
straight strands twisted by u. It shares no code with the package.

``torus_knot_alexander`` is the closed formula for T(p, q).
"""

from __future__ import annotations

from fractions import Fraction


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def annulus_alexander(p: int, q: int, c: int, u: int):
    """Normalized Alexander polynomial as sorted (exponent, coefficient) pairs.

    Returns None when beta is not a single closed curve of the right class,
    and ("asym", raw) when no unit shift makes the result symmetric.
    """
    nf = p - 2 * q
    if nf < 0 or p < 1:
        return None
    partner = {}
    geo = {}
    for i in range(q):
        a, b = ("T", i), ("T", 2 * q - 1 - i)
        partner[a], partner[b] = b, a
        a, b = ("B", (c + i) % p), ("B", (c + 2 * q - 1 - i) % p)
        partner[a], partner[b] = b, a
    for j in range(nf):
        top = 2 * q + j
        bottom = c + 2 * q + (j + u) % nf + p * ((j + u) // nf)
        a, b = ("T", top), ("B", bottom % p)
        partner[a], partner[b] = b, a
        geo[a] = (Fraction(top) + Fraction(1, 2), Fraction(1))
        geo[b] = (Fraction(bottom) + Fraction(1, 2), Fraction(0))
    if len(partner) != 2 * p:
        return None
    start = cur = ("B", 0)
    walk = []
    for _ in range(p + 1):
        nxt = partner[cur]
        walk.append((cur, nxt))
        cur = ("B", nxt[1]) if nxt[0] == "T" else ("T", nxt[1])
        if cur == start:
            break
    if cur != start or len(walk) != p:
        return None
    z, w = Fraction(q), Fraction(c + q)

    def meets_delta(a, b):
        # signed crossings of the arc a -> b with the reference arc from w up to z
        if a[0] == b[0] == "T":
            lo, hi = sorted([a[1], b[1]])
            if lo < z < hi + 1 and a[1] < 2 * q and b[1] < 2 * q:
                return 1 if b[1] < a[1] else -1
            return 0
        if a[0] == b[0] == "B":
            return 1 if (b[1] - c) % p < (a[1] - c) % p else -1
        A, B = geo[a], geo[b]
        P0, P1 = (w, Fraction(0)), (z, Fraction(1))
        d = (P1[0] - P0[0], P1[1] - P0[1])
        total = 0
        for k in range(-3, 4):
            R, S = (A[0] + k * p, A[1]), (B[0] + k * p, B[1])
            d1 = _cross(d, (R[0] - P0[0], R[1] - P0[1]))
            d2 = _cross(d, (S[0] - P0[0], S[1] - P0[1]))
            seg = (S[0] - R[0], S[1] - R[1])
            d3 = _cross(seg, (P0[0] - R[0], P0[1] - R[1]))
            d4 = _cross(seg, (P1[0] - R[0], P1[1] - R[1]))
            if d1 * d2 < 0 and d3 * d4 < 0:
                total += 1 if _cross(d, seg) > 0 else -1
        return total

    def meets_gamma(a, b):
        if a[0] != b[0]:
            return 1 if b[0] == "T" else -1
        return 0

    wd = [meets_delta(a, b) for a, b in walk]
    wg = [meets_gamma(a, b) for a, b in walk]
    G, D = sum(wg), sum(wd)
    if abs(G) != 1:
        return None
    kappa = D * G
    grade = 0
    raw = {}
    for k, (a, b) in enumerate(walk):
        grade += wd[k] - kappa * wg[k]
        sign = 1 if b[0] == "T" else -1
        raw[grade] = raw.get(grade, 0) + sign
    raw = {e: v for e, v in raw.items() if v}
    lo, hi = min(raw), max(raw)
    if (lo + hi) % 2:
        return ("asym", raw)
    poly = {e - (lo + hi) // 2: v for e, v in raw.items()}
    if any(poly.get(-e, 0) != v for e, v in poly.items()):
        return ("asym", raw)
    if sum(poly.values()) == -1:
        poly = {e: -v for e, v in poly.items()}
    return tuple(sorted(poly.items()))


def hs_alexander(hs: tuple[int, int, int, int]):
    """Annulus-model polynomial of the diagram an HS form describes.

    The twist enters only modulo p, so this cannot distinguish HS forms
    whose last entries differ by a multiple of 2r' + s' + t'.
    """
    rp, sp, tp, rhop = hs
    if min(rp, sp, tp) < 0:
        return None
    p = 2 * rp + sp + tp
    nf = sp + tp
    if p == 0 or nf == 0:
        return None
    return annulus_alexander(p, rp, (rhop - sp) % p, sp % nf)


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _poly_divexact(num: dict, den: dict) -> dict:
    num = dict(num)
    q: dict = {}
    dd = max(den)
    while num:
        top = max(num)
        if top < dd:
            raise ValueError("not divisible")
        coef, rem = divmod(num[top], den[dd])
        if rem:
            raise ValueError("not divisible")
        q[top - dd] = coef
        for e, c in den.items():
            k = e + top - dd
            num[k] = num.get(k, 0) - coef * c
            if num[k] == 0:
                del num[k]
    return q


def torus_knot_alexander(p: int, q: int) -> dict:
    """(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), shifted to be symmetric."""
    num = _poly_mul({p * q: 1, 0: -1}, {1: 1, 0: -1})
    den = _poly_mul({p: 1, 0: -1}, {q: 1, 0: -1})
    poly = _poly_divexact(num, den)
    shift = max(poly) // 2
    return {e - shift: c for e, c in poly.items()}
