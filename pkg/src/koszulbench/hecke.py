"""Symmetric group combinatorics and Kazhdan-Lusztig polynomials.

A permutation is a tuple of images in one-line notation, so (2, 3, 1)
sends 1 to 2. KL polynomials are computed by the descent recursion
with mu corrections, whole Bruhat columns at a time, and are stored as
polynomials in q (one LaurentPoly exponent per power of q; q is v
squared everywhere else in the package).

Three classical facts keep the recursion small: P_{x,w} = 1 whenever
l(w) - l(x) <= 2, the column of the longest element is identically 1,
and every column of a permutation avoiding the patterns 3412 and 4231
is identically 1 (smooth Schubert variety).
"""

from __future__ import annotations

import itertools
from bisect import insort

from .laurent import LaurentPoly

_LEN = {}
_SMOOTH = {}


def parse_permutation(text: str, n=None):
    """Parse one-line notation, either '3412' or '3,4,1,2'."""
    text = text.strip()
    if "," in text:
        images = tuple(int(p) for p in text.split(","))
    else:
        images = tuple(int(ch) for ch in text)
    check_permutation(images, n)
    return images


def check_permutation(w, n=None):
    if n is not None and len(w) != n:
        raise ValueError("expected a permutation of rank %d, got %r" % (n, w))
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError("%r is not a permutation of 1..%d" % (w, len(w)))
    return w


def render_permutation(w) -> str:
    if len(w) <= 9:
        return "".join(str(i) for i in w)
    return ",".join(str(i) for i in w)


def length(w) -> int:
    """Inversion count."""
    r = _LEN.get(w)
    if r is None:
        r = 0
        for a in range(len(w)):
            wa = w[a]
            for b in range(a + 1, len(w)):
                if wa > w[b]:
                    r += 1
        _LEN[w] = r
    return r


def longest_element(n):
    return tuple(range(n, 0, -1))


def compose(a, b):
    """(a after b): the product a*b acting as a(b(i))."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


def inverse(w):
    out = [0] * len(w)
    for i, im in enumerate(w):
        out[im - 1] = i + 1
    return tuple(out)


def mul_s(w, i):
    """Right multiply by the simple transposition s_{i+1} (0-based i)."""
    l = list(w)
    l[i], l[i + 1] = l[i + 1], l[i]
    return tuple(l)


def first_descent(w):
    """0-based index of the first right descent, or -1 for identity."""
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            return i
    return -1


def bruhat_leq(x, w) -> bool:
    """Bruhat order via the sorted-prefix dominance criterion."""
    if len(x) != len(w):
        raise ValueError("rank mismatch: %r vs %r" % (x, w))
    if x == w:
        return True
    sx = []
    sw = []
    for i in range(len(x) - 1):
        insort(sx, x[i])
        insort(sw, w[i])
        for a, b in zip(sx, sw):
            if a > b:
                return False
    return True


def is_smooth(w) -> bool:
    """Pattern avoidance of 3412 and 4231, which for type A is
    equivalent to every P_{x,w} being 1."""
    r = _SMOOTH.get(w)
    if r is not None:
        return r
    n = len(w)
    r = True
    for pos in itertools.combinations(range(n), 4):
        a, b, c, d = (w[p] for p in pos)
        if c < d < a < b or d < b < c < a:
            r = False
            break
    _SMOOTH[w] = r
    return r


# Polynomials in q inside the engine are plain coefficient tuples,
# index = power of q, trailing zeros stripped.

_ONE = (1,)


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _pshift(p, k):
    return (0,) * k + p if p else p


def _psubmul(p, q, m, k):
    """p - m * q^k * q(poly), in place semantics on tuples."""
    out = list(p) + [0] * max(0, len(q) + k - len(p))
    for i, c in enumerate(q):
        out[i + k] -= m * c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class KLTable:
    """Memoized Kazhdan-Lusztig polynomials for one symmetric group.

    The memo holds whole columns keyed by w: a dict from x to the
    coefficient tuple of P_{x,w}. Growth is bounded by the rank cap
    (default 7; raising it past 9 is refused). Confine one table to
    one thread; every computed value is deterministic, so duplicated
    work between tables is harmless.
    """

    def __init__(self, n: int, cap: int = 7):
        if cap > 9:
            raise ValueError("rank cap %d exceeds the hard limit 9" % cap)
        if n > cap:
            raise ValueError("rank %d exceeds the table cap %d" % (n, cap))
        if n < 1:
            raise ValueError("rank must be positive")
        self.n = n
        self.cap = cap
        self._cols = {}
        self._w0 = longest_element(n)

    # -- public API ------------------------------------------------------

    def kl_polynomial(self, x, w) -> LaurentPoly:
        """P_{x,w} as a polynomial in q (exponents are q powers)."""
        check_permutation(x, self.n)
        check_permutation(w, self.n)
        return LaurentPoly({e: c for e, c in enumerate(self._value(x, w)) if c})

    def inverse_kl(self, y, w) -> LaurentPoly:
        """Q_{y,w} := P_{w0 w, w0 y}, the inverse KL polynomial."""
        check_permutation(y, self.n)
        check_permutation(w, self.n)
        w0 = self._w0
        return self.kl_polynomial(compose(w0, w), compose(w0, y))

    def mu(self, x, w) -> int:
        """The coefficient of q^((l(w)-l(x)-1)/2) in P_{x,w}."""
        gap = length(w) - length(x)
        if gap <= 0 or gap % 2 == 0:
            return 0
        p = self._value(x, w)
        want = (gap - 1) // 2
        return p[want] if len(p) == want + 1 else 0

    def export_pairs(self, pairs):
        """JSON-ready list of {x, w, coeffs} for the given pairs."""
        out = []
        for x, w in pairs:
            poly = self.kl_polynomial(x, w)
            out.append({"x": render_permutation(x),
                        "w": render_permutation(w),
                        "coeffs": poly.to_json_dict()})
        return out

    # -- engine ----------------------------------------------------------

    def _value(self, x, w):
        """Coefficient tuple of P_{x,w}; () when x is not below w."""
        lw = length(w)
        lx = length(x)
        if lx > lw or (lx == lw and x != w):
            return ()
        if x == w:
            return _ONE
        if lw - lx <= 2 or is_smooth(w):
            return _ONE if bruhat_leq(x, w) else ()
        # inversion symmetry: columns are shared between w and w^{-1}
        if w not in self._cols:
            wi = inverse(w)
            if wi in self._cols:
                return self._cols[wi].get(inverse(x), ())
        return self._column(w).get(x, ())

    def _column(self, w):
        col = self._cols.get(w)
        if col is not None:
            return col
        n = self.n
        lw = length(w)
        if w == self._w0:
            col = {x: _ONE for x in itertools.permutations(range(1, n + 1))}
            self._cols[w] = col
            return col
        if is_smooth(w) or lw <= 2:
            col = self._interval_ones(w)
            self._cols[w] = col
            return col
        i = first_descent(w)
        v = mul_s(w, i)
        colv = self._column(v)
        lv = lw - 1
        # nonzero mu(z, v) with zs < z
        muz = []
        for z, pz in colv.items():
            if z[i] > z[i + 1]:
                gap = lv - length(z)
                if gap == 1:
                    muz.append((z, 1, (lw - length(z)) >> 1, length(z)))
                elif gap >= 3 and gap % 2 and len(pz) == ((gap - 1) >> 1) + 1:
                    muz.append((z, pz[-1], (lw - length(z)) >> 1, length(z)))
        col = {}
        for y, py in colv.items():
            # x = y: either c = 0 (ys above y) or c = 1 (ys below y)
            ys = mul_s(y, i)
            pys = colv.get(ys, ())
            if length(ys) > length(y):
                p = _padd(_pshift(pys, 1), py)
            else:
                p = _padd(pys, _pshift(py, 1))
            p = self._corrections(p, y, length(y), muz)
            if p:
                col[y] = p
        for y in colv:
            # x = y s above v: x <= w via lifting, with xs = y
            x = mul_s(y, i)
            if x in col or x in colv or length(x) != length(y) + 1:
                continue
            p = colv[y]
            p = self._corrections(p, x, length(x), muz)
            if p:
                col[x] = p
        self._cols[w] = col
        return col

    def _corrections(self, p, x, lx, muz):
        for z, m, half, lz in muz:
            if lz < lx or not p:
                continue
            pz = self._value(x, z)
            if pz:
                p = _psubmul(p, pz, m, half)
        return p

    def _interval_ones(self, w):
        """The column of a smooth w: 1 on [e, w], via downward covers."""
        n = self.n
        col = {w: _ONE}
        frontier = [w]
        while frontier:
            new = []
            for u in frontier:
                lu = length(u)
                for a in range(n - 1):
                    ua = u[a]
                    for b in range(a + 1, n):
                        if ua > u[b]:
                            z = list(u)
                            z[a], z[b] = z[b], z[a]
                            z = tuple(z)
                            if z not in col and length(z) == lu - 1:
                                col[z] = _ONE
                                new.append(z)
            frontier = new
        return col


def grassmannian_permutations(k: int, n: int):
    """Ordered (partition, permutation) pairs for the k x (n-k) box.

    The permutation is the minimal coset representative: w(i) is the
    jump sequence for i <= k and the complement in increasing order
    after that. Its length is the size of the partition.
    """
    from .shapes import enumerate_partitions_in_box, jump_sequence

    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    out = []
    for lam in enumerate_partitions_in_box(k, n - k):
        t = jump_sequence(lam, k)
        chosen = set(t)
        rest = tuple(j for j in range(1, n + 1) if j not in chosen)
        out.append((lam, t + rest))
    return out
