"""Frobenius weight combinatorics.

Three layers:

* wt_from_blocks / wt_space: the minimal weight support of a graded
  Cartan matrix. Each nonzero entry contributes its exponent support
  as a block; wt is a minimum-cardinality integer set containing 0
  such that every block embeds by translation, with ties broken by
  the lexicographically smallest normalized solution.

* separation: whether the residues q^e mod l are pairwise distinct
  for e in a weight set, and the search for a separating prime q.

* lattice splitting: for an integer matrix with q-power eigenvalues,
  whether the saturated weight sublattices sum to the full lattice
  over Z_(l).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _linalg
from . import mult


def _normalize_block(block):
    vals = sorted(set(block))
    if not vals:
        raise ValueError("empty block")
    base = vals[0]
    return tuple(x - base for x in vals)


def wt_from_blocks(blocks):
    """Smallest set of integers (up to translation, reported with min
    0) admitting a translated copy of every block.

    Exhaustive branch and bound. Any optimal solution can be slid so
    that the placed copies form one overlapping chain, so offsets are
    searched within the total span of all blocks.
    """
    norm = sorted({_normalize_block(b) for b in blocks},
                  key=lambda b: (-len(b), -(b[-1] if b else 0), b))
    keep = []
    for b in norm:
        covered = False
        for big in keep:
            bigset = set(big)
            if any(all(x + off in bigset for x in b)
                   for off in range(0, big[-1] - b[-1] + 1)):
                covered = True
                break
        if not covered:
            keep.append(b)
    if not keep:
        return (0,)
    span = sum(b[-1] for b in keep) + 1
    best = {"size": None, "solutions": []}

    def place(idx, current):
        if best["size"] is not None and len(current) > best["size"]:
            return
        if idx == len(keep):
            if best["size"] is None or len(current) < best["size"]:
                best["size"] = len(current)
                best["solutions"] = [frozenset(current)]
            elif len(current) == best["size"]:
                best["solutions"].append(frozenset(current))
            return
        block = keep[idx]
        lo = min(current) - span
        hi = max(current) + span
        for off in range(lo, hi + 1):
            trial = current | {x + off for x in block}
            if best["size"] is not None and len(trial) > best["size"]:
                continue
            place(idx + 1, trial)

    place(1, set(keep[0]))
    outs = set()
    for sol in best["solutions"]:
        base = min(sol)
        outs.add(tuple(sorted(x - base for x in sol)))
    return min(outs)


def cartan_blocks(space) -> list:
    """Exponent-support blocks of the graded Cartan matrix, converted
    from v-degrees to q-degrees (each block is parity-pure; shift to
    even, halve, normalize to min 0)."""
    matrix = mult.graded_cartan(space)
    blocks = []
    for row in matrix.entries:
        for p in row:
            if not p:
                continue
            exps = sorted(-e for e in p.support())
            parity = exps[0] % 2
            if any(e % 2 != parity for e in exps):
                raise ValueError("mixed-parity Cartan entry %s" % p.render())
            blocks.append(tuple((e - parity) // 2 for e in exps))
    return blocks


def wt_space(space) -> tuple:
    """wt of a Grassmannian or full flag space, as sorted q-exponents
    with minimum 0."""
    if isinstance(space, str):
        space = mult.Space.parse(space)
    if space.kind == "gr" and space.n > 10:
        raise ValueError("wt_space supports gr(k,n) only for n <= 10")
    if space.kind == "flag" and space.n > 5:
        raise ValueError("wt_space supports flag(n) only for n <= 5")
    return wt_from_blocks(cartan_blocks(space))


def render_wt(weights) -> str:
    def mono(e):
        if e == 0:
            return "1"
        if e == 1:
            return "q"
        return "q^%d" % e
    return "{%s}" % ",".join(mono(e) for e in weights)


def separation_residues(weights, q: int, l: int) -> list:
    if l < 2:
        raise ValueError("l must be at least 2")
    if q % l == 0:
        raise ValueError("q = %d is divisible by l = %d" % (q, l))
    return [pow(q, e, l) for e in sorted(set(weights))]


def is_separated(weights, q: int, l: int) -> bool:
    """Whether q^e mod l are pairwise distinct over e in weights."""
    res = separation_residues(weights, q, l)
    return len(set(res)) == len(res)


@dataclass(frozen=True)
class PrimeSearch:
    status: str
    prime: int | None
    residues: tuple | None

    def render_text(self) -> str:
        if self.status == "found":
            return "p = %d" % self.prime
        if self.status == "none_exists":
            return "no separating prime exists"
        return "no separating prime up to the bound (raise it)"

    def to_json_dict(self):
        out = {"status": self.status}
        if self.prime is not None:
            out["prime"] = self.prime
        if self.residues is not None:
            out["residues"] = list(self.residues)
        return out


def _primes_up_to(bound: int):
    sieve = bytearray([1]) * (bound + 1)
    for p in range(2, bound + 1):
        if sieve[p]:
            yield p
            for m in range(p * p, bound + 1, p):
                sieve[m] = 0


def find_separating_prime(weights, l: int, bound: int = 100) -> PrimeSearch:
    """Search for a prime q <= bound with q^e mod l pairwise distinct.

    The answer is decidable: if two exponents agree mod l-1 then
    q^e = q^e' for every q prime to l (Fermat), so no prime works;
    otherwise any prime congruent to a primitive root mod l
    separates, and such primes exist, so exhausting the bound only
    means the bound is too small.
    """
    if l < 2 or any(l % d == 0 for d in range(2, int(l ** 0.5) + 1)):
        raise ValueError("l = %d is not prime" % l)
    ws = sorted(set(weights))
    seen = {}
    for e in ws:
        r = e % (l - 1) if l > 2 else 0
        if r in seen:
            return PrimeSearch("none_exists", None, None)
        seen[r] = e
    for p in _primes_up_to(bound):
        if p == l:
            continue
        res = separation_residues(ws, p, l)
        if len(set(res)) == len(res):
            return PrimeSearch("found", p, tuple(res))
    return PrimeSearch("bound_too_small", None, None)


def _mat_sub_scalar(matrix, s):
    n = len(matrix)
    return [[matrix[i][j] - (s if i == j else 0) for j in range(n)]
            for i in range(n)]


def _mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)]


def _mat_pow(matrix, e):
    n = len(matrix)
    out = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    base = [list(r) for r in matrix]
    while e:
        if e & 1:
            out = _mat_mul(out, base)
        base = _mat_mul(base, base)
        e >>= 1
    return out


def has_weights_in(matrix, q: int):
    """Whether the characteristic polynomial splits as a product of
    (t - q^i) with i >= 0. Returns (True, {i: multiplicity}) or
    (False, None)."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    n = len(matrix)
    coeffs = _linalg.char_poly(matrix)
    if q == 1:
        rem = list(coeffs)
        for _ in range(n):
            rem, r = _linalg.poly_div_linear(rem, 1)
            if r != 0:
                return False, None
        return True, {0: n}
    cauchy = 1 + max(abs(c) for c in coeffs)
    weights = {}
    rem = list(coeffs)
    while len(rem) > 1:
        root_exp = None
        power = 1
        i = 0
        while power <= cauchy:
            if _linalg.poly_eval(rem, power) == 0:
                root_exp = i
                break
            power *= q
            i += 1
        if root_exp is None:
            return False, None
        rem, r = _linalg.poly_div_linear(rem, q ** root_exp)
        assert r == 0
        weights[root_exp] = weights.get(root_exp, 0) + 1
    return True, weights


@dataclass(frozen=True)
class PhiReport:
    applicable: bool
    weights: dict | None
    decomposable: bool | None
    index: int | None
    residues: tuple | None

    def render_text(self) -> str:
        if not self.applicable:
            return "not applicable: eigenvalues are not all powers of q"
        ws = ", ".join("q^%d x%d" % (i, m) if m > 1 else "q^%d" % i
                       for i, m in sorted(self.weights.items()))
        verdict = "decomposable" if self.decomposable else "NOT decomposable"
        return "weights: %s\nlattice index: %d\n%s" % (ws, self.index, verdict)

    def to_json_dict(self):
        out = {"applicable": self.applicable}
        if self.applicable:
            out["weights"] = {str(i): m for i, m in sorted(self.weights.items())}
            out["decomposable"] = self.decomposable
            out["index"] = self.index
            out["residues"] = list(self.residues)
        return out


def is_phi_decomposable(matrix, q: int, l: int) -> PhiReport:
    """Whether the saturated weight sublattices of an integer matrix
    with q-power eigenvalues span the lattice after localizing at l.

    The matrix must be invertible mod l (an automorphism of the local
    lattice) and l must be prime and prime to q.
    """
    if l < 2 or any(l % d == 0 for d in range(2, int(l ** 0.5) + 1)):
        raise ValueError("l = %d is not prime" % l)
    if q % l == 0:
        raise ValueError("q = %d is divisible by l = %d" % (q, l))
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    det = _linalg.det_bareiss(matrix)
    if det % l == 0:
        raise ValueError("matrix determinant is divisible by l = %d" % l)
    ok, weights = has_weights_in(matrix, q)
    if not ok:
        return PhiReport(False, None, None, None, None)
    columns = []
    for i in sorted(weights):
        m_i = weights[i]
        M = _mat_pow(_mat_sub_scalar(matrix, q ** i), m_i)
        for vec in _linalg.smith_kernel_basis(M, n):
            columns.append(vec)
    if len(columns) != n:
        return PhiReport(True, weights, False, 0, tuple(
            pow(q, i, l) for i in sorted(weights)))
    stacked = [[columns[j][i] for j in range(n)] for i in range(n)]
    index = abs(_linalg.det_bareiss(stacked))
    residues = tuple(pow(q, i, l) for i in sorted(weights))
    return PhiReport(True, weights, index % l != 0, index, residues)
