"""Exact linear algebra helpers: rational and prime-field row
reduction, integer characteristic polynomials, Smith normal form
with a column transform, and Bareiss determinants.

Everything here is dense and sized for the small matrices the rest
of the package produces (ranks in the dozens at most).
"""

from __future__ import annotations

from fractions import Fraction


class FieldQ:
    """The rationals, via Fraction."""
    name = "Q"

    def of(self, i):
        return Fraction(i)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return Fraction(1) / a

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a == 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)


class FieldF:
    """The prime field with p elements, residues stored as ints."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("%d is not prime" % p)
        if p >= 2 ** 31:
            raise ValueError("prime %d too large" % p)
        self.p = p
        self.name = "F%d" % p

    def of(self, i):
        return i % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        return pow(a, self.p - 2, self.p)

    def neg(self, a):
        return (-a) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1


def rref(rows, field):
    """Reduced row echelon form. Returns (new_rows, pivot_columns);
    zero rows are dropped."""
    rows = [list(r) for r in rows]
    pivots = []
    lead = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot_row = None
        for r in range(lead, len(rows)):
            if not field.is_zero(rows[r][col]):
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
        inv = field.inv(rows[lead][col])
        rows[lead] = [field.mul(inv, x) for x in rows[lead]]
        for r in range(len(rows)):
            if r != lead and not field.is_zero(rows[r][col]):
                c = rows[r][col]
                rows[r] = [field.sub(x, field.mul(c, y))
                           for x, y in zip(rows[r], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(rows):
            break
    return rows[:lead], pivots


def reduce_against(vec, basis_rows, pivots, field):
    """Reduce vec against an rref basis; returns the remainder."""
    vec = list(vec)
    for row, p in zip(basis_rows, pivots):
        if not field.is_zero(vec[p]):
            c = vec[p]
            vec = [field.sub(x, field.mul(c, y)) for x, y in zip(vec, row)]
    return vec


def kernel_basis(columns, nrows, field):
    """Kernel of the linear map sending unit vector j to columns[j]
    (each a dense length-nrows list). Returns kernel basis vectors of
    length len(columns)."""
    ncols = len(columns)
    if ncols == 0:
        return []
    rows = [[columns[j][i] for j in range(ncols)] for i in range(nrows)]
    red, pivots = rref(rows, field)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for f in free:
        vec = [field.zero] * ncols
        vec[f] = field.one
        for row, p in zip(red, pivots):
            vec[p] = field.neg(row[f])
        basis.append(vec)
    return basis


def char_poly(matrix):
    """Characteristic polynomial of an integer matrix, monic,
    coefficients ascending, via the Faddeev-LeVerrier recursion."""
    n = len(matrix)
    coeffs = [0] * n + [1]
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            M[i][i] += coeffs[n - k + 1]
        AM = [[sum(matrix[i][t] * M[t][j] for t in range(n))
               for j in range(n)] for i in range(n)]
        trace = sum(AM[i][i] for i in range(n))
        assert trace % k == 0
        coeffs[n - k] = -trace // k
        M = AM
    return coeffs


def poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_div_linear(coeffs, r):
    """Divide the polynomial by (t - r). Returns (quotient, remainder)."""
    quot = [0] * (len(coeffs) - 1)
    acc = 0
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * r + coeffs[i]
        quot[i - 1] = acc
    rem = acc * r + coeffs[0]
    return quot, rem


def det_bareiss(matrix) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                assert val % prev == 0
                m[i][j] = val // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_kernel_basis(matrix, ncols):
    """Saturated integer kernel of an integer matrix (given as a list
    of rows of length ncols). Returns a lattice basis for
    {v : matrix v = 0} whose span is saturated in Z^ncols.

    Column operations are mirrored on an identity matrix V; once the
    working matrix reaches column-echelon diagonal form, the V
    columns matching zero diagonal entries form the kernel basis.
    """
    B = [list(row) for row in matrix]
    nrows = len(B)
    V = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_swap(a, b):
        for row in B:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def col_addmul(dst, src, c):
        for row in B:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def row_swap(a, b):
        B[a], B[b] = B[b], B[a]

    def row_addmul(dst, src, c):
        B[dst] = [x + c * y for x, y in zip(B[dst], B[src])]

    t = 0
    for t in range(min(nrows, ncols)):
        while True:
            pivot = None
            best = None
            for i in range(t, nrows):
                for j in range(t, ncols):
                    a = abs(B[i][j])
                    if a and (best is None or a < best):
                        best = a
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                row_swap(pi, t)
            if pj != t:
                col_swap(pj, t)
            dirty = False
            for i in range(t + 1, nrows):
                if B[i][t]:
                    row_addmul(i, t, -(B[i][t] // B[t][t]))
                    if B[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if B[t][j]:
                    col_addmul(j, t, -(B[t][j] // B[t][t]))
                    if B[t][j]:
                        dirty = True
            if not dirty:
                break
        if all(B[i][j] == 0 for i in range(t, nrows) for j in range(t, ncols)):
            break
    rank = sum(1 for d in range(min(nrows, ncols)) if B[d][d] != 0)
    kernel = []
    for j in range(ncols):
        if j >= rank:
            kernel.append([V[i][j] for i in range(ncols)])
    return kernel
