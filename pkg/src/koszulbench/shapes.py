"""Partitions, skew shapes, border strips, and Dyck depth.

Cells are pairs (i, j) with i the column and j the row, both starting
at 1: the diagram of a partition lam is {(i, j) : 1 <= i <= lam_j}.
The level of a cell (i, j) is i + j. A skew shape lam - mu is the
difference of two nested diagrams; the Dyck property and its depth are
invariant under translating the cell set, so shapes are normalized by
sliding toward the origin before memoized evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass


def _clean_parts(parts):
    out = []
    prev = None
    for p in parts:
        p = int(p)
        if p < 0:
            raise ValueError("negative part %d" % p)
        if p == 0:
            continue
        if prev is not None and p > prev:
            raise ValueError("parts not weakly decreasing: %r" % (tuple(parts),))
        out.append(p)
        prev = p
    # zeros are allowed only as trailing padding
    seen_zero = False
    for p in parts:
        if p == 0:
            seen_zero = True
        elif seen_zero:
            raise ValueError("interior zero part in %r" % (tuple(parts),))
    return tuple(out)


class Partition:
    """A weakly decreasing tuple of positive parts. Trailing zeros drop."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        object.__setattr__(self, "parts", _clean_parts(parts))

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, j: int) -> int:
        """1-based part access, zero beyond the last part."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        return all(other.part(j) <= self.part(j)
                   for j in range(1, len(other.parts) + 1))

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        cols = self.parts[0]
        return Partition(tuple(sum(1 for p in self.parts if p >= i)
                               for i in range(1, cols + 1)))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition(%r)" % (self.parts,)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")" if self.parts else "()"


def enumerate_partitions_in_box(k: int, m: int):
    """All partitions with at most k parts, each at most m.

    Ordered by size, and within a size with larger leading parts first,
    so the Gr(2,4) box lists as (), (1), (2), (1,1), (2,1), (2,2).
    """
    if k < 1 or m < 1:
        raise ValueError("box dimensions must be positive")
    acc = []

    def rec(prev, row, parts):
        acc.append(Partition(tuple(parts)))
        if row == k:
            return
        for p in range(prev, 0, -1):
            parts.append(p)
            rec(p, row + 1, parts)
            parts.pop()

    rec(m, 0, [])
    acc.sort(key=lambda lam: (lam.size, tuple(-p for p in lam.parts)))
    return acc


def jump_sequence(lam: Partition, k: int):
    """The strictly increasing sequence t_i = lam_{k+1-i} + i."""
    if len(lam.parts) > k:
        raise ValueError("partition %s has more than %d parts" % (lam, k))
    return tuple(lam.part(k + 1 - i) + i for i in range(1, k + 1))


class SkewShape:
    """The skew shape outer - inner, with its derived cell set."""

    __slots__ = ("outer", "inner", "cells")

    def __init__(self, outer, inner=()):
        outer = outer if isinstance(outer, Partition) else Partition(outer)
        inner = inner if isinstance(inner, Partition) else Partition(inner)
        if not outer.contains(inner):
            raise ValueError("inner %s not contained in outer %s" % (inner, outer))
        cells = []
        for j in range(1, len(outer.parts) + 1):
            for i in range(inner.part(j) + 1, outer.part(j) + 1):
                cells.append((i, j))
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "cells", tuple(sorted(cells)))

    def __setattr__(self, *a):
        raise AttributeError("SkewShape is immutable")

    @property
    def size(self) -> int:
        return len(self.cells)

    def is_empty(self) -> bool:
        return not self.cells

    def cell_set(self):
        return frozenset(self.cells)

    def width(self) -> int:
        if not self.cells:
            return 0
        cols = [i for i, _ in self.cells]
        return max(cols) - min(cols) + 1

    def height(self) -> int:
        if not self.cells:
            return 0
        rows = [j for _, j in self.cells]
        return max(rows) - min(rows) + 1

    def __eq__(self, other):
        return (isinstance(other, SkewShape)
                and self.outer == other.outer and self.inner == other.inner)

    def __hash__(self):
        return hash((self.outer, self.inner))

    def __repr__(self):
        return "SkewShape(%r, %r)" % (self.outer.parts, self.inner.parts)


def shape_from_cells(cells) -> SkewShape:
    """Rebuild the canonical (outer, inner) pair from a skew cell set.

    The cells must form a valid skew shape whose rows are intervals.
    Empty rows below the last populated row are padded so both
    partitions stay weakly decreasing.
    """
    cells = sorted(set(cells))
    if not cells:
        return SkewShape((), ())
    rows = {}
    for i, j in cells:
        rows.setdefault(j, []).append(i)
    maxrow = max(rows)
    outer = [0] * maxrow
    inner = [0] * maxrow
    for j in range(maxrow, 0, -1):
        if j in rows:
            cols = rows[j]
            a, b = min(cols) - 1, max(cols)
            if len(cols) != b - a:
                raise ValueError("row %d is not an interval" % j)
            outer[j - 1] = b
            inner[j - 1] = a
        else:
            nxt = outer[j] if j < maxrow else 0
            outer[j - 1] = nxt
            inner[j - 1] = nxt
    return SkewShape(tuple(outer), tuple(inner))


def normal_form(shape: SkewShape) -> SkewShape:
    """Translate the cell set as close to the origin as possible."""
    if not shape.cells:
        return SkewShape((), ()) if (shape.outer.parts or shape.inner.parts) else shape
    di = 1 - min(i for i, _ in shape.cells)
    dj = 1 - min(j for _, j in shape.cells)
    if di == 0 and dj == 0 and not _has_empty_leading_row(shape):
        return shape
    return shape_from_cells((i + di, j + dj) for i, j in shape.cells)


def _has_empty_leading_row(shape) -> bool:
    return bool(shape.outer.parts) and shape.outer.part(1) == shape.inner.part(1)


def connected_components(shape: SkewShape):
    """Maximal edge-connected cell groups, each in normal form.

    Cells touching only at a corner are not adjacent. The empty shape
    has zero components. Components are ordered by their smallest cell.
    """
    remaining = set(shape.cells)
    comps = []
    while remaining:
        seed = min(remaining)
        stack = [seed]
        remaining.discard(seed)
        comp = {seed}
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in remaining:
                    remaining.discard(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(comp)
    comps.sort(key=min)
    return [normal_form(shape_from_cells(c)) for c in comps]


def is_border_strip(shape: SkewShape) -> bool:
    """True iff no 2x2 block of cells lies inside the shape."""
    cs = set(shape.cells)
    return not any((i + 1, j) in cs and (i, j + 1) in cs and (i + 1, j + 1) in cs
                   for i, j in cs)


def outer_border_strip(shape: SkewShape) -> SkewShape:
    """The largest final segment of the shape that is a border strip.

    A final segment is lam - nu for inner <= nu <= lam. The largest
    border-strip one consists exactly of the cells whose upper-right
    diagonal neighbor is outside the shape. May be disconnected.
    """
    if not shape.cells:
        raise ValueError("outer_border_strip of an empty shape")
    cs = shape.cell_set()
    strip = [(i, j) for i, j in shape.cells if (i + 1, j + 1) not in cs]
    return normal_form(shape_from_cells(strip))


def _path_ends(cells):
    """Endpoints of the Hamiltonian path of a connected border strip."""
    cs = set(cells)
    ends = []
    for i, j in cells:
        deg = sum(1 for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1))
                  if nb in cs)
        if deg <= 1:
            ends.append((i, j))
    if len(cells) == 1:
        return cells[0], cells[0]
    if len(ends) != 2:
        raise ValueError("cells do not form a single path")
    return ends[0], ends[1]


def is_dyck_cbs(shape: SkewShape) -> bool:
    """Dyck test for a connected border strip.

    The two endpoint cells of the strip's path must share the same
    level i + j, and no cell of the strip may have a strictly smaller
    level. Raises ValueError when the input is not a connected border
    strip.
    """
    if not shape.cells:
        raise ValueError("empty shape is not a connected border strip")
    if not is_border_strip(shape):
        raise ValueError("shape is not a border strip")
    if len(connected_components(shape)) != 1:
        raise ValueError("shape is not connected")
    e1, e2 = _path_ends(shape.cells)
    lev = e1[0] + e1[1]
    if lev != e2[0] + e2[1]:
        return False
    return all(i + j >= lev for i, j in shape.cells)


@dataclass(frozen=True)
class DyckVerdict:
    is_dyck: bool
    depth: int


_DP_MEMO = {}


def _norm_key(cells):
    """Normalized cell tuple for memoization, translation removed."""
    di = min(i for i, _ in cells) - 1
    dj = min(j for _, j in cells) - 1
    if di or dj:
        return tuple(sorted((i - di, j - dj) for i, j in cells))
    return tuple(sorted(cells))


def _dp_cells(cells):
    """Depth of a normalized cell tuple, or -1 when not Dyck."""
    if not cells:
        return 0
    key = cells
    hit = _DP_MEMO.get(key)
    if hit is not None:
        return hit
    cs = set(cells)
    comps = _split_components(cells, cs)
    if len(comps) > 1:
        total = 0
        for comp in comps:
            d = _dp_cells(_norm_key(comp))
            if d < 0:
                total = -1
                break
            total += d
        _DP_MEMO[key] = total
        return total
    if not any((i + 1, j) in cs and (i, j + 1) in cs and (i + 1, j + 1) in cs
               for i, j in cells):
        # connected border strip
        d = 1 if _cbs_is_dyck(cells, cs) else -1
        _DP_MEMO[key] = d
        return d
    strip = tuple(c for c in cells if (c[0] + 1, c[1] + 1) not in cs)
    rest = tuple(c for c in cells if (c[0] + 1, c[1] + 1) in cs)
    a = _dp_cells(_norm_key(strip))
    if a < 0:
        _DP_MEMO[key] = -1
        return -1
    b = _dp_cells(_norm_key(rest))
    d = -1 if b < 0 else a + b
    _DP_MEMO[key] = d
    return d


def _split_components(cells, cs):
    remaining = set(cs)
    comps = []
    while remaining:
        seed = next(iter(remaining))
        remaining.discard(seed)
        stack = [seed]
        comp = [seed]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in remaining:
                    remaining.discard(nb)
                    comp.append(nb)
                    stack.append(nb)
        comps.append(comp)
    return comps


def _cbs_is_dyck(cells, cs):
    ends = []
    for i, j in cells:
        deg = 0
        if (i + 1, j) in cs:
            deg += 1
        if (i - 1, j) in cs:
            deg += 1
        if (i, j + 1) in cs:
            deg += 1
        if (i, j - 1) in cs:
            deg += 1
        if deg <= 1:
            ends.append((i, j))
    if len(cells) == 1:
        lev = cells[0][0] + cells[0][1]
    else:
        if len(ends) != 2:
            return False
        lev = ends[0][0] + ends[0][1]
        if lev != ends[1][0] + ends[1][1]:
            return False
    return all(i + j >= lev for i, j in cells)


def dyck_depth(shape: SkewShape) -> DyckVerdict:
    """The four-rule recursion: empty has depth 0, a Dyck connected
    border strip has depth 1, a disconnected shape sums over its
    components, and a connected shape splits into its outer border
    strip plus the rest, both of which must be Dyck."""
    if not shape.cells:
        return DyckVerdict(True, 0)
    d = _dp_cells(_norm_key(shape.cells))
    return DyckVerdict(d >= 0, d if d >= 0 else 0)


def transpose(shape: SkewShape) -> SkewShape:
    """Reflect cells across the main diagonal, (i, j) -> (j, i)."""
    if not shape.cells:
        return shape
    return shape_from_cells((j, i) for i, j in shape.cells)


# ---------------------------------------------------------------------------
# Flat box scanner.
#
# The depth-bound sweep over the 8x8 box visits 12,320,068 normalized
# shapes; the object-level recursion above costs far too much per shape
# for that. The scanner below enumerates every normalized shape exactly
# once as a tuple of per-row column intervals packed into small ints,
# evaluates the same four-rule recursion iteratively, and never builds
# cell sets. Tests cross-validate it against dyck_depth on every shape
# in smaller boxes.
# ---------------------------------------------------------------------------


def _eval_encoded(enc, n):
    """Dyck depth of an encoded shape, or -1.

    enc holds one int per row: (a << 4) | b for the half-open column
    interval (a, b], or -1 for an empty row.
    """
    total = 0
    stack = []
    cur = None
    curoff = 0
    pa = -1
    pb = 0
    for j in range(n):
        e = enc[j]
        if e < 0:
            if cur:
                stack.append((curoff, cur))
                cur = None
            pa = -1
            continue
        a = e >> 4
        b = e & 15
        if pa >= 0 and (a if a > pa else pa) >= (b if b < pb else pb):
            stack.append((curoff, cur))
            cur = None
        if cur is None:
            cur = []
            curoff = j
        cur.append(e)
        pa = a
        pb = b
    if cur:
        stack.append((curoff, cur))
    while stack:
        rowoff, arr = stack.pop()
        r = len(arr)
        bs = True
        for i in range(r - 1):
            e1 = arr[i]
            e2 = arr[i + 1]
            a1 = e1 >> 4
            b1 = e1 & 15
            a2 = e2 >> 4
            b2 = e2 & 15
            if (b1 if b1 < b2 else b2) - (a1 if a1 > a2 else a2) >= 2:
                bs = False
                break
        if bs:
            lev = (arr[0] & 15) + rowoff + 1
            if lev != (arr[-1] >> 4) + 1 + rowoff + r:
                return -1
            for i in range(r):
                if (arr[i] >> 4) + 2 + rowoff + i < lev:
                    return -1
            total += 1
            continue
        # peel the outer border strip; check its pieces, push the rest
        sa = [0] * r
        sb = [0] * r
        rem = None
        remoff = 0
        prevra = -1
        prevrb = 0
        for i in range(r):
            e = arr[i]
            a = e >> 4
            b = e & 15
            if i + 1 < r:
                nb = arr[i + 1] & 15
                hi = b if b < nb - 1 else nb - 1
                if hi < a:
                    hi = a
            else:
                hi = a
            sa[i] = hi
            sb[i] = b
            if hi > a:
                if prevra >= 0 and (a if a > prevra else prevra) >= (hi if hi < prevrb else prevrb):
                    stack.append((remoff, rem))
                    rem = None
                if rem is None:
                    rem = []
                    remoff = rowoff + i
                rem.append((a << 4) | hi)
                prevra = a
                prevrb = hi
            else:
                if rem is not None:
                    stack.append((remoff, rem))
                    rem = None
                prevra = -1
        if rem is not None:
            stack.append((remoff, rem))
        ci = -1
        for i in range(r):
            if sa[i] == sb[i]:
                if ci >= 0:
                    if not _cbs_encoded(sa, sb, ci, i, rowoff):
                        return -1
                    total += 1
                    ci = -1
                continue
            if ci >= 0:
                p = i - 1
                if (sa[i] if sa[i] > sa[p] else sa[p]) >= (sb[i] if sb[i] < sb[p] else sb[p]):
                    if not _cbs_encoded(sa, sb, ci, i, rowoff):
                        return -1
                    total += 1
                    ci = i
            else:
                ci = i
        if ci >= 0:
            if not _cbs_encoded(sa, sb, ci, r, rowoff):
                return -1
            total += 1
    return total


def _cbs_encoded(sa, sb, lo, hi, rowoff):
    lev = sb[lo] + rowoff + lo + 1
    if lev != sa[hi - 1] + 1 + rowoff + hi:
        return False
    for i in range(lo, hi):
        if sa[i] + 2 + rowoff + i < lev:
            return False
    return True


def encode_shape(shape: SkewShape, rows: int):
    """Pack a normalized shape into the scanner's row encoding."""
    nf = normal_form(shape)
    enc = [-1] * rows
    for j in range(1, len(nf.outer.parts) + 1):
        a, b = nf.inner.part(j), nf.outer.part(j)
        if b > a:
            enc[j - 1] = (a << 4) | b
    return enc


@dataclass
class BoxScan:
    rows: int
    cols: int
    shapes: int
    dyck: int
    max_depth: int
    depth_counts: dict
    bound_violations: int


def scan_box(rows: int, cols: int) -> BoxScan:
    """Sweep every normalized skew shape inside a rows x cols box.

    Counts shapes and Dyck shapes, tallies depths, and counts
    violations of the bound depth <= width. The empty shape is
    included (depth 0). Column intervals are packed four bits each,
    so cols must stay below 16.
    """
    if rows < 1 or cols < 1:
        raise ValueError("box dimensions must be positive")
    if cols >= 16 or rows >= 16:
        raise ValueError("scanner supports boxes up to 15x15")
    K, M = rows, cols
    count = 0
    ndyck = 0
    maxdp = 0
    nviol = 0
    depth_counts = {0: 1}
    buf = [-1] * K
    evaluate = _eval_encoded

    def rec(depth, la, lb, gap, touched0, minw, maxw):
        nonlocal count, ndyck, maxdp, nviol
        if depth == K:
            if touched0:
                count += 1
                d = evaluate(buf, K)
                if d >= 0:
                    ndyck += 1
                    depth_counts[d] = depth_counts.get(d, 0) + 1
                    if d > maxdp:
                        maxdp = d
                    if d > maxw - minw:
                        nviol += 1
            return
        buf[depth] = -1
        rec(depth + 1, la, lb, True, touched0, minw, maxw)
        if gap:
            lim = la if la < M else M
            for a in range(M):
                e0 = a << 4
                t0 = touched0 or a == 0
                mw = a if a < minw else minw
                for b in range(a + 1, lim + 1):
                    buf[depth] = e0 | b
                    rec(depth + 1, a, b, False, t0, mw, b if b > maxw else maxw)
        else:
            for a in range(la + 1):
                e0 = a << 4
                t0 = touched0 or a == 0
                mw = a if a < minw else minw
                for b in range(a + 1, lb + 1):
                    buf[depth] = e0 | b
                    rec(depth + 1, a, b, False, t0, mw, b if b > maxw else maxw)
        buf[depth] = -1

    for a in range(M):
        e0 = a << 4
        for b in range(a + 1, M + 1):
            buf[0] = e0 | b
            rec(1, a, b, False, a == 0, a, b)
        buf[0] = -1
    return BoxScan(rows=K, cols=M, shapes=count, dyck=ndyck, max_depth=maxdp,
                   depth_counts=dict(sorted(depth_counts.items())),
                   bound_violations=nviol)


def enumerate_box_shapes(rows: int, cols: int):
    """Yield every normalized nonempty skew shape in the box as a
    SkewShape. Intended for tests on small boxes; the scanner above is
    the fast path for large sweeps."""
    if rows < 1 or cols < 1:
        raise ValueError("box dimensions must be positive")
    buf = [None] * rows

    def build():
        cells = []
        for j, ab in enumerate(buf):
            if ab is not None:
                a, b = ab
                cells.extend((i, j + 1) for i in range(a + 1, b + 1))
        return shape_from_cells(cells)

    def rec(depth, la, lb, gap, touched0):
        if depth == rows:
            if touched0:
                yield build()
            return
        buf[depth] = None
        yield from rec(depth + 1, la, lb, True, touched0)
        if gap:
            lim = min(la, cols)
            for a in range(cols):
                for b in range(a + 1, lim + 1):
                    buf[depth] = (a, b)
                    yield from rec(depth + 1, a, b, False, touched0 or a == 0)
        else:
            for a in range(la + 1):
                for b in range(a + 1, lb + 1):
                    buf[depth] = (a, b)
                    yield from rec(depth + 1, a, b, False, touched0 or a == 0)
        buf[depth] = None

    for a in range(cols):
        for b in range(a + 1, cols + 1):
            buf[0] = (a, b)
            yield from rec(1, a, b, False, a == 0)
        buf[0] = None
