"""Exact linear algebra over the rationals (and other exact fields).

Dense routines take matrices as lists of row lists.  The integer paths keep
rows primitive (content-stripped) so entries stay small; everything is
deterministic: pivots are always the first usable column, rows in input order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _row_content(row):
    g = 0
    for a in row:
        if a:
            g = gcd(g, abs(a))
            if g == 1:
                return 1
    return g


def make_primitive(row):
    g = _row_content(row)
    if g > 1:
        return [a // g for a in row]
    return list(row)


def int_rows_from_fractions(rows):
    """Scale each Fraction row to a primitive integer row."""
    out = []
    for row in rows:
        den = 1
        for a in row:
            if isinstance(a, Fraction):
                den = den * a.denominator // gcd(den, a.denominator)
        ints = [int(a * den) if isinstance(a, Fraction) else a * den for a in row]
        out.append(make_primitive(ints))
    return out


_BIG = 1 << 256


class IntRowBasis:
    """Incremental row space of integer rows with optional combination tracking.

    reduce() returns the residual of a row against the current pivots;
    add() inserts the residual as a new pivot if non-zero.  When tracking,
    every stored pivot knows its expression over the originally added rows,
    and a row that reduces to zero yields its combination.
    """

    def __init__(self, ncols: int, track: bool = False):
        self.ncols = ncols
        self.track = track
        self.pivot_cols: list[int] = []
        self.rows: list[list[int]] = []
        self.exprs: list[dict] = []  # pivot index -> {orig_id: Fraction}
        self.n_added = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, row):
        """Return (residual row, alpha, combo) with alpha*input = sum combo + residual."""
        res = list(row)
        alpha = 1
        combo = {}  # pivot position -> integer coefficient (at current alpha scale)
        for k, (col, prow) in enumerate(zip(self.pivot_cols, self.rows)):
            a = res[col]
            if a == 0:
                continue
            b = prow[col]
            g = gcd(abs(a), abs(b))
            s, t = b // g, a // g
            if s < 0:
                s, t = -s, -t
            if s != 1:
                res = [s * x for x in res]
                alpha *= s
                for kk in combo:
                    combo[kk] *= s
            for i in range(self.ncols):
                if prow[i]:
                    res[i] -= t * prow[i]
            combo[k] = combo.get(k, 0) + t
            if max(map(abs, res), default=0) > _BIG:
                g2 = _row_content(res)
                if g2 > 1:
                    res = [x // g2 for x in res]
                    alpha = Fraction(alpha, g2)
                    for kk in combo:
                        combo[kk] = Fraction(combo[kk], g2)
        return res, alpha, combo

    def residual(self, row):
        res, _, _ = self._reduce(row)
        return make_primitive(res)

    def contains(self, row) -> bool:
        res, _, _ = self._reduce(row)
        return not any(res)

    def add(self, row, orig_id=None):
        """Insert row; returns (is_new, combo_over_original_ids).

        combo is only computed when tracking and the row is dependent:
        row == sum combo[orig_id] * original_row[orig_id].
        """
        res, alpha, combo = self._reduce(row)
        oid = orig_id if orig_id is not None else self.n_added
        self.n_added += 1
        if any(res):
            # res = alpha*row - sum combo[k]*rows[k]; store res/g primitive.
            g = _row_content(res)
            if g > 1:
                res = [x // g for x in res]
            col = next(i for i, x in enumerate(res) if x)
            if self.track:
                expr = {oid: Fraction(alpha, g)}
                for k, c in combo.items():
                    cf = Fraction(c, g)
                    for o, v in self.exprs[k].items():
                        expr[o] = expr.get(o, Fraction(0)) - cf * v
                self.exprs.append({o: v for o, v in expr.items() if v})
            self.pivot_cols.append(col)
            self.rows.append(res)
            return True, None
        if self.track:
            # alpha*row = sum combo_k * pivot_k; expand pivots to originals
            out = {}
            for k, c in combo.items():
                cf = Fraction(c) / alpha
                for o, v in self.exprs[k].items():
                    out[o] = out.get(o, Fraction(0)) + cf * v
            return False, {o: v for o, v in out.items() if v}
        return False, None


def rank_int(rows, ncols=None) -> int:
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    basis = IntRowBasis(ncols)
    for r in rows:
        basis.add(r)
    return basis.rank


def rref(mat):
    """Reduced row echelon form over Fractions; returns (rows, pivot_cols)."""
    rows = [[Fraction(x) for x in row] for row in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def nullspace(mat, ncols=None):
    """Basis of {x : mat @ x = 0} as Fraction vectors (deterministic)."""
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    if not mat:
        return [
            [Fraction(1) if j == i else Fraction(0) for j in range(ncols)]
            for i in range(ncols)
        ]
    rows, pivots = rref(mat)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def rank(mat) -> int:
    if not mat:
        return 0
    return len(rref(mat)[0])


def solve(mat, rhs):
    """One solution of mat @ x = rhs, or None if inconsistent."""
    if not mat:
        return None if any(rhs) else []
    ncols = len(mat[0])
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    rows, pivots = rref(aug)
    for r, row in enumerate(rows):
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = rows[r][ncols]
    return x


def mat_mul(a, b):
    if not a or not b:
        return []
    nb = len(b[0])
    out = []
    for row in a:
        acc = [Fraction(0)] * nb
        for k, v in enumerate(row):
            if v:
                brow = b[k]
                for j in range(nb):
                    if brow[j]:
                        acc[j] += v * brow[j]
        out.append(acc)
    return out
