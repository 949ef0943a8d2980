"""Exact linear algebra over the integers and rationals.

Everything works on plain lists of Python ints or Fractions.  Matrices at
desk scale (a few hundred rows) are the target, so clarity and exactness
win over asymptotics throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def transpose(rows):
    return [list(col) for col in zip(*rows)]


# ---------------------------------------------------------------------------
# rational elimination


def frac_rref(rows):
    """Reduced row echelon form over the rationals.

    Returns (rref_rows, pivot_columns); the input is not modified.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def frac_rank(rows):
    if not rows:
        return 0
    return len(frac_rref(rows)[1])


def frac_nullspace(rows, ncols):
    """Basis of {x in Q^ncols : rows @ x = 0}."""
    if not rows:
        rref, pivots = [], []
    else:
        rref, pivots = frac_rref(rows)
    in_pivots = set(pivots)
    basis = []
    for free in range(ncols):
        if free in in_pivots:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][free]
        basis.append(v)
    return basis


def solve_right(a_rows, b):
    """One rational solution x of A x = b, or None if inconsistent.

    Free coordinates are set to zero, which makes the answer deterministic.
    """
    if not a_rows:
        return None
    n = len(a_rows[0])
    aug = [list(row) + [bv] for row, bv in zip(a_rows, b)]
    rref, pivots = frac_rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = rref[r][n]
    return x


# ---------------------------------------------------------------------------
# integer elimination


def _reduce_tail(row, pivot_row, c):
    q = row[c] // pivot_row[c]
    if q:
        for j in range(len(row)):
            row[j] -= q * pivot_row[j]


def hermite_rows(rows, transform=False):
    """Row Hermite normal form of an integer matrix.

    Pivots are positive, entries above a pivot lie in [0, pivot), zero rows
    sink to the bottom.  The rows of the result span the same lattice as
    the input rows.  With transform=True also returns a unimodular U with
    U @ input == hnf.
    """
    h = [list(map(int, row)) for row in rows]
    nrows = len(h)
    ncols = len(h[0]) if h else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)] if transform else None

    def rowop_swap(i, j):
        h[i], h[j] = h[j], h[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def rowop_sub(i, q, j):
        # row_i -= q * row_j
        if q:
            h[i] = [a - q * b for a, b in zip(h[i], h[j])]
            if u is not None:
                u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def rowop_neg(i):
        h[i] = [-a for a in h[i]]
        if u is not None:
            u[i] = [-a for a in u[i]]

    r = 0
    for c in range(ncols):
        # gcd out column c below row r
        while True:
            live = [i for i in range(r, nrows) if h[i][c] != 0]
            if not live:
                break
            i0 = min(live, key=lambda i: abs(h[i][c]))
            rowop_swap(r, i0)
            done = True
            for i in range(r + 1, nrows):
                if h[i][c] != 0:
                    rowop_sub(i, h[i][c] // h[r][c], r)
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if r < nrows and h[r][c] != 0:
            if h[r][c] < 0:
                rowop_neg(r)
            for i in range(r):
                rowop_sub(i, h[i][c] // h[r][c], r)
            r += 1
            if r == nrows:
                break
    if transform:
        return h, u
    return h


def integer_kernel(a_rows, canonical=True):
    """Basis of ker(A) cap Z^n for an integer matrix A.

    The kernel is tracked through unimodular row operations on the
    transpose, so the returned lattice is saturated: Z^n modulo it is
    torsion free.  With canonical=True the basis is put in row Hermite
    form with each leading entry positive, giving a reproducible answer.
    """
    ncols = len(a_rows[0])
    bt = transpose(a_rows)
    hnf, u = hermite_rows(bt, transform=True)
    kernel = [u[i] for i in range(ncols) if all(x == 0 for x in hnf[i])]
    if canonical and kernel:
        kernel = [row for row in hermite_rows(kernel) if any(row)]
    return [list(v) for v in kernel]


def smith_diagonal(a_rows):
    """Elementary divisors d1 | d2 | ... (positive, nonzero) of A."""
    a = [list(map(int, row)) for row in a_rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0

    def col_sub(j, q, k):
        if q:
            for i in range(nrows):
                a[i][j] -= q * a[i][k]

    def col_swap(j, k):
        for i in range(nrows):
            a[i][j], a[i][k] = a[i][k], a[i][j]

    t = 0
    while t < min(nrows, ncols):
        while True:
            entries = [(abs(a[i][j]), i, j)
                       for i in range(t, nrows) for j in range(t, ncols)
                       if a[i][j] != 0]
            if not entries:
                return [abs(a[i][i]) for i in range(t) if a[i][i] != 0]
            _, pi, pj = min(entries)
            a[t], a[pi] = a[pi], a[t]
            col_swap(t, pj)
            # one reduction pass; leftover remainders are strictly smaller
            # than the pivot, so re-selecting the minimum terminates
            for i in range(nrows):
                if i != t and a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(ncols):
                if j != t and a[t][j] != 0:
                    col_sub(j, a[t][j] // a[t][t], t)
            clear = all(a[i][t] == 0 for i in range(nrows) if i != t) and \
                all(a[t][j] == 0 for j in range(ncols) if j != t)
            if clear:
                break
        # force divisibility of the remaining block by a[t][t]
        bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                    if a[i][j] % a[t][t] != 0), None)
        if bad is not None:
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
            continue
        t += 1
    diag = [abs(a[i][i]) for i in range(min(nrows, ncols)) if a[i][i] != 0]
    return diag


def int_row_echelon(rows):
    """Integer row echelon by cross multiplication, gcd-normalized rows.

    Returns (echelon_rows, pivot_columns); rows of the result span the same
    rational row space as the input.
    """
    ech = []
    pivots = []
    for row in rows:
        row = list(map(int, row))
        for prow, pc in zip(ech, pivots):
            if row[pc] != 0:
                f, g = prow[pc], row[pc]
                row = [f * a - g * b for a, b in zip(row, prow)]
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is None:
            continue
        g = 0
        for x in row:
            g = gcd(g, x)
        if g > 1:
            row = [x // g for x in row]
        if row[lead] < 0:
            row = [-x for x in row]
        at = next((idx for idx, pc in enumerate(pivots) if pc > lead), len(pivots))
        ech.insert(at, row)
        pivots.insert(at, lead)
    return ech, pivots


def nullspace_int(rows, ncols):
    """Integer basis of the rational nullspace {x : rows @ x = 0}.

    Back-substitution over the rationals with denominators cleared per
    vector.  The basis spans ker over Q; it is not normalized further.
    """
    rows = [r for r in rows if any(r)]
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    ech, pivots = int_row_echelon(rows)
    in_pivots = set(pivots)
    basis = []
    for free in range(ncols):
        if free in in_pivots:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r in range(len(ech) - 1, -1, -1):
            pc = pivots[r]
            s = sum((ech[r][j] * v[j] for j in range(pc + 1, ncols) if v[j]),
                    start=Fraction(0))
            v[pc] = -s / ech[r][pc]
        denom = 1
        for x in v:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        basis.append([int(x * denom) for x in v])
    return basis
