"""Brute-force truncated graded-module arithmetic over exact rationals.

Algebras and modules are stored as labelled bases per degree plus the
degree-1 multiplication action.  All algebras built here are monomial in
nature (monomial quotients and semigroup rings), so a degree-1 generator
sends a basis element to a single basis element or to zero; the action is
stored as index maps and materialized as matrices only on demand.

Degreewise Hom into the ring is solved by seed propagation: over a
standard graded ring a graded hom family is determined by its component
in the lowest supported degree, because multiplication by the degree-1
part of the ring maps each graded piece onto the next.  Starting from the
full space of candidate lowest components, each degree step both defines
the next component and cuts the candidate space by the compatibility
equations.  The computed dimension is exact when the module's support and
the ring's support are provably enclosed in their windows; otherwise it
is an upper bound and the report says so.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional

from . import toric as toric_mod
from .errors import EmptyWindow, WindowTooSmall
from .linalg import nullspace_int


@dataclass(frozen=True)
class TruncatedAlgebra:
    """Standard graded algebra truncated to degrees 0..top.

    basis[k] lists the degree k monomial labels; action[k][g][j] gives the
    index in basis[k+1] of (generator g) * (basis element j), or None when
    the product is zero.  artinian means every degree beyond the recorded
    ones is provably zero, so dimensions are known at all integers.
    """

    top: int
    basis: tuple[tuple, ...]
    action: tuple[tuple[tuple[Optional[int], ...], ...], ...]
    artinian: bool
    name: str = ""

    def __post_init__(self):
        _check_algebra(self)

    @property
    def ngens(self):
        return len(self.basis[1]) if self.top >= 1 else 0

    def dim(self, k):
        """Dimension of the degree k piece, or None when truncated away."""
        if k < 0:
            return 0
        if k <= self.top:
            return len(self.basis[k])
        return 0 if self.artinian else None

    def dims(self):
        return tuple(len(b) for b in self.basis)

    def action_matrix(self, g, k):
        """Multiplication by generator g as a rational matrix on degree k."""
        rows = len(self.basis[k + 1])
        cols = len(self.basis[k])
        mat = [[Fraction(0)] * cols for _ in range(rows)]
        for j, target in enumerate(self.action[k][g]):
            if target is not None:
                mat[target][j] += 1
        return mat


def _vanishes_above(alg):
    """First degree from which the algebra is provably zero, or None."""
    if not alg.artinian:
        return None
    k0 = alg.top + 1
    while k0 >= 1 and not alg.basis[k0 - 1]:
        k0 -= 1
    return k0


def _check_algebra(alg):
    if alg.top < 0 or len(alg.basis) != alg.top + 1:
        raise ValueError("basis levels must cover degrees 0..top")
    if len(alg.basis[0]) != 1:
        raise ValueError("degree 0 must be one-dimensional")
    for k in range(alg.top):
        hit = set()
        for g in range(alg.ngens):
            for j, target in enumerate(alg.action[k][g]):
                if target is not None:
                    hit.add(target)
        if hit != set(range(len(alg.basis[k + 1]))):
            raise ValueError(
                f"degree {k + 1} is not spanned by degree-1 products; "
                f"the algebra is not standard graded")
    for k in range(alg.top - 1):
        for g in range(alg.ngens):
            for h in range(g + 1, alg.ngens):
                for j in range(len(alg.basis[k])):
                    gj = alg.action[k][g][j]
                    hj = alg.action[k][h][j]
                    via_g = alg.action[k + 1][h][gj] if gj is not None else None
                    via_h = alg.action[k + 1][g][hj] if hj is not None else None
                    if via_g != via_h:
                        raise ValueError(
                            f"generator actions do not commute at degree {k}")
    return alg


@dataclass(frozen=True)
class TruncatedModule:
    """Graded module truncated to the window [lo, hi].

    Degrees below lo are provably zero (windows start at the module's
    vanishing bound); complete means degrees above hi are provably zero
    too.  basis and action are indexed by k - lo, with action defined for
    lo <= k < hi.  Every module built here is generated by its lowest
    nonzero component, which the construction checks.
    """

    parent: TruncatedAlgebra
    lo: int
    hi: int
    basis: tuple[tuple, ...]
    action: tuple[tuple[tuple[Optional[int], ...], ...], ...]
    complete: bool
    shift_tag: int = 0

    def __post_init__(self):
        _check_module(self)

    def dim(self, k):
        if k < self.lo:
            return 0
        if k <= self.hi:
            return len(self.basis[k - self.lo])
        return 0 if self.complete else None

    def dims(self):
        """Mapping degree -> dimension over the window."""
        return {self.lo + off: len(b) for off, b in enumerate(self.basis)}

    def support(self):
        return [self.lo + off for off, b in enumerate(self.basis) if b]


def _check_module(mod):
    if mod.hi < mod.lo or len(mod.basis) != mod.hi - mod.lo + 1:
        raise ValueError("module basis levels must cover the window")
    if len(mod.action) != mod.hi - mod.lo:
        raise ValueError("module action levels must cover the window steps")
    started = False
    for off in range(len(mod.basis) - 1):
        if not started and not mod.basis[off]:
            continue
        started = True
        hit = set()
        for g in range(mod.parent.ngens):
            for j, target in enumerate(mod.action[off][g]):
                if target is not None:
                    hit.add(target)
        if hit != set(range(len(mod.basis[off + 1]))):
            raise ValueError(
                f"degree {mod.lo + off + 1} is not generated from the "
                f"lowest component; hom propagation would be unsound")
    return mod


# ---------------------------------------------------------------------------
# constructors


def _monomials(nvars, degree):
    """Exponent vectors of the given total degree, in a fixed order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return sorted(out, reverse=True)


def _divisible(mono, rel):
    return all(m >= r for m, r in zip(mono, rel))


def monomial_str(names, exps):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def algebra_from_monomial_quotient(names, relations, n_max):
    """Quotient of a polynomial ring by monomial relations, to degree n_max.

    The degree k basis is every degree k monomial not divisible by a
    relation; multiplication reduces to zero when a relation divides.
    """
    names = list(names)
    if not names:
        raise ValueError("need at least one variable")
    if n_max < 1:
        raise ValueError("truncation degree must be at least 1")
    nvars = len(names)
    rels = [tuple(int(x) for x in rel) for rel in relations]
    for rel in rels:
        if len(rel) != nvars or any(x < 0 for x in rel) or sum(rel) == 0:
            raise ValueError(f"bad relation exponent vector {rel}")
    basis = []
    for k in range(n_max + 1):
        basis.append(tuple(m for m in _monomials(nvars, k)
                           if not any(_divisible(m, r) for r in rels)))
    index = [{m: i for i, m in enumerate(level)} for level in basis]
    gens = basis[1]
    action = []
    for k in range(n_max):
        per_gen = []
        for g in gens:
            row = []
            for m in basis[k]:
                prod = tuple(a + b for a, b in zip(m, g))
                row.append(index[k + 1].get(prod))
            per_gen.append(tuple(row))
        action.append(tuple(per_gen))
    rel_names = ", ".join(monomial_str(names, r) for r in rels)
    name = f"K[{','.join(names)}]" + (f"/({rel_names})" if rels else "")
    return TruncatedAlgebra(n_max, tuple(basis), tuple(action),
                            artinian=not basis[n_max], name=name)


def algebra_from_toric(pres, n_max, cap=toric_mod.DEFAULT_POINT_CAP):
    """Semigroup ring of a toric presentation, truncated to degree n_max.

    Basis labels are the semigroup elements per degree; multiplication is
    vector addition and never vanishes.
    """
    if n_max < 1:
        raise ValueError("truncation degree must be at least 1")
    cens = toric_mod.census(pres, n_max, cap=cap, keep_points=True)
    basis = cens.points
    index = [{p: i for i, p in enumerate(level)} for level in basis]
    action = []
    for k in range(n_max):
        per_gen = []
        for g in basis[1]:
            row = []
            for p in basis[k]:
                row.append(index[k + 1][tuple(a + b for a, b in zip(p, g))])
            per_gen.append(tuple(row))
        action.append(tuple(per_gen))
    name = f"toric[{pres.nrows}x{pres.ncols}]"
    return TruncatedAlgebra(n_max, basis, tuple(action), artinian=False,
                            name=name)


def segre_algebra(a, b):
    """Degreewise product algebra on the common window.

    Basis labels are pairs, row-major in the factor bases; generators are
    all pairs of degree-1 generators.
    """
    top = min(a.top, b.top)
    basis = [tuple((p, q) for p in a.basis[k] for q in b.basis[k])
             for k in range(top + 1)]
    action = []
    for k in range(top):
        nb_now = len(b.basis[k])
        nb_next = len(b.basis[k + 1])
        per_gen = []
        for ga in range(len(a.basis[1])):
            for gb in range(len(b.basis[1])):
                row = []
                for ia in range(len(a.basis[k])):
                    ta = a.action[k][ga][ia]
                    for ib in range(nb_now):
                        tb = b.action[k][gb][ib]
                        if ta is None or tb is None:
                            row.append(None)
                        else:
                            row.append(ta * nb_next + tb)
                per_gen.append(tuple(row))
        action.append(tuple(per_gen))
    van_a, van_b = _vanishes_above(a), _vanishes_above(b)
    artinian = any(v is not None and v <= top + 1 for v in (van_a, van_b))
    return TruncatedAlgebra(top, tuple(basis), tuple(action), artinian,
                            name=f"{a.name} # {b.name}")


def free_module(alg):
    """The algebra as the rank one free module over itself."""
    return TruncatedModule(parent=alg, lo=0, hi=alg.top, basis=alg.basis,
                           action=alg.action, complete=alg.artinian,
                           shift_tag=0)


def shift_module(mod, a):
    """Twist by a: degree k of the result is degree k + a of the input."""
    return replace(mod, lo=mod.lo - a, hi=mod.hi - a,
                   shift_tag=mod.shift_tag + a)


def segre_module(m, n, parent=None):
    """Degreewise product module over the product of the parents.

    The window is the intersection of the factor windows; the result is
    complete when either factor is complete with support inside the
    intersection.
    """
    lo = max(m.lo, n.lo)
    hi = min(m.hi, n.hi)
    if lo > hi:
        raise EmptyWindow(
            f"windows [{m.lo}, {m.hi}] and [{n.lo}, {n.hi}] do not overlap")
    if parent is None:
        parent = segre_algebra(m.parent, n.parent)
    basis = [tuple((p, q)
                   for p in m.basis[k - m.lo] for q in n.basis[k - n.lo])
             for k in range(lo, hi + 1)]
    nbg = len(n.parent.basis[1])
    action = []
    for k in range(lo, hi):
        nb_next = len(n.basis[k + 1 - n.lo])
        per_gen = []
        for ga in range(len(m.parent.basis[1])):
            for gb in range(nbg):
                row = []
                for im in range(len(m.basis[k - m.lo])):
                    tm = m.action[k - m.lo][ga][im]
                    for jn in range(len(n.basis[k - n.lo])):
                        tn = n.action[k - n.lo][gb][jn]
                        if tm is None or tn is None:
                            row.append(None)
                        else:
                            row.append(tm * nb_next + tn)
                per_gen.append(tuple(row))
        action.append(tuple(per_gen))

    def covers(factor):
        if not factor.complete:
            return False
        return all(k in range(lo, hi + 1) for k in factor.support())

    return TruncatedModule(parent=parent, lo=lo, hi=hi, basis=tuple(basis),
                           action=tuple(action),
                           complete=covers(m) or covers(n), shift_tag=0)


# ---------------------------------------------------------------------------
# graded Hom into the ring


@dataclass(frozen=True)
class HomWindowReport:
    """Dimensions of degree-i hom families for i in [i_lo, i_hi].

    dims[i - i_lo] is the solution dimension (None when the truncation
    made degree i unmodelable), squares counts the consistency-checked
    propagation steps, and clipped records whether the window boundary
    cut the computation.  exact means both the module support and the
    ring support were provably enclosed, so every dimension equals the
    actual graded Hom dimension; inexact dimensions are upper bounds.
    """

    i_lo: int
    i_hi: int
    dims: tuple[Optional[int], ...]
    squares: tuple[int, ...]
    clipped: tuple[bool, ...]
    exact: bool

    def dim_at(self, i):
        return self.dims[i - self.i_lo]

    def nonzero(self):
        return {self.i_lo + off: d for off, d in enumerate(self.dims) if d}

    def certified(self, i):
        """True when the dimension at degree i is provably exact.

        A degree is certified when its computation never touched the
        truncation boundary: it ended through a provably zero codomain, a
        full-rank cut, or the visible end of the module support.
        """
        off = i - self.i_lo
        return self.dims[off] is not None and not self.clipped[off]


def _scatter(index_map, col, out_dim):
    out = [0] * out_dim
    for src, dst in enumerate(index_map):
        if dst is not None and col[src]:
            out[dst] += col[src]
    return out


def _hom_dim_at(mod, i):
    """(dimension or None, squares checked, clipped) for one hom degree."""
    alg = mod.parent
    k0 = mod.support()[0]
    d_cod = alg.dim(k0 + i)
    if d_cod is None:
        return None, 0, True
    if d_cod == 0:
        # zero codomain at the generating degree forces the zero family
        return 0, 0, False
    d_dom = mod.dim(k0)
    # seeds: one per entry of a d_cod x d_dom matrix;
    # phi[s][j] is the column over the codomain basis, stored as int lists
    phi = []
    for col in range(d_dom):
        for row in range(d_cod):
            mat = [[0] * d_cod for _ in range(d_dom)]
            mat[col][row] = 1
            phi.append(mat)
    k = k0
    squares = 0
    clipped = False
    while phi:
        d_next = mod.dim(k + 1)
        c_next = alg.dim(k + i + 1)
        if d_next is None or c_next is None:
            clipped = True
            break
        if d_next == 0 and c_next == 0:
            break
        dom_now = mod.dim(k)
        tact = alg.action[k + i] if 0 <= k + i < len(alg.action) else None
        mact = mod.action[k - mod.lo] if k - mod.lo < len(mod.action) else None
        # mact is absent only at the window top with d_next == 0 known,
        # where every product is provably zero

        def target(g, j):
            return mact[g][j] if mact is not None else None

        # defining pair for each target basis element: first (g, j) hit
        defining = {}
        for g in range(alg.ngens):
            for j in range(dom_now):
                tgt = target(g, j)
                if tgt is not None and tgt not in defining:
                    defining[tgt] = (g, j)
        # scattered image of every (generator, column) pair, per seed
        image = {}
        for g in range(alg.ngens):
            tmap = tact[g] if tact is not None else ()
            for j in range(dom_now):
                image[g, j] = [_scatter(tmap, phi[s][j], c_next)
                               for s in range(len(phi))]
        nxt = [[image[defining[tgt]][s] for tgt in range(d_next)]
               for s in range(len(phi))]
        # compatibility equations from every non-defining pair
        rows = set()
        for (g, j), vecs in image.items():
            tgt = target(g, j)
            if tgt is not None and defining[tgt] == (g, j):
                continue
            for r in range(c_next):
                row = tuple(vecs[s][r] - (nxt[s][tgt][r] if tgt is not None else 0)
                            for s in range(len(phi)))
                if any(row):
                    rows.add(row)
        squares += 1
        if rows:
            combos = nullspace_int(sorted(rows), len(phi))
            if not combos:
                return 0, squares, False
            phi = [_combine(phi, c) for c in combos]
            nxt = [_combine(nxt, c) for c in combos]
        if d_next == 0:
            break
        phi = nxt
        k += 1
    return len(phi), squares, clipped


def _combine(families, coeffs):
    out = [[0] * len(col) for col in families[0]]
    for c, fam in zip(coeffs, families):
        if not c:
            continue
        for col_out, col in zip(out, fam):
            for idx, x in enumerate(col):
                if x:
                    col_out[idx] += c * x
    return out


def hom_window(mod, i_lo, i_hi):
    """Degreewise dimensions of hom families raising degree by i.

    A family assigns to each degree k a map from the module piece to the
    ring piece k + i, commuting with all degree-1 multiplications; over a
    standard graded ring these are exactly the graded hom components.
    """
    if i_lo > i_hi:
        raise ValueError(f"hom window {i_lo}..{i_hi} is empty")
    if not mod.support():
        raise WindowTooSmall(
            f"module window [{mod.lo}, {mod.hi}] has no nonzero component")
    dims, squares, clipped = [], [], []
    for i in range(i_lo, i_hi + 1):
        d, sq, cl = _hom_dim_at(mod, i)
        dims.append(d)
        squares.append(sq)
        clipped.append(cl)
    exact = mod.complete and mod.parent.artinian and not any(clipped)
    return HomWindowReport(i_lo, i_hi, tuple(dims), tuple(squares),
                           tuple(clipped), exact)


# ---------------------------------------------------------------------------
# friendliness witness


@dataclass(frozen=True)
class FriendlinessReport:
    """Comparison of the dual of a product with the product of the duals.

    left_dims are the hom dimensions of (R shifted by a) # (S shifted by
    b) into the product ring; right_dims are the plain dimensions of
    (R shifted by -a) # (S shifted by -b), which is the product of the
    factor duals because duals of shifted free modules are the opposite
    shifts.  A mismatch on exact data certifies that the two sides are
    not isomorphic; a match is consistency evidence only.
    """

    i_lo: int
    i_hi: int
    shifts: tuple[int, int]
    left_dims: tuple[Optional[int], ...]
    right_dims: tuple[Optional[int], ...]
    left_squares: tuple[int, ...]
    exact: bool
    compared: tuple[int, ...]
    mismatches: tuple[int, ...]
    verdict: str
    ring_names: tuple[str, str]

    def left_nonzero(self):
        return {self.i_lo + o: d for o, d in enumerate(self.left_dims) if d}

    def right_nonzero(self):
        return {self.i_lo + o: d for o, d in enumerate(self.right_dims) if d}


MIN_INFORMATIVE_STEPS = 2


def friendliness_witness(ring1, ring2, shift1, shift2, i_lo=-6, i_hi=6,
                         min_steps=MIN_INFORMATIVE_STEPS):
    """Compare duals of a twisted product against the product of duals.

    On inexact (truncated) data the hom side of degree i only enters the
    verdict when at least min_steps propagation steps were consistency
    checked; degrees near the window boundary are reported but not
    compared.
    """
    t = segre_algebra(ring1, ring2)
    twisted = segre_module(shift_module(free_module(ring1), shift1),
                           shift_module(free_module(ring2), shift2),
                           parent=t)
    hom = hom_window(twisted, i_lo, i_hi)
    dual = segre_module(shift_module(free_module(ring1), -shift1),
                        shift_module(free_module(ring2), -shift2),
                        parent=t)
    right = tuple(dual.dim(i) for i in range(i_lo, i_hi + 1))
    compared, mismatches, certified_mismatch = [], [], False
    for off, i in enumerate(range(i_lo, i_hi + 1)):
        left_ok = hom.certified(i) or (hom.dims[off] is not None
                                       and hom.squares[off] >= min_steps)
        right_ok = right[off] is not None
        if left_ok and right_ok:
            compared.append(i)
            if hom.dims[off] != right[off]:
                mismatches.append(i)
                # differing dimensions at one provably exact degree
                # already rule out an isomorphism
                certified_mismatch |= hom.certified(i)
    exact = hom.exact and dual.complete
    if mismatches:
        verdict = "not_friendly_certified" if certified_mismatch else "inconclusive"
    elif compared:
        verdict = "consistent"
    else:
        verdict = "inconclusive"
    return FriendlinessReport(i_lo, i_hi, (shift1, shift2), hom.dims, right,
                              hom.squares, exact, tuple(compared),
                              tuple(mismatches), verdict,
                              (ring1.name, ring2.name))


# ---------------------------------------------------------------------------
# ring spec parsing for the CLI: "x:3" or "x,y:2 0,0 2"


def parse_ring_spec(spec):
    """(names, relations) from a compact text form.

    Variables before the colon, comma separated; relations after it,
    comma separated, each a whitespace separated exponent vector.  A
    single variable may abbreviate x^3 to just "3".
    """
    if ":" in spec:
        var_part, rel_part = spec.split(":", 1)
    else:
        var_part, rel_part = spec, ""
    names = [v.strip() for v in var_part.split(",") if v.strip()]
    if not names:
        raise ValueError(f"ring spec {spec!r} names no variables")
    relations = []
    for chunk in rel_part.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            exps = tuple(int(tok) for tok in chunk.split())
        except ValueError:
            raise ValueError(f"bad relation {chunk!r} in ring spec {spec!r}") from None
        relations.append(exps)
    for rel in relations:
        if len(rel) != len(names):
            raise ValueError(
                f"relation {rel} does not match the {len(names)} variables "
                f"in ring spec {spec!r}")
    return names, relations
