"""
Field-agnostic sparse exact linear algebra.

Matrices are stored as {(row, col): entry} with structurally nonzero entries
only.  Entries may be any exact field elements supporting +, -, *, /, bool and
equality (Fraction and RationalFunction both qualify); each matrix carries its
multiplicative unit so code never has to guess the field.

Subspaces are kept in reduced column echelon form, which is a canonical
representative: two subspaces are equal iff their stored bases are equal.
Elimination is plain sparse Gaussian elimination with a sparsity-aware pivot
choice; the canonicalizing scalar arithmetic keeps expression swell in check.
"""

from __future__ import annotations

from fractions import Fraction


class ShapeMismatch(ValueError):
    pass


def _term_count(x):
    f = getattr(x, "term_count", None)
    return f() if f is not None else 1


class ExactMatrix:
    __slots__ = ("nrows", "ncols", "entries", "one")

    def __init__(self, nrows, ncols, entries=None, one=Fraction(1)):
        self.nrows = nrows
        self.ncols = ncols
        self.one = one
        e = {}
        if entries:
            for k, v in entries.items():
                if v:
                    e[k] = v
        self.entries = e

    # -- constructors

    @staticmethod
    def identity(n, one=Fraction(1)):
        return ExactMatrix(n, n, {(i, i): one for i in range(n)}, one)

    @staticmethod
    def zeros(nrows, ncols, one=Fraction(1)):
        return ExactMatrix(nrows, ncols, None, one)

    @staticmethod
    def from_columns(nrows, cols, one=Fraction(1)):
        e = {}
        for j, col in enumerate(cols):
            for i, v in col.items():
                if v:
                    e[(i, j)] = v
        return ExactMatrix(nrows, len(cols), e, one)

    # -- views

    def column(self, j):
        return {r: v for (r, c), v in self.entries.items() if c == j}

    def columns(self):
        cols = [dict() for _ in range(self.ncols)]
        for (r, c), v in self.entries.items():
            cols[c][r] = v
        return cols

    def rows(self):
        rows = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def transpose(self):
        return ExactMatrix(
            self.ncols, self.nrows, {(c, r): v for (r, c), v in self.entries.items()}, self.one
        )

    def copy(self):
        return ExactMatrix(self.nrows, self.ncols, dict(self.entries), self.one)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, frozenset(self.entries.items())))

    # -- arithmetic

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("matrix addition shape mismatch")
        e = dict(self.entries)
        for k, v in other.entries.items():
            w = e.get(k)
            w = v if w is None else w + v
            if w:
                e[k] = w
            else:
                e.pop(k, None)
        out = ExactMatrix.zeros(self.nrows, self.ncols, self.one)
        out.entries = e
        return out

    def __neg__(self):
        out = ExactMatrix.zeros(self.nrows, self.ncols, self.one)
        out.entries = {k: -v for k, v in self.entries.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return ExactMatrix.zeros(self.nrows, self.ncols, self.one)
        out = ExactMatrix.zeros(self.nrows, self.ncols, self.one)
        out.entries = {k: c * v for k, v in self.entries.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ShapeMismatch("matrix product shape mismatch")
            rows = self.rows()
            orows = other.rows()
            e = {}
            for i, row in enumerate(rows):
                acc = {}
                for k, a in row.items():
                    for j, b in orows[k].items():
                        v = acc.get(j)
                        v = a * b if v is None else v + a * b
                        if v:
                            acc[j] = v
                        else:
                            acc.pop(j, None)
                for j, v in acc.items():
                    e[(i, j)] = v
            out = ExactMatrix.zeros(self.nrows, other.ncols, self.one)
            out.entries = e
            return out
        return self.scale(other)

    def __pow__(self, n):
        if self.nrows != self.ncols:
            raise ShapeMismatch("power of a non-square matrix")
        out = ExactMatrix.identity(self.nrows, self.one)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def apply(self, vec):
        """Apply to a sparse column vector {row: entry}."""
        out = {}
        for (r, c), a in self.entries.items():
            b = vec.get(c)
            if b is not None:
                v = out.get(r)
                v = a * b if v is None else v + a * b
                if v:
                    out[r] = v
                else:
                    out.pop(r, None)
        return out

    def kron(self, other):
        e = {}
        for (r1, c1), a in self.entries.items():
            for (r2, c2), b in other.entries.items():
                e[(r1 * other.nrows + r2, c1 * other.ncols + c2)] = a * b
        return ExactMatrix(self.nrows * other.nrows, self.ncols * other.ncols, e, self.one)

    def map_entries(self, fn, one):
        """Entry-wise image under a field map (used for specialization)."""
        e = {}
        for k, v in self.entries.items():
            w = fn(v)
            if w:
                e[k] = w
        return ExactMatrix(self.nrows, self.ncols, e, one)

    # -- elimination

    def _row_echelon(self, want_transform=False):
        """Sparse row echelon; returns (pivot list [(row, col)], rows, transform)."""
        rows = self.rows()
        live = [i for i in range(self.nrows) if rows[i]]
        trans = None
        if want_transform:
            trans = [{i: self.one} for i in range(self.nrows)]
        pivots = []
        done = []
        while live:
            # pivot: sparsest row, then simplest entry in it
            bi = min(range(len(live)), key=lambda k: len(rows[live[k]]))
            i = live.pop(bi)
            row = rows[i]
            pc = min(row, key=lambda c: (_term_count(row[c]), c))
            pv = row[pc]
            if not (pv == self.one):
                inv = self.one / pv
                rows[i] = row = {c: inv * v for c, v in row.items()}
                if want_transform:
                    trans[i] = {c: inv * v for c, v in trans[i].items()}
            for j in list(live) + done:
                f = rows[j].get(pc)
                if f:
                    rj = rows[j]
                    for c, v in row.items():
                        w = rj.get(c)
                        w = -f * v if w is None else w - f * v
                        if w:
                            rj[c] = w
                        else:
                            rj.pop(c, None)
                    if want_transform:
                        tj, ti = trans[j], trans[i]
                        for c, v in ti.items():
                            w = tj.get(c)
                            w = -f * v if w is None else w - f * v
                            if w:
                                tj[c] = w
                            else:
                                tj.pop(c, None)
                    if j in live and not rj:
                        live.remove(j)
            pivots.append((i, pc))
            done.append(i)
        return pivots, rows, trans

    def rank(self):
        return len(self._row_echelon()[0])

    def kernel_basis(self):
        """Basis of {x : A x = 0} as sparse column vectors."""
        pivots, rows, _ = self._row_echelon()
        pivot_cols = {c: i for i, c in pivots}
        basis = []
        for c in range(self.ncols):
            if c in pivot_cols:
                continue
            vec = {c: self.one}
            for pc, pi in pivot_cols.items():
                v = rows[pi].get(c)
                if v:
                    vec[pc] = -v
            basis.append(vec)
        return basis

    def kernel(self):
        return Subspace(self.ncols, self.kernel_basis(), self.one)

    def column_space(self):
        return Subspace(self.nrows, self.columns(), self.one)

    def __repr__(self):
        return "ExactMatrix(%d x %d, %d nonzero)" % (self.nrows, self.ncols, len(self.entries))


def vstack(mats):
    one = mats[0].one
    ncols = mats[0].ncols
    e = {}
    off = 0
    for m in mats:
        if m.ncols != ncols:
            raise ShapeMismatch("vstack column mismatch")
        for (r, c), v in m.entries.items():
            e[(r + off, c)] = v
        off += m.nrows
    return ExactMatrix(off, ncols, e, one)


def hstack(mats):
    one = mats[0].one
    nrows = mats[0].nrows
    e = {}
    off = 0
    for m in mats:
        if m.nrows != nrows:
            raise ShapeMismatch("hstack row mismatch")
        for (r, c), v in m.entries.items():
            e[(r, c + off)] = v
        off += m.ncols
    return ExactMatrix(nrows, off, e, one)


class Subspace:
    """A subspace of the standard N-dimensional column space, canonical form.

    The basis is in reduced column echelon form: each basis vector has a pivot
    row (its minimal nonzero row), pivot entries are 1, pivot rows of other
    basis vectors are cleared, and vectors are sorted by pivot row.
    """

    __slots__ = ("ambient", "pivots", "one")

    def __init__(self, ambient, vectors=(), one=Fraction(1)):
        self.ambient = ambient
        self.one = one
        self.pivots = {}  # pivot row -> reduced vector
        for v in vectors:
            self.insert(v)

    def insert(self, vec):
        """Add one vector; returns True if the dimension grew."""
        vec = {r: v for r, v in vec.items() if v}
        # reduce against every existing pivot (each basis vector is already
        # clear of the other pivot rows, so one pass per pivot suffices)
        for p in sorted(set(vec) & set(self.pivots)):
            f = vec.get(p)
            if not f:
                continue
            for r, v in self.pivots[p].items():
                w = vec.get(r)
                w = -f * v if w is None else w - f * v
                if w:
                    vec[r] = w
                else:
                    vec.pop(r, None)
        if not vec:
            return False
        p = min(vec)
        c = vec[p]
        if not (c == self.one):
            inv = self.one / c
            vec = {r: inv * v for r, v in vec.items()}
        # clear row p from existing basis vectors
        for bv in self.pivots.values():
            f = bv.get(p)
            if f:
                for r, v in vec.items():
                    w = bv.get(r)
                    w = -f * v if w is None else w - f * v
                    if w:
                        bv[r] = w
                    else:
                        bv.pop(r, None)
        self.pivots[p] = vec
        return True

    @property
    def dim(self):
        return len(self.pivots)

    def basis(self):
        return [self.pivots[p] for p in sorted(self.pivots)]

    def basis_matrix(self):
        return ExactMatrix.from_columns(self.ambient, self.basis(), self.one)

    def contains(self, vec):
        return self.coordinates(vec) is not None

    def coordinates(self, vec):
        """Coordinates in the echelon basis, or None if not in the subspace."""
        vec = {r: v for r, v in vec.items() if v}
        order = sorted(self.pivots)
        coords = {}
        for idx, p in enumerate(order):
            c = vec.get(p)
            if c:
                coords[idx] = c
                for r, v in self.pivots[p].items():
                    w = vec.get(r)
                    w = -c * v if w is None else w - c * v
                    if w:
                        vec[r] = w
                    else:
                        vec.pop(r, None)
        if vec:
            return None
        return coords

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.pivots == other.pivots
        )

    def __le__(self, other):
        return all(other.contains(v) for v in self.basis())

    def sum(self, other):
        out = Subspace(self.ambient, self.basis(), self.one)
        for v in other.basis():
            out.insert(v)
        return out

    def intersect(self, other):
        """Intersection via the kernel of the stacked basis matrix."""
        a = self.basis()
        b = other.basis()
        if not a or not b:
            return Subspace(self.ambient, (), self.one)
        stacked = hstack([self.basis_matrix(), other.basis_matrix()])
        out = Subspace(self.ambient, (), self.one)
        for ker in stacked.kernel_basis():
            vec = {}
            for j, c in ker.items():
                if j < len(a):
                    for r, v in a[j].items():
                        w = vec.get(r)
                        w = c * v if w is None else w + c * v
                        if w:
                            vec[r] = w
                        else:
                            vec.pop(r, None)
            out.insert(vec)
        return out

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.ambient)


# ---------------------------------------------------------------------------
# univariate polynomials over the entry field (dense coefficient lists)


def poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def poly_add(p, r):
    out = list(p) + [None] * 0
    if len(r) > len(out):
        out, r = list(r), p
    for i, c in enumerate(r):
        out[i] = out[i] + c
    return poly_trim(out)


def poly_scale(p, c):
    return poly_trim([c * a for a in p])


def poly_mul(p, r):
    if not p or not r:
        return []
    zero = p[0] - p[0]
    out = [zero] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(r):
                if b:
                    out[i + j] = out[i + j] + a * b
    return poly_trim(out)


def poly_divmod(p, r):
    if not r:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    zero = r[-1] - r[-1]
    quot = [zero] * max(len(p) - len(r) + 1, 0)
    lead = r[-1]
    while p and len(p) >= len(r):
        d = len(p) - len(r)
        c = p[-1] / lead
        quot[d] = c
        for i, b in enumerate(r):
            p[d + i] = p[d + i] - c * b
        poly_trim(p)
    return poly_trim(quot), p


def poly_monic(p):
    if not p:
        return p
    lead = p[-1]
    return [c / lead for c in p]


def poly_gcd_monic(p, r):
    p, r = list(p), list(r)
    while r:
        p, r = r, poly_divmod(p, r)[1]
    return poly_monic(p)


def poly_lcm(p, r):
    if not p:
        return list(r)
    if not r:
        return list(p)
    g = poly_gcd_monic(p, r)
    return poly_monic(poly_mul(poly_divmod(p, g)[0], r))


def poly_derivative(p, one):
    return poly_trim([p[i] * _int_in_field(i, one) for i in range(1, len(p))])


def _int_in_field(n, one):
    zero = one - one
    out = zero
    for _ in range(n):
        out = out + one
    return out


def poly_is_squarefree(p, one):
    if len(p) <= 2:
        return True
    g = poly_gcd_monic(p, poly_derivative(p, one))
    return len(g) == 1


def poly_eval_scalar(p, x, one):
    zero = one - one
    out = zero
    for c in reversed(p):
        out = out * x + c
    return out


def poly_eval_matrix(p, m):
    out = ExactMatrix.zeros(m.nrows, m.ncols, m.one)
    ident = ExactMatrix.identity(m.nrows, m.one)
    for c in reversed(p):
        out = out * m + ident.scale(c)
    return out


# ---------------------------------------------------------------------------


def minimal_polynomial(m: ExactMatrix):
    """Monic minimal polynomial of a square matrix, as a coefficient list.

    Krylov spaces of standard basis vectors are accumulated until they span;
    the answer is the lcm of the local annihilators.
    """
    if m.nrows != m.ncols:
        raise ShapeMismatch("minimal polynomial of a non-square matrix")
    n = m.nrows
    one = m.one
    zero = one - one
    if n == 0:
        return [one]
    seen = Subspace(n, (), one)
    result = []
    for j in range(n):
        if seen.contains({j: one}):
            continue
        # local Krylov chain from e_j with coordinate tracking
        chain = Subspace(n, (), one)
        reps = {}  # pivot row -> coords (dict power -> coeff) of stored vector
        vec = {j: one}
        power = 0
        coeffs = None
        while True:
            cur = dict(vec)
            coords = {power: one}
            # reduce cur against chain, tracking coordinates
            while cur:
                p = min(cur)
                base = chain.pivots.get(p)
                if base is None:
                    break
                f = cur[p]
                for r, v in base.items():
                    w = cur.get(r)
                    w = -f * v if w is None else w - f * v
                    if w:
                        cur[r] = w
                    else:
                        cur.pop(r, None)
                for k, v in reps[p].items():
                    w = coords.get(k)
                    w = -f * v if w is None else w - f * v
                    if w:
                        coords[k] = w
                    else:
                        coords.pop(k, None)
            if not cur:
                # annihilator: sum coords[k] t^k = 0
                deg = max(coords)
                lead = coords[deg]
                coeffs = [zero] * (deg + 1)
                for k, v in coords.items():
                    coeffs[k] = v / lead
                break
            p = min(cur)
            c = cur[p]
            if not (c == one):
                inv = one / c
                cur = {r: inv * v for r, v in cur.items()}
                coords = {k: inv * v for k, v in coords.items()}
            chain.pivots[p] = cur
            reps[p] = coords
            vec = m.apply(vec)
            power += 1
        result = poly_lcm(result, coeffs)
        for v in chain.pivots.values():
            seen.insert(v)
        if seen.dim == n:
            break
    return poly_monic(result)


def commutant_dimension(gens):
    """dim of {X : Xg = gX for all g}, via the stacked Sylvester kernel."""
    sub = commutant_basis(gens)
    return sub.dim


def commutant_basis(gens):
    """Basis of the joint commutant, as a Subspace of vec'd n x n matrices.

    vec(X) uses row-major order: coordinate r * n + c holds X[r, c].
    """
    n = gens[0].nrows
    one = gens[0].one
    rows = {}
    nrow = 0
    e = {}
    for g in gens:
        grows = g.rows()
        gcols = g.transpose().rows()
        # (Xg - gX)[i, j] = sum_c X[i,c] g[c,j] - sum_r g[i,r] X[r,j]
        for i in range(n):
            for j in range(n):
                acc = {}
                for c, v in gcols[j].items():
                    k = i * n + c
                    acc[k] = acc.get(k, one - one) + v
                for r, v in grows[i].items():
                    k = r * n + j
                    acc[k] = acc.get(k, one - one) - v
                wrote = False
                for k, v in acc.items():
                    if v:
                        e[(nrow, k)] = v
                        wrote = True
                if wrote:
                    nrow += 1
    sys = ExactMatrix(max(nrow, 1), n * n, e, one)
    return sys.kernel()


def matrix_algebra_dimension(gens, include_identity=True, max_dim=None):
    """Dimension of the unital algebra generated by the given matrices.

    Spans are grown by multiplying current basis elements by generators until
    closure.  Matrices are vec'd row-major into a Subspace.
    """
    n = gens[0].nrows
    one = gens[0].one
    span = Subspace(n * n, (), one)
    frontier = []

    def vec(m):
        return {r * n + c: v for (r, c), v in m.entries.items()}

    start = list(gens)
    if include_identity:
        start.append(ExactMatrix.identity(n, one))
    for m in start:
        if span.insert(vec(m)):
            frontier.append(m)
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                for prod in (m * g, g * m):
                    if span.insert(vec(prod)):
                        new.append(prod)
                        if max_dim is not None and span.dim >= max_dim:
                            return span.dim
        frontier = new
    return span.dim
