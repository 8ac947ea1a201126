"""
The two-parameter Iwahori-Hecke algebra of type B in its natural basis.

Generators T_0, T_1, ..., T_{d-1} satisfy
    (T_0 + Q)(T_0 - 1/Q) = 0,
    (T_i + q)(T_i - 1/q) = 0            for i >= 1,
the braid relations of type B, and commutation for distant indices.  Elements
are stored as {group element: rational function coefficient} over the natural
basis {T_w}; products are computed by peeling reduced words and applying the
one-generator multiplication rule
    T_s T_w = T_{sw}                        if l(sw) > l(w),
    T_s T_w = T_{sw} + (1/c - c) T_w        otherwise,
with c = Q for s_0 and c = q for the other generators.
"""

from __future__ import annotations

from .scalars import RF_ONE, RF_Q, RF_ZERO, RF_q, RationalFunction
from .weylcomb import (
    SignedPermutation,
    column_reading_element,
    conjugate,
    shuffle_element,
)


class HeckeElement:
    __slots__ = ("d", "terms")

    def __init__(self, d, terms=None):
        self.d = d
        t = {}
        if terms:
            for w, c in terms.items():
                if c:
                    t[w] = c
        self.terms = t

    # -- constructors

    @staticmethod
    def zero(d):
        return HeckeElement(d)

    @staticmethod
    def one(d):
        return HeckeElement(d, {SignedPermutation.identity(d): RF_ONE})

    @staticmethod
    def basis(d, w, coeff=RF_ONE):
        return HeckeElement(d, {w: coeff})

    @staticmethod
    def generator(d, i):
        return HeckeElement(d, {SignedPermutation.generator(d, i): RF_ONE})

    # -- predicates

    def __bool__(self):
        return bool(self.terms)

    def support_size(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.d == other.d and self.terms == other.terms

    # -- linear structure

    def __add__(self, other):
        if self.d != other.d:
            raise ValueError("rank mismatch")
        t = dict(self.terms)
        for w, c in other.terms.items():
            v = t.get(w)
            v = c if v is None else v + c
            if v:
                t[w] = v
            else:
                t.pop(w, None)
        out = HeckeElement(self.d)
        out.terms = t
        return out

    def __neg__(self):
        out = HeckeElement(self.d)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return HeckeElement(self.d)
        out = HeckeElement(self.d)
        out.terms = {w: c * v for w, v in self.terms.items()}
        return out

    # -- multiplication

    def __mul__(self, other):
        if isinstance(other, (RationalFunction, int)):
            return self.scale(RF_ONE * other)
        if self.d != other.d:
            raise ValueError("rank mismatch")
        out = {}
        for w, c in self.terms.items():
            part = other.terms
            for i in reversed(w.reduced_word()):
                part = _gen_mul(self.d, i, part)
            for u, v in part.items():
                t = out.get(u)
                t = c * v if t is None else t + c * v
                if t:
                    out[u] = t
                else:
                    out.pop(u, None)
        return HeckeElement(self.d, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = HeckeElement.one(self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- serialization

    def to_lines(self):
        lines = []
        for w in sorted(self.terms, key=lambda u: (u.length(), u.images)):
            lines.append("%s : %s" % (w, self.terms[w].num if self.terms[w].den.is_one() else self.terms[w]))
        return lines

    def __str__(self):
        if not self.terms:
            return "0"
        return "\n".join(self.to_lines())

    def __repr__(self):
        return "HeckeElement(d=%d, support=%d)" % (self.d, len(self.terms))


def _gen_mul(d, i, terms):
    """Multiply {w: c} on the left by T_{s_i}."""
    s = SignedPermutation.generator(d, i)
    shift = (RF_Q.inverse() - RF_Q) if i == 0 else (RF_q.inverse() - RF_q)
    out = {}

    def bump(w, c):
        t = out.get(w)
        t = c if t is None else t + c
        if t:
            out[w] = t
        else:
            out.pop(w, None)

    for w, c in terms.items():
        sw = s * w
        bump(sw, c)
        if sw.length() < w.length():
            bump(w, shift * c)
    return out


# ---------------------------------------------------------------------------
# distinguished elements


def jucys_murphy(d, i):
    """K_i = T_{i-1} ... T_1 T_0 T_1 ... T_{i-1}."""
    if not 1 <= i <= d:
        raise ValueError("index out of range")
    out = HeckeElement.generator(d, 0)
    for j in range(1, i):
        t = HeckeElement.generator(d, j)
        out = t * out * t
    return out


def central_element(d):
    """c_K = K_1 K_2 ... K_d."""
    out = HeckeElement.one(d)
    for i in range(1, d + 1):
        out = out * jucys_murphy(d, i)
    return out


def u_plus(d, i):
    """prod_{j=1}^{i} (K_j + Q)."""
    out = HeckeElement.one(d)
    for j in range(1, i + 1):
        out = out * (jucys_murphy(d, j) + HeckeElement.one(d).scale(RF_Q))
    return out


def u_minus(d, i):
    """prod_{j=1}^{i} (K_j - 1/Q)."""
    out = HeckeElement.one(d)
    qinv = RF_Q.inverse()
    for j in range(1, i + 1):
        out = out * (jucys_murphy(d, j) - HeckeElement.one(d).scale(qinv))
    return out


def shuffle_t(a, b, d=None):
    """T_{w} for the (a, b) block shuffle, inside rank d (default a + b)."""
    if d is None:
        d = a + b
    w = shuffle_element(a, b)
    if d > a + b:
        w = SignedPermutation(w.images + tuple(range(a + b + 1, d + 1)))
    return HeckeElement.basis(d, w)


def _embed(w, offset, d):
    """Embed a positive permutation of rank k at strands offset+1..offset+k."""
    img = list(range(1, offset + 1)) + [offset + v for v in w.images]
    img += list(range(offset + len(w.images) + 1, d + 1))
    return SignedPermutation(img)


def _young_subgroup_elements(lam, offset, d):
    """Elements of the Young subgroup of composition lam, embedded at offset,
    with their lengths."""
    gens = []
    pos = 0
    for p in lam:
        for i in range(1, p):
            gens.append(offset + pos + i)
        pos += p
    ident = SignedPermutation.identity(d)
    dist = {ident: 0}
    frontier = [ident]
    sgens = [SignedPermutation.generator(d, i) for i in gens]
    while frontier:
        new = []
        for w in frontier:
            for s in sgens:
                ws = w * s
                if ws not in dist:
                    dist[ws] = dist[w] + 1
                    new.append(ws)
        frontier = new
    return dist


def symmetrizer(lam, offset, d):
    """x = sum_w q^{-l(w)} T_w over the Young subgroup of lam (image lies in
    the 1/q eigenspace of each T_i in the subgroup)."""
    qinv = RF_q.inverse()
    return HeckeElement(
        d, {w: qinv ** l for w, l in _young_subgroup_elements(lam, offset, d).items()}
    )


def antisymmetrizer(lam, offset, d):
    """y = sum_w (-q)^{l(w)} T_w over the Young subgroup of lam (image lies in
    the -q eigenspace of each T_i in the subgroup)."""
    mq = -RF_q
    return HeckeElement(
        d, {w: mq ** l for w, l in _young_subgroup_elements(lam, offset, d).items()}
    )


def young_idempotent(lam, offset, d):
    """The quasi-idempotent x_lam T_{c(lam)} y_{lam'} attached to a partition,
    embedded at the given strand offset."""
    x = symmetrizer(lam, offset, d)
    y = antisymmetrizer(conjugate(lam), offset, d)
    c = HeckeElement.basis(d, _embed(column_reading_element(lam), offset, d))
    return x * c * y


def embed_in_rank(elem, d_big):
    """View an element of a smaller rank algebra inside rank d_big, acting on
    the first strands."""
    t = {}
    for w, c in elem.terms.items():
        t[SignedPermutation(w.images + tuple(range(elem.d + 1, d_big + 1)))] = c
    return HeckeElement(d_big, t)


def cylinder_identity_holds(d, e):
    """c_K in rank d+e factors through the block shuffles:
    c_K^{d+e} = T_{d,e} (c_K^e x 1) T_{e,d} (c_K^d x 1), and the same with the
    last factor rotated to the front."""
    n = d + e
    ckn = central_element(n)
    ckd = embed_in_rank(central_element(d), n)
    cke = embed_in_rank(central_element(e), n)
    lhs = shuffle_t(d, e, n) * cke * shuffle_t(e, d, n) * ckd
    rot = ckd * shuffle_t(d, e, n) * cke * shuffle_t(e, d, n)
    return ckn == lhs and ckn == rot


def bipartition_element(shape):
    """e'_{lam,mu} = T_{a,b} u_b^- T_{b,a} u_a^+ e_lam e_mu in rank a + b."""
    lam, mu = shape
    a, b = sum(lam), sum(mu)
    d = a + b
    out = shuffle_t(a, b, d) * u_minus(d, b) * shuffle_t(b, a, d) * u_plus(d, a)
    out = out * young_idempotent(lam, 0, d)
    out = out * young_idempotent(mu, a, d)
    return out
