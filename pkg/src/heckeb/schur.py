"""
Signed symmetric and exterior powers, Schur algebras and Schur functors.

The four signed powers of V_n^{(x) d} are cut out by one sign choice for the
K-generator and one for the R-generators:

    kind          T_0 class   T_i class   quotient relations
    s_plus        1/Q         1/q         (T_0 - 1/Q), (T_i - 1/q)
    s_minus       -Q          1/q         (T_0 + Q),   (T_i - 1/q)
    wedge_plus    1/Q         -q          (T_0 - 1/Q), (T_i + q)
    wedge_minus   -Q          -q          (T_0 + Q),   (T_i + q)

Each comes in a quotient flavour (divide by the images of the complementary
relations) and a kernel flavour (intersect the kernels); generically both have
the binomial dimensions recorded in expected_pm_dimension.

The Schur algebra is the centralizer of the Hecke action.  Its dimension is
computed two independent ways: as a joint-commutant kernel, and orbit by orbit
through Frobenius reciprocity (each permutation module is induced from a
one-dimensional character of a parabolic, so Hom(V(a), V(b)) is a simultaneous
eigenspace inside V(b)).

The Schur functor of a bipartition is the image of the quasi-idempotent
e'_{lam,mu}; its dimension matches the count of semistandard bitableaux.
"""

from __future__ import annotations

from math import comb

from .exactlinalg import (
    ExactMatrix,
    Subspace,
    minimal_polynomial,
    poly_derivative,
    poly_divmod,
    poly_eval_matrix,
    poly_gcd_monic,
    poly_mul,
    vstack,
)
from .hecke import (
    bipartition_element,
    central_element,
    shuffle_t,
    u_minus,
    u_plus,
    young_idempotent,
)
from .rep import (
    SYMBOLIC,
    BudgetExceeded,
    PermutationModule,
    SpecializedBackend,
    central_candidate_eigenvalues,
    coideal_generators,
    eigenvalue_multiplicities,
    embed_factors,
    generator_matrix,
    k_block,
    r_block,
    rho,
    rho_basis,
    rho_word,
)
from .scalars import RF_Q, RF_q, Specialization
from .weylcomb import (
    bipartition_fits,
    bipartitions,
    block_flip_word,
    block_transposition,
    dominant_tuples,
    index_set,
    orbit_with_minimal_reps,
    semistandard_bitableaux_count,
    stabilizer_parabolic,
    standard_bitableaux_count,
)

PM_KINDS = ("s_plus", "s_minus", "wedge_plus", "wedge_minus")

SYMBOLIC_BUDGET = 125
SPECIALIZED_BUDGET = 400


def check_budget(n, d, bk, budget=None):
    cap = budget
    if cap is None:
        cap = SYMBOLIC_BUDGET if bk.is_symbolic else SPECIALIZED_BUDGET
    if n**d > cap:
        raise BudgetExceeded(
            "tensor space dimension %d exceeds the %s budget %d"
            % (n**d, "symbolic" if bk.is_symbolic else "specialized", cap)
        )


def _kind_signs(kind):
    if kind not in PM_KINDS:
        raise ValueError("unknown signed power kind %r" % (kind,))
    k_pos = kind.endswith("plus")
    r_pos = kind.startswith("s")
    return k_pos, r_pos


def _pm_relation_ops(kind, n, d, bk):
    """The relation operators whose images are divided out (equivalently whose
    kernels are intersected) for a signed power."""
    k_pos, r_pos = _kind_signs(kind)
    one = bk.one
    ident = ExactMatrix.identity(n**d, one)
    k_shift = bk.of(RF_Q.inverse()) if k_pos else -bk.of(RF_Q)
    r_shift = bk.of(RF_q.inverse()) if r_pos else -bk.of(RF_q)
    ops = [generator_matrix(n, d, 0, bk) - ident.scale(k_shift)]
    for i in range(1, d):
        ops.append(generator_matrix(n, d, i, bk) - ident.scale(r_shift))
    return ops


def pm_power_dimension(kind, n, d, bk=SYMBOLIC, flavour="quotient"):
    """Dimension of a signed power, as a quotient or as a kernel subspace."""
    ops = _pm_relation_ops(kind, n, d, bk)
    N = n**d
    if flavour == "quotient":
        span = Subspace(N, (), bk.one)
        for op in ops:
            for col in op.columns():
                span.insert(col)
        return N - span.dim
    if flavour == "kernel":
        return pm_power_kernel(kind, n, d, bk).dim
    raise ValueError("flavour must be 'quotient' or 'kernel'")


def pm_power_kernel(kind, n, d, bk=SYMBOLIC) -> Subspace:
    """The kernel-flavour signed power as an honest subspace."""
    ops = _pm_relation_ops(kind, n, d, bk)
    return vstack(ops).kernel()


def expected_pm_dimension(kind, n, d):
    """The closed-form dimensions of the signed powers."""
    r = n // 2
    k_pos, r_pos = _kind_signs(kind)
    if r_pos:  # symmetric flavours
        if n % 2 == 0:
            return comb(r + d - 1, d)
        return comb(r + d, d) if k_pos else comb(r + d - 1, d)
    if n % 2 == 0:
        return comb(r, d)
    return comb(r + 1, d) if k_pos else comb(r, d)


def pm_admissible_tuples(kind, n, d):
    """Dominant doubled tuples indexing the signed-power basis vectors."""
    k_pos, r_pos = _kind_signs(kind)
    out = []
    for a in dominant_tuples(n, d):
        if not k_pos and 0 in a:
            # the minus flavours require strictly positive entries
            continue
        if not r_pos and len(set(a)) != d:
            # the wedge flavours require strict increase
            continue
        out.append(a)
    return out


def pm_basis_vector(a, kind, n, bk=SYMBOLIC):
    """The signed orbit sum v(a)_{alpha beta} in ambient coordinates.

    alpha = +- follows the K sign of the kind, beta the R sign; the weight of
    the orbit point w a is (alpha Q)^{-alpha l_0(w)} (beta q)^{-beta l_1(w)}.
    """
    from .rep import tensor_tuples

    k_pos, r_pos = _kind_signs(kind)
    alpha = 1 if k_pos else -1
    beta = 1 if r_pos else -1
    baseQ = RF_Q if k_pos else -RF_Q
    baseq = RF_q if r_pos else -RF_q
    _, index = tensor_tuples(n, len(a))
    vec = {}
    for b, w in orbit_with_minimal_reps(tuple(a)).items():
        l0, l1 = w.length_split()
        coeff = bk.of(baseQ ** (-alpha * l0) * baseq ** (-beta * l1))
        if coeff:
            vec[index[b]] = coeff
    return vec


def pm_power_basis(kind, n, d, bk=SYMBOLIC):
    """The admissible-orbit basis vectors of the kernel-flavour signed power."""
    return [
        (a, pm_basis_vector(a, kind, n, bk)) for a in pm_admissible_tuples(kind, n, d)
    ]


def tensor_pm_subspace(sign, n, d, bk=SYMBOLIC) -> Subspace:
    """The signed halves of the tensor space: images of u_d^+ and u_d^-."""
    elem = u_plus(d, d) if sign > 0 else u_minus(d, d)
    return rho(elem, n, bk).column_space()


def signed_tensor_subspace(a, b, n, bk=SYMBOLIC) -> Subspace:
    """The mixed signed block (x)^a_+ (x) (x)^b_- as a subspace of V^{(x)(a+b)}:
    the image of u_b^- T_{b,a} u_a^+."""
    d = a + b
    elem = u_minus(d, b) * shuffle_t(b, a, d) * u_plus(d, a)
    return rho(elem, n, bk).column_space()


# ---------------------------------------------------------------------------
# Schur algebra dimension


def schur_algebra_dimension_commutant(n, d, bk=SYMBOLIC):
    """dim of the full centralizer of the Hecke action, by the Sylvester
    kernel over all generators at once."""
    from .exactlinalg import commutant_dimension

    gens = [generator_matrix(n, d, i, bk) for i in range(d)]
    return commutant_dimension(gens)


def schur_algebra_dimension_orbit(n, d, bk=SYMBOLIC):
    """The same dimension orbit by orbit: sum over pairs of dominant tuples of
    dim Hom(V(a), V(b)), each Hom being the simultaneous eigenspace of the
    parabolic character of a inside the permutation module of b."""
    doms = dominant_tuples(n, d)
    mods = {a: PermutationModule(n, a, bk) for a in doms}
    one = bk.one
    qi = bk.of(RF_q.inverse())
    Qi = bk.of(RF_Q.inverse())
    total = 0
    for a in doms:
        J = stabilizer_parabolic(a)
        for b in doms:
            pm = mods[b]
            if not J:
                total += pm.dim
                continue
            mats = []
            ident = ExactMatrix.identity(pm.dim, one)
            for i in J:
                shift = Qi if i == 0 else qi
                mats.append(pm.generator(i) - ident.scale(shift))
            total += vstack(mats).kernel().dim
    return total


def schur_algebra_dimension(n, d, bk=SYMBOLIC, method="auto"):
    if method == "auto":
        method = "commutant" if n**d <= 30 else "orbit"
    if method == "commutant":
        return schur_algebra_dimension_commutant(n, d, bk)
    if method == "orbit":
        return schur_algebra_dimension_orbit(n, d, bk)
    raise ValueError("method must be 'auto', 'commutant' or 'orbit'")


# ---------------------------------------------------------------------------
# Schur functors and the Schur-Weyl ledger


def schur_functor_subspace(shape, n, bk=SYMBOLIC) -> Subspace:
    """Image of rho(e'_{lam,mu}) inside V_n^{(x) d}."""
    return rho(bipartition_element(shape), n, bk).column_space()


def schur_functor_diagram_subspace(shape, n, bk=SYMBOLIC) -> Subspace:
    """The same space assembled as a composite of matrices of the individual
    diagram pieces instead of one algebra product."""
    lam, mu = shape
    a, b = sum(lam), sum(mu)
    d = a + b
    pieces = [
        shuffle_t(a, b, d),
        u_minus(d, b),
        shuffle_t(b, a, d),
        u_plus(d, a),
        young_idempotent(lam, 0, d),
        young_idempotent(mu, a, d),
    ]
    # right-action composition: later algebra factors act last
    out = ExactMatrix.identity(n**d, bk.one)
    for p in pieces:
        out = rho(p, n, bk) * out
    return out.column_space()


def schur_weyl_decompose(n, d, bk=SYMBOLIC, budget=None):
    """The full decomposition ledger of V_n^{(x) d}.

    Returns a dict with one row per bipartition of d carrying the computed
    Schur functor dimension (dimL), the closed-form semistandard count, and
    the standard bitableaux count (dimM), together with the two global checks
    sum(dimL * dimM) = n^d and sum(dimL^2) = dim of the Schur algebra.
    """
    check_budget(n, d, bk, budget)
    rows = []
    for shape in bipartitions(d):
        dim_l = schur_functor_subspace(shape, n, bk).dim
        rows.append(
            {
                "shape": shape,
                "dimL": dim_l,
                "dimL_formula": semistandard_bitableaux_count(shape, n)
                if bipartition_fits(shape, n)
                else 0,
                "dimM": standard_bitableaux_count(shape),
            }
        )
    sum_ld = sum(r["dimL"] * r["dimM"] for r in rows)
    sum_l2 = sum(r["dimL"] ** 2 for r in rows)
    schur_dim = schur_algebra_dimension(n, d, bk)
    return {
        "n": n,
        "d": d,
        "rows": rows,
        "sum_dimL_dimM": sum_ld,
        "tensor_dim": n**d,
        "sum_dimL_sq": sum_l2,
        "schur_algebra_dim": schur_dim,
        "pass": sum_ld == n**d
        and sum_l2 == schur_dim
        and all(r["dimL"] == r["dimL_formula"] for r in rows),
    }


# ---------------------------------------------------------------------------
# intertwiners and irreducibility


def restrict_to_subspace(g: ExactMatrix, sub: Subspace) -> ExactMatrix:
    """Matrix of g on an invariant subspace, in the echelon basis."""
    cols = []
    for v in sub.basis():
        coords = sub.coordinates(g.apply(v))
        if coords is None:
            raise ValueError("subspace is not invariant")
        cols.append(coords)
    return ExactMatrix.from_columns(sub.dim, cols, g.one)


def intertwiner_dimension(gens_u, gens_w, one):
    """dim of {phi : phi g_u = g_w phi for all generator pairs}."""
    u = gens_u[0].nrows
    w = gens_w[0].nrows
    e = {}
    nrow = 0
    for gu, gw in zip(gens_u, gens_w):
        gu_cols = gu.transpose().rows()
        gw_rows = gw.rows()
        for i in range(w):
            for j in range(u):
                acc = {}
                for c, v in gu_cols[j].items():
                    k = i * u + c
                    acc[k] = acc.get(k, one - one) + v
                for r, v in gw_rows[i].items():
                    k = r * u + j
                    acc[k] = acc.get(k, one - one) - v
                wrote = False
                for k, v in acc.items():
                    if v:
                        e[(nrow, k)] = v
                        wrote = True
                if wrote:
                    nrow += 1
    return ExactMatrix(max(nrow, 1), w * u, e, one).kernel().dim


def irreducibility_report(n, d, bk, shapes=None):
    """Pairwise intertwiner dimensions between Schur functor images under the
    centralizing coideal action: 1 on the diagonal and 0 off it certifies the
    pieces are pairwise non-isomorphic irreducibles."""
    if shapes is None:
        shapes = [s for s in bipartitions(d) if bipartition_fits(s, n)]
    coideal = list(coideal_generators(n, d, bk).values())
    subs = {}
    restricted = {}
    for s in shapes:
        sub = schur_functor_subspace(s, n, bk)
        subs[s] = sub
        restricted[s] = [restrict_to_subspace(g, sub) for g in coideal]
    report = {}
    for s1 in shapes:
        for s2 in shapes:
            report[(s1, s2)] = intertwiner_dimension(
                restricted[s1], restricted[s2], bk.one
            )
    return report


def verify_double_centralizer(n, d, bk):
    """Both centralizer dimensions of the dual pair on V_n^{(x) d}:
    the commutant of the Hecke action and the commutant of the coideal
    action, each computed from the generating matrices."""
    from .exactlinalg import commutant_dimension, matrix_algebra_dimension

    hecke_gens = [generator_matrix(n, d, i, bk) for i in range(d)]
    coideal = list(coideal_generators(n, d, bk).values())
    schur_dim = commutant_dimension(hecke_gens)
    coideal_alg_dim = matrix_algebra_dimension(coideal)
    hecke_commutant_of_coideal = commutant_dimension(coideal)
    hecke_alg_dim = matrix_algebra_dimension(hecke_gens)
    return {
        "schur_dim": schur_dim,
        "coideal_algebra_dim": coideal_alg_dim,
        "hecke_algebra_dim": hecke_alg_dim,
        "commutant_of_coideal": hecke_commutant_of_coideal,
        "double_centralizer": schur_dim == coideal_alg_dim
        and hecke_alg_dim == hecke_commutant_of_coideal,
    }


# ---------------------------------------------------------------------------
# the e-cabled generators and higher signed powers


def e_hecke_generators(n, d, e, bk=SYMBOLIC):
    """Matrices of T_{w_0}, T_{w_1}, ..., T_{w_{d-1}} on V_n^{(x) de}: the
    cabled K on the first e strands and the e-block transpositions."""
    dd = d * e
    gens = [rho_word(block_flip_word(e), n, dd, bk)]
    for i in range(1, d):
        gens.append(rho_basis(n, dd, block_transposition(i, e, d), bk))
    return gens


def verify_e_hecke(n, d, e, bk=SYMBOLIC):
    """The cabled generators agree with the inductive block R and K matrices,
    and satisfy the braid pattern of type B."""
    gens = e_hecke_generators(n, d, e, bk)
    ok = gens[0] == embed_factors(k_block(e, n, bk), n, 0, (d - 1) * e)
    for i in range(1, d):
        blk = embed_factors(r_block(e, e, n, bk), n, (i - 1) * e, (d - i - 1) * e)
        ok = ok and gens[i] == blk
    if d >= 2:
        a, b = gens[0], gens[1]
        ok = ok and (a * b * a * b) == (b * a * b * a)
    for i in range(1, d - 1):
        a, b = gens[i], gens[i + 1]
        ok = ok and (a * b * a) == (b * a * b)
    return ok


def e_hecke_rank1_eigenvalue_count(n, e, s: Specialization):
    """Number of distinct eigenvalues of the cabled K on V_n^{(x) e}."""
    bk = SpecializedBackend(s)
    m = rho(central_element(e), n, bk)
    mp = minimal_polynomial(m)
    g = poly_gcd_monic(mp, poly_derivative(mp, m.one))
    return len(mp) - len(g)


def _r_block_candidates(e, s):
    out = {}
    jb = 2 * e * e
    for j in range(-jb, jb + 1):
        v = s.valueq**j
        out[v] = ("+", j)
        out[-v] = ("-", j)
    return out


def higher_pm_dimension(kind, n, d, e, s: Specialization):
    """Dimension of a higher signed power of the e-cabled action.

    The largest quotient of V^{(x) de} on which the cabled K acts with only
    its allowed sign class and every block transposition likewise: divide by
    the submodule generated by all disallowed generalized eigenspaces.
    """
    bk = SpecializedBackend(s)
    ops = e_hecke_generators(n, d, e, bk)
    N = n ** (d * e)
    one = bk.one
    k_pos, r_pos = _kind_signs(kind)
    bad = Subspace(N, (), one)
    for idx, op in enumerate(ops):
        cands = (
            central_candidate_eigenvalues(e, s) if idx == 0 else _r_block_candidates(e, s)
        )
        allowed_positive = k_pos if idx == 0 else r_pos
        mults = eigenvalue_multiplicities(op, cands)
        ann = [one]
        for lam, k in mults.items():
            if (lam > 0) == allowed_positive:
                for _ in range(k):
                    ann = poly_mul(ann, [-lam, one])
        if len(ann) == 1:
            # no allowed eigenvalue at all: the whole space is disallowed
            bad = Subspace(N, ExactMatrix.identity(N, one).columns(), one)
            break
        for col in poly_eval_matrix(ann, op).columns():
            bad.insert(col)
    # close under the action
    changed = True
    while changed:
        changed = False
        for op in ops:
            for v in list(bad.basis()):
                if bad.insert(op.apply(v)):
                    changed = True
    return N - bad.dim
