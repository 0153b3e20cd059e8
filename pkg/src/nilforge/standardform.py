"""Standard pseudo-metric algebras, eta-twists and the reduction isomorphism.

For an adapted 2-step algebra the structure matrices C^k span a subspace of
so(m); twisting by eta_{p,q} (either side) carries it into so(p,q).  When
the trace form is non-degenerate on the twisted space, the algebra is
isomorphic to the standard algebra R^{p,q} (+) W built from the duality

    <[v, w], z>_so(p,q) = <z v, w>_{p,q},

and ``reduction_isomorphism`` constructs and certifies that isomorphism.
The module also provides the free algebra F_2(p,q), the GL(m) action
rho(A) Z = A Z A^eta on so(p,q) subspaces, free-algebra automorphisms and
central quotients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateWError,
    DimError,
    DimensionMismatchError,
    HomomorphismError,
    NotAdaptedError,
    NotSkewError,
    PreconditionError,
    SingularAError,
)
from .exactlin import (
    ONE,
    ZERO,
    MatrixSubspace,
    RationalMatrix,
    SignatureForm,
    SpanBuilder,
    eta,
    inverse,
    matrix_to_sparse,
    rank,
    rat,
    trace_gram,
)
from .nilpotent import MetricAlgebra, NilpotentAlgebra2


def nu(p: int, q: int, i: int) -> int:
    """Sign of the i-th basis vector (1-based) of R^{p,q}."""
    return 1 if i <= p else -1


def in_so(m: RationalMatrix, p: int, q: int) -> bool:
    """Membership test eta X^T eta = -X for so(p,q)."""
    e = eta(p, q)
    return m.is_square() and m.rows == p + q and e * m.transpose() * e == -m


def so_basis(p: int, q: int, normalized: bool = True) -> MatrixSubspace:
    """Basis phi_ij = -1/2 (E_ij - E_ji) eta_{p,q}, pairs (i, j) with i < j
    in lexicographic order.  ``normalized=False`` drops the 1/2 factor."""
    m = p + q
    half = Fraction(1, 2) if normalized else ONE
    basis = []
    for i in range(m):
        for j in range(i + 1, m):
            rows = [[ZERO] * m for _ in range(m)]
            # -c (E_ij - E_ji) eta: column scaling by eta diagonal
            rows[i][j] = -half * (1 if j < p else -1)
            rows[j][i] = half * (1 if i < p else -1)
            basis.append(RationalMatrix(rows))
    return MatrixSubspace(m, basis)


def so_pair_signs(p: int, q: int) -> list[int]:
    """The signs nu_ij = nu_i nu_j in the pair order of ``so_basis``."""
    m = p + q
    return [
        nu(p, q, i + 1) * nu(p, q, j + 1)
        for i in range(m)
        for j in range(i + 1, m)
    ]


@dataclass(frozen=True)
class StandardPseudoMetricAlgebra:
    """The algebra R^{p,q} (+) W with the trace metric on W."""

    p: int
    q: int
    W: MatrixSubspace
    gram_W: RationalMatrix
    algebra: NilpotentAlgebra2


def structure_space(a: NilpotentAlgebra2) -> MatrixSubspace:
    """span{C^1, ..., C^n} in so(m); empty for raw-tagged algebras."""
    if a.tag != "adapted":
        return MatrixSubspace(a.m, [])
    return MatrixSubspace(a.m, a.structure)


def eta_twist(c: MatrixSubspace, p: int, q: int, side: str = "right") -> MatrixSubspace:
    """Twist a structure space into so(p,q): C -> C eta (right) or eta C (left)."""
    if p + q != c.ambient_dim:
        raise DimError(f"p+q = {p + q} != ambient {c.ambient_dim}")
    if side not in ("right", "left"):
        raise PreconditionError(f"unknown twist side {side!r}")
    e = eta(p, q)
    if side == "right":
        basis = [b * e for b in c.basis]
    else:
        basis = [e * b for b in c.basis]
    out = MatrixSubspace(c.ambient_dim, basis)
    assert all(in_so(b, p, q) for b in out.basis)
    return out


def find_realizations(a: NilpotentAlgebra2) -> list[dict]:
    """All (p, q) with p+q = m whose right-twisted structure space carries a
    non-degenerate trace Gram; ascending p.  May be empty."""
    if a.tag != "adapted":
        raise NotAdaptedError("find_realizations requires an adapted algebra")
    c = structure_space(a)
    out = []
    for p in range(a.m + 1):
        q = a.m - p
        d = eta_twist(c, p, q, "right")
        from .exactlin import signature

        sp, sq, nullity = signature(trace_gram(d))
        if nullity == 0:
            out.append({"p": p, "q": q, "signature": (sp, sq)})
    return out


def standard_algebra(p: int, q: int, w: MatrixSubspace) -> StandardPseudoMetricAlgebra:
    """The standard pseudo-metric algebra R^{p,q} (+) W."""
    m = p + q
    if w.ambient_dim != m:
        raise DimError(f"W ambient {w.ambient_dim} != p+q = {m}")
    for b in w.basis:
        if not in_so(b, p, q):
            raise NotSkewError("W basis element is not in so(p,q)")
    gram = trace_gram(w)
    form_z = SignatureForm(gram)
    if w.dim and not form_z.is_nondegenerate():
        raise DegenerateWError("trace form degenerates on W")
    e = eta(p, q)
    g_inv = inverse(gram) if w.dim else None
    # r_a(i, j) = <w_a e_i, e_j> = (w_a^T eta)_{ij}; beta = G^{-1} r
    rhs = [b.transpose() * e for b in w.basis]
    structure = []
    for k in range(w.dim):
        acc = RationalMatrix.zeros(m, m)
        for l in range(w.dim):
            coef = g_inv.entry(k, l)
            if coef:
                acc = acc + rhs[l].scale(coef)
        structure.append(acc)
    algebra = NilpotentAlgebra2(
        m=m,
        n=w.dim,
        structure=tuple(structure),
        form_V=SignatureForm.standard(p, q),
        form_Z=form_z,
        tag="adapted" if w.dim else "raw",
    )
    return StandardPseudoMetricAlgebra(p=p, q=q, W=w, gram_W=gram, algebra=algebra)


def reduction_isomorphism(
    a: NilpotentAlgebra2, p: int, q: int
) -> tuple[RationalMatrix, StandardPseudoMetricAlgebra]:
    """Certified isomorphism onto the standard algebra of the left twist.

    T fixes the V basis and sends z_k to -rho_k, where rho_k is the
    trace-form dual basis of D^k = eta C^k.  The homomorphism law
    T([v_i, v_j]) = [T v_i, T v_j] is certified on all basis pairs.
    """
    if a.tag != "adapted":
        raise NotAdaptedError("reduction requires an adapted algebra")
    c = structure_space(a)
    d = eta_twist(c, p, q, "left")
    gram = trace_gram(d)
    form = SignatureForm(gram)
    if not form.is_nondegenerate():
        raise DegenerateWError(f"left twist is degenerate for (p,q)=({p},{q})")
    target = standard_algebra(p, q, d)
    g_inv = inverse(gram)
    m, n = a.m, a.n
    rows = []
    for i in range(m + n):
        row = [ZERO] * (m + n)
        if i < m:
            row[i] = ONE
        else:
            for k in range(n):
                # z_k -> -rho_k = -sum_l (G^{-1})_{lk} D^l: column m+k
                row[m + k] = -g_inv.entry(i - m, k)
        rows.append(row)
    t = RationalMatrix(rows)
    # certify on all basis pairs
    for i in range(m):
        for j in range(i + 1, m):
            lhs = [
                -sum(
                    (g_inv.entry(k, l) * a.structure[l].entry(i, j) for l in range(n)),
                    ZERO,
                )
                for k in range(n)
            ]
            rhs = [target.algebra.structure[k].entry(i, j) for k in range(n)]
            if lhs != rhs:
                raise HomomorphismError(
                    "reduction certificate failed; convention bug"
                )
    return t, target


def free_algebra(p: int, q: int) -> StandardPseudoMetricAlgebra:
    """The free metric 2-step algebra F_2(p,q) = R^{p,q} (+) so(p,q) with
    [e_i, e_j] = phi_ij = -1/2 (E_ij - E_ji) eta_{p,q}."""
    if p + q < 2:
        raise DimError("free algebra needs p+q >= 2")
    return standard_algebra(p, q, so_basis(p, q))


def free_isomorphism(p: int, q: int) -> dict:
    """The basis map F_2(m) -> F_2(p,q): e_k -> e_k, v_ij -> phi_ij.

    Certified by comparing the two structure tensors in the mapped bases;
    also reports the exact phi-basis Gram diagonal (nu_ij / 2) and the sign
    pattern nu_ij.
    """
    m = p + q
    source = free_algebra(m, 0)
    target = free_algebra(p, q)
    certified = source.algebra.structure == target.algebra.structure
    gram = target.gram_W
    diag = [gram.entry(i, i) for i in range(gram.rows)]
    signs = so_pair_signs(p, q)
    diagonal_ok = all(
        gram.entry(i, j) == 0 for i in range(gram.rows) for j in range(gram.rows) if i != j
    )
    sign_ok = all((x > 0) == (s > 0) for x, s in zip(diag, signs))
    return {
        "p": p,
        "q": q,
        "phi_basis": target.W,
        "gram_diagonal": diag,
        "nu_signs": signs,
        "gram_is_diagonal": diagonal_ok,
        "signs_match_nu": sign_ok,
        "certified": certified and diagonal_ok and sign_ok,
    }


def eta_conjugate(a: RationalMatrix, p: int, q: int) -> RationalMatrix:
    """A^eta = eta A^T eta."""
    e = eta(p, q)
    return e * a.transpose() * e


def gl_action(a: RationalMatrix, s: MatrixSubspace, p: int, q: int) -> MatrixSubspace:
    """The left action rho(A) Z = A Z A^eta on so(p,q) subspaces."""
    m = p + q
    if a.rows != m or a.cols != m:
        raise DimensionMismatchError("A size != p+q")
    if rank(a) != m:
        raise SingularAError("A is not invertible")
    a_eta = eta_conjugate(a, p, q)
    out = MatrixSubspace(m, [a * z * a_eta for z in s.basis])
    assert all(in_so(b, p, q) for b in out.basis)
    return out


FreeElement = tuple[tuple, RationalMatrix]  # (V part, center part in so(p,q))


def free_bracket(p: int, q: int, x: FreeElement, y: FreeElement) -> RationalMatrix:
    """[x, y] in F_2(p,q); only the V parts contribute."""
    m = p + q
    xv = [rat(t) for t in x[0]]
    yv = [rat(t) for t in y[0]]
    rows = [
        [
            -Fraction(1, 2) * (xv[i] * yv[j] - yv[i] * xv[j]) * (1 if j < p else -1)
            for j in range(m)
        ]
        for i in range(m)
    ]
    return RationalMatrix(rows)


def apply_free_automorphism(
    p: int, q: int, a: RationalMatrix, s_hom, x: FreeElement
) -> FreeElement:
    """Apply phi(v + Z) = (A v) + (S_hom(v) + A Z A^eta) to an element of
    F_2(p,q); the map is certified as an automorphism on all basis pairs.

    ``s_hom`` is the list of m matrices S_hom(e_i) in so(p,q).
    """
    m = p + q
    if rank(a) != m:
        raise SingularAError("A is not invertible")
    s_hom = list(s_hom)
    if len(s_hom) != m:
        raise DimensionMismatchError("S_hom needs one image matrix per basis vector")
    a_eta = eta_conjugate(a, p, q)
    # certification: phi([e_i, e_j]) = [phi(e_i), phi(e_j)] on all pairs
    for i in range(m):
        for j in range(i + 1, m):
            ei = tuple(ONE if t == i else ZERO for t in range(m))
            ej = tuple(ONE if t == j else ZERO for t in range(m))
            lhs = a * free_bracket(p, q, (ei, None), (ej, None)) * a_eta
            rhs = free_bracket(p, q, (a.column(i), None), (a.column(j), None))
            if lhs != rhs:
                raise HomomorphismError("free automorphism certificate failed")
    xv = [rat(t) for t in x[0]]
    new_v = a.apply(xv)
    new_z = a * x[1] * a_eta if x[1] is not None else RationalMatrix.zeros(m, m)
    for c, s in zip(xv, s_hom):
        if c:
            new_z = new_z + s.scale(c)
    return new_v, new_z


def quotient_by_center_subspace(
    f: StandardPseudoMetricAlgebra, k: MatrixSubspace
) -> tuple[NilpotentAlgebra2, bool]:
    """Quotient F/K for a central subspace K, projecting brackets along a
    complement of K inside W.

    Prefers the trace-orthogonal complement; when K is degenerate for the
    trace form a row-reduction complement is used and the returned flag is
    False ("non-metric complement").
    """
    w = f.W
    if not w.contains_subspace(k):
        raise PreconditionError("K is not a subspace of the center")
    # trace-orthogonal complement of K inside W, in W coordinates
    if k.dim:
        pairing = RationalMatrix(
            [[-(kb * wb).trace() for wb in w.basis] for kb in k.basis]
        )
        from .exactlin import kernel_basis

        comp = [w.element(v) for v in kernel_basis(pairing)]
    else:
        comp = list(w.basis)
    metric = True
    span = SpanBuilder()
    for b in k.basis:
        span.add(matrix_to_sparse(b))
    if len(comp) != w.dim - k.dim or any(
        not span.add(matrix_to_sparse(b)) for b in comp
    ):
        # K meets its orthogonal complement; fall back to greedy extension
        metric = False
        span = SpanBuilder()
        for b in k.basis:
            span.add(matrix_to_sparse(b))
        comp = [b for b in w.basis if span.add(matrix_to_sparse(b))]
    # express brackets in K (+) complement coordinates, keep the complement part
    coord_span = SpanBuilder()
    for b in list(k.basis) + comp:
        coord_span.add(matrix_to_sparse(b))
    m = f.p + f.q
    nq = len(comp)
    new_structure = [[[ZERO] * m for _ in range(m)] for _ in range(nq)]
    for i in range(m):
        for j in range(i + 1, m):
            val = f.W.element([c.entry(i, j) for c in f.algebra.structure])
            coords = coord_span.coords(matrix_to_sparse(val))
            assert coords is not None
            for t in range(nq):
                x = coords.get(k.dim + t, ZERO)
                new_structure[t][i][j] = x
                new_structure[t][j][i] = -x
    comp_space = MatrixSubspace(m, comp) if comp else MatrixSubspace(m, [])
    gram = trace_gram(comp_space)
    form_z = None
    if nq:
        candidate = SignatureForm(gram)
        if candidate.is_nondegenerate():
            form_z = candidate
    structure = tuple(RationalMatrix(c) for c in new_structure)
    span2 = SpanBuilder()
    independent = all(span2.add(matrix_to_sparse(c)) for c in structure)
    algebra = NilpotentAlgebra2(
        m=m,
        n=nq,
        structure=structure,
        form_V=SignatureForm.standard(f.p, f.q),
        form_Z=form_z,
        tag="adapted" if (nq and independent) else "raw",
    )
    return algebra, metric


def orbit_witness_check(
    a: RationalMatrix, w1: MatrixSubspace, w2: MatrixSubspace, p: int, q: int
) -> bool:
    """Verify the orbit witness A W1 A^eta = W2 by mutual containment."""
    return gl_action(a, w1, p, q).equals(w2)
