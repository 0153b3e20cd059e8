"""Lie triple systems inside so(p,q) and their generated algebras.

A subspace W of matrices is a Lie triple system when [W, [W, W]] lies back
in W.  It generates the Lie algebra L = W + [W, W] with the Cartan pair
(p, t) = (W, [W, W]).  The module certifies these inclusions exactly,
computes the Killing form in L's own basis coordinates, decides
semisimplicity by the Cartan criterion, performs the two-ideal split that
occurs for the Clifford signatures (3,0) and (1,2), and provides a seeded
randomized probe for proper ideals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .clifford import CliffordModule
from .errors import HomomorphismError, NotClosedError, SignatureError
from .exactlin import (
    MatrixSubspace,
    RationalMatrix,
    SignatureForm,
    SpanBuilder,
    commutator,
    eta,
    matrix_to_sparse,
    signature,
)


@dataclass(frozen=True)
class TripleSystemReport:
    is_triple: bool
    center_dim: int
    L_basis: MatrixSubspace
    L_dim: int
    killing: RationalMatrix | None = None
    killing_signature: tuple[int, int, int] | None = None
    cartan_certified: bool = False
    special_split: tuple[MatrixSubspace, MatrixSubspace] | None = None


def is_lie_triple(w: MatrixSubspace) -> bool:
    """[w_a, [w_b, w_c]] in span(W) for all basis triples."""
    inner = [
        commutator(w.basis[b], w.basis[c])
        for b in range(w.dim)
        for c in range(b + 1, w.dim)
    ]
    return all(w.contains(commutator(a, m)) for a in w.basis for m in inner)


def triple_center(w: MatrixSubspace) -> MatrixSubspace:
    """{a in W : [a, b] = 0 for all b in W}, computed as a kernel."""
    if w.dim == 0:
        return MatrixSubspace(w.ambient_dim, [])
    cols = []
    for a in range(w.dim):
        col = []
        for b in range(w.dim):
            col.extend(commutator(w.basis[a], w.basis[b]).entries())
        cols.append(col)
    stacked = RationalMatrix(cols).transpose()
    from .exactlin import kernel_basis

    return MatrixSubspace(
        w.ambient_dim, [w.element(v) for v in kernel_basis(stacked)]
    )


def _bracket_span(mats, ambient: int) -> list[RationalMatrix]:
    span = SpanBuilder()
    keep = []
    for m in mats:
        if span.add(matrix_to_sparse(m)):
            keep.append(m)
    return keep


def generated_algebra(w: MatrixSubspace) -> TripleSystemReport:
    """L = W + [W, W] with Cartan-pair certification and Killing data."""
    center = triple_center(w)
    if not is_lie_triple(w):
        return TripleSystemReport(
            is_triple=False,
            center_dim=center.dim,
            L_basis=w,
            L_dim=w.dim,
        )
    pair_brackets = [
        commutator(w.basis[a], w.basis[b])
        for a in range(w.dim)
        for b in range(a + 1, w.dim)
    ]
    t_basis = _bracket_span(pair_brackets, w.ambient_dim)
    t_span = SpanBuilder()
    for m in t_basis:
        t_span.add(matrix_to_sparse(m))
    l_span = SpanBuilder()
    l_list = []
    for m in list(w.basis) + t_basis:
        if l_span.add(matrix_to_sparse(m)):
            l_list.append(m)
    l_basis = MatrixSubspace(w.ambient_dim, l_list)
    # Cartan pair inclusions: [t,t] in t, [t,p] in p, [p,p] in t
    cartan = all(
        t_span.contains(matrix_to_sparse(commutator(t_basis[a], t_basis[b])))
        for a in range(len(t_basis))
        for b in range(a + 1, len(t_basis))
    )
    cartan = cartan and all(
        w.contains(commutator(t, p)) for t in t_basis for p in w.basis
    )
    cartan = cartan and all(
        t_span.contains(matrix_to_sparse(commutator(w.basis[a], w.basis[b])))
        for a in range(w.dim)
        for b in range(a + 1, w.dim)
    )
    killing = killing_form(l_basis)
    return TripleSystemReport(
        is_triple=True,
        center_dim=center.dim,
        L_basis=l_basis,
        L_dim=l_basis.dim,
        killing=killing,
        killing_signature=signature(killing),
        cartan_certified=cartan,
    )


def _ad_matrices(l: MatrixSubspace) -> list[RationalMatrix]:
    """ad_x in L's own basis coordinates for each basis x; errors when L is
    not closed under the bracket."""
    ads = []
    for x in l.basis:
        cols = []
        for y in l.basis:
            coords = l.coords(commutator(x, y))
            if coords is None:
                raise NotClosedError("subspace is not closed under the bracket")
            cols.append(list(coords))
        ads.append(RationalMatrix(cols).transpose())
    return ads


def killing_form(l: MatrixSubspace) -> RationalMatrix:
    """Gram of B(x, y) = tr(ad_x ad_y) in the basis of l."""
    ads = _ad_matrices(l)
    k = l.dim
    from .exactlin import ZERO

    g = [[ZERO] * k for _ in range(k)]
    for a in range(k):
        for b in range(a, k):
            v = (ads[a] * ads[b]).trace()
            g[a][b] = v
            g[b][a] = v
    return RationalMatrix(g)


def is_semisimple(l: MatrixSubspace) -> bool:
    """Cartan criterion: Killing form non-degenerate."""
    _, _, nullity = signature(killing_form(l))
    return nullity == 0


def clifford_triple_system(module: CliffordModule) -> MatrixSubspace:
    """W = J(R^{r,s}) = span of the module generators."""
    return MatrixSubspace(module.module_dim, module.generators)


@lru_cache(maxsize=None)
def clifford_triple_report(module: CliffordModule) -> TripleSystemReport:
    """generated_algebra for the module's W, with the (3,0)/(1,2) ideal
    split populated in the exceptional cases.

    Memoized: the report is a pure function of the (immutable) module and
    the computation is the most expensive in the package."""
    report = generated_algebra(clifford_triple_system(module))
    sig = (module.signature.r, module.signature.s)
    if report.is_triple and sig in ((3, 0), (1, 2)):
        split = special_ideal_split(sig[0], sig[1], module)
        report = TripleSystemReport(
            is_triple=report.is_triple,
            center_dim=report.center_dim,
            L_basis=report.L_basis,
            L_dim=report.L_dim,
            killing=report.killing,
            killing_signature=report.killing_signature,
            cartan_certified=report.cartan_certified,
            special_split=split,
        )
    return report


def special_ideal_split(
    r: int, s: int, module: CliffordModule
) -> tuple[MatrixSubspace, MatrixSubspace]:
    """The two commuting 3-dim ideals of L for (r,s) in {(3,0), (1,2)}.

    h_pm = J_1 pm J_2 J_3 together with its brackets against J_2 and J_3.
    Certifies: both spans are 3-dimensional, L = h_+ (+) h_-, the summands
    commute, and each is an ideal of L.
    """
    if (r, s) not in ((3, 0), (1, 2)):
        raise SignatureError(f"ideal split exists only for (3,0) and (1,2), not ({r},{s})")
    if (module.signature.r, module.signature.s) != (r, s):
        raise SignatureError("module signature does not match (r, s)")
    j1, j2, j3 = module.generators
    n = module.module_dim
    out = []
    for lam in (1, -1):
        h = j1 + (j2 * j3).scale(lam)
        h1 = commutator(h, j2)
        h2 = commutator(h, j3)
        out.append(MatrixSubspace(n, [h, h1, h2]))
    h_plus, h_minus = out
    report = generated_algebra(clifford_triple_system(module))
    l = report.L_basis
    span = SpanBuilder()
    for b in list(h_plus.basis) + list(h_minus.basis):
        if not span.add(matrix_to_sparse(b)):
            raise HomomorphismError("ideal split basis is dependent")
    if span.dim != l.dim:
        raise HomomorphismError("h_+ (+) h_- does not fill L")
    zero = RationalMatrix.zeros(n, n)
    if any(
        commutator(x, y) != zero for x in h_plus.basis for y in h_minus.basis
    ):
        raise HomomorphismError("h_+ and h_- do not commute")
    for part in (h_plus, h_minus):
        if any(
            not part.contains(commutator(x, y))
            for x in l.basis
            for y in part.basis
        ):
            raise HomomorphismError("split summand is not an ideal of L")
    return h_plus, h_minus


def decomposition_checks(w: MatrixSubspace) -> dict:
    """Linear-algebra consequences of the decomposition results: center of
    L, [L, L], direct-sum status and the triviality implication."""
    report = generated_algebra(w)
    if not report.is_triple:
        return {"is_triple": False}
    l = report.L_basis
    ads = _ad_matrices(l)
    stacked = RationalMatrix(
        [sum(([x for x in ad.column(j)] for ad in ads), []) for j in range(l.dim)]
    ).transpose()
    from .exactlin import kernel_basis

    z_l = [l.element(v) for v in kernel_basis(stacked)]
    ll = _bracket_span(
        [
            commutator(l.basis[a], l.basis[b])
            for a in range(l.dim)
            for b in range(a + 1, l.dim)
        ],
        l.ambient_dim,
    )
    span = SpanBuilder()
    for m in z_l + ll:
        span.add(matrix_to_sparse(m))
    direct_sum = span.dim == len(z_l) + len(ll) and span.dim == l.dim
    zw = triple_center(w).dim
    return {
        "is_triple": True,
        "center_W_dim": zw,
        "center_L_dim": len(z_l),
        "centers_equal_dim": zw == len(z_l),
        "L_dim": l.dim,
        "derived_L_dim": len(ll),
        "L_is_center_plus_derived": direct_sum,
        "trivial_center_implies_perfect": (zw != 0) or (len(ll) == l.dim),
    }


def theta_closure(d1: MatrixSubspace, d2: MatrixSubspace, p: int, q: int) -> dict:
    """Closure of the twist pair under theta(X) = eta X eta and transpose."""
    e = eta(p, q)

    def theta(x: RationalMatrix) -> RationalMatrix:
        return e * x * e

    theta_d1 = [theta(b) for b in d1.basis]
    theta_swaps = d1.dim == d2.dim and all(d2.contains(t) for t in theta_d1) and all(
        d1.contains(theta(b)) for b in d2.basis
    )
    span = SpanBuilder()
    sum_basis = []
    for b in list(d1.basis) + list(d2.basis):
        if span.add(matrix_to_sparse(b)):
            sum_basis.append(b)
    sum_space = MatrixSubspace(d1.ambient_dim, sum_basis)
    transpose_closed = all(sum_space.contains(-b.transpose()) for b in sum_basis)
    theta_closed = all(sum_space.contains(theta(b)) for b in sum_basis)
    from .exactlin import trace_gram

    gram1 = trace_gram(d1)
    gram_theta = RationalMatrix(
        [[-(x * y).trace() for y in theta_d1] for x in theta_d1]
    )
    return {
        "theta_maps_D1_onto_D2": theta_swaps,
        "sum_transpose_closed": transpose_closed,
        "sum_theta_invariant": theta_closed,
        "theta_is_isometry_on_D1": gram1 == gram_theta,
        "all": theta_swaps and transpose_closed and theta_closed and gram1 == gram_theta,
    }


def generated_ideal(l: MatrixSubspace, x: RationalMatrix) -> MatrixSubspace:
    """Smallest ad-invariant subspace of L containing x."""
    if not l.contains(x):
        raise NotClosedError("element is outside L")
    span = SpanBuilder()
    basis = []
    frontier = [x]
    if span.add(matrix_to_sparse(x)):
        basis.append(x)
    while frontier:
        new = []
        for s in frontier:
            for b in l.basis:
                c = commutator(b, s)
                if span.add(matrix_to_sparse(c)):
                    basis.append(c)
                    new.append(c)
        frontier = new
    return MatrixSubspace(l.ambient_dim, basis)


def ideal_probe(l: MatrixSubspace, seed: int, trials: int = 8) -> dict | None:
    """Seeded random search for a proper nonzero ideal: each trial generates
    the ideal of a random rational element.  Returns a witness dict or None.
    A None result is evidence, not proof, of simplicity."""
    rng = random.Random(seed)
    for trial in range(trials):
        coeffs = [rng.randint(-3, 3) for _ in range(l.dim)]
        if all(c == 0 for c in coeffs):
            coeffs[rng.randrange(l.dim)] = 1
        x = l.element(coeffs)
        ideal = generated_ideal(l, x)
        if 0 < ideal.dim < l.dim:
            return {"trial": trial, "coefficients": coeffs, "ideal_dim": ideal.dim}
    return None


def restricted_killing_nondegenerate(l: MatrixSubspace, part: MatrixSubspace) -> bool:
    """Non-degeneracy of the Killing form of L restricted to a subspace,
    evaluated in L coordinates."""
    ads = _ad_matrices(l)
    coords = [l.coords(b) for b in part.basis]
    if any(c is None for c in coords):
        raise NotClosedError("subspace not inside L")
    ad_of = [
        sum(
            (ads[i].scale(ci) for i, ci in enumerate(c) if ci),
            RationalMatrix.zeros(l.dim, l.dim),
        )
        for c in coords
    ]
    gram = RationalMatrix(
        [[(a * b).trace() for b in ad_of] for a in ad_of]
    )
    form = SignatureForm(gram)
    return form.is_nondegenerate()
