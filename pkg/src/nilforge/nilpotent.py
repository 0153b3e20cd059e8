"""2-step nilpotent metric Lie algebras.

The central type is ``NilpotentAlgebra2``: an m-dimensional complement V and
an n-dimensional center with antisymmetric structure matrices C^k, so that
[v_i, v_j] = sum_k C^k_{ij} z_k.  With scalar products on both parts the
bracket and the J-map determine each other through the duality

    <J_z v, w>_V = <z, [v, w]>_Z

which in Gram-matrix terms reads J_z = -G_V^{-1} sum_k (G_Z z)_k C^k.
Both directions (``j_map`` / ``algebra_from_J``) are implemented, and
``is_pseudo_H_type`` certifies the polarized orthogonality and square laws.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import (
    BadInputError,
    DegenerateFormError,
    DegenerateRestrictionError,
    DependentBasisError,
    DimensionMismatchError,
    HomomorphismError,
    NotAntisymmetricError,
    NotSkewError,
    PreconditionError,
)
from .exactlin import (
    ONE,
    ZERO,
    RationalMatrix,
    SignatureForm,
    SpanBuilder,
    char_poly,
    kernel_basis,
    inverse,
    rat,
    rat_to_str,
    rational_roots,
)


@dataclass(frozen=True)
class NilpotentAlgebra2:
    """2-step algebra in an adapted-or-raw basis.

    ``tag`` is "adapted" when the C^k are certified linearly independent;
    ``symbolic`` marks imported constants defined only up to an unknown real
    scale (they then carry no lattice information).
    """

    m: int
    n: int
    structure: tuple[RationalMatrix, ...]
    form_V: SignatureForm | None = None
    form_Z: SignatureForm | None = None
    tag: str = "raw"
    symbolic: bool = False

    def __post_init__(self):
        if len(self.structure) != self.n:
            raise DimensionMismatchError(
                f"{len(self.structure)} structure matrices for center dim {self.n}"
            )
        for c in self.structure:
            if c.rows != self.m or c.cols != self.m:
                raise DimensionMismatchError("structure matrix shape mismatch")
            if not c.is_antisymmetric():
                raise NotAntisymmetricError("structure matrix C^k is not antisymmetric")
        if self.form_V is not None and self.form_V.dim != self.m:
            raise DimensionMismatchError("form_V size != m")
        if self.form_Z is not None and self.form_Z.dim != self.n:
            raise DimensionMismatchError("form_Z size != n")
        if self.tag not in ("adapted", "raw"):
            raise BadInputError(f"unknown tag {self.tag!r}")
        if self.tag == "adapted":
            span = SpanBuilder()
            from .exactlin import matrix_to_sparse

            for c in self.structure:
                if not span.add(matrix_to_sparse(c)):
                    raise DependentBasisError(
                        "adapted tag requires independent structure matrices"
                    )

    @property
    def total_dim(self) -> int:
        return self.m + self.n

    def to_json(self) -> dict:
        obj = {
            "m": self.m,
            "n": self.n,
            "C": [[[rat_to_str(x) for x in c.row(i)] for i in range(self.m)] for c in self.structure],
            "form_V": self.form_V.to_json() if self.form_V else None,
            "form_Z": self.form_Z.to_json() if self.form_Z else None,
            "tag": self.tag,
        }
        if self.symbolic:
            obj["symbolic"] = True
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "NilpotentAlgebra2":
        try:
            structure = tuple(RationalMatrix(c) for c in obj["C"])
            return cls(
                m=obj["m"],
                n=obj["n"],
                structure=structure,
                form_V=SignatureForm.from_json(obj["form_V"]) if obj.get("form_V") else None,
                form_Z=SignatureForm.from_json(obj["form_Z"]) if obj.get("form_Z") else None,
                tag=obj.get("tag", "raw"),
                symbolic=bool(obj.get("symbolic", False)),
            )
        except (KeyError, TypeError) as exc:
            raise BadInputError(f"bad algebra object: {exc}") from exc


class MetricAlgebra:
    """A NilpotentAlgebra2 whose forms are present and non-degenerate."""

    __slots__ = ("algebra",)

    def __init__(self, algebra: NilpotentAlgebra2):
        if algebra.form_V is None or algebra.form_Z is None:
            raise DegenerateFormError("metric algebra requires both forms")
        if not algebra.form_V.is_nondegenerate():
            raise DegenerateFormError("form_V is degenerate")
        if not algebra.form_Z.is_nondegenerate():
            raise DegenerateFormError("form_Z is degenerate")
        self.algebra = algebra

    @property
    def m(self) -> int:
        return self.algebra.m

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def structure(self) -> tuple[RationalMatrix, ...]:
        return self.algebra.structure

    @property
    def form_V(self) -> SignatureForm:
        return self.algebra.form_V

    @property
    def form_Z(self) -> SignatureForm:
        return self.algebra.form_Z


def bracket(a: NilpotentAlgebra2, x, y) -> tuple[Fraction, ...]:
    """Lie bracket of two coordinate vectors of length m+n.

    Center components of the inputs contribute nothing (2-step); the output
    has zero V-part and center coordinates x_V^T C^k y_V.
    """
    xv = [rat(t) for t in x]
    yv = [rat(t) for t in y]
    if len(xv) != a.total_dim or len(yv) != a.total_dim:
        raise DimensionMismatchError("bracket arguments must have length m+n")
    out = [ZERO] * a.total_dim
    for k, c in enumerate(a.structure):
        acc = ZERO
        for i in range(a.m):
            if xv[i]:
                acc += xv[i] * sum((c.entry(i, j) * yv[j] for j in range(a.m)), ZERO)
        out[a.m + k] = acc
    return tuple(out)


def _weighted_structure(a: NilpotentAlgebra2, weights) -> RationalMatrix:
    acc = RationalMatrix.zeros(a.m, a.m)
    for w, c in zip(weights, a.structure):
        if w:
            acc = acc + c.scale(w)
    return acc


def j_map(ma: MetricAlgebra, z) -> RationalMatrix:
    """The map J_z on V defined by <J_z v, w>_V = <z, [v,w]>_Z."""
    zv = [rat(t) for t in z]
    if len(zv) != ma.n:
        raise DimensionMismatchError("center vector length != n")
    w = ma.form_Z.matrix.apply(zv)
    return -(ma.form_V.inverse_matrix() * _weighted_structure(ma.algebra, w))


def algebra_from_J(
    j_list,
    form_V: SignatureForm,
    form_Z: SignatureForm,
    symbolic: bool = False,
) -> MetricAlgebra:
    """Build the metric algebra whose J-map sends the k-th center basis
    vector to j_list[k]; inverse of ``j_map`` on basis vectors."""
    if not form_V.is_nondegenerate() or not form_Z.is_nondegenerate():
        raise DegenerateFormError("both forms must be non-degenerate")
    j_list = tuple(j_list)
    m = form_V.dim
    n = form_Z.dim
    if len(j_list) != n:
        raise DimensionMismatchError("need one J per center basis vector")
    gv = form_V.matrix
    for j in j_list:
        if j.rows != m or j.cols != m:
            raise DimensionMismatchError("J matrix size != m")
        if j.transpose() * gv != -(gv * j):
            raise NotSkewError("J_k is not skew-symmetric for form_V")
    gz_inv = form_Z.inverse_matrix()
    # J_l^T G_V = sum_k (G_Z)_{kl} C^k  =>  C^k = sum_l (G_Z^{-1})_{kl} J_l^T G_V
    rhs = [j.transpose() * gv for j in j_list]
    structure = []
    for k in range(n):
        acc = RationalMatrix.zeros(m, m)
        for l in range(n):
            c = gz_inv.entry(k, l)
            if c:
                acc = acc + rhs[l].scale(c)
        structure.append(acc)
    span = SpanBuilder()
    from .exactlin import matrix_to_sparse

    independent = all(span.add(matrix_to_sparse(c)) for c in structure)
    algebra = NilpotentAlgebra2(
        m=m,
        n=n,
        structure=tuple(structure),
        form_V=form_V,
        form_Z=form_Z,
        tag="adapted" if (independent and n > 0) else "raw",
        symbolic=symbolic,
    )
    return MetricAlgebra(algebra)


def derived_ideal(a: NilpotentAlgebra2) -> list[tuple[Fraction, ...]]:
    """Basis of span{[v_i, v_j]} in center coordinates."""
    span = SpanBuilder()
    basis = []
    for i in range(a.m):
        for j in range(i + 1, a.m):
            vec = tuple(c.entry(i, j) for c in a.structure)
            sparse = {k: x for k, x in enumerate(vec) if x}
            if sparse and span.add(sparse):
                basis.append(vec)
    return basis


def abelian_factor(ma: MetricAlgebra) -> tuple[NilpotentAlgebra2, int]:
    """Split the center as derived ideal + orthogonal abelian factor.

    Returns the reduced algebra (center = derived ideal, metric restricted)
    and the abelian factor dimension d = dim ker(J) = n - dim[g, g].
    """
    a = ma.algebra
    derived = derived_ideal(a)
    d = len(derived)
    a_dim = a.n - d
    gz = ma.form_Z.matrix
    gram = RationalMatrix(
        [[sum((x * y for x, y in zip(u, gz.apply(v))), ZERO) for v in derived] for u in derived]
    )
    restricted = SignatureForm(gram)
    if d and not restricted.is_nondegenerate():
        raise DegenerateRestrictionError("form_Z degenerates on the derived ideal")
    span = SpanBuilder()
    for vec in derived:
        span.add({k: x for k, x in enumerate(vec) if x})
    new_structure = [[[ZERO] * a.m for _ in range(a.m)] for _ in range(d)]
    for i in range(a.m):
        for j in range(i + 1, a.m):
            vec = tuple(c.entry(i, j) for c in a.structure)
            coords = span.coords({k: x for k, x in enumerate(vec) if x})
            assert coords is not None
            for k in range(d):
                val = coords.get(k, ZERO)
                new_structure[k][i][j] = val
                new_structure[k][j][i] = -val
    g_star = NilpotentAlgebra2(
        m=a.m,
        n=d,
        structure=tuple(RationalMatrix(c) for c in new_structure),
        form_V=a.form_V,
        form_Z=restricted,
        tag="adapted" if d else "raw",
        symbolic=a.symbolic,
    )
    return g_star, a_dim


def is_pseudo_H_type(ma: MetricAlgebra) -> dict:
    """Certify the pseudo H-type laws on polarized basis identities."""
    gv = ma.form_V.matrix
    gz = ma.form_Z.matrix
    m = ma.m
    ident = RationalMatrix.identity(m)
    zero = RationalMatrix.zeros(m, m)
    js = [j_map(ma, [ONE if k == l else ZERO for l in range(ma.n)]) for k in range(ma.n)]
    skew = all(j.transpose() * gv == -(gv * j) for j in js)
    square = True
    orth = True
    for k in range(ma.n):
        for l in range(k, ma.n):
            gkl = gz.entry(k, l)
            anti = js[k] * js[l] + js[l] * js[k]
            if anti != ident.scale(-2 * gkl):
                square = False
            pol = js[k].transpose() * gv * js[l] + js[l].transpose() * gv * js[k]
            if pol != gv.scale(2 * gkl):
                orth = False
    checks = {
        "skew_symmetry": skew,
        "square_law": square,
        "orthogonality": orth,
        "two_of_three": [skew, square, orth].count(True) != 2,
    }
    return {"checks": checks, "verdict": skew and square and orth}


def rescale_and_compare(ma: MetricAlgebra, c) -> bool:
    """Scale both forms by c, rebuild the bracket through the J-map duality
    and report whether the structure tensor is unchanged (always true)."""
    c = rat(c)
    if c == 0:
        raise PreconditionError("scale factor must be nonzero")
    form_v = ma.form_V.scaled(c)
    form_z = ma.form_Z.scaled(c)
    scaled = MetricAlgebra(
        NilpotentAlgebra2(
            m=ma.m,
            n=ma.n,
            structure=ma.structure,
            form_V=form_v,
            form_Z=form_z,
            tag=ma.algebra.tag,
        )
    )
    js = [
        j_map(scaled, [ONE if k == l else ZERO for l in range(ma.n)])
        for k in range(ma.n)
    ]
    rebuilt = algebra_from_J(js, form_v, form_z)
    return rebuilt.structure == ma.structure


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class ScalingOutcome:
    """Result of the metric-rescaling comparison of two algebras sharing a
    J-image: a certified (anti-)isometry when the scaling operator S has a
    rational square-root spectrum, otherwise the char poly evidence."""

    status: str  # "isometry" | "anti-isometry" | "irrational-scaling"
    s_matrix: RationalMatrix
    char_poly: tuple[Fraction, ...]
    phi_V: RationalMatrix | None = None
    phi_U_sign: int = 1
    certified: bool = False


def scaling_isomorphism(
    a1: MetricAlgebra, a2: MetricAlgebra, witness_vectors=()
) -> ScalingOutcome:
    """Compare two metric algebras sharing the same J-image via the scaling
    operator S defined by <v, w>_2 = <S v, w>_1.

    Preconditions (checked): equal dimensions, equal J-image span, S
    symmetric w.r.t. both forms and commuting with every J_z, and matching
    causal type on the rational eigenvectors of S plus any supplied witness
    vectors.
    """
    if a1.m != a2.m or a1.n != a2.n:
        raise PreconditionError("algebra dimensions differ")
    m = a1.m
    basis_z = [[ONE if k == l else ZERO for l in range(a1.n)] for k in range(a1.n)]
    js1 = [j_map(a1, z) for z in basis_z]
    js2 = [j_map(a2, z) for z in basis_z]
    from .exactlin import matrix_to_sparse

    span1, span2 = SpanBuilder(), SpanBuilder()
    for j in js1:
        span1.add(matrix_to_sparse(j))
    for j in js2:
        span2.add(matrix_to_sparse(j))
    if not all(span1.contains(matrix_to_sparse(j)) for j in js2) or not all(
        span2.contains(matrix_to_sparse(j)) for j in js1
    ):
        raise PreconditionError("the two algebras do not share a J-image")
    g1, g2 = a1.form_V.matrix, a2.form_V.matrix
    s = a1.form_V.inverse_matrix() * g2
    if s.transpose() * g1 != g1 * s or s.transpose() * g2 != g2 * s:
        raise PreconditionError("scaling operator fails symmetry")
    if any(s * j != j * s for j in js1 + js2):
        raise PreconditionError("scaling operator fails commutation with J")
    cp = char_poly(s)
    roots, remainder = rational_roots(cp)
    eigvecs = []
    diagonalizable = remainder == 0
    if diagonalizable:
        total = 0
        for lam, _mult in sorted(roots.items()):
            ker = kernel_basis(s - RationalMatrix.identity(m).scale(lam))
            total += len(ker)
            eigvecs.extend((lam, v) for v in ker)
        diagonalizable = total == m
    for v in list(witness_vectors) + [v for _, v in eigvecs]:
        s1 = a1.form_V.pair(v, v)
        s2 = a2.form_V.pair(v, v)
        if (s1 > 0) != (s2 > 0) or (s1 < 0) != (s2 < 0):
            raise PreconditionError("metrics disagree in causal type on a witness")
    sqrts = {lam: _rational_sqrt(lam) for lam in roots}
    if not diagonalizable or any(r is None for r in sqrts.values()):
        return ScalingOutcome("irrational-scaling", s, tuple(cp))
    # phi_V acts as sqrt(lambda) on each eigenspace
    cols = []
    mus = []
    for lam, v in eigvecs:
        cols.append(v)
        mus.append(sqrts[lam])
    b = RationalMatrix(cols).transpose()
    phi_v = b * RationalMatrix.diag(mus) * inverse(b)
    for sign, status in ((1, "isometry"), (-1, "anti-isometry")):
        ok = all(
            phi_v.transpose() * c1 * phi_v == c2.scale(sign)
            for c1, c2 in zip(a1.structure, a2.structure)
        )
        if ok:
            return ScalingOutcome(status, s, tuple(cp), phi_v, sign, True)
    raise HomomorphismError("neither isometry variant certifies; convention bug")
