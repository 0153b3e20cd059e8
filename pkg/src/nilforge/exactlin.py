"""Exact rational dense linear algebra.

Everything is computed over ``fractions.Fraction``; there is no floating
point anywhere.  Matrix products of all-integer matrices are routed through
numpy int64 (with an explicit overflow bound check) purely as a speedup; the
result is identical to the Fraction path.

The module provides:

- ``RationalMatrix``: immutable dense matrix over the rationals,
- rank / kernel / solve / inverse / characteristic polynomial,
- ``signature``: Sylvester inertia by exact symmetric congruence
  diagonalization (with hyperbolic 2x2 handling of zero diagonal pivots),
- ``SignatureForm``: a symmetric matrix together with its inertia,
- ``MatrixSubspace``: a subspace of m x m matrices given by an independent
  basis, with exact membership and coordinate computations,
- ``trace_gram``: the Gram matrix of the trace form <X, Y> = -tr(XY),
- canonical string/JSON serialization with bit-exact round-trip.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from .errors import (
    BadInputError,
    DependentBasisError,
    DimensionMismatchError,
    NotSymmetricError,
    SingularMatrixError,
)

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

# ---------------------------------------------------------------------------
# rationals


_FCACHE = tuple(Fraction(i) for i in range(-256, 257))


def _frac_of_int(i: int) -> Fraction:
    return _FCACHE[i + 256] if -256 <= i <= 256 else Fraction(i)


def rat(x) -> Fraction:
    """Coerce an int, Fraction or canonical "a/b" string to a Fraction."""
    t = type(x)
    if t is Fraction:
        return x
    if t is int:
        return _frac_of_int(x)
    if t is str:
        return rat_from_str(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return _frac_of_int(x)
    raise BadInputError(f"cannot interpret {x!r} as a rational")


def rat_to_str(x: Fraction) -> str:
    """Canonical form "a/b", or "a" when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str) -> Fraction:
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise BadInputError(f"bad rational literal {s!r}") from exc


# ---------------------------------------------------------------------------
# matrices


def _as_row(xs) -> tuple[Fraction, ...]:
    return tuple(rat(x) for x in xs)


class RationalMatrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "_r", "_hash", "_int")

    def __init__(self, rows):
        self._r = tuple(_as_row(r) for r in rows)
        self.rows = len(self._r)
        self.cols = len(self._r[0]) if self._r else 0
        if any(len(r) != self.cols for r in self._r):
            raise DimensionMismatchError("ragged rows")
        self._hash = None
        self._int = None

    @classmethod
    def _raw(cls, frac_rows) -> "RationalMatrix":
        """Internal fast constructor from pre-validated Fraction row tuples."""
        m = object.__new__(cls)
        m._r = frac_rows
        m.rows = len(frac_rows)
        m.cols = len(frac_rows[0]) if frac_rows else 0
        m._hash = None
        m._int = None
        return m

    # -- constructors

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values) -> "RationalMatrix":
        vals = [rat(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    # -- access

    def entry(self, i: int, j: int) -> Fraction:
        return self._r[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._r[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._r)

    def entries(self):
        """Iterate over all entries row-major."""
        for r in self._r:
            yield from r

    # -- structure predicates

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries())

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._r[i][j] == self._r[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_antisymmetric(self) -> bool:
        return self.is_square() and all(
            self._r[i][j] == -self._r[j][i]
            for i in range(self.rows)
            for j in range(i, self.cols)
        )

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for x in self.entries())

    # -- arithmetic

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._r, other._r)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._r, other._r)]
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-a for a in r] for r in self._r])

    def scale(self, c) -> "RationalMatrix":
        c = rat(c)
        return RationalMatrix([[c * a for a in r] for r in self._r])

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            return _matmul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def apply(self, vec) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        v = tuple(rat(x) for x in vec)
        if len(v) != self.cols:
            raise DimensionMismatchError(f"vector length {len(v)} != cols {self.cols}")
        return tuple(sum((a * x for a, x in zip(r, v)), ZERO) for r in self._r)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self._r[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def trace(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatchError("trace of non-square matrix")
        return sum((self._r[i][i] for i in range(self.rows)), ZERO)

    def _check_same_shape(self, other: "RationalMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    # -- equality / hashing

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self._r == other._r

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._r)
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(rat_to_str(x) for x in r) for r in self._r)
        return f"RationalMatrix[{body}]"

    # -- serialization

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[rat_to_str(x) for x in r] for r in self._r],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RationalMatrix":
        try:
            entries = obj["entries"]
            m = cls(entries)
        except (KeyError, TypeError) as exc:
            raise BadInputError(f"bad matrix object: {exc}") from exc
        if m.rows != obj.get("rows", m.rows) or m.cols != obj.get("cols", m.cols):
            raise BadInputError("matrix shape fields disagree with entries")
        return m


_INT64_BOUND = 2**62


def _int_rows(m: RationalMatrix):
    """Rows as plain ints if every entry is an integer, else None; cached
    on the (immutable) matrix."""
    cached = m._int
    if cached is not None:
        return cached if cached is not False else None
    for r in m._r:
        for x in r:
            if x.denominator != 1:
                m._int = False
                return None
    out = tuple(tuple(x.numerator for x in r) for r in m._r)
    m._int = out
    return out


def _frac_rows_of_int_array(arr) -> tuple:
    return tuple(tuple(_frac_of_int(int(x)) for x in row) for row in arr)


def _matmul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.cols != b.rows:
        raise DimensionMismatchError(f"inner dims {a.cols} != {b.rows}")
    ia, ib = _int_rows(a), _int_rows(b)
    if ia is not None and ib is not None:
        try:
            na = np.array(ia, dtype=np.int64)
            nb = np.array(ib, dtype=np.int64)
        except OverflowError:
            na = None
        if na is not None:
            max_a = int(np.abs(na).max()) if na.size else 0
            max_b = int(np.abs(nb).max()) if nb.size else 0
            if max_a * max_b * max(a.cols, 1) < _INT64_BOUND:
                return RationalMatrix._raw(_frac_rows_of_int_array(na @ nb))
    bt = list(zip(*b._r))
    return RationalMatrix(
        [[sum((x * y for x, y in zip(ra, cb)), ZERO) for cb in bt] for ra in a._r]
    )


def commutator(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.rows == a.cols == b.rows == b.cols:
        ia, ib = _int_rows(a), _int_rows(b)
        if ia is not None and ib is not None:
            try:
                na = np.array(ia, dtype=np.int64)
                nb = np.array(ib, dtype=np.int64)
            except OverflowError:
                na = None
            if na is not None:
                max_a = int(np.abs(na).max()) if na.size else 0
                max_b = int(np.abs(nb).max()) if nb.size else 0
                if 2 * max_a * max_b * max(a.cols, 1) < _INT64_BOUND:
                    return RationalMatrix._raw(_frac_rows_of_int_array(na @ nb - nb @ na))
    return a * b - b * a


def eta(p: int, q: int) -> RationalMatrix:
    """The form matrix diag(I_p, -I_q)."""
    return RationalMatrix.diag([1] * p + [-1] * q)


# ---------------------------------------------------------------------------
# elimination-based operations (dense, small sizes)


def _rows_copy(m: RationalMatrix) -> list[list[Fraction]]:
    return [list(r) for r in m._r]


def rref(m: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot column indices."""
    a = _rows_copy(m)
    nrows, ncols = m.rows, m.cols
    pivots = []
    prow = 0
    for col in range(ncols):
        piv = next((r for r in range(prow, nrows) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[prow], a[piv] = a[piv], a[prow]
        d = a[prow][col]
        a[prow] = [x / d for x in a[prow]]
        for r in range(nrows):
            if r != prow and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[prow])]
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    return RationalMatrix(a), tuple(pivots)


def rank(m: RationalMatrix) -> int:
    _, pivots = rref(m)
    return len(pivots)


def kernel_basis(m: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space {v : Mv = 0}; empty iff full column rank."""
    r, pivots = rref(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for fc in free:
        v = [ZERO] * m.cols
        v[fc] = ONE
        for prow, pcol in enumerate(pivots):
            v[pcol] = -r.entry(prow, fc)
        basis.append(tuple(v))
    return basis


def solve(a: RationalMatrix, b) -> tuple[Fraction, ...]:
    """Solve Ax = b for square invertible A."""
    if not a.is_square():
        raise DimensionMismatchError("solve requires a square matrix")
    bv = [rat(x) for x in b]
    if len(bv) != a.rows:
        raise DimensionMismatchError("right-hand side length mismatch")
    aug = RationalMatrix([list(r) + [x] for r, x in zip(a._r, bv)])
    red, pivots = rref(aug)
    if len(pivots) != a.cols or (pivots and pivots[-1] == a.cols):
        raise SingularMatrixError("matrix is singular")
    return tuple(red.entry(i, a.cols) for i in range(a.rows))


def inverse(a: RationalMatrix) -> RationalMatrix:
    if not a.is_square():
        raise DimensionMismatchError("inverse of non-square matrix")
    n = a.rows
    aug = RationalMatrix(
        [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(a._r)]
    )
    red, pivots = rref(aug)
    if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) != n:
        raise SingularMatrixError("matrix is singular")
    return RationalMatrix([[red.entry(i, n + j) for j in range(n)] for i in range(n)])


def char_poly(m: RationalMatrix) -> list[Fraction]:
    """Coefficients [1, c_1, ..., c_n] of det(xI - M), highest degree first.

    Faddeev-LeVerrier recursion; exact over the rationals.
    """
    if not m.is_square():
        raise DimensionMismatchError("char_poly of non-square matrix")
    n = m.rows
    coeffs = [ONE]
    mk = RationalMatrix.identity(n)
    for k in range(1, n + 1):
        mk = m * mk
        ck = -mk.trace() / k
        coeffs.append(ck)
        if k < n:
            mk = mk + RationalMatrix.identity(n).scale(ck)
    return coeffs


def _poly_eval(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = ZERO
    for c in coeffs:
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def rational_roots(coeffs: list[Fraction]) -> tuple[dict[Fraction, int], int]:
    """Rational roots with multiplicities, plus the degree of the
    root-free remainder factor (0 when the polynomial splits over Q)."""
    work = list(coeffs)
    roots: dict[Fraction, int] = {}
    # strip zero roots first
    while len(work) > 1 and work[-1] == 0:
        roots[ZERO] = roots.get(ZERO, 0) + 1
        work = work[:-1]
    while len(work) > 1:
        den = lcm(*[c.denominator for c in work]) if len(work) > 1 else 1
        iw = [int(c * den) for c in work]
        lead, const = iw[0], iw[-1]
        found = None
        for p in _divisors(const):
            for q in _divisors(lead):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _poly_eval(work, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots[found] = roots.get(found, 0) + 1
        # synthetic division by (x - found)
        new = [work[0]]
        for c in work[1:-1]:
            new.append(c + found * new[-1])
        work = new
    return roots, len(work) - 1


# ---------------------------------------------------------------------------
# signature


def signature(m: RationalMatrix) -> tuple[int, int, int]:
    """Sylvester inertia (positives, negatives, nullity) of a symmetric matrix.

    Exact symmetric congruence diagonalization.  When every remaining
    diagonal entry is zero but some off-diagonal a_ij is not, the congruence
    v_i -> v_i + v_j creates the hyperbolic pair (+2a_ij on the diagonal)
    and elimination proceeds.
    """
    if not m.is_symmetric():
        raise NotSymmetricError("signature requires a symmetric matrix")
    a = _rows_copy(m)
    n = m.rows
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            hyper = next(
                (
                    (i, j)
                    for i in range(k, n)
                    for j in range(i + 1, n)
                    if a[i][j] != 0
                ),
                None,
            )
            if hyper is None:
                break  # remaining block is zero
            i, j = hyper
            # congruence: add row/col j to row/col i; diagonal becomes 2a_ij
            for c in range(n):
                a[i][c] += a[j][c]
            for r_ in range(n):
                a[r_][i] += a[r_][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for r_ in range(n):
                a[r_][k], a[r_][piv] = a[r_][piv], a[r_][k]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r_ in range(k + 1, n):
            if a[r_][k] != 0:
                f = a[r_][k] / d
                a[r_] = [x - f * y for x, y in zip(a[r_], a[k])]
        for c in range(k + 1, n):
            a[k][c] = ZERO
        # mirror the column elimination (rows below already updated)
        for r_ in range(k + 1, n):
            a[r_][k] = ZERO
        k += 1
    return pos, neg, n - pos - neg


class SignatureForm:
    """A symmetric non-degenerate-or-not bilinear form with cached inertia."""

    __slots__ = ("matrix", "p", "q", "nullity", "_inv")

    def __init__(self, matrix: RationalMatrix):
        if not matrix.is_symmetric():
            raise NotSymmetricError("form matrix must be symmetric")
        self.matrix = matrix
        self.p, self.q, self.nullity = signature(matrix)
        self._inv = None

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def is_nondegenerate(self) -> bool:
        return self.nullity == 0

    def inverse_matrix(self) -> RationalMatrix:
        if self._inv is None:
            self._inv = inverse(self.matrix)
        return self._inv

    def pair(self, u, v) -> Fraction:
        """Evaluate the form on two coordinate vectors."""
        return sum(
            (x * y for x, y in zip(u, self.matrix.apply(v))), ZERO
        )

    def scaled(self, c) -> "SignatureForm":
        return SignatureForm(self.matrix.scale(c))

    def __eq__(self, other) -> bool:
        return isinstance(other, SignatureForm) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(("SignatureForm", self.matrix))

    def to_json(self) -> dict:
        return self.matrix.to_json()

    @classmethod
    def from_json(cls, obj: dict) -> "SignatureForm":
        return cls(RationalMatrix.from_json(obj))

    @classmethod
    def standard(cls, p: int, q: int) -> "SignatureForm":
        return cls(eta(p, q))


# ---------------------------------------------------------------------------
# incremental sparse span (internal engine for subspace arithmetic)


class SpanBuilder:
    """Row-echelon span of sparse vectors with coordinate tracking.

    Vectors are dicts {index: Fraction} with zero entries absent.  Each
    echelon row remembers its expression in the originally added vectors, so
    ``coords`` recovers exact coefficients.
    """

    def __init__(self):
        self._rows: list[tuple[int, dict, dict]] = []  # (pivot, vec, comb)
        self._count = 0

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: dict) -> tuple[dict, dict]:
        v = dict(vec)
        comb: dict[int, Fraction] = {}
        for piv, row, rcomb in self._rows:
            c = v.get(piv)
            if not c:
                continue
            for idx, x in row.items():
                nv = v.get(idx, ZERO) - c * x
                if nv:
                    v[idx] = nv
                else:
                    v.pop(idx, None)
            for lbl, x in rcomb.items():
                nc = comb.get(lbl, ZERO) + c * x
                if nc:
                    comb[lbl] = nc
                else:
                    comb.pop(lbl, None)
        return v, comb

    def add(self, vec: dict) -> bool:
        """Add a vector; returns True iff it enlarged the span."""
        label = self._count
        self._count += 1
        v, comb = self._reduce(vec)
        if not v:
            return False
        piv = min(v)
        d = v[piv]
        row = {i: x / d for i, x in v.items()}
        rcomb = {lbl: -x / d for lbl, x in comb.items()}
        rcomb[label] = rcomb.get(label, ZERO) + ONE / d
        if rcomb[label] == 0:
            del rcomb[label]
        # keep full reduced echelon form: clear the new pivot column in the
        # existing rows so every reduction pass terminates with a canonical
        # residual
        updated = []
        for opiv, orow, ocomb in self._rows:
            c = orow.get(piv)
            if c:
                orow = dict(orow)
                ocomb = dict(ocomb)
                for idx, x in row.items():
                    nv = orow.get(idx, ZERO) - c * x
                    if nv:
                        orow[idx] = nv
                    else:
                        orow.pop(idx, None)
                for lbl, x in rcomb.items():
                    nc = ocomb.get(lbl, ZERO) - c * x
                    if nc:
                        ocomb[lbl] = nc
                    else:
                        ocomb.pop(lbl, None)
            updated.append((opiv, orow, ocomb))
        updated.append((piv, row, rcomb))
        updated.sort(key=lambda t: t[0])
        self._rows = updated
        return True

    def contains(self, vec: dict) -> bool:
        v, _ = self._reduce(vec)
        return not v

    def coords(self, vec: dict) -> dict | None:
        """Coefficients over the added vectors, or None if outside the span."""
        v, comb = self._reduce(vec)
        if v:
            return None
        return comb


def matrix_to_sparse(m: RationalMatrix) -> dict:
    out = {}
    idx = 0
    for r in m._r:
        for x in r:
            if x:
                out[idx] = x
            idx += 1
    return out


# ---------------------------------------------------------------------------
# matrix subspaces


class MatrixSubspace:
    """A subspace of ambient_dim x ambient_dim matrices with a fixed
    independent basis.  Dependent generator lists are rejected, not pruned."""

    __slots__ = ("ambient_dim", "basis", "_span")

    def __init__(self, ambient_dim: int, basis):
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        for b in self.basis:
            if b.rows != ambient_dim or b.cols != ambient_dim:
                raise DimensionMismatchError(
                    f"basis matrix is {b.rows}x{b.cols}, ambient is {ambient_dim}"
                )
        span = SpanBuilder()
        for b in self.basis:
            if not span.add(matrix_to_sparse(b)):
                raise DependentBasisError("generator list is linearly dependent")
        self._span = span

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, m: RationalMatrix) -> bool:
        if m.rows != self.ambient_dim or m.cols != self.ambient_dim:
            return False
        return self._span.contains(matrix_to_sparse(m))

    def coords(self, m: RationalMatrix) -> tuple[Fraction, ...] | None:
        """Coefficients of m over the basis, or None if m is outside."""
        if m.rows != self.ambient_dim or m.cols != self.ambient_dim:
            return None
        comb = self._span.coords(matrix_to_sparse(m))
        if comb is None:
            return None
        return tuple(comb.get(i, ZERO) for i in range(self.dim))

    def element(self, coeffs) -> RationalMatrix:
        acc = RationalMatrix.zeros(self.ambient_dim, self.ambient_dim)
        for c, b in zip(coeffs, self.basis):
            c = rat(c)
            if c:
                acc = acc + b.scale(c)
        return acc

    def equals(self, other: "MatrixSubspace") -> bool:
        """Subspace equality by mutual containment."""
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        return all(other.contains(b) for b in self.basis)

    def contains_subspace(self, other: "MatrixSubspace") -> bool:
        return self.ambient_dim == other.ambient_dim and all(
            self.contains(b) for b in other.basis
        )

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient_dim,
            "basis": [b.to_json() for b in self.basis],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "MatrixSubspace":
        try:
            return cls(obj["ambient"], [RationalMatrix.from_json(b) for b in obj["basis"]])
        except (KeyError, TypeError) as exc:
            raise BadInputError(f"bad subspace object: {exc}") from exc


def independent_subset(ambient_dim: int, mats) -> MatrixSubspace:
    """Span of an arbitrary matrix list as a subspace (independent subset kept)."""
    span = SpanBuilder()
    keep = []
    for m in mats:
        if span.add(matrix_to_sparse(m)):
            keep.append(m)
    return MatrixSubspace(ambient_dim, keep)


def trace_gram(s: MatrixSubspace) -> RationalMatrix:
    """Gram matrix of the trace form <X, Y> = -tr(XY) on the basis of s."""
    k = s.dim
    g = [[ZERO] * k for _ in range(k)]
    for a in range(k):
        for b in range(a, k):
            v = -(s.basis[a] * s.basis[b]).trace()
            g[a][b] = v
            g[b][a] = v
    return RationalMatrix(g)
