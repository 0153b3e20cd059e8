"""Admissible Clifford modules with integer generators.

``build_module`` produces, for a signature (r, s), a module dimension N, a
diagonal +-1 module form and r+s generator matrices J_i with entries in
{-1, 0, 1} satisfying

- J_i^2 = -nu_i I  (nu_i = +1 for i <= r, -1 otherwise),
- J_i J_j + J_j J_i = 0 for i != j,
- eta J_i^T eta = -J_i  (skew-symmetry for the module form),

with the form positive definite when s = 0 and neutral of index (N/2, N/2)
when s > 0.

Construction: explicit integer tables for the base cases (1,0), (0,1),
(2,0), (1,1), (0,2), then two Kronecker doubling steps that each add one
generator while keeping the form diagonal:

- add_r: J -> J (x) E, new generator I (x) Q, form d -> d (x) I,
- add_s: J -> J (x) E, new generator I (x) P, form d -> d (x) (1, -1),

with E = diag(1,-1), Q = [[0,-1],[1,0]], P = [[0,1],[1,0]].  Every
constructed module is re-verified by ``verify_module``; nothing about the
recursion is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionMismatchError, UnsupportedSignatureError
from .exactlin import RationalMatrix, SignatureForm, rat

#: largest r+s accepted by build_module
SIGNATURE_CAP = 8

_E = ((1, 0), (0, -1))
_P = ((0, 1), (1, 0))
_Q = ((0, -1), (1, 0))


@dataclass(frozen=True)
class CliffordSignature:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 0 or self.s < 0 or self.r + self.s < 1:
            raise UnsupportedSignatureError(f"bad signature ({self.r},{self.s})")

    @property
    def n(self) -> int:
        return self.r + self.s

    def nu(self, i: int) -> int:
        """Sign of the i-th basis vector (1-based): +1 for i <= r."""
        return 1 if i <= self.r else -1


@dataclass(frozen=True)
class CliffordModule:
    signature: CliffordSignature
    module_dim: int
    module_form: SignatureForm
    generators: tuple[RationalMatrix, ...]
    construction_path: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "r": self.signature.r,
            "s": self.signature.s,
            "N": self.module_dim,
            "eta": [int(self.module_form.matrix.entry(i, i)) for i in range(self.module_dim)],
            "generators": [g.to_json() for g in self.generators],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CliffordModule":
        sig = CliffordSignature(obj["r"], obj["s"])
        form = SignatureForm(RationalMatrix.diag(obj["eta"]))
        gens = tuple(RationalMatrix.from_json(g) for g in obj["generators"])
        return cls(sig, obj["N"], form, gens)


def clifford_dim(sig: CliffordSignature) -> int:
    """Dimension 2^(r+s) of the Clifford algebra Cl_{r,s}."""
    return 2 ** (sig.r + sig.s)


def _kron(a_rows, b_rows):
    """Kronecker product on plain integer row tuples."""
    out = []
    for ar in a_rows:
        for br in b_rows:
            out.append(tuple(x * y for x in ar for y in br))
    return tuple(out)


def _ident(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


# base cases: (r, s) -> (list of generator row-tuples, form diagonal)
# the 4x4 tables are the worked generator pairs for n_{2,0}, n_{1,1}, n_{0,2}
_BASE = {
    (1, 0): ([_Q], (1, 1)),
    (0, 1): ([_P], (1, -1)),
    (2, 0): (
        [
            ((0, 0, -1, 0), (0, 0, 0, -1), (1, 0, 0, 0), (0, 1, 0, 0)),
            ((0, 0, 0, -1), (0, 0, 1, 0), (0, -1, 0, 0), (1, 0, 0, 0)),
        ],
        (1, 1, 1, 1),
    ),
    (1, 1): (
        [
            ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0)),
            ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0)),
        ],
        (1, 1, -1, -1),
    ),
    (0, 2): (
        [
            ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0)),
            ((0, 0, 0, 1), (0, 0, -1, 0), (0, -1, 0, 0), (1, 0, 0, 0)),
        ],
        (1, 1, -1, -1),
    ),
}


def _pick_base(r: int, s: int) -> tuple[int, int]:
    for br, bs in ((2, 0), (1, 1), (0, 2), (1, 0), (0, 1)):
        if br <= r and bs <= s:
            return br, bs
    raise UnsupportedSignatureError(f"no base case under ({r},{s})")


def _add_generator(r_gens, s_gens, form_diag, kind: str):
    """One doubling step: tensor old generators with E, append I (x) Q
    (kind 'r') or I (x) P (kind 's'); extend the form diagonal."""
    n = len(form_diag)
    r_gens = [_kron(g, _E) for g in r_gens]
    s_gens = [_kron(g, _E) for g in s_gens]
    if kind == "r":
        r_gens.append(_kron(_ident(n), _Q))
        form_diag = tuple(x for d in form_diag for x in (d, d))
    else:
        s_gens.append(_kron(_ident(n), _P))
        form_diag = tuple(x for d in form_diag for x in (d, -d))
    return r_gens, s_gens, form_diag


def _sort_form(r_gens, s_gens, form_diag):
    """Permute the basis so the form diagonal is all +1 then all -1."""
    order = [i for i, d in enumerate(form_diag) if d > 0] + [
        i for i, d in enumerate(form_diag) if d < 0
    ]
    if order == list(range(len(form_diag))):
        return r_gens, s_gens, form_diag

    def permute(g):
        return tuple(tuple(g[i][j] for j in order) for i in order)

    return (
        [permute(g) for g in r_gens],
        [permute(g) for g in s_gens],
        tuple(form_diag[i] for i in order),
    )


@lru_cache(maxsize=None)
def build_module(sig: CliffordSignature) -> CliffordModule:
    """Construct an admissible integer Clifford module for (r, s).

    Deterministic and immutable, hence memoized."""
    if sig.n > SIGNATURE_CAP:
        raise UnsupportedSignatureError(
            f"r+s = {sig.n} exceeds the implementation cap {SIGNATURE_CAP}"
        )
    br, bs = _pick_base(sig.r, sig.s)
    base_gens, form_diag = _BASE[(br, bs)]
    r_gens = list(base_gens[:br])
    s_gens = list(base_gens[br:])
    path = [f"base({br},{bs})"]
    for _ in range(sig.r - br):
        r_gens, s_gens, form_diag = _add_generator(r_gens, s_gens, form_diag, "r")
        path.append("add_r")
    for _ in range(sig.s - bs):
        r_gens, s_gens, form_diag = _add_generator(r_gens, s_gens, form_diag, "s")
        path.append("add_s")
    r_gens, s_gens, form_diag = _sort_form(r_gens, s_gens, form_diag)
    gens = tuple(RationalMatrix(g) for g in r_gens + s_gens)
    module = CliffordModule(
        signature=sig,
        module_dim=len(form_diag),
        module_form=SignatureForm(RationalMatrix.diag(form_diag)),
        generators=gens,
        construction_path=tuple(path),
    )
    report = verify_module(module)
    if not report["passed"]:
        # the recursion is self-certifying; a failure here is a builder bug
        raise UnsupportedSignatureError(
            f"internal: constructed module for ({sig.r},{sig.s}) failed verification"
        )
    return module


def _check_skew(module: CliffordModule) -> bool:
    e = module.module_form.matrix
    return all(e * j.transpose() * e == -j for j in module.generators)


def _check_square(module: CliffordModule) -> bool:
    n = module.module_dim
    ident = RationalMatrix.identity(n)
    sig = module.signature
    return all(
        j * j == ident.scale(-sig.nu(i + 1))
        for i, j in enumerate(module.generators)
    )


def _check_anticommute(module: CliffordModule) -> bool:
    gens = module.generators
    zero = RationalMatrix.zeros(module.module_dim, module.module_dim)
    return all(
        gens[i] * gens[j] + gens[j] * gens[i] == zero
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    )


def _check_orthogonality(module: CliffordModule) -> bool:
    """<J_z u, J_z' v> polarized over generators: J_i^T eta J_j + J_j^T eta J_i
    = 2 <z_i, z_j> eta, i.e. nu_i eta on the diagonal and 0 off it."""
    e = module.module_form.matrix
    gens = module.generators
    sig = module.signature
    n = len(gens)
    zero = RationalMatrix.zeros(module.module_dim, module.module_dim)
    for i in range(n):
        if gens[i].transpose() * e * gens[i] != e.scale(sig.nu(i + 1)):
            return False
        for j in range(i + 1, n):
            cross = gens[i].transpose() * e * gens[j] + gens[j].transpose() * e * gens[i]
            if cross != zero:
                return False
    return True


def verify_module(module: CliffordModule) -> dict:
    """Full certification report; failures are report entries, not errors."""
    sig = module.signature
    n = module.module_dim
    form = module.module_form
    skew = _check_skew(module)
    orth = _check_orthogonality(module)
    square = _check_square(module)
    if sig.s > 0:
        form_ok = (form.p, form.q, form.nullity) == (n // 2, n // 2, 0)
    else:
        form_ok = (form.p, form.q, form.nullity) == (n, 0, 0)
    checks = {
        "generator_count": len(module.generators) == sig.n,
        "square_law": square,
        "anticommutation": _check_anticommute(module),
        "admissible_skew": skew,
        "orthogonality": orth,
        "form_signature": form_ok,
        "integer_entries": all(
            x.denominator == 1 and abs(x.numerator) <= 1
            for g in module.generators
            for x in g.entries()
        ),
        # two-of-three spot check: the truth table over {skew, orthogonality,
        # square-law} must never show exactly two passes
        "two_of_three": [skew, orth, square].count(True) != 2,
    }
    return {
        "r": sig.r,
        "s": sig.s,
        "N": n,
        "construction_path": list(module.construction_path),
        "checks": checks,
        "passed": all(checks.values()),
    }


def extend_J(module: CliffordModule, z) -> RationalMatrix:
    """Linear extension z -> sum z_i J_i of the generator representation."""
    zv = [rat(x) for x in z]
    if len(zv) != module.signature.n:
        raise DimensionMismatchError(
            f"center vector length {len(zv)} != {module.signature.n}"
        )
    acc = RationalMatrix.zeros(module.module_dim, module.module_dim)
    for c, j in zip(zv, module.generators):
        if c:
            acc = acc + j.scale(c)
    return acc
