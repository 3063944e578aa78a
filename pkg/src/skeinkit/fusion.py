"""
Fusion-ring data, quantum dimensions and the F-matrix ``F^{qqq}_q`` for
``q (x) q = 1 + x_1 + ... + x_k`` with k <= 2 and every summand self-dual.

End(q (x) q) is handled in jack coordinates: coordinate 0 is the cup-cap
(the jack through the unit) and coordinate i is the jack through ``x_i``.
Jacks compose as ``jack_l o jack_m = delta_lm (d_q / sqrt(d_l)) jack_l`` and
close up to ``d_q sqrt(d_l)``. The quarter-turn rotation maps ``jack_l`` to
``bone_l``, whose jack coordinates are column ``l`` of ``kappa * F``, so the
rotation is the matrix ``kappa * F`` acting on jack coordinates directly.

Everything here is double precision; tolerances are 1e-9 or tighter.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .report import Report

__all__ = [
    "FusionError",
    "FusionRingData",
    "QDimVector",
    "QqqFMatrix",
    "EndQ2Element",
    "qdims",
    "f_matrix",
    "verify_f_identities",
    "jacobi_eigenvalues",
    "bone_in_jacks",
    "compose",
    "qtrace",
    "rotate",
    "skein_consistency_k1",
    "skein_consistency_k2",
    "new_bases",
    "normalization_factor",
    "theta_net",
]

DUBROVNIK = "dubrovnik"
KAUFFMAN = "kauffman"
SQRT2 = math.sqrt(2.0)


class FusionError(ValueError):
    """Invalid fusion data or a rejected parameter combination."""


class Inadmissible(FusionError):
    """Parameters that describe no unitary category (e.g. d_q not positive)."""


class RouteDisagreement(FusionError):
    """Independent formulas for the same quantity disagree."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


# fusion rings

@dataclass(frozen=True, eq=False)
class FusionRingData:
    labels: tuple[str, ...]
    N: np.ndarray
    dual: tuple[int, ...]

    def __post_init__(self):
        N = np.asarray(self.N)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "dual", tuple(int(i) for i in self.dual))
        r = len(self.labels)
        if N.shape != (r, r, r):
            raise FusionError(f"N must have shape {(r, r, r)}, got {N.shape}")
        if not np.all(N == np.round(N)) or N.min() < 0:
            raise FusionError("fusion coefficients must be nonnegative integers")
        N = N.astype(np.int64)
        N.setflags(write=False)
        object.__setattr__(self, "N", N)
        self.validate()

    def __eq__(self, other):
        return (isinstance(other, FusionRingData) and self.labels == other.labels
                and self.dual == other.dual and np.array_equal(self.N, other.N))

    def __hash__(self):
        return hash((self.labels, self.dual, self.N.tobytes()))

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def multiplicity_free(self) -> bool:
        return bool(self.N.max() <= 1)

    def validate(self) -> None:
        N, r, dual = self.N, self.rank, self.dual
        if sorted(dual) != list(range(r)) or any(dual[dual[i]] != i for i in range(r)):
            raise FusionError("dual must be an involution of the label indices")
        if dual[0] != 0:
            raise FusionError("the unit must be self-dual")
        eye = np.eye(r, dtype=np.int64)
        if not (np.array_equal(N[:, 0, :], eye) and np.array_equal(N[0, :, :], eye)):
            raise FusionError("label 0 is not a unit for the fusion rules")
        for i in range(r):
            for j in range(r):
                if N[i, j, 0] != (1 if j == dual[i] else 0):
                    raise FusionError(f"N^({i},{j})_0 must be 1 exactly when {j} is dual to {i}")
        # (a b) c versus a (b c)
        left = np.einsum("abe,ecd->abcd", N, N)
        right = np.einsum("afd,bcf->abcd", N, N)
        if not np.array_equal(left, right):
            raise FusionError("fusion rules are not associative")

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise FusionError(f"unknown label {label!r}") from None

    def fusion_matrix(self, q: int) -> np.ndarray:
        """Matrix with entries ``N^{q j}_k`` (row j, column k)."""
        return self.N[q].astype(float)

    def to_json_obj(self) -> dict:
        return {"labels": list(self.labels), "dual": list(self.dual), "N": self.N.tolist()}

    @classmethod
    def from_json_obj(cls, obj) -> "FusionRingData":
        try:
            return cls(tuple(obj["labels"]), np.array(obj["N"]), tuple(obj["dual"]))
        except (KeyError, TypeError) as exc:
            raise FusionError(f"bad fusion ring JSON: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "FusionRingData":
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def from_rules(cls, labels: Sequence[str], rules: dict[tuple[str, str], Sequence[str]],
                   dual: Sequence[int] | None = None) -> "FusionRingData":
        """Build from products of non-unit labels, e.g. ``{("t", "t"): ["1", "t"]}``.

        Products with the unit are filled in, and ``rules[(a, b)]`` also sets
        ``(b, a)`` unless given separately.
        """
        r = len(labels)
        N = np.zeros((r, r, r), dtype=np.int64)
        for i in range(r):
            N[0, i, i] = N[i, 0, i] = 1
        idx = {name: k for k, name in enumerate(labels)}
        for (x, y), out in rules.items():
            for name in out:
                N[idx[x], idx[y], idx[name]] += 1
                if (y, x) not in rules and x != y:
                    N[idx[y], idx[x], idx[name]] += 1
        return cls(tuple(labels), N, tuple(dual) if dual is not None else tuple(range(r)))


def fibonacci_ring() -> FusionRingData:
    return FusionRingData.from_rules(["1", "t"], {("t", "t"): ["1", "t"]})


def ising_ring() -> FusionRingData:
    return FusionRingData.from_rules(
        ["1", "s", "p"],
        {("s", "s"): ["1", "p"], ("s", "p"): ["s"], ("p", "p"): ["1"]},
    )


def rep_s3_ring() -> FusionRingData:
    """Representation ring of S3: the 2-dimensional q has q (x) q = 1 + y + q."""
    return FusionRingData.from_rules(
        ["1", "y", "q"],
        {("q", "q"): ["1", "y", "q"], ("y", "q"): ["q"], ("y", "y"): ["1"]},
    )


# quantum dimensions

@dataclass
class QDimVector:
    d: np.ndarray
    residual: float
    iterations: int
    unitary_ok: list[bool] = field(default_factory=list)

    def __getitem__(self, i):
        return self.d[i]


def _allowed_dimension(x: float, tol: float = 1e-9) -> bool:
    return abs(x - 1.0) < tol or x >= SQRT2 - tol


def qdims(ring: FusionRingData, q: int | str = 1, tol: float = 1e-12,
          max_iter: int = 100_000) -> QDimVector:
    """Perron-Frobenius dimensions from the fusion matrix of ``q``.

    Power iteration runs on ``N_q + I``; the shift keeps periodic fusion
    graphs (Ising, for example) from oscillating.
    """
    if isinstance(q, str):
        q = ring.index(q)
    r = ring.rank
    Nq = ring.fusion_matrix(q)
    # every label must be reachable from the unit by fusing with q
    reach = {0}
    frontier = [0]
    while frontier:
        j = frontier.pop()
        for k in np.nonzero(Nq[j])[0]:
            if int(k) not in reach:
                reach.add(int(k))
                frontier.append(int(k))
    if len(reach) != r:
        missing = [ring.labels[k] for k in range(r) if k not in reach]
        raise FusionError(f"labels {missing} are not reached by fusing with {ring.labels[q]}")
    M = Nq + np.eye(r)
    v = np.ones(r) / math.sqrt(r)
    lam = 0.0
    for it in range(1, max_iter + 1):
        w = M @ v
        w /= np.linalg.norm(w)
        new_lam = float(w @ M @ w)
        if abs(new_lam - lam) < tol * max(1.0, new_lam) and np.max(np.abs(w - v)) < tol:
            v, lam = w, new_lam
            break
        v, lam = w, new_lam
    else:
        raise FusionError(f"power iteration did not converge in {max_iter} steps")
    if np.any(v <= 0):
        raise FusionError("Perron vector has nonpositive entries")
    d = v / v[0]
    prod = np.einsum("ijk,k->ij", ring.N.astype(float), d)
    residual = float(np.max(np.abs(np.outer(d, d) - prod)))
    return QDimVector(d, residual, it, [_allowed_dimension(x) for x in d])


# F-matrices

@dataclass(frozen=True)
class QqqFMatrix:
    dims: tuple[float, ...]
    kappa: int
    M: np.ndarray
    variant: str | None = None

    @property
    def d_q(self) -> float:
        return self.dims[0]

    @property
    def k(self) -> int:
        return len(self.dims) - 1

    @property
    def channel_dims(self) -> np.ndarray:
        """Dimensions of the channels, with 1 for the unit first."""
        return np.array((1.0,) + tuple(self.dims[1:]))

    def rotation(self) -> np.ndarray:
        return self.kappa * self.M

    def to_json_obj(self) -> dict:
        return {"dims": list(self.dims), "kappa": self.kappa, "variant": self.variant,
                "matrix": self.M.tolist()}


def f_matrix(dims: Sequence[float], kappa: int = 1, variant: str | None = None,
             tol: float = 1e-9) -> QqqFMatrix:
    """Closed-form ``F^{qqq}_q`` from ``(d_q, d_x1, ...)``.

    A single dimension means k=0 when it is 1 and k=1 otherwise, with
    ``d_x = d_q^2 - 1``. For k=2 the variant picks ``R_x R_y = -1``
    (``"dubrovnik"``, the default) or ``R_x R_y = +1`` (``"kauffman"``).
    """
    if kappa not in (1, -1):
        raise FusionError("kappa must be +1 or -1")
    dims = tuple(float(x) for x in dims)
    if not dims or len(dims) > 3 or min(dims) <= 0:
        raise FusionError("need 1 to 3 positive dimensions (d_q, d_x, d_y)")
    d = dims[0]
    if len(dims) == 1:
        if abs(d - 1.0) < tol:
            return QqqFMatrix((d,), kappa, np.array([[kappa / d]]))
        if d < 1:
            raise FusionError("d_q must be at least 1")
        dims = (d, d * d - 1.0)
    if len(dims) == 2:
        dx = dims[1]
        if abs(d * d - 1 - dx) > tol:
            raise FusionError(f"dimension constraint d_q^2 = 1 + d_x violated by {d * d - 1 - dx:.3e}")
        s = math.sqrt(dx) / d
        M = kappa * np.array([[1 / d, s], [s, -1 / d]])
        return QqqFMatrix(dims, kappa, M)
    dx, dy = dims[1], dims[2]
    if abs(d * d - 1 - dx - dy) > tol:
        raise FusionError(f"dimension constraint d_q^2 = 1 + d_x + d_y violated by "
                          f"{d * d - 1 - dx - dy:.3e}")
    if kappa == -1:
        raise FusionError("antisymmetric self-duality excluded: with two nontrivial "
                          "summands q must be symmetrically self-dual")
    variant = (variant or DUBROVNIK).lower()
    sx, sy = math.sqrt(dx), math.sqrt(dy)
    if variant == DUBROVNIK:
        g = (d - 1) * d
        M = np.array([
            [1 / d, sx / d, sy / d],
            [sx / d, -dx / g + 1, -sx * sy / g],
            [sy / d, -sx * sy / g, -dy / g + 1],
        ])
    elif variant == KAUFFMAN:
        g = (d + 1) * d
        M = np.array([
            [1 / d, sx / d, sy / d],
            [sx / d, dx / g - 1, sx * sy / g],
            [sy / d, sx * sy / g, dy / g - 1],
        ])
    else:
        raise FusionError(f"unknown variant {variant!r}")
    return QqqFMatrix(dims, kappa, M, variant)


def jacobi_eigenvalues(A: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending."""
    A = np.array(A, dtype=float)
    n = A.shape[0]
    scale = max(1.0, float(np.max(np.abs(A))))
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(A - np.diag(np.diag(A))))
        if off < tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(A[p, q]) < 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2 * A[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                J = np.eye(n)
                J[p, p] = J[q, q] = c
                J[p, q] = s
                J[q, p] = -s
                A = J.T @ A @ J
    else:
        raise FusionError("Jacobi sweeps did not converge")
    return np.sort(np.diag(A))


def expected_spectrum(F: QqqFMatrix) -> tuple[int, int] | None:
    """(dim V_1, dim V_-1) of the rotation from the cycle bookkeeping (n - f, n - b)."""
    if F.k == 0:
        return (1, 0)
    if F.k == 1:
        n, b, f = 1, 0, 0
    elif F.variant == DUBROVNIK:
        n, b, f = 2, 1, 0
    elif F.variant == KAUFFMAN:
        n, b, f = 2, 0, 1
    else:
        return None
    return n - f, n - b


def verify_f_identities(F: QqqFMatrix, tol: float = 1e-10) -> Report:
    M, kappa, d = F.M, F.kappa, F.d_q
    dl = F.channel_dims
    root = np.sqrt(dl)
    size = len(dl)
    rep = Report(f"F-matrix identities dims={tuple(round(x, 12) for x in F.dims)} kappa={kappa}")
    rep.tolerance("first row", float(np.max(np.abs(M[0] - kappa * root / d))), tol)
    col = kappa * (root / d) @ M
    rep.tolerance("column sums", float(np.max(np.abs(col - np.eye(size)[0]))), tol)
    rep.tolerance("symmetry", float(np.max(np.abs(M - M.T))), tol)
    rep.tolerance("involution", float(np.max(np.abs(M @ M - np.eye(size)))), tol)
    rep.tolerance("orthogonality", float(np.max(np.abs(M @ M.T - np.eye(size)))), tol)
    tr = float(np.trace(M))
    rep.add("trace bound", abs(tr) < size - tol, abs(tr), f"|trace| < {size}")
    if F.k == 2:
        want = 1.0 if F.variant == DUBROVNIK else -1.0
        rep.tolerance("trace sign", abs(tr - want), tol, f"trace should be {want:+.0f}")
    ev = jacobi_eigenvalues(F.rotation())
    rep.tolerance("eigenvalues are +-1", float(np.max(np.abs(np.abs(ev) - 1))), 1e-9)
    plus = int(np.sum(ev > 0))
    minus = size - plus
    want = expected_spectrum(F)
    if want is not None:
        rep.add("eigenvalue multiplicities", (plus, minus) == want,
                detail=f"(+1: {plus}, -1: {minus}) expected {want}")
    return rep


# End(q (x) q) in jack coordinates

@dataclass(frozen=True)
class EndQ2Element:
    dims: tuple[float, ...]
    c: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.c, dtype=complex)
        if c.shape != (len(self.dims),):
            raise FusionError("coefficient vector does not match the dimensions")
        object.__setattr__(self, "dims", tuple(float(x) for x in self.dims))
        object.__setattr__(self, "c", c)

    @property
    def d_q(self) -> float:
        return self.dims[0]

    @property
    def channel_dims(self) -> np.ndarray:
        return np.array((1.0,) + self.dims[1:])

    @classmethod
    def jack(cls, dims, lam: int) -> "EndQ2Element":
        c = np.zeros(len(dims), dtype=complex)
        c[lam] = 1
        return cls(tuple(dims), c)

    @classmethod
    def cupcap(cls, dims) -> "EndQ2Element":
        return cls.jack(dims, 0)

    @classmethod
    def projector(cls, dims, lam: int) -> "EndQ2Element":
        dl = (1.0,) + tuple(dims[1:])
        return cls.jack(dims, lam) * (math.sqrt(dl[lam]) / dims[0])

    @classmethod
    def identity(cls, dims) -> "EndQ2Element":
        dl = np.array((1.0,) + tuple(dims[1:]))
        return cls(tuple(dims), np.sqrt(dl) / dims[0])

    def _check(self, other: "EndQ2Element"):
        if not np.allclose(self.dims, other.dims, rtol=0, atol=1e-12):
            raise FusionError("dimension mismatch")

    def __add__(self, other):
        self._check(other)
        return EndQ2Element(self.dims, self.c + other.c)

    def __sub__(self, other):
        self._check(other)
        return EndQ2Element(self.dims, self.c - other.c)

    def __neg__(self):
        return EndQ2Element(self.dims, -self.c)

    def __mul__(self, s):
        return EndQ2Element(self.dims, self.c * s)

    __rmul__ = __mul__

    def dagger(self) -> "EndQ2Element":
        return EndQ2Element(self.dims, np.conj(self.c))

    def distance(self, other: "EndQ2Element") -> float:
        return float(np.max(np.abs(self.c - other.c)))


def _dims_of(F_or_dims) -> tuple[float, ...]:
    if isinstance(F_or_dims, QqqFMatrix):
        return (F_or_dims.d_q,) + tuple(F_or_dims.dims[1:])
    return tuple(F_or_dims)


def compose(x: EndQ2Element, y: EndQ2Element) -> EndQ2Element:
    """``x`` stacked on ``y``; only matching jacks survive."""
    x._check(y)
    return EndQ2Element(x.dims, x.c * y.c * (x.d_q / np.sqrt(x.channel_dims)))


def qtrace(x: EndQ2Element) -> complex:
    val = complex(np.sum(x.c * x.d_q * np.sqrt(x.channel_dims)))
    return val.real if abs(val.imag) < 1e-15 * max(1.0, abs(val)) else val


def bone_in_jacks(lam: int, F: QqqFMatrix) -> EndQ2Element:
    """The bone through channel ``lam`` (the rotated jack): column ``lam`` of kappa*F."""
    dims = _dims_of(F)
    if not 0 <= lam < len(dims):
        raise FusionError(f"channel {lam} out of range")
    return EndQ2Element(dims, F.kappa * F.M[:, lam])


def rotate(x: EndQ2Element, F: QqqFMatrix) -> EndQ2Element:
    x._check(EndQ2Element(_dims_of(F), np.zeros(len(x.dims))))
    return EndQ2Element(x.dims, F.rotation() @ x.c)


def inner(x: EndQ2Element, y: EndQ2Element) -> complex:
    """``qtrace(x o y^dagger)``."""
    return qtrace(compose(x, y.dagger()))


def crossing_in_jacks(R: Sequence[complex], dims: Sequence[float]) -> EndQ2Element:
    """The crossing acting by ``R[l]`` on channel ``l``."""
    R = np.asarray(R, dtype=complex)
    dl = np.array((1.0,) + tuple(dims[1:]))
    return EndQ2Element(tuple(dims), R * np.sqrt(dl) / dims[0])


# skein consistency

@dataclass
class K1Consistency:
    alpha: complex
    d_q: float
    theta: complex
    twist_residual: float


def skein_consistency_k1(beta: complex, kappa: int = 1, tol: float = 1e-9) -> K1Consistency:
    """R-matrix and dimension data forced by the bracket relation when q (x) q = 1 + x."""
    beta = complex(beta)
    if abs(abs(beta) - 1) > tol:
        raise FusionError("beta must have modulus 1")
    alpha = -beta ** -3
    dq = -kappa * (beta ** 2 + beta ** -2)
    if abs(dq.imag) > tol or dq.real <= tol:
        raise FusionError(f"d_q = {dq:.6g} is not real and positive")
    d = dq.real
    if not _allowed_dimension(d):
        raise FusionError(f"d_q = {d:.6g} lies in the forbidden gap (1, sqrt 2)")
    theta = kappa / alpha
    dx = d * d - 1
    twist = (alpha + beta * dx) / d
    return K1Consistency(alpha, d, theta, abs(twist - theta))


@dataclass
class K2Consistency:
    variant: str | None
    d_q: float | None = None
    routes: tuple[complex, ...] = ()

    @property
    def spread(self) -> float:
        return max((abs(u - v) for u in self.routes for v in self.routes), default=0.0)
    degenerate: str | None = None
    skein: str | None = None


def skein_consistency_k2(alpha: complex, beta: complex, gamma: complex, kappa: int = 1,
                         tol: float = 1e-9) -> K2Consistency:
    """Classify (alpha, beta, gamma) and compute d_q three ways.

    The routes are the closed form through the twist ``theta = kappa/alpha``
    and the two case formulas that use beta or gamma alone.
    """
    alpha, beta, gamma = complex(alpha), complex(beta), complex(gamma)
    if abs(beta - gamma) < tol:
        return K2Consistency(None, degenerate="beta = gamma", skein="reduces to the k=1 bracket")
    prod = beta * gamma
    if abs(prod + 1) < tol:
        variant = DUBROVNIK
    elif abs(prod - 1) < tol:
        variant = KAUFFMAN
    else:
        raise FusionError(f"beta*gamma = {prod:.6g} is neither +1 nor -1")
    z = beta + gamma
    if abs(z) < tol:
        if variant == DUBROVNIK:
            return K2Consistency(variant, degenerate="alpha, beta, gamma in {+1, -1}", skein="L+ = L-")
        return K2Consistency(variant, degenerate="alpha, beta, gamma in {+i, -i}", skein="L+ = -L-")
    theta = kappa / alpha
    ai = 1 / alpha
    if variant == DUBROVNIK:
        closed = (theta - 1 / theta) / z + kappa
        if kappa == 1:
            by_beta = (ai - alpha) / (beta - 1 / beta) + 1
            by_gamma = (ai - alpha) / (gamma - 1 / gamma) + 1
        else:
            by_beta = (alpha - ai) / (beta - 1 / beta) - 1
            by_gamma = (alpha - ai) / (gamma - 1 / gamma) - 1
    else:
        closed = (theta + 1 / theta) / z - kappa
        if kappa == 1:
            by_beta = (ai + alpha) / (beta + 1 / beta) - 1
            by_gamma = (ai + alpha) / (gamma + 1 / gamma) - 1
        else:
            by_beta = -(ai + alpha) / (beta + 1 / beta) + 1
            by_gamma = -(ai + alpha) / (gamma + 1 / gamma) + 1
    res = K2Consistency(variant, closed.real, (closed, by_beta, by_gamma))
    if res.spread > tol:
        raise RouteDisagreement(f"d_q formulas disagree by {res.spread:.3e}", res)
    if abs(closed.imag) > tol or closed.real <= 0:
        raise Inadmissible(f"d_q = {closed:.6g} is not real and positive")
    return res


# rotation-permuted bases at k=2

def new_bases(F: QqqFMatrix, tol: float = 1e-10) -> tuple[Report, dict]:
    """Build J_x, J'_y and J+-_xy and check the claims made about them.

    Returns the report and a dict of the constructed elements.
    """
    if F.k != 2:
        raise FusionError("new bases need k = 2")
    dims = _dims_of(F)
    _, dx, dy = dims
    jack = {lam: EndQ2Element.jack(dims, lam) for lam in range(3)}
    bone = {lam: bone_in_jacks(lam, F) for lam in range(3)}
    J = {lam: jack[lam] + bone[lam] for lam in (1, 2)}
    Jp = {lam: bone[lam] - jack[lam] for lam in (1, 2)}
    ident = EndQ2Element.identity(dims)
    cc = EndQ2Element.cupcap(dims)
    plus = J[1] * math.sqrt(dx) + Jp[2] * math.sqrt(dy)
    minus = J[1] * math.sqrt(dx) - Jp[2] * math.sqrt(dy)
    dub = F.variant == DUBROVNIK
    extra = ident + cc if dub else ident - cc
    wrong = ident - cc if dub else ident + cc

    def gram(vectors):
        rows = np.array([v.c / np.linalg.norm(v.c) for v in vectors])
        return abs(np.linalg.det(rows))

    rep = Report(f"rotation-permuted bases ({F.variant})")
    pm = np.array([plus.c, minus.c])
    sv = np.linalg.svd(pm, compute_uv=False)
    rep.add("J+ and J- independent", sv[-1] / sv[0] > 1e-6, float(sv[-1] / sv[0]))
    g = gram([plus, minus, extra])
    rep.add("three-element set is a basis", g > 1e-6, g, "normalised |det|")
    g_wrong = gram([plus, minus, wrong])
    rep.add("other sign choice is degenerate", g_wrong < 1e-9, g_wrong)
    rep.tolerance("rotate(J+) = J-", rotate(plus, F).distance(minus), tol)
    rep.tolerance("rotate(J-) = J+", rotate(minus, F).distance(plus), tol)

    if dub:
        v1 = {"J_x": J[1], "id+cupcap": ident + cc}
        vm = {"J'_y": Jp[2]}
    else:
        v1 = {"J_x": J[1]}
        vm = {"J'_y": Jp[2], "id-cupcap": ident - cc}
    for name, v in v1.items():
        rep.tolerance(f"{name} in V_1", rotate(v, F).distance(v), tol)
    for name, v in vm.items():
        rep.tolerance(f"{name} in V_-1", rotate(v, F).distance(-v), tol)
    # the spans above must fill the eigenspaces
    ev = jacobi_eigenvalues(F.rotation())
    dims_pm = (int(np.sum(ev > 0)), int(np.sum(ev < 0)))
    rank1 = np.linalg.matrix_rank(np.array([v.c for v in v1.values()]), tol=1e-9)
    rankm = np.linalg.matrix_rank(np.array([v.c for v in vm.values()]), tol=1e-9)
    rep.add("eigenspace dimensions", (rank1, rankm) == dims_pm == expected_spectrum(F),
            detail=f"spans {(int(rank1), int(rankm))}, spectrum {dims_pm}")
    # swapping the roles of x and y
    rep.tolerance("J_y in V_1", rotate(J[2], F).distance(J[2]), tol)
    rep.tolerance("J'_x in V_-1", rotate(Jp[1], F).distance(-Jp[1]), tol)
    elements = {"J_x": J[1], "J_y": J[2], "J'_x": Jp[1], "J'_y": Jp[2],
                "J+": plus, "J-": minus}
    return rep, elements


def normalization_factor(dx: float, dy: float, dz: float) -> float:
    return (dz / (dx * dy)) ** 0.25


def theta_net(dx: float, dy: float, dz: float) -> float:
    return math.sqrt(dx * dy * dz)


def unit_circle(angle: float) -> complex:
    return cmath.exp(1j * angle)
