"""Gorenstein property, dimensions, and Gorenstein projective modules.

A non-projective indecomposable X is Gorenstein projective exactly when its
syzygy orbit is purely periodic and the periodic complex of projectives it
spells out has an exact dual.  For a period X_0, ..., X_{t-1} with
Omega X_i = X_{i+1}, let Q_i = P(X_i) and f_i: Q_i -> Q_{i-1} the map with
image X_i.  Its valuation is nu_i = l(Q_{i-1}) - l(X_i), and

    exactness at Q_i        <=>  nu_i + nu_{i+1} = l(Q_{i-1})
    exactness of the dual   <=>  nu_i + nu_{i+1} = l(Q_{i+1}^*)

where Q^* = Hom(Q, A) is a right projective of length given by ``dual_lengths``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .errors import InternalInconsistency, LineUnsupported, ProjectiveInput
from .kupisch import (
    KupischSeries,
    dual_lengths,
    is_self_injective,
    opposite,
    theta_perfect_set,
)
from .modarith import (
    INF,
    Dim,
    Indec,
    check_module,
    indecomposables,
    inj_dim,
    injective_envelope,
    is_projective,
    proj_dim,
    simple,
    syzygy,
)
from .retraction import retract_step, transport_module


@lru_cache(maxsize=None)
def global_dim(a: KupischSeries) -> Dim:
    return max(proj_dim(a, simple(j)) for j in range(1, a.n + 1))


@lru_cache(maxsize=None)
def fin_dim(a: KupischSeries) -> int:
    finite = [p for X in indecomposables(a) if (p := proj_dim(a, X)) != INF]
    return max(finite)


def regular_inj_dim(a: KupischSeries) -> Dim:
    """Injective dimension of the regular module: max over the P_j."""
    return max(inj_dim(a, Indec(j, a.length(j))) for j in range(1, a.n + 1))


@lru_cache(maxsize=None)
def is_gorenstein(a: KupischSeries) -> tuple[bool, Optional[int]]:
    """Gorensteinness via the retraction recursion, with v.dim = fin.dim."""
    if not _gorenstein_recursive(a):
        return False, None
    return True, fin_dim(a)


def _gorenstein_recursive(a: KupischSeries) -> bool:
    if is_self_injective(a):
        return True
    step = retract_step(a)
    n = step.n_source
    image = transport_module(step, injective_envelope(step.source, n))
    if image is not None and proj_dim(step.target, image) == INF:
        return False
    return _gorenstein_recursive(step.target)


def gorenstein_oracle(a: KupischSeries) -> bool:
    """Two-sided definition: finite injective dimension of A on both sides."""
    return regular_inj_dim(a) != INF and regular_inj_dim(opposite(a)) != INF


class NotGPReason(str, enum.Enum):
    THETA_IMPERFECT = "ThetaImperfect"
    NOT_PERIODIC = "NotPeriodic"
    DUAL_INEXACT = "DualInexact"


@dataclass(frozen=True)
class NotGP:
    reason: NotGPReason
    detail: str = ""


@dataclass(frozen=True)
class GpCertificate:
    modules: tuple[Indec, ...]
    proj_indices: tuple[int, ...]
    valuations: tuple[int, ...]

    @property
    def period(self) -> int:
        return len(self.modules)


def _certificate(a: KupischSeries, orbit: list[Indec]) -> GpCertificate:
    t = len(orbit)
    proj = tuple(X.top for X in orbit)
    vals = tuple(a.length(proj[i - 1]) - orbit[i].len for i in range(t))
    return GpCertificate(tuple(orbit), proj, vals)


def certificate_defects(a: KupischSeries, cert: GpCertificate) -> list[str]:
    """Positions where the primal or dual exactness identity fails."""
    dual = dual_lengths(a)
    t, p, v = cert.period, cert.proj_indices, cert.valuations
    out = []
    for i in range(t):
        s = v[i] + v[(i + 1) % t]
        if s != a.length(p[i - 1]):
            out.append(f"exactness at position {i}: {s} != l(P_{p[i - 1]})")
        if s != dual[p[(i + 1) % t] - 1]:
            out.append(f"dual exactness at position {i}: {s} != l(P*_{p[(i + 1) % t]})")
    return out


def gp_test(a: KupischSeries, X: Indec) -> Union[GpCertificate, NotGP]:
    if not a.is_cycle:
        raise LineUnsupported(f"{a} is a line algebra (finite global dimension)")
    check_module(a, X)
    if is_projective(a, X):
        raise ProjectiveInput(f"S_{X.top}^[{X.len}] is projective")
    perfect = theta_perfect_set(a)
    j, k = X.top, a.idx(X.top + X.len)
    if j not in perfect or k not in perfect:
        return NotGP(NotGPReason.THETA_IMPERFECT, f"j={j}, k={k}, theta-perfect={list(perfect)}")
    orbit = [X]
    while True:
        nxt = syzygy(a, orbit[-1])
        if nxt is None:
            return NotGP(NotGPReason.NOT_PERIODIC, f"syzygy orbit reaches projective {orbit[-1]}")
        if nxt == X:
            break
        if nxt in orbit:
            return NotGP(NotGPReason.NOT_PERIODIC, f"orbit enters a cycle at {nxt} avoiding {X}")
        orbit.append(nxt)
    cert = _certificate(a, orbit)
    defects = certificate_defects(a, cert)
    if any(d.startswith("exactness") for d in defects):
        raise InternalInconsistency(f"syzygy orbit of {X} over {a} is not exact: {defects}")
    if defects:
        return NotGP(NotGPReason.DUAL_INEXACT, "; ".join(defects))
    return cert


@lru_cache(maxsize=None)
def gp_modules(a: KupischSeries) -> tuple[tuple[Indec, GpCertificate], ...]:
    """All non-projective Gorenstein projective indecomposables, sorted."""
    if not a.is_cycle or not theta_perfect_set(a):
        return ()
    out = []
    for X in indecomposables(a):
        if is_projective(a, X):
            continue
        res = gp_test(a, X)
        if isinstance(res, GpCertificate):
            out.append((X, res))
    return tuple(out)


def is_gorenstein_projective(a: KupischSeries, X: Indec) -> bool:
    if is_projective(a, X):
        return True
    if not a.is_cycle:
        return False
    return isinstance(gp_test(a, X), GpCertificate)


def is_cm_free(a: KupischSeries) -> bool:
    if a.is_cycle and not theta_perfect_set(a):
        return True
    return not gp_modules(a)


class Trichotomy(str, enum.Enum):
    GORENSTEIN = "Gorenstein"
    NON_GORENSTEIN_CM_FREE = "NonGorensteinCmFree"
    NON_GORENSTEIN_NOT_CM_FREE = "NonGorensteinNotCmFree"


@dataclass(frozen=True)
class TrichotomyClass:
    kind: Trichotomy
    v_dim: Optional[int] = None

    def __str__(self):
        if self.kind is Trichotomy.GORENSTEIN:
            return f"Gorenstein({self.v_dim})"
        return self.kind.value


def classify(a: KupischSeries) -> TrichotomyClass:
    gor, v_dim = is_gorenstein(a)
    if gor:
        return TrichotomyClass(Trichotomy.GORENSTEIN, v_dim)
    if is_cm_free(a):
        return TrichotomyClass(Trichotomy.NON_GORENSTEIN_CM_FREE)
    return TrichotomyClass(Trichotomy.NON_GORENSTEIN_NOT_CM_FREE)

