"""Brute-force reference computations on explicit composition series.

Used by the test-suite and the CLI self-checks to cross-validate the
arithmetic in :mod:`nakayama.modarith` and :mod:`nakayama.gorenstein`.
Deliberately shares nothing with those modules: modules here are lists of
simple indices read from top to socle, and every operation manipulates the
lists directly.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidFactorList, MalformedCertificate
from .kupisch import KupischSeries, phi


@dataclass(frozen=True)
class FactorList:
    factors: tuple[int, ...]

    def __len__(self):
        return len(self.factors)

    @property
    def top(self) -> int:
        return self.factors[0]


def _next(a: KupischSeries, j: int) -> Optional[int]:
    if a.is_cycle:
        return phi(a.n, j + 1)
    return j + 1 if j < a.n else None


def _prev(a: KupischSeries, j: int) -> Optional[int]:
    if a.is_cycle:
        return phi(a.n, j - 1)
    return j - 1 if j > 1 else None


def projective_factors(a: KupischSeries, j: int) -> tuple[int, ...]:
    out = [j]
    while len(out) < a.c[j - 1]:
        nxt = _next(a, out[-1])
        if nxt is None:
            raise InvalidFactorList(f"P_{j} runs off the end of line {a}")
        out.append(nxt)
    return tuple(out)


def is_valid(a: KupischSeries, X: FactorList) -> bool:
    """A nonempty list is a module iff it is a quotient (prefix) of P_top."""
    if not X.factors or not all(1 <= f <= a.n for f in X.factors):
        return False
    P = projective_factors(a, X.top)
    return len(X) <= len(P) and P[:len(X)] == X.factors


def all_modules(a: KupischSeries) -> list[FactorList]:
    out = []
    for j in range(1, a.n + 1):
        P = projective_factors(a, j)
        out.extend(FactorList(P[:l]) for l in range(1, len(P) + 1))
    return out


def brute_syzygy(a: KupischSeries, X: FactorList) -> Optional[FactorList]:
    if not is_valid(a, X):
        raise InvalidFactorList(f"{X.factors} is not a module over {a}")
    P = projective_factors(a, X.top)
    rest = P[len(X):]
    return FactorList(rest) if rest else None


def brute_proj_dim(a: KupischSeries, X: FactorList) -> float:
    seen = []
    while True:
        nxt = brute_syzygy(a, X)
        if nxt is None:
            return len(seen)
        if X in seen:
            return float("inf")
        seen.append(X)
        X = nxt


def brute_injective_envelope(a: KupischSeries, j: int) -> FactorList:
    """Grow S_j by essential extensions (adding a new top) until none exists."""
    Y = (j,)
    while True:
        p = _prev(a, Y[0])
        if p is None:
            break
        cand = FactorList((p,) + Y)
        if not is_valid(a, cand):
            break
        Y = cand.factors
    return FactorList(Y)


def envelope_is_essential(a: KupischSeries, j: int, I: FactorList) -> bool:
    """I has socle j, nothing with socle j is longer, and everything with socle j embeds."""
    if not is_valid(a, I) or I.factors[-1] != j:
        return False
    with_socle = [X for X in all_modules(a) if X.factors[-1] == j]
    return all(len(X) <= len(I) and I.factors[len(I) - len(X):] == X.factors
               for X in with_socle)


def brute_cartan(a: KupischSeries) -> list[list[int]]:
    rows = [[0] * a.n for _ in range(a.n)]
    for k in range(1, a.n + 1):
        for j, m in Counter(projective_factors(a, k)).items():
            rows[j - 1][k - 1] = m
    return rows


def dual_factors(a: KupischSeries, j: int) -> tuple[int, ...]:
    """Composition series of the right projective e_j A, from the top.

    e_j A e_k is spanned by the occurrences of S_j in P_k; as a right module
    the factors run j, j-1, j-2, ...
    """
    total = sum(projective_factors(a, k).count(j) for k in range(1, a.n + 1))
    out = [j]
    while len(out) < total:
        out.append(_prev(a, out[-1]))
    return tuple(out)


def verify_certificate(a: KupischSeries, cert) -> bool:
    """Rebuild one period of the complete resolution and test total acyclicity.

    ``cert`` is a :class:`nakayama.gorenstein.GpCertificate`.  Position i holds
    Q_i = P_{proj_indices[i]} and the map f_i: Q_i -> Q_{i-1} whose image is
    rad^{nu_i} Q_{i-1}.  Exactness of the complex and of its Hom(-, A)-dual is
    checked on explicit factor lists.
    """
    t = len(cert.modules)
    if t == 0 or len(cert.proj_indices) != t or len(cert.valuations) != t:
        raise MalformedCertificate("period, modules, projectives and valuations disagree")
    if any(not 1 <= p <= a.n for p in cert.proj_indices):
        raise MalformedCertificate(f"projective index out of range in {cert.proj_indices}")
    Q = [projective_factors(a, p) for p in cert.proj_indices]
    R = [dual_factors(a, p) for p in cert.proj_indices]
    v = cert.valuations

    for i in range(t):
        prev, nxt = (i - 1) % t, (i + 1) % t
        # f_i: Q_i -> Q_{prev} with image rad^{v_i} Q_prev
        if not 0 < v[i] < len(Q[prev]):
            return False
        image = Q[prev][v[i]:]
        if Q[i][:len(image)] != image:
            return False
        kernel = Q[i][len(image):]
        # exactness at Q_i: image of f_{i+1} equals kernel of f_i
        if Q[i][v[nxt]:] != kernel:
            return False
        # cocycle at Q_i is the cokernel of f_{i+1}
        X = cert.modules[i]
        if Q[i][:v[nxt]] != projective_factors(a, X.top)[:X.len]:
            return False

        # dual: f_i^*: R_prev -> R_i with image rad^{v_i} R_i
        if not 0 < v[i] < len(R[i]):
            return False
        dual_image = R[i][v[i]:]
        if R[prev][:len(dual_image)] != dual_image:
            return False
        # f_{i+1}^*: R_i -> R_nxt has image of length l(R_nxt) - v_nxt
        if not 0 < v[nxt] < len(R[nxt]):
            return False
        dual_kernel = R[i][len(R[nxt]) - v[nxt]:]
        if dual_image != dual_kernel:
            return False
    return True
