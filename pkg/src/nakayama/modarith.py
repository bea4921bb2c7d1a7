"""Arithmetic of indecomposable modules over a Nakayama algebra.

Every indecomposable is uniserial and determined by its top S_j and its
length l; we write it S_j^[l] and store it as ``Indec(j, l)``.  The zero
module is represented by ``None``.  Dimensions are ints, or ``math.inf``
when the (co)syzygy orbit cycles without reaching a projective (injective).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Union

from .errors import InvalidModule, ParseError, ProjectiveInput
from .kupisch import KupischSeries

INF = math.inf
Dim = Union[int, float]


@dataclass(frozen=True, order=True)
class Indec:
    top: int
    len: int

    def __str__(self):
        return f"{self.top}:{self.len}"


def parse_module(text: str) -> Indec:
    m = re.fullmatch(r"\s*(\d+)\s*:\s*(\d+)\s*", text)
    if not m:
        raise ParseError(f"expected a module as 'j:l', got {text!r}")
    return Indec(int(m.group(1)), int(m.group(2)))


def check_module(a: KupischSeries, X: Indec) -> None:
    if not 1 <= X.top <= a.n:
        raise InvalidModule(f"top {X.top} outside 1..{a.n}")
    if not 1 <= X.len <= a.length(X.top):
        raise InvalidModule(
            f"S_{X.top}^[{X.len}] does not exist: l(P_{X.top})={a.length(X.top)}")


def indecomposables(a: KupischSeries) -> Iterator[Indec]:
    for j in range(1, a.n + 1):
        for l in range(1, a.length(j) + 1):
            yield Indec(j, l)


def simple(j: int) -> Indec:
    return Indec(j, 1)


def projective(a: KupischSeries, j: int) -> Indec:
    return Indec(j, a.length(j))


def is_projective(a: KupischSeries, X: Indec) -> bool:
    check_module(a, X)
    return X.len == a.length(X.top)


def top_socle(a: KupischSeries, X: Indec) -> tuple[int, int]:
    check_module(a, X)
    return X.top, a.idx(X.top + X.len - 1)


def socle(a: KupischSeries, X: Indec) -> int:
    return top_socle(a, X)[1]


def syzygy(a: KupischSeries, X: Indec) -> Optional[Indec]:
    """Kernel of the projective cover P_j -> S_j^[l]: the module S_{j+l}^[c_j - l]."""
    check_module(a, X)
    j, l = X.top, X.len
    if l == a.length(j):
        return None
    return Indec(a.idx(j + l), a.length(j) - l)


def injective_envelope(a: KupischSeries, j: int) -> Indec:
    """Longest indecomposable with socle S_j.

    The lengths of modules with a fixed socle form an initial segment 1..L,
    because the radical of such a module has the same socle.
    """
    if not 1 <= j <= a.n:
        raise InvalidModule(f"simple index {j} outside 1..{a.n}")
    best = Indec(j, 1)
    l = 2
    while True:
        k = j - l + 1
        if a.is_cycle:
            k = (k - 1) % a.n + 1
        elif k < 1:
            break
        if a.length(k) < l:
            break
        best = Indec(k, l)
        l += 1
    return best


def is_injective(a: KupischSeries, X: Indec) -> bool:
    return injective_envelope(a, socle(a, X)) == X


def cosyzygy(a: KupischSeries, X: Indec) -> Optional[Indec]:
    """Cokernel of X -> I(soc X): the top part of the envelope."""
    I = injective_envelope(a, socle(a, X))
    if I == X:
        return None
    return Indec(I.top, I.len - X.len)


def _orbit_dim(step: Callable[[Indec], Optional[Indec]], X: Indec) -> Dim:
    # states are indecomposables, so revisiting one certifies an infinite orbit
    seen = set()
    count = 0
    while True:
        nxt = step(X)
        if nxt is None:
            return count
        if X in seen:
            return INF
        seen.add(X)
        X = nxt
        count += 1


def proj_dim(a: KupischSeries, X: Indec) -> Dim:
    check_module(a, X)
    return _orbit_dim(lambda Y: syzygy(a, Y), X)


def inj_dim(a: KupischSeries, X: Indec) -> Dim:
    check_module(a, X)
    return _orbit_dim(lambda Y: cosyzygy(a, Y), X)


def syzygy_orbit(a: KupischSeries, X: Indec, cap: Optional[int] = None) -> list[Indec]:
    """X, Omega X, Omega^2 X, ... up to the first projective or the first repeat."""
    check_module(a, X)
    out = [X]
    seen = {X}
    while cap is None or len(out) < cap:
        nxt = syzygy(a, out[-1])
        if nxt is None or nxt in seen:
            break
        out.append(nxt)
        seen.add(nxt)
    return out


@dataclass(frozen=True)
class ResolutionStep:
    proj_index: int
    valuation: int


def min_projective_resolution(a: KupischSeries, X: Indec, cap: int) -> list[ResolutionStep]:
    """First ``cap`` terms P_0 <- P_1 <- ... of the minimal projective resolution.

    Step i >= 1 carries the valuation of P_i -> P_{i-1}, namely
    l(P_{i-1}) - l(Omega^i X).  Step 0 carries l(P_0) - l(X), the length of
    Omega X, so that nu_0 + nu_1 = l(P_0) and nu_i + nu_{i+1} = l(P_{i-1}).
    """
    check_module(a, X)
    if is_projective(a, X):
        raise ProjectiveInput(f"S_{X.top}^[{X.len}] is projective")
    steps = [ResolutionStep(X.top, a.length(X.top) - X.len)]
    current = X
    while len(steps) < cap:
        nxt = syzygy(a, current)
        if nxt is None:
            break
        prev_len = a.length(current.top)
        steps.append(ResolutionStep(nxt.top, prev_len - nxt.len))
        current = nxt
    return steps
