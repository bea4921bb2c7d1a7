"""Left retraction at the last simple of a normalized sequence, iterated.

After normalizing, S_n is localizable: it is projective when c_n = 1 and
has the projective resolution 0 -> P_1 -> P_n -> S_n -> 0 otherwise.  The
retraction kills S_n; on sequences it is

    c'_j = c_j - floor((c_j + j - 1) / n),   1 <= j <= n - 1,

and an indecomposable S_j^[l] goes to S_j^[l - floor((l + j - 1)/n)] for
j < n, S_n^[l] to S_1^[l - 1 - floor((l - 1)/n)].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import zmatrix
from .errors import (
    FiniteGlobalDimension,
    InadmissibleSequence,
    InternalInconsistency,
    InvalidModule,
    SelfInjectiveInput,
)
from .kupisch import KupischSeries, is_self_injective, normalize, phi, theta_data
from .modarith import INF, Indec, check_module, proj_dim, simple
from .zmatrix import SmithForm


@dataclass(frozen=True)
class RetractionStep:
    source: KupischSeries
    target: KupischSeries
    rotation_offset: int

    @property
    def n_source(self) -> int:
        return self.source.n

    @property
    def localizable_index(self) -> int:
        return self.source.n

    def to_source(self, X: Indec) -> Indec:
        """Translate a module in the un-normalized input's labels to ``source`` labels."""
        return Indec(phi(self.n_source, X.top - self.rotation_offset), X.len)


def retracted_sequence(c: tuple[int, ...]) -> tuple[int, ...]:
    n = len(c)
    return tuple(c[j - 1] - (c[j - 1] + j - 1) // n for j in range(1, n))


def check_step(step: RetractionStep) -> None:
    """Verify the Cartan-level invariants of one retraction step."""
    C, D = step.source.cartan, step.target.cartan
    n = step.n_source
    if [list(r) for r in D] != zmatrix.minor(C, n - 1, n - 1):
        raise InternalInconsistency(f"Cartan of {step.target} is not the minor of {step.source}")
    if zmatrix.determinant(C) != zmatrix.determinant(D):
        raise InternalInconsistency(f"determinant changed along {step.source} -> {step.target}")
    snf_c, snf_d = zmatrix.smith_normal_form(C), zmatrix.smith_normal_form(D)
    if len(snf_c.invariant_factors) != len(snf_d.invariant_factors) + 1:
        raise InternalInconsistency(f"rank did not drop by one along {step.source} -> {step.target}")
    if (snf_c.torsion, snf_c.free_rank) != (snf_d.torsion, snf_d.free_rank):
        raise InternalInconsistency(f"cokernel changed along {step.source} -> {step.target}")


def retract_step(a: KupischSeries, check: bool = True) -> RetractionStep:
    if is_self_injective(a):
        raise SelfInjectiveInput(f"{a} is self-injective; nothing to retract")
    source, offset = normalize(a)
    try:
        target = KupischSeries(retracted_sequence(source.c))
    except InadmissibleSequence as exc:
        raise InternalInconsistency(f"retraction of {source} is inadmissible: {exc}") from exc
    step = RetractionStep(source, target, offset)
    if check:
        check_step(step)
    return step


def transport_module(step: RetractionStep, X: Indec) -> Optional[Indec]:
    """Image of X (in ``step.source`` labels) under the retraction; None for add S_n."""
    check_module(step.source, X)
    n = step.n_source
    j, l = X.top, X.len
    if j < n:
        out = Indec(j, l - (l + j - 1) // n)
    else:
        out = Indec(1, l - 1 - (l - 1) // n)
    if out.len == 0:
        return None
    if out.len > step.target.length(out.top):
        raise InvalidModule(f"transport of {X} overflows over {step.target}")
    return out


@dataclass(frozen=True)
class RetractionSequence:
    steps: tuple[RetractionStep, ...]
    terminal: KupischSeries

    @property
    def r(self) -> int:
        return len(self.steps)

    @property
    def algebras(self) -> list[KupischSeries]:
        return [s.source for s in self.steps] + [self.terminal]


def retraction_sequence(a: KupischSeries, check: bool = True) -> RetractionSequence:
    steps = []
    current = a
    while not is_self_injective(current):
        step = retract_step(current, check=check)
        steps.append(step)
        current = step.target
    terminal = normalize(current)[0]
    seq = RetractionSequence(tuple(steps), terminal)
    if check and a.is_cycle:
        d = theta_data(a).d
        if not d <= seq.r <= a.n - 1:
            raise InternalInconsistency(f"r={seq.r} outside [d={d}, n-1={a.n - 1}] for {a}")
    return seq


def finite_pd_simples(a: KupischSeries) -> list[int]:
    return [j for j in range(1, a.n + 1) if proj_dim(a, simple(j)) != INF]


def r_via_simples(a: KupischSeries) -> int:
    """Number of simples of finite projective dimension (infinite gl.dim only)."""
    count = len(finite_pd_simples(a))
    if count == a.n:
        raise FiniteGlobalDimension(f"{a} has finite global dimension; r = n - 1 there")
    return count


@dataclass(frozen=True)
class SingularityDescriptor:
    trivial: bool
    tube_rank: int
    terminal: KupischSeries
    k0: SmithForm

    @property
    def terminal_loewy(self) -> int:
        return self.terminal.c[0]


def singularity_descriptor(a: KupischSeries) -> SingularityDescriptor:
    seq = retraction_sequence(a)
    t = seq.terminal
    return SingularityDescriptor(
        trivial=t.c == (1,),
        tube_rank=t.n,
        terminal=t,
        k0=zmatrix.smith_normal_form(a.cartan),
    )
