"""Connected Nakayama algebras as admissible (Kupisch) sequences.

Indices are 1-based throughout, matching the usual labelling S_1, ..., S_n
of the simple modules.  ``c[j-1]`` is the composition length of the
indecomposable projective P_j.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    InadmissibleSequence,
    InternalInconsistency,
    LineUnsupported,
    MisplacedOne,
    ParseError,
)

IntMatrix = tuple[tuple[int, ...], ...]


class Kind(str, enum.Enum):
    LINE = "line"
    CYCLE = "cycle"


def phi(n: int, x: int) -> int:
    """Representative of x modulo n in 1..n (0 is represented by n)."""
    return (x - 1) % n + 1


def _check_admissible(c: tuple[int, ...]) -> None:
    n = len(c)
    if n == 0:
        raise InadmissibleSequence("empty sequence")
    for j, cj in enumerate(c, start=1):
        if not isinstance(cj, int) or cj < 1:
            raise InadmissibleSequence(f"c_{j}={cj!r} is not a positive integer")
    for j in range(1, n):
        if c[j - 1] == 1:
            raise MisplacedOne(f"c_{j}=1 at non-final position {j} of {c}")
    for j in range(1, n):
        if c[j - 1] > c[j] + 1:
            raise InadmissibleSequence(
                f"c_{j}={c[j - 1]} exceeds c_{j + 1}+1={c[j] + 1} in {c}")
    if c[-1] > c[0] + 1:
        raise InadmissibleSequence(f"c_n={c[-1]} exceeds c_1+1={c[0] + 1} in {c}")


@dataclass(frozen=True)
class KupischSeries:
    """An admissible sequence; the kind (line or cycle) is read off c_n."""

    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))
        _check_admissible(self.c)

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def kind(self) -> Kind:
        return Kind.LINE if self.c[-1] == 1 else Kind.CYCLE

    @property
    def is_cycle(self) -> bool:
        return self.c[-1] != 1

    def length(self, j: int) -> int:
        """l(P_j)."""
        return self.c[j - 1]

    def idx(self, x: int) -> int:
        """Index of the simple reached after x-1 steps along the quiver from S_1.

        Wraps modulo n for cycles.  For lines every sum that arises from a
        valid module stays inside 1..n, so leaving that range is a bug.
        """
        if self.is_cycle:
            return phi(self.n, x)
        if not 1 <= x <= self.n:
            raise InternalInconsistency(f"index {x} out of range for line {self}")
        return x

    @cached_property
    def cartan(self) -> IntMatrix:
        return cartan(self)

    def __str__(self):
        return ",".join(map(str, self.c))

    def __repr__(self):
        return f"KupischSeries({self})"


def parse_sequence(text: str) -> KupischSeries:
    """Parse ``"3,4,4"`` into a validated :class:`KupischSeries`."""
    body = "".join(text.split())
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if not body:
        raise ParseError("empty sequence")
    parts = body.split(",")
    if any(not p.isdigit() for p in parts):
        raise ParseError(f"not a comma-separated list of positive integers: {text!r}")
    values = tuple(int(p) for p in parts)
    if 0 in values:
        raise ParseError(f"entries must be positive: {text!r}")
    return KupischSeries(values)


def is_normalized(a: KupischSeries) -> bool:
    c = a.c
    if c[-1] == 1 or len(set(c)) == 1:
        return True
    return c[0] == min(c) and c[-1] == c[0] + 1


def rotate(a: KupischSeries, offset: int) -> KupischSeries:
    """Rotated sequence whose i-th entry is the original entry phi_n(i + offset)."""
    n = a.n
    return KupischSeries(tuple(a.c[(i + offset) % n] for i in range(n)))


def normalize(a: KupischSeries) -> tuple[KupischSeries, int]:
    """Lexicographically smallest normalized rotation, with its offset.

    Index i of the result corresponds to index phi_n(i + offset) of ``a``.
    """
    if not a.is_cycle:
        return a, 0
    candidates = []
    for offset in range(a.n):
        b = rotate(a, offset)
        if is_normalized(b):
            candidates.append((b.c, offset, b))
    if not candidates:
        raise InternalInconsistency(f"no normalized rotation of {a}")
    _, offset, b = min(candidates, key=lambda t: (t[0], t[1]))
    return b, offset


def is_self_injective(a: KupischSeries) -> bool:
    return len(set(a.c)) == 1 and (a.is_cycle or a.c == (1,))


def _require_cycle(a: KupischSeries) -> None:
    if not a.is_cycle:
        raise LineUnsupported(f"theta is only defined for cycle algebras, got line {a}")


def theta(a: KupischSeries, j: int) -> int:
    _require_cycle(a)
    return phi(a.n, j + a.length(j))


@dataclass(frozen=True)
class ThetaData:
    d: int
    regular: tuple[int, ...]
    theta_on_regular: dict[int, int]
    cycle_length: dict[int, int]

    @property
    def period(self) -> int:
        """Order of theta as a permutation of the regular elements."""
        from math import lcm
        return lcm(*self.cycle_length.values())

    def orbit(self, j: int) -> list[int]:
        """The theta-cycle through the regular element j, starting at j."""
        out = [j]
        while (nxt := self.theta_on_regular[out[-1]]) != j:
            out.append(nxt)
        return out


def theta_data(a: KupischSeries) -> ThetaData:
    _require_cycle(a)
    t = {j: theta(a, j) for j in range(1, a.n + 1)}
    image = set(t)
    d = 0
    while True:
        nxt = {t[j] for j in image}
        if nxt == image:
            break
        image = nxt
        d += 1
    regular = tuple(sorted(image))
    on_regular = {j: t[j] for j in regular}
    cycle_length = {}
    for j in regular:
        k, m = on_regular[j], 1
        while k != j:
            k, m = on_regular[k], m + 1
        cycle_length[j] = m
    return ThetaData(d, regular, on_regular, cycle_length)


def cartan(a: KupischSeries) -> IntMatrix:
    """Row j, column k: multiplicity of S_j in a composition series of P_k."""
    n = a.n
    rows = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        for t in range(a.length(k)):
            rows[a.idx(k + t) - 1][k - 1] += 1
    return tuple(tuple(r) for r in rows)


def dual_lengths(a: KupischSeries) -> tuple[int, ...]:
    """l(P_j^*) = l(e_j A), the length of the j-th indecomposable right projective.

    Hom(P_j, P_k) = e_j A e_k has length [P_k : S_j] since the valuation is
    trivial, so this is the j-th row sum of the Cartan matrix.
    """
    return tuple(sum(row) for row in a.cartan)


def is_theta_perfect(a: KupischSeries, j: int) -> bool:
    data = theta_data(a)
    if j not in data.theta_on_regular:
        return False
    dual = dual_lengths(a)
    orbit = data.orbit(j)
    # one full cycle covers every integer m by periodicity
    for m, i in enumerate(orbit):
        nxt = orbit[(m + 1) % len(orbit)]
        if a.length(i) != dual[nxt - 1]:
            return False
    return True


def theta_perfect_set(a: KupischSeries) -> tuple[int, ...]:
    if not a.is_cycle:
        return ()
    return tuple(j for j in range(1, a.n + 1) if is_theta_perfect(a, j))


def opposite(a: KupischSeries) -> KupischSeries:
    """Kupisch series of the opposite algebra, normalized.

    The right projective e_j A has composition factors S_j, S_{j-1}, ...;
    reversing the labels (j -> n+1-j) puts them back in increasing order.
    """
    reflected = tuple(reversed(dual_lengths(a)))
    try:
        b = KupischSeries(reflected)
    except InadmissibleSequence as exc:
        raise InternalInconsistency(f"opposite of {a} is inadmissible: {exc}") from exc
    return normalize(b)[0]
