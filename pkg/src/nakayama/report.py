"""Assemble analysis reports and survey tables as plain JSON-ready data.

Infinite dimensions are encoded as the string ``"inf"``.  Module labels
``"j:l"`` refer to the sequence exactly as the user typed it; the
retraction chain lists normalized sequences.
"""
from __future__ import annotations

import json
from typing import Iterator, Optional

from . import oracle, zmatrix
from .errors import InternalInconsistency, LineUnsupported, ProjectiveInput
from .gorenstein import (
    GpCertificate,
    Trichotomy,
    classify,
    fin_dim,
    global_dim,
    gorenstein_oracle,
    gp_modules,
    gp_test,
    regular_inj_dim,
)
from .kupisch import (
    KupischSeries,
    is_self_injective,
    normalize,
    theta_data,
    theta_perfect_set,
)
from .modarith import (
    INF,
    Indec,
    check_module,
    inj_dim,
    is_injective,
    is_projective,
    min_projective_resolution,
    proj_dim,
    syzygy,
    syzygy_orbit,
    top_socle,
)
from .retraction import retraction_sequence, singularity_descriptor, r_via_simples


def dim(x) -> object:
    return "inf" if x == INF else int(x)


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def certificate_json(cert: GpCertificate) -> dict:
    return {
        "period": cert.period,
        "modules": [str(X) for X in cert.modules],
        "proj_indices": list(cert.proj_indices),
        "valuations": list(cert.valuations),
    }


def self_check(a: KupischSeries) -> None:
    """Cross-validate the primary computations against independent routes."""
    gor = classify(a).kind is Trichotomy.GORENSTEIN
    if gorenstein_oracle(a) != gor:
        raise InternalInconsistency(f"two-sided Gorenstein test disagrees with recursion on {a}")
    if gor and classify(a).v_dim != regular_inj_dim(a):
        raise InternalInconsistency(f"v.dim of {a} differs from inj.dim of the regular module")
    finite = global_dim(a) != INF
    det = zmatrix.determinant(a.cartan)
    if finite != (det == 1):
        raise InternalInconsistency(f"det C = {det} but gl.dim = {global_dim(a)} for {a}")
    if finite != singularity_descriptor(a).trivial:
        raise InternalInconsistency(f"singularity descriptor of {a} contradicts gl.dim")
    for X, cert in gp_modules(a):
        if not oracle.verify_certificate(a, cert):
            raise InternalInconsistency(f"certificate for {X} over {a} fails verification")


def analyze(a: KupischSeries) -> dict:
    self_check(a)
    norm, offset = normalize(a)
    C = a.cartan
    snf = zmatrix.smith_normal_form(C)
    cls = classify(a)
    seq = retraction_sequence(a)
    desc = singularity_descriptor(a)
    theta = None
    if a.is_cycle:
        td = theta_data(a)
        theta = {"d": td.d, "regular": list(td.regular), "perfect": list(theta_perfect_set(a))}
    return {
        "input": list(a.c),
        "normalized": list(norm.c),
        "rotation_offset": offset,
        "kind": a.kind.value,
        "n": a.n,
        "theta": theta,
        "cartan": {
            "matrix": [list(r) for r in C],
            "det": zmatrix.determinant(C),
            "rank": len(snf.invariant_factors),
            "snf": {"invariant_factors": list(snf.invariant_factors), "free_rank": snf.free_rank},
        },
        "gl_dim": dim(global_dim(a)),
        "fin_dim": fin_dim(a),
        "class": {"name": cls.kind.value, "v_dim": cls.v_dim},
        "gp_modules": [dict(module=str(X), **certificate_json(c)) for X, c in gp_modules(a)],
        "retraction": {
            "chain": [list(x.c) for x in seq.algebras],
            "r": seq.r,
            "terminal": list(seq.terminal.c),
        },
        "singularity": {
            "trivial": desc.trivial,
            "tube_rank": desc.tube_rank,
            "terminal_loewy": desc.terminal_loewy,
            "k0": desc.k0.cokernel(),
            "k0_invariant_factors": list(desc.k0.invariant_factors),
            "k0_free_rank": desc.k0.free_rank,
        },
    }


def retraction_report(a: KupischSeries, limit: Optional[int] = None) -> dict:
    seq = retraction_sequence(a)
    steps = seq.steps if limit is None else seq.steps[:limit]
    rows = []
    for s in steps:
        snf_s = zmatrix.smith_normal_form(s.source.cartan)
        snf_t = zmatrix.smith_normal_form(s.target.cartan)
        rows.append({
            "source": list(s.source.c),
            "rotation_offset": s.rotation_offset,
            "localized_simple": s.localizable_index,
            "target": list(s.target.c),
            "det": [zmatrix.determinant(s.source.cartan), zmatrix.determinant(s.target.cartan)],
            "rank": [len(snf_s.invariant_factors), len(snf_t.invariant_factors)],
            "cokernel": [snf_s.cokernel(), snf_t.cokernel()],
        })
    return {"input": list(a.c), "steps": rows, "r": seq.r, "terminal": list(seq.terminal.c)}


def gp_verdict(a: KupischSeries, X: Indec) -> dict:
    try:
        res = gp_test(a, X)
    except ProjectiveInput:
        return {"verdict": "projective"}
    except LineUnsupported:
        return {"verdict": "NotGP", "reason": "LineAlgebra",
                "detail": "line algebras have finite global dimension"}
    if isinstance(res, GpCertificate):
        return {"verdict": "GP", "certificate": certificate_json(res),
                "verified": oracle.verify_certificate(a, res)}
    return {"verdict": "NotGP", "reason": res.reason.value, "detail": res.detail}


def module_report(a: KupischSeries, X: Indec) -> dict:
    check_module(a, X)
    top, soc = top_socle(a, X)
    orbit = syzygy_orbit(a, X)
    tail = syzygy(a, orbit[-1])
    out = {
        "sequence": list(a.c),
        "module": str(X),
        "top": top,
        "socle": soc,
        "projective": is_projective(a, X),
        "injective": is_injective(a, X),
        "proj_dim": dim(proj_dim(a, X)),
        "inj_dim": dim(inj_dim(a, X)),
        "syzygy_orbit": [str(Y) for Y in orbit],
        "orbit_returns_to": None if tail is None else str(tail),
        "gp": gp_verdict(a, X),
    }
    if not is_projective(a, X):
        steps = min_projective_resolution(a, X, cap=len(orbit) + 1)
        out["resolution"] = [[s.proj_index, s.valuation] for s in steps]
    return out


def admissible_sequences(n: int, max_loewy: int) -> Iterator[KupischSeries]:
    """Every admissible sequence of length n with entries <= max_loewy."""
    def extend(prefix):
        if len(prefix) == n:
            if prefix[-1] <= prefix[0] + 1:
                yield KupischSeries(tuple(prefix))
            return
        last = len(prefix) == n - 1
        lo = 1 if last else 2
        if prefix:
            lo = max(lo, prefix[-1] - 1)
        for x in range(lo, max_loewy + 1):
            yield from extend(prefix + [x])
    if n == 1:
        for x in range(1, max_loewy + 1):
            yield KupischSeries((x,))
        return
    yield from extend([])


def normalized_sequences(n: int, max_loewy: int) -> list[KupischSeries]:
    return sorted({normalize(a)[0] for a in admissible_sequences(n, max_loewy)},
                  key=lambda a: a.c)


def perfect_pairs_all_gp(a: KupischSeries) -> Optional[bool]:
    """Do theta-perfect j and k already force Gorenstein projectivity here?"""
    if not a.is_cycle:
        return None
    perfect = set(theta_perfect_set(a))
    gp = {X for X, _ in gp_modules(a)}
    for j in perfect:
        for l in range(1, a.length(j)):
            if a.idx(j + l) in perfect and Indec(j, l) not in gp:
                return False
    return True


def survey_row(a: KupischSeries) -> dict:
    self_check(a)
    cls = classify(a)
    gl = global_dim(a)
    r = retraction_sequence(a).r
    if gl == INF and r != r_via_simples(a):
        raise InternalInconsistency(f"r={r} but finite-pd simples give {r_via_simples(a)} for {a}")
    return {
        "sequence": list(a.c),
        "kind": a.kind.value,
        "n": a.n,
        "class": cls.kind.value,
        "v_dim": cls.v_dim,
        "gl_dim": dim(gl),
        "fin_dim": fin_dim(a),
        "d": theta_data(a).d if a.is_cycle else None,
        "r": r,
        "det": zmatrix.determinant(a.cartan),
        "gp_count": len(gp_modules(a)),
        "self_injective": is_self_injective(a),
        "perfect_pairs_all_gp": perfect_pairs_all_gp(a),
    }


def survey(n_max: int, max_loewy: int, exact: bool = False) -> list[dict]:
    sizes = [n_max] if exact else range(1, n_max + 1)
    return [survey_row(a) for n in sizes for a in normalized_sequences(n, max_loewy)]
