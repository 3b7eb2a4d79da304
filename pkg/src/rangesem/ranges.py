"""Range-maximal model selection over the compiled argumentation programs.

The range of an interpretation ``M`` of a program ``P`` is computed on the
program side as ``Facts(R(P, M)) | (signature - M)``, where ``R`` is either
the Gelfond-Lifschitz or the RED reduct. Selecting the models whose value is
inclusion-maximal yields GL-supported models (over supported models of the
full mapping) and GL-stage models (over 2-valued models of the conflict-only
mapping).
"""

from __future__ import annotations

import enum
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import DEFAULT_CAP
from .framework import ArgumentationFramework
from .mapping import MappedProgram, MappingKind, extension_of, model_range, pi_full, pi_minus
from .oracle import ExtensionSet, canonical
from .program import (
    Interpretation,
    NormalProgram,
    facts,
    gl_reduce,
    p_stable_models,
    red_reduce,
    stable_models,
    supported_models,
    two_valued_models,
)


class ReductionKind(enum.Enum):
    GL = "GL"
    RED = "RED"


_REDUCE: dict[ReductionKind, Callable[[NormalProgram, Interpretation], NormalProgram]] = {
    ReductionKind.GL: gl_reduce,
    ReductionKind.RED: red_reduce,
}


class RangeValue(NamedTuple):
    sc_atoms: Interpretation
    source_model: Interpretation


def sc1(p: NormalProgram, m: Interpretation, r: ReductionKind = ReductionKind.GL) -> RangeValue:
    return RangeValue(facts(_REDUCE[r](p, m)) | (p.full & ~m), m)


def maximal_by(candidates: Sequence[int], values: Sequence[int]) -> list[int]:
    """Candidates whose value is not a strict subset of some other candidate's value.

    Ties are kept: two candidates with equal values are both maximal or both not.
    """
    if not candidates:
        return []
    uniq = np.unique(np.asarray(values, dtype=np.int64))
    top = {
        int(v) for v in uniq
        if not np.any(((uniq & v) == v) & (uniq != v))
    }
    return [c for c, v in zip(candidates, values) if v in top]


def _require(mp: MappedProgram, kind: MappingKind) -> None:
    if mp.kind is not kind:
        raise ValueError(f"expected a {kind.value} program, got {mp.kind.value}")


def gl_supported_models(
    mp: MappedProgram, reduction: ReductionKind = ReductionKind.GL, cap: int | None = DEFAULT_CAP
) -> list[Interpretation]:
    _require(mp, MappingKind.PI_FULL)
    pool = supported_models(mp.program, cap)
    return maximal_by(pool, [sc1(mp.program, m, reduction).sc_atoms for m in pool])


def gl_stage_models(
    mp: MappedProgram, reduction: ReductionKind = ReductionKind.GL, cap: int | None = DEFAULT_CAP
) -> list[Interpretation]:
    _require(mp, MappingKind.PI_MINUS)
    pool = two_valued_models(mp.program, cap)
    return maximal_by(pool, [sc1(mp.program, m, reduction).sc_atoms for m in pool])


def range_maximal_models(mp: MappedProgram, pool: Sequence[Interpretation]) -> list[Interpretation]:
    """Models from ``pool`` whose argument range ``E_M | E_M+`` is maximal within the pool."""
    return maximal_by(pool, [model_range(mp, m) for m in pool])


def _extensions(mp: MappedProgram, models) -> ExtensionSet:
    return canonical(extension_of(mp, m) for m in models)


def semi_stable_via_lp(
    af: ArgumentationFramework, reduction: ReductionKind = ReductionKind.GL, cap: int | None = DEFAULT_CAP
) -> ExtensionSet:
    mp = pi_full(af)
    return _extensions(mp, gl_supported_models(mp, reduction, cap))


def semi_stable_via_pstable(af: ArgumentationFramework, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    mp = pi_full(af)
    return _extensions(mp, range_maximal_models(mp, p_stable_models(mp.program, cap)))


def semi_stable_via_2valued(af: ArgumentationFramework, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    mp = pi_full(af)
    return _extensions(mp, range_maximal_models(mp, two_valued_models(mp.program, cap)))


def stage_via_lp(
    af: ArgumentationFramework, reduction: ReductionKind = ReductionKind.GL, cap: int | None = DEFAULT_CAP
) -> ExtensionSet:
    mp = pi_minus(af)
    return _extensions(mp, gl_stage_models(mp, reduction, cap))


# Program-side characterizations of the classical semantics, used by the CLI lp route.


def conflict_free_via_lp(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    mp = pi_minus(af)
    return _extensions(mp, two_valued_models(mp.program, cap))


def admissible_via_lp(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    mp = pi_full(af)
    return _extensions(mp, two_valued_models(mp.program, cap))


def complete_via_lp(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    mp = pi_full(af)
    return _extensions(mp, supported_models(mp.program, cap))


def stable_via_lp(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    mp = pi_full(af)
    return _extensions(mp, stable_models(mp.program, cap))


def preferred_via_lp(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    mp = pi_full(af)
    return _extensions(mp, p_stable_models(mp.program, cap))
