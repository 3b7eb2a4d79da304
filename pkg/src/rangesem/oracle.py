"""Reference Dung semantics by exhaustive sweep over all argument subsets.

Every function here is a direct transcription of the set-theoretic
definition. Nothing in this module touches logic programs; it is the ground
truth the program-based routes are checked against.
"""

from __future__ import annotations

from .errors import DEFAULT_CAP, check_cap
from .framework import ArgumentationFramework, ArgumentSet, attacked_by, members, range_of

ExtensionSet = tuple[ArgumentSet, ...]


def canonical(extensions) -> ExtensionSet:
    """Deduplicate and order extensions by their ascending member-index lists."""
    return tuple(sorted(set(extensions), key=members))


def _subsets(af: ArgumentationFramework, cap: int | None):
    check_cap(af.n, cap)
    return range(1 << af.n)


def _maximal(candidates: list[ArgumentSet], value) -> list[ArgumentSet]:
    """Candidates whose ``value`` is not a strict subset of another candidate's."""
    values = {c: value(c) for c in candidates}
    pool = set(values.values())
    return [
        c for c in candidates
        if not any(v != values[c] and values[c] & v == values[c] for v in pool)
    ]


def is_conflict_free(af: ArgumentationFramework, s: ArgumentSet) -> bool:
    return not any(s >> a & 1 and s >> b & 1 for a, b in af.attacks)


def is_acceptable(af: ArgumentationFramework, x: int, s: ArgumentSet) -> bool:
    """Every attacker of ``x`` is attacked by ``s``."""
    defeated = attacked_by(af, s)
    return af.attackers[x] & ~defeated == 0


def is_admissible(af: ArgumentationFramework, s: ArgumentSet) -> bool:
    return is_conflict_free(af, s) and all(is_acceptable(af, x, s) for x in members(s))


def is_complete(af: ArgumentationFramework, s: ArgumentSet) -> bool:
    return is_admissible(af, s) and all(
        s >> x & 1 for x in range(af.n) if is_acceptable(af, x, s)
    )


def is_stable(af: ArgumentationFramework, s: ArgumentSet) -> bool:
    return is_admissible(af, s) and range_of(af, s) == af.full


def conflict_free_sets(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    return canonical(s for s in _subsets(af, cap) if is_conflict_free(af, s))


def admissible_sets(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    return canonical(s for s in _subsets(af, cap) if is_admissible(af, s))


def complete_extensions(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    return canonical(s for s in _subsets(af, cap) if is_complete(af, s))


def grounded_extension(af, cap: int | None = DEFAULT_CAP) -> ArgumentSet:
    """The least complete extension."""
    complete = complete_extensions(af, cap)
    least = [s for s in complete if all(s & t == s for t in complete)]
    if len(least) != 1:
        raise RuntimeError("complete extensions have no unique least element")
    return least[0]


def stable_extensions(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    return canonical(s for s in _subsets(af, cap) if is_stable(af, s))


def preferred_extensions(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    return canonical(_maximal(list(admissible_sets(af, cap)), lambda s: s))


def semi_stable_extensions(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    complete = list(complete_extensions(af, cap))
    return canonical(_maximal(complete, lambda s: range_of(af, s)))


def stage_extensions(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    cf = list(conflict_free_sets(af, cap))
    return canonical(_maximal(cf, lambda s: range_of(af, s)))


def range_maximal_admissible(af, cap: int | None = DEFAULT_CAP) -> ExtensionSet:
    """Admissible sets whose range is maximal among the ranges of admissible sets."""
    adm = list(admissible_sets(af, cap))
    return canonical(_maximal(adm, lambda s: range_of(af, s)))


SEMANTICS = {
    "conflict-free": conflict_free_sets,
    "admissible": admissible_sets,
    "complete": complete_extensions,
    "grounded": lambda af, cap=DEFAULT_CAP: (grounded_extension(af, cap),),
    "stable": stable_extensions,
    "preferred": preferred_extensions,
    "semi-stable": semi_stable_extensions,
    "stage": stage_extensions,
}
