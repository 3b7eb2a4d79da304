"""Compilation of argumentation frameworks into normal programs.

For the ``def``-based mappings, argument ``i`` is represented by atom ``i``,
named ``def(<argument name>)``, meaning "argument i is defeated". The
signature always holds every argument's atom, attacked or not.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .framework import ArgumentationFramework, ArgumentSet
from .program import Clause, Interpretation, NormalProgram, facts, gl_reduce


class MappingKind(enum.Enum):
    PI_MINUS = "pi-minus"
    PI_FULL = "pi-full"
    P_AF = "p-af"


@dataclass(frozen=True)
class MappedProgram:
    program: NormalProgram
    framework: ArgumentationFramework
    kind: MappingKind

    def atom_of(self, argument: int) -> int:
        # signatures are built in argument-index order, so the map is the identity
        return argument

    def argument_of(self, atom: int) -> int:
        return atom


def def_atoms(af: ArgumentationFramework) -> tuple[str, ...]:
    return tuple(f"def({name})" for name in af.names)


def _conflict_clauses(af: ArgumentationFramework) -> set[Clause]:
    # def(a) <- not def(b) for every attack (b, a)
    return {Clause(a, 0, 1 << b) for b, a in af.attacks}


def _defence_clauses(af: ArgumentationFramework) -> set[Clause]:
    # def(a) <- def(c1), ..., def(ck) over the attackers c of each attacker b of a
    return {Clause(a, af.attackers[b], 0) for b, a in af.attacks}


def pi_minus(af: ArgumentationFramework) -> MappedProgram:
    prog = NormalProgram(def_atoms(af), frozenset(_conflict_clauses(af)))
    return MappedProgram(prog, af, MappingKind.PI_MINUS)


def pi_full(af: ArgumentationFramework) -> MappedProgram:
    clauses = _conflict_clauses(af) | _defence_clauses(af)
    return MappedProgram(NormalProgram(def_atoms(af), frozenset(clauses)), af, MappingKind.PI_FULL)


def p_af(af: ArgumentationFramework) -> MappedProgram:
    """One clause ``x <- not y1, ..., not yk`` per argument, over its attackers."""
    clauses = frozenset(Clause(x, 0, af.attackers[x]) for x in range(af.n))
    return MappedProgram(NormalProgram(af.names, clauses), af, MappingKind.P_AF)


MAPPINGS = {
    MappingKind.PI_MINUS: pi_minus,
    MappingKind.PI_FULL: pi_full,
    MappingKind.P_AF: p_af,
}


def _require_def_mapping(mp: MappedProgram) -> None:
    if mp.kind is MappingKind.P_AF:
        raise ValueError("p-af models are read positively; argument extraction is defined for def mappings only")


def extension_of(mp: MappedProgram, m: Interpretation) -> ArgumentSet:
    """Arguments whose ``def`` atom is false in ``m``."""
    _require_def_mapping(mp)
    return mp.program.full & ~m


def range_plus_of(mp: MappedProgram, m: Interpretation) -> ArgumentSet:
    """Arguments whose ``def`` atom is a fact of the GL reduct of the program w.r.t. ``m``."""
    _require_def_mapping(mp)
    return facts(gl_reduce(mp.program, m))


def model_range(mp: MappedProgram, m: Interpretation) -> ArgumentSet:
    return extension_of(mp, m) | range_plus_of(mp, m)

