"""Propositional normal logic programs and their 2-valued model semantics.

A program carries an explicit, ordered signature which may contain atoms that
occur in no clause. Interpretations are ``int`` bitmasks over atom ordinals.
Every enumerator sweeps the ``2**n`` interpretations in ascending binary-code
order and returns its results in that order.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple

import numpy as np

from .errors import DEFAULT_CAP, ParseError, check_cap
from .framework import members

Interpretation = int


class Clause(NamedTuple):
    """``head <- pos, not neg`` with both bodies stored as atom bitmasks."""

    head: int
    pos: int = 0
    neg: int = 0

    @property
    def is_fact(self) -> bool:
        return not self.pos and not self.neg

    def body_holds(self, m: Interpretation) -> bool:
        return m & self.pos == self.pos and not m & self.neg

    def sort_key(self) -> tuple:
        return (self.head, members(self.pos), members(self.neg))


@dataclass(frozen=True)
class NormalProgram:
    atoms: tuple[str, ...] = ()
    clauses: frozenset[Clause] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(self, "clauses", frozenset(Clause(*c) for c in self.clauses))
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("atom names must be unique")
        full = self.full
        for c in self.clauses:
            if not 0 <= c.head < self.n or (c.pos | c.neg) & ~full:
                raise ValueError(f"clause {c} mentions an atom outside the signature")

    @classmethod
    def from_rules(
        cls,
        atoms: Iterable[str],
        rules: Iterable[tuple[str, Iterable[str], Iterable[str]]],
    ) -> NormalProgram:
        """Build from ``(head, positive_names, negative_names)`` triples."""
        atoms = tuple(atoms)
        index = {a: i for i, a in enumerate(atoms)}

        def mask(names):
            m = 0
            for name in names:
                m |= 1 << index[name]
            return m

        return cls(atoms, frozenset(Clause(index[h], mask(p), mask(q)) for h, p, q in rules))

    @property
    def n(self) -> int:
        return len(self.atoms)

    @property
    def full(self) -> Interpretation:
        return (1 << self.n) - 1

    @property
    def is_definite(self) -> bool:
        return all(not c.neg for c in self.clauses)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.atoms)}

    def mask(self, names: Iterable[str]) -> Interpretation:
        m = 0
        for name in names:
            m |= 1 << self._index[name]
        return m

    def names_of(self, m: Interpretation) -> list[str]:
        return [self.atoms[i] for i in members(m)]

    def sorted_clauses(self) -> list[Clause]:
        return sorted(self.clauses, key=Clause.sort_key)

    def with_clauses(self, clauses: Iterable[Clause]) -> NormalProgram:
        return NormalProgram(self.atoms, frozenset(clauses))


def facts(p: NormalProgram) -> Interpretation:
    out = 0
    for c in p.clauses:
        if c.is_fact:
            out |= 1 << c.head
    return out


def is_classical_model(p: NormalProgram, m: Interpretation) -> bool:
    return all(m >> c.head & 1 or not c.body_holds(m) for c in p.clauses)


def gl_reduce(p: NormalProgram, s: Interpretation) -> NormalProgram:
    """Gelfond-Lifschitz reduct: drop clauses blocked by ``s``, erase remaining negation."""
    return p.with_clauses(Clause(c.head, c.pos) for c in p.clauses if not c.neg & s)


def red_reduce(p: NormalProgram, m: Interpretation) -> NormalProgram:
    """Keep only the negative literals whose atom is in ``m``."""
    return p.with_clauses(Clause(c.head, c.pos, c.neg & m) for c in p.clauses)


def least_model(p: NormalProgram) -> Interpretation:
    if not p.is_definite:
        raise ValueError("least_model requires a definite program")
    m = 0
    while True:
        nxt = m
        for c in p.clauses:
            if c.pos & m == c.pos:
                nxt |= 1 << c.head
        if nxt == m:
            return m
        m = nxt


def is_stable_model(p: NormalProgram, s: Interpretation) -> bool:
    return least_model(gl_reduce(p, s)) == s


def is_supported_model(p: NormalProgram, m: Interpretation) -> bool:
    if not is_classical_model(p, m):
        return False
    supported = 0
    for c in p.clauses:
        if c.body_holds(m):
            supported |= 1 << c.head
    return m & ~supported == 0


# -- vectorised sweeps ---------------------------------------------------------


@lru_cache(maxsize=32)
def _universe(n: int) -> np.ndarray:
    u = np.arange(1 << n, dtype=np.int64)
    u.flags.writeable = False
    return u


def _body_holds(u: np.ndarray, c: Clause) -> np.ndarray:
    return ((u & c.pos) == c.pos) & ((u & c.neg) == 0)


def _has(u: np.ndarray, atom: int) -> np.ndarray:
    return ((u >> atom) & 1).astype(bool)


def _model_flags(p: NormalProgram, u: np.ndarray) -> np.ndarray:
    ok = np.ones(u.shape, dtype=bool)
    for c in p.clauses:
        ok &= ~_body_holds(u, c) | _has(u, c.head)
    return ok


def _model_array(p: NormalProgram, cap: int | None) -> np.ndarray:
    check_cap(p.n, cap)
    u = _universe(p.n)
    return u[_model_flags(p, u)]


def _minimal(models: np.ndarray) -> np.ndarray:
    keep = [
        m for m in models.tolist()
        if not np.any(((models & m) == models) & (models != m))
    ]
    return np.array(keep, dtype=np.int64)


def two_valued_models(p: NormalProgram, cap: int | None = DEFAULT_CAP) -> list[Interpretation]:
    return _model_array(p, cap).tolist()


def minimal_models(p: NormalProgram, cap: int | None = DEFAULT_CAP) -> list[Interpretation]:
    return _minimal(_model_array(p, cap)).tolist()


def entails(p: NormalProgram, m: Interpretation, cap: int | None = DEFAULT_CAP) -> bool:
    """Classical consequence, with ``not a`` read as ``~a``: every model of ``p`` contains ``m``."""
    models = _model_array(p, cap)
    return bool(np.all((models & m) == m))


def is_p_stable(p: NormalProgram, m: Interpretation, cap: int | None = DEFAULT_CAP) -> bool:
    red = red_reduce(p, m)
    return is_classical_model(red, m) and entails(red, m, cap)


def stable_models(p: NormalProgram, cap: int | None = DEFAULT_CAP) -> list[Interpretation]:
    # stable models are classical models, so filtering the model array is exact
    return [s for s in two_valued_models(p, cap) if is_stable_model(p, s)]


def p_stable_models(p: NormalProgram, cap: int | None = DEFAULT_CAP) -> list[Interpretation]:
    # M |= RED(P, M) iff M |= P, so candidates are the 2-valued models of P
    return [m for m in two_valued_models(p, cap) if entails(red_reduce(p, m), m, None)]


def supported_models(p: NormalProgram, cap: int | None = DEFAULT_CAP) -> list[Interpretation]:
    check_cap(p.n, cap)
    u = _universe(p.n)
    ok = np.ones(u.shape, dtype=bool)
    support = np.zeros((p.n,) + u.shape, dtype=bool)
    for c in p.clauses:
        body = _body_holds(u, c)
        ok &= ~body | _has(u, c.head)
        support[c.head] |= body
    for atom in range(p.n):
        ok &= ~_has(u, atom) | support[atom]
    return u[ok].tolist()


# -- text format -----------------------------------------------------------------


def format_clause(p: NormalProgram, c: Clause) -> str:
    body = [p.atoms[i] for i in members(c.pos)] + [f"not {p.atoms[i]}" for i in members(c.neg)]
    if not body:
        return f"{p.atoms[c.head]}."
    return f"{p.atoms[c.head]} :- {', '.join(body)}."


def format_program(p: NormalProgram) -> str:
    """Debug text: a ``% sig:`` line, then one clause per line in sorted order."""
    lines = ["% sig: " + " ".join(p.atoms) if p.atoms else "% sig:"]
    lines += [format_clause(p, c) for c in p.sorted_clauses()]
    return "\n".join(lines) + "\n"


# atoms may carry one level of parentheses, e.g. def(a)
_ATOM = r"[^\s(),:.]+(?:\([^\s()]*\))?"
_ATOM_RE = re.compile(rf"^{_ATOM}$")


def _split_body(body: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


def parse_program(text: str) -> NormalProgram:
    """Inverse of :func:`format_program`.

    Without a ``% sig:`` line the signature is the atoms in first-occurrence order.
    """
    atoms: list[str] = []
    index: dict[str, int] = {}

    def atom(name: str, lineno: int) -> int:
        if not _ATOM_RE.match(name):
            raise ParseError(f"bad atom {name!r}", lineno)
        if name not in index:
            index[name] = len(atoms)
            atoms.append(name)
        return index[name]

    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("% sig:"):
            for name in line[len("% sig:"):].split():
                if name in index:
                    raise ParseError(f"duplicate signature atom {name!r}", lineno)
                atom(name, lineno)
            continue
        if not line or line.startswith("%"):
            continue
        if not line.endswith("."):
            raise ParseError("clause must end with `.`", lineno)
        line = line[:-1]
        head, sep, body = line.partition(":-")
        h = atom(head.strip(), lineno)
        pos = neg = 0
        if sep:
            for lit in _split_body(body):
                if lit.startswith("not "):
                    neg |= 1 << atom(lit[4:].strip(), lineno)
                else:
                    pos |= 1 << atom(lit, lineno)
        clauses.append(Clause(h, pos, neg))
    return NormalProgram(tuple(atoms), frozenset(clauses))


def random_program(
    rng: random.Random, max_atoms: int = 8, max_clauses: int = 12
) -> NormalProgram:
    """Random normal program; each atom enters a clause body positively or negatively with odds 1/6 each."""
    n = rng.randint(0, max_atoms)
    atoms = tuple(f"p{i}" for i in range(n))
    clauses = set()
    if n:
        for _ in range(rng.randint(0, max_clauses)):
            pos = neg = 0
            for i in range(n):
                r = rng.random()
                if r < 1 / 6:
                    pos |= 1 << i
                elif r < 1 / 3:
                    neg |= 1 << i
            clauses.add(Clause(rng.randrange(n), pos, neg))
    return NormalProgram(atoms, frozenset(clauses))
