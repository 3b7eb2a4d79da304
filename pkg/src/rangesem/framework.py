"""Argumentation frameworks: representation, text formats, random generation.

Argument sets are plain ``int`` bitmasks: bit ``i`` is set iff the argument
with index ``i`` is a member.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ParseError

ArgumentSet = int


def members(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class ArgumentationFramework:
    """A finite set of named arguments and an attack relation over their indices."""

    names: tuple[str, ...] = ()
    attacks: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "attacks", frozenset(self.attacks))
        if len(set(self.names)) != len(self.names):
            raise ValueError("argument names must be unique")
        if any(not name for name in self.names):
            raise ValueError("argument names must be non-empty")
        n = len(self.names)
        for a, b in self.attacks:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"attack ({a},{b}) references an unknown index")

    @classmethod
    def from_names(
        cls, names: Iterable[str], attacks: Iterable[tuple[str, str]] = ()
    ) -> ArgumentationFramework:
        names = tuple(names)
        index = {name: i for i, name in enumerate(names)}
        return cls(names, frozenset((index[a], index[b]) for a, b in attacks))

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full(self) -> ArgumentSet:
        return (1 << self.n) - 1

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        return self._index[name]

    @cached_property
    def attackers(self) -> tuple[ArgumentSet, ...]:
        """``attackers[i]`` is the mask of arguments attacking ``i``."""
        masks = [0] * self.n
        for a, b in self.attacks:
            masks[b] |= 1 << a
        return tuple(masks)

    @cached_property
    def targets(self) -> tuple[ArgumentSet, ...]:
        """``targets[i]`` is the mask of arguments attacked by ``i``."""
        masks = [0] * self.n
        for a, b in self.attacks:
            masks[a] |= 1 << b
        return tuple(masks)

    def mask(self, names: Iterable[str]) -> ArgumentSet:
        m = 0
        for name in names:
            m |= 1 << self._index[name]
        return m

    def names_of(self, s: ArgumentSet) -> list[str]:
        return [self.names[i] for i in members(s)]

    def sorted_attacks(self) -> list[tuple[int, int]]:
        return sorted(self.attacks)


def attacked_by(af: ArgumentationFramework, s: ArgumentSet) -> ArgumentSet:
    """S+: every argument attacked by some member of ``s``."""
    out = 0
    for i in members(s):
        out |= af.targets[i]
    return out


def range_of(af: ArgumentationFramework, s: ArgumentSet) -> ArgumentSet:
    return s | attacked_by(af, s)


_APX_ARG = re.compile(r"^arg\(\s*([^\s(),]+)\s*\)\s*\.$")
_APX_ATT = re.compile(r"^att\(\s*([^\s(),]+)\s*,\s*([^\s(),]+)\s*\)\s*\.$")


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse the ICCMA ``arg(x).`` / ``att(x,y).`` format.

    Arguments must be declared before any attack that mentions them.
    """
    names: list[str] = []
    index: dict[str, int] = {}
    attacks: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        m = _APX_ARG.match(line)
        if m:
            name = m.group(1)
            if name in index:
                raise ParseError(f"duplicate argument `{name}`", lineno)
            index[name] = len(names)
            names.append(name)
            continue
        m = _APX_ATT.match(line)
        if m:
            for name in m.groups():
                if name not in index:
                    raise ParseError(f"undeclared argument `{name}`", lineno)
            attacks.add((index[m.group(1)], index[m.group(2)]))
            continue
        raise ParseError(f"malformed line {line!r}", lineno)
    return ArgumentationFramework(tuple(names), frozenset(attacks))


def parse_tgf(text: str) -> ArgumentationFramework:
    """Parse Trivial Graph Format: node ids, a ``#`` line, then ``src dst`` edges.

    Anything after the first token of a node line (or the second of an edge
    line) is a label and is ignored.
    """
    lines = text.splitlines()
    try:
        sep = next(i for i, line in enumerate(lines) if line.strip() == "#")
    except StopIteration:
        raise ParseError("missing `#` separator line") from None
    names: list[str] = []
    index: dict[str, int] = {}
    for lineno, raw in enumerate(lines[:sep], start=1):
        parts = raw.split()
        if not parts:
            continue
        if parts[0] in index:
            raise ParseError(f"duplicate node `{parts[0]}`", lineno)
        index[parts[0]] = len(names)
        names.append(parts[0])
    attacks: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines[sep + 1 :], start=sep + 2):
        parts = raw.split()
        if not parts:
            continue
        if len(parts) < 2:
            raise ParseError(f"malformed edge line {raw.strip()!r}", lineno)
        for node in parts[:2]:
            if node not in index:
                raise ParseError(f"edge references unknown node `{node}`", lineno)
        attacks.add((index[parts[0]], index[parts[1]]))
    return ArgumentationFramework(tuple(names), frozenset(attacks))


def serialize_apx(af: ArgumentationFramework) -> str:
    out = [f"arg({name}).\n" for name in af.names]
    out += [f"att({af.names[a]},{af.names[b]}).\n" for a, b in af.sorted_attacks()]
    return "".join(out)


def serialize_tgf(af: ArgumentationFramework) -> str:
    out = [f"{name}\n" for name in af.names] + ["#\n"]
    out += [f"{af.names[a]} {af.names[b]}\n" for a, b in af.sorted_attacks()]
    return "".join(out)


def random_af(seed: int, n: int, p: float) -> ArgumentationFramework:
    """Random framework over arguments ``a0..a{n-1}``.

    Uses ``random.Random(seed)``; the n*n ordered pairs are visited row-major
    (attacker outer, target inner) and each is kept iff ``rng.random() < p``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    attacks = set()
    for a in range(n):
        for b in range(n):
            if rng.random() < p:
                attacks.add((a, b))
    return ArgumentationFramework(tuple(f"a{i}" for i in range(n)), frozenset(attacks))


def all_frameworks(n: int) -> Iterator[ArgumentationFramework]:
    """Every attack relation over ``n`` arguments, attack matrix read as a binary counter.

    Bit ``i*n + j`` of the counter is the attack (i, j).
    """
    names = tuple("abcdefghijklmnopqrstuvwxyz"[i] if n <= 26 else f"a{i}" for i in range(n))
    pairs = [(i, j) for i in range(n) for j in range(n)]
    for code in range(1 << (n * n)):
        yield ArgumentationFramework(
            names, frozenset(pair for k, pair in enumerate(pairs) if code >> k & 1)
        )
