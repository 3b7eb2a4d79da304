"""Cross-checks between the program-based routes and the brute-force oracle.

Each framework instance is run through every check below and summarised in a
:class:`VerificationReport`. Checks in ``OBSERVATIONS`` are reported but never
fail a campaign.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import oracle
from .framework import ArgumentationFramework, all_frameworks, attacked_by, random_af, serialize_apx
from .mapping import MappedProgram, extension_of, pi_full, pi_minus, range_plus_of
from .program import (
    NormalProgram,
    facts,
    gl_reduce,
    least_model,
    minimal_models,
    p_stable_models,
    red_reduce,
    stable_models,
    supported_models,
    two_valued_models,
)
from .ranges import (
    ReductionKind,
    gl_stage_models,
    gl_supported_models,
    range_maximal_models,
    semi_stable_via_2valued,
    semi_stable_via_lp,
    semi_stable_via_pstable,
    stage_via_lp,
)

CHECKS = (
    "thm1",
    "thm2",
    "prop1.1",
    "prop1.2",
    "cor1.1",
    "cor1.2",
    "prop2.1",
    "prop2.2",
    "prop3",
    "o1",
    "obs1",
    "obs2",
    "r1",
    "obs3",
    "stable-char",
    "range-plus",
    "facts-gl-red",
    "reduct-invariance",
)
OBSERVATIONS = frozenset({"prop1.1"})


@dataclass
class VerificationReport:
    instance: str
    framework: ArgumentationFramework
    verdicts: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def failures(self) -> list[str]:
        return [k for k in CHECKS if k not in OBSERVATIONS and not self.verdicts.get(k, True)]

    @property
    def notes(self) -> list[str]:
        return [k for k in CHECKS if k in OBSERVATIONS and not self.verdicts.get(k, True)]

    @property
    def passed(self) -> bool:
        return not self.failures

    def counterexample(self) -> dict | None:
        bad = self.failures + self.notes
        if not bad:
            return None
        return {
            "apx": serialize_apx(self.framework),
            "checks": {k: self.details.get(k, "") for k in bad},
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        parts = [self.instance, status]
        cx = self.counterexample()
        if cx is not None:
            parts.append(json.dumps(cx, sort_keys=True, ensure_ascii=False))
        return "\t".join(parts)


def _fmt_sets(af: ArgumentationFramework, sets) -> str:
    return "[" + ",".join("[" + ",".join(af.names_of(s)) + "]" for s in sets) + "]"


def _fmt_models(p: NormalProgram, models) -> str:
    return "[" + ",".join("{" + ",".join(p.names_of(m)) + "}" for m in models) + "]"


class _Checker:
    def __init__(self, af: ArgumentationFramework):
        self.af = af
        self.verdicts: dict[str, bool] = {}
        self.details: dict[str, str] = {}

    def record(self, name: str, ok: bool, detail: Callable[[], str]) -> None:
        self.verdicts[name] = bool(ok)
        if not ok:
            self.details[name] = detail()

    def same_extensions(self, name: str, got, want) -> None:
        got, want = oracle.canonical(got), oracle.canonical(want)
        self.record(
            name, got == want,
            lambda: f"lp={_fmt_sets(self.af, got)} oracle={_fmt_sets(self.af, want)}",
        )

    def same_models(self, name: str, p: NormalProgram, got, want) -> None:
        got, want = sorted(set(got)), sorted(set(want))
        self.record(
            name, got == want,
            lambda: f"left={_fmt_models(p, got)} right={_fmt_models(p, want)}",
        )

    def subset_models(self, name: str, p: NormalProgram, small, big) -> None:
        extra = sorted(set(small) - set(big))
        self.record(name, not extra, lambda: f"offending={_fmt_models(p, extra)}")


def _facts_disagreements(p: NormalProgram) -> list[int]:
    return [m for m in range(1 << p.n) if facts(gl_reduce(p, m)) != facts(red_reduce(p, m))]


def verify_framework(af: ArgumentationFramework, instance: str = "") -> VerificationReport:
    ck = _Checker(af)
    full: MappedProgram = pi_full(af)
    minus: MappedProgram = pi_minus(af)
    P, Pm = full.program, minus.program

    semi = oracle.semi_stable_extensions(af, None)
    stage = oracle.stage_extensions(af, None)
    two_full = two_valued_models(P, None)
    two_minus = two_valued_models(Pm, None)
    supp = supported_models(P, None)
    pstab = p_stable_models(P, None)
    stab = stable_models(P, None)
    gls = gl_supported_models(full, ReductionKind.GL, None)
    glst = gl_stage_models(minus, ReductionKind.GL, None)

    ck.same_extensions("thm1", semi_stable_via_lp(af, cap=None), semi)
    ck.same_extensions("thm2", stage_via_lp(af, cap=None), stage)
    ck.same_models("prop1.1", P, range_maximal_models(full, two_full), gls)
    ck.same_models("prop1.2", P, range_maximal_models(full, pstab), gls)
    ck.same_extensions("cor1.1", semi_stable_via_pstable(af, None), semi)
    ck.same_extensions("cor1.2", semi_stable_via_2valued(af, None), semi)
    ck.subset_models("prop2.1", P, stab, gls)
    ck.subset_models("prop2.2", P, gls, pstab)
    if stab:
        ck.same_models("prop3", P, stab, gls)
    else:
        ck.record("prop3", True, str)

    ext = lambda mp, models: [extension_of(mp, m) for m in models]  # noqa: E731
    ck.same_extensions("o1", ext(minus, two_minus), oracle.conflict_free_sets(af, None))
    ck.same_extensions("obs1", ext(full, two_full), oracle.admissible_sets(af, None))
    ck.same_extensions(
        "obs2", oracle.range_maximal_admissible(af, None), semi
    )
    ck.same_extensions("r1", ext(full, supp), oracle.complete_extensions(af, None))
    ck.same_extensions("obs3", ext(full, pstab), oracle.preferred_extensions(af, None))
    ck.same_extensions("stable-char", ext(full, stab), oracle.stable_extensions(af, None))

    off = [
        m for mp, pool in ((minus, two_minus), (full, supp)) for m in pool
        if range_plus_of(mp, m) != attacked_by(af, extension_of(mp, m))
    ]
    ck.record("range-plus", not off, lambda: f"offending={_fmt_models(P, off)}")

    bad = _facts_disagreements(P) + _facts_disagreements(Pm)
    ck.record("facts-gl-red", not bad, lambda: f"offending={_fmt_models(P, bad)}")

    inv_ok = (
        gl_supported_models(full, ReductionKind.RED, None) == gls
        and gl_stage_models(minus, ReductionKind.RED, None) == glst
    )
    ck.record("reduct-invariance", inv_ok, lambda: "GL and RED selections differ")

    return VerificationReport(instance, af, ck.verdicts, ck.details)


def verify_program(p: NormalProgram) -> dict[str, bool]:
    """Reduct and classical-semantics sanity checks on an arbitrary normal program."""
    two = set(two_valued_models(p, None))
    minimal = set(minimal_models(p, None))
    stable = set(stable_models(p, None))
    out = {
        "facts-gl-red": not _facts_disagreements(p),
        "stable<=supported": stable <= set(supported_models(p, None)),
        "stable<=minimal": stable <= minimal,
        "minimal<=2valued": minimal <= two,
        "pstable<=2valued": set(p_stable_models(p, None)) <= two,
    }
    if p.is_definite:
        lm = least_model(p)
        out["definite-stable=least"] = sorted(stable) == [lm]
        out["definite-least-minimal"] = lm in minimal
    return out


# -- instance streams ---------------------------------------------------------------


def exhaustive_instances(max_n: int) -> Iterator[tuple[str, ArgumentationFramework]]:
    if not 0 <= max_n <= 4:
        raise ValueError("exhaustive mode requires 0 <= max_n <= 4")
    for n in range(max_n + 1):
        for code, af in enumerate(all_frameworks(n)):
            yield f"exh:n={n}:code={code}", af


def random_instances(
    count: int, n_range: tuple[int, int], p_list: Iterable[float], seed: int
) -> Iterator[tuple[str, ArgumentationFramework]]:
    """Seeded stream; each instance id carries the ``random_af`` arguments that rebuild it."""
    lo, hi = n_range
    if lo < 0 or hi < lo:
        raise ValueError("bad n range")
    ps = list(p_list)
    if not ps or any(not 0.0 <= p <= 1.0 for p in ps):
        raise ValueError("p values must lie in [0, 1]")
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(lo, hi)
        p = ps[i % len(ps)]
        inst_seed = rng.getrandbits(64)
        yield f"rnd:{i}:seed={inst_seed}:n={n}:p={p}", random_af(inst_seed, n, p)


def _run(item: tuple[str, ArgumentationFramework]) -> VerificationReport:
    return verify_framework(item[1], item[0])


def run_campaign(
    instances: Iterable[tuple[str, ArgumentationFramework]], jobs: int = 1
) -> Iterator[VerificationReport]:
    """Reports in instance order; ``jobs > 1`` spreads instances over worker processes."""
    if jobs <= 1:
        yield from map(_run, instances)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_run, instances, chunksize=16)
