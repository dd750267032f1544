"""Derivability engine for calculi with modus ponens and substitution.

The derivable set of such a calculus is infinite (substitution alone sees to
that), so it is represented here up to substitution: each closure level holds
most-general generator formulas produced by condensed detachment, and
membership of a concrete formula means being an instance of some generator.
This representation is a choice of this engine, not a theorem; its coverage is
cross-checked empirically against `naive_closure_oracle`, which applies the
two rules literally over a finite substitution pool.

Every generator carries a `DerivationTrace` that an independent checker
(`check_trace`) re-validates using only the term-kernel primitives.  Negative
answers are always reported as "not found within budget", never as
underivability.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import islice, product
from typing import Iterator, Mapping, Sequence

from .formulas import (
    Formula,
    Imp,
    Substitution,
    apply_substitution,
    canonical_rename,
    match_instance,
    parse_formula,
    rename_apart,
    render_formula,
    unify,
    variables,
)

__all__ = [
    "AxiomStep",
    "CAP_ENV_VAR",
    "Calculus",
    "ChainProof",
    "ClosureLevel",
    "DEFAULT_GENERATOR_CAP",
    "Derivable",
    "DerivationTrace",
    "DetachStep",
    "Generator",
    "GeneratorCapError",
    "NotFoundWithinBudget",
    "TraceStep",
    "calculus_from_json",
    "calculus_to_json",
    "chain_check",
    "check_trace",
    "closure_level",
    "closure_levels",
    "condensed_detach",
    "derive_weakening",
    "derives",
    "load_calculus",
    "naive_closure_oracle",
    "trace_from_json",
    "trace_to_json",
]

DEFAULT_GENERATOR_CAP = 50_000
CAP_ENV_VAR = "TAGFORGE_GENERATOR_CAP"


class GeneratorCapError(RuntimeError):
    """The closure grew past the generator cap; the result is unusable, not
    silently truncated."""

    def __init__(self, level: int, count: int, cap: int):
        super().__init__(
            f"generator cap exceeded at level {level}: {count} generators, cap {cap}"
        )
        self.level = level
        self.count = count
        self.cap = cap


def _resolve_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    raw = os.environ.get(CAP_ENV_VAR)
    return int(raw) if raw else DEFAULT_GENERATOR_CAP


@dataclass(frozen=True)
class Calculus:
    label: str
    axioms: tuple[Formula, ...]


@dataclass(frozen=True)
class AxiomStep:
    """An instance of an axiom: result == substitution applied to the axiom."""

    axiom: int
    substitution: Mapping[str, Formula]
    result: Formula


@dataclass(frozen=True)
class DetachStep:
    """Modus ponens on earlier steps, at the most general instance.

    The minor premise is renamed apart from the major's variables (via
    `rename_apart`, which is deterministic), the unifier equates the major's
    antecedent with the renamed minor, and result is the unifier applied to
    the major's consequent.
    """

    major: int
    minor: int
    unifier: Mapping[str, Formula]
    result: Formula


TraceStep = AxiomStep | DetachStep


@dataclass(frozen=True)
class DerivationTrace:
    steps: tuple[TraceStep, ...]

    @property
    def final(self) -> Formula:
        return self.steps[-1].result


@dataclass(frozen=True)
class Generator:
    """A most-general derivable formula with its evidence."""

    formula: Formula
    trace: DerivationTrace
    level: int


@dataclass(frozen=True)
class ClosureLevel:
    level: int
    generators: tuple[Generator, ...]

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return tuple(g.formula for g in self.generators)


@dataclass(frozen=True)
class Derivable:
    trace: DerivationTrace
    generator: Formula
    level: int


@dataclass(frozen=True)
class NotFoundWithinBudget:
    depth: int


def condensed_detach(major: Formula, minor: Formula) -> Formula | None:
    """Most general consequent of modus ponens between the two formulas.

    None when the major is not an implication or its antecedent does not
    unify with the (renamed-apart) minor.  The result's variables are renamed
    canonically.
    """
    pair = _detach_raw(major, minor)
    if pair is None:
        return None
    return canonical_rename(pair[0])


def _detach_raw(major: Formula, minor: Formula) -> tuple[Formula, Substitution] | None:
    if type(major) is not Imp:
        return None
    fresh_minor = rename_apart(minor, set(variables(major)))
    u = unify(major.left, fresh_minor)
    if u is None:
        return None
    return apply_substitution(u, major.right), u


def _splice(
    major: DerivationTrace,
    minor: DerivationTrace,
    unifier: Substitution,
    result: Formula,
) -> DerivationTrace:
    steps = list(major.steps)
    offset = len(steps)
    for st in minor.steps:
        if isinstance(st, DetachStep):
            steps.append(
                DetachStep(st.major + offset, st.minor + offset, st.unifier, st.result)
            )
        else:
            steps.append(st)
    steps.append(DetachStep(offset - 1, len(steps) - 1, unifier, result))
    return DerivationTrace(tuple(steps))


def closure_levels(
    calc: Calculus, *, subsumption: bool = True, cap: int | None = None
) -> Iterator[ClosureLevel]:
    """Yield closure levels 0, 1, 2, ... of the calculus.

    Level 0 holds the axioms; level n+1 adds every condensed detachment
    between level-n generators.  Generators are deduplicated by canonical
    renaming (equivalently, alpha-equivalence) and, unless `subsumption` is
    disabled, a new generator that is an instance of a retained one is
    dropped.  Output order is deterministic: majors then minors in discovery
    order, frontier pairs only.
    """
    cap = _resolve_cap(cap)
    gens: list[Generator] = []
    seen: set[Formula] = set()
    for idx, ax in enumerate(calc.axioms):
        canon = canonical_rename(ax)
        if canon in seen:
            continue
        seen.add(canon)
        if subsumption and any(
            match_instance(ax, g.formula) is not None for g in gens
        ):
            continue
        trace = DerivationTrace((AxiomStep(idx, {}, ax),))
        gens.append(Generator(ax, trace, 0))
    if len(gens) > cap:
        raise GeneratorCapError(0, len(gens), cap)
    yield ClosureLevel(0, tuple(gens))
    frontier = 0
    level = 0
    while True:
        level += 1
        size = len(gens)
        added: list[Generator] = []
        for mi in range(size):
            for ni in range(size):
                if mi < frontier and ni < frontier:
                    continue
                # Detach the trace finals (alpha-equal to the generator
                # formulas) so the recorded unifier re-validates against the
                # spliced steps.
                pair = _detach_raw(gens[mi].trace.final, gens[ni].trace.final)
                if pair is None:
                    continue
                raw, unifier = pair
                canon = canonical_rename(raw)
                if canon in seen:
                    continue
                seen.add(canon)
                if subsumption and (
                    any(match_instance(canon, g.formula) is not None for g in gens)
                    or any(match_instance(canon, g.formula) is not None for g in added)
                ):
                    continue
                trace = _splice(gens[mi].trace, gens[ni].trace, unifier, raw)
                added.append(Generator(canon, trace, level))
                if size + len(added) > cap:
                    raise GeneratorCapError(level, size + len(added), cap)
        gens.extend(added)
        frontier = size
        yield ClosureLevel(level, tuple(gens))


def closure_level(
    calc: Calculus, n: int, *, subsumption: bool = True, cap: int | None = None
) -> ClosureLevel:
    if n < 0:
        raise ValueError("level must be nonnegative")
    return next(islice(closure_levels(calc, subsumption=subsumption, cap=cap), n, None))


def derives(
    calc: Calculus, goal: Formula, depth: int, *, cap: int | None = None
) -> Derivable | NotFoundWithinBudget:
    """Search levels 0..depth for a generator having `goal` as an instance.

    A hit yields the generator's trace (of which the goal is an instance); a
    miss is only a budget statement, never an underivability claim.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    checked = 0
    for lvl in islice(closure_levels(calc, cap=cap), depth + 1):
        for g in lvl.generators[checked:]:
            if match_instance(goal, g.formula) is not None:
                return Derivable(g.trace, g.formula, lvl.level)
        checked = len(lvl.generators)
    return NotFoundWithinBudget(depth)


def check_trace(calc: Calculus, trace: DerivationTrace, claimed: Formula) -> bool:
    """Re-validate every step against the calculus and check that the final
    formula has `claimed` as an instance.

    Uses only apply_substitution / unification bookkeeping / match_instance;
    independent of how the trace was produced.  Any malformed reference makes
    the trace invalid rather than raising.
    """
    steps = trace.steps
    if not steps:
        return False
    for i, st in enumerate(steps):
        if isinstance(st, AxiomStep):
            if not 0 <= st.axiom < len(calc.axioms):
                return False
            if apply_substitution(dict(st.substitution), calc.axioms[st.axiom]) != st.result:
                return False
        elif isinstance(st, DetachStep):
            if not (0 <= st.major < i and 0 <= st.minor < i):
                return False
            major = steps[st.major].result
            if type(major) is not Imp:
                return False
            minor = rename_apart(steps[st.minor].result, set(variables(major)))
            u = dict(st.unifier)
            if apply_substitution(u, major.left) != apply_substitution(u, minor):
                return False
            if apply_substitution(u, major.right) != st.result:
                return False
        else:
            return False
    return match_instance(claimed, steps[-1].result) is not None


def derive_weakening(
    calc: Calculus,
    derivable: Formula,
    trace: DerivationTrace,
    antecedent: Formula,
) -> DerivationTrace:
    """Extend a derivation of `derivable` to one of antecedent -> derivable.

    Requires an axiom with derivable -> (antecedent -> derivable) as an
    instance (the weakening shape x -> (y -> x) always qualifies).  The trace
    is the given one plus the axiom instance plus one detachment.
    """
    if not check_trace(calc, trace, derivable):
        raise ValueError("supplied trace does not establish the formula")
    target = Imp(derivable, Imp(antecedent, derivable))
    for idx, ax in enumerate(calc.axioms):
        sub = match_instance(target, ax)
        if sub is not None:
            break
    else:
        raise ValueError("no axiom has the required weakening instance")
    steps = list(trace.steps)
    minor_idx = len(steps) - 1
    steps.append(AxiomStep(idx, sub, target))
    major_idx = len(steps) - 1
    minor = rename_apart(steps[minor_idx].result, set(variables(target)))
    u = unify(target.left, minor)
    assert u is not None  # the trace establishes an ancestor of `derivable`
    steps.append(DetachStep(major_idx, minor_idx, u, apply_substitution(u, target.right)))
    return DerivationTrace(tuple(steps))


@dataclass(frozen=True)
class ChainProof:
    """Waypoints C0..Cn with, for each i, a trace of a formula having
    Ci -> Ci+1 as an instance.  n = 0 states nothing beyond C0 itself."""

    waypoints: tuple[Formula, ...]
    links: tuple[DerivationTrace, ...]

    @staticmethod
    def concat(chains: Sequence["ChainProof"]) -> "ChainProof":
        if not chains:
            raise ValueError("cannot concatenate zero chains")
        waypoints = list(chains[0].waypoints)
        links = list(chains[0].links)
        for nxt in chains[1:]:
            if nxt.waypoints[0] != waypoints[-1]:
                raise ValueError("chain endpoints do not meet")
            waypoints.extend(nxt.waypoints[1:])
            links.extend(nxt.links)
        return ChainProof(tuple(waypoints), tuple(links))


def chain_check(calc: Calculus, proof: ChainProof) -> bool:
    """Validate every link via check_trace against its waypoint implication."""
    w, links = proof.waypoints, proof.links
    if not w or len(links) != len(w) - 1:
        return False
    return all(
        check_trace(calc, link, Imp(w[i], w[i + 1])) for i, link in enumerate(links)
    )


def naive_closure_oracle(
    calc: Calculus,
    n: int,
    pool: Sequence[Formula],
    *,
    max_size: int = 100_000,
) -> set[Formula]:
    """Literal n-fold closure where substitution is restricted to total maps
    from a formula's variables into `pool`.

    Cross-validation oracle for the condensed representation: every formula
    this produces must be an instance of some generator at the same level or
    below.  Intended for small n only.
    """
    if n < 0:
        raise ValueError("level must be nonnegative")
    pool = tuple(pool)
    current: set[Formula] = set(calc.axioms)
    for _ in range(n):
        nxt = set(current)
        for major in current:
            if type(major) is Imp and major.left in current:
                nxt.add(major.right)
        for f in current:
            names = variables(f)
            if not names:
                continue
            for combo in product(pool, repeat=len(names)):
                nxt.add(apply_substitution(dict(zip(names, combo)), f))
                if len(nxt) > max_size:
                    raise GeneratorCapError(n, len(nxt), max_size)
        current = nxt
    return current


def calculus_to_json(calc: Calculus) -> dict:
    return {"label": calc.label, "axioms": [render_formula(a) for a in calc.axioms]}


def calculus_from_json(obj: dict) -> Calculus:
    return Calculus(obj["label"], tuple(parse_formula(a) for a in obj["axioms"]))


def _subst_to_json(subst: Mapping[str, Formula]) -> dict:
    return {name: render_formula(f) for name, f in sorted(subst.items())}


def _subst_from_json(obj: Mapping[str, str]) -> Substitution:
    return {name: parse_formula(text) for name, text in obj.items()}


def trace_to_json(trace: DerivationTrace) -> dict:
    steps = []
    for st in trace.steps:
        if isinstance(st, AxiomStep):
            steps.append(
                {
                    "kind": "axiom",
                    "axiom": st.axiom,
                    "substitution": _subst_to_json(st.substitution),
                    "result": render_formula(st.result),
                }
            )
        else:
            steps.append(
                {
                    "kind": "detach",
                    "major": st.major,
                    "minor": st.minor,
                    "unifier": _subst_to_json(st.unifier),
                    "result": render_formula(st.result),
                }
            )
    return {"steps": steps}


def trace_from_json(obj: dict) -> DerivationTrace:
    steps: list[TraceStep] = []
    for raw in obj["steps"]:
        if raw["kind"] == "axiom":
            steps.append(
                AxiomStep(
                    raw["axiom"],
                    _subst_from_json(raw["substitution"]),
                    parse_formula(raw["result"]),
                )
            )
        elif raw["kind"] == "detach":
            steps.append(
                DetachStep(
                    raw["major"],
                    raw["minor"],
                    _subst_from_json(raw["unifier"]),
                    parse_formula(raw["result"]),
                )
            )
        else:
            raise ValueError(f"unknown trace step kind: {raw['kind']!r}")
    return DerivationTrace(tuple(steps))


def load_calculus(path: str) -> Calculus:
    with open(path, encoding="utf-8") as fh:
        return calculus_from_json(json.load(fh))
