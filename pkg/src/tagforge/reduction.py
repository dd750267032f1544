"""Build the calculi that make a tag system's halting question a derivability
question.

The production calculus has three axiom groups over encoded words:

  T1   code(a_i + alpha) . x  ->  x . code(omega_i)     (tail left over)
  T2   code(a_i + alpha)      ->  code(omega_i)         (nothing left over)
  R    the four rebracketing moves between dot shapes

where alpha ranges over all words of length deletion-1 and every axiom is
expanded over every bracketing of both sides.  The halting hooks H map each
code of a word shorter than the deletion number to each axiom of the target
calculus, so a halting run hands over exactly the target's theorems.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .codec import (
    DEFAULT_HAT,
    HatTemplate,
    choose_hat,
    code_word,
    default_hat_candidates,
    dot,
)
from .engine import Calculus
from .formulas import Formula, Imp, Var, match_instance, render_formula
from .tags import TagSystem, render_tag_file, run_words

__all__ = [
    "ReductionBundle",
    "build_H",
    "build_PT",
    "build_reduction",
    "bundle_to_json",
    "production_axioms",
    "rebracketing_axioms",
    "t_alpha_member",
    "words_of_length",
]

# Trailer variable of the production schemes; kept distinct from the code
# variable p so scheme instances stay unrestricted.
SCHEME_VARIABLE = "x"


def words_of_length(alphabet: Sequence[str], n: int) -> list[str]:
    return ["".join(c) for c in product(alphabet, repeat=n)]


def rebracketing_axioms(h: HatTemplate) -> tuple[Formula, Formula, Formula, Formula]:
    """The four dot-reassociation schemes, at the root and under a trailer."""
    x, y, z, u = Var("x"), Var("y"), Var("z"), Var("u")

    def d(a: Formula, b: Formula) -> Formula:
        return dot(h, a, b)

    return (
        Imp(d(x, d(y, z)), d(d(x, y), z)),
        Imp(d(d(x, y), z), d(x, d(y, z))),
        Imp(d(d(x, d(y, z)), u), d(d(d(x, y), z), u)),
        Imp(d(d(d(x, y), z), u), d(d(x, d(y, z)), u)),
    )


def production_axioms(
    t: TagSystem, h: HatTemplate
) -> tuple[tuple[Formula, ...], tuple[Formula, ...]]:
    """The T1 and T2 groups, fully expanded over bracketings.

    Order is fixed for reproducible traces: letters in alphabet order, then
    head words lexicographically, then head bracketings, then production
    bracketings.  For deletion number 1 the head degenerates to the bare
    letter (the empty alpha is admitted).
    """
    x = Var(SCHEME_VARIABLE)
    t1: list[Formula] = []
    t2: list[Formula] = []
    tails = words_of_length(t.alphabet, t.deletion - 1)
    for letter in t.alphabet:
        omega_members = code_word(h, t.productions[letter]).formulas
        for alpha in tails:
            head_members = code_word(h, letter + alpha).formulas
            for head in head_members:
                for target in omega_members:
                    t1.append(Imp(dot(h, head, x), dot(h, x, target)))
        for alpha in tails:
            head_members = code_word(h, letter + alpha).formulas
            for head in head_members:
                for target in omega_members:
                    t2.append(Imp(head, target))
    return tuple(t1), tuple(t2)


def build_PT(t: TagSystem, h: HatTemplate = DEFAULT_HAT) -> Calculus:
    """The production calculus: T1, then T2, then the rebracketing moves."""
    t1, t2 = production_axioms(t, h)
    return Calculus("productions", t1 + t2 + rebracketing_axioms(h))


def build_H(t: TagSystem, p0: Calculus, h: HatTemplate = DEFAULT_HAT) -> Calculus:
    """Halting hooks: every code member of every nonempty word shorter than
    the deletion number implies every axiom of the target calculus."""
    axioms: list[Formula] = []
    for length in range(1, t.deletion):
        for word in words_of_length(t.alphabet, length):
            for member in code_word(h, word).formulas:
                for a in p0.axioms:
                    axioms.append(Imp(member, a))
    return Calculus("halting-hooks", tuple(axioms))


@dataclass(frozen=True)
class ReductionBundle:
    """Everything built for one (tag system, target calculus, input) triple.

    `full` is the reduction calculus: productions, halting hooks, then the
    code members of the input word as axioms.  `groups` keeps the partition
    for reporting and serialization.
    """

    tag: TagSystem
    p0: Calculus
    hat: HatTemplate
    input_word: str
    pt: Calculus
    h_axioms: Calculus
    full: Calculus
    groups: dict[str, tuple[Formula, ...]]


def build_reduction(
    t: TagSystem,
    p0: Calculus,
    input_word: str,
    candidates: Sequence[HatTemplate] | None = None,
) -> ReductionBundle:
    if not input_word:
        raise ValueError("input word must be nonempty")
    for ch in input_word:
        if ch not in t.productions:
            raise ValueError(f"input letter {ch!r} outside alphabet")
    hat = choose_hat(p0, candidates if candidates is not None else default_hat_candidates())
    t1, t2 = production_axioms(t, hat)
    r = rebracketing_axioms(hat)
    pt = Calculus("productions", t1 + t2 + r)
    hooks = build_H(t, p0, hat)
    input_members = code_word(hat, input_word).formulas
    full = Calculus(
        f"reduction:{input_word}",
        pt.axioms + hooks.axioms + input_members,
    )
    groups = {
        "T1": t1,
        "T2": t2,
        "R": r,
        "H": hooks.axioms,
        "input": input_members,
    }
    return ReductionBundle(t, p0, hat, input_word, pt, hooks, full, groups)


def t_alpha_member(
    t: TagSystem, alpha: str, f: Formula, h: HatTemplate, max_steps: int
) -> bool:
    """Is f an instance of a code member of alpha or of any word the run from
    alpha produces within max_steps productions?"""
    if not alpha:
        raise ValueError("alpha must be nonempty")
    for word in run_words(t, alpha, max_steps):
        for member in code_word(h, word).formulas:
            if match_instance(f, member) is not None:
                return True
    return False


def bundle_to_json(bundle: ReductionBundle) -> dict:
    from .engine import calculus_to_json

    obj: dict = {
        key: [render_formula(f) for f in group]
        for key, group in bundle.groups.items()
    }
    obj["hat"] = bundle.hat.text
    obj["tag_file"] = render_tag_file(bundle.tag)
    obj["p0"] = calculus_to_json(bundle.p0)
    return obj
