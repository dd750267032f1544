"""Desk-scale verification suite.

Each check exercises one numbered correctness lemma of the construction on a
concrete instance and returns a `LemmaReport`.  Pass verdicts are backed by
evidence that has already been re-validated through the independent kernel
(check_trace / chain_check); fail verdicts carry a concrete counterexample;
anything that runs out of budget is reported as inconclusive, never as pass.

The lemma numbering is the project's own; see the README for what each id
states.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice

from .codec import (
    DEFAULT_HAT,
    AlphabeticFormula,
    HatTemplate,
    circ,
    code_word,
    decode,
    default_hat_candidates,
    dot,
    dot_code,
    right_nested,
)
from .engine import (
    AxiomStep,
    Calculus,
    ChainProof,
    Derivable,
    DerivationTrace,
    GeneratorCapError,
    chain_check,
    check_trace,
    closure_levels,
    derive_weakening,
    derives,
)
from .formulas import (
    Formula,
    Imp,
    Var,
    match_instance,
    parse_formula,
    rename_apart,
    render_formula,
    unify,
)
from .reduction import (
    ReductionBundle,
    build_PT,
    build_reduction,
    production_axioms,
    rebracketing_axioms,
    t_alpha_member,
    words_of_length,
)
from .tags import Halted, TagSystem, parse_tag_system, tag_run, tag_step

__all__ = [
    "LemmaReport",
    "WEAKENING_AXIOM",
    "bounded_chain_search",
    "build_chain_lemma6",
    "build_chain_lemma7",
    "build_chains_lemma6",
    "build_run_chain",
    "check_halting_equivalence",
    "check_inclusion",
    "check_lemma1",
    "check_lemma3",
    "check_production",
    "collatz_system",
    "enumerate_alphabetic",
    "first_short_code_level",
    "growing_system",
    "rebracketing_calculus",
    "run_lemma",
    "shrinking_system",
    "system_label",
]

WEAKENING_AXIOM = parse_formula("x -> y -> x")


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    instance: str
    verdict: str  # "pass" | "fail" | "inconclusive-budget"
    witness: dict = field(default_factory=dict)
    resources: dict = field(default_factory=dict)
    artifacts: tuple = ()  # (name, json-able object) pairs

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def system_label(t: TagSystem) -> str:
    rules = ",".join(f"{a}>{t.productions[a]}" for a in t.alphabet)
    return f"[{rules}|d={t.deletion}]"


def collatz_system() -> TagSystem:
    """Three letters, deletion 2; the classic arithmetic-flavoured example."""
    return parse_tag_system("d=2\na -> bc\nb -> a\nc -> aaa\n")


def shrinking_system() -> TagSystem:
    """Halts on every input: each production shortens the word."""
    return parse_tag_system("d=2\na -> b\nb -> b\n")


def growing_system() -> TagSystem:
    """Never halts on words of length >= 2: productions preserve length."""
    return parse_tag_system("d=2\na -> aa\n")


def rebracketing_calculus(h: HatTemplate = DEFAULT_HAT) -> Calculus:
    return Calculus("rebracketing", rebracketing_axioms(h))


# --- combinator separation -------------------------------------------------


def check_lemma1(h: HatTemplate) -> LemmaReport:
    """The pairing combinator never unifies with its own implication
    extension, variables shared as written."""
    pat = circ(h, Var("x"), Var("y"))
    u = unify(pat, Imp(pat, Var("z")))
    verdict = "pass" if u is None else "fail"
    witness = {} if u is None else {"unifier": {k: render_formula(v) for k, v in u.items()}}
    return LemmaReport("lemma1", f"hat={h.text}", verdict, witness)


# --- code separation --------------------------------------------------------


def enumerate_alphabetic(
    h: HatTemplate, alphabet_size: int, max_len: int
) -> list[AlphabeticFormula]:
    """All code members for all words up to max_len over the first
    alphabet_size letters, in word order then bracketing order."""
    if alphabet_size < 1 or max_len < 1:
        raise ValueError("alphabet_size and max_len must be positive")
    letters = tuple("abcdefghijklmnopqrstuvwxyz"[:alphabet_size])
    out: list[AlphabeticFormula] = []
    for length in range(1, max_len + 1):
        for word in words_of_length(letters, length):
            out.extend(code_word(h, word).members)
    return out


def check_lemma3(
    h: HatTemplate,
    alphabet_size: int,
    max_len: int,
    *,
    max_pairs: int = 2_000_000,
) -> LemmaReport:
    """No two distinct code members are unifiable (on variable-disjoint
    copies; all members share the code variable p)."""
    members = enumerate_alphabetic(h, alphabet_size, max_len)
    forms = [m.formula for m in members]
    n = len(forms)
    pairs = n * (n - 1) // 2
    instance = f"hat={h.text} alphabet={alphabet_size} max_len={max_len}"
    if pairs > max_pairs:
        return LemmaReport(
            "lemma3",
            instance,
            "inconclusive-budget",
            {"reason": f"{pairs} pairs exceeds budget {max_pairs}"},
        )
    renamed = [rename_apart(f, {"p"}) for f in forms]
    for i in range(n):
        fi = forms[i]
        for j in range(i + 1, n):
            if unify(fi, renamed[j]) is not None:
                return LemmaReport(
                    "lemma3",
                    instance,
                    "fail",
                    {
                        "left": render_formula(fi),
                        "right": render_formula(forms[j]),
                        "words": [members[i].word, members[j].word],
                    },
                )
    return LemmaReport(
        "lemma3", instance, "pass", {}, {"formulas": n, "pairs": pairs}
    )


# --- rebracketing chains ----------------------------------------------------


@dataclass(frozen=True)
class _Link:
    axiom: int  # index into rebracketing_axioms order
    subst: dict
    source: AlphabeticFormula
    target: AlphabeticFormula


_INVERSE_ROTATION = {0: 1, 1: 0, 2: 3, 3: 2}


def _is_right_nested(a: AlphabeticFormula) -> bool:
    while not a.is_letter:
        if not a.left.is_letter:
            return False
        a = a.right
    return True


def _chain_to_spine(h: HatTemplate, a: AlphabeticFormula) -> list[_Link]:
    """Links taking `a` to the fully right-nested bracketing of its word.

    First the right spine is combed into a single left factor (root
    rotations), then that factor is unwound letter by letter (left-factor
    rotations followed by one root rotation each round).
    """
    links: list[_Link] = []
    if _is_right_nested(a):
        return links
    spine: list[AlphabeticFormula] = []
    node = a
    while not node.is_letter:
        spine.append(node.left)
        node = node.right
    current = a
    for _ in range(len(spine) - 1):
        left, rest = current.left, current.right
        nxt = dot_code(h, dot_code(h, left, rest.left), rest.right)
        links.append(
            _Link(
                0,
                {"x": left.formula, "y": rest.left.formula, "z": rest.right.formula},
                current,
                nxt,
            )
        )
        current = nxt
    while True:
        left, tail = current.left, current.right
        if left.is_letter:
            break
        while not left.right.is_letter:
            new_left = dot_code(h, dot_code(h, left.left, left.right.left), left.right.right)
            nxt = dot_code(h, new_left, tail)
            links.append(
                _Link(
                    2,
                    {
                        "x": left.left.formula,
                        "y": left.right.left.formula,
                        "z": left.right.right.formula,
                        "u": tail.formula,
                    },
                    current,
                    nxt,
                )
            )
            current, left = nxt, new_left
        head, last = left.left, left.right
        nxt = dot_code(h, head, dot_code(h, last, tail))
        links.append(
            _Link(
                1,
                {"x": head.formula, "y": last.formula, "z": tail.formula},
                current,
                nxt,
            )
        )
        current = nxt
    return links


def _invert(link: _Link) -> _Link:
    # Every rotation axiom has its converse in the group, under the same
    # substitution.
    return _Link(_INVERSE_ROTATION[link.axiom], link.subst, link.target, link.source)


def _links_to_chain(
    source: AlphabeticFormula, links: list[_Link], axiom_offset: int
) -> ChainProof:
    waypoints = [source.formula] + [l.target.formula for l in links]
    traces = tuple(
        DerivationTrace(
            (
                AxiomStep(
                    axiom_offset + l.axiom,
                    l.subst,
                    Imp(l.source.formula, l.target.formula),
                ),
            )
        )
        for l in links
    )
    return ChainProof(tuple(waypoints), traces)


def build_chain_lemma6(
    h: HatTemplate,
    source: AlphabeticFormula,
    target: AlphabeticFormula,
    *,
    axiom_offset: int = 0,
) -> ChainProof:
    """A chain from one bracketing of a word to another, using only the
    rebracketing axioms: normalize the source to the right-nested spine, then
    run the target's own normalization backwards.

    With the default offset the links are checkable against
    rebracketing_calculus(h); pass the rotation group's position for a larger
    calculus.
    """
    if source.word != target.word:
        raise ValueError("source and target must encode the same word")
    links = _chain_to_spine(h, source)
    links += [_invert(l) for l in reversed(_chain_to_spine(h, target))]
    return _links_to_chain(source, links, axiom_offset)


def build_chains_lemma6(
    h: HatTemplate, source: AlphabeticFormula, *, axiom_offset: int = 0
) -> list[ChainProof]:
    """Chains from one bracketing to every bracketing of its word."""
    return [
        build_chain_lemma6(h, source, target, axiom_offset=axiom_offset)
        for target in code_word(h, source.word).members
    ]


# --- production chains ------------------------------------------------------


def build_chain_lemma7(t: TagSystem, h: HatTemplate, word: str) -> ChainProof:
    """A chain from the code of `word` to the code of its successor under one
    production, checkable against build_PT(t, h).

    Chosen endpoints are the right-nested members.  When nothing is left of
    the word beyond the consumed head, a single direct production axiom links
    the two codes; otherwise the code is rebracketed into head-and-tail form,
    one production axiom fires with the tail bound to the scheme variable,
    and the result is rebracketed to the spine.
    """
    nxt = tag_step(t, word)
    if nxt is None:
        raise ValueError(f"tag system not applicable to {word!r}")
    t1, t2 = production_axioms(t, h)
    rotation_offset = len(t1) + len(t2)
    d = t.deletion
    head, beta = word[:d], word[d:]
    omega = t.productions[word[0]]
    source = right_nested(h, word)
    target = right_nested(h, nxt)
    if not beta:
        axiom = Imp(source.formula, target.formula)
        idx = len(t1) + t2.index(axiom)
        link = DerivationTrace((AxiomStep(idx, {}, axiom),))
        return ChainProof((source.formula, target.formula), (link,))
    head_rn = right_nested(h, head)
    beta_rn = right_nested(h, beta)
    omega_rn = right_nested(h, omega)
    split = dot_code(h, head_rn, beta_rn)
    successor = dot_code(h, beta_rn, omega_rn)
    first = build_chain_lemma6(h, source, split, axiom_offset=rotation_offset)
    axiom = Imp(
        dot(h, head_rn.formula, Var("x")), dot(h, Var("x"), omega_rn.formula)
    )
    idx = t1.index(axiom)
    subst = {"x": beta_rn.formula}
    step = AxiomStep(idx, subst, Imp(split.formula, successor.formula))
    middle = ChainProof(
        (split.formula, successor.formula), (DerivationTrace((step,)),)
    )
    last = build_chain_lemma6(h, successor, target, axiom_offset=rotation_offset)
    return ChainProof.concat([first, middle, last])


def build_run_chain(
    t: TagSystem, h: HatTemplate, word: str, max_steps: int
) -> ChainProof:
    """Concatenation of per-production chains along the run from `word`,
    stopping at the halt word or when the budget runs out."""
    chains: list[ChainProof] = []
    current = word
    for _ in range(max_steps):
        if len(current) < t.deletion:
            break
        chains.append(build_chain_lemma7(t, h, current))
        current = tag_step(t, current)
    if not chains:
        start = right_nested(h, word).formula
        return ChainProof((start,), ())
    return ChainProof.concat(chains)


# --- closure characterization ----------------------------------------------


def _closure_up_to(calc: Calculus, n: int, cap: int | None):
    return next(islice(closure_levels(calc, cap=cap), n, None))


def check_production(
    t: TagSystem,
    p0: Calculus,
    h: HatTemplate,
    alpha: str,
    n: int,
    *,
    cap: int | None = None,
) -> LemmaReport:
    """Classify every closure generator of the production calculus plus the
    input code: each must be an instance of a production-side axiom or an
    instance of a code member of a word the run can produce.

    The same classification is then applied to the full reduction bundle, but
    only to generators born strictly below the first level at which a
    short-word code instance appears (past that point the halting hooks are
    expected to inject the target calculus).
    """
    instance = f"tag={system_label(t)} alpha={alpha!r} n={n}"
    pt = build_PT(t, h)
    base = Calculus("productions+input", pt.axioms + code_word(h, alpha).formulas)
    try:
        top = _closure_up_to(base, n, cap)
    except GeneratorCapError as e:
        return LemmaReport("lemma9", instance, "inconclusive-budget", {"reason": str(e)})
    unclassified = []
    for g in top.generators:
        if any(match_instance(g.formula, ax) is not None for ax in pt.axioms):
            continue
        if t_alpha_member(t, alpha, g.formula, h, n):
            continue
        unclassified.append(g)
    resources = {"generators": len(top.generators), "levels": n}
    if unclassified:
        return LemmaReport(
            "lemma9",
            instance,
            "fail",
            {"unclassified": [render_formula(g.formula) for g in unclassified]},
            resources,
        )
    bundle = build_reduction(t, p0, alpha, (h,) + default_hat_candidates())
    try:
        guard = first_short_code_level(bundle, n, cap=cap)
        top_full = _closure_up_to(bundle.full, n, cap)
    except GeneratorCapError as e:
        return LemmaReport("lemma9", instance, "inconclusive-budget", {"reason": str(e)})
    limit = guard if guard is not None else n + 1
    hook_side = bundle.pt.axioms + bundle.h_axioms.axioms
    bad = []
    for g in top_full.generators:
        if g.level >= limit:
            continue
        if any(match_instance(g.formula, ax) is not None for ax in hook_side):
            continue
        if t_alpha_member(t, alpha, g.formula, bundle.hat, n):
            continue
        bad.append(g)
    resources["full_generators"] = len(top_full.generators)
    resources["guard_level"] = guard
    if bad:
        return LemmaReport(
            "lemma9",
            instance,
            "fail",
            {"unclassified_full": [render_formula(g.formula) for g in bad]},
            resources,
        )
    return LemmaReport("lemma9", instance, "pass", {}, resources)


def first_short_code_level(
    bundle: ReductionBundle, max_level: int, *, cap: int | None = None
) -> int | None:
    """Smallest closure level of the full reduction calculus at which some
    generator meets the code of a word shorter than the deletion number
    (instance in either direction), or None within the budget."""
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    shorts: list[Formula] = []
    for length in range(1, bundle.tag.deletion):
        for word in words_of_length(bundle.tag.alphabet, length):
            shorts.extend(code_word(bundle.hat, word).formulas)
    for lvl in islice(closure_levels(bundle.full, cap=cap), max_level + 1):
        for g in lvl.generators:
            if g.level != lvl.level:
                continue
            for member in shorts:
                if (
                    match_instance(member, g.formula) is not None
                    or match_instance(g.formula, member) is not None
                ):
                    return lvl.level
    return None


# --- halting equivalence ----------------------------------------------------


def check_halting_equivalence(
    t: TagSystem,
    p0: Calculus,
    input_word: str,
    budget: int,
    *,
    cap: int | None = None,
) -> LemmaReport:
    """Forward: a halting run must make every target axiom derivable from the
    reduction bundle, with traces the independent checker accepts.  When the
    run does not halt within budget the reverse direction is undecidable at
    desk scale, so the check instead requires the closure characterization to
    hold at every explored level and every target axiom to stay out of reach;
    that outcome is reported as inconclusive, not as pass.
    """
    if not p0.axioms:
        raise ValueError("target calculus must be nonempty")
    if t.deletion < 2:
        raise ValueError("deletion number must be at least 2")
    bundle = build_reduction(t, p0, input_word)
    outcome = tag_run(t, input_word, budget)
    instance = f"tag={system_label(t)} input={input_word!r} budget={budget}"
    if isinstance(outcome, Halted):
        artifacts = []
        for a in p0.axioms:
            verdict = derives(bundle.full, a, budget, cap=cap)
            if not isinstance(verdict, Derivable) or not check_trace(
                bundle.full, verdict.trace, a
            ):
                return LemmaReport(
                    "lemma11",
                    instance,
                    "fail",
                    {"underived_axiom": render_formula(a)},
                )
            artifacts.append((f"trace[{render_formula(a)}]", verdict.trace))
        return LemmaReport(
            "lemma11",
            instance,
            "pass",
            {"direction": "halting", "axioms": len(p0.axioms), "halt_steps": outcome.steps},
            {},
            tuple(artifacts),
        )
    production = check_production(t, p0, bundle.hat, input_word, budget, cap=cap)
    if production.verdict == "fail":
        return LemmaReport(
            "lemma11", instance, "fail", {"production_check": production.witness}
        )
    for a in p0.axioms:
        verdict = derives(bundle.full, a, budget, cap=cap)
        if isinstance(verdict, Derivable):
            return LemmaReport(
                "lemma11",
                instance,
                "fail",
                {
                    "reason": "axiom derivable although the run did not halt in budget",
                    "axiom": render_formula(a),
                },
            )
    return LemmaReport(
        "lemma11",
        instance,
        "inconclusive-budget",
        {"direction": "non-halting", "production_verdict": production.verdict},
    )


# --- derivability of the whole production calculus ---------------------------


def check_inclusion(t: TagSystem, h: HatTemplate) -> LemmaReport:
    """Every production-calculus axiom has a checkable derivation from the
    weakening axiom alone: either directly as an instance, or by deriving the
    consequent and weakening it under the antecedent."""
    calc = Calculus("weakening", (WEAKENING_AXIOM,))
    pt = build_PT(t, h)
    for ax in pt.axioms:
        sub = match_instance(ax, WEAKENING_AXIOM)
        if sub is not None:
            trace = DerivationTrace((AxiomStep(0, sub, ax),))
        else:
            if type(ax) is not Imp:
                return LemmaReport(
                    "lemma12", "", "fail", {"axiom": render_formula(ax)}
                )
            consequent = ax.right
            sub2 = match_instance(consequent, WEAKENING_AXIOM)
            if sub2 is None:
                return LemmaReport(
                    "lemma12",
                    "",
                    "fail",
                    {"axiom": render_formula(ax), "reason": "consequent not a weakening instance"},
                )
            base = DerivationTrace((AxiomStep(0, sub2, consequent),))
            trace = derive_weakening(calc, consequent, base, ax.left)
        if not check_trace(calc, trace, ax):
            return LemmaReport(
                "lemma12", "", "fail", {"axiom": render_formula(ax), "reason": "trace rejected"}
            )
    instance = f"tag={system_label(t)} hat={h.text}"
    return LemmaReport(
        "lemma12", instance, "pass", {"axioms": len(pt.axioms)}, {}, ()
    )


# --- bounded chain search (converse of the simulation) -----------------------


def bounded_chain_search(
    t: TagSystem,
    h: HatTemplate,
    source_word: str,
    target_word: str,
    max_word_len: int,
    *,
    max_nodes: int = 50_000,
) -> bool:
    """Breadth-first search for a chain of single production-calculus axiom
    instances from a code member of source_word to one of target_word,
    with all waypoints alphabetic and words bounded by max_word_len."""
    targets = set(code_word(h, target_word).members)
    frontier = list(code_word(h, source_word).members)
    seen = set(frontier)
    while frontier:
        nxt: list[AlphabeticFormula] = []
        for node in frontier:
            for neighbor in _axiom_moves(t, h, node):
                if len(neighbor.word) > max_word_len or neighbor in seen:
                    continue
                if neighbor in targets:
                    return True
                seen.add(neighbor)
                nxt.append(neighbor)
                if len(seen) > max_nodes:
                    raise GeneratorCapError(0, len(seen), max_nodes)
        frontier = nxt
    return False


def _axiom_moves(
    t: TagSystem, h: HatTemplate, af: AlphabeticFormula
) -> list[AlphabeticFormula]:
    out: list[AlphabeticFormula] = []
    if not af.is_letter:
        left, right = af.left, af.right
        if not right.is_letter:  # rotate at the root, leftwards
            out.append(dot_code(h, dot_code(h, left, right.left), right.right))
        if not left.is_letter:  # rotate at the root, rightwards
            out.append(dot_code(h, left.left, dot_code(h, left.right, right)))
            if not left.right.is_letter:  # rotate inside the left factor
                out.append(
                    dot_code(
                        h,
                        dot_code(h, dot_code(h, left.left, left.right.left), left.right.right),
                        right,
                    )
                )
            if not left.left.is_letter:
                out.append(
                    dot_code(
                        h,
                        dot_code(h, left.left.left, dot_code(h, left.left.right, left.right)),
                        right,
                    )
                )
        if len(left.word) == t.deletion:  # production with a leftover tail
            for member in code_word(h, t.productions[left.word[0]]).members:
                out.append(dot_code(h, right, member))
    if len(af.word) == t.deletion:  # production consuming the whole word
        out.extend(code_word(h, t.productions[af.word[0]]).members)
    return out


# --- CLI dispatch -------------------------------------------------------------


def _default_p0() -> Calculus:
    return Calculus("weakening", (WEAKENING_AXIOM,))


def run_lemma(lemma_id: str, options: dict | None = None) -> list[LemmaReport]:
    """Run one suite item (or all) with CLI-friendly defaults."""
    opts = options or {}
    hat = opts.get("hat", DEFAULT_HAT)
    system = opts.get("system") or collatz_system()
    p0 = opts.get("p0") or _default_p0()
    if lemma_id == "all":
        out: list[LemmaReport] = []
        for name in ("lemma1", "lemma3", "lemma6", "lemma7", "lemma9", "lemma11", "lemma12"):
            out.extend(run_lemma(name, options))
        return out
    if lemma_id == "lemma1":
        hats = opts.get("hats") or (
            HatTemplate.from_text("x"),
            HatTemplate.from_text("x -> x"),
            HatTemplate.from_text("x -> (x -> x)"),
        )
        return [check_lemma1(h) for h in hats]
    if lemma_id == "lemma3":
        return [
            check_lemma3(
                hat,
                opts.get("alphabet_size", 3),
                opts.get("max_len", 4),
            )
        ]
    if lemma_id == "lemma6":
        return [_sweep_lemma6(hat, opts.get("alphabet_size", 2), opts.get("max_len", 4))]
    if lemma_id == "lemma7":
        word = opts.get("input_word", "aaa")
        budget = opts.get("budget", 50)
        chain = build_run_chain(system, hat, word, budget)
        calc = build_PT(system, hat)
        ok = chain_check(calc, chain)
        # Waypoint formulas can be astronomically large as text, so the
        # reported witness carries the decoded words instead.
        words: list[str] = []
        for w in chain.waypoints:
            parsed = decode(hat, w)
            if parsed is not None and (not words or words[-1] != parsed.word):
                words.append(parsed.word)
        return [
            LemmaReport(
                "lemma7",
                f"tag={system_label(system)} input={word!r} budget={budget}",
                "pass" if ok else "fail",
                {"links": len(chain.links), "words": words},
            )
        ]
    if lemma_id == "lemma9":
        return [
            check_production(
                system, p0, hat, opts.get("input_word", "aaa"), opts.get("depth", 2)
            )
        ]
    if lemma_id == "lemma11":
        budget = opts.get("budget", 4)
        if "system" in opts:
            word = opts.get("input_word", "aa")
            return [check_halting_equivalence(system, p0, word, budget)]
        return [
            check_halting_equivalence(shrinking_system(), p0, "aa", budget),
            check_halting_equivalence(growing_system(), p0, "aa", budget),
        ]
    if lemma_id == "lemma12":
        return [check_inclusion(system, hat)]
    raise ValueError(f"unknown lemma id: {lemma_id!r}")


def _sweep_lemma6(h: HatTemplate, alphabet_size: int, max_len: int) -> LemmaReport:
    calc = rebracketing_calculus(h)
    letters = tuple("abcdefghijklmnopqrstuvwxyz"[:alphabet_size])
    chains = 0
    for length in range(1, max_len + 1):
        for word in words_of_length(letters, length):
            members = code_word(h, word).members
            for source in members:
                for target in members:
                    chain = build_chain_lemma6(h, source, target)
                    if not chain_check(calc, chain):
                        return LemmaReport(
                            "lemma6",
                            f"alphabet={alphabet_size} max_len={max_len}",
                            "fail",
                            {
                                "word": word,
                                "source": render_formula(source.formula),
                                "target": render_formula(target.formula),
                            },
                        )
                    chains += 1
    return LemmaReport(
        "lemma6",
        f"hat={h.text} alphabet={alphabet_size} max_len={max_len}",
        "pass",
        {},
        {"chains": chains},
    )
