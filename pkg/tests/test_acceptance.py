"""Acceptance criteria, one test per criterion.

Each test asserts the exact expected outcome and its stated wall-clock
budget, and prints one PASS line (run with -v or -s to see them).  Expected
counts are frozen from the counting oracles: bracketing sets count by the
catalan numbers, and the production groups expand per letter, per tail word,
and per bracketing pair on both sides.
"""

import time

from tagforge.codec import DEFAULT_HAT, HatTemplate, catalan, code_letter, code_word, dot
from tagforge.engine import (
    Calculus,
    Derivable,
    NotFoundWithinBudget,
    chain_check,
    check_trace,
    closure_level,
    derives,
    naive_closure_oracle,
)
from tagforge.formulas import Var, match_instance, parse_formula
from tagforge.lemmas import (
    WEAKENING_AXIOM,
    build_chain_lemma6,
    build_run_chain,
    check_lemma1,
    check_lemma3,
    check_production,
    collatz_system,
    growing_system,
    rebracketing_calculus,
    shrinking_system,
)
from tagforge.reduction import build_PT, build_reduction, words_of_length

H = DEFAULT_HAT
K = WEAKENING_AXIOM
K_CALC = Calculus("weakening", (K,))
S = parse_formula("(x -> (y -> z)) -> ((x -> y) -> (x -> z))")


class _Budget:
    def __init__(self, criterion: str, seconds: float):
        self.criterion = criterion
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        if exc_type is None:
            assert elapsed < self.seconds, (
                f"criterion {self.criterion} exceeded its {self.seconds}s budget"
            )
            print(f"PASS criterion {self.criterion} ({elapsed:.2f}s)")
        else:
            print(f"FAIL criterion {self.criterion} ({elapsed:.2f}s)")
        return False


def test_criterion_01_codec_counts():
    with _Budget("1: codec counts and the acec listing", 1.0):
        sizes = [len(code_word(H, "a" * n).members) for n in range(1, 7)]
        assert sizes == [1, 1, 2, 5, 14, 42]
        assert sizes == [catalan(n) for n in range(6)]
        a, c, e = (code_letter(H, i) for i in (1, 3, 5))
        d = lambda x, y: dot(H, x, y)
        listing = [
            d(a, d(c, d(e, c))),
            d(a, d(d(c, e), c)),
            d(d(a, c), d(e, c)),
            d(d(a, d(c, e)), c),
            d(d(d(a, c), e), c),
        ]
        assert list(code_word(H, "acec").formulas) == listing


def test_criterion_02_combinator_separation():
    with _Budget("2: combinator separation for three templates", 1.0):
        for text in ("x", "x -> x", "x -> (x -> x)"):
            assert check_lemma1(HatTemplate.from_text(text)).verdict == "pass"


def test_criterion_03_code_separation_sweep():
    with _Budget("3: code separation, alphabet 3, words to length 4", 30.0):
        report = check_lemma3(H, 3, 4)
        assert report.verdict == "pass"
        assert report.resources["formulas"] == 471


def test_criterion_04_production_axioms_derivable():
    with _Budget("4: production axioms and codes derive from weakening", 10.0):
        pt = build_PT(collatz_system(), H)
        # per letter: 3 tails x 1 head bracketing x catalan(|production|-1),
        # for each of the two production groups, plus the 4 rotations
        assert len(pt.axioms) == 3 * (1 + 1 + 2) * 2 + 4 == 28
        for ax in pt.axioms:
            verdict = derives(K_CALC, ax, 2)
            assert isinstance(verdict, Derivable)
            assert check_trace(K_CALC, verdict.trace, ax)
        for n in range(1, 5):
            for word in words_of_length(("a", "b", "c"), n):
                for member in code_word(H, word).formulas:
                    verdict = derives(K_CALC, member, 2)
                    assert isinstance(verdict, Derivable)
                    assert check_trace(K_CALC, verdict.trace, member)


def test_criterion_05_rebracketing_chains():
    with _Budget("5: rebracketing chains, words to length 5", 60.0):
        calc = rebracketing_calculus(H)
        count = 0
        for n in range(1, 6):
            for word in words_of_length(("a", "b"), n):
                members = code_word(H, word).members
                for source in members:
                    for target in members:
                        chain = build_chain_lemma6(H, source, target)
                        assert chain_check(calc, chain)
                        count += 1
        assert count == sum(
            (2**n) * catalan(n - 1) ** 2 for n in range(1, 6)
        )


def test_criterion_06_halting_run_chain():
    with _Budget("6: chain along the full halting run", 10.0):
        t = collatz_system()
        chain = build_run_chain(t, H, "aaa", 50)
        assert chain_check(build_PT(t, H), chain)
        from tagforge.codec import decode

        assert decode(H, chain.waypoints[-1]).word == "a"


def test_criterion_07_closure_classification():
    with _Budget("7: closure generators classify as axioms or codes", 120.0):
        report = check_production(collatz_system(), K_CALC, H, "aaa", 2)
        assert report.verdict == "pass"


def test_criterion_08_oracle_soundness():
    with _Budget("8: literal-rule oracle covered by condensed closure", 60.0):
        pool = (Var("p"), parse_formula("p -> p"))
        for axioms in ((K,), (K, S)):
            calc = Calculus("probe", axioms)
            for n in (1, 2):
                generators = closure_level(calc, n).generators
                for f in naive_closure_oracle(calc, n, pool):
                    assert any(
                        match_instance(f, g.formula) is not None for g in generators
                    )


def test_criterion_09_halting_equivalence_end_to_end():
    with _Budget("9: halting forward plus guarded negative", 120.0):
        halting = build_reduction(shrinking_system(), K_CALC, "aa")
        for axiom in K_CALC.axioms:
            verdict = derives(halting.full, axiom, 4)
            assert isinstance(verdict, Derivable)
            assert check_trace(halting.full, verdict.trace, axiom)
        growing = build_reduction(growing_system(), K_CALC, "aa")
        for axiom in K_CALC.axioms:
            assert derives(growing.full, axiom, 4) == NotFoundWithinBudget(4)
        report = check_production(growing_system(), K_CALC, H, "aa", 4)
        assert report.verdict == "pass"


def test_criterion_10_negative_derivability_control():
    with _Budget("10: x -> x stays underivable through level 5", 60.0):
        goal = parse_formula("x -> x")
        generators = closure_level(K_CALC, 5).generators
        assert not any(
            match_instance(goal, g.formula) is not None for g in generators
        )
        assert derives(K_CALC, goal, 5) == NotFoundWithinBudget(5)
