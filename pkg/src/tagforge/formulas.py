"""Term kernel for implicational formulas.

Formulas are binary implication trees over named variables and are the sole
term language of the package.  Everything here is pure: substitution,
unification (with occurs check), one-sided instance matching, and renaming
helpers.  All values are immutable and safe to share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

__all__ = [
    "Formula",
    "FormulaSyntaxError",
    "Imp",
    "Substitution",
    "Var",
    "alpha_equal",
    "apply_substitution",
    "canonical_rename",
    "match_instance",
    "parse_formula",
    "rename_apart",
    "render_formula",
    "unify",
    "unify_apart",
    "variables",
]

_IDENT = re.compile(r"[a-z][a-z0-9_]*")


class FormulaSyntaxError(ValueError):
    """Malformed formula text; carries the character offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, eq=False, slots=True)
class Var:
    """A propositional variable."""

    name: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not _IDENT.fullmatch(self.name):
            raise ValueError(f"invalid variable name: {self.name!r}")
        object.__setattr__(self, "_hash", hash(("v", self.name)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return type(other) is Var and other.name == self.name

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True, eq=False, slots=True)
class Imp:
    """An implication node."""

    left: "Formula"
    right: "Formula"
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_hash", hash(("i", self.left._hash, self.right._hash))
        )

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(other) is not Imp or other._hash != self._hash:
            return False
        # Iterative structural walk.  Encoded formulas share subtrees heavily
        # (they are small DAGs but huge trees), so identical nodes
        # short-circuit and already-compared pairs are skipped.
        stack = [(self, other)]
        seen: set[tuple[int, int]] = set()
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if type(a) is not type(b):
                return False
            if type(a) is Var:
                if a.name != b.name:
                    return False
                continue
            if a._hash != b._hash:
                return False
            key = (id(a), id(b))
            if key in seen:
                continue
            seen.add(key)
            stack.append((a.right, b.right))
            stack.append((a.left, b.left))
        return True

    def __repr__(self) -> str:
        return f"Imp({self.left!r}, {self.right!r})"


Formula = Var | Imp

# A substitution is a finite mapping from variable names to formulas and is
# always applied simultaneously (no chained re-substitution).
Substitution = dict[str, Formula]


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def parse_formula(text: str) -> Formula:
    """Parse `->` as right-associative implication over lowercase identifiers.

    Grammar: formula := atom | atom "->" formula; atom := ident | "(" formula ")".
    """
    f, i = _parse_imp(text, 0)
    i = _skip_ws(text, i)
    if i != len(text):
        raise FormulaSyntaxError("unexpected trailing input", i)
    return f


def _parse_imp(text: str, i: int) -> tuple[Formula, int]:
    left, i = _parse_atom(text, i)
    j = _skip_ws(text, i)
    if text.startswith("->", j):
        right, k = _parse_imp(text, j + 2)
        return Imp(left, right), k
    return left, j


def _parse_atom(text: str, i: int) -> tuple[Formula, int]:
    i = _skip_ws(text, i)
    if i >= len(text):
        raise FormulaSyntaxError("formula expected", i)
    if text[i] == "(":
        f, j = _parse_imp(text, i + 1)
        j = _skip_ws(text, j)
        if j >= len(text) or text[j] != ")":
            raise FormulaSyntaxError("')' expected", j)
        return f, j + 1
    m = _IDENT.match(text, i)
    if m is None:
        raise FormulaSyntaxError("identifier or '(' expected", i)
    return Var(m.group()), m.end()


def render_formula(f: Formula) -> str:
    """Canonical text with minimal parentheses; inverse of parse_formula."""
    parts: list[str] = []
    _render(f, parts, False)
    return "".join(parts)


def _render(f: Formula, out: list[str], nested: bool) -> None:
    if type(f) is Var:
        out.append(f.name)
        return
    if nested:
        out.append("(")
    _render(f.left, out, True)
    out.append(" -> ")
    _render(f.right, out, False)
    if nested:
        out.append(")")


def variables(f: Formula) -> tuple[str, ...]:
    """Variable names in first-occurrence order, deduplicated."""
    out: list[str] = []
    seen: set[str] = set()
    visited: set[int] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if type(g) is Var:
            if g.name not in seen:
                seen.add(g.name)
                out.append(g.name)
        elif id(g) not in visited:
            visited.add(id(g))
            stack.append(g.right)
            stack.append(g.left)
    return tuple(out)


def apply_substitution(subst: Substitution, f: Formula) -> Formula:
    """Replace every occurrence of each bound variable, simultaneously."""
    if not subst:
        return f
    memo: dict[int, Formula] = {}

    def go(g: Formula) -> Formula:
        if type(g) is Var:
            return subst.get(g.name, g)
        r = memo.get(id(g))
        if r is None:
            left = go(g.left)
            right = go(g.right)
            r = g if left is g.left and right is g.right else Imp(left, right)
            memo[id(g)] = r
        return r

    return go(f)


def _walk(t: Formula, subst: dict[str, Formula]) -> Formula:
    while type(t) is Var:
        nxt = subst.get(t.name)
        if nxt is None:
            break
        t = nxt
    return t


def _occurs(name: str, t: Formula, subst: dict[str, Formula]) -> bool:
    visited: set[int] = set()
    stack = [t]
    while stack:
        g = _walk(stack.pop(), subst)
        if type(g) is Var:
            if g.name == name:
                return True
        elif id(g) not in visited:
            visited.add(id(g))
            stack.append(g.right)
            stack.append(g.left)
    return False


def unify(a: Formula, b: Formula) -> Substitution | None:
    """Most general unifier of a and b, or None.

    Variables are shared as written; use unify_apart when the inputs should be
    treated as independent.  The result is idempotent, with bindings sorted by
    variable name.  The occurs check is mandatory: solutions must be finite
    formulas, so cyclic bindings are rejected.
    """
    subst: dict[str, Formula] = {}
    stack = [(a, b)]
    seen: set[tuple[int, int]] = set()
    while stack:
        s, t = stack.pop()
        s = _walk(s, subst)
        t = _walk(t, subst)
        if s is t:
            continue
        s_var = type(s) is Var
        t_var = type(t) is Var
        if s_var and t_var:
            if s.name != t.name:
                # Bind the right-hand variable so left-side names survive.
                subst[t.name] = s
        elif t_var:
            if _occurs(t.name, s, subst):
                return None
            subst[t.name] = s
        elif s_var:
            if _occurs(s.name, t, subst):
                return None
            subst[s.name] = t
        else:
            key = (id(s), id(t))
            if key in seen:
                continue
            seen.add(key)
            if s == t:
                continue
            stack.append((s.right, t.right))
            stack.append((s.left, t.left))
    memo: dict[int, Formula] = {}
    return {v: _resolve(subst[v], subst, memo) for v in sorted(subst)}


def _resolve(t: Formula, subst: dict[str, Formula], memo: dict[int, Formula]) -> Formula:
    t = _walk(t, subst)
    if type(t) is Var:
        return t
    r = memo.get(id(t))
    if r is None:
        left = _resolve(t.left, subst, memo)
        right = _resolve(t.right, subst, memo)
        r = t if left is t.left and right is t.right else Imp(left, right)
        memo[id(t)] = r
    return r


def unify_apart(a: Formula, b: Formula) -> Substitution | None:
    """Unify after renaming b's clashing variables away from a's.

    Convenience for comparing independently-stated formulas; the returned
    substitution is over a's variables and the renamed copies of b's.
    """
    return unify(a, rename_apart(b, set(variables(a))))


def match_instance(candidate: Formula, pattern: Formula) -> Substitution | None:
    """Substitution s with s(pattern) == candidate, binding only pattern's
    variables; None when candidate is not an instance of pattern.  Identity
    bindings are omitted."""
    binds: dict[str, Formula] = {}
    stack = [(pattern, candidate)]
    seen: set[tuple[int, int]] = set()
    while stack:
        p, c = stack.pop()
        if type(p) is Var:
            prev = binds.get(p.name)
            if prev is None:
                binds[p.name] = c
            elif not (prev is c or prev == c):
                return None
        else:
            if type(c) is not Imp:
                return None
            key = (id(p), id(c))
            if key in seen:
                continue
            seen.add(key)
            stack.append((p.right, c.right))
            stack.append((p.left, c.left))
    return {
        k: v
        for k, v in sorted(binds.items())
        if not (type(v) is Var and v.name == k)
    }


def alpha_equal(a: Formula, b: Formula) -> bool:
    """True when a and b differ only by a bijective renaming of variables."""
    fwd: dict[str, str] = {}
    back: dict[str, str] = {}
    stack = [(a, b)]
    seen: set[tuple[int, int]] = set()
    while stack:
        s, t = stack.pop()
        if type(s) is not type(t):
            return False
        if type(s) is Var:
            if fwd.setdefault(s.name, t.name) != t.name:
                return False
            if back.setdefault(t.name, s.name) != s.name:
                return False
        else:
            key = (id(s), id(t))
            if key in seen:
                continue
            seen.add(key)
            stack.append((s.right, t.right))
            stack.append((s.left, t.left))
    return True


def canonical_rename(f: Formula, prefix: str = "x") -> Formula:
    """Rename variables to prefix1, prefix2, ... in first-occurrence order.

    Two formulas are alpha-equal exactly when their canonical forms are equal,
    which makes deduplication a plain set lookup.
    """
    mapping: Substitution = {}
    identity = True
    for i, v in enumerate(variables(f), start=1):
        new = f"{prefix}{i}"
        mapping[v] = Var(new)
        if new != v:
            identity = False
    if identity:
        return f
    return apply_substitution(mapping, f)


def rename_apart(f: Formula, avoid: set[str]) -> Formula:
    """Rename f's variables that clash with `avoid`.

    Deterministic scheme relied on by trace checking: each clashing variable v
    becomes v_2, v_3, ... taking the first name free of both `avoid` and f's
    own variables.
    """
    own = variables(f)
    taken = set(own) | avoid
    mapping: Substitution = {}
    for v in own:
        if v in avoid:
            k = 2
            while f"{v}_{k}" in taken:
                k += 1
            fresh = f"{v}_{k}"
            taken.add(fresh)
            mapping[v] = Var(fresh)
    if not mapping:
        return f
    return apply_substitution(mapping, f)
