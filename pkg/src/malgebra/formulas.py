"""Propositional formulas: AST, text parser, truth tables, enumeration.

The surface syntax uses ``~`` (not), ``&`` (and), ``|`` (or) and ``->``
(implies) with precedence ``~ > & > | > ->``; implication associates to the
right, the other binary operators to the left.  Slot names are ordinary
identifiers.  This module is purely syntactic/semantic and knows nothing
about algebras; it serves as the independent truth-table oracle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BudgetError, InputError

MAX_TAUTOLOGY_SLOTS = 20
DEFAULT_FORMULA_CAP = 10**6


@dataclass(frozen=True)
class Slot:
    name: str


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


Formula = Slot | Not | And | Or | Implies

_PRECEDENCE = {Implies: 1, Or: 2, And: 3, Not: 4, Slot: 5}
_SYMBOL = {And: "&", Or: "|", Implies: "->"}


def format_formula(f: Formula, compact: bool = False) -> str:
    """Render with the fewest parentheses that reparse to the same tree."""
    pad = "" if compact else " "

    def render(node, parent_prec, right_side):
        prec = _PRECEDENCE[type(node)]
        if isinstance(node, Slot):
            return node.name
        if isinstance(node, Not):
            inner = render(node.operand, prec, False)
            if _PRECEDENCE[type(node.operand)] < prec:
                inner = "(" + inner + ")"
            return "~" + inner
        sym = _SYMBOL[type(node)]
        assoc_right = isinstance(node, Implies)
        left = render(node.left, prec, False)
        right = render(node.right, prec, True)
        if _PRECEDENCE[type(node.left)] < prec or (
            _PRECEDENCE[type(node.left)] == prec and assoc_right
        ):
            left = "(" + left + ")"
        if _PRECEDENCE[type(node.right)] < prec or (
            _PRECEDENCE[type(node.right)] == prec and not assoc_right
        ):
            right = "(" + right + ")"
        return left + pad + sym + pad + right

    return render(f, 0, False)


class ParseError(InputError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


_TOKEN_RE = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>->|[~&|()]))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unknown character {stripped[0]!r}", bad_at)
        tokens.append((m.group("ident") or m.group("op"), m.start("ident") if m.group("ident") else m.start("op")))
        pos = m.end()
    return tokens


def parse_formula(text: str) -> Formula:
    """Parse the textual syntax into a formula tree."""
    tokens = _tokenize(text)
    index = 0

    def peek():
        return tokens[index][0] if index < len(tokens) else None

    def here():
        return tokens[index][1] if index < len(tokens) else len(text)

    def take():
        nonlocal index
        tok = tokens[index]
        index += 1
        return tok

    def parse_implies():
        left = parse_or()
        if peek() == "->":
            take()
            return Implies(left, parse_implies())
        return left

    def parse_or():
        node = parse_and()
        while peek() == "|":
            take()
            node = Or(node, parse_and())
        return node

    def parse_and():
        node = parse_unary()
        while peek() == "&":
            take()
            node = And(node, parse_unary())
        return node

    def parse_unary():
        tok = peek()
        if tok == "~":
            take()
            return Not(parse_unary())
        if tok == "(":
            take()
            node = parse_implies()
            if peek() != ")":
                raise ParseError("expected ')'", here())
            take()
            return node
        if tok is None:
            raise ParseError("unexpected end of input", here())
        if tok in ("&", "|", "->", ")"):
            raise ParseError(f"unexpected {tok!r}", here())
        take()
        return Slot(tok)

    node = parse_implies()
    if index < len(tokens):
        raise ParseError(f"unexpected {peek()!r}", here())
    return node


def slots_of(f: Formula) -> tuple[str, ...]:
    """Slot names occurring in the formula, sorted."""
    names: set[str] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Slot):
            names.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.operand)
        else:
            stack.append(node.left)
            stack.append(node.right)
    return tuple(sorted(names))


def evaluate(f: Formula, assignment: dict[str, bool]) -> bool:
    if isinstance(f, Slot):
        try:
            return assignment[f.name]
        except KeyError:
            raise InputError(f"unbound slot {f.name!r}") from None
    if isinstance(f, Not):
        return not evaluate(f.operand, assignment)
    if isinstance(f, And):
        return evaluate(f.left, assignment) and evaluate(f.right, assignment)
    if isinstance(f, Or):
        return evaluate(f.left, assignment) or evaluate(f.right, assignment)
    return (not evaluate(f.left, assignment)) or evaluate(f.right, assignment)


def _assignment(slot_order: tuple[str, ...], row: int) -> dict[str, bool]:
    k = len(slot_order)
    return {s: bool((row >> (k - 1 - j)) & 1) for j, s in enumerate(slot_order)}


def truth_mask(f: Formula, slot_order: tuple[str, ...]) -> int:
    """Truth table as an integer: bit ``row`` is the value under that assignment.

    Row ``i`` assigns slot ``j`` the bit ``(i >> (k-1-j)) & 1``, matching the
    binary counting order of assignments.
    """
    mask = 0
    for row in range(1 << len(slot_order)):
        if evaluate(f, _assignment(slot_order, row)):
            mask |= 1 << row
    return mask


@dataclass(frozen=True)
class TautologyVerdict:
    formula: Formula
    is_tautology: bool
    falsifying: dict[str, bool] | None

    def __post_init__(self):
        assert (self.falsifying is None) == self.is_tautology


def is_tautology(f: Formula | str) -> TautologyVerdict:
    """Exhaustive truth-table verdict, with a falsifying assignment on failure."""
    if isinstance(f, str):
        f = parse_formula(f)
    slots = slots_of(f)
    if len(slots) > MAX_TAUTOLOGY_SLOTS:
        raise BudgetError(f"{len(slots)} slots exceed the cap of {MAX_TAUTOLOGY_SLOTS}")
    for row in range(1 << len(slots)):
        env = _assignment(slots, row)
        if not evaluate(f, env):
            return TautologyVerdict(f, False, env)
    return TautologyVerdict(f, True, None)


def essential_function(f: Formula) -> tuple[tuple[str, ...], int]:
    """Boolean function of ``f`` with irrelevant slots removed.

    Returns the sorted tuple of slots the value actually depends on, and the
    truth mask over those slots.  Logically equivalent formulas yield the
    same pair, whatever slots they mention syntactically.
    """
    slots = slots_of(f)
    mask = truth_mask(f, slots)
    changed = True
    while changed and slots:
        changed = False
        k = len(slots)
        for j in range(k):
            bit = 1 << (k - 1 - j)
            relevant = any(
                bool(mask >> row & 1) != bool(mask >> (row | bit) & 1)
                for row in range(1 << k)
                if not row & bit
            )
            if not relevant:
                new_mask = 0
                for row in range(1 << k):
                    if not row & bit and mask >> row & 1:
                        new_mask |= 1 << _drop_bit(row, k - 1 - j)
                mask = new_mask
                slots = slots[:j] + slots[j + 1:]
                changed = True
                break
    return slots, mask


def _drop_bit(value: int, position: int) -> int:
    high = value >> (position + 1)
    low = value & ((1 << position) - 1)
    return (high << position) | low


def entails(fn_a: tuple[tuple[str, ...], int], fn_b: tuple[tuple[str, ...], int]) -> bool:
    """Whether the first essential function logically implies the second."""
    slots_a, mask_a = fn_a
    slots_b, mask_b = fn_b
    shared = set(slots_a) & set(slots_b)
    if not shared:
        # Disjoint variables: implication holds iff antecedent is unsatisfiable
        # or consequent is valid.
        return mask_a == 0 or mask_b == (1 << (1 << len(slots_b))) - 1
    union = tuple(sorted(set(slots_a) | set(slots_b)))
    k = len(union)
    pos_a = [union.index(s) for s in slots_a]
    pos_b = [union.index(s) for s in slots_b]

    def project(row, positions, width):
        out = 0
        for j, p in enumerate(positions):
            out |= ((row >> (k - 1 - p)) & 1) << (width - 1 - j)
        return out

    ka, kb = len(slots_a), len(slots_b)
    for row in range(1 << k):
        if mask_a >> project(row, pos_a, ka) & 1 and not mask_b >> project(row, pos_b, kb) & 1:
            return False
    return True


def enumerate_formulas(
    alphabet: tuple[str, ...],
    max_depth: int,
    max_slots: int,
    cap: int = DEFAULT_FORMULA_CAP,
) -> list[Formula]:
    """All formulas over the alphabet up to the given depth.

    Depth counts tree levels (a bare slot has depth 1).  Formulas may use at
    most ``max_slots`` distinct slots.  Operand order of the commutative
    connectives is canonicalized, which prunes the enumeration without losing
    semantic coverage.
    """
    if max_depth < 1 or max_slots < 1:
        raise InputError("depth and slot bounds must be positive")
    # hash-consing: every admitted formula gets an integer id, and candidate
    # identity is the (operator, child ids) tuple, so duplicates are skipped
    # before any node is even constructed; child ids also give the canonical
    # operand order for the commutative operators
    levels: list[list[tuple[Formula, frozenset, int]]] = []
    seen: set[tuple] = set()

    def admit(bucket, key, slots, ctor, *children):
        if key in seen:
            return
        seen.add(key)
        bucket.append((ctor(*children), slots, len(seen)))
        if len(seen) > cap:
            raise BudgetError(f"formula enumeration exceeds the cap of {cap}")

    first: list[tuple[Formula, frozenset, int]] = []
    for name in alphabet:
        admit(first, ("slot", name), frozenset([name]), Slot, name)
    levels.append(first)

    for depth in range(2, max_depth + 1):
        bucket: list[tuple[Formula, frozenset, int]] = []
        prev = levels[depth - 2]
        below = [entry for level in levels for entry in level]
        for f, fs, fi in prev:
            admit(bucket, ("~", fi), fs, Not, f)
        for f, fs, fi in prev:
            for g, gs, gi in below:
                union = fs | gs
                if len(union) > max_slots:
                    continue
                (left, li), (right, ri) = sorted(
                    ((f, fi), (g, gi)), key=lambda e: e[1]
                )
                admit(bucket, ("&", li, ri), union, And, left, right)
                admit(bucket, ("|", li, ri), union, Or, left, right)
                admit(bucket, ("->", fi, gi), union, Implies, f, g)
                admit(bucket, ("->", gi, fi), union, Implies, g, f)
        levels.append(bucket)

    return [f for level in levels for f, _, _ in level]


def minimal_formula_names(atoms: tuple[str, ...]) -> dict[int, Formula]:
    """Smallest formula for every boolean function over the given atoms.

    Keys are truth masks over the binary counting order of assignments (the
    same convention as :func:`truth_mask`).  Minimality is by node count,
    ties broken by discovery order, so the naming is deterministic.
    """
    k = len(atoms)
    n_rows = 1 << k
    full = (1 << n_rows) - 1
    atom_mask = {}
    for j in range(k):
        atom_mask[j] = sum(1 << row for row in range(n_rows) if row >> (k - 1 - j) & 1)

    best: dict[int, Formula] = {}
    by_size: list[list[tuple[Formula, int]]] = [[]]

    def record(size_bucket, node, mask):
        if mask in best:
            return
        best[mask] = node
        size_bucket.append((node, mask))

    bucket = []
    for j, name in enumerate(atoms):
        record(bucket, Slot(name), atom_mask[j])
    by_size.append(bucket)

    size = 1
    while len(best) < (1 << n_rows) and size < 25:
        size += 1
        bucket = []
        for f, m in by_size[size - 1]:
            record(bucket, Not(f), full ^ m)
        for left_size in range(1, size - 1):
            right_size = size - 1 - left_size
            if right_size < 1 or right_size >= len(by_size):
                continue
            for f, fm in by_size[left_size]:
                for g, gm in by_size[right_size]:
                    record(bucket, And(f, g), fm & gm)
                    record(bucket, Or(f, g), fm | gm)
                    record(bucket, Implies(f, g), (full ^ fm) | gm)
        by_size.append(bucket)
    if len(best) < (1 << n_rows):
        raise RuntimeError("formula naming search did not converge")
    return best
