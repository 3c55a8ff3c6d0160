"""Brute-force expansion of the braid relation, independent of the registry.

`relations` stores the linear identity with hand-entered coefficients.  This
module re-derives it mechanically: expand rho_i rho_{i+1} rho_i minus
rho_{i+1} rho_i rho_{i+1} as a formal linear combination of words in four
letters, then push every word to a normal form with a terminating rewrite
system.  The registry entry is correct iff both normal forms coincide.

Letters (site i fixed, so plain symbols suffice):

    X = e_i   Y = e_{i+1}   u = v_i   w = v_{i+1}

Rules, each oriented to decrease (length, then rank-lex with X < Y < u < w):

    XX -> lam X     YY -> lam Y     uu -> 1      ww -> 1
    XYX -> X        YXY -> Y
    uX -> Xu        wY -> Yw
    wXw -> uYu      wuw -> uwu
    uwX -> Yuw      wuY -> Xwu

The last two are consequences: conjugating uYu = wXw by u gives
Yuw = uwX, and conjugating by w gives Xwu = wuY.

Every rule preserves the algebra element, so equal normal forms prove
equality.  The system is not confluent on arbitrary words (it does not need
to be): it is used only on the bounded set of words arising from degree-3
products of rho letters, where both sides of the comparison reduce to a
common form.
"""

from __future__ import annotations

from .relations import relation_instances
from .rho import RhoParams
from .scalars import QuadScalar, as_scalar
from .words import E, V

Letter = str
Word = tuple[Letter, ...]
Combo = dict[Word, QuadScalar]

_RULES: list[tuple[Word, Word, bool]] = [
    (("X", "X"), ("X",), True),
    (("Y", "Y"), ("Y",), True),
    (("u", "u"), (), False),
    (("w", "w"), (), False),
    (("X", "Y", "X"), ("X",), False),
    (("Y", "X", "Y"), ("Y",), False),
    (("u", "X"), ("X", "u"), False),
    (("w", "Y"), ("Y", "w"), False),
    (("w", "X", "w"), ("u", "Y", "u"), False),
    (("w", "u", "w"), ("u", "w", "u"), False),
    (("u", "w", "X"), ("Y", "u", "w"), False),
    (("w", "u", "Y"), ("X", "w", "u"), False),
]


def _rewrite_once(word: Word, lam: QuadScalar):
    for pos in range(len(word)):
        for pattern, repl, scaled in _RULES:
            k = len(pattern)
            if word[pos : pos + k] == pattern:
                new = word[:pos] + repl + word[pos + k :]
                return (lam if scaled else as_scalar(1)), new
    return None


def normal_form(combo: Combo, lam: QuadScalar) -> Combo:
    out: Combo = {}
    stack = list(combo.items())
    while stack:
        word, coeff = stack.pop()
        step = _rewrite_once(word, lam)
        if step is None:
            total = out.get(word, as_scalar(0)) + coeff
            if total.is_zero:
                out.pop(word, None)
            else:
                out[word] = total
        else:
            factor, new_word = step
            stack.append((new_word, coeff * factor))
    return out


def combo_add(x: Combo, y: Combo, sign: int = 1) -> Combo:
    out = dict(x)
    s = as_scalar(sign)
    for word, coeff in y.items():
        total = out.get(word, as_scalar(0)) + coeff * s
        if total.is_zero:
            out.pop(word, None)
        else:
            out[word] = total
    return out


def combo_mul(x: Combo, y: Combo) -> Combo:
    out: Combo = {}
    for wx, cx in x.items():
        for wy, cy in y.items():
            word = wx + wy
            total = out.get(word, as_scalar(0)) + cx * cy
            if total.is_zero:
                out.pop(word, None)
            else:
                out[word] = total
    return out


def expand_bgr(params: RhoParams) -> Combo:
    """Normal form of rho_1 rho_2 rho_1 - rho_2 rho_1 rho_2, fully expanded."""
    a, b, c = params.a, params.b, params.c
    rho1: Combo = {(): a, ("X",): b, ("u",): c}
    rho2: Combo = {(): a, ("Y",): b, ("w",): c}
    lhs = combo_mul(combo_mul(rho1, rho2), rho1)
    rhs = combo_mul(combo_mul(rho2, rho1), rho2)
    return normal_form(combo_add(lhs, rhs, -1), params.lam)


_LETTER = {(E, 0): "X", (E, 1): "Y", (V, 0): "u", (V, 1): "w"}


def registry_combo(params: RhoParams) -> Combo:
    """Normal form of the stored linear identity, translated to letters."""
    inst = relation_instances("vTL", 3, params)[0]
    combo: Combo = {}
    diff = inst.lhs - inst.rhs
    for word, coeff in diff.terms.items():
        letters = tuple(_LETTER[(sym.kind, sym.index - inst.site)] for sym in word)
        combo[letters] = coeff
    return normal_form(combo, params.lam)


def braid_matches_registry(params: RhoParams) -> bool:
    """True iff brute expansion and registry agree as normal-form combos."""
    return expand_bgr(params) == registry_combo(params)
