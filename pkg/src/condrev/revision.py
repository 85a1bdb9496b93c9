"""The four revision operators over connected preorders.

All four change an order so that it comes to satisfy a conditional P>A, and
differ in how much of the order they rearrange:

- natural (nat): lifts min(PA), demoting only the P-A models between
  min_idx(P) and min_idx(PA);
- line-down (dow): lifts min(PA) just above the first P-A class, aligning -P
  with P-A;
- uncontingent (unc): moves every P-A model below every PA model within
  classes min_idx(P) .. max_idx(PA);
- lexicographic (lex): two-block split by P->A, the whole falsifying block
  demoted.
"""

from __future__ import annotations

from .logic import Conditional, formula_from_models, models_of
from .preorder import (
    Order,
    downset,
    max_idx,
    min_idx,
    min_models,
    normalize,
)

NAT = "nat"
DOW = "dow"
UNC = "unc"
LEX = "lex"

OPERATOR_KINDS = (NAT, DOW, UNC, LEX)


class RevisionError(Exception):
    pass


class InconsistentFormulaError(RevisionError):
    pass


class UnsatisfiableConditionalError(RevisionError):
    """P consistent but PA inconsistent: the conditional cannot be adopted."""


def _cond_masks(order, cond):
    p = models_of(cond.premise, order.alphabet)
    a = models_of(cond.conclusion, order.alphabet)
    return p, a


def _check_satisfiable(order, p, a):
    """Vacuous premise -> identity (None signals it); impossible conclusion -> error."""
    if p == 0:
        return False
    if p & a == 0:
        raise UnsatisfiableConditionalError(
            "premise is consistent but premise & conclusion has no models"
        )
    return True


# ---------------------------------------------------------------------------
# Natural revision


def nat_prop_masks(order, a):
    if a == 0:
        raise InconsistentFormulaError("cannot revise by an inconsistent formula")
    k = min_idx(order, a)
    raw = [min_models(order, a)]
    raw.extend(order.classes[:k])
    raw.append(order.classes[k] & ~a)
    raw.extend(order.classes[k + 1 :])
    return normalize(order.alphabet, raw)


def nat_prop(order, f):
    """Natural revision by a propositional formula: min(f) becomes the top class."""
    return nat_prop_masks(order, models_of(f, order.alphabet))


def nat_masks(order, p, a):
    if not _check_satisfiable(order, p, a):
        return order
    pa = p & a
    pna = p & ~a & order.alphabet.universe
    kp = min_idx(order, p)
    ka = min_idx(order, pa)
    band = order.classes[kp : ka + 1]
    raw = list(order.classes[:kp])
    raw.extend(c & ~pna for c in band)
    raw.extend(c & pna for c in band)
    raw.extend(order.classes[ka + 1 :])
    return normalize(order.alphabet, raw)


def nat(order, cond):
    """Natural revision by a conditional P>A."""
    return nat_masks(order, *_cond_masks(order, cond))


# ---------------------------------------------------------------------------
# Line-down revision


def dow_masks(order, p, a):
    if not _check_satisfiable(order, p, a):
        return order
    pa = p & a
    pna = p & ~a & order.alphabet.universe
    if pna == 0:
        return order
    k = min_idx(order, pna)
    mpa = min_models(order, pa)
    head = list(order.classes[:k])
    placed = 0
    for c in head:
        placed |= c
    raw = head
    raw.append(mpa & ~placed)
    raw.extend(c & ~mpa for c in order.classes[k:])
    return normalize(order.alphabet, raw)


def dow(order, cond):
    """Line-down revision by a conditional P>A."""
    return dow_masks(order, *_cond_masks(order, cond))


# ---------------------------------------------------------------------------
# Uncontingent revision


def unc_masks(order, p, a):
    if not _check_satisfiable(order, p, a):
        return order
    pa = p & a
    pna = p & ~a & order.alphabet.universe
    kp = min_idx(order, p)
    ha = max_idx(order, pa)
    band = order.classes[kp : ha + 1]
    raw = list(order.classes[:kp])
    raw.extend(c & ~pna for c in band)
    raw.extend(c & pna for c in band)
    raw.extend(order.classes[ha + 1 :])
    return normalize(order.alphabet, raw)


def unc(order, cond):
    """Uncontingent revision by a conditional P>A."""
    return unc_masks(order, *_cond_masks(order, cond))


# ---------------------------------------------------------------------------
# Lexicographic revision


def lex_prop_masks(order, f_mask):
    if f_mask == 0:
        raise InconsistentFormulaError("cannot revise by an inconsistent formula")
    raw = [c & f_mask for c in order.classes]
    raw.extend(c & ~f_mask for c in order.classes)
    return normalize(order.alphabet, raw)


def lex_prop(order, f):
    """Lexicographic revision by a propositional formula: two-block split."""
    return lex_prop_masks(order, models_of(f, order.alphabet))


def lex_masks(order, p, a):
    # lex(P>A) = lex(P->A); inconsistent only when P is a tautology and PA empty
    universe = order.alphabet.universe
    return lex_prop_masks(order, (universe & ~p) | (p & a))


def lex(order, cond):
    """Lexicographic revision by a conditional: lex_prop of P->A."""
    return lex_masks(order, *_cond_masks(order, cond))


# ---------------------------------------------------------------------------
# Reductions and dispatch


def contingent_context_masks(order, p, a):
    if not _check_satisfiable(order, p, a):
        raise RevisionError("contingent context of a vacuous-premise conditional")
    pa = p & a
    return p & downset(order, min_models(order, pa))


def contingent_context(order, cond):
    """Formula Q with nat(C, P>A) = unc(C, Q>A): premise restricted to the
    classes at or above min(PA)."""
    q_mask = contingent_context_masks(order, *_cond_masks(order, cond))
    return formula_from_models(q_mask, order.alphabet)


_DISPATCH_MASKS = {NAT: nat_masks, DOW: dow_masks, UNC: unc_masks, LEX: lex_masks}
_DISPATCH = {NAT: nat, DOW: dow, UNC: unc, LEX: lex}


def revise_masks(order, kind, p, a):
    return _DISPATCH_MASKS[kind](order, p, a)


def revise(order, kind, cond):
    """Apply the operator named by kind (one of nat, dow, unc, lex)."""
    try:
        op = _DISPATCH[kind]
    except KeyError:
        raise RevisionError(f"unknown operator kind: {kind!r}") from None
    return op(order, cond)
