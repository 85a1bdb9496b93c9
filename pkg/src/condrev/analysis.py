"""Comparing orders: difference, closeness, strength, naivety, conditional
preservation, the CR0-CR7 postulates, and recalcitrance."""

from __future__ import annotations

from dataclasses import dataclass, field

from .logic import model_set_names, models_of
from .preorder import (
    Order,
    conditional_masks,
    min_models,
    normalize,
    order_to_json,
    satisfies_masks,
)
from .revision import revise_masks


class AlphabetMismatchError(Exception):
    pass


def _same_alphabet(*orders):
    first = orders[0].alphabet
    for o in orders[1:]:
        if o.alphabet != first:
            raise AlphabetMismatchError("orders are over different alphabets")
    return first


def diff(c1, c2):
    """Pairs of models the two orders compare differently (symmetric difference
    of the <= relations)."""
    _same_alphabet(c1, c2)
    return c1.relation ^ c2.relation


def at_least_as_close(ca, cb, base):
    """ca at least as close to base as cb: diff(ca, base) contained in diff(cb, base)."""
    _same_alphabet(ca, cb, base)
    return diff(ca, base) <= diff(cb, base)


@dataclass(frozen=True)
class Strength:
    """Above-sets of one model: the models it is strictly / weakly below."""

    strict_above: int
    weak_above: int

    def contained_in(self, other):
        return (
            self.strict_above & ~other.strict_above == 0
            and self.weak_above & ~other.weak_above == 0
        )


def strength(i, order):
    levels = order.levels
    li = levels[i]
    strict = 0
    weak = 0
    for j in range(order.alphabet.size):
        if li < levels[j]:
            strict |= 1 << j
        if li <= levels[j]:
            weak |= 1 << j
    return Strength(strict, weak)


def at_least_as_naive_masks(ca, cb, f_mask):
    """Every f-model is at least as strong in ca as in cb."""
    _same_alphabet(ca, cb)
    for i in range(ca.alphabet.size):
        if f_mask >> i & 1:
            if not strength(i, cb).contained_in(strength(i, ca)):
                return False
    return True


def at_least_as_naive(ca, cb, f):
    return at_least_as_naive_masks(ca, cb, models_of(f, ca.alphabet))


def strictly_more_naive_masks(ca, cb, f_mask):
    return at_least_as_naive_masks(ca, cb, f_mask) and not at_least_as_naive_masks(
        cb, ca, f_mask
    )


def preserves_conditionals_masks(base, revised, p, a):
    """No pair of models that classify identically under P>A is reordered."""
    _same_alphabet(base, revised)
    universe = base.alphabet.universe
    groups = (universe & ~p, p & a, p & ~a & universe)
    bl = base.levels
    rl = revised.levels
    for g in groups:
        members = [i for i in range(base.alphabet.size) if g >> i & 1]
        for i in members:
            for j in members:
                if i != j and (bl[i] <= bl[j]) != (rl[i] <= rl[j]):
                    return False
    return True


def preserves_conditionals(base, revised, cond):
    p, a = conditional_masks(cond, base.alphabet)
    return preserves_conditionals_masks(base, revised, p, a)


def supernaive_order_masks(order, p, a):
    """The order that satisfies P>A, preserves conditionals and is strictly
    more naive than natural revision: the -P part of the affected band is
    lifted strictly above min(PA)."""
    from .revision import _check_satisfiable
    from .preorder import min_idx

    if not _check_satisfiable(order, p, a):
        return order
    pa = p & a
    pna = p & ~a & order.alphabet.universe
    kp = min_idx(order, p)
    ka = min_idx(order, pa)
    band = order.classes[kp : ka + 1]
    raw = list(order.classes[:kp])
    raw.extend(c & ~p for c in band)
    raw.append(min_models(order, pa))
    raw.extend(c & pna for c in band)
    raw.extend(order.classes[ka + 1 :])
    return normalize(order.alphabet, raw)


def supernaive_order(order, cond):
    return supernaive_order_masks(order, *conditional_masks(cond, order.alphabet))


# ---------------------------------------------------------------------------
# Postulates CR0-CR7


POSTULATES = tuple(f"CR{k}" for k in range(8))


@dataclass(frozen=True)
class PostulateVerdict:
    postulate: str
    operator: str
    holds: bool
    witness: dict | None = None

    def to_json(self):
        data = {
            "postulate": self.postulate,
            "operator": self.operator,
            "holds": self.holds,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        return data


def _submasks(mask):
    """All subsets of a bitmask, including 0 and the mask itself."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def _mask_names(mask, alphabet):
    return model_set_names(mask, alphabet)


def check_postulate_masks(kind, order, p, a, pid):
    alphabet = order.alphabet
    universe = alphabet.universe
    pa = p & a
    pna = p & ~a & universe
    result = revise_masks(order, kind, p, a)

    def verdict(holds, witness=None):
        return PostulateVerdict(pid, kind, holds, witness)

    if pid == "CR0":
        # the constructor enforces the ordered-partition invariants
        holds = isinstance(result, Order)
        return verdict(holds)

    if pid == "CR1":
        holds = satisfies_masks(result, p, a)
        if holds:
            return verdict(True)
        return verdict(False, {"revised": order_to_json(result)})

    if pid == "CR2":
        unchanged = result == order
        entails = satisfies_masks(order, p, a)
        if unchanged == entails:
            return verdict(True)
        return verdict(
            False,
            {
                "unchanged": unchanged,
                "entails": entails,
                "revised": order_to_json(result),
            },
        )

    if pid == "CR3":
        # faithful assignment: revising by true>A puts exactly min(A) on top
        for am in range(1, universe + 1):
            r = revise_masks(order, kind, universe, am)
            if r.classes[0] != min_models(order, am):
                return verdict(
                    False,
                    {
                        "formula_models": _mask_names(am, alphabet),
                        "top_class": _mask_names(r.classes[0], alphabet),
                        "min_models": _mask_names(min_models(order, am), alphabet),
                    },
                )
        return verdict(True)

    if pid == "CR4":
        # P>A equivalent to Q>B: same premise models, same PA models
        for extra in _submasks(universe & ~p):
            b = pa | extra
            if revise_masks(order, kind, p, b) != result:
                return verdict(
                    False,
                    {"equivalent_conclusion_models": _mask_names(b, alphabet)},
                )
        return verdict(True)

    if pid == "CR5":
        for q in _submasks(pa):
            for b in range(universe + 1):
                if satisfies_masks(order, q, b) != satisfies_masks(result, q, b):
                    return verdict(
                        False,
                        {
                            "q_models": _mask_names(q, alphabet),
                            "b_models": _mask_names(b, alphabet),
                        },
                    )
        return verdict(True)

    if pid in ("CR6", "CR7"):
        # CR6: same-polarity conditionals survive the revision; CR7: the
        # revision never introduces an opposite-polarity conditional.
        for q in range(universe + 1):
            for b in range(universe + 1):
                qb = q & b
                qnb = q & ~b & universe
                if pid == "CR6":
                    applicable = qb & ~pa == 0 and qnb & ~pna == 0
                    before, after = order, result
                else:
                    applicable = qb & ~pna == 0 and qnb & ~pa == 0
                    before, after = result, order
                if not applicable:
                    continue
                if satisfies_masks(before, q, b) and not satisfies_masks(after, q, b):
                    return verdict(
                        False,
                        {
                            "q_models": _mask_names(q, alphabet),
                            "b_models": _mask_names(b, alphabet),
                        },
                    )
        return verdict(True)

    raise ValueError(f"unknown postulate: {pid!r}")


def check_postulate(kind, order, cond, pid):
    """Check one of CR0-CR7 for an operator on a given order and conditional.

    CR3-CR7 quantify over arbitrary model sets of the universe; exhaustive,
    so meant for small alphabets.
    """
    p, a = conditional_masks(cond, order.alphabet)
    return check_postulate_masks(kind, order, p, a, pid)


# ---------------------------------------------------------------------------
# Recalcitrance


@dataclass(frozen=True)
class RecalcitranceVerdict:
    operator: str
    jointly_satisfiable: bool
    recalcitrant: bool
    joint_order: Order | None = None
    final_order: Order | None = None

    def to_json(self):
        data = {
            "operator": self.operator,
            "jointly_satisfiable": self.jointly_satisfiable,
            "recalcitrant": self.recalcitrant,
        }
        if self.joint_order is not None:
            data["joint_order"] = order_to_json(self.joint_order)
        if self.final_order is not None:
            data["final_order"] = order_to_json(self.final_order)
        return data


def recalcitrance_check(kind, base, c1, c2):
    """Does revising by c1 then c2 keep c1 satisfied, given that some order
    satisfies both?  Vacuously recalcitrant when no joint order exists."""
    from . import oracle

    witness = oracle.mutually_satisfiable([c1, c2], base.alphabet)
    if witness is None:
        return RecalcitranceVerdict(kind, False, True)
    final = revise_masks(
        revise_masks(base, kind, *conditional_masks(c1, base.alphabet)),
        kind,
        *conditional_masks(c2, base.alphabet),
    )
    p1, a1 = conditional_masks(c1, base.alphabet)
    holds = satisfies_masks(final, p1, a1)
    return RecalcitranceVerdict(kind, True, holds, witness, final)
