"""Brute-force ground truth over all connected preorders of a small universe.

Enumerates every ordered partition of the model universe and certifies
minimal change, uncontingent minimality and the uniqueness of natural
revision without going through the operator implementations.
"""

from __future__ import annotations

from .logic import Conditional
from .preorder import Order, conditional_masks, satisfies_masks
from .revision import nat_masks

MAX_UNIVERSE = 8

# ordered Bell numbers indexed by universe size
FUBINI = (1, 1, 3, 13, 75, 541, 4683, 47293, 545835)


class UniverseTooLargeError(Exception):
    pass


def _check_cap(alphabet):
    if alphabet.size > MAX_UNIVERSE:
        raise UniverseTooLargeError(
            f"universe of {alphabet.size} models exceeds the cap of {MAX_UNIVERSE}"
        )


def enumerate_class_sequences(size):
    """All ordered partitions of {0..size-1} as tuples of bitmasks.

    Each model in turn joins an existing class or a new class inserted at any
    position; deterministic, so a failing case is reproducible by position.
    """

    def extend(classes, i):
        if i == size:
            yield tuple(classes)
            return
        bit = 1 << i
        for k in range(len(classes)):
            classes[k] |= bit
            yield from extend(classes, i + 1)
            classes[k] &= ~bit
        for k in range(len(classes) + 1):
            classes.insert(k, bit)
            yield from extend(classes, i + 1)
            del classes[k]

    yield from extend([], 0)


def enumerate_orders(alphabet):
    """Every canonical connected preorder over the alphabet's universe."""
    _check_cap(alphabet)
    for classes in enumerate_class_sequences(alphabet.size):
        yield Order(alphabet, classes)


def _relation_pairs(order):
    return order.relation


def minimal_satisfying_masks(base, p, a, orders=None):
    _check_cap(base.alphabet)
    base_rel = base.relation
    if orders is None:
        orders = enumerate_orders(base.alphabet)
    satisfying = [
        (o, o.relation ^ base_rel) for o in orders if satisfies_masks(o, p, a)
    ]
    minimal = []
    for o, d in satisfying:
        if not any(d2 < d for _, d2 in satisfying):
            minimal.append(o)
    return minimal


def minimal_satisfying(base, cond):
    """All orders satisfying the conditional whose difference from base is
    subset-minimal among the satisfying orders."""
    return minimal_satisfying_masks(base, *conditional_masks(cond, base.alphabet))


def satisfies_all_contexts(order, p, a):
    """Satisfies (R&P)>A for every model set R consistent with PA."""
    universe = order.alphabet.universe
    pa = p & a
    for r in range(universe + 1):
        if r & pa and not satisfies_masks(order, r & p, a):
            return False
    return True


def uncontingent_minimal_masks(base, p, a, orders=None):
    _check_cap(base.alphabet)
    base_rel = base.relation
    if orders is None:
        orders = enumerate_orders(base.alphabet)
    satisfying = [
        (o, o.relation ^ base_rel) for o in orders if satisfies_all_contexts(o, p, a)
    ]
    minimal = []
    for o, d in satisfying:
        if not any(d2 < d for _, d2 in satisfying):
            minimal.append(o)
    return minimal


def uncontingent_minimal(base, cond):
    """Orders satisfying (R&P)>A for every context R consistent with PA,
    subset-minimal in difference from base."""
    return uncontingent_minimal_masks(base, *conditional_masks(cond, base.alphabet))


def unique_naive_from_minimal(base, p, a, minimal):
    from .analysis import preserves_conditionals_masks, strictly_more_naive_masks

    universe = base.alphabet.universe
    not_p = universe & ~p
    candidates = [
        o for o in minimal if preserves_conditionals_masks(base, o, p, a)
    ]
    maximal = [
        o
        for o in candidates
        if not any(strictly_more_naive_masks(o2, o, not_p) for o2 in candidates)
    ]
    return set(maximal) == {nat_masks(base, p, a)}


def unique_naive_check_masks(base, p, a, orders=None):
    return unique_naive_from_minimal(
        base, p, a, minimal_satisfying_masks(base, p, a, orders=orders)
    )


def unique_naive_check(base, cond):
    """Natural revision is the only maximally naive, conditional-preserving,
    minimal-difference order satisfying the conditional."""
    return unique_naive_check_masks(base, *conditional_masks(cond, base.alphabet))


def mutually_satisfiable(conds, alphabet):
    """A witness order satisfying every conditional, or None."""
    _check_cap(alphabet)
    masks = [conditional_masks(c, alphabet) for c in conds]
    for o in enumerate_orders(alphabet):
        if all(satisfies_masks(o, p, a) for p, a in masks):
            return o
    return None
