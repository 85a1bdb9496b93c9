"""Connected preorders as ordered partitions of the model universe.

An order is a sequence of pairwise disjoint nonempty model sets covering the
universe; class 0 is the most plausible.  The induced relation I <= J holds
when the class of I is at or before the class of J.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .logic import (
    Alphabet,
    Conditional,
    Model,
    eval_formula,
    model_set_names,
    models_of,
)


class OrderError(Exception):
    pass


class OverlapError(OrderError):
    pass


class CoverageError(OrderError):
    pass


class EmptySetError(OrderError):
    pass


VERIFIES = "verifies"
FALSIFIES = "falsifies"
INDIFFERENT = "indifferent"


@dataclass(frozen=True)
class Order:
    """Canonical ordered partition: no empty classes, disjoint, covering."""

    alphabet: Alphabet
    classes: tuple

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        union = 0
        for c in self.classes:
            if c == 0:
                raise OrderError("canonical order cannot contain an empty class")
            if c & union:
                overlap = c & union
                raise OverlapError(
                    f"models in more than one class: "
                    f"{model_set_names(overlap, self.alphabet)}"
                )
            union |= c
        if union != self.alphabet.universe:
            missing = self.alphabet.universe & ~union
            raise CoverageError(
                f"models in no class: {model_set_names(missing, self.alphabet)}"
            )

    @cached_property
    def levels(self):
        """Class index of every model, indexed by model index."""
        levels = [0] * self.alphabet.size
        for k, c in enumerate(self.classes):
            for i in range(self.alphabet.size):
                if c >> i & 1:
                    levels[i] = k
        return tuple(levels)

    def level_of(self, i):
        return self.levels[i]

    def leq(self, i, j):
        """I at least as plausible as J."""
        return self.levels[i] <= self.levels[j]

    def less(self, i, j):
        return self.levels[i] < self.levels[j]

    @cached_property
    def relation(self):
        """The <= relation as a set of ordered model pairs, reflexive pairs excluded."""
        size = self.alphabet.size
        levels = self.levels
        return frozenset(
            (i, j)
            for i in range(size)
            for j in range(size)
            if i != j and levels[i] <= levels[j]
        )

    def __str__(self):
        return render_order(self)


def normalize(alphabet, raw_classes):
    """Canonical order from a raw class sequence: empty classes dropped."""
    return Order(alphabet, tuple(c for c in raw_classes if c != 0))


def flat(alphabet):
    """All models in class zero."""
    return Order(alphabet, (alphabet.universe,))


def positive(alphabet, f):
    """Models of f in class zero, all others in class one."""
    mask = models_of(f, alphabet)
    return normalize(alphabet, (mask, alphabet.universe & ~mask))


def min_idx(order, s):
    """Smallest class index whose class intersects s."""
    if s == 0:
        raise EmptySetError("min_idx of the empty model set is undefined")
    for k, c in enumerate(order.classes):
        if c & s:
            return k
    raise AssertionError("canonical order covers the universe")


def max_idx(order, s):
    """Largest class index whose class intersects s."""
    if s == 0:
        raise EmptySetError("max_idx of the empty model set is undefined")
    for k in range(len(order.classes) - 1, -1, -1):
        if order.classes[k] & s:
            return k
    raise AssertionError("canonical order covers the universe")


def min_models(order, s):
    return s & order.classes[min_idx(order, s)]


def max_models(order, s):
    return s & order.classes[max_idx(order, s)]


def downset(order, s):
    """All models in classes 0 .. min_idx(s)."""
    k = min_idx(order, s)
    mask = 0
    for c in order.classes[: k + 1]:
        mask |= c
    return mask


def classify(model, cond):
    """Whether one model verifies, falsifies or is indifferent to a conditional."""
    if not eval_formula(cond.premise, model):
        return INDIFFERENT
    if eval_formula(cond.conclusion, model):
        return VERIFIES
    return FALSIFIES


def satisfies_masks(order, p, a):
    """Conditional satisfaction on raw masks: min(PA) strictly before P-A.

    A conditional with inconsistent premise is vacuously satisfied; one with
    consistent premise and inconsistent PA is unsatisfiable.
    """
    if p == 0:
        return True
    pa = p & a
    pna = p & ~a & order.alphabet.universe
    if pa == 0:
        return False
    if pna == 0:
        return True
    return min_idx(order, pa) < min_idx(order, pna)


def satisfies(order, cond):
    p = models_of(cond.premise, order.alphabet)
    a = models_of(cond.conclusion, order.alphabet)
    return satisfies_masks(order, p, a)


def conditional_masks(cond, alphabet):
    """(premise mask, conclusion mask) of a conditional."""
    return models_of(cond.premise, alphabet), models_of(cond.conclusion, alphabet)


# ---------------------------------------------------------------------------
# Rendering


def render_order(order):
    """One class per line, top (most plausible) class first."""
    return "\n".join(
        " ".join(model_set_names(c, order.alphabet)) for c in order.classes
    )


def order_to_json(order):
    return {"classes": [model_set_names(c, order.alphabet) for c in order.classes]}


def render_order_json(order):
    return json.dumps(order_to_json(order))


def order_from_json(data, alphabet):
    if isinstance(data, str):
        data = json.loads(data)
    raw = []
    for names in data["classes"]:
        mask = 0
        for name in names:
            mask |= 1 << alphabet.parse_model(name)
        raw.append(mask)
    return normalize(alphabet, raw)
