"""Propositional alphabet, models, formulas, parsing and evaluation.

Model sets are plain int bitmasks: bit i set means the model with index i
belongs to the set.  Model index i encodes the assignment with bit j of i
giving the truth of the j-th alphabet variable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

MAX_VARS = 10


class LogicError(Exception):
    pass


class ParseError(LogicError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(LogicError):
    def __init__(self, name):
        super().__init__(f"unknown variable: {name}")
        self.name = name


@dataclass(frozen=True)
class Alphabet:
    """Ordered propositional variables; fixes the 2^n model universe."""

    vars: tuple

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if not 1 <= len(self.vars) <= MAX_VARS:
            raise LogicError(f"alphabet must have 1..{MAX_VARS} variables")
        seen = set()
        for v in self.vars:
            if not _NAME_RE.fullmatch(v):
                raise LogicError(f"bad variable name: {v!r}")
            if v in seen:
                raise LogicError(f"duplicate variable: {v}")
            seen.add(v)

    @property
    def n(self):
        return len(self.vars)

    @property
    def size(self):
        return 1 << len(self.vars)

    @property
    def universe(self):
        """Bitmask of all models."""
        return (1 << self.size) - 1

    def index_of(self, name):
        try:
            return self.vars.index(name)
        except ValueError:
            raise UnknownVariableError(name) from None

    def model_name(self, index):
        """Signed-literal rendering of one model, e.g. 'x -y'."""
        return " ".join(
            v if index >> j & 1 else "-" + v for j, v in enumerate(self.vars)
        )

    def parse_model(self, text):
        """Inverse of model_name: 'x -y' -> model index."""
        index = 0
        seen = set()
        for lit in text.split():
            neg = lit.startswith("-")
            name = lit[1:] if neg else lit
            j = self.index_of(name)
            if name in seen:
                raise LogicError(f"variable {name} listed twice in model {text!r}")
            seen.add(name)
            if not neg:
                index |= 1 << j
        if len(seen) != self.n:
            missing = [v for v in self.vars if v not in seen]
            raise LogicError(f"model {text!r} does not assign: {' '.join(missing)}")
        return index

    def models(self):
        return [Model(self, i) for i in range(self.size)]


@dataclass(frozen=True)
class Model:
    """One truth assignment, identified with its index in [0, 2^n)."""

    alphabet: Alphabet
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.alphabet.size:
            raise LogicError(f"model index {self.index} out of range")

    def truth(self, name):
        return bool(self.index >> self.alphabet.index_of(name) & 1)

    def __str__(self):
        return self.alphabet.model_name(self.index)


# ---------------------------------------------------------------------------
# Formula AST


class Formula:
    __slots__ = ()

    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)

    def __invert__(self):
        return Not(self)


@dataclass(frozen=True)
class Const(Formula):
    value: bool

    def __str__(self):
        return "true" if self.value else "false"


@dataclass(frozen=True)
class Var(Formula):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula

    def __str__(self):
        return "!" + _wrap(self.operand, 3)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"{_wrap(self.left, 2)} & {_wrap(self.right, 2)}"


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"{_wrap(self.left, 1)} | {_wrap(self.right, 1)}"


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        # right-associative: parenthesize a nested implication on the left only
        left = _wrap(self.left, 1) if isinstance(self.left, Implies) else _wrap(self.left, 0)
        return f"{left} -> {_wrap(self.right, 0)}"


TRUE = Const(True)
FALSE = Const(False)

_PRECEDENCE = {Implies: 0, Or: 1, And: 2, Not: 3, Var: 4, Const: 4}


def _wrap(f, context):
    text = str(f)
    if _PRECEDENCE[type(f)] < context:
        return f"({text})"
    return text


@dataclass(frozen=True)
class Conditional:
    """A pair premise > conclusion: 'if premise were the case, conclusion would be'."""

    premise: Formula
    conclusion: Formula

    def __str__(self):
        return f"{self.premise} > {self.conclusion}"


# ---------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(r"\s*(->|[()&|!>]|[A-Za-z_][A-Za-z0-9_]*)")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, alphabet):
        self.text = text
        self.tokens = _tokenize(text)
        self.alphabet = alphabet
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def next(self):
        if self.pos >= len(self.tokens):
            raise ParseError("unexpected end of input", len(self.text))
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def formula(self):
        # implication: lowest precedence, right-associative
        left = self.disjunction()
        if self.peek() == "->":
            self.next()
            return Implies(left, self.formula())
        return left

    def disjunction(self):
        f = self.conjunction()
        while self.peek() == "|":
            self.next()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self):
        f = self.unary()
        while self.peek() == "&":
            self.next()
            f = And(f, self.unary())
        return f

    def unary(self):
        if self.peek() == "!":
            self.next()
            return Not(self.unary())
        return self.atom()

    def atom(self):
        tok, at = self.next()
        if tok == "(":
            f = self.formula()
            tok, at = self.next()
            if tok != ")":
                raise ParseError(f"expected ')', got {tok!r}", at)
            return f
        if tok == "true":
            return TRUE
        if tok == "false":
            return FALSE
        if _NAME_RE.fullmatch(tok):
            if tok not in self.alphabet.vars:
                raise UnknownVariableError(tok)
            return Var(tok)
        raise ParseError(f"unexpected token {tok!r}", at)

    def expect_end(self):
        if self.pos < len(self.tokens):
            tok, at = self.tokens[self.pos]
            raise ParseError(f"unexpected token {tok!r}", at)


def parse_formula(text, alphabet):
    parser = _Parser(text, alphabet)
    f = parser.formula()
    parser.expect_end()
    return f


def parse_conditional(text, alphabet):
    """Parse 'P > A'; a bare formula is sugar for 'true > A'."""
    parser = _Parser(text, alphabet)
    first = parser.formula()
    if parser.peek() == ">":
        parser.next()
        second = parser.formula()
        parser.expect_end()
        return Conditional(first, second)
    parser.expect_end()
    return Conditional(TRUE, first)


# ---------------------------------------------------------------------------
# Evaluation


def eval_formula(f, model):
    """Classical truth value of f under one model."""
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Var):
        return model.truth(f.name)
    if isinstance(f, Not):
        return not eval_formula(f.operand, model)
    if isinstance(f, And):
        return eval_formula(f.left, model) and eval_formula(f.right, model)
    if isinstance(f, Or):
        return eval_formula(f.left, model) or eval_formula(f.right, model)
    if isinstance(f, Implies):
        return not eval_formula(f.left, model) or eval_formula(f.right, model)
    raise TypeError(f"not a formula: {f!r}")


def models_of(f, alphabet):
    """Bitmask of the models satisfying f."""
    mask = 0
    for i in range(alphabet.size):
        if eval_formula(f, Model(alphabet, i)):
            mask |= 1 << i
    return mask


def formula_from_models(mask, alphabet):
    """Some formula whose model set is exactly the given mask (minterm form)."""
    if mask == 0:
        return FALSE
    if mask == alphabet.universe:
        return TRUE
    terms = []
    for i in range(alphabet.size):
        if mask >> i & 1:
            lits = [
                Var(v) if i >> j & 1 else Not(Var(v))
                for j, v in enumerate(alphabet.vars)
            ]
            term = lits[0]
            for lit in lits[1:]:
                term = And(term, lit)
            terms.append(term)
    f = terms[0]
    for term in terms[1:]:
        f = Or(f, term)
    return f


def model_set_names(mask, alphabet):
    """Models of a mask as signed-literal strings, sorted by index."""
    return [alphabet.model_name(i) for i in range(alphabet.size) if mask >> i & 1]
