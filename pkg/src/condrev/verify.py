"""Verification suites: paper-examples (golden cases and named
counterexamples), n2-exhaustive (all 75 orders over two variables, all
conditionals as model-set pairs), and n3-sampled (seeded instances over the
545835 orders of a three-variable universe)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .logic import Alphabet, formula_from_models, model_set_names, parse_conditional, parse_formula
from . import oracle
from .analysis import (
    at_least_as_naive_masks,
    check_postulate_masks,
    diff,
    preserves_conditionals_masks,
    recalcitrance_check,
    strictly_more_naive_masks,
    supernaive_order_masks,
)
from .preorder import (
    Order,
    flat,
    max_idx,
    min_idx,
    min_models,
    normalize,
    positive,
    satisfies_masks,
)
from .revision import (
    OPERATOR_KINDS,
    UnsatisfiableConditionalError,
    contingent_context_masks,
    dow_masks,
    lex_masks,
    lex_prop_masks,
    nat_masks,
    nat_prop_masks,
    revise_masks,
    unc_masks,
)

SCOPES = ("paper-examples", "n2-exhaustive", "n3-sampled")


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        suffix = f"  [{self.detail}]" if self.detail else ""
        return f"{status}  {self.name}{suffix}"


def run_suite(scope, seed=0, samples=500):
    if scope == "paper-examples":
        return paper_examples_suite()
    if scope == "n2-exhaustive":
        return n2_exhaustive_suite()
    if scope == "n3-sampled":
        return n3_sampled_suite(seed=seed, samples=samples)
    raise ValueError(f"unknown scope: {scope!r}; choose from {SCOPES}")


# ---------------------------------------------------------------------------
# Golden examples and named counterexamples


def _order(alphabet, *classes_as_names):
    raw = []
    for names in classes_as_names:
        mask = 0
        for name in names:
            mask |= 1 << alphabet.parse_model(name)
        raw.append(mask)
    return normalize(alphabet, raw)


def _pairs_by_name(alphabet, pairs):
    return {(alphabet.parse_model(i), alphabet.parse_model(j)) for i, j in pairs}


def paper_examples_suite():
    return golden_examples_suite() + named_counterexamples_suite()


def golden_examples_suite():
    results = []
    ab = Alphabet(("x", "y"))
    cx = positive(ab, parse_formula("x", ab))
    golden_nat = _order(ab, ["x y"], ["x -y"], ["-x y", "-x -y"])

    results.append(
        CheckResult(
            "nat(C_x, y) = nat(C_x, x>y) = nat(C_x, true>y) = [xy | x-y | -xy -x-y]",
            nat_prop_masks(cx, 0b1100) == golden_nat
            and nat_masks(cx, 0b1010, 0b1100) == golden_nat
            and nat_masks(cx, 0b1111, 0b1100) == golden_nat,
        )
    )

    golden_unc_general = _order(ab, ["x y"], ["-x y"], ["x -y"], ["-x -y"])
    results.append(
        CheckResult(
            "unc(C_x, true>y) = [xy | -xy | x-y | -x-y]",
            unc_masks(cx, 0b1111, 0b1100) == golden_unc_general,
        )
    )
    results.append(
        CheckResult(
            "unc(C_x, x>y) = [xy | x-y | -xy -x-y]",
            unc_masks(cx, 0b1010, 0b1100) == golden_nat,
        )
    )

    d_nat = diff(cx, nat_prop_masks(cx, 0b1100))
    expected_nat = _pairs_by_name(ab, [("x -y", "x y")])
    results.append(
        CheckResult(
            "diff(C_x, nat_prop(C_x,y)) = {(x-y, xy)}",
            d_nat == expected_nat,
            f"computed {sorted(d_nat)}",
        )
    )

    # The next golden check claims the uncontingent difference adds
    # exactly {(-x-y, -xy)}.  The actual difference also flips the order
    # between x-y and -xy, so this exact-set claim does not hold; the
    # containment it was meant to witness is checked next.
    d_unc = diff(cx, unc_masks(cx, 0b1111, 0b1100))
    expected_unc = expected_nat | _pairs_by_name(ab, [("-x -y", "-x y")])
    results.append(
        CheckResult(
            "diff(C_x, unc(C_x,true>y)) adds exactly {(-x-y, -xy)}",
            d_unc == expected_unc,
            f"computed {sorted(d_unc)}",
        )
    )
    results.append(
        CheckResult(
            "diff(C_x, unc(C_x,true>y)) strictly contains diff(C_x, nat_prop(C_x,y)) "
            "and the pair (-x-y, -xy)",
            d_nat < d_unc and expected_unc <= d_unc,
        )
    )
    return results


def named_counterexamples_suite():
    results = []
    ab = Alphabet(("x", "y"))
    cx = positive(ab, parse_formula("x", ab))

    # unc fails CR2 on [xy | -xy -x-y | x-y] with true>x
    c = _order(ab, ["x y"], ["-x y", "-x -y"], ["x -y"])
    verdict = check_postulate_masks("unc", c, 0b1111, 0b1010, "CR2")
    results.append(
        CheckResult(
            "unc fails CR2 on [xy | -xy -x-y | x-y] with true>x",
            not verdict.holds
            and satisfies_masks(c, 0b1111, 0b1010)
            and unc_masks(c, 0b1111, 0b1010) != c,
        )
    )

    # dow fails recalcitrance on the flat order over three variables
    ab3 = Alphabet(("x", "y", "z"))
    c1 = parse_conditional("x > y", ab3)
    c2 = parse_conditional("true > !y & !z", ab3)
    verdict = recalcitrance_check("dow", flat(ab3), c1, c2)
    final = dow_masks(
        dow_masks(flat(ab3), 0b10101010, 0b11001100), 0b11111111, 0b00000011
    )
    x_not_y = 0b10101010 & ~0b11001100 & ab3.universe
    joint = _order(
        ab3,
        ["-x -y -z"],
        ["x y -z", "x y z", "-x y -z", "-x y z", "-x -y z"],
        ["x -y -z", "x -y z"],
    )
    results.append(
        CheckResult(
            "dow not recalcitrant: flat(x,y,z) dow(x>y) dow(true>!y&!z) "
            "puts x&!y models in class 0",
            not verdict.recalcitrant
            and verdict.jointly_satisfiable
            and final.classes[0] & x_not_y != 0
            and satisfies_masks(joint, 0b10101010, 0b11001100)
            and satisfies_masks(joint, 0b11111111, 0b00000011),
        )
    )

    # nat fails recalcitrance on C_x with true>y then true>!x
    c1 = parse_conditional("true > y", ab)
    c2 = parse_conditional("true > !x", ab)
    verdict = recalcitrance_check("nat", cx, c1, c2)
    final = nat_masks(nat_masks(cx, 0b1111, 0b1100), 0b1111, 0b0101)
    joint = _order(ab, ["-x y"], ["x y", "x -y", "-x -y"])
    results.append(
        CheckResult(
            "nat not recalcitrant on C_x: true>y then true>!x leaves -xy tied "
            "with -x-y on top",
            not verdict.recalcitrant
            and verdict.jointly_satisfiable
            and final.classes[0] == 0b0101
            and satisfies_masks(joint, 0b1111, 0b1100)
            and satisfies_masks(joint, 0b1111, 0b0101),
        )
    )

    # dow incomparable with nat, unc, lex in difference from flat
    fl = flat(ab)
    d_dow = diff(dow_masks(fl, 0b1010, 0b1100), fl)
    dow_only = _pairs_by_name(ab, [("-x -y", "x y")])
    other_only = _pairs_by_name(ab, [("x -y", "-x -y")])
    ok = True
    for kind in ("nat", "unc", "lex"):
        d_other = diff(revise_masks(fl, kind, 0b1010, 0b1100), fl)
        if d_dow <= d_other or d_other <= d_dow:
            ok = False
        if not (dow_only <= d_dow - d_other and other_only <= d_other - d_dow):
            ok = False
    results.append(
        CheckResult(
            "dow incomparable with nat/unc/lex on flat with x>y; witnesses "
            "(-x-y, xy) vs (x-y, -x-y)",
            ok,
        )
    )

    results.extend(_strict_naivety_checks())
    return results


def _strict_naivety_witness():
    """Three-variable instance with |-P| = 5, |PA| = 2, |P-A| = 1 arranged as
    a pure -P class above a mixed class above a -P,PA class."""
    ab3 = Alphabet(("x", "y", "z"))
    p = 0b10101000  # x & (y | z): models 3, 5, 7
    a = 0b11001100  # y: PA = {3, 7}, P-A = {5}
    base = _order(
        ab3,
        ["-x -y -z", "-x y -z", "-x -y z"],  # -P only
        ["-x y z", "x y -z", "x -y z"],  # -P, PA, P-A
        ["x -y -z", "x y z"],  # -P, PA
    )
    return ab3, base, p, a


def _full_chain_witness():
    """Instance witnessing all three strict naivety links at once: a P-A
    model inside the affected band and another below it."""
    ab3 = Alphabet(("x", "y", "z"))
    p = 0b10101010  # x
    a = 0b11001100  # y: PA = {3, 7}, P-A = {1, 5}
    base = _order(
        ab3,
        ["-x -y -z"],
        ["x y -z", "x -y z", "-x y -z"],
        ["x y z", "-x -y z"],
        ["x -y -z", "-x y z"],
    )
    return ab3, base, p, a


def _strict_naivety_checks():
    results = []
    ab3, base, p, a = _strict_naivety_witness()
    not_p = ab3.universe & ~p
    revised = {k: revise_masks(base, k, p, a) for k in OPERATOR_KINDS}
    # With the single P-A model inside the affected band, uncontingent and
    # lexicographic revision coincide, so that link is non-strict here.
    results.append(
        CheckResult(
            "figure witness (|P-A|=1): unc > nat > dow strictly, lex >= unc, on !P",
            strictly_more_naive_masks(revised["unc"], revised["nat"], not_p)
            and strictly_more_naive_masks(revised["nat"], revised["dow"], not_p)
            and at_least_as_naive_masks(revised["lex"], revised["unc"], not_p),
        )
    )

    ab3, base2, p2, a2 = _full_chain_witness()
    not_p2 = ab3.universe & ~p2
    revised2 = {k: revise_masks(base2, k, p2, a2) for k in OPERATOR_KINDS}
    chain = ("lex", "unc", "nat", "dow")
    ok = all(
        strictly_more_naive_masks(revised2[hi], revised2[lo], not_p2)
        for hi, lo in zip(chain, chain[1:])
    )
    results.append(
        CheckResult(
            "strict naivety chain lex > unc > nat > dow on a three-variable witness",
            ok,
        )
    )

    sup = supernaive_order_masks(base, p, a)
    results.append(
        CheckResult(
            "supernaive order satisfies P>A, preserves conditionals, strictly "
            "more naive than nat",
            satisfies_masks(sup, p, a)
            and preserves_conditionals_masks(base, sup, p, a)
            and strictly_more_naive_masks(sup, revised["nat"], not_p),
        )
    )
    return results


# ---------------------------------------------------------------------------
# Exhaustive two-variable suite


def _satisfiable_mask_pairs(universe):
    """All (premise, conclusion) model-set pairs, conclusion restricted to the
    premise (any other conclusion with the same PA behaves identically, which
    CR4 checks separately)."""
    pairs = []
    for p in range(universe + 1):
        pa = p
        while True:
            pairs.append((p, pa))
            if pa == 0:
                break
            pa = (pa - 1) & p
    return pairs


class _Tally:
    """Aggregates one property over many instances into a single CheckResult."""

    def __init__(self, name):
        self.name = name
        self.total = 0
        self.failures = 0
        self.first = ""

    def add(self, ok, describe):
        self.total += 1
        if not ok:
            self.failures += 1
            if not self.first:
                self.first = describe()

    def result(self):
        if self.failures:
            detail = f"{self.failures}/{self.total} failed; first: {self.first}"
            return CheckResult(self.name, False, detail)
        return CheckResult(self.name, True, f"{self.total} instances")


def n2_exhaustive_suite():
    ab = Alphabet(("x", "y"))
    universe = ab.universe
    orders = list(oracle.enumerate_orders(ab))
    pairs = _satisfiable_mask_pairs(universe)

    tallies = {
        key: _Tally(name)
        for key, name in [
            ("cr1", "CR1 (success) for nat, dow, unc, lex"),
            ("postulates", "nat satisfies CR0-CR7"),
            ("nat_true", "nat(C, true>A) = nat_prop(C, A)"),
            ("unc_true", "unc(C, true>A) = lex_prop(C, A)"),
            ("context", "nat(C, P>A) = unc(C, contingent_context(C,P>A) > A)"),
            ("unc_lex", "unc(C, P>A) = lex_prop(C, downset-through-max & (P->A))"),
            ("idem", "nat and dow leave satisfying orders unchanged; unc idempotent"),
            ("chain", "difference chain diff(nat) <= diff(unc) <= diff(lex)"),
            ("naive", "naivety chain lex >= unc >= nat >= dow on !P"),
            ("preserve", "all four operators preserve conditionals"),
            ("minimal", "nat and dow are subset-minimal satisfying orders"),
            ("unc_min", "unc is subset-minimal among all-context-satisfying orders"),
            ("unique", "nat is the unique maximally naive minimal preserver"),
            ("recalcitrant", "nat recalcitrant from flat for jointly satisfiable pairs"),
            ("lemma", "falsified first conditional implies PA |= Q!B and QB |= P!A"),
        ]
    }

    def name_of(c, p, pa):
        return (
            f"C={list(c.classes)} P={model_set_names(p, ab)} "
            f"PA={model_set_names(pa, ab)}"
        )

    for c in orders:
        for am in range(1, universe + 1):
            ok = nat_masks(c, universe, am) == nat_prop_masks(c, am)
            tallies["nat_true"].add(ok, lambda: name_of(c, universe, am))
            ok = unc_masks(c, universe, am) == lex_prop_masks(c, am)
            tallies["unc_true"].add(ok, lambda: name_of(c, universe, am))

        for p, pa in pairs:
            if p != 0 and pa == 0:
                continue
            describe = lambda c=c, p=p, pa=pa: name_of(c, p, pa)
            revised = {k: revise_masks(c, k, p, pa) for k in OPERATOR_KINDS}
            if p != 0:
                tallies["cr1"].add(
                    all(satisfies_masks(revised[k], p, pa) for k in OPERATOR_KINDS),
                    describe,
                )
            for pid in ("CR0", "CR1", "CR2", "CR3", "CR4", "CR5", "CR6", "CR7"):
                v = check_postulate_masks("nat", c, p, pa, pid)
                tallies["postulates"].add(
                    v.holds, lambda pid=pid, d=describe: f"{pid} {d()}"
                )

            q = contingent_context_masks(c, p, pa) if p != 0 else 0
            ok = p == 0 or revised["nat"] == unc_masks(c, q, pa)
            tallies["context"].add(ok, describe)

            if p != 0:
                downmax = 0
                for cl in c.classes[: max_idx(c, pa) + 1]:
                    downmax |= cl
                f = downmax & ((universe & ~p) | pa)
                tallies["unc_lex"].add(
                    revised["unc"] == lex_prop_masks(c, f), describe
                )

            if satisfies_masks(c, p, pa):
                ok = revised["nat"] == c and revised["dow"] == c
            else:
                ok = True
            ok = ok and unc_masks(revised["unc"], p, pa) == revised["unc"]
            tallies["idem"].add(ok, describe)

            d = {k: diff(revised[k], c) for k in OPERATOR_KINDS}
            tallies["chain"].add(d["nat"] <= d["unc"] <= d["lex"], describe)

            not_p = universe & ~p
            tallies["naive"].add(
                at_least_as_naive_masks(revised["lex"], revised["unc"], not_p)
                and at_least_as_naive_masks(revised["unc"], revised["nat"], not_p)
                and at_least_as_naive_masks(revised["nat"], revised["dow"], not_p),
                describe,
            )

            tallies["preserve"].add(
                all(
                    preserves_conditionals_masks(c, revised[k], p, pa)
                    for k in OPERATOR_KINDS
                ),
                describe,
            )

            if p != 0:
                minimal = oracle.minimal_satisfying_masks(c, p, pa, orders=orders)
                tallies["minimal"].add(
                    revised["nat"] in minimal and revised["dow"] in minimal, describe
                )
                unc_minimal = oracle.uncontingent_minimal_masks(
                    c, p, pa, orders=orders
                )
                tallies["unc_min"].add(revised["unc"] in unc_minimal, describe)
                tallies["unique"].add(
                    oracle.unique_naive_from_minimal(c, p, pa, minimal), describe
                )

    # recalcitrance of nat from the flat order, over all conditional pairs
    fl = flat(ab)
    sat_pairs = [(p, pa) for p, pa in pairs if p != 0 and pa != 0]
    for p1, a1 in sat_pairs:
        once = nat_masks(fl, p1, a1)
        for p2, a2 in sat_pairs:
            twice = nat_masks(once, p2, a2)
            falsified = not satisfies_masks(twice, p1, a1)
            describe = (
                lambda p1=p1, a1=a1, p2=p2, a2=a2: f"P>A=({p1:04b},{a1:04b}) "
                f"Q>B=({p2:04b},{a2:04b})"
            )
            joint = any(
                satisfies_masks(o, p1, a1) and satisfies_masks(o, p2, a2)
                for o in orders
            )
            tallies["recalcitrant"].add(not (joint and falsified), describe)
            pna1 = p1 & ~a1 & universe
            qnb = p2 & ~a2 & universe
            implied = (p1 & a1) & ~qnb == 0 and (p2 & a2) & ~pna1 == 0
            tallies["lemma"].add(not falsified or implied, describe)

    return [t.result() for t in tallies.values()]


# ---------------------------------------------------------------------------
# Sampled three-variable suite (numpy-backed)


def n3_sampled_suite(seed=0, samples=500, unique_samples=40):
    import numpy as np

    results = []

    for size, expected in ((2, 3), (4, 75), (8, 545835)):
        count = sum(1 for _ in oracle.enumerate_class_sequences(size))
        results.append(
            CheckResult(
                f"enumeration count for {size} models = {expected}",
                count == expected,
                f"counted {count}",
            )
        )

    ab = Alphabet(("x", "y", "z"))
    universe = ab.universe
    size = ab.size

    all_classes = list(oracle.enumerate_class_sequences(size))
    levels = np.zeros((len(all_classes), size), dtype=np.uint8)
    for idx, classes in enumerate(all_classes):
        for k, cl in enumerate(classes):
            for i in range(size):
                if cl >> i & 1:
                    levels[idx, i] = k

    # <= relation of every order as a 64-bit mask, bit i*8+j for i <= j
    rel = np.zeros(len(all_classes), dtype=np.uint64)
    for i in range(size):
        for j in range(size):
            bit = np.uint64(1 << (i * size + j))
            rel |= np.where(levels[:, i] <= levels[:, j], bit, np.uint64(0))

    def rel_mask_of(order):
        m = 0
        lv = order.levels
        for i in range(size):
            for j in range(size):
                if lv[i] <= lv[j]:
                    m |= 1 << (i * size + j)
        return m

    def min_level_table(order):
        """Minimum class level of every model subset; empty set maps to size."""
        lv = order.levels
        table = [size] * (universe + 1)
        for m in range(1, universe + 1):
            low = m & -m
            table[m] = min(lv[low.bit_length() - 1], table[m & (m - 1)])
        return table

    def sat_vector(p, a):
        """satisfies(P>A) across all enumerated orders."""
        pa = p & a
        pna = p & ~a & universe
        if p == 0:
            return np.ones(len(all_classes), dtype=bool)
        if pa == 0:
            return np.zeros(len(all_classes), dtype=bool)
        if pna == 0:
            return np.ones(len(all_classes), dtype=bool)
        cols_pa = [i for i in range(size) if pa >> i & 1]
        cols_pna = [i for i in range(size) if pna >> i & 1]
        return levels[:, cols_pa].min(axis=1) < levels[:, cols_pna].min(axis=1)

    def preservation_mask(p, a):
        groups = (universe & ~p, p & a, p & ~a & universe)
        m = 0
        for g in groups:
            members = [i for i in range(size) if g >> i & 1]
            for i in members:
                for j in members:
                    if i != j:
                        m |= 1 << (i * size + j)
        return m

    rng = random.Random(seed)
    instances = []
    for _ in range(samples):
        base_idx = rng.randrange(len(all_classes))
        p = rng.randrange(1, universe + 1)
        pa = 0
        while pa == 0:
            pa = p
            keep = rng.randrange(1 << bin(p).count("1"))
            pa = 0
            k = 0
            for i in range(size):
                if p >> i & 1:
                    if keep >> k & 1:
                        pa |= 1 << i
                    k += 1
        q = rng.randrange(1, universe + 1)
        qb = q & rng.randrange(universe + 1)
        instances.append((base_idx, p, pa, q, qb))

    tallies = {
        key: _Tally(name)
        for key, name in [
            ("cr1", "CR1 (success) for nat, dow, unc, lex"),
            ("postulates", "nat satisfies CR0-CR7"),
            ("nat_true", "nat(C, true>A) = nat_prop(C, A)"),
            ("unc_true", "unc(C, true>A) = lex_prop(C, A)"),
            ("context", "nat(C, P>A) = unc(C, contingent_context(C,P>A) > A)"),
            ("unc_lex", "unc(C, P>A) = lex_prop(C, downset-through-max & (P->A))"),
            ("idem", "nat and dow leave satisfying orders unchanged; unc idempotent"),
            ("chain", "difference chain diff(nat) <= diff(unc) <= diff(lex)"),
            ("naive", "naivety chain lex >= unc >= nat >= dow on !P"),
            ("preserve", "all four operators preserve conditionals"),
            ("minimal", "nat and dow are subset-minimal satisfying orders"),
            ("unc_min", "unc is subset-minimal among all-context-satisfying orders"),
            (
                "unique",
                f"nat is the unique maximally naive minimal preserver "
                f"(first {unique_samples} instances)",
            ),
            ("recalcitrant", "nat recalcitrant from flat for jointly satisfiable pairs"),
            ("lemma", "falsified first conditional implies PA |= Q!B and QB |= P!A"),
        ]
    }

    # (Q, B) grids for the vectorized CR5-CR7 checks
    grid_q, grid_b = np.meshgrid(
        np.arange(universe + 1), np.arange(universe + 1), indexing="ij"
    )
    grid_qb = grid_q & grid_b
    grid_qnb = grid_q & ~grid_b & universe

    def sat_grid(table):
        t = np.asarray(table)
        empty_q = grid_q == 0
        empty_qb = grid_qb == 0
        empty_qnb = grid_qnb == 0
        strict = t[grid_qb] < t[grid_qnb]
        return empty_q | (~empty_qb & (empty_qnb | strict))

    fl = flat(ab)

    def postulates_ok(c, p, pa, revised_nat):
        for pid in ("CR0", "CR1", "CR2", "CR3", "CR4"):
            if not check_postulate_masks("nat", c, p, pa, pid).holds:
                return pid
        base_sat = sat_grid(min_level_table(c))
        nat_sat = sat_grid(min_level_table(revised_nat))
        pna = p & ~pa & universe
        cr5 = (grid_q & ~pa) == 0
        if np.any(cr5 & (base_sat != nat_sat)):
            return "CR5"
        cr6 = ((grid_qb & ~pa) == 0) & ((grid_qnb & ~pna) == 0)
        if np.any(cr6 & base_sat & ~nat_sat):
            return "CR6"
        cr7 = ((grid_qb & ~pna) == 0) & ((grid_qnb & ~pa) == 0)
        if np.any(cr7 & nat_sat & ~base_sat):
            return "CR7"
        return None

    for inst_no, (base_idx, p, pa, q, qb) in enumerate(instances):
        c = Order(ab, all_classes[base_idx])
        describe = lambda i=inst_no: f"instance {i}"
        revised = {k: revise_masks(c, k, p, pa) for k in OPERATOR_KINDS}

        tallies["cr1"].add(
            all(satisfies_masks(revised[k], p, pa) for k in OPERATOR_KINDS), describe
        )
        failed = postulates_ok(c, p, pa, revised["nat"])
        tallies["postulates"].add(
            failed is None, lambda f=failed, d=describe: f"{f} {d()}"
        )

        am = pa if pa else universe
        tallies["nat_true"].add(
            nat_masks(c, universe, am) == nat_prop_masks(c, am), describe
        )
        tallies["unc_true"].add(
            unc_masks(c, universe, am) == lex_prop_masks(c, am), describe
        )

        qctx = contingent_context_masks(c, p, pa)
        tallies["context"].add(revised["nat"] == unc_masks(c, qctx, pa), describe)

        downmax = 0
        for cl in c.classes[: max_idx(c, pa) + 1]:
            downmax |= cl
        f = downmax & ((universe & ~p) | pa)
        tallies["unc_lex"].add(revised["unc"] == lex_prop_masks(c, f), describe)

        if satisfies_masks(c, p, pa):
            ok = revised["nat"] == c and revised["dow"] == c
        else:
            ok = True
        ok = ok and unc_masks(revised["unc"], p, pa) == revised["unc"]
        tallies["idem"].add(ok, describe)

        d = {k: diff(revised[k], c) for k in OPERATOR_KINDS}
        tallies["chain"].add(d["nat"] <= d["unc"] <= d["lex"], describe)

        not_p = universe & ~p
        tallies["naive"].add(
            at_least_as_naive_masks(revised["lex"], revised["unc"], not_p)
            and at_least_as_naive_masks(revised["unc"], revised["nat"], not_p)
            and at_least_as_naive_masks(revised["nat"], revised["dow"], not_p),
            describe,
        )

        tallies["preserve"].add(
            all(
                preserves_conditionals_masks(c, revised[k], p, pa)
                for k in OPERATOR_KINDS
            ),
            describe,
        )

        # minimality of nat and dow: no satisfying order strictly closer
        base_rel = np.uint64(rel_mask_of(c))
        d_all = rel ^ base_rel
        sat_all = sat_vector(p, pa)
        d_nat = np.uint64(rel_mask_of(revised["nat"]) ^ int(base_rel))
        d_dow = np.uint64(rel_mask_of(revised["dow"]) ^ int(base_rel))
        ok = True
        for d_op in (d_nat, d_dow):
            closer = sat_all & ((d_all & ~d_op) == 0) & (d_all != d_op)
            if np.any(closer):
                ok = False
        tallies["minimal"].add(ok, describe)

        # unc minimality among all-context-satisfying orders
        d_unc = np.uint64(rel_mask_of(revised["unc"]) ^ int(base_rel))
        ok = oracle.satisfies_all_contexts(revised["unc"], p, pa)
        if ok:
            cand = np.nonzero(sat_all & ((d_all & ~d_unc) == 0) & (d_all != d_unc))[0]
            for idx in cand:
                o = Order(ab, all_classes[int(idx)])
                if oracle.satisfies_all_contexts(o, p, pa):
                    ok = False
                    break
        tallies["unc_min"].add(ok, describe)

        if inst_no < unique_samples:
            pres = np.uint64(preservation_mask(p, pa))
            keepers = sat_all & ((d_all & pres) == 0)
            cand_idx = np.nonzero(keepers)[0]
            minimal_orders = []
            for idx in cand_idx:
                d_c = d_all[idx]
                dominated = sat_all & ((d_all & ~d_c) == 0) & (d_all != d_c)
                if not np.any(dominated):
                    minimal_orders.append(Order(ab, all_classes[int(idx)]))
            maximal = [
                o
                for o in minimal_orders
                if not any(
                    strictly_more_naive_masks(o2, o, not_p) for o2 in minimal_orders
                )
            ]
            tallies["unique"].add(set(maximal) == {revised["nat"]}, describe)

        # recalcitrance of nat from the flat order with a second conditional
        if qb != 0:
            once = nat_masks(fl, p, pa)
            twice = nat_masks(once, q, qb)
            falsified = not satisfies_masks(twice, p, pa)
            joint = bool(np.any(sat_vector(p, pa) & sat_vector(q, qb)))
            tallies["recalcitrant"].add(not (joint and falsified), describe)
            qnb = q & ~qb & universe
            pna = p & ~pa & universe
            implied = pa & ~qnb == 0 and qb & ~pna == 0
            tallies["lemma"].add(not falsified or implied, describe)

    results.extend(t.result() for t in tallies.values())
    return results
