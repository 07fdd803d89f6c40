"""Circular semi-flower automata: classification by branch points, closed-form
holonomy predictions, and a checker that recomputes everything from the
transition monoid and compares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from . import bits
from .automaton import validate
from .errors import PreconditionError, ResourceLimitError, TheoremViolation
from .holonomy import components, skeleton_space
from .monoid import (
    DEFAULT_MONOID_CAP,
    check_unique_circular,
    circular_letters,
    cyclic_ordering,
    enumerate_monoid,
    format_word,
    transformation_of_word,
)
from . import tmonoid


@dataclass(frozen=True)
class CsfaClass:
    is_sfa: bool
    is_circular: bool
    bpi_set: frozenset
    bpi_count: int
    circular_letter: Optional[str] = None
    ordering: Optional[tuple] = None    # q0, q1, ... under the circular letter
    m_index: Optional[int] = None
    r: Optional[int] = None

    @property
    def q_m(self):
        if self.m_index is None:
            return None
        return self.ordering[self.m_index]


def classify(aut):
    report = validate(aut)
    bpi_set = report.bpis
    base = dict(bpi_set=bpi_set, bpi_count=len(bpi_set))
    if not report.is_sfa:
        return CsfaClass(is_sfa=False, is_circular=False, **base)
    circ = circular_letters(aut)
    if not circ:
        return CsfaClass(is_sfa=True, is_circular=False, **base)
    letter = next(name for name in aut.alphabet if name in circ)
    ordering = cyclic_ordering(aut, letter)
    m_index = r = None
    q0 = aut.initial
    if len(bpi_set) == 2 and q0 in bpi_set:
        (q_m,) = bpi_set - {q0}
        m_index = ordering.index(q_m)
        row = aut.row(letter)
        start = bits.mask_of((q0, q_m))
        s = bits.image(start, row)
        r = 1
        while s != start:
            s = bits.image(s, row)
            r += 1
    return CsfaClass(True, True, bpi_set, len(bpi_set), letter, ordering, m_index, r)


@dataclass(frozen=True)
class Prediction:
    applicable: bool
    chain: tuple = ()          # ((degree, cyclic order), ...) bottom first
    source: Optional[str] = None
    note: str = ""


def predict_decomposition(cls, n):
    """Component chain forced by the closed-form results, if any applies."""
    if not cls.is_sfa:
        raise PreconditionError("prediction needs a semi-flower automaton")
    k = cls.bpi_count
    if k == 0:
        return Prediction(True, ((n, n),), "no-bpi", "no branch points: single cyclic component")
    if not cls.is_circular:
        return Prediction(False, note="not circular; no closed form known")
    if k == 1:
        return Prediction(True, ((n, n),), "one-bpi", "one branch point: single cyclic component")
    if k == 2:
        if cls.r is None:
            return Prediction(False, note="initial state is not a branch point")
        if n % 2 == 1:
            if cls.r != n:
                raise TheoremViolation(
                    f"odd n={n} with two branch points but orbit length r={cls.r}")
            return Prediction(True, ((2, 2), (n, n)), "two-bpi-odd",
                              "two branch points, odd n: r = n")
        return Prediction(True, ((2, 2), (cls.r, cls.r)), "two-bpi",
                          f"two branch points: r = {cls.r}")
    return Prediction(False, note=f"{k} branch points; no closed form known")


def find_swap_word(aut, cls, monoid=None):
    """Shortest word exchanging q0 and q_m, scanning the monoid in BFS order."""
    if not (cls.is_sfa and cls.is_circular and cls.bpi_count == 2 and cls.m_index is not None):
        raise PreconditionError("swap word needs a circular SFA with two branch points")
    if monoid is None:
        monoid = enumerate_monoid(aut)
    q0, qm = aut.initial, cls.q_m
    for f in monoid.elements:
        if f.images[q0] == qm and f.images[qm] == q0:
            return f.witness
    raise TheoremViolation(f"no word exchanges states {q0} and {qm}")


# -- verification ---------------------------------------------------------------

PASS, FAIL, WARN, SKIP, NA = "pass", "fail", "warn", "skip", "n/a"


@dataclass(frozen=True)
class Check:
    id: str
    status: str
    detail: str = ""
    witness: Optional[str] = None


@dataclass
class VerificationReport:
    automaton: object
    classification: CsfaClass
    prediction: Optional[Prediction]
    monoid: object
    skeleton: object
    components: list
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.status != FAIL for c in self.checks)

    @property
    def applicable(self):
        return self.prediction is not None and self.prediction.applicable

    def check(self, check_id):
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)


def _nontrivial(chain):
    return [tuple(x) for x in chain if x[0] != 1]


def verify(aut, cap=DEFAULT_MONOID_CAP, divides_guard=True):
    """Recompute the decomposition and test every applicable claim about it.

    Nothing computed by :func:`classify` is trusted for the checks except the
    identity of the circular letter and of the second branch point, which
    only select what to compare.
    """
    monoid = enumerate_monoid(aut, cap)
    skel = skeleton_space(monoid)
    comps = components(skel, monoid)
    cls = classify(aut)
    report = VerificationReport(aut, cls, None, monoid, skel, comps)
    add = report.checks.append
    n = aut.n
    q0 = aut.initial
    full = bits.full(n)

    if not cls.is_sfa:
        reasons = "; ".join(validate(aut).reasons)
        add(Check("applicability", NA, f"no theorem applicable: {reasons}"))
        return report

    unique = check_unique_circular(aut)
    add(Check("permutation-letters.unique-circular", PASS if unique.holds else FAIL,
              unique.violation or "every permutation letter is the same circular map",
              " ".join(unique.permutation_letters) or None))

    letters_bpis = validate(aut).bpis
    ok = (not letters_bpis) == (len(aut.alphabet) == 1)
    add(Check("bpis.empty-iff-one-letter", PASS if ok else FAIL,
              f"{len(letters_bpis)} branch points, {len(aut.alphabet)} letters"))

    try:
        prediction = predict_decomposition(cls, n)
    except TheoremViolation as exc:
        prediction = Prediction(False, note=str(exc))
        add(Check("two-bpi.odd-r-equals-n", FAIL, str(exc), str(cls.r)))
    report.prediction = prediction

    if not cls.is_circular:
        add(Check("applicability", NA, "no theorem applicable: " + prediction.note))
        return report

    a = cls.circular_letter
    a_images = monoid.generator(a).images
    ordering = [q0]
    for _ in range(n - 1):
        ordering.append(a_images[ordering[-1]])
    k = len(letters_bpis)

    if k >= 1:
        add(Check("initial.is-bpi", PASS if q0 in letters_bpis else FAIL,
                  f"branch points {bits.fmt(bits.mask_of(letters_bpis))}"))
        last = ordering[-1]
        bad = [b for b in aut.alphabet if monoid.generator(b).images[last] != q0]
        add(Check("initial.last-state-returns", FAIL if bad else PASS,
                  f"every letter sends q_(n-1)={last} to q0={q0}", bad[0] if bad else None))
    if 1 <= k < n:
        worst = max((f for f in monoid.elements if not f.is_permutation),
                    key=lambda f: f.rank, default=None)
        rank = worst.rank if worst is not None else 0
        add(Check("rank.at-most-bpis", PASS if rank <= k else FAIL,
                  f"largest non-permutation rank {rank} vs {k} branch points",
                  format_word(worst.witness) if worst is not None else None))
    if k == 1:
        bad = [b for b in aut.alphabet
               if monoid.generator(b).images != a_images
               and set(monoid.generator(b).images) != {q0}]
        add(Check("one-bpi.constant-letters", FAIL if bad else PASS,
                  "every non-circular letter is constant to q0", bad[0] if bad else None))

    sizes = {bits.popcount(m) for m in skel.members}
    if k <= 1:
        ok = set(skel.members) == {full} | {1 << p for p in range(n)}
        add(Check("skeleton.shape", PASS if ok else FAIL,
                  f"|J| = {len(skel.members)}, expected {{Q}} and singletons"))
    elif k == 2:
        ok = sizes <= {n, 2, 1}
        add(Check("skeleton.shape", PASS if ok else FAIL,
                  f"member sizes {sorted(sizes, reverse=True)}"))
        pair = bits.mask_of(letters_bpis)
        orbit = set()
        s = pair
        while s not in orbit:
            orbit.add(s)
            s = bits.image(s, a_images)
        j2 = set(skel.of_size(2))
        add(Check("skeleton.pairs-orbit", PASS if j2 == orbit else FAIL,
                  f"|J2| = {len(j2)}, orbit of BPI under {a} has {len(orbit)}",
                  " ".join(bits.fmt(m) for m in sorted(j2))))

        rank2 = [b for b in aut.alphabet if len(set(monoid.generator(b).images)) == 2]
        bad = [b for b in rank2 if bits.mask_of(monoid.generator(b).images) != pair]
        add(Check("rank2.image-is-bpis", FAIL if bad else PASS,
                  "every rank-2 letter has image BPI", bad[0] if bad else None))
        onto = [b for b in aut.alphabet if bits.mask_of(monoid.generator(b).images) == pair]
        add(Check("rank2.letter-onto-bpis", PASS if onto else FAIL,
                  "some letter has image exactly BPI", onto[0] if onto else None))

        if cls.m_index is not None:
            try:
                word = find_swap_word(aut, cls, monoid)
            except TheoremViolation as exc:
                add(Check("swap-word", FAIL, str(exc)))
            else:
                f = transformation_of_word(aut, word)
                qm = cls.q_m
                ok = f.images[q0] == qm and f.images[qm] == q0
                add(Check("swap-word", PASS if ok else FAIL,
                          f"word exchanges {q0} and {qm}", format_word(word)))

        r = len(orbit)
        if n > 2:
            one_class = len({skel.class_of[m] for m in j2}) == 1
            add(Check("two-bpi.pairs-one-class", PASS if one_class else FAIL,
                      "all two-element members are equivalent"))
        add(Check("two-bpi.r-matches-orbit", PASS if cls.r == r else FAIL,
                  f"classified r={cls.r}, recomputed orbit length {r}"))
        if n % 2 == 1:
            if prediction.source == "two-bpi-odd":
                add(Check("two-bpi.odd-r-equals-n", PASS if r == n else FAIL,
                          f"r = {r}, n = {n}", str(r)))
        else:
            ok = r == n or 2 * r == n
            add(Check("two-bpi.even-dichotomy", PASS if ok else WARN,
                      f"r = {r}, n = {n}; expected r = n or 2r = n", str(r)))

    if not prediction.applicable:
        add(Check("applicability", NA, "no theorem applicable: " + prediction.note))
        return report

    computed = [c.symbol() for c in comps]
    ok = _nontrivial(computed) == _nontrivial(prediction.chain)
    add(Check(f"{prediction.source}.chain", PASS if ok else FAIL,
              f"computed {format_chain(computed)}, predicted {format_chain(prediction.chain)}"))

    if divides_guard:
        add(_division_check(monoid, prediction.chain))
    return report


def _division_check(monoid, chain):
    cid = "holonomy.divides"
    degree = math.prod(k for k, _ in chain)
    if monoid.n > tmonoid.DIVIDES_MAX_SMALL or degree > tmonoid.DIVIDES_MAX_BIG:
        return Check(cid, SKIP, f"outside the brute-force guards "
                     f"({monoid.n} states, cascade of degree {degree})")
    try:
        big = tmonoid.predicted_cascade(chain)
        ok = tmonoid.divides(tmonoid.monoid_tm(monoid), big)
    except ResourceLimitError as exc:
        return Check(cid, SKIP, f"outside the brute-force guards: {exc}")
    return Check(cid, PASS if ok else FAIL,
                 f"(Q, M(A)) divides the closed cascade {format_chain(chain)}")


def format_chain(chain):
    parts = []
    for degree, order in chain:
        parts.append(f"({degree}, C{order})" if order is not None else f"({degree}, ?)")
    return "[" + ", ".join(parts) + "]"

