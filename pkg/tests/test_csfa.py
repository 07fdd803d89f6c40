import itertools

import pytest

from csfa_holonomy import (
    CsfaClass,
    GenSpec,
    PreconditionError,
    TheoremViolation,
    classify,
    find_swap_word,
    generate_csfa,
    parse_automaton,
    predict_decomposition,
    verify,
)
from csfa_holonomy.csfa import format_chain

from conftest import DATA, cycle_rows, make


def _swap_oracle(aut, p, q, max_len=12):
    for length in range(max_len + 1):
        for word in itertools.product(aut.alphabet, repeat=length):
            if aut.run(p, word) == q and aut.run(q, word) == p:
                return word
    return None


def test_classify_four_state(four):
    cls = classify(four)
    assert cls.is_sfa and cls.is_circular
    assert cls.circular_letter == "a"
    assert cls.bpi_set == {0, 2} and cls.bpi_count == 2
    assert cls.ordering == (0, 1, 2, 3)
    assert cls.m_index == 2 and cls.q_m == 2
    assert cls.r == 2


def test_classify_two_bpis_odd():
    aut = parse_automaton((DATA / "two_bpi_n3.aut").read_text())
    cls = classify(aut)
    assert cls.bpi_set == {0, 1}
    assert cls.m_index == 1 and cls.r == 3


def test_classify_not_sfa():
    cls = classify(parse_automaton((DATA / "not_sfa.aut").read_text()))
    assert not cls.is_sfa and not cls.is_circular
    # branch points are reported even when nothing else is
    assert cls.bpi_set == {0, 1} and cls.r is None


def test_classify_non_circular_sfa():
    cls = classify(make([[1, 0, 0], [2, 0, 0]]))
    assert cls.is_sfa and not cls.is_circular
    assert cls.bpi_set == {0}


def test_ordering_follows_the_letter():
    # circular letter 0 -> 2 -> 1 -> 0
    cls = classify(make([[2, 0, 1], [0, 0, 0]]))
    assert cls.ordering == (0, 2, 1)


@pytest.mark.parametrize("n", [1, 4, 7])
def test_predict_no_bpi(n):
    pred = predict_decomposition(classify(make([cycle_rows(n)])), n)
    assert pred.applicable and pred.source == "no-bpi"
    assert pred.chain == ((n, n),)


def test_predict_one_bpi():
    pred = predict_decomposition(classify(make([[1, 2, 3, 0], [0, 0, 0, 0]])), 4)
    assert pred.source == "one-bpi" and pred.chain == ((4, 4),)


def test_predict_two_bpis(four):
    pred = predict_decomposition(classify(four), 4)
    assert pred.source == "two-bpi" and pred.chain == ((2, 2), (2, 2))
    aut = parse_automaton((DATA / "two_bpi_n3.aut").read_text())
    pred = predict_decomposition(classify(aut), 3)
    assert pred.source == "two-bpi-odd" and pred.chain == ((2, 2), (3, 3))


def test_predict_not_applicable():
    assert not predict_decomposition(classify(make([[1, 0, 0], [2, 0, 0]])), 3).applicable
    # three branch points
    aut = make([[1, 2, 3, 0], [2, 3, 0, 0]])
    cls = classify(aut)
    assert cls.bpi_count == 3
    pred = predict_decomposition(cls, 4)
    assert not pred.applicable and "3 branch points" in pred.note


def test_predict_rejects_odd_mismatch():
    cls = CsfaClass(True, True, frozenset({0, 1}), 2, "a", (0, 1, 2), 1, 1)
    with pytest.raises(TheoremViolation):
        predict_decomposition(cls, 3)
    with pytest.raises(PreconditionError):
        predict_decomposition(CsfaClass(False, False, frozenset(), 0), 3)


def test_format_chain():
    assert format_chain([(2, 2), (3, None)]) == "[(2, C2), (3, ?)]"


@pytest.mark.parametrize("aut, expected", [
    (make([[1, 2, 3, 0], [0, 2, 0, 0]]), ("a", "a")),
    (make([[1, 2, 0], [1, 0, 0]]), ("b",)),
    (make([[1, 0], [1, 0]]), ("a",)),
])
def test_swap_words(aut, expected):
    cls = classify(aut)
    word = find_swap_word(aut, cls)
    assert word == expected
    assert word == _swap_oracle(aut, aut.initial, cls.q_m)


@pytest.mark.slow
def test_swap_word_is_shortlex_on_generated():
    for n in range(3, 8):
        for i in range(5):
            aut = generate_csfa(GenSpec(n, 2, extra_letters=1, seed=77 * n + i,
                                        max_attempts=200000))
            cls = classify(aut)
            assert find_swap_word(aut, cls) == _swap_oracle(aut, 0, cls.q_m)


def test_swap_word_precondition(four):
    with pytest.raises(PreconditionError):
        find_swap_word(make([cycle_rows(3)]), classify(make([cycle_rows(3)])))


def test_verify_four_state(four):
    rep = verify(four)
    assert rep.passed and rep.applicable
    statuses = {c.id: c.status for c in rep.checks}
    assert statuses["two-bpi.chain"] == "pass"
    assert statuses["holonomy.divides"] == "pass"
    assert statuses["swap-word"] == "pass"
    assert rep.check("swap-word").witness == "aa"
    assert statuses["skeleton.pairs-orbit"] == "pass"
    assert statuses["two-bpi.even-dichotomy"] == "pass"
    assert "fail" not in statuses.values()


def test_verify_not_sfa():
    rep = verify(parse_automaton((DATA / "not_sfa.aut").read_text()))
    assert [c.id for c in rep.checks] == ["applicability"]
    assert rep.checks[0].status == "n/a"
    assert rep.passed and not rep.applicable
    assert "no theorem applicable" in rep.checks[0].detail


def test_verify_two_states_drops_trivial_level():
    rep = verify(make([[1, 0], [1, 0]]))
    assert rep.prediction.chain == ((2, 2), (1, 1))
    assert [c.symbol() for c in rep.components] == [(2, 2)]
    assert rep.check("two-bpi.chain").status == "pass"


def test_verify_three_bpis_is_not_applicable():
    rep = verify(make([[1, 2, 3, 0], [2, 3, 0, 0]]))
    assert rep.passed and not rep.applicable
    assert rep.check("applicability").status == "n/a"
    assert rep.check("rank.at-most-bpis").status == "pass"


def test_verify_skips_division_outside_guard():
    rep = verify(generate_csfa(GenSpec(6, 2, seed=3, max_attempts=100000)))
    assert rep.check("holonomy.divides").status == "skip"
    assert rep.passed


@pytest.mark.parametrize("n, k", [(3, 0), (4, 1), (5, 1), (4, 2), (5, 2), (6, 2), (7, 2)])
def test_verify_generated(n, k):
    for seed in range(3):
        aut = generate_csfa(GenSpec(n, k, seed=seed, max_attempts=200000))
        rep = verify(aut)
        failing = [c for c in rep.checks if c.status == "fail"]
        assert not failing, failing
        assert rep.applicable
