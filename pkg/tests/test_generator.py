import pytest
from hypothesis import given, settings, strategies as st

from csfa_holonomy import (
    GenSpec,
    InputError,
    ResourceLimitError,
    classify,
    cycle_automaton,
    generate_csfa,
    serialize_automaton,
    validate,
)
from csfa_holonomy.generator import GenerationError, SplitMix64

from conftest import cycle_rows


def test_splitmix_reference_stream():
    # values from the reference C implementation
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(5)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423,
        4593380528125082431, 16408922859458223821]
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        16294208416658607535, 7960286522194355700, 487617019471545679]


@given(st.integers(0, 2**64 - 1), st.integers(1, 1000))
def test_below_in_range(seed, n):
    rng = SplitMix64(seed)
    assert all(0 <= rng.below(n) < n for _ in range(20))


def test_no_bpi_is_the_cycle():
    aut = generate_csfa(GenSpec(5, 0))
    assert aut == cycle_automaton(5)
    assert aut.delta == (tuple(cycle_rows(5)),)


def test_one_bpi_three_states_is_forced():
    for seed in range(10):
        aut = generate_csfa(GenSpec(3, 1, seed=seed))
        assert aut.row("b") == (0, 0, 0)


def test_determinism():
    spec = GenSpec(4, 2, extra_letters=1, seed=42)
    first = serialize_automaton(generate_csfa(spec))
    assert serialize_automaton(generate_csfa(spec)) == first
    aut = generate_csfa(spec)
    assert 0 in validate(aut).bpis and len(validate(aut).bpis) == 2


def test_seeds_differ():
    outputs = {serialize_automaton(generate_csfa(GenSpec(6, 2, seed=s, max_attempts=100000)))
               for s in range(8)}
    assert len(outputs) > 1


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, min(n - 1, 3)), st.integers(1, 2), st.integers(0, 2**64 - 1))))
def test_emitted_automata_are_valid(args):
    n, k, extra, seed = args
    try:
        aut = generate_csfa(GenSpec(n, k, extra_letters=extra, seed=seed, max_attempts=2000))
    except GenerationError:
        return
    rep = validate(aut)
    assert rep.trim and rep.is_sfa
    assert len(rep.bpis) == k
    cls = classify(aut)
    assert cls.is_circular and cls.circular_letter == "a"
    assert aut.alphabet == ("a", "b", "c")[: 1 + extra]
    assert all(row[n - 1] == 0 for row in aut.delta)
    if k == 1:
        assert all(set(row) == {0} for row in aut.delta[1:])


@pytest.mark.parametrize("kwargs", [
    dict(n=1, bpi_count=0),
    dict(n=65, bpi_count=0),
    dict(n=4, bpi_count=4),
    dict(n=4, bpi_count=-1),
    dict(n=4, bpi_count=0, extra_letters=1),
    dict(n=4, bpi_count=1, extra_letters=0),
    dict(n=4, bpi_count=1, extra_letters=26),
    dict(n=4, bpi_count=1, seed=-1),
    dict(n=4, bpi_count=1, seed=2**64),
    dict(n=4, bpi_count=1, max_attempts=0),
])
def test_spec_validation(kwargs):
    with pytest.raises(InputError):
        GenSpec(**kwargs)


def test_default_extra_letters():
    assert GenSpec(4, 0).extra_letters == 0
    assert GenSpec(4, 2).extra_letters == 1


def test_exhaustion_reports_histogram():
    with pytest.raises(ResourceLimitError) as info:
        generate_csfa(GenSpec(8, 7, seed=1, max_attempts=50))
    err = info.value
    assert isinstance(err, GenerationError)
    assert sum(err.histogram.values()) == 50
    assert "rejections" in str(err)
