"""The replayable invariant suites must all pass and stay registered."""

import pytest

from tuttekit.verify import SUITES, run_all, run_suite

EXPECTED = (
    "tutte",
    "gadgets",
    "walks",
    "ygadget",
    "assembly",
    "certify",
    "colouring",
    "shifts",
    "classify",
)


def test_registry_names():
    assert set(SUITES) == set(EXPECTED)


@pytest.mark.parametrize("name", EXPECTED)
def test_suite_passes(name):
    assert run_suite(name) > 0


def test_unknown_suite():
    with pytest.raises(KeyError, match="tutte"):
        run_suite("nope")


def test_run_all_covers_everything():
    counts = run_all()
    assert set(counts) == set(EXPECTED)
    assert all(n > 0 for n in counts.values())
