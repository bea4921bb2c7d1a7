from itertools import product

import pytest
from hypothesis import strategies as st

from nakayama.errors import InadmissibleSequence
from nakayama.kupisch import KupischSeries
from nakayama.report import normalized_sequences


def brute_admissible(n, max_loewy):
    """Filter the full box of integer tuples through the constructor."""
    out = []
    for c in product(range(1, max_loewy + 1), repeat=n):
        try:
            out.append(KupischSeries(c))
        except InadmissibleSequence:
            pass
    return out


# every normalized admissible sequence with n <= 4 and entries <= 10
SURVEY = [a for n in range(1, 5) for a in normalized_sequences(n, 10)]
SURVEY_CYCLES = [a for a in SURVEY if a.is_cycle]
# un-normalized sequences, for rotation-sensitive checks
ROTATED = [a for n in range(1, 5) for a in brute_admissible(n, 7)]

admissible = st.sampled_from(ROTATED)
cycles = st.sampled_from([a for a in ROTATED if a.is_cycle])


def ids(seqs):
    return [str(a) for a in seqs]


@pytest.fixture
def K():
    return lambda *c: KupischSeries(c)
