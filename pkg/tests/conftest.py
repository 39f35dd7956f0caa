import random

import pytest
from hypothesis import settings

from rsbf import (
    MonomialRsbfSpec,
    TruthTable,
    constant_table,
    linear_function,
    monomial_rsbf,
    sub_function,
)

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def small_tables():
    """Mixed corpus with n <= 10: every chain variant, families across
    degrees and strides, linear functions, constants, and random tables."""
    corpus = []
    for n in range(4, 11):
        for i in range(4):
            for j in range(4):
                corpus.append(sub_function(i, j, n))
    for l in range(2, 7):
        for n in range(max(l, 2), 11):
            for e in range(1, 5):
                corpus.append(monomial_rsbf(MonomialRsbfSpec(n, l, e)))
    for n in range(1, 9):
        corpus.append(constant_table(n, 0))
        corpus.append(constant_table(n, 1))
        for c in range(min(1 << n, 8)):
            corpus.append(linear_function(n, c))
    rng = random.Random(1234)
    for n in range(1, 11):
        for _ in range(3):
            corpus.append(TruthTable(n, rng.getrandbits(1 << n)))
    return corpus
