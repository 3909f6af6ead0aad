"""Brute-force oracles and shared strategies for the test suite."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

import hypothesis.strategies as st

from minfact import (
    Chain,
    ParkingInput,
    Permutation,
    Transposition,
    apply_generator,
    enumerate_sigma,
    validate,
)


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(images) for images in permutations(range(1, n + 1))]


def all_transpositions(n: int) -> list[Transposition]:
    return [Transposition(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def brute_sigma(n: int, k: int) -> list[Chain]:
    """Independent oracle: filter every length-k step tuple through validate."""
    return [
        chain
        for chain in (
            Chain(n, steps) for steps in product(all_transpositions(n), repeat=k)
        )
        if validate(chain).is_member
    ]


@lru_cache(maxsize=None)
def sigma(n: int, k: int) -> tuple[Chain, ...]:
    return tuple(enumerate_sigma(n, k))


@lru_cache(maxsize=None)
def sigma_all(n: int) -> tuple[Chain, ...]:
    return tuple(c for k in range(n) for c in sigma(n, k))


def sorted_i_chains(n: int, k: int):
    """Every length-k step sequence whose i-entries never decrease."""
    prefix: list[Transposition] = []

    def extend(min_i: int):
        if len(prefix) == k:
            yield Chain(n, tuple(prefix))
            return
        for i in range(min_i, n):
            for j in range(i + 1, n + 1):
                prefix.append(Transposition(i, j))
                yield from extend(i)
                prefix.pop()

    yield from extend(1)


def apply_word(chain: Chain, word) -> Chain:
    for l in word:
        chain = apply_generator(chain, l)
    return chain


def adjacent_transposition(l: int, k: int) -> Permutation:
    images = list(range(1, k + 1))
    images[l - 1], images[l] = images[l], images[l - 1]
    return Permutation(tuple(images))


def perm_of_word(word, k: int) -> Permutation:
    """The position permutation whose action equals applying ``word`` in order."""
    p = Permutation.identity(k)
    for l in word:
        p = adjacent_transposition(l, k) * p
    return p


def act_on_sequence(p: Permutation, seq):
    """The natural action on sequences: slot x receives seq[p^-1(x)]."""
    inv = p.inverse()
    return tuple(seq[inv(x) - 1] for x in range(1, len(seq) + 1))


@st.composite
def permutations_st(draw, min_n: int = 1, max_n: int = 8) -> Permutation:
    n = draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(list(range(1, n + 1))))))


@st.composite
def parking_inputs_st(draw, min_n: int = 1, max_n: int = 12, max_k: int = 6) -> ParkingInput:
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(0, min(max_k, n - 1)))
    entries = tuple(draw(st.lists(st.integers(1, n), min_size=k, max_size=k)))
    opens = draw(st.sets(st.integers(1, n), min_size=k + 1, max_size=k + 1))
    return ParkingInput(n, entries, frozenset(opens))
