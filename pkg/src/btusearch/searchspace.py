"""The per-stage candidate space: permutations whose union-cycle
partition against a fixed base is the single part (n).

Composing the base with an n-cycle through all points produces exactly
these candidates, and reading the cycle as the visiting order after n
indexes them by words of degree n-1.  That bijection gives the count
(n-1)!, deterministic lexicographic enumeration, and splitting of the
stream into word-index ranges for parallel consumption.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .parameters import DegenerateFactorizationError, Factorization
from .perms import (
    BTUError,
    Permutation,
    compose,
    cycle_type,
    invert,
)


class NotACandidateError(BTUError):
    """The permutation's partition against the base is not single-part."""


@dataclass(frozen=True)
class CandidateWord:
    """An element of the degree-(n-1) symmetric group naming a candidate."""

    n: int
    word: Permutation

    def __post_init__(self):
        if self.word.n != self.n - 1:
            raise ValueError(
                f"word degree {self.word.n} does not index degree-{self.n} candidates"
            )


@dataclass(frozen=True)
class CayleyStats:
    degree_sym: int
    order: int
    node_degree: int
    transition_bound: int


def candidate_count(n: int) -> int:
    """(n-1)!: the number of candidates against any base of degree n."""
    if n < 2:
        raise ValueError(f"need degree >= 2, got {n}")
    return factorial(n - 1)


def _cycle_from_word(word: tuple[int, ...], n: int) -> Permutation:
    """The n-cycle visiting n, word[0], word[1], ..., word[-1], n."""
    image = [0] * n
    image[n - 1] = word[0]
    for t in range(len(word) - 1):
        image[word[t] - 1] = word[t + 1]
    image[word[-1] - 1] = n
    return Permutation(tuple(image))


def unrank_candidate(w: CandidateWord, base: Permutation) -> Permutation:
    """The candidate indexed by w: base composed with w's n-cycle."""
    n = base.n
    if w.n != n:
        raise ValueError(f"degree mismatch: word indexes degree {w.n}, base {n}")
    return compose(base, _cycle_from_word(w.word.image, n))


def rank_candidate(q: Permutation, base: Permutation) -> CandidateWord:
    """The unique word with unrank_candidate(word, base) == q."""
    if q.n != base.n:
        raise ValueError(f"degree mismatch: {q.n} != {base.n}")
    n = base.n
    sigma = compose(invert(base), q)
    if cycle_type(sigma) != [n]:
        raise NotACandidateError(
            f"partition against base is not ({n}): cycle type {sorted(cycle_type(sigma), reverse=True)}"
        )
    word = []
    x = sigma(n)
    while x != n:
        word.append(x)
        x = sigma(x)
    return CandidateWord(n=n, word=Permutation(tuple(word)))


def word_at_index(n: int, index: int) -> tuple[int, ...]:
    """The index-th (0-based) word of degree n-1 in lexicographic order."""
    elems = list(range(1, n))
    word = []
    for pos in range(n - 1, 0, -1):
        f = factorial(pos - 1)
        word.append(elems.pop(index // f))
        index %= f
    return tuple(word)


def enumerate_candidates(
    base: Permutation,
    limit: int | None = None,
    start: int = 0,
) -> Iterator[Permutation]:
    """Candidates in word-lexicographic order.

    `start` and `limit` select a word-index range, so disjoint ranges
    enumerated independently cover the stream deterministically.
    """
    n = base.n
    if n < 2:
        raise ValueError(f"need degree >= 2, got {n}")
    total = candidate_count(n)
    stop = total if limit is None else min(total, start + limit)
    if start >= stop:
        return
    if start == 0:
        words = itertools.islice(itertools.permutations(range(1, n)), stop)
    else:
        words = (word_at_index(n, i) for i in range(start, stop))
    for word in words:
        yield compose(base, _cycle_from_word(word, n))


def cayley_stats(f: Factorization, i: int) -> CayleyStats:
    """Size/degree statistics of the stage-i candidate search space.

    Stage i (1 <= i <= r-2) searches degree b*k^i; the candidate set maps
    onto the symmetric group of degree b*k^i - 1, viewed as a Cayley
    graph whose every node touches b*k^i - 2 others, any node reachable
    within b*k^i optimal transitions.
    """
    if f.degenerate:
        raise DegenerateFactorizationError(f"k=1 for m={f.m}, r={f.r}")
    if not 1 <= i <= f.r - 2:
        raise ValueError(f"stage index must be in 1..{f.r - 2}, got {i}")
    d = f.b * f.k**i
    return CayleyStats(
        degree_sym=d - 1,
        order=factorial(d - 1),
        node_degree=d - 2,
        transition_bound=d,
    )
