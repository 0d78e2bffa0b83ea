"""Staged enumeration search for a girth-maximum (m, r) BTU.

With m = b * k^(r-1), the construction grows a BTU one slot at a time:

  stage 2   [identity, rotation] at degree b*k
  stage i   scale every slot by k (degree becomes b*k^(i-1)), rebase so
            slot i-1 is the identity, then jointly pick a rotation for
            slot i and a k-scaled single-cycle candidate for slot i-2
            that maximise the girth of the stage BTU.

Rotations are drawn from the offsets j with min(j, n-j) above the stage
threshold and gcd(j, n) = 1.  Because that set is often empty at small
n, the relaxed policy widens in two recorded steps: first to all
coprime offsets, then to the full single-cycle candidate set (of which
rotations are the circulant members, so the single-part partition for
the final slot pair is preserved either way).

Candidate evaluation is a pure function of (stage prefix, final slot,
word); the reduction keeps the maximum girth with lexicographic
tie-break, so results are identical for any worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

from . import _kernel
from .btu import BTU, in_Z, in_phi, make_btu
from .parameters import (
    DegenerateFactorizationError,
    Factorization,
    closed_form_partitions,
    factorize,
    optimal_partitions,
)
from .perms import (
    BTUError,
    CompatibilityError,
    PartitionP2,
    Permutation,
    circular_rotation,
    compose,
    identity,
    invert,
    scale_permutation,
    union_cycle_partition,
)
from .searchspace import CandidateWord, enumerate_candidates

ENUM_FALLBACK = "enum"  # rotation_j marker: final slot was enumerated


class StageDeadEndError(BTUError):
    def __init__(self, stage: int, detail: str):
        self.stage = stage
        super().__init__(f"stage {stage} dead end: {detail}")


@dataclass(frozen=True)
class SearchConfig:
    mode: str = "best"  # "best" | "exhaustive"
    rotation_policy: str = "relaxed"  # "strict" | "relaxed"
    worker_count: int = 1
    candidate_cap: int | None = None

    def __post_init__(self):
        if self.mode not in ("best", "exhaustive"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.rotation_policy not in ("strict", "relaxed"):
            raise ValueError(f"unknown rotation policy {self.rotation_policy!r}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        if self.candidate_cap is not None and self.candidate_cap < 1:
            raise ValueError("candidate_cap must be >= 1")


@dataclass(frozen=True)
class StageTrace:
    stage: int
    n: int
    rotation_j: int | str | None
    candidates_evaluated: int
    best_girth: int
    best_candidate_word: CandidateWord | None = None


@dataclass(frozen=True)
class SearchResult:
    factorization: Factorization
    btu: BTU
    girth: int
    traces: tuple[StageTrace, ...]
    config_echo: SearchConfig


def admissible_rotations(n: int, threshold: int) -> list[int]:
    """Offsets j in [1, n-1] with min(j, n-j) > threshold and gcd(j, n) = 1.

    Coprimality of j and n forces gcd(j, n-j) = gcd(n-j, n) = 1 as well,
    so the whole triple (j, n, n-j) is pairwise coprime.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return [
        j for j in range(1, n) if min(j, n - j) > threshold and gcd(j, n) == 1
    ]


def _coprime_rotations(n: int) -> list[int]:
    return [j for j in range(1, n) if gcd(j, n) == 1]


def _compatible_images(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x != y for x, y in zip(a, b))


def _girth_of_perms(perms: Sequence[Permutation], n: int) -> int | None:
    return _kernel.girth_of_images([p.image for p in perms], n)


@dataclass(frozen=True)
class _Member:
    """One beam entry: a stage BTU prefix plus its lexicographic path key."""

    key: tuple
    perms: tuple[Permutation, ...]


def _stage2(f: Factorization, config: SearchConfig) -> tuple[_Member, StageTrace]:
    n = f.b * f.k
    adm = admissible_rotations(n, f.b)
    if adm:
        j = adm[0]
        marker: int | str = j
    elif config.rotation_policy == "strict":
        raise StageDeadEndError(2, f"no admissible rotation at n={n}, threshold={f.b}")
    else:
        j = _coprime_rotations(n)[0]
        marker = f"relaxed-gcd:{j}"
    perms = (identity(n), circular_rotation(n, j))
    g = _girth_of_perms(perms, n)
    assert g is not None
    trace = StageTrace(
        stage=2, n=n, rotation_j=marker, candidates_evaluated=1, best_girth=g
    )
    return _Member(key=(), perms=perms), trace


def _finals_for_level(
    n: int, threshold: int, level: int, cap: int | None
) -> list[tuple[int | str, Permutation]]:
    """(marker, permutation) choices for the newest slot at a policy level."""
    if level == 0:
        return [(j, circular_rotation(n, j)) for j in admissible_rotations(n, threshold)]
    if level == 1:
        return [
            (f"relaxed-gcd:{j}", circular_rotation(n, j))
            for j in _coprime_rotations(n)
        ]
    return [
        (ENUM_FALLBACK, q)
        for q in enumerate_candidates(identity(n), limit=cap)
    ]


@dataclass
class _Evaluation:
    girth: int
    key: tuple
    perms: tuple[Permutation, ...]
    marker: int | str
    word: tuple[int, ...]


def _evaluate_chunk(
    member: _Member,
    final_idx: int,
    marker: int | str,
    final_perm: Permutation,
    words: list[tuple[int, ...]],
    word_lo: int,
    word_hi: int,
    candidates: list[Permutation],
    replace_at: int,
    required_left_beta: PartitionP2 | None,
    n: int,
) -> tuple[int, list[_Evaluation]]:
    """Evaluate one (member, final, word-range) block.

    Returns (number of configurations whose girth was computed, list of
    the block's co-maximal evaluations).
    """
    base = member.perms
    others = [p.image for t, p in enumerate(base) if t != replace_at]
    final_img = final_perm.image
    if any(not _compatible_images(final_img, img) for img in others):
        return 0, []
    left_img = base[replace_at - 1].image if replace_at > 0 else None
    best: list[_Evaluation] = []
    best_g = -1
    evaluated = 0
    for widx in range(word_lo, word_hi):
        cand = candidates[widx]
        cimg = cand.image
        if not _compatible_images(cimg, final_img):
            continue
        if any(not _compatible_images(cimg, img) for img in others):
            continue
        if required_left_beta is not None:
            left = union_cycle_partition(base[replace_at - 1], cand)
            if left != required_left_beta:
                continue
        perms = base[:replace_at] + (cand,) + base[replace_at + 1 :] + (final_perm,)
        g = _girth_of_perms(perms, n)
        assert g is not None
        evaluated += 1
        if g > best_g:
            best_g = g
            best = []
        if g == best_g:
            best.append(
                _Evaluation(
                    girth=g,
                    key=member.key + (final_idx, words[widx]),
                    perms=perms,
                    marker=marker,
                    word=words[widx],
                )
            )
    return evaluated, best


def _run_stage(
    beam: list[_Member],
    stage: int,
    f: Factorization,
    config: SearchConfig,
) -> tuple[list[_Member], StageTrace]:
    b, k = f.b, f.k
    n = b * k ** (stage - 1)
    d = b * k ** (stage - 2)
    replace_at = stage - 3  # 0-based index of slot stage-2
    # For stage >= 4 the replaced slot also has a left neighbour whose
    # pair partition must stay on the stage-optimal sequence.
    required_left_beta = (
        closed_form_partitions(b, k, stage)[stage - 4] if stage >= 4 else None
    )

    words = list(
        itertools.islice(
            itertools.permutations(range(1, d)), config.candidate_cap
        )
    )
    candidates = [
        scale_permutation(q, k)
        for q in enumerate_candidates(identity(d), limit=config.candidate_cap)
    ]

    prepared: list[_Member] = []
    for member in beam:
        scaled = tuple(scale_permutation(p, k) for p in member.perms)
        inv = invert(scaled[stage - 2])
        prepared.append(
            _Member(key=member.key, perms=tuple(compose(p, inv) for p in scaled))
        )

    levels = [0] if config.rotation_policy == "strict" else [0, 1, 2]
    attempted_total = 0
    for level in levels:
        finals = _finals_for_level(n, d, level, config.candidate_cap)
        if not finals:
            continue
        attempted = len(prepared) * len(finals) * len(words)
        chunk_size = max(1, len(words) // max(1, 4 * config.worker_count))
        tasks = []
        for member in prepared:
            for final_idx, (marker, final_perm) in enumerate(finals):
                for lo in range(0, len(words), chunk_size):
                    hi = min(len(words), lo + chunk_size)
                    tasks.append(
                        (
                            member,
                            final_idx,
                            marker,
                            final_perm,
                            words,
                            lo,
                            hi,
                            candidates,
                            replace_at,
                            required_left_beta,
                            n,
                        )
                    )
        if config.worker_count > 1:
            with ThreadPoolExecutor(max_workers=config.worker_count) as pool:
                outcomes = list(pool.map(lambda t: _evaluate_chunk(*t), tasks))
        else:
            outcomes = [_evaluate_chunk(*t) for t in tasks]
        evaluated = sum(count for count, _ in outcomes)
        attempted_total += attempted
        if evaluated == 0:
            continue

        best_g = max(ev.girth for _, evs in outcomes for ev in evs)
        winners = sorted(
            (ev for _, evs in outcomes for ev in evs if ev.girth == best_g),
            key=lambda ev: ev.key,
        )
        if config.mode == "best":
            winners = winners[:1]
        else:
            deduped: dict[tuple, _Evaluation] = {}
            for ev in winners:
                deduped.setdefault(tuple(p.image for p in ev.perms), ev)
            winners = list(deduped.values())
        top = winners[0]
        trace = StageTrace(
            stage=stage,
            n=n,
            rotation_j=top.marker,
            candidates_evaluated=attempted_total,
            best_girth=best_g,
            best_candidate_word=CandidateWord(n=d, word=Permutation(top.word)),
        )
        return [_Member(key=ev.key, perms=ev.perms) for ev in winners], trace

    raise StageDeadEndError(
        stage,
        f"no compatible (rotation, candidate) configuration at n={n} "
        f"under {config.rotation_policy} policy",
    )


def search(m: int, r: int, config: SearchConfig | None = None) -> SearchResult:
    """Run the staged search; see the module docstring for the plan."""
    config = config or SearchConfig()
    f = factorize(m, r)
    if r >= 3 and f.degenerate:
        raise DegenerateFactorizationError(
            f"m={m}, r={r}: k=1, enumeration search inapplicable"
        )
    member, trace = _stage2(f, config)
    beam = [member]
    traces = [trace]
    for stage in range(3, r + 1):
        beam, trace = _run_stage(beam, stage, f, config)
        traces.append(trace)
    winner = beam[0]
    result_btu = make_btu(winner.perms)
    betas = optimal_partitions(f).betas
    if not in_phi(result_btu, betas):
        raise AssertionError(
            "search produced a BTU off the optimal partition sequence"
        )
    return SearchResult(
        factorization=f,
        btu=result_btu,
        girth=traces[-1].best_girth,
        traces=tuple(traces),
        config_echo=config,
    )


def enumerate_Z(m: int, r: int, cap: int | None = None) -> Iterator[BTU]:
    """All BTUs of the fully scaled family, in lexicographic order.

    Slot j <= r-2 ranges over k^(r-1-j)-fold scalings of single-cycle
    candidates of degree b*k^j, slot r-1 is the identity, and slot r
    ranges over single-cycle candidates of degree m; combinations that
    fail pairwise compatibility or leave the optimal partition sequence
    are dropped, so every yielded BTU is a family member.
    """
    f = factorize(m, r)
    if f.degenerate:
        raise DegenerateFactorizationError(
            f"m={m}, r={r}: k=1, family enumeration inapplicable"
        )
    b, k = f.b, f.k
    scaled_slots = [
        [
            scale_permutation(q, k ** (r - 1 - j))
            for q in enumerate_candidates(identity(b * k**j))
        ]
        for j in range(1, r - 1)
    ]
    yielded = 0
    for combo in itertools.product(*scaled_slots):
        for last in enumerate_candidates(identity(m)):
            perms = (*combo, identity(m), last)
            try:
                candidate = make_btu(perms)
            except CompatibilityError:
                continue
            if not in_Z(candidate, f):
                continue
            yield candidate
            yielded += 1
            if cap is not None and yielded >= cap:
                return
