"""Exhaustive generation of trees and caterpillars for a degree sequence.

Labeled trees with vertex i of degree d_i are exactly the Pruefer words in
which label i appears d_i - 1 times, so generating all distinct multiset
permutations of one such word and deduplicating decoded trees by canonical
code yields every unlabeled realization exactly once. The predicted labeled
count (n-2)! / prod (d_i - 1)! is checked against a budget before any work
starts: refusing is an error, never a truncation, because a partial
enumeration would silently break the theorem sweeps built on top.
"""

import math
from dataclasses import dataclass
from typing import Iterator

from .canonical import canonical_form
from .caterpillars import Caterpillar, caterpillar_canonical
from .degrees import DegreeSequence
from .errors import BudgetExceeded, NoInternalVertices
from .prufer import prufer_decode
from .trees import Tree, path_tree, star_tree


@dataclass(frozen=True)
class EnumerationBudget:
    """Caps enforced before generation begins."""

    max_labeled: int = 10_000_000
    max_n: int = 16

    def __post_init__(self):
        if self.max_labeled < 1 or self.max_n < 1:
            raise ValueError("budget caps must be positive")


DEFAULT_BUDGET = EnumerationBudget()


def count_labeled_trees(ds: DegreeSequence) -> int:
    """Number of labeled trees where vertex i has degree d_i."""
    if ds.n < 2:
        raise ValueError("labeled count needs n >= 2")
    denom = 1
    for d in ds.degrees:
        denom *= math.factorial(d - 1)
    return math.factorial(ds.n - 2) // denom


def lexicographic_multiset_permutations(word: list[int]) -> Iterator[tuple[int, ...]]:
    """All distinct permutations of word in lexicographic order."""
    current = sorted(word)
    m = len(current)
    if m == 0:
        yield ()
        return
    while True:
        yield tuple(current)
        # Classic next-permutation step.
        i = m - 2
        while i >= 0 and current[i] >= current[i + 1]:
            i -= 1
        if i < 0:
            return
        j = m - 1
        while current[j] <= current[i]:
            j -= 1
        current[i], current[j] = current[j], current[i]
        current[i + 1 :] = reversed(current[i + 1 :])


def enumerate_trees(
    ds: DegreeSequence, budget: EnumerationBudget = DEFAULT_BUDGET
) -> Iterator[Tree]:
    """One representative per isomorphism class of trees realizing ds.

    Output order is first-seen order under lexicographic Pruefer words, so
    repeated runs are byte-identical.
    """
    if ds.n > budget.max_n:
        raise BudgetExceeded(
            f"n={ds.n} exceeds full-enumeration cap {budget.max_n}", ds.n
        )
    if ds.n == 1:
        yield Tree(1, [])
        return
    if ds.n == 2:
        yield path_tree(2)
        return
    if ds.k == 1:
        yield star_tree(ds.n)
        return
    predicted = count_labeled_trees(ds)
    if predicted > budget.max_labeled:
        raise BudgetExceeded(
            f"predicted {predicted} labeled trees exceeds budget {budget.max_labeled}",
            predicted,
        )
    word: list[int] = []
    for i, d in enumerate(ds.degrees):
        word.extend([i] * (d - 1))
    seen: set[str] = set()
    for seq in lexicographic_multiset_permutations(word):
        t = prufer_decode(list(seq), ds.n)
        code = canonical_form(t)
        if code not in seen:
            seen.add(code)
            yield t


def enumerate_caterpillars(ds: DegreeSequence) -> Iterator[Caterpillar]:
    """All caterpillars realizing ds, one per isomorphism class.

    These are the distinct multiset permutations of (d_1 - 2, ..., d_k - 2)
    modulo reversal; each class is yielded in its canonical orientation, in
    first-seen order under lexicographic permutations.
    """
    if ds.k == 0:
        raise NoInternalVertices(f"no internal vertices in {ds}")
    pendants = [d - 2 for d in ds.internal]
    seen: set[tuple[int, ...]] = set()
    for perm in lexicographic_multiset_permutations(pendants):
        canon = caterpillar_canonical(perm)
        if canon not in seen:
            seen.add(canon)
            yield Caterpillar(canon)


def count_caterpillar_arrangements(ds: DegreeSequence) -> int:
    """Distinct multiset permutations of the pendant vector (before mirror
    dedupe); the cost predictor for caterpillar searches."""
    if ds.k == 0:
        raise NoInternalVertices(f"no internal vertices in {ds}")
    pendants = [d - 2 for d in ds.internal]
    total = math.factorial(len(pendants))
    for value in set(pendants):
        total //= math.factorial(pendants.count(value))
    return total


def enumerate_degree_sequences(n: int) -> Iterator[DegreeSequence]:
    """All tree degree sequences of order n, lexicographically decreasing.

    These are the partitions of 2(n - 1) into exactly n parts >= 1 (each part
    at most n - 1), emitted largest-first.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        yield DegreeSequence((0,))
        return
    if n == 2:
        yield DegreeSequence((1, 1))
        return

    target = 2 * (n - 1)

    def parts(remaining: int, slots: int, cap: int, prefix: list[int]):
        if slots == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        # Each of the remaining slots takes at least 1.
        lo = max(1, remaining - (slots - 1) * cap)
        hi = min(cap, remaining - (slots - 1))
        for d in range(hi, lo - 1, -1):
            prefix.append(d)
            yield from parts(remaining - d, slots - 1, d, prefix)
            prefix.pop()

    for degrees in parts(target, n, n - 1, []):
        yield DegreeSequence(degrees)
