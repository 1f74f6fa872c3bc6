"""Index combinatorics: subsets, ordered block partitions with signs.

Everything works on 1-based indices, matching the usual row/column
labelling of matrices. Subsets are sorted tuples of ints. Streams are
generators in lexicographic order of the concatenated word, so runs are
reproducible and nothing factorial-sized is materialized.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BoundsError, NotAPermutation, OddBlockLength


@dataclass(frozen=True)
class SignedBlockPermutation:
    """An ordered partition of [ln] into n sorted blocks of size l.

    The sign is the permutation sign of the concatenated one-line word.
    """

    blocks: tuple[tuple[int, ...], ...]
    sign: int

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.blocks))


def enum_subsets(n: int, l: int):
    """All l-element subsets of {1..n} as sorted tuples, lex order."""
    if not 0 <= l <= n:
        raise BoundsError(f"need 0 <= l <= n, got l={l}, n={n}")
    return itertools.combinations(range(1, n + 1), l)


def perm_sign(word) -> int:
    """Sign of a permutation of {1..N} given in one-line notation."""
    word = tuple(word)
    n = len(word)
    seen = [False] * (n + 1)
    for w in word:
        if not isinstance(w, int) or not 1 <= w <= n or seen[w]:
            raise NotAPermutation(f"{word} is not a permutation of [{n}]")
        seen[w] = True
    visited = [False] * (n + 1)
    sign = 1
    for start in range(1, n + 1):
        if visited[start]:
            continue
        length = 0
        j = start
        while not visited[j]:
            visited[j] = True
            j = word[j - 1]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def complement_with_sign(subset, n: int):
    """([n] minus subset, (-1)^(sum of the subset's elements))."""
    subset = tuple(subset)
    chosen = set()
    total = 0
    for j in subset:
        if not isinstance(j, int) or not 1 <= j <= n or j in chosen:
            raise BoundsError(f"{subset} is not a subset of [{n}]")
        chosen.add(j)
        total += j
    rest = tuple(j for j in range(1, n + 1) if j not in chosen)
    return rest, (-1) ** (total & 1)


def _tail_inversions(block, rest) -> int:
    """Inversions between a sorted block and the sorted pool after it."""
    count = 0
    for b in block:
        for r in rest:
            if r < b:
                count += 1
            else:
                break
    return count


def _blocks_rec(pool, l, first_fixed, sign):
    """Yield (blocks, sign) partitions of the sorted tuple `pool`.

    first_fixed pins pool[0] into the current block, which restricts the
    stream to partitions whose blocks are ordered by minimal element.
    """
    if not pool:
        yield (), sign
        return
    if first_fixed:
        head = pool[0]
        for tail in itertools.combinations(pool[1:], l - 1):
            block = (head,) + tail
            rest = tuple(x for x in pool if x not in block)
            s = sign if _tail_inversions(block, rest) % 2 == 0 else -sign
            for blocks, total in _blocks_rec(rest, l, True, s):
                yield (block,) + blocks, total
    else:
        for block in itertools.combinations(pool, l):
            rest = tuple(x for x in pool if x not in block)
            s = sign if _tail_inversions(block, rest) % 2 == 0 else -sign
            for blocks, total in _blocks_rec(rest, l, False, s):
                yield (block,) + blocks, total


def enum_block_perms(l: int, n: int):
    """All (ln)!/(l!)^n ordered partitions of [ln] into n sorted l-blocks.

    Lexicographic on the concatenated word; each carries its sign.
    """
    if l < 1 or n < 1:
        raise BoundsError(f"need l >= 1 and n >= 1, got l={l}, n={n}")
    pool = tuple(range(1, l * n + 1))
    for blocks, sign in _blocks_rec(pool, l, False, 1):
        yield SignedBlockPermutation(blocks, sign)


def enum_canonical_blocks(l: int, n: int):
    """Partitions whose blocks are sorted by minimal entry, with signs.

    This is the 1/n!-quotiented family the hyperpfaffian engine sums
    over. Reordering the blocks of an even-length partition never flips
    the sign, so the quotient is well defined only for even l.
    """
    if l % 2 != 0:
        raise OddBlockLength(
            f"canonical blocks need even block length, got l={l}")
    if l < 1 or n < 1:
        raise BoundsError(f"need l >= 1 and n >= 1, got l={l}, n={n}")
    pool = tuple(range(1, l * n + 1))
    for blocks, sign in _blocks_rec(pool, l, True, 1):
        yield SignedBlockPermutation(blocks, sign)


def _canonical_blocks_unsigned(l: int, n: int):
    """Min-ordered partitions without signs; any l. Used by hafnians."""
    if l < 1 or n < 1:
        raise BoundsError(f"need l >= 1 and n >= 1, got l={l}, n={n}")
    pool = tuple(range(1, l * n + 1))
    for blocks, _ in _blocks_rec(pool, l, True, 1):
        yield blocks
