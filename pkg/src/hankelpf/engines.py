"""Exact engines: hyperdeterminants, (hyper)pfaffians, hyperhafnians,
minors, Laplace expansion, block-array flattening, and the minor
summation construction.

Design notes that matter for reading this file:

* No division anywhere. Scalars may be polynomials, so all algorithms
  are expansion-based; the usual 1/n! prefactors are removed by fixing
  the block order of the first summation slot (see hyperpfaffian).
* Integer entries stay plain ints throughout. The engines only use +,
  *, and negation, so exact types never degrade and int inputs never
  get wrapped in Fraction.
* Signs are ints multiplied in separately, never scalar powers.
"""

from __future__ import annotations

import itertools

from .blocks import (_canonical_blocks_unsigned, enum_block_perms,
                     enum_canonical_blocks)
from .errors import (BoundsError, CardinalityMismatch,
                     CardinalityNotMultipleOfL, OddBlockLength, OddDimension,
                     OddSize, ShapeMismatch)
from .tensors import BlockArray, Tensor


def _cubic_size(A: Tensor) -> int:
    sizes = set(A.shape)
    if len(sizes) != 1:
        raise ShapeMismatch(f"need a cubic tensor, got shape {A.shape}")
    return sizes.pop()


def hyperdet(A: Tensor):
    """Even-dimensional hyperdeterminant.

    Sum over (m-1)-tuples of permutations of the column axes, sign of
    their product, times the diagonal-style product down the first
    axis. Implemented as a dynamic program over tuples of column
    bitmasks, one mask per column axis, filling rows top to bottom.
    """
    m = A.m
    if m % 2 != 0:
        raise OddDimension(f"hyperdeterminant needs even dimension, got m={m}")
    n = _cubic_size(A)
    rows: list[list] = [[] for _ in range(n + 1)]
    for idx, v in A.entries.items():
        rows[idx[0]].append((idx[1:], v))
    slots = m - 1
    cur = {(0,) * slots: 1}
    for i in range(1, n + 1):
        nxt: dict = {}
        row = rows[i]
        if not row:
            return 0
        for state, acc in cur.items():
            for cols, v in row:
                sign = 1
                new_state = list(state)
                ok = True
                for k in range(slots):
                    j = cols[k] - 1
                    mask = new_state[k]
                    bit = 1 << j
                    if mask & bit:
                        ok = False
                        break
                    if (mask >> (j + 1)).bit_count() & 1:
                        sign = -sign
                    new_state[k] = mask | bit
                if not ok:
                    continue
                term = acc * v
                if sign < 0:
                    term = -term
                key = tuple(new_state)
                if key in nxt:
                    nxt[key] = nxt[key] + term
                else:
                    nxt[key] = term
        cur = nxt
    full = (1 << n) - 1
    return cur.get((full,) * slots, 0)


def det_matrix(rows):
    """Ordinary determinant of a square list-of-lists, division-free."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ShapeMismatch("determinant needs a square matrix")
    cur = {0: 1}
    for i in range(n):
        nxt: dict = {}
        row = rows[i]
        for mask, acc in cur.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                v = row[j]
                if v == 0:
                    continue
                term = acc * v
                if (mask >> (j + 1)).bit_count() & 1:
                    term = -term
                key = mask | bit
                if key in nxt:
                    nxt[key] = nxt[key] + term
                else:
                    nxt[key] = term
        cur = nxt
    return cur.get((1 << n) - 1, 0)


class ExteriorElement:
    """Element of the (m-1)-fold product of exterior algebras.

    terms maps (m-1)-tuples of sorted index tuples to scalars. The
    product concatenates slotwise with the anticommutation sign and
    kills overlapping slots.
    """

    __slots__ = ("slots", "terms")

    def __init__(self, slots: int, terms=None):
        self.slots = slots
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def _merge(s, t):
        """Concatenate sorted tuples; (merged, sign) or (None, 0)."""
        inversions = 0
        for b in t:
            for a in s:
                if a == b:
                    return None, 0
                if a > b:
                    inversions += 1
        return tuple(sorted(s + t)), -1 if inversions % 2 else 1

    def __mul__(self, other):
        if not isinstance(other, ExteriorElement) or other.slots != self.slots:
            return NotImplemented
        out: dict = {}
        for key1, c1 in self.terms.items():
            for key2, c2 in other.terms.items():
                sign = 1
                merged = []
                for s, t in zip(key1, key2):
                    st, sg = self._merge(s, t)
                    if sg == 0:
                        break
                    sign *= sg
                    merged.append(st)
                else:
                    term = c1 * c2
                    if sign < 0:
                        term = -term
                    key = tuple(merged)
                    if key in out:
                        out[key] = out[key] + term
                    else:
                        out[key] = term
        return ExteriorElement(self.slots, out)


def hyperdet_via_exterior(A: Tensor):
    """Independent oracle for hyperdet, via anticommuting symbols.

    Builds one generator per row, multiplies them in the (m-1)-fold
    exterior product, and reads off the coefficient of the full wedge.
    """
    m = A.m
    if m % 2 != 0:
        raise OddDimension(f"hyperdeterminant needs even dimension, got m={m}")
    n = _cubic_size(A)
    slots = m - 1
    rows: list[dict] = [dict() for _ in range(n + 1)]
    for idx, v in A.entries.items():
        key = tuple((j,) for j in idx[1:])
        rows[idx[0]][key] = v
    acc = ExteriorElement(slots, {((),) * slots: 1})
    for i in range(1, n + 1):
        acc = acc * ExteriorElement(slots, rows[i])
        if not acc.terms:
            return 0
    full = tuple(range(1, n + 1))
    return acc.terms.get((full,) * slots, 0)


def minor_tensor(A: Tensor, index_lists) -> Tensor:
    """Restrict each axis to the given index list, order preserved.

    Lists may be unsorted (the hyper-minor identities need arbitrary
    row sequences); all must share one cardinality.
    """
    index_lists = [tuple(lst) for lst in index_lists]
    if len(index_lists) != A.m:
        raise CardinalityMismatch(
            f"got {len(index_lists)} index lists for an {A.m}-axis tensor")
    cards = {len(lst) for lst in index_lists}
    if len(cards) != 1:
        raise CardinalityMismatch(
            f"index lists have mixed cardinalities {sorted(cards)}")
    r = cards.pop()
    for axis, (lst, s) in enumerate(zip(index_lists, A.shape)):
        for i in lst:
            if not isinstance(i, int) or not 1 <= i <= s:
                raise BoundsError(f"index {i} out of [1,{s}] on axis {axis + 1}")
    out = Tensor((r,) * A.m)
    for pos in itertools.product(range(r), repeat=A.m):
        src = tuple(index_lists[k][pos[k]] for k in range(A.m))
        v = A.entries.get(src, 0)
        if v != 0:
            out.entries[tuple(p + 1 for p in pos)] = v
    return out


def hyperdet_laplace(A: Tensor, subset):
    """Hyperdeterminant via expansion along the row subset `subset`.

    Splits the rows into `subset` and its complement, sums minor times
    signed complementary minor over all column-axis subsets.
    """
    m = A.m
    if m % 2 != 0:
        raise OddDimension(f"hyperdeterminant needs even dimension, got m={m}")
    n = _cubic_size(A)
    subset = tuple(subset)
    seen = set()
    weight = 0
    for j in subset:
        if not isinstance(j, int) or not 1 <= j <= n or j in seen:
            raise BoundsError(f"{subset} is not a subset of [{n}]")
        seen.add(j)
        weight += j
    rest = tuple(j for j in range(1, n + 1) if j not in seen)
    r = len(subset)
    total = 0
    col_subsets = list(itertools.combinations(range(1, n + 1), r))
    for combo in itertools.product(col_subsets, repeat=m - 1):
        a = hyperdet(minor_tensor(A, (subset,) + combo))
        if a == 0:
            continue
        sign = weight
        co_axes = [rest]
        for cols in combo:
            sign += sum(cols)
            co_axes.append(tuple(j for j in range(1, n + 1) if j not in cols))
        cof = hyperdet(minor_tensor(A, co_axes))
        if cof == 0:
            continue
        term = a * cof
        if sign % 2:
            term = -term
        total = total + term
    return total


def _upper_from_input(M, size):
    """Normalize pfaffian input to (upper-triangle dict, size)."""
    if isinstance(M, BlockArray):
        if M.l != 2 or M.m != 1:
            raise ShapeMismatch(
                "pfaffian needs a 2-block array with one slot; "
                "use hyperpfaffian for anything bigger")
        return {key[0]: v for key, v in M.entries.items()}, M.size
    if isinstance(M, dict):
        upper = {}
        top = 0
        for (i, j), v in M.items():
            if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j):
                raise BoundsError(f"upper-triangle key ({i},{j}) needs 1 <= i < j")
            upper[(i, j)] = v
            top = max(top, j)
        return upper, size if size is not None else top
    # square matrix rows; only the upper triangle is read
    rows = [list(r) for r in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ShapeMismatch("pfaffian matrix must be square")
    upper = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != 0:
                upper[(i + 1, j + 1)] = rows[i][j]
    return upper, size if size is not None else n


def pfaffian(M, size=None):
    """Classical Pfaffian, memoized expansion along the smallest index.

    Accepts an upper-triangle dict {(i,j): value} with i<j, a square
    antisymmetric matrix (upper triangle read), or a one-slot 2-block
    array. Runs in O(size * 2^size), fine through size 20.
    """
    upper, n = _upper_from_input(M, size)
    if n % 2:
        raise OddSize(f"pfaffian needs even size, got {n}")
    for (i, j) in upper:
        if j > n:
            raise BoundsError(f"entry ({i},{j}) outside size {n}")
    memo = {0: 1}

    def pf(mask):
        if mask in memo:
            return memo[mask]
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        total = 0
        sign = 1
        sub = rest
        while sub:
            j = (sub & -sub).bit_length() - 1
            sub &= sub - 1
            v = upper.get((low + 1, j + 1))
            if v is not None and v != 0:
                term = v * pf(rest & ~(1 << j))
                if sign < 0:
                    term = -term
                total = total + term
            sign = -sign
        memo[mask] = total
        return total

    return pf((1 << n) - 1)


def _require_even_block(B: BlockArray, signed: bool):
    if signed and B.l % 2 != 0:
        if B.m % 2 == 0:
            raise OddBlockLength(
                f"pfaffian-type sum needs even block length, got l={B.l}")
        return True  # odd l, odd m: reordering blocks flips the sign
    return False


def hyperpfaffian(B: BlockArray):
    """Signed block-partition expansion of a block array.

    The defining sum carries 1/n!; here the first slot runs over block
    orders sorted by minimum instead, which picks exactly one member of
    each n!-orbit. Valid because reordering the blocks of an even-l
    partition never changes its sign (tested exhaustively against the
    literal definition).
    """
    if _require_even_block(B, signed=True):
        return 0
    n = B.n
    if n == 0:
        return 1
    entries = B.entries
    total = 0
    if B.m == 1:
        for bp in enum_canonical_blocks(B.l, n):
            prod = bp.sign
            for blk in bp.blocks:
                v = entries.get((blk,))
                if v is None:
                    prod = None
                    break
                prod = prod * v
            if prod is not None:
                total = total + prod
        return total
    rest_list = list(enum_block_perms(B.l, n))
    for bp1 in enum_canonical_blocks(B.l, n):
        for others in itertools.product(rest_list, repeat=B.m - 1):
            sign = bp1.sign
            for o in others:
                sign *= o.sign
            prod = sign
            for k in range(n):
                key = (bp1.blocks[k],) + tuple(o.blocks[k] for o in others)
                v = entries.get(key)
                if v is None:
                    prod = None
                    break
                prod = prod * v
            if prod is not None:
                total = total + prod
    return total


def hyperhafnian(B: BlockArray):
    """Unsigned companion of hyperpfaffian; any block length."""
    n = B.n
    if n == 0:
        return 1
    entries = B.entries
    total = 0
    if B.m == 1:
        for blocks in _canonical_blocks_unsigned(B.l, n):
            prod = 1
            for blk in blocks:
                v = entries.get((blk,))
                if v is None:
                    prod = None
                    break
                prod = prod * v
            if prod is not None:
                total = total + prod
        return total
    rest_list = [bp.blocks for bp in enum_block_perms(B.l, n)]
    for blocks1 in _canonical_blocks_unsigned(B.l, n):
        for others in itertools.product(rest_list, repeat=B.m - 1):
            prod = 1
            for k in range(n):
                key = (blocks1[k],) + tuple(o[k] for o in others)
                v = entries.get(key)
                if v is None:
                    prod = None
                    break
                prod = prod * v
            if prod is not None:
                total = total + prod
    return total


def restrict_block_array(B: BlockArray, subsets) -> BlockArray:
    """Relabel B onto the sorted subsets, one per slot."""
    subsets = [tuple(sorted(P)) for P in subsets]
    if len(subsets) != B.m:
        raise CardinalityMismatch(
            f"got {len(subsets)} subsets for {B.m} slots")
    cards = {len(P) for P in subsets}
    if len(cards) != 1:
        raise CardinalityNotMultipleOfL(
            f"subsets have mixed cardinalities {sorted(cards)}")
    lr = cards.pop()
    if lr % B.l:
        raise CardinalityNotMultipleOfL(
            f"cardinality {lr} is not a multiple of block length {B.l}")
    for P in subsets:
        if len(set(P)) != len(P):
            raise BoundsError(f"{P} repeats an index")
        for i in P:
            if not isinstance(i, int) or not 1 <= i <= B.size:
                raise BoundsError(f"index {i} out of [1,{B.size}]")
    out = BlockArray(B.l, B.m, lr)
    block_choices = [list(itertools.combinations(P, B.l)) for P in subsets]
    pos = [{e: k + 1 for k, e in enumerate(P)} for P in subsets]
    for key in itertools.product(*block_choices):
        v = B.entries.get(key)
        if v is not None:
            new_key = tuple(tuple(pos[s][e] for e in key[s])
                            for s in range(B.m))
            out.entries[new_key] = v
    return out


def subhyperpfaffian(B: BlockArray, subsets):
    """Hyperpfaffian of B restricted to one sorted subset per slot."""
    return hyperpfaffian(restrict_block_array(B, subsets))


def flatten_matsumoto(B: BlockArray) -> BlockArray:
    """Fold the m slots into one long block, shifting slot s by (s-1)*size.

    The result is a one-slot array with block length l*m on l*m*n
    points, and its hyperpfaffian equals the original one.
    """
    if B.l % 2 != 0:
        raise OddBlockLength(
            f"flattening needs even block length, got l={B.l}")
    n = B.n
    size = B.size
    out = BlockArray(B.l * B.m, 1, B.l * B.m * n)
    for key, v in B.entries.items():
        long_block = []
        for s, blk in enumerate(key):
            long_block.extend(size * s + i for i in blk)
        out.entries[(tuple(long_block),)] = v
    return out


def _check_msf_shapes(A: BlockArray, H):
    r = A.m
    if len(H) != r:
        raise ShapeMismatch(f"A has {r} slots but {len(H)} tensors given")
    shapes = {h.shape for h in H}
    if len(shapes) != 1:
        raise ShapeMismatch(f"tensors have mixed shapes {shapes}")
    shape = shapes.pop()
    m = len(shape)
    if m < 2:
        raise ShapeMismatch("each tensor needs at least two axes")
    ln = shape[0]
    if any(s != ln for s in shape[:-1]):
        raise ShapeMismatch(f"leading axes must agree, got {shape}")
    if shape[-1] != A.size:
        raise ShapeMismatch(
            f"last axis {shape[-1]} must match the array size {A.size}")
    if ln % A.l:
        raise ShapeMismatch(
            f"leading axis {ln} is not a multiple of block length {A.l}")
    if ln > A.size:
        raise ShapeMismatch(f"need leading axis {ln} <= size {A.size}")
    return r, m, ln, A.size


def msf_build_Q(A: BlockArray, H) -> BlockArray:
    """The pairing array Q of the minor summation identity.

    Q(I-blocks) sums A(K-blocks) against products of hyperdeterminant
    minors of the rectangular tensors, one minor per slot of A.
    """
    r, m, ln, N = _check_msf_shapes(A, H)
    l = A.l
    i_combos = list(itertools.product(
        itertools.combinations(range(1, ln + 1), l), repeat=m - 1))
    k_subsets = list(itertools.combinations(range(1, N + 1), l))
    tables = []
    for s in range(r):
        tbl = {}
        for ic in i_combos:
            for K in k_subsets:
                tbl[(ic, K)] = hyperdet(minor_tensor(H[s], ic + (K,)))
        tables.append(tbl)
    q_entries: dict = {}
    for keyA, a in A.entries.items():
        if a == 0:
            continue
        vecs = [[tables[s][(ic, keyA[s])] for ic in i_combos]
                for s in range(r)]
        for choice in itertools.product(range(len(i_combos)), repeat=r):
            prod = a
            for s, ci in enumerate(choice):
                d = vecs[s][ci]
                if d == 0:
                    prod = None
                    break
                prod = prod * d
            if prod is None:
                continue
            qkey = tuple(itertools.chain.from_iterable(
                i_combos[ci] for ci in choice))
            if qkey in q_entries:
                q_entries[qkey] = q_entries[qkey] + prod
            else:
                q_entries[qkey] = prod
    out = BlockArray(l, (m - 1) * r, ln)
    out.entries = {k: v for k, v in q_entries.items() if v != 0}
    return out


def msf_lhs(A: BlockArray, H):
    """Direct enumeration side of the minor summation identity."""
    r, m, ln, N = _check_msf_shapes(A, H)
    full = tuple(range(1, ln + 1))
    p_subsets = list(itertools.combinations(range(1, N + 1), ln))
    det_tables = []
    for s in range(r):
        det_tables.append({
            P: hyperdet(minor_tensor(H[s], (full,) * (m - 1) + (P,)))
            for P in p_subsets})
    total = 0
    for Ps in itertools.product(p_subsets, repeat=r):
        prod = None
        for s in range(r):
            d = det_tables[s][Ps[s]]
            if d == 0:
                prod = None
                break
            prod = d if prod is None else prod * d
        if prod is None:
            continue
        pf = subhyperpfaffian(A, Ps)
        if pf == 0:
            continue
        total = total + pf * prod
    return total
