"""Sparse exact tensors and antisymmetric block arrays, plus JSON IO.

Both containers keep a dict from 1-based index keys to scalars; missing
keys mean zero. A BlockArray stores only sorted block keys and
synthesizes the sign when asked for a permuted one, so indicator-style
arrays stay tiny.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import BoundsError, ParseError, ShapeMismatch
from .scalars import QuadExt
from .scalars.grammar import QuadContext, format_scalar, parse_scalar


class Tensor:
    """An m-dimensional array; entries: {(i_1..i_m): scalar}, 1-based."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape, entries=None):
        self.shape = tuple(int(s) for s in shape)
        if any(s < 0 for s in self.shape):
            raise ShapeMismatch(f"negative axis in shape {self.shape}")
        self.entries = {}
        if entries:
            for idx, value in (entries.items() if hasattr(entries, "items")
                               else entries):
                self.set(idx, value)

    @property
    def m(self) -> int:
        return len(self.shape)

    @property
    def n(self) -> int:
        sizes = set(self.shape)
        if len(sizes) != 1:
            raise ShapeMismatch(f"tensor is not cubic: shape {self.shape}")
        return sizes.pop()

    @classmethod
    def cube(cls, m: int, n: int, entries=None) -> "Tensor":
        return cls((n,) * m, entries)

    @classmethod
    def from_matrix(cls, rows) -> "Tensor":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged matrix")
        t = cls((len(rows), width))
        for i, row in enumerate(rows, start=1):
            for j, v in enumerate(row, start=1):
                if v != 0:
                    t.set((i, j), v)
        return t

    @classmethod
    def from_function(cls, shape, fn) -> "Tensor":
        t = cls(shape)
        for idx in itertools.product(*(range(1, s + 1) for s in shape)):
            v = fn(*idx)
            if v != 0:
                t.entries[idx] = v
        return t

    def _check(self, idx):
        idx = tuple(idx)
        if len(idx) != len(self.shape):
            raise BoundsError(
                f"index {idx} has {len(idx)} axes, tensor has {self.m}")
        for k, (i, s) in enumerate(zip(idx, self.shape)):
            if not isinstance(i, int) or not 1 <= i <= s:
                raise BoundsError(f"index {idx}: axis {k + 1} out of [1,{s}]")
        return idx

    def get(self, idx):
        return self.entries.get(self._check(idx), 0)

    def set(self, idx, value):
        idx = self._check(idx)
        if value == 0:
            self.entries.pop(idx, None)
        else:
            self.entries[idx] = value

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if self.shape != other.shape:
            return False
        keys = set(self.entries) | set(other.entries)
        return all(self.entries.get(k, 0) == other.entries.get(k, 0)
                   for k in keys)

    __hash__ = None

    def __repr__(self):
        return f"Tensor(shape={self.shape}, {len(self.entries)} entries)"


def _sort_block_signed(block):
    """(sorted tuple, sign) or (None, 0) when an index repeats."""
    block = tuple(block)
    if len(set(block)) != len(block):
        return None, 0
    inversions = sum(1 for a, b in itertools.combinations(block, 2) if a > b)
    return tuple(sorted(block)), -1 if inversions % 2 else 1


class BlockArray:
    """m slots of sorted l-blocks drawn from {1..size}; sparse values.

    Keys of `entries` are m-tuples of strictly increasing l-tuples.
    `get` accepts arbitrary block orderings and applies the alternating
    sign; repeated indices inside a block give zero.
    """

    __slots__ = ("l", "m", "size", "entries")

    def __init__(self, l: int, m: int, size: int, entries=None):
        if l < 1 or m < 1 or size < 0:
            raise ShapeMismatch(f"bad block array shape l={l} m={m} size={size}")
        self.l = l
        self.m = m
        self.size = size
        self.entries = {}
        if entries:
            for key, value in (entries.items() if hasattr(entries, "items")
                               else entries):
                self.set(key, value)

    @property
    def n(self) -> int:
        if self.size % self.l:
            raise ShapeMismatch(
                f"size {self.size} is not a multiple of block length {self.l}")
        return self.size // self.l

    @classmethod
    def from_function(cls, l, m, size, fn) -> "BlockArray":
        b = cls(l, m, size)
        for key in itertools.product(
                itertools.combinations(range(1, size + 1), l), repeat=m):
            v = fn(*key)
            if v != 0:
                b.entries[key] = v
        return b

    def _canonical(self, key):
        key = tuple(tuple(b) for b in key)
        if len(key) != self.m:
            raise BoundsError(f"key {key} has {len(key)} slots, need {self.m}")
        sign = 1
        out = []
        for block in key:
            if len(block) != self.l:
                raise BoundsError(
                    f"block {block} has length {len(block)}, need {self.l}")
            for i in block:
                if not isinstance(i, int) or not 1 <= i <= self.size:
                    raise BoundsError(f"index {i} out of [1,{self.size}]")
            sorted_block, s = _sort_block_signed(block)
            if s == 0:
                return None, 0
            sign *= s
            out.append(sorted_block)
        return tuple(out), sign

    def get(self, key):
        canon, sign = self._canonical(key)
        if sign == 0:
            return 0
        v = self.entries.get(canon, 0)
        return v if sign > 0 else -v

    def set(self, key, value):
        canon, sign = self._canonical(key)
        if sign == 0:
            if value != 0:
                raise BoundsError(
                    f"key {key} repeats an index inside a block; "
                    "its value is identically zero")
            return
        if value == 0:
            self.entries.pop(canon, None)
            return
        self.entries[canon] = value if sign > 0 else -value

    def __eq__(self, other):
        if not isinstance(other, BlockArray):
            return NotImplemented
        if (self.l, self.m, self.size) != (other.l, other.m, other.size):
            return False
        keys = set(self.entries) | set(other.entries)
        return all(self.entries.get(k, 0) == other.entries.get(k, 0)
                   for k in keys)

    __hash__ = None

    def __repr__(self):
        return (f"BlockArray(l={self.l}, m={self.m}, size={self.size}, "
                f"{len(self.entries)} entries)")


# ------------------------------------------------------------------- JSON IO

def _ext_header(values):
    exts = {(v.p, v.r, v.sym) for v in values if isinstance(v, QuadExt)}
    if not exts:
        return None
    if len(exts) > 1:
        raise ShapeMismatch("entries mix different quadratic extensions")
    p, r, sym = exts.pop()
    return {"letter": sym, "p": str(p), "r": str(r)}


def _ext_context(doc):
    ext = doc.get("ext")
    if ext is None:
        return None
    return QuadContext(ext["letter"], Fraction(ext["p"]), Fraction(ext["r"]))


def tensor_to_json(t: Tensor) -> dict:
    doc = {"kind": "tensor", "m": t.m}
    try:
        doc["n"] = t.n
    except ShapeMismatch:
        doc["shape"] = list(t.shape)
    ext = _ext_header(t.entries.values())
    if ext:
        doc["ext"] = ext
    doc["entries"] = [{"idx": list(idx), "value": format_scalar(v)}
                      for idx, v in sorted(t.entries.items())]
    return doc


def tensor_from_json(doc: dict) -> Tensor:
    if doc.get("kind") != "tensor":
        raise ParseError(f"expected kind 'tensor', got {doc.get('kind')!r}")
    if "shape" in doc:
        shape = tuple(doc["shape"])
    else:
        shape = (doc["n"],) * doc["m"]
    if len(shape) != doc["m"]:
        raise ParseError("tensor shape does not match m")
    ctx = _ext_context(doc)
    t = Tensor(shape)
    for e in doc.get("entries", []):
        t.set(tuple(e["idx"]), parse_scalar(e["value"], ctx))
    return t


def block_array_to_json(b: BlockArray) -> dict:
    doc = {"kind": "block_array", "l": b.l, "m": b.m}
    if b.size % b.l == 0:
        doc["n"] = b.size // b.l
    else:
        doc["size"] = b.size
    ext = _ext_header(b.entries.values())
    if ext:
        doc["ext"] = ext
    doc["entries"] = [{"idx": [list(blk) for blk in key],
                       "value": format_scalar(v)}
                      for key, v in sorted(b.entries.items())]
    return doc


def block_array_from_json(doc: dict) -> BlockArray:
    if doc.get("kind") != "block_array":
        raise ParseError(f"expected kind 'block_array', got {doc.get('kind')!r}")
    size = doc["size"] if "size" in doc else doc["l"] * doc["n"]
    ctx = _ext_context(doc)
    b = BlockArray(doc["l"], doc["m"], size)
    for e in doc.get("entries", []):
        b.set(tuple(tuple(blk) for blk in e["idx"]),
              parse_scalar(e["value"], ctx))
    return b
