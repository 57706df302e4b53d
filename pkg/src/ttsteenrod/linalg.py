"""Exact linear algebra over GF(2) on int bitsets.

A vector of length ``n`` is an int whose bit ``k`` is the coordinate at basis
index ``k``.  Pivots are always chosen at the lowest available index.
"""
from __future__ import annotations

from typing import List, Sequence


class DimensionError(ValueError):
    pass


def _low_bit(v: int) -> int:
    return (v & -v).bit_length() - 1


def _check(vectors: Sequence[int], n: int) -> None:
    for v in vectors:
        if v < 0 or v >> n:
            raise DimensionError(f"vector {v:#x} does not fit in dimension {n}")


def echelon(vectors: Sequence[int]) -> List[int]:
    """Reduced echelon basis of the span, pivots at lowest set bits."""
    pivots: dict = {}
    for v in vectors:
        for p, row in pivots.items():
            if v >> p & 1:
                v ^= row
        if not v:
            continue
        p = _low_bit(v)
        for q in list(pivots):
            if pivots[q] >> p & 1:
                pivots[q] ^= v
        pivots[p] = v
    return [pivots[p] for p in sorted(pivots)]


def rank(vectors: Sequence[int]) -> int:
    return len(echelon(vectors))


def reduce(v: int, basis: Sequence[int]) -> int:
    """Reduce ``v`` against a reduced echelon basis."""
    for row in basis:
        p = _low_bit(row)
        if v >> p & 1:
            v ^= row
    return v


def in_span(v: int, vectors: Sequence[int]) -> bool:
    return reduce(v, echelon(vectors)) == 0


def nullspace(rows: Sequence[int], n: int) -> List[int]:
    """Basis of ``{x : row . x = 0 for every row}`` inside GF(2)^n."""
    _check(rows, n)
    basis = echelon(rows)
    pivot_cols = {_low_bit(r): r for r in basis}
    out = []
    for free in range(n):
        if free in pivot_cols:
            continue
        x = 1 << free
        for p, r in pivot_cols.items():
            if r >> free & 1:
                x |= 1 << p
        out.append(x)
    return out


def kernel_of_images(images: Sequence[int]) -> List[int]:
    """Basis of ``{c : sum_k c_k images[k] = 0}``, as bitsets over k."""
    by_pivot: dict = {}  # low bit -> (image, combination)
    kernel = []
    for k, img in enumerate(images):
        combo = 1 << k
        while img:
            p = _low_bit(img)
            hit = by_pivot.get(p)
            if hit is None:
                break
            img ^= hit[0]
            combo ^= hit[1]
        if img:
            by_pivot[_low_bit(img)] = (img, combo)
        else:
            kernel.append(combo)
    return echelon(kernel)


def solve(images: Sequence[int], target: int):
    """Some ``c`` with ``sum_k c_k images[k] = target``, or None."""
    by_pivot: dict = {}
    for k, img in enumerate(images):
        combo = 1 << k
        while img:
            p = _low_bit(img)
            hit = by_pivot.get(p)
            if hit is None:
                break
            img ^= hit[0]
            combo ^= hit[1]
        if img:
            by_pivot[_low_bit(img)] = (img, combo)
    combo = 0
    while target:
        p = _low_bit(target)
        hit = by_pivot.get(p)
        if hit is None:
            return None
        target ^= hit[0]
        combo ^= hit[1]
    return combo
