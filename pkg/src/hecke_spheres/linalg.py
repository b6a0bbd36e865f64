"""Exact Gaussian elimination over any field whose elements support
``+ - * /`` and truthiness (``Scalar`` and ``Fraction`` both qualify).

Matrices are lists of rows; rows are lists or ``{column: value}`` dicts.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

__all__ = ["row_reduce", "rank", "nullspace"]


def _as_sparse(rows) -> List[Dict[int, object]]:
    out = []
    for r in rows:
        if isinstance(r, dict):
            out.append({c: v for c, v in r.items() if v})
        else:
            out.append({c: v for c, v in enumerate(r) if v})
    return out


def row_reduce(rows, ncols: int) -> Tuple[List[Dict[int, object]], List[int]]:
    """Reduced row echelon form; returns (pivot rows, pivot columns)."""
    pending = [r for r in _as_sparse(rows) if r]
    basis: Dict[int, Dict[int, object]] = {}
    for r in pending:
        # eliminate known pivots
        for pc in sorted(basis):
            if pc in r:
                f = r[pc]
                for c, v in basis[pc].items():
                    nv = r.get(c)
                    nv = -f * v if nv is None else nv - f * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
        if not r:
            continue
        pc = min(r)
        inv = 1 / r[pc]
        r = {c: v * inv for c, v in r.items()}
        for other in basis.values():
            if pc in other:
                f = other[pc]
                for c, v in r.items():
                    nv = other.get(c)
                    nv = -f * v if nv is None else nv - f * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        basis[pc] = r
    pivots = sorted(basis)
    return [basis[c] for c in pivots], pivots


def rank(rows, ncols: int) -> int:
    return len(row_reduce(rows, ncols)[1])


def nullspace(rows, ncols: int, one=1) -> List[Dict[int, object]]:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    reduced, pivots = row_reduce(rows, ncols)
    pivot_set = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = {free: one}
        for r, pc in zip(reduced, pivots):
            v = r.get(free)
            if v:
                vec[pc] = -v
        out.append(vec)
    return out
