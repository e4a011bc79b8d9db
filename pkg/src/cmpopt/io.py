"""Plain-text instance formats shared by the CLI and the scripts."""
from __future__ import annotations

from fractions import Fraction


def _rows(text: str) -> list:
    return [ln.split() for ln in text.strip().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def parse_number(tok: str):
    """'3' -> 3, '-2/6' -> Fraction(-1, 3); integral fractions come back as int."""
    q = Fraction(tok)
    return q.numerator if q.denominator == 1 else q


def load_points(text: str) -> list:
    """First line 'd N', then N lines of d rationals."""
    rows = _rows(text)
    d, N = int(rows[0][0]), int(rows[0][1])
    pts = [tuple(parse_number(t) for t in r) for r in rows[1:]]
    if len(pts) != N:
        raise ValueError(f"declared {N} points, found {len(pts)}")
    for p in pts:
        if len(p) != d:
            raise ValueError(f"point {p} has dimension {len(p)}, expected {d}")
    return pts


def dump_points(points) -> str:
    points = [tuple(p) for p in points]
    d = len(points[0]) if points else 0
    lines = [f"{d} {len(points)}"] + [" ".join(str(c) for c in p) for p in points]
    return "\n".join(lines) + "\n"


def parse_digraph(text: str):
    """'n m' then m lines 'u v [len]'; a missing length means 1.

    Returns (n, edges, lengths).
    """
    rows = _rows(text)
    n, m = int(rows[0][0]), int(rows[0][1])
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"declared {m} arcs, found {len(body)}")
    edges, lengths = [], []
    for r in body:
        u, v = int(r[0]), int(r[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc {(u, v)} outside 0..{n - 1}")
        edges.append((u, v))
        lengths.append(Fraction(r[2]) if len(r) > 2 else Fraction(1))
    return n, edges, lengths


def dump_digraph(n: int, edges, lengths=None) -> str:
    lines = [f"{n} {len(edges)}"]
    for i, (u, v) in enumerate(edges):
        lines.append(f"{u} {v}" if lengths is None else f"{u} {v} {lengths[i]}")
    return "\n".join(lines) + "\n"


def parse_int_list(text: str) -> list:
    """'1,-2, 3' or '1 -2 3' -> [1, -2, 3]."""
    return [int(t) for t in text.replace(",", " ").split()]
