"""Powers of the ideal of 2x2 minors of a generic 2 x n matrix, their
bigraded slices, and leading-monomial data, optionally after truncating by
p-th powers of the variables.

The ring is k[x_1..x_n, y_1..y_n] with the term order: graded lexicographic,
x_1 > ... > x_n > y_1 > ... > y_n.  A monomial is stored as the length-2n
exponent tuple (x-block then y-block); within a fixed bidegree (a, b) all
monomials share total degree, so ties are broken by plain lexicographic
comparison of those tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

import numpy as np

from .characters import LaurentPolynomial, h_trunc, schur2_trunc
from .combinatorics import TwoRowTableau
from .linalg import PrimeFieldMatrix, rref_with_order

Monomial = tuple  # exponent tuple of length 2n


@dataclass(frozen=True)
class BigradedMonomial:
    x_exponents: tuple[int, ...]
    y_exponents: tuple[int, ...]

    @property
    def bidegree(self) -> tuple[int, int]:
        return (sum(self.x_exponents), sum(self.y_exponents))

    @property
    def multidegree(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.x_exponents, self.y_exponents))

    def key(self) -> Monomial:
        return self.x_exponents + self.y_exponents


def _compositions(total: int, nparts: int):
    if total < 0:
        return
    if nparts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, nparts - 1):
            yield (first,) + rest


def minor_pairs(n: int) -> list[tuple[int, int]]:
    """Index pairs (u, v), u < v, of the 2x2 minors x_u y_v - x_v y_u (0-based)."""
    return list(combinations(range(n), 2))


def expand_minor_product(
    n: int, minors, x_mono: tuple[int, ...], y_mono: tuple[int, ...]
) -> dict[Monomial, int]:
    """Expansion of (product of the given minors) * x^x_mono * y^y_mono
    in the monomial basis, over Z."""
    base = tuple(x_mono) + tuple(y_mono)
    terms: dict[Monomial, int] = {base: 1}
    for u, v in minors:
        new: dict[Monomial, int] = {}
        for mono, coeff in terms.items():
            plus = list(mono)
            plus[u] += 1
            plus[n + v] += 1
            key = tuple(plus)
            new[key] = new.get(key, 0) + coeff
            minus = list(mono)
            minus[v] += 1
            minus[n + u] += 1
            key = tuple(minus)
            new[key] = new.get(key, 0) - coeff
        terms = new
    return {k: c for k, c in terms.items() if c}


@dataclass
class _Block:
    monomials: list[Monomial]  # decreasing term order
    matrix: PrimeFieldMatrix


@dataclass
class IdealPowerSlice:
    """Spanning matrix of the bidegree-(a, b) slice of the i-th ideal power,
    split into torus multidegree blocks.  With truncated=True everything is
    taken in the quotient by p-th powers of the variables."""

    n: int
    a: int
    b: int
    power: int
    truncated: bool
    p: int
    blocks: dict[tuple[int, ...], _Block]

    def multidegrees(self) -> list[tuple[int, ...]]:
        return sorted(self.blocks)

    def block_rank(self, m) -> int:
        block = self.blocks.get(tuple(m))
        return block.matrix.rank() if block else 0

    def dimension(self) -> int:
        return sum(b.matrix.rank() for b in self.blocks.values())

    def rank_character(self) -> LaurentPolynomial:
        terms = {}
        for m, block in self.blocks.items():
            r = block.matrix.rank()
            if r:
                terms[m] = r
        return LaurentPolynomial(self.n, terms)


def _slice_generators(n: int, a: int, b: int, i: int, truncated: bool, p: int):
    """Rows spanning the slice: products of i minors times bidegree
    (a-i, b-i) monomials, expanded and (if truncated) cut to exponents < p."""
    if a - i < 0 or b - i < 0:
        return
    for chosen in combinations_with_replacement(minor_pairs(n), i):
        for xm in _compositions(a - i, n):
            if truncated and any(x >= p for x in xm):
                continue
            for ym in _compositions(b - i, n):
                if truncated and any(y >= p for y in ym):
                    continue
                row = expand_minor_product(n, chosen, xm, ym)
                if truncated:
                    row = {
                        k: c
                        for k, c in row.items()
                        if all(x < p for x in k)
                    }
                if row:
                    yield row


def _block_monomials(
    n: int, a: int, m: tuple[int, ...], truncated: bool, p: int
) -> list[Monomial]:
    """Monomials of multidegree m and x-degree a, in decreasing term order."""
    out = []

    def rec(idx: int, remaining: int, prefix: tuple[int, ...]):
        if idx == n:
            if remaining == 0:
                mono = prefix + tuple(c - x for c, x in zip(m, prefix))
                if not truncated or all(v < p for v in mono):
                    out.append(mono)
            return
        tail = sum(m[idx + 1 :])
        lo = max(0, remaining - tail)
        hi = min(m[idx], remaining)
        for v in range(lo, hi + 1):
            rec(idx + 1, remaining - v, prefix + (v,))

    rec(0, a, ())
    return sorted(out, reverse=True)


def ideal_power_slice(
    n: int, a: int, b: int, i: int, truncated: bool, p: int
) -> IdealPowerSlice:
    if min(n, a, b) < 0 or i < 0:
        raise ValueError("parameters must be non-negative")
    grouped: dict[tuple[int, ...], list[dict[Monomial, int]]] = {}
    for row in _slice_generators(n, a, b, i, truncated, p):
        mono = next(iter(row))
        m = tuple(mono[j] + mono[n + j] for j in range(n))
        grouped.setdefault(m, []).append(row)
    blocks = {}
    for m, rows in grouped.items():
        monomials = _block_monomials(n, a, m, truncated, p)
        index = {mono: c for c, mono in enumerate(monomials)}
        mat = np.zeros((len(rows), len(monomials)), dtype=np.int64)
        for r, row in enumerate(rows):
            for mono, coeff in row.items():
                mat[r, index[mono]] = coeff % p
        blocks[m] = _Block(monomials=monomials, matrix=PrimeFieldMatrix(p, mat))
    return IdealPowerSlice(
        n=n, a=a, b=b, power=i, truncated=truncated, p=p, blocks=blocks
    )


def filtration_character(
    n: int, a: int, b: int, i: int, truncated: bool, p: int
) -> LaurentPolynomial:
    """Character of the i-th filtration quotient in bidegree (a, b):
    blockwise rank of the i-th slice minus rank of the (i+1)-st."""
    top = ideal_power_slice(n, a, b, i, truncated, p)
    below = ideal_power_slice(n, a, b, i + 1, truncated, p)
    return top.rank_character() - below.rank_character()


def leading_monomials(slc: IdealPowerSlice) -> set[BigradedMonomial]:
    """Leading monomials of the row space: pivot columns of the echelon form
    taken block by block in decreasing term order."""
    out = set()
    for block in slc.blocks.values():
        if not block.monomials:
            continue
        _, pivots = rref_with_order(
            block.matrix, list(range(len(block.monomials)))
        )
        n = slc.n
        for c in pivots:
            mono = block.monomials[c]
            out.add(BigradedMonomial(mono[:n], mono[n:]))
    return out


# ---------------------------------------------------------------------------
# tableau side


def tableau_monomial(t: TwoRowTableau, n: int) -> BigradedMonomial:
    """x_(u_1)...x_(u_a) y_(v_1)...y_(v_b) for the tableau with rows u, v."""
    x = [0] * n
    y = [0] * n
    for val in t.top:
        if val > n:
            raise ValueError("entry exceeds variable count")
        x[val - 1] += 1
    for val in t.bottom:
        if val > n:
            raise ValueError("entry exceeds variable count")
        y[val - 1] += 1
    return BigradedMonomial(tuple(x), tuple(y))


def tableau_product(t: TwoRowTableau, n: int) -> dict[Monomial, int]:
    """Expansion of the product of column minors times leftover top-row
    variables attached to the tableau: minor (u_i, v_i) per full column,
    then x_(u_i) for the single-box columns."""
    b = len(t.bottom)
    minors = []
    for i in range(b):
        u, v = t.top[i], t.bottom[i]
        if u >= v:
            raise ValueError("column minors need strictly increasing columns")
        minors.append((u - 1, v - 1))
    x = [0] * n
    for val in t.top[b:]:
        x[val - 1] += 1
    return expand_minor_product(n, minors, tuple(x), (0,) * n)


def leading_term(row: dict[Monomial, int]) -> Monomial:
    return max(row)


def rbar_character(n: int, a: int, b: int, p: int) -> LaurentPolynomial:
    """Bigraded character of the truncated polynomial ring in bidegree (a, b),
    as a multidegree character: h_a^(p) * h_b^(p)."""
    return h_trunc(a, p, n) * h_trunc(b, p, n)


# ---------------------------------------------------------------------------
# verdict-style checks


@dataclass
class FiltrationReport:
    """Per-power comparison of truncated filtration characters with the
    truncated two-row Schur characters."""

    n: int
    a: int
    b: int
    p: int
    hypothesis_met: bool
    rows: list[dict]

    @property
    def agree(self) -> bool:
        return all(r["ok"] for r in self.rows)

    def to_payload(self) -> dict:
        return {
            "hypothesis_met": self.hypothesis_met,
            "rows": self.rows,
        }


def check_iadic_conjecture(n: int, a: int, b: int, p: int) -> FiltrationReport:
    """Compare every truncated filtration quotient in bidegree (a, b) with
    the truncated Schur character of (a+b-i, i).  The stated hypothesis is
    a - b >= p - 1; the comparison runs either way."""
    slices = [
        ideal_power_slice(n, a, b, i, True, p).rank_character()
        for i in range(b + 2)
    ]
    rows = []
    for i in range(b + 1):
        computed = slices[i] - slices[i + 1]
        target = schur2_trunc(a + b - i, i, p, n)
        diff = computed - target
        row = {
            "power": i,
            "ok": diff.is_zero(),
            "computed_dim": computed.dimension(),
            "target_dim": target.dimension(),
        }
        if not diff.is_zero():
            exps, coeff = diff.terms()[0]
            row["first_difference"] = {
                "exponents": list(exps),
                "coeff": coeff,
            }
        rows.append(row)
    return FiltrationReport(
        n=n, a=a, b=b, p=p, hypothesis_met=(a - b >= p - 1), rows=rows
    )


@dataclass
class LeadTermReport:
    """Whether every p-semistandard tableau monomial occurs among the
    leading monomials of the b-th truncated ideal power in bidegree (a, b)."""

    n: int
    a: int
    b: int
    p: int
    hypothesis_met: bool
    expected: list[tuple[tuple[int, ...], tuple[int, ...]]]
    pivots: list[tuple[tuple[int, ...], tuple[int, ...]]]
    missing: list[tuple[tuple[int, ...], tuple[int, ...]]]

    @property
    def agree(self) -> bool:
        return not self.missing

    def to_payload(self) -> dict:
        return {
            "hypothesis_met": self.hypothesis_met,
            "expected_count": len(self.expected),
            "pivot_count": len(self.pivots),
            "missing": [list(map(list, m)) for m in self.missing],
        }


def check_lead_terms(n: int, a: int, b: int, p: int) -> LeadTermReport:
    from .combinatorics import enumerate_pssyt

    slc = ideal_power_slice(n, a, b, b, True, p)
    pivots = {(mono.x_exponents, mono.y_exponents) for mono in leading_monomials(slc)}
    expected = set()
    for t in enumerate_pssyt(n, a, b, p):
        mono = tableau_monomial(t, n)
        expected.add((mono.x_exponents, mono.y_exponents))
    missing = sorted(expected - pivots)
    return LeadTermReport(
        n=n,
        a=a,
        b=b,
        p=p,
        hypothesis_met=(a - b >= p - 1),
        expected=sorted(expected),
        pivots=sorted(pivots),
        missing=missing,
    )
