"""Exact rational feasibility of homogeneous strict-inequality systems by
Fourier-Motzkin elimination, with integral witnesses and replayable
infeasibility certificates.

A system is a list of coefficient rows r; feasibility asks for a rational
point t with r . t > 0 for every row.  Certificates are nonnegative rational
multipliers combining the rows to the zero form (a positive combination of
strictly positive forms cannot vanish).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence


class ConeError(ValueError):
    pass


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    point: Optional[tuple] = None          # rational interior point
    certificate: Optional[tuple] = None    # multipliers over the input rows

    def integral_point(self) -> Optional[tuple]:
        if self.point is None:
            return None
        denoms = [Fraction(x).denominator for x in self.point]
        scale = 1
        for d in denoms:
            scale = scale * d // gcd(scale, d)
        return tuple(int(Fraction(x) * scale) for x in self.point)


def _normalize(row):
    row = tuple(Fraction(x) for x in row)
    denom = 1
    for x in row:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in row]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def feasible_strict(rows: Sequence[Sequence], nvars: int) -> Feasibility:
    """Decide whether a rational t exists with row . t > 0 for all rows."""
    originals = [tuple(Fraction(x) for x in r) for r in rows]
    normed = [_normalize(r) for r in rows]
    for r in normed:
        if len(r) != nvars:
            raise ConeError("row length does not match the variable count")

    # Rows carry provenance (original index, or the pair combined) so that an
    # infeasibility certificate can be expanded lazily at the end.
    created = {}        # id -> ("orig", idx, scale) | ("comb", idp, idn, an, ap, scale)
    next_id = [0]

    def make(prov):
        rid = next_id[0]
        next_id[0] += 1
        created[rid] = prov
        return rid

    work = []
    seen = set()
    for idx, (orig, r) in enumerate(zip(originals, normed)):
        if r in seen:
            continue
        seen.add(r)
        scale = _scale_between(orig, r)
        work.append((r, make(("orig", idx, scale))))

    def certificate_from(rid):
        combo = [Fraction(0)] * len(rows)

        def expand(rid, mult):
            prov = created[rid]
            if prov[0] == "orig":
                _tag, idx, scale = prov
                combo[idx] += mult / scale
            else:
                _tag, idp, idn, an, ap, scale = prov
                expand(idp, mult * an / scale)
                expand(idn, mult * ap / scale)

        expand(rid, Fraction(1))
        return tuple(combo)

    order = _elimination_order(work, nvars)
    stages = []  # (var, rows before eliminating var)
    for var in order:
        stages.append((var, [r for (r, _id) in work]))
        pos = [(r, i) for (r, i) in work if r[var] > 0]
        neg = [(r, i) for (r, i) in work if r[var] < 0]
        zero = [(r, i) for (r, i) in work if r[var] == 0]
        new = {}
        for (rp, ip) in pos:
            for (rn, jn) in neg:
                ap, an = rp[var], -rn[var]
                row = tuple(an * rp[k] + ap * rn[k] for k in range(nvars))
                nrm = _normalize(row)
                if nrm not in new:
                    scale = _scale_between(row, nrm)
                    new[nrm] = make(("comb", ip, jn, an, ap, scale))
        for (r, i) in zero:
            if r not in new:
                new[r] = i
        work = sorted(new.items())
        # a vanished row means a positive combination summing to the zero form
        for r, rid in work:
            if all(x == 0 for x in r):
                return Feasibility(False, certificate=certificate_from(rid))

    if work:  # all variables eliminated, leftover rows are 0 > 0
        return Feasibility(False, certificate=certificate_from(work[0][1]))

    # back-substitution for a witness
    t = [Fraction(0)] * nvars
    for var, rows_before in reversed(stages):
        lows, highs = [], []
        for r in rows_before:
            a = r[var]
            if a == 0:
                continue
            rest = sum(Fraction(r[k]) * t[k] for k in range(nvars) if k != var)
            bound = Fraction(-rest, a)
            (lows if a > 0 else highs).append(bound)
        if lows and highs:
            lo, hi = max(lows), min(highs)
            if not lo < hi:
                raise AssertionError("back-substitution found an empty interval")
            t[var] = (lo + hi) / 2
        elif lows:
            t[var] = max(lows) + 1
        elif highs:
            t[var] = min(highs) - 1
    return Feasibility(True, point=tuple(t))


def _scale_between(row, normalized):
    """The positive rational s with row = s * normalized (zero rows: s = 1)."""
    for a, b in zip(row, normalized):
        if b != 0:
            return Fraction(a) / b
    return Fraction(1)


def _elimination_order(work, nvars):
    """Eliminate variables greedily by smallest pos*neg product (deterministic)."""
    remaining = list(range(nvars))
    rows = [r for (r, _c) in work]
    order = []
    while remaining:
        best, best_cost = None, None
        for var in remaining:
            p = sum(1 for r in rows if r[var] > 0)
            n = sum(1 for r in rows if r[var] < 0)
            cost = (p * n if p and n else p + n, var)
            if best_cost is None or cost < best_cost:
                best, best_cost = var, cost
        order.append(best)
        remaining.remove(best)
        # rows are not updated here; the order is a heuristic fixed up front
    return order


def verify_certificate(rows: Sequence[Sequence], certificate: Sequence) -> bool:
    """Replay: nonnegative multipliers, not all zero, combining rows to zero."""
    rows = [tuple(Fraction(x) for x in r) for r in rows]
    cert = [Fraction(c) for c in certificate]
    if len(cert) != len(rows):
        return False
    if any(c < 0 for c in cert) or all(c == 0 for c in cert):
        return False
    n = len(rows[0]) if rows else 0
    total = [Fraction(0)] * n
    for c, r in zip(cert, rows):
        for k in range(n):
            total[k] += c * r[k]
    return all(x == 0 for x in total)


def kernel_basis(equalities: Sequence[Sequence], nvars: int) -> List[tuple]:
    """Integral basis of the rational solution space of eq . x = 0.

    Basis vectors have integer entries with content 1; they span the solution
    space over Q (a finite-index sublattice of the full integral kernel, which
    is enough for witnesses of open conditions).
    """
    rows = [[Fraction(x) for x in r] for r in equalities]
    piv_cols = []
    r = 0
    for c in range(nvars):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    basis = []
    free = [c for c in range(nvars) if c not in piv_cols]
    for fc in free:
        v = [Fraction(0)] * nvars
        v[fc] = Fraction(1)
        for i, pc in enumerate(piv_cols):
            v[pc] = -rows[i][fc]
        denom = 1
        for x in v:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        if g > 1:
            ints = [x // g for x in ints]
        basis.append(tuple(ints))
    return basis
