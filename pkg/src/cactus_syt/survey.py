"""Classification of the cactus image in S_N and batch surveys over shapes.

For a shape that is neither a hook nor self-transpose the image of the cactus
group in the permutations of SYT(shape) is S_N or A_N, and it is generated by
the Bender-Knuth involutions. So the image is S_N exactly when some t_i is an
odd permutation. The parity of t_i is ((N - F) / 2) mod 2 where F counts the
tableaux in which i and i+1 share a row or a column.

F is obtained either by enumerating SYT(shape) or, without enumeration, as

    F = sum over mu in shape, |mu| = i-1, and dominoes nu/mu in shape of
        f(mu) * f(shape / nu)

The default engine gets every f(mu) and f(shape / nu) from one forward and
one backward recursion over the subshapes; the Aitken determinant is kept as
an alternative engine for the skew counts. All sums are exact integers and
the parity is taken only at the end.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import IO, Iterable, Iterator

from .errors import CapExceeded
from .partition import (
    Partition,
    PartitionLike,
    as_partition,
    fits_in_grid,
    is_generic,
    is_hook,
    is_self_transpose,
    partitions,
    subpartitions,
    syt_count,
)
from .perm import involution_parity
from .skew import skew_syt_count
from .tableau import cell_coords, syt_words

CSV_COLUMNS = ("n", "shape", "N", "verdict", "generic", "method", "ms")
ENUM_SURVEY_CAP = 14
FAST_SURVEY_CAP = 30


class Verdict(str, Enum):
    SYMMETRIC = "SymmetricGroup"
    ALTERNATING = "AlternatingGroup"
    NOT_APPLICABLE = "NotApplicable"
    SKIPPED = "skipped"


# fixed points of t_i ----------------------------------------------------------


def _domino_extensions(mu: tuple[int, ...], outer: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Shapes nu inside ``outer`` with nu/mu a horizontal or vertical domino,
    zero-padded to ``len(outer)``."""
    k = len(outer)
    m = list(mu) + [0] * (k - len(mu))
    for r in range(k):
        above = m[r - 1] if r else None
        # horizontal: two boxes at the end of row r
        if m[r] + 2 <= outer[r] and (above is None or above >= m[r] + 2):
            nu = m[:]
            nu[r] += 2
            yield tuple(nu)
        # vertical: one box at the end of rows r and r+1
        if (r + 1 < k and m[r] == m[r + 1] and m[r + 1] + 1 <= outer[r + 1]
                and (above is None or above >= m[r] + 1)):
            nu = m[:]
            nu[r] += 1
            nu[r + 1] += 1
            yield tuple(nu)


def subshape_counts(outer: tuple[int, ...]):
    """Forward and backward tableau counts over every subshape of ``outer``.

    Subshapes are tuples padded with zeros to ``len(outer)``. Returns
    ``(levels, below, above)`` where ``levels[s]`` lists the subshapes of size
    s, ``below[mu]`` = f(mu) and ``above[nu]`` = f(outer / nu).
    """
    k = len(outer)
    n = sum(outer)
    levels: list[list[tuple[int, ...]]] = [[] for _ in range(n + 1)]

    def rec(r, prefix, cap, size):
        if r == k:
            levels[size].append(prefix)
            return
        for a in range(min(cap, outer[r]), -1, -1):
            rec(r + 1, prefix + (a,), a, size + a)

    rec(0, (), outer[0] if k else 0, 0)
    below = {levels[0][0]: 1}
    for s in range(1, n + 1):
        for mu in levels[s]:
            total = 0
            for r in range(k):
                if mu[r] and (r + 1 == k or mu[r + 1] < mu[r]):
                    total += below[mu[:r] + (mu[r] - 1,) + mu[r + 1:]]
            below[mu] = total
    above = {tuple(outer): 1}
    for s in range(n - 1, -1, -1):
        for nu in levels[s]:
            total = 0
            for r in range(k):
                if nu[r] < outer[r] and (r == 0 or nu[r - 1] > nu[r]):
                    total += above[nu[:r] + (nu[r] + 1,) + nu[r + 1:]]
            above[nu] = total
    return levels, below, above


def _fixed_counts_dp(outer: tuple[int, ...]) -> list[int]:
    n = sum(outer)
    levels, below, above = subshape_counts(outer)
    fixed = [0] * max(n - 1, 0)
    for s in range(0, n - 1):
        for mu in levels[s]:
            f_mu = below[mu]
            if not f_mu:
                continue
            acc = 0
            for nu in _domino_extensions(mu, outer):
                acc += above[nu]
            fixed[s] += f_mu * acc
    return fixed


def _fixed_count_determinant(p: Partition, i: int) -> int:
    outer = p.rows
    total = 0
    for mu in subpartitions(p, i - 1):
        f_mu = syt_count(mu)
        for nu in _domino_extensions(mu.rows, outer):
            total += f_mu * skew_syt_count(outer, tuple(x for x in nu if x))
    return total


@lru_cache(maxsize=4096)
def _fixed_counts_formula(outer: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(_fixed_counts_dp(outer))


def bk_fixed_count_formula(p: PartitionLike, i: int, engine: str = "dp") -> int:
    """#tableaux of shape p fixed by t_i, computed without enumeration.

    Sums f(mu) * f(p / nu) over mu of size i-1 and dominoes nu/mu. The skew
    counts come from a subshape recursion (``engine="dp"``) or from the
    Aitken determinant (``engine="determinant"``).
    """
    p = as_partition(p)
    if not 1 <= i <= p.n - 1:
        raise ValueError(f"t{i} out of range for n={p.n}")
    if engine == "dp":
        return _fixed_counts_formula(p.rows)[i - 1]
    if engine == "determinant":
        return _fixed_count_determinant(p, i)
    raise ValueError(f"unknown engine {engine!r}")


def fast_parity_bk(p: PartitionLike, i: int, engine: str = "dp") -> str:
    """Parity of t_i on SYT(p) from the domino-sum fixed-point count."""
    p = as_partition(p)
    return involution_parity(syt_count(p), bk_fixed_count_formula(p, i, engine))


def bk_fixed_counts_enum(p: PartitionLike, cap: int | None = None) -> list[int]:
    """[F_1, ..., F_{n-1}]: fixed points of each t_i, by enumeration."""
    p = as_partition(p)
    ws = syt_words(p, cap)
    n = p.n
    coords = cell_coords(p.rows)
    counts = [0] * max(n - 1, 0)
    inv = [0] * (n + 1)
    for w in ws:
        for pos, v in enumerate(w):
            inv[v] = coords[pos]
        for i in range(1, n):
            (ra, ca), (rb, cb) = inv[i], inv[i + 1]
            if ra == rb or ca == cb:
                counts[i - 1] += 1
    return counts


def enum_parity_bk(p: PartitionLike, i: int, cap: int | None = None) -> str:
    p = as_partition(p)
    return involution_parity(syt_count(p), bk_fixed_counts_enum(p, cap)[i - 1])


# classification ----------------------------------------------------------------


@dataclass
class ClassificationReport:
    shape: Partition
    n: int
    N: int
    verdict: Verdict
    evidence: list[dict] = field(default_factory=list)
    method: str = "enumeration"
    generic: bool = False

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape.rows),
            "n": self.n,
            "N": self.N,
            "verdict": self.verdict.value,
            "evidence": self.evidence,
            "method": self.method,
            "generic": self.generic,
        }


def applicable(p: PartitionLike) -> bool:
    """Neither a hook nor self-transpose (the hypotheses of the S_N/A_N dichotomy)."""
    p = as_partition(p)
    return not (is_hook(p) or is_self_transpose(p))


def classify(p: PartitionLike, fast: bool = False, cap: int | None = None) -> ClassificationReport:
    """S_N vs A_N verdict for the cactus image on SYT(p).

    ``fast`` uses the enumeration-free fixed-point formula; otherwise SYT(p)
    is enumerated, raising CapExceeded beyond ``cap``.
    """
    p = as_partition(p)
    N = syt_count(p)
    method = "fast_parity" if fast else "enumeration"
    report = ClassificationReport(p, p.n, N, Verdict.NOT_APPLICABLE,
                                  method=method, generic=is_generic(p))
    if not applicable(p):
        return report
    if fast:
        counts = _fixed_counts_formula(p.rows)
        fixed = {i: counts[i - 1] for i in range(2, p.n)}
    else:
        counts = bk_fixed_counts_enum(p, cap)
        fixed = {i: counts[i - 1] for i in range(2, p.n)}
    odd = False
    for i, f in fixed.items():
        par = involution_parity(N, f)
        odd = odd or par == "odd"
        report.evidence.append({"generator": f"t{i}", "fixed": f, "parity": par})
    report.verdict = Verdict.SYMMETRIC if odd else Verdict.ALTERNATING
    return report


# survey ---------------------------------------------------------------------------


def survey_shapes(n: int, generic_only: bool = False) -> list[Partition]:
    """Applicable shapes of n in decreasing lexicographic order."""
    return [p for p in partitions(n)
            if applicable(p) and (not generic_only or is_generic(p))]


def _survey_job(args):
    rows, fast, cap = args
    p = Partition(rows)
    t0 = time.perf_counter()
    try:
        rep = classify(p, fast=fast, cap=cap)
        verdict = rep.verdict.value
    except CapExceeded:
        verdict = Verdict.SKIPPED.value
    ms = (time.perf_counter() - t0) * 1000.0
    return verdict, ms


def run_survey(n_min: int, n_max: int, generic_only: bool = False, fast: bool = False,
               threads: int = 1, cap: int | None = None, timing: bool = False,
               survey_cap: int | None = None) -> list[dict]:
    """One row per applicable shape of each n in [n_min, n_max], followed by
    per-n aggregate rows.

    Rows are ordered by (n, shape) independently of ``threads``. The ``ms``
    field is left empty unless ``timing`` is set, so that output is
    reproducible byte for byte.
    """
    limit = survey_cap if survey_cap is not None else (FAST_SURVEY_CAP if fast else ENUM_SURVEY_CAP)
    if n_max > limit:
        raise CapExceeded("survey n_max", n_max, limit)
    method = "fast_parity" if fast else "enumeration"
    jobs = []
    for n in range(n_min, n_max + 1):
        for p in survey_shapes(n, generic_only):
            jobs.append(p)
    args = [(p.rows, fast, cap) for p in jobs]
    if threads > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_survey_job, args, chunksize=1))
    else:
        results = [_survey_job(a) for a in args]

    out = []
    by_n: dict[int, list[dict]] = {}
    for p, (verdict, ms) in zip(jobs, results):
        row = {
            "n": p.n,
            "shape": str(p),
            "N": syt_count(p),
            "verdict": verdict,
            "generic": int(is_generic(p)),
            "method": method,
            "ms": f"{ms:.3f}" if timing else "",
        }
        by_n.setdefault(p.n, []).append(row)
    for n in range(n_min, n_max + 1):
        rows = by_n.get(n, [])
        out.extend(rows)
        out.append(_aggregate(n, "*", rows))
        if not generic_only:
            out.append(_aggregate(n, "*generic", [r for r in rows if r["generic"]]))
    return out


def _aggregate(n: int, label: str, rows: list[dict]) -> dict:
    s = sum(r["verdict"] == Verdict.SYMMETRIC.value for r in rows)
    a = sum(r["verdict"] == Verdict.ALTERNATING.value for r in rows)
    k = sum(r["verdict"] == Verdict.SKIPPED.value for r in rows)
    verdict = f"SymmetricGroup={s};AlternatingGroup={a}"
    if k:
        verdict += f";skipped={k}"
    return {"n": n, "shape": label, "N": len(rows), "verdict": verdict,
            "generic": "", "method": "aggregate", "ms": ""}


def write_survey_csv(rows: Iterable[dict], fh: IO[str]) -> None:
    writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(r)


def survey_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    write_survey_csv(rows, buf)
    return buf.getvalue()


def has_skips(rows: Iterable[dict]) -> bool:
    return any(r["verdict"] == Verdict.SKIPPED.value for r in rows)


def aggregate_counts(rows: Iterable[dict]) -> dict[int, tuple[int, int]]:
    """{n: (#SymmetricGroup, #AlternatingGroup)} from the shape rows."""
    out: dict[int, list[int]] = {}
    for r in rows:
        if r["method"] == "aggregate":
            continue
        c = out.setdefault(r["n"], [0, 0])
        if r["verdict"] == Verdict.SYMMETRIC.value:
            c[0] += 1
        elif r["verdict"] == Verdict.ALTERNATING.value:
            c[1] += 1
    return {n: (s, a) for n, (s, a) in out.items()}


# |SYT| parity statistic -----------------------------------------------------------


def even_syt_statistic(n: int, c: Fraction | int | float | None = None) -> Fraction:
    """Fraction of partitions of n inside a c*sqrt(n) square grid with an even
    number of standard tableaux. ``c=None`` means c = 2*sqrt(2).

    Returns 0 when no partition fits.
    """
    c_squared = Fraction(8) if c is None else Fraction(c) ** 2
    shapes = [p for p in partitions(n) if fits_in_grid(p, c_squared)]
    if not shapes:
        return Fraction(0)
    even = sum(syt_count(p) % 2 == 0 for p in shapes)
    return Fraction(even, len(shapes))
