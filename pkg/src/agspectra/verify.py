"""Reproduction of the published numerical tables and checks of the extremal claims.

Every check produces a :class:`VerificationReport`.  Golden values live in
CSV files (``data/table*.csv``) with a provenance column; set
``AGSPECTRA_DATA_DIR`` to read them from somewhere else.
"""

from __future__ import annotations

import csv
import math
import os
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from . import closed_form as cf
from .canon import canonical_form
from .enumerate import (
    enumerate_bicyclic,
    enumerate_unicyclic,
    enumerate_unicyclic_with_max_degree,
)
from .graph import Family, Graph, build_family, max_degree, star, to_graph6
from .spectral import full_spectrum, spectral_radius
from .weights import ag_matrix

# radii closer than this are treated as tied when ranking
TIE_TOL = 1e-7
TABLE_TOL = 1e-3
TABLE_TOL_SHORT = 2e-3  # values printed with fewer than four decimals
ENUM_THEOREM_LIMIT = 10

PASS, FAIL, SKIPPED, REPORT = "pass", "fail", "skipped", "report"


@dataclass
class VerificationReport:
    claim: str
    status: str
    computed: Any = None
    expected: Any = None
    tolerance: Any = None
    runtime_ms: float | None = None
    provenance: str = ""
    detail: str = ""

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d["runtime_ms"] = None
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(**d)

    @property
    def ok(self) -> bool:
        return self.status != FAIL


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.t0) * 1e3


# --- radii -------------------------------------------------------------------------


def ag_radius(g: Graph) -> float:
    """AG spectral radius; Jacobi for small graphs, power iteration past 30 vertices."""
    A = ag_matrix(g)
    if g.n <= 30:
        return full_spectrum(A).radius
    return spectral_radius(A)


@lru_cache(maxsize=None)
def family_radius(name: str, n: int) -> float:
    return ag_radius(build_family(name, n))


@lru_cache(maxsize=None)
def _family_forms(n: int) -> dict[bytes, str]:
    names = {Family.CYCLE: "C_n", Family.STAR_PLUS_EDGE: "S_n+e"}
    out = {}
    for fam in Family:
        if fam in (Family.G1, Family.G2, Family.G3) and n < 5:
            continue
        out[canonical_form(build_family(fam, n))] = names.get(fam, fam.value.upper())
    return out


def name_of(g: Graph) -> str:
    """Family name of ``g`` if it is one of the named graphs, else its canonical graph6."""
    cert = canonical_form(g)
    return _family_forms(g.n).get(cert, cert.decode())


# --- golden data -----------------------------------------------------------------------


@dataclass(frozen=True)
class GoldenValue:
    n: int
    graph: str
    text: str
    provenance: str

    @property
    def value(self) -> float:
        return float(self.text)

    @property
    def decimals(self) -> int:
        return len(self.text.split(".")[1]) if "." in self.text else 0

    @property
    def tolerance(self) -> float:
        return TABLE_TOL_SHORT if 0 < self.decimals < 4 else TABLE_TOL


def data_dir() -> Path:
    override = os.environ.get("AGSPECTRA_DATA_DIR")
    if override:
        return Path(override)
    return Path(str(resources.files("agspectra") / "data"))


def load_table(table_id: int) -> list[GoldenValue]:
    if table_id not in (1, 2, 3, 4, 5):
        raise ValueError(f"table id must be 1..5, got {table_id}")
    with open(data_dir() / f"table{table_id}.csv", newline="") as fh:
        return [
            GoldenValue(int(r["n"]), r["graph"], r["value"], r["provenance"])
            for r in csv.DictReader(fh)
        ]


def write_table(path: Path, rows: Iterable[GoldenValue]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "graph", "value", "provenance"])
        for r in rows:
            w.writerow([r.n, r.graph, r.text, r.provenance])


# --- tables ----------------------------------------------------------------------------


def _multiset_report(claim: str, computed: Sequence[float], golden: Sequence[GoldenValue], ms: float) -> VerificationReport:
    golden = sorted(golden, key=lambda r: r.value)
    expected = [r.value for r in golden]
    tols = [r.tolerance for r in golden]
    computed = sorted(computed)
    prov = "; ".join(r.provenance for r in golden)
    if len(computed) != len(expected):
        return VerificationReport(
            claim, FAIL, computed, expected, tols, ms, prov,
            f"size mismatch: enumerated {len(computed)} classes, table has {len(expected)}",
        )
    diffs = [abs(c - e) for c, e in zip(computed, expected)]
    bad = [i for i, (d, t) in enumerate(zip(diffs, tols)) if d > t]
    detail = f"max |diff| = {max(diffs):.2e}"
    if bad:
        detail += "; out of tolerance at sorted positions " + ", ".join(map(str, bad))
    return VerificationReport(claim, FAIL if bad else PASS, computed, expected, tols, ms, prov, detail)


def reproduce_table(table_id: int) -> list[VerificationReport]:
    """Compare computed AG radii with one of the five golden tables."""
    golden = load_table(table_id)
    reports = []
    if table_id == 1:
        for row in golden:
            with _Timer() as t:
                val = family_radius(row.graph.lower(), row.n)
            ok = abs(val - row.value) <= row.tolerance
            reports.append(VerificationReport(
                f"table1/n={row.n}/{row.graph}", PASS if ok else FAIL, val, row.value,
                row.tolerance, t.ms, row.provenance, f"|diff| = {abs(val - row.value):.2e}",
            ))
        return reports
    by_n: dict[int, list[GoldenValue]] = {}
    for row in golden:
        by_n.setdefault(row.n, []).append(row)
    for n in sorted(by_n):
        with _Timer() as t:
            if table_id == 2:
                graphs = list(enumerate_unicyclic_with_max_degree(n, n - 3))
            else:
                graphs = list(enumerate_unicyclic(n))
            radii = [ag_radius(g) for g in graphs]
        reports.append(_multiset_report(f"table{table_id}/n={n}", radii, by_n[n], t.ms))
    return reports


# --- theorem ---------------------------------------------------------------------------


def theorem_order(n: int) -> list[str]:
    """Names of the four largest unicyclic graphs, in decreasing AG radius."""
    if n < 5:
        raise ValueError(f"stated for n >= 5, got n={n}")
    if n <= 7:
        return ["S_n+e", "G2", "G3", "G1"]
    if n <= 15:
        return ["S_n+e", "G2", "G1", "G3"]
    return ["S_n+e", "G1", "G2", "G3"]


_FAMILY_BY_NAME = {"S_n+e": "star-plus-edge", "G1": "g1", "G2": "g2", "G3": "g3", "C_n": "cycle"}


@dataclass
class _Checks:
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def require(self, cond: bool, msg: str) -> None:
        (self.notes if cond else self.failures).append(msg)

    def detail(self) -> str:
        parts = [f"FAILED: {m}" for m in self.failures] + self.notes
        return "; ".join(parts)


def _less(ch: _Checks, a: tuple[str, float], b: tuple[str, float], tol: float = TIE_TOL) -> None:
    gap = b[1] - a[1]
    ch.require(gap > tol, f"{a[0]} < {b[0]} (gap {gap:.3g})")


def verify_theorem(n: int, enum_limit: int = ENUM_THEOREM_LIMIT) -> VerificationReport:
    """Check the smallest / four-largest classification at order ``n``.

    Up to ``enum_limit`` the whole unicyclic class is enumerated and ranked.
    Beyond it, the named graphs are compared directly, together with the
    maximum-degree ``n - 3`` class (built by the hub enumerator) and the
    applicable radius threshold.
    """
    if n < 5:
        raise ValueError(f"stated for n >= 5, got n={n}")
    expected = theorem_order(n)
    ch = _Checks()
    with _Timer() as t:
        if n <= enum_limit:
            ranked = sorted(((ag_radius(g), name_of(g)) for g in enumerate_unicyclic(n)), reverse=True)
            top = [(name, r) for r, name in ranked[:4]]
            computed = [[name, r] for name, r in top]
            ch.require([name for name, _ in top] == expected,
                       f"top four {[name for name, _ in top]} vs {expected}")
            for a, b in zip(ranked[:4], ranked[1:5]):
                _less(ch, (b[1], b[0]), (a[1], a[0]))
            low_r, low_name = ranked[-1]
            ch.require(low_name == "C_n", f"minimum attained by {low_name}")
            ch.require(abs(low_r - 2.0) <= 1e-9, f"minimum radius {low_r:.12f} = 2")
            ch.require(ranked[-2][0] - low_r > TIE_TOL, f"minimum unique (next {ranked[-2][0]:.6f})")
            computed.append(["C_n", low_r])
        else:
            vals = {name: family_radius(_FAMILY_BY_NAME[name], n) for name in expected}
            computed = [[name, vals[name]] for name in expected]
            for hi_name, lo_name in zip(expected, expected[1:]):
                _less(ch, (lo_name, vals[lo_name]), (hi_name, vals[hi_name]))
            spe = vals["S_n+e"]
            ch.require((n - 1) / 2 < spe < n / 2, f"(n-1)/2 < rho(S_n+e) = {spe:.6f} < n/2")
            ch.require((n - 1.5) / 2 < vals["G1"] < (n - 1) / 2, "(n-1.5)/2 < rho(G1) < (n-1)/2")
            if n <= 40:
                d3 = max(ag_radius(g) for g in enumerate_unicyclic_with_max_degree(n, n - 3))
                _less(ch, ("max over max-degree n-3", d3), ("G3", vals["G3"]))
                thr = (n - 1.45) / 2 if n <= 15 else cf.lemma7_threshold(n, n - 3)
                _less(ch, ("max over max-degree n-3", d3), ("threshold", thr))
            if n >= 16:
                thr = cf.lemma7_threshold(n, n - 3)
                _less(ch, ("threshold", thr), ("G3", vals["G3"]))
            else:
                ch.notes.append(
                    "max degree <= n-4 not enumerated; relies on threshold (n-1.45)/2 "
                    f"{'<' if (n - 1.45) / 2 < vals['G3'] else '>='} rho(G3)"
                )
    status = FAIL if ch.failures else PASS
    return VerificationReport(f"theorem/n={n}", status, computed, expected, TIE_TOL, t.ms,
                              "main theorem, branch order", ch.detail())


# --- lemma chains ------------------------------------------------------------------------


def verify_lemma5(ns: Iterable[int]) -> list[VerificationReport]:
    """``(n-1)/2 < rho(S_n+e) < n/2`` for each ``n >= 8``; smaller ``n`` is skipped."""
    out = []
    for n in ns:
        if n < 8:
            out.append(VerificationReport(f"lemma5/n={n}", SKIPPED, detail="bracket stated for n >= 8"))
            continue
        with _Timer() as t:
            r = family_radius("star-plus-edge", n)
        ok = (n - 1) / 2 < r < n / 2
        out.append(VerificationReport(f"lemma5/n={n}", PASS if ok else FAIL, r,
                                      [(n - 1) / 2, n / 2], 0.0, t.ms, "S_n+e bracket"))
    return out


def verify_lemma6(n: int) -> VerificationReport:
    """Branch-appropriate strict chain between constants and rho(G1), rho(G2), rho(G3)."""
    if n < 8:
        raise ValueError(f"stated for n >= 8, got n={n}")
    with _Timer() as t:
        g1, g2, g3 = (family_radius(f, n) for f in ("g1", "g2", "g3"))
        c = lambda s: ((n - s) / 2)  # noqa: E731
        if n <= 15:
            chain = [("rho(G3)", g3), ("rho(G1)", g1), ("rho(G2)", g2), ("(n-1)/2", c(1.0))]
            info = f"(n-1.45)/2 = {c(1.45)} {'<' if c(1.45) < g3 else '>='} rho(G3) = {g3:.6f} (not asserted)"
        elif n <= 21:
            chain = [("(n-1.65)/2", c(1.65)), ("rho(G3)", g3), ("rho(G2)", g2),
                     ("rho(G1)", g1), ("(n-1)/2", c(1.0))]
            info = ""
        else:
            chain = [("(n-1.75)/2", c(1.75)), ("rho(G3)", g3), ("(n-1.6)/2", c(1.6)),
                     ("rho(G2)", g2), ("(n-1.5)/2", c(1.5)), ("rho(G1)", g1), ("(n-1)/2", c(1.0))]
            info = ""
        ch = _Checks()
        for a, b in zip(chain, chain[1:]):
            _less(ch, a, b, tol=0.0)
        if info:
            ch.notes.append(info)
    return VerificationReport(
        f"lemma6/n={n}", FAIL if ch.failures else PASS,
        [v for _, v in chain], [name for name, _ in chain], 0.0, t.ms, "G1/G2/G3 chain", ch.detail(),
    )


# --- bounds --------------------------------------------------------------------------------


def verify_lemma4(n_max: int = 10) -> VerificationReport:
    worst = -math.inf
    count = 0
    with _Timer() as t:
        for n in range(3, n_max + 1):
            for g in enumerate_unicyclic(n):
                for v in range(n):
                    worst = max(worst, cf.row_image(g, v) - cf.lemma4_bound(g, v))
                    count += 1
    return VerificationReport("bounds/lemma4", PASS if worst <= 1e-12 else FAIL, worst, 0.0, 1e-12, t.ms,
                              "row-image bound", f"{count} (graph, vertex) pairs; max(row_image - bound)")


def verify_lemma7(ns: Iterable[int] = (8, 9, 10)) -> list[VerificationReport]:
    out = []
    for n in ns:
        with _Timer() as t:
            worst = -math.inf
            checked = 0
            for g in enumerate_unicyclic(n):
                thr = cf.lemma7_threshold(n, max_degree(g))
                if thr is None:
                    continue
                worst = max(worst, ag_radius(g) - thr)
                checked += 1
        out.append(VerificationReport(f"bounds/lemma7/n={n}", PASS if worst < 0 else FAIL, worst, 0.0,
                                      0.0, t.ms, "radius threshold",
                                      f"{checked} graphs in applicable cases; max(rho - threshold)"))
    return out


def verify_delta_n_minus_3(ns: Iterable[int] = range(8, 16)) -> list[VerificationReport]:
    """Max-degree ``n - 3`` class stays below ``(n-1.45)/2`` for 8 <= n <= 15."""
    out = []
    for n in ns:
        with _Timer() as t:
            top = max(ag_radius(g) for g in enumerate_unicyclic_with_max_degree(n, n - 3))
        thr = (n - 1.45) / 2
        out.append(VerificationReport(f"bounds/delta=n-3/n={n}", PASS if top < thr else FAIL, top, thr,
                                      0.0, t.ms, "max-degree n-3 class below (n-1.45)/2"))
    return out


def verify_zheng(uni_max: int = 10, bi_max: int = 9, star_max: int = 12) -> list[VerificationReport]:
    out = []
    with _Timer() as t:
        worst = -math.inf
        count = 0
        graphs = [g for n in range(3, uni_max + 1) for g in enumerate_unicyclic(n)]
        graphs += [g for n in range(4, bi_max + 1) for g in enumerate_bicyclic(n)]
        for g in graphs:
            worst = max(worst, ag_radius(g) - cf.zheng_upper_bound(g.n, g.m))
            count += 1
    out.append(VerificationReport("bounds/zheng/strict", PASS if worst < -TIE_TOL else FAIL, worst, 0.0,
                                  TIE_TOL, t.ms, "order-size upper bound",
                                  f"{count} enumerated graphs; max(rho - bound)"))
    with _Timer() as t:
        gaps = [abs(ag_radius(star(n)) - cf.zheng_upper_bound(n, n - 1)) for n in range(2, star_max + 1)]
    out.append(VerificationReport("bounds/zheng/stars", PASS if max(gaps) <= 1e-9 else FAIL, max(gaps), 0.0,
                                  1e-9, t.ms, "equality at stars", f"S_2..S_{star_max}"))
    return out


def verify_sign_table(n_max: int = 200) -> list[VerificationReport]:
    out = []
    for sc in cf.SIGN_CONDITIONS:
        with _Timer() as t:
            ns = range(sc.n_min, n_max + 1)
            bad = [n for n in ns if (sc.direct(n) > 0) != sc.positive or sc.direct(n) == 0]
            dev = max(abs(sc.direct(n) - sc.printed(n)) / max(1.0, abs(sc.direct(n))) for n in ns)
            printed_bad = [n for n in ns if (sc.printed(n) > 0) != sc.positive]
        out.append(VerificationReport(
            f"signs/{sc.name}", FAIL if bad else PASS, bad, [], 0.0, t.ms,
            f"n = {sc.n_min}..{n_max}",
            f"n with wrong sign: {bad or 'none'}",
        ))
        out.append(VerificationReport(
            f"signs/{sc.name}/printed-form", REPORT, dev, 0.0, None, None,
            "published simplified expression vs direct evaluation",
            f"max relative deviation {dev:.3g}; printed form has wrong sign at {printed_bad or 'no n'}",
        ))
    return out


def verify_closed_forms(n_lo: int = 8, n_hi: int = 40, phi_lo: int = 5, phi_hi: int = 20) -> list[VerificationReport]:
    """Largest roots of the factors vs eigensolver radii, and Phi residuals at every eigenvalue."""
    out = []
    names = {"g1": "g1", "g2": "g2", "g3": "g3", "t1": "star-plus-edge"}
    with _Timer() as t:
        diffs = []
        for n in range(n_lo, n_hi + 1):
            for fac, fam in names.items():
                diffs.append((abs(cf.largest_root(fac, n) - ag_radius(build_family(fam, n))), fac, n))
    worst = max(diffs)
    out.append(VerificationReport("closed-form/largest-root", PASS if worst[0] <= 1e-8 else FAIL,
                                  worst[0], 0.0, 1e-8, t.ms, "factor roots vs eigensolver",
                                  f"{len(diffs)} checks; worst {worst[1]} at n={worst[2]}"))
    phis = {"phi1": "g1", "phi2": "g2", "phi3": "g3", "phi-star-plus-edge": "star-plus-edge"}
    with _Timer() as t:
        worst = (0.0, "", 0)
        for n in range(phi_lo, phi_hi + 1):
            for phi, fam in phis.items():
                coeffs = cf.phi_coeffs(phi, n)
                for lam in full_spectrum(ag_matrix(build_family(fam, n))).eigenvalues:
                    res = abs(cf.eval_poly(phi, float(lam), n)) / (1.0 + abs(lam) ** n)
                    res = max(res, abs(float(np.polyval(coeffs, lam))) / (1.0 + abs(lam) ** n))
                    worst = max(worst, (res, phi, n))
    out.append(VerificationReport("closed-form/phi-residual", PASS if worst[0] <= 1e-6 else FAIL, worst[0],
                                  0.0, 1e-6, t.ms, "Phi at every eigenvalue, scaled by 1 + |lambda|^n",
                                  f"worst {worst[1]} at n={worst[2]}"))
    return out


# --- bicyclic exploration -------------------------------------------------------------------


@dataclass
class RankedGraph:
    graph6: str
    radius: float
    max_degree: int


@dataclass
class ExtremalRanking:
    n: int
    top: list[RankedGraph]
    minimum: RankedGraph
    class_size: int

    def to_dict(self) -> dict:
        return asdict(self)


def explore_bicyclic(n: int, k: int = 2) -> ExtremalRanking:
    """Top-``k`` connected bicyclic graphs of order ``n`` by AG radius (report only)."""
    if not 5 <= n <= 10:
        raise ValueError(f"bicyclic exploration supports 5 <= n <= 10, got n={n}")
    entries = [RankedGraph(to_graph6(g), ag_radius(g), max_degree(g)) for g in enumerate_bicyclic(n)]
    entries.sort(key=lambda e: (-e.radius, e.graph6))
    return ExtremalRanking(n, entries[:k], entries[-1], len(entries))


def bicyclic_report(n: int, k: int = 2) -> VerificationReport:
    with _Timer() as t:
        rk = explore_bicyclic(n, k)
    degs = [e.max_degree for e in rk.top]
    note = f"max degrees {degs}"
    if n >= 7:
        note += "; all equal n-1" if all(d == n - 1 for d in degs) else "; not all equal n-1"
    return VerificationReport(f"bicyclic/n={n}", REPORT, [[e.graph6, e.radius, e.max_degree] for e in rk.top],
                              None, None, t.ms, "open conjecture, report only", note)


# --- suites ------------------------------------------------------------------------------------

SUITES = ("table1", "table2", "table3", "table4", "table5", "theorem", "lemma5", "lemma6",
          "bounds", "signs", "closed-form")


def run_suite(name: str, n_max: int | None = None) -> list[VerificationReport]:
    """Run a named group of checks; ``n_max`` caps the order where a suite scans over n."""
    if name.startswith("table"):
        return reproduce_table(int(name[5:]))
    if name == "theorem":
        return [verify_theorem(n) for n in range(5, (n_max or 21) + 1)]
    if name == "lemma5":
        return verify_lemma5(range(8, (n_max or 100) + 1))
    if name == "lemma6":
        return [verify_lemma6(n) for n in range(8, (n_max or 100) + 1)]
    if name == "bounds":
        hi = min(n_max or 10, 10)
        return ([verify_lemma4(hi)] + verify_lemma7(range(8, hi + 1)) + verify_delta_n_minus_3()
                + verify_zheng(uni_max=hi, bi_max=min(hi, 9)))
    if name == "signs":
        return verify_sign_table(n_max or 200)
    if name == "closed-form":
        return verify_closed_forms(n_hi=n_max or 40)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
