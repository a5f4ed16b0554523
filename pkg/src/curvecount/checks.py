"""Table of known values, recomputed on demand by ``curvecount verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import classical, tacnode
from .irreducible import count_irr, product_degree
from .severi import CountTable, count, key
from .tally import sheet_profile

SUITES = ("severi", "irr", "salmon", "tacnode", "chebyshev")


@dataclass(frozen=True)
class Check:
    suite: str
    expression: str
    expected: str
    compute: Callable[[], object]
    citation: str


@dataclass(frozen=True)
class CheckResult:
    suite: str
    expression: str
    expected: str
    computed: str
    citation: str

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    @property
    def status(self) -> str:
        return "pass" if self.passed else "FAIL"

    def as_dict(self) -> dict[str, str]:
        return {
            "suite": self.suite,
            "expression": self.expression,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "citation": self.citation,
        }


def _table(memo: CountTable) -> list[Check]:
    def n(d, delta, a, b):
        return lambda: count(key(d, delta, a, b), memo)

    def nirr(d, delta, a, b):
        return lambda: count_irr(key(d, delta, a, b), memo)

    quartic2 = "2-nodal quartics, contact chain along a line"
    tang = "1-nodal cubics with a tangency to a line"
    trinodal = "trinodal quartics through 11 points"
    rows = [
        Check("severi", "N^{4,2}(0,4)", "225", n(4, 2, 0, 4), quartic2),
        Check("severi", "N^{4,2}(1,3)", "225", n(4, 2, 1, 3), quartic2),
        Check("severi", "N^{4,2}(2,2)", "225", n(4, 2, 2, 2), quartic2),
        Check("severi", "N^{4,2}(3,1)", "222", n(4, 2, 3, 1), quartic2),
        Check("severi", "N^{4,2}(4,0)", "172", n(4, 2, 4, 0), quartic2),
        Check("severi", "N^{3,1}(0,[1,1])", "36", n(3, 1, 0, (1, 1)), tang),
        Check("severi", "N^{3,1}(1,[0,1])", "16", n(3, 1, 1, (0, 1)), tang),
        Check("severi", "N^{3,1}([0,1],1)", "10", n(3, 1, (0, 1), 1), tang),
        Check("severi", "N^{3,1}([1,1],0)", "8", n(3, 1, (1, 1), 0), tang),
        Check("severi", "N^{3,1}(0,3)", "12", n(3, 1, 0, 3), "rational plane cubics"),
        Check("severi", "N^{3,2}(0,3)", "21", n(3, 2, 0, 3), "2-nodal cubics through 7 points"),
        Check("severi", "N^{2,1}(0,2)", "3", n(2, 1, 0, 2), "line pairs through 4 points"),
        Check("severi", "N^{2,0}(0,[0,1])", "2", n(2, 0, 0, (0, 1)), "conics tangent to a line through 4 points"),
        Check("severi", "N^{2,0}(1,1)", "1", n(2, 0, 1, 1), "conics through 5 points"),
        Check("severi", "N^{4,3}(0,4)", "675", n(4, 3, 0, 4), trinodal),
        Check("severi", "N^{4,3}(2,2)", "674", n(4, 3, 2, 2), trinodal),
        Check("severi", "N^{4,3}(3,1)", "636", n(4, 3, 3, 1), trinodal),
        Check("irr", "N_irr^{4,3}(0,4)", "620", nirr(4, 3, 0, 4), "rational quartics"),
        Check("irr", "N_irr^{4,3}(2,2)", "620", nirr(4, 3, 2, 2), trinodal),
        Check("irr", "N_irr^{4,3}(3,1)", "584", nirr(4, 3, 3, 1), trinodal),
        Check("irr", "N_irr^{3,1}(0,3)", "12", nirr(3, 1, 0, 3), "rational plane cubics"),
        Check(
            "irr",
            "N^{4,3}(2,2) - N_irr^{4,3}(2,2)",
            "54",
            lambda: count(key(4, 3, 2, 2), memo) - count_irr(key(4, 3, 2, 2), memo),
            "cubic plus line splittings",
        ),
        Check(
            "irr",
            "N^{4,3}(3,1) - N_irr^{4,3}(3,1)",
            "52",
            lambda: count(key(4, 3, 3, 1), memo) - count_irr(key(4, 3, 3, 1), memo),
            "cubic plus line splittings",
        ),
        Check(
            "irr",
            "2*deg(line x cubic; 1,8) + deg(line x cubic; 2,7)",
            "54",
            lambda: 2 * product_degree([(1, 1), (8, 1)]) + product_degree([(2, 1), (7, 1)]),
            "Segre product degrees",
        ),
        Check("salmon", "t(3)", "45", lambda: classical.salmon(3).triple_points, "tritangent planes of a cubic surface"),
        Check("salmon", "t(4)", "3200", lambda: classical.salmon(4).triple_points, "tritangent planes of a quartic surface"),
        Check("salmon", "deg dual(3)", "12", lambda: classical.salmon(3).dual, "dual of a cubic surface"),
        Check(
            "salmon",
            "limit dual identity, 2<=d<=12",
            "True",
            lambda: all(classical.limit_dual_check(d, h)[2] for d in range(2, 13) for h in range(1, d)),
            "dual degree under degeneration",
        ),
        Check(
            "tacnode",
            "Disc_x((x^2+a0)^2 - 4(b1 x + b0))",
            "4096a0^3*b1^2 + 4096a0^2*b0^2 - 18432a0*b0*b1^2 - 6912b1^4 - 16384b0^3",
            lambda: tacnode.swallowtail(),
            "swallowtail",
        ),
        Check("tacnode", "quasi-degree of swallowtail, weights (2,4,3)", "12", tacnode.swallowtail_quasi_degree, "swallowtail"),
        Check("tacnode", "cusp generators vanish on parametrization", "True", tacnode.cusp_locus_verify, "cusp locus"),
        Check(
            "tacnode",
            "Psi fibers: m-1 nodes and beta0 = t^m/4, m=2..5",
            "True",
            _psi_all,
            "tacnode smoothing curve",
        ),
        Check("tacnode", "sheet_profile([2])", "(2, 2, 1, 1)", lambda: sheet_profile([2]), "branch count"),
        Check("tacnode", "sheet_profile([2,2])", "(4, 2, 2, 1)", lambda: sheet_profile([2, 2]), "branch count"),
        Check("tacnode", "sheet_profile([2,3])", "(6, 6, 1, 2)", lambda: sheet_profile([2, 3]), "branch count"),
    ]
    tables = {
        "T": ["1", "x", "2x^2 - 1", "4x^3 - 3x", "8x^4 - 8x^2 + 1"],
        "U": ["1", "2x", "4x^2 - 1", "8x^3 - 4x", "16x^4 - 12x^2 + 1"],
        "V": ["1", "2x - 1", "4x^2 - 2x - 1", "8x^3 - 4x^2 - 4x + 1", "16x^4 - 8x^3 - 12x^2 + 4x + 1"],
        "W": ["1", "2x + 1", "4x^2 + 2x - 1", "8x^3 + 4x^2 - 4x - 1", "16x^4 + 8x^3 - 12x^2 - 4x + 1"],
    }
    for kind, polys in tables.items():
        for i, text in enumerate(polys):
            rows.append(
                Check("chebyshev", f"{kind}_{i}", text, (lambda k=kind, j=i: tacnode.chebyshev(k, j)), "Chebyshev table")
            )
    for name in ("a1", "a2", "b1", "b2"):
        rows.append(
            Check(
                "chebyshev",
                f"identity {name} for l=1..10",
                "True",
                (lambda nm=name: all(_identity(l, nm) for l in range(1, 11))),
                "square factors of T_m +- 1",
            )
        )
    rows.append(
        Check(
            "chebyshev",
            "identity a2 with U_l for l=1..10",
            "False",
            lambda: any(_identity(l, "a2_index_l") for l in range(1, 11)),
            "index check of the second-kind factor",
        )
    )
    return rows


def _identity(l: int, name: str) -> bool:
    return next(c for c in tacnode.chebyshev_identity_check(l) if c.name == name).passed


def psi_ok(m: int, t) -> bool:
    p = tacnode.psi_point(m, t)
    prof = tacnode.node_profile(p)
    t = Fraction(t)
    return prof.double_roots == m - 1 and not prof.worse and p.beta[0] == t**m / 4 and not any(p.beta[1:])


def _psi_all() -> bool:
    return all(psi_ok(m, t) for m in range(2, 6) for t in (1, Fraction(1, 2), 2, -1))


def run(only: str | None = None, memo: CountTable | None = None) -> list[CheckResult]:
    if only is not None and only not in SUITES:
        raise ValueError(f"unknown suite {only!r}; choose from {', '.join(SUITES)}")
    memo = memo if memo is not None else CountTable()
    out = []
    for c in _table(memo):
        if only is not None and c.suite != only:
            continue
        out.append(CheckResult(c.suite, c.expression, c.expected, str(c.compute()), c.citation))
    return out
