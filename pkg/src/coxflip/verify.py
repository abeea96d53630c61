"""Named verification suites: golden structural facts as check records.

Each suite re-derives a family of published facts (defining relations,
orbit classifications, trivial centers, kernel orders, the two summary
tables, the E8 central involution) and reports expected/computed pairs.
The CLI prints these as JSON; the acceptance tests assert on them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import RangeError
from .flipping import generators, verify_coxeter_relations
from .gf2 import Gf2Vector, mat_mul, mat_vec
from .graphs import (
    FAMILY_A,
    FAMILY_D,
    FAMILY_E,
    FAMILY_MIN_N,
    CoxeterGraph,
    build_custom,
    build_family,
)
from .groups import MatrixGroup, center
from .orbits import (
    classify,
    in_subspace_z,
    is_irreducible,
    orbit_partition,
    simple_basis,
)
from .structure import build_e8_w0, kernel_order, verify_divisibility_e

RELATION_FAMILIES: tuple[tuple[str, int], ...] = (
    tuple((FAMILY_A, n) for n in range(1, 9))
    + tuple((FAMILY_D, n) for n in range(4, 9))
    + tuple((FAMILY_E, n) for n in range(6, 9))
)

ORBIT_RANGES: tuple[tuple[str, int], ...] = (
    tuple((FAMILY_A, n) for n in range(1, 13))
    + tuple((FAMILY_D, n) for n in range(4, 13))
    + tuple((FAMILY_E, n) for n in range(6, 17))
)

# groups small enough to hold in memory as explicit element sets
ENUMERABLE: tuple[tuple[str, int], ...] = (
    tuple((FAMILY_A, n) for n in range(1, 8))
    + tuple((FAMILY_D, n) for n in range(4, 7))
    + ((FAMILY_E, 6), (FAMILY_E, 7))
)

KERNEL_RANGES: tuple[tuple[str, int], ...] = (
    tuple((FAMILY_A, n) for n in range(1, 9))
    + tuple((FAMILY_D, n) for n in range(4, 9))
    + tuple((FAMILY_E, n) for n in range(6, 9))
)

RANDOM_GRAPH_SEED = 20260809


@dataclass(frozen=True)
class CheckRecord:
    name: str
    expected: str
    computed: str

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerifySuiteResult:
    suite: str
    checks: tuple[CheckRecord, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "pass": self.all_pass,
            "checks": [c.to_json() for c in self.checks],
        }


def _scope(pairs: Sequence[tuple[str, int]], family: str | None, n: int | None):
    if family is None:
        return tuple(pairs)
    if family not in FAMILY_MIN_N:
        raise RangeError(f"unknown family {family!r}")
    if n is None:
        return tuple(p for p in pairs if p[0] == family)
    return ((family, n),)


def random_connected_graphs(count: int, max_n: int = 10, seed: int = RANDOM_GRAPH_SEED):
    """Deterministic sample of connected simple graphs (spanning tree + extras)."""
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        edges = {(rng.randint(1, i - 1), i) for i in range(2, n + 1)}
        for _ in range(rng.randint(0, n)):
            u, v = rng.sample(range(1, n + 1), 2)
            edges.add((min(u, v), max(u, v)))
        graphs.append(build_custom(n, sorted(edges)))
    return graphs


def suite_relations(
    family: str | None = None, n: int | None = None, random_count: int = 20
) -> VerifySuiteResult:
    """Involutions, braid/commutation relations and E-matrix identities."""
    graphs: list[tuple[str, CoxeterGraph]] = [
        (f"{fam}{nn}", build_family(fam, nn)) for fam, nn in _scope(RELATION_FAMILIES, family, n)
    ]
    if family is None:
        graphs += [
            (f"random{i}(n={g.n})", g)
            for i, g in enumerate(random_connected_graphs(random_count))
        ]
    checks = []
    for name, g in graphs:
        report = verify_coxeter_relations(g)
        checks.append(
            CheckRecord(
                name=f"{name} relations",
                expected="0 violations",
                computed=(
                    "0 violations"
                    if report.all_pass
                    else f"{len(report.failures())} violations"
                ),
            )
        )
    return VerifySuiteResult(suite="relations", checks=tuple(checks))


def orbit_fiber_agreement(family: str, n: int) -> tuple[bool, str]:
    """Does the BFS partition coincide with the classifier fibers?"""
    part = orbit_partition(generators(build_family(family, n)), n)
    seen_labels: dict[str, int] = {}
    for cls in part.classes:
        labels = {classify(family, n, Gf2Vector(n, bits)) for bits in cls.members}
        if len(labels) != 1:
            return False, f"class at {cls.representative} spans labels {sorted(labels)}"
        label = labels.pop()
        if label in seen_labels:
            return False, f"label {label} covers two distinct orbits"
        seen_labels[label] = cls.size
    if sum(part.sizes) != 1 << n:
        return False, f"sizes sum to {sum(part.sizes)} != 2^{n}"
    return True, "+".join(str(s) for s in part.sizes)


def suite_orbits(family: str | None = None, n: int | None = None) -> VerifySuiteResult:
    """Closed-form orbit classification against brute-force BFS."""
    checks = []
    for fam, nn in _scope(ORBIT_RANGES, family, n):
        ok, detail = orbit_fiber_agreement(fam, nn)
        checks.append(
            CheckRecord(
                name=f"{fam}{nn} orbits = classifier fibers",
                expected="agree",
                computed="agree" if ok else detail,
            )
        )
    return VerifySuiteResult(suite="orbits", checks=tuple(checks))


def suite_center(family: str | None = None, n: int | None = None) -> VerifySuiteResult:
    """Trivial centers, plus stability of the D-family invariant subspace."""
    checks = []
    for fam, nn in _scope(ENUMERABLE, family, n):
        group = MatrixGroup.from_generators(
            generators(build_family(fam, nn)), backend="explicit"
        )
        central = center(group)
        computed = (
            "{I}"
            if len(central) == 1 and central[0].is_identity()
            else f"{len(central)} elements"
        )
        checks.append(
            CheckRecord(name=f"{fam}{nn} center", expected="{I}", computed=computed)
        )
    if family in (None, FAMILY_D):
        for nn in range(4, 11) if n is None else [n]:
            basis = simple_basis(FAMILY_D, nn)
            gens = generators(build_family(FAMILY_D, nn))
            stable = all(
                in_subspace_z(basis, mat_vec(g, basis.matrix.column(j)))
                for g in gens
                for j in range(1, nn)
            )
            checks.append(
                CheckRecord(
                    name=f"D{nn} moves preserve Z",
                    expected="stable",
                    computed="stable" if stable else "escapes",
                )
            )
    return VerifySuiteResult(suite="center", checks=tuple(checks))


TABLE1_KERNEL = {FAMILY_A: lambda n: 2 if n == 1 else 1,
                 FAMILY_D: lambda n: 2 if n % 2 == 0 else 1,
                 FAMILY_E: lambda n: {6: 1, 7: 2, 8: 2}[n]}

TABLE1_IRREDUCIBLE = {FAMILY_A: lambda n: n == 1 or n % 2 == 0,
                      FAMILY_D: lambda n: False,
                      FAMILY_E: lambda n: n % 2 == 0}


def suite_kernel(family: str | None = None, n: int | None = None) -> VerifySuiteResult:
    checks = []
    for fam, nn in _scope(KERNEL_RANGES, family, n):
        checks.append(
            CheckRecord(
                name=f"{fam}{nn} kernel order",
                expected=str(TABLE1_KERNEL[fam](nn)),
                computed=str(kernel_order(fam, nn)),
            )
        )
    return VerifySuiteResult(suite="kernel", checks=tuple(checks))


def suite_tables(family: str | None = None, n: int | None = None) -> VerifySuiteResult:
    """Both summary tables: kernel/irreducibility rows and orbit fibers."""
    checks = list(suite_kernel(family, n).checks)
    for fam, nn in _scope(KERNEL_RANGES, family, n):
        computed = is_irreducible(generators(build_family(fam, nn)), nn)
        checks.append(
            CheckRecord(
                name=f"{fam}{nn} irreducible",
                expected=str(TABLE1_IRREDUCIBLE[fam](nn)),
                computed=str(computed),
            )
        )
    checks.extend(suite_orbits(family, n).checks)
    return VerifySuiteResult(suite="tables", checks=tuple(checks))


def suite_e8_w0() -> VerifySuiteResult:
    """The explicit central involution of the E7 subgroup of E8."""
    w0 = build_e8_w0()
    g8 = build_family(FAMILY_E, 8)
    gens = generators(g8)
    basis = simple_basis(FAMILY_E, 8)
    checks = [
        CheckRecord("w0 != I", "True", str(not w0.is_identity())),
        CheckRecord("w0^2 = I", "True", str(mat_mul(w0, w0).is_identity())),
    ]
    for j in range(2, 9):
        s = gens[j - 1]
        checks.append(
            CheckRecord(
                f"w0 commutes with move {j}",
                "True",
                str(mat_mul(w0, s) == mat_mul(s, w0)),
            )
        )
    # the full flipping group has trivial center, so move 1 must not commute
    s1 = gens[0]
    checks.append(
        CheckRecord(
            "w0 does not commute with move 1",
            "True",
            str(mat_mul(w0, s1) != mat_mul(s1, w0)),
        )
    )
    image = mat_vec(w0, basis.overline(8))
    checks.append(
        CheckRecord(
            "w0 maps chain vector 8 to 1+8",
            (basis.overline(1) ^ basis.overline(8)).to_string(),
            image.to_string(),
        )
    )
    for nn in (6, 7, 8):
        report = verify_divisibility_e(nn)
        checks.append(
            CheckRecord(
                f"E{nn}: |subgroup(2..n)| * |O1| = |group|",
                str(report.group_order),
                f"{report.subgroup_order}*{report.orbit_size}="
                f"{report.product}" if not report.equals else str(report.product),
            )
        )
    return VerifySuiteResult(suite="e8-w0", checks=tuple(checks))


SUITES = {
    "relations": suite_relations,
    "orbits": suite_orbits,
    "center": suite_center,
    "kernel": suite_kernel,
    "tables": suite_tables,
}


def run_suite(name: str, family: str | None = None, n: int | None = None) -> VerifySuiteResult:
    if name == "e8-w0":
        return suite_e8_w0()
    if name not in SUITES:
        raise RangeError(f"unknown suite {name!r}; expected one of "
                         f"{sorted(SUITES) + ['e8-w0']}")
    return SUITES[name](family, n)
