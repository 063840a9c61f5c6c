"""Local defect of threefold singularities, diamond inequalities, products,
and nonnegativity reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import hodge
from .hodge import HodgeDiamond
from .stringy import (
    DescriptorError,
    ResolutionDescriptor,
    StringyReport,
    a_pq,
    closed_form_h,
    h22st_fourfold,
    stringy_hodge_table,
    _require_terminal,
)


@dataclass(frozen=True)
class FiberComponent:
    comp_id: str
    diamond: HodgeDiamond
    discrepancy: int


@dataclass(frozen=True)
class ExceptionalFiberDescriptor:
    """Exceptional fiber over one isolated threefold singularity.

    Components are the surfaces of the fiber; pairwise_counts gives the
    number of connected components of each pairwise intersection curve.
    """

    point: str
    components: Tuple[FiberComponent, ...]
    pairwise_counts: Mapping[Tuple[str, str], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(
            self,
            "pairwise_counts",
            {tuple(sorted(k)): v for k, v in dict(self.pairwise_counts).items()},
        )

    def validate(self) -> List[str]:
        problems = []
        ids = [c.comp_id for c in self.components]
        if len(set(ids)) != len(ids):
            problems.append("duplicate fiber component ids")
        for c in self.components:
            if c.diamond.dim != 2:
                problems.append(
                    f"component {c.comp_id!r} must be a surface, got dim {c.diamond.dim}"
                )
            if c.discrepancy < 0:
                problems.append(f"component {c.comp_id!r} has negative discrepancy")
            problems.extend(
                f"component {c.comp_id!r}: {msg}" for msg in hodge.validate(c.diamond)
            )
        for pair, count in self.pairwise_counts.items():
            if len(pair) != 2 or pair[0] == pair[1]:
                problems.append(f"malformed intersection pair {pair!r}")
            elif not set(pair) <= set(ids):
                problems.append(f"intersection pair {pair!r} names unknown components")
            if count < 0:
                problems.append(f"negative intersection count for pair {pair!r}")
        return problems

    def check_valid(self) -> None:
        problems = self.validate()
        if problems:
            raise DescriptorError("; ".join(problems))


def local_defect(fd: ExceptionalFiberDescriptor) -> int:
    """sigma = h^{1,1}(E(1)) - h^0(E(2)) - h^0(E(1)) for the fiber.

    Zero means the singularity is analytically Q-factorial.
    """
    fd.check_valid()
    h11 = sum(c.diamond.hpq(1, 1) for c in fd.components)
    h0_1 = sum(c.diamond.h0() for c in fd.components)
    h0_2 = sum(fd.pairwise_counts.values())
    return h11 - h0_2 - h0_1


def defect_bound_check(fd: ExceptionalFiberDescriptor) -> bool:
    """Whether sigma is at most the number of discrepancy-1 components.

    False means the fiber data cannot come from a terminal threefold
    singularity; the bound is a theorem for genuine geometric input.
    """
    fd.check_valid()
    ones = sum(c.diamond.h0() for c in fd.components if c.discrepancy == 1)
    return local_defect(fd) <= ones


def threefold_h22_minus_h11(d: ResolutionDescriptor) -> int:
    """h^{2,2}_st - h^{1,1}_st of a terminal threefold, in closed form.

    Equals -h^{1,1}(D(1)) + h^0(D(2)) + h^0(D(1)) + the discrepancy-1
    component count; nonnegative for geometric input, and zero whenever the
    stringy E-function is a polynomial.
    """
    d.check_valid()
    if d.n != 3:
        raise DescriptorError(f"threefold formula requires n = 3, got n = {d.n}")
    _require_terminal(d)
    ones = sum(
        d.strata[(cid,)].h0()
        for cid, a in d.components
        if a == 1 and (cid,) in d.strata
    )
    return (
        -d.level_hpq(1, 1, 1)
        + (d.level(2).h0() if d.level(2) is not None else 0)
        + (d.level(1).h0() if d.level(1) is not None else 0)
        + ones
    )


def product_stringy(d: ResolutionDescriptor, z: HodgeDiamond) -> ResolutionDescriptor:
    """Descriptor of X x Z for a smooth projective Z.

    Components and discrepancies are unchanged; every stratum is multiplied
    by Z.  The stringy E-function picks up the factor E(Z).
    """
    problems = hodge.validate(z, smooth_projective=True)
    if problems:
        raise DescriptorError("product factor invalid: " + "; ".join(problems))
    d.check_valid()
    return ResolutionDescriptor(
        n=d.n + z.dim,
        components=d.components,
        strata={J: hodge.kunneth(diamond, z) for J, diamond in d.strata.items()},
        label=f"{d.label} x (dim-{z.dim} factor)" if d.label else "",
    )


@dataclass(frozen=True)
class ConjectureReport:
    """Nonnegativity verdicts for the stringy Hodge numbers of one descriptor."""

    label: str
    n: int
    bound: int
    polynomial: bool
    verdicts: Mapping[Tuple[int, int], str]  # "nonnegative" | "negative"
    values: Mapping[Tuple[int, int], int]  # h^{p,q}_st from the expansion
    provenance: Mapping[Tuple[int, int], str]  # "expansion" | "closed-form"
    negative_details: Mapping[Tuple[int, int], Dict[str, int]]
    threefold_inequality: Optional[bool]  # h^{2,2}_st >= h^{1,1}_st, n = 3 only

    def all_nonnegative(self) -> bool:
        return all(v == "nonnegative" for v in self.verdicts.values())


def conjecture_report(
    d: ResolutionDescriptor, bound: Optional[int] = None
) -> ConjectureReport:
    """Check nonnegativity of every h^{p,q}_st with p + q <= bound.

    Values come from the origin expansion; for q <= 2 on terminal input the
    closed forms are used as provenance cross-checks.  Negative entries are
    reported with their contributing terms (the discrepancy-free part and the
    discrepancy-1 correction).
    """
    report = stringy_hodge_table(d, bound)
    terminal = all(a >= 1 for _, a in d.components)
    verdicts: Dict[Tuple[int, int], str] = {}
    values: Dict[Tuple[int, int], int] = {}
    provenance: Dict[Tuple[int, int], str] = {}
    negative_details: Dict[Tuple[int, int], Dict[str, int]] = {}
    for p in range(report.bound + 1):
        for q in range(report.bound + 1 - p):
            value = report.h_st(p, q)
            values[(p, q)] = value
            verdicts[(p, q)] = "nonnegative" if value >= 0 else "negative"
            if q <= 2 and (q == 0 or terminal):
                assert closed_form_h(d, p, q) == value
                provenance[(p, q)] = "closed-form"
            else:
                provenance[(p, q)] = "expansion"
            if value < 0:
                ones = sum(
                    d.strata[(cid,)].h0()
                    for cid, a in d.components
                    if a == 1 and (cid,) in d.strata
                )
                negative_details[(p, q)] = {
                    "h_st": value,
                    "a_pq": a_pq(d, p, q),
                    "discrepancy_one_count": ones,
                }
    ineq = None
    if d.n == 3 and terminal:
        ineq = threefold_h22_minus_h11(d) >= 0
    return ConjectureReport(
        label=d.label,
        n=d.n,
        bound=report.bound,
        polynomial=report.polynomial is not None,
        verdicts=verdicts,
        values=values,
        provenance=provenance,
        negative_details=negative_details,
        threefold_inequality=ineq,
    )
