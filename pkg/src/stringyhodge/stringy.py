"""Assembly of the stringy E-function from log-resolution combinatorics.

A resolution descriptor lists the exceptional components with their
discrepancies and the Hodge diamonds of all nonempty closed strata D_J
(the empty subset stands for the resolved variety itself).  Everything in
this module is coefficient arithmetic over those diamonds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import hodge
from .hodge import HodgeDiamond
from .polyalg import (
    BivariatePoly,
    DenominatorSpec,
    StringyFunction,
    exact_divide_test,
)

Subset = Tuple[str, ...]


class DescriptorError(ValueError):
    """Raised when a resolution descriptor violates its invariants."""


@dataclass(frozen=True)
class ResolutionDescriptor:
    """Combinatorial data of a log-resolution.

    strata maps sorted id-tuples J to the diamond of the closed stratum D_J;
    the empty tuple is the ambient resolved variety.  A missing key means the
    stratum is empty.  A single component entry may stand for a disjoint
    union of divisors sharing one discrepancy: its stratum diamond is then
    the entrywise sum and h^{0,0} counts the pieces.
    """

    n: int
    components: Tuple[Tuple[str, int], ...]
    strata: Mapping[Subset, HodgeDiamond]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(
            self, "strata", {tuple(k): v for k, v in dict(self.strata).items()}
        )

    def discrepancy(self, comp_id: str) -> int:
        for cid, a in self.components:
            if cid == comp_id:
                return a
        raise KeyError(comp_id)

    def validate(self) -> List[str]:
        problems = []
        ids = [cid for cid, _ in self.components]
        if len(set(ids)) != len(ids):
            problems.append("duplicate component ids")
        for cid, a in self.components:
            if a < 0:
                problems.append(f"component {cid!r} has negative discrepancy {a}")
        if () not in self.strata:
            problems.append("missing Y stratum (empty subset)")
        known = set(ids)
        for subset, diamond in self.strata.items():
            if tuple(sorted(subset)) != subset:
                problems.append(f"stratum key {subset!r} is not sorted")
            if len(set(subset)) != len(subset):
                problems.append(f"stratum key {subset!r} repeats a component")
            unknown = set(subset) - known
            if unknown:
                problems.append(f"stratum {subset!r} names unknown components {sorted(unknown)}")
            expected = self.n - len(subset)
            if diamond.dim != expected:
                problems.append(
                    f"stratum {subset!r} has dimension {diamond.dim}, expected {expected}"
                )
            problems.extend(
                f"stratum {subset!r}: {msg}" for msg in hodge.validate(diamond)
            )
            if subset:
                for sub in combinations(subset, len(subset) - 1):
                    if tuple(sub) not in self.strata:
                        problems.append(
                            f"downward closure broken: {subset!r} present but {sub!r} missing"
                        )
        return problems

    def check_valid(self) -> None:
        problems = self.validate()
        if problems:
            raise DescriptorError("; ".join(problems))

    def ambient(self) -> HodgeDiamond:
        return self.strata[()]

    def level(self, k: int) -> Optional[HodgeDiamond]:
        """Summed diamond of D(k), the union of all |J| = k strata.

        D(0) is the ambient variety.  Returns None when D(k) is empty.
        """
        pieces = [d for J, d in self.strata.items() if len(J) == k]
        if not pieces:
            return None
        out = pieces[0]
        for piece in pieces[1:]:
            out = out + piece
        return out

    def level_hpq(self, k: int, p: int, q: int) -> int:
        lvl = self.level(k)
        return lvl.hpq(p, q) if lvl is not None else 0

    def strata_pd_consistent(self) -> bool:
        """Whether every stratum satisfies Poincare duality (summed form)."""
        return all(
            not hodge.validate(d, smooth_projective=True) for d in self.strata.values()
        )


def _assemble(d: ResolutionDescriptor) -> StringyFunction:
    # stringy_e without descriptor validation; the identity checks use this so
    # that negative controls with broken diamonds still evaluate
    positive = [(cid, a) for cid, a in d.components if a >= 1]
    denom = DenominatorSpec(tuple(a + 1 for _, a in positive))
    numerator = BivariatePoly.zero()
    discrepancies = dict(d.components)
    for subset, diamond in d.strata.items():
        if any(discrepancies[cid] == 0 for cid in subset):
            continue
        term = hodge.e_polynomial(diamond, check=False)
        for cid, a in positive:
            m = a + 1
            if cid in subset:
                factor = BivariatePoly({(1, 1): 1, (m, m): -1})  # w - w^m
            else:
                factor = BivariatePoly({(m, m): 1, (0, 0): -1})  # w^m - 1
            term = term * factor
        numerator = numerator + term
    return StringyFunction(numerator, denom)


def stringy_e(d: ResolutionDescriptor) -> StringyFunction:
    """The stringy E-function of the descriptor, over its factored denominator.

    Sum over subsets J of E(D_J) * prod_{j in J} (w - w^{a_j+1})/(w^{a_j+1}-1)
    with w = uv.  Subsets containing a discrepancy-0 component contribute the
    zero factor w - w and are skipped.
    """
    d.check_valid()
    return _assemble(d)


@dataclass(frozen=True)
class StringyReport:
    """Expansion data and identity checks for one descriptor."""

    label: str
    n: int
    e_function: StringyFunction
    bound: int
    polynomial: Optional[BivariatePoly]
    coefficients: Mapping[Tuple[int, int], int]  # b_{p,q}, p+q <= bound
    symmetry: bool
    pd_identity: Optional[bool]  # None = inconclusive (strata not PD)
    negative: Tuple[Tuple[int, int], ...] = ()

    def h_st(self, p: int, q: int) -> int:
        return (-1) ** (p + q) * self.coefficients.get((p, q), 0)

    def h_st_table(self) -> Dict[Tuple[int, int], int]:
        return {
            (p, q): (-1) ** (p + q) * b for (p, q), b in self.coefficients.items()
        }


def check_symmetry(d: ResolutionDescriptor) -> bool:
    """E_st(u, v) = E_st(v, u): the numerator is u <-> v invariant."""
    num = _assemble(d).numerator
    return num == num.swap_vars()


def check_pd_identity(d: ResolutionDescriptor) -> Optional[bool]:
    """E_st(u, v) = (uv)^n E_st(1/u, 1/v), checked exactly.

    Each denominator factor transforms as w^{-m} - 1 = -w^{-m}(w^m - 1), so
    the identity reduces to a Laurent-polynomial comparison of numerators.
    Returns None (inconclusive) when a stratum fails per-stratum duality:
    the identity presupposes genuine geometric input.
    """
    if not d.strata_pd_consistent():
        return None
    f = _assemble(d)
    r = len(f.denominator.factors)
    shift = d.n + sum(f.denominator.factors)
    transformed = f.numerator.invert_vars() * BivariatePoly.w_power(shift, (-1) ** r)
    return f.numerator == transformed


def stringy_hodge_table(d: ResolutionDescriptor, bound: Optional[int] = None) -> StringyReport:
    """Stringy Hodge numbers h^{p,q}_st = (-1)^{p+q} b_{p,q} up to p+q <= bound.

    The b_{p,q} come from the series expansion at the origin; when the
    E-function is a polynomial the expansion terminates and agrees with it.
    """
    d.check_valid()
    if bound is None:
        bound = 2 * d.n
    if bound < 0:
        raise ValueError("expansion bound must be nonnegative")
    f = stringy_e(d)
    coeffs = f.series_coefficients(bound)
    poly = exact_divide_test(f)
    negative = tuple(
        sorted((p, q) for (p, q), b in coeffs.items() if (-1) ** (p + q) * b < 0)
    )
    return StringyReport(
        label=d.label,
        n=d.n,
        e_function=f,
        bound=bound,
        polynomial=poly,
        coefficients=coeffs,
        symmetry=check_symmetry(d),
        pd_identity=check_pd_identity(d),
        negative=negative,
    )


def check_polynomial_consequences(d: ResolutionDescriptor) -> Dict[str, object]:
    """Structural facts forced when E_st is a polynomial.

    Degree exactly 2n, h^{p,q}_st = h^{n-p,n-q}_st, and vanishing outside the
    n x n diamond.  Inapplicable for non-polynomial E-functions.
    """
    poly = exact_divide_test(stringy_e(d))
    if poly is None:
        return {"applicable": False}
    n = d.n
    failures = []
    if poly.total_degree() != 2 * n:
        failures.append(f"degree {poly.total_degree()} != {2 * n}")
    for (p, q), c in poly.terms.items():
        if p > n or q > n or p < 0 or q < 0:
            failures.append(f"nonzero coefficient outside the diamond at ({p},{q})")
        if c != poly.coeff(n - p, n - q):
            failures.append(f"duality broken between ({p},{q}) and ({n - p},{n - q})")
    return {"applicable": True, "passed": not failures, "failures": sorted(set(failures))}


def a_pq(d: ResolutionDescriptor, p: int, q: int) -> int:
    """Discrepancy-free part: alternating sum of h^{p-k,q-k}(D(k)), D(0) = Y."""
    d.check_valid()
    total = 0
    for k in range(0, min(p, q, len(d.components)) + 1):
        total += (-1) ** k * d.level_hpq(k, p - k, q - k)
    return total


def _require_terminal(d: ResolutionDescriptor) -> None:
    bad = [cid for cid, a in d.components if a < 1]
    if bad:
        raise DescriptorError(
            f"operation requires all discrepancies >= 1; components {bad} have a = 0"
        )


def closed_form_h(d: ResolutionDescriptor, p: int, q: int) -> int:
    """Closed forms for h^{p,q}_st with q <= 2 (terminal input for q >= 1).

    q = 0: h^{p,0}(Y).
    q = 1: h^{p,1}(Y) - h^{p-1,0}(D(1)).
    q = 2: h^{p,2}(Y) - h^{p-1,1}(D(1)) + h^{p-2,0}(D(2))
           + sum over discrepancy-1 components of h^{p-2,0}(D_j).
    """
    d.check_valid()
    if q not in (0, 1, 2):
        raise ValueError("closed forms are only available for q in {0, 1, 2}")
    if q == 0:
        return d.level_hpq(0, p, 0)
    _require_terminal(d)
    if q == 1:
        return d.level_hpq(0, p, 1) - d.level_hpq(1, p - 1, 0)
    extra = sum(
        d.strata[(cid,)].hpq(p - 2, 0)
        for cid, a in d.components
        if a == 1 and (cid,) in d.strata
    )
    return (
        d.level_hpq(0, p, 2)
        - d.level_hpq(1, p - 1, 1)
        + d.level_hpq(2, p - 2, 0)
        + extra
    )


def h22st_fourfold(d: ResolutionDescriptor) -> int:
    """h^{2,2}_st of a terminal fourfold: a_{2,2} plus the discrepancy-1 count."""
    d.check_valid()
    if d.n != 4:
        raise DescriptorError(f"fourfold formula requires n = 4, got n = {d.n}")
    _require_terminal(d)
    ones = sum(
        d.strata[(cid,)].h0()
        for cid, a in d.components
        if a == 1 and (cid,) in d.strata
    )
    return a_pq(d, 2, 2) + ones


def crepant_compare(d1: ResolutionDescriptor, d2: ResolutionDescriptor) -> bool:
    """Whether two descriptors yield the same stringy E-function, exactly."""
    if d1.n != d2.n:
        raise DescriptorError(f"dimension mismatch: {d1.n} vs {d2.n}")
    return stringy_e(d1).equals(stringy_e(d2))


def first_coefficient_difference(
    d1: ResolutionDescriptor, d2: ResolutionDescriptor, bound: Optional[int] = None
) -> Optional[Tuple[int, int, int, int]]:
    """First (p,q) in total-degree order where the expansions differ.

    Returns (p, q, b1, b2) or None when all coefficients up to the bound agree.
    """
    if bound is None:
        bound = 2 * max(d1.n, d2.n) + 2
    c1 = stringy_e(d1).series_coefficients(bound)
    c2 = stringy_e(d2).series_coefficients(bound)
    keys = sorted(set(c1) | set(c2), key=lambda t: (t[0] + t[1], t))
    for key in keys:
        if c1.get(key, 0) != c2.get(key, 0):
            return (key[0], key[1], c1.get(key, 0), c2.get(key, 0))
    return None
