"""Hodge diamonds of smooth projective varieties and their E-polynomials.

A diamond may describe a disconnected variety: entries are summed over
connected components and h^{0,0} records the number of components.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Tuple

from .polyalg import BivariatePoly


class DiamondError(ValueError):
    """Raised when an operation receives an invalid Hodge diamond."""


class HodgeDiamond:
    """Table h^{p,q}, 0 <= p, q <= dim, for a smooth projective variety."""

    __slots__ = ("dim", "h")

    def __init__(self, dim: int, h: Optional[Mapping[Tuple[int, int], int]] = None):
        if dim < 0:
            raise DiamondError("dimension must be nonnegative")
        self.dim = dim
        self.h: Dict[Tuple[int, int], int] = {}
        if h:
            for (p, q), n in h.items():
                if n == 0:
                    continue
                if not (0 <= p <= dim and 0 <= q <= dim):
                    raise DiamondError(f"h^{{{p},{q}}} outside the {dim}-dimensional range")
                self.h[(p, q)] = n

    def hpq(self, p: int, q: int) -> int:
        """h^{p,q}, with 0 outside the stored range."""
        return self.h.get((p, q), 0)

    def h0(self) -> int:
        """Number of connected components, read off as h^{0,0}."""
        return self.hpq(0, 0)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HodgeDiamond)
            and self.dim == other.dim
            and self.h == other.h
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self.h.items())))

    def __repr__(self) -> str:
        return f"HodgeDiamond(dim={self.dim}, h={self.h!r})"

    def __add__(self, other: "HodgeDiamond") -> "HodgeDiamond":
        """Disjoint union: entrywise sum, same dimension."""
        if self.dim != other.dim:
            raise DiamondError("disjoint union requires equal dimensions")
        out = dict(self.h)
        for k, n in other.h.items():
            out[k] = out.get(k, 0) + n
        return HodgeDiamond(self.dim, out)

    def __mul__(self, copies: int) -> "HodgeDiamond":
        if copies < 0:
            raise DiamondError("copy count must be nonnegative")
        return HodgeDiamond(self.dim, {k: copies * n for k, n in self.h.items()})

    __rmul__ = __mul__


def validate(
    d: HodgeDiamond,
    connected_smooth_projective: bool = False,
    smooth_projective: bool = False,
) -> List[str]:
    """List of violated invariants; empty iff valid under the requested flags.

    `smooth_projective` enforces Poincare duality for a possibly disconnected
    variety; `connected_smooth_projective` additionally pins h^{0,0} = 1.
    """
    problems = []
    for (p, q), n in d.h.items():
        if n < 0:
            problems.append(f"negative entry h^{{{p},{q}}} = {n}")
        if d.hpq(p, q) != d.hpq(q, p):
            problems.append(
                f"conjugation symmetry broken: h^{{{p},{q}}} = {d.hpq(p, q)} "
                f"but h^{{{q},{p}}} = {d.hpq(q, p)}"
            )
    if smooth_projective or connected_smooth_projective:
        n_dim = d.dim
        for (p, q), _ in d.h.items():
            if d.hpq(p, q) != d.hpq(n_dim - p, n_dim - q):
                problems.append(
                    f"Poincare duality broken: h^{{{p},{q}}} = {d.hpq(p, q)} "
                    f"but h^{{{n_dim - p},{n_dim - q}}} = {d.hpq(n_dim - p, n_dim - q)}"
                )
        if d.h0() < 1:
            problems.append("h^{0,0} must count at least one component")
    if connected_smooth_projective and d.h0() != 1:
        problems.append(f"connected variety must have h^{{0,0}} = 1, got {d.h0()}")
    return sorted(set(problems))


def e_polynomial(d: HodgeDiamond, check: bool = True) -> BivariatePoly:
    """Hodge-Deligne polynomial sum (-1)^{p+q} h^{p,q} u^p v^q."""
    if check:
        problems = validate(d)
        if problems:
            raise DiamondError("; ".join(problems))
    return BivariatePoly({(p, q): (-1) ** (p + q) * n for (p, q), n in d.h.items()})


def kunneth(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    """Diamond of a product variety: convolution of the factors' tables."""
    out: Dict[Tuple[int, int], int] = {}
    for (p1, q1), n1 in a.h.items():
        for (p2, q2), n2 in b.h.items():
            k = (p1 + p2, q1 + q2)
            out[k] = out.get(k, 0) + n1 * n2
    return HodgeDiamond(a.dim + b.dim, out)


def point() -> HodgeDiamond:
    return HodgeDiamond(0, {(0, 0): 1})


def projective_space(n: int) -> HodgeDiamond:
    return HodgeDiamond(n, {(p, p): 1 for p in range(n + 1)})


def curve(genus: int) -> HodgeDiamond:
    if genus < 0:
        raise DiamondError("genus must be nonnegative")
    return HodgeDiamond(1, {(0, 0): 1, (1, 0): genus, (0, 1): genus, (1, 1): 1})


def quadric_surface() -> HodgeDiamond:
    """P^1 x P^1."""
    return kunneth(projective_space(1), projective_space(1))


_CATALOG = {
    "point": (point, ()),
    "projective_space": (projective_space, ("n",)),
    "curve": (curve, ("genus",)),
    "quadric_surface": (quadric_surface, ()),
}


def builtin_diamond(name: str, **params) -> HodgeDiamond:
    """Catalog lookup; `copies` is accepted by every entry for disjoint unions."""
    copies = params.pop("copies", 1)
    if name not in _CATALOG:
        raise DiamondError(
            f"unknown diamond {name!r}; available: {', '.join(sorted(_CATALOG))}"
        )
    fn, argnames = _CATALOG[name]
    unexpected = set(params) - set(argnames)
    if unexpected:
        raise DiamondError(f"unexpected parameters for {name!r}: {sorted(unexpected)}")
    return fn(**params) * copies
