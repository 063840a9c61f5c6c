"""JSON descriptor files: parsing, validation, and serialization.

One file describes one variety: ambient dimension, exceptional components
with discrepancies, stratum Hodge diamonds, and optional SNC incidence and
per-point fiber blocks.  Rationals are encoded as "num/den" strings so no
floating point ever appears on the wire.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from .analysis import ExceptionalFiberDescriptor, FiberComponent
from .hodge import HodgeDiamond
from .sncweights import Matrix, SncComplexData, SncComponent
from .stringy import ResolutionDescriptor


class DescriptorFileError(ValueError):
    """Raised on malformed descriptor files, with a key-path location."""

    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


@dataclass(frozen=True)
class DescriptorBundle:
    descriptor: ResolutionDescriptor
    snc: Optional[SncComplexData] = None
    fibers: Tuple[ExceptionalFiberDescriptor, ...] = ()


def _expect(cond: bool, location: str, message: str) -> None:
    if not cond:
        raise DescriptorFileError(location, message)


def _parse_diamond(obj, dim: int, location: str) -> HodgeDiamond:
    h: Dict[Tuple[int, int], int] = {}
    if isinstance(obj, list):
        _expect(len(obj) == dim + 1, location, f"dense matrix must have {dim + 1} rows")
        for p, row in enumerate(obj):
            _expect(
                isinstance(row, list) and len(row) == dim + 1,
                f"{location}[{p}]",
                f"dense matrix row must have {dim + 1} entries",
            )
            for q, value in enumerate(row):
                _expect(
                    isinstance(value, int), f"{location}[{p}][{q}]", "entries must be integers"
                )
                if value:
                    h[(p, q)] = value
    elif isinstance(obj, dict):
        for key, value in obj.items():
            parts = key.split(",")
            _expect(
                len(parts) == 2 and all(part.strip().isdigit() for part in parts),
                f"{location}[{key!r}]",
                'sparse keys must look like "p,q"',
            )
            _expect(isinstance(value, int), f"{location}[{key!r}]", "entries must be integers")
            p, q = int(parts[0]), int(parts[1])
            _expect(
                0 <= p <= dim and 0 <= q <= dim,
                f"{location}[{key!r}]",
                f"(p,q) outside the {dim}-dimensional range",
            )
            if value:
                h[(p, q)] = value
    else:
        raise DescriptorFileError(location, "diamond must be a dense matrix or a sparse map")
    return HodgeDiamond(dim, h)


def _diamond_to_json(d: HodgeDiamond) -> Dict[str, int]:
    return {f"{p},{q}": n for (p, q), n in sorted(d.h.items())}


def _parse_fraction(obj, location: str) -> Fraction:
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise DescriptorFileError(location, f"bad rational {obj!r}: {exc}")
    raise DescriptorFileError(location, 'rationals must be integers or "num/den" strings')


def _parse_matrix(obj, location: str) -> Matrix:
    _expect(isinstance(obj, list), location, "matrix must be a list of rows")
    out: Matrix = []
    for i, row in enumerate(obj):
        _expect(isinstance(row, list), f"{location}[{i}]", "matrix row must be a list")
        out.append([_parse_fraction(x, f"{location}[{i}][{j}]") for j, x in enumerate(row)])
    widths = {len(row) for row in out}
    _expect(len(widths) <= 1, location, "ragged matrix")
    return out


def _parse_snc(obj, dim: int, location: str) -> SncComplexData:
    _expect(isinstance(obj, dict), location, "snc block must be an object")
    levels: Dict[int, Tuple[SncComponent, ...]] = {}
    for key, comps in obj.get("levels", {}).items():
        _expect(str(key).isdigit() and int(key) >= 1, f"{location}.levels[{key!r}]",
                "level keys must be integers >= 1")
        r = int(key)
        parsed = []
        _expect(isinstance(comps, list), f"{location}.levels[{key!r}]", "must be a list")
        for i, comp in enumerate(comps):
            loc = f"{location}.levels[{key!r}][{i}]"
            _expect(isinstance(comp, dict), loc, "component must be an object")
            subset = comp.get("subset")
            _expect(
                isinstance(subset, list) and all(isinstance(s, str) for s in subset),
                f"{loc}.subset", "subset must be a list of component ids",
            )
            diamond = None
            if "diamond" in comp:
                diamond = _parse_diamond(comp["diamond"], dim - r, f"{loc}.diamond")
            faces = tuple(comp.get("faces", ()))
            _expect(
                all(isinstance(f, int) for f in faces), f"{loc}.faces",
                "faces must be integer indices",
            )
            parsed.append(
                SncComponent(subset=tuple(sorted(subset)), diamond=diamond, faces=faces)
            )
        levels[r] = tuple(parsed)
    user_maps: Dict[Tuple[int, int, int], Tuple[Matrix, ...]] = {}
    for key, mats in obj.get("user_maps", {}).items():
        parts = str(key).split(",")
        _expect(
            len(parts) == 3 and all(part.strip().isdigit() for part in parts),
            f"{location}.user_maps[{key!r}]", 'keys must look like "k,p,q"',
        )
        _expect(isinstance(mats, list), f"{location}.user_maps[{key!r}]", "must be a list")
        k, p, q = (int(part) for part in parts)
        user_maps[(k, p, q)] = tuple(
            _parse_matrix(mat, f"{location}.user_maps[{key!r}][{i}]")
            for i, mat in enumerate(mats)
        )
    return SncComplexData(levels=levels, user_maps=user_maps)


def _parse_fiber(obj, location: str) -> ExceptionalFiberDescriptor:
    _expect(isinstance(obj, dict), location, "fiber entry must be an object")
    point = obj.get("point")
    _expect(isinstance(point, str), f"{location}.point", "point label must be a string")
    comps = obj.get("components")
    _expect(isinstance(comps, list) and comps, f"{location}.components",
            "fiber needs a nonempty component list")
    parsed = []
    for i, comp in enumerate(comps):
        loc = f"{location}.components[{i}]"
        _expect(isinstance(comp, dict), loc, "component must be an object")
        _expect(isinstance(comp.get("id"), str), f"{loc}.id", "id must be a string")
        _expect(isinstance(comp.get("discrepancy"), int), f"{loc}.discrepancy",
                "discrepancy must be an integer")
        diamond = _parse_diamond(comp.get("diamond"), 2, f"{loc}.diamond")
        parsed.append(FiberComponent(comp["id"], diamond, comp["discrepancy"]))
    counts: Dict[Tuple[str, str], int] = {}
    for key, value in obj.get("pairwise_counts", {}).items():
        loc = f"{location}.pairwise_counts[{key!r}]"
        pair = tuple(key.split(","))
        _expect(len(pair) == 2, loc, 'keys must look like "id1,id2"')
        _expect(isinstance(value, int) and value >= 0, loc, "counts must be nonnegative integers")
        counts[pair] = value
    fd = ExceptionalFiberDescriptor(point=point, components=tuple(parsed), pairwise_counts=counts)
    problems = fd.validate()
    _expect(not problems, location, "; ".join(problems))
    return fd


def parse_bundle(doc, location: str = "<document>") -> DescriptorBundle:
    _expect(isinstance(doc, dict), location, "top level must be a JSON object")
    dim = doc.get("dim")
    _expect(isinstance(dim, int) and dim >= 0, f"{location}.dim",
            "dim must be a nonnegative integer")
    label = doc.get("label", "")
    _expect(isinstance(label, str), f"{location}.label", "label must be a string")
    comps_doc = doc.get("components", [])
    _expect(isinstance(comps_doc, list), f"{location}.components", "must be a list")
    components: List[Tuple[str, int]] = []
    for i, comp in enumerate(comps_doc):
        loc = f"{location}.components[{i}]"
        _expect(isinstance(comp, dict), loc, "component must be an object")
        _expect(isinstance(comp.get("id"), str), f"{loc}.id", "id must be a string")
        _expect(isinstance(comp.get("discrepancy"), int), f"{loc}.discrepancy",
                "discrepancy must be an integer")
        components.append((comp["id"], comp["discrepancy"]))
    strata_doc = doc.get("strata")
    _expect(isinstance(strata_doc, dict) and strata_doc, f"{location}.strata",
            "missing Y stratum: strata must contain at least the empty key")
    strata: Dict[Tuple[str, ...], HodgeDiamond] = {}
    for key, value in strata_doc.items():
        subset = tuple(sorted(s for s in key.split(",") if s)) if key else ()
        strata[subset] = _parse_diamond(
            value, dim - len(subset), f"{location}.strata[{key!r}]"
        )
    descriptor = ResolutionDescriptor(
        n=dim, components=tuple(components), strata=strata, label=label
    )
    problems = descriptor.validate()
    _expect(not problems, location, "; ".join(problems))
    snc = None
    if "snc" in doc:
        snc = _parse_snc(doc["snc"], dim, f"{location}.snc")
        problems = snc.validate()
        _expect(not problems, f"{location}.snc", "; ".join(problems))
    fibers = tuple(
        _parse_fiber(fiber, f"{location}.fibers[{i}]")
        for i, fiber in enumerate(doc.get("fibers", []))
    )
    return DescriptorBundle(descriptor=descriptor, snc=snc, fibers=fibers)


def load_bundle(path: str) -> DescriptorBundle:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DescriptorFileError(path, f"cannot read: {exc}")
    except json.JSONDecodeError as exc:
        raise DescriptorFileError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg)
    return parse_bundle(doc, location=path)


def load_descriptor(path: str) -> ResolutionDescriptor:
    return load_bundle(path).descriptor


def bundle_to_json(bundle: DescriptorBundle) -> Dict[str, object]:
    d = bundle.descriptor
    doc: Dict[str, object] = {
        "dim": d.n,
        "label": d.label,
        "components": [{"id": cid, "discrepancy": a} for cid, a in d.components],
        "strata": {
            ",".join(subset): _diamond_to_json(diamond)
            for subset, diamond in sorted(d.strata.items())
        },
    }
    if bundle.snc is not None:
        levels = {}
        for r, comps in sorted(bundle.snc.levels.items()):
            levels[str(r)] = [
                {
                    "subset": list(c.subset),
                    **({"diamond": _diamond_to_json(c.diamond)} if c.diamond else {}),
                    **({"faces": list(c.faces)} if c.faces else {}),
                }
                for c in comps
            ]
        user_maps = {
            f"{k},{p},{q}": [[[str(x) for x in row] for row in mat] for mat in mats]
            for (k, p, q), mats in sorted(bundle.snc.user_maps.items())
        }
        snc_doc: Dict[str, object] = {"levels": levels}
        if user_maps:
            snc_doc["user_maps"] = user_maps
        doc["snc"] = snc_doc
    if bundle.fibers:
        doc["fibers"] = [
            {
                "point": fd.point,
                "components": [
                    {
                        "id": c.comp_id,
                        "discrepancy": c.discrepancy,
                        "diamond": _diamond_to_json(c.diamond),
                    }
                    for c in fd.components
                ],
                "pairwise_counts": {
                    ",".join(pair): n for pair, n in sorted(fd.pairwise_counts.items())
                },
            }
            for fd in bundle.fibers
        ]
    return doc


def save_bundle(bundle: DescriptorBundle, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(bundle_to_json(bundle), fh, indent=2, sort_keys=True)
        fh.write("\n")
