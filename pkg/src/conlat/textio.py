"""The shared text format for posets, lattices and planar lattices.

Grammar (one directive per line, ``#`` starts a comment):

    lattice NAME          or   poset NAME
    n COUNT
    planar                     (optional; cover order becomes significant)
    label I TEXT               (optional)
    covers I: J K ...          (J, K, ... are the upper covers of I)

Normalized output lists elements in ascending order and sorts each
cover list unless the file is planar; parse∘serialize is the identity
on normalized files.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .lattice import Lattice, lattice_from_poset
from .order import OrderError, Poset, poset_from_covers


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0):
        prefix = f"line {line}: " if line else ""
        super().__init__(prefix + message)
        self.line = line


@dataclass(frozen=True)
class LatticeFile:
    kind: str  # "lattice" or "poset"
    name: str
    n: int
    upper_covers: tuple[tuple[int, ...], ...]
    planar: bool = False
    labels: tuple = ()  # (index, text) pairs, sorted

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in self.upper_covers[a]]

    def to_poset(self) -> Poset:
        return poset_from_covers(self.n, self.cover_pairs())

    def to_lattice(self) -> Lattice:
        return lattice_from_poset(self.to_poset())

    def to_diagram(self):
        from .planar import PlanarDiagram

        return PlanarDiagram(self.to_lattice(), self.upper_covers)


def parse(text: str) -> LatticeFile:
    kind = name = None
    n = -1
    planar = False
    labels: list[tuple[int, str]] = []
    covers: dict[int, tuple[int, ...]] = {}
    cover_lines: dict[int, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head in ("lattice", "poset"):
            if kind is not None:
                raise ParseError("duplicate header", lineno)
            if len(tokens) != 2:
                raise ParseError(f"expected '{head} NAME'", lineno)
            kind, name = head, tokens[1]
            continue
        if kind is None:
            raise ParseError("file must start with 'lattice NAME' or 'poset NAME'", lineno)
        if head == "n":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError("expected 'n COUNT'", lineno)
            if n >= 0:
                raise ParseError("duplicate 'n' line", lineno)
            n = int(tokens[1])
            continue
        if head == "planar":
            if len(tokens) != 1:
                raise ParseError("'planar' takes no arguments", lineno)
            planar = True
            continue
        if head == "label":
            if len(tokens) < 3 or not tokens[1].isdigit():
                raise ParseError("expected 'label I TEXT'", lineno)
            idx = int(tokens[1])
            if not 0 <= idx < max(n, 0):
                raise ParseError(f"label index {idx} out of range", lineno)
            labels.append((idx, " ".join(tokens[2:])))
            continue
        if head == "covers":
            if n < 0:
                raise ParseError("'covers' before 'n'", lineno)
            rest = line[len("covers"):].strip()
            if ":" not in rest:
                raise ParseError("expected 'covers I: J K ...'", lineno)
            left, right = rest.split(":", 1)
            if not left.strip().isdigit():
                raise ParseError("expected an element index before ':'", lineno)
            lower = int(left)
            try:
                ups = tuple(int(t) for t in right.split())
            except ValueError:
                raise ParseError("cover list must be element indices", lineno) from None
            for u in (lower, *ups):
                if not 0 <= u < n:
                    raise ParseError(f"element {u} out of range 0..{n - 1}", lineno)
            if lower in covers:
                raise ParseError(f"duplicate cover line for element {lower}", lineno)
            if len(set(ups)) != len(ups):
                raise ParseError(f"repeated upper cover for element {lower}", lineno)
            covers[lower] = ups
            cover_lines[lower] = lineno
            continue
        raise ParseError(f"unknown directive {head!r}", lineno)

    if kind is None:
        raise ParseError("missing 'lattice NAME' or 'poset NAME' header")
    if n < 0:
        raise ParseError("missing 'n COUNT'")
    upper = tuple(covers.get(i, ()) for i in range(n))
    out = LatticeFile(
        kind=kind,
        name=name,
        n=n,
        upper_covers=upper,
        planar=planar,
        labels=tuple(sorted(labels)),
    )
    try:
        out.to_poset()
    except OrderError as exc:
        lineno = min(cover_lines.values(), default=0)
        raise ParseError(str(exc), lineno) from exc
    return out


def serialize(lf: LatticeFile) -> str:
    lines = [f"{lf.kind} {lf.name}", f"n {lf.n}"]
    if lf.planar:
        lines.append("planar")
    for idx, text in sorted(lf.labels):
        lines.append(f"label {idx} {text}")
    for i in range(lf.n):
        ups = lf.upper_covers[i]
        if ups:
            shown = ups if lf.planar else tuple(sorted(ups))
            lines.append(f"covers {i}: " + " ".join(str(u) for u in shown))
    return "\n".join(lines) + "\n"


def normalize(lf: LatticeFile) -> LatticeFile:
    if lf.planar:
        return lf
    return replace(lf, upper_covers=tuple(tuple(sorted(u)) for u in lf.upper_covers))


def file_from_poset(name: str, p: Poset, kind: str = "poset", planar_order=None) -> LatticeFile:
    ups: tuple[tuple[int, ...], ...]
    if planar_order is not None:
        ups = tuple(tuple(row) for row in planar_order)
    else:
        ups = tuple(p.upper_covers(i) for i in range(p.n))
    return LatticeFile(
        kind=kind,
        name=name,
        n=p.n,
        upper_covers=ups,
        planar=planar_order is not None,
    )


def file_from_lattice(name: str, lat: Lattice, planar_order=None) -> LatticeFile:
    return file_from_poset(name, lat.poset, kind="lattice", planar_order=planar_order)
