"""Concept classes as boolean matrices, plus teaching plans and text formats.

A concept assigns a bit to every point of a finite ordered domain; a concept
class is a set of distinct concepts over one shared domain, stored row-wise.
A teaching plan orders the concepts and attaches to each one a set of domain
points intended to separate it from the concepts not yet taught; the plan's
width is the largest such set.

Everything here is immutable after construction and safe to share between
threads; all operations are pure functions of their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InvalidArgumentError,
    InvalidPlanError,
    MalformedPlanError,
    ParseError,
)


def _check_label(label: str, what: str) -> None:
    if not label or any(ch.isspace() for ch in label) or "#" in label:
        raise InvalidArgumentError(
            f"{what} label {label!r} must be non-empty, whitespace-free and '#'-free"
        )


@dataclass(frozen=True)
class DomainPoint:
    """One position of the domain: a dense 0-based index plus a stable name."""

    index: int
    label: str


@dataclass(frozen=True)
class Concept:
    """A named bit vector; entry i is the concept's value on domain point i."""

    label: str
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        _check_label(self.label, "concept")
        if any(v not in (0, 1) for v in self.values):
            raise InvalidArgumentError(f"concept {self.label!r} has non-bit values")

    def bitstring(self) -> str:
        return "".join(str(v) for v in self.values)

    def mask(self) -> int:
        """Values packed into an int, bit i = value at index i."""
        m = 0
        for i, v in enumerate(self.values):
            if v:
                m |= 1 << i
        return m


@dataclass(frozen=True)
class ConceptClass:
    """An ordered set of distinct concepts over an ordered, labelled domain.

    Invariants enforced at construction: domain indices are dense and in
    order, all labels (domain and concept) are unique, every row has exactly
    one bit per domain point, and no two rows are equal.  An empty domain
    admits at most one concept (two would be equal rows).
    """

    domain: tuple[DomainPoint, ...]
    concepts: tuple[Concept, ...]

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "concepts", tuple(self.concepts))
        seen_pt = set()
        for i, pt in enumerate(self.domain):
            if pt.index != i:
                raise InvalidArgumentError(
                    f"domain point {pt.label!r} has index {pt.index}, expected {i}"
                )
            _check_label(pt.label, "domain point")
            if pt.label in seen_pt:
                raise InvalidArgumentError(f"duplicate domain label {pt.label!r}")
            seen_pt.add(pt.label)
        width = len(self.domain)
        masks = []
        by_label: dict[str, int] = {}
        by_mask: dict[int, str] = {}
        for i, c in enumerate(self.concepts):
            if len(c.values) != width:
                raise InvalidArgumentError(
                    f"concept {c.label!r} has {len(c.values)} values, expected {width}"
                )
            if c.label in by_label:
                raise InvalidArgumentError(f"duplicate concept label {c.label!r}")
            by_label[c.label] = i
            m = c.mask()
            if m in by_mask:
                raise InvalidArgumentError(
                    f"duplicate concept rows: {by_mask[m]!r} and {c.label!r}"
                )
            by_mask[m] = c.label
            masks.append(m)
        object.__setattr__(self, "_masks", tuple(masks))
        object.__setattr__(self, "_by_label", by_label)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[str | Sequence[int]],
        labels: Sequence[str] | None = None,
        point_labels: Sequence[str] | None = None,
    ) -> "ConceptClass":
        """Build a class from bitstrings or bit sequences.

        Concept labels default to the rows' bitstrings; point labels default
        to "x0", "x1", ...
        """
        parsed: list[tuple[int, ...]] = []
        for r in rows:
            if isinstance(r, str):
                if any(ch not in "01" for ch in r):
                    raise InvalidArgumentError(f"row {r!r} is not a bitstring")
                parsed.append(tuple(int(ch) for ch in r))
            else:
                parsed.append(tuple(r))
        width = len(parsed[0]) if parsed else 0
        if point_labels is None:
            point_labels = [f"x{i}" for i in range(width)]
        if labels is None:
            labels = ["".join(str(v) for v in row) for row in parsed]
        if len(labels) != len(parsed):
            raise InvalidArgumentError("one label per row required")
        domain = tuple(DomainPoint(i, lab) for i, lab in enumerate(point_labels))
        concepts = tuple(Concept(lab, row) for lab, row in zip(labels, parsed))
        return cls(domain, concepts)

    # -- queries ---------------------------------------------------------------

    @property
    def width(self) -> int:
        return len(self.domain)

    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.concepts)

    def index_of(self, label: str) -> int:
        try:
            return self._by_label[label]  # type: ignore[attr-defined]
        except KeyError:
            raise InvalidArgumentError(f"no concept labelled {label!r} in class") from None

    def concept(self, label: str) -> Concept:
        return self.concepts[self.index_of(label)]

    def row_mask(self, index: int) -> int:
        return self._masks[index]  # type: ignore[attr-defined]

    def member_index(self, c: Concept) -> int:
        """Index of `c` in the class; the label must exist with equal values."""
        i = self.index_of(c.label)
        if self.concepts[i].values != c.values:
            raise InvalidArgumentError(
                f"concept {c.label!r} disagrees with the class member of the same label"
            )
        return i


@dataclass(frozen=True)
class TeachingPlan:
    """An ordered sequence of (concept label, point-index set) steps.

    Point sets are stored as sorted tuples.  Whether the plan is valid for a
    given class is decided by `check_plan`; the type itself only normalizes.
    """

    steps: tuple[tuple[str, tuple[int, ...]], ...]

    def __post_init__(self):
        norm = tuple(
            (label, tuple(sorted(set(points)))) for label, points in self.steps
        )
        object.__setattr__(self, "steps", norm)

    @property
    def width(self) -> int:
        return max((len(pts) for _, pts in self.steps), default=0)

    def __len__(self) -> int:
        return len(self.steps)


# -- operations ------------------------------------------------------------


def _check_indices(points: Iterable[int], width: int) -> tuple[int, ...]:
    pts = tuple(sorted(set(points)))
    for i in pts:
        if not isinstance(i, int) or i < 0 or i >= width:
            raise InvalidArgumentError(f"point index {i} out of range [0, {width})")
    return pts


def restrict(c: Concept, points: Iterable[int]) -> dict[int, int]:
    """The partial labelling {i: c(x_i)} of `c` on the given point indices."""
    pts = _check_indices(points, len(c.values))
    return {i: c.values[i] for i in pts}


def is_teaching_set(c: Concept, klass: ConceptClass, points: Iterable[int]) -> bool:
    """True iff every other concept of the class disagrees with `c` somewhere on `points`."""
    ci = klass.member_index(c)
    pts = _check_indices(points, klass.width)
    smask = 0
    for i in pts:
        smask |= 1 << i
    cmask = klass.row_mask(ci)
    for j in range(len(klass.concepts)):
        if j != ci and (klass.row_mask(j) ^ cmask) & smask == 0:
            return False
    return True


def check_plan(klass: ConceptClass, plan: TeachingPlan) -> int:
    """Validate a teaching plan against a class and return its width.

    Step i must use a set that separates its concept from every concept of
    the plan's suffix i..end.  Raises MalformedPlanError when the plan does
    not list the class's concepts exactly once (or uses bad indices), and
    InvalidPlanError naming the first failing step and a conflicting concept.
    """
    labels = [label for label, _ in plan.steps]
    expected = set(klass.labels())
    if len(set(labels)) != len(labels):
        dup = next(l for l in labels if labels.count(l) > 1)
        raise MalformedPlanError(f"concept {dup!r} appears more than once in plan")
    if set(labels) != expected:
        missing = sorted(expected - set(labels)) + sorted(set(labels) - expected)
        raise MalformedPlanError(f"plan does not cover the class: {missing}")
    order = [klass.index_of(label) for label in labels]
    sets = []
    for label, pts in plan.steps:
        try:
            sets.append(_check_indices(pts, klass.width))
        except InvalidArgumentError as e:
            raise MalformedPlanError(f"step for {label!r}: {e}") from None
    width = 0
    for i, (ci, pts) in enumerate(zip(order, sets)):
        smask = 0
        for x in pts:
            smask |= 1 << x
        cmask = klass.row_mask(ci)
        for cj in order[i + 1 :]:
            if (klass.row_mask(cj) ^ cmask) & smask == 0:
                other = klass.concepts[cj].label
                raise InvalidPlanError(
                    i,
                    other,
                    f"step {i} ({plan.steps[i][0]!r}, {set(pts) or '{}'}) fails: "
                    f"{other!r} agrees on the chosen points",
                )
        width = max(width, len(pts))
    return width


# -- text format -------------------------------------------------------------
#
# Class files:  first meaningful line "<numConcepts> <numPoints>", an optional
# "labels: <p0> <p1> ..." line naming the domain points, then one line per
# concept: "<label> <bitstring>".  '#' starts a comment, blank lines are
# ignored, fields are whitespace-separated, output uses LF line endings and
# carries no trailing whitespace.


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body))
    return out


def parse_class(text: str) -> ConceptClass:
    """Parse the class text format; raises ParseError with a line number."""
    lines = _meaningful_lines(text)
    if not lines:
        raise ParseError("empty input, expected '<numConcepts> <numPoints>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be '<numConcepts> <numPoints>'", lineno)
    try:
        n_concepts, n_points = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header counts must be integers", lineno) from None
    if n_concepts < 0 or n_points < 0:
        raise ParseError("header counts must be non-negative", lineno)
    rest = lines[1:]
    point_labels = [f"x{i}" for i in range(n_points)]
    if rest and rest[0][1].split()[0] == "labels:":
        lineno, body = rest[0]
        names = body.split()[1:]
        if len(names) != n_points:
            raise ParseError(
                f"labels line names {len(names)} points, expected {n_points}", lineno
            )
        point_labels = names
        rest = rest[1:]
    if len(rest) != n_concepts:
        where = rest[n_concepts][0] if len(rest) > n_concepts else None
        raise ParseError(
            f"expected {n_concepts} concept lines, found {len(rest)}", where
        )
    seen_labels: dict[str, int] = {}
    seen_rows: dict[str, int] = {}
    concepts = []
    for lineno, body in rest:
        toks = body.split()
        if n_points == 0:
            if len(toks) != 1:
                raise ParseError("expected '<label>' for a 0-point class", lineno)
            label, bits = toks[0], ""
        else:
            if len(toks) != 2:
                raise ParseError("expected '<label> <bitstring>'", lineno)
            label, bits = toks
        if label in seen_labels:
            raise ParseError(
                f"duplicate concept label {label!r} (first on line {seen_labels[label]})",
                lineno,
            )
        seen_labels[label] = lineno
        if len(bits) != n_points:
            raise ParseError(
                f"bitstring has length {len(bits)}, expected {n_points}", lineno
            )
        if any(ch not in "01" for ch in bits):
            raise ParseError(f"bitstring {bits!r} has characters outside 0/1", lineno)
        if bits in seen_rows:
            raise ParseError(
                f"duplicate concept row (same as line {seen_rows[bits]})", lineno
            )
        seen_rows[bits] = lineno
        concepts.append(Concept(label, tuple(int(ch) for ch in bits)))
    domain = tuple(DomainPoint(i, lab) for i, lab in enumerate(point_labels))
    try:
        return ConceptClass(domain, tuple(concepts))
    except InvalidArgumentError as e:
        raise ParseError(str(e)) from None


def serialize_class(klass: ConceptClass) -> str:
    """Deterministic text form; parse_class(serialize_class(C)) == C."""
    lines = [f"{len(klass.concepts)} {klass.width}"]
    if klass.width > 0:
        lines.append("labels: " + " ".join(pt.label for pt in klass.domain))
    for c in klass.concepts:
        lines.append(f"{c.label} {c.bitstring()}" if klass.width > 0 else c.label)
    return "\n".join(lines) + "\n"


# Plan files: one line per step, "<concept-label> <idx> <idx> ...", an empty
# point set being a bare label.  Same comment and whitespace rules as above.


def parse_plan(text: str) -> TeachingPlan:
    steps = []
    for lineno, body in _meaningful_lines(text):
        toks = body.split()
        label = toks[0]
        try:
            pts = tuple(int(t) for t in toks[1:])
        except ValueError:
            raise ParseError("point indices must be integers", lineno) from None
        if any(p < 0 for p in pts):
            raise ParseError("point indices must be non-negative", lineno)
        steps.append((label, pts))
    return TeachingPlan(tuple(steps))


def serialize_plan(plan: TeachingPlan) -> str:
    lines = []
    for label, pts in plan.steps:
        lines.append(label if not pts else label + " " + " ".join(map(str, pts)))
    return "\n".join(lines) + ("\n" if lines else "")
