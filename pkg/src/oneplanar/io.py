"""Drawing text format, version 1.

::

    oneplane 1
    vertices <N>
    v <id> T|F
    rot <id>: <n1> <n2> ...
    end

Rotations are counterclockwise. The canonical form lists vertices in
ascending order and starts each rotation at its lowest-id neighbour.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path

from .drawing import SHARED_ENDPOINT_CROSSING, OnePlaneDrawing, Violation, validate
from .embed import RotationSystem
from .errors import InvalidDrawing, MalformedRotation, ParseError


def _anchored(r: tuple[int, ...]) -> tuple[int, ...]:
    if not r:
        return r
    i = r.index(min(r))
    return r[i:] + r[:i]


def canonical(d: OnePlaneDrawing) -> OnePlaneDrawing:
    return OnePlaneDrawing(RotationSystem([_anchored(r) for r in d.rs.rot]), d.n)


def format_drawing(d: OnePlaneDrawing) -> str:
    lines = ["oneplane 1", f"vertices {d.total}"]
    lines.extend(f"v {v} {'T' if v < d.n else 'F'}" for v in range(d.total))
    for v, r in enumerate(d.rs.rot):
        lines.append(f"rot {v}:" + "".join(f" {w}" for w in _anchored(r)))
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_drawing(text: str, check: bool = True) -> OnePlaneDrawing:
    """Parse a drawing; with ``check`` invalid drawings raise :class:`InvalidDrawing`."""
    total = None
    kinds: dict[int, bool] = {}
    rots: dict[int, tuple[int, ...]] = {}
    state = "magic"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if state == "magic":
                if line.split() != ["oneplane", "1"]:
                    raise ParseError("expected 'oneplane 1'", lineno)
                state = "count"
            elif state == "count":
                tok = line.split()
                if len(tok) != 2 or tok[0] != "vertices":
                    raise ParseError("expected 'vertices <N>'", lineno)
                total = int(tok[1])
                state = "body"
            elif state == "body":
                if line == "end":
                    state = "done"
                elif line.startswith("v "):
                    tok = line.split()
                    if len(tok) != 3 or tok[2] not in ("T", "F"):
                        raise ParseError("expected 'v <id> T|F'", lineno)
                    v = int(tok[1])
                    if not 0 <= v < total or v in kinds:
                        raise ParseError(f"bad or repeated vertex id {v}", lineno)
                    kinds[v] = tok[2] == "T"
                elif line.startswith("rot "):
                    head, _, rest = line[4:].partition(":")
                    if not _:
                        raise ParseError("expected 'rot <id>: ...'", lineno)
                    v = int(head)
                    if not 0 <= v < total or v in rots:
                        raise ParseError(f"bad or repeated rotation for {v}", lineno)
                    rots[v] = tuple(int(t) for t in rest.split())
                else:
                    raise ParseError(f"unrecognised line {line!r}", lineno)
            else:
                raise ParseError("content after 'end'", lineno)
        except ValueError as exc:
            raise ParseError(f"bad integer: {exc}", lineno) from None
    if state != "done":
        raise ParseError("truncated file (missing 'end')")
    if len(kinds) != total or len(rots) != total:
        raise ParseError("every vertex needs a 'v' line and a 'rot' line")
    n = sum(kinds.values())
    if any(not kinds[v] for v in range(n)):
        raise ParseError("true vertices must be numbered before fake vertices")
    # a fake vertex naming one true vertex twice is a crossing of two edges sharing it
    shared = [Violation(SHARED_ENDPOINT_CROSSING, (c, w), f"edges crossing at {c} share endpoint {w}")
              for c in range(n, total) for w, k in Counter(rots[c]).items() if k > 1]
    if shared:
        raise InvalidDrawing(shared)
    try:
        rs = RotationSystem([rots[v] for v in range(total)])
    except MalformedRotation as exc:
        raise ParseError(str(exc)) from None
    d = OnePlaneDrawing(rs, n)
    if check:
        bad = validate(d)
        if bad:
            raise InvalidDrawing(bad)
    return d


def write_drawing(d: OnePlaneDrawing, path: str | Path) -> None:
    Path(path).write_text(format_drawing(d), encoding="utf-8", newline="\n")


def read_drawing(path: str | Path, check: bool = True) -> OnePlaneDrawing:
    return parse_drawing(Path(path).read_text(encoding="utf-8"), check=check)
