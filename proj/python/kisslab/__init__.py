"""Exact geometry of touching translate families.

Thin wrappers over the native extension. Every function accepts shapes and
vector lists either as already-parsed Python objects (dict / list) or as JSON
strings, and returns parsed JSON documents identical to the command line
tool's output.
"""

from __future__ import annotations

import json
from typing import Any, NamedTuple

try:  # package layout: kisslab/_kisslab*.so
    from . import _kisslab  # type: ignore[attr-defined]
except ImportError:  # flat build tree: _kisslab*.so alongside the package
    import _kisslab  # type: ignore[no-redef]

ParseError = _kisslab.ParseError
ValidationError = _kisslab.ValidationError

__all__ = [
    "AuditResult",
    "ParseError",
    "ValidationError",
    "audit",
    "classify",
    "relative_distance",
    "render_svg",
    "search",
    "symmetral",
    "validate",
]


def _as_text(document: Any) -> str:
    if isinstance(document, str):
        return document
    return json.dumps(document)


class AuditResult(NamedTuple):
    report: dict
    passed: bool


def classify(shape: Any) -> dict:
    """Pockets, kernel, strip witness, and neighbour bounds for a shape."""
    return json.loads(_kisslab.classify(_as_text(shape)))


def validate(shape: Any, vectors: Any) -> dict:
    """Validation report for a family of translates given by vectors."""
    return json.loads(_kisslab.validate(_as_text(shape), _as_text(vectors)))


def search(
    shape: Any,
    *,
    samples: int = 16,
    beam: int = 64,
    nodes: int = 200000,
    seed: int = 0,
    threads: int = 1,
) -> dict:
    """Search for a maximal family of touching, nonoverlapping translates."""
    return json.loads(
        _kisslab.search(
            _as_text(shape),
            samples=samples,
            beam=beam,
            nodes=nodes,
            seed=seed,
            threads=threads,
        )
    )


def audit(shape: Any, vectors: Any, center: Any = None) -> AuditResult:
    """Proof-chain audit of a family; center is "x,y", (x, y), or None."""
    if center is None:
        center_text = ""
    elif isinstance(center, str):
        center_text = center
    else:
        x, y = center
        center_text = f"{x},{y}"
    report, passed = _kisslab.audit(_as_text(shape), _as_text(vectors), center_text)
    return AuditResult(json.loads(report), passed)


def render_svg(shape: Any, vectors: Any, *, draw_vectors: bool = False) -> str:
    """Deterministic SVG of the configuration; violations drawn dashed."""
    return _kisslab.render_svg(_as_text(shape), _as_text(vectors), draw_vectors)


def symmetral(shape: Any) -> dict:
    """Central symmetral of the shape's convex hull."""
    return json.loads(_kisslab.symmetral(_as_text(shape)))


def relative_distance(shape: Any, p: Any, q: Any) -> dict:
    """Distance of p and q in the norm whose unit disk is the shape's hull."""

    def point_text(value: Any) -> str:
        if isinstance(value, str):
            return value
        x, y = value
        return f"{x},{y}"

    return json.loads(
        _kisslab.relative_distance(_as_text(shape), point_text(p), point_text(q))
    )
