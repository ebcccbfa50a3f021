"""Shared result type for the instance generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ..core import OrderedGraph, format_graph


@dataclass
class ReductionOutput:
    """An ordered instance with its target threshold.

    ``offset`` is set when the construction promises the exact identity
    alpha(graph) = alpha(source) + offset, so that threshold = k + offset.
    """

    graph: OrderedGraph
    threshold: int
    scheme: str
    offset: Optional[int] = None
    provenance: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return {
            "scheme": self.scheme,
            "n": self.graph.n,
            "m": self.graph.m,
            "threshold": self.threshold,
            "offset": self.offset,
            "provenance": self.provenance,
            "graph": format_graph(self.graph),
        }
