"""Solver, decomposition, classification and enumeration chained together."""

from __future__ import annotations

from dataclasses import dataclass

from bdm.classification import (
    EdgeClassification,
    canonical_verifying_sets,
    classify_edges,
    loose_attainable,
)
from bdm.decomposition import Decomposition, decompose
from bdm.graph import BipartiteGraph
from bdm.matching import Matching, max_b_matching
from bdm.verifying import VerifyingFamily, enumerate_verifying_sets


@dataclass(frozen=True, eq=False)
class PipelineResult:
    graph: BipartiteGraph
    matching: Matching
    decomposition: Decomposition
    classification: EdgeClassification
    d_set: frozenset[int]
    canonical: tuple[frozenset[int], frozenset[int]]
    verifying: VerifyingFamily | None


def run_pipeline(
    g: BipartiteGraph,
    matching: Matching | None = None,
    enumerate_cap: int | None = None,
) -> PipelineResult:
    """Run everything; verifying sets are enumerated only if ``enumerate_cap`` is set."""
    m = max_b_matching(g) if matching is None else matching
    d = decompose(g, m)
    cls = classify_edges(g, m, d)
    fam = enumerate_verifying_sets(d, enumerate_cap) if enumerate_cap else None
    return PipelineResult(
        graph=g,
        matching=m,
        decomposition=d,
        classification=cls,
        d_set=loose_attainable(d),
        canonical=canonical_verifying_sets(d),
        verifying=fam,
    )
