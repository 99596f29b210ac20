"""Colorings <-> homomorphisms onto products of free groups.

``coloring_to_surjection`` sends each color class to its own free factor.
``surjection_to_coloring`` goes the other way through the abelianization
matrix and block row selection, so it never looks at the graph's edges
except to validate its answer.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import InternalError, PreconditionError, RaagColorError, VerificationError
from .freegroup import ProductElement, ProductShape, product_commute
from .graph import Coloring, Graph, min_coloring_oracle, validate_coloring
from .homomorphism import (Homomorphism, abelianization_matrix, generator_images,
                           verify_h1_iso, verify_homomorphism)
from .linalg import select_block_rows

WORKERS_ENV = "RAAGCOLOR_WORKERS"


def coloring_to_surjection(g: Graph, c: Coloring) -> Homomorphism:
    """Map each vertex to a fresh generator of the factor indexed by its color.

    Unused colors are dropped first, so the target has one factor per color
    class actually present; within a class, generators go out in vertex order.
    """
    if not validate_coloring(g, c):
        bad = next((u, v) for u, v in g.sorted_edges() if c.assignment[u] == c.assignment[v])
        raise PreconditionError(f"not a valid coloring: edge {bad} is monochromatic")
    c = c.compressed()
    sizes = [0] * c.color_count
    slot_in_class = []
    for col in c.assignment:
        slot_in_class.append(sizes[col - 1])
        sizes[col - 1] += 1
    shape = ProductShape(tuple(sizes))
    offsets = shape.offsets()
    slots = [offsets[col - 1] + s for col, s in zip(c.assignment, slot_in_class)]
    return Homomorphism(g, shape, generator_images(shape, slots))


def surjection_to_coloring(h: Homomorphism) -> Coloring:
    """Color vertex v by the factor whose row block contains v's abelianized image."""
    check = verify_homomorphism(h)
    if not check.ok:
        edges = ", ".join(f"{u}-{v}" for u, v in check.bad_edges)
        raise VerificationError(f"images do not commute on edges {edges}",
                                bad_edges=check.bad_edges)
    if not verify_h1_iso(h):
        raise VerificationError("H1: abelianization matrix is singular", h1_failed=True)
    if h.graph.vertex_count == 0:
        return Coloring((), 0)
    partition = select_block_rows(abelianization_matrix(h), h.shape)
    owner = partition.block_of_row()
    coloring = Coloring(tuple(owner[v] + 1 for v in range(h.graph.vertex_count)), h.shape.k)
    if not validate_coloring(h.graph, coloring):
        raise InternalError("extracted coloring is invalid although both checks passed")
    return coloring


def round_trip(g: Graph, c: Coloring) -> Coloring:
    return surjection_to_coloring(coloring_to_surjection(g, c))


# --------------------------------------------------------------------- harness

@dataclass(frozen=True)
class EquivalenceReport:
    graph_id: int
    n: int
    k: int
    oracle_colorable: bool
    construction_succeeded: bool
    extraction_valid: bool
    colors_used: int

    @property
    def pipeline_succeeded(self) -> bool:
        return self.construction_succeeded and self.extraction_valid and self.colors_used <= self.k

    @property
    def agrees(self) -> bool:
        return self.oracle_colorable == self.pipeline_succeeded

    def csv_row(self) -> str:
        return (f"{self.graph_id},{self.n},{self.k},{int(self.oracle_colorable)},"
                f"{int(self.construction_succeeded)},{int(self.extraction_valid)},"
                f"{self.colors_used}")


CSV_HEADER = "graph_id,n,k,oracle_colorable,construction_succeeded,extraction_valid,colors_used"


def labeled_graph(n: int, graph_id: int) -> Graph:
    """Graph whose edge set is given by the bits of graph_id over pairs in lex order."""
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, [p for b, p in enumerate(pairs) if graph_id >> b & 1])


def monomial_hom_search(g: Graph, k: int) -> Optional[Coloring]:
    """Look for a homomorphism sending every vertex to a distinct free generator
    of one of k factors.

    Vertices are placed one at a time into a factor of rank n each; a
    placement survives only if the new image commutes with the images of
    already placed neighbours. The factor of each vertex is returned as a
    coloring, or None when no placement exists.
    """
    n = g.vertex_count
    if n == 0:
        return Coloring((), 0)
    if k < 1:
        return None
    wide = ProductShape((n,) * k)
    adj = g.neighbors()
    image = [None] * n
    factor = [0] * n

    def place(v, used):
        if v == n:
            return True
        for f in range(min(used + 1, k)):
            w = ProductElement.generator(wide, f * n + v)
            if all(product_commute(w, image[u]) for u in adj[v] if u < v):
                image[v], factor[v] = w, f
                if place(v + 1, max(used, f + 1)):
                    return True
        image[v] = None
        return False

    if not place(0, 0):
        return None
    return Coloring(tuple(f + 1 for f in factor), k)


def pipeline(g: Graph, k: int, graph_id: int = 0) -> EquivalenceReport:
    oracle = min_coloring_oracle(g, k)
    built = False
    valid = False
    used = 0
    found = monomial_hom_search(g, k)
    if found is not None:
        try:
            h = coloring_to_surjection(g, found)
            built = verify_homomorphism(h).ok and verify_h1_iso(h)
            extracted = surjection_to_coloring(h)
            valid = validate_coloring(g, extracted)
            used = extracted.colors_used
        except RaagColorError:
            valid = False
    return EquivalenceReport(graph_id, g.vertex_count, k, oracle is not None, built, valid, used)


@dataclass(frozen=True)
class HarnessConfig:
    n_max: int = 5
    k_min: int = 1
    k_max: int = 5
    exhaustive_bound: int = 5
    # Graphs on fewer than n_max vertices are skipped unless this is set.
    include_smaller: bool = False
    workers: int = 1


def _harness_items(cfg):
    sizes = range(0 if cfg.include_smaller else cfg.n_max, cfg.n_max + 1)
    for n in sizes:
        for gid in range(1 << (n * (n - 1) // 2)):
            yield n, gid


def _run_item(args):
    n, gid, ks = args
    g = labeled_graph(n, gid)
    return [pipeline(g, k, gid) for k in ks]


def equivalence_harness(n_max: int = 5, k_range: Iterable[int] = range(1, 6),
                        config: Optional[HarnessConfig] = None) -> list:
    """Compare oracle k-colorability with pipeline success on every labeled graph.

    Reports come back ordered by (n, graph id, k) whatever the worker count.
    """
    if config is None:
        ks = list(k_range)
        if not ks:
            raise PreconditionError("empty range of k")
        config = HarnessConfig(n_max=n_max, k_min=min(ks), k_max=max(ks),
                               workers=int(os.environ.get(WORKERS_ENV, "1")))
    cfg = config
    if cfg.n_max > cfg.exhaustive_bound:
        raise PreconditionError(
            f"n_max={cfg.n_max} exceeds the exhaustive bound {cfg.exhaustive_bound}")
    if cfg.n_max < 0 or cfg.k_min < 1 or cfg.k_max < cfg.k_min:
        raise PreconditionError("need n_max >= 0 and 1 <= k_min <= k_max")
    ks = list(range(cfg.k_min, cfg.k_max + 1))
    items = [(n, gid, ks) for n, gid in _harness_items(cfg)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_run_item, items, chunksize=32))
    else:
        chunks = [_run_item(it) for it in items]
    return [r for chunk in chunks for r in chunk]
