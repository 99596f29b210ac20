"""Homomorphisms from a right-angled Artin group into a product of free groups.

A map is given by the images of the vertex generators. It is a homomorphism
exactly when the images of adjacent vertices commute.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ParseError, PreconditionError
from .freegroup import (ProductElement, ProductShape, abelianized_vector,
                        format_word, parse_word, product_commute)
from .graph import Graph
from .linalg import RationalMatrix, det


@dataclass(frozen=True)
class Homomorphism:
    graph: Graph
    shape: ProductShape
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        n = self.graph.vertex_count
        if len(self.images) != n:
            raise PreconditionError(f"{len(self.images)} images for {n} vertices")
        if self.shape.total != n:
            raise PreconditionError(
                f"factor ranks {list(self.shape.ranks)} sum to {self.shape.total}, expected {n}")
        for w in self.images:
            if w.shape != self.shape:
                raise PreconditionError("image lies in a differently shaped product")

    def relabel(self, perm) -> "Homomorphism":
        """Rename vertex v to perm[v], carrying its image along."""
        images = [None] * len(self.images)
        for v, w in enumerate(self.images):
            images[perm[v]] = w
        return Homomorphism(self.graph.relabel(perm), self.shape, tuple(images))


@dataclass(frozen=True)
class HomCheck:
    bad_edges: tuple = ()
    ok: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "ok", not self.bad_edges)


def verify_homomorphism(h: Homomorphism) -> HomCheck:
    """List the edges whose endpoint images fail to commute."""
    bad = tuple((u, v) for u, v in h.graph.sorted_edges()
                if not product_commute(h.images[u], h.images[v]))
    return HomCheck(bad)


def abelianization_matrix(h: Homomorphism) -> RationalMatrix:
    return RationalMatrix([abelianized_vector(w) for w in h.images], h.shape.total)


def verify_h1_iso(h: Homomorphism) -> bool:
    return det(abelianization_matrix(h)) != 0


# ----------------------------------------------------------------- file format

def hom_to_dict(h: Homomorphism) -> dict:
    return {
        "n": h.graph.vertex_count,
        "edges": [list(e) for e in h.graph.sorted_edges()],
        "ranks": list(h.shape.ranks),
        "images": [[format_word(c) for c in w.components] for w in h.images],
    }


def serialize_hom(h: Homomorphism) -> str:
    """JSON with one image per line; parse_hom(serialize_hom(h)) == h."""
    d = hom_to_dict(h)
    images = "".join(("\n  " if i == 0 else ",\n  ") + json.dumps(img)
                     for i, img in enumerate(d["images"]))
    if images:
        images += "\n "
    return ("{\n"
            f' "n": {d["n"]},\n'
            f' "edges": {json.dumps(d["edges"])},\n'
            f' "ranks": {json.dumps(d["ranks"])},\n'
            f' "images": [{images}]\n'
            "}\n")


def hom_from_dict(data: dict) -> Homomorphism:
    try:
        n = data["n"]
        edges = data["edges"]
        ranks = data["ranks"]
        images = data["images"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"homomorphism file missing field {exc}") from None
    if not isinstance(n, int) or not all(isinstance(m, int) for m in ranks):
        raise ParseError("'n' and 'ranks' must be integers")
    if not all(isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)
               for e in edges):
        raise ParseError("'edges' must be a list of [u, v] integer pairs")
    try:
        graph = Graph.from_edges(n, [tuple(e) for e in edges])
        shape = ProductShape(tuple(ranks))
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None
    if not isinstance(images, list):
        raise ParseError("'images' must be a list")
    parsed = []
    for v, comps in enumerate(images):
        if (not isinstance(comps, list) or len(comps) != shape.k
                or not all(isinstance(t, str) for t in comps)):
            raise ParseError(f"image of vertex {v} needs {shape.k} word strings")
        try:
            words = tuple(parse_word(text, m) for text, m in zip(comps, shape.ranks))
        except ParseError as exc:
            raise ParseError(f"image of vertex {v}: {exc}") from None
        parsed.append(ProductElement(shape, words))
    return Homomorphism(graph, shape, tuple(parsed))


def parse_hom(text: str) -> Homomorphism:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("homomorphism file must hold a JSON object")
    return hom_from_dict(data)


def generator_images(shape: ProductShape, slots) -> tuple:
    """Product elements sending each vertex to the global generator ``slots[v]``."""
    return tuple(ProductElement.generator(shape, j) for j in slots)


def identity_hom(graph: Graph, shape: ProductShape) -> Homomorphism:
    return Homomorphism(graph, shape, generator_images(shape, range(graph.vertex_count)))

