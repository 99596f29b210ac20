"""Generated test instances: scrambled homomorphisms and the extraction benchmark."""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass

from .freegroup import FreeWord, ProductElement, substitute
from .graph import Coloring, Graph
from .homomorphism import Homomorphism
from .reduction import coloring_to_surjection, surjection_to_coloring


def random_nielsen_move(rng: random.Random, rank: int) -> list:
    """Generator images of a random elementary automorphism of F_rank.

    Either x_a -> x_a^-1, or x_a -> x_a x_b^{+-1} / x_b^{+-1} x_a with b != a.
    Rank-one factors only admit the inversion.
    """
    images = [FreeWord.generator(rank, j) for j in range(rank)]
    a = rng.randrange(rank)
    if rank == 1 or rng.random() < 0.2:
        images[a] = FreeWord.generator(rank, a, -1)
        return images
    b = rng.choice([j for j in range(rank) if j != a])
    other = FreeWord.generator(rank, b, rng.choice((1, -1)))
    images[a] = images[a] * other if rng.random() < 0.5 else other * images[a]
    return images


def apply_factor_automorphism(h: Homomorphism, factor: int, gen_images) -> Homomorphism:
    """Post-compose h with an automorphism of one free factor."""
    new = []
    for w in h.images:
        comps = list(w.components)
        comps[factor] = substitute(comps[factor], gen_images)
        new.append(ProductElement(h.shape, tuple(comps)))
    return Homomorphism(h.graph, h.shape, tuple(new))


def scramble(h: Homomorphism, rng: random.Random, moves: int = 50,
             relabel: bool = True) -> tuple:
    """Apply random factor-wise Nielsen moves and a random vertex relabeling.

    Returns (scrambled homomorphism, perm) where vertex v of h became perm[v].
    """
    perm = list(range(h.graph.vertex_count))
    if h.shape.k == 0:
        return h, perm
    for _ in range(moves):
        factor = rng.randrange(h.shape.k)
        h = apply_factor_automorphism(h, factor,
                                      random_nielsen_move(rng, h.shape.ranks[factor]))
    if relabel:
        rng.shuffle(perm)
        h = h.relabel(perm)
    return h, perm


def planted_instance(n: int, k: int, p: float, seed: int) -> tuple:
    """Random graph with a hidden k-coloring: edges only join distinct classes."""
    rng = random.Random(seed)
    colors = [rng.randrange(1, k + 1) for _ in range(n)]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if colors[u] != colors[v] and rng.random() < p]
    return Graph.from_edges(n, edges), Coloring(tuple(colors), k)


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple = (20, 40, 80)
    colors: int = 4
    edge_probability: float = 0.15
    moves: int = 50
    repeats: int = 5
    seed: int = 2024


def bench(cfg: BenchConfig = BenchConfig()) -> list:
    """Median extraction wall time per size on scrambled planted instances.

    Returns rows (n, median seconds, max word length seen).
    """
    rows = []
    for n in cfg.sizes:
        times, longest = [], 0
        for rep in range(cfg.repeats):
            seed = cfg.seed * 1_000_003 + n * 101 + rep
            g, c = planted_instance(n, cfg.colors, cfg.edge_probability, seed)
            h, _ = scramble(coloring_to_surjection(g, c), random.Random(seed), cfg.moves)
            longest = max([longest] + [len(w) for img in h.images for w in img.components])
            start = time.perf_counter()
            surjection_to_coloring(h)
            times.append(time.perf_counter() - start)
        rows.append((n, statistics.median(times), longest))
    return rows
