"""Reduced words in free groups and elements of direct products of free groups.

Words are stored run-length encoded: a tuple of ``(generator, exponent)``
syllables with adjacent generators distinct and no zero exponents.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import ParseError, PreconditionError


def _reduce(syllables) -> tuple:
    out = []
    for gen, e in syllables:
        if e == 0:
            continue
        if out and out[-1][0] == gen:
            total = out[-1][1] + e
            if total:
                out[-1] = (gen, total)
            else:
                out.pop()
        else:
            out.append((gen, e))
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    rank: int
    syllables: tuple = ()

    def __post_init__(self):
        if self.rank < 1:
            raise PreconditionError("free group rank must be positive")
        for gen, _ in self.syllables:
            if not 0 <= gen < self.rank:
                raise PreconditionError(f"generator x{gen} outside rank {self.rank}")
        object.__setattr__(self, "syllables", _reduce(self.syllables))

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, index: int, exponent: int = 1) -> "FreeWord":
        return cls(rank, ((index, exponent),))

    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other):
        return word_multiply(self, other)

    def __invert__(self):
        return word_inverse(self)

    def __pow__(self, p: int):
        base = self if p >= 0 else word_inverse(self)
        if len(base.syllables) == 1:
            g, e = base.syllables[0]
            return FreeWord(self.rank, ((g, e * abs(p)),))
        out = FreeWord.identity(self.rank)
        p = abs(p)
        while p:
            if p & 1:
                out = word_multiply(out, base)
            base = word_multiply(base, base)
            p >>= 1
        return out

    def __len__(self):
        return sum(abs(e) for _, e in self.syllables)

    def __str__(self):
        return format_word(self)


def word_multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    if u.rank != v.rank:
        raise PreconditionError(f"rank mismatch: {u.rank} vs {v.rank}")
    # Only the junction can cancel; both operands are already reduced.
    left = list(u.syllables)
    right = list(v.syllables)
    i = 0
    while left and i < len(right):
        gen, e = right[i]
        if left[-1][0] != gen:
            break
        total = left[-1][1] + e
        if total:
            left[-1] = (gen, total)
            i += 1
            break
        left.pop()
        i += 1
    out = FreeWord.__new__(FreeWord)
    object.__setattr__(out, "rank", u.rank)
    object.__setattr__(out, "syllables", tuple(left) + tuple(right[i:]))
    return out


def word_inverse(u: FreeWord) -> FreeWord:
    out = FreeWord.__new__(FreeWord)
    object.__setattr__(out, "rank", u.rank)
    object.__setattr__(out, "syllables", tuple((g, -e) for g, e in reversed(u.syllables)))
    return out


def exp_sum(u: FreeWord, generator_index: int) -> int:
    if not 0 <= generator_index < u.rank:
        raise PreconditionError(f"generator index {generator_index} outside rank {u.rank}")
    return sum(e for g, e in u.syllables if g == generator_index)


def exp_vector(u: FreeWord) -> list:
    vec = [0] * u.rank
    for g, e in u.syllables:
        vec[g] += e
    return vec


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    return word_multiply(word_multiply(u, v), word_multiply(word_inverse(u), word_inverse(v)))


def words_commute(u: FreeWord, v: FreeWord) -> bool:
    if u.rank != v.rank:
        raise PreconditionError(f"rank mismatch: {u.rank} vs {v.rank}")
    if u.is_identity() or v.is_identity():
        return True
    return commutator(u, v).is_identity()


def substitute(u: FreeWord, images: Sequence[FreeWord]) -> FreeWord:
    """Apply the endomorphism sending generator j to ``images[j]``."""
    out = FreeWord.identity(images[0].rank if images else u.rank)
    for g, e in u.syllables:
        out = word_multiply(out, images[g] ** e)
    return out


# ------------------------------------------------------------------- products

@dataclass(frozen=True)
class ProductShape:
    """Ranks (m_1, ..., m_k) of the free factors of G = F_1 x ... x F_k."""

    ranks: tuple

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(m) for m in self.ranks))
        if any(m < 1 for m in self.ranks):
            raise PreconditionError("every factor rank must be positive")

    @property
    def k(self) -> int:
        return len(self.ranks)

    @property
    def total(self) -> int:
        return sum(self.ranks)

    def offsets(self) -> list:
        out, acc = [], 0
        for m in self.ranks:
            out.append(acc)
            acc += m
        return out

    def block_of(self, global_index: int) -> tuple:
        """(factor, local generator) for a global generator index."""
        for i, off in enumerate(self.offsets()):
            if global_index < off + self.ranks[i]:
                return i, global_index - off
        raise PreconditionError(f"generator index {global_index} outside total {self.total}")

    def column_block(self, i: int) -> range:
        off = self.offsets()[i]
        return range(off, off + self.ranks[i])


@dataclass(frozen=True)
class ProductElement:
    shape: ProductShape
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if len(self.components) != self.shape.k:
            raise PreconditionError(
                f"{len(self.components)} components for {self.shape.k} factors")
        for w, m in zip(self.components, self.shape.ranks):
            if w.rank != m:
                raise PreconditionError(f"component of rank {w.rank} in factor of rank {m}")

    @classmethod
    def identity(cls, shape: ProductShape) -> "ProductElement":
        return cls(shape, tuple(FreeWord.identity(m) for m in shape.ranks))

    @classmethod
    def generator(cls, shape: ProductShape, global_index: int, exponent: int = 1):
        """The basis element x_j for a global index j, split into its factor."""
        factor, local = shape.block_of(global_index)
        comps = list(cls.identity(shape).components)
        comps[factor] = FreeWord.generator(shape.ranks[factor], local, exponent)
        return cls(shape, tuple(comps))

    def is_identity(self) -> bool:
        return all(w.is_identity() for w in self.components)

    def __mul__(self, other):
        return product_multiply(self, other)

    def __invert__(self):
        return product_inverse(self)


def _check_shapes(a, b):
    if a.shape != b.shape:
        raise PreconditionError(f"shape mismatch: {a.shape.ranks} vs {b.shape.ranks}")


def product_multiply(a: ProductElement, b: ProductElement) -> ProductElement:
    _check_shapes(a, b)
    return ProductElement(a.shape, tuple(
        word_multiply(u, v) for u, v in zip(a.components, b.components)))


def product_inverse(a: ProductElement) -> ProductElement:
    return ProductElement(a.shape, tuple(word_inverse(u) for u in a.components))


def product_commute(a: ProductElement, b: ProductElement) -> bool:
    _check_shapes(a, b)
    return all(words_commute(u, v) for u, v in zip(a.components, b.components))


def abelianized_vector(a: ProductElement) -> list:
    """Exponent sums of every global generator, factor blocks concatenated in order."""
    vec = []
    for w in a.components:
        vec.extend(exp_vector(w))
    return vec


def _collinear(p, q) -> bool:
    return all(p[i] * q[j] == p[j] * q[i]
               for i in range(len(p)) for j in range(i + 1, len(p)))


def blocks_proportional(a: ProductElement, b: ProductElement) -> bool:
    """True when each factor's exponent-sum vectors of a and b are linearly dependent."""
    _check_shapes(a, b)
    return all(_collinear(exp_vector(u), exp_vector(v))
               for u, v in zip(a.components, b.components))


# -------------------------------------------------------------------- text io

_ATOM = re.compile(r"^x(\d+)(?:\^([+-]?\d+))?$")


def parse_word(text: str, rank: int) -> FreeWord:
    syllables = []
    for atom in text.split():
        m = _ATOM.match(atom)
        if m is None:
            if atom.startswith("x") and "^" in atom:
                raise ParseError(f"bad exponent in {atom!r}")
            raise ParseError(f"unknown generator symbol {atom!r}")
        index = int(m.group(1))
        if index >= rank:
            raise ParseError(f"generator x{index} outside rank {rank}")
        syllables.append((index, int(m.group(2)) if m.group(2) is not None else 1))
    return FreeWord(rank, tuple(syllables))


def format_word(u: FreeWord) -> str:
    return " ".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in u.syllables)
