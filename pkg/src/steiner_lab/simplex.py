"""Monotone maps between standard simplices and their normalized chains.

The join of two simplices is handled purely by index arithmetic: the block
sum Delta(m) |_| Delta(n) is Delta(m+1+n), with the second block shifted by
m+1.  This is a disjoint sum of underlying ordered sets, not a categorical
coproduct, so no object-level construction is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .chains import AdcMorphism, Chain, DirComplex


@dataclass(frozen=True)
class MonotoneMap:
    """A weakly increasing map Delta(src) -> Delta(dst), given by its values."""

    src: int
    dst: int
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.src + 1:
            raise ValueError("image list must have src+1 entries")
        if any(not 0 <= v <= self.dst for v in self.image):
            raise ValueError("image values out of range")
        if any(a > b for a, b in zip(self.image, self.image[1:])):
            raise ValueError("image list must be weakly increasing")

    def __call__(self, k):
        return self.image[k]

    def compose(self, other):
        """self . other: apply ``other`` first."""
        if other.dst != self.src:
            raise ValueError("composition mismatch")
        return MonotoneMap(other.src, self.dst, tuple(self.image[v] for v in other.image))

    @property
    def is_identity(self):
        return self.src == self.dst and self.image == tuple(range(self.src + 1))


def identity_map(n):
    return MonotoneMap(n, n, tuple(range(n + 1)))


def constant_map(m, n, value):
    return MonotoneMap(m, n, (value,) * (m + 1))


def face_map(n, i):
    """The injection Delta(n-1) -> Delta(n) skipping the value i."""
    return MonotoneMap(n - 1, n, tuple(k if k < i else k + 1 for k in range(n)))


def degeneracy_map(n, i):
    """The surjection Delta(n+1) -> Delta(n) taking the value i twice."""
    return MonotoneMap(n + 1, n, tuple(k if k <= i else k - 1 for k in range(n + 2)))


def vertex_map(n, value):
    return MonotoneMap(0, n, (value,))


def all_monotone_maps(m, n):
    """All weakly increasing maps Delta(m) -> Delta(n), in lexicographic order."""
    return [
        MonotoneMap(m, n, image)
        for image in itertools.combinations_with_replacement(range(n + 1), m + 1)
    ]


def join_maps(phi, psi):
    """Block-sum map Delta(m'+1+n') -> Delta(m+1+n): phi, then psi shifted by m+1."""
    image = phi.image + tuple(phi.dst + 1 + v for v in psi.image)
    return MonotoneMap(phi.src + 1 + psi.src, phi.dst + 1 + psi.dst, image)


def initial_inclusion(m, n):
    """i_{m,n}: Delta(m) -> Delta(m+1+n) onto the first block."""
    return MonotoneMap(m, m + 1 + n, tuple(range(m + 1)))


def final_inclusion(m, n):
    """j_{m,n}: Delta(n) -> Delta(m+1+n) onto the second block."""
    return MonotoneMap(n, m + 1 + n, tuple(m + 1 + l for l in range(n + 1)))


def simplex_token(tup):
    return ",".join(str(i) for i in tup)


def token_simplex(token):
    return tuple(int(s) for s in token.split(","))


@lru_cache(maxsize=None)
def c_delta(n):
    """Normalized chains of the n-simplex as a directed complex.

    Degree-p basis: strictly increasing (p+1)-tuples in [0, n]; alternating
    face-deletion differential; augmentation 1 on every vertex.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    basis = [
        [simplex_token(t) for t in itertools.combinations(range(n + 1), p + 1)]
        for p in range(n + 1)
    ]
    diff = {}
    for p in range(1, n + 1):
        for tup in itertools.combinations(range(n + 1), p + 1):
            faces = {}
            for k in range(p + 1):
                face = tup[:k] + tup[k + 1:]
                faces[simplex_token(face)] = (-1) ** k
            diff[simplex_token(tup)] = Chain.make(p - 1, faces)
    aug = {str(v): 1 for v in range(n + 1)}
    return DirComplex(basis, diff, aug)


def chain_image_of_tuple(phi, tup):
    """Image of a strictly increasing tuple under a monotone map, as a chain.

    Repeated values collapse the simplex to zero.
    """
    image = tuple(phi(i) for i in tup)
    if any(a == b for a, b in zip(image, image[1:])):
        return Chain.zero(len(tup) - 1)
    return Chain.unit(len(tup) - 1, simplex_token(image))


@lru_cache(maxsize=None)
def c_of_map(phi):
    """The chain-level morphism of a monotone map (functorially)."""
    src = c_delta(phi.src)
    dst = c_delta(phi.dst)
    images = {}
    for p in src.degrees():
        for token in src.tokens(p):
            images[token] = chain_image_of_tuple(phi, token_simplex(token))
    return AdcMorphism(src, dst, images)
