"""Tensor product of directed complexes and pushouts along rigid inclusions.

Tensor basis tokens are written "a(x)b"; pushout tokens are namespaced
"K:" / "L:", with base tokens identified to their left-leg image so the
amalgamated basis is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chains import (
    AdcMorphism,
    Chain,
    DirComplex,
    strong_preorder_is_total,
)

TENSOR_SEP = "(x)"


def tensor_token(a, b):
    return f"{a}{TENSOR_SEP}{b}"


def split_tensor_token(token):
    a, _, b = token.partition(TENSOR_SEP)
    return a, b


def tensor_chains(x, y):
    """Bilinear product of chains, landing in degree x.degree + y.degree."""
    return Chain.make(
        x.degree + y.degree,
        [
            (tensor_token(a, b), ca * cb)
            for a, ca in x.items()
            for b, cb in y.items()
        ],
    )


@lru_cache(maxsize=None)
def tensor_complex(K, L):
    """Tensor product: product basis, Koszul-sign differential, product augmentation.

    d(a(x)b) = d(a)(x)b + (-1)^deg(a) a(x)d(b), e(a(x)b) = e(a)e(b).
    """
    dim = K.dim + L.dim
    basis = [[] for _ in range(dim + 1)]
    diff = {}
    aug = {}
    for p in K.degrees():
        for a in K.tokens(p):
            for q in L.degrees():
                for b in L.tokens(q):
                    token = tensor_token(a, b)
                    basis[p + q].append(token)
                    if p + q == 0:
                        aug[token] = K.aug_of(a) * L.aug_of(b)
                        continue
                    d = Chain.zero(p + q - 1)
                    if p > 0:
                        d = d + tensor_chains(K.diff_of(a), Chain.unit(q, b))
                    if q > 0:
                        d = d + (-1) ** p * tensor_chains(Chain.unit(p, a), L.diff_of(b))
                    diff[token] = d
    return DirComplex(basis, diff, aug)


def tensor_morphism(f, g):
    """Functoriality of the tensor: (f(x)g)(a(x)b) = f(a)(x)g(b), bilinearly."""
    src = tensor_complex(f.source, g.source)
    dst = tensor_complex(f.target, g.target)
    images = {}
    for p in f.source.degrees():
        for a in f.source.tokens(p):
            fa = f.image_of(a)
            for q in g.source.degrees():
                for b in g.source.tokens(q):
                    images[tensor_token(a, b)] = tensor_chains(fa, g.image_of(b))
    return AdcMorphism(src, dst, images)


def left_unitor(K):
    """The isomorphism cDelta(0) (x) K -> K."""
    from .simplex import c_delta

    point = c_delta(0)
    T = tensor_complex(point, K)
    images = {}
    for p in K.degrees():
        for b in K.tokens(p):
            images[tensor_token("0", b)] = K.unit_chain(b)
    return AdcMorphism(T, K, images)


def tensor_injection(K, L, end_token):
    """The inclusion L -> K (x) L at a degree-0 basis token of K."""
    T = tensor_complex(K, L)
    images = {
        b: Chain.unit(p, tensor_token(end_token, b))
        for p in L.degrees()
        for b in L.tokens(p)
    }
    return AdcMorphism(L, T, images)


def rigid_mono_check(f):
    """True iff f is injective and sends basis elements to basis elements."""
    seen = set()
    for p in f.source.degrees():
        for token in f.source.tokens(p):
            image = f.image_of(token)
            if len(image.items()) != 1 or image.items()[0][1] != 1:
                return False
            target_token = image.items()[0][0]
            if target_token in seen:
                return False
            seen.add(target_token)
    return True


class PushoutPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Pushout:
    """Amalgamated sum of complexes along rigid inclusions of a common base.

    ``left``/``right`` are the canonical injections; ``induced(u, v)`` is the
    co-pairing with a pair of morphisms agreeing on the base.
    """

    base: DirComplex
    complex: DirComplex
    left: AdcMorphism
    right: AdcMorphism
    left_leg: AdcMorphism
    right_leg: AdcMorphism

    def induced(self, u, v):
        if u.source != self.left.source or v.source != self.right.source:
            raise ValueError("co-pairing legs have wrong sources")
        if u.target != v.target:
            raise ValueError("co-pairing legs have different targets")
        if u.after(self.left_leg) != v.after(self.right_leg):
            raise ValueError("co-pairing legs disagree on the base")
        images = {}
        for p in self.complex.degrees():
            for token in self.complex.tokens(p):
                side, _, orig = token.partition(":")
                images[token] = (u if side == "K" else v).image_of(orig)
        return AdcMorphism(self.complex, u.target, images)


def pushout_complex(f, g):
    """Pushout of K <- M -> L along rigid monomorphisms with totally ordered base.

    Basis: all of K's generators (namespaced "K:") plus L's generators not
    hit by g ("L:"); g-images are renamed to their K-side partners, so the
    per-degree basis count is |B_K| + |B_L| - |B_M|.
    """
    if not rigid_mono_check(f):
        raise PushoutPreconditionError("left leg is not a rigid monomorphism")
    if not rigid_mono_check(g):
        raise PushoutPreconditionError("right leg is not a rigid monomorphism")
    if f.source != g.source:
        raise PushoutPreconditionError("legs do not share a base complex")
    M, K, L = f.source, f.target, g.target
    if not strong_preorder_is_total(M):
        raise PushoutPreconditionError(
            "the precedence order of the base complex is not total"
        )

    glued = {}
    for p in M.degrees():
        for m in M.tokens(p):
            glued[g.image_of(m).items()[0][0]] = "K:" + f.image_of(m).items()[0][0]

    def left_name(token):
        return "K:" + token

    def right_name(token):
        return glued.get(token, "L:" + token)

    dim = max(K.dim, L.dim)
    basis = [[] for _ in range(dim + 1)]
    diff = {}
    aug = {}
    for p in K.degrees():
        for token in K.tokens(p):
            name = left_name(token)
            basis[p].append(name)
            if p == 0:
                aug[name] = K.aug_of(token)
            else:
                diff[name] = Chain.make(
                    p - 1, [(left_name(t), c) for t, c in K.diff_of(token).items()]
                )
    for p in L.degrees():
        for token in L.tokens(p):
            if token in glued:
                continue
            name = right_name(token)
            basis[p].append(name)
            if p == 0:
                aug[name] = L.aug_of(token)
            else:
                diff[name] = Chain.make(
                    p - 1, [(right_name(t), c) for t, c in L.diff_of(token).items()]
                )
    P = DirComplex(basis, diff, aug)
    left = AdcMorphism(
        K, P, {t: Chain.unit(p, left_name(t)) for p in K.degrees() for t in K.tokens(p)}
    )
    right = AdcMorphism(
        L, P, {t: Chain.unit(p, right_name(t)) for p in L.degrees() for t in L.tokens(p)}
    )
    return Pushout(M, P, left, right, f, g)
