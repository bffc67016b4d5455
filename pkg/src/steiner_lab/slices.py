"""Slice omega-categories under an object, and oplax transformations.

Cells of the slice A\\c over a functor u: A -> C are double rows of pairs:
cells a of A together with coherence cells of C connecting the cone at c.
Everything is represented through presenting complexes: A = nu(K),
C = nu(L), u an ADC morphism, and an oplax transformation is a morphism
out of the cylinder complex interval (x) K with prescribed end restrictions.

The tableau data is redundant (lower rows repeat the boundaries of the
higher cells) but keeps the source/target/composition formulas symmetric;
it is validated on construction sites rather than trusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .chains import AdcMorphism, Chain
from .cells import (
    CellTableau,
    atom_cell,
    cell_problems,
    compose,
    enumerate_cells,
    identity,
    map_cell,
    object_cell,
    source,
    source_iter,
    target,
    target_iter,
)
from .simplex import c_delta
from .solve import solve_boundary
from .tensor import tensor_chains, tensor_complex, tensor_token

INTERVAL_SRC = "0"
INTERVAL_TGT = "1"
INTERVAL_EDGE = "0,1"


def interval():
    return c_delta(1)


def cylinder_complex(K):
    return tensor_complex(interval(), K)


def constant_morphism(K, L, c):
    """The functor collapsing K to the object chain c of L."""
    if c.degree != 0 or not L.contains_chain(c) or L.e(c) != 1:
        raise ValueError("constant value must be an object chain of the target")
    images = {}
    for p in K.degrees():
        for t in K.tokens(p):
            if p == 0:
                images[t] = K.aug_of(t) * c
            else:
                images[t] = Chain.zero(p)
    return AdcMorphism(K, L, images)


@dataclass(frozen=True)
class OplaxTransformation:
    """An oplax transformation packaged as its cylinder morphism h.

    ``h`` maps interval (x) K to L; the restrictions to the two ends of the
    interval are the source and target functors of the transformation.
    """

    h: AdcMorphism

    def __post_init__(self):
        src = self.h.source
        prefixes = tuple(
            tensor_token(end, "") for end in (INTERVAL_SRC, INTERVAL_TGT, INTERVAL_EDGE)
        )
        for p in src.degrees():
            for token in src.tokens(p):
                if not token.startswith(prefixes):
                    raise ValueError("h is not defined on a cylinder complex")

    @property
    def target_complex(self):
        return self.h.target

    def base_tokens(self):
        src = self.h.source
        prefix = tensor_token(INTERVAL_SRC, "")
        return [
            (p, token[len(prefix):])
            for p in src.degrees()
            for token in src.tokens(p)
            if token.startswith(prefix)
        ]

    def end_functor(self, end, K):
        images = {
            b: self.h.image_of(tensor_token(end, b))
            for p in K.degrees()
            for b in K.tokens(p)
        }
        return AdcMorphism(K, self.h.target, images)

    def source_functor(self, K):
        return self.end_functor(INTERVAL_SRC, K)

    def target_functor(self, K):
        return self.end_functor(INTERVAL_TGT, K)

    def shift(self, z):
        """h applied to edge (x) z: the degree-raising component data."""
        return self.h.apply(
            tensor_chains(Chain.unit(1, INTERVAL_EDGE), z)
        )


def oplax_from_cylinder(h):
    return OplaxTransformation(h)


def identity_oplax(u):
    """The identity transformation of u, as a degenerate cylinder."""
    T = cylinder_complex(u.source)
    images = {}
    for p in u.source.degrees():
        for b in u.source.tokens(p):
            ub = u.image_of(b)
            images[tensor_token(INTERVAL_SRC, b)] = ub
            images[tensor_token(INTERVAL_TGT, b)] = ub
            images[tensor_token(INTERVAL_EDGE, b)] = Chain.zero(p + 1)
    return OplaxTransformation(AdcMorphism(T, u.target, images))


def precompose_oplax(T, f, K=None):
    """Whisker T by f on the right: the transformation T . f."""
    K = K or f.source
    C = cylinder_complex(K)
    images = {}
    for p in K.degrees():
        for b in K.tokens(p):
            fb = f.image_of(b)
            for end in (INTERVAL_SRC, INTERVAL_TGT):
                images[tensor_token(end, b)] = T.h.apply(
                    tensor_chains(Chain.unit(0, end), fb)
                )
            images[tensor_token(INTERVAL_EDGE, b)] = T.shift(fb)
    return OplaxTransformation(AdcMorphism(C, T.h.target, images))


def postcompose_oplax(g, T):
    """Whisker T by a functor g on the left: g . T."""
    return OplaxTransformation(g.after(T.h))


def cylinder_cell(a):
    """The canonical (dim+1)-cell of nu(interval (x) K) over a cell a of nu(K)."""
    K = a.complex
    T = cylinder_complex(K)
    src = Chain.unit(0, INTERVAL_SRC)
    tgt = Chain.unit(0, INTERVAL_TGT)
    edge = Chain.unit(1, INTERVAL_EDGE)
    x0, x1 = [], []
    for r in range(a.dim + 1):
        lo = tensor_chains(src, a.x0[r])
        hi = tensor_chains(tgt, a.x1[r])
        if r > 0:
            lo = lo + tensor_chains(edge, a.x1[r - 1])
            hi = hi + tensor_chains(edge, a.x0[r - 1])
        x0.append(lo)
        x1.append(hi)
    top = tensor_chains(edge, a.top)
    return CellTableau(T, tuple(x0) + (top,), tuple(x1) + (top,))


def oplax_component(T, a):
    """The structural (dim+1)-cell of the transformation at a cell a."""
    return map_cell(T.h, cylinder_cell(a))


def vertical_compose(beta, alpha, K=None):
    """The vertical composite: fold the two cylinders through the glued interval.

    The composite cylinder restricts to alpha's source on one end and
    beta's target on the other; its edge component is the sum of the two
    edge components.
    """
    src = alpha.h.source
    if beta.h.source != src or beta.h.target != alpha.h.target:
        raise ValueError("transformations are not stacked over the same complexes")
    images = {}
    for p in src.degrees():
        for token in src.tokens(p):
            if token.startswith(tensor_token(INTERVAL_SRC, "")):
                images[token] = alpha.h.image_of(token)
            elif token.startswith(tensor_token(INTERVAL_TGT, "")):
                images[token] = beta.h.image_of(token)
            else:
                images[token] = beta.h.image_of(token) + alpha.h.image_of(token)
    return OplaxTransformation(AdcMorphism(src, alpha.h.target, images))


@dataclass(frozen=True)
class SliceCell:
    """A cell of the slice under c of the functor presented by u: K -> L.

    ``a0[k]``/``a1[k]`` (k = 0..dim) are cells of nu(K); ``t0[k]``/``t1[k]``
    hold the coherence (k+1)-cells of nu(L) (so index k stores the cell the
    tableau writes in column k+1).
    """

    u: AdcMorphism
    c: Chain
    a0: tuple[CellTableau, ...]
    a1: tuple[CellTableau, ...]
    t0: tuple[CellTableau, ...]
    t1: tuple[CellTableau, ...]

    @property
    def dim(self):
        return len(self.a0) - 1

    def base_object(self):
        return object_cell(self.u.target, self.c)


def whisker_composite(u, a_cell, coherences):
    """u(a) *_0 alpha_1 *_1 ... *_{k-1} alpha_k, folded left to right
    (lower compositions bind first)."""
    acc = map_cell(u, a_cell)
    for l, t in enumerate(coherences):
        acc = compose(acc, t, l)
    return acc


def whisker_target(cell, eps, k):
    """The prescribed target of the coherence cell in column k+1."""
    a_row = cell.a0 if eps == 0 else cell.a1
    return whisker_composite(cell.u, a_row[k], cell.t0[:k])


def slice_problems(cell):
    """Diagnostics for the slice tableau conditions; empty iff valid."""
    problems = []
    i = cell.dim
    K, L = cell.u.source, cell.u.target
    rows = (cell.a0, cell.a1, cell.t0, cell.t1)
    if not all(len(r) == i + 1 for r in rows):
        raise ValueError("all four rows must have dim+1 entries")
    for k in range(i + 1):
        for a in (cell.a0[k], cell.a1[k]):
            if a.complex != K or a.dim != k:
                raise ValueError(f"a-row entry {k} is not a {k}-cell over the source")
            problems.extend(f"a[{k}]: {p}" for p in cell_problems(a))
        for t in (cell.t0[k], cell.t1[k]):
            if t.complex != L or t.dim != k + 1:
                raise ValueError(f"coherence entry {k} is not a {k + 1}-cell")
            problems.extend(f"alpha[{k + 1}]: {p}" for p in cell_problems(t))
    if cell.a0[i] != cell.a1[i]:
        problems.append("top a-entries differ")
    if cell.t0[i] != cell.t1[i]:
        problems.append("top coherence entries differ")
    for k in range(1, i + 1):
        for eps, row in ((0, cell.a0), (1, cell.a1)):
            if source(row[k]) != cell.a0[k - 1]:
                problems.append(f"source of a^{eps}_{k} is not a^0_{k - 1}")
            if target(row[k]) != cell.a1[k - 1]:
                problems.append(f"target of a^{eps}_{k} is not a^1_{k - 1}")
    for k in range(i + 1):
        for eps, row in ((0, cell.t0), (1, cell.t1)):
            want_source = cell.base_object() if k == 0 else cell.t1[k - 1]
            if source(row[k]) != want_source:
                problems.append(f"source of alpha^{eps}_{k + 1} is wrong")
            if target(row[k]) != whisker_target(cell, eps, k):
                problems.append(f"target of alpha^{eps}_{k + 1} is wrong")
    return problems


def validate_slice_cell(cell):
    return not slice_problems(cell)


def slice_source(cell):
    i = cell.dim
    if i == 0:
        raise ValueError("0-cells have no source")
    return SliceCell(
        cell.u,
        cell.c,
        cell.a0[:i],
        cell.a1[: i - 1] + (cell.a0[i - 1],),
        cell.t0[:i],
        cell.t1[: i - 1] + (cell.t0[i - 1],),
    )


def slice_target(cell):
    i = cell.dim
    if i == 0:
        raise ValueError("0-cells have no target")
    return SliceCell(
        cell.u,
        cell.c,
        cell.a0[: i - 1] + (cell.a1[i - 1],),
        cell.a1[:i],
        cell.t0[: i - 1] + (cell.t1[i - 1],),
        cell.t1[:i],
    )


def slice_source_target(cell):
    return slice_source(cell), slice_target(cell)


def slice_identity(cell):
    i = cell.dim
    return SliceCell(
        cell.u,
        cell.c,
        cell.a0 + (identity(cell.a0[i]),),
        cell.a1 + (identity(cell.a0[i]),),
        cell.t0 + (identity(cell.t0[i]),),
        cell.t1 + (identity(cell.t0[i]),),
    )


def slice_source_iter(cell, j):
    while cell.dim > j:
        cell = slice_source(cell)
    return cell


def slice_target_iter(cell, j):
    while cell.dim > j:
        cell = slice_target(cell)
    return cell


def slice_iterated_identity(cell, dim):
    while cell.dim < dim:
        cell = slice_identity(cell)
    return cell


def slice_compose(x, y, j):
    """The composite x *_j y of slice cells (x after y).

    The a-rows compose levelwise in nu(K); the coherence rows follow the
    whiskering recipe: conjugate the second factor's coherence by the first
    factor's boundary data.
    """
    i = max(x.dim, y.dim)
    x = slice_iterated_identity(x, i)
    y = slice_iterated_identity(y, i)
    if x.u != y.u or x.c != y.c:
        raise ValueError("slice cells live in different slices")
    if not 0 <= j < i:
        raise ValueError(f"no composition *_{j} in dimension {i}")
    for k in range(j):
        if (x.a0[k], x.a1[k], x.t0[k], x.t1[k]) != (y.a0[k], y.a1[k], y.t0[k], y.t1[k]):
            raise ValueError(f"cells are not {j}-composable (level {k})")
    if x.a0[j] != y.a1[j] or x.t0[j] != y.t1[j]:
        raise ValueError(f"cells are not {j}-composable (level {j})")

    def gamma(eps, k):
        # k indexes the stored column: the coherence cell alpha^eps_{k+1}
        x_t = x.t0 if eps == 0 else x.t1
        y_t = y.t0 if eps == 0 else y.t1
        a_source = (x.a0 if eps == 0 else x.a1)[j + 1] if k == j + 1 else x.a1[j + 1]
        acc = map_cell(x.u, a_source)
        for l in range(j):
            acc = compose(acc, y.t0[l], l)
        acc = compose(acc, y_t[k], j)
        acc = compose(acc, x_t[k], j + 1)
        return acc

    a0 = y.a0[: j + 1] + tuple(
        compose(x.a0[k], y.a0[k], j) for k in range(j + 1, i + 1)
    )
    a1 = x.a1[: j + 1] + tuple(
        compose(x.a1[k], y.a1[k], j) for k in range(j + 1, i + 1)
    )
    t0 = y.t0[: j + 1] + tuple(gamma(0, k) for k in range(j + 1, i + 1))
    t1 = x.t1[: j + 1] + tuple(gamma(1, k) for k in range(j + 1, i + 1))
    return SliceCell(x.u, x.c, a0, a1, t0, t1)


def slice_cell_from_pair(u, c, a, T, x):
    """The slice cell classified by (a, T) at a cell x of the indexing shape.

    ``a`` maps the indexing complex into u's source; T is an oplax
    transformation from the constant functor at c to u . a; x is a cell of
    the indexing omega-category.
    """
    i = x.dim
    a0, a1, t0, t1 = [], [], [], []
    for k in range(i + 1):
        sk, tk = source_iter(x, k), target_iter(x, k)
        a0.append(map_cell(a, sk))
        a1.append(map_cell(a, tk))
        t0.append(oplax_component(T, sk))
        t1.append(oplax_component(T, tk))
    return SliceCell(u, c, tuple(a0), tuple(a1), tuple(t0), tuple(t1))


def pair_from_slice_family(u, c, shape, family):
    """Recover (a, T) from the images of the atoms of the indexing shape.

    ``family`` maps each cell of nu(shape) to a SliceCell; only atom images
    are consulted: the functor takes an atom to its cell's top a-entry, the
    transformation's edge component to the top coherence entry.
    """
    K, L = u.source, u.target
    a_images = {}
    h_images = {}
    for p in shape.degrees():
        for b in shape.tokens(p):
            image = family[atom_cell(shape, b)]
            a_images[b] = image.a0[p].top
            h_images[tensor_token(INTERVAL_EDGE, b)] = image.t0[p].top
    a = AdcMorphism(shape, K, a_images)
    const = constant_morphism(shape, L, c)
    ua = u.after(a)
    for p in shape.degrees():
        for b in shape.tokens(p):
            h_images[tensor_token(INTERVAL_SRC, b)] = const.image_of(b)
            h_images[tensor_token(INTERVAL_TGT, b)] = ua.image_of(b)
    T = OplaxTransformation(AdcMorphism(cylinder_complex(shape), L, h_images))
    return a, T


def slice_functor(u, v, w, alpha):
    """The induced functor on slices of a triangle commuting up to alpha.

    Given u: K_A -> K_B, v: K_A -> K_C, w: K_B -> K_C and an oplax
    transformation alpha from v to w . u, returns the cell map sending a
    slice cell over v to one over w with the coherence rows composed
    vertically with alpha's components along the cell's own a-row.
    """
    if alpha.source_functor(u.source) != v:
        raise ValueError("alpha does not start at the left leg")
    if alpha.target_functor(u.source) != w.after(u):
        raise ValueError("alpha does not end at the composed leg")
    wu = w.after(u)
    L = w.target

    def component(cell, eps, k):
        a_row = (cell.a0 if eps == 0 else cell.a1)[k]
        t_row = cell.t0 if eps == 0 else cell.t1
        c = cell.c

        def edge_total(chain, tau_top):
            return alpha.shift(chain) + tau_top

        x0, x1 = [], []
        for r in range(k + 1):
            lo = u.source.e(a_row.x0[r]) * c if r == 0 else Chain.zero(r)
            hi = wu.apply(a_row.x1[r])
            if r > 0:
                lo = lo + edge_total(a_row.x1[r - 1], cell.t1[r - 1].top)
                hi = hi + edge_total(a_row.x0[r - 1], cell.t0[r - 1].top)
            x0.append(lo)
            x1.append(hi)
        top = edge_total(a_row.top, t_row[k].top)
        return CellTableau(L, tuple(x0) + (top,), tuple(x1) + (top,))

    def act(cell):
        if cell.u != v:
            raise ValueError("slice cell is not over the left leg")
        i = cell.dim
        return SliceCell(
            w,
            cell.c,
            tuple(map_cell(u, cell.a0[k]) for k in range(i + 1)),
            tuple(map_cell(u, cell.a1[k]) for k in range(i + 1)),
            tuple(component(cell, 0, k) for k in range(i + 1)),
            tuple(component(cell, 1, k) for k in range(i + 1)),
        )

    return act


def enumerate_slice_cells(u, c, dim, coeff_bound=None):
    """All slice cells of the given dimension, by boundary-constrained search."""
    K, L = u.source, u.target
    base = object_cell(L, c)
    complete = True

    def coherence_cells(source_cell, target_cell):
        nonlocal complete
        k = source_cell.dim
        if (source_cell.x0[:k], source_cell.x1[:k]) != (
            target_cell.x0[:k],
            target_cell.x1[:k],
        ):
            return []
        sols = solve_boundary(L, k + 1, target_cell.top - source_cell.top, coeff_bound)
        complete &= sols.complete
        return [
            CellTableau(
                L,
                source_cell.x0 + (z,),
                source_cell.x1[:k] + (target_cell.top, z),
            )
            for z in sols.chains
        ]

    objects = enumerate_cells(K, 0, coeff_bound)
    complete &= objects.complete
    cells = []
    for a in objects.cells:
        for t in coherence_cells(base, map_cell(u, a)):
            cells.append(SliceCell(u, c, (a,), (a,), (t,), (t,)))
    for i in range(1, dim + 1):
        grouped = {}
        for z in cells:
            key = (z.a0[:-1], z.a1[:-1], z.t0[:-1], z.t1[:-1])
            grouped.setdefault(key, []).append(z)
        new_cells = []
        for group in grouped.values():
            for S, T in itertools.product(group, repeat=2):
                sigma, tau = S.a0[i - 1], T.a1[i - 1]
                sols = solve_boundary(K, i, tau.top - sigma.top, coeff_bound)
                complete &= sols.complete
                for z in sols.chains:
                    a_top = CellTableau(
                        K,
                        sigma.x0 + (z,),
                        sigma.x1[: i - 1] + (tau.top, z),
                    )
                    want = whisker_composite(u, a_top, S.t0[:i])
                    for top in coherence_cells(T.t1[i - 1], want):
                        new_cells.append(
                            SliceCell(
                                u,
                                c,
                                S.a0[:i] + (a_top,),
                                T.a1[:i] + (a_top,),
                                S.t0[:i] + (top,),
                                T.t1[:i] + (top,),
                            )
                        )
        cells = new_cells
    key = lambda z: tuple(
        ch.coeffs for cell in z.a0 + z.a1 + z.t0 + z.t1 for ch in cell.x0 + cell.x1
    )
    cells.sort(key=key)
    return tuple(cells), complete
