"""Truncated simplicial sets, the nerve via hom-enumeration, slices,
the shift homotopy, and the bisimplicial comparison object.

Simplicial sets are materialized as finite tables up to a dimension cap;
simplex records are canonical hashable values (monotone maps, complex
morphisms, pairs of those), so equality is syntactic.  Operators act
through a single ``act`` entry point memoized per space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import AdcMorphism, Chain
from .simplex import (
    MonotoneMap,
    all_monotone_maps,
    c_of_map,
    degeneracy_map,
    face_map,
    identity_map,
    initial_inclusion,
    final_inclusion,
    join_maps,
)
from .solve import solve_augmentation, solve_boundary


class SimplicialSetTrunc:
    """A simplicial set known up to ``cap``: level lists plus the operator action."""

    def __init__(self, cap, level_fn, act_fn, label=""):
        self.cap = cap
        self.label = label
        self._level_fn = level_fn
        self._act_fn = act_fn
        self._levels = {}
        self._act_cache = {}
        self._intern = {}

    def simplices(self, n):
        if not 0 <= n <= self.cap:
            raise ValueError(f"dimension {n} beyond cap {self.cap}")
        if n not in self._levels:
            level = list(self._level_fn(n))
            self._levels[n] = [self._intern.setdefault(x, x) for x in level]
        return self._levels[n]

    def act(self, phi, x):
        key = (phi, x)
        cached = self._act_cache.get(key)
        if cached is None:
            # interning lets repeated functoriality checks compare by identity
            result = self._act_fn(phi, x)
            cached = self._act_cache[key] = self._intern.setdefault(result, result)
        return cached

    def degenerate(self, n):
        """The degenerate n-simplices (images of degeneracy operators)."""
        if n == 0:
            return set()
        out = set()
        for i in range(n):
            sigma = degeneracy_map(n - 1, i)
            for y in self.simplices(n - 1):
                out.add(self.act(sigma, y))
        return out

    def counts(self, through=None):
        through = self.cap if through is None else through
        return [
            (n, len(self.simplices(n)), len(set(self.simplices(n)) - self.degenerate(n)))
            for n in range(through + 1)
        ]

    def identity_failures(self, through=None, generators_only=False):
        """Check functoriality: X(phi.psi) = X(psi) after X(phi).

        With ``generators_only`` the second factor ranges over faces and
        degeneracies only; since every operator factors into those, the
        restricted check still implies functoriality for all pairs.
        """
        through = self.cap if through is None else through
        failures = []
        for n in range(through + 1):
            for m in range(through + 1):
                for phi in all_monotone_maps(m, n):
                    if generators_only:
                        seconds = [face_map(m, i) for i in range(m + 1) if m >= 1]
                        if m + 1 <= through:
                            seconds += [degeneracy_map(m, i) for i in range(m + 1)]
                    else:
                        seconds = [
                            psi
                            for k in range(min(m + 1, through) + 1)
                            for psi in all_monotone_maps(k, m)
                        ]
                    for psi in seconds:
                        composite = phi.compose(psi)
                        for x in self.simplices(n):
                            lhs = self.act(composite, x)
                            rhs = self.act(psi, self.act(phi, x))
                            if lhs is not rhs and lhs != rhs:
                                failures.append((phi, psi, x))
        return failures


@dataclass(frozen=True)
class SimplicialMap:
    src: SimplicialSetTrunc
    dst: SimplicialSetTrunc
    fn: object

    def __call__(self, n, x):
        return self.fn(n, x)

    def compose(self, other):
        return SimplicialMap(
            other.src, self.dst, lambda n, x: self.fn(n, other.fn(n, x))
        )


def identity_simplicial_map(X):
    return SimplicialMap(X, X, lambda n, x: x)


def simplicial_map_failures(f, through=None):
    """Commutation failures of f with all operators within the caps."""
    through = min(f.src.cap, f.dst.cap) if through is None else through
    failures = []
    for n in range(through + 1):
        for m in range(through + 1):
            for phi in all_monotone_maps(m, n):
                for x in f.src.simplices(n):
                    if f(m, f.src.act(phi, x)) != f.dst.act(phi, f(n, x)):
                        failures.append((phi, x))
    return failures


def standard_simplex(N, cap):
    """The representable simplicial set on Delta(N), truncated."""
    return SimplicialSetTrunc(
        cap,
        lambda n: all_monotone_maps(n, N),
        lambda phi, x: x.compose(phi),
        label=f"Delta{N}",
    )


def point_space(cap):
    return standard_simplex(0, cap)


def _generator_order(src):
    """Process each generator as soon as its whole boundary is assigned,
    preferring high degrees, so face constraints prune the search early."""
    import heapq

    pending = {}
    dependents = {}
    heap = []
    for p in src.degrees():
        for token in src.tokens(p):
            deps = set(src.diff_of(token).support()) if p > 0 else set()
            pending[token] = deps
            for dep in deps:
                dependents.setdefault(dep, []).append(token)
            if not deps:
                heapq.heappush(heap, (-p, token))
    order = []
    while heap:
        _, token = heapq.heappop(heap)
        order.append(token)
        for other in dependents.get(token, []):
            deps = pending[other]
            deps.discard(token)
            if not deps:
                heapq.heappush(heap, (-src.degree_of(other), other))
    return order


def enumerate_morphisms(src, dst, fixed=None, coeff_bound=None):
    """All complex morphisms src -> dst, grown one generator at a time.

    ``fixed`` pins images of some source tokens.  Each generator's image
    solves the boundary constraint induced by the previously chosen ones.
    Returns (morphisms, complete).
    """
    fixed = fixed or {}
    complete = True
    partials = [{}]
    for token in _generator_order(src):
        p = src.degree_of(token)
        grown = []
        for assignment in partials:
            if p == 0:
                candidates = solve_augmentation(dst, src.aug_of(token), coeff_bound)
            else:
                image = None
                for t, coeff in src.diff_of(token).items():
                    term = coeff * assignment[t]
                    image = term if image is None else image + term
                if image is None:
                    image = Chain.zero(p - 1)
                candidates = solve_boundary(dst, p, image, coeff_bound)
            complete &= candidates.complete
            pin = fixed.get(token)
            for z in candidates.chains:
                if pin is not None and z != pin:
                    continue
                new = dict(assignment)
                new[token] = z
                grown.append(new)
        partials = grown
    morphisms = [AdcMorphism._raw(src, dst, images) for images in partials]
    morphisms.sort(key=lambda f: f._key()[2])
    return morphisms, complete


def hom_enumerate(n, K, coeff_bound=None):
    """All morphisms from the chains of the n-simplex into K."""
    from .simplex import c_delta

    morphisms, _ = enumerate_morphisms(c_delta(n), K, coeff_bound=coeff_bound)
    return morphisms


def nerve(K, cap, coeff_bound=None):
    """The nerve of nu(K): n-simplices are morphisms from the n-simplex chains."""
    return SimplicialSetTrunc(
        cap,
        lambda n: hom_enumerate(n, K, coeff_bound),
        lambda phi, x: x.after(c_of_map(phi)),
        label=f"N({K!r})",
    )


def nerve_map(f, src_nerve, dst_nerve):
    """The simplicial map induced on nerves by a complex morphism."""
    return SimplicialMap(src_nerve, dst_nerve, lambda n, x: f.after(x))


def simplex_facet(X, x, n, indices):
    """The facet x_{i_0..i_m} of an n-simplex, via the induced operator."""
    m = len(indices) - 1
    return X.act(MonotoneMap(m, n, tuple(indices)), x)


def under_slice(Y, y, m):
    """The under-slice: n-simplices are (m+1+n)-simplices whose initial
    m-face is y; operators act on the final block."""
    cap = Y.cap - m - 1
    if cap < 0:
        raise ValueError("cap exceeded: the slice needs deeper tables")
    return SimplicialSetTrunc(
        cap,
        lambda n: [
            yp
            for yp in Y.simplices(m + 1 + n)
            if Y.act(initial_inclusion(m, n), yp) == y
        ],
        lambda psi, yp: Y.act(join_maps(identity_map(m), psi), yp),
        label="under-slice",
    )


def under_slice_projection(Y, y, m, slice_space):
    def fn(n, yp):
        return Y.act(final_inclusion(m, n), yp)

    return SimplicialMap(slice_space, Y, fn)


def over_slice(Y, y, m):
    """The over-slice: n-simplices are (n+1+m)-simplices whose final
    m-face is y; operators act on the initial block."""
    cap = Y.cap - m - 1
    if cap < 0:
        raise ValueError("cap exceeded: the slice needs deeper tables")
    return SimplicialSetTrunc(
        cap,
        lambda n: [
            yp
            for yp in Y.simplices(n + 1 + m)
            if Y.act(final_inclusion(n, m), yp) == y
        ],
        lambda psi, yp: Y.act(join_maps(psi, identity_map(m)), yp),
        label="over-slice",
    )


def over_slice_projection(Y, y, m, slice_space):
    def fn(n, yp):
        return Y.act(initial_inclusion(n, m), yp)

    return SimplicialMap(slice_space, Y, fn)


def map_under_slice(u, y, m):
    """The relative under-slice of a simplicial map u: X -> Y at an
    m-simplex y of Y: pairs (y', x) with initial face y and final face u(x)."""
    X, Y = u.src, u.dst
    cap = min(Y.cap - m - 1, X.cap)
    if cap < 0:
        raise ValueError("cap exceeded: the slice needs deeper tables")

    def level(n):
        by_final = {}
        for yp in Y.simplices(m + 1 + n):
            if Y.act(initial_inclusion(m, n), yp) == y:
                by_final.setdefault(Y.act(final_inclusion(m, n), yp), []).append(yp)
        return [
            (yp, x)
            for x in X.simplices(n)
            for yp in by_final.get(u(n, x), [])
        ]

    def act(psi, pair):
        yp, x = pair
        return (Y.act(join_maps(identity_map(m), psi), yp), X.act(psi, x))

    return SimplicialSetTrunc(cap, level, act, label="relative under-slice")


@dataclass(frozen=True)
class ShiftContraction:
    """Contractibility data for an over-slice: section and homotopy.

    ``basepoint`` is the degenerate 0-simplex of the over-slice through x;
    ``homotopy(phi, x')`` interpolates between the identity (phi = 0) and
    the constant retraction (phi = 1).
    """

    space: SimplicialSetTrunc
    ambient: SimplicialSetTrunc
    simplex: object
    m: int

    @property
    def basepoint(self):
        sigma0 = degeneracy_map(self.m, 0)
        return self.ambient.act(sigma0, self.simplex)

    def section(self, n, xp):
        point = self.basepoint
        for k in range(n):
            point = self.space.act(degeneracy_map(k, 0), point)
        return point

    def homotopy(self, phi, xp):
        theta = _shift_reindex(phi, phi.src, self.m)
        return self.ambient.act(theta, xp)


def _shift_reindex(phi, m, n):
    """The endomorphism of Delta(m+1+n) folding the first block along phi."""
    image = []
    for i in range(m + 1):
        image.append(i if phi(i) == 0 else m + 1)
    image.extend(range(m + 1, m + 2 + n))
    return MonotoneMap(m + 1 + n, m + 1 + n, tuple(image))


def decalage_homotopy(X, x, n):
    """Contraction of the over-slice of X at an n-simplex x."""
    return ShiftContraction(over_slice(X, x, n), X, x, n)


class BisimplicialTrunc:
    """A bisimplicial set known up to caps in each direction."""

    def __init__(self, cap_m, cap_n, level_fn, act_fn, label=""):
        self.cap_m = cap_m
        self.cap_n = cap_n
        self.label = label
        self._level_fn = level_fn
        self._act_fn = act_fn
        self._levels = {}

    def simplices(self, m, n):
        if not (0 <= m <= self.cap_m and 0 <= n <= self.cap_n):
            raise ValueError(f"bidegree ({m},{n}) beyond caps")
        if (m, n) not in self._levels:
            self._levels[(m, n)] = list(self._level_fn(m, n))
        return self._levels[(m, n)]

    def act(self, phi, psi, x):
        return self._act_fn(phi, psi, x)

    def column(self, m):
        """The simplicial set S(m, .)."""
        return SimplicialSetTrunc(
            self.cap_n,
            lambda n: self.simplices(m, n),
            lambda psi, x: self.act(identity_map(m), psi, x),
            label=f"{self.label}[{m},.]",
        )

    def row(self, n):
        return SimplicialSetTrunc(
            self.cap_m,
            lambda m: self.simplices(m, n),
            lambda phi, x: self.act(phi, identity_map(n), x),
            label=f"{self.label}[.,{n}]",
        )

    def diagonal(self):
        cap = min(self.cap_m, self.cap_n)
        return SimplicialSetTrunc(
            cap,
            lambda n: self.simplices(n, n),
            lambda phi, x: self.act(phi, phi, x),
            label=f"Diag {self.label}",
        )


def bisimplicial_comparison(u, cap_m, cap_n):
    """The bisimplicial set S(u) of a simplicial map u: X -> Y.

    Bidegree (m, n): pairs (y, x) with y an (m+1+n)-simplex of Y whose
    final n-face is u(x).  Returns (S, forget) where forget projects onto
    X viewed as bisimplicially constant in the first direction.
    """
    X, Y = u.src, u.dst
    if cap_m + 1 + cap_n > Y.cap or cap_n > X.cap:
        raise ValueError("cap exceeded: deeper tables needed for S(u)")

    def level(m, n):
        by_final = {}
        for yp in Y.simplices(m + 1 + n):
            by_final.setdefault(Y.act(final_inclusion(m, n), yp), []).append(yp)
        return [
            (yp, x)
            for x in X.simplices(n)
            for yp in by_final.get(u(n, x), [])
        ]

    def act(phi, psi, pair):
        yp, x = pair
        return (Y.act(join_maps(phi, psi), yp), X.act(psi, x))

    S = BisimplicialTrunc(cap_m, cap_n, level, act, label="S(u)")

    def forget(m, n, pair):
        return pair[1]

    return S, forget
