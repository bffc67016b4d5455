"""Exact chain arithmetic over a graded basis and the directed-complex data model.

A directed complex here is always basis-presented: a graded set of generating
tokens, an integer differential table, and an augmentation on degree 0.  The
positivity submonoid is the non-negative span of the declared basis, which
makes positivity of a chain a coefficientwise check.

All values are immutable after construction and safe to share between
threads.  Chains are kept in canonical form (no zero coefficients, keys
sorted by token), so equality and hashing are syntactic.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BasisElement:
    """A generator of the complex: a token unique within its degree."""

    token: str
    degree: int


@dataclass(frozen=True)
class Chain:
    """Integer linear combination of same-degree basis tokens.

    ``coeffs`` is sorted by token and stores no zero coefficients, so two
    chains are equal iff they are the same combination.
    """

    degree: int
    coeffs: tuple[tuple[str, int], ...]

    @staticmethod
    def make(degree, items):
        """Build a chain in canonical form from (token, coeff) pairs or a dict."""
        acc = {}
        pairs = items.items() if isinstance(items, dict) else items
        for token, coeff in pairs:
            acc[token] = acc.get(token, 0) + int(coeff)
        return Chain(degree, tuple(sorted((t, c) for t, c in acc.items() if c != 0)))

    @staticmethod
    def zero(degree):
        return Chain(degree, ())

    @staticmethod
    def unit(degree, token, coeff=1):
        return Chain.make(degree, [(token, coeff)])

    def items(self):
        return self.coeffs

    def coeff(self, token):
        for t, c in self.coeffs:
            if t == token:
                return c
        return 0

    def support(self):
        return tuple(t for t, _ in self.coeffs)

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_positive(self):
        return all(c > 0 for _, c in self.coeffs)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} + {other.degree}")
        return Chain.make(self.degree, self.coeffs + other.coeffs)

    def __neg__(self):
        return Chain(self.degree, tuple((t, -c) for t, c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        k = int(k)
        if k == 0:
            return Chain.zero(self.degree)
        return Chain(self.degree, tuple((t, k * c) for t, c in self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for t, c in self.coeffs:
            if c == 1:
                parts.append(f"({t})")
            elif c == -1:
                parts.append(f"-({t})")
            else:
                parts.append(f"{c}({t})")
        return "+".join(parts).replace("+-", "-")


def pos_neg_decompose(x):
    """Split ``x`` as ``x = pos - neg`` with positive parts of disjoint support."""
    pos = Chain(x.degree, tuple((t, c) for t, c in x.coeffs if c > 0))
    neg = Chain(x.degree, tuple((t, -c) for t, c in x.coeffs if c < 0))
    return pos, neg


class DirComplex:
    """A basis-presented augmented directed complex.

    ``basis`` lists tokens per degree, ``diff`` maps degree>=1 tokens to
    chains one degree down (missing entries mean zero), ``aug`` maps
    degree-0 tokens to integers (missing entries mean zero).

    The constructor enforces well-formedness (token uniqueness, degrees of
    the stored chains); the chain-complex identities d.d = 0 and e.d = 0 are
    checked separately by :func:`validate_complex`, so that deliberately
    broken tables can be built and reported on.
    """

    __slots__ = ("basis", "_diff", "_aug", "_degree_of", "_hash", "_strong_cache")

    def __init__(self, basis, diff, aug):
        basis = tuple(tuple(level) for level in basis)
        while basis and not basis[-1]:
            basis = basis[:-1]
        degree_of = {}
        for p, level in enumerate(basis):
            for token in level:
                if not isinstance(token, str):
                    raise TypeError(f"token {token!r} is not a string")
                if token in degree_of:
                    raise ValueError(f"duplicate token {token!r}")
                degree_of[token] = p
        diff_table = {}
        for token, chain in dict(diff).items():
            p = degree_of.get(token)
            if p is None:
                raise ValueError(f"differential on unknown token {token!r}")
            if p == 0:
                raise ValueError(f"differential on degree-0 token {token!r}")
            if chain.degree != p - 1:
                raise ValueError(
                    f"d({token}) has degree {chain.degree}, expected {p - 1}"
                )
            for t in chain.support():
                if degree_of.get(t) != p - 1:
                    raise ValueError(f"d({token}) mentions unknown token {t!r}")
            if not chain.is_zero:
                diff_table[token] = chain
        aug_table = {}
        for token, value in dict(aug).items():
            if degree_of.get(token) != 0:
                raise ValueError(f"augmentation on non-vertex token {token!r}")
            if value:
                aug_table[token] = int(value)
        self_set = super().__setattr__
        self_set("basis", basis)
        self_set("_diff", diff_table)
        self_set("_aug", aug_table)
        self_set("_degree_of", degree_of)
        self_set("_hash", None)
        self_set("_strong_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("DirComplex is immutable")

    # -- shape ------------------------------------------------------------

    @property
    def dim(self):
        return len(self.basis) - 1

    def degrees(self):
        return range(len(self.basis))

    def tokens(self, p):
        if 0 <= p < len(self.basis):
            return self.basis[p]
        return ()

    def elements(self, p=None):
        if p is not None:
            return tuple(BasisElement(t, p) for t in self.tokens(p))
        return tuple(
            BasisElement(t, q) for q in self.degrees() for t in self.basis[q]
        )

    def degree_of(self, token):
        return self._degree_of[token]

    def has_token(self, token):
        return token in self._degree_of

    def contains_chain(self, chain):
        return all(self._degree_of.get(t) == chain.degree for t in chain.support())

    # -- structure --------------------------------------------------------

    def diff_of(self, token):
        p = self._degree_of[token]
        if p == 0:
            raise ValueError(f"no differential in degree 0 ({token!r})")
        return self._diff.get(token, Chain.zero(p - 1))

    def aug_of(self, token):
        if self._degree_of[token] != 0:
            raise ValueError(f"augmentation is defined in degree 0 only ({token!r})")
        return self._aug.get(token, 0)

    def d(self, chain):
        if chain.degree == 0:
            raise ValueError("d is defined in degree >= 1")
        out = Chain.zero(chain.degree - 1)
        for t, c in chain.items():
            out = out + c * self.diff_of(t)
        return out

    def e(self, chain):
        if chain.degree != 0:
            raise ValueError("augmentation applies to degree-0 chains")
        return sum(c * self.aug_of(t) for t, c in chain.items())

    def unit_chain(self, token):
        return Chain.unit(self._degree_of[token], token)

    # -- identity ----------------------------------------------------------

    def _key(self):
        diff_key = tuple(
            sorted((t, ch.coeffs) for t, ch in self._diff.items())
        )
        aug_key = tuple(sorted(self._aug.items()))
        return (self.basis, diff_key, aug_key)

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, DirComplex)
            and self.basis == other.basis
            and self._diff == other._diff
            and self._aug == other._aug
        )

    def __hash__(self):
        if self._hash is None:
            super().__setattr__("_hash", hash(self._key()))
        return self._hash

    def __repr__(self):
        sizes = ",".join(str(len(level)) for level in self.basis)
        return f"DirComplex(sizes=({sizes}))"


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[str, ...]

    @property
    def ok(self):
        return not self.problems

    def __str__(self):
        return "OK" if self.ok else "\n".join(self.problems)


def validate_complex(K):
    """Report every basis element violating d.d = 0 or e.d = 0."""
    problems = []
    for p in K.degrees():
        for token in K.tokens(p):
            if p >= 2:
                dd = K.d(K.diff_of(token))
                if not dd.is_zero:
                    problems.append(f"d.d({token}) = {dd} != 0")
            elif p == 1:
                ed = K.e(K.diff_of(token))
                if ed != 0:
                    problems.append(f"e.d({token}) = {ed} != 0")
    return ValidationReport(tuple(problems))


class AdcMorphism:
    """Degreewise assignment of target chains to source basis tokens.

    The constructor enforces shape only (every source token has an image of
    the matching degree, supported on the target); the chain-map equations,
    augmentation compatibility and positivity are checked by
    :func:`check_morphism`.
    """

    __slots__ = ("source", "target", "_images", "_hash")

    def __init__(self, source, target, images):
        images = dict(images)
        table = {}
        for p in source.degrees():
            for token in source.tokens(p):
                if token not in images:
                    raise ValueError(f"no image for basis token {token!r}")
                chain = images[token]
                if chain.degree != p:
                    raise ValueError(
                        f"image of {token!r} has degree {chain.degree}, expected {p}"
                    )
                if not target.contains_chain(chain):
                    raise ValueError(f"image of {token!r} leaves the target complex")
                table[token] = chain
        if len(images) != sum(len(source.tokens(p)) for p in source.degrees()):
            extra = set(images) - set(table)
            raise ValueError(f"images for unknown tokens: {sorted(extra)}")
        super().__setattr__("source", source)
        super().__setattr__("target", target)
        super().__setattr__("_images", table)
        super().__setattr__("_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("AdcMorphism is immutable")

    @classmethod
    def _raw(cls, source, target, images):
        """Internal constructor for images already known to be well-formed."""
        self = object.__new__(cls)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "_images", images)
        object.__setattr__(self, "_hash", None)
        return self

    def image_of(self, token):
        return self._images[token]

    def apply(self, chain):
        items = chain.items()
        if len(items) == 1 and items[0][1] == 1:
            return self._images[items[0][0]]
        out = Chain.zero(chain.degree)
        for t, c in items:
            out = out + c * self._images[t]
        return out

    def after(self, other):
        """Composite self . other (apply ``other`` first)."""
        if other.target != self.source:
            raise ValueError("composition mismatch")
        images = {t: self.apply(ch) for t, ch in other._images.items()}
        return AdcMorphism._raw(other.source, self.target, images)

    def _key(self):
        return (
            self.source,
            self.target,
            tuple(sorted((t, ch.coeffs) for t, ch in self._images.items())),
        )

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, AdcMorphism)
            and self.source == other.source
            and self.target == other.target
            and self._images == other._images
        )

    def __hash__(self):
        if self._hash is None:
            super().__setattr__("_hash", hash(self._key()))
        return self._hash

    def __repr__(self):
        return f"AdcMorphism({self.source!r} -> {self.target!r})"


def identity_morphism(K):
    return AdcMorphism(K, K, {t: K.unit_chain(t) for t in _all_tokens(K)})


def _all_tokens(K):
    return [t for p in K.degrees() for t in K.tokens(p)]


def check_morphism(f):
    """Verify chain-map, augmentation and positivity conditions on generators."""
    problems = []
    K, L = f.source, f.target
    for p in K.degrees():
        for token in K.tokens(p):
            image = f.image_of(token)
            if not image.is_positive:
                problems.append(f"image of {token} is not positive: {image}")
            if p == 0:
                if L.e(image) != K.aug_of(token):
                    problems.append(
                        f"augmentation broken at {token}: "
                        f"e(f({token})) = {L.e(image)} != {K.aug_of(token)}"
                    )
            else:
                lhs = f.apply(K.diff_of(token))
                rhs = L.d(image) if not image.is_zero else Chain.zero(p - 1)
                if lhs != rhs:
                    problems.append(
                        f"d-compatibility broken at {token}: f(d) = {lhs}, d(f) = {rhs}"
                    )
    return ValidationReport(tuple(problems))


@dataclass(frozen=True)
class AtomTableau:
    """The canonical double row built from a basis element.

    ``rows[k] = (x0_k, x1_k)``; the tableau is a genuine cell of the
    associated omega-category iff the element is positive (always, for a
    basis element) and both degree-0 rows have augmentation 1.
    """

    element: BasisElement
    rows: tuple[tuple[Chain, Chain], ...]
    is_cell: bool


def atom_tableau(K, element):
    """Build the atom of a basis element by iterated sign splitting of d."""
    token = element.token if isinstance(element, BasisElement) else element
    p = K.degree_of(token)
    top = K.unit_chain(token)
    rows = [(top, top)]
    x0, x1 = top, top
    for k in range(p, 0, -1):
        _, x0 = pos_neg_decompose(K.d(x0))
        x1, _ = pos_neg_decompose(K.d(x1))
        rows.append((x0, x1))
    rows.reverse()
    is_cell = K.e(rows[0][0]) == 1 and K.e(rows[0][1]) == 1
    return AtomTableau(BasisElement(token, p), tuple(rows), is_cell)


def is_unitary(K):
    """True iff the atom of every basis element is a genuine cell."""
    return all(
        atom_tableau(K, t).is_cell for p in K.degrees() for t in K.tokens(p)
    )


def _toposort(nodes, edges):
    """Kahn topological sort; returns (order, unique) or (None, False) on a cycle.

    ``unique`` is True iff at every step exactly one node was available,
    i.e. reachability is a total order.
    """
    indeg = {n: 0 for n in nodes}
    out = {n: [] for n in nodes}
    for a, b in edges:
        if a == b:
            return None, False
        out[a].append(b)
        indeg[b] += 1
    ready = sorted(n for n in nodes if indeg[n] == 0)
    order = []
    unique = True
    while ready:
        if len(ready) > 1:
            unique = False
        n = ready.pop(0)
        order.append(n)
        created = []
        for m in out[n]:
            indeg[m] -= 1
            if indeg[m] == 0:
                created.append(m)
        if created:
            ready = sorted(ready + created)
    if len(order) != len(nodes):
        return None, False
    return order, unique


def is_loopfree(K):
    """Degreewise precedence constraints admit a linear order (cycle detection)."""
    atoms = {
        (t, p): atom_tableau(K, t)
        for p in K.degrees()
        for t in K.tokens(p)
    }
    for i in K.degrees():
        edges = set()
        for p in K.degrees():
            if p <= i:
                continue
            for t in K.tokens(p):
                x0, x1 = atoms[(t, p)].rows[i]
                for a in x0.support():
                    for b in x1.support():
                        edges.add((a, b))
        order, _ = _toposort(list(K.tokens(i)), edges)
        if order is None:
            return False
    return True


def _strong_edges(K):
    edges = set()
    for p in K.degrees():
        if p == 0:
            continue
        for t in K.tokens(p):
            plus, minus = pos_neg_decompose(K.diff_of(t))
            for a in minus.support():
                edges.add((a, t))
            for b in plus.support():
                edges.add((t, b))
    return edges


def strong_loopfree_order(K):
    """A linear extension of the generating precedence relation, if acyclic.

    Returns a tuple of BasisElement witnessing strong loop-freeness, or None
    when the relation has a cycle.
    """
    cache = K._strong_cache
    if "order" not in cache:
        order, unique = _toposort(_all_tokens(K), _strong_edges(K))
        cache["order"] = None if order is None else tuple(
            BasisElement(t, K.degree_of(t)) for t in order
        )
        cache["total"] = order is not None and unique
    return cache["order"]


def strong_preorder_is_total(K):
    """True iff the generating precedence relation itself is a total order.

    This is the amalgamation hypothesis: not just the existence of a linear
    extension, but uniqueness of the topological order.
    """
    strong_loopfree_order(K)
    return K._strong_cache["total"]
