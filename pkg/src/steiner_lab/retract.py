"""The explicit chain maps comparing simplex, cylinder and wedge shapes,
the strong-deformation-retract data they induce on nerve slices, and an
exhaustive verification suite for every identity they satisfy.

The four map families:

* ``cylinder_to_cone(n)``: collapses the cylinder over the n-simplex onto
  the cone Delta(1+n), flattening the starting end to the cone point.
* ``cylinder_attachment(m, n)``: rewrites an (m+1+n)-simplex inside the
  complex obtained by gluing a cylinder onto its final n-face.
* ``wedge_projection(m, n)``: projects the (m+1+n)-simplex onto the wedge
  of Delta(m) and Delta(1+n) joined at the middle vertex m.
* ``partial_wedge_projection(m, n, phi)``: the interpolation family
  indexed by phi: Delta(n) -> Delta(1), equal to the identity at phi = 1
  and to the wedge projection at phi = 0; it realizes the simplicial
  homotopy of the strong retraction.

Every formula collapses tuples with repeated entries to zero, consistent
with the chains functor.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .chains import AdcMorphism, Chain, check_morphism, identity_morphism
from .nerves import (
    SimplicialMap,
    map_under_slice,
    simplicial_map_failures,
)
from .simplex import (
    MonotoneMap,
    all_monotone_maps,
    c_delta,
    c_of_map,
    constant_map,
    final_inclusion,
    identity_map,
    initial_inclusion,
    join_maps,
    simplex_token,
    token_simplex,
    vertex_map,
)
from .slices import OplaxTransformation
from .tensor import (
    Pushout,
    pushout_complex,
    tensor_chains,
    tensor_complex,
    tensor_injection,
    tensor_morphism,
    tensor_token,
)


def _unit(tup):
    return Chain.unit(len(tup) - 1, simplex_token(tup))


def _shift(tup, k):
    return tuple(i + k for i in tup)


def cylinder_to_cone(n):
    """interval (x) cDelta(n) -> cDelta(1+n): flatten the 0-end to the cone
    point, embed the 1-end as the final face, send prisms to cones."""
    I = c_delta(1)
    Kn = c_delta(n)
    src = tensor_complex(I, Kn)
    dst = c_delta(1 + n)
    images = {}
    for p in Kn.degrees():
        for token in Kn.tokens(p):
            tup = token_simplex(token)
            shifted = _shift(tup, 1)
            images[tensor_token("0", token)] = (
                _unit((0,)) if p == 0 else Chain.zero(p)
            )
            images[tensor_token("1", token)] = _unit(shifted)
            images[tensor_token("0,1", token)] = _unit((0,) + shifted)
    return AdcMorphism(src, dst, images)


def attachment_pushout(m, n):
    """cDelta(m+1+n) glued to a cylinder over its final n-face."""
    return pushout_complex(
        c_of_map(final_inclusion(m, n)),
        tensor_injection(c_delta(1), c_delta(n), "0"),
    )


def cylinder_attachment(m, n, pushout=None):
    """cDelta(m+1+n) -> cDelta(m+1+n) + cylinder over the final face.

    Tuples with at least two initial-block entries stay put; tuples with
    exactly one pick up a prism correction; tuples entirely in the final
    block are pushed to the far end of the cylinder.
    """
    P = pushout or attachment_pushout(m, n)
    src = c_delta(m + 1 + n)
    images = {}
    for p in src.degrees():
        for token in src.tokens(p):
            tup = token_simplex(token)
            r = sum(1 for i in tup if i <= m)
            if r >= 2:
                images[token] = P.left.apply(_unit(tup))
            elif r == 1:
                image = P.left.apply(_unit(tup))
                if p > 0:
                    back = _shift(tup[1:], -(m + 1))
                    image = image + P.right.apply(
                        tensor_chains(Chain.unit(1, "0,1"), _unit(back))
                    )
                images[token] = image
            else:
                back = _shift(tup, -(m + 1))
                images[token] = P.right.apply(
                    tensor_chains(Chain.unit(0, "1"), _unit(back))
                )
    return AdcMorphism(src, P.complex, images)


def wedge_pushout(m, n):
    """cDelta(m) and cDelta(1+n) joined at vertex m = vertex 0."""
    return pushout_complex(
        c_of_map(vertex_map(m, m)),
        c_of_map(vertex_map(1 + n, 0)),
    )


def _wedge_tuple_terms(m, tup):
    """The wedge projection of a strictly increasing tuple, as a list of
    tuples in the coordinates of the ambient simplex."""
    p = len(tup) - 1
    if tup[p] <= m or m <= tup[0]:
        return [tup]
    if p == 1:
        return [(tup[0], m), (m, tup[1])]
    if tup[1] > m:
        return [(m,) + tup[1:]]
    if tup[p - 1] < m:
        return [tup[:p] + (m,)]
    return []


def _wedge_name(m, tup, pushout):
    """Interpret an ambient tuple lying in the wedge inside the pushout."""
    if tup[-1] <= m:
        return pushout.left.apply(_unit(tup))
    return pushout.right.apply(_unit(_shift(tup, -m)))


def wedge_projection(m, n, pushout=None):
    """cDelta(m+1+n) -> cDelta(m) + cDelta(1+n): squash tuples through the
    middle vertex, killing those spanning it in more than two steps."""
    P = pushout or wedge_pushout(m, n)
    src = c_delta(m + 1 + n)
    images = {}
    for p in src.degrees():
        for token in src.tokens(p):
            tup = token_simplex(token)
            image = Chain.zero(p)
            for term in _wedge_tuple_terms(m, tup):
                image = image + _wedge_name(m, term, P)
            images[token] = image
    return AdcMorphism(src, P.complex, images)


def wedge_inclusion(m, n, pushout=None):
    """The wedge as a subcomplex of the ambient simplex."""
    P = pushout or wedge_pushout(m, n)
    dst = c_delta(m + 1 + n)
    images = {}
    for p in P.complex.degrees():
        for token in P.complex.tokens(p):
            side, _, orig = token.partition(":")
            tup = token_simplex(orig)
            images[token] = _unit(tup if side == "K" else _shift(tup, m))
    return AdcMorphism(P.complex, dst, images)


def wedge_projection_endo(m, n):
    """The wedge projection followed by the subcomplex inclusion."""
    src = c_delta(m + 1 + n)
    images = {}
    for p in src.degrees():
        for token in src.tokens(p):
            tup = token_simplex(token)
            image = Chain.zero(p)
            for term in _wedge_tuple_terms(m, tup):
                image = image + _unit(term)
            images[token] = image
    return AdcMorphism(src, src, images)


def partial_wedge_projection(m, n, phi):
    """The endomorphism splitting each tuple at the fiber of phi.

    The prefix of a tuple lying over 0 (under phi extended by 0 on the
    initial block) is pushed through the wedge projection; the suffix over
    1 is concatenated back unchanged.
    """
    if phi.src != n or phi.dst != 1:
        raise ValueError("phi must be a monotone map Delta(n) -> Delta(1)")
    src = c_delta(m + 1 + n)

    def bar(i):
        return 0 if i <= m else phi(i - m - 1)

    images = {}
    for p in src.degrees():
        for token in src.tokens(p):
            tup = token_simplex(token)
            split = len(tup)
            for k, i in enumerate(tup):
                if bar(i) == 1:
                    split = k
                    break
            if split == 0:
                images[token] = _unit(tup)
                continue
            suffix = tup[split:]
            image = Chain.zero(p)
            for term in _wedge_tuple_terms(m, tup[:split]):
                image = image + _unit(term + suffix)
            images[token] = image
    return AdcMorphism(src, src, images)


def interval_fold():
    """The interval folded through the glued double interval.

    Returns (pushout, morphism): the pushout joins two intervals end to
    start; the morphism sends the edge to the sum of the two edges.
    """
    I = c_delta(1)
    point = c_delta(0)
    P = pushout_complex(
        AdcMorphism(point, I, {"0": Chain.unit(0, "0")}),
        AdcMorphism(point, I, {"0": Chain.unit(0, "1")}),
    )
    images = {
        "0": P.right.apply(Chain.unit(0, "0")),
        "1": P.left.apply(Chain.unit(0, "1")),
        "0,1": P.left.apply(Chain.unit(1, "0,1")) + P.right.apply(Chain.unit(1, "0,1")),
    }
    return P, AdcMorphism(I, P.complex, images)


# -- the slice-nerve comparison ------------------------------------------


def to_slice_pair(c_prime, a, n):
    """Turn an under-slice simplex of a nerve into (functor, transformation).

    ``c_prime`` maps cDelta(1+n) into the target complex, ``a`` maps
    cDelta(n) into the source complex; the transformation is the cylinder
    composite through the cone collapse.
    """
    return a, OplaxTransformation(c_prime.after(cylinder_to_cone(n)))


def from_slice_pair(a, T, n, c):
    """Rebuild the cone simplex from (functor, transformation), atom by atom.

    The initial vertex goes to c, tuples avoiding the cone point come from
    the far end of the cylinder, tuples through the cone point from the
    edge component.
    """
    L = T.h.target
    images = {}
    for p in range(n + 2):
        for tup in itertools.combinations(range(n + 2), p + 1):
            token = simplex_token(tup)
            if tup == (0,):
                images[token] = c
            elif tup[0] == 0:
                back = simplex_token(_shift(tup[1:], -1))
                images[token] = T.h.image_of(tensor_token("0,1", back))
            else:
                back = simplex_token(_shift(tup, -1))
                images[token] = T.h.image_of(tensor_token("1", back))
    return AdcMorphism(c_delta(1 + n), L, images)


# -- strong deformation retract data on nerve slices ----------------------


@dataclass(frozen=True)
class SliceRetract:
    """r, s, h exhibiting the vertex slice as a strong deformation retract.

    ``big`` is the slice at an m-simplex b, ``small`` the slice at its last
    vertex; ``homotopy(phi, pair)`` runs from the composite s.r (phi = 0)
    to the identity (phi = 1) while fixing the image of s.
    """

    m: int
    base: AdcMorphism
    big: object
    small: object
    retraction: SimplicialMap
    section: SimplicialMap
    _wedge: Pushout

    def homotopy(self, phi, pair):
        y, x = pair
        return (y.after(partial_wedge_projection(self.m, phi.src, phi)), x)


def slice_retract_data(u, b, m):
    """Build the retract data for the relative under-slice of u at b."""
    big = map_under_slice(u, b, m)
    b_last = b.after(c_of_map(vertex_map(m, m)))
    small = map_under_slice(u, b_last, 0)

    def r_fn(n, pair):
        y, x = pair
        spine = MonotoneMap(1 + n, m + 1 + n, tuple(m + k for k in range(n + 2)))
        return (y.after(c_of_map(spine)), x)

    wedge = wedge_pushout(m, 0)

    def s_fn(n, pair):
        y_prime, x = pair
        P = wedge_pushout(m, n)
        folded = P.induced(b, y_prime)
        return (folded.after(wedge_projection(m, n, P)), x)

    return SliceRetract(
        m,
        b,
        big,
        small,
        SimplicialMap(big, small, r_fn),
        SimplicialMap(small, big, s_fn),
        wedge,
    )


# -- the verification suite ------------------------------------------------


@dataclass(frozen=True)
class IdentityResult:
    name: str
    passed: bool
    counterexample: str = ""


@dataclass(frozen=True)
class SuiteReport:
    results: tuple[IdentityResult, ...]

    @property
    def all_passed(self):
        return all(r.passed for r in self.results)

    def __str__(self):
        lines = []
        for r in self.results:
            mark = "pass" if r.passed else "FAIL"
            tail = f"  [{r.counterexample}]" if r.counterexample else ""
            lines.append(f"{mark}  {r.name}{tail}")
        return "\n".join(lines)


def _first_difference(f, g):
    for p in f.source.degrees():
        for token in f.source.tokens(p):
            if f.image_of(token) != g.image_of(token):
                return f"at {token}: {f.image_of(token)} vs {g.image_of(token)}"
    if f.source != g.source or f.target != g.target:
        return "different endpoints"
    return ""


def _morphism_identity(name, lhs, rhs):
    if lhs == rhs:
        return IdentityResult(name, True)
    return IdentityResult(name, False, _first_difference(lhs, rhs))


def _chain_map_result(name, f):
    report = check_morphism(f)
    if report.ok:
        return IdentityResult(name, True)
    return IdentityResult(name, False, report.problems[0])


def _cone_checks(n_max):
    out = []
    for n in range(n_max + 1):
        out.append(_chain_map_result(f"cone collapse is a chain map (n={n})", cylinder_to_cone(n)))
    for n in range(n_max + 1):
        for n2 in range(n_max + 1):
            for psi in all_monotone_maps(n2, n):
                lhs = cylinder_to_cone(n).after(
                    tensor_morphism(identity_morphism(c_delta(1)), c_of_map(psi))
                )
                rhs = c_of_map(join_maps(identity_map(0), psi)).after(cylinder_to_cone(n2))
                if lhs != rhs:
                    out.append(
                        IdentityResult(
                            "cone collapse naturality", False, f"n={n}, psi={psi.image}"
                        )
                    )
                    return out
    out.append(IdentityResult(f"cone collapse naturality (n, n' <= {n_max})", True))
    return out


def _attachment_checks(m_max, n_max):
    out = []
    pushouts = {}
    kappas = {}
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            P = attachment_pushout(m, n)
            pushouts[(m, n)] = P
            kappas[(m, n)] = cylinder_attachment(m, n, P)
            out.append(
                _chain_map_result(
                    f"cylinder attachment is a chain map (m={m}, n={n})", kappas[(m, n)]
                )
            )
    for (m, n), kappa in kappas.items():
        P = pushouts[(m, n)]
        lhs = kappa.after(c_of_map(initial_inclusion(m, n)))
        rhs = P.left.after(c_of_map(initial_inclusion(m, n)))
        res = _morphism_identity(
            f"cylinder attachment fixes the initial face (m={m}, n={n})", lhs, rhs
        )
        if not res.passed:
            out.append(res)
            return out
    out.append(IdentityResult("cylinder attachment fixes the initial face", True))

    failures = []
    for (m, n), kappa in kappas.items():
        P = pushouts[(m, n)]
        for m2 in range(m_max + 1):
            for n2 in range(n_max + 1):
                P2 = pushouts[(m2, n2)]
                kappa2 = kappas[(m2, n2)]
                for phi in all_monotone_maps(m2, m):
                    for psi in all_monotone_maps(n2, n):
                        glue = P2.induced(
                            P.left.after(c_of_map(join_maps(phi, psi))),
                            P.right.after(
                                tensor_morphism(
                                    identity_morphism(c_delta(1)), c_of_map(psi)
                                )
                            ),
                        )
                        lhs = kappa.after(c_of_map(join_maps(phi, psi)))
                        rhs = glue.after(kappa2)
                        if lhs != rhs:
                            failures.append(f"(m,n)=({m},{n}) phi={phi.image} psi={psi.image}")
    out.append(
        IdentityResult(
            "cylinder attachment naturality",
            not failures,
            failures[0] if failures else "",
        )
    )
    return out


def _fold_square_checks(n_max):
    out = []
    I = c_delta(1)
    for n in range(n_max + 1):
        Kn = c_delta(n)
        PK = attachment_pushout(0, n)
        kappa = cylinder_attachment(0, n, PK)
        Q = pushout_complex(
            tensor_injection(I, Kn, "0"),
            tensor_injection(I, Kn, "1"),
        )
        _, fold = interval_fold()
        T = tensor_complex(I, Kn)
        images = {}
        for p in Kn.degrees():
            for token in Kn.tokens(p):
                base = Kn.unit_chain(token)
                images[tensor_token("0", token)] = Q.right.apply(
                    tensor_chains(Chain.unit(0, "0"), base)
                )
                images[tensor_token("1", token)] = Q.left.apply(
                    tensor_chains(Chain.unit(0, "1"), base)
                )
                images[tensor_token("0,1", token)] = Q.left.apply(
                    tensor_chains(Chain.unit(1, "0,1"), base)
                ) + Q.right.apply(tensor_chains(Chain.unit(1, "0,1"), base))
        fold_tensor = AdcMorphism(T, Q.complex, images)
        bottom = Q.induced(PK.right, PK.left.after(cylinder_to_cone(n)))
        lhs = kappa.after(cylinder_to_cone(n))
        rhs = bottom.after(fold_tensor)
        res = _morphism_identity(f"interval fold square (n={n})", lhs, rhs)
        out.append(res)
    return out


def _wedge_checks(m_max, n_max):
    out = []
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            P = wedge_pushout(m, n)
            f = wedge_projection(m, n, P)
            out.append(
                _chain_map_result(f"wedge projection is a chain map (m={m}, n={n})", f)
            )
            endo = wedge_projection_endo(m, n)
            out.append(
                _morphism_identity(
                    f"wedge projection factors through the wedge (m={m}, n={n})",
                    wedge_inclusion(m, n, P).after(f),
                    endo,
                )
            )
            out.append(
                _morphism_identity(
                    f"wedge projection is idempotent (m={m}, n={n})",
                    endo.after(endo),
                    endo,
                )
            )
            out.append(
                _morphism_identity(
                    f"wedge projection restricts to the identity (m={m}, n={n})",
                    f.after(wedge_inclusion(m, n, P)),
                    identity_morphism(P.complex),
                )
            )
    failures = []
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            P = wedge_pushout(m, n)
            f = wedge_projection(m, n, P)
            for n2 in range(n_max + 1):
                P2 = wedge_pushout(m, n2)
                f2 = wedge_projection(m, n2, P2)
                for psi in all_monotone_maps(n2, n):
                    psi1 = join_maps(identity_map(m), psi)
                    psi2 = join_maps(identity_map(0), psi)
                    glue = P2.induced(P.left, P.right.after(c_of_map(psi2)))
                    lhs = f.after(c_of_map(psi1))
                    rhs = glue.after(f2)
                    if lhs != rhs:
                        failures.append(f"(m,n,n')=({m},{n},{n2}) psi={psi.image}")
    out.append(
        IdentityResult(
            "wedge projection naturality", not failures, failures[0] if failures else ""
        )
    )
    return out


def _partial_wedge_checks(m_max, n_max):
    out = []
    chain_failures = []
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            endo = wedge_projection_endo(m, n)
            for phi in all_monotone_maps(n, 1):
                f_phi = partial_wedge_projection(m, n, phi)
                rep = check_morphism(f_phi)
                if not rep.ok:
                    chain_failures.append(f"(m,n)=({m},{n}) phi={phi.image}")
                if not endo.after(f_phi) == endo:
                    chain_failures.append(
                        f"absorption fails (m,n)=({m},{n}) phi={phi.image}"
                    )
            ident = partial_wedge_projection(m, n, constant_map(n, 1, 1))
            if ident != identity_morphism(c_delta(m + 1 + n)):
                chain_failures.append(f"phi=1 endpoint (m,n)=({m},{n})")
            if partial_wedge_projection(m, n, constant_map(n, 1, 0)) != endo:
                chain_failures.append(f"phi=0 endpoint (m,n)=({m},{n})")
    out.append(
        IdentityResult(
            "partial wedge projections: chain maps, endpoints, absorption",
            not chain_failures,
            chain_failures[0] if chain_failures else "",
        )
    )
    coherence_failures = []
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            for n2 in range(n_max + 1):
                for psi in all_monotone_maps(n2, n):
                    psi1 = join_maps(identity_map(m), psi)
                    for phi in all_monotone_maps(n, 1):
                        lhs = partial_wedge_projection(m, n, phi).after(c_of_map(psi1))
                        rhs = c_of_map(psi1).after(
                            partial_wedge_projection(m, n2, phi.compose(psi))
                        )
                        if lhs != rhs:
                            coherence_failures.append(
                                f"(m,n,n')=({m},{n},{n2}) phi={phi.image} psi={psi.image}"
                            )
    out.append(
        IdentityResult(
            "partial wedge coherence with final-block operators",
            not coherence_failures,
            coherence_failures[0] if coherence_failures else "",
        )
    )
    return out


def _retract_checks_on_nerve(K, m, cap, label, coeff_bound=None):
    """Section/retraction/homotopy identities on actual nerve tables."""
    from .nerves import identity_simplicial_map, nerve

    out = []
    N = nerve(K, cap + m + 1, coeff_bound)
    u = identity_simplicial_map(N)
    b = N.simplices(m)[0]
    data = slice_retract_data(u, b, m)
    r, s = data.retraction, data.section
    rs_failures = []
    sr_failures = []
    hom_failures = []
    square_failures = []
    for n in range(min(data.big.cap, cap) + 1):
        for pair in data.small.simplices(n):
            if r(n, s(n, pair)) != pair:
                rs_failures.append(f"{label}: r.s misses at level {n}")
            lhs = data.homotopy(constant_map(n, 1, 0), s(n, pair))
            if lhs != s(n, r(n, s(n, pair))):
                square_failures.append(f"{label}: strong square at level {n}")
        for pair in data.big.simplices(n):
            if data.homotopy(constant_map(n, 1, 1), pair) != pair:
                hom_failures.append(f"{label}: h(1) != id at level {n}")
            if data.homotopy(constant_map(n, 1, 0), pair) != s(n, r(n, pair)):
                sr_failures.append(f"{label}: h(0) != s.r at level {n}")
    out.append(
        IdentityResult(
            f"retraction has section on {label}",
            not rs_failures,
            rs_failures[0] if rs_failures else "",
        )
    )
    out.append(
        IdentityResult(
            f"homotopy endpoints on {label}",
            not (hom_failures or sr_failures),
            (hom_failures + sr_failures)[0] if hom_failures or sr_failures else "",
        )
    )
    out.append(
        IdentityResult(
            f"strong retract square on {label}",
            not square_failures,
            square_failures[0] if square_failures else "",
        )
    )
    out.append(
        IdentityResult(
            f"section is simplicial on {label}",
            not simplicial_map_failures(s, min(data.small.cap, cap)),
        )
    )
    out.append(
        IdentityResult(
            f"retraction is simplicial on {label}",
            not simplicial_map_failures(r, min(data.big.cap, cap)),
        )
    )
    h_failures = []
    for n in range(min(data.big.cap, cap)):
        for psi in all_monotone_maps(n, n + 1):
            for phi in all_monotone_maps(n + 1, 1):
                for pair in data.big.simplices(n + 1):
                    lhs = data.big.act(psi, data.homotopy(phi, pair))
                    rhs = data.homotopy(phi.compose(psi), data.big.act(psi, pair))
                    if lhs != rhs:
                        h_failures.append(f"{label}: homotopy not simplicial")
    out.append(
        IdentityResult(
            f"homotopy is simplicial on {label}",
            not h_failures,
            h_failures[0] if h_failures else "",
        )
    )
    return out


def verify_suite(m_max, n_max, include_nerve_retract=True):
    """Exhaustively check every comparison-map identity within the bounds.

    Identities are grouped into independent families; the merge is a plain
    concatenation, so results are deterministic whatever the execution
    order.  STEINER_LAB_THREADS caps the worker pool (default: serial).
    """
    jobs = [
        lambda: _cone_checks(n_max),
        lambda: _attachment_checks(m_max, n_max),
        lambda: _fold_square_checks(n_max),
        lambda: _wedge_checks(m_max, n_max),
        lambda: _partial_wedge_checks(m_max, n_max),
    ]
    if include_nerve_retract:
        jobs.append(
            lambda: _retract_checks_on_nerve(c_delta(1), 0, 2, "the interval nerve")
        )
        if m_max >= 1:
            jobs.append(
                lambda: _retract_checks_on_nerve(
                    c_delta(2), 1, 2, "the triangle nerve"
                )
            )
    threads = int(os.environ.get("STEINER_LAB_THREADS", "1") or "1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            blocks = list(pool.map(lambda job: job(), jobs))
    else:
        blocks = [job() for job in jobs]
    results = tuple(itertools.chain.from_iterable(blocks))
    return SuiteReport(results)
