"""Cells of the omega-category presented by a directed complex.

An i-cell is a double row of positive chains in degrees 0..i: both rows
share every differential (d x = upper - lower one degree down), the
degree-0 entries have augmentation 1, and the two degree-i entries agree.
Source, target, identities and the compositions act row-wise; composition
in mixed dimensions pads the lower cell with iterated identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .chains import Chain, atom_tableau
from .linalg import abelian_invariants
from .solve import solve_augmentation, solve_boundary


@dataclass(frozen=True)
class CellTableau:
    """A cell of nu(K): ``x0[k]``/``x1[k]`` are the degree-k row entries."""

    complex: object
    x0: tuple[Chain, ...]
    x1: tuple[Chain, ...]

    @property
    def dim(self):
        return len(self.x0) - 1

    @property
    def top(self):
        return self.x0[-1]

    def __str__(self):
        lo = " | ".join(str(c) for c in self.x0)
        hi = " | ".join(str(c) for c in self.x1)
        return f"[{lo} // {hi}]"


def _check_shape(cell):
    K = cell.complex
    if len(cell.x0) != len(cell.x1) or not cell.x0:
        raise ValueError("rows must be two equal-length nonempty tuples")
    for k, (a, b) in enumerate(zip(cell.x0, cell.x1)):
        if a.degree != k or b.degree != k:
            raise ValueError(f"row {k} entries must be degree-{k} chains")
        if not (K.contains_chain(a) and K.contains_chain(b)):
            raise ValueError(f"row {k} mentions tokens outside the complex")


def cell_problems(cell):
    """Diagnostics for the four tableau conditions; empty iff a genuine cell."""
    _check_shape(cell)
    K = cell.complex
    problems = []
    for k, (a, b) in enumerate(zip(cell.x0, cell.x1)):
        for label, chain in (("lower", a), ("upper", b)):
            if not chain.is_positive:
                problems.append(f"{label} entry in degree {k} is not positive")
        if k > 0:
            want = cell.x1[k - 1] - cell.x0[k - 1]
            for label, chain in (("lower", a), ("upper", b)):
                if K.d(chain) != want:
                    problems.append(
                        f"d of {label} degree-{k} entry is not the row difference"
                    )
    for label, chain in (("lower", cell.x0[0]), ("upper", cell.x1[0])):
        if K.e(chain) != 1:
            problems.append(f"augmentation of {label} degree-0 entry is {K.e(chain)}")
    if cell.x0[-1] != cell.x1[-1]:
        problems.append("top entries differ")
    return problems


def validate_cell(cell):
    return not cell_problems(cell)


def object_cell(K, chain):
    return CellTableau(K, (chain,), (chain,))


def atom_cell(K, token):
    """The atom of a basis element, as a cell tableau."""
    atom = atom_tableau(K, token)
    if not atom.is_cell:
        raise ValueError(f"atom of {token!r} is not a cell")
    return CellTableau(
        K,
        tuple(r[0] for r in atom.rows),
        tuple(r[1] for r in atom.rows),
    )


def source(cell):
    if cell.dim == 0:
        raise ValueError("0-cells have no source")
    rows0, rows1 = cell.x0[:-1], cell.x1[:-1]
    return CellTableau(cell.complex, rows0, rows1[:-1] + (rows0[-1],))


def target(cell):
    if cell.dim == 0:
        raise ValueError("0-cells have no target")
    rows0, rows1 = cell.x0[:-1], cell.x1[:-1]
    return CellTableau(cell.complex, rows0[:-1] + (rows1[-1],), rows1)


def identity(cell):
    zero = Chain.zero(cell.dim + 1)
    return CellTableau(cell.complex, cell.x0 + (zero,), cell.x1 + (zero,))


def source_iter(cell, j):
    """Iterated source s_j; s_dim is the cell itself."""
    while cell.dim > j:
        cell = source(cell)
    return cell


def target_iter(cell, j):
    while cell.dim > j:
        cell = target(cell)
    return cell


def iterated_identity(cell, dim):
    while cell.dim < dim:
        cell = identity(cell)
    return cell


def is_identity_cell(cell):
    return cell.dim > 0 and cell.top.is_zero


def composable(x, y, j):
    i = max(x.dim, y.dim)
    if not 0 <= j < i:
        return False
    x, y = iterated_identity(x, i), iterated_identity(y, i)
    return source_iter(x, j) == target_iter(y, j)


def compose(x, y, j):
    """The composite x *_j y (x after y over the shared j-boundary).

    Cells of different dimensions are composed by padding the lower one
    with iterated identities.
    """
    if x.complex != y.complex:
        raise ValueError("cells live over different complexes")
    if j >= max(x.dim, y.dim) or j < 0:
        raise ValueError(f"no composition *_{j} in dimension {max(x.dim, y.dim)}")
    i = max(x.dim, y.dim)
    x = iterated_identity(x, i)
    y = iterated_identity(y, i)
    if source_iter(x, j) != target_iter(y, j):
        raise ValueError(f"cells are not {j}-composable")
    rows0 = y.x0[: j + 1] + tuple(a + b for a, b in zip(x.x0[j + 1 :], y.x0[j + 1 :]))
    rows1 = x.x1[: j + 1] + tuple(a + b for a, b in zip(x.x1[j + 1 :], y.x1[j + 1 :]))
    return CellTableau(x.complex, rows0, rows1)


def compose_chain(factors):
    """Left-to-right composite of [(cell, j), ...] starting from the first cell."""
    (acc, _), rest = factors[0], factors[1:]
    for cell, j in rest:
        acc = compose(acc, cell, j)
    return acc


def map_cell(f, cell):
    """Entrywise image of a cell under a morphism of complexes."""
    if cell.complex != f.source:
        raise ValueError("cell does not live over the morphism source")
    return CellTableau(
        f.target,
        tuple(f.apply(c) for c in cell.x0),
        tuple(f.apply(c) for c in cell.x1),
    )


@dataclass(frozen=True)
class CellEnumeration:
    cells: tuple[CellTableau, ...]
    complete: bool

    def nonidentity(self):
        return tuple(c for c in self.cells if not is_identity_cell(c))


def enumerate_cells(K, dim, coeff_bound=None):
    """All i-cells of nu(K), by degreewise boundary-constrained search.

    The ``complete`` flag is inherited from the chain solver: exact whenever
    the complex carries the peeling certificate (notably every strongly
    loop-free complex with pointed differentials), otherwise the result is
    bounded by ``coeff_bound`` and marked possibly incomplete.
    """
    complete = True
    zero = solve_augmentation(K, 1, coeff_bound)
    complete &= zero.complete
    cells = [object_cell(K, z) for z in zero.chains]
    for i in range(1, dim + 1):
        grouped = {}
        for c in cells:
            grouped.setdefault((c.x0[:-1], c.x1[:-1]), []).append(c)
        new_cells = []
        for group in grouped.values():
            for lo, hi in itertools.product(group, repeat=2):
                sols = solve_boundary(K, i, hi.top - lo.top, coeff_bound)
                complete &= sols.complete
                for z in sols.chains:
                    new_cells.append(
                        CellTableau(
                            K,
                            lo.x0[:-1] + (lo.top, z),
                            lo.x1[:-1] + (hi.top, z),
                        )
                    )
        cells = new_cells
        if dim == i:
            break
    cells.sort(key=lambda c: tuple(ch.coeffs for ch in c.x0 + c.x1))
    return CellEnumeration(tuple(cells), complete)


def enumerate_cells_through(K, dim, coeff_bound=None):
    """Enumerations for every dimension 0..dim (shares nothing; small inputs)."""
    return [enumerate_cells(K, i, coeff_bound) for i in range(dim + 1)]


@dataclass(frozen=True)
class DegreeComparison:
    """Presented abelianization in one degree versus the chain group."""

    degree: int
    generators: int
    rank: int
    torsion: tuple[int, ...]
    basis_size: int

    @property
    def matches(self):
        return self.rank == self.basis_size and not self.torsion


def lambda_of_nu(K, max_dim, coeff_bound=None):
    """Compare the abelianization of nu(K) with K itself, degree by degree.

    In each degree the group is presented by the enumerated cells modulo
    [x *_j y] = [x] + [y]; its rank and torsion are computed by Smith
    normal form and compared with the basis size (the adjunction counit is
    an isomorphism for Steiner complexes, so they must agree).
    """
    reports = []
    for i in range(max_dim + 1):
        enum = enumerate_cells(K, i, coeff_bound)
        if not enum.complete:
            raise ValueError(
                f"cell enumeration in dimension {i} is possibly incomplete; "
                "refusing to present the abelianization"
            )
        cells = enum.cells
        index = {c: k for k, c in enumerate(cells)}
        by_source = {}
        by_target = {}
        for j in range(i):
            for c in cells:
                by_source.setdefault((j, source_iter(c, j)), []).append(c)
                by_target.setdefault((j, target_iter(c, j)), []).append(c)
        relations = set()
        for j in range(i):
            for boundary, xs in by_source.items():
                if boundary[0] != j:
                    continue
                for x in xs:
                    for y in by_target.get((j, boundary[1]), []):
                        row = [0] * len(cells)
                        row[index[compose(x, y, j)]] += 1
                        row[index[x]] -= 1
                        row[index[y]] -= 1
                        if any(row):
                            relations.add(tuple(row))
        rank, torsion = abelian_invariants(len(cells), sorted(relations))
        reports.append(
            DegreeComparison(i, len(cells), rank, torsion, len(K.tokens(i)))
        )
    return reports
