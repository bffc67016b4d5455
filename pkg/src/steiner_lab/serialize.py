"""Deterministic JSON encodings for complexes, morphisms and cells.

Formats:

* complex: ``{"basis": [[tok, ...], ...], "diff": {tok: {tok: int}},
  "aug": {tok: int}}``
* morphism: ``{"source": <complex>, "target": <complex>,
  "images": {tok: {tok: int}}}``
* cell: ``{"dim": i, "x0": [{tok: int}, ...], "x1": [...]}``

Dictionaries are dumped with sorted keys, basis lists in declaration
order, so the same value always serializes to the same bytes.
"""

from __future__ import annotations

import json

from .cells import CellTableau
from .chains import AdcMorphism, Chain, DirComplex


def chain_to_json(chain):
    return {t: c for t, c in chain.items()}


def chain_from_json(degree, data):
    return Chain.make(degree, dict(data))


def complex_to_json(K):
    return {
        "basis": [list(K.tokens(p)) for p in K.degrees()],
        "diff": {
            t: chain_to_json(K.diff_of(t))
            for p in K.degrees()
            if p > 0
            for t in K.tokens(p)
            if not K.diff_of(t).is_zero
        },
        "aug": {t: K.aug_of(t) for t in K.tokens(0) if K.aug_of(t)},
    }


def complex_from_json(data):
    basis = data["basis"]
    degree_of = {t: p for p, level in enumerate(basis) for t in level}
    diff = {
        t: chain_from_json(degree_of[t] - 1, entries)
        for t, entries in data.get("diff", {}).items()
    }
    return DirComplex(basis, diff, data.get("aug", {}))


def morphism_to_json(f):
    return {
        "source": complex_to_json(f.source),
        "target": complex_to_json(f.target),
        "images": {
            t: chain_to_json(f.image_of(t))
            for p in f.source.degrees()
            for t in f.source.tokens(p)
        },
    }


def morphism_from_json(data):
    source = complex_from_json(data["source"])
    target = complex_from_json(data["target"])
    images = {
        t: chain_from_json(source.degree_of(t), entries)
        for t, entries in data["images"].items()
    }
    return AdcMorphism(source, target, images)


def cell_to_json(cell):
    return {
        "dim": cell.dim,
        "x0": [chain_to_json(c) for c in cell.x0],
        "x1": [chain_to_json(c) for c in cell.x1],
    }


def cell_from_json(K, data):
    return CellTableau(
        K,
        tuple(chain_from_json(k, d) for k, d in enumerate(data["x0"])),
        tuple(chain_from_json(k, d) for k, d in enumerate(data["x1"])),
    )


def dumps(data):
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def load_path(path):
    with open(path) as handle:
        return json.load(handle)
