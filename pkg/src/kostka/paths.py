"""Enumeration of paths of a prescribed weight and the polynomial they
generate, graded by the tail energy."""

from __future__ import annotations

from .crystal import CrystalSpec, Path, enumerate_crystal
from .plactic import tail_energy
from .qpoly import QPolynomial


def enumerate_paths(spec: CrystalSpec, weight) -> list[Path]:
    """All elements of the tensor product with the given letter counts.

    Backtracks over factors left to right, pruning any prefix whose
    letter usage already exceeds the target weight.
    """
    weight = tuple(int(x) for x in weight)
    if len(weight) != spec.n:
        raise ValueError(f'weight must have length {spec.n}')
    if any(x < 0 for x in weight):
        raise ValueError('weight entries must be nonnegative')
    if spec.total_boxes() != sum(weight):
        return []

    out: list[Path] = []
    chosen = []

    def extend(idx, remaining):
        if idx == len(spec.factors):
            out.append(Path(spec, tuple(chosen)))
            return
        r, s = spec.factors[idx]
        for t in enumerate_crystal(r, s, spec.n):
            w = t.weight()
            if all(w[a] <= remaining[a] for a in range(spec.n)):
                chosen.append(t)
                extend(idx + 1, tuple(remaining[a] - w[a] for a in range(spec.n)))
                chosen.pop()

    extend(0, weight)
    return out


def enumerate_all_paths(spec: CrystalSpec) -> list[Path]:
    """Every element of the tensor product, regardless of weight."""
    out: list[Path] = []
    chosen = []

    def extend(idx):
        if idx == len(spec.factors):
            out.append(Path(spec, tuple(chosen)))
            return
        r, s = spec.factors[idx]
        for t in enumerate_crystal(r, s, spec.n):
            chosen.append(t)
            extend(idx + 1)
            chosen.pop()

    extend(0)
    return out


def path_polynomial(spec: CrystalSpec, weight) -> QPolynomial:
    """Sum of q^(tail energy) over all paths of the given weight."""
    result = QPolynomial.zero()
    for b in enumerate_paths(spec, weight):
        result = result + QPolynomial.monomial(tail_energy(b))
    return result
