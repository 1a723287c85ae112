"""Unrestricted rigged configurations.

A configuration is a sequence of partitions nu^(1), ..., nu^(n-1) whose
sizes are forced by the tensor factors and the weight.  Each part
carries an integer label (rigging); a label may go as low as a bound
read off a witness tableau and as high as the vacancy number of its
part length.  One witness tableau must serve every string of the
configuration simultaneously.

The module computes the generating polynomial of all rigged
configurations graded by cocharge in two independent ways: direct
enumeration and the alternating bound-tableau sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from itertools import combinations, combinations_with_replacement, product as iproduct
from math import comb

from .crystal import CrystalSpec
from .qpoly import QPolynomial, qbinom

DEFAULT_BOUND_CAP = 10 ** 6


def cartan(a: int, b: int) -> int:
    """Type A Cartan pairing of simple roots: 2, -1 adjacent, else 0."""
    if a == b:
        return 2
    if abs(a - b) == 1:
        return -1
    return 0


@cache
def multiplicity_array(spec: CrystalSpec) -> dict[tuple[int, int], int]:
    """Counts of tensor factors by (height, width)."""
    counts: dict[tuple[int, int], int] = {}
    for r, s in spec.factors:
        counts[(r, s)] = counts.get((r, s), 0) + 1
    return counts


def forced_sizes(L: dict[tuple[int, int], int], weight, n: int) -> list[int]:
    """Required size of each component partition, indices a = 1..n-1.

    Entry a-1 holds sum(weight[a:]) minus the boxes the factors place
    above level a.
    """
    sizes = []
    for a in range(1, n):
        used = sum(cnt * i * max(b - a, 0) for (b, i), cnt in L.items())
        sizes.append(sum(weight[a:]) - used)
    return sizes


def vacancy_number(partitions, L: dict[tuple[int, int], int], n: int, a: int, i: int) -> int:
    """Vacancy number of component a at part length i.

    partitions lists the part lengths of every component, 1..n-1 in
    order.  The value may be negative; i may exceed every part.
    """
    if not 1 <= a <= n - 1:
        raise ValueError(f'component {a} outside 1..{n - 1}')
    if i < 1:
        raise ValueError('part length must be positive')
    total = sum(cnt * min(i, j) for (b, j), cnt in L.items() if b == a)
    for b in (a - 1, a, a + 1):
        if 1 <= b <= n - 1:
            pairing = cartan(a, b)
            total -= pairing * sum(min(i, part) for part in partitions[b - 1])
    return total


@cache
def spec_vacancy(spec: CrystalSpec, partitions, a: int, i: int) -> int:
    """vacancy_number with the multiplicities read off a factor spec.

    Memoized; the same (spec, partitions) pair recurs for every rigging
    assignment and every admissibility probe of a configuration.
    """
    return vacancy_number(partitions, multiplicity_array(spec), spec.n, a, i)


def stable_vacancy(partitions, L: dict[tuple[int, int], int], n: int, a: int) -> int:
    """Vacancy number of component a for part lengths beyond every part
    and every factor width (the large-length limit)."""
    horizon = 1
    for b in (a - 1, a, a + 1):
        if 1 <= b <= n - 1:
            for part in partitions[b - 1]:
                horizon = max(horizon, part)
    for (b, j) in L:
        if b == a:
            horizon = max(horizon, j)
    return vacancy_number(partitions, L, n, a, horizon)


# ---------------------------------------------------------------------------
# witness tableaux for the rigging lower bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LowerBoundTableau:
    """Columns of prescribed heights with strictly decreasing entries.

    Column k (1-indexed) has height c_k = weight[k] + ... + weight[n-1]
    (0-indexed weight) and entries from {1..c_{k-1}}, with c_0 = c_1.
    Rows are then weakly decreasing automatically; the constructor
    checks it anyway.
    """

    columns: tuple[tuple[int, ...], ...]
    weight: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(tuple(col) for col in self.columns)
        weight = tuple(int(x) for x in self.weight)
        object.__setattr__(self, 'columns', cols)
        object.__setattr__(self, 'weight', weight)
        n = len(weight)
        if len(cols) != n - 1:
            raise ValueError(f'expected {n - 1} columns')
        heights = column_heights(weight)
        for k, col in enumerate(cols, start=1):
            if len(col) != heights[k]:
                raise ValueError(f'column {k} must have height {heights[k]}')
            bound = heights[k - 1]
            for x in col:
                if not 1 <= x <= bound:
                    raise ValueError(f'column {k} entry {x} outside 1..{bound}')
            if any(x <= y for x, y in zip(col, col[1:])):
                raise ValueError('columns must strictly decrease')
        for k in range(len(cols) - 1):
            left, right = cols[k], cols[k + 1]
            if any(left[j] < right[j] for j in range(len(right))):
                raise ValueError('rows must weakly decrease')

    def bound(self, a: int, i: int) -> int:
        """Lower bound for riggings of length-i strings in component a."""
        n = len(self.weight)
        if not 1 <= a <= n - 1:
            raise ValueError(f'component {a} outside 1..{n - 1}')
        if i < 0:
            raise ValueError('length must be nonnegative')
        value = -sum(1 for x in self.columns[a - 1] if i >= x)
        if a <= n - 2:
            value += sum(1 for x in self.columns[a] if i >= x)
        return value

    def rows(self) -> tuple[tuple[int, ...], ...]:
        height = len(self.columns[0]) if self.columns else 0
        out = []
        for j in range(height):
            row = tuple(col[j] for col in self.columns if j < len(col))
            if row:
                out.append(row)
        return tuple(out)


def column_heights(weight) -> list[int]:
    """Heights c_0, c_1, ..., c_{n-1} of the witness-tableau columns."""
    weight = tuple(weight)
    heights = [sum(weight[k:]) for k in range(1, len(weight))]
    return [heights[0] if heights else 0] + heights


def count_bound_tableaux(weight) -> int:
    heights = column_heights(tuple(weight))
    total = 1
    for k in range(1, len(heights)):
        total *= comb(heights[k - 1], heights[k])
    return total


@cache
def _bound_tableaux(weight: tuple[int, ...]) -> tuple[LowerBoundTableau, ...]:
    heights = column_heights(weight)
    per_column = []
    for k in range(1, len(heights)):
        options = [tuple(sorted(c, reverse=True))
                   for c in combinations(range(1, heights[k - 1] + 1), heights[k])]
        per_column.append(sorted(options, reverse=True))
    return tuple(LowerBoundTableau(cols, weight) for cols in iproduct(*per_column))


@cache
def bound_column(weight: tuple[int, ...], a: int, i: int) -> tuple[int, ...]:
    """bound(a, i) across all witness tableaux, in enumeration order.

    Callers must have materialized bound_tableaux(weight, cap) first so
    the cap check is not bypassed.
    """
    return tuple(t.bound(a, i) for t in _bound_tableaux(weight))


def bound_tableaux(weight, cap: int = DEFAULT_BOUND_CAP) -> tuple[LowerBoundTableau, ...]:
    """The full witness set for a weight, in a fixed order.

    Refuses to materialize more than cap tableaux; the count is a
    product of binomials and explodes quickly.
    """
    weight = tuple(int(x) for x in weight)
    count = count_bound_tableaux(weight)
    if count > cap:
        raise RuntimeError(
            f'{count} bound tableaux exceed the cap of {cap}; '
            f'raise the cap explicitly to proceed')
    return _bound_tableaux(weight)


# ---------------------------------------------------------------------------
# rigged configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RiggedConfiguration:
    """Strings (length, rigging) per component, plus the ambient data.

    Strings are kept sorted by decreasing length, then decreasing
    rigging, so equality is multiset equality.
    """

    spec: CrystalSpec
    weight: tuple[int, ...]
    strings: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        weight = tuple(int(x) for x in self.weight)
        object.__setattr__(self, 'weight', weight)
        n = self.spec.n
        if len(weight) != n:
            raise ValueError(f'weight must have length {n}')
        if any(x < 0 for x in weight):
            raise ValueError('weight entries must be nonnegative')
        if len(self.strings) != n - 1:
            raise ValueError(f'expected {n - 1} components')
        canon = []
        for comp in self.strings:
            comp = tuple(sorted(((int(l), int(x)) for l, x in comp),
                                key=lambda s: (-s[0], -s[1])))
            if any(l < 1 for l, _ in comp):
                raise ValueError('string lengths must be positive')
            canon.append(comp)
        object.__setattr__(self, 'strings', tuple(canon))

    @property
    def n(self) -> int:
        return self.spec.n

    @cached_property
    def partitions(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(l for l, _ in comp) for comp in self.strings)

    def multiplicities(self) -> dict[tuple[int, int], int]:
        return multiplicity_array(self.spec)

    def vacancy(self, a: int, i: int) -> int:
        return spec_vacancy(self.spec, self.partitions, a, i)

    def stable_vacancy(self, a: int) -> int:
        return stable_vacancy(self.partitions, self.multiplicities(), self.n, a)

    def cocharge(self) -> int:
        parts = self.partitions
        double = 0
        for a in range(1, self.n):
            for b in range(1, self.n):
                pairing = cartan(a, b)
                if pairing == 0:
                    continue
                double += pairing * sum(min(x, y)
                                        for x in parts[a - 1] for y in parts[b - 1])
        assert double % 2 == 0
        return double // 2 + sum(x for comp in self.strings for _, x in comp)

    def admissibility_witness(self, cap: int = DEFAULT_BOUND_CAP):
        """A witness tableau validating every rigging, or None.

        None means the configuration sizes are wrong, some rigging
        exceeds its vacancy number, or no single tableau bounds all
        riggings from below.
        """
        parts = self.partitions
        if sum(self.weight) != self.spec.total_boxes():
            return None
        sizes = forced_sizes(self.multiplicities(), self.weight, self.n)
        if [sum(p) for p in parts] != sizes:
            return None
        needed = []
        for a in range(1, self.n):
            by_len: dict[int, int] = {}
            for l, x in self.strings[a - 1]:
                by_len[l] = min(x, by_len.get(l, x))
            for l, low in by_len.items():
                if low > spec_vacancy(self.spec, parts, a, l):
                    return None
                needed.append((a, l, low))
        tableaux = bound_tableaux(self.weight, cap)
        survivors = list(range(len(tableaux)))
        for a, l, low in needed:
            col = bound_column(self.weight, a, l)
            survivors = [k for k in survivors if col[k] <= low]
            if not survivors:
                return None
        return tableaux[survivors[0]]

    def is_admissible(self, cap: int = DEFAULT_BOUND_CAP) -> bool:
        return self.admissibility_witness(cap) is not None

    def to_json(self) -> dict:
        return {
            'n': self.n,
            'weight': list(self.weight),
            'factors': [list(f) for f in self.spec.factors],
            'nu': [[[l, x] for l, x in comp] for comp in self.strings],
        }

    @classmethod
    def from_json(cls, data) -> 'RiggedConfiguration':
        spec = CrystalSpec(int(data['n']),
                           tuple((int(r), int(s)) for r, s in data['factors']))
        strings = tuple(tuple((int(l), int(x)) for l, x in comp)
                        for comp in data['nu'])
        return cls(spec, tuple(int(x) for x in data['weight']), strings)

    def __str__(self):
        if not any(self.strings):
            return '(empty)'
        comps = []
        for comp in self.strings:
            comps.append(','.join(f'{l}:{x}' for l, x in comp) if comp else '-')
        return ' | '.join(comps)


def empty_rc(n: int) -> RiggedConfiguration:
    return RiggedConfiguration(CrystalSpec(n, ()), (0,) * n, ((),) * (n - 1))


# ---------------------------------------------------------------------------
# enumeration and polynomials
# ---------------------------------------------------------------------------

def _partitions_of(total: int):
    """All partitions of total as weakly decreasing tuples."""
    if total == 0:
        yield ()
        return

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(total, total)


def enumerate_configurations(spec: CrystalSpec, weight):
    """All component-partition tuples satisfying the size constraints."""
    weight = tuple(int(x) for x in weight)
    L = multiplicity_array(spec)
    if sum(weight) != spec.total_boxes():
        return
    sizes = forced_sizes(L, weight, spec.n)
    if any(sz < 0 for sz in sizes):
        return
    for combo in iproduct(*[list(_partitions_of(sz)) for sz in sizes]):
        yield combo


def _string_support(partitions):
    """Sorted (component, length) pairs with their multiplicities."""
    support = []
    for a, parts in enumerate(partitions, start=1):
        seen: dict[int, int] = {}
        for p in parts:
            seen[p] = seen.get(p, 0) + 1
        for length in sorted(seen, reverse=True):
            support.append((a, length, seen[length]))
    return support


def enumerate_rcs(spec: CrystalSpec, weight,
                  cap: int = DEFAULT_BOUND_CAP) -> list[RiggedConfiguration]:
    """The complete set of rigged configurations, in a fixed order.

    For each configuration, rigging assignments are enumerated per
    witness tableau inside the box [bound, vacancy] and deduplicated
    across tableaux (distinct tableaux often induce the same bounds, so
    duplicate bound profiles are skipped outright).
    """
    weight = tuple(int(x) for x in weight)
    out: list[RiggedConfiguration] = []
    tableaux = None
    for parts in enumerate_configurations(spec, weight):
        if tableaux is None:
            tableaux = bound_tableaux(weight, cap)
        support = _string_support(parts)
        vacancies = [spec_vacancy(spec, parts, a, l) for a, l, _ in support]
        cols = [bound_column(weight, a, l) for a, l, _ in support]
        profiles = set(zip(*cols)) if cols else {()}
        assignments = set()
        for profile in profiles:
            per_string = []
            feasible = True
            for (a, l, m), low, p in zip(support, profile, vacancies):
                if p < low:
                    feasible = False
                    break
                per_string.append([tuple(sorted(c, reverse=True))
                                   for c in combinations_with_replacement(
                                       range(low, p + 1), m)])
            if not feasible:
                continue
            assignments.update(iproduct(*per_string))
        for assignment in sorted(assignments):
            comps: list[list[tuple[int, int]]] = [[] for _ in range(spec.n - 1)]
            for (a, l, _m), riggings in zip(support, assignment):
                comps[a - 1].extend((l, x) for x in riggings)
            out.append(RiggedConfiguration(
                spec, weight, tuple(tuple(c) for c in comps)))
    out.sort(key=lambda rc: rc.strings)
    return out


def rc_polynomial(spec: CrystalSpec, weight,
                  cap: int = DEFAULT_BOUND_CAP) -> QPolynomial:
    """Sum of q^cocharge over all rigged configurations."""
    result = QPolynomial.zero()
    for rc in enumerate_rcs(spec, weight, cap):
        result = result + QPolynomial.monomial(rc.cocharge())
    return result


def _config_cocharge(partitions, n: int) -> int:
    double = 0
    for a in range(1, n):
        for b in range(1, n):
            pairing = cartan(a, b)
            if pairing == 0:
                continue
            double += pairing * sum(min(x, y)
                                    for x in partitions[a - 1] for y in partitions[b - 1])
    assert double % 2 == 0
    return double // 2


def fermionic_polynomial(spec: CrystalSpec, weight,
                         cap: int = DEFAULT_BOUND_CAP) -> QPolynomial:
    """The alternating bound-tableau sum for the same polynomial.

    For each configuration the witness tableaux enter only through
    their bound profile on the strings that actually occur.  The sum
    over nonempty witness subsets with sign (-1)^(size+1) collapses to
    the identical sum over nonempty subsets of *distinct* profiles,
    which is evaluated by dynamic programming on pointwise maxima:
    processing profiles one at a time, a map from max-vector to signed
    count absorbs each new profile v via D[max(u,v)] -= D[u], D[v] += 1.
    """
    weight = tuple(int(x) for x in weight)
    result = QPolynomial.zero()
    tableaux = None
    for parts in enumerate_configurations(spec, weight):
        if tableaux is None:
            tableaux = bound_tableaux(weight, cap)
        support = _string_support(parts)
        vacancies = [spec_vacancy(spec, parts, a, l) for a, l, _ in support]
        cols = [bound_column(weight, a, l) for a, l, _ in support]
        profiles = set(zip(*cols)) if cols else {()}
        signed: dict[tuple[int, ...], int] = {}
        for v in profiles:
            updates = {v: signed.get(v, 0) + 1}
            for u, c in signed.items():
                w = tuple(max(x, y) for x, y in zip(u, v))
                updates[w] = updates.get(w, signed.get(w, 0)) - c
            signed.update(updates)
            signed = {u: c for u, c in signed.items() if c != 0}
        base = _config_cocharge(parts, spec.n)
        for bounds, count in signed.items():
            term = QPolynomial.monomial(
                base + sum(m * low for (_a, _l, m), low in zip(support, bounds)),
                count)
            for (a, l, m), low, p in zip(support, bounds, vacancies):
                term = term * qbinom(m, p - low)
                if not term:
                    break
            result = result + term
    return result
