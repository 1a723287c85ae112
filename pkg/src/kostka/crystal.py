"""Rectangular semistandard tableaux and their crystal structure.

A tableau of shape (s^r) on the alphabet {1..n} has rows weakly
increasing left to right and columns strictly increasing top to bottom.
A path is a tensor product of such tableaux, written left to right.
The operators e_i and f_i act on the row word of the whole path through
the usual bracketing rule: in the subword of letters i and i+1, every
i+1 opens a bracket and every i closes one; matched adjacent pairs
cancel, leaving a residue i^p (i+1)^q.  f_i turns the rightmost
unmatched i into i+1 and e_i turns the leftmost unmatched i+1 into i;
when the needed letter is absent the operator is undefined and None is
returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations


@dataclass(frozen=True)
class RectTableau:
    """A column-strict rectangular tableau over {1..n}."""

    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)
        if not rows:
            raise ValueError('tableau needs at least one row')
        s = len(rows[0])
        if any(len(row) != s for row in rows):
            raise ValueError('rows must all have the same length')
        if s == 0:
            raise ValueError('tableau needs at least one column')
        for row in rows:
            for x in row:
                if not 1 <= x <= self.n:
                    raise ValueError(f'entry {x} outside alphabet 1..{self.n}')
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError('rows must weakly increase')
        for j in range(s):
            col = [row[j] for row in rows]
            if any(a >= b for a, b in zip(col, col[1:])):
                raise ValueError('columns must strictly increase')

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def word(self) -> tuple[int, ...]:
        """Row word: bottom row first, each row left to right."""
        out = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def weight(self) -> tuple[int, ...]:
        w = [0] * self.n
        for row in self.rows:
            for x in row:
                w[x - 1] += 1
        return tuple(w)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    @classmethod
    def from_json(cls, data, n: int) -> 'RectTableau':
        return cls(tuple(tuple(row) for row in data), n)

    def __str__(self):
        return '/'.join(''.join(str(x) for x in row) for row in self.rows)


@dataclass(frozen=True)
class CrystalSpec:
    """A tensor product of rectangle crystals, factors listed left to right."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        factors = tuple((int(r), int(s)) for r, s in self.factors)
        object.__setattr__(self, 'factors', factors)
        if self.n < 2:
            raise ValueError('alphabet size must be at least 2')
        for r, s in factors:
            if not 1 <= r <= self.n - 1:
                raise ValueError(f'factor height {r} outside 1..{self.n - 1}')
            if s < 1:
                raise ValueError(f'factor width {s} must be positive')

    def total_boxes(self) -> int:
        return sum(r * s for r, s in self.factors)

    def to_json(self) -> dict:
        return {'n': self.n, 'factors': [list(f) for f in self.factors]}

    @classmethod
    def from_json(cls, data) -> 'CrystalSpec':
        return cls(int(data['n']), tuple((int(r), int(s)) for r, s in data['factors']))


@dataclass(frozen=True)
class Path:
    """An element of a tensor product of rectangle crystals."""

    spec: CrystalSpec
    tableaux: tuple[RectTableau, ...]

    def __post_init__(self):
        tableaux = tuple(self.tableaux)
        object.__setattr__(self, 'tableaux', tableaux)
        if len(tableaux) != len(self.spec.factors):
            raise ValueError('one tableau per factor required')
        for t, (r, s) in zip(tableaux, self.spec.factors):
            if t.shape != (r, s):
                raise ValueError(f'tableau shape {t.shape} does not match factor ({r},{s})')
            if t.n != self.spec.n:
                raise ValueError('tableau alphabet does not match spec')

    def word(self) -> tuple[int, ...]:
        out = []
        for t in self.tableaux:
            out.extend(t.word())
        return tuple(out)

    def weight(self) -> tuple[int, ...]:
        w = [0] * self.spec.n
        for t in self.tableaux:
            for wi, x in enumerate(t.weight()):
                w[wi] += x
        return tuple(w)

    def f(self, i: int) -> 'Path | None':
        return _apply(self, i, lowering=True)

    def e(self, i: int) -> 'Path | None':
        return _apply(self, i, lowering=False)

    def phi(self, i: int) -> int:
        """Number of times f applies before hitting None."""
        unmatched_i, unmatched_i1 = _bracket(self, i)
        return len(unmatched_i)

    def epsilon(self, i: int) -> int:
        """Number of times e applies before hitting None."""
        unmatched_i, unmatched_i1 = _bracket(self, i)
        return len(unmatched_i1)

    def to_json(self) -> dict:
        return {
            'n': self.spec.n,
            'factors': [list(f) for f in self.spec.factors],
            'tableaux': [t.to_json() for t in self.tableaux],
        }

    @classmethod
    def from_json(cls, data) -> 'Path':
        spec = CrystalSpec.from_json(data)
        tabs = tuple(RectTableau.from_json(t, spec.n) for t in data['tableaux'])
        return cls(spec, tabs)

    def __str__(self):
        return ' (x) '.join(str(t) for t in self.tableaux) if self.tableaux else '(empty)'


def _word_cells(path: Path):
    """Letters of the path word with their (factor, row, col) addresses."""
    cells = []
    for k, t in enumerate(path.tableaux):
        for ri in range(t.nrows - 1, -1, -1):
            for ci in range(t.ncols):
                cells.append((t.rows[ri][ci], k, ri, ci))
    return cells


def _bracket(path: Path, i: int):
    """Unmatched positions for letter i (closers) and i+1 (openers).

    Returns two lists of indices into the word-cell list, in word order.
    """
    if not 1 <= i <= path.spec.n - 1:
        raise ValueError(f'operator index {i} outside 1..{path.spec.n - 1}')
    unmatched_i: list[int] = []
    open_stack: list[int] = []
    for pos, (letter, *_rest) in enumerate(_word_cells(path)):
        if letter == i + 1:
            open_stack.append(pos)
        elif letter == i:
            if open_stack:
                open_stack.pop()
            else:
                unmatched_i.append(pos)
    return unmatched_i, open_stack


def _apply(path: Path, i: int, lowering: bool) -> Path | None:
    cells = _word_cells(path)
    unmatched_i, unmatched_i1 = _bracket(path, i)
    if lowering:
        if not unmatched_i:
            return None
        pos = unmatched_i[-1]       # rightmost unmatched i
        new_letter = i + 1
    else:
        if not unmatched_i1:
            return None
        pos = unmatched_i1[0]       # leftmost unmatched i+1
        new_letter = i
    _letter, k, ri, ci = cells[pos]
    t = path.tableaux[k]
    rows = [list(row) for row in t.rows]
    rows[ri][ci] = new_letter
    # The constructor re-checks semistandardness; the bracketing rule
    # guarantees it never fails here.
    new_t = RectTableau(tuple(tuple(row) for row in rows), t.n)
    tabs = list(path.tableaux)
    tabs[k] = new_t
    return Path(path.spec, tuple(tabs))


@cache
def enumerate_crystal(r: int, s: int, n: int) -> tuple[RectTableau, ...]:
    """All column-strict r x s tableaux over {1..n}, in a fixed order.

    Built column by column: each column is a strictly increasing
    r-subset of {1..n} and consecutive columns weakly increase along
    every row.
    """
    if not 1 <= r <= n:
        raise ValueError(f'height {r} outside 1..{n}')
    if s < 1:
        raise ValueError('width must be positive')
    columns = list(combinations(range(1, n + 1), r))
    out: list[RectTableau] = []

    def extend(cols):
        if len(cols) == s:
            rows = tuple(tuple(col[j] for col in cols) for j in range(r))
            out.append(RectTableau(rows, n))
            return
        last = cols[-1] if cols else None
        for col in columns:
            if last is None or all(a <= b for a, b in zip(last, col)):
                extend(cols + [col])

    extend([])
    return tuple(out)
