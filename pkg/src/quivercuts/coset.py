"""Budgeted coset enumeration for finitely presented groups.

Enumerates the cosets of the trivial subgroup, so a closed table has one
row per group element: closing with a single coset proves the presented
group trivial, closing with more proves it nontrivial.  Triviality is
undecidable in general, so the enumeration carries an explicit budget on
the number of cosets ever defined and reports exhaustion instead of
looping forever.

Relator words are sequences of nonzero integers: ``k`` stands for the
``k``-th generator (1-based) and ``-k`` for its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

_SENT = -1


class _Budget(Exception):
    pass


@dataclass(frozen=True)
class EnumerationResult:
    closed: bool
    live_cosets: int
    defined_cosets: int


class _CosetTable:
    """Union-find backed partial coset table over 2*n generator columns."""

    def __init__(self, n_generators: int, max_cosets: int):
        self.columns = 2 * n_generators
        self.max_cosets = max_cosets
        self.label: list[int] = []
        self.rows: list[list[int]] = []
        self.live = 0

    def find(self, c: int) -> int:
        root = c
        while self.label[root] != root:
            root = self.label[root]
        while self.label[c] != root:
            self.label[c], c = root, self.label[c]
        return root

    def define(self) -> int:
        if len(self.rows) >= self.max_cosets:
            raise _Budget
        c = len(self.rows)
        self.label.append(c)
        self.rows.append([_SENT] * self.columns)
        self.live += 1
        return c

    def follow(self, c: int, column: int) -> int:
        c = self.find(c)
        entry = self.rows[c][column]
        if entry == _SENT:
            d = self.define()
            self.rows[c][column] = d
            self.rows[d][column ^ 1] = c
            return d
        return self.find(entry)

    def unify(self, a: int, b: int) -> None:
        pending = [(a, b)]
        while pending:
            a, b = pending.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            self.label[b] = a
            self.live -= 1
            row_a, row_b = self.rows[a], self.rows[b]
            for column in range(self.columns):
                other = row_b[column]
                if other == _SENT:
                    continue
                if row_a[column] == _SENT:
                    # stale back-references into b are resolved through find()
                    row_a[column] = other
                else:
                    pending.append((row_a[column], other))


def _encode(word: Sequence[int]) -> tuple[int, ...]:
    columns = []
    for letter in word:
        if letter == 0:
            raise ValueError("relator letters are nonzero integers")
        g = abs(letter) - 1
        columns.append(2 * g if letter > 0 else 2 * g + 1)
    return tuple(columns)


def enumerate_trivial_subgroup(
    n_generators: int, relators: Sequence[Sequence[int]], max_cosets: int
) -> EnumerationResult:
    """Run the enumeration until the table closes or the budget is exhausted."""
    words = [_encode(w) for w in relators]
    for word in words:
        for column in word:
            if column >= 2 * n_generators:
                raise ValueError("relator uses a generator outside the presentation")
    table = _CosetTable(n_generators, max_cosets)
    try:
        table.define()
        scanned = 0
        while scanned < len(table.label):
            if table.find(scanned) == scanned:
                for word in words:
                    at = scanned
                    for column in word:
                        at = table.follow(at, column)
                    table.unify(at, table.find(scanned))
                    if table.find(scanned) != scanned:
                        break  # merged into an earlier, already scanned coset
                live = table.find(scanned)
                if live == scanned:
                    # complete the row so every (coset, generator) product exists
                    for column in range(table.columns):
                        if table.rows[live][column] == _SENT:
                            table.follow(live, column)
            scanned += 1
    except _Budget:
        return EnumerationResult(False, table.live, len(table.rows))
    return EnumerationResult(True, table.live, len(table.rows))
