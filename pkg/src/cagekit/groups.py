"""Finite groups as Cayley tables.

Elements are integers 0..order-1 with 0 the identity.  That is enough for
voltage assignments: the lift construction only ever multiplies, inverts,
and compares elements.  Tables are validated on construction, so a Group
value can be assumed to actually be a group.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import List, Sequence, Union


class Group:
    """A finite group given by its multiplication table.

    table[a][b] is the product a*b.  Construction checks the axioms and
    raises ValueError naming the first law that fails.
    """

    __slots__ = ("table", "_inv", "name")

    identity = 0

    def __init__(self, table: Sequence[Sequence[int]], name: str = "group"):
        m = len(table)
        if m == 0:
            raise ValueError("a group needs at least the identity element")
        tab = []
        for a, row in enumerate(table):
            row = tuple(row)
            if len(row) != m:
                raise ValueError(f"closure fails: row {a} has {len(row)} entries, expected {m}")
            for b, x in enumerate(row):
                if not (0 <= x < m):
                    raise ValueError(f"closure fails: {a}*{b} = {x} is not an element")
            tab.append(row)
        self.table = tuple(tab)
        self.name = name
        for a in range(m):
            if self.table[0][a] != a:
                raise ValueError(f"identity fails: 0*{a} = {self.table[0][a]}")
            if self.table[a][0] != a:
                raise ValueError(f"identity fails: {a}*0 = {self.table[a][0]}")
        inv = [-1] * m
        for a in range(m):
            for b in range(m):
                if self.table[a][b] == 0:
                    inv[a] = b
                    break
            if inv[a] < 0:
                raise ValueError(f"inverses fail: element {a} has no inverse")
        self._inv = tuple(inv)
        t = self.table
        for a in range(m):
            ta = t[a]
            for b in range(m):
                tab_ = t[ta[b]]
                tb = t[b]
                for c in range(m):
                    if tab_[c] != ta[tb[c]]:
                        raise ValueError(
                            f"associativity fails: ({a}*{b})*{c} = {tab_[c]} "
                            f"but {a}*({b}*{c}) = {ta[tb[c]]}"
                        )

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(len(self.table))

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self._inv[a]

    def element_order(self, a: int) -> int:
        x = a
        k = 1
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.table
        m = len(t)
        return all(t[a][b] == t[b][a] for a in range(m) for b in range(a + 1, m))

    def __len__(self) -> int:
        return len(self.table)

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order})"


def cyclic_group(m: int) -> Group:
    """Z_m under addition."""
    if m < 1:
        raise ValueError("order must be positive")
    table = [[(a + b) % m for b in range(m)] for a in range(m)]
    return Group(table, name=f"Z{m}")


def dihedral_group(m: int) -> Group:
    """Symmetries of an m-gon, order 2m.

    Element i + m*j encodes rotation^i * reflection^j; the defining relation
    reflection * rotation = rotation^-1 * reflection gives the table.
    """
    if m < 1:
        raise ValueError("order must be positive")
    size = 2 * m

    def mul(x: int, y: int) -> int:
        i1, j1 = x % m, x // m
        i2, j2 = y % m, y // m
        i = (i1 + (i2 if j1 == 0 else -i2)) % m
        return i + m * (j1 ^ j2)

    table = [[mul(a, b) for b in range(size)] for a in range(size)]
    return Group(table, name=f"D{m}")


def direct_product(a: Group, b: Group) -> Group:
    """Componentwise product; element x*|b|+y encodes the pair (x, y)."""
    mb = b.order
    size = a.order * mb

    def mul(x: int, y: int) -> int:
        xa, xb = divmod(x, mb)
        ya, yb = divmod(y, mb)
        return a.op(xa, ya) * mb + b.op(xb, yb)

    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    return Group(table, name=f"{a.name}x{b.name}")


def load_cayley_table(source: Union[str, Path, io.TextIOBase], name: str = "") -> Group:
    """Read a multiplication table from a file.

    Format: first non-comment line is the order m, followed by m lines of m
    whitespace-separated element indices.  '#' starts a comment, blank lines
    are ignored.
    """
    if isinstance(source, (str, Path)):
        path = Path(source)
        text = path.read_text()
        if not name:
            name = path.stem
    else:
        text = source.read()
        if not name:
            name = "table"
    order: int = -1
    rows: List[List[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            toks = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if order < 0:
            if len(toks) != 1 or toks[0] < 1:
                raise ValueError(f"line {lineno}: expected a single positive order, got {line!r}")
            order = toks[0]
        else:
            rows.append(toks)
    if order < 0:
        raise ValueError("empty table file")
    if len(rows) != order:
        raise ValueError(f"declared order {order} but found {len(rows)} table rows")
    return Group(rows, name=name)
