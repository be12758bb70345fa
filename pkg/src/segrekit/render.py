"""Diagrams of Jordan structure: cell grids, ASCII, SVG, Ferrers.

A structure grid is the n x n sparsity-and-coloring pattern of a Jordan
matrix: eigenvalue cells on the diagonal (colored by group), 1-cells on
the superdiagonal, everything else zero.  The SVG output is byte
deterministic: same input, same bytes.
"""

import string
from math import ceil

from .jordan import JordanSpec
from .partitions import Partition

# cell value for a superdiagonal 1; positive values are 1-based group indexes
ONE_CELL = 0

CELL_PX = 16
GUTTER_PX = 8

_PALETTE = ("#ffa500", "#008000", "#ff0000", "#0000ff", "#800080")


class StructureGrid:
    """Sparse cell map of a Jordan matrix's structure.

    cells maps 1-based (row, col) to ONE_CELL or an eigenvalue group
    index >= 1; absent positions are zero.  Eigenvalue cells may only sit
    on the diagonal and 1-cells only on the superdiagonal.
    """

    __slots__ = ("_n", "_cells")

    def __init__(self, n: int, cells: dict):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"grid size must be a positive integer, got {n!r}")
        checked = {}
        for (r, c), v in cells.items():
            if not (1 <= r <= n and 1 <= c <= n):
                raise ValueError(f"cell ({r}, {c}) outside the {n}x{n} grid")
            if v == ONE_CELL:
                if c != r + 1:
                    raise ValueError(f"1-cell at ({r}, {c}) is off the superdiagonal")
            elif isinstance(v, int) and v >= 1:
                if c != r:
                    raise ValueError(f"eigenvalue cell at ({r}, {c}) is off the diagonal")
            else:
                raise ValueError(f"bad cell value {v!r} at ({r}, {c})")
            checked[(r, c)] = v
        self._n = n
        self._cells = checked

    @property
    def n(self) -> int:
        return self._n

    @property
    def cells(self) -> dict:
        return dict(self._cells)

    def cell(self, r: int, c: int):
        """ONE_CELL, a group index, or None for a zero cell."""
        return self._cells.get((r, c))

    @property
    def group_count(self) -> int:
        return max((v for v in self._cells.values() if v != ONE_CELL), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureGrid):
            return NotImplemented
        return self._n == other._n and self._cells == other._cells

    def __repr__(self) -> str:
        return f"StructureGrid({self._n}, {len(self._cells)} cells)"


def grid_of(spec: JordanSpec) -> StructureGrid:
    """Structure grid of build_jordan(spec); group i colors its diagonal run."""
    cells = {}
    offset = 0
    for index, group in enumerate(spec.segre.groups, start=1):
        for size in group.parts:
            for r in range(offset + 1, offset + size + 1):
                cells[(r, r)] = index
            for r in range(offset + 1, offset + size):
                cells[(r, r + 1)] = ONE_CELL
            offset += size
    return StructureGrid(spec.dimension, cells)


def render_ascii(grid: StructureGrid) -> str:
    """One text line per matrix row: '.' zero, '1' superdiagonal, letters
    a, b, c, ... per eigenvalue group.

    With more than 26 groups the letter alphabet runs out, so every
    eigenvalue cell falls back to a bracketed index token "<i>" instead
    (lines are then wider than n characters).
    """
    lettered = grid.group_count <= len(string.ascii_lowercase)

    def glyph(r: int, c: int) -> str:
        v = grid.cell(r, c)
        if v is None:
            return "."
        if v == ONE_CELL:
            return "1"
        return string.ascii_lowercase[v - 1] if lettered else f"<{v}>"

    return "\n".join(
        "".join(glyph(r, c) for c in range(1, grid.n + 1))
        for r in range(1, grid.n + 1))


def _fill(index: int) -> str:
    # palette cycles every 5 groups; each wrap darkens the base color
    base = _PALETTE[(index - 1) % len(_PALETTE)]
    level = (index - 1) // len(_PALETTE)
    if level == 0:
        return base
    shrink = 0.7 ** level
    channels = (int(round(int(base[i:i + 2], 16) * shrink)) for i in (1, 3, 5))
    return "#" + "".join(f"{ch:02x}" for ch in channels)


def _cell_fill(value) -> str:
    if value is None:
        return "#ffffff"
    if value == ONE_CELL:
        return "#000000"
    return _fill(value)


def render_svg(grids, columns: int = 4) -> str:
    """One SVG document laying the grids out row-major, `columns` per row.

    Cells are CELL_PX squares with a light stroke, each grid wrapped in a
    framed <g class="grid"> element, GUTTER_PX of space around every slot.
    Output is pure string assembly, hence byte-deterministic.
    """
    if not isinstance(columns, int) or isinstance(columns, bool) or columns < 1:
        raise ValueError(f"columns must be a positive integer, got {columns!r}")
    grids = list(grids)
    if not grids:
        return ('<?xml version="1.0" encoding="UTF-8"?>\n'
                f'<svg xmlns="http://www.w3.org/2000/svg" width="{GUTTER_PX}" '
                f'height="{GUTTER_PX}" viewBox="0 0 {GUTTER_PX} {GUTTER_PX}"></svg>\n')
    side = max(g.n for g in grids) * CELL_PX
    cols_used = min(columns, len(grids))
    row_count = ceil(len(grids) / columns)
    width = GUTTER_PX + cols_used * (side + GUTTER_PX)
    height = GUTTER_PX + row_count * (side + GUTTER_PX)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">\n',
    ]
    for idx, grid in enumerate(grids):
        x = GUTTER_PX + (idx % columns) * (side + GUTTER_PX)
        y = GUTTER_PX + (idx // columns) * (side + GUTTER_PX)
        out.append(f'<g class="grid" transform="translate({x},{y})">\n')
        for r in range(1, grid.n + 1):
            for c in range(1, grid.n + 1):
                fill = _cell_fill(grid.cell(r, c))
                out.append(
                    f'<rect x="{(c - 1) * CELL_PX}" y="{(r - 1) * CELL_PX}" '
                    f'width="{CELL_PX}" height="{CELL_PX}" fill="{fill}" '
                    'stroke="#cccccc" stroke-width="0.5"/>\n')
        frame = grid.n * CELL_PX
        out.append(f'<rect x="0" y="0" width="{frame}" height="{frame}" '
                   'fill="none" stroke="#000000" stroke-width="1"/>\n')
        out.append('</g>\n')
    out.append('</svg>\n')
    return "".join(out)


def render_ferrers(p: Partition) -> str:
    """Rows of '*', one row per part, largest on top."""
    if not p:
        raise ValueError("cannot draw an empty partition")
    return "\n".join("*" * part for part in p.parts)


def render_ferrers_conjugate_pair(p: Partition) -> str:
    """A partition and its conjugate side by side, three spaces apart."""
    if not p:
        raise ValueError("cannot draw an empty partition")
    q = p.conjugate()
    pad = p.parts[0] + 3
    lines = []
    for i in range(max(len(p), len(q))):
        left = "*" * p.parts[i] if i < len(p.parts) else ""
        right = "*" * q.parts[i] if i < len(q.parts) else ""
        lines.append((left.ljust(pad) + right) if right else left)
    return "\n".join(lines)
