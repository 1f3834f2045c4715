"""Sudoku graphs and their determining sets.

The order-n Sudoku graph has n^4 cells; rows, columns, and n x n boxes
each induce cliques of size n^2.  Boards are proper n^2-colorings.  A
puzzle's clue set is fair exactly when it is a determining set of the
board, which ties the minimum-number-of-clues question to the smallest
critical set over all boards.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .coloring import Coloring, count_colorings_extending
from .errors import InternalError, InvalidParameterError, SizeLimitError, UnsupportedError
from .graphs import Graph, VertexSet, bits

DEFAULT_MAX_CELLS = 4096


@dataclass(frozen=True)
class SudokuStructure:
    """The graph plus the cell <-> (row, col, box) indexing for order n."""

    n: int
    graph: Graph

    @property
    def side(self) -> int:
        return self.n * self.n

    @property
    def cells(self) -> int:
        return self.n ** 4

    def cell_index(self, row: int, col: int) -> int:
        return row * self.side + col

    def cell_coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.side)

    def box_index(self, v: int) -> int:
        row, col = self.cell_coords(v)
        return (row // self.n) * self.n + col // self.n


def sudoku_graph(n: int, max_cells: int = DEFAULT_MAX_CELLS) -> SudokuStructure:
    """Build the order-n Sudoku graph directly from row/column/box cliques."""
    if n < 1:
        raise InvalidParameterError("box order must be at least 1")
    side = n * n
    cells = side * side
    if cells > max_cells:
        raise SizeLimitError(f"sudoku graph with {cells} cells exceeds cap {max_cells}")
    row_mask = [0] * side
    col_mask = [0] * side
    box_mask = [0] * side
    for v in range(cells):
        r, c = divmod(v, side)
        b = (r // n) * n + c // n
        row_mask[r] |= 1 << v
        col_mask[c] |= 1 << v
        box_mask[b] |= 1 << v
    rows = []
    for v in range(cells):
        r, c = divmod(v, side)
        b = (r // n) * n + c // n
        rows.append((row_mask[r] | col_mask[c] | box_mask[b]) & ~(1 << v))
    return SudokuStructure(n, Graph(cells, tuple(rows)))


def canonical_board(n: int) -> Coloring:
    """The shifted base board, a valid coloring for every order."""
    side = n * n
    colors = tuple(
        (n * (r % n) + r // n + c) % side for r in range(side) for c in range(side)
    )
    return Coloring(colors, side)


def _check_board(structure: SudokuStructure, board: Coloring):
    if len(board.colors) != structure.cells or board.k != structure.side:
        raise InvalidParameterError("board shape does not match the structure")
    if not board.is_proper(structure.graph):
        raise InvalidParameterError("board violates a row/column/box constraint")


def _board_search(n: int, rng: random.Random | None, collect: list | None) -> tuple[int, ...] | None:
    """Backtracking board fill; collects all boards or returns the first
    (with rng-shuffled candidate orders when sampling)."""
    side = n * n
    cells = side * side
    full = (1 << side) - 1
    row_used = [0] * side
    col_used = [0] * side
    box_used = [0] * side
    colors = [0] * cells

    def rec(v: int):
        if v == cells:
            if collect is not None:
                collect.append(tuple(colors))
                return None
            return tuple(colors)
        r, c = divmod(v, side)
        b = (r // n) * n + c // n
        avail = full & ~(row_used[r] | col_used[c] | box_used[b])
        cands = bits(avail)
        if rng is not None:
            rng.shuffle(cands)
        for col in cands:
            bit = 1 << col
            row_used[r] |= bit
            col_used[c] |= bit
            box_used[b] |= bit
            colors[v] = col
            got = rec(v + 1)
            row_used[r] ^= bit
            col_used[c] ^= bit
            box_used[b] ^= bit
            if got is not None:
                return got
        return None

    return rec(0)


@lru_cache(maxsize=None)
def all_boards(n: int) -> tuple[tuple[int, ...], ...]:
    """Every valid board of order n; only enumerable at n <= 2."""
    if n > 2:
        raise SizeLimitError("board enumeration is only feasible for n <= 2")
    out: list[tuple[int, ...]] = []
    _board_search(n, None, out)
    return tuple(out)


def random_board(n: int, rng: random.Random) -> Coloring:
    """A board found by randomized backtracking (seeded, not uniform)."""
    colors = _board_search(n, rng, None)
    if colors is None:
        raise InternalError("board search failed")
    return Coloring(colors, n * n)


# ---------------------------------------------------------------------------
# the randomized thinning process


def random_determining_set(
    structure: SudokuStructure, board: Coloring, seed: int = 0
) -> VertexSet:
    """Run the birth-order thinning process and return the surviving cells.

    Cells are processed in a seeded uniform random order (equivalent to
    i.i.d. continuous birth times).  A cell is dropped when, for every
    color other than its own, some still-surviving neighbor carries that
    color; the survivors form a determining set for the board.
    """
    _check_board(structure, board)
    side = structure.side
    colors = board.colors
    adj = structure.graph.adj
    class_mask = [0] * side
    for v, c in enumerate(colors):
        class_mask[c] |= 1 << v
    order = list(range(structure.cells))
    random.Random(seed).shuffle(order)
    survivors = (1 << structure.cells) - 1
    for v in order:
        own = colors[v]
        row = adj[v] & survivors
        if all(row & class_mask[c] for c in range(side) if c != own):
            survivors ^= 1 << v
    return survivors


def neighbor_color_counts(structure: SudokuStructure, board: Coloring, v: int) -> dict[int, int]:
    """For each color other than the cell's own: how many neighbors carry it."""
    _check_board(structure, board)
    own = board.colors[v]
    counts: dict[int, int] = {c: 0 for c in range(structure.side) if c != own}
    for w in structure.graph.neighbors(v):
        counts[board.colors[w]] += 1
    return counts


def certify_fair_puzzle(structure: SudokuStructure, board: Coloring, clues: VertexSet) -> bool:
    """True iff the clue cells extend to exactly one board (propagation
    plus backtracking, counting capped at 2)."""
    _check_board(structure, board)
    fixed = {v: board.colors[v] for v in bits(clues)}
    return count_colorings_extending(structure.graph, structure.side, fixed, 2) == 1


def count_puzzle_completions(structure: SudokuStructure, clues: dict[int, int], cap: int = 2) -> int:
    """Completions of an arbitrary partial board, truncated at cap."""
    return count_colorings_extending(structure.graph, structure.side, clues, cap)


# ---------------------------------------------------------------------------
# trial campaigns


@dataclass(frozen=True)
class TrialStats:
    """Certified surviving-set sizes across seeded process trials."""

    trials: int
    sizes: tuple[int, ...]
    mean: float | None
    min_size: int | None
    max_size: int | None
    seed: int


def trial_campaign(n: int, trials: int, seed: int = 0, certify: bool = True) -> TrialStats:
    """Run the thinning process across seeded random boards.

    Order 2 draws boards from the full enumeration; order 3 samples by
    randomized backtracking.  Every output is certified determining unless
    `certify` is disabled; a non-determining output raises InternalError.
    """
    if n not in (2, 3):
        raise InvalidParameterError("trial campaigns support orders 2 and 3")
    if trials < 0:
        raise InvalidParameterError("trial count must be nonnegative")
    structure = sudoku_graph(n)
    master = random.Random(seed)
    sizes = []
    for _ in range(trials):
        if n == 2:
            boards = all_boards(2)
            board = Coloring(boards[master.randrange(len(boards))], 4)
        else:
            board = random_board(3, master)
        survivors = random_determining_set(structure, board, seed=master.getrandbits(32))
        if certify and not certify_fair_puzzle(structure, board, survivors):
            raise InternalError("thinning process produced a non-determining set")
        sizes.append(survivors.bit_count())
    if not sizes:
        return TrialStats(0, (), None, None, None, seed)
    return TrialStats(
        trials, tuple(sizes), sum(sizes) / len(sizes), min(sizes), max(sizes), seed
    )


# ---------------------------------------------------------------------------
# minimum number of clues, order 2


@dataclass(frozen=True)
class MncResult:
    min_clues: int
    board: Coloring
    clues: VertexSet
    boards_checked: int


def _orbit_canonical(colors: tuple[int, ...]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel)
    return tuple(relabel[c] for c in colors)


def mnc_exhaustive(n: int = 2, symmetry: bool = True) -> MncResult:
    """Exhaustive minimum clue count over all order-2 boards.

    A clue set is fair iff it hits every cell-difference mask against the
    other 287 boards, so the check is exact hitting-set testing over the
    full board enumeration.  With `symmetry` on, boards are reduced to one
    representative per color-permutation orbit (fairness is invariant
    under relabeling); both modes return the same minimum.
    """
    if n != 2:
        raise UnsupportedError("exhaustive minimum-clue search is only supported at order 2")
    from itertools import combinations

    boards = all_boards(2)
    if symmetry:
        seen: dict[tuple[int, ...], tuple[int, ...]] = {}
        for b in boards:
            seen.setdefault(_orbit_canonical(b), b)
        candidates = tuple(seen.values())
    else:
        candidates = boards
    cells = 16
    diff_cache: dict[tuple[int, ...], list[int]] = {}

    def diffs(board: tuple[int, ...]) -> list[int]:
        got = diff_cache.get(board)
        if got is None:
            got = []
            for other in boards:
                if other is board or other == board:
                    continue
                m = 0
                for v in range(cells):
                    if other[v] != board[v]:
                        m |= 1 << v
                got.append(m)
            got.sort(key=int.bit_count)
            diff_cache[board] = got
        return got

    for size in range(1, cells + 1):
        for board in candidates:
            masks = diffs(board)
            for combo in combinations(range(cells), size):
                s = 0
                for v in combo:
                    s |= 1 << v
                if all(s & d for d in masks):
                    return MncResult(size, Coloring(board, 4), s, len(candidates))
    raise InternalError("no fair puzzle found at any size")


# ---------------------------------------------------------------------------
# board/puzzle text format


def format_board(n: int, colors, clues: VertexSet | None = None) -> str:
    """n^2 lines of n^2 tokens: 1..n^2 for given cells, '.' elsewhere."""
    side = n * n
    lines = []
    for r in range(side):
        row = []
        for c in range(side):
            v = r * side + c
            if clues is not None and not clues >> v & 1:
                row.append(".")
            else:
                row.append(str(colors[v] + 1))
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def parse_board_text(text: str) -> tuple[int, dict[int, int]]:
    """Parse the puzzle format back to (order, {cell: color})."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    side = len(rows)
    n = isqrt(side)
    if n * n != side:
        raise InvalidParameterError(f"{side} lines is not a square side length")
    clues: dict[int, int] = {}
    for r, tokens in enumerate(rows):
        if len(tokens) != side:
            raise InvalidParameterError(f"line {r + 1} has {len(tokens)} tokens, expected {side}")
        for c, tok in enumerate(tokens):
            if tok == ".":
                continue
            try:
                value = int(tok)
            except ValueError:
                raise InvalidParameterError(f"bad token {tok!r} at line {r + 1}") from None
            if not 1 <= value <= side:
                raise InvalidParameterError(f"value {value} out of range at line {r + 1}")
            clues[r * side + c] = value - 1
    return n, clues
