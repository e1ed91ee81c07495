"""
Plane partitions in an a x b x c box and their symmetry classes.

Heights are stored 0-indexed; every message and serialized form uses the
1-indexed cells (i, j) of the matrix notation p_ij.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

logger = logging.getLogger(__name__)
logger.setLevel(logging.WARNING)

Cube = Tuple[int, int, int]
Heights = Tuple[Tuple[int, ...], ...]


class PlanePartitionError(ValueError):
    """Invalid heights, box, toggle or symmetry request."""


class SymmetryClass(Enum):
    PLAIN = "plain"
    SPP = "spp"
    CSPP = "cspp"
    TSPP = "tspp"
    SCPP = "scpp"
    TSSCPP = "tsscpp"

    @classmethod
    def from_name(cls, name: str) -> "SymmetryClass":
        try:
            return cls(name.lower())
        except ValueError:
            choices = ", ".join(c.value for c in cls)
            raise PlanePartitionError(f"Unknown symmetry class '{name}'. Choose one of: {choices}")


@dataclass(frozen=True)
class Box3:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise PlanePartitionError(f"Box sides must be nonnegative, got {self.as_tuple()}")

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @classmethod
    def parse(cls, text: str) -> "Box3":
        """Parse 'A,B,C'."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise PlanePartitionError(f"Box must be given as A,B,C, got '{text}'")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError:
            raise PlanePartitionError(f"Box must be given as A,B,C, got '{text}'")


@dataclass(frozen=True)
class PlanePartition:
    box: Box3
    heights: Heights

    def p(self, i: int, j: int) -> int:
        """Height p_ij, 1-indexed."""
        return self.heights[i - 1][j - 1]

    def cubes(self) -> FrozenSet[Cube]:
        return frozenset((i + 1, j + 1, k)
                         for i, row in enumerate(self.heights)
                         for j, h in enumerate(row)
                         for k in range(1, h + 1))

    def flat(self) -> Tuple[int, ...]:
        return tuple(h for row in self.heights for h in row)

    def size(self) -> int:
        return sum(self.flat())

    def to_json(self) -> Dict:
        return {"box": list(self.box.as_tuple()), "heights": [list(r) for r in self.heights]}

    @classmethod
    def from_json(cls, data: Dict) -> "PlanePartition":
        try:
            box = Box3(*data["box"])
            heights = data["heights"]
        except (KeyError, TypeError):
            raise PlanePartitionError("Plane partition JSON needs 'box' [a,b,c] and 'heights'")
        return validate(heights, box)


def from_cubes(box: Box3, cubes: Set[Cube]) -> PlanePartition:
    """Build the height matrix of a cube set (assumed to be an order ideal)."""
    heights = [[0] * box.b for _ in range(box.a)]
    for i, j, k in cubes:
        heights[i - 1][j - 1] = max(heights[i - 1][j - 1], k)
    return validate(heights, box)


def validate(heights: Sequence[Sequence[int]], box: Box3) -> PlanePartition:
    """Check the stacking condition and return an immutable plane partition.

    Args:
        heights: a x b matrix of cube heights
        box: ambient box

    Returns:
        PlanePartition

    Raises:
        PlanePartitionError: on dimension mismatch, out-of-range entry or a
            row/column that is not weakly decreasing; the offending cell is named
    """
    rows = [list(r) for r in heights]
    if box.a > 0 and len(rows) != box.a:
        raise PlanePartitionError(f"Expected {box.a} rows, got {len(rows)}")
    if box.a == 0 and any(len(r) for r in rows):
        raise PlanePartitionError(f"Expected 0 rows, got {len(rows)}")
    rows = rows[:box.a]
    for i, row in enumerate(rows):
        if len(row) != box.b:
            raise PlanePartitionError(f"Row {i + 1} has {len(row)} entries, expected {box.b}")
    for i, row in enumerate(rows):
        for j, h in enumerate(row):
            if not isinstance(h, int) or isinstance(h, bool):
                raise PlanePartitionError(f"Entry p_{i + 1},{j + 1} = {h!r} is not an integer")
            if not 0 <= h <= box.c:
                raise PlanePartitionError(f"Entry p_{i + 1},{j + 1} = {h} is outside [0, {box.c}]")
            if j > 0 and row[j - 1] < h:
                raise PlanePartitionError(
                    f"Row {i + 1} is not weakly decreasing at p_{i + 1},{j + 1} = {h} > {row[j - 1]}")
            if i > 0 and rows[i - 1][j] < h:
                raise PlanePartitionError(
                    f"Column {j + 1} is not weakly decreasing at p_{i + 1},{j + 1} = {h} > {rows[i - 1][j]}")
    return PlanePartition(box, tuple(tuple(r) for r in rows))


def empty(box: Box3) -> PlanePartition:
    return PlanePartition(box, tuple(tuple(0 for _ in range(box.b)) for _ in range(box.a)))


def full(box: Box3) -> PlanePartition:
    return PlanePartition(box, tuple(tuple(box.c for _ in range(box.b)) for _ in range(box.a)))


def _fill(box: Box3) -> Iterator[Heights]:
    """Row-major depth-first fill, largest value first."""
    cells = [(i, j) for i in range(box.a) for j in range(box.b)]
    grid = [[0] * box.b for _ in range(box.a)]

    def rec(idx: int) -> Iterator[Heights]:
        if idx == len(cells):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[idx]
        bound = box.c
        if i > 0:
            bound = min(bound, grid[i - 1][j])
        if j > 0:
            bound = min(bound, grid[i][j - 1])
        for h in range(bound, -1, -1):
            grid[i][j] = h
            yield from rec(idx + 1)
        grid[i][j] = 0

    yield from rec(0)


def iter_box(box: Box3) -> Iterator[PlanePartition]:
    for h in _fill(box):
        yield PlanePartition(box, h)


def enumerate_box(box: Box3) -> List[PlanePartition]:
    """All plane partitions in the box, lexicographically descending."""
    return list(iter_box(box))


def macmahon_count(box: Box3) -> int:
    """#PP(a,b,c) = prod (i+j+c-1)/(i+j-1), exact."""
    num = math.prod(i + j + box.c - 1 for i in range(1, box.a + 1) for j in range(1, box.b + 1))
    den = math.prod(i + j - 1 for i in range(1, box.a + 1) for j in range(1, box.b + 1))
    return num // den


def _require_shape(box: Box3, cls: SymmetryClass) -> None:
    a, b, c = box.as_tuple()
    if cls in (SymmetryClass.SPP,) and a != b:
        raise PlanePartitionError(f"{cls.value.upper()} needs a = b, got box {box.as_tuple()}")
    if cls in (SymmetryClass.CSPP, SymmetryClass.TSPP) and not (a == b == c):
        raise PlanePartitionError(f"{cls.value.upper()} needs a = b = c, got box {box.as_tuple()}")
    if cls is SymmetryClass.TSSCPP and not (a == b == c and a % 2 == 0):
        raise PlanePartitionError(f"TSSCPP needs a = b = c even, got box {box.as_tuple()}")


def conjugate(part: Sequence[int], length: int) -> Tuple[int, ...]:
    """Conjugate of a partition, padded to the given length."""
    return tuple(sum(1 for x in part if x >= k) for k in range(1, length + 1))


def is_cyclically_symmetric_by_conjugation(p: PlanePartition) -> bool:
    """Row r of p is conjugate to column r, for every r."""
    n = p.box.a
    for r in range(n):
        column = [p.heights[i][r] for i in range(n)]
        if conjugate(column, n) != p.heights[r]:
            return False
    return True


def has_symmetry(p: PlanePartition, cls: SymmetryClass) -> bool:
    _require_shape(p.box, cls)
    if cls is SymmetryClass.PLAIN:
        return True
    if cls is SymmetryClass.SPP:
        return apply_symmetry_op(p, "transpose") == p
    if cls is SymmetryClass.CSPP:
        return apply_symmetry_op(p, "cyclic_rotate") == p
    if cls is SymmetryClass.TSPP:
        return has_symmetry(p, SymmetryClass.SPP) and has_symmetry(p, SymmetryClass.CSPP)
    if cls is SymmetryClass.SCPP:
        return apply_symmetry_op(p, "complement") == p
    return has_symmetry(p, SymmetryClass.TSPP) and has_symmetry(p, SymmetryClass.SCPP)


def apply_symmetry_op(p: PlanePartition, op: str) -> PlanePartition:
    """transpose, complement or cyclic_rotate."""
    a, b, c = p.box.as_tuple()
    if op == "transpose":
        return PlanePartition(Box3(b, a, c),
                              tuple(tuple(p.heights[i][j] for i in range(a)) for j in range(b)))
    if op == "complement":
        return PlanePartition(p.box, tuple(tuple(c - p.heights[a - 1 - i][b - 1 - j]
                                                 for j in range(b)) for i in range(a)))
    if op == "cyclic_rotate":
        if not a == b == c:
            raise PlanePartitionError(f"cyclic_rotate needs a = b = c, got box {p.box.as_tuple()}")
        # image cube (x, y, z) comes from (z, x, y)
        return PlanePartition(p.box, tuple(
            tuple(sum(1 for z in range(a) if p.heights[z][x] >= y + 1) for y in range(a))
            for x in range(a)))
    raise PlanePartitionError(f"Unknown symmetry operation '{op}'")


def toggle_cube(p: PlanePartition, i: int, j: int, k: int) -> PlanePartition:
    """Add or remove the cube (i, j, k); the result must stay a plane partition."""
    a, b, c = p.box.as_tuple()
    if not (1 <= i <= a and 1 <= j <= b and 1 <= k <= c):
        raise PlanePartitionError(f"Cube ({i},{j},{k}) is outside the box {p.box.as_tuple()}")
    h = p.heights[i - 1][j - 1]
    if h == k:
        new_h = k - 1
    elif h == k - 1:
        new_h = k
    else:
        raise PlanePartitionError(f"Cube ({i},{j},{k}) cannot be toggled: p_{i},{j} = {h}")
    rows = [list(r) for r in p.heights]
    rows[i - 1][j - 1] = new_h
    try:
        return validate(rows, p.box)
    except PlanePartitionError as e:
        raise PlanePartitionError(f"Toggling cube ({i},{j},{k}) would break monotonicity: {e}")


def _orbit_canon(cls: SymmetryClass) -> Callable[[Cube], Cube]:
    if cls in (SymmetryClass.TSPP, SymmetryClass.TSSCPP):
        return lambda x: tuple(sorted(x))
    if cls is SymmetryClass.CSPP:
        return lambda x: min(x, (x[1], x[2], x[0]), (x[2], x[0], x[1]))
    if cls is SymmetryClass.SPP:
        return lambda x: (min(x[0], x[1]), max(x[0], x[1]), x[2])
    return lambda x: x


def _symmetric_ideals(box: Box3, cls: SymmetryClass) -> Iterator[Set[Cube]]:
    """Order ideals of the cube poset closed under the class's symmetries.

    Cubes are grouped into orbits; an orbit is included only when the orbits
    of the lower neighbours of its representative are. Self-complementary
    classes pair each orbit with its complement, exactly one of each pair in.
    """
    a, b, c = box.as_tuple()
    canon = _orbit_canon(cls)
    complemented = cls in (SymmetryClass.SCPP, SymmetryClass.TSSCPP)
    reps = sorted({canon((i, j, k)) for i in range(1, a + 1)
                   for j in range(1, b + 1) for k in range(1, c + 1)},
                  key=lambda x: (sum(x), x))
    below: Dict[Cube, List[Cube]] = {}
    for x in reps:
        lower = []
        for axis in range(3):
            y = list(x)
            y[axis] -= 1
            if y[axis] >= 1:
                lower.append(canon(tuple(y)))
        below[x] = lower
    comp = {x: canon((a + 1 - x[0], b + 1 - x[1], c + 1 - x[2])) for x in reps} if complemented else {}

    def leq(z: Cube, w: Cube) -> bool:
        # orbit order is componentwise on these representatives
        return z[0] <= w[0] and z[1] <= w[1] and z[2] <= w[2]

    inside: Set[Cube] = set()
    outside: Set[Cube] = set()
    chosen_out: List[Cube] = []

    def rec(idx: int) -> Iterator[Set[Cube]]:
        if idx == len(reps):
            yield set(inside)
            return
        x = reps[idx]
        if x in inside:
            if all(y in inside for y in below[x]):
                yield from rec(idx + 1)
            return
        if x in outside:
            yield from rec(idx + 1)
            return
        twin = comp.get(x)
        if all(y in inside for y in below[x]) and (twin is None or (twin not in inside and twin != x)):
            inside.add(x)
            added = twin is not None and twin not in outside
            if added:
                outside.add(twin)
            yield from rec(idx + 1)
            inside.discard(x)
            if added:
                outside.discard(twin)
        if twin is None:
            outside.add(x)
            yield from rec(idx + 1)
            outside.discard(x)
        elif twin not in outside and twin != x:
            # twin forced in puts everything below it in, so no excluded z may lie below it
            if any(leq(z, twin) for z in chosen_out) or leq(x, twin):
                return
            outside.add(x)
            chosen_out.append(x)
            added = twin not in inside
            if added:
                inside.add(twin)
            yield from rec(idx + 1)
            chosen_out.pop()
            outside.discard(x)
            if added:
                inside.discard(twin)

    yield from rec(0)


def _expand_orbits(box: Box3, cls: SymmetryClass, reps: Set[Cube]) -> Set[Cube]:
    canon = _orbit_canon(cls)
    return {(i, j, k) for i in range(1, box.a + 1) for j in range(1, box.b + 1)
            for k in range(1, box.c + 1) if canon((i, j, k)) in reps}


def enumerate_class(cls: SymmetryClass, box: Box3,
                    on_found: Optional[Callable[[], None]] = None) -> List[PlanePartition]:
    """All plane partitions of the class in the box, lexicographically descending.

    The plain class walks iter_box; symmetric classes enumerate
    symmetric order ideals directly instead of filtering the whole box.
    on_found is called once per partition kept.
    """
    _require_shape(box, cls)
    if cls is SymmetryClass.PLAIN:
        found = []
        for p in iter_box(box):
            found.append(p)
            if on_found:
                on_found()
        return found
    found = []
    for reps in _symmetric_ideals(box, cls):
        p = from_cubes(box, _expand_orbits(box, cls, reps))
        if has_symmetry(p, cls):
            found.append(p)
            if on_found:
                on_found()
        else:
            logger.warning(f"Discarding non-{cls.value} ideal {p.heights}")
    found.sort(key=lambda q: q.flat(), reverse=True)
    logger.info(f"Enumerated {len(found)} {cls.value} partitions in box {box.as_tuple()}")
    return found
