"""
Boundary words of symmetric plane partitions.

Each restricted web reads a lattice word of a fixed shape: a block of
letters that never changes (the NE side of the hexagon), followed by the
cut blocks whose tokens vary with the partition. Generators, validators and
closed-form counts live here, next to the census that checks them against
actual webs.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from more_itertools import distinct_permutations

from .config import get_threads
from .plane_partitions import Box3, PlanePartition, SymmetryClass, enumerate_class
from .tableaux import LatticeWord, Token, WordError
from .trips import boundary_word
from .web_builder import restrict_to_fundamental_domain

logger = logging.getLogger(__name__)
logger.setLevel(logging.WARNING)

WORD_CLASSES = (SymmetryClass.SPP, SymmetryClass.CSPP, SymmetryClass.TSPP, SymmetryClass.TSSCPP)

ONE, TWO, FOUR = (1,), (2,), (4,)
MINUS_ONE, MINUS_FOUR = (-1,), (-4,)
PAIR_23, PAIR_34, PAIR_M31 = (2, 3), (3, 4), (-3, -1)


@dataclass(frozen=True)
class ClassWordSpec:
    cls: SymmetryClass
    a: int = 0
    c: int = 0
    d: int = 0

    def __post_init__(self):
        if self.cls not in WORD_CLASSES:
            raise WordError(f"No boundary-word theorem for class {self.cls.value}")
        if min(self.a, self.c, self.d) < 0:
            raise WordError(f"Word parameters must be nonnegative, got a={self.a} c={self.c} d={self.d}")
        if self.cls is SymmetryClass.TSSCPP and self.d < 1:
            raise WordError(f"TSSCPP words need d >= 1, got {self.d}")
        if self.cls is SymmetryClass.SPP and self.a == 0 and self.c > 0:
            raise WordError(f"SPP words need a >= 1 when c > 0, got a=0 c={self.c}")

    @classmethod
    def for_box(cls, sym: SymmetryClass, box: Box3) -> "ClassWordSpec":
        if sym is SymmetryClass.SPP:
            return cls(sym, a=box.a, c=box.c)
        if sym is SymmetryClass.TSSCPP:
            return cls(sym, d=box.a // 2)
        return cls(sym, a=box.a)

    def box(self) -> Box3:
        if self.cls is SymmetryClass.SPP:
            return Box3(self.a, self.a, self.c)
        if self.cls is SymmetryClass.TSSCPP:
            return Box3(2 * self.d, 2 * self.d, 2 * self.d)
        return Box3(self.a, self.a, self.a)

    def describe(self) -> str:
        if self.cls is SymmetryClass.SPP:
            return f"spp a={self.a} c={self.c}"
        if self.cls is SymmetryClass.TSSCPP:
            return f"tsscpp d={self.d}"
        return f"{self.cls.value} a={self.a}"


def _word(tokens: Sequence[Token]) -> LatticeWord:
    return LatticeWord.from_tokens(tokens, 4)


def full_box_word(a: int, c: int) -> LatticeWord:
    """Word of every full-hexagon web with a = b."""
    return _word([ONE] * a + [MINUS_FOUR] * c + [TWO] * a + [(-2,)] * a + [FOUR] * c + [MINUS_ONE] * a)


def _spp_prefix(spec: ClassWordSpec) -> List[Token]:
    return [ONE] * spec.a + [MINUS_FOUR] * spec.c + [TWO] * spec.a


def _cspp_prefix(spec: ClassWordSpec) -> List[Token]:
    return [ONE] * spec.a + [MINUS_FOUR] * spec.a


def _cspp_partner(block3: Sequence[Token]) -> List[Token]:
    """(3,4) at position q exactly when (-3,-1) sits at position a-q-1."""
    a = len(block3)
    return [PAIR_34 if block3[a - q - 1] == PAIR_M31 else FOUR for q in range(a)]


def _tsscpp_prefix(spec: ClassWordSpec) -> List[Token]:
    alternation = [TWO, MINUS_FOUR] * (spec.d - 1) + [TWO]
    return [ONE] * spec.d + alternation


def _is_ballot(block: Sequence[Token]) -> bool:
    """4 . block . (3,4) never has more (3,4)s than 4s on a prefix."""
    fours, pairs = 1, 0
    for tok in list(block) + [PAIR_34]:
        if tok == FOUR:
            fours += 1
        else:
            pairs += 1
        if pairs > fours:
            return False
    return True


def tspp_word_from_diagonal(a: int, diagonal: Sequence[int]) -> LatticeWord:
    """TSPP word from the diagonal heights d_1 >= ... >= d_a of the partition.

    Each i with d_i >= i puts a (3,4) at position d_i - i of the last block,
    counted from the center of the hexagon; each i with d_i < i puts a (2,3)
    at position a + d_i - i of the middle block.
    """
    if len(diagonal) != a:
        raise WordError(f"Diagonal must have {a} entries, got {len(diagonal)}")
    middle, last = [TWO] * a, [FOUR] * a
    for i, di in enumerate(diagonal, start=1):
        if di >= i:
            last[di - i] = PAIR_34
        else:
            middle[a + di - i] = PAIR_23
    return _word([ONE] * a + middle + last)


def is_realizable_diagonal(a: int, diagonal: Sequence[int]) -> bool:
    if len(diagonal) != a or any(not 0 <= x <= a for x in diagonal):
        return False
    if any(diagonal[i] < diagonal[i + 1] for i in range(a - 1)):
        return False
    for i, di in enumerate(diagonal, start=1):
        for j in range(1, min(i, di) + 1):
            if diagonal[j - 1] < i:
                return False
    return True


def realizable_tspp_diagonals(a: int) -> List[Tuple[int, ...]]:
    """Weakly decreasing diagonals in [0, a] met by some TSPP, in descending order."""
    found = []

    def rec(prefix: List[int], cap: int) -> None:
        if len(prefix) == a:
            if is_realizable_diagonal(a, prefix):
                found.append(tuple(prefix))
            return
        for x in range(cap, -1, -1):
            rec(prefix + [x], x)

    rec([], a)
    return found


def tspp_diagonal_of_word(a: int, word: LatticeWord) -> Optional[Tuple[int, ...]]:
    """Decode the diagonal from a TSPP word, or None if the word has the wrong shape."""
    tokens = word.tokens()
    if len(tokens) != 3 * a or any(t != ONE for t in tokens[:a]):
        return None
    middle, last = tokens[a:2 * a], tokens[2 * a:]
    if any(t not in (TWO, PAIR_23) for t in middle) or any(t not in (FOUR, PAIR_34) for t in last):
        return None
    offsets = [p for p, t in enumerate(last) if t == PAIR_34]
    offsets += [p - a for p, t in enumerate(middle) if t == PAIR_23]
    if len(offsets) != a:
        return None
    offsets.sort(reverse=True)
    return tuple(e + i for i, e in enumerate(offsets, start=1))


def tspp_window_condition(a: int, word: LatticeWord) -> bool:
    """The stack-height window inequality between the middle and last blocks.

    For m the number of 2s in the middle block and 0 <= i <= a-m-1, the
    (2,3)s at middle positions a-m-i .. a-m are at most the 4s at last-block
    positions 0 .. i. Reported alongside the diagonal test, which decides
    membership.
    """
    tokens = word.tokens()
    middle, last = tokens[a:2 * a], tokens[2 * a:3 * a]
    m = sum(1 for t in middle if t == TWO)
    for i in range(a - m):
        window = middle[a - m - i:min(a - m, a - 1) + 1]
        if sum(1 for t in window if t == PAIR_23) > sum(1 for t in last[:i + 1] if t == FOUR):
            return False
    return True


def generate_words(spec: ClassWordSpec) -> Set[LatticeWord]:
    """All boundary words of the class with the given parameters."""
    words: Set[LatticeWord] = set()
    if spec.cls is SymmetryClass.SPP:
        prefix = _spp_prefix(spec)
        for block in distinct_permutations([FOUR] * spec.c + [PAIR_34] * spec.a):
            words.add(_word(prefix + list(block)))
    elif spec.cls is SymmetryClass.CSPP:
        prefix = _cspp_prefix(spec)
        for m in range(spec.a + 1):
            for block3 in distinct_permutations([PAIR_M31] * m + [MINUS_ONE] * (spec.a - m)):
                words.add(_word(prefix + list(block3) + _cspp_partner(block3)))
    elif spec.cls is SymmetryClass.TSPP:
        for diagonal in realizable_tspp_diagonals(spec.a):
            words.add(tspp_word_from_diagonal(spec.a, diagonal))
    else:
        prefix = _tsscpp_prefix(spec)
        n = spec.d - 1
        for block in distinct_permutations([FOUR] * n + [PAIR_34] * n):
            if _is_ballot(block):
                words.add(_word(prefix + list(block) + [PAIR_34]))
    logger.info(f"Generated {len(words)} words for {spec.describe()}")
    return words


def validate_word(spec: ClassWordSpec, word: LatticeWord) -> bool:
    """Membership in generate_words(spec), decided from the word's shape."""
    if word.rank != 4:
        return False
    tokens = list(word.tokens())
    if spec.cls is SymmetryClass.SPP:
        prefix = _spp_prefix(spec)
        block = tokens[len(prefix):]
        return (tokens[:len(prefix)] == prefix and len(block) == spec.a + spec.c
                and block.count(PAIR_34) == spec.a and block.count(FOUR) == spec.c)
    if spec.cls is SymmetryClass.CSPP:
        prefix = _cspp_prefix(spec)
        a = spec.a
        block3 = tokens[2 * a:3 * a]
        return (len(tokens) == 4 * a and tokens[:2 * a] == prefix
                and all(t in (PAIR_M31, MINUS_ONE) for t in block3)
                and tokens[3 * a:] == _cspp_partner(block3))
    if spec.cls is SymmetryClass.TSPP:
        diagonal = tspp_diagonal_of_word(spec.a, word)
        return (diagonal is not None and is_realizable_diagonal(spec.a, diagonal)
                and tspp_word_from_diagonal(spec.a, diagonal) == word)
    prefix = _tsscpp_prefix(spec)
    n = spec.d - 1
    block = tokens[len(prefix):-1]
    return (len(tokens) == len(prefix) + 2 * n + 1 and tokens[:len(prefix)] == prefix
            and tokens[-1] == PAIR_34 and block.count(FOUR) == n and block.count(PAIR_34) == n
            and _is_ballot(block))


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def count_words_formula(spec: ClassWordSpec) -> int:
    """Closed-form number of distinct words."""
    if spec.cls is SymmetryClass.SPP:
        return math.comb(spec.a + spec.c, spec.a)
    if spec.cls is SymmetryClass.CSPP:
        return 2 ** spec.a
    if spec.cls is SymmetryClass.TSPP:
        a = spec.a
        if a == 0:
            return 1
        return 1 + math.comb(2 * a - 1, a - 1) + sum(
            math.comb(2 * (a - l) - 1, a - l - 1) for l in range(1, a))
    return catalan(spec.d)


def _restricted_word(p: PlanePartition, cls: SymmetryClass) -> LatticeWord:
    return boundary_word(restrict_to_fundamental_domain(p, cls))


def census(cls: SymmetryClass, box: Box3, threads: Optional[int] = None,
           on_done: Optional[Callable[[], None]] = None) -> Tuple[List[LatticeWord], int]:
    """Words of every partition of the class in the box, and how many are distinct.

    Webs are built on a pool of threads workers (HOURGLASS_THREADS by
    default); words stay in enumeration order.
    """
    members = enumerate_class(cls, box)
    words = []
    with ThreadPoolExecutor(max_workers=threads or get_threads()) as executor:
        for word in executor.map(lambda p: _restricted_word(p, cls), members):
            words.append(word)
            if on_done:
                on_done()
    distinct = len(set(words))
    logger.info(f"Census {cls.value} {box.as_tuple()}: {len(words)} webs, {distinct} distinct words")
    return words, distinct


def census_by_partition(cls: SymmetryClass, box: Box3) -> Dict[Tuple[int, ...], LatticeWord]:
    return {p.flat(): _restricted_word(p, cls)
            for p in enumerate_class(cls, box)}
