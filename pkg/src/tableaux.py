"""
Lattice words and r-row oscillating tableaux.

A lattice word is a sequence of nonzero letters in [-r, r]; letter i adds a
box to row i and letter -i removes one. Rows are generalized partitions:
weakly decreasing integer vectors, with negative parts drawn to the left of
the starting line.
"""

import logging
import random
import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Sequence, Tuple

logger = logging.getLogger(__name__)
logger.setLevel(logging.WARNING)

Token = Tuple[int, ...]
Shape = Tuple[int, ...]
Cell = Tuple[int, int]  # (signed column, signed entry)

_TOKEN_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)|(-?\d+)")


class WordError(ValueError):
    """Bad token syntax, a letter out of range or a word outside its class."""


@dataclass(frozen=True)
class LatticeWord:
    rank: int
    letters: Tuple[int, ...]
    pair_marks: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        for k, x in enumerate(self.letters):
            if x == 0 or abs(x) > self.rank:
                raise WordError(f"Letter {x} at position {k + 1} is outside ±1..±{self.rank}")
        for i in self.pair_marks:
            if not 0 <= i < len(self.letters) - 1:
                raise WordError(f"Pair mark {i} is out of range for a word of length {len(self.letters)}")
            if i + 1 in self.pair_marks:
                raise WordError(f"Pair marks {i} and {i + 1} overlap")

    def __len__(self) -> int:
        return len(self.letters)

    def tokens(self) -> Tuple[Token, ...]:
        out, k = [], 0
        while k < len(self.letters):
            if k in self.pair_marks:
                out.append((self.letters[k], self.letters[k + 1]))
                k += 2
            else:
                out.append((self.letters[k],))
                k += 1
        return tuple(out)

    @classmethod
    def from_tokens(cls, tokens: Sequence[Token], rank: int = 4) -> "LatticeWord":
        letters: List[int] = []
        marks = set()
        for tok in tokens:
            if len(tok) == 2:
                marks.add(len(letters))
            elif len(tok) != 1:
                raise WordError(f"Token {tok} must hold one or two letters")
            letters.extend(tok)
        return cls(rank, tuple(letters), frozenset(marks))

    def to_json(self) -> Dict:
        return {"rank": self.rank, "letters": list(self.letters), "pair_marks": sorted(self.pair_marks),
                "tokens": format_word(self)}


def parse_word(text: str, rank: int = 4) -> LatticeWord:
    """Parse whitespace-separated tokens such as '1 -4 (3,4) (-3,-1)'.

    Raises:
        WordError: on anything that is not a signed integer or a parenthesized pair
    """
    tokens: List[Token] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise WordError(f"Cannot parse word token at '{text[pos:pos + 10]}'")
        end = m.end()
        if end < len(text) and not text[end].isspace():
            raise WordError(f"Tokens must be separated by whitespace near '{text[pos:end + 1]}'")
        if m.group(3) is not None:
            tokens.append((int(m.group(3)),))
        else:
            tokens.append((int(m.group(1)), int(m.group(2))))
        pos = end
    return LatticeWord.from_tokens(tokens, rank)


def format_word(word: LatticeWord) -> str:
    return " ".join(str(t[0]) if len(t) == 1 else f"({t[0]},{t[1]})" for t in word.tokens())


def _step(shape: List[int], letter: int) -> None:
    row = abs(letter) - 1
    shape[row] += 1 if letter > 0 else -1


def _is_partition(shape: Sequence[int]) -> bool:
    return all(shape[i] >= shape[i + 1] for i in range(len(shape) - 1))


def is_yamanouchi(word: LatticeWord) -> bool:
    """Every prefix keeps the row counts weakly decreasing."""
    shape = [0] * word.rank
    for x in word.letters:
        _step(shape, x)
        if not _is_partition(shape):
            return False
    return True


def type_vector(word: LatticeWord) -> Tuple[int, ...]:
    return tuple(1 if x > 0 else -1 for x in word.letters)


def final_shape(word: LatticeWord) -> Shape:
    shape = [0] * word.rank
    for x in word.letters:
        _step(shape, x)
    return tuple(shape)


@dataclass(frozen=True)
class OscillatingTableau:
    rank: int
    shapes: Tuple[Shape, ...]
    filling: Tuple[Tuple[Cell, ...], ...]

    def entries(self, row: int) -> List[int]:
        """Signed entries of a 1-indexed row, in placement order."""
        return [e for _, e in self.filling[row - 1]]

    def to_json(self) -> Dict:
        return {
            "r": self.rank,
            "shapes": [list(s) for s in self.shapes],
            "filling": [[e for _, e in row] for row in self.filling],
            "columns": [[c for c, _ in row] for row in self.filling],
        }

    @classmethod
    def from_json(cls, data: Dict) -> "OscillatingTableau":
        try:
            rows = [tuple(zip(cols, ents)) for cols, ents in zip(data["columns"], data["filling"])]
            return cls(data["r"], tuple(tuple(s) for s in data["shapes"]), tuple(rows))
        except (KeyError, TypeError) as e:
            raise WordError(f"Malformed tableau JSON: {e}")


def word_to_tableau(word: LatticeWord) -> OscillatingTableau:
    """Grow the oscillating tableau of a Yamanouchi word.

    A barred letter goes into the rightmost box of its row that holds a
    positive entry, or opens a box left of the starting line. An unbarred
    letter goes into the leftmost box holding a negative entry, or opens a
    box right of the line.

    Raises:
        WordError: if the word is not Yamanouchi
    """
    shape = [0] * word.rank
    shapes = [tuple(shape)]
    rows: List[List[Cell]] = [[] for _ in range(word.rank)]
    for k, x in enumerate(word.letters, start=1):
        j = abs(x) - 1
        lam = shape[j]
        if x > 0:
            column = lam if lam < 0 else lam + 1
        else:
            column = lam if lam > 0 else lam - 1
        rows[j].append((column, k if x > 0 else -k))
        _step(shape, x)
        if not _is_partition(shape):
            raise WordError(f"Word is not Yamanouchi: prefix of length {k} reaches shape {tuple(shape)}")
        shapes.append(tuple(shape))
    return OscillatingTableau(word.rank, tuple(shapes), tuple(tuple(r) for r in rows))


def tableau_to_word(tableau: OscillatingTableau) -> LatticeWord:
    """Read the word off consecutive shape differences.

    Raises:
        WordError: if two consecutive shapes do not differ by one box, or the
            filling disagrees with the one the word grows
    """
    letters = []
    for k in range(1, len(tableau.shapes)):
        diff = [b - a for a, b in zip(tableau.shapes[k - 1], tableau.shapes[k])]
        moved = [(j, d) for j, d in enumerate(diff) if d != 0]
        if len(moved) != 1 or abs(moved[0][1]) != 1:
            raise WordError(f"Shapes {k - 1} and {k} do not differ by a single box")
        j, d = moved[0]
        letters.append(d * (j + 1))
    word = LatticeWord(tableau.rank, tuple(letters))
    if any(tableau.shapes[0]):
        raise WordError("Tableau must start from the empty shape")
    if word_to_tableau(word) != tableau:
        raise WordError("Tableau filling is inconsistent with its shape sequence")
    return word


def random_yamanouchi_word(rng: random.Random, rank: int, length: int) -> LatticeWord:
    """Uniform choice among the legal steps at each position."""
    shape = [0] * rank
    letters = []
    for _ in range(length):
        choices = []
        for j in range(rank):
            if j == 0 or shape[j - 1] > shape[j]:
                choices.append(j + 1)
            if j == rank - 1 or shape[j] > shape[j + 1]:
                choices.append(-(j + 1))
        x = rng.choice(choices)
        _step(shape, x)
        letters.append(x)
    return LatticeWord(rank, tuple(letters))


def shape_token(shape: Shape) -> str:
    """Compact shape label like '100(-1)'."""
    return "".join(str(v) if v >= 0 else f"({v})" for v in shape)
