import pytest

from conftest import load_golden
from src.plane_partitions import Box3, SymmetryClass
from src.symmetry_words import (
    ClassWordSpec,
    catalan,
    census,
    census_by_partition,
    count_words_formula,
    full_box_word,
    generate_words,
    is_realizable_diagonal,
    realizable_tspp_diagonals,
    tspp_diagonal_of_word,
    tspp_window_condition,
    tspp_word_from_diagonal,
    validate_word,
)
from src.tableaux import WordError, format_word, is_yamanouchi, parse_word


@pytest.fixture(scope="module")
def class_words():
    return load_golden("class_words.json")


def test_full_box_word(single_box):
    assert format_word(full_box_word(1, 1)) == single_box["word"]
    assert format_word(full_box_word(2, 1)) == "1 1 -4 2 2 -2 -2 4 -1 -1"


@pytest.mark.parametrize("spec", [
    ClassWordSpec(SymmetryClass.SPP, a=2, c=1),
    ClassWordSpec(SymmetryClass.SPP, a=1, c=3),
    ClassWordSpec(SymmetryClass.CSPP, a=3),
    ClassWordSpec(SymmetryClass.TSPP, a=2),
    ClassWordSpec(SymmetryClass.TSSCPP, d=3),
    ClassWordSpec(SymmetryClass.TSSCPP, d=4),
])
def test_generated_words_are_valid_lattice_words(spec):
    words = generate_words(spec)
    assert len(words) == count_words_formula(spec)
    for w in words:
        assert validate_word(spec, w)
        assert is_yamanouchi(w)


def test_spp_counts_are_binomials():
    assert count_words_formula(ClassWordSpec(SymmetryClass.SPP, a=2, c=2)) == 6
    assert len(generate_words(ClassWordSpec(SymmetryClass.SPP, a=2, c=2))) == 6


def test_cspp_counts_are_powers_of_two():
    for a in range(1, 5):
        assert len(generate_words(ClassWordSpec(SymmetryClass.CSPP, a=a))) == 2 ** a


def test_tsscpp_counts_are_catalan():
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    for d in range(1, 5):
        assert len(generate_words(ClassWordSpec(SymmetryClass.TSSCPP, d=d))) == catalan(d)


def test_tspp_diagonals():
    assert len(realizable_tspp_diagonals(1)) == 2
    assert len(realizable_tspp_diagonals(2)) == 5
    assert len(realizable_tspp_diagonals(3)) == 14
    assert count_words_formula(ClassWordSpec(SymmetryClass.TSPP, a=2)) == 5
    assert is_realizable_diagonal(4, (4, 3, 1, 0))
    assert not is_realizable_diagonal(2, (1, 2))
    assert not is_realizable_diagonal(2, (2, 3))


@pytest.mark.parametrize("a,accepted,total", [(1, 2, 2), (2, 5, 5), (3, 13, 14), (4, 35, 42)])
def test_window_condition_against_class_words(a, accepted, total):
    words = generate_words(ClassWordSpec(SymmetryClass.TSPP, a=a))
    assert len(words) == total
    assert sum(1 for w in words if tspp_window_condition(a, w)) == accepted


def test_tspp_example_word():
    golden = load_golden("tspp_projection.json")
    word = tspp_word_from_diagonal(golden["a"], golden["diagonal"])
    assert format_word(word) == golden["word"]
    assert tspp_diagonal_of_word(golden["a"], word) == tuple(golden["diagonal"])
    assert validate_word(ClassWordSpec(SymmetryClass.TSPP, a=4), word)


def test_known_words_are_class_words(class_words):
    cspp = ClassWordSpec(SymmetryClass.CSPP, a=class_words["cspp"]["a"])
    assert validate_word(cspp, parse_word(class_words["cspp"]["word"]))
    assert parse_word(class_words["cspp"]["word"]) in generate_words(cspp)
    tsscpp = ClassWordSpec(SymmetryClass.TSSCPP, d=class_words["tsscpp"]["d"])
    assert validate_word(tsscpp, parse_word(class_words["tsscpp"]["word"]))


def test_validate_rejects_foreign_words(class_words):
    tsscpp = ClassWordSpec(SymmetryClass.TSSCPP, d=3)
    word = parse_word(class_words["tsscpp_small"]["word"])
    assert validate_word(tsscpp, word)
    assert not validate_word(ClassWordSpec(SymmetryClass.TSSCPP, d=4), word)
    assert not validate_word(ClassWordSpec(SymmetryClass.CSPP, a=3), word)
    # two leading pairs break the ballot condition
    broken = parse_word("1 1 1 2 -4 2 -4 2 (3,4) (3,4) 4 4 (3,4)")
    assert not validate_word(tsscpp, broken)


def test_spec_parameters():
    assert ClassWordSpec.for_box(SymmetryClass.SPP, Box3(2, 2, 3)) == ClassWordSpec(SymmetryClass.SPP, a=2, c=3)
    assert ClassWordSpec.for_box(SymmetryClass.TSSCPP, Box3(6, 6, 6)).d == 3
    assert ClassWordSpec(SymmetryClass.TSSCPP, d=3).box() == Box3(6, 6, 6)
    with pytest.raises(WordError):
        ClassWordSpec(SymmetryClass.SCPP, a=2)
    with pytest.raises(WordError):
        ClassWordSpec(SymmetryClass.TSSCPP, d=0)
    with pytest.raises(WordError, match="a >= 1"):
        ClassWordSpec(SymmetryClass.SPP, a=0, c=2)
    assert generate_words(ClassWordSpec(SymmetryClass.SPP, a=0, c=0)) == {parse_word("")}


@pytest.mark.parametrize("spec", [
    ClassWordSpec(SymmetryClass.SPP, a=1, c=1),
    ClassWordSpec(SymmetryClass.SPP, a=2, c=1),
    ClassWordSpec(SymmetryClass.CSPP, a=2),
    ClassWordSpec(SymmetryClass.TSPP, a=2),
    ClassWordSpec(SymmetryClass.TSSCPP, d=1),
    ClassWordSpec(SymmetryClass.TSSCPP, d=2),
])
def test_census_matches_generator(spec):
    words, distinct = census(spec.cls, spec.box())
    assert set(words) == generate_words(spec)
    assert distinct == count_words_formula(spec)


def test_census_does_not_depend_on_workers():
    seen = []
    one, distinct = census(SymmetryClass.TSPP, Box3(3, 3, 3), threads=1, on_done=lambda: seen.append(1))
    many, _ = census(SymmetryClass.TSPP, Box3(3, 3, 3), threads=3)
    assert one == many
    assert len(seen) == len(one) == 16
    assert distinct == 14


def test_census_by_partition_keys():
    by_partition = census_by_partition(SymmetryClass.TSPP, Box3(2, 2, 2))
    assert len(by_partition) == 5
    assert all(len(flat) == 4 for flat in by_partition)
