import pytest

from conftest import load_golden
from src.plane_partitions import Box3, SymmetryClass, enumerate_class
from src.projection import (
    PLAIN,
    WHITE_MID,
    MarkedNonCrossingMatching,
    MatchingEdge,
    ProjectionError,
    matching_to_json,
    matching_validate,
    project_plane_partition,
    project_word,
    sl2_growth,
)
from src.symmetry_words import ClassWordSpec, catalan, generate_words
from src.tableaux import format_word, is_yamanouchi, parse_word

TSSCPP3 = ClassWordSpec(SymmetryClass.TSSCPP, d=3)


def _edges(m):
    return {(e.i, e.j, e.mark) for e in m.edges}


def test_tsscpp_word_projects_to_rank_two():
    small = load_golden("class_words.json")["tsscpp_small"]
    reduced = project_word(TSSCPP3, parse_word(small["word"]))
    assert reduced.word.rank == 2
    assert format_word(reduced.word) == small["projected"]
    assert _edges(sl2_growth(reduced.word)) == {
        (1, 6, PLAIN), (2, 5, PLAIN), (3, 4, WHITE_MID), (7, 8, WHITE_MID)}


def test_tspp_word_projects_to_rank_three():
    golden = load_golden("tspp_projection.json")
    reduced = project_word(ClassWordSpec(SymmetryClass.TSPP, a=golden["a"]), parse_word(golden["word"]))
    assert reduced.word.rank == 3
    assert format_word(reduced.word) == golden["projected"]
    assert len(reduced.kept) == len(reduced.word.letters)


@pytest.mark.parametrize("text,projected,edges", [
    ("1 -4 2 4 (3,4)", "-2 2 (1,2)", {(1, 2, PLAIN), (3, 4, WHITE_MID)}),
    ("1 -4 2 (3,4) 4", "-2 (1,2) 2", {(1, 4, PLAIN), (2, 3, WHITE_MID)}),
])
def test_spp_projection(text, projected, edges):
    reduced = project_word(ClassWordSpec(SymmetryClass.SPP, a=1, c=1), parse_word(text))
    assert format_word(reduced.word) == projected
    assert _edges(sl2_growth(reduced.word)) == edges
    assert reduced.source_type_vector() == tuple(1 if x > 0 else -1 for x in reduced.word.letters)


@pytest.mark.parametrize("spec", [
    ClassWordSpec(SymmetryClass.SPP, a=2, c=2),
    ClassWordSpec(SymmetryClass.TSPP, a=3),
    ClassWordSpec(SymmetryClass.TSSCPP, d=4),
])
def test_projection_is_injective(spec):
    words = generate_words(spec)
    images = {project_word(spec, w).word for w in words}
    assert len(images) == len(words)
    assert all(is_yamanouchi(w) for w in images)


def test_cspp_has_no_projection():
    spec = ClassWordSpec(SymmetryClass.CSPP, a=1)
    with pytest.raises(ProjectionError, match="CSPP"):
        project_word(spec, parse_word("1 -4 -1 4"))
    p = enumerate_class(SymmetryClass.CSPP, Box3(1, 1, 1))[0]
    with pytest.raises(ProjectionError):
        project_plane_partition(p, SymmetryClass.CSPP)


def test_foreign_word_is_rejected():
    with pytest.raises(ProjectionError):
        project_word(TSSCPP3, parse_word("1 -4 2 -2 4 -1"))


def test_growth_needs_balanced_rank_two_words():
    with pytest.raises(ProjectionError):
        sl2_growth(parse_word("1 2", rank=3))
    with pytest.raises(ProjectionError):
        sl2_growth(parse_word("2 1", rank=2))
    with pytest.raises(ProjectionError):
        sl2_growth(parse_word("1 1 2", rank=2))


def test_black_mid_mark():
    m = sl2_growth(parse_word("-2 -1", rank=2))
    assert _edges(m) == {(1, 2, "black")}
    assert matching_validate(m)


def test_matching_validation():
    m = sl2_growth(parse_word("1 1 2 2", rank=2))
    assert matching_validate(m)
    crossing = MarkedNonCrossingMatching(m.points, (MatchingEdge(1, 3, PLAIN), MatchingEdge(2, 4, PLAIN)))
    assert not matching_validate(crossing)
    mismarked = MarkedNonCrossingMatching(m.points, tuple(MatchingEdge(e.i, e.j, PLAIN) for e in m.edges))
    assert not matching_validate(mismarked)
    partial = MarkedNonCrossingMatching(m.points, m.edges[:1])
    assert not matching_validate(partial)


def test_matching_json():
    data = matching_to_json(sl2_growth(parse_word("1 2", rank=2)))
    assert data == {"points": [{"color": "black", "label": 1}, {"color": "black", "label": 2}],
                    "edges": [{"ends": [1, 2], "mark": "white"}]}


def test_tsscpp_matchings_match_golden():
    golden = {frozenset((e["ends"][0], e["ends"][1], e["mark"]) for e in g["edges"])
              for g in load_golden("tsscpp6_matchings.json")["matchings"]}
    found = set()
    for p in enumerate_class(SymmetryClass.TSSCPP, Box3(6, 6, 6)):
        word, reduced, matching = project_plane_partition(p, SymmetryClass.TSSCPP)
        assert reduced.source == word
        assert matching_validate(matching)
        found.add(matching.edge_set())
    assert len(found) == catalan(3)
    assert found == golden
