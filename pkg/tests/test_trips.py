import pytest

from src.plane_partitions import Box3, SymmetryClass, empty, enumerate_box, enumerate_class
from src.tableaux import format_word
from src.trips import (
    TripError,
    all_trips,
    boundary_word,
    separation_label_hourglass,
    separation_label_simple,
    separation_labels,
    side_of,
    side_routes,
    trip_path,
    trip_permutation,
)
from src.web_builder import HOURGLASS, SIMPLE, restrict_to_fundamental_domain, web_from_plane_partition

TRIP1_ROUTES = {("NE", "SE"): 1, ("E", "NW"): 1, ("SE", "W"): 1,
                ("W", "NE"): 1, ("NW", "SW"): 1, ("SW", "E"): 1}
TRIP2_ROUTES = {("NE", "SW"): 1, ("E", "W"): 1, ("SE", "NW"): 1,
                ("SW", "NE"): 1, ("W", "E"): 1, ("NW", "SE"): 1}


def _check_laws(web):
    n = web.n
    t1, t2, t3 = (trip_permutation(web, a) for a in (1, 2, 3))
    for perm in (t1, t2, t3):
        assert sorted(perm) == list(range(1, n + 1))
    assert all(t1[t3[i] - 1] == i + 1 for i in range(n))
    assert all(t2[t2[i] - 1] == i + 1 for i in range(n))


@pytest.mark.parametrize("dims", [(1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 2, 2), (3, 1, 2), (3, 3, 1)])
def test_trip_laws_on_full_webs(dims):
    for p in enumerate_box(Box3(*dims)):
        _check_laws(web_from_plane_partition(p))


@pytest.mark.parametrize("cls,n", [
    (SymmetryClass.SPP, 1),
    (SymmetryClass.SPP, 2),
    (SymmetryClass.CSPP, 2),
    (SymmetryClass.TSPP, 2),
    (SymmetryClass.TSSCPP, 2),
    (SymmetryClass.CSPP, 3),
    (SymmetryClass.TSPP, 3),
    (SymmetryClass.TSSCPP, 4),
])
def test_trip_laws_on_restricted_webs(cls, n):
    for p in enumerate_class(cls, Box3(n, n, n)):
        _check_laws(restrict_to_fundamental_domain(p, cls))


def test_unit_box_routes(single_cube_web, empty_cube_web):
    for web in (single_cube_web, empty_cube_web):
        assert side_routes(web, 1) == TRIP1_ROUTES
        assert side_routes(web, 2) == TRIP2_ROUTES


def test_trip_ends_on_the_boundary(single_cube_web):
    for (a, start), path in all_trips(single_cube_web).items():
        assert path.start == start and path.index == a
        assert path.points[0] == single_cube_web.vertices[start].position
        assert path.points[-1] == single_cube_web.vertices[path.end].position


def test_trip_arguments(single_cube_web):
    with pytest.raises(TripError):
        trip_permutation(single_cube_web, 4)
    internal = next(v.id for v in single_cube_web.vertices if v.kind == "internal")
    with pytest.raises(TripError):
        trip_path(single_cube_web, internal, 1)


def test_single_box_word(single_box, single_cube_web, empty_cube_web):
    assert format_word(boundary_word(single_cube_web)) == single_box["word"]
    assert format_word(boundary_word(empty_cube_web)) == single_box["word"]


def test_unit_box_sides(single_cube_web):
    sides = [side_of(single_cube_web, v) for v in single_cube_web.boundary]
    assert sides == ["NE", "E", "SE", "SW", "W", "NW"]


def test_labels_at_each_vertex_partition_the_colors():
    for p in enumerate_box(Box3(2, 2, 1)):
        web = web_from_plane_partition(p)
        labels = separation_labels(web)
        for v in web.vertices:
            if v.kind != "internal":
                continue
            used = []
            for e in web.incident(v.id):
                lab = labels[e]
                used.extend(sorted(lab) if isinstance(lab, frozenset) else [lab])
            assert sorted(used) == [1, 2, 3, 4]


def test_unit_box_internal_labels(single_box, single_cube_web, unit_box_edges):
    labels = separation_labels(single_cube_web)
    for name, expected in single_box["labels"].items():
        lab = labels[unit_box_edges[name]]
        got = sorted(lab) if isinstance(lab, frozenset) else [lab]
        assert got == expected, name
    assert single_cube_web.edges[unit_box_edges["top"]].kind == HOURGLASS
    assert single_cube_web.edges[unit_box_edges["NE"]].kind == SIMPLE


def test_label_kinds(single_cube_web):
    for e in single_cube_web.edges:
        if e.kind == SIMPLE:
            assert 1 <= separation_label_simple(single_cube_web, e.id) <= 4
            with pytest.raises(TripError):
                separation_label_hourglass(single_cube_web, e.id)
        else:
            assert e.kind == HOURGLASS
            assert len(separation_label_hourglass(single_cube_web, e.id)) == 2
            with pytest.raises(TripError):
                separation_label_simple(single_cube_web, e.id)


@pytest.mark.parametrize("a,c", [(1, 1), (2, 1), (1, 2)])
def test_full_box_word_is_shared_by_every_partition(a, c):
    words = {boundary_word(web_from_plane_partition(p)) for p in enumerate_box(Box3(a, a, c))}
    assert len(words) == 1


def test_restricted_word_carries_split_pairs():
    p = empty(Box3(1, 1, 1))
    word = boundary_word(restrict_to_fundamental_domain(p, SymmetryClass.SPP))
    assert len(word.letters) == 6
    assert len(word.pair_marks) == 1
