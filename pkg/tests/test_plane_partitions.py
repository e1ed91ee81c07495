import pytest

from src.plane_partitions import (
    Box3,
    PlanePartition,
    PlanePartitionError,
    SymmetryClass,
    apply_symmetry_op,
    conjugate,
    empty,
    enumerate_box,
    enumerate_class,
    full,
    has_symmetry,
    is_cyclically_symmetric_by_conjugation,
    iter_box,
    macmahon_count,
    toggle_cube,
    validate,
)


@pytest.mark.parametrize("box,count", [
    ((0, 3, 3), 1),
    ((1, 1, 1), 2),
    ((2, 2, 2), 20),
    ((3, 3, 3), 980),
    ((1, 2, 3), 10),
])
def test_macmahon_formula(box, count):
    assert macmahon_count(Box3(*box)) == count


@pytest.mark.parametrize("box", [(1, 1, 1), (1, 2, 3), (2, 2, 2), (2, 3, 1), (3, 2, 2)])
def test_enumeration_matches_formula(box):
    members = enumerate_box(Box3(*box))
    assert len(members) == macmahon_count(Box3(*box))
    assert len({p.heights for p in members}) == len(members)
    flats = [p.flat() for p in members]
    assert flats == sorted(flats, reverse=True)


def test_box_parse():
    assert Box3.parse("2, 3,4") == Box3(2, 3, 4)
    with pytest.raises(PlanePartitionError):
        Box3.parse("2,3")
    with pytest.raises(PlanePartitionError):
        Box3.parse("a,b,c")
    with pytest.raises(PlanePartitionError):
        Box3(-1, 1, 1)


def test_validate_names_the_offending_cell():
    with pytest.raises(PlanePartitionError, match=r"p_1,2"):
        validate([[0, 1]], Box3(1, 2, 1))
    with pytest.raises(PlanePartitionError, match=r"p_2,1"):
        validate([[1], [2]], Box3(2, 1, 2))
    with pytest.raises(PlanePartitionError, match="outside"):
        validate([[2]], Box3(1, 1, 1))
    with pytest.raises(PlanePartitionError):
        validate([[1, 0]], Box3(2, 2, 1))


def test_json_round_trip():
    p = validate([[2, 1], [1, 0]], Box3(2, 2, 2))
    assert PlanePartition.from_json(p.to_json()) == p
    with pytest.raises(PlanePartitionError):
        PlanePartition.from_json({"heights": [[1]]})


def test_cubes_and_size():
    p = validate([[2, 1], [1, 0]], Box3(2, 2, 2))
    assert p.size() == 4
    assert p.cubes() == {(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)}


def test_toggle_cube():
    box = Box3(1, 1, 1)
    assert toggle_cube(empty(box), 1, 1, 1) == full(box)
    assert toggle_cube(full(box), 1, 1, 1) == empty(box)
    with pytest.raises(PlanePartitionError):
        toggle_cube(empty(Box3(2, 2, 2)), 1, 1, 2)
    with pytest.raises(PlanePartitionError):
        toggle_cube(empty(Box3(2, 2, 2)), 2, 2, 1)
    with pytest.raises(PlanePartitionError):
        toggle_cube(empty(box), 2, 1, 1)


@pytest.mark.parametrize("op,order", [("transpose", 2), ("complement", 2), ("cyclic_rotate", 3)])
def test_symmetry_operations_have_finite_order(op, order):
    for p in enumerate_box(Box3(2, 2, 2)):
        q = p
        for _ in range(order):
            q = apply_symmetry_op(q, op)
        assert q == p


def test_cyclic_rotation_matches_conjugation_rule():
    for p in enumerate_box(Box3(2, 2, 2)):
        assert has_symmetry(p, SymmetryClass.CSPP) == is_cyclically_symmetric_by_conjugation(p)


def test_conjugate():
    assert conjugate((3, 1, 0), 3) == (2, 1, 1)
    assert conjugate((0, 0), 2) == (0, 0)


def test_class_names():
    assert SymmetryClass.from_name("TSPP") is SymmetryClass.TSPP
    with pytest.raises(PlanePartitionError, match="Choose one of"):
        SymmetryClass.from_name("qspp")


def test_class_needs_matching_box():
    with pytest.raises(PlanePartitionError):
        enumerate_class(SymmetryClass.TSSCPP, Box3(3, 3, 3))
    with pytest.raises(PlanePartitionError):
        enumerate_class(SymmetryClass.CSPP, Box3(2, 2, 3))
    with pytest.raises(PlanePartitionError):
        has_symmetry(empty(Box3(1, 2, 2)), SymmetryClass.SPP)


@pytest.mark.parametrize("cls,n,count", [
    (SymmetryClass.CSPP, 1, 2),
    (SymmetryClass.CSPP, 2, 5),
    (SymmetryClass.CSPP, 3, 20),
    (SymmetryClass.TSPP, 1, 2),
    (SymmetryClass.TSPP, 2, 5),
    (SymmetryClass.TSPP, 3, 16),
    (SymmetryClass.TSSCPP, 2, 1),
    (SymmetryClass.TSSCPP, 4, 2),
])
def test_class_counts(cls, n, count):
    assert len(enumerate_class(cls, Box3(n, n, n))) == count


@pytest.mark.parametrize("cls,box", [
    (SymmetryClass.SPP, (2, 2, 2)),
    (SymmetryClass.SPP, (2, 2, 3)),
    (SymmetryClass.SPP, (3, 3, 1)),
    (SymmetryClass.CSPP, (2, 2, 2)),
    (SymmetryClass.TSPP, (3, 3, 3)),
    (SymmetryClass.SCPP, (2, 2, 2)),
    (SymmetryClass.SCPP, (1, 2, 2)),
    (SymmetryClass.TSSCPP, (2, 2, 2)),
])
def test_orbit_enumeration_agrees_with_filtering(cls, box):
    b = Box3(*box)
    direct = {p.heights for p in enumerate_class(cls, b)}
    filtered = {p.heights for p in enumerate_box(b) if has_symmetry(p, cls)}
    assert direct == filtered


@pytest.mark.parametrize("cls,n", [(SymmetryClass.PLAIN, 2), (SymmetryClass.TSPP, 3)])
def test_enumeration_reports_each_partition(cls, n):
    seen = []
    members = enumerate_class(cls, Box3(n, n, n), on_found=lambda: seen.append(1))
    assert len(seen) == len(members)
    if cls is SymmetryClass.PLAIN:
        assert members == list(iter_box(Box3(n, n, n)))
