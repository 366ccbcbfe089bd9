# tests/test_setpart.py
import pytest

from diagram_engine.config import ENUMERATION_CACHE_SIZE

from diagram_engine.core.errors import (
    EmptyBlock,
    NotBrauerGrood,
    OverlappingBlocks,
    ShapeMismatch,
    UncoveredVertex,
    VertexOutOfRange,
)
from diagram_engine.core.setpart import (
    DiagramKind,
    DiagramShape,
    SetPartition,
    classify_bg,
    enumerate_bg,
    enumerate_brauer,
    enumerate_family,
    enumerate_partition_diagrams,
    enumerate_partition_diagrams_bounded,
    identity_diagram,
    make_diagram,
    permutation_diagram,
)


def test_make_diagram_is_canonical():
    """Test blocks are sorted inside and ordered by least element"""
    d = make_diagram(DiagramShape(2, 2), [(4, 2), (3,), (1,)])
    assert d.blocks == ((1,), (2, 4), (3,))
    assert d == make_diagram(DiagramShape(2, 2), [(1,), (3,), (2, 4)])


def test_make_diagram_classifies_kind():
    """Test all-pairs diagrams are Brauer and anything else is general"""
    assert make_diagram(DiagramShape(1, 1), [(1, 2)]).kind == DiagramKind.BRAUER
    assert make_diagram(DiagramShape(1, 1), [(1,), (2,)]).kind == DiagramKind.GENERAL
    assert make_diagram(DiagramShape(0, 0), []).is_brauer


def test_make_diagram_overlapping_blocks():
    """Test a vertex in two blocks is named in the error"""
    with pytest.raises(OverlappingBlocks) as exc:
        make_diagram(DiagramShape(1, 1), [(1, 2), (2,)])
    assert exc.value.vertex == 2
    assert "vertex 2" in str(exc.value)


def test_make_diagram_uncovered_vertex():
    """Test a missing vertex is reported"""
    with pytest.raises(UncoveredVertex) as exc:
        make_diagram(DiagramShape(2, 1), [(1, 2)])
    assert exc.value.vertex == 3


def test_make_diagram_empty_block_and_range():
    """Test empty blocks and out-of-range vertices are rejected"""
    with pytest.raises(EmptyBlock):
        make_diagram(DiagramShape(1, 1), [(1, 2), ()])
    with pytest.raises(VertexOutOfRange):
        make_diagram(DiagramShape(1, 1), [(1, 3)])


def test_validation_errors_are_value_errors():
    """Test validation errors can be caught as ValueError"""
    with pytest.raises(ValueError):
        make_diagram(DiagramShape(1, 1), [(1,)])


def test_negative_shape_rejected():
    """Test negative arities are rejected"""
    with pytest.raises(ShapeMismatch):
        DiagramShape(-1, 2)


def test_restricted_growth_round_trip():
    """Test partitions convert to and from restricted growth strings"""
    p = SetPartition.from_restricted_growth((0, 1, 0, 2))
    assert p.blocks == ((1, 3), (2,), (4,))
    assert p.restricted_growth() == (0, 1, 0, 2)


def test_enumerate_partition_11_order():
    """Test the two (1,1) diagrams come out identity first"""
    diagrams = enumerate_partition_diagrams(DiagramShape(1, 1))
    assert [d.blocks for d in diagrams] == [((1, 2),), ((1,), (2,))]


def test_enumerate_counts():
    """Test family sizes for small shapes"""
    assert len(enumerate_partition_diagrams(DiagramShape(2, 2))) == 15
    assert len(enumerate_partition_diagrams_bounded(DiagramShape(2, 2), 2)) == 8
    assert len(enumerate_partition_diagrams(DiagramShape(0, 0))) == 1
    assert len(enumerate_brauer(DiagramShape(2, 2))) == 3
    assert len(enumerate_brauer(DiagramShape(2, 1))) == 0
    assert len(enumerate_bg(DiagramShape(2, 2), 2)) == 6
    assert len(enumerate_bg(DiagramShape(2, 1), 2)) == 0


def test_enumerate_brauer_22_blocks():
    """Test the three (2,2) Brauer diagrams in lexicographic order"""
    blocks = [d.blocks for d in enumerate_brauer(DiagramShape(2, 2))]
    assert blocks == [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))]


def test_enumerate_bg_tags_n():
    """Test BG enumeration tags every diagram with n"""
    for d in enumerate_bg(DiagramShape(2, 2), 2):
        assert d.is_brauer_grood
        assert d.n == 2
        assert len(d.free_vertices()) == 2


def test_enumerate_family_requires_n():
    """Test the bounded and bg families need n"""
    with pytest.raises(ValueError):
        enumerate_family("bg", DiagramShape(2, 2))
    assert len(enumerate_family("bg", DiagramShape(2, 2), 2)) == 6
    with pytest.raises(ValueError):
        enumerate_family("trees", DiagramShape(1, 1))


def test_classify_bg():
    """Test retagging as an (l+k)\\n diagram and its failures"""
    d = make_diagram(DiagramShape(2, 1), [(1,), (2, 3)])
    tagged = classify_bg(d, 1)
    assert tagged.is_brauer_grood and tagged.n == 1
    assert tagged != d
    with pytest.raises(NotBrauerGrood):
        classify_bg(d, 3)
    with pytest.raises(NotBrauerGrood):
        classify_bg(make_diagram(DiagramShape(2, 1), [(1, 2, 3)]), 1)


def test_identity_and_permutation_diagrams():
    """Test the identity and swap constructors"""
    assert identity_diagram(2).blocks == ((1, 3), (2, 4))
    assert permutation_diagram([1, 0]).blocks == ((1, 4), (2, 3))
    assert permutation_diagram([0, 1]) == identity_diagram(2)
    with pytest.raises(ValueError):
        permutation_diagram([0, 0])


def test_transpose():
    """Test transpose flips the rows"""
    d = make_diagram(DiagramShape(1, 2), [(1, 2), (3,)])
    t = d.transpose()
    assert t.shape == DiagramShape(2, 1)
    assert t.blocks == ((1,), (2, 3))
    assert t.transpose() == d


def test_enumeration_caches_are_bounded():
    """Test every enumerator keeps at most ENUMERATION_CACHE_SIZE shapes"""
    for enumerator in (
        enumerate_partition_diagrams,
        enumerate_partition_diagrams_bounded,
        enumerate_brauer,
        enumerate_bg,
    ):
        assert enumerator.cache_info().maxsize == ENUMERATION_CACHE_SIZE
