import pytest
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fractions import Fraction

from models import (
    ForbiddenPattern,
    Objective,
    Partition,
    PatternKind,
    SimpleGraph,
    WeightedGraph,
    WeightVector,
    bits,
    mask_of,
    popcount,
)
from utils.error_handler import GraphValidationError, InvalidArgument


class TestWeightVector:
    def test_mixed_inputs_become_exact(self):
        """Ints, strings and floats become exact fractions"""
        w = WeightVector.of([1, "3/2", 0.1, "0.25"])
        assert w.weights == (Fraction(1), Fraction(3, 2), Fraction(1, 10), Fraction(1, 4))

    def test_negative_weight_rejected(self):
        """Negative weights are rejected"""
        with pytest.raises(GraphValidationError):
            WeightVector.of([1, -2])

    def test_boolean_rejected(self):
        """Booleans are not weights"""
        with pytest.raises(GraphValidationError):
            WeightVector.of([True])

    def test_descending_order_breaks_ties_by_index(self):
        """Equal weights keep index order"""
        assert WeightVector.of([2, 5, 2]).descending_order() == (1, 0, 2)
        assert WeightVector.of([41, 33, 29, 13, 11, 7]).descending_order() == (0, 1, 2, 3, 4, 5)

    def test_totals_and_blocks(self):
        """Totals, block sums, scaling and extension"""
        w = WeightVector.of([41, 33, 29, 13, 11, 7])
        assert w.total == 134
        assert w.block_weight([0, 3, 4]) == 65
        assert w.scaled(2).total == 268
        assert w.extended(0).n == 7

    def test_uniform(self):
        """Uniform vectors are all ones"""
        assert list(WeightVector.uniform(3)) == [1, 1, 1]


class TestSimpleGraph:
    def test_bit_helpers(self):
        """Bit iteration, counting and masks"""
        assert list(bits(0b10110)) == [1, 2, 4]
        assert popcount(0b10110) == 3
        assert mask_of([0, 3]) == 0b1001

    def test_from_edges_is_symmetric(self):
        """Edges are stored both ways"""
        g = SimpleGraph.from_edges(3, [(0, 1)])
        assert g.has_edge(0, 1) and g.has_edge(1, 0)
        assert not g.has_edge(1, 2)

    @pytest.mark.parametrize("n, rows", [
        (2, (0b10, 0)),      # asymmetric
        (1, (0b1,)),         # self-loop
        (2, (0b110, 0b1)),   # bit beyond n
        (0, ()),
        (65, (0,) * 65),
    ])
    def test_invalid_graphs_rejected(self, n, rows):
        """Malformed adjacency rows are rejected"""
        with pytest.raises(GraphValidationError):
            SimpleGraph(n, rows)

    def test_edges_are_lexicographic(self):
        """Edges list in lexicographic order"""
        assert SimpleGraph.complete(3).edges() == [(0, 1), (0, 2), (1, 2)]
        assert SimpleGraph.complete(4).edge_count == 6

    def test_edges_within_and_removal(self):
        """Induced edges and edge removal"""
        g = SimpleGraph.complete(4)
        assert g.edges_within(0b0111) == [(0, 1), (0, 2), (1, 2)]
        h = g.without_edges([(0, 1)])
        assert not h.has_edge(0, 1)
        assert h.edge_count == 5

    def test_relabeled(self):
        """Relabeling maps edges through the permutation"""
        g = SimpleGraph.from_edges(3, [(0, 1)])
        assert g.relabeled([2, 1, 0]).edges() == [(1, 2)]

    def test_weighted_graph_length_checked(self):
        """Weight count must match the vertex count"""
        with pytest.raises(GraphValidationError):
            WeightedGraph(SimpleGraph.empty(3), WeightVector.uniform(2))


class TestPartition:
    def test_empty_blocks_dropped(self):
        """Empty blocks disappear"""
        p = Partition.of([[0, 1], [], [2]])
        assert len(p) == 2
        assert p.n == 3
        assert p.sizes == (2, 1)

    def test_overlap_rejected(self):
        """Blocks may not share vertices"""
        with pytest.raises(GraphValidationError):
            Partition.of([[0, 1], [1, 2]])

    def test_must_cover_prefix(self):
        """Blocks must cover 0..n-1"""
        with pytest.raises(GraphValidationError):
            Partition.of([[0, 2]])

    def test_cap(self):
        """Too many blocks are rejected"""
        with pytest.raises(GraphValidationError):
            Partition.of([[0], [1], [2]], cap=2)

    def test_block_of_and_canonical(self):
        """Owner lookup and canonical form"""
        p = Partition.of([[3, 1], [0, 2]])
        assert p.block_of() == (1, 0, 1, 0)
        assert p.canonical() == ((0, 2), (1, 3))
        assert p.same_blocks(Partition.of([[0, 2], [1, 3]]))


class TestForbiddenPattern:
    def test_clique(self):
        """Clique patterns know their size and graph"""
        pattern = ForbiddenPattern.clique(4)
        assert pattern.is_clique
        assert pattern.name == "K4"
        assert pattern.vertex_count == 4
        assert pattern.as_graph().edge_count == 6

    def test_clique_size_checked(self):
        """Cliques below K2 are rejected"""
        with pytest.raises(InvalidArgument):
            ForbiddenPattern.clique(1)

    def test_general_needs_an_edge(self):
        """General patterns need an edge"""
        with pytest.raises(GraphValidationError):
            ForbiddenPattern.general(SimpleGraph.empty(3))

    def test_as_general(self):
        """Cliques convert to general patterns"""
        general = ForbiddenPattern.clique(3).as_general()
        assert general.kind is PatternKind.GENERAL
        assert general.graph.edge_count == 3
        assert general.name == "K3"


class TestObjective:
    def test_parse(self):
        """Objectives parse case-insensitively"""
        assert Objective.parse(" Product ") is Objective.PRODUCT
        assert Objective.parse("sum") is Objective.SUM
        with pytest.raises(ValueError):
            Objective.parse("max")
