import pytest
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fractions import Fraction

from models import PatternKind
from utils.error_handler import InputParseError
from utils.validators import GraphFileValidator, PatternValidator, WeightFileValidator


class TestGraphFileValidator:
    def test_five_cycle(self):
        """Comments, blank lines and a closing edge parse"""
        g = GraphFileValidator.parse("# 5-cycle\nn 5\n\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1  # closing edge\n")
        assert g.n == 5
        assert g.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]

    def test_duplicates_merge(self):
        """Repeated edges collapse to one"""
        g = GraphFileValidator.parse("n 3\ne 1 2\ne 2 1\ne 1 2\n")
        assert g.edge_count == 1

    def test_isolated_vertices(self):
        """A header alone gives an edgeless graph"""
        assert GraphFileValidator.parse("n 4\n").edge_count == 0

    @pytest.mark.parametrize("text, fragment", [
        ("n 3\ne 1 2\ne 2 2\n", "line 3"),
        ("n 3\ne 1 4\n", "line 2"),
        ("e 1 2\nn 3\n", "line 1"),
        ("n 3\nn 4\n", "line 2"),
        ("n 3\nx 1 2\n", "line 2"),
        ("n 3\ne 1\n", "line 2"),
        ("n three\n", "line 1"),
        ("n 0\n", "line 1"),
        ("n ²\n", "line 1"),
        ("n 3\ne 1 ²\n", "line 2"),
        ("n ٣\n", "line 1"),
    ])
    def test_errors_name_the_line(self, text, fragment):
        """Every parse error names its line"""
        with pytest.raises(InputParseError) as exc:
            GraphFileValidator.parse(text)
        assert fragment in str(exc.value)

    def test_missing_header(self):
        """A file without 'n' is rejected"""
        with pytest.raises(InputParseError):
            GraphFileValidator.parse("# nothing here\n")

    def test_load(self, tmp_path):
        """Files load from disk"""
        path = tmp_path / "p3.g"
        path.write_text("n 3\ne 1 2\ne 2 3\n")
        assert GraphFileValidator.load(path).edge_count == 2

    def test_load_missing_file(self, tmp_path):
        """Missing files raise FileNotFoundError"""
        with pytest.raises(FileNotFoundError):
            GraphFileValidator.load(tmp_path / "absent.g")

    def test_resolve_catalogue_name(self):
        """Catalogue names resolve without touching the filesystem"""
        assert GraphFileValidator.resolve("C5").edge_count == 5
        assert GraphFileValidator.resolve("petersen").n == 10

    def test_resolve_file(self, tmp_path):
        """Anything that is not a catalogue name is read as a file"""
        path = tmp_path / "p3.g"
        path.write_text("n 3\ne 1 2\ne 2 3\n")
        assert GraphFileValidator.resolve(str(path)).edge_count == 2
        with pytest.raises(FileNotFoundError):
            GraphFileValidator.resolve(str(tmp_path / "C99"))


class TestWeightFileValidator:
    def test_formats(self):
        """Integers, fractions and decimals are exact"""
        w = WeightFileValidator.parse("41\n1/2\n\n# comment\n0.25\n0\n")
        assert w.weights == (Fraction(41), Fraction(1, 2), Fraction(1, 4), Fraction(0))

    @pytest.mark.parametrize("text", ["-3\n", "abc\n", "1 2\n", "1/0\n", "1e3\n", ""])
    def test_rejected(self, text):
        """Malformed weights are rejected"""
        with pytest.raises(InputParseError):
            WeightFileValidator.parse(text)

    def test_negative_reports_line(self):
        """Negative weights name their line"""
        with pytest.raises(InputParseError) as exc:
            WeightFileValidator.parse("1\n2\n-1\n")
        assert "line 3" in str(exc.value)


class TestPatternValidator:
    def test_cliques(self):
        """K names become clique patterns"""
        pattern = PatternValidator.parse("K3")
        assert pattern.is_clique and pattern.clique_size == 3
        assert PatternValidator.parse("k8").clique_size == 8

    def test_named_general_patterns(self):
        """Other catalogue names become general patterns"""
        c5 = PatternValidator.parse("C5")
        assert c5.kind is PatternKind.GENERAL and c5.name == "C5"
        assert PatternValidator.parse("p4").graph.edge_count == 3
        assert PatternValidator.parse("petersen").graph.n == 10

    @pytest.mark.parametrize("spec", ["K2", "K9", "C13", "P1", "Q5", "", "   "])
    def test_unknown(self, spec):
        """Unknown names are rejected"""
        with pytest.raises(InputParseError):
            PatternValidator.parse(spec)

    def test_file_pattern(self, tmp_path):
        """file: patterns load a graph named after the file"""
        path = tmp_path / "bowtie.g"
        path.write_text("n 5\ne 1 2\ne 2 3\ne 1 3\ne 3 4\ne 4 5\ne 3 5\n")
        pattern = PatternValidator.parse(f"file:{path}")
        assert pattern.kind is PatternKind.GENERAL
        assert pattern.name == "bowtie"
        assert pattern.graph.edge_count == 6

    def test_edgeless_file_pattern(self, tmp_path):
        """A pattern needs at least one edge"""
        path = tmp_path / "empty.g"
        path.write_text("n 3\n")
        with pytest.raises(InputParseError):
            PatternValidator.parse(f"file:{path}")
