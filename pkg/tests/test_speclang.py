"""The declaration language and the flat file formats."""

from fractions import Fraction

import pytest

from polygroup import (
    ParseError,
    parse_spec,
    read_fuzzy_file,
    read_table_file,
    render_document,
    write_fuzzy_file,
    write_table_file,
)
from polygroup import FuzzySet, derive, validate_group, BinaryGroup, rational_power

F = Fraction

DOC = """
# two groups, a fuzzy set, and a map between carriers
group T { arity: 3; carrier: Z4; op: derived(b=0); }
group B { arity: 2; carrier: Z4; op: derived(b=0); }
group H { arity: 3; carrier: Z4; op: hosszu(base=B, phi=[0,1,2,3], b=0); }
fuzzy mu on T { 0: 1; 2: 0.5; default: 0.3; }
hom collapse: T -> T [0, 2, 0, 2];
"""


class TestParsing:
    def test_single_group(self):
        doc = parse_spec("group T { arity: 3; carrier: Z4; op: derived(b=0); }")
        assert len(doc.groups) == 1
        g = doc.groups["T"]
        assert g.arity == 3 and g.size == 4
        assert g.op_kind == "derived" and g.b == 0

    def test_full_document(self):
        doc = parse_spec(DOC)
        assert set(doc.groups) == {"T", "B", "H"}
        assert set(doc.fuzzies) == {"mu"}
        assert set(doc.homs) == {"collapse"}

    def test_decimals_become_exact(self):
        doc = parse_spec(DOC)
        mu = doc.fuzzies["mu"]
        assert dict(mu.entries) == {0: F(1), 2: F(1, 2)}
        assert mu.default == F(3, 10)

    def test_fraction_memberships(self):
        doc = parse_spec(
            "group T { arity: 3; carrier: Z2; op: derived(b=0); }\n"
            "fuzzy m on T { 0: 3/10; 1: 1/10; }"
        )
        assert dict(doc.fuzzies["m"].entries) == {0: F(3, 10), 1: F(1, 10)}

    def test_table_group(self):
        doc = parse_spec(
            "group G { arity: 2; carrier: table 2; op: table [0,1,1,0]; }"
        )
        assert doc.groups["G"].entries == (0, 1, 1, 0)

    def test_comments_and_whitespace(self):
        doc = parse_spec(
            "# leading comment\n"
            "group T {  # trailing comment\n"
            "  arity: 3; carrier: Z2;  # another\n"
            "  op: derived(b=1);\n"
            "}\n"
        )
        assert doc.groups["T"].b == 1


class TestDiagnostics:
    def assert_error(self, text, fragment, line=None):
        with pytest.raises(ParseError) as exc:
            parse_spec(text)
        assert fragment in str(exc.value)
        if line is not None:
            assert exc.value.line == line

    def test_membership_out_of_range(self):
        self.assert_error(
            "group T { arity: 3; carrier: Z4; op: derived(b=0); }\n"
            "fuzzy m on T { 0: 2; default: 0; }",
            "out of [0, 1]",
            line=2,
        )

    def test_unknown_group_reference(self):
        self.assert_error(
            "fuzzy m on T { default: 1; }", "unknown group"
        )

    def test_duplicate_names(self):
        self.assert_error(
            "group T { arity: 3; carrier: Z2; op: derived(b=0); }\n"
            "group T { arity: 3; carrier: Z2; op: derived(b=0); }",
            "duplicate declaration name",
        )

    def test_element_out_of_carrier(self):
        self.assert_error(
            "group T { arity: 3; carrier: Z4; op: derived(b=7); }",
            "carrier",
        )

    def test_missing_semicolon(self):
        self.assert_error(
            "group T { arity: 3 carrier: Z4; op: derived(b=0); }", "expected"
        )

    def test_bad_table_length(self):
        self.assert_error(
            "group G { arity: 2; carrier: table 2; op: table [0,1,1]; }",
            "entries",
        )

    def test_phi_must_be_permutation(self):
        self.assert_error(
            "group B { arity: 2; carrier: Z4; op: derived(b=0); }\n"
            "group H { arity: 3; carrier: Z4; op: hosszu(base=B, phi=[0,0,2,3], b=0); }",
            "permutation",
        )

    def test_hosszu_base_must_be_binary(self):
        self.assert_error(
            "group T { arity: 3; carrier: Z4; op: derived(b=0); }\n"
            "group H { arity: 3; carrier: Z4; op: hosszu(base=T, phi=[0,1,2,3], b=0); }",
            "arity 2",
        )

    def test_hom_mapping_length(self):
        self.assert_error(
            "group T { arity: 3; carrier: Z4; op: derived(b=0); }\n"
            "hom h: T -> T [0, 1];",
            "mapping",
        )

    def test_fuzzy_must_cover_carrier(self):
        self.assert_error(
            "group T { arity: 3; carrier: Z4; op: derived(b=0); }\n"
            "fuzzy m on T { 0: 1; }",
            "membership",
        )

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as exc:
            parse_spec("group T { arity: }")
        assert exc.value.line == 1
        assert exc.value.column is not None
        assert str(exc.value).startswith("1:")


class TestRenderRoundTrip:
    def test_parse_render_parse_is_identity(self):
        doc = parse_spec(DOC)
        text = render_document(doc)
        again = parse_spec(text)
        assert render_document(again) == text
        assert set(again.groups) == set(doc.groups)
        assert again.fuzzies["mu"].entries == doc.fuzzies["mu"].entries
        assert again.homs["collapse"].mapping == doc.homs["collapse"].mapping

    def test_rendered_memberships_are_fractions(self):
        text = render_document(parse_spec(DOC))
        assert "1/2" in text and "3/10" in text
        assert "0.5" not in text


class TestTableFiles(object):
    def test_round_trip(self, tmp_path, ternary_z4):
        path = tmp_path / "g.tbl"
        write_table_file(path, ternary_z4.op)
        size, arity, entries = read_table_file(path)
        assert (size, arity) == (4, 3)
        assert list(entries) == list(ternary_z4.table())

    def test_header_validation(self, tmp_path):
        p = tmp_path / "bad.tbl"
        p.write_text("nary x 3\n0 1\n")
        with pytest.raises(ParseError):
            read_table_file(p)

    def test_entry_count_validation(self, tmp_path):
        p = tmp_path / "short.tbl"
        p.write_text("nary 2 2\n0 1 1\n")
        with pytest.raises(ParseError, match="expected 4"):
            read_table_file(p)

    def test_entry_range_validation(self, tmp_path):
        p = tmp_path / "range.tbl"
        p.write_text("nary 2 2\n0 1 1 5\n")
        with pytest.raises(ParseError):
            read_table_file(p)

    def test_comments_allowed(self, tmp_path):
        p = tmp_path / "c.tbl"
        p.write_text("# a table\nnary 2 2\n0 1  # first row\n1 0\n")
        size, arity, entries = read_table_file(p)
        assert list(entries) == [0, 1, 1, 0]


class TestFuzzyFiles:
    def test_round_trip(self, tmp_path, mu_three_level):
        p = tmp_path / "mu.fz"
        write_fuzzy_file(p, mu_three_level)
        entries, default = read_fuzzy_file(p)
        assert default is None
        assert entries == {0: F(1), 1: F(3, 10), 2: F(1, 2), 3: F(3, 10)}

    def test_default_line(self, tmp_path):
        p = tmp_path / "d.fz"
        p.write_text("0 1\ndefault 1/2\n")
        entries, default = read_fuzzy_file(p)
        assert entries == {0: F(1)} and default == F(1, 2)

    def test_rejects_symbolic_values_on_write(self, tmp_path, ternary_z4):
        mu = FuzzySet(
            ternary_z4,
            [F(1), rational_power(F(1, 2), F(1, 2)), F(1, 2), F(1, 2)],
        )
        with pytest.raises(TypeError):
            write_fuzzy_file(tmp_path / "s.fz", mu)

    def test_bad_membership_diagnostic(self, tmp_path):
        p = tmp_path / "bad.fz"
        p.write_text("0 7/2\n")
        with pytest.raises(ParseError):
            read_fuzzy_file(p)
