"""Tests for JSON document models, schema validation and output helpers"""

import json

import pytest

from quandle_lab.algebra.group_ring import GroupRingElement
from quandle_lab.cohomology.groups import cohomology, homology
from quandle_lab.exceptions import DocumentError, QuandleAxiomError
from quandle_lab.models.documents import (
    CochainDocument,
    CohomologyReport,
    GroupRingDocument,
    InvariantReport,
    PresentationDocument,
    QuandleDocument,
)
from quandle_lab.surfaces.presets import TWIST_SPUN_TREFOIL
from quandle_lab.utils.io import (
    SCHEMA_KINDS,
    dump_json,
    load_schema,
    read_document,
    schema_errors,
    validate_document,
    write_json,
)


class TestSchemas:
    @pytest.mark.parametrize("kind", SCHEMA_KINDS)
    def test_every_schema_loads(self, kind):
        assert load_schema(kind)["$schema"].startswith("http://json-schema.org/draft-07")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            load_schema("knot")

    def test_reports_every_violation(self):
        errors = schema_errors({"n": 0, "op": "x"}, "quandle")
        assert len(errors) == 2
        assert any(line.startswith("n:") for line in errors)

    def test_validate_raises_document_error(self):
        with pytest.raises(DocumentError) as excinfo:
            validate_document({"degree": 2, "values": {"0,1": 1}}, "cochain")
        assert excinfo.value.errors

    def test_read_document(self, tmp_path):
        path = tmp_path / "q.json"
        path.write_text(json.dumps({"n": 1, "op": [[0]]}))
        assert read_document(path, "quandle")["n"] == 1

    def test_missing_and_broken_files(self, tmp_path):
        with pytest.raises(DocumentError, match="not found"):
            read_document(tmp_path / "absent.json", "quandle")
        broken = tmp_path / "broken.json"
        broken.write_text("{")
        with pytest.raises(DocumentError, match="not valid JSON"):
            read_document(broken, "quandle")

    def test_presets_satisfy_presentation_schema(self):
        assert schema_errors(TWIST_SPUN_TREFOIL.to_json(), "presentation") == []


class TestModels:
    def test_quandle_document(self, r3):
        document = QuandleDocument.from_quandle(r3)
        assert document.to_quandle().op == r3.op

    def test_quandle_document_rows(self):
        with pytest.raises(ValueError):
            QuandleDocument(n=2, op=[[0, 0]]).to_quandle()
        with pytest.raises(QuandleAxiomError):
            QuandleDocument(n=2, op=[[1, 1], [0, 0]]).to_quandle()

    def test_cochain_document(self, eta1):
        document = CochainDocument.model_validate(eta1.to_json())
        assert document.to_cochain() == eta1

    def test_presentation_document(self):
        document = PresentationDocument.model_validate(TWIST_SPUN_TREFOIL.to_json())
        assert document.to_presentation(TWIST_SPUN_TREFOIL.name) == TWIST_SPUN_TREFOIL

    def test_group_ring_document(self):
        element = GroupRingElement(None, ((0, 3), (2, 6)))
        assert GroupRingDocument.from_element(element).to_element() == element

    def test_cohomology_report(self, s4):
        report = CohomologyReport.from_cohomology(cohomology(s4, 2), representatives=True)
        assert report.group == "0" and report.representatives == []
        homology_report = CohomologyReport.from_homology(homology(s4, 2))
        assert homology_report.summands == [2]
        assert homology_report.torsion == [2]

    def test_invariant_report(self, r3):
        value = GroupRingElement(3, ((0, 3), (1, 6)))
        report = InvariantReport.build("surface", r3, "eta1", value, 0.5)
        assert report.colorings == 9
        assert report.display == "3 + 6t"
        assert report.result.coeff == "Z3"


class TestOutput:
    def test_dump_is_stable(self):
        text = dump_json({"b": 1, "a": "Φ"})
        assert text == '{\n  "b": 1,\n  "a": "Φ"\n}'

    def test_write_creates_parents(self, tmp_path):
        path = tmp_path / "deep" / "out.json"
        write_json({"x": 1}, path)
        assert json.loads(path.read_text()) == {"x": 1}
