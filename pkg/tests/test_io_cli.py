import json
import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altpath.cli import main
from altpath.errors import HypothesisViolated, InvalidInstance, ParseError, UnknownId
from altpath.io import (
    GenParams,
    emit_instance,
    emit_partition,
    emit_path,
    generate,
    parse_instance,
    parse_partition,
    parse_path,
    render_svg,
)
from altpath.paths import AltPath, solve_closed

TRIANGLE = """{
  "version": 1,
  "red": [["0", "0"], ["3", "6"], ["6", "0"]],
  "blue": [["3", "1"], ["2", "2"], [4, 2.0]],
  "polygon": [0, 1, 2]
}
"""


class TestInstanceFormat:
    def test_minimal(self):
        inst = parse_instance(TRIANGLE)
        assert len(inst.polygon) == 3 and len(inst.blue) == 3

    def test_rationals_and_decimals(self):
        text = TRIANGLE.replace('["3", "1"]', '["5/2", "0.5"]')
        inst = parse_instance(text)
        assert str(inst.blue[0].point.x) == "5/2" and str(inst.blue[0].point.y) == "1/2"

    def test_blue_outside(self):
        with pytest.raises(InvalidInstance):
            parse_instance(TRIANGLE.replace('["3", "1"]', '["30", "1"]'))

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_instance('{\n  "version": 1,\n  "red": [,]\n}')
        assert err.value.line == 3 and err.value.column is not None

    def test_value_error_path(self):
        with pytest.raises(ParseError) as err:
            parse_instance(TRIANGLE.replace('["2", "2"]', '["2", "x"]'))
        assert err.value.where == "$.blue[1][1]"

    def test_version(self):
        with pytest.raises(ParseError):
            parse_instance(TRIANGLE.replace('"version": 1', '"version": 9'))

    def test_round_trip(self):
        once = emit_instance(parse_instance(TRIANGLE))
        assert emit_instance(parse_instance(once)) == once

    @given(st.integers(0, 2**32))
    def test_generated_round_trip(self, seed):
        text = emit_instance(generate(GenParams(4, 6, 2, seed)))
        assert emit_instance(parse_instance(text)) == text


class TestOtherFormats:
    def test_path_round_trip(self):
        path = AltPath((0, 3, 1, 4, 2, 5), True)
        assert parse_path(emit_path(path)) == path

    def test_partition_round_trip(self):
        inst = parse_instance(TRIANGLE)
        _, part = solve_closed(inst)
        again = parse_partition(emit_partition(part))
        assert again.regions == part.regions and again.assignment == part.assignment

    def test_bad_path(self):
        with pytest.raises(ParseError):
            parse_path('{"version": 1, "closed": "yes", "order": []}')


class TestGenerator:
    def test_deterministic(self):
        a = emit_instance(generate(GenParams(3, 3, 0, 1)))
        b = emit_instance(generate(GenParams(3, 3, 0, 1)))
        assert a == b

    def test_seed_matters(self):
        assert emit_instance(generate(GenParams(5, 7, 2, 1))) != emit_instance(generate(GenParams(5, 7, 2, 2)))

    def test_shape(self):
        inst = generate(GenParams(6, 12, 6, 0))
        assert len(inst.polygon) == 6 and len(inst.red) == 12 and len(inst.blue) == 12

    def test_inconsistent_counts(self):
        with pytest.raises(HypothesisViolated):
            generate(GenParams(3, 10, 0, 1))


class TestSvg:
    def setup_method(self):
        self.inst = generate(GenParams(5, 8, 3, 4))
        self.path, self.part = solve_closed(self.inst)

    def test_points_only(self):
        svg = render_svg(self.inst)
        assert svg.count("<circle") == len(self.inst.points)
        assert svg.count('class="path"') == 0

    def test_cycle_segments(self):
        svg = render_svg(self.inst, self.path)
        assert svg.count('class="path"') == len(self.path)

    def test_region_outlines(self):
        svg = render_svg(self.inst, part=self.part)
        assert svg.count('class="region"') == len(self.inst.polygon)

    def test_glyph_styles(self):
        svg = render_svg(self.inst)
        reds = re.findall(r'<circle class="point red"[^>]*>', svg)
        blues = re.findall(r'<circle class="point blue"[^>]*>', svg)
        assert len(reds) == len(self.inst.red) and all('fill="white"' not in r for r in reds)
        assert all('fill="white"' in b for b in blues)

    def test_unknown_id(self):
        with pytest.raises(UnknownId):
            render_svg(self.inst, AltPath((999,)))

    def test_deterministic(self):
        assert render_svg(self.inst, self.path, self.part) == render_svg(self.inst, self.path, self.part)

    def test_well_formed(self):
        import xml.etree.ElementTree as ET

        root = ET.fromstring(render_svg(self.inst, self.path, self.part))
        assert root.tag.endswith("svg")


class TestCli:
    def test_pipeline(self, tmp_path, capsys):
        inst, path, part = tmp_path / "i.json", tmp_path / "p.json", tmp_path / "q.json"
        assert main(["gen", "--s", "3", "--blue", "3", "--red-out", "0", "--seed", "1", "-o", str(inst)]) == 0
        assert main(["solve", str(inst), "-o", str(path)]) == 0
        assert main(["partition", str(inst), "-o", str(part)]) == 0
        assert main(["verify", str(inst), "--path", str(path), "--partition", str(part)]) == 0
        out = capsys.readouterr().out
        assert "path: Ok" in out and "partition: Ok" in out

    def test_open_pipeline(self, tmp_path):
        inst, path = tmp_path / "i.json", tmp_path / "p.json"
        assert main(["gen", "--s", "4", "--blue", "5", "--red-out", "2", "-o", str(inst)]) == 0
        assert main(["solve", str(inst), "-o", str(path)]) == 0
        assert json.loads(path.read_text())["closed"] is False
        assert main(["verify", str(inst), "--path", str(path)]) == 0
        assert main(["solve", str(inst), "--closed"]) == 2

    def test_corrupted_path(self, tmp_path, capsys):
        inst, path = tmp_path / "i.json", tmp_path / "p.json"
        main(["gen", "--s", "3", "--blue", "3", "--red-out", "0", "--seed", "1", "-o", str(inst)])
        main(["solve", str(inst), "-o", str(path)])
        doc = json.loads(path.read_text())
        doc["order"][0], doc["order"][1] = doc["order"][1], doc["order"][0]
        path.write_text(json.dumps(doc))
        assert main(["verify", str(inst), "--path", str(path)]) == 1
        out = capsys.readouterr().out
        assert "NotAlternating" in out or "Crossing" in out

    def test_malformed(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{ not json")
        assert main(["solve", str(bad)]) == 2
        assert main(["solve", str(tmp_path / "missing.json")]) == 2

    def test_oracle_and_render(self, tmp_path, capsys):
        inst = tmp_path / "i.json"
        inst.write_text(TRIANGLE)
        assert main(["oracle", str(inst)]) == 0
        path = AltPath(tuple(json.loads(capsys.readouterr().out)["order"]), True)
        assert len(path) == 6
        svg = tmp_path / "o.svg"
        assert main(["render", str(inst), "-o", str(svg)]) == 0
        assert svg.read_text().startswith("<?xml")

    def test_deterministic_output(self, tmp_path):
        outs = []
        for k in range(2):
            f = tmp_path / f"i{k}.json"
            main(["gen", "--s", "6", "--blue", "12", "--red-out", "6", "--seed", "7", "-o", str(f)])
            p = tmp_path / f"p{k}.json"
            main(["solve", str(f), "-o", str(p)])
            outs.append((f.read_bytes(), p.read_bytes()))
        assert outs[0] == outs[1]

    def test_internal_error_exit(self, tmp_path, monkeypatch):
        import altpath.cli as cli
        from altpath.errors import NoApexFound

        def boom(inst):
            raise NoApexFound("forced")

        monkeypatch.setattr(cli, "closed_cycle", boom)
        inst = tmp_path / "i.json"
        inst.write_text(TRIANGLE)
        assert main(["solve", str(inst)]) == 3

    def test_usage_error(self):
        assert main(["solve"]) == 2
