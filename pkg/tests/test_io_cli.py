import json

import pytest
from hypothesis import given

from conftest import networks
from sscnet import cli
from sscnet.errors import DocumentError
from sscnet.fixtures import load, names, path
from sscnet.io import NetworkDocument, dump_document, parse_document, to_dot


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", ["fig1a", "fig3", "fig5", "single-node"])
def test_fixture_files_are_canonical(name):
    text = path(name).read_text()
    assert dump_document(parse_document(text)) == text


@given(networks())
def test_round_trip(net):
    doc = NetworkDocument(net)
    text = dump_document(doc)
    assert parse_document(text) == doc
    assert dump_document(parse_document(text)) == text


@pytest.mark.parametrize(
    "text, line",
    [
        ('{"state_nodes": [1, 2],\n "state_edges": [[1 2]]}', 2),
        ('{"state_nodes": [1],\n "state_edges": [],\n "self_loops": false}', 3),
        ('{"state_nodes": [1],\n "state_edges": [],\n "colour": 1}', 3),
        ('{"state_nodes": [1, 2], "state_edges": [[1, 3]]}', 1),
        ('[]', 1),
    ],
)
def test_parse_errors_carry_positions(text, line):
    with pytest.raises(DocumentError) as err:
        parse_document(text)
    assert err.value.line == line


def test_bad_inputs_rejected():
    with pytest.raises(DocumentError):
        parse_document('{"state_nodes": [1], "state_edges": [], "inputs": [{"id": "u", "target": 1}, {"id": "u", "target": 1}]}')
    with pytest.raises(DocumentError):
        parse_document('{"state_nodes": [1], "state_edges": [], "decomposition": [{"nodes": [1], "kind": "tree"}]}')


def test_check_command(capsys):
    code, out, _ = run(capsys, "check", path("fig1a"))
    assert code == 0 and out.startswith("SSC: yes")
    code, out, _ = run(capsys, "check", path("fig2b"))
    assert code == 1 and "SSC: no, witness {2,4}" in out
    code, out, _ = run(capsys, "check", path("fig2b"), "--json")
    assert json.loads(out) == {"is_ssc": False, "witness": [2, 4], "subsets_examined": 9}
    code, _, _ = run(capsys, "check", path("fig5"), "--exact-limit", "10")
    assert code == 2


def test_check_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"state_nodes": [1,\n')
    code, _, err = run(capsys, "check", bad)
    assert code == 2 and "line" in err
    code, _, _ = run(capsys, "check", tmp_path / "missing.json")
    assert code == 2


def test_min_inputs_command(capsys):
    code, out, _ = run(capsys, "min-inputs", path("fig5"), "--json", "--audit")
    data = json.loads(out)
    assert code == 0
    assert [(e["id"], e["target"]) for e in data["external"]] == [("u1", 1), ("u2", 3), ("u3", 5), ("u4", 14)]
    assert [s["graph_type"] for s in data["stages"]] == ["tree-type", "cycle-type", "cycle-type", "cycle-type"]
    assert data["audit"] == {"verified_ssc": True, "minimal": None}
    code, out, _ = run(capsys, "min-inputs", path("single-path"), "--audit")
    assert code == 0 and "u1->1" in out and "minimal: yes" in out
    code, _, err = run(capsys, "min-inputs", path("fig1a"))
    assert code == 2


def test_min_inputs_not_a_pactus(tmp_path, capsys):
    doc = tmp_path / "k4.json"
    doc.write_text(json.dumps({"state_nodes": [1, 2, 3, 4], "state_edges": [[a, b] for a in range(1, 5) for b in range(a + 1, 5)]}))
    code, _, err = run(capsys, "min-inputs", doc)
    assert code == 2 and "supply seeds" in err


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", path("fig1a"), "--trials", "200", "--seed", "7")
    assert code == 0 and "1.000" in out and "consistent" in out
    code, out, _ = run(capsys, "oracle", path("fig2b"), "--trials", "200", "--seed", "7")
    assert code == 0 and "non-SSC: sampling cannot certify" in out
    with pytest.raises(SystemExit) as exc:
        cli.main(["oracle", str(path("fig2b")), "--trials", "0"])
    assert exc.value.code == 2


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", path("fig5"), "--annotate", "components")
    assert code == 0
    assert out.count("subgraph cluster_") == 4
    assert out.count("style=dashed") == 5
    again = run(capsys, "export-dot", path("fig5"), "--annotate", "components")[1]
    assert out == again
    dot = run(capsys, "export-dot", path("fig1a"), "--annotate", "ssc-nodes")[1]
    assert sum(f"  {v} [fillcolor=" in dot for v in range(1, 6)) == 5
    assert '"u1" [style=solid, fillcolor=none];' in dot
    assert to_dot(load("single-node").network) == 'graph G {\n  node [shape=circle, style=filled, fillcolor="#d9d9d9"];\n  1;\n}\n'


def test_fixture_listing():
    assert {"fig1a", "fig1b", "fig2a", "fig2b", "fig3", "fig3-state-only", "fig4a", "fig5"} <= set(names())
