"""The web UI ships with sampled reading fixtures; keep them honest.

The frontend's unit tests replay ``frontend/tests/fixtures/parity.json``
against its local reading arithmetic.  This test replays the same file
against the live service, so the committed fixtures can never drift from
the server without a failure on one side or the other.
"""

import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from vmlab.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures" / "parity.json"
TEMPLATES = Path(__file__).resolve().parent.parent / "frontend" / "src" / "templates.gen.json"


@pytest.fixture(scope="module")
def client(tmp_path_factory):
    app = create_app(data_dir=tmp_path_factory.mktemp("data"))
    with TestClient(app) as c:
        yield c


@pytest.mark.skipif(not FIXTURES.exists(), reason="frontend fixtures not generated")
def test_fixture_rows_match_live_readings(client):
    rows = json.loads(FIXTURES.read_text(encoding="utf-8"))
    assert len(rows) >= 400
    seen = set()
    for row in rows:
        seen.add(row["kind"])
        doc = client.get(
            f"/api/v1/instruments/{row['kind']}/reading", params={"ticks": row["ticks"]}
        ).json()
        assert doc["display_value"] == row["display_value"], row
        assert doc["text"] == row["text"], row
    assert seen == {"caliper", "micrometer", "dial", "protractor"}


@pytest.mark.skipif(not TEMPLATES.exists(), reason="frontend templates not generated")
def test_embedded_templates_match_live_templates(client):
    embedded = json.loads(TEMPLATES.read_text(encoding="utf-8"))
    assert set(embedded) == {"caliper", "micrometer", "dial", "protractor"}
    for kind, doc in embedded.items():
        live = client.get(f"/api/v1/instruments/{kind}/template").json()
        assert doc == live, f"embedded template for {kind} is stale"
