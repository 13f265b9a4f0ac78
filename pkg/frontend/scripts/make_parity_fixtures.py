#!/usr/bin/env python3
"""Regenerate the frontend's embedded templates and parity fixtures.

Both files are derived from the running lab service, so the TypeScript
mirror is always checked against what the server actually says:

  src/templates.gen.json   — instrument templates baked into the bundle
                             (file:// pages cannot fetch, so the bundle
                             carries its own copy)
  tests/fixtures/parity.json — sampled reading documents; vitest replays
                             them against the client-side decomposition,
                             pytest replays them against the live API

Run from anywhere; paths are resolved relative to this file.  Sampling is
seeded, so reruns only change the files when the service itself changes.
"""

import json
import random
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from vmlab.service import create_app

FRONTEND = Path(__file__).resolve().parent.parent
SAMPLES_PER_KIND = 100
SAMPLE_SEED = 2024


def main() -> None:
    with tempfile.TemporaryDirectory() as scratch:
        with TestClient(create_app(data_dir=scratch)) as client:
            kinds = [entry["kind"] for entry in client.get("/api/v1/instruments").json()]

            templates = {}
            for kind in kinds:
                response = client.get(f"/api/v1/instruments/{kind}/template")
                response.raise_for_status()
                templates[kind] = response.json()

            rng = random.Random(SAMPLE_SEED)
            rows = []
            for kind in kinds:
                range_max = templates[kind]["metadata"]["range_max_ticks"]
                positions = {0, range_max}
                while len(positions) < SAMPLES_PER_KIND:
                    positions.add(rng.randint(0, range_max))
                for ticks in sorted(positions):
                    doc = client.get(
                        f"/api/v1/instruments/{kind}/reading", params={"ticks": ticks}
                    ).json()
                    rows.append(
                        {
                            "kind": kind,
                            "ticks": ticks,
                            "display_value": doc["display_value"],
                            "text": doc["text"],
                        }
                    )

    templates_path = FRONTEND / "src" / "templates.gen.json"
    templates_path.write_text(
        json.dumps(templates, indent=1, ensure_ascii=False) + "\n", encoding="utf-8"
    )

    fixtures_path = FRONTEND / "tests" / "fixtures" / "parity.json"
    fixtures_path.parent.mkdir(parents=True, exist_ok=True)
    fixtures_path.write_text(
        json.dumps(rows, indent=1, ensure_ascii=False) + "\n", encoding="utf-8"
    )

    print(f"wrote {templates_path.relative_to(FRONTEND)} ({len(templates)} templates)")
    print(f"wrote {fixtures_path.relative_to(FRONTEND)} ({len(rows)} readings)")


if __name__ == "__main__":
    main()
