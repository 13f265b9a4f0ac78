/** Replays the sampled server readings against the client-side mirror.
 * The fixture file is generated from the running service
 * (scripts/make_parity_fixtures.py), so a drift in either half fails here.
 */

import { describe, expect, it } from "vitest";

import { formatValue, readingText } from "../src/reading";
import templates from "../src/templates.gen.json";
import type { TemplateDoc } from "../src/types";
import fixtures from "./fixtures/parity.json";

interface ParityRow {
  kind: string;
  ticks: number;
  display_value: string;
  text: string;
}

const DOCS = templates as unknown as Record<string, TemplateDoc>;
const ROWS = fixtures as unknown as ParityRow[];

describe("parity with the server", () => {
  it("covers every instrument", () => {
    const kinds = new Set(ROWS.map((row) => row.kind));
    expect(kinds).toEqual(new Set(Object.keys(DOCS)));
    expect(ROWS.length).toBeGreaterThanOrEqual(4 * 100);
  });

  it("reproduces every sampled display value and worked reading", () => {
    for (const row of ROWS) {
      const template = DOCS[row.kind];
      if (!template) throw new Error(`no template for ${row.kind}`);
      expect(formatValue(template.metadata, row.ticks), `${row.kind} ${row.ticks}`).toBe(
        row.display_value,
      );
      expect(readingText(template.metadata, row.ticks), `${row.kind} ${row.ticks}`).toBe(
        row.text,
      );
    }
  });
});
