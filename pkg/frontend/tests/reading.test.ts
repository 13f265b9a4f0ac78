import { describe, expect, it } from "vitest";

import { mulInt, rational } from "../src/rational";
import {
  clampTicks,
  coincidenceIndex,
  formatValue,
  poseFromTicks,
  readingText,
  splitReading,
  ticksFromTransform,
  unitSymbol,
} from "../src/reading";
import templates from "../src/templates.gen.json";
import type { SpecDoc, TemplateDoc, TransformDoc } from "../src/types";

const DOCS = templates as unknown as Record<string, TemplateDoc>;

function meta(kind: string): SpecDoc {
  const doc = DOCS[kind];
  if (!doc) throw new Error(`missing template for ${kind}`);
  return doc.metadata;
}

describe("display values", () => {
  it("caliper", () => {
    const m = meta("caliper");
    expect(formatValue(m, 123)).toBe("12.3");
    expect(splitReading(m, 123)).toEqual({ whole: 12, index: 3 });
    expect(coincidenceIndex(m, 123)).toBe(3);
    expect(readingText(m, 123)).toBe("main 12 mm + vernier 3 × 0.1 mm = 12.3 mm");
    expect(formatValue(m, 0)).toBe("0.0");
    expect(formatValue(m, 1500)).toBe("150.0");
  });

  it("micrometer", () => {
    const m = meta("micrometer");
    expect(formatValue(m, 1234)).toBe("12.34");
    expect(splitReading(m, 1234)).toEqual({ whole: 24, index: 34 });
    expect(readingText(m, 1234)).toBe(
      "sleeve 24 × 0.5 mm + thimble 34 × 0.01 mm = 12.34 mm",
    );
    expect(formatValue(m, 2500)).toBe("25.00");
  });

  it("dial indicator shows micrometres", () => {
    const m = meta("dial");
    expect(unitSymbol(m)).toBe("μm");
    expect(formatValue(m, 35)).toBe("350");
    expect(readingText(m, 35)).toBe("revolutions 0 + dial 35 × 10 μm = 350 μm");
    expect(readingText(m, 935)).toBe("revolutions 9 + dial 35 × 10 μm = 9350 μm");
    expect(formatValue(m, 1000)).toBe("10000");
  });

  it("protractor shows degrees", () => {
    const m = meta("protractor");
    expect(unitSymbol(m)).toBe("°");
    expect(formatValue(m, 160)).toBe("16.0");
    expect(readingText(m, 160)).toBe("main 16 ° + vernier 0 × 0.1 ° = 16.0 °");
    expect(formatValue(m, 1800)).toBe("180.0");
  });

  it("rejects out-of-range positions", () => {
    expect(() => formatValue(meta("caliper"), -1)).toThrow();
    expect(() => formatValue(meta("caliper"), 1501)).toThrow();
    expect(() => readingText(meta("dial"), 1001)).toThrow();
  });

  it("clamps drags to the scale", () => {
    const m = meta("caliper");
    expect(clampTicks(m, -3)).toBe(0);
    expect(clampTicks(m, 1500.4)).toBe(1500);
    expect(clampTicks(m, 2000)).toBe(1500);
  });
});

describe("poses and transforms", () => {
  it("poses linear scales in axis units", () => {
    expect(poseFromTicks(meta("caliper"), 123)).toEqual({ amount: 12.3, revolution: null });
    expect(poseFromTicks(meta("micrometer"), 1234)).toEqual({
      amount: 12.34,
      revolution: null,
    });
  });

  it("poses the dial hands in degrees", () => {
    expect(poseFromTicks(meta("dial"), 935)).toEqual({ amount: 126, revolution: 324 });
    expect(poseFromTicks(meta("dial"), 0)).toEqual({ amount: 0, revolution: 0 });
    expect(poseFromTicks(meta("dial"), 1000)).toEqual({ amount: 0, revolution: 360 });
  });

  it("recovers ticks from a translation transform", () => {
    const doc: TransformDoc = {
      kind: "translation",
      unit: "mm",
      amount: { num: 494, den: 5 },
    };
    expect(ticksFromTransform(meta("caliper"), doc)).toBe(988);
  });

  it("recovers ticks from a rotation transform", () => {
    const doc: TransformDoc = {
      kind: "rotation",
      unit: "degree",
      amount: { num: 126, den: 1 },
      revolution_amount: { num: 324, den: 1 },
    };
    expect(ticksFromTransform(meta("dial"), doc)).toBe(935);
  });

  it("round-trips every sampled position through a server-shaped transform", () => {
    for (const kind of Object.keys(DOCS)) {
      const m = meta(kind);
      const step = Math.max(1, Math.floor(m.range_max_ticks / 97));
      for (let ticks = 0; ticks <= m.range_max_ticks; ticks += step) {
        let doc: TransformDoc;
        if (m.divisions_per_revolution !== null) {
          const dpr = m.divisions_per_revolution;
          const revolutionsTotal = m.range_max_ticks / dpr;
          doc = {
            kind: "rotation",
            unit: "degree",
            amount: rational((ticks % dpr) * 360, dpr),
            revolution_amount: rational(Math.floor(ticks / dpr) * 360, revolutionsTotal),
          };
        } else {
          doc = {
            kind: "translation",
            unit: m.display_unit === "degree" ? "degree" : m.display_unit,
            amount: mulInt(m.least_count, ticks),
          };
        }
        expect(ticksFromTransform(m, doc)).toBe(ticks);
      }
    }
  });

  it("rejects transforms that sit between ticks", () => {
    const doc: TransformDoc = {
      kind: "translation",
      unit: "mm",
      amount: { num: 1, den: 3 },
    };
    expect(() => ticksFromTransform(meta("caliper"), doc)).toThrow();
  });
});
