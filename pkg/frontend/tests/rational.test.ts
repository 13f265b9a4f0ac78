import { describe, expect, it } from "vitest";

import {
  asInteger,
  decimalString,
  div,
  equals,
  mulInt,
  rational,
  toNumber,
} from "../src/rational";

describe("rational", () => {
  it("normalizes to lowest terms", () => {
    expect(rational(494, 5)).toEqual({ num: 494, den: 5 });
    expect(rational(10, 4)).toEqual({ num: 5, den: 2 });
    expect(rational(0, 7)).toEqual({ num: 0, den: 1 });
  });

  it("rejects zero or negative denominators and unsafe integers", () => {
    expect(() => rational(1, 0)).toThrow();
    expect(() => rational(1, -2)).toThrow();
    expect(() => rational(Number.MAX_SAFE_INTEGER + 2, 1)).toThrow();
    expect(() => rational(0.5, 1)).toThrow();
  });

  it("multiplies and divides exactly", () => {
    expect(mulInt(rational(1, 10), 123)).toEqual({ num: 123, den: 10 });
    expect(div(rational(494, 5), rational(1, 10))).toEqual({ num: 988, den: 1 });
    expect(() => div(rational(1, 2), rational(0, 1))).toThrow();
  });

  it("compares without normalizing first", () => {
    expect(equals({ num: 2, den: 4 }, { num: 1, den: 2 })).toBe(true);
    expect(equals({ num: 1, den: 3 }, { num: 1, den: 2 })).toBe(false);
  });

  it("extracts whole values", () => {
    expect(asInteger(rational(988, 1))).toBe(988);
    expect(asInteger(rational(988, 5))).toBeNull();
    expect(toNumber(rational(1, 4))).toBeCloseTo(0.25, 12);
  });

  it("prints shortest exact decimals", () => {
    expect(decimalString(rational(1, 10))).toBe("0.1");
    expect(decimalString(rational(1, 100))).toBe("0.01");
    expect(decimalString(rational(1, 2))).toBe("0.5");
    expect(decimalString(rational(10, 1))).toBe("10");
    expect(decimalString(rational(2469, 200))).toBe("12.345");
    expect(() => decimalString(rational(1, 3))).toThrow();
  });
});
