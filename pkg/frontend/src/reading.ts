/** Client-side mirror of the server's reading arithmetic.
 *
 * The offline bundle has no /reading endpoint, so the explore mode computes
 * display values, worked-reading lines, and vernier coincidence locally from
 * the template metadata.  Formats are kept byte-identical to the server's;
 * the parity fixtures pin that for hundreds of positions per instrument.
 */

import { asInteger, decimalString, div, equals, mulInt, rational } from "./rational";
import type { Rational, SpecDoc, TransformDoc } from "./types";

export function unitSymbol(meta: SpecDoc): string {
  return meta.display_unit === "degree" ? "°" : meta.display_unit;
}

export function clampTicks(meta: SpecDoc, ticks: number): number {
  return Math.min(Math.max(Math.round(ticks), 0), meta.range_max_ticks);
}

function checkTicks(meta: SpecDoc, ticks: number): void {
  if (!Number.isSafeInteger(ticks) || ticks < 0 || ticks > meta.range_max_ticks) {
    throw new Error(`${ticks} outside [0, ${meta.range_max_ticks}] for ${meta.kind}`);
  }
}

/** Whole divisions of the coarse scale plus the fine index under it. */
export function splitReading(meta: SpecDoc, ticks: number): { whole: number; index: number } {
  checkTicks(meta, ticks);
  const per = meta.divisions_per_revolution ?? meta.main_division_ticks;
  return { whole: Math.floor(ticks / per), index: ticks % per };
}

export function coincidenceIndex(meta: SpecDoc, ticks: number): number {
  checkTicks(meta, ticks);
  if (meta.vernier_divisions === null) {
    throw new Error(`${meta.kind} has no vernier scale`);
  }
  return ticks % meta.vernier_divisions;
}

/** The display string for a position, e.g. "12.3", "350", "16.0". */
export function formatValue(meta: SpecDoc, ticks: number): string {
  checkTicks(meta, ticks);
  const scaled = mulInt(meta.least_count_display, ticks * 10 ** meta.display_decimals);
  const n = asInteger(scaled);
  if (n === null) throw new Error(`${meta.kind} value does not terminate`);
  if (meta.display_decimals === 0) return String(n);
  const base = 10 ** meta.display_decimals;
  const frac = String(n % base).padStart(meta.display_decimals, "0");
  return `${Math.floor(n / base)}.${frac}`;
}

/** One-line worked reading, identical to the server's. */
export function readingText(meta: SpecDoc, ticks: number): string {
  const { whole, index } = splitReading(meta, ticks);
  const value = formatValue(meta, ticks);
  const symbol = unitSymbol(meta);
  const lc = decimalString(meta.least_count_display);
  switch (meta.kind) {
    case "caliper":
    case "protractor":
      return `main ${whole} ${symbol} + vernier ${index} × ${lc} ${symbol} = ${value} ${symbol}`;
    case "micrometer": {
      const division = decimalString(mulInt(meta.least_count, meta.main_division_ticks));
      return (
        `sleeve ${whole} × ${division} ${symbol}` +
        ` + thimble ${index} × ${lc} ${symbol} = ${value} ${symbol}`
      );
    }
    case "dial":
      return `revolutions ${whole} + dial ${index} × ${lc} ${symbol} = ${value} ${symbol}`;
    default:
      throw new Error(`unknown instrument kind: ${meta.kind}`);
  }
}

/** Pose of the moving parts, in the template's axis units. */
export interface Pose {
  /** Linear slide in axis units, or main-hand angle in degrees. */
  amount: number;
  /** Revolution-counter hand angle (dial only), degrees. */
  revolution: number | null;
}

export function poseFromTicks(meta: SpecDoc, ticks: number): Pose {
  checkTicks(meta, ticks);
  if (meta.kind === "dial") {
    const dpr = meta.divisions_per_revolution!;
    const revolutionsTotal = meta.range_max_ticks / dpr;
    return {
      amount: ((ticks % dpr) * 360) / dpr,
      revolution: (Math.floor(ticks / dpr) * 360) / revolutionsTotal,
    };
  }
  return { amount: ticks * toAxis(meta.least_count), revolution: null };
}

function toAxis(r: Rational): number {
  return r.num / r.den;
}

/** Recover the tick position a server transform encodes (quiz mode). */
export function ticksFromTransform(meta: SpecDoc, doc: TransformDoc): number {
  if (doc.kind === "rotation") {
    const dpr = meta.divisions_per_revolution!;
    const revolutionsTotal = meta.range_max_ticks / dpr;
    const partial = asInteger(div(mulInt(doc.amount, dpr), rational(360, 1)));
    if (partial === null) throw new Error("rotation is not a whole tick");
    let revolutions = 0;
    if (doc.revolution_amount !== undefined) {
      const r = asInteger(
        div(mulInt(doc.revolution_amount, revolutionsTotal), rational(360, 1)),
      );
      if (r === null) throw new Error("revolution angle is not a whole turn");
      revolutions = r;
    }
    const ticks = revolutions * dpr + partial;
    checkTicks(meta, ticks);
    return ticks;
  }
  // Translation amounts are ticks × least count in the scale's axis unit.
  const ticksRational = div(doc.amount, meta.least_count);
  const ticks = asInteger(ticksRational);
  if (ticks === null || !equals(mulInt(meta.least_count, ticks), doc.amount)) {
    throw new Error(`translation is not a whole tick: ${doc.amount.num}/${doc.amount.den}`);
  }
  checkTicks(meta, ticks);
  return ticks;
}
