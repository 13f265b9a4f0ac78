/** Exact arithmetic on small non-negative rationals ({num, den} documents).
 *
 * Every quantity in the lab's documents is a ratio of small integers, so
 * plain number arithmetic is exact here; the helpers keep values normalized
 * and fail loudly rather than round.
 */

import type { Rational } from "./types";

function gcd(a: number, b: number): number {
  while (b !== 0) {
    const t = a % b;
    a = b;
    b = t;
  }
  return a;
}

export function rational(num: number, den: number): Rational {
  if (!Number.isSafeInteger(num) || !Number.isSafeInteger(den) || den <= 0) {
    throw new Error(`not a valid rational: ${num}/${den}`);
  }
  const g = gcd(Math.abs(num), den) || 1;
  return { num: num / g, den: den / g };
}

export function mulInt(r: Rational, k: number): Rational {
  return rational(r.num * k, r.den);
}

export function div(a: Rational, b: Rational): Rational {
  if (b.num === 0) throw new Error("division by zero");
  return rational(a.num * b.den, a.den * b.num);
}

export function equals(a: Rational, b: Rational): boolean {
  return a.num * b.den === b.num * a.den;
}

export function toNumber(r: Rational): number {
  return r.num / r.den;
}

/** Exact integer value of a rational, or null when it is not whole. */
export function asInteger(r: Rational): number | null {
  return r.num % r.den === 0 ? r.num / r.den : null;
}

/** Shortest exact decimal of a non-negative rational ("0.1", "0.5", "10"). */
export function decimalString(r: Rational): string {
  if (r.num < 0) throw new Error(`negative value: ${r.num}/${r.den}`);
  let places = 0;
  let scaled = r.num;
  while (scaled % r.den !== 0) {
    places += 1;
    if (places > 12) throw new Error(`no terminating decimal: ${r.num}/${r.den}`);
    scaled = r.num * 10 ** places;
  }
  const n = scaled / r.den;
  if (places === 0) return String(n);
  const base = 10 ** places;
  const whole = Math.floor(n / base);
  const frac = String(n % base).padStart(places, "0");
  return `${whole}.${frac}`;
}
