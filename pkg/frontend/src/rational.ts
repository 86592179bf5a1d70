/**
 * Exact rational values for membership grades.
 *
 * The backend renders every membership as an exact decimal-free string
 * ("1", "3/10", "0"); documents additionally allow decimal literals read
 * exactly.  Nothing here ever touches floating point.
 */

export interface Rational {
  readonly num: bigint;
  readonly den: bigint; // always > 0, gcd(num, den) = 1
}

function gcd(a: bigint, b: bigint): bigint {
  let x = a < 0n ? -a : a;
  let y = b < 0n ? -b : b;
  while (y !== 0n) {
    [x, y] = [y, x % y];
  }
  return x;
}

export function rational(num: bigint | number, den: bigint | number = 1n): Rational {
  let n = BigInt(num);
  let d = BigInt(den);
  if (d === 0n) {
    throw new RangeError("zero denominator");
  }
  if (d < 0n) {
    n = -n;
    d = -d;
  }
  const g = gcd(n, d);
  return g === 0n ? { num: 0n, den: 1n } : { num: n / g, den: d / g };
}

export const ZERO: Rational = rational(0);
export const ONE: Rational = rational(1);

const FRACTION_RE = /^(-?\d+)(?:\/(\d+))?$/;
const DECIMAL_RE = /^(-?\d+)\.(\d+)$/;

/** Parse "p", "p/q", or an exact decimal such as "0.3". */
export function parseRational(text: string): Rational {
  const frac = FRACTION_RE.exec(text);
  if (frac !== null) {
    return rational(BigInt(frac[1]!), frac[2] === undefined ? 1n : BigInt(frac[2]));
  }
  const dec = DECIMAL_RE.exec(text);
  if (dec !== null) {
    const whole = BigInt(dec[1]!);
    const digits = dec[2]!;
    const scale = 10n ** BigInt(digits.length);
    const fracPart = BigInt(digits);
    const signed = text.startsWith("-") ? whole * scale - fracPart : whole * scale + fracPart;
    return rational(signed, scale);
  }
  throw new RangeError(`not a rational literal: ${JSON.stringify(text)}`);
}

/** Canonical form: "p" for integers, "p/q" otherwise.  Matches the backend. */
export function renderRational(r: Rational): string {
  return r.den === 1n ? r.num.toString() : `${r.num}/${r.den}`;
}

export function compareRational(a: Rational, b: Rational): number {
  const left = a.num * b.den;
  const right = b.num * a.den;
  return left === right ? 0 : left < right ? -1 : 1;
}

export function rationalEquals(a: Rational, b: Rational): boolean {
  return a.num === b.num && a.den === b.den;
}
