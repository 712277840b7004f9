/**
 * Parser and evaluator for the implicit-equation captions produced by
 * the server, e.g. "x^2 + 4*x*y - 2*x + 1 = 0" or "1/2*x - y = 0".
 *
 * The captions follow one fixed grammar: terms separated by " + " or
 * " - " (the first term may carry a leading "-"), each term a
 * "*"-joined product of an optional rational coefficient and powers of
 * x and y. This is the only piece of mathematics performed client-side
 * and exists purely for the debug readout showing how far a reported
 * focus sits from the implicit curve.
 */

export interface Term {
  coef: number;
  dx: number;
  dy: number;
}

const FACTOR_VAR = /^([xy])(?:\^(\d+))?$/;
const FACTOR_NUM = /^(\d+)(?:\/(\d+))?$/;

function parseTerm(text: string, sign: number): Term {
  let coef = sign;
  let dx = 0;
  let dy = 0;
  let sawCoef = false;
  if (text === "") {
    throw new Error("empty term");
  }
  for (const factor of text.split("*")) {
    const asVar = FACTOR_VAR.exec(factor);
    if (asVar !== null) {
      const power = asVar[2] === undefined ? 1 : Number(asVar[2]);
      if (asVar[1] === "x") {
        dx += power;
      } else {
        dy += power;
      }
      continue;
    }
    const asNum = FACTOR_NUM.exec(factor);
    if (asNum !== null && !sawCoef && dx === 0 && dy === 0) {
      const den = asNum[2] === undefined ? 1 : Number(asNum[2]);
      if (den === 0) {
        throw new Error(`zero denominator in "${factor}"`);
      }
      coef *= Number(asNum[1]) / den;
      sawCoef = true;
      continue;
    }
    throw new Error(`unrecognized factor "${factor}"`);
  }
  return { coef, dx, dy };
}

/** Parse a caption into its terms. Throws on anything off-grammar. */
export function parseEquation(caption: string): Term[] {
  let body = caption.trim();
  const eq = body.indexOf("=");
  if (eq >= 0) {
    if (body.slice(eq + 1).trim() !== "0") {
      throw new Error(`right-hand side must be 0 in "${caption}"`);
    }
    body = body.slice(0, eq).trim();
  }
  if (body === "") {
    throw new Error("empty equation");
  }
  const tokens = body.split(" ");
  const terms: Term[] = [];
  let first = tokens[0];
  let sign = 1;
  if (first.startsWith("-")) {
    sign = -1;
    first = first.slice(1);
  }
  terms.push(parseTerm(first, sign));
  for (let i = 1; i < tokens.length; i += 2) {
    const op = tokens[i];
    const operand = tokens[i + 1];
    if ((op !== "+" && op !== "-") || operand === undefined) {
      throw new Error(`malformed equation near "${op}"`);
    }
    terms.push(parseTerm(operand, op === "+" ? 1 : -1));
  }
  return terms;
}

export function evaluateTerms(terms: Term[], x: number, y: number): number {
  let acc = 0;
  for (const t of terms) {
    acc += t.coef * Math.pow(x, t.dx) * Math.pow(y, t.dy);
  }
  return acc;
}

/** |G(x, y)| for the curve G = 0 described by the caption. */
export function captionResidual(caption: string, x: number, y: number): number {
  return Math.abs(evaluateTerms(parseEquation(caption), x, y));
}
