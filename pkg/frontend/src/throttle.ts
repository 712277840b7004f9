/**
 * Rate limiter for probe drags: invocations are spaced at least
 * intervalMs apart, the first call in a quiet period fires
 * immediately, and a trailing call always flushes the latest
 * arguments so the readout settles on where the drag ended.
 */

export interface Throttled<A extends unknown[]> {
  (...args: A): void;
  /** Drop any pending trailing call. */
  cancel(): void;
}

export function throttle<A extends unknown[]>(
  fn: (...args: A) => void,
  intervalMs: number,
): Throttled<A> {
  if (!(intervalMs > 0)) {
    throw new Error("intervalMs must be positive");
  }
  let lastFired = -Infinity;
  let timer: ReturnType<typeof setTimeout> | null = null;
  let pending: A | null = null;

  const fire = (args: A): void => {
    lastFired = Date.now();
    fn(...args);
  };
  const flushTrailing = (): void => {
    timer = null;
    if (pending !== null) {
      const args = pending;
      pending = null;
      fire(args);
    }
  };

  const throttled = (...args: A): void => {
    const now = Date.now();
    if (timer === null && now - lastFired >= intervalMs) {
      fire(args);
      return;
    }
    // inside the window: remember only the newest arguments
    pending = args;
    if (timer === null) {
      timer = setTimeout(flushTrailing, Math.max(0, lastFired + intervalMs - now));
    }
  };
  throttled.cancel = (): void => {
    if (timer !== null) {
      clearTimeout(timer);
      timer = null;
    }
    pending = null;
  };
  return throttled;
}
