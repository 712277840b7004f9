import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { throttle } from "../src/throttle.js";

const INTERVAL = 34;

describe("throttle", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("fires the first call immediately", () => {
    const calls: number[] = [];
    const t = throttle((v: number) => calls.push(v), INTERVAL);
    t(7);
    expect(calls).toEqual([7]);
  });

  it("collapses a burst to the leading call plus a trailing flush of the last args", () => {
    const calls: number[] = [];
    const t = throttle((v: number) => calls.push(v), INTERVAL);
    t(1);
    t(2);
    t(3);
    expect(calls).toEqual([1]);
    vi.advanceTimersByTime(INTERVAL);
    expect(calls).toEqual([1, 3]);
    vi.advanceTimersByTime(10 * INTERVAL);
    expect(calls).toEqual([1, 3]);
  });

  it("spaces invocations at least the interval apart under a sustained drag", () => {
    const stamps: number[] = [];
    const values: number[] = [];
    const t = throttle((v: number) => {
      stamps.push(Date.now());
      values.push(v);
    }, INTERVAL);
    for (let i = 0; i < 100; i += 1) {
      t(i);
      vi.advanceTimersByTime(5);
    }
    vi.advanceTimersByTime(2 * INTERVAL); // trailing flush
    for (let i = 1; i < stamps.length; i += 1) {
      expect(stamps[i] - stamps[i - 1]).toBeGreaterThanOrEqual(INTERVAL);
    }
    // 500 ms of dragging at 34 ms spacing stays under 30 requests/s
    expect(stamps.length).toBeLessThanOrEqual(16);
    expect(values[values.length - 1]).toBe(99);
  });

  it("passes slow calls straight through", () => {
    const calls: number[] = [];
    const t = throttle((v: number) => calls.push(v), INTERVAL);
    t(1);
    vi.advanceTimersByTime(50);
    t(2);
    vi.advanceTimersByTime(50);
    t(3);
    vi.advanceTimersByTime(50);
    expect(calls).toEqual([1, 2, 3]);
  });

  it("keeps respecting the window after a trailing flush", () => {
    const base = Date.now();
    const stamps: number[] = [];
    const t = throttle(() => stamps.push(Date.now() - base), INTERVAL);
    t(); // fires at 0
    vi.advanceTimersByTime(10);
    t(); // pending, flushes at 34
    vi.advanceTimersByTime(INTERVAL - 10);
    vi.advanceTimersByTime(6); // now 40
    t(); // inside the new window, flushes at 68
    vi.advanceTimersByTime(INTERVAL);
    expect(stamps).toEqual([0, INTERVAL, 2 * INTERVAL]);
  });

  it("cancel drops the pending trailing call", () => {
    const calls: number[] = [];
    const t = throttle((v: number) => calls.push(v), INTERVAL);
    t(1);
    t(2);
    t.cancel();
    vi.advanceTimersByTime(10 * INTERVAL);
    expect(calls).toEqual([1]);
  });

  it("rejects a nonpositive interval", () => {
    expect(() => throttle(() => undefined, 0)).toThrow(/positive/);
  });
});
