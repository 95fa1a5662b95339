/** Diverging color scale for relative-performance values.
 *
 * Maps +100 -> green, 0 -> yellow, -100 -> red, interpolating linearly in
 * RGB on each half of the range. Values outside [-100, 100] clamp.
 */

export interface Rgb {
  r: number;
  g: number;
  b: number;
}

export const GREEN: Rgb = { r: 0, g: 128, b: 0 };
export const YELLOW: Rgb = { r: 255, g: 255, b: 0 };
export const RED: Rgb = { r: 255, g: 0, b: 0 };

function lerp(a: number, b: number, t: number): number {
  return Math.round(a + (b - a) * t);
}

function mix(a: Rgb, b: Rgb, t: number): Rgb {
  return { r: lerp(a.r, b.r, t), g: lerp(a.g, b.g, t), b: lerp(a.b, b.b, t) };
}

export function relPerfColor(value: number): Rgb {
  const v = Math.max(-100, Math.min(100, value));
  if (v >= 0) {
    return mix(YELLOW, GREEN, v / 100);
  }
  return mix(YELLOW, RED, -v / 100);
}

export function toHex(c: Rgb): string {
  const h = (x: number) => x.toString(16).padStart(2, "0");
  return `#${h(c.r)}${h(c.g)}${h(c.b)}`;
}

export function relPerfHex(value: number): string {
  return toHex(relPerfColor(value));
}
