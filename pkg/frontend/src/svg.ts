/** Small deterministic SVG-building helpers shared by both figure kinds. */

export function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

/** Fixed-precision coordinates keep output byte-stable across runs. */
export function px(v: number): string {
  return v.toFixed(2);
}

export function fmtTick(v: number): string {
  if (v === 0) return "0";
  const abs = Math.abs(v);
  if (abs >= 0.01 && abs < 10000) {
    return Number(v.toPrecision(4)).toString();
  }
  return v.toExponential(2);
}

export function niceTicks(min: number, max: number, count: number): number[] {
  const range = max - min || Math.abs(min) || 1;
  const rough = range / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rough)));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((n) => n >= rough) ?? rough;
  const start = Math.ceil(min / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= max + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

export interface Scale {
  (value: number): number;
}

export function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (v: number) => r0 + ((v - d0) / span) * (r1 - r0);
}

/** Five-stop dark-blue-to-yellow gradient over [0, 1]. */
const STOPS: Array<[number, number, number]> = [
  [68, 1, 84],
  [59, 82, 139],
  [33, 145, 140],
  [94, 201, 98],
  [253, 231, 37],
];

export function colormap(t: number): string {
  if (!Number.isFinite(t)) return "#bbbbbb";
  const clamped = Math.min(1, Math.max(0, t));
  const scaled = clamped * (STOPS.length - 1);
  const lo = Math.min(STOPS.length - 2, Math.floor(scaled));
  const frac = scaled - lo;
  const mix = STOPS[lo].map((c, i) => Math.round(c + frac * (STOPS[lo + 1][i] - c)));
  return `rgb(${mix[0]},${mix[1]},${mix[2]})`;
}

export const SERIES_COLORS = ["#4361ee", "#e63946", "#2d6a4f", "#f77f00", "#7209b7", "#118ab2"];

export function svgDocument(width: number, height: number, body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">\n` +
    `<rect width="${width}" height="${height}" fill="white"/>\n` +
    body +
    "</svg>\n"
  );
}

export function textEl(
  x: number,
  y: number,
  content: string,
  opts: { size?: number; anchor?: string; rotate?: number; color?: string } = {}
): string {
  const size = opts.size ?? 11;
  const anchor = opts.anchor ?? "middle";
  const fill = opts.color ?? "#333";
  const transform = opts.rotate ? ` transform="rotate(${opts.rotate} ${px(x)} ${px(y)})"` : "";
  return (
    `<text x="${px(x)}" y="${px(y)}" font-size="${size}" text-anchor="${anchor}" ` +
    `fill="${fill}"${transform}>${esc(content)}</text>\n`
  );
}
