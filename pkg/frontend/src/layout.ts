/** Block positions for rendering.
 *
 * Path-shaped graphs (the spindle families and ladders read left to
 * right) pin their backbone on a horizontal line; everything else gets
 * a small deterministic force simulation (seeded PRNG, fixed iteration
 * count) so reloading produces the same picture.
 */

import type { SpgDocument } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function pathBackbone(doc: SpgDocument): number[] | null {
  const k = doc.vertices.length;
  if (k === 1) return [0];
  if (doc.edges.length !== k - 1) return null;
  const degree = new Array<number>(k).fill(0);
  const nbrs: number[][] = Array.from({ length: k }, () => []);
  for (const [i, j] of doc.edges) {
    degree[i] += 1;
    degree[j] += 1;
    nbrs[i].push(j);
    nbrs[j].push(i);
  }
  if (degree.some((d) => d > 2)) return null;
  const ends = degree.flatMap((d, i) => (d === 1 ? [i] : []));
  if (ends.length !== 2) return null;
  const order = [Math.min(...ends)];
  let prev = -1;
  while (order.length < k) {
    const cur = order[order.length - 1];
    const next = nbrs[cur].filter((v) => v !== prev);
    if (next.length !== 1) return null;
    prev = cur;
    order.push(next[0]);
  }
  return order;
}

export function computeLayout(
  doc: SpgDocument,
  width: number,
  height: number,
): Point[] {
  const k = doc.vertices.length;
  const margin = 50;
  const backbone = pathBackbone(doc);
  if (backbone) {
    const points = new Array<Point>(k);
    backbone.forEach((block, pos) => {
      const x = k === 1 ? width / 2
        : margin + (pos * (width - 2 * margin)) / (k - 1);
      points[block] = { x, y: height / 2 };
    });
    return points;
  }

  const random = mulberry32(k * 2654435761 + doc.edges.length);
  const points: Point[] = Array.from({ length: k }, (_, i) => ({
    x: width / 2 + (width / 3) * Math.cos((2 * Math.PI * i) / k) + random() * 8,
    y: height / 2 + (height / 3) * Math.sin((2 * Math.PI * i) / k) + random() * 8,
  }));
  const edgeSet = doc.edges.map(([i, j]) => [i, j] as const);
  const spring = Math.min(width, height) / Math.max(2, Math.sqrt(k) + 1);

  for (let iter = 0; iter < 220; iter++) {
    const force: Point[] = Array.from({ length: k }, () => ({ x: 0, y: 0 }));
    for (let i = 0; i < k; i++) {
      for (let j = i + 1; j < k; j++) {
        const dx = points[i].x - points[j].x;
        const dy = points[i].y - points[j].y;
        const dist2 = Math.max(dx * dx + dy * dy, 1);
        const push = (spring * spring) / dist2;
        const dist = Math.sqrt(dist2);
        force[i].x += (dx / dist) * push;
        force[i].y += (dy / dist) * push;
        force[j].x -= (dx / dist) * push;
        force[j].y -= (dy / dist) * push;
      }
    }
    for (const [i, j] of edgeSet) {
      const dx = points[i].x - points[j].x;
      const dy = points[i].y - points[j].y;
      const dist = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = (dist - spring) * 0.08;
      force[i].x -= (dx / dist) * pull;
      force[i].y -= (dy / dist) * pull;
      force[j].x += (dx / dist) * pull;
      force[j].y += (dy / dist) * pull;
    }
    const cooling = 1 - iter / 220;
    for (let i = 0; i < k; i++) {
      points[i].x += Math.max(-12, Math.min(12, force[i].x)) * cooling;
      points[i].y += Math.max(-12, Math.min(12, force[i].y)) * cooling;
      points[i].x = Math.max(margin, Math.min(width - margin, points[i].x));
      points[i].y = Math.max(margin, Math.min(height - margin, points[i].y));
    }
  }
  return points;
}
