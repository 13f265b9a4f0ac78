/** SVG stage renderer.
 *
 * Rebuilds the instrument from its geometry template at every position
 * change.  Linear scales are shown through a magnifying window that keeps
 * one least count at 4.4 px and follows the moving scale; the dial face and
 * protractor disc render whole, with a linearized vernier strip added for
 * the protractor so its tenth-degree marks stay readable.
 */

import { coincidenceIndex, poseFromTicks, unitSymbol } from "./reading";
import { DRAG_PX_PER_TICK } from "./state";
import { toNumber } from "./rational";
import type { MarkDoc, TemplateDoc } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

function el(
  name: string,
  attrs: Record<string, string | number>,
  text?: string,
): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  if (text !== undefined) node.textContent = text;
  return node;
}

function tick(
  parent: SVGElement,
  x1: number,
  y1: number,
  x2: number,
  y2: number,
  cls: string,
): void {
  parent.appendChild(el("line", { x1, y1, x2, y2, class: cls }));
}

function caption(
  parent: SVGElement,
  x: number,
  y: number,
  label: string,
  size: number,
  anchor = "middle",
): void {
  parent.appendChild(
    el("text", { x, y, "font-size": size, "text-anchor": anchor }, label),
  );
}

function markClass(mark: MarkDoc, highlight: boolean): string {
  return highlight ? `mark ${mark.tier} coincide` : `mark ${mark.tier}`;
}

export interface StageModel {
  template: TemplateDoc;
  ticks: number;
  showReading: boolean;
}

export function renderStage(stage: HTMLElement, model: StageModel): void {
  const { template } = model;
  let svg: SVGElement;
  if (template.kind === "dial") {
    svg = dialView(model);
  } else if (template.kind === "protractor") {
    svg = protractorView(model);
  } else {
    svg = linearView(model);
  }
  stage.replaceChildren(svg);
}

/** Caliper beam + sliding vernier, and micrometer sleeve + thimble strip. */
function linearView(model: StageModel): SVGElement {
  const { template, ticks, showReading } = model;
  const meta = template.metadata;
  const isMicrometer = template.kind === "micrometer";
  const width = 920;
  const height = 250;
  // Pixels per axis unit so that one tick spans DRAG_PX_PER_TICK pixels.
  const k = DRAG_PX_PER_TICK / toNumber(meta.least_count);
  const slide = poseFromTicks(meta, ticks).amount;
  const axisMax = Math.max(
    ...template.fixed_marks.map((m) => toNumber(m.axis_pos)),
  );

  const windowWidth = (isMicrometer ? width - 260 : width) / k;
  const vernierSpan = template.moving_marks.length
    ? Math.max(...template.moving_marks.map((m) => toNumber(m.axis_pos)))
    : 0;
  const minLeft = -windowWidth / 8;
  const maxLeft = Math.max(minLeft, axisMax - windowWidth * 0.875);
  let viewLeft = slide + (isMicrometer ? 0 : vernierSpan / 2) - windowWidth / 2;
  viewLeft = Math.min(Math.max(viewLeft, minLeft), maxLeft);

  const svg = el("svg", {
    viewBox: `0 0 ${width} ${height}`,
    width: "100%",
    role: "img",
  });
  const world = el("g", { transform: `translate(${-viewLeft * k}, 0)` });
  svg.appendChild(world);

  const datumY = 110;
  tick(world, -k, datumY, (axisMax + 1) * k, datumY, "beam");
  for (const mark of template.fixed_marks) {
    const x = toNumber(mark.axis_pos) * k;
    if (x < (viewLeft - 1) * k || x > (viewLeft + windowWidth + 1) * k) continue;
    const len = mark.tier === "major" ? 30 : 18;
    tick(world, x, datumY - len, x, datumY, markClass(mark, false));
    if (mark.label !== null) {
      caption(world, x, datumY - 40, mark.label, 14);
    }
  }

  if (isMicrometer) {
    // Sleeve edge pointer plus the unrolled thimble strip at the right.
    tick(world, slide * k, datumY, slide * k, datumY + 26, "datum");
    const strip = el("g", {});
    svg.appendChild(strip);
    const stripX = width - 180;
    const stripTop = 16;
    const step = (height - 40) / meta.main_division_ticks;
    const current = ticks % meta.main_division_ticks;
    for (let j = 0; j < template.moving_marks.length; j += 1) {
      const mark = template.moving_marks[j]!;
      const y = stripTop + j * step;
      const len = mark.tier === "major" ? 44 : 28;
      const highlight = showReading && j === current;
      tick(strip, stripX, y, stripX + len, y, markClass(mark, highlight));
      if (mark.label !== null) {
        caption(strip, stripX + 52, y + 4, mark.label, 12, "start");
      }
    }
    tick(
      strip,
      stripX - 36,
      stripTop + current * step,
      stripX - 6,
      stripTop + current * step,
      "datum",
    );
    strip.appendChild(
      el("rect", {
        x: stripX - 10,
        y: stripTop - 10,
        width: 150,
        height: height - 16,
        class: "frame",
      }),
    );
  } else {
    const coincide = showReading ? coincidenceIndex(meta, ticks) : -1;
    const frameLeft = (slide - 0.2) * k;
    const frameWidth = (vernierSpan + 0.4) * k;
    world.appendChild(
      el("rect", { x: frameLeft, y: datumY + 4, width: frameWidth, height: 52, class: "frame" }),
    );
    template.moving_marks.forEach((mark, j) => {
      const x = (slide + toNumber(mark.axis_pos)) * k;
      const len = mark.tier === "major" ? 26 : 16;
      tick(world, x, datumY + 4, x, datumY + 4 + len, markClass(mark, j === coincide));
      if (mark.label !== null) {
        caption(world, x, datumY + 50, mark.label, 13);
      }
    });
    tick(world, slide * k, datumY - 6, slide * k, datumY + 4, "datum");
  }
  return svg;
}

/** Dial face with main hand, revolution counter, and sub-dial. */
function dialView(model: StageModel): SVGElement {
  const { template, ticks, showReading } = model;
  const meta = template.metadata;
  const size = 440;
  const cx = size / 2;
  const cy = size / 2;
  const r = size / 2 - 26;
  const svg = el("svg", { viewBox: `0 0 ${size} ${size}`, width: "100%", role: "img" });
  svg.appendChild(el("circle", { cx, cy, r: r + 8, class: "frame" }));

  const current = ticks % (meta.divisions_per_revolution ?? 100);
  for (let i = 0; i < template.fixed_marks.length; i += 1) {
    const mark = template.fixed_marks[i]!;
    const angle = ((toNumber(mark.axis_pos) - 90) * Math.PI) / 180;
    const len = mark.tier === "major" ? 22 : 12;
    const highlight = showReading && i === current;
    const x1 = cx + (r - len) * Math.cos(angle);
    const y1 = cy + (r - len) * Math.sin(angle);
    const x2 = cx + r * Math.cos(angle);
    const y2 = cy + r * Math.sin(angle);
    tick(svg, x1, y1, x2, y2, markClass(mark, highlight));
    if (mark.label !== null) {
      const lx = cx + (r - 40) * Math.cos(angle);
      const ly = cy + (r - 40) * Math.sin(angle);
      caption(svg, lx, ly + 4, mark.label, 14);
    }
  }

  // Revolution counter: a small sub-dial below the centre.
  const pose = poseFromTicks(meta, ticks);
  const subCy = cy + r * 0.45;
  const subR = 38;
  svg.appendChild(el("circle", { cx, cy: subCy, r: subR, class: "frame" }));
  const dpr = meta.divisions_per_revolution ?? 100;
  const revolutionsTotal = meta.range_max_ticks / dpr;
  for (let i = 0; i < revolutionsTotal; i += 1) {
    const angle = ((i * (360 / revolutionsTotal) - 90) * Math.PI) / 180;
    const x1 = cx + (subR - 8) * Math.cos(angle);
    const y1 = subCy + (subR - 8) * Math.sin(angle);
    tick(svg, x1, y1, cx + subR * Math.cos(angle), subCy + subR * Math.sin(angle), "mark minor");
    caption(
      svg,
      cx + (subR - 17) * Math.cos(angle),
      subCy + (subR - 17) * Math.sin(angle) + 3,
      String(i),
      9,
    );
  }
  const revHand = el("g", { transform: `rotate(${pose.revolution ?? 0} ${cx} ${subCy})` });
  tick(revHand, cx, subCy, cx, subCy - subR + 10, "hand2");
  svg.appendChild(revHand);

  const hand = el("g", { transform: `rotate(${pose.amount} ${cx} ${cy})` });
  tick(hand, cx, cy + 18, cx, cy - r + 26, "hand");
  svg.appendChild(hand);
  svg.appendChild(el("circle", { cx, cy, r: 6, class: "hub" }));
  return svg;
}

/** Protractor arc with blade, plus a magnified linear strip of the vernier. */
function protractorView(model: StageModel): SVGElement {
  const { template, ticks, showReading } = model;
  const meta = template.metadata;
  const width = 920;
  const height = 420;
  const cx = width / 2;
  const cy = height - 60;
  const r = 290;
  const svg = el("svg", { viewBox: `0 0 ${width} ${height}`, width: "100%", role: "img" });

  // 0° on the left horizon, increasing clockwise over the top.
  const point = (angleDeg: number, radius: number): [number, number] => {
    const rad = (angleDeg * Math.PI) / 180;
    return [cx - radius * Math.cos(rad), cy - radius * Math.sin(rad)];
  };

  tick(svg, cx - r - 24, cy, cx + r + 24, cy, "beam");
  for (const mark of template.fixed_marks) {
    const angle = toNumber(mark.axis_pos);
    const len = mark.tier === "major" ? 18 : 9;
    const [x1, y1] = point(angle, r - len);
    const [x2, y2] = point(angle, r);
    tick(svg, x1, y1, x2, y2, markClass(mark, false));
    if (mark.label !== null && Number(mark.label) % 10 === 0) {
      const [lx, ly] = point(angle, r + 18);
      caption(svg, lx, ly + 4, mark.label, 13);
    }
  }

  const measured = poseFromTicks(meta, ticks).amount;
  const [bx, by] = point(measured, r - 34);
  tick(svg, cx, cy, bx, by, "datum");
  svg.appendChild(el("circle", { cx, cy, r: 5, class: "hub" }));

  // Magnified vernier strip: degrees around the blade vs the vernier plate.
  const k = DRAG_PX_PER_TICK / toNumber(meta.least_count);
  const stripY = 58;
  const stripWidth = width - 160;
  const windowDeg = stripWidth / k;
  const vernierSpan = Math.max(...template.moving_marks.map((m) => toNumber(m.axis_pos)));
  const axisMax = Math.max(...template.fixed_marks.map((m) => toNumber(m.axis_pos)));
  const minLeft = -windowDeg / 8;
  const maxLeft = Math.max(minLeft, axisMax - windowDeg * 0.875);
  let left = measured + vernierSpan / 2 - windowDeg / 2;
  left = Math.min(Math.max(left, minLeft), maxLeft);
  const strip = el("g", { transform: `translate(${80 - left * k}, 0)` });
  svg.appendChild(strip);
  svg.appendChild(
    el("rect", { x: 76, y: stripY - 44, width: stripWidth + 8, height: 96, class: "frame" }),
  );
  tick(strip, (left - 1) * k, stripY, (left + windowDeg + 1) * k, stripY, "beam");
  for (const mark of template.fixed_marks) {
    const angle = toNumber(mark.axis_pos);
    if (angle < left - 1 || angle > left + windowDeg + 1) continue;
    const x = angle * k;
    const len = mark.tier === "major" ? 24 : 14;
    tick(strip, x, stripY - len, x, stripY, markClass(mark, false));
    if (mark.label !== null) caption(strip, x, stripY - 28, mark.label, 12);
  }
  const coincide = showReading ? coincidenceIndex(meta, ticks) : -1;
  template.moving_marks.forEach((mark, j) => {
    const x = (measured + toNumber(mark.axis_pos)) * k;
    const len = mark.tier === "major" ? 22 : 13;
    tick(strip, x, stripY, x, stripY + len, markClass(mark, j === coincide));
    if (mark.label !== null) caption(strip, x, stripY + 40, mark.label, 12);
  });
  tick(strip, measured * k, stripY - 6, measured * k, stripY + 6, "datum");
  caption(svg, 78, stripY - 52, `vernier × ${meta.vernier_divisions ?? 0}`, 11, "start");
  return svg;
}

export function readingSymbol(template: TemplateDoc): string {
  return unitSymbol(template.metadata);
}
