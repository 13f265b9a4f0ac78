"use strict";
(() => {
  // src/api.ts
  var ApiError = class extends Error {
    constructor(code, message, status) {
      super(message);
      this.code = code;
      this.status = status;
      this.name = "ApiError";
    }
  };
  var LabApi = class {
    constructor(base) {
      this.base = base;
    }
    async request(method, path, body) {
      const init = { method };
      if (body !== void 0) {
        init.headers = { "Content-Type": "application/json" };
        init.body = JSON.stringify(body);
      }
      const response = await fetch(this.base + path, init);
      const doc = await response.json();
      if (!response.ok) {
        throw new ApiError(
          typeof doc.code === "string" ? doc.code : "internal",
          typeof doc.message === "string" ? doc.message : "request failed",
          response.status
        );
      }
      return doc;
    }
    async createSession() {
      const doc = await this.request("POST", "/sessions");
      return doc.session_id;
    }
    getTemplate(kind) {
      return this.request("GET", `/instruments/${kind}/template`);
    }
    issueExercise(sessionId, kind) {
      return this.request("POST", `/sessions/${sessionId}/exercises`, { kind });
    }
    submitAnswer(sessionId, exerciseId, text) {
      return this.request(
        "POST",
        `/sessions/${sessionId}/exercises/${exerciseId}/answer`,
        { text }
      );
    }
    getStats(sessionId) {
      return this.request("GET", `/sessions/${sessionId}/stats`);
    }
  };

  // src/rational.ts
  function gcd(a, b) {
    while (b !== 0) {
      const t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  function rational(num, den) {
    if (!Number.isSafeInteger(num) || !Number.isSafeInteger(den) || den <= 0) {
      throw new Error(`not a valid rational: ${num}/${den}`);
    }
    const g = gcd(Math.abs(num), den) || 1;
    return { num: num / g, den: den / g };
  }
  function mulInt(r, k) {
    return rational(r.num * k, r.den);
  }
  function div(a, b) {
    if (b.num === 0) throw new Error("division by zero");
    return rational(a.num * b.den, a.den * b.num);
  }
  function equals(a, b) {
    return a.num * b.den === b.num * a.den;
  }
  function toNumber(r) {
    return r.num / r.den;
  }
  function asInteger(r) {
    return r.num % r.den === 0 ? r.num / r.den : null;
  }
  function decimalString(r) {
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

  // src/reading.ts
  function unitSymbol(meta) {
    return meta.display_unit === "degree" ? "°" : meta.display_unit;
  }
  function checkTicks(meta, ticks) {
    if (!Number.isSafeInteger(ticks) || ticks < 0 || ticks > meta.range_max_ticks) {
      throw new Error(`${ticks} outside [0, ${meta.range_max_ticks}] for ${meta.kind}`);
    }
  }
  function splitReading(meta, ticks) {
    checkTicks(meta, ticks);
    const per = meta.divisions_per_revolution ?? meta.main_division_ticks;
    return { whole: Math.floor(ticks / per), index: ticks % per };
  }
  function coincidenceIndex(meta, ticks) {
    checkTicks(meta, ticks);
    if (meta.vernier_divisions === null) {
      throw new Error(`${meta.kind} has no vernier scale`);
    }
    return ticks % meta.vernier_divisions;
  }
  function formatValue(meta, ticks) {
    checkTicks(meta, ticks);
    const scaled = mulInt(meta.least_count_display, ticks * 10 ** meta.display_decimals);
    const n = asInteger(scaled);
    if (n === null) throw new Error(`${meta.kind} value does not terminate`);
    if (meta.display_decimals === 0) return String(n);
    const base = 10 ** meta.display_decimals;
    const frac = String(n % base).padStart(meta.display_decimals, "0");
    return `${Math.floor(n / base)}.${frac}`;
  }
  function readingText(meta, ticks) {
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
        return `sleeve ${whole} × ${division} ${symbol} + thimble ${index} × ${lc} ${symbol} = ${value} ${symbol}`;
      }
      case "dial":
        return `revolutions ${whole} + dial ${index} × ${lc} ${symbol} = ${value} ${symbol}`;
      default:
        throw new Error(`unknown instrument kind: ${meta.kind}`);
    }
  }
  function poseFromTicks(meta, ticks) {
    checkTicks(meta, ticks);
    if (meta.kind === "dial") {
      const dpr = meta.divisions_per_revolution;
      const revolutionsTotal = meta.range_max_ticks / dpr;
      return {
        amount: ticks % dpr * 360 / dpr,
        revolution: Math.floor(ticks / dpr) * 360 / revolutionsTotal
      };
    }
    return { amount: ticks * toAxis(meta.least_count), revolution: null };
  }
  function toAxis(r) {
    return r.num / r.den;
  }
  function ticksFromTransform(meta, doc) {
    if (doc.kind === "rotation") {
      const dpr = meta.divisions_per_revolution;
      const revolutionsTotal = meta.range_max_ticks / dpr;
      const partial = asInteger(div(mulInt(doc.amount, dpr), rational(360, 1)));
      if (partial === null) throw new Error("rotation is not a whole tick");
      let revolutions = 0;
      if (doc.revolution_amount !== void 0) {
        const r = asInteger(
          div(mulInt(doc.revolution_amount, revolutionsTotal), rational(360, 1))
        );
        if (r === null) throw new Error("revolution angle is not a whole turn");
        revolutions = r;
      }
      const ticks2 = revolutions * dpr + partial;
      checkTicks(meta, ticks2);
      return ticks2;
    }
    const ticksRational = div(doc.amount, meta.least_count);
    const ticks = asInteger(ticksRational);
    if (ticks === null || !equals(mulInt(meta.least_count, ticks), doc.amount)) {
      throw new Error(`translation is not a whole tick: ${doc.amount.num}/${doc.amount.den}`);
    }
    checkTicks(meta, ticks);
    return ticks;
  }

  // src/state.ts
  var DRAG_PX_PER_TICK = 4.4;
  function initialState() {
    return {
      mode: "explore",
      ticks: 0,
      showReading: false,
      feedback: "",
      feedbackTone: "",
      exercise: null,
      busy: false,
      offerNext: false,
      offerRetry: false
    };
  }
  function dragTo(startTicks, pixelDelta, rangeMax) {
    const moved = startTicks + pixelDelta / DRAG_PX_PER_TICK;
    return Math.min(Math.max(Math.round(moved), 0), rangeMax);
  }
  function resetView(state) {
    if (state.mode === "quiz") {
      return { ...state };
    }
    return {
      ...state,
      ticks: 0,
      showReading: false,
      feedback: "",
      feedbackTone: ""
    };
  }
  var PLAIN_DECIMAL = /^\s*[0-9]+(\.[0-9]+)?\s*$/;
  function parseHint(text) {
    if (PLAIN_DECIMAL.test(text)) return null;
    if (text.includes(",")) return "Use a decimal point, not a comma.";
    if (text.trim() === "") return "Type the reading first.";
    return "Enter a plain decimal number, like 12.3.";
  }
  async function submitEntry(state, api, text) {
    if (state.mode !== "quiz" || state.exercise === null || state.busy) {
      return state;
    }
    if (state.exercise.answered) {
      return {
        ...state,
        feedback: "This question is done — ask for a new one.",
        feedbackTone: "info"
      };
    }
    if (state.exercise.revealed) {
      return {
        ...state,
        feedback: "Reading was shown — ask for a new question to be graded.",
        feedbackTone: "info"
      };
    }
    const hint = parseHint(text);
    if (hint !== null) {
      return { ...state, feedback: hint, feedbackTone: "info" };
    }
    const pending = { ...state, busy: true, offerRetry: false };
    try {
      const graded = await api.submitAnswer(state.exercise.id, text);
      return {
        ...pending,
        busy: false,
        feedback: graded.message,
        feedbackTone: graded.verdict === "correct" ? "ok" : "bad",
        offerNext: true,
        exercise: { ...state.exercise, answered: true }
      };
    } catch (error) {
      if (error instanceof ApiError && error.code === "already_answered") {
        return {
          ...pending,
          busy: false,
          feedback: "This question was already answered.",
          feedbackTone: "info",
          offerNext: true,
          exercise: { ...state.exercise, answered: true }
        };
      }
      if (error instanceof ApiError && error.code === "malformed_input") {
        return {
          ...pending,
          busy: false,
          feedback: "That doesn't read as a number — try again.",
          feedbackTone: "info"
        };
      }
      return {
        ...pending,
        busy: false,
        feedback: pending.feedback,
        offerRetry: true
      };
    }
  }
  function revealDuringQuiz(state) {
    if (state.mode !== "quiz" || state.exercise === null) {
      return { ...state, showReading: true };
    }
    return {
      ...state,
      showReading: true,
      exercise: { ...state.exercise, revealed: true },
      feedback: state.exercise.answered ? state.feedback : "Reading shown — this question no longer counts. Ask for a new one.",
      feedbackTone: state.exercise.answered ? state.feedbackTone : "info",
      offerNext: true
    };
  }

  // src/render.ts
  var SVG_NS = "http://www.w3.org/2000/svg";
  function el(name, attrs, text) {
    const node = document.createElementNS(SVG_NS, name);
    for (const [key, value] of Object.entries(attrs)) {
      node.setAttribute(key, String(value));
    }
    if (text !== void 0) node.textContent = text;
    return node;
  }
  function tick(parent, x1, y1, x2, y2, cls) {
    parent.appendChild(el("line", { x1, y1, x2, y2, class: cls }));
  }
  function caption(parent, x, y, label, size, anchor = "middle") {
    parent.appendChild(
      el("text", { x, y, "font-size": size, "text-anchor": anchor }, label)
    );
  }
  function markClass(mark, highlight) {
    return highlight ? `mark ${mark.tier} coincide` : `mark ${mark.tier}`;
  }
  function renderStage(stage, model) {
    const { template } = model;
    let svg;
    if (template.kind === "dial") {
      svg = dialView(model);
    } else if (template.kind === "protractor") {
      svg = protractorView(model);
    } else {
      svg = linearView(model);
    }
    stage.replaceChildren(svg);
  }
  function linearView(model) {
    const { template, ticks, showReading } = model;
    const meta = template.metadata;
    const isMicrometer = template.kind === "micrometer";
    const width = 920;
    const height = 250;
    const k = DRAG_PX_PER_TICK / toNumber(meta.least_count);
    const slide = poseFromTicks(meta, ticks).amount;
    const axisMax = Math.max(
      ...template.fixed_marks.map((m) => toNumber(m.axis_pos))
    );
    const windowWidth = (isMicrometer ? width - 260 : width) / k;
    const vernierSpan = template.moving_marks.length ? Math.max(...template.moving_marks.map((m) => toNumber(m.axis_pos))) : 0;
    const minLeft = -windowWidth / 8;
    const maxLeft = Math.max(minLeft, axisMax - windowWidth * 0.875);
    let viewLeft = slide + (isMicrometer ? 0 : vernierSpan / 2) - windowWidth / 2;
    viewLeft = Math.min(Math.max(viewLeft, minLeft), maxLeft);
    const svg = el("svg", {
      viewBox: `0 0 ${width} ${height}`,
      width: "100%",
      role: "img"
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
      tick(world, slide * k, datumY, slide * k, datumY + 26, "datum");
      const strip = el("g", {});
      svg.appendChild(strip);
      const stripX = width - 180;
      const stripTop = 16;
      const step = (height - 40) / meta.main_division_ticks;
      const current = ticks % meta.main_division_ticks;
      for (let j = 0; j < template.moving_marks.length; j += 1) {
        const mark = template.moving_marks[j];
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
        "datum"
      );
      strip.appendChild(
        el("rect", {
          x: stripX - 10,
          y: stripTop - 10,
          width: 150,
          height: height - 16,
          class: "frame"
        })
      );
    } else {
      const coincide = showReading ? coincidenceIndex(meta, ticks) : -1;
      const frameLeft = (slide - 0.2) * k;
      const frameWidth = (vernierSpan + 0.4) * k;
      world.appendChild(
        el("rect", { x: frameLeft, y: datumY + 4, width: frameWidth, height: 52, class: "frame" })
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
  function dialView(model) {
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
      const mark = template.fixed_marks[i];
      const angle = (toNumber(mark.axis_pos) - 90) * Math.PI / 180;
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
    const pose = poseFromTicks(meta, ticks);
    const subCy = cy + r * 0.45;
    const subR = 38;
    svg.appendChild(el("circle", { cx, cy: subCy, r: subR, class: "frame" }));
    const dpr = meta.divisions_per_revolution ?? 100;
    const revolutionsTotal = meta.range_max_ticks / dpr;
    for (let i = 0; i < revolutionsTotal; i += 1) {
      const angle = (i * (360 / revolutionsTotal) - 90) * Math.PI / 180;
      const x1 = cx + (subR - 8) * Math.cos(angle);
      const y1 = subCy + (subR - 8) * Math.sin(angle);
      tick(svg, x1, y1, cx + subR * Math.cos(angle), subCy + subR * Math.sin(angle), "mark minor");
      caption(
        svg,
        cx + (subR - 17) * Math.cos(angle),
        subCy + (subR - 17) * Math.sin(angle) + 3,
        String(i),
        9
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
  function protractorView(model) {
    const { template, ticks, showReading } = model;
    const meta = template.metadata;
    const width = 920;
    const height = 420;
    const cx = width / 2;
    const cy = height - 60;
    const r = 290;
    const svg = el("svg", { viewBox: `0 0 ${width} ${height}`, width: "100%", role: "img" });
    const point = (angleDeg, radius) => {
      const rad = angleDeg * Math.PI / 180;
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
      el("rect", { x: 76, y: stripY - 44, width: stripWidth + 8, height: 96, class: "frame" })
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

  // src/templates.gen.json
  var templates_gen_default = {
    caliper: {
      kind: "caliper",
      layout: "linear",
      fixed_marks: [
        {
          scale: "fixed",
          axis_pos: {
            num: 0,
            den: 1
          },
          tier: "major",
          label: "0"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 2,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 3,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 4,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 5,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 6,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 7,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 8,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 9,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 10,
            den: 1
          },
          tier: "major",
          label: "10"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 11,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 12,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 13,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 14,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 15,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 16,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 17,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 18,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 19,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 20,
            den: 1
          },
          tier: "major",
          label: "20"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 21,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 22,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 23,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 24,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 25,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 26,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 27,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 28,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 29,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 30,
            den: 1
          },
          tier: "major",
          label: "30"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 31,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 32,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 33,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 34,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 35,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 36,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 37,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 38,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 39,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 40,
            den: 1
          },
          tier: "major",
          label: "40"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 41,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 42,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 43,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 44,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 45,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 46,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 47,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 48,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 49,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 50,
            den: 1
          },
          tier: "major",
          label: "50"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 51,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 52,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 53,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 54,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 55,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 56,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 57,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 58,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 59,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 60,
            den: 1
          },
          tier: "major",
          label: "60"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 61,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 62,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 63,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 64,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 65,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 66,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 67,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 68,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 69,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 70,
            den: 1
          },
          tier: "major",
          label: "70"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 71,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 72,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 73,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 74,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 75,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 76,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 77,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 78,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 79,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 80,
            den: 1
          },
          tier: "major",
          label: "80"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 81,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 82,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 83,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 84,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 85,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 86,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 87,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 88,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 89,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 90,
            den: 1
          },
          tier: "major",
          label: "90"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 91,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 92,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 93,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 94,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 95,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 96,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 97,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 98,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 99,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 100,
            den: 1
          },
          tier: "major",
          label: "100"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 101,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 102,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 103,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 104,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 105,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 106,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 107,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 108,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 109,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 110,
            den: 1
          },
          tier: "major",
          label: "110"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 111,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 112,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 113,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 114,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 115,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 116,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 117,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 118,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 119,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 120,
            den: 1
          },
          tier: "major",
          label: "120"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 121,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 122,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 123,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 124,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 125,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 126,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 127,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 128,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 129,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 130,
            den: 1
          },
          tier: "major",
          label: "130"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 131,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 132,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 133,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 134,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 135,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 136,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 137,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 138,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 139,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 140,
            den: 1
          },
          tier: "major",
          label: "140"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 141,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 142,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 143,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 144,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 145,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 146,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 147,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 148,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 149,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 150,
            den: 1
          },
          tier: "major",
          label: "150"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 151,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 152,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 153,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 154,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 155,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 156,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 157,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 158,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 159,
            den: 1
          },
          tier: "minor",
          label: null
        }
      ],
      moving_marks: [
        {
          scale: "moving",
          axis_pos: {
            num: 0,
            den: 1
          },
          tier: "major",
          label: "0"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 10
          },
          tier: "major",
          label: "1"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 5
          },
          tier: "major",
          label: "2"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 27,
            den: 10
          },
          tier: "major",
          label: "3"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 18,
            den: 5
          },
          tier: "major",
          label: "4"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 2
          },
          tier: "major",
          label: "5"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 27,
            den: 5
          },
          tier: "major",
          label: "6"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 63,
            den: 10
          },
          tier: "major",
          label: "7"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 36,
            den: 5
          },
          tier: "major",
          label: "8"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 81,
            den: 10
          },
          tier: "major",
          label: "9"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 1
          },
          tier: "major",
          label: "10"
        }
      ],
      pointer: [],
      metadata: {
        kind: "caliper",
        display_name: "Vernier caliper",
        dimension: "length",
        least_count: {
          num: 1,
          den: 10
        },
        least_count_display: {
          num: 1,
          den: 10
        },
        range_max_ticks: 1500,
        main_division_ticks: 10,
        display_unit: "mm",
        display_decimals: 1,
        vernier_divisions: 10,
        divisions_per_revolution: null
      }
    },
    micrometer: {
      kind: "micrometer",
      layout: "linear",
      fixed_marks: [
        {
          scale: "fixed",
          axis_pos: {
            num: 0,
            den: 1
          },
          tier: "major",
          label: "0"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 3,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 2,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 5,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 3,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 7,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 4,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 9,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 5,
            den: 1
          },
          tier: "major",
          label: "5"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 11,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 6,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 13,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 7,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 15,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 8,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 17,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 9,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 19,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 10,
            den: 1
          },
          tier: "major",
          label: "10"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 21,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 11,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 23,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 12,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 25,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 13,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 27,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 14,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 29,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 15,
            den: 1
          },
          tier: "major",
          label: "15"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 31,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 16,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 33,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 17,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 35,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 18,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 37,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 19,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 39,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 20,
            den: 1
          },
          tier: "major",
          label: "20"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 41,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 21,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 43,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 22,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 45,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 23,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 47,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 24,
            den: 1
          },
          tier: "major",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 49,
            den: 2
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 25,
            den: 1
          },
          tier: "major",
          label: "25"
        }
      ],
      moving_marks: [
        {
          scale: "moving",
          axis_pos: {
            num: 0,
            den: 1
          },
          tier: "major",
          label: "0"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 1,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 1,
            den: 50
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 3,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 1,
            den: 25
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 1,
            den: 20
          },
          tier: "major",
          label: "5"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 3,
            den: 50
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 7,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 2,
            den: 25
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 1,
            den: 10
          },
          tier: "major",
          label: "10"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 11,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 3,
            den: 25
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 13,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 7,
            den: 50
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 3,
            den: 20
          },
          tier: "major",
          label: "15"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 4,
            den: 25
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 17,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 50
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 19,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 1,
            den: 5
          },
          tier: "major",
          label: "20"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 21,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 11,
            den: 50
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 23,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 6,
            den: 25
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 1,
            den: 4
          },
          tier: "major",
          label: "25"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 13,
            den: 50
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 27,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 7,
            den: 25
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 29,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 3,
            den: 10
          },
          tier: "major",
          label: "30"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 31,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 8,
            den: 25
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 33,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 17,
            den: 50
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 7,
            den: 20
          },
          tier: "major",
          label: "35"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 25
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 37,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 19,
            den: 50
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 39,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 2,
            den: 5
          },
          tier: "major",
          label: "40"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 41,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 21,
            den: 50
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 43,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 11,
            den: 25
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 20
          },
          tier: "major",
          label: "45"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 23,
            den: 50
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 47,
            den: 100
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 12,
            den: 25
          },
          tier: "minor",
          label: null
        },
        {
          scale: "moving",
          axis_pos: {
            num: 49,
            den: 100
          },
          tier: "minor",
          label: null
        }
      ],
      pointer: [],
      metadata: {
        kind: "micrometer",
        display_name: "Micrometer",
        dimension: "length",
        least_count: {
          num: 1,
          den: 100
        },
        least_count_display: {
          num: 1,
          den: 100
        },
        range_max_ticks: 2500,
        main_division_ticks: 50,
        display_unit: "mm",
        display_decimals: 2,
        vernier_divisions: null,
        divisions_per_revolution: null
      }
    },
    dial: {
      kind: "dial",
      layout: "circular",
      fixed_marks: [
        {
          scale: "fixed",
          axis_pos: {
            num: 0,
            den: 1
          },
          tier: "major",
          label: "0"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 18,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 36,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 54,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 72,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 18,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 108,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 126,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 144,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 162,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 36,
            den: 1
          },
          tier: "major",
          label: "10"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 198,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 216,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 234,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 252,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 54,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 288,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 306,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 324,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 342,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 72,
            den: 1
          },
          tier: "major",
          label: "20"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 378,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 396,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 414,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 432,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 90,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 468,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 486,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 504,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 522,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 108,
            den: 1
          },
          tier: "major",
          label: "30"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 558,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 576,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 594,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 612,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 126,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 648,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 666,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 684,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 702,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 144,
            den: 1
          },
          tier: "major",
          label: "40"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 738,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 756,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 774,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 792,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 162,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 828,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 846,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 864,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 882,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 180,
            den: 1
          },
          tier: "major",
          label: "50"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 918,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 936,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 954,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 972,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 198,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1008,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1026,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1044,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1062,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 216,
            den: 1
          },
          tier: "major",
          label: "60"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1098,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1116,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1134,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1152,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 234,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1188,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1206,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1224,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1242,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 252,
            den: 1
          },
          tier: "major",
          label: "70"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1278,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1296,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1314,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1332,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 270,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1368,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1386,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1404,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1422,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 288,
            den: 1
          },
          tier: "major",
          label: "80"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1458,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1476,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1494,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1512,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 306,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1548,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1566,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1584,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1602,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 324,
            den: 1
          },
          tier: "major",
          label: "90"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1638,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1656,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1674,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1692,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 342,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1728,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1746,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1764,
            den: 5
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1782,
            den: 5
          },
          tier: "minor",
          label: null
        }
      ],
      moving_marks: [],
      pointer: [
        {
          scale: "moving",
          axis_pos: {
            num: 0,
            den: 1
          },
          tier: "major",
          label: "main"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 0,
            den: 1
          },
          tier: "major",
          label: "revolutions"
        }
      ],
      metadata: {
        kind: "dial",
        display_name: "Dial indicator",
        dimension: "length",
        least_count: {
          num: 1,
          den: 100
        },
        least_count_display: {
          num: 10,
          den: 1
        },
        range_max_ticks: 1e3,
        main_division_ticks: 10,
        display_unit: "μm",
        display_decimals: 0,
        vernier_divisions: null,
        divisions_per_revolution: 100
      }
    },
    protractor: {
      kind: "protractor",
      layout: "circular",
      fixed_marks: [
        {
          scale: "fixed",
          axis_pos: {
            num: 0,
            den: 1
          },
          tier: "major",
          label: "0"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 1,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 2,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 3,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 4,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 5,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 6,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 7,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 8,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 9,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 10,
            den: 1
          },
          tier: "major",
          label: "10"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 11,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 12,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 13,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 14,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 15,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 16,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 17,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 18,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 19,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 20,
            den: 1
          },
          tier: "major",
          label: "20"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 21,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 22,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 23,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 24,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 25,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 26,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 27,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 28,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 29,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 30,
            den: 1
          },
          tier: "major",
          label: "30"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 31,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 32,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 33,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 34,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 35,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 36,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 37,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 38,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 39,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 40,
            den: 1
          },
          tier: "major",
          label: "40"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 41,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 42,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 43,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 44,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 45,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 46,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 47,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 48,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 49,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 50,
            den: 1
          },
          tier: "major",
          label: "50"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 51,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 52,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 53,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 54,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 55,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 56,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 57,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 58,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 59,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 60,
            den: 1
          },
          tier: "major",
          label: "60"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 61,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 62,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 63,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 64,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 65,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 66,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 67,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 68,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 69,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 70,
            den: 1
          },
          tier: "major",
          label: "70"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 71,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 72,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 73,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 74,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 75,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 76,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 77,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 78,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 79,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 80,
            den: 1
          },
          tier: "major",
          label: "80"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 81,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 82,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 83,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 84,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 85,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 86,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 87,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 88,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 89,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 90,
            den: 1
          },
          tier: "major",
          label: "90"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 91,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 92,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 93,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 94,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 95,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 96,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 97,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 98,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 99,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 100,
            den: 1
          },
          tier: "major",
          label: "100"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 101,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 102,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 103,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 104,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 105,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 106,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 107,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 108,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 109,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 110,
            den: 1
          },
          tier: "major",
          label: "110"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 111,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 112,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 113,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 114,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 115,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 116,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 117,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 118,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 119,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 120,
            den: 1
          },
          tier: "major",
          label: "120"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 121,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 122,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 123,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 124,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 125,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 126,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 127,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 128,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 129,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 130,
            den: 1
          },
          tier: "major",
          label: "130"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 131,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 132,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 133,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 134,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 135,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 136,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 137,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 138,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 139,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 140,
            den: 1
          },
          tier: "major",
          label: "140"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 141,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 142,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 143,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 144,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 145,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 146,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 147,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 148,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 149,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 150,
            den: 1
          },
          tier: "major",
          label: "150"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 151,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 152,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 153,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 154,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 155,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 156,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 157,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 158,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 159,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 160,
            den: 1
          },
          tier: "major",
          label: "160"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 161,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 162,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 163,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 164,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 165,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 166,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 167,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 168,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 169,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 170,
            den: 1
          },
          tier: "major",
          label: "170"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 171,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 172,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 173,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 174,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 175,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 176,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 177,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 178,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 179,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 180,
            den: 1
          },
          tier: "major",
          label: "180"
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 181,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 182,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 183,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 184,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 185,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 186,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 187,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 188,
            den: 1
          },
          tier: "minor",
          label: null
        },
        {
          scale: "fixed",
          axis_pos: {
            num: 189,
            den: 1
          },
          tier: "minor",
          label: null
        }
      ],
      moving_marks: [
        {
          scale: "moving",
          axis_pos: {
            num: 0,
            den: 1
          },
          tier: "major",
          label: "0"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 10
          },
          tier: "major",
          label: "1"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 5
          },
          tier: "major",
          label: "2"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 27,
            den: 10
          },
          tier: "major",
          label: "3"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 18,
            den: 5
          },
          tier: "major",
          label: "4"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 2
          },
          tier: "major",
          label: "5"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 27,
            den: 5
          },
          tier: "major",
          label: "6"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 63,
            den: 10
          },
          tier: "major",
          label: "7"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 36,
            den: 5
          },
          tier: "major",
          label: "8"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 81,
            den: 10
          },
          tier: "major",
          label: "9"
        },
        {
          scale: "moving",
          axis_pos: {
            num: 9,
            den: 1
          },
          tier: "major",
          label: "10"
        }
      ],
      pointer: [],
      metadata: {
        kind: "protractor",
        display_name: "Protractor",
        dimension: "angle",
        least_count: {
          num: 1,
          den: 10
        },
        least_count_display: {
          num: 1,
          den: 10
        },
        range_max_ticks: 1800,
        main_division_ticks: 10,
        display_unit: "degree",
        display_decimals: 1,
        vernier_divisions: 10,
        divisions_per_revolution: null
      }
    }
  };

  // src/main.ts
  var EMBEDDED = templates_gen_default;
  function byId(id) {
    const node = document.getElementById(id);
    if (node === null) {
      throw new Error(`lab page is missing #${id}`);
    }
    return node;
  }
  function readConfig() {
    const config = window.VMLAB_CONFIG;
    if (!config || typeof config.kind !== "string") {
      return null;
    }
    return config;
  }
  async function loadTemplate(config, api) {
    if (api !== null) {
      try {
        return await api.getTemplate(config.kind);
      } catch {
      }
    } else if (config.templateUrl) {
      try {
        const response = await fetch(config.templateUrl);
        if (response.ok) {
          return await response.json();
        }
      } catch {
      }
    }
    const embedded = EMBEDDED[config.kind];
    if (embedded === void 0) {
      throw new Error(`no template for instrument kind ${config.kind}`);
    }
    return embedded;
  }
  var LabController = class {
    constructor(config, template, api) {
      this.config = config;
      this.template = template;
      this.api = api;
      this.state = initialState();
      this.session = null;
      this.stage = byId("stage");
      this.modeExplore = byId("mode-explore");
      this.modeQuiz = byId("mode-quiz");
      this.showReading = byId("show-reading");
      this.resetButton = byId("reset");
      this.readingLine = byId("reading-line");
      this.quizPanel = byId("quiz-panel");
      this.quizPrompt = byId("quiz-prompt");
      this.answerField = byId("answer");
      this.submitButton = byId("submit");
      this.nextButton = byId("next");
      this.feedback = byId("feedback");
      this.score = byId("score");
      this.meta = template.metadata;
    }
    start() {
      if (this.api === null) {
        this.modeQuiz.disabled = true;
        this.modeQuiz.title = "Quiz needs a running lab server.";
      }
      this.bindStage();
      this.modeExplore.addEventListener("click", () => this.switchMode("explore"));
      this.modeQuiz.addEventListener("click", () => this.switchMode("quiz"));
      this.showReading.addEventListener("change", () => this.onShowReading());
      this.resetButton.addEventListener("click", () => this.onReset());
      this.submitButton.addEventListener("click", () => void this.onSubmit());
      this.nextButton.addEventListener("click", () => void this.onNext());
      this.answerField.addEventListener("keydown", (event) => {
        if (event.key === "Enter") {
          event.preventDefault();
          void this.onSubmit();
        }
      });
      this.render();
    }
    // -- stage interaction ---------------------------------------------
    bindStage() {
      let dragStartX = 0;
      let dragStartTicks = 0;
      let dragScale = 1;
      let dragging = false;
      this.stage.addEventListener("pointerdown", (event) => {
        if (this.state.mode !== "explore") {
          return;
        }
        const svg = this.stage.querySelector("svg");
        if (svg === null) {
          return;
        }
        dragging = true;
        dragStartX = event.clientX;
        dragStartTicks = this.state.ticks;
        const shown = svg.getBoundingClientRect().width;
        dragScale = shown > 0 ? svg.viewBox.baseVal.width / shown : 1;
        this.stage.setPointerCapture(event.pointerId);
        event.preventDefault();
      });
      this.stage.addEventListener("pointermove", (event) => {
        if (!dragging) {
          return;
        }
        const delta = (event.clientX - dragStartX) * dragScale;
        const ticks = dragTo(dragStartTicks, delta, this.meta.range_max_ticks);
        if (ticks !== this.state.ticks) {
          this.state = { ...this.state, ticks };
          this.render();
        }
      });
      const endDrag = (event) => {
        if (dragging) {
          dragging = false;
          this.stage.releasePointerCapture(event.pointerId);
        }
      };
      this.stage.addEventListener("pointerup", endDrag);
      this.stage.addEventListener("pointercancel", endDrag);
      this.stage.tabIndex = 0;
      this.stage.addEventListener("keydown", (event) => {
        if (this.state.mode !== "explore") {
          return;
        }
        const step = event.key === "ArrowRight" ? 1 : event.key === "ArrowLeft" ? -1 : 0;
        if (step === 0) {
          return;
        }
        const scaled = event.shiftKey ? step * this.meta.main_division_ticks : step;
        const ticks = Math.min(
          Math.max(this.state.ticks + scaled, 0),
          this.meta.range_max_ticks
        );
        if (ticks !== this.state.ticks) {
          this.state = { ...this.state, ticks };
          this.render();
        }
        event.preventDefault();
      });
    }
    // -- control handlers ------------------------------------------------
    switchMode(mode) {
      if (this.state.mode === mode) {
        return;
      }
      if (mode === "quiz" && this.api === null) {
        return;
      }
      this.state = {
        ...this.state,
        mode,
        showReading: false,
        feedback: "",
        feedbackTone: "",
        offerNext: false,
        offerRetry: false
      };
      this.answerField.value = "";
      this.render();
      if (mode === "quiz" && this.state.exercise === null) {
        void this.onNext();
      }
    }
    onShowReading() {
      if (this.showReading.checked && this.state.mode === "quiz") {
        this.state = revealDuringQuiz(this.state);
      } else {
        this.state = { ...this.state, showReading: this.showReading.checked };
      }
      this.render();
    }
    onReset() {
      this.state = resetView(this.state);
      this.answerField.value = "";
      this.render();
    }
    async onSubmit() {
      const api = this.api;
      const exercise = this.state.exercise;
      if (api === null || exercise === null) {
        return;
      }
      const sessionId = await this.sessionId();
      if (sessionId === null) {
        this.state = { ...this.state, feedback: OFFLINE_NOTE, feedbackTone: "info", offerRetry: true };
        this.render();
        return;
      }
      this.state = await submitEntry(
        this.state,
        { submitAnswer: (id, text) => api.submitAnswer(sessionId, id, text) },
        this.answerField.value
      );
      this.render();
      if (this.state.exercise?.answered) {
        await this.refreshScore(api, sessionId);
      }
    }
    async onNext() {
      const api = this.api;
      if (api === null || this.state.busy) {
        return;
      }
      this.state = { ...this.state, busy: true, feedback: "Fetching a question…", feedbackTone: "info" };
      this.render();
      try {
        const sessionId = await this.sessionId();
        if (sessionId === null) {
          throw new Error("no session");
        }
        const issued = await api.issueExercise(sessionId, this.config.kind);
        const ticks = ticksFromTransform(this.meta, issued.transform);
        this.state = {
          ...this.state,
          busy: false,
          ticks,
          showReading: false,
          feedback: "",
          feedbackTone: "",
          offerNext: false,
          offerRetry: false,
          exercise: { id: issued.exercise_id, ticks, revealed: false, answered: false }
        };
        this.answerField.value = "";
        this.quizPrompt.textContent = `Read the ${this.meta.display_name.toLowerCase()} and enter the value in ${unitSymbol(this.meta)}.`;
      } catch (error) {
        this.session = null;
        this.state = {
          ...this.state,
          busy: false,
          feedback: error instanceof ApiError ? error.message : OFFLINE_NOTE,
          feedbackTone: "info",
          offerRetry: true
        };
      }
      this.render();
    }
    sessionId() {
      if (this.api === null) {
        return Promise.resolve(null);
      }
      if (this.session === null) {
        this.session = this.api.createSession();
      }
      return this.session.catch(() => {
        this.session = null;
        return null;
      });
    }
    async refreshScore(api, sessionId) {
      let stats;
      try {
        stats = await api.getStats(sessionId);
      } catch {
        return;
      }
      this.score.textContent = "";
      const addRow = (label, correct, attempts) => {
        const dt = document.createElement("dt");
        dt.textContent = label;
        const dd = document.createElement("dd");
        dd.textContent = `${correct}/${attempts}`;
        this.score.append(dt, dd);
      };
      addRow("overall", stats.overall.correct, stats.overall.attempts);
      for (const [kind, block] of Object.entries(stats.per_kind)) {
        addRow(kind.replace(/_/g, " "), block.correct, block.attempts);
      }
    }
    // -- view --------------------------------------------------------------
    render() {
      const s = this.state;
      this.modeExplore.classList.toggle("active", s.mode === "explore");
      this.modeQuiz.classList.toggle("active", s.mode === "quiz");
      this.quizPanel.hidden = s.mode !== "quiz";
      this.showReading.checked = s.showReading;
      this.readingLine.textContent = s.showReading ? readingText(this.meta, s.ticks) : "";
      this.feedback.textContent = s.feedback;
      this.feedback.className = s.feedbackTone ? `feedback ${s.feedbackTone}` : "feedback";
      this.submitButton.disabled = s.mode !== "quiz" || s.busy || s.exercise === null || s.exercise.answered || s.exercise.revealed;
      this.nextButton.disabled = s.mode !== "quiz" || s.busy;
      this.answerField.disabled = this.submitButton.disabled;
      renderStage(this.stage, {
        template: this.template,
        ticks: s.ticks,
        showReading: s.showReading
      });
    }
  };
  var OFFLINE_NOTE = "Could not reach the lab server — check the connection and try again.";
  async function boot() {
    const config = readConfig();
    if (config === null) {
      return;
    }
    const api = config.apiBase ? new LabApi(config.apiBase) : null;
    const template = await loadTemplate(config, api);
    new LabController(config, template, api).start();
  }
  if (document.readyState === "loading") {
    document.addEventListener("DOMContentLoaded", () => void boot());
  } else {
    void boot();
  }
})();
