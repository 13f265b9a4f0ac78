"""Command line interface.

Exit codes follow one convention across subcommands: 0 for success, 1 when
grading found wrong answers (or a check failed), 2 for usage and file
errors.  Subcommands that can be slow to import (the HTTP server,
matplotlib figures) import their dependencies only when invoked.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path

from vmlab import __version__
from vmlab.documents import catalog_doc, dump_bytes, pose_doc, template_bytes, template_doc
from vmlab.engine import SplitMix64, draw_target, evaluate_answer
from vmlab.instruments import (
    alignment_distances,
    best_aligned_mark,
    coincidence_index,
    compose,
    decompose,
    reading_text,
)
from vmlab.model import (
    ALL_KINDS,
    InstrumentKind,
    LabError,
    OutOfRangeError,
    default_spec,
    format_value,
    parse_answer,
    ticks_to_value,
)

KIND_TOKENS = [kind.value for kind in ALL_KINDS]

GEN_HEADER = ["kind", "target_ticks", "display_answer"]
GRADE_HEADER = ["kind", "target_ticks", "answer"]


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_serve(args: argparse.Namespace) -> int:
    from vmlab.service import resolve_data_dir

    data_dir = resolve_data_dir(args.data_dir)
    try:
        data_dir.mkdir(parents=True, exist_ok=True)
        probe = data_dir / ".write-probe"
        probe.touch()
        probe.unlink()
    except OSError as exc:
        return _fail(f"data dir {data_dir} is not writable: {exc}")

    import socket

    import uvicorn

    from vmlab.service import create_app

    app = create_app(data_dir=data_dir, seed=args.seed)
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, args.port))
    except OSError as exc:
        sock.close()
        return _fail(f"cannot bind {args.host}:{args.port}: {exc}")
    host, port = sock.getsockname()[:2]
    print(f"serving on http://{host}:{port}", flush=True)
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    server.run(sockets=[sock])
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    if args.count < 1:
        return _fail(f"--count must be at least 1, got {args.count}")
    kind = InstrumentKind(args.instrument)
    spec = default_spec(kind)
    rng = SplitMix64(args.seed)
    rows: list[tuple[str, int, str]] = []
    previous: int | None = None
    for _ in range(args.count):
        target = draw_target(rng, spec, previous)
        previous = target
        rows.append((kind.value, target, format_value(spec, target)))

    try:
        if args.out == "-":
            _write_gen_rows(sys.stdout, rows)
        else:
            with open(args.out, "w", encoding="utf-8", newline="") as handle:
                _write_gen_rows(handle, rows)
    except OSError as exc:
        return _fail(f"cannot write {args.out}: {exc}")

    if args.figures_dir is not None:
        from vmlab.figures import render_figure

        figures_dir = Path(args.figures_dir)
        try:
            figures_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            return _fail(f"cannot create {figures_dir}: {exc}")
        for index, (_, target, _) in enumerate(rows):
            render_figure(spec, target, figures_dir / f"{kind.value}-{index:03d}.png")
    return 0


def _write_gen_rows(handle, rows: list[tuple[str, int, str]]) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(GEN_HEADER)
    for kind, target, display in rows:
        writer.writerow([kind, target, display])


def cmd_grade(args: argparse.Namespace) -> int:
    try:
        handle = open(args.answers, encoding="utf-8", newline="")
    except OSError as exc:
        return _fail(f"cannot read {args.answers}: {exc}")
    with handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            return _fail(f"{args.answers}: row 1: empty file, expected header "
                         + ",".join(GRADE_HEADER))
        if header != GRADE_HEADER:
            return _fail(
                f"{args.answers}: row 1: expected header {','.join(GRADE_HEADER)},"
                f" got {','.join(header)}"
            )
        correct = 0
        total = 0
        for row_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 3:
                return _fail(
                    f"{args.answers}: row {row_no}: expected 3 columns, got {len(row)}"
                )
            kind_token, ticks_text, answer = row
            try:
                kind = InstrumentKind(kind_token)
            except ValueError:
                return _fail(
                    f"{args.answers}: row {row_no}, column 1: unknown instrument"
                    f" {kind_token!r}"
                )
            spec = default_spec(kind)
            try:
                target = int(ticks_text)
            except ValueError:
                return _fail(
                    f"{args.answers}: row {row_no}, column 2: target_ticks must be an"
                    f" integer, got {ticks_text!r}"
                )
            total += 1
            try:
                result = evaluate_answer(spec, target, answer, args.tolerance_ticks)
            except OutOfRangeError:
                return _fail(
                    f"{args.answers}: row {row_no}, column 2: {target} outside"
                    f" [0, {spec.range_max_ticks}]"
                )
            except LabError as exc:
                # A malformed answer fails the row, not the file.
                print(f"row {row_no}: malformed answer: {exc}")
                continue
            print(f"row {row_no}: {result.message}")
            if result.verdict == "correct":
                correct += 1
        print(f"{correct}/{total} correct")
        return 0 if correct == total else 1


def cmd_render(args: argparse.Namespace) -> int:
    kind = InstrumentKind(args.instrument)
    spec = default_spec(kind)
    if not 0 <= args.ticks <= spec.range_max_ticks:
        return _fail(
            f"--ticks {args.ticks} outside [0, {spec.range_max_ticks}] for {kind.value}"
        )
    if args.format == "svg":
        from vmlab.svgrender import render_svg

        payload = render_svg(spec, args.ticks, show_reading=args.show_reading)
    else:
        doc = {
            "kind": kind.value,
            "ticks": args.ticks,
            "template": template_doc(spec),
            "transform": pose_doc(spec, args.ticks),
        }
        if args.show_reading:
            doc["reading_text"] = reading_text(spec, args.ticks)
        payload = dump_bytes(doc).decode("utf-8") + "\n"
    try:
        if args.out == "-":
            sys.stdout.write(payload)
        else:
            with open(args.out, "w", encoding="utf-8", newline="") as handle:
                handle.write(payload)
    except OSError as exc:
        return _fail(f"cannot write {args.out}: {exc}")
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    import shutil

    from vmlab import pages

    out = Path(args.out)
    try:
        (out / "lab").mkdir(parents=True, exist_ok=True)
        (out / "static").mkdir(exist_ok=True)
        (out / "api" / "templates").mkdir(parents=True, exist_ok=True)

        (out / "index.html").write_text(pages.home_page(offline=True), encoding="utf-8")
        (out / "safety.html").write_text(pages.safety_page(offline=True), encoding="utf-8")
        for kind in ALL_KINDS:
            (out / "lab" / f"{kind.value}.html").write_text(
                pages.lab_page(kind, offline=True), encoding="utf-8"
            )
            (out / "api" / "templates" / f"{kind.value}.json").write_bytes(
                template_bytes(kind)
            )
        (out / "api" / "instruments.json").write_bytes(dump_bytes(catalog_doc()))
        static_src = Path(__file__).parent / "static"
        for asset in ("app.js", "app.css"):
            shutil.copyfile(static_src / asset, out / "static" / asset)
    except OSError as exc:
        return _fail(f"cannot write bundle: {exc}")
    print(f"wrote offline bundle to {out}")
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    roundtrip_ok = 0
    roundtrip_total = 0
    for kind in ALL_KINDS:
        spec = default_spec(kind)
        for ticks in range(0, spec.range_max_ticks + 1):
            roundtrip_total += 1
            value = ticks_to_value(spec, ticks)
            if (
                parse_answer(spec, format_value(spec, ticks)) == value
                and compose(spec, decompose(spec, ticks)) == ticks
            ):
                roundtrip_ok += 1

    coincidence_ok = 0
    coincidence_total = 0
    for kind in (InstrumentKind.CALIPER, InstrumentKind.PROTRACTOR):
        spec = default_spec(kind)
        step = spec.least_count  # second-best alignment gap: one least count
        for ticks in range(0, spec.range_max_ticks + 1):
            coincidence_total += 1
            distances = alignment_distances(spec, ticks)
            best = min(range(len(distances)), key=lambda j: (distances[j], j))
            expected = coincidence_index(spec, ticks)
            gap_ok = sorted(set(distances))[1] == step
            if best == expected and distances[expected] == 0 and gap_ok:
                coincidence_ok += 1

    print(
        f"roundtrip {roundtrip_ok}/{roundtrip_total} ok,"
        f" coincidence {coincidence_ok}/{coincidence_total} ok"
    )
    if roundtrip_ok != roundtrip_total or coincidence_ok != coincidence_total:
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vmlab",
        description="Virtual metrology lab: simulated measuring instruments, "
        "exercise generation, grading, and an HTTP service.",
    )
    parser.add_argument("--version", action="version", version=f"vmlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000, help="0 picks a free port")
    p.add_argument("--data-dir", default=None, help="event log directory")
    p.add_argument("--seed", type=int, default=None, help="generator seed for a fresh data dir")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("gen", help="generate an exercise sheet as CSV")
    p.add_argument("--instrument", required=True, choices=KIND_TOKENS)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default="-", help="output file, - for stdout")
    p.add_argument(
        "--figures-dir",
        default=None,
        help="also render one worksheet figure per row into this directory",
    )
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("grade", help="grade an answers CSV")
    p.add_argument("--answers", required=True, help="CSV with kind,target_ticks,answer")
    p.add_argument("--tolerance-ticks", type=int, default=0)
    p.set_defaults(func=cmd_grade)

    p = sub.add_parser("render", help="render one instrument position")
    p.add_argument("--instrument", required=True, choices=KIND_TOKENS)
    p.add_argument("--ticks", type=int, required=True)
    p.add_argument("--show-reading", action="store_true")
    p.add_argument("--format", choices=["geometry", "svg"], default="geometry")
    p.add_argument("--out", default="-", help="output file, - for stdout")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("export", help="write the offline explore-only bundle")
    p.add_argument("--out", required=True, help="bundle directory")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("selftest", help="run exhaustive internal checks")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
