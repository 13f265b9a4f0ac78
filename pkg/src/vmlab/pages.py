"""Static HTML for the lab's pages.

One source of truth for both the HTTP service and the offline export
bundle: the same six-entry menu everywhere, link targets switched between
absolute routes (online) and relative files (offline).  Pages are plain
deterministic strings — no timestamps — so an export is reproducible.
"""

from __future__ import annotations

import json

from vmlab.model import (
    ALL_KINDS,
    InstrumentKind,
    decimal_string,
    default_spec,
    format_value,
)

SITE_TITLE = "Virtual Metrology Lab"

# Menu label/route pairs, in display order.  Lab routes are per instrument.
MENU_LABELS = [
    "Home",
    "Safety rules",
    "Vernier caliper",
    "Micrometer",
    "Dial indicator",
    "Protractor",
]

SAFETY_SECTIONS = [
    (
        "Laboratory safety",
        "Know the layout of the room before starting work: exits, extinguishers, "
        "the first-aid kit, and the main power cutoff. Keep walkways and benches "
        "clear, and never work alone on powered equipment.",
    ),
    (
        "Emergency response",
        "Report every incident, however small, to the person in charge. In case "
        "of fire, injury, or spill: make the area safe if you can do so without "
        "risk, alert others, and call for help before attempting cleanup.",
    ),
    (
        "Personal and general laboratory safety",
        "Wear closed shoes and suitable clothing; tie back long hair. No food or "
        "drink at the benches. Wash hands after handling lubricants or cleaning "
        "fluids, and keep tools in their cases when not in use.",
    ),
    (
        "Electrical safety",
        "Inspect cords and plugs before use and never bypass an earth connection. "
        "Switch equipment off and unplug it before opening covers. Treat every "
        "conductor as live until proven otherwise.",
    ),
    (
        "Mechanical safety",
        "Keep fingers clear of moving spindles, jaws, and clamps. Secure work "
        "pieces before measuring, release spring-loaded parts gently, and carry "
        "pointed instruments tip down.",
    ),
    (
        "Chemical safety",
        "Use cleaning solvents only in ventilated areas and in the smallest "
        "quantity that does the job. Label every container, and dispose of "
        "soaked wipes in the marked bins, never in general waste.",
    ),
    (
        "Additional safety guidelines",
        "Calibrate and zero instruments before trusting a reading, store them "
        "away from vibration and moisture, and leave your station as you would "
        "wish to find it.",
    ),
]


def _menu_targets(prefix: str, offline: bool) -> list[tuple[str, str]]:
    """Label/href pairs for the shared menu.

    ``prefix`` is the relative path from the current page back to the site
    root; it is empty for online pages, which use absolute routes.
    """
    if offline:
        targets = [
            ("Home", f"{prefix}index.html"),
            ("Safety rules", f"{prefix}safety.html"),
        ]
        for kind in ALL_KINDS:
            targets.append((kind.display_name, f"{prefix}lab/{kind.value}.html"))
    else:
        targets = [("Home", "/"), ("Safety rules", "/safety")]
        for kind in ALL_KINDS:
            targets.append((kind.display_name, f"/lab/{kind.value}"))
    return targets


def _page(
    title: str,
    body: str,
    *,
    offline: bool,
    prefix: str = "",
    config: dict | None = None,
    with_app: bool = False,
) -> str:
    menu_items = "\n".join(
        f'        <li><a href="{href}">{label}</a></li>'
        for label, href in _menu_targets(prefix, offline)
    )
    asset_prefix = f"{prefix}static/" if offline else "/static/"
    head_extra = f'  <link rel="stylesheet" href="{asset_prefix}app.css">\n'
    scripts = ""
    if config is not None:
        config_json = json.dumps(config, separators=(", ", ": "), ensure_ascii=False)
        scripts += f"  <script>window.VMLAB_CONFIG = {config_json};</script>\n"
    if with_app:
        scripts += f'  <script src="{asset_prefix}app.js"></script>\n'
    return f"""<!DOCTYPE html>
<html lang="en">
<head>
  <meta charset="utf-8">
  <meta name="viewport" content="width=device-width, initial-scale=1">
  <title>{title} — {SITE_TITLE}</title>
{head_extra}</head>
<body>
  <header>
    <h1>{SITE_TITLE}</h1>
    <nav>
      <ul class="menu">
{menu_items}
      </ul>
    </nav>
  </header>
  <main>
{body}
  </main>
{scripts}</body>
</html>
"""


def home_page(offline: bool = False) -> str:
    cards = "\n".join(
        f'      <li><a href="{href}">{label}</a> — practise reading the {label.lower()}.</li>'
        for label, href in _menu_targets("", offline)[2:]
    )
    body = f"""    <p>Welcome to the virtual metrology laboratory. Pick an instrument,
    drag its moving scale to explore how readings are formed, then switch to
    quiz mode and try positions the lab sets for you.</p>
    <p>Before any bench work, read the <a href="{'safety.html' if offline else '/safety'}">safety rules</a>.</p>
    <ul class="instruments">
{cards}
    </ul>"""
    return _page("Home", body, offline=offline)


def safety_page(offline: bool = False) -> str:
    sections = "\n".join(
        f"    <section>\n      <h2>{heading}</h2>\n      <p>{text}</p>\n    </section>"
        for heading, text in SAFETY_SECTIONS
    )
    return _page("Safety rules", sections, offline=offline)


def lab_page(kind: InstrumentKind, offline: bool = False) -> str:
    spec = default_spec(kind)
    config = {
        "kind": kind.value,
        "offline": offline,
        "apiBase": None if offline else "/api/v1",
        "templateUrl": f"../api/templates/{kind.value}.json" if offline else None,
    }
    body = f"""    <h2>{kind.display_name}</h2>
    <div id="lab" data-kind="{kind.value}">
      <div class="mode-row">
        <button id="mode-explore" class="mode active" type="button">Explore</button>
        <button id="mode-quiz" class="mode" type="button">Quiz</button>
      </div>
      <div id="stage" class="stage" aria-label="{kind.display_name} scales"></div>
      <div class="controls">
        <label><input type="checkbox" id="show-reading"> Show reading</label>
        <button id="reset" type="button">Reset</button>
        <span id="reading-line" class="reading-line"></span>
      </div>
      <div id="quiz-panel" class="quiz-panel" hidden>
        <p id="quiz-prompt">Set up a question to begin.</p>
        <label>Your reading:
          <input id="answer" type="text" autocomplete="off" spellcheck="false">
        </label>
        <button id="submit" type="button">Submit</button>
        <button id="next" type="button">New question</button>
        <p id="feedback" class="feedback" role="status"></p>
        <dl id="score" class="score"></dl>
      </div>
      <noscript><p>This page needs JavaScript to drive the instrument.</p></noscript>
    </div>
    <p class="extras">Further material: <a href="#">quick reference manual (placeholder)</a>
    · <a href="#">video walkthrough (placeholder)</a></p>
    <p class="spec-line">Least count {_least_count_text(kind)} · range 0 to {_range_text(kind)}.</p>"""
    return _page(kind.display_name, body, offline=offline, prefix="../" if offline else "", config=config, with_app=True)


def _least_count_text(kind: InstrumentKind) -> str:
    spec = default_spec(kind)
    return f"{decimal_string(spec.least_count_display)} {spec.display_unit.symbol}"


def _range_text(kind: InstrumentKind) -> str:
    spec = default_spec(kind)
    return f"{format_value(spec, spec.range_max_ticks)} {spec.display_unit.symbol}"
