"""Golden-corpus comparison: live output diffed against frozen JSON.

The corpus holds the worked p=5, n=7 report, the two textbook even-set
examples, and the label patterns of the principal-block summand for
(p, 2k) in {(5,0), (5,2), (5,4), (7,4)}.  Values in these files were
checked by hand before freezing; regeneration is deliberately manual.
"""

from __future__ import annotations

import json
from importlib import resources

from . import blocks, summands
from .errors import DiagnosticError
from .partitions import parse_partition


def _load(name: str) -> dict:
    path = resources.files(__package__).joinpath("golden").joinpath(name)
    return json.loads(path.read_text(encoding="utf-8"))


def _diff(live, frozen, where: str) -> None:
    if live != frozen:
        raise DiagnosticError(
            f"golden mismatch at {where}:\nlive   = "
            f"{json.dumps(live, ensure_ascii=False, sort_keys=True)}\nfrozen = "
            f"{json.dumps(frozen, ensure_ascii=False, sort_keys=True)}"
        )


def check_section8_report() -> None:
    frozen = _load("section8_analyze_p5_n7.json")
    live = summands.report_to_json(7, 5, summands.analyze(7, 5))
    _diff(live, frozen, "analyze(7,5)")


def check_eset_examples() -> None:
    for name, core_text, p in (
        ("eset_p3_core31.json", "(3,1)", 3),
        ("eset_p5_core5111.json", "(5,1,1,1)", 5),
    ):
        frozen = _load(name)
        live = blocks.core_profile(parse_partition(core_text), p).to_json_dict()
        _diff(live, frozen, f"core_profile({core_text}, {p})")


def check_scott_labels() -> None:
    frozen = _load("scott_labels.json")
    for key, expected in frozen.items():
        p_text, two_k_text = key.split(",")
        p, two_k = int(p_text), int(two_k_text)
        live = summands.scott(p, two_k // 2).to_json_dict()
        _diff(live, expected, f"scott({p},{two_k // 2})")


def check_all() -> int:
    check_section8_report()
    check_eset_examples()
    check_scott_labels()
    return 7
