"""Versioned structural schemas for every JSON document the CLI emits.

validate(document, schema_name) raises DiagnosticError on any shape
mismatch; the test suite runs every emitted document through it.
"""

from __future__ import annotations

import re

from .errors import DiagnosticError

SCHEMA_VERSION = 1

_PARTITION_RE = re.compile(r"\(\)|\((\d+(\^\d+)?)(,\d+(\^\d+)?)*\)")

_KINDS = {
    "SimpleSpecht",
    "Weight1Projective",
    "Weight2Projective",
    "VertexQ1Scott",
    "VertexQ1NonPrincipal",
    "Undetermined",
}


def _fail(path: str, message: str) -> None:
    raise DiagnosticError(f"schema violation at {path}: {message}")


def _check_partition(value, path: str) -> None:
    if not isinstance(value, str) or not _PARTITION_RE.fullmatch(value):
        _fail(path, f"not a partition string: {value!r}")


def _check_block(value, path: str) -> None:
    if not isinstance(value, dict):
        _fail(path, "block must be an object")
    for key in ("p", "core", "weight"):
        if key not in value:
            _fail(path, f"missing {key}")
    if not isinstance(value["p"], int) or not isinstance(value["weight"], int):
        _fail(path, "p and weight must be integers")
    _check_partition(value["core"], path + ".core")


def _check_partition_list(value, path: str) -> None:
    if not isinstance(value, list):
        _fail(path, "expected a list of partitions")
    for i, item in enumerate(value):
        _check_partition(item, f"{path}[{i}]")


def validate_abacus(doc: dict) -> None:
    if set(doc) - {"prime", "beads"}:
        _fail("abacus", f"unexpected keys {set(doc) - {'prime', 'beads'}}")
    if not isinstance(doc.get("prime"), int):
        _fail("abacus.prime", "must be an integer")
    beads = doc.get("beads")
    if not isinstance(beads, list) or any(not isinstance(b, int) for b in beads):
        _fail("abacus.beads", "must be a list of integers")


def validate_core_profile(doc: dict) -> None:
    for key in ("core", "p", "w", "e_set"):
        if key not in doc:
            _fail("core_profile", f"missing {key}")
    _check_partition(doc["core"], "core_profile.core")
    if not isinstance(doc["w"], int) or doc["w"] < 0:
        _fail("core_profile.w", "must be a non-negative integer")
    _check_partition_list(doc["e_set"], "core_profile.e_set")


def validate_column(doc: dict) -> None:
    _check_block(doc.get("block"), "column.block")
    _check_partition(doc.get("nu"), "column.nu")
    rows = doc.get("rows")
    if not isinstance(rows, list):
        _fail("column.rows", "must be a list")
    for i, row in enumerate(rows):
        _check_partition(row.get("mu"), f"column.rows[{i}].mu")
        if row.get("d") not in (0, 1):
            _fail(f"column.rows[{i}].d", "entries are 0 or 1")


def validate_chain(doc: dict) -> None:
    _check_block(doc.get("block"), "chain.block")
    elements = doc.get("elements")
    if not isinstance(elements, list) or not elements:
        _fail("chain.elements", "must be a non-empty list")
    for i, el in enumerate(elements):
        _check_partition(el.get("partition"), f"chain.elements[{i}].partition")
        if el.get("tag") not in ("even", "delta1"):
            _fail(f"chain.elements[{i}].tag", "tag is even or delta1")
        if el.get("label") is not None and not isinstance(el["label"], str):
            _fail(f"chain.elements[{i}].label", "label is a string or null")
        if not isinstance(el.get("p_regular"), bool):
            _fail(f"chain.elements[{i}].p_regular", "must be a bool")


def validate_scott(doc: dict) -> None:
    _check_block(doc.get("block"), "scott.block")
    for key in ("top", "heart", "socle", "specht_order"):
        _check_partition_list(doc.get(key), f"scott.{key}")
    if doc["top"] != doc["socle"]:
        _fail("scott.socle", "socle must equal top")
    if len(doc["heart"]) != len(doc["top"]):
        _fail("scott.heart", "heart and top must have equal length")
    edges = doc.get("edges")
    if not isinstance(edges, list):
        _fail("scott.edges", "must be a list")
    for i, edge in enumerate(edges):
        if not isinstance(edge, list) or len(edge) != 2:
            _fail(f"scott.edges[{i}]", "edges are pairs")
        _check_partition(edge[0], f"scott.edges[{i}][0]")
        _check_partition(edge[1], f"scott.edges[{i}][1]")
    _check_partition(doc.get("excluded"), "scott.excluded")


def validate_report(doc: dict) -> None:
    if doc.get("schema_version") != SCHEMA_VERSION:
        _fail("report.schema_version", f"expected {SCHEMA_VERSION}")
    for key in ("p", "n", "blocks"):
        if key not in doc:
            _fail("report", f"missing {key}")
    if not isinstance(doc["blocks"], list):
        _fail("report.blocks", "must be a list")
    for i, entry in enumerate(doc["blocks"]):
        path = f"report.blocks[{i}]"
        _check_block(entry.get("block"), path + ".block")
        if entry.get("kind") not in _KINDS:
            _fail(path + ".kind", f"unknown kind {entry.get('kind')!r}")
        if not isinstance(entry.get("vertex_t"), int):
            _fail(path + ".vertex_t", "must be an integer")
        _check_partition_list(entry.get("character"), path + ".character")
        if not isinstance(entry.get("definitive"), bool):
            _fail(path + ".definitive", "must be a bool")
        if "specht_filtration" in entry:
            _check_partition_list(entry["specht_filtration"], path + ".specht_filtration")
        if "loewy_layers" in entry:
            layers = entry["loewy_layers"]
            if not isinstance(layers, list):
                _fail(path + ".loewy_layers", "must be a list of layers")
            for j, layer in enumerate(layers):
                _check_partition_list(layer, f"{path}.loewy_layers[{j}]")
        if "composition" in entry:
            comp = entry["composition"]
            if not isinstance(comp, list):
                _fail(path + ".composition", "must be a list")
            for j, pair in enumerate(comp):
                if not isinstance(pair, list) or len(pair) != 2:
                    _fail(f"{path}.composition[{j}]", "pairs of label and count")
                _check_partition(pair[0], f"{path}.composition[{j}][0]")
                if not isinstance(pair[1], int) or pair[1] < 1:
                    _fail(f"{path}.composition[{j}][1]", "count must be positive")
        if "edges" in entry:
            for j, edge in enumerate(entry["edges"]):
                if not isinstance(edge, list) or len(edge) != 2:
                    _fail(f"{path}.edges[{j}]", "edges are pairs")
        if "scott" in entry:
            validate_scott(entry["scott"])
