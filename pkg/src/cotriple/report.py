"""Deterministic JSON reports and serializers for counterexamples.

Reports are plain dicts validated against the shipped schema before emission.
Everything is JSON-native and key-sorted so that two runs with the same seed
produce byte-identical files (once timestamps are disabled).
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from importlib import resources

import jsonschema

from . import __version__
from .errors import ContractViolation
from .modules import ModuleMap, ModuleRep, ShortExactSeq

SCHEMA_VERSION = 1

_schema_cache = None


def report_schema() -> dict:
    global _schema_cache
    if _schema_cache is None:
        text = resources.files("cotriple").joinpath("report_schema.json").read_text()
        _schema_cache = json.loads(text)
    return _schema_cache


# --- serializers -----------------------------------------------------------

def serialize_module(m: ModuleRep) -> dict:
    return {
        "name": m.name,
        "dim": int(m.dim),
        "algebra": m.algebra.name,
        "action": m.action.tolist(),
    }


def serialize_map(f: ModuleMap) -> dict:
    return {
        "source": serialize_module(f.source),
        "target": serialize_module(f.target),
        "matrix": f.matrix.tolist(),
    }


def serialize_ses(seq: ShortExactSeq) -> dict:
    return {"left": serialize_map(seq.left), "right": serialize_map(seq.right)}


# --- report assembly ---------------------------------------------------------

def environment_block(algebra, triple, seed: int) -> dict:
    return {
        "char": int(algebra.char),
        "algebra": algebra.name,
        "triple": triple.name,
        "seed": int(seed),
        "version": __version__,
    }


def build_report(kind, environment, checks, config=None, notes=None,
                 timestamps=True, timings=True) -> dict:
    """Assemble, order, and validate a report dict."""
    records = sorted(checks, key=lambda r: r["check"])
    if not timings:
        records = [{k: v for k, v in r.items() if k != "seconds"} for r in records]
    summary = {"pass": 0, "fail": 0, "unknown": 0}
    for r in records:
        summary[r["status"]] += 1
    report = {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "environment": environment,
        "checks": records,
        "summary": summary,
    }
    if config is not None:
        report["config"] = config
    if notes:
        report["notes"] = list(notes)
    if timestamps:
        report["timestamp"] = datetime.now(timezone.utc).isoformat()
    validate_report(report)
    return report


def validate_report(report: dict):
    try:
        jsonschema.validate(report, report_schema())
    except jsonschema.ValidationError as exc:
        raise ContractViolation(f"report does not match schema: {exc.message}")


def dump_report(report: dict, path=None) -> str:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
