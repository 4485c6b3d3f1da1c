"""Bundled network documents for the worked examples."""

from __future__ import annotations

from importlib import resources

from ..io import NetworkDocument, parse_document


def names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))


def path(name: str):
    return resources.files(__name__) / f"{name}.json"


def load(name: str) -> NetworkDocument:
    return parse_document(path(name).read_text())
