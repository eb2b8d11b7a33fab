"""JSON reading and writing for complexes, cells, posets and contractions."""
from __future__ import annotations

import json

from .adc import Adc
from .chains import Chain, format_name, parse_name
from .simplicial import SimplicialComplex, chnorm_of_complex

__all__ = ["adc_to_json", "adc_from_json", "load_json", "load_adc", "FormatError"]


class FormatError(ValueError):
    """Malformed input; the message names the location."""


def adc_to_json(K: Adc) -> dict:
    out = {"max_degree": K.max_degree,
           "basis": [[format_name(n) for n in names] for names in K.basis],
           "diff": {format_name(n): K.diff[(p, n)].to_json()
                    for p in range(1, K.max_degree + 1) for n in K.names(p)},
           "aug": {format_name(n): K.aug[n] for n in K.names(0)}}
    if K.labels is not None:
        out["order"] = list(K.labels)
    if K.name:
        out["name"] = K.name
    return out


def adc_from_json(data) -> Adc:
    if not isinstance(data, dict):
        raise FormatError("complex JSON must be an object")
    try:
        basis = [[parse_name(n) for n in names] for names in data["basis"]]
    except (KeyError, TypeError):
        raise FormatError("complex JSON needs 'basis': a list of name lists") from None
    if "max_degree" in data and data["max_degree"] != len(basis) - 1:
        raise FormatError(f"max_degree {data['max_degree']} disagrees with {len(basis)} basis degrees")
    degree_of = {}
    for p, names in enumerate(basis):
        for n in names:
            if n in degree_of:
                raise FormatError(f"basis name {format_name(n)} appears twice")
            degree_of[n] = p
    diff = {}
    for key, value in data.get("diff", {}).items():
        n = parse_name(key)
        if n not in degree_of:
            raise FormatError(f"diff.{key}: not a basis element")
        p = degree_of[n]
        if p == 0:
            raise FormatError(f"diff.{key}: degree-0 elements have no differential")
        try:
            diff[(p, n)] = Chain.from_json(value, degree=p - 1)
        except ValueError as exc:
            raise FormatError(f"diff.{key}: {exc}") from None
    aug = {}
    for key, value in data.get("aug", {}).items():
        n = parse_name(key)
        if degree_of.get(n) != 0:
            raise FormatError(f"aug.{key}: not a degree-0 basis element")
        if not isinstance(value, int):
            raise FormatError(f"aug.{key}: not an integer")
        aug[n] = value
    return Adc(basis, diff, aug, name=data.get("name"), labels=data.get("order"))


def load_json(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def load_adc(data) -> Adc:
    """Accept either complex JSON (basis/diff/aug) or simplicial JSON (elements/leq/faces)."""
    if isinstance(data, dict) and "elements" in data:
        try:
            return chnorm_of_complex(SimplicialComplex.from_json(data))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return adc_from_json(data)
