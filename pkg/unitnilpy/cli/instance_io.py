# -*- coding: utf-8 -*-
"""
Created on 12/10/2026

JSON instance and result files.

An instance holds one matrix:

    {"field": {"kind": "fp", "p": 7}, "rows": 2, "cols": 2,
     "entries": [["0", "1"], ["1", "1"]], "k": 2}

Entries are always strings (decimal residues over F_p, "int" or "int/int"
over Q) so rationals of any size survive the trip. Counts, ranks and k are
JSON integers. Keys are written in a fixed order and nothing is floating
point, so equal inputs give byte-identical files.

/*
 * GNU GPL v3 License (by, nc, nd, sa)
 *
 * Copyright 2026 unitnilpy developers
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 *
 * This program is distributed in the hope that it will be useful,
 * but WITHOUT ANY WARRANTY; without even the implied warranty of
 * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
 * GNU General Public License for more details.
 *
 * You should have received a copy of the GNU General Public License
 * along with this program.  If not, see <http://www.gnu.org/licenses/>.
 *
 */

@author: unitnilpy developers
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from unitnilpy.construct.decompose import Decomposition, Infeasible
from unitnilpy.errors import ParseError
from unitnilpy.exactalg.field import FieldSpec
from unitnilpy.exactalg.matrix import Matrix
from unitnilpy.verify.verifier import VerifyReport

STATUSES = ("decomposed", "infeasible", "verified", "failed")


def _load(text):
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc.reason}", f"byte {exc.start}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", "$")
    return doc


def _count(doc, key, where, minimum=1):
    value = doc.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ParseError(f"{key} must be an integer >= {minimum}", f"{where}{key}")
    return value


def _read_matrix(doc, spec, where=""):
    rows = _count(doc, "rows", where)
    cols = _count(doc, "cols", where)
    entries = doc.get("entries")
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"expected {rows} rows of entries", f"{where}entries")
    values = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"expected {cols} entries", f"{where}entries[{i}]")
        values.append([])
        for j, text in enumerate(row):
            try:
                values[-1].append(spec.parse(text))
            except ParseError as exc:
                raise ParseError(str(exc), f"{where}entries[{i}][{j}]") from None
    return Matrix(spec, values)


def _write_matrix(A):
    return {"rows": A.rows, "cols": A.cols, "entries": A.to_strings()}


def _dump(obj):
    return (json.dumps(obj, indent=2, ensure_ascii=True) + "\n").encode("utf-8")


def parse_instance(text):
    '''
    Read an instance file.

    :param text: file contents.
    :type text: bytes or str

    :return (Matrix, k or None)
    :raises ParseError: malformed JSON or layout, with the offending location.
    :raises NotPrime:
    :raises EntryOutOfField:
    '''
    doc = _load(text)
    spec = FieldSpec.from_descriptor(doc.get("field"))
    A = _read_matrix(doc, spec)
    k = doc.get("k")
    if k is not None:
        k = _count(doc, "k", "")
    return A, k


def matrix_to_instance(A, k=None):
    obj = {"field": A.spec.descriptor()}
    obj.update(_write_matrix(A))
    if k is not None:
        obj["k"] = k
    return obj


def render_instance(A, k=None):
    return _dump(matrix_to_instance(A, k))


@dataclass(frozen=True)
class ResultFile:
    '''
    Contents of a result file. U and N are present only for "decomposed".
    '''
    status: str
    certificate: dict = field(default_factory=dict)
    k: Optional[int] = None
    spec: Optional[FieldSpec] = None
    U: Optional[Matrix] = None
    N: Optional[Matrix] = None


def _block_record(block):
    return {"kind": block.kind.value, "size": block.size, "poly": block.poly.to_strings()}


def to_result_file(obj, k=None):
    '''
    ResultFile for a Decomposition, an Infeasible verdict or a VerifyReport
    (k is only needed for the latter).
    '''
    if isinstance(obj, ResultFile):
        return obj
    if isinstance(obj, Decomposition):
        c = obj.certificate
        n = obj.U.rows
        certificate = {
            "rank_A": c.rank_A,
            "index_of_N": c.index_N,
            "n": n,
            "threshold_ceil_n_over_k": -(-n // obj.k),
            "rank_N": c.rank_N,
            "jordan_type_N": list(c.jordan_type_N),
            "hosts": [{"position": h.position, "block": _block_record(h.block),
                       "zeros_assigned": h.zeros_assigned,
                       "zero_positions": list(h.zero_positions)}
                      for h in c.assignment.hosts],
            "permutation": list(c.assignment.permutation),
        }
        return ResultFile("decomposed", certificate, obj.k, obj.U.spec, obj.U, obj.N)
    if isinstance(obj, Infeasible):
        certificate = {"rank_A": obj.rank_A, "n": obj.n, "threshold_ceil_n_over_k": obj.threshold}
        return ResultFile("infeasible", certificate, obj.k)
    if isinstance(obj, VerifyReport):
        certificate = {"sum_ok": obj.sum_ok, "unit_ok": obj.unit_ok,
                       "nilpotent_ok": obj.nilpotent_ok, "index_of_N": obj.index_of_N}
        return ResultFile("verified" if obj.overall else "failed", certificate, k)
    raise TypeError(f"cannot render {type(obj).__name__}")


def render_result(obj, k=None):
    '''
    Canonical JSON bytes: status, certificate, k, field, U, N in this order,
    absent parts left out.
    '''
    result = to_result_file(obj, k)
    out = {"status": result.status, "certificate": result.certificate}
    if result.k is not None:
        out["k"] = result.k
    if result.spec is not None:
        out["field"] = result.spec.descriptor()
    if result.U is not None:
        out["U"] = _write_matrix(result.U)
    if result.N is not None:
        out["N"] = _write_matrix(result.N)
    return _dump(out)


def parse_result(text):
    '''
    Read a result file back into a ResultFile.
    '''
    doc = _load(text)
    status = doc.get("status")
    if status not in STATUSES:
        raise ParseError(f"unknown status {status!r}", "status")
    certificate = doc.get("certificate", {})
    if not isinstance(certificate, dict):
        raise ParseError("certificate must be an object", "certificate")
    k = doc.get("k")
    if k is not None:
        k = _count(doc, "k", "")
    spec = U = N = None
    if "field" in doc:
        spec = FieldSpec.from_descriptor(doc["field"])
    if status == "decomposed":
        if spec is None or "U" not in doc or "N" not in doc:
            raise ParseError("decomposed result needs field, U and N", "$")
        for key in ("U", "N"):
            if not isinstance(doc[key], dict):
                raise ParseError("matrix must be an object", key)
        U = _read_matrix(doc["U"], spec, "U.")
        N = _read_matrix(doc["N"], spec, "N.")
    return ResultFile(status, certificate, k, spec, U, N)
