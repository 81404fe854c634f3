# -*- coding: utf-8 -*-
"""
Created on 12/10/2026

Command line front end.

    unitnilpy feasible  -i A.json [--k K]
    unitnilpy decompose -i A.json [--k K] [-o result.json]
    unitnilpy verify    A.json U.json N.json [--k K] [-o report.json]
    unitnilpy canon     -i A.json [-o canon.json]
    unitnilpy oracle    -i A.json [--k K] [--budget B] [--jobs J] [-o witness.json]
    unitnilpy gen       --n N --rank R --seed S [--field fp:2] [--k K] [-o A.json]
    unitnilpy selftest
    unitnilpy sweep     --n N [--field fp:2] [--budget B] [--jobs J] [-o report.csv]

Exit codes: 0 success, 1 bad input or usage, 2 infeasible, 3 verification
failed.

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

import argparse
import json
import logging
import sys

from unitnilpy.canonical.frobenius import block_form, frobenius_form
from unitnilpy.cli.instance_io import (parse_instance, render_instance,
                                       render_result)
from unitnilpy.construct.decompose import Infeasible, decompose, feasible
from unitnilpy.errors import InternalVerificationFailed, UnitNilError
from unitnilpy.exactalg.field import FieldSpec
from unitnilpy.exactalg.matrix import format_matrix, mat_rank
from unitnilpy.verify.generator import random_matrix_of_rank
from unitnilpy.verify.oracle import DEFAULT_MAX_CANDIDATES, OracleBudget, exhaustive_feasible
from unitnilpy.verify.selftest import run_selftest
from unitnilpy.verify.sweep import agreement_sweep, write_sweep_report
from unitnilpy.verify.verifier import verify_decomposition

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_FAILED = 3

DEFAULT_FIELD = "fp:2"


class UsageError(UnitNilError):
    pass


class _Parser(argparse.ArgumentParser):
    '''argparse exits with 2 on bad usage; usage errors here exit with 1.'''

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_bytes(path):
    with open(path, 'rb') as f:
        return f.read()


def _write_bytes(path, data):
    with open(path, 'wb') as f:
        f.write(data)
    print('\n\n***SUCCESS writing!  ' + path)


def _load(path, k_flag=None):
    A, k = parse_instance(_read_bytes(path))
    return A, (k_flag if k_flag is not None else k)


def _need_k(k):
    if k is None:
        raise UsageError("no k: pass --k or put \"k\" in the instance")
    return k


def _budget(args):
    return OracleBudget(args.budget if args.budget is not None else DEFAULT_MAX_CANDIDATES)


def cmd_feasible(args):
    A, k = _load(args.input, args.k)
    k = _need_k(k)
    verdict = feasible(A, k)
    rank = mat_rank(A)
    print(f"rank {rank}, n {A.rows}, k {k}: {'feasible' if verdict else 'infeasible'}")
    return EXIT_OK if verdict else EXIT_INFEASIBLE


def cmd_decompose(args):
    A, k = _load(args.input, args.k)
    k = _need_k(k)
    result = decompose(A, k)
    if isinstance(result, Infeasible):
        print(f"infeasible: rank {result.rank_A} < ceil({result.n}/{result.k}) = {result.threshold}")
    else:
        c = result.certificate
        print(f"decomposed: rank A {c.rank_A}, index of N {c.index_N}, rank N {c.rank_N}")
        print("U =\n" + format_matrix(result.U))
        print("N =\n" + format_matrix(result.N))
    if args.output:
        _write_bytes(args.output, render_result(result))
    return EXIT_INFEASIBLE if isinstance(result, Infeasible) else EXIT_OK


def cmd_verify(args):
    A, k = _load(args.matrix, args.k)
    k = _need_k(k)
    U, _ = _load(args.unit)
    N, _ = _load(args.nilpotent)
    report = verify_decomposition(A, U, N, k)
    print(f"sum {report.sum_ok}, unit {report.unit_ok}, nilpotent {report.nilpotent_ok} "
          f"(index {report.index_of_N}): {'verified' if report.overall else 'FAILED'}")
    if args.output:
        _write_bytes(args.output, render_result(report, k))
    return EXIT_OK if report.overall else EXIT_FAILED


def cmd_canon(args):
    A, _ = _load(args.input)
    form = frobenius_form(A)
    blocks = block_form(A)
    print("invariant factors: " + ", ".join(str(f) for f in form.factors))
    print("blocks: " + " + ".join(str(b) for b in blocks.blocks))
    if args.output:
        out = {
            "field": A.spec.descriptor(),
            "invariant_factors": [f.to_strings() for f in form.factors],
            "blocks": [{"kind": b.kind.value, "size": b.size, "poly": b.poly.to_strings()}
                       for b in blocks.blocks],
            "transform": {"rows": A.rows, "cols": A.cols,
                          "entries": blocks.transform.to_strings()},
        }
        _write_bytes(args.output, (json.dumps(out, indent=2) + "\n").encode("utf-8"))
    return EXIT_OK


def cmd_oracle(args):
    A, k = _load(args.input, args.k)
    k = _need_k(k)
    found, witness = exhaustive_feasible(A, k, _budget(args), jobs=args.jobs)
    if not found:
        print(f"oracle: no N with N^{k} = 0 and A - N invertible")
        return EXIT_INFEASIBLE
    print("oracle: feasible, first witness N =\n" + format_matrix(witness))
    if args.output:
        _write_bytes(args.output, render_instance(witness, k))
    return EXIT_OK


def cmd_gen(args):
    if args.n is None or args.rank is None:
        raise UsageError("gen needs --n and --rank")
    spec = FieldSpec.from_flag(args.field or DEFAULT_FIELD)
    A = random_matrix_of_rank(args.n, args.rank, spec, args.seed)
    print(f"{args.n}x{args.n} matrix of rank {args.rank} over {spec}, seed {args.seed}:")
    print(format_matrix(A))
    if args.output:
        _write_bytes(args.output, render_instance(A, args.k))
    return EXIT_OK


def cmd_selftest(args):
    results = run_selftest()
    for name, passed in results:
        print(f"{'PASS' if passed else 'FAIL'}  {name}")
    return EXIT_OK if all(passed for _, passed in results) else EXIT_FAILED


def cmd_sweep(args):
    if args.n is None:
        raise UsageError("sweep needs --n")
    spec = FieldSpec.from_flag(args.field or DEFAULT_FIELD)
    if not spec.is_prime_field:
        raise UsageError("sweep runs over F_p only")
    frame = agreement_sweep(args.n, spec.p, budget=_budget(args), jobs=args.jobs)
    disagreements = int((~frame['agree']).sum())
    print(f"M_{args.n}({spec}): {len(frame)} cases, {disagreements} disagreements")
    if args.output:
        write_sweep_report(frame, args.output)
    return EXIT_OK if disagreements == 0 else EXIT_FAILED


def build_parser():
    parser = _Parser(prog="unitnilpy",
                     description="Split a square matrix into invertible plus nilpotent parts.")
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="-v for progress, -vv for debug output")
    commands = parser.add_subparsers(dest='command', parser_class=_Parser)
    commands.required = True

    def add(name, handler, help_text, k=True, io=True):
        sub = commands.add_parser(name, help=help_text)
        sub.set_defaults(handler=handler)
        if k:
            sub.add_argument('--k', type=int, help="bound on the nilpotency index of N")
        if io:
            sub.add_argument('-i', '--input', required=True, help="instance JSON file")
        sub.add_argument('-o', '--output', help="output file")
        return sub

    add('feasible', cmd_feasible, "check k.rank(A) >= n")
    add('decompose', cmd_decompose, "build A = U + N")
    verify = add('verify', cmd_verify, "check a decomposition", io=False)
    verify.add_argument('matrix', help="instance with A")
    verify.add_argument('unit', help="instance with U")
    verify.add_argument('nilpotent', help="instance with N")
    add('canon', cmd_canon, "invariant factors and block form", k=False)
    oracle = add('oracle', cmd_oracle, "exhaustive search over F_p")
    oracle.add_argument('--budget', type=int, help="largest number of candidates")
    oracle.add_argument('--jobs', type=int, default=1, help="worker threads")
    gen = add('gen', cmd_gen, "random instance of given rank", io=False)
    gen.add_argument('--n', type=int, help="size")
    gen.add_argument('--rank', type=int, help="rank")
    gen.add_argument('--seed', type=int, default=0, help="random seed")
    gen.add_argument('--field', help="fp:<p> or q, default " + DEFAULT_FIELD)
    add('selftest', cmd_selftest, "replay the worked examples", k=False, io=False)
    sweep = add('sweep', cmd_sweep, "constructor against oracle on all of M_n(F_p)", k=False, io=False)
    sweep.add_argument('--n', type=int, help="size")
    sweep.add_argument('--field', help="fp:<p>, default " + DEFAULT_FIELD)
    sweep.add_argument('--budget', type=int, help="largest number of candidates")
    sweep.add_argument('--jobs', type=int, default=1, help="worker threads")
    return parser


def execute(argv=None):
    '''
    Run one subcommand.

    :param argv: arguments without the program name, sys.argv[1:] when None.
    :type argv: list of str

    :return int exit code
    '''
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(format="%(asctime)s [%(levelname)s] %(name)s: %(message)s", level=level)
    try:
        return args.handler(args)
    except InternalVerificationFailed as exc:
        _logger.error("internal verification failed: %s", exc)
        print(f"error: internal verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (UnitNilError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(execute())


if __name__ == '__main__':
    main()
