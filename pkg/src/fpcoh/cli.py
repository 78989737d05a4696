"""Command-line front end.

Subcommands evaluate the core engines and, where a closed formula or a
conjectured formula exists, compare against it and report a Verdict per
checked statement.  Exit codes: 0 all comparisons agree (pure evaluations
count), 2 some comparison disagrees, 1 usage or parameter error.

`sweep --config FILE` expands a declarative grid into rows and dispatches
each row through the same parser in a process pool; report order is the
grid's row-major order regardless of scheduling, and JSON output is
byte-identical across worker counts.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from .characters import LaurentPolynomial, nim_poly, schur2, schur2_trunc
from .complexes import (
    PoincarePolynomial,
    build_complex,
    check_involution,
    check_stable_periodicity_hook,
    homology_dims,
    poincare_formula_all_ones,
    ses_dimension_check,
    stable_hook_cohomology,
)
from .determinantal import (
    check_iadic_conjecture,
    check_lead_terms,
    filtration_character,
    ideal_power_slice,
)
from .incidence import (
    UnsupportedRegimeError,
    char2_hypothesis,
    h1_char2_char,
    h1_small_weight_char,
    h1_window_char,
    h_characters,
    small_weights_hypothesis,
    window_hypothesis,
)
from .verdicts import (
    AGREE,
    DISAGREE,
    ERROR,
    OUTSIDE,
    Verdict,
    exit_code,
    human_lines,
    render_json,
    report_document,
    write_csv,
)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; the scripting contract reserves 2 for
    mathematical disagreement, so usage errors are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(1)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _timed(subject: str, parameters: dict, build) -> Verdict:
    t0 = time.perf_counter()
    status, payload = build()
    return Verdict(subject, parameters, status, payload, seconds=time.perf_counter() - t0)


def _char_summary(f: LaurentPolynomial) -> str:
    text = str(f)
    if len(text) > 120:
        return f"<{len(f.terms())} terms, dimension {f.dimension()}>"
    return text


def _char_witness(computed: LaurentPolynomial, expected: LaurentPolynomial) -> dict:
    exps, _ = (computed - expected).terms()[0]
    return {
        "exponents": list(exps),
        "computed": computed.coefficient(exps),
        "expected": expected.coefficient(exps),
    }


def _char_table(series: str, f: LaurentPolynomial) -> list[dict]:
    return [
        {"series": series, "multidegree": list(exps), "dimension": coeff}
        for exps, coeff in f.terms()
    ]


# ---------------------------------------------------------------------------
# handlers; each returns (parameters, [Verdict])


def _cmd_complex_homology(ns):
    w = tuple(ns.weights)
    params = {"weights": list(w), "prime": ns.prime}

    def build():
        cx = build_complex(w, ns.prime)
        hom = homology_dims(cx)
        table = [
            {"series": "chain", "degree": k, "dimension": cx.dimension(k)}
            for k in range(cx.d + 1)
        ]
        table += [
            {"series": "homology", "degree": k, "dimension": hom.coefficient(k)}
            for k in range(cx.d + 1)
        ]
        payload = {
            "dimensions": list(cx.dimensions()),
            "ranks": list(cx.ranks()),
            "homology": list(hom.coefficients),
            "summary": str(hom),
            "dimension_table": table,
        }
        return AGREE, payload

    return params, [_timed("homology", params, build)]


def _cmd_complex_theorem(ns):
    params = {"d": ns.d, "primes": list(ns.primes)}
    verdicts = []
    for p in ns.primes:
        vparams = {"d": ns.d, "prime": p}

        def build(p=p):
            brute = homology_dims(build_complex((1,) * (ns.d + 1), p))
            formula = poincare_formula_all_ones(ns.d, p)
            payload = {
                "brute": list(brute.coefficients),
                "formula": list(formula.coefficients),
                "summary": str(formula),
            }
            if brute == formula:
                return AGREE, payload
            k = next(
                i
                for i in range(ns.d + 1)
                if brute.coefficient(i) != formula.coefficient(i)
            )
            payload["witness"] = {
                "degree": k,
                "computed": brute.coefficient(k),
                "expected": formula.coefficient(k),
            }
            return DISAGREE, payload

        verdicts.append(_timed("all-ones-homology-formula", vparams, build))
    return params, verdicts


def _cmd_complex_involution(ns):
    params = {"w0": ns.w0, "d": ns.d, "primes": list(ns.primes)}
    verdicts = []
    for p in ns.primes:
        vparams = {"w0": ns.w0, "d": ns.d, "prime": p}

        def build(p=p):
            rep = check_involution(ns.w0, ns.d, p)
            payload = rep.to_payload()
            if rep.agree:
                return AGREE, payload
            for k, (a, b) in enumerate(zip(rep.ranks_direct, rep.ranks_shifted)):
                if a != b:
                    payload["witness"] = {"degree": k + 1, "direct": a, "shifted": b}
                    break
            else:
                payload["witness"] = {"smith_direct": payload["smith_direct"],
                                      "smith_negated": payload["smith_negated"]}
            return DISAGREE, payload

        verdicts.append(_timed("hook-involution", vparams, build))
    return params, verdicts


def _cmd_complex_ses(ns):
    params = {"weights": list(ns.weights), "split": ns.split, "prime": ns.prime}

    def build():
        rep = ses_dimension_check(tuple(ns.weights), ns.split, ns.prime)
        payload = rep.to_payload()
        if rep.agree:
            return AGREE, payload
        bad = next((r for r in rep.dimension_rows if not r["ok"]), None)
        if bad is None:
            bad = next((r for r in rep.subadditivity_rows if not r["ok"]), payload["euler"])
        payload["witness"] = bad
        return DISAGREE, payload

    return params, [_timed("ses-bookkeeping", params, build)]


def _cmd_stable_hook(ns):
    params = {"w0": ns.w0, "d": ns.d, "prime": ns.prime}

    def build():
        table = stable_hook_cohomology(ns.w0, ns.d, ns.prime)
        payload = {
            "cohomology": {str(j): v for j, v in table.items()},
            "summary": ", ".join(f"H^{j}={v}" for j, v in table.items() if v),
            "dimension_table": [
                {"series": "stable-cohomology", "degree": j, "dimension": v}
                for j, v in table.items()
            ],
        }
        return AGREE, payload

    return params, [_timed("stable-hook-cohomology", params, build)]


def _cmd_stable_periodicity(ns):
    params = {"w0": ns.w0, "d": ns.d, "prime": ns.prime, "r": ns.r}

    def build():
        rep = check_stable_periodicity_hook(ns.w0, ns.d, ns.prime, ns.r)
        payload = rep.to_payload()
        if rep.agree:
            return AGREE, payload
        k = next(
            i
            for i in range(max(len(rep.base.coefficients), len(rep.shifted.coefficients)))
            if rep.base.coefficient(i) != rep.shifted.coefficient(i)
        )
        payload["witness"] = {
            "degree": k,
            "base": rep.base.coefficient(k),
            "shifted": rep.shifted.coefficient(k),
        }
        return DISAGREE, payload

    return params, [_timed("stable-periodicity", params, build)]


_COMPARE_CHOICES = ("h1-theorem", "small-weights", "char2")


def _cmd_incidence_chars(ns):
    params = {"n": ns.n, "d": ns.d, "e": ns.e, "prime": ns.prime}
    if ns.compare:
        params["compare"] = ns.compare
    if ns.no_symmetry:
        params["symmetry_reduce"] = False
    workers = ns.parallel if ns.parallel is not None else os.cpu_count()

    def build():
        pair = h_characters(
            ns.n,
            ns.d,
            ns.e,
            ns.prime,
            symmetry_reduce=not ns.no_symmetry,
            parallel=workers,
        )
        payload = {
            "h0": pair.h0.to_records(),
            "h1": pair.h1.to_records(),
            "h0_dimension": pair.h0.dimension(),
            "h1_dimension": pair.h1.dimension(),
            "summary": f"h0 = {_char_summary(pair.h0)}; h1 = {_char_summary(pair.h1)}",
            "dimension_table": _char_table("h0", pair.h0) + _char_table("h1", pair.h1),
        }
        if not ns.compare:
            return AGREE, payload
        if ns.compare == "h1-theorem":
            met = window_hypothesis(ns.d, ns.e, ns.prime)
            target = h1_window_char(ns.n, ns.d, ns.e, ns.prime) if met else None
        elif ns.compare == "small-weights":
            met = small_weights_hypothesis(ns.d, ns.e, ns.prime)
            target = h1_small_weight_char(ns.n, ns.d, ns.e, ns.prime) if met else None
        else:
            if ns.prime != 2:
                raise ValueError("--compare char2 requires --prime 2")
            met = char2_hypothesis(ns.d, ns.e)
            target = h1_char2_char(ns.n, ns.d, ns.e) if met else None
        payload["hypothesis_met"] = met
        if not met:
            return OUTSIDE, payload
        payload["target"] = target.to_records()
        if pair.h1 == target:
            return AGREE, payload
        payload["witness"] = _char_witness(pair.h1, target)
        return DISAGREE, payload

    subjects = {
        "h1-theorem": "h1-window-theorem",
        "small-weights": "h1-small-weights",
        "char2": "h1-char2",
    }
    subject = subjects.get(ns.compare, "incidence-characters")
    return params, [_timed(subject, params, build)]


def _cmd_det_filtration(ns):
    truncated = not ns.classical
    params = {"n": ns.n, "a": ns.a, "b": ns.b, "i": ns.i, "prime": ns.prime,
              "truncated": truncated}

    def build():
        quotient = filtration_character(ns.n, ns.a, ns.b, ns.i, truncated, ns.prime)
        slc = ideal_power_slice(ns.n, ns.a, ns.b, ns.i, truncated, ns.prime)
        payload = {
            "quotient": quotient.to_records(),
            "quotient_dimension": quotient.dimension(),
            "slice_dimension": slc.dimension(),
            "summary": _char_summary(quotient),
            "dimension_table": _char_table("filtration-quotient", quotient),
        }
        if not ns.compare:
            return AGREE, payload
        if truncated:
            target = schur2_trunc(ns.a + ns.b - ns.i, ns.i, ns.prime, ns.n)
        else:
            target = schur2(ns.a + ns.b - ns.i, ns.i, ns.n)
        met = (ns.a - ns.b >= ns.prime - 1) if truncated else True
        agrees = quotient == target
        payload["hypothesis_met"] = met
        payload["target"] = target.to_records()
        if not agrees:
            payload["witness"] = _char_witness(quotient, target)
        if not met:
            payload["comparison_agrees"] = agrees
            return OUTSIDE, payload
        return (AGREE, payload) if agrees else (DISAGREE, payload)

    subject = "filtration-vs-schur" if ns.compare else "filtration-character"
    return params, [_timed(subject, params, build)]


def _cmd_det_lead_terms(ns):
    params = {"n": ns.n, "a": ns.a, "b": ns.b, "prime": ns.prime}

    def build():
        rep = check_lead_terms(ns.n, ns.a, ns.b, ns.prime)
        payload = rep.to_payload()
        if not rep.hypothesis_met:
            payload["comparison_agrees"] = rep.agree
            return OUTSIDE, payload
        if rep.agree:
            return AGREE, payload
        payload["witness"] = {"missing_monomial": payload["missing"][0]}
        return DISAGREE, payload

    return params, [_timed("lead-term-containment", params, build)]


def _cmd_char_nim(ns):
    params = {"m": ns.m, "n": ns.n}

    def build():
        f = nim_poly(ns.m, ns.n)
        return AGREE, {
            "character": f.to_records(),
            "dimension": f.dimension(),
            "summary": _char_summary(f),
            "dimension_table": _char_table("nim", f),
        }

    return params, [_timed("nim-character", params, build)]


def _cmd_char_schur(ns):
    params = {"a": ns.a, "b": ns.b, "n": ns.n}
    if ns.q is not None:
        params["q"] = ns.q

    def build():
        if ns.q is None:
            f = schur2(ns.a, ns.b, ns.n)
        else:
            f = schur2_trunc(ns.a, ns.b, ns.q, ns.n)
        return AGREE, {
            "character": f.to_records(),
            "dimension": f.dimension(),
            "summary": _char_summary(f),
            "dimension_table": _char_table("schur", f),
        }

    return params, [_timed("schur-character", params, build)]


# ---------------------------------------------------------------------------
# parser


def build_parser() -> _Parser:
    shared = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a leaf from clobbering values parsed before the
    # subcommand name
    shared.add_argument("--json", metavar="PATH", default=argparse.SUPPRESS)
    shared.add_argument("--csv", metavar="PATH", default=argparse.SUPPRESS)
    shared.add_argument("--parallel", type=int, metavar="N", default=argparse.SUPPRESS)

    parser = _Parser(prog="fpcoh", description=__doc__.splitlines()[0] if __doc__ else None)
    parser.add_argument("--json", metavar="PATH", default=None,
                        help="write the verdict document to PATH")
    parser.add_argument("--csv", metavar="PATH", default=None,
                        help="write dimension tables to PATH")
    parser.add_argument("--parallel", type=int, metavar="N", default=None,
                        help="worker cap (default: available cores)")
    top = parser.add_subparsers(dest="group", required=True, metavar="GROUP")

    cx = top.add_parser("complex", help="weighted path complexes").add_subparsers(
        dest="action", required=True, metavar="ACTION"
    )
    q = cx.add_parser("homology", parents=[shared])
    q.add_argument("--weights", type=_int_list, required=True)
    q.add_argument("--prime", type=int, required=True)
    q.set_defaults(handler=_cmd_complex_homology, command="complex homology")

    q = cx.add_parser("theorem", parents=[shared])
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--primes", type=_int_list, required=True)
    q.set_defaults(handler=_cmd_complex_theorem, command="complex theorem")

    q = cx.add_parser("involution", parents=[shared])
    q.add_argument("--w0", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--primes", type=_int_list, required=True)
    q.set_defaults(handler=_cmd_complex_involution, command="complex involution")

    q = cx.add_parser("ses-check", parents=[shared])
    q.add_argument("--weights", type=_int_list, required=True)
    q.add_argument("--split", type=int, required=True)
    q.add_argument("--prime", type=int, required=True)
    q.set_defaults(handler=_cmd_complex_ses, command="complex ses-check")

    st = top.add_parser("stable", help="stable hook cohomology").add_subparsers(
        dest="action", required=True, metavar="ACTION"
    )
    q = st.add_parser("hook", parents=[shared])
    q.add_argument("--w0", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--prime", type=int, required=True)
    q.set_defaults(handler=_cmd_stable_hook, command="stable hook")

    q = st.add_parser("periodicity", parents=[shared])
    q.add_argument("--w0", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--prime", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.set_defaults(handler=_cmd_stable_periodicity, command="stable periodicity")

    inc = top.add_parser("incidence", help="incidence cohomology characters").add_subparsers(
        dest="action", required=True, metavar="ACTION"
    )
    q = inc.add_parser("chars", parents=[shared])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--e", type=int, required=True)
    q.add_argument("--prime", type=int, required=True)
    q.add_argument("--compare", choices=_COMPARE_CHOICES, default=None)
    q.add_argument("--no-symmetry", action="store_true",
                   help="disable the symmetry reduction over multidegree orbits")
    q.set_defaults(handler=_cmd_incidence_chars, command="incidence chars")

    det = top.add_parser("det", help="determinantal ideal filtrations").add_subparsers(
        dest="action", required=True, metavar="ACTION"
    )
    q = det.add_parser("filtration", parents=[shared])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.add_argument("--i", type=int, required=True)
    q.add_argument("--prime", type=int, required=True)
    q.add_argument("--classical", action="store_true",
                   help="work in the plain polynomial ring instead of the truncation")
    q.add_argument("--compare", action="store_true",
                   help="compare against the two-row Schur character")
    q.set_defaults(handler=_cmd_det_filtration, command="det filtration")

    q = det.add_parser("lead-terms", parents=[shared])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.add_argument("--prime", type=int, required=True)
    q.set_defaults(handler=_cmd_det_lead_terms, command="det lead-terms")

    ch = top.add_parser("char", help="character ring evaluations").add_subparsers(
        dest="action", required=True, metavar="ACTION"
    )
    q = ch.add_parser("nim", parents=[shared])
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(handler=_cmd_char_nim, command="char nim")

    q = ch.add_parser("schur", parents=[shared])
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.add_argument("--q", type=int, default=None)
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(handler=_cmd_char_schur, command="char schur")

    q = top.add_parser("sweep", parents=[shared])
    q.add_argument("--config", metavar="FILE", required=True)
    q.set_defaults(handler=None, command="sweep")

    return parser


# ---------------------------------------------------------------------------
# sweep orchestration


def expand_config(config: dict) -> list[list[str]]:
    """Row-major expansion of {"runs": [{"command": "...", key: value-or-list}]}
    into argv rows.  A list value is a sweep axis; scalars pass through.
    Weights-style flags take their comma string form ("1,1,1,1")."""
    if not isinstance(config, dict) or "runs" not in config:
        raise ValueError('sweep config must be an object with a "runs" list')
    rows = []
    for run in config["runs"]:
        if "command" not in run:
            raise ValueError('every run needs a "command" entry')
        command = run["command"]
        if not isinstance(command, str) or command.split()[0] == "sweep":
            raise ValueError(f"bad run command {command!r}")
        axes = []
        for key, value in run.items():
            if key == "command":
                continue
            values = value if isinstance(value, list) else [value]
            if not values:
                raise ValueError(f"empty sweep axis {key!r}")
            axes.append((key, values))
        for combo in product(*(vals for _, vals in axes)):
            argv = command.split()
            for (key, _), value in zip(axes, combo):
                flag = f"--{key}"
                if value is True:
                    argv.append(flag)
                elif value is False or value is None:
                    pass
                else:
                    argv.extend([flag, str(value)])
            rows.append(argv)
    return rows


def _run_row(argv: list[str]) -> list[Verdict]:
    """One sweep row; stdout of the row is swallowed so the parent report
    stays the only output.  Any failure becomes an error verdict."""
    parser = build_parser()
    sink = io.StringIO()
    try:
        with contextlib.redirect_stdout(sink), contextlib.redirect_stderr(sink):
            ns = parser.parse_args(argv)
            ns.parallel = 1  # rows already run in a pool; no nested workers
            _, verdicts = ns.handler(ns)
        return verdicts
    except SystemExit:
        return [Verdict("sweep-row", {"argv": list(argv)}, ERROR,
                        {"message": sink.getvalue().strip() or "usage error"})]
    except (ValueError, UnsupportedRegimeError) as exc:
        return [Verdict("sweep-row", {"argv": list(argv)}, ERROR,
                        {"message": str(exc)})]


def _cmd_sweep(ns):
    with open(ns.config) as fh:
        config = json.load(fh)
    rows = expand_config(config)
    params = {"config": os.path.basename(ns.config), "rows": len(rows)}
    workers = ns.parallel if ns.parallel is not None else os.cpu_count()
    workers = max(1, min(workers, len(rows) or 1))
    verdicts: list[Verdict] = []
    if workers == 1:
        for argv in rows:
            verdicts.extend(_run_row(argv))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(_run_row, rows):
                verdicts.extend(result)
    return params, verdicts


# ---------------------------------------------------------------------------
# entry point


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "sweep":
            params, verdicts = _cmd_sweep(ns)
        else:
            params, verdicts = ns.handler(ns)
    except UnsupportedRegimeError as exc:
        print(f"fpcoh: unsupported regime: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"fpcoh: parameter error: {exc}", file=sys.stderr)
        return 1
    for v, line in zip(verdicts, human_lines(verdicts)):
        print(line)
        summary = v.payload.get("summary")
        if summary:
            print(f"    {summary}")
    if ns.json:
        document = report_document(ns.command, params, verdicts)
        with open(ns.json, "w") as fh:
            fh.write(render_json(document))
    if ns.csv:
        write_csv(ns.csv, verdicts)
    return exit_code(verdicts)


if __name__ == "__main__":
    raise SystemExit(main())
