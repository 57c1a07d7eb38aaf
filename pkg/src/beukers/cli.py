"""Command-line client for the evaluation service.

The CLI is a thin client: every subcommand builds the service request model
and hands it to the shared handlers, in-process by default or against a
running server when --url is given. Output formats: json (lossless), csv
(header row always present), text (table numerics at 4 decimals).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Callable

from pydantic import BaseModel, ValidationError

from .service import handlers, schemas

_ENDPOINTS = {
    "pfd": ("/pfd", handlers.handle_pfd, schemas.PfdResponse),
    "eval": ("/eval", handlers.handle_eval, schemas.EvalResponse),
    "denom-check": ("/denom-check", handlers.handle_denom_check, schemas.DenomCheckResponse),
    "zeta5-table": ("/zeta5/table", handlers.handle_table, schemas.TableResponse),
    "bounds": ("/bounds", handlers.handle_bounds, schemas.BoundsResponse),
    "verify": ("/verify", handlers.handle_verify, schemas.VerifyResponse),
    "mc-r2": ("/mc-r2", handlers.handle_mc_r2, schemas.McR2Response),
}


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(item.strip()) for item in text.split(",") if item.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}") from exc


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # present on the root (with real defaults) and again on every subcommand
    # (defaults suppressed), so the flags work before or after the subcommand
    missing = argparse.SUPPRESS
    parser.add_argument("--format", choices=("json", "csv", "text"),
                        default=missing if suppress else "text",
                        help="output format (default text)")
    parser.add_argument("--precision", type=float,
                        default=missing if suppress else schemas.DEFAULT_PRECISION,
                        help="absolute tolerance for numeric values (default 1e-10)")
    parser.add_argument("--url", default=missing if suppress else None,
                        help="base URL of a running service; omit to compute in-process")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beukers",
        description="Exact log-power kernel integrals, zeta(5) approximation table, verification suite.",
    )
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        _add_global_flags(p, suppress=True)
        return p

    p = command("pfd", help="partial fraction coefficients of a pole multiset")
    p.add_argument("spec", help='multiset, e.g. "0^2,1" or "0,1,3"')

    p = command("eval", help="evaluate I_m(a_1..a_n) in closed form")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-a", type=_parse_int_list, required=True, help="comma-separated exponents")

    p = command("denom-check", help="denominator vs its divisibility bound")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-a", type=_parse_int_list, required=True)

    p = command("zeta5-table", help="zeta(5) approximation rows 1..n")
    p.add_argument("-n", type=int, required=True)

    p = command("bounds", help="squeeze bounds for one row")
    p.add_argument("-n", type=int, required=True)

    p = command("verify", help="run the grid verification suite")
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-a", type=int, default=4)
    p.add_argument("--pfd-samples", type=int, default=200)
    p.add_argument("--envelope-n", type=int, default=10)
    p.add_argument("--seed", type=int, default=20250810)

    p = command("mc-r2", help="Monte Carlo check of the 4-D kernel integral")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _build_request(args: argparse.Namespace) -> BaseModel:
    if args.command == "pfd":
        return schemas.PfdRequest(spec=args.spec)
    if args.command == "eval":
        return schemas.EvalRequest(m=args.m, a=args.a, precision=args.precision)
    if args.command == "denom-check":
        return schemas.DenomCheckRequest(m=args.m, a=args.a)
    if args.command == "zeta5-table":
        return schemas.TableRequest(n_max=args.n, precision=args.precision)
    if args.command == "bounds":
        return schemas.BoundsRequest(n=args.n)
    if args.command == "verify":
        return schemas.VerifyRequest(
            max_m=args.max_m, max_n=args.max_n, max_a=args.max_a, precision=args.precision,
            pfd_samples=args.pfd_samples, envelope_n=args.envelope_n, seed=args.seed,
        )
    if args.command == "mc-r2":
        return schemas.McR2Request(n=args.n, samples=args.samples, seed=args.seed)
    raise AssertionError(f"unhandled command {args.command}")


def _dispatch(command: str, request: BaseModel, url: str | None) -> BaseModel:
    path, handler, response_model = _ENDPOINTS[command]
    if url is None:
        return handler(request)
    import httpx

    reply = httpx.post(url.rstrip("/") + path, json=request.model_dump(mode="json"), timeout=300.0)
    if reply.status_code != 200:
        detail = reply.json().get("detail", reply.text) if reply.headers.get("content-type", "").startswith("application/json") else reply.text
        raise RuntimeError(f"service returned {reply.status_code}: {detail}")
    return response_model.model_validate(reply.json())


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _render_csv(command: str, response: BaseModel) -> str:
    if command == "pfd":
        r: schemas.PfdResponse = response
        rows = []
        table = r.mu if r.mu is not None else [[value] for value in (r.lam or [])]
        for i, (point, row) in enumerate(zip(r.points, table), start=1):
            for j, value in enumerate(row, start=1):
                rows.append([i, point, j, value])
        return _csv_text(["i", "point", "j", "coefficient"], rows)
    if command == "eval":
        r: schemas.EvalResponse = response
        rows = [["constant", r.constant]]
        rows += [[f"zeta_{s}", q] for s, q in r.terms.items()]
        rows += [["value", repr(r.value)], ["q", r.q]]
        return _csv_text(["field", "value"], rows)
    if command == "denom-check":
        r: schemas.DenomCheckResponse = response
        return _csv_text(["m", "a", "q", "bound", "divides"],
                         [[r.m, ";".join(map(str, r.a)), r.q, r.bound, r.divides]])
    if command == "zeta5-table":
        r: schemas.TableResponse = response
        rows = [[row.n, repr(row.lower), repr(row.value), repr(row.upper),
                 row.a_n, row.b_n, row.d_n, repr(row.scaled)] for row in r.rows]
        return _csv_text(["n", "lower", "value", "upper", "a_n", "b_n", "d_n", "scaled"], rows)
    if command == "bounds":
        r: schemas.BoundsResponse = response
        return _csv_text(["n", "lower", "upper"], [[r.n, repr(r.lower), repr(r.upper)]])
    if command == "verify":
        r: schemas.VerifyResponse = response
        rows = [[c.name, c.passed, c.failed, c.total] for c in r.checks]
        return _csv_text(["name", "passed", "failed", "total"], rows)
    if command == "mc-r2":
        r: schemas.McR2Response = response
        return _csv_text(["n", "samples", "seed", "estimate", "target", "relative_error"],
                         [[r.n, r.samples, r.seed, repr(r.estimate), repr(r.target), repr(r.relative_error)]])
    raise AssertionError(command)


def _render_text(command: str, response: BaseModel) -> str:
    if command == "pfd":
        r: schemas.PfdResponse = response
        lines = []
        if r.lam is not None:
            lines.append("lambda: " + ", ".join(r.lam))
        else:
            for point, mult, row in zip(r.points, r.multiplicities, r.mu):
                lines.append(f"pole {point} (multiplicity {mult}): " + ", ".join(row))
        lines.append(f"sum mu_i1 = {r.sum_mu1}")
        lines.append(f"identity verified at sample points: {'yes' if r.verified else 'NO'}")
        return "\n".join(lines)
    if command == "eval":
        r: schemas.EvalResponse = response
        terms = " + ".join(f"({q})*zeta({s})" for s, q in r.terms.items())
        combo = " + ".join(part for part in (terms, f"({r.constant})") if part)
        args = ",".join(map(str, r.a))
        return f"I_{r.m}({args}) = {combo}\nvalue = {r.value!r}\nq = {r.q}"
    if command == "denom-check":
        r: schemas.DenomCheckResponse = response
        verdict = "divides" if r.divides else "DOES NOT divide"
        args = ",".join(map(str, r.a))
        return f"I_{r.m}({args}): q = {r.q} {verdict} bound = {r.bound}"
    if command == "zeta5-table":
        r: schemas.TableResponse = response
        lines = [f"{'n':>3} {'lower':>10} {'J3(n)':>10} {'upper':>10} {'A_n':>28} {'B_n':>28} {'d_n':>8} {'scaled':>12}"]
        for row in r.rows:
            lines.append(
                f"{row.n:>3} {row.lower:>10.4f} {row.value:>10.4f} {row.upper:>10.4f} "
                f"{row.a_n:>28} {row.b_n:>28} {row.d_n:>8} {row.scaled:>12.6g}"
            )
        return "\n".join(lines)
    if command == "bounds":
        r: schemas.BoundsResponse = response
        return f"n = {r.n}: lower = {r.lower:.4f}, upper = {r.upper:.4f}"
    if command == "verify":
        r: schemas.VerifyResponse = response
        lines = []
        for c in r.checks:
            status = "ok" if c.failed == 0 else "FAIL"
            lines.append(f"{c.name:<20} {status:>4}  passed {c.passed:>5}  failed {c.failed:>3}")
            lines.extend(f"    {d}" for d in c.details)
        lines.append("all checks passed" if r.ok else "FAILURES PRESENT")
        return "\n".join(lines)
    if command == "mc-r2":
        r: schemas.McR2Response = response
        return (f"n = {r.n}: estimate = {r.estimate:.6f}, target = {r.target:.6f}, "
                f"relative error = {r.relative_error:.2%} ({r.samples} samples, seed {r.seed})")
    raise AssertionError(command)


def _render(command: str, response: BaseModel, fmt: str) -> str:
    if fmt == "json":
        return response.model_dump_json(indent=2, by_alias=True, exclude_none=True)
    if fmt == "csv":
        return _render_csv(command, response)
    return _render_text(command, response)


def _exit_code(command: str, response: BaseModel) -> int:
    if command == "verify":
        return 0 if response.ok else 1
    if command == "denom-check":
        return 0 if response.divides else 1
    if command == "pfd":
        return 0 if response.verified else 1
    return 0


def main(argv: list[str] | None = None, out: Callable[[str], None] = print) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    try:
        request = _build_request(args)
        response = _dispatch(args.command, request, args.url)
    except (ValidationError, ValueError, ArithmeticError, RuntimeError) as exc:
        # DivergentIntegralError is a ValueError; ToleranceNotMetError a RuntimeError
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out(_render(args.command, response, args.format))
    return _exit_code(args.command, response)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
