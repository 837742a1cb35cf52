"""Command-line client.

All computation lives in the service layer; this module only parses
arguments, renders output (text, json, csv, latex) and maps errors to exit
codes: 0 success, 1 verification failure, 2 usage error.  With --server the
same requests are sent to a running HTTP instance instead of computed
in-process.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import urllib.request
from pathlib import Path

from . import service
from .poly import ConsistencyError, UsageError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def poly_model_to_text(p: dict) -> str:
    chunks = []
    for term in p["terms"]:
        coeff = term["coeff"]
        mono = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(p["symbols"], term["exps"])
            if e
        )
        if not mono:
            body = coeff.lstrip("-")
        elif coeff.lstrip("-") == "1":
            body = mono
        else:
            body = f"{coeff.lstrip('-')}*{mono}"
        chunks.append(("-" if coeff.startswith("-") else "+", body))
    if not chunks:
        return "0"
    sign, body = chunks[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


def poly_model_to_latex(p: dict) -> str:
    text = poly_model_to_text(p)
    text = re.sub(r"([A-Za-z]+)(\d+)", r"\1_{\2}", text)
    text = re.sub(r"\^(\d+)", r"^{\1}", text)
    return text.replace("*", " ")


def display_to_latex(display: str) -> str:
    text = re.sub(r"([A-Za-z])(\d)", r"\1_{\2}", display)
    text = re.sub(r"\^(\d+)", r"^{\1}", text)
    return text.replace("*", " \\cdot ")


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _read_kazarian(path: str | None):
    if path is None:
        return None
    data = json.loads(Path(path).read_text())
    return [service.KazarianEntryModel.model_validate(entry) for entry in data]


def _remote(server: str, method: str, route: str, payload=None) -> dict:
    url = server.rstrip("/") + route
    body = None if payload is None else json.dumps(payload).encode()
    req = urllib.request.Request(
        url,
        data=body,
        method=method,
        headers={"Content-Type": "application/json"},
    )
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read().decode())


# -- renderers ---------------------------------------------------------------


def render_class(result: dict, fmt: str, which_class: str) -> str:
    if fmt == "json":
        return _dump_json(result)
    affine_label = (
        "p(-u,-v)"
        if result["sign_convention"] == "p(-u,-v)"
        else ("p(u,v)" if result["sign_convention"] == "p(u,v)" else "p")
    )
    show_affine = which_class in ("both", "affine")
    show_projective = which_class in ("both", "projective")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            ["name", "aut", "weighted", "predegree", "affine", "projective"]
        )
        writer.writerow(
            [
                result["name"],
                result["aut"],
                result["weighted"],
                result["predegree"],
                poly_model_to_text(result["affine"]),
                poly_model_to_text(result["projective"]),
            ]
        )
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        lines = []
        if result.get("display"):
            lines.append(f"{affine_label} = {display_to_latex(result['display'])}")
        elif show_affine:
            lines.append(f"{affine_label} = {poly_model_to_latex(result['affine'])}")
        if show_projective:
            lines.append(f"P = {poly_model_to_latex(result['projective'])}")
        return "\n".join(lines)
    # text
    lines = [f"curve: {result['name']}"]
    aut = result["aut"]
    if aut is not None:
        lines.append(f"aut: {aut}")
    if not result["weighted"]:
        lines.append("note: infinite automorphisms; class is the unweighted [O_C]")
    if result.get("display"):
        lines.append(f"{affine_label} = {result['display']}")
        if show_affine:
            lines.append(f"{affine_label} expanded = {poly_model_to_text(result['affine'])}")
    elif show_affine:
        lines.append(f"{affine_label} = {poly_model_to_text(result['affine'])}")
    if show_projective:
        lines.append(f"P = {poly_model_to_text(result['projective'])}")
    lines.append(f"predegree = {result['predegree']}")
    lines.append(f"provenance = {result['provenance']}")
    return "\n".join(lines)


def render_table(table: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(table)
    rows = table["rows"]
    if table["which"] == "sections":
        headers = ["name", "aut", "weighted_sections", "per_aut"]
    else:
        headers = ["name", "aut", "predegree", "affine"]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(headers)
        for row in rows:
            writer.writerow([_cell(row, h) for h in headers])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        lines = ["\\begin{tabular}{l" + "l" * (len(headers) - 1) + "}"]
        lines.append(" & ".join(headers) + " \\\\ \\hline")
        for row in rows:
            cells = []
            for h in headers:
                if h == "affine" and row.get("display"):
                    cells.append(display_to_latex(row["display"]))
                elif h == "affine":
                    cells.append(poly_model_to_latex(row["affine"]))
                else:
                    cells.append(str(_cell(row, h)))
            lines.append(" & ".join(cells) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    # text
    lines = []
    for row in rows:
        lines.append("  ".join(f"{h}={_cell(row, h)}" for h in headers))
    return "\n".join(lines)


def _cell(row: dict, header: str):
    if header == "affine":
        return poly_model_to_text(row["affine"]) if "affine" in row else ""
    value = row.get(header)
    if value is None:
        return "?"
    return value


def render_verify(resp: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(resp)
    lines = []
    for check in resp["checks"]:
        mark = "ok  " if check["ok"] else "FAIL"
        line = f"{mark} {check['name']}"
        if not check["ok"]:
            line += f": {check['detail']}"
        lines.append(line)
    lines.append(
        f"{'PASS' if resp['ok'] else 'FAIL'}: {resp['checked']} checks, "
        f"{len(resp['failures'])} failures ({resp['suite']})"
    )
    return "\n".join(lines)


# -- commands -----------------------------------------------------------------


def cmd_class(args) -> int:
    kaz = _read_kazarian(args.kazarian_file)
    which = "both"
    if args.projective:
        which = "projective"
    elif args.affine:
        which = "affine"
    if args.server:
        payload = {
            "identifier": args.identifier,
            "flip_sign": args.flip_sign,
            "kazarian": [k.model_dump() for k in kaz] if kaz else None,
        }
        result = _remote(args.server, "POST", "/class", payload)
    else:
        req = service.ClassRequest(
            identifier=args.identifier, flip_sign=args.flip_sign, kazarian=kaz
        )
        result = service.class_response(req).model_dump()
    print(render_class(result, args.format, which))
    return EXIT_OK


def cmd_table(args) -> int:
    kaz = _read_kazarian(args.kazarian_file)
    if args.server:
        if kaz:
            payload = {"suite": "all", "kazarian": [k.model_dump() for k in kaz]}
            table = _remote(args.server, "POST", f"/table/{args.which}", payload)
        else:
            table = _remote(args.server, "GET", f"/table/{args.which}")
    else:
        table = service.table_response(args.which, kaz).model_dump()
    print(render_table(table, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    suite = args.suite_flag or args.suite
    kaz = _read_kazarian(args.kazarian_file)
    if args.server:
        payload = {
            "suite": suite,
            "kazarian": [k.model_dump() for k in kaz] if kaz else None,
        }
        resp = _remote(args.server, "POST", "/verify", payload)
    else:
        req = service.VerifyRequest(suite=suite, kazarian=kaz)
        resp = service.verify_response(req).model_dump()
    print(render_verify(resp, args.format))
    return EXIT_OK if resp["ok"] else EXIT_VERIFY_FAILED


def cmd_towers(args) -> int:
    if args.server:
        payload = _remote(args.server, "GET", "/towers")
    else:
        payload = service.towers_debug()
    print(_dump_json(payload))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("curveorbits.api:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curveorbits",
        description="Exact equivariant orbit-closure classes of plane curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--format",
            choices=("text", "json", "csv", "latex"),
            default="text",
        )
        p.add_argument("--kazarian-file", default=None, help="JSON list of {name, polynomial}")
        p.add_argument("--server", default=None, help="base URL of a running service")

    p_class = sub.add_parser("class", help="compute one orbit class")
    p_class.add_argument("identifier", help='e.g. A6, general, nodal(1,2), points:2,1,1')
    common(p_class)
    p_class.add_argument("--flip-sign", action="store_true", help="points: report p(u,v)")
    group = p_class.add_mutually_exclusive_group()
    group.add_argument("--projective", action="store_true", help="show only the projective class")
    group.add_argument("--affine", action="store_true", help="show only the affine class")
    p_class.set_defaults(fn=cmd_class)

    p_table = sub.add_parser("table", help="emit a full result table")
    p_table.add_argument("which", choices=("quartics", "cubics", "sections"))
    common(p_table)
    p_table.set_defaults(fn=cmd_table)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=("all", "points", "quartics", "cubics", "predegrees", "crosschecks"),
    )
    p_verify.add_argument(
        "--suite",
        dest="suite_flag",
        default=None,
        choices=("all", "points", "quartics", "cubics", "predegrees", "crosschecks"),
    )
    common(p_verify)
    p_verify.set_defaults(fn=cmd_verify)

    p_towers = sub.add_parser("towers", help="dump tower descriptions (debug)")
    p_towers.add_argument("--server", default=None)
    p_towers.set_defaults(fn=cmd_towers)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(fn=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
