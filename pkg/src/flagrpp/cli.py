"""Command-line front end.

Exit codes: 0 success / all verified, 1 a verification was falsified,
2 invalid input or I/O failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .crystal import CrystalSet, RppCrystal, character, demazure_generate
from .insertion import burge, check_matrix, matrix_to_biword
from .keypoly import grothendieck_poly, key_expand, key_polynomial
from .perms import Permutation
from .polynomial import Polynomial
from .shapes import (
    ShapeError, SkewShape, check_composition, check_flag, enumerate_rpps,
    enumerate_rpps_m, flagged_schur, height, reading_word, weight,
)
from .theorem import (
    DeskLimits, FALSIFIED, VERIFIED, compute_beta_hat, partition_by_Q,
    verify_main_theorem, verify_tab_special_case,
)

COMMANDS = ("enumerate", "character", "burge", "keypoly", "expand", "decompose", "verify", "graph", "tab-check")
DEFAULT_SEED = 20240101


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    outer: tuple[int, ...] | None = None
    inner: tuple[int, ...] = ()
    flag: tuple[int, ...] | None = None
    max_entry: int | None = None
    alpha: tuple[int, ...] | None = None
    matrix: tuple[tuple[int, ...], ...] | None = None
    poly: Polynomial | None = None
    sigma: tuple[int, ...] | None = None
    lam: tuple[int, ...] | None = None
    limits: DeskLimits = field(default_factory=DeskLimits)
    fmt: str = "json"
    output: str | None = None
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if min(self.limits.max_n, self.limits.max_size, self.limits.max_cells) < 1:
            raise InputError("scale limits must be at least 1")

    def shape(self) -> SkewShape:
        if self.outer is None:
            raise InputError("--outer (or --shape-file) is required")
        return SkewShape(self.outer, self.inner)

    def flag_or_default(self) -> tuple[int, ...]:
        if self.flag is not None:
            return check_flag(self.flag)
        n = self.max_entry or max(self.shape().rows, 1)
        return (n,) * n


def int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def emit_dot(S: CrystalSet, path: str | None = None) -> str:
    """DOT digraph with one node per element and an edge x -> f_i(x) labelled i."""
    index = {x: k for k, x in enumerate(S.elements)}
    lines = ["digraph crystal {"]
    for x, k in index.items():
        wt = ",".join(map(str, S.weight(x)))
        lines.append(f'  n{k} [label="{S.ambient.label(x)} ({wt})"];')
    for x, i, y in S.edges():
        lines.append(f'  n{index[x]} -> n{index[y]} [label="{i}"];')
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def _kappa_sum(alphas) -> str:
    return " + ".join("kappa(" + ",".join(map(str, a)) + ")" for a in alphas) or "0"


def _cmd_enumerate(cfg):
    shape = cfg.shape()
    if cfg.flag is None and cfg.max_entry is not None:
        rpps = enumerate_rpps_m(shape, cfg.max_entry)
    else:
        rpps = enumerate_rpps(shape, cfg.flag_or_default())
    data = [{"rpp": T.to_json(), "weight": list(weight(T)), "reading_word": list(reading_word(T)),
             "height": list(height(T))} for T in rpps]
    text = "\n".join(f"{T}  wt={weight(T)}  r={''.join(map(str, reading_word(T)))}  "
                     f"h={''.join(map(str, height(T)))}" for T in rpps)
    return data, text, 0


def _cmd_character(cfg):
    shape, flag = cfg.shape(), cfg.flag_or_default()
    g = grothendieck_poly(shape, flag)
    s = flagged_schur(shape, flag)
    data = {"shape": shape.to_json(), "flag": list(flag), "grothendieck": g.to_json(),
            "flagged_schur": s.to_json()}
    return data, f"g = {g}\ns = {s}", 0


def _cmd_burge(cfg):
    if cfg.matrix is None:
        raise InputError("--matrix or --matrix-file is required")
    w = matrix_to_biword(cfg.matrix)
    P, Q = burge(w)
    data = {"matrix": [list(r) for r in cfg.matrix], "biword": w.to_json(), "P": P.to_json(), "Q": Q.to_json()}
    text = f"biword {w}\nP = {P}\nQ = {Q}"
    return data, text, 0


def _cmd_keypoly(cfg):
    if cfg.alpha is None:
        raise InputError("--alpha is required")
    k = key_polynomial(check_composition(cfg.alpha))
    return {"alpha": list(cfg.alpha), "key": k.to_json()}, str(k), 0


def _cmd_expand(cfg):
    f = cfg.poly
    if f is None:
        if cfg.outer is None:
            raise InputError("--poly or --outer/--flag is required")
        f = grothendieck_poly(cfg.shape(), cfg.flag_or_default())
    exp = key_expand(f)
    text = f"{f} = {_kappa_sum(exp.multiset())}" if exp.positive else f"not key positive; remainder {exp.remainder}"
    return exp.to_json(), text, 0


def _cmd_decompose(cfg):
    shape, flag = cfg.shape(), cfg.flag_or_default()
    if not cfg.limits.admits(shape, flag):
        return {"verdict": "skipped-too-large"}, "skipped-too-large", 0
    blocks = partition_by_Q(shape, flag)
    for b in blocks:
        compute_beta_hat(b)
    ok = all(b.ok for b in blocks)
    data = {"shape": shape.to_json(), "flag": list(flag), "verdict": VERIFIED if ok else FALSIFIED,
            "blocks": [b.to_json() for b in blocks]}
    lines = [f"{len(blocks)} blocks"]
    for b in blocks:
        lines.append(f"Q={b.Q}  size={len(b.members)}  beta_hat={b.beta_hat}  sigma={b.sigma}")
    return data, "\n".join(lines), 0 if ok else 1


def _cmd_verify(cfg):
    report = verify_main_theorem(cfg.shape(), cfg.flag_or_default(), cfg.limits)
    lines = [f"shape {report.shape}  flag {report.flag}  verdict {report.verdict}"]
    if report.grothendieck is not None:
        lines.append(f"g = {report.grothendieck}")
        lines.append(f"g = {_kappa_sum(report.key_sum)}")
    for name, value in sorted(report.checks.items()):
        lines.append(f"  {name:<18} {'ok' if value else 'FAILED'}")
    if report.witness:
        lines.append(f"witness: {report.witness}")
    return report.to_json(), "\n".join(lines), 1 if report.verdict == FALSIFIED else 0


def _graph_set(cfg) -> CrystalSet:
    if cfg.sigma is not None:
        if cfg.lam is None:
            raise InputError("--lam is required with --sigma")
        return demazure_generate(Permutation(cfg.sigma), cfg.lam)
    flag = cfg.flag_or_default()
    return CrystalSet(enumerate_rpps(cfg.shape(), flag), RppCrystal(len(flag)), "partial")


def _cmd_graph(cfg):
    S = _graph_set(cfg)
    dot = emit_dot(S)
    data = {"nodes": [S.ambient.to_json(x) for x in S],
            "edges": [[S.elements.index(x), i, S.elements.index(y)] for x, i, y in S.edges()],
            "character": character(S).to_json()}
    return data, dot, 0


def _cmd_tab_check(cfg):
    rep = verify_tab_special_case(cfg.shape(), cfg.flag_or_default())
    text = "\n".join(f"{k}: {v}" for k, v in rep.to_json().items())
    return rep.to_json(), text, 0 if rep.ok else 1


HANDLERS = {
    "enumerate": _cmd_enumerate, "character": _cmd_character, "burge": _cmd_burge,
    "keypoly": _cmd_keypoly, "expand": _cmd_expand, "decompose": _cmd_decompose,
    "verify": _cmd_verify, "graph": _cmd_graph, "tab-check": _cmd_tab_check,
}


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        data, text, code = HANDLERS[cfg.command](cfg)
    except (ShapeError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.fmt == "json":
        payload = json.dumps(data, indent=2) + "\n"
    elif cfg.fmt == "dot":
        if cfg.command != "graph":
            print("error: --format dot only applies to graph", file=sys.stderr)
            return 2
        payload = text
    else:
        payload = text if text.endswith("\n") else text + "\n"
    try:
        if cfg.output:
            Path(cfg.output).write_text(payload)
        else:
            out.write(payload)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flagrpp", description=__doc__)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--outer", help="outer partition, e.g. 4,4,3,2")
    p.add_argument("--inner", default="", help="inner partition, e.g. 2,1")
    p.add_argument("--shape-file", help='JSON {"outer": [...], "inner": [...]}; overrides --outer/--inner')
    p.add_argument("--flag", help="flag, e.g. 1,2,3,4 (default: n,...,n)")
    p.add_argument("--flag-file", help="JSON array; overrides --flag")
    p.add_argument("--max-entry", type=int, help="entry bound m for enumerate without a flag")
    p.add_argument("--alpha", help="composition, e.g. 0,2")
    p.add_argument("--matrix", help="matrix as JSON, e.g. '[[1,2],[0,1]]'")
    p.add_argument("--matrix-file", help="matrix JSON file; overrides --matrix")
    p.add_argument("--poly", help="polynomial JSON [{\"exp\": [...], \"coeff\": c}, ...]")
    p.add_argument("--poly-file", help="polynomial JSON file; overrides --poly")
    p.add_argument("--sigma", help="permutation in one-line notation for graph, e.g. 2,1")
    p.add_argument("--lam", help="partition for graph with --sigma")
    p.add_argument("--max-n", type=int, default=DeskLimits.max_n)
    p.add_argument("--max-size", type=int, default=DeskLimits.max_size,
                   help="largest |outer| verified exhaustively; raising it grows the run time quickly")
    p.add_argument("--max-cells", type=int, default=DeskLimits.max_cells)
    p.add_argument("--format", dest="fmt", choices=("json", "text", "dot"), default="json")
    p.add_argument("--output", "-o")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    outer, inner = (int_list(args.outer) if args.outer else None), int_list(args.inner)
    if args.shape_file:
        shape = SkewShape.from_json(_load_json(args.shape_file))
        outer, inner = shape.outer, shape.inner
    flag = int_list(args.flag) if args.flag else None
    if args.flag_file:
        flag = tuple(_load_json(args.flag_file))
    matrix = json.loads(args.matrix) if args.matrix else None
    if args.matrix_file:
        matrix = _load_json(args.matrix_file)
    poly = json.loads(args.poly) if args.poly else None
    if args.poly_file:
        poly = _load_json(args.poly_file)
    return RunConfig(
        command=args.command, outer=outer, inner=inner, flag=flag, max_entry=args.max_entry,
        alpha=int_list(args.alpha) if args.alpha else None,
        matrix=check_matrix(matrix) if matrix is not None else None,
        poly=Polynomial.from_json(poly) if poly is not None else None,
        sigma=int_list(args.sigma) if args.sigma else None,
        lam=int_list(args.lam) if args.lam else None,
        limits=DeskLimits(args.max_n, args.max_size, args.max_cells),
        fmt=args.fmt, output=args.output, seed=args.seed,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
