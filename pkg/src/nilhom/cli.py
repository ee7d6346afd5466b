"""Command-line interface: ``nilhomology <command> [options]``.

Exit codes: 0 success, 1 invalid input, 2 verification failure,
3 internal inconsistency (e.g. a Kostant cross-check mismatch).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import cecomplex as ce
from .checks import CHECKS, check_sigg, check_theorem_main, check_intro_table, verify_operator_identities
from .homology import (
    KostantMismatch,
    SiggMismatch,
    arity_homology,
    homology_decomposition,
    sigg_homology,
    total_homology_dims,
)
from .weightchar import VirtualCharacterError, plethysm_ext_sym2

log = logging.getLogger("nilhom")

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3


class InvalidInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    g: int = 1
    r: int | None = None
    k: int | None = None
    ell: int | None = None
    max_degree: int | None = None
    output: str = "text"
    out_path: Path | None = None
    parallelism: int = 1
    extra: dict = field(default_factory=dict)

    def validate(self):
        if self.g < 1:
            raise InvalidInput("--g must be at least 1")
        if self.r is not None and self.r < 1:
            raise InvalidInput("--r must be at least 1")
        for name in ("k", "ell", "max_degree"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise InvalidInput(f"--{name.replace('_', '-')} must be nonnegative")
        if self.parallelism < 0:
            raise InvalidInput("--parallelism must be nonnegative (0 = auto)")
        if self.output not in ("text", "json"):
            raise InvalidInput("--output must be text or json")
        return self


def _emit(cfg: RunConfig, text: str):
    if cfg.out_path:
        cfg.out_path.write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_homology(cfg: RunConfig) -> int:
    if cfg.extra.get("all_degrees"):
        if cfg.r is None:
            raise InvalidInput("--all-degrees needs --r")
        dims = total_homology_dims(cfg.g, cfg.r, cfg.parallelism)
        if cfg.output == "json":
            _emit(cfg, _dumps({
                "g": cfg.g, "r": cfg.r,
                "by_degree": {str(d): v for d, v in sorted(dims["by_degree"].items())},
                "by_arity": {str(d): v for d, v in sorted(dims["by_arity"].items())},
            }))
        else:
            deg = [dims["by_degree"].get(d, 0) for d in range(max(dims["by_degree"]) + 1)]
            ar = [dims["by_arity"].get(d, 0) for d in range(max(dims["by_arity"]) + 1)]
            _emit(cfg, f"g={cfg.g} r={cfg.r}\nby homological degree: {' '.join(map(str, deg))}\n"
                       f"by V-degree:           {' '.join(map(str, ar))}")
        return EXIT_OK
    if cfg.k is None:
        raise InvalidInput("--k is required (or use --all-degrees)")
    if cfg.ell is not None:
        result = arity_homology(cfg.g, cfg.k, cfg.ell, cfg.r, cfg.parallelism)
        title = f"H_{cfg.k}(L_H)({cfg.k + cfg.ell})"
    else:
        r = cfg.r if cfg.r is not None else max(1, 2 * cfg.k)
        result = homology_decomposition(cfg.g, r, cfg.k, cfg.parallelism)
        title = f"H_{cfg.k}(L_H(V))"
    if cfg.output == "json":
        _emit(cfg, result.dumps())
    else:
        dims = ", ".join(f"l={l}: {d}" for l, d in sorted(result.dims_by_bidegree.items()))
        _emit(cfg, f"{title}  g={result.g} r={result.r}\n  {result.report.as_text()}\n  dims by l: {dims}")
    return EXIT_OK


def cmd_sigg(cfg: RunConfig) -> int:
    if cfg.k is None:
        raise InvalidInput("--k is required")
    r = cfg.r if cfg.r is not None else max(1, 2 * cfg.k)
    report = sigg_homology(r, cfg.k)
    if cfg.output == "json":
        _emit(cfg, _dumps({"r": r, "k": cfg.k, "decomposition": report.to_json()}))
    else:
        _emit(cfg, f"H_{cfg.k}(Lie_2(V))  r={r}\n  {report.as_text()}")
    return EXIT_OK


def _index(cfg: RunConfig) -> tuple:
    idx = cfg.extra.get("index") or ()
    return tuple(i - 1 for i in idx)


def cmd_operators(cfg: RunConfig) -> int:
    if cfg.extra.get("verify"):
        if cfg.r is None:
            raise InvalidInput("--verify needs --r")
        rep = verify_operator_identities(cfg.g, cfg.r, cfg.max_degree if cfg.max_degree is not None else 4)
        lines = [f"{name}: {n} checked" for name, n in sorted(rep.checked.items())]
        lines += [str(f) for f in rep.failures]
        lines.append("PASS" if rep.passed else "FAIL")
        _emit(cfg, "\n".join(lines))
        return EXIT_OK if rep.passed else EXIT_VERIFY
    name = cfg.extra.get("name")
    if cfg.r is None or cfg.k is None or cfg.ell is None:
        raise InvalidInput("--r, --k and --ell are required")
    try:
        blocks = ce.operator(name, cfg.g, cfg.r, cfg.k, cfg.ell, _index(cfg))
    except (ValueError, IndexError) as exc:
        raise InvalidInput(str(exc)) from exc
    rows = []
    for key, (tkey, m) in blocks.items():
        rows.append({"source": _key_json(key), "target": _key_json(tkey), "rows": m.rows, "cols": m.cols, "nnz": m.nnz})
    if cfg.output == "json":
        _emit(cfg, _dumps(rows))
    else:
        out = [f"{name} on K_({cfg.k},{cfg.ell})  g={cfg.g} r={cfg.r}: {len(rows)} blocks"]
        for row in rows:
            s = row["source"]
            out.append(f"  gl={s['gl']} sp={s['sp']}  {row['rows']}x{row['cols']}  nnz={row['nnz']}")
        _emit(cfg, "\n".join(out))
    return EXIT_OK


def _key_json(key):
    k, ell, w, s = key
    return {"k": k, "ell": ell, "gl": list(w), "sp": list(s)}


def cmd_plethysm(cfg: RunConfig) -> int:
    if cfg.ell is None or cfg.ell < 1:
        raise InvalidInput("--ell must be at least 1")
    r = cfg.r if cfg.r is not None else 2 * cfg.ell
    try:
        report = plethysm_ext_sym2(cfg.ell, r)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    if cfg.output == "json":
        _emit(cfg, _dumps({"ell": cfg.ell, "r": r, "decomposition": report.to_json()}))
    else:
        _emit(cfg, f"Λ^{cfg.ell}(S²V)  r={r}\n  {report.as_text()}")
    return EXIT_OK


def cmd_verify_paper(cfg: RunConfig) -> int:
    only = cfg.extra.get("only") or list(CHECKS)
    unknown = [n for n in only if n not in CHECKS]
    if unknown:
        raise InvalidInput(f"unknown checks {unknown}; choose from {sorted(CHECKS)}")
    results = []
    for name in only:
        if name == "theorem-main" and cfg.r is not None:
            res = check_theorem_main(pairs=((cfg.g, cfg.r),),
                                     max_degree=cfg.max_degree if cfg.max_degree is not None else 6)
        elif name == "sigg" and cfg.r is not None and cfg.k is not None:
            res = check_sigg(only=(cfg.r, cfg.k))
        elif name == "intro-table" and cfg.r is not None:
            res = check_intro_table(r=cfg.r, parallelism=cfg.parallelism)
        elif "parallelism" in CHECKS[name].__code__.co_varnames:
            res = CHECKS[name](parallelism=cfg.parallelism)
        else:
            res = CHECKS[name]()
        results.append(res)
        log.info("%s", res.line())
    if cfg.output == "json":
        _emit(cfg, _dumps([{"name": r.name, "passed": r.passed, "details": r.details} for r in results]))
    else:
        _emit(cfg, "\n".join(r.line() for r in results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def cmd_dump(cfg: RunConfig) -> int:
    name = cfg.extra.get("name")
    if cfg.r is None or cfg.k is None or cfg.ell is None:
        raise InvalidInput("--r, --k and --ell are required")
    out_dir = cfg.out_path or Path(".")
    try:
        blocks = ce.operator(name, cfg.g, cfg.r, cfg.k, cfg.ell, _index(cfg))
    except (ValueError, IndexError) as exc:
        raise InvalidInput(str(exc)) from exc
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        written = []
        for key, (_, m) in blocks.items():
            k, ell, w, s = key
            fname = f"{name}_g{cfg.g}_r{cfg.r}_k{k}_l{ell}_gl{'-'.join(map(str, w))}_sp{'-'.join(map(str, s))}.txt"
            path = out_dir / fname
            path.write_text(m.to_triplets())
            written.append(str(path))
    except OSError as exc:
        raise InvalidInput(f"cannot write to {out_dir}: {exc}") from exc
    print("\n".join(written))
    return EXIT_OK


COMMANDS = {
    "homology": cmd_homology,
    "sigg": cmd_sigg,
    "operators": cmd_operators,
    "plethysm": cmd_plethysm,
    "verify-paper": cmd_verify_paper,
    "dump": cmd_dump,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nilhomology", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, *, k=True, ell=True):
        p.add_argument("--g", type=int, default=1)
        p.add_argument("--r", type=int)
        if k:
            p.add_argument("--k", type=int)
        if ell:
            p.add_argument("--ell", "--l", dest="ell", type=int)
        p.add_argument("--output", choices=("text", "json"), default="text")
        p.add_argument("--out", dest="out_path", type=Path)
        p.add_argument("--parallelism", type=int, default=1, help="worker processes, 0 = one per CPU")

    p = sub.add_parser("homology", help="decompose H_k(L_H(V)) (or H_k(L_H)(k+l) with --ell)")
    common(p)
    p.add_argument("--all-degrees", action="store_true", help="total homology dimensions by degree")

    p = sub.add_parser("sigg", help="decompose H_k(Lie_2(V))")
    common(p, ell=False)

    p = sub.add_parser("operators", help="summarize an operator's weight blocks")
    common(p)
    p.add_argument("--name", default="laplacian", choices=ce.OPERATOR_NAMES)
    p.add_argument("--index", type=int, nargs=2, help="1-based indices for E and e_sp")
    p.add_argument("--verify", action="store_true", help="check the operator identities")
    p.add_argument("--max-degree", type=int)

    p = sub.add_parser("plethysm", help="decompose the l-th exterior power of S^2 V")
    common(p, k=False)

    p = sub.add_parser("verify-paper", help="run the named reproduction checks")
    common(p, ell=False)
    p.add_argument("--only", action="append", help=f"one of {', '.join(CHECKS)}")
    p.add_argument("--max-degree", type=int)

    p = sub.add_parser("dump", help="write operator blocks as triplet files")
    common(p)
    p.add_argument("--operator", dest="name", default="laplacian", choices=ce.OPERATOR_NAMES)
    p.add_argument("--index", type=int, nargs=2)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    known = {"command", "g", "r", "k", "ell", "max_degree", "output", "out_path", "parallelism"}
    extra = {k: v for k, v in vars(ns).items() if k not in known and k != "verbose"}
    return RunConfig(
        command=ns.command, g=ns.g, r=ns.r, k=getattr(ns, "k", None), ell=getattr(ns, "ell", None),
        max_degree=getattr(ns, "max_degree", None), output=ns.output, out_path=ns.out_path,
        parallelism=ns.parallelism, extra=extra,
    )


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(message)s")
    try:
        cfg = config_from_args(ns).validate()
        return COMMANDS[cfg.command](cfg)
    except InvalidInput as exc:
        print(f"nilhomology: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SiggMismatch as exc:
        print(f"nilhomology: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (KostantMismatch, VirtualCharacterError, ArithmeticError) as exc:
        print(f"nilhomology: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
