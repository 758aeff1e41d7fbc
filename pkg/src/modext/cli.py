"""Command-line front end.

    python -m modext validate t2.json
    python -m modext h1 t2.json --dual-level 0
    python -m modext decompose corpus/t2-on-t2.json --dual-level 1
    python -m modext check --theorem thm-odd --instance corpus/t2-on-t2.json --level 0
    python -m modext sweep --corpus corpus/ --theorem thm-even --level 1 --jobs 4

Exit status: 0 all checks passed, 1 a mathematical check failed, 2 bad
usage or input, 3 a decomposition identity failed on a genuine derivation.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import cohomology, constructions, decomposition, duals, formats, instances, theorems
from .constructions import ConstructionError, ProductAlgebra
from .core import AlgebraicModule, FiniteAlgebra, StructureError, regular_bimodule, validate_algebra, \
    validate_algebraic_module, validate_bimodule

SCHEMA_VERSION = 1
EXIT_OK, EXIT_MATH, EXIT_USAGE, EXIT_LEMMA = 0, 1, 2, 3

__all__ = ["RunConfig", "main", "run", "build_parser", "SCHEMA_VERSION"]


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    level: int = 0
    parity: str | None = None
    theorem: str | None = None
    variant: str | None = None
    seed: int = 0
    format: str = "table"
    fail_fast: bool = False
    jobs: int = 1
    write: str | None = None

    def validate(self):
        if self.level < 0 or self.level > duals.MAX_CLI_LEVEL:
            raise UsageError(f"level must be between 0 and {duals.MAX_CLI_LEVEL}")
        for p in self.inputs:
            if not Path(p).exists():
                raise UsageError(f"no such file or directory: {p}")


class UsageError(ValueError):
    pass


def _vec(v) -> list[str]:
    return [formats.format_rational(x) for x in np.asarray(v, dtype=object).reshape(-1)]


def _mat(m) -> list[list[str]]:
    m = np.asarray(m, dtype=object)
    return [_vec(row) for row in m] if m.size else []


class Emitter:
    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def emit(self, record: dict):
        record = {"schema_version": SCHEMA_VERSION, **record}
        if self.fmt == "json-lines":
            self.out.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
        else:
            self.out.write(_table(record) + "\n")


def _table(record: dict) -> str:
    lines = []
    head = record.get("command", "")
    subject = record.get("subject", "")
    lines.append(f"== {head} {subject}".rstrip())
    for k, v in record.items():
        if k in ("schema_version", "command", "subject"):
            continue
        if k == "conditions" and isinstance(v, list):
            for c in v:
                mark = "ok  " if c["holds"] else "FAIL"
                lines.append(f"  [{mark}] {c['name']}  (dims {c['quantified_dim']}/{c['target_dim']})")
            continue
        if k == "rows" and isinstance(v, list):
            if v:
                cols = list(v[0])
                widths = [max(len(str(c)), *(len(str(r[c])) for r in v)) for c in cols]
                lines.append("  " + "  ".join(str(c).ljust(w) for c, w in zip(cols, widths)))
                for r in v:
                    lines.append("  " + "  ".join(str(r[c]).ljust(w) for c, w in zip(cols, widths)))
            continue
        if isinstance(v, (dict, list)):
            v = json.dumps(v, ensure_ascii=False)
        lines.append(f"  {k}: {v}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# loading

def _load(path: str):
    return formats.load_one(path)


def _as_product(obj) -> ProductAlgebra:
    if isinstance(obj, ProductAlgebra):
        return obj
    if isinstance(obj, AlgebraicModule):
        return constructions.bowtie(obj)
    raise UsageError("input must define a module or a construction")


def _as_module(obj) -> AlgebraicModule:
    if isinstance(obj, AlgebraicModule):
        return obj
    if isinstance(obj, ProductAlgebra):
        return obj.module
    if isinstance(obj, FiniteAlgebra):
        return constructions.self_module(obj)
    raise UsageError("input must define a module")


# ---------------------------------------------------------------------------
# commands

def cmd_validate(cfg: RunConfig, em: Emitter) -> int:
    status = EXIT_OK
    for path in cfg.inputs:
        for name, obj in formats.load(path, check=False).items():
            if isinstance(obj, FiniteAlgebra):
                rep = validate_algebra(obj)
            elif isinstance(obj, AlgebraicModule):
                rep = validate_algebraic_module(obj)
            else:
                rep = validate_algebra(obj.carrier)
            props = [k for k, v in rep.flags.items() if v] if rep.ok else []
            em.emit({
                "command": "validate", "subject": name, "file": path, "ok": rep.ok,
                "report": ", ".join(props) if rep.ok else "invalid",
                "violations": [str(v) for v in rep.violations[:20]],
                "axioms_failed": rep.axioms_failed(),
            })
            if not rep.ok:
                status = EXIT_MATH
                if cfg.fail_fast:
                    return status
    return status


def cmd_construct(cfg: RunConfig, em: Emitter) -> int:
    p = _as_product(_load(cfg.inputs[0]))
    rep = constructions.block_report(p)
    alg = validate_algebra(p.carrier)
    em.emit({
        "command": "construct", "subject": p.carrier.name, "provenance": p.provenance,
        "dim": p.carrier.dim, "dim_a": p.dim_a, "dim_x": p.dim_x, "basis": list(p.carrier.basis),
        "unital": p.carrier.is_unital, "associative": alg.ok, "blocks_ok": rep.ok,
        "warnings": list(p.warnings), "definition": formats.algebra_doc(p.carrier),
    })
    return EXIT_OK if (rep.ok and alg.ok) else EXIT_MATH


def cmd_dual(cfg: RunConfig, em: Emitter) -> int:
    obj = _load(cfg.inputs[0])
    n = cfg.level
    if isinstance(obj, FiniteAlgebra):
        tower = duals.iterated_dual(regular_bimodule(obj), n)
        ok = validate_bimodule(tower.space).ok
        em.emit({"command": "dual", "subject": obj.name, "level": n, "dim": tower.dim,
                 "basis": list(tower.basis), "valid_bimodule": ok})
        return EXIT_OK if ok else EXIT_MATH
    p = _as_product(obj)
    blocks = duals.product_dual_actions(p, n)
    direct = duals.iterated_dual(regular_bimodule(p.carrier), n).space
    same = blocks.same_structure(direct)
    em.emit({"command": "dual", "subject": p.carrier.name, "level": n, "dim": blocks.dim,
             "basis": list(blocks.basis), "block_formula_matches_direct_dual": same,
             "valid_bimodule": validate_bimodule(blocks).ok})
    return EXIT_OK if same else EXIT_MATH


def cmd_h1(cfg: RunConfig, em: Emitter) -> int:
    obj = _load(cfg.inputs[0])
    n = cfg.level
    if isinstance(obj, FiniteAlgebra):
        space = cohomology.derivation_space(obj, duals.iterated_dual(regular_bimodule(obj), n).space)
        subject = obj.name
    else:
        p = _as_product(obj)
        space = cohomology.derivation_space(p.carrier, duals.product_dual_level(p, n).module)
        subject = p.carrier.name
    em.emit({"command": "h1", "subject": subject, "dual_level": n, **space.summary()})
    return EXIT_OK


def cmd_decompose(cfg: RunConfig, em: Emitter) -> int:
    p = _as_product(_load(cfg.inputs[0]))
    k = cfg.level
    lvl = duals.product_dual_level(p, k)
    space = cohomology.derivation_space(p.carrier, lvl.module)
    for idx, D in enumerate(space.basis):
        blocks = decomposition.decompose(p, D, k)
        back = decomposition.assemble(blocks)
        cert = decomposition.find_certificate(blocks)
        rec = {"command": "decompose", "subject": p.carrier.name, "dual_level": k, "parity": blocks.parity,
               "derivation": idx, "conditions": [
                   {"name": f"({c})", "holds": v, "quantified_dim": 0, "target_dim": 0}
                   for c, v in blocks.conditions.items()],
               "round_trip": bool(np.equal(back, D).astype(bool).all()),
               "blocks": {b: _mat(getattr(blocks, b)) for b in decomposition.BLOCKS}}
        if isinstance(cert, decomposition.InnernessCertificate):
            rec.update(inner=True, witness_a=_vec(cert.witness_a), witness_x=_vec(cert.witness_x),
                       certificate=cert.identities)
        else:
            rec.update(inner=False, absence_proof=_vec(cert.witness))
        em.emit(rec)
    em.emit({"command": "decompose", "subject": p.carrier.name, "dual_level": k, **space.summary()})
    return EXIT_OK


def _check_one(tag: str, obj, n: int, parity: str | None, variant: str | None):
    """Dispatch a theorem tag to its checker; returns a ConditionReport (or a dgg record)."""
    base = tag.rsplit("-", 1)
    par = parity or (base[1] if len(base) == 2 and base[1] in ("odd", "even") else None)
    if tag == "thm-odd":
        return theorems.check_thm_odd(_as_product(obj), n)
    if tag == "thm-even":
        return theorems.check_thm_even(_as_product(obj), n)
    if tag in ("prop-2.3", "prop-3.4", "prop-3.9"):
        default = {"prop-2.3": "2.3-odd-1", "prop-3.4": "3.4-even", "prop-3.9": "3.9-combined"}[tag]
        return theorems.check_prop_density(_as_product(obj), n, variant or default)
    if tag.startswith("cor-zhang"):
        return theorems.check_cor_zhang(_as_module(obj), n, par)
    if tag.startswith("cor-selfbowtie"):
        A = obj if isinstance(obj, FiniteAlgebra) else _as_product(obj).base
        return theorems.check_cor_selfbowtie(A, n, par)
    if tag.startswith("cor-lau"):
        if not (isinstance(obj, ProductAlgebra) and obj.provenance in ("theta_lau", "unitization")):
            raise UsageError("cor-lau needs a theta_lau construction")
        return theorems.check_cor_lau(obj.params["A"], obj.params["B"], obj.params["theta"], n, par)
    if tag.startswith("cor-directsum"):
        if not (isinstance(obj, ProductAlgebra) and obj.provenance == "direct_sum"):
            raise UsageError("cor-directsum needs a direct_sum construction")
        return theorems.check_cor_directsum(obj.params["A"], obj.params["B"], n, par)
    if tag.startswith("thm-unital"):
        return theorems.check_thm_unital(_as_product(obj), n, par)
    if tag == "dgg-1.2":
        A = obj if isinstance(obj, FiniteAlgebra) else _as_product(obj).carrier
        return {"holds": theorems.check_dgg_necessity(A), "subject": A.name}
    raise UsageError(f"unknown theorem tag {tag!r}; expected one of {theorems.TAGS}")


def _report_record(tag: str, rep, path: str) -> tuple[dict, bool]:
    if isinstance(rep, dict):
        return {"command": "check", "theorem": tag, "file": path, "iff_consistent": rep["holds"],
                "subject": rep["subject"]}, rep["holds"]
    d = rep.to_dict()
    ok = rep.iff_consistent and d["extra"].get("agrees_with_theorem", True)
    d.update(command="check", subject=rep.instance, file=path)
    return d, ok


def cmd_check(cfg: RunConfig, em: Emitter) -> int:
    obj = _load(cfg.inputs[0])
    rep = _check_one(cfg.theorem, obj, cfg.level, cfg.parity, cfg.variant)
    rec, ok = _report_record(cfg.theorem, rep, cfg.inputs[0])
    em.emit(rec)
    return EXIT_OK if ok else EXIT_MATH


def _sweep_task(args):
    path, tag, n, parity, variant = args
    try:
        obj = formats.load_one(path)
        rep = _check_one(tag, obj, n, parity, variant)
        rec, ok = _report_record(tag, rep, path)
        return {"file": path, "instance": rec.get("subject", ""), "h1": rec.get("direct_h1", ""),
                "conditions_hold": rec.get("conditions_hold", ""), "iff_consistent": ok}, ok, None
    except decomposition.LemmaViolation as exc:
        return {"file": path, "instance": "", "h1": "", "conditions_hold": "", "iff_consistent": False}, False, \
            f"lemma violation: {exc}"
    except (formats.ParseError, UsageError, ConstructionError, StructureError, ValueError) as exc:
        return {"file": path, "instance": "", "h1": "", "conditions_hold": "", "iff_consistent": "error"}, None, \
            str(exc)


def cmd_sweep(cfg: RunConfig, em: Emitter) -> int:
    root = Path(cfg.inputs[0])
    files = sorted(str(p) for p in root.glob("*.json")) if root.is_dir() else [str(root)]
    tasks = [(f, cfg.theorem, cfg.level, cfg.parity, cfg.variant) for f in files]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            results = list(pool.map(_sweep_task, tasks))
    else:
        results = []
        for t in tasks:
            results.append(_sweep_task(t))
            if cfg.fail_fast and results[-1][1] is not True:
                break
    rows, status, errors = [], EXIT_OK, []
    for row, ok, err in results:
        rows.append(row)
        if err:
            errors.append(f"{row['file']}: {err}")
        if err and err.startswith("lemma violation"):
            status = EXIT_LEMMA
        elif ok is None and status == EXIT_OK:
            status = EXIT_USAGE
        elif ok is False and status in (EXIT_OK, EXIT_USAGE):
            status = EXIT_MATH
    consistent = sum(1 for r in rows if r["iff_consistent"] is True)
    if cfg.format == "json-lines":
        for r in rows:
            em.emit({"command": "sweep", "theorem": cfg.theorem, "level": cfg.level, **r})
        em.emit({"command": "sweep", "theorem": cfg.theorem, "level": cfg.level, "instances": len(rows),
                 "consistent": consistent, "errors": errors})
    else:
        em.emit({"command": "sweep", "subject": f"{cfg.theorem} n={cfg.level}", "rows": rows,
                 "instances": len(rows), "consistent": consistent, "errors": errors})
    return status


def cmd_pin(cfg: RunConfig, em: Emitter) -> int:
    """Recompute pinned h1 dimensions for the default corpus; write or compare."""
    fresh = {}
    for r in instances.corpus_recipes(cfg.seed):
        m = instances.materialize(r)
        p = constructions.bowtie(m)
        fresh[r.name] = {f"h1_level_{k}": theorems.product_h1(p, k) for k in range(4)}
    stored = instances.load_pins()
    if cfg.write:
        Path(cfg.write).write_text(json.dumps({"seed": cfg.seed, "levels": [0, 1, 2, 3], "instances": fresh},
                                              indent=1, sort_keys=True) + "\n")
        em.emit({"command": "pin", "subject": cfg.write, "instances": len(fresh)})
        return EXIT_OK
    mismatched = sorted(k for k in fresh if stored.get(k) is not None and stored[k] != fresh[k])
    missing = sorted(k for k in fresh if k not in stored)
    em.emit({"command": "pin", "subject": "pins.json", "instances": len(fresh), "mismatched": mismatched,
             "missing": missing})
    return EXIT_MATH if mismatched else EXIT_OK


COMMANDS = {
    "validate": cmd_validate, "construct": cmd_construct, "dual": cmd_dual, "h1": cmd_h1,
    "decompose": cmd_decompose, "check": cmd_check, "sweep": cmd_sweep, "pin": cmd_pin,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modext", description="Weak amenability of generalized module extensions.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json-lines"), default="table")
    common.add_argument("--fail-fast", action="store_true")
    common.add_argument("--seed", type=int, default=0)
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("validate", parents=[common], help="check axioms of every object in the files")
    p.add_argument("files", nargs="+")
    p = sub.add_parser("construct", parents=[common], help="build the product algebra of a module/construction")
    p.add_argument("file")
    p = sub.add_parser("dual", parents=[common], help="iterated dual; for products compares the block formulas")
    p.add_argument("file")
    p.add_argument("--level", type=int, default=1)
    p = sub.add_parser("h1", parents=[common], help="derivation, inner and H1 dimensions")
    p.add_argument("file")
    p.add_argument("--dual-level", type=int, default=0, dest="level")
    p = sub.add_parser("decompose", parents=[common], help="block decomposition of each basis derivation")
    p.add_argument("file")
    p.add_argument("--dual-level", type=int, default=1, dest="level")
    for name in ("check", "sweep"):
        p = sub.add_parser(name, parents=[common])
        if name == "check":
            p.add_argument("--instance", required=True)
        else:
            p.add_argument("--corpus", required=True)
            p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--theorem", required=True, choices=theorems.TAGS)
        p.add_argument("--level", type=int, default=0)
        p.add_argument("--parity", choices=("odd", "even"))
        p.add_argument("--variant", choices=theorems.DENSITY_VARIANTS)
    p = sub.add_parser("pin", parents=[common], help="recompute pinned constants of the default corpus")
    p.add_argument("--write", metavar="PATH", help="write fresh pins to PATH instead of comparing")
    return ap


def _config(ns: argparse.Namespace) -> RunConfig:
    inputs = getattr(ns, "files", None) or [x for x in (getattr(ns, "file", None), getattr(ns, "instance", None),
                                                          getattr(ns, "corpus", None)) if x]
    return RunConfig(ns.command, inputs, getattr(ns, "level", 0), getattr(ns, "parity", None),
                     getattr(ns, "theorem", None), getattr(ns, "variant", None), ns.seed, ns.format, ns.fail_fast,
                     getattr(ns, "jobs", 1), getattr(ns, "write", None))


def run(cfg: RunConfig, out=None) -> int:
    em = Emitter(cfg.format, out)
    err = sys.stderr
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg, em)
    except decomposition.LemmaViolation as exc:
        err.write(f"modext: LEMMA VIOLATION: {exc}\n")
        return EXIT_LEMMA
    except (formats.ParseError, UsageError, ConstructionError, StructureError, ValueError) as exc:
        err.write(f"modext: error: {exc}\n")
        return EXIT_USAGE


def main(argv=None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return run(_config(ns))


if __name__ == "__main__":
    sys.exit(main())
