"""Command-line front end: ring operations, certificate checks and fixture replay.

Every command prints one JSON document (sorted keys) on stdout.  Validation
errors exit with status 2 and a JSON error object; ``check`` exits 0
whatever the verdict; ``fixtures`` exits 1 if any stored expectation is not
reproduced.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .certificate import InconsistentData
from .jsonio import class_from_json, class_to_json, run_check
from .partitions import (
    Box,
    complement,
    conjugate,
    delta,
    delta_j,
    delta_j_alternate,
    descent_set,
    mu_j,
    parse_box,
    parse_partition,
)
from .schubert_ring import (
    SchubertClass,
    lr_multiply,
    multiply,
    nonzero_special_product,
    omega_class,
    pieri,
)

DEFAULT_FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True)


def _box(args) -> Box:
    if args.box is None:
        raise UsageError(f"{args.command} needs --box d=<int>,n=<int>")
    return parse_box(args.box)


def _class_arg(text: str, box: Box | None) -> SchubertClass:
    """A partition string, or a path to a JSON class file (as written by ``mult``)."""
    if text.endswith(".json"):
        with open(text) as fh:
            c = class_from_json(json.load(fh), box)
        if not isinstance(c, SchubertClass):
            raise UsageError(f"{text} does not hold a Grassmannian class")
        if box is not None and c.box != box:
            raise ValueError(f"box mismatch: {c.box} vs {box}")
        return c
    if box is None:
        raise UsageError("partition arguments need --box")
    return SchubertClass.basis(parse_partition(text, box))


def _two_classes(args) -> tuple[SchubertClass, SchubertClass]:
    box = parse_box(args.box) if args.box else None
    if len(args.args) != 2:
        raise UsageError(f"{args.command} takes exactly two classes, got {len(args.args)}")
    a, b = (_class_arg(t, box) for t in args.args)
    if a.box != b.box:
        raise ValueError(f"box mismatch: {a.box} vs {b.box}")
    return a, b


def _one_partition(args, box: Box):
    if len(args.args) != 1:
        raise UsageError(f"{args.command} takes exactly one partition, got {len(args.args)}")
    return parse_partition(args.args[0], box)


def cmd_mult(args):
    return class_to_json(multiply(*_two_classes(args)))


def cmd_lr_oracle(args):
    return class_to_json(lr_multiply(*_two_classes(args)))


def cmd_pieri(args):
    box = parse_box(args.box) if args.box else None
    if len(args.args) != 2:
        raise UsageError("pieri takes a class and a special index m")
    c = _class_arg(args.args[0], box)
    try:
        m = int(args.args[1])
    except ValueError:
        raise UsageError(f"special index {args.args[1]!r} is not an integer") from None
    return class_to_json(pieri(c, m))


def cmd_dual(args):
    box = _box(args)
    lam = _one_partition(args, box)
    bar = complement(lam)
    product = multiply(SchubertClass.basis(lam), SchubertClass.basis(bar))
    return {"partition": list(lam.parts), "complement": list(bar.parts), "product": class_to_json(product)}


def cmd_complement(args):
    box = _box(args)
    return list(complement(_one_partition(args, box)).parts)


def cmd_conj(args):
    box = _box(args)
    return list(conjugate(_one_partition(args, box)).parts)


def cmd_mu_j(args):
    box = _box(args)
    mu = _one_partition(args, box)
    js = sorted(descent_set(mu))
    if args.j is not None:
        js = [args.j]
    return [{"j": j, "mu_j": list(mu_j(mu, j).parts)} for j in js]


def cmd_delta(args):
    box = _box(args)
    mu = _one_partition(args, box)
    per = []
    for j in sorted(descent_set(mu)):
        entry = {"j": j, "delta_j": delta_j(mu, j)}
        if mu[j] < box.w:
            entry["alternate"] = delta_j_alternate(mu, j)
        per.append(entry)
    return {"partition": list(mu.parts), "delta": delta(mu), "per_descent": per}


def cmd_nonzero(args):
    box = _box(args)
    if not 1 <= len(args.args) <= 2:
        raise UsageError("nonzero takes a partition and an optional list of special indices")
    lam = parse_partition(args.args[0], box)
    ells = [int(t) for t in args.args[1].split(",") if t.strip()] if len(args.args) == 2 else []
    return {"partition": list(lam.parts), "ell": ells, "nonzero": nonzero_special_product(lam, sorted(ells, reverse=True))}


def cmd_omega(args):
    if args.args:
        raise UsageError("omega takes no positional arguments")
    return class_to_json(omega_class(_box(args)))


def _load_request(path: str) -> dict:
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: expected a JSON object")
    return doc


def cmd_check(args):
    if args.inputs is None:
        raise UsageError("check needs --inputs <path.json>")
    doc = _load_request(args.inputs)
    criterion = args.criterion or doc.get("criterion")
    if criterion is None:
        raise UsageError("check needs --criterion or a 'criterion' key in the inputs file")
    if args.criterion and doc.get("criterion") not in (None, args.criterion):
        raise ValueError(f"--criterion {args.criterion} does not match file criterion {doc['criterion']}")
    inputs = doc["inputs"] if "inputs" in doc else doc
    _fill_ambient(inputs, args)
    return run_check(criterion, inputs).to_dict()


def _fill_ambient(inputs: Any, args) -> None:
    """Let --box / --space supply the ambient of classes that omit it."""
    if not isinstance(inputs, dict):
        return
    for key in ("X", "Y", "Z", "F"):
        cls = inputs.get(key, {}).get("class") if isinstance(inputs.get(key), dict) else None
        if not isinstance(cls, dict) or "box" in cls or "space" in cls:
            continue
        if args.box:
            cls["box"] = args.box
        elif args.space:
            cls["space"] = args.space
    if args.box and inputs.get("box") is None and "dim" in inputs:
        inputs["box"] = args.box


def _matches(expected: Any, got: Any) -> bool:
    """Every key of ``expected`` (recursively, lists elementwise) is reproduced in ``got``."""
    if isinstance(expected, dict):
        return isinstance(got, dict) and all(k in got and _matches(v, got[k]) for k, v in expected.items())
    if isinstance(expected, list):
        return isinstance(got, list) and len(got) == len(expected) and all(map(_matches, expected, got))
    return expected == got


def replay_fixture(path: Path) -> dict[str, Any]:
    doc = _load_request(str(path))
    if "argv" in doc:
        code, out = execute(doc["argv"])
        got = json.loads(out)
        ok = code == 0 and _matches(doc["expected"], got)
    else:
        got = run_check(doc["criterion"], doc["inputs"]).to_dict()
        ok = _matches(doc["expected"], got)
    return {"fixture": path.name, "ok": ok, "expected": doc["expected"], "got": got}


def cmd_fixtures(args):
    root = Path(args.dir) if args.dir else DEFAULT_FIXTURES
    files = sorted(root.glob("*.json"))
    if not files:
        raise ValueError(f"no fixture files under {root}")
    results = [replay_fixture(p) for p in files]
    failed = [r["fixture"] for r in results if not r["ok"]]
    report = {"total": len(results), "failed": failed, "results": results}
    return report, (1 if failed else 0)


COMMANDS = {
    "mult": cmd_mult,
    "pieri": cmd_pieri,
    "lr-oracle": cmd_lr_oracle,
    "dual": cmd_dual,
    "conj": cmd_conj,
    "complement": cmd_complement,
    "mu-j": cmd_mu_j,
    "delta": cmd_delta,
    "nonzero": cmd_nonzero,
    "omega": cmd_omega,
    "check": cmd_check,
    "fixtures": cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schubcon", description="Schubert calculus and connectedness certificates.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("args", nargs="*", help="partitions, class files or indices, per command")
    p.add_argument("--box", help="Grassmannian G(d,P^n) as d=<int>,n=<int>")
    p.add_argument("--space", help="product of projective spaces as n1,...,nr")
    p.add_argument("--criterion", help="criterion name for check")
    p.add_argument("--inputs", help="JSON request file for check")
    p.add_argument("--out", help="write the JSON result here instead of stdout")
    p.add_argument("--j", type=int, help="single descent index for mu-j")
    p.add_argument("--dir", help="fixture directory for fixtures")
    return p


def execute(argv: Sequence[str]) -> tuple[int, str]:
    """Run one command; return (exit code, JSON text) without touching stdout."""
    code, text, _ = _execute(argv)
    return code, text


def _execute(argv: Sequence[str]) -> tuple[int, str, bool]:
    try:
        args = build_parser().parse_intermixed_args(list(argv))
        if args.space is not None and args.box is not None:
            raise UsageError("--box and --space are mutually exclusive")
        result = COMMANDS[args.command](args)
        code = 0
        if args.command == "fixtures":
            result, code = result
        text = dumps(result)
        if args.out:
            Path(args.out).write_text(text + "\n")
        return code, text, bool(args.out)
    except InconsistentData as exc:
        return 3, dumps({"error": {"kind": "inconsistent", "message": str(exc)}}), False
    except UsageError as exc:
        return 2, dumps({"error": {"kind": "usage", "message": str(exc)}}), False
    except (ValueError, TypeError, KeyError, OSError, json.JSONDecodeError) as exc:
        return 2, dumps({"error": {"kind": "validation", "message": str(exc)}}), False


def main(argv: Sequence[str] | None = None) -> int:
    code, text, written = _execute(sys.argv[1:] if argv is None else argv)
    if not written:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
