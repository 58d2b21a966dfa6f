"""Command line interface.

Every subcommand prints plain text by default or, with ``--json``, a single
QueryResult object::

    {"kind": "<kind>", "payload": <value>, "meta": {"command": ..., "args": {...}, "version": ...}}

Exit codes: 0 success, 2 malformed input, 3 resource bound exceeded,
1 internal consistency failure.

The LR memo table is persisted when ``--cache PATH`` is given or the
``TENSCAT_CACHE`` environment variable is set (the flag wins).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, TextIO

from . import __version__
from .category import (
    LabelMultiset,
    dual_label,
    ext_dim,
    jh_mixed_tensor,
    jh_projective,
    labels_up_to,
    radical_layers,
    tensor_projectives,
)
from .errors import (
    DomainError,
    InternalConsistencyError,
    ParseError,
    ResourceBoundError,
)
from .homdiag import MAX_SLOTS, enumerate_basis, hom_dim
from .lrcalc import MAX_LR_SIZE, LRCache, default_cache, lr_coeff, lr_expand_pair
from .parsing import parse_diagram, parse_label, parse_shape, parse_weight
from .weightcalc import MAX_INDEX, enumerate_weights, weight_multiplicity
from .weightcalc import MAX_SLOTS as MAX_WEIGHT_SLOTS
from .young import MAX_ORACLE_SIZE, MAX_SYT_SIZE, conjugate, schur_product_expand, syt_count

logger = logging.getLogger("tenscat")

KINDS = ("integer", "multiset", "layers", "weightmap", "diagramlist", "expansion", "label", "table")


@dataclass
class QueryResult:
    kind: str
    payload: Any
    meta: Dict[str, Any]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown result kind {self.kind!r}")

    def to_json(self) -> str:
        doc = {"kind": self.kind, "payload": self.payload, "meta": self.meta}
        return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "QueryResult":
        doc = json.loads(text)
        return cls(doc["kind"], doc["payload"], doc["meta"])

    def to_text(self) -> str:
        p = self.payload
        if self.kind in ("integer", "label"):
            return str(p)
        if self.kind == "multiset":
            return "\n".join(f"{e['label']}  {e['mult']}" for e in p)
        if self.kind == "layers":
            lines = []
            for i, layer in enumerate(p):
                lines.append(f"layer {i}")
                lines.extend(f"  {lab}  {m}" for lab, m in layer.items())
            return "\n".join(lines)
        if self.kind == "weightmap":
            return "\n".join(f"{e['weight'] or '0'}  {e['mult']}" for e in p)
        if self.kind == "expansion":
            return "\n".join(f"{e['diagram']}  {e['coeff']}" for e in p)
        if self.kind == "diagramlist":
            return "\n".join(json.dumps(d, separators=(",", ":")) for d in p)
        return "\n".join(f"{e['src']}  {e['tgt']}  {e['degree']}  {e['dim']}" for e in p)


def multiset_payload(ms: LabelMultiset) -> list:
    return [{"label": str(lab), "mult": m} for lab, m in ms.items()]


def expansion_payload(exp: dict) -> list:
    return [{"diagram": str(d), "coeff": c} for d, c in exp.items()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON QueryResult")
    common.add_argument("--cache", metavar="PATH", help="persistent LR cache file")

    lr_bound = argparse.ArgumentParser(add_help=False)
    lr_bound.add_argument("--max-size", type=int, default=MAX_LR_SIZE,
                          help="largest diagram size accepted by the LR kernel")

    parser = argparse.ArgumentParser(prog="tenscat", description="Label calculator for topological gl(V)-modules")
    parser.add_argument("--version", action="version", version=f"tenscat {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, help, *parents):
        return sub.add_parser(name, help=help, parents=[common, *parents])

    p = add("lr", "Littlewood-Richardson coefficient N^outer_{a,b}", lr_bound)
    p.add_argument("--outer", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("lr-expand", "expand s_a * s_b with the LR kernel", lr_bound)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("schur-prod", "expand s_a * s_b with the polynomial oracle")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--vars", type=int, help="number of variables (default |a|+|b|)")
    p.add_argument("--max-size", type=int, default=MAX_ORACLE_SIZE)

    p = add("radical", "radical layers of the projective P_{lambda,mu}", lr_bound)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = add("ext", "dimension of Ext^i between two simples", lr_bound)
    p.add_argument("--src", required=True)
    p.add_argument("--tgt", required=True)
    p.add_argument("--degree", "-i", type=int, required=True)

    p = add("ext-table", "all nonzero Ext dimensions between small simples", lr_bound)
    p.add_argument("--max-boxes", type=int, default=2,
                   help="largest number of boxes in each diagram of a label")

    p = add("jh-projective", "Jordan-Hoelder multiplicities of P_{lambda,mu}", lr_bound)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = add("jh-mixed", "Jordan-Hoelder multiplicities of the mixed tensor V^{p,q}")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=6)

    p = add("tensor-proj", "decompose P_a (x) P_b into projectives", lr_bound)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("dual", "dual of a simple label")
    p.add_argument("--label", required=True)

    for name, help in (("hom-dim", "dimension of Hom(V^{src}, V^{tgt})"),
                       ("hom-basis", "contraction diagram basis of Hom(V^{src}, V^{tgt})")):
        p = add(name, help)
        p.add_argument("--src", required=True, help="shape p,q")
        p.add_argument("--tgt", required=True, help="shape p,q")
        p.add_argument("--max-slots", type=int, default=MAX_SLOTS)

    for name, help in (("weight-mult", "multiplicity of one weight"),
                       ("weight-enum", "all weights with multiplicities")):
        p = add(name, help)
        for flag in ("--p", "--q", "--i", "--j"):
            p.add_argument(flag, type=int, required=True)
        if name == "weight-mult":
            p.add_argument("--weight", required=True, help='e.g. "1:1,3:-1"; "0" for zero')
        p.add_argument("--max-slots", type=int, default=MAX_WEIGHT_SLOTS)
        p.add_argument("--max-index", type=int, default=MAX_INDEX)

    p = add("syt", "number of standard Young tableaux")
    p.add_argument("--shape", required=True)
    p.add_argument("--max-size", type=int, default=MAX_SYT_SIZE)

    return parser


def _dispatch(args, cache: LRCache) -> QueryResult:
    cmd = args.command
    echo = {k: v for k, v in vars(args).items() if k not in ("command", "json", "cache")}
    meta = {"command": cmd, "args": echo, "version": __version__}

    def result(kind, payload):
        return QueryResult(kind, payload, meta)

    if cmd == "lr":
        value = lr_coeff(parse_diagram(args.outer), parse_diagram(args.a), parse_diagram(args.b),
                         max_size=args.max_size, cache=cache)
        return result("integer", value)
    if cmd == "lr-expand":
        exp = lr_expand_pair(parse_diagram(args.a), parse_diagram(args.b),
                             max_size=args.max_size, cache=cache)
        return result("expansion", expansion_payload(exp))
    if cmd == "schur-prod":
        a, b = parse_diagram(args.a), parse_diagram(args.b)
        k = args.vars if args.vars is not None else max(1, sum(a) + sum(b))
        return result("expansion", expansion_payload(
            schur_product_expand(a, b, k, max_size=args.max_size)))
    if cmd == "radical":
        layers = radical_layers(parse_diagram(args.lam), parse_diagram(args.mu),
                                max_size=args.max_size, cache=cache)
        payload = [{str(lab): m for lab, m in layer.items()} for layer in layers]
        return result("layers", payload)
    if cmd == "ext":
        value = ext_dim(parse_label(args.src), parse_label(args.tgt), args.degree,
                        max_size=args.max_size, cache=cache)
        return result("integer", value)
    if cmd == "ext-table":
        return result("table", ext_table(args.max_boxes, max_size=args.max_size, cache=cache))
    if cmd == "jh-projective":
        ms = jh_projective(parse_diagram(args.lam), parse_diagram(args.mu),
                           max_size=args.max_size, cache=cache)
        return result("multiset", multiset_payload(ms))
    if cmd == "jh-mixed":
        ms = jh_mixed_tensor(args.p, args.q, max_degree=args.max_degree, cache=cache)
        return result("multiset", multiset_payload(ms))
    if cmd == "tensor-proj":
        ms = tensor_projectives(parse_label(args.a), parse_label(args.b),
                                max_size=args.max_size, cache=cache)
        return result("multiset", multiset_payload(ms))
    if cmd == "dual":
        return result("label", str(dual_label(parse_label(args.label))))
    if cmd == "hom-dim":
        value = hom_dim(parse_shape(args.src), parse_shape(args.tgt), max_slots=args.max_slots)
        return result("integer", value)
    if cmd == "hom-basis":
        basis = enumerate_basis(parse_shape(args.src), parse_shape(args.tgt),
                                max_slots=args.max_slots)
        return result("diagramlist", [d.to_json() for d in basis])
    if cmd == "weight-mult":
        value = weight_multiplicity(args.p, args.q, args.i, args.j, parse_weight(args.weight),
                                    max_slots=args.max_slots, max_index=args.max_index)
        return result("integer", value)
    if cmd == "weight-enum":
        wmap = enumerate_weights(args.p, args.q, args.i, args.j,
                                 max_slots=args.max_slots, max_index=args.max_index)
        return result("weightmap", [{"weight": w.text(), "mult": m} for w, m in wmap.items()])
    if cmd == "syt":
        return result("integer", syt_count(parse_diagram(args.shape), max_size=args.max_size))
    raise DomainError(f"unknown command {cmd}")


def ext_table(max_boxes: int, *, max_size: int = MAX_LR_SIZE,
              cache: Optional[LRCache] = None) -> List[dict]:
    """Nonzero Ext dimensions between labels with at most ``max_boxes`` boxes per diagram.

    Each entry is recomputed from the radical layers of P_{lam, mu'} and the
    two must agree.
    """
    if max_boxes < 0:
        raise DomainError("--max-boxes must be nonnegative")
    if max_boxes > max_size:
        raise ResourceBoundError(f"max boxes {max_boxes} exceeds bound {max_size}")
    labels = labels_up_to(max_boxes)
    rows = []
    for src in labels:
        lam, mu = src
        layers = radical_layers(lam, conjugate(mu), max_size=max_size, cache=cache)
        for tgt in labels:
            nu, kappa = tgt
            i = sum(lam) - sum(nu)
            if i < 0 or sum(mu) - sum(kappa) != i:
                continue
            dim = ext_dim(src, tgt, i, max_size=max_size, cache=cache)
            check = layers[i].get((nu, conjugate(kappa)), 0) if i < len(layers) else 0
            if dim != check:
                raise InternalConsistencyError(
                    f"Ext^{i}({src},{tgt}) = {dim} but radical layer gives {check}"
                )
            if dim:
                rows.append({"src": str(src), "tgt": str(tgt), "degree": i, "dim": dim})
    return rows


def run(argv: List[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("warning: %(message)s"))
    root = logging.getLogger("tenscat")
    root.addHandler(handler)
    try:
        parser = build_parser()
        try:
            with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
                args = parser.parse_args(argv)
        except SystemExit as exc:
            return 0 if exc.code == 0 else 2

        path = args.cache or os.environ.get("TENSCAT_CACHE")
        cache = default_cache
        if path:
            cache = LRCache()
            cache.load(path)
        try:
            res = _dispatch(args, cache)
        except ParseError as exc:
            print(f"tenscat {args.command}: error: {exc.caret_message()}", file=stderr)
            return 2
        except ResourceBoundError as exc:
            print(f"tenscat {args.command}: resource bound exceeded: {exc}", file=stderr)
            return 3
        except DomainError as exc:
            print(f"tenscat {args.command}: error: {exc}", file=stderr)
            return 2
        except InternalConsistencyError as exc:
            print(f"tenscat {args.command}: internal consistency failure: {exc}", file=stderr)
            return 1
        if path:
            try:
                cache.save(path)
            except OSError as exc:
                logger.warning("could not write LR cache %s: %s", path, exc)
        print(res.to_json() if args.json else res.to_text(), file=stdout)
        return 0
    finally:
        root.removeHandler(handler)


def main(argv: Optional[List[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)
