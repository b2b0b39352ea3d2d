"""
Command-line interface.

    localmodels adm --datum a1.json --mu 1 --size
    localmodels components --datum c2.json --mu 1,1 --K 0,2 --json
    localmodels classify --datum f4.json --json
    localmodels fibers --datum a1.json --mu 1 --K1 "" --K2 1
    localmodels qbg --datum a2.json --dot a2.dot
    localmodels zgamma --datum c2.json --gamma 1,2
    localmodels wt --datum a2.json --x 121 --y e
    localmodels verify

A datum file is JSON such as {"cartan": {"family": "C", "rank": 2},
"lattice": "adjoint"}; "lattice" may also be "coweight", "gl" (type A only)
or {"basis": [[...], ...]} listing a basis of X in the ambient coordinates
of the root system.  --mu is given in X coordinates, --gamma in simple
coroot coordinates, and K subsets use 0 for the affine node.  Negative
entries need the '=' form, e.g. --mu=-1,0.

Exit status: 0 on success, 1 for mathematically invalid input, 2 for usage
errors, 3 when `verify` finds a failing check.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from typing import Sequence

from . import verify as verify_mod
from .admissible import admissible_set
from .errors import DomainError, InvalidSpec
from .fibers import fibers
from .finite_weyl import WeylGroup, word_str
from .irreducibility import classify, component_reps, is_irreducible
from .qbg import QBGraph, greedy_decomposition, wt, z_gamma
from .root_datum import CartanSpec, RootDatum, build_root_datum

__all__ = ["main", "run", "load_datum", "qbg_dot", "export_qbg_dot", "datum_hash"]

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(self.prog, message)


# ---------------------------------------------------------------------------
# parsing


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "none", "-"):
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e"):
        return ()
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected a word of digits or 'e', got {text!r}")
    return tuple(int(c) for c in text)


def spec_from_json(doc) -> CartanSpec:
    try:
        cartan = doc["cartan"]
        family = str(cartan["family"]).upper()
        rank = int(cartan["rank"])
        lattice = doc.get("lattice", cartan.get("lattice", "adjoint"))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSpec(f"malformed datum document: {exc!r}")
    if isinstance(lattice, dict):
        try:
            lattice = tuple(tuple(int(x) for x in row) for row in lattice["basis"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidSpec(f"malformed custom lattice: {exc!r}")
    return CartanSpec(family, rank, lattice)


def load_datum(path: str) -> RootDatum:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError("--datum", f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise UsageError("--datum", f"{path} is not valid JSON: {exc.msg}")
    return build_root_datum(spec_from_json(doc))


def _spec_doc(spec: CartanSpec) -> dict:
    lattice = spec.lattice if isinstance(spec.lattice, str) else {"basis": [list(r) for r in spec.lattice]}
    return {"cartan": {"family": spec.family, "rank": spec.rank}, "lattice": lattice}


def datum_hash(rd: RootDatum) -> str:
    blob = json.dumps(_spec_doc(rd.spec), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


# ---------------------------------------------------------------------------
# cache of the enumerated finite Weyl group


def _use_cache(rd: RootDatum, directory: str | None) -> None:
    """Load W0 from the cache when valid, otherwise enumerate it and store it."""
    if not directory:
        return
    W = WeylGroup.of(rd)
    key = datum_hash(rd)
    path = os.path.join(directory, f"{key}.json")
    if W._elements is None and os.path.exists(path):
        try:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
            if doc.get("hash") == key and doc.get("datum") == _spec_doc(rd.spec):
                elems = [W.from_word(_word(w)) for w, _ in doc["elements"]]
                if all(e.length == n for e, (_, n) in zip(elems, doc["elements"])) and \
                        len(set(elems)) == len(elems) and doc["length_bound"] == W.longest().length:
                    W._elements = sorted(elems, key=lambda w: (w.length, w.word))
                    return
        except (OSError, ValueError, KeyError, TypeError):
            pass
    elems = W.elements()
    os.makedirs(directory, exist_ok=True)
    doc = {
        "hash": key,
        "datum": _spec_doc(rd.spec),
        "length_bound": W.longest().length,
        "elements": [[word_str(w.word), w.length] for w in elems],
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
    os.replace(tmp, path)


# ---------------------------------------------------------------------------
# DOT export


def qbg_dot(graph: QBGraph) -> str:
    names = {x: word_str(x.word) for x in graph.vertices}
    lines = [f"digraph QBG_{graph.datum.spec.name} {{"]
    for x in graph.vertices:
        lines.append(f'  "{names[x]}";')
    for x in graph.vertices:
        for e in graph.adjacency[x]:
            if e.kind == "quantum":
                label = ",".join(str(c) for c in e.weight)
                lines.append(f'  "{names[x]}" -> "{names[e.target]}" [style=dashed, label="{label}"];')
            else:
                lines.append(f'  "{names[x]}" -> "{names[e.target]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_qbg_dot(graph: QBGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(qbg_dot(graph))


# ---------------------------------------------------------------------------
# subcommands


def _emit(out, args, payload, human: str) -> None:
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(human if human.endswith("\n") else human + "\n")


def _cmd_adm(rd, args, out):
    adm = admissible_set(rd, args.mu)
    elems = adm.sorted()
    payload = {"mu": list(adm.mu), "size": len(elems)}
    if args.size:
        return _emit(out, args, payload, str(len(elems)))
    payload["elements"] = [{"word": w.word_string(), "length": w.length} for w in elems]
    human = "\n".join(f"{w.length}\t{w.word_string()}" for w in elems)
    _emit(out, args, payload, f"|Adm({','.join(map(str, adm.mu))})| = {len(elems)}\n{human}")


def _cmd_components(rd, args, out):
    report = component_reps(rd, args.mu, args.K)
    irreducible = report.irreducible if report.central else is_irreducible(rd, args.mu, args.K).irreducible
    comps = [
        {"rep": word_str(c.rep.word), "translation": list(c.translation.translation), "dimension": c.dimension}
        for c in report.components
    ]
    payload = {"mu": list(report.mu), "K": list(report.K), "count": report.count,
               "irreducible": irreducible, "components": comps}
    rows = [f"  {c['rep']}\tt^({','.join(map(str, c['translation']))})\tdim {c['dimension']}" for c in comps]
    head = f"{report.count} component(s), {'irreducible' if irreducible else 'reducible'}"
    _emit(out, args, payload, "\n".join([head] + rows))


def _cmd_classify(rd, args, out):
    rows = classify(rd)
    payload = [{"K": list(K), "supp": list(s)} for K, s in rows]
    human = "\n".join(f"K={{{','.join(map(str, K))}}}\tsupp={{{','.join(map(str, s))}}}" for K, s in rows)
    _emit(out, args, payload, human or "no non-special K with proper support")


def _cmd_fibers(rd, args, out):
    fs = fibers(rd, args.mu, args.K1, args.K2)
    payload = [
        {"stratum": f.stratum.word_string(), "x_max": f.x_max.word_string(),
         "min_rep": f.min_rep.word_string(), "dimension": f.dimension}
        for f in fs
    ]
    human = "\n".join(f"{p['stratum']}\tx_max={p['x_max']}\tmin_rep={p['min_rep']}\tdim {p['dimension']}"
                      for p in payload)
    _emit(out, args, payload, human)


def _cmd_qbg(rd, args, out):
    g = QBGraph.of(rd)
    b, q = g.count_edges()
    if args.dot:
        export_qbg_dot(g, args.dot)
    payload = {"vertices": len(g.vertices), "bruhat_edges": b, "quantum_edges": q}
    _emit(out, args, payload, f"{len(g.vertices)} vertices, {b} Bruhat edges, {q} quantum edges")


def _cmd_zgamma(rd, args, out):
    z = z_gamma(rd, args.gamma)
    decomp = [list(rd.roots[b].coords) for b in greedy_decomposition(rd, args.gamma)]
    payload = {"gamma": list(args.gamma), "word": word_str(z.word), "decomposition": decomp}
    _emit(out, args, payload, word_str(z.word))


def _cmd_wt(rd, args, out):
    W = WeylGroup.of(rd)
    for flag, word in (("--x", args.x), ("--y", args.y)):
        if any(i < 1 or i > rd.rank for i in word):
            raise UsageError(flag, f"letters must lie in 1..{rd.rank}")
    x, y = W.from_word(args.x), W.from_word(args.y)
    w = wt(x, y)
    payload = {"x": word_str(x.word), "y": word_str(y.word), "wt": list(w)}
    _emit(out, args, payload, ",".join(map(str, w)))


def _cmd_verify(args, out) -> int:
    numbers = args.check or None
    if numbers and any(n < 1 or n > len(verify_mod.CHECKS) for n in numbers):
        raise UsageError("--check", f"check numbers run from 1 to {len(verify_mod.CHECKS)}")
    results = verify_mod.run_all(numbers)
    if args.json:
        payload = {"checks": [{"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
                              for r in results]}
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="localmodels", description="Admissible sets, fibers and quantum Bruhat graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, *, datum=True):
        sp = sub.add_parser(name, help=help_text)
        if datum:
            sp.add_argument("--datum", required=True, help="root datum JSON file")
            sp.add_argument("--cache", help="directory for the cached Weyl group table")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = add("adm", "the admissible set Adm(mu)")
    sp.add_argument("--mu", type=_int_list, required=True)
    sp.add_argument("--size", action="store_true", help="print only the number of elements")
    sp = add("components", "irreducible components at level K")
    sp.add_argument("--mu", type=_int_list, required=True)
    sp.add_argument("--K", type=_int_list, default=())
    add("classify", "non-special K whose coset representatives have proper support")
    sp = add("fibers", "fibers of the map from level K1 to level K2")
    sp.add_argument("--mu", type=_int_list, required=True)
    sp.add_argument("--K1", type=_int_list, default=())
    sp.add_argument("--K2", type=_int_list, required=True)
    sp = add("qbg", "quantum Bruhat graph statistics")
    sp.add_argument("--dot", help="write the graph in DOT format to this path")
    sp = add("zgamma", "z_gamma = max{x : wt(x, e) <= gamma}")
    sp.add_argument("--gamma", type=_int_list, required=True, help="simple-coroot coordinates")
    sp = add("wt", "weight of shortest quantum Bruhat paths x -> y")
    sp.add_argument("--x", type=_word, required=True)
    sp.add_argument("--y", type=_word, required=True)
    sp = add("verify", "run the acceptance checks", datum=False)
    sp.add_argument("--check", type=int, action="append", help="run only this check (repeatable)")
    return p


COMMANDS = {
    "adm": _cmd_adm, "components": _cmd_components, "classify": _cmd_classify,
    "fibers": _cmd_fibers, "qbg": _cmd_qbg, "zgamma": _cmd_zgamma, "wt": _cmd_wt,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            return _cmd_verify(args, out)
        rd = load_datum(args.datum)
        _use_cache(rd, args.cache)
        COMMANDS[args.command](rd, args, out)
        return EXIT_OK
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)
