"""Command-line front end.  Lattices travel as JSON on stdin or in files;
results are printed as one JSON report per line."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from lfact import families as F
from lfact.charpoly import char_poly, rank_from_values
from lfact.errors import LatticeError
from lfact.lattice import FiniteLattice
from lfact.modularity import (
    is_graded,
    is_modular_element,
    is_semimodular,
    left_modular_chains,
    left_modular_elements,
    modular_elements,
)
from lfact.moebius import mobius_table
from lfact.nbb import level_rank, levels, ll_chains, mobius_via_nbb, nbb_bases
from lfact.rank import ordinary_rank
from lfact import verify as V


class UsageError(Exception):
    pass


def report(command: str, inputs: dict, status: str, witnesses=None, payload=None) -> dict:
    return {"command": command, "inputs": inputs, "status": status,
            "witnesses": witnesses or [], "payload": payload or {}}


def _emit(rep: dict, human: bool) -> None:
    if human:
        print(json.dumps(rep, ensure_ascii=False, indent=2))
    else:
        print(json.dumps(rep, ensure_ascii=False, separators=(",", ":")))


def _read_lattice(source: str) -> FiniteLattice:
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    if not text.strip():
        raise UsageError("no lattice on input")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not lattice JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("lattice JSON must be an object")
    return FiniteLattice.from_dict(data)


def _element(L: FiniteLattice, text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        return L.index(text)
    if not 0 <= k < L.n:
        raise UsageError(f"element index {k} out of range")
    return k


def _modular_chain(L: FiniteLattice) -> list[int] | None:
    for ch in left_modular_chains(L):
        if all(is_modular_element(L, c) for c in ch):
            return ch
    return None


def _chain(L: FiniteLattice, text: str | None, kind: str, cap: int | None) -> tuple[list[int], dict]:
    """Resolve ``--chain``; ``auto`` searches a chain suited to the check."""
    extra: dict = {}
    if text is None:
        return L.first_maximal_chain(), extra
    if text != "auto":
        chain = [_element(L, s) for s in text.split(",")]
        if not L.is_maximal_chain(chain):
            raise UsageError(f"{text} is not a maximal chain")
        return chain, extra
    if kind == "ll":
        found = ll_chains(L, cap=cap or 16)
        extra["chains_found"] = [[L.labels[c] for c in ch] for ch in found]
        if found:
            return found[0], extra
    elif kind == "modular":
        ch = _modular_chain(L)
        if ch is not None:
            return ch, extra
    ch = next(iter(left_modular_chains(L, cap=1)), None)
    return (ch if ch is not None else L.first_maximal_chain()), extra


def _rank(L: FiniteLattice, text: str, chain: list[int]):
    if text == "ordinary":
        return ordinary_rank(L)
    if text == "levels":
        return level_rank(L, levels(L, chain))
    try:
        values = json.loads(Path(text).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read rank file {text}: {exc}") from None
    return rank_from_values(L, values)


# subcommands

def cmd_gen(args) -> int:
    try:
        L = F.generate(args.family, *args.params)
    except TypeError as exc:
        raise UsageError(str(exc)) from None
    print(L.to_json())
    return 0


def cmd_info(args) -> int:
    L = _read_lattice(args.input)
    graded = is_graded(L)
    payload = {"size": L.n, "covers": len(L.covers), "bottom": L.labels[L.bottom],
               "top": L.labels[L.top], "atoms": [L.labels[a] for a in L.atoms()],
               "graded": graded, "atomic": L.is_atomic(),
               "semimodular": graded and is_semimodular(L)}
    _emit(report("info", {"size": L.n}, V.PASS, payload=payload), args.human)
    return 0


def cmd_mobius(args) -> int:
    L = _read_lattice(args.input)
    _emit(report("mobius", {"size": L.n}, V.PASS,
                 payload={"mu": mobius_table(L).bottom_vector(), "labels": list(L.labels)}), args.human)
    return 0


def cmd_charpoly(args) -> int:
    L = _read_lattice(args.input)
    chain, _ = _chain(L, args.chain, "lm", None)
    rho = _rank(L, args.rank, chain)
    chi = char_poly(L, rho)
    _emit(report("charpoly", {"size": L.n, "rank": args.rank}, V.PASS,
                 payload={"chi": chi.to_json(), "text": str(chi)}), args.human)
    return 0


def cmd_leftmod(args) -> int:
    L = _read_lattice(args.input)
    _emit(report("leftmod", {"size": L.n}, V.PASS,
                 payload={"elements": [L.labels[x] for x in left_modular_elements(L)]}), args.human)
    return 0


def cmd_modular(args) -> int:
    L = _read_lattice(args.input)
    _emit(report("modular", {"size": L.n}, V.PASS,
                 payload={"elements": [L.labels[x] for x in modular_elements(L)]}), args.human)
    return 0


def cmd_nbb(args) -> int:
    L = _read_lattice(args.input)
    x = _element(L, args.element)
    chain, _ = _chain(L, args.chain, "lm", None)
    order = levels(L, chain).atom_order
    bases = nbb_bases(L, x, order)
    mu = mobius_table(L).row(L.bottom)[x]
    via = mobius_via_nbb(L, x, order)
    status = V.PASS if via == mu else V.FAIL
    payload = {"element": L.labels[x], "bases": [sorted(L.labels[a] for a in B.atoms) for B in bases],
               "signed_count": via, "mu": mu}
    witnesses = [] if status == V.PASS else [L.labels[x]]
    _emit(report("nbb", {"element": args.element, "chain": [L.labels[c] for c in chain]},
                 status, witnesses, payload), args.human)
    return 0 if status == V.PASS else 1


CHECKS = {
    "thm3": (lambda L, ch: V.check_thm3(L), "lm"),
    "lmgr": (lambda L, ch: V.check_lmgr(L, ch), "lm"),
    "lmfac": (lambda L, ch: V.check_lmfac(L, ch), "lm"),
    "stanley1": (lambda L, ch: V.check_stanley1(L), "modular"),
    "stanley2": (lambda L, ch: V.check_stanley2(L, ch), "modular"),
    "nbbmu": (lambda L, ch: V.check_nbbmu(L, ch), "lm"),
    "ll": (lambda L, ch: V.check_ll(L, ch), "ll"),
    "lemmas": (lambda L, ch: V.check_lemmas(L, ch), "lm"),
}


def cmd_check(args) -> int:
    L = _read_lattice(args.input)
    fn, kind = CHECKS[args.name]
    chain, extra = _chain(L, args.chain, kind, args.cap)
    r = fn(L, chain)
    payload = dict(r.payload, detail=r.detail, **extra)
    inputs = {"size": L.n, "chain": [L.labels[c] for c in chain]}
    _emit(report(f"check {args.name}", inputs, r.status, r.witnesses, payload), args.human)
    return 0 if r.passed else 1


def cmd_save(args) -> int:
    L = _read_lattice("-")
    text = L.to_json()
    if args.path:
        Path(args.path).write_text(text + "\n", encoding="utf-8")
    print(text)
    return 0


def cmd_load(args) -> int:
    print(_read_lattice(args.path).to_json())
    return 0


def cmd_corpus(args) -> int:
    wanted = sorted(V.CRITERIA) if not args.criteria else [int(k) for k in args.criteria.split(",")]
    ok = True
    for k in wanted:
        if k not in V.CRITERIA:
            raise UsageError(f"no criterion {k}")
        fn = V.CRITERIA[k]
        r = fn(seed=args.seed, max_size=args.cap) if k in V.CORPUS_CRITERIA else fn()
        ok &= r.passed
        _emit(report("corpus", {"criterion": k, "seed": args.seed, "cap": args.cap}, r.status,
                     r.witnesses, {"name": r.name, "detail": r.detail}), args.human)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lfact", description="finite lattice toolkit")
    p.add_argument("--human", action="store_true", help="pretty-print reports")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a lattice family")
    g.add_argument("family", choices=sorted(F.GENERATORS))
    g.add_argument("params", nargs="*", type=int)
    g.set_defaults(func=cmd_gen)

    for name, func in (("info", cmd_info), ("mobius", cmd_mobius), ("leftmod", cmd_leftmod),
                       ("modular", cmd_modular)):
        s = sub.add_parser(name)
        s.add_argument("input", nargs="?", default="-")
        s.set_defaults(func=func)

    s = sub.add_parser("charpoly")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--rank", default="ordinary", help="ordinary, levels or a JSON file of values")
    s.add_argument("--chain")
    s.set_defaults(func=cmd_charpoly)

    s = sub.add_parser("nbb")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--element", required=True)
    s.add_argument("--chain")
    s.set_defaults(func=cmd_nbb)

    s = sub.add_parser("check")
    s.add_argument("name", choices=sorted(CHECKS))
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--chain", help="comma-separated indices or 'auto'")
    s.add_argument("--cap", type=int, help="maximum LL chains reported with --chain auto")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("save")
    s.add_argument("path", nargs="?")
    s.set_defaults(func=cmd_save)

    s = sub.add_parser("load")
    s.add_argument("path", nargs="?", default="-")
    s.set_defaults(func=cmd_load)

    s = sub.add_parser("corpus", help="run the acceptance criteria")
    s.add_argument("--cap", type=int, help="skip corpus lattices with more elements")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--criteria", help="comma-separated criterion numbers")
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LatticeError) as exc:
        print(f"lfact: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
