"""Command-line front end: ``deligne-o <command> ...``.

Exit codes: 0 success, 2 usage error (bad flags or partition syntax),
1 domain error (an undefined object, or a failed verification).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .diagram import cap_diagram, k_invariants, weight_diagram
from .ideal import ZERO_K, ThickIdeal, k_minimal_partitions
from .osp import SuperRank, summands_report
from .partition import Partition, parse_partition
from .ring import GENERIC, RingElement, bilinear_form, lift, normalize_delta, tensor_at

__all__ = ["main", "build_parser"]


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parameter(text: str) -> Fraction:
    """Rational delta; non-integral values are later read as generic."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"delta must be an integer or rational, got {text!r}") from None


def _k_index(text: str):
    if text.lower() in ("inf", "infinity", "zero"):
        return ZERO_K
    try:
        k = int(text)
    except ValueError:
        k = -1
    if k < 0:
        raise argparse.ArgumentTypeError(f"k must be a nonnegative integer or 'inf', got {text!r}")
    return k


def _delta_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        v = -1
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def _emit(args, payload, text: str):
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def _element_text(x: RingElement) -> str:
    if not x:
        return "0"
    return " + ".join(str(p) if c == 1 else f"{c}*{p}" for p, c in x.items())


def _context(args):
    return GENERIC if args.generic else normalize_delta(args.delta)


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def cmd_diagram(args) -> int:
    cd = cap_diagram(weight_diagram(args.partition, args.delta))
    inv = k_invariants(args.partition, args.delta)
    payload = {"partition": list(args.partition), **cd.to_json(), **inv._asdict()}
    text = f"{cd.to_ascii()}\ndefect={inv.defect} rank={inv.rank} k={inv.k}"
    _emit(args, payload, text)
    return 0


def cmd_k(args) -> int:
    inv = k_invariants(args.partition, args.delta)
    _emit(args, inv._asdict(), f"defect={inv.defect} rank={inv.rank} k={inv.k}")
    return 0


def cmd_lift(args) -> int:
    x = lift(args.partition, normalize_delta(args.delta))
    _emit(args, x.to_json(), _element_text(x))
    return 0


def cmd_tensor(args) -> int:
    x = tensor_at(args.p, args.q, _context(args))
    _emit(args, x.to_json(), _element_text(x))
    return 0


def cmd_form(args) -> int:
    v = bilinear_form(args.p, args.q, _context(args))
    _emit(args, v, str(v))
    return 0


def cmd_ideal(args) -> int:
    ideal = ThickIdeal(args.delta, args.k)
    payload = ideal.to_json(args.contains)
    name = "0" if ideal.is_zero else f"I_{args.k}"
    verdict = "in" if payload["contains"] else "not in"
    _emit(args, payload, f"{args.contains} (k={payload['k_of_lambda']}) {verdict} {name} at delta={args.delta}")
    return 0


def cmd_kminimal(args) -> int:
    parts = k_minimal_partitions(args.delta, args.k, args.max_size)
    _emit(args, [list(p) for p in parts], "\n".join(str(p) for p in parts))
    return 0


def cmd_osp(args) -> int:
    G = SuperRank(args.m, args.n)
    rep = summands_report(G, args.r)
    lines = [f"{G}, delta={G.delta}, r={args.r}, cutoff={G.cutoff}"]
    for row in rep["summands"]:
        tag = "projective" if row["projective"] else ""
        lines.append(f"  {Partition(row['partition'])}  k={row['k']}  {tag}".rstrip())
    _emit(args, rep, "\n".join(lines))
    return 0


def cmd_oracle_verify(args) -> int:
    from .brauer import verify

    results = verify(args.max_size, args.deltas)
    lines = [f"{'PASS' if r.ok else 'FAIL'}  delta={r.delta!s:>3}  cases={r.cases:<4} {r.name}" for r in results]
    _emit(args, [r.to_json() for r in results], "\n".join(lines))
    return 0 if all(r.ok for r in results) else 1


def cmd_oracle_idempotent(args) -> int:
    from .brauer import e_lambda_i

    e = e_lambda_i(args.partition, args.i, args.delta)
    payload = {
        "partition": list(args.partition),
        "i": args.i,
        "delta": args.delta,
        "r": e.r,
        "terms": e.to_json(),
    }
    text = "\n".join(f"{t['coefficient']:>8}  {t['pairing']}" for t in payload["terms"])
    _emit(args, payload, text)
    return 0


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="json")

    p = argparse.ArgumentParser(prog="deligne-o", description="Exact computations in Deligne's category uRep(O_delta).")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("diagram", parents=[fmt], help="weight and cap diagram of a partition")
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("partition", type=_partition)
    s.set_defaults(func=cmd_diagram)

    s = sub.add_parser("k", parents=[fmt], help="defect, rank and k")
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("partition", type=_partition)
    s.set_defaults(func=cmd_k)

    s = sub.add_parser("lift", parents=[fmt], help="lift a partition from K_delta to K_t")
    s.add_argument("--delta", type=_parameter, required=True)
    s.add_argument("partition", type=_partition)
    s.set_defaults(func=cmd_lift)

    for name, func, what in (("tensor", cmd_tensor, "decompose R(P) (x) R(Q)"), ("form", cmd_form, "dim Hom(R(P), R(Q))")):
        s = sub.add_parser(name, parents=[fmt], help=what)
        g = s.add_mutually_exclusive_group(required=True)
        g.add_argument("--delta", type=_parameter)
        g.add_argument("--generic", action="store_true")
        s.add_argument("p", type=_partition)
        s.add_argument("q", type=_partition)
        s.set_defaults(func=func)

    s = sub.add_parser("ideal", parents=[fmt], help="membership in the thick ideal I_k")
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("--k", type=_k_index, required=True)
    s.add_argument("--contains", type=_partition, required=True)
    s.set_defaults(func=cmd_ideal)

    s = sub.add_parser("kminimal", parents=[fmt], help="k-minimal partitions up to a size")
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("--k", type=_nonneg, required=True)
    s.add_argument("--max-size", type=_nonneg, required=True)
    s.set_defaults(func=cmd_kminimal)

    s = sub.add_parser("osp", parents=[fmt], help="summands of V^(x)r for OSp(m|2n)")
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--r", type=_nonneg, required=True)
    s.set_defaults(func=cmd_osp)

    s = sub.add_parser("oracle", help="Brauer-algebra cross-checks")
    osub = s.add_subparsers(dest="oracle_command", required=True)
    v = osub.add_parser("verify", parents=[fmt], help="check the form, dimension and count identities")
    v.add_argument("--max-size", type=_nonneg, default=3)
    v.add_argument("--deltas", type=_delta_list, default=[-2, -1, 0, 1, 2, 3])
    v.set_defaults(func=cmd_oracle_verify)
    e = osub.add_parser("idempotent", parents=[fmt], help="print e_lambda^(i) as a Brauer element")
    e.add_argument("--delta", type=int, required=True)
    e.add_argument("--i", type=_nonneg, default=0)
    e.add_argument("partition", type=_partition)
    e.set_defaults(func=cmd_oracle_idempotent)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"deligne-o: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
