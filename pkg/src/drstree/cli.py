"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 usage, parse or cap error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .constructions import (
    FAMILIES,
    build_dag_chain,
    build_dagw_chain,
    build_path_tree_k1,
    build_tree_d1,
    gen_family,
)
from .core import DEFAULT_LIMITS, STAR, DrsError, Limits, ProblemKind, RuleSystem, TooLargeError, ValueTuple, format_value
from .oracle import min_depth, min_distinct_terminals, min_nodes, solve_direct, validate_graph, validate_tree
from .pathsim import query_bound, simulate
from .systems import beta, beta_plus, is_complete, is_reduced, reduce_ad, reduce_sr
from .textio import export_dot, format_label, load_dot, parse, rule_ref, serialize, size_of
from .trees import DecisionTree, metrics

NA = "n/a (cap)"


class UsageError(DrsError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _system(path: str) -> RuleSystem:
    return parse(_read(path))


def _limits(args) -> Limits:
    limits = DEFAULT_LIMITS
    if args.max_attrs is not None:
        print(f"warning: attribute caps raised to {args.max_attrs}; exact search is exponential", file=sys.stderr)
        limits = replace(limits, max_depth_attrs=args.max_attrs, max_size_attrs=args.max_attrs,
                         max_cover_nodes=args.max_attrs)
    if args.max_enum is not None:
        print(f"warning: enumeration cap raised to {args.max_enum}; this may take a long time", file=sys.stderr)
        limits = replace(limits, max_enum=args.max_enum)
    return limits


def _capped(fn, *a, **kw):
    try:
        return fn(*a, **kw)
    except TooLargeError:
        return NA


def _tuple(system: RuleSystem, text: str, kind: ProblemKind) -> ValueTuple:
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    if len(parts) != system.n:
        raise UsageError(f"--tuple needs {system.n} values (one per attribute of {_attrs(system)}), got {len(parts)}")
    values = []
    for p in parts:
        if p == "*":
            if not kind.extended:
                raise UsageError(f"'*' is only allowed for E-problems, not {kind}")
            values.append(STAR)
        elif p.isdigit():
            values.append(int(p))
        else:
            raise UsageError(f"bad tuple value {p!r}")
    t = ValueTuple.from_sequence(system, values)
    for a, v in t.items:
        if v not in system.domain(a, kind.extended):
            raise UsageError(f"value {format_value(v)} of a{a} is outside its domain {_fmt_set(system.domain(a, kind.extended))}")
    return t


def _attrs(system: RuleSystem) -> str:
    return " ".join(f"a{a}" for a in system.attributes) or "(none)"


def _fmt_set(values) -> str:
    return "{" + ", ".join(format_value(v) for v in values) + "}"


def _rules_listing(system: RuleSystem, indices) -> list[str]:
    return [f"{rule_ref(i)}  {system[i]}" for i in sorted(indices)]


def cmd_stats(args) -> int:
    s = _system(args.file)
    limits = _limits(args)
    lines = [
        f"rules: {len(s)}",
        f"n: {s.n}",
        f"d: {s.d}",
        f"k: {s.k}",
        f"D: {_fmt_set(sorted(s.decisions))}",
        f"A: {_attrs(s)}",
    ]
    lines += [f"V(a{a}): {_fmt_set(s.values(a))}" for a in s.attributes]
    lines += [
        f"beta: {_capped(beta, s, limits)}",
        f"beta+: {_capped(beta_plus, s, limits)}",
        f"size: {size_of(s)}",
        f"reduced: {'yes' if is_reduced(s) else 'no'}",
    ]
    complete = _capped(is_complete, s, limits)
    lines.append(f"complete: {complete if complete == NA else ('yes' if complete else 'no')}")
    print("\n".join(lines))
    return 0


def cmd_reduce(args) -> int:
    s = _system(args.file)
    out = reduce_sr(s) if args.flavor == "sr" else reduce_ad(s)
    sys.stdout.write(serialize(out))
    return 0


def cmd_solve(args) -> int:
    s = _system(args.file)
    kind = ProblemKind.parse(args.problem)
    t = _tuple(s, args.tuple, kind)
    sol = solve_direct(s, t, kind)
    print(f"problem: {kind}")
    print(f"tuple: {t}")
    print(f"solution: {format_label(sol.canonical)}")
    print("\n".join(_rules_listing(s, sol.canonical)) if sol.canonical else "(no rule)")
    return 0


def _dot_with_comments(dot: str, comments: list[str]) -> str:
    return "".join(f"// {c}\n" for c in comments) + dot


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build_tree(args) -> int:
    s = _system(args.file)
    kind = ProblemKind.parse(args.problem)
    limits = _limits(args)
    if args.poly:
        if s.k == 1 and kind in (ProblemKind.SR, ProblemKind.AD, ProblemKind.AR) and s.n > 0:
            tree, how = build_path_tree_k1(s, kind), "single path (k(S)=1)"
        elif s.d <= 1 and kind in (ProblemKind.SR, ProblemKind.ESR):
            tree, how = build_tree_d1(s, kind), "one-condition rules (d(S)<=1)"
        else:
            raise UsageError(
                f"no polynomial tree construction for {kind} with k(S)={s.k}, d(S)={s.d}; "
                "it exists for SR/AD/AR when k(S)=1 and for SR/ESR when d(S)<=1"
            )
    else:
        search = {"h": min_depth, "l": min_nodes, "t": min_distinct_terminals}[args.optimal]
        _, tree = search(s, kind, limits)
        how = {"h": "minimum depth", "l": "minimum node count", "t": "fewest distinct labels"}[args.optimal]
    m = metrics(tree)
    comments = [f"problem {kind}, {how}", f"h={m.h} L={m.L} T={m.T}"]
    _emit(_dot_with_comments(export_dot(tree), comments), args.output)
    if args.output:
        print(f"h={m.h} L={m.L} T={m.T}")
    return 0


def cmd_build_dag(args) -> int:
    s = _system(args.file)
    kind = ProblemKind.parse(args.problem)
    if args.writing:
        graph = build_dagw_chain(s, kind)
    else:
        if kind.base is not ProblemKind.SR:
            raise UsageError(f"chained gadgets without writing solve SR/ESR only; use --writing for {kind}")
        graph = build_dag_chain(s, kind)
    comments = [f"problem {kind}, {'writing ' if args.writing else ''}gadget chain", f"nodes={len(graph.nodes)}"]
    _emit(_dot_with_comments(export_dot(graph), comments), args.output)
    if args.output:
        print(f"nodes={len(graph.nodes)}")
    return 0


def cmd_simulate(args) -> int:
    s = _system(args.file)
    kind = ProblemKind.parse(args.problem)
    limits = _limits(args)
    t = _tuple(s, args.tuple, kind)
    trace = simulate(s, t, kind)
    print(f"problem: {kind}")
    print(f"tuple: {t}")
    for i, rnd in enumerate(trace.rounds, 1):
        cover = "{" + ", ".join(f"a{a}" for a in rnd.cover) + "}"
        read = ", ".join(str(e) for e in rnd.equations)
        print(f"round {i}: cover {cover}; read {read}")
    print(f"result: {format_label(trace.result)}")
    for line in _rules_listing(s, trace.result):
        print(f"  {line}")
    print(f"queried: {trace.queried}")
    print(f"bound: {_capped(query_bound, s, kind, limits)}")
    return 0


def cmd_gen_family(args) -> int:
    sys.stdout.write(serialize(gen_family(args.which, n=args.n, k=args.k, d=args.d)))
    return 0


def cmd_verify(args) -> int:
    s = _system(args.file)
    kind = ProblemKind.parse(args.problem)
    limits = _limits(args)
    graph = load_dot(_read(args.artifact), s)
    if isinstance(graph, DecisionTree):
        ok = validate_tree(graph, s, kind)
    else:
        ok = validate_graph(graph, s, kind, limits)
    print(f"{'valid' if ok else 'invalid'}: {type(graph).__name__} for {kind}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-attrs", type=int, help="raise the attribute caps of exact search and covers")
    common.add_argument("--max-enum", type=int, help="raise the cap on enumerated tuples / equation systems")

    p = argparse.ArgumentParser(prog="drstree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    problems = [k.value.lower() for k in ProblemKind]

    def add(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("stats", cmd_stats, "system statistics")
    sp.add_argument("file")

    sp = add("reduce", cmd_reduce, "remove dominated rules")
    sp.add_argument("file")
    sp.add_argument("--flavor", choices=["sr", "ad"], required=True)

    sp = add("solve", cmd_solve, "solve one tuple directly")
    sp.add_argument("file")
    sp.add_argument("--problem", choices=problems, required=True, type=str.lower)
    sp.add_argument("--tuple", required=True)

    sp = add("build-tree", cmd_build_tree, "build a decision tree as DOT")
    sp.add_argument("file")
    sp.add_argument("--problem", choices=problems, required=True, type=str.lower)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--optimal", choices=["h", "l", "t"], default="h", type=str.lower)
    mode.add_argument("--poly", action="store_true")
    sp.add_argument("-o", "--output")

    sp = add("build-dag", cmd_build_dag, "build a gadget-chain graph as DOT")
    sp.add_argument("file")
    sp.add_argument("--problem", choices=problems, required=True, type=str.lower)
    sp.add_argument("--writing", action="store_true")
    sp.add_argument("-o", "--output")

    sp = add("simulate", cmd_simulate, "trace the computation path for one tuple")
    sp.add_argument("file")
    sp.add_argument("--problem", choices=problems, required=True, type=str.lower)
    sp.add_argument("--tuple", required=True)

    sp = add("gen-family", cmd_gen_family, "print a lower-bound witness system")
    sp.add_argument("which", choices=FAMILIES, type=str.lower)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--d", type=int, default=2)

    sp = add("verify", cmd_verify, "check a DOT tree or graph against a system")
    sp.add_argument("file")
    sp.add_argument("--problem", choices=problems, required=True, type=str.lower)
    sp.add_argument("--artifact", required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DrsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
