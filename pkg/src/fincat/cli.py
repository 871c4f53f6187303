"""Command line front end.

Exit codes: 0 everything passed, 1 a law or universal property failed,
2 the input could not be read, parsed or elaborated.
"""
from __future__ import annotations

import argparse
import json
import sys

from .adjoint import find_adjunctions
from .category import LawReport, StructuralError, Violation, check_category_laws, op, structurally_equal
from .catlang import DslError, LawFailure, SaturationConfig, SaturationExceeded, load, print_entity
from .catlang.printer import category_to_presentation
from .limits import (
    RequiredStructureAbsent,
    brute_force_limit,
    compare_limits,
    find_initial,
    find_product,
    find_terminal,
    initial_to_terminal_op,
    limit_from_products_equalizers,
    terminal_to_initial_op,
)
from .monoidal import check_monoidal, monoidal_from_products
from .setoidcat import all_setoids, constant_presheaf, representable, yoneda_check
from .transfor import check_functor, check_natural, op_functor

EXIT_OK, EXIT_LAW, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class Out:
    def __init__(self, as_json: bool, stream):
        self.as_json, self.stream, self.records = as_json, stream, []

    def line(self, text: str):
        if not self.as_json:
            print(text, file=self.stream)

    def report(self, name: str, report: LawReport):
        self.records.append({"name": name, **report.to_dict()})
        if not self.as_json:
            status = "passed" if report.passed else "FAILED"
            print(f"{name}: {status}", file=self.stream)
            if not report.passed:
                print(report.format(), file=self.stream)
        return report.passed

    def finish(self, ok: bool, extra=None):
        if self.as_json:
            json.dump({"passed": ok, "checks": self.records, **(extra or {})}, self.stream, indent=2, default=str)
            print(file=self.stream)
        return EXIT_OK if ok else EXIT_LAW


def _category(env, name):
    if name is None:
        if not env.categories:
            raise InputError("no category declared")
        name = next(n for n in env.order if n in env.categories)
    if name not in env.categories:
        raise InputError(f"no category named {name!r}")
    return name, env.categories[name]


def cmd_check(env, args, out):
    ok = True
    for name, c in env.categories.items():
        ok &= out.report(f"category {name}", check_category_laws(c))
    for name, F in env.functors.items():
        ok &= out.report(f"functor {name}", check_functor(F))
    for name, t in env.nats.items():
        try:
            r = check_natural(t)
        except StructuralError as e:
            r = LawReport((Violation("typing", (), str(e)),))
        ok &= out.report(f"nat {name}", r)
    return out.finish(ok)


def cmd_op_test(env, args, out):
    ok = True
    for name, c in env.categories.items():
        v = []
        if not structurally_equal(op(op(c)), c):
            v.append(Violation("op-involution", (), "op(op(C)) differs from C"))
        t = find_terminal(c)
        if t is not None and initial_to_terminal_op(terminal_to_initial_op(t)) != t:
            v.append(Violation("terminal-round-trip", (t.obj,), "terminal round trip changed the value"))
        i = find_initial(c)
        if i is not None and terminal_to_initial_op(initial_to_terminal_op(i)) != i:
            v.append(Violation("initial-round-trip", (i.obj,), "initial round trip changed the value"))
        ok &= out.report(f"op {name}", LawReport(tuple(v)))
    for name, F in env.functors.items():
        r = LawReport(()) if op_functor(op_functor(F)) == F else LawReport(
            (Violation("op-functor", (), "op(op(F)) differs from F"),))
        ok &= out.report(f"op functor {name}", r)
    return out.finish(ok)


def cmd_limits(env, args, out):
    for name, c in env.categories.items():
        t, i = find_terminal(c), find_initial(c)
        out.line(f"category {name}")
        out.line(f"  terminal: {c.objects[t.obj] if t else '-'}")
        out.line(f"  initial: {c.objects[i.obj] if i else '-'}")
        for a in range(c.n_objects):
            for b in range(a, c.n_objects):
                p = find_product(c, a, b)
                out.line(f"  {c.objects[a]} x {c.objects[b]}: {c.objects[p.obj] if p else '-'}")
        out.records.append({"category": name, "terminal": t.obj if t else None,
                            "initial": i.obj if i else None})
    return out.finish(True)


def cmd_limit(env, args, out):
    if args.diagram is None:
        if not env.diagrams:
            raise InputError("no diagram declared; use --diagram")
        args.diagram = next(iter(env.diagrams))
    if args.diagram not in env.diagrams:
        raise InputError(f"no diagram named {args.diagram!r}")
    D = env.diagrams[args.diagram]
    if not out.report(f"diagram {args.diagram}", check_functor(D)):
        return out.finish(False)
    C = D.target
    oracle = brute_force_limit(D)
    try:
        built = limit_from_products_equalizers(D)
    except RequiredStructureAbsent as e:
        out.line(f"constructive route: required structure absent: {e}")
        out.line(f"oracle: {'apex ' + C.objects[oracle.apex] if oracle else 'no limit'}")
        return out.finish(False, {"absent": str(e)})
    if oracle is None:
        out.line("oracle found no limit but the construction did")
        return out.finish(False)
    r = compare_limits(built, oracle)
    out.report("comparison", r)
    out.line(f"constructive apex {C.objects[built.apex]}, oracle apex {C.objects[oracle.apex]}")
    if r.passed:
        out.line("constructive == oracle up to iso")
    return out.finish(r.passed, {"constructive": built.apex, "oracle": oracle.apex})


def cmd_yoneda(env, args, out):
    name, c = _category(env, args.category)
    if args.object is None:
        objs = range(c.n_objects)
    else:
        if args.object not in c.objects:
            raise InputError(f"no object {args.object!r} in {name}")
        objs = [c.objects.index(args.object)]
    presheaves = [(f"y({c.objects[x]})", representable(c, x)) for x in range(c.n_objects)]
    presheaves += [(f"const{s.cls}", constant_presheaf(c, s))
                   for s in all_setoids(args.probe_size) if s.n > 0]
    ok = True
    for x in objs:
        for pname, F in presheaves:
            res = yoneda_check(c, F, x)
            ok &= out.report(f"yoneda {c.objects[x]} {pname}: |Nat| = {res.n_nat}, |F x| = {res.n_classes}",
                             res.report)
    return out.finish(ok)


def cmd_monoidal(env, args, out):
    name, c = _category(env, args.category)
    try:
        M = monoidal_from_products(c)
    except RequiredStructureAbsent as e:
        out.line(f"cartesian structure on {name}: {e}")
        return out.finish(False, {"absent": str(e)})
    return out.finish(out.report(f"cartesian monoidal {name}", check_monoidal(M)))


def cmd_adjoint(env, args, out):
    pairs = []
    if args.left or args.right:
        if not (args.left and args.right):
            raise InputError("give both --left and --right")
        for n in (args.left, args.right):
            if n not in env.functors:
                raise InputError(f"no functor named {n!r}")
        pairs = [(args.left, args.right)]
    else:
        for a, F in env.functors.items():
            for b, G in env.functors.items():
                if F.source == G.target and F.target == G.source:
                    pairs.append((a, b))
    ok = True
    for a, b in pairs:
        F, G = env.functors[a], env.functors[b]
        if not (F.source == G.target and F.target == G.source):
            raise InputError(f"{a} and {b} do not go in opposite directions")
        found = find_adjunctions(F, G, limit=1)
        out.line(f"{a} -| {b}: {'yes' if found else 'no'}")
        if found:
            out.line(f"  unit {found[0].unit.components} counit {found[0].counit.components}")
        out.records.append({"left": a, "right": b, "adjoint": bool(found)})
        if args.left:
            ok &= bool(found)
    return out.finish(ok)


def cmd_explain(env, args, out):
    for name, c in env.categories.items():
        out.line(print_entity(category_to_presentation(c, name, rename=True)).rstrip())
        for a in range(c.n_objects):
            for b in range(c.n_objects):
                if c.hom(a, b):
                    out.line(f"  # Hom({c.objects[a]}, {c.objects[b]}): {len(c.hom(a, b))} arrows, "
                             f"{len(c.classes(a, b))} classes")
        out.records.append({"category": name, "objects": c.n_objects, "arrows": c.n_arrows})
    return out.finish(True)


COMMANDS = {
    "check": cmd_check,
    "op-test": cmd_op_test,
    "limits": cmd_limits,
    "limit": cmd_limit,
    "yoneda": cmd_yoneda,
    "monoidal-check": cmd_monoidal,
    "adjoint-check": cmd_adjoint,
    "explain": cmd_explain,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fincat", description="Check finite categories written in the fincat language.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("file")
    p.add_argument("--max-arrows", type=int, default=512)
    p.add_argument("--max-word-len", type=int, default=8)
    p.add_argument("--probe-size", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.add_argument("--diagram")
    p.add_argument("--object")
    p.add_argument("--category")
    p.add_argument("--left")
    p.add_argument("--right")
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = SaturationConfig(args.max_arrows, args.max_word_len)
        if args.probe_size < 0:
            raise InputError("--probe-size must be non-negative")
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except (OSError, UnicodeDecodeError) as e:
            raise InputError(f"cannot read {args.file}: {e}")
        out = Out(args.json, stdout)
        try:
            env = load(text, cfg)
        except LawFailure as e:
            out.report("elaboration", e.report)
            return out.finish(False)
        return COMMANDS[args.command](env, args, out)
    except (InputError, DslError, SaturationExceeded, ValueError, StructuralError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_INPUT
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_INPUT
    except Exception as e:  # never crash on user input
        print(f"internal error: {type(e).__name__}: {e}", file=stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
