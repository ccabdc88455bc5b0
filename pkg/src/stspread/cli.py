"""Command line front end.

Commands:

* construct pg2|ag3|sts15-free|perturbed-pg|section4|random ... --out FILE
  writes a system in the text format, a label sidecar when the construction
  carries coordinates, and a JSON run manifest next to the output.
* analyze --system FILE closure|spread|subsystems|projective ...
  closure and spreading-set analysis of a stored system.
* saturate min|bounds|variance|extremes ...  saturation-side computations.
* embed --system FILE --target V  hill-climbing completion.
* demo maxofmin|unicity|almostmax|two-sizes|szoras|bounds
  end-to-end replications printing one PASS/FAIL line per sub-check.

Exit codes: 0 success, 1 usage, 2 invalid input, 3 budget exhausted,
4 verified property violated.  All stdout is a pure function of the
arguments (timings live only in the manifest), so identical invocations
produce byte-identical reports, regardless of --jobs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import platform
import random
import sys
import time

from . import __version__
from .closure import closure, enumerate_closed_sets, is_saturating_set, is_spreading_set
from .completion import complete_partial, two_minimal_sizes_sts, random_sts
from .constructions import (
    ag3,
    perturbed_pg,
    pg2,
    section4_partial,
    subsystem_free_sts15,
)
from .errors import (
    BudgetExhaustedError,
    SearchExhaustedError,
    StsError,
)
from .saturation import (
    compute_saturation_bound,
    deviating_hyperplane,
    intersection_extremes,
    lunelli_sce_min,
    min_saturating_size,
    refined_saturating_bound,
    variance_identity,
)
from .spreading import (
    check_projective,
    enumerate_minimal_spreading_sets,
    greedy_spreading_set,
    min_spreading_size,
    verify_dimension_theorem,
)
from .system import parse, serialize, serialize_labels

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_VIOLATION = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(EXIT_USAGE)


def _csv_ints(text):
    try:
        return tuple(int(f) for f in text.split(",") if f != "")
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers") from None


def _fmt_set(points):
    return ",".join(str(p) for p in sorted(points))


def _load_system(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


class _Report:
    """Collects output lines and PASS/FAIL bookkeeping."""

    def __init__(self):
        self.lines = []
        self.failures = 0

    def say(self, text=""):
        self.lines.append(text)

    def check(self, okay, label, detail=""):
        tail = (" " + detail) if detail else ""
        self.lines.append("%s %s%s" % ("PASS" if okay else "FAIL", label, tail))
        if not okay:
            self.failures += 1
        return okay

    def text(self):
        return "\n".join(self.lines) + "\n" if self.lines else ""


# -- construct -------------------------------------------------------------


def _cmd_construct(args):
    rep = _Report()
    extra = []
    if args.family == "pg2":
        ts = pg2(args.dim)
    elif args.family == "ag3":
        ts = ag3(args.dim)
    elif args.family == "sts15-free":
        ts = subsystem_free_sts15(args.seed)
    elif args.family == "perturbed-pg":
        ts = perturbed_pg(args.dim, args.seed)
    elif args.family == "section4":
        art = section4_partial(args.n)
        ts = art.system
        extra.append("base=%s" % _fmt_set(art.base_points))
        extra.append("b_points=%s" % ",".join(str(p) for p in art.b_points))
    else:
        ts = random_sts(args.order, args.seed)

    files = {args.out: serialize(ts).encode()}
    sidecar = serialize_labels(ts)
    if sidecar:
        files[args.out + ".labels"] = sidecar.encode()
    rep.say("wrote %s order=%d blocks=%d kind=%s"
            % (args.out, ts.order, len(ts.triples), ts.kind.value))
    if sidecar:
        rep.say("wrote %s.labels" % args.out)
    for line in extra:
        rep.say(line)
    return EXIT_OK, rep, files


# -- analyze ---------------------------------------------------------------


def _cmd_analyze(args):
    rep = _Report()
    ts = _load_system(args.system)
    if args.what == "closure":
        trace = closure(ts, args.set)
        if args.trace:
            rep.say(trace.report())
        else:
            rep.say("set=%s" % _fmt_set(args.set))
            rep.say("closure=%s" % _fmt_set(trace.points))
            rep.say("size=%d steps=%d" % (len(trace.points), len(trace.steps) - 1))
        rep.say("spreading=%s" % str(len(trace.points) == ts.order).lower())
        return EXIT_OK, rep, {}
    if args.what == "spread":
        if args.mode == "greedy":
            res = greedy_spreading_set(ts, args.seed_pair)
            rep.say("method=greedy")
            rep.say("size=%d" % res.size)
            rep.say("witness=%s" % _fmt_set(res.witness))
            rep.say("closure_sizes=%s" % ",".join(str(s) for s in res.closure_sizes))
        elif args.mode == "min":
            size, witness = min_spreading_size(ts)
            rep.say("size=%d" % size)
            rep.say("witness=%s" % _fmt_set(witness))
        else:
            enum = enumerate_minimal_spreading_sets(
                ts, args.max_size, jobs=args.jobs
            )
            if args.format == "csv":
                rep.say("size,points")
                for s in enum.sets:
                    rep.say('%d,"%s"' % (len(s), _fmt_set(s)))
            else:
                rep.say("count=%d truncated=%s max_size=%d"
                        % (len(enum.sets), str(enum.truncated).lower(), enum.max_size))
                for s in enum.sets:
                    rep.say(_fmt_set(s))
        return EXIT_OK, rep, {}
    if args.what == "subsystems":
        enum = enumerate_closed_sets(ts, args.max_count)
        if args.format == "csv":
            rep.say("size,points")
            for s in enum.sets:
                rep.say('%d,"%s"' % (len(s), _fmt_set(s)))
        else:
            rep.say("count=%d truncated=%s" % (len(enum.sets), str(enum.truncated).lower()))
            for s in enum.sets:
                rep.say("size=%d points=%s" % (len(s), _fmt_set(s)))
        return EXIT_OK, rep, {}
    # projective
    rep.say("projective=%s" % str(check_projective(ts)).lower())
    return EXIT_OK, rep, {}


# -- saturate --------------------------------------------------------------


def _cmd_saturate(args):
    rep = _Report()
    if args.what == "min":
        ts = _load_system(args.system)
        size, witness = min_saturating_size(ts, jobs=args.jobs)
        rep.say("size=%d" % size)
        rep.say("witness=%s" % _fmt_set(witness))
        return EXIT_OK, rep, {}
    if args.what == "bounds":
        rows = []
        for n in range(1, args.max_n + 1):
            bound = compute_saturation_bound(n, 2, exact=args.exact and n <= 3)
            lun3 = lunelli_sce_min(n, 3)
            rows.append((n, bound.lunelli, bound.refined, lun3, bound.exact))
        if args.format == "csv":
            rep.say("n,lunelli_q2,refined_q2,lunelli_q3,exact_q2")
            for n, l2, r2, l3, ex in rows:
                rep.say("%d,%d,%d,%d,%s" % (n, l2, r2, l3, "" if ex is None else ex))
        else:
            rep.say("%3s %11s %11s %11s %9s" % ("n", "lunelli_q2", "refined_q2", "lunelli_q3", "exact_q2"))
            for n, l2, r2, l3, ex in rows:
                rep.say("%3d %11d %11d %11d %9s" % (n, l2, r2, l3, "-" if ex is None else ex))
        return EXIT_OK, rep, {}
    if args.what == "variance":
        lhs, rhs = variance_identity(args.n, args.set)
        dev = deviating_hyperplane(args.n, args.set)
        rep.say("n=%d m=%d" % (args.n, len(set(args.set))))
        rep.say("lhs=%s" % lhs)
        rep.say("rhs=%s" % rhs)
        identity_ok = rep.check(lhs == rhs, "identity", "lhs == rhs")
        rep.say("deviation=%s functional=%d" % (dev.deviation, dev.functional))
        rep.say("bound_squared=%s" % dev.bound_squared)
        if dev.degenerate:
            rep.say("strict=skipped (empty set)")
            strict_ok = True
        else:
            strict_ok = rep.check(dev.strict, "deviation_strict",
                                  "deviation^2 > bound^2")
        code = EXIT_OK if (identity_ok and strict_ok) else EXIT_VIOLATION
        return code, rep, {}
    # extremes
    ex = intersection_extremes(args.n, args.m, jobs=args.jobs)
    if args.format == "csv":
        rep.say("n,m,max_min,max_min_witness,min_max,min_max_witness")
        rep.say('%d,%d,%d,"%s",%d,"%s"'
                % (ex.n, ex.m, ex.max_min, _fmt_set(ex.max_min_witness),
                   ex.min_max, _fmt_set(ex.min_max_witness)))
    else:
        rep.say("n=%d m=%d" % (ex.n, ex.m))
        rep.say("max_min=%d witness=%s" % (ex.max_min, _fmt_set(ex.max_min_witness)))
        rep.say("min_max=%d witness=%s" % (ex.min_max, _fmt_set(ex.min_max_witness)))
    return EXIT_OK, rep, {}


# -- embed -----------------------------------------------------------------


def _cmd_embed(args):
    rep = _Report()
    ts = _load_system(args.system)
    try:
        report = complete_partial(
            ts, args.target, seed=args.seed,
            restarts=args.restarts, moves_per_restart=args.moves,
        )
    except BudgetExhaustedError as exc:
        if exc.partial is not None:
            rep.say(exc.partial.to_kv().rstrip("\n"))
        rep.say("budget exhausted: %s" % exc)
        return EXIT_BUDGET, rep, {}
    rep.say(report.to_kv().rstrip("\n"))
    files = {}
    if args.out:
        files[args.out] = serialize(report.system).encode()
        rep.say("wrote %s" % args.out)
    return EXIT_OK, rep, files


# -- demo ------------------------------------------------------------------


def _demo_maxofmin(args, rep):
    bound_of = lambda n: (n + 1).bit_length() - 1
    for i, order in enumerate(args.orders):
        ts = random_sts(order, args.seed + i)
        res = greedy_spreading_set(ts)
        rep.check(
            res.size <= bound_of(order),
            "greedy_bound order=%d" % order,
            "greedy=%d bound=%d" % (res.size, bound_of(order)),
        )
    for d in (2, 3, 4):
        ts = pg2(d)
        res = greedy_spreading_set(ts)
        rep.check(
            res.size == d + 1,
            "greedy_equality pg2(%d)" % d,
            "greedy=%d log2(order+1)=%d" % (res.size, d + 1),
        )


def _demo_unicity(args, rep):
    systems = [
        ("pg2(2)", pg2(2)),
        ("pg2(3)", pg2(3)),
        ("ag3(2)", ag3(2)),
        ("sts15-free", subsystem_free_sts15(args.seed)),
        ("random(13)", random_sts(13, args.seed)),
    ]
    for name, ts in systems:
        n = ts.order
        size, _ = min_spreading_size(ts)
        attains = ((n + 1) & n) == 0 and size == (n + 1).bit_length() - 1
        proj = check_projective(ts)
        rep.check(
            attains == proj,
            "unicity %s" % name,
            "min=%d projective=%s" % (size, str(proj).lower()),
        )
    for d in (3, 4):
        report = verify_dimension_theorem(pg2(d), trials=args.trials, seed=args.seed)
        rep.check(
            report.ok,
            "dimension pg2(%d)" % d,
            "trials=%d counterexamples=%d" % (report.trials, len(report.counterexamples)),
        )


def _demo_almostmax(args, rep):
    ts = perturbed_pg(4, args.seed)
    rep.check(ts.order == 31 and ts.is_steiner(), "perturbed_steiner",
              "order=%d blocks=%d" % (ts.order, len(ts.triples)))
    from .closure import closure_points

    w = closure_points(ts, [1, 3, 7])
    rep.check(w == frozenset(range(15)), "replacement_subspace_closed",
              "size=%d" % len(w))
    witness = (1, 3, 7, 15)
    rep.check(is_spreading_set(ts, witness), "witness_spreads",
              "witness=%s" % _fmt_set(witness))
    from itertools import combinations

    minimal = all(
        not is_spreading_set(ts, sub)
        for k in (2, 3)
        for sub in combinations(witness, k)
    )
    rep.check(minimal, "witness_minimal", "all proper subsets fail")
    size, _ = min_spreading_size(ts)
    rep.check(size <= 4 < 5, "below_projective_maximum",
              "min=%d witness_size=4 projective_max=5" % size)


def _demo_two_sizes(args, rep):
    ts, base, btri = two_minimal_sizes_sts(args.n, args.seed)
    rep.say("order=%d blocks=%d seed=%d" % (ts.order, len(ts.triples), args.seed))
    rep.say("base=%s" % _fmt_set(base))
    rep.say("b_triple=%s" % _fmt_set(btri))
    rep.check(ts.is_steiner(), "steiner", "order=%d" % ts.order)
    rep.check(is_spreading_set(ts, btri), "b_triple_spreads", "size=3")
    from itertools import combinations

    rep.check(
        all(not is_spreading_set(ts, pair) for pair in combinations(sorted(btri), 2)),
        "b_triple_minimal",
        "all pairs fail",
    )
    rep.check(is_spreading_set(ts, base), "base_spreads", "size=%d" % len(base))
    rep.check(
        all(not is_spreading_set(ts, base - {a}) for a in sorted(base)),
        "base_minimal",
        "all (n-1)-subsets fail",
    )


def _demo_szoras(args, rep):
    rng = random.Random(args.seed)
    count = (1 << (args.n + 1)) - 1
    identity_fail = strict_fail = degenerate = 0
    for _ in range(args.trials):
        m = rng.randint(0, count)
        subset = rng.sample(range(count), m)
        lhs, rhs = variance_identity(args.n, subset)
        if lhs != rhs:
            identity_fail += 1
        dev = deviating_hyperplane(args.n, subset)
        if dev.degenerate:
            degenerate += 1
        elif not dev.strict:
            strict_fail += 1
    rep.check(identity_fail == 0, "variance_identity",
              "trials=%d failures=%d" % (args.trials, identity_fail))
    rep.check(strict_fail == 0, "deviation_strict",
              "trials=%d failures=%d degenerate=%d"
              % (args.trials, strict_fail, degenerate))


def _demo_bounds(args, rep):
    ok_corollary = True
    prev = 0
    ok_refined = ok_monotone = True
    for n in range(1, args.max_n + 1):
        lun = lunelli_sce_min(n, 2)
        target = (1 << (n + 2)) - 2
        s = 1
        while s * s + s < target:
            s += 1
        ok_corollary = ok_corollary and s == lun
        ref = refined_saturating_bound(n)
        ok_refined = ok_refined and ref >= lun
        ok_monotone = ok_monotone and ref >= prev
        prev = ref
    rep.check(ok_corollary, "lunelli_q2_closed_form",
              "least s with s^2+s >= 2^(n+2)-2, n <= %d" % args.max_n)
    rep.check(ok_refined, "refined_at_least_lunelli", "n <= %d" % args.max_n)
    rep.check(ok_monotone, "refined_monotone", "n <= %d" % args.max_n)
    ok_q3 = True
    for n in range(1, min(args.max_n, 6) + 1):
        lun3 = lunelli_sce_min(n, 3)
        threshold = (3 ** (n + 1) - 1) // 2
        root = math.isqrt(threshold - 1) + 1  # least s with s^2 >= threshold
        ok_q3 = ok_q3 and lun3 == root
    rep.check(ok_q3, "lunelli_q3_closed_form", "least s with s^2 >= (3^(n+1)-1)/2")
    fano = pg2(2)
    size2, wit2 = min_saturating_size(fano)
    rep.check(
        size2 == 4 and is_saturating_set(fano, wit2) and is_spreading_set(fano, wit2),
        "exact_pg2(2)",
        "size=%d witness=%s" % (size2, _fmt_set(wit2)),
    )
    space = pg2(3)
    size3, wit3 = min_saturating_size(space)
    rep.check(
        size3 >= 5 and is_saturating_set(space, wit3) and is_spreading_set(space, wit3),
        "exact_pg2(3)",
        "size=%d witness=%s" % (size3, _fmt_set(wit3)),
    )


def _cmd_demo(args):
    rep = _Report()
    handler = {
        "maxofmin": _demo_maxofmin,
        "unicity": _demo_unicity,
        "almostmax": _demo_almostmax,
        "two-sizes": _demo_two_sizes,
        "szoras": _demo_szoras,
        "bounds": _demo_bounds,
    }[args.which]
    try:
        handler(args, rep)
    except BudgetExhaustedError as exc:
        rep.say("budget exhausted: %s" % exc)
        return EXIT_BUDGET, rep, {}
    rep.say("result=%s" % ("ok" if rep.failures == 0 else "failed"))
    return (EXIT_OK if rep.failures == 0 else EXIT_VIOLATION), rep, {}


# -- wiring ----------------------------------------------------------------


def _build_parser():
    root = _Parser(prog="stspread", description=__doc__.split("\n\n")[0])
    root.add_argument("--jobs", type=int, default=1,
                      help="worker processes for subset scans (default 1)")
    root.add_argument("--manifest", default=None,
                      help="write a JSON run manifest to this path")
    sub = root.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="build and store a system")
    csub = con.add_subparsers(dest="family", required=True)
    p = csub.add_parser("pg2")
    p.add_argument("--dim", type=int, required=True)
    p = csub.add_parser("ag3")
    p.add_argument("--dim", type=int, required=True)
    p = csub.add_parser("sts15-free")
    p.add_argument("--seed", type=int, default=0)
    p = csub.add_parser("perturbed-pg")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = csub.add_parser("section4")
    p.add_argument("--n", type=int, default=4)
    p = csub.add_parser("random")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    for fam in csub.choices.values():
        fam.add_argument("--out", required=True)

    def _format_opt(prs):
        prs.add_argument("--format", choices=("text", "csv"), default="text")

    ana = sub.add_parser("analyze", help="inspect a stored system")
    ana.add_argument("--system", required=True)
    asub = ana.add_subparsers(dest="what", required=True)
    p = asub.add_parser("closure")
    p.add_argument("--set", type=_csv_ints, required=True)
    p.add_argument("--trace", action="store_true")
    p = asub.add_parser("spread")
    p.add_argument("mode", choices=("greedy", "min", "enumerate"))
    p.add_argument("--seed-pair", type=_csv_ints, default=None)
    p.add_argument("--max-size", type=int, default=None)
    _format_opt(p)
    p = asub.add_parser("subsystems")
    p.add_argument("--max-count", type=int, default=100000)
    _format_opt(p)
    asub.add_parser("projective")

    sat = sub.add_parser("saturate", help="saturating-set computations")
    ssub = sat.add_subparsers(dest="what", required=True)
    p = ssub.add_parser("min")
    p.add_argument("--system", required=True)
    p = ssub.add_parser("bounds")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--exact", action="store_true")
    _format_opt(p)
    p = ssub.add_parser("variance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", type=_csv_ints, required=True)
    p = ssub.add_parser("extremes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _format_opt(p)

    emb = sub.add_parser("embed", help="complete a partial system")
    emb.add_argument("--system", required=True)
    emb.add_argument("--target", type=int, required=True)
    emb.add_argument("--seed", type=int, default=0)
    emb.add_argument("--out", default=None)
    emb.add_argument("--restarts", type=int, default=50)
    emb.add_argument("--moves", type=int, default=10 ** 6)

    dem = sub.add_parser("demo", help="replicate a named result")
    dsub = dem.add_subparsers(dest="which", required=True)
    p = dsub.add_parser("maxofmin")
    p.add_argument("--orders", type=_csv_ints, default=(7, 9, 13, 15))
    p = dsub.add_parser("unicity")
    p.add_argument("--trials", type=int, default=500)
    dsub.add_parser("almostmax")
    p = dsub.add_parser("two-sizes")
    p.add_argument("--n", type=int, default=4)
    p = dsub.add_parser("szoras")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--trials", type=int, default=100)
    p = dsub.add_parser("bounds")
    p.add_argument("--max-n", type=int, default=10)
    for name, prs in dsub.choices.items():
        prs.add_argument("--seed", type=int, default=0)
    return root


_DISPATCH = {
    "construct": _cmd_construct,
    "analyze": _cmd_analyze,
    "saturate": _cmd_saturate,
    "embed": _cmd_embed,
    "demo": _cmd_demo,
}


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _write_manifest(path, argv, args, code, rep, files, elapsed):
    inputs = {}
    system_path = getattr(args, "system", None)
    if system_path:
        try:
            with open(system_path, "rb") as fh:
                inputs[system_path] = _sha256(fh.read())
        except OSError:
            inputs[system_path] = None
    if files:
        digest = _sha256(b"".join(files[k] for k in sorted(files)))
    else:
        digest = _sha256(rep.text().encode())
    manifest = {
        "argv": argv,
        "command": args.command,
        "version": __version__,
        "python": platform.python_version(),
        "seed": getattr(args, "seed", None),
        "jobs": getattr(args, "jobs", 1),
        "inputs": inputs,
        "result_digest": digest,
        "exit_code": code,
        "elapsed_seconds": round(elapsed, 3),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    start = time.time()
    try:
        code, rep, files = _DISPATCH[args.command](args)
    except (BudgetExhaustedError, SearchExhaustedError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_BUDGET
    except StsError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INVALID
    except OSError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INVALID

    for path in sorted(files):
        with open(path, "wb") as fh:
            fh.write(files[path])
    text = rep.text()
    if text:
        sys.stdout.write(text)

    manifest_path = args.manifest
    if manifest_path is None and args.command == "construct":
        manifest_path = args.out + ".manifest.json"
    if manifest_path:
        _write_manifest(manifest_path, argv, args, code, rep, files, time.time() - start)
    return code


if __name__ == "__main__":
    sys.exit(main())
