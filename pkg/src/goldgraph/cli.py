"""Command-line workbench.

Exit codes: 0 ok, 1 bad arguments, 2 a checked property was violated
(or a flagged row was found), 3 I/O failure. Payloads go to stdout or
``--output``; timings and search statistics go to stderr so that payloads
are reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import digraph, embedding, goldbach, hamiltonian, oddeven
from .primes import OddSet, arithmetic_odd_set, build_sieve, odd_primes_upto

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# --- argument helpers -----------------------------------------------------------


def parse_int_list(text: str) -> list[int]:
    """``"0,6,10"`` or a range ``"0:20"`` / ``"0:20:2"`` (inclusive, default step 2)."""
    text = text.strip()
    if not text:
        return []
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            lo, hi = parts[0], parts[1]
            step = parts[2] if len(parts) > 2 else 2
            return list(range(lo, hi + 1, step))
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc


def parse_odd_set(text: str) -> OddSet:
    """``"3,5,7"``, ``"primes:N"``, ``"primes1:N"`` or ``"prog:a,b,N[,k0]"``."""
    try:
        if text.startswith("primes1:"):
            return odd_primes_upto(int(text.split(":", 1)[1]), include_one=True)
        if text.startswith("primes:"):
            return odd_primes_upto(int(text.split(":", 1)[1]))
        if text.startswith("prog:"):
            vals = [int(v) for v in text.split(":", 1)[1].split(",")]
            a, b, bound = vals[:3]
            k0 = vals[3] if len(vals) > 3 else 1
            return arithmetic_odd_set(a, b, bound, k_start=k0)
        return OddSet.of(parse_int_list(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def load_graph(path: str) -> digraph.Sdbg:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return digraph.Sdbg.from_json(text)
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(v) for v in items]
    return obj


def dump(payload) -> str:
    return json.dumps(_jsonable(payload), indent=2, sort_keys=False) + "\n"


def rows_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def log(msg: str) -> None:
    print(msg, file=sys.stderr)


# --- subcommands ----------------------------------------------------------------


def cmd_sieve(args):
    s = build_sieve(args.bound)
    if args.format == "json":
        return dump({"bound": args.bound, "count": s.count(args.bound), "primes": s.primes()}), EXIT_OK
    if args.count:
        return f"{s.count(args.bound)}\n", EXIT_OK
    return "\n".join(map(str, s.primes())) + "\n", EXIT_OK


def _bitournament_predicates(D):
    if not digraph.is_bitournament(D):
        raise UsageError("input is not a bitournament")
    lab = digraph.monotone_labeling(D)
    return {
        "bitransitive": digraph.is_bitransitive(D),
        "no_directed_4cycle": not digraph.has_directed_4cycle(D),
        "acyclic": digraph.is_acyclic(D),
        "ferrers_matrix_form": digraph.bitournament_matrix_form(D),
        "isomorphic_to_D_S": lab is not None,
    }, lab


def cmd_bitournament(args):
    D = load_graph(args.file)
    if args.action == "check":
        preds, _ = _bitournament_predicates(D)
        agree = len(set(preds.values())) == 1
        payload = {"vertices": len(D.vertices), "arcs": len(D.arcs), "oriented": digraph.is_oriented(D),
                   "unidirectional": digraph.is_unidirectional(D), **preds, "all_agree": agree}
        return dump(payload), EXIT_OK if agree else EXIT_VIOLATION
    # label
    if not digraph.is_bitournament(D):
        raise UsageError("input is not a bitournament")
    lab = digraph.monotone_labeling(D)
    if lab is None:
        return dump({"labeling": None, "reason": "directed cycle"}), EXIT_OK
    ok = digraph.isomorphic_under(D, lab)
    payload = {"labeling": {str(v): lab.label[v] for v in D.vertices}, "S": lab.image(), "isomorphic_to_D_S": ok}
    if args.format == "dot":
        D_S, _ = digraph.build_D_S(lab.image())
        return D_S.to_dot("D_S"), EXIT_OK if ok else EXIT_VIOLATION
    return dump(payload), EXIT_OK if ok else EXIT_VIOLATION


def cmd_oddeven(args):
    if args.action == "build":
        G = oddeven.build_oriented_odd_even(parse_int_list(args.A), parse_odd_set(args.O))
        if args.format == "csv":
            return oddeven.adjacency_csv(G, args.layout), EXIT_OK
        if args.format == "dot":
            return G.to_dot(), EXIT_OK
        V1, V2 = oddeven.partite_split(G.A)
        return dump({"A": G.A, "V1": V1, "V2": V2, "O": G.O.elements,
                     "O_rel": oddeven.relevant_odd_set(G.A, G.O).elements,
                     "arcs": G.arcs, "connected": oddeven.is_connected_underlying(G),
                     "unidirectional": oddeven.observed_unidirectional(G)}), EXIT_OK
    if args.action == "con1":
        rep = oddeven.check_con1(parse_int_list(args.A), parse_odd_set(args.O))
        return dump(rep), EXIT_VIOLATION if rep["theorem_violated"] else EXIT_OK
    if args.action == "con2":
        if args.O is not None:
            rep = oddeven.check_con2(args.m, parse_odd_set(args.O))
            return dump(rep), EXIT_VIOLATION if rep["theorem_violated"] else EXIT_OK
        rep = con2_exhaustive(args.m)
        return dump(rep), EXIT_VIOLATION if rep["violations"] else EXIT_OK
    # uni
    if args.a is not None:
        rep = oddeven.unidirectionality_scan(args.a, args.b, args.bound, args.k_start)
        return dump(rep), EXIT_OK if rep["agree"] else EXIT_VIOLATION
    params = [(a, b) for a in range(2, args.a_max + 1, 2) for b in range(1, args.b_max + 1, 2)]
    reps = _pmap(_uni_job, [(a, b, args.k_start) for a, b in params], args.threads)
    bad = [(r["a"], r["b"]) for r in reps if not r["agree"]]
    payload = {"a_max": args.a_max, "b_max": args.b_max, "vertex_bound": "10a+4b", "k_start": args.k_start,
               "instances": len(reps), "disagreements": bad}
    return dump(payload), EXIT_VIOLATION if bad else EXIT_OK


def _uni_job(job):
    a, b, k0 = job
    return oddeven.unidirectionality_scan(a, b, None, k0)


def con2_exhaustive(m_max: int) -> dict:
    from itertools import combinations

    checked, violations = 0, []
    for m in range(1, m_max + 1):
        cand = oddeven.con2_candidate_odds(m)
        for r in range(len(cand) + 1):
            for O in combinations(cand, r):
                rep = oddeven.check_con2(m, O)
                checked += 1
                if rep["theorem_violated"]:
                    violations.append({"m": m, "O": list(O)})
    return {"m_max": m_max, "instances": checked, "violations": violations}


def cmd_embed(args):
    B = load_graph(args.file)
    if not digraph.is_oriented(B):
        raise UsageError("embedding needs an oriented graph")
    R = embedding.embed_oriented_bipartite(B)
    ver = embedding.verify_embedding(B, R)
    payload = R.to_dict(B)
    payload["verification"] = ver
    if args.format == "dot":
        G = oddeven.build_oriented_odd_even(R.A, R.O)
        return G.to_dot("embedded"), EXIT_OK if ver["underlying_isomorphic"] else EXIT_VIOLATION
    return dump(payload), EXIT_OK if ver["underlying_isomorphic"] else EXIT_VIOLATION


def _ineq_job(job):
    r, offsets, m_max = job
    out = []
    for off in offsets:
        n = 2 * r + off
        prof = goldbach.degree_profile(n)
        for m in range(m_max + 1):
            lhs, rhs = goldbach.degree_inequality_sides(r, n, m, prof)
            out.append((r, n, m, lhs, rhs))
    return out


def _pmap(fn, jobs, threads):
    if threads and threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, jobs))
    return [fn(j) for j in jobs]


def cmd_goldbach(args):
    act = args.action
    if act == "connect":
        rep = goldbach.verify_goldbach_connectivity(args.max)
        if args.format == "json":
            return dump(rep), EXIT_OK if rep["all_connected"] else EXIT_VIOLATION
        if rep["all_connected"]:
            return f"connected: {rep['n_min']}..{rep['n_max']}\n", EXIT_OK
        return f"disconnected: first n = {rep['first_disconnected']}\n", EXIT_VIOLATION
    if act == "degrees":
        G = goldbach.build_goldbach(args.n)
        prof = goldbach.degree_profile(args.n, G)
        rows = [(v, prof.in_degree[v], prof.out_degree[v], prof.total(v)) for v in G.vertices]
        if args.format == "csv":
            return rows_csv(["vertex", "in_degree", "out_degree", "degree"], rows), EXIT_OK
        if args.format == "dot":
            return G.to_dot(), EXIT_OK
        pi, d0 = goldbach.prime_count_via_degree(args.n)
        return dump({"n": args.n, "pi_n": pi, "d_n_0": d0,
                     "degrees": [dict(zip(["vertex", "in", "out", "total"], r)) for r in rows]}), EXIT_OK
    if act == "inequality":
        offsets = [int(o) for o in args.offsets.split(",")]
        jobs = [(r, offsets, args.m) for r in range(1, args.r_max + 1)]
        results = [row for chunk in _pmap(_ineq_job, jobs, args.threads) for row in chunk]
        bad = [dict(zip(["r", "n", "m", "lhs", "rhs"], row)) for row in results if row[3] < row[4]]
        payload = {"r_max": args.r_max, "m_max": args.m, "n_offsets": offsets, "instances": len(results),
                   "violations": bad}
        if args.m > 4:
            payload["note"] = "m > 4 lies outside the stated range of the inequality"
        return dump(payload), EXIT_VIOLATION if bad else EXIT_OK
    if act == "kmn":
        ws = goldbach.find_complete_bipartite(args.n, args.s, args.t, args.limit)
        out, bad = [], 0
        for w in ws:
            rep = goldbach.check_kmn_structure(w)
            pw = goldbach.extract_prime_witness(w)
            good = rep["ok"] and pw["primes_ok"] and pw["sums_ok"]
            bad += not good
            out.append({"X": w.Xside, "Y": w.Yside, "pattern": rep["pattern"], "ok": good,
                        "primes": pw["primes"], "shifts": pw["shifts"]})
        return dump({"n": args.n, "s": args.s, "t": args.t, "found": len(ws), "witnesses": out}), (
            EXIT_VIOLATION if bad else EXIT_OK)
    if act == "indep":
        S, rep = goldbach.consecutive_independent_set(args.k)
        return dump({"k": args.k, "set": [str(v) for v in S], **rep}), EXIT_OK if rep["independent"] else EXIT_VIOLATION
    if act == "maillet":
        rep = goldbach.verify_maillet(args.v_max, args.bound)
        rep["witnesses"] = {str(k): list(v) for k, v in rep["witnesses"].items()}
        return dump(rep), EXIT_OK
    if act == "kronecker":
        count, pairs = goldbach.count_kronecker_pairs(args.gap, args.n)
        return dump({"gap": args.gap, "n": args.n, "out_degree": count, "pairs": pairs}), EXIT_OK
    if act == "pi":
        pi, d0 = goldbach.prime_count_via_degree(args.n)
        direct = build_sieve(max(args.n, 2)).count(args.n)
        return dump({"n": args.n, "d_n_0": d0, "pi_n": pi, "sieve_pi_n": direct}), (
            EXIT_OK if pi == direct else EXIT_VIOLATION)
    raise UsageError(f"unknown goldbach action {act}")


def cmd_hamiltonian(args):
    if args.path:
        res = hamiltonian.hamiltonian_path(args.n, args.node_limit)
    else:
        if args.n % 2:
            raise UsageError("cycles need even n; use --path for odd n")
        res = hamiltonian.hamiltonian_cycle(args.n, args.node_limit)
    log(f"nodes={res.search_stats.get('nodes')} elapsed={res.search_stats.get('elapsed', 0):.3f}s")
    if args.format == "json":
        return dump({"n": args.n, "kind": res.kind, "sequence": res.sequence, "valid": res.valid,
                     "exhausted": res.search_stats.get("exhausted", False)}), EXIT_OK if res.valid else EXIT_VIOLATION
    if not res.found:
        return f"no {res.kind} found\n", EXIT_VIOLATION
    return f"{res.kind}: " + ",".join(map(str, res.sequence)) + "\n", EXIT_OK


def cmd_appendix(args):
    try:
        rows = hamiltonian.parse_appendix(open(args.file).read() if args.file else None)
    except hamiltonian.AppendixParseError as exc:
        raise UsageError(str(exc)) from exc
    report = hamiltonian.validate_appendix(rows)
    flagged = [r for r in report if not r["valid"]]
    if args.format == "json":
        text = dump({"rows": report, "valid": len(report) - len(flagged), "flagged": [r["n"] for r in flagged]})
    elif args.format == "csv":
        text = rows_csv(["n", "valid", "first_bad_step", "reason"],
                        [(r["n"], r["valid"], "" if r["first_bad_step"] is None else r["first_bad_step"], r["reason"])
                         for r in report])
    else:
        lines = [f"n={r['n']:>2} {'valid' if r['valid'] else 'FLAGGED'}"
                 + ("" if r["valid"] else f" at step {r['first_bad_step']}: {r['reason']}") for r in report]
        lines.append(f"{len(report) - len(flagged)} valid, {len(flagged)} flagged")
        text = "\n".join(lines) + "\n"
    return text, EXIT_VIOLATION if flagged else EXIT_OK


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "dot", "text"], default="text")
    common.add_argument("-o", "--output", help="write the payload here instead of stdout")
    common.add_argument("--threads", type=int, default=1, help="worker processes for range scans")

    p = _Parser(prog="goldgraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sieve", parents=[common], help="list or count primes")
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_sieve)

    b = sub.add_parser("bitournament", parents=[common], help="bitournament predicates and labeling")
    b.add_argument("action", choices=["check", "label"])
    b.add_argument("file")
    b.set_defaults(func=cmd_bitournament)

    o = sub.add_parser("oddeven", parents=[common], help="odd-even graphs")
    o.add_argument("action", choices=["build", "con1", "con2", "uni"])
    o.add_argument("--A", default="0:20", help="vertex list, e.g. 0,6,10 or 0:40")
    o.add_argument("--O", default=None, help="odd set: 3,5 | primes:N | primes1:N | prog:a,b,N[,k0]")
    o.add_argument("--m", type=int, default=10, help="con2: |A| (or the exhaustive maximum without --O)")
    o.add_argument("--layout", choices=["blocked", "flat"], default="blocked")
    o.add_argument("--a", type=int, help="uni: single progression step")
    o.add_argument("--b", type=int, default=1)
    o.add_argument("--bound", type=int, default=None, help="uni: vertex bound (default 10a+4b)")
    o.add_argument("--k-start", type=int, default=1, choices=[0, 1])
    o.add_argument("--a-max", type=int, default=40)
    o.add_argument("--b-max", type=int, default=19)
    o.set_defaults(func=cmd_oddeven)

    e = sub.add_parser("embed", parents=[common], help="embed an oriented bipartite graph")
    e.add_argument("file")
    e.set_defaults(func=cmd_embed)

    g = sub.add_parser("goldbach", parents=[common], help="Goldbach graph scans")
    g.add_argument("action", choices=["connect", "degrees", "inequality", "kmn", "indep", "maillet", "kronecker", "pi"])
    g.add_argument("--max", type=int, default=100)
    g.add_argument("--n", type=int, default=20)
    g.add_argument("--r-max", type=int, default=100)
    g.add_argument("--m", type=int, default=4)
    g.add_argument("--offsets", default="0,10,50")
    g.add_argument("--s", type=int, default=2)
    g.add_argument("--t", type=int, default=2)
    g.add_argument("--limit", type=int, default=None)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--v-max", type=int, default=1000)
    g.add_argument("--bound", type=int, default=10**6)
    g.add_argument("--gap", type=int, default=2)
    g.set_defaults(func=cmd_goldbach)

    h = sub.add_parser("hamiltonian", parents=[common], help="Hamiltonian cycle/path in the starred graph")
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--path", action="store_true")
    h.add_argument("--node-limit", type=int, default=None)
    h.set_defaults(func=cmd_hamiltonian)

    a = sub.add_parser("appendix", parents=[common], help="validate the bundled Hamiltonian cycle table")
    a.add_argument("action", choices=["validate"])
    a.add_argument("--file", default=None, help="alternative table in the same format")
    a.set_defaults(func=cmd_appendix)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    raise SystemExit(main())
