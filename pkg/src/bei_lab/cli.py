"""Command line: ``bei-lab analyze | verify SUITE | corpus``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .blocks import (
    find_good_cut_vertex,
    satisfies_dagger,
    verify_gprime_cutsets,
    verify_h_cutsets,
    verify_path_equivalence,
    verify_sepset_containment,
)
from .cohomology import ATTACHED_LABEL, cohomology_profile, depth_check, explain
from .corpus import FILTERS, iso_classes, labeled_graphs, labeled_masks, random_graphs
from .cutsets import DEFAULT_BOUND, enumerate_cutsets
from .graph import GraphError, block_decomposition, components, emit_graph6, parse_edge_list, parse_graph6
from .groebner import DEFAULT_PRIME, is_prime
from .oracle import ORACLE_BOUND, verify_ohtani, verify_primary_decomposition
from .primes import associated_primes

SUITES = ("decomposition", "ohtani", "gprime", "h", "dagger", "containment", "path", "depth")


# -- input ------------------------------------------------------------------

def read_graphs(source: str, fmt: str = "auto"):
    path = Path(source)
    text = path.read_text() if len(source) < 4096 and path.is_file() else source
    text = text.strip()
    if not text:
        raise GraphError("empty input")
    if fmt == "json" or (fmt == "auto" and text[:1] in "{["):
        doc = json.loads(text)
        docs = doc if isinstance(doc, list) else [doc]
        return [parse_edge_list(d) for d in docs]
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def corpus_from_args(args):
    graphs = []
    if args.input:
        graphs.extend(read_graphs(args.input, args.format))
    sizes = []
    if args.exhaustive_n:
        sizes.extend(range(1, args.exhaustive_n + 1))
    if args.n:
        sizes.append(args.n)
    for n in sizes:
        if args.labeled:
            graphs.extend(labeled_graphs(n, args.filter))
        else:
            graphs.extend(iso_classes(n, args.filter, n_min=n))
    if args.random:
        n = args.n or args.exhaustive_n or 6
        graphs.extend(random_graphs(n, args.random, seed=args.seed, kind=args.filter))
    return graphs


# -- analyze ----------------------------------------------------------------

def analyze_graph(g, bound=DEFAULT_BOUND, explain_index=None) -> dict:
    bd = block_decomposition(g)
    family = enumerate_cutsets(g, bound)
    doc = {
        "graph": emit_graph6(g),
        "n": g.n,
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edges],
        "c": len(components(g)),
        "is_block_graph": bd.is_block_graph,
        "block_decomposition": {
            "blocks": [list(b) for b in bd.blocks],
            "cut_vertices": list(bd.cut_vertices),
            "isolated": list(bd.isolated),
            "clique_roles": {str(i): r for i, r in sorted(bd.clique_roles.items())},
        },
        "cutsets": [list(s) for s in family],
        "primes": associated_primes(g, bound).to_list(),
    }
    if bd.is_block_graph:
        prof = cohomology_profile(g, bound)
        doc["profile"] = prof.to_dict()
        doc["profile"]["note"] = ATTACHED_LABEL
        if bd.cut_vertices:
            doc["good_cut_vertex"] = find_good_cut_vertex(g)
        if explain_index is not None:
            doc["explain"] = explain(g, explain_index, bound)
    else:
        doc["non_clique_block"] = list(bd.non_clique_block(g))
    return doc


def _analyze_table(doc) -> str:
    lines = [f"graph {doc['graph']}  n={doc['n']}  c={doc['c']}  block graph: {doc['is_block_graph']}"]
    bdoc = doc["block_decomposition"]
    lines.append(f"blocks: {bdoc['blocks']}  cut vertices: {bdoc['cut_vertices']}")
    lines.append("primes:")
    for p in doc["primes"]:
        lines.append(f"  S={p['S']} components={p['components']} height={p['height']} dim={p['dimension']}")
    if "profile" in doc:
        prof = doc["profile"]
        lines.append(f"nonvanishing H^i: {prof['nonvanishing']}  depth={prof['depth']}  "
                     f"dim={prof['dimension']}  CM={prof['cohen_macaulay']}")
    else:
        lines.append(f"no cohomology profile: block {doc['non_clique_block']} is not a clique")
    if "explain" in doc:
        lines.append(doc["explain"])
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    graphs = read_graphs(args.input, args.format)
    docs = [analyze_graph(g, args.bound, args.explain) for g in graphs]
    if args.output == "json":
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2))
    else:
        print("\n\n".join(_analyze_table(d) for d in docs))
    return 0


# -- verify -----------------------------------------------------------------

def _case(suite, g, v=None, holds=None, witness=None, skipped=None, **extra):
    out = {"suite": suite, "graph": emit_graph6(g), "v": v}
    if skipped:
        out["skipped"] = skipped
        return out
    out["holds"] = bool(holds)
    out["witness"] = list(witness) if isinstance(witness, tuple) else witness
    out.update(extra)
    return out


def run_suite(suite, g, primes=(DEFAULT_PRIME,), oracle_bound=ORACLE_BOUND, bound=DEFAULT_BOUND):
    """All case records for one suite on one graph."""
    if g.n > bound:
        return [_case(suite, g, skipped=f"n > enumeration bound {bound}")]
    bd = block_decomposition(g)
    if suite == "decomposition":
        if g.n > oracle_bound:
            return [_case(suite, g, skipped=f"n > oracle bound {oracle_bound}")]
        reps = [verify_primary_decomposition(g, p, oracle_bound) for p in primes]
        return [_case(suite, g, holds=all(reps), primes=list(primes),
                      seconds=round(sum(sum(r.timings) for r in reps), 4))]
    if not bd.is_block_graph:
        return [_case(suite, g, skipped="not a block graph")]
    if suite == "depth":
        depth, npc, agree = depth_check(g, bound)
        return [_case(suite, g, holds=agree, depth=depth, n_plus_c=npc)]
    if not bd.cut_vertices:
        return [_case(suite, g, skipped="no cut vertex")]
    if suite == "dagger":
        good = find_good_cut_vertex(g)
        failing = [satisfies_dagger(g, v) for v in bd.cut_vertices]
        return [_case(suite, g, good, holds=True,
                      failing={str(r.v): list(r.witness) for r in failing if not r.holds})]
    out = []
    for v in bd.cut_vertices:
        if suite == "ohtani":
            if g.n > oracle_bound:
                return [_case(suite, g, skipped=f"n > oracle bound {oracle_bound}")]
            reps = [verify_ohtani(g, v, p, oracle_bound) for p in primes]
            out.append(_case(suite, g, v, holds=all(reps), primes=list(primes)))
        elif suite == "gprime":
            r = verify_gprime_cutsets(g, v)
            out.append(_case(suite, g, v, r.holds, r.witness))
        elif suite == "h":
            if satisfies_dagger(g, v):
                r = verify_h_cutsets(g, v)
                out.append(_case(suite, g, v, r.holds, r.witness))
        elif suite == "containment":
            r = verify_sepset_containment(g, v)
            out.append(_case(suite, g, v, r.holds, r.witness))
        elif suite == "path":
            r = verify_path_equivalence(g, v)
            out.append(_case(suite, g, v, r.holds, r.witness))
        else:
            raise ValueError(f"unknown suite {suite!r}")
    return out


def _run_job(job):
    suite, g, primes, oracle_bound, bound = job
    try:
        return run_suite(suite, g, primes, oracle_bound, bound)
    except Exception as exc:  # a theorem violation must surface as a failed case
        return [_case(suite, g, holds=False, witness=None, error=f"{type(exc).__name__}: {exc}")]


def worker_count() -> int:
    cap = os.environ.get("BEI_LAB_THREADS")
    cpus = os.cpu_count() or 1
    if cap:
        return max(1, min(int(cap), cpus))
    return cpus


def cmd_verify(args) -> int:
    suite = args.suite_name or args.suite
    if suite is None:
        raise SystemExit("verify: a suite is required")
    if suite != "all" and suite not in SUITES:
        raise SystemExit(f"verify: unknown suite {suite!r}; expected one of {SUITES + ('all',)}")
    suites = SUITES if suite == "all" else (suite,)
    graphs = corpus_from_args(args)
    if not graphs:
        raise SystemExit("verify: empty corpus (use --input, --n, --exhaustive-n or --random)")
    jobs = [(s, g, tuple(args.prime), args.oracle_bound, args.bound) for s in suites for g in graphs]
    workers = worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_job, jobs))
    else:
        results = [_run_job(j) for j in jobs]
    cases = [c for batch in results for c in batch]
    failed = [c for c in cases if "skipped" not in c and not c["holds"]]
    passed = sum(1 for c in cases if "skipped" not in c and c["holds"])
    skipped = sum(1 for c in cases if "skipped" in c)
    summary = {"suite": suite, "graphs": len(graphs), "passed": passed, "failed": len(failed), "skipped": skipped}
    if args.output == "json":
        print(json.dumps({"summary": summary, "cases": cases}, indent=2))
    else:
        for c in cases:
            if "skipped" in c:
                status = f"SKIP ({c['skipped']})"
            else:
                status = "PASS" if c["holds"] else "FAIL"
            tail = "" if c.get("v") is None else f" v={c['v']}"
            if "skipped" not in c and not c["holds"]:
                tail += f" witness={c.get('witness')} {c.get('error', '')}"
            print(f"{c['suite']:<14} {c['graph']:<12} {status}{tail}")
        print(f"# {summary}")
    return 1 if failed else 0


# -- corpus -----------------------------------------------------------------

def cmd_corpus(args) -> int:
    n = args.n or args.exhaustive_n
    if not n:
        raise SystemExit("corpus: --n is required")
    from .corpus import graph_from_mask

    for m in labeled_masks(n, args.filter, dedup=args.dedup).tolist():
        print(emit_graph6(graph_from_mask(m, n)))
    return 0


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="graph6 / JSON text, or a path to a file of them")
    common.add_argument("--format", choices=("auto", "graph6", "json"), default="auto")
    common.add_argument("--prime", type=int, action="append", help="oracle characteristic (repeatable)")
    common.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="cut-set enumeration bound on n")
    common.add_argument("--oracle-bound", type=int, default=ORACLE_BOUND, help="Groebner oracle bound on n")
    common.add_argument("--output", choices=("json", "table"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--exhaustive-n", type=int, help="every isomorphism class with 1..N vertices")
    common.add_argument("--n", type=int, help="graphs with exactly N vertices")
    common.add_argument("--labeled", action="store_true", help="labeled graphs instead of isomorphism classes")
    common.add_argument("--random", type=int, default=0, help="add K random graphs (reproducible by --seed)")
    common.add_argument("--filter", choices=FILTERS, default="all")
    common.add_argument("--suite", choices=SUITES + ("all",))

    parser = argparse.ArgumentParser(prog="bei-lab", description="Binomial edge ideals of graphs: cut sets, "
                                     "minimal primes and local cohomology of block graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", parents=[common], help="full report for one graph")
    p.add_argument("--explain", type=int, metavar="I", help="include the derivation for H^I")
    p.set_defaults(func=cmd_analyze)
    p = sub.add_parser("verify", parents=[common], help="run a verification suite over a corpus")
    p.add_argument("suite_name", nargs="?", choices=SUITES + ("all",))
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("corpus", parents=[common], help="emit graph6 lines for a labeled corpus")
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.set_defaults(func=cmd_corpus)
    return parser


def _hoist_command(argv):
    """Accept ``--command NAME`` anywhere as an alias for the subcommand."""
    argv = list(argv)
    for i, tok in enumerate(argv):
        if tok == "--command" and i + 1 < len(argv):
            name = argv[i + 1]
            del argv[i:i + 2]
            return [name] + argv
        if tok.startswith("--command="):
            del argv[i]
            return [tok.split("=", 1)[1]] + argv
    return argv


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_hoist_command(sys.argv[1:] if argv is None else argv))
    args.prime = args.prime or [DEFAULT_PRIME]
    for p in args.prime:
        if not is_prime(p):
            parser.error(f"--prime {p} is not prime")
    if args.bound < 1 or args.oracle_bound < 1:
        parser.error("bounds must be positive")
    if args.command == "analyze" and not args.input:
        parser.error("analyze needs --input")
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
