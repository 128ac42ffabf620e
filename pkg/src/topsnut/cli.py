"""``topsnut`` command line.

Output is ``key=value`` lines on stdout, followed by the primary artifact
where there is one.  Exit status: 0 when every check passes, 1 when a
verification fails, 2 for bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import groups, labelling, matrix, netcrypt, spantree, tbpaw, trees
from .errors import TopsnutError
from .graph import Graph, format_graph, parse_graph, read_graph
from .labelling import Labelling, format_labelling, parse_labelling
from .lcg import Lcg
from .paw import TbPaw


class Usage(Exception):
    pass


def _emit(key, value) -> None:
    if isinstance(value, (list, tuple, set, frozenset)):
        value = ",".join(str(x) for x in value)
    elif isinstance(value, bool):
        value = str(value).lower()
    print(f"{key}={value}")


def _ints(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise Usage(f"expected comma separated integers, got {text!r}") from None


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("TOPSNUT_SEED", "0"))


def _graph(args) -> Graph:
    if not args.graph:
        raise Usage("--graph is required")
    text = Path(args.graph).read_text(encoding="utf-8")
    if text.lstrip().startswith("t "):
        return netcrypt.parse_snapshot(text).graph
    return parse_graph(text)


def _labels(args, g: Graph) -> Labelling:
    if not args.labels:
        raise Usage("--labels is required")
    return parse_labelling(Path(args.labels).read_text(encoding="utf-8"), g)


def _write(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        _emit("out", args.out)
    else:
        sys.stdout.write(text)


def _constant_key(k: str) -> str:
    return k.replace("''", "2").replace("'", "1")


def _report(g, lab, scheme) -> int:
    rep = labelling.verify(g, lab, scheme)
    _emit("scheme", scheme)
    _emit("passed", rep.passed)
    for k, v in rep.constants.items():
        if isinstance(v, (int, str, bool)):
            _emit(_constant_key(k), v)
    for clause in rep.violated_clauses:
        _emit("violated", clause)
    return 0 if rep.passed else 1


# subcommands ------------------------------------------------------------------

CONSTRUCTIONS = ("set-ordered-graceful", "odd-graceful", "image", "odd-image", "6c",
                 "6c-mate", "lobster")


def cmd_label(args) -> int:
    t = _graph(args)
    f = labelling.construct_set_ordered_graceful_caterpillar(t)
    c = args.construction
    if c == "set-ordered-graceful":
        out, scheme = f, "set-ordered-graceful"
    elif c == "odd-graceful":
        out, scheme = labelling.graceful_to_odd_graceful(t, f), "set-ordered-odd-graceful"
    elif c == "image":
        out, scheme = labelling.image_labelling(t, f), "set-ordered-graceful"
    elif c == "odd-image":
        odd = labelling.graceful_to_odd_graceful(t, f)
        out, scheme = labelling.image_labelling(t, odd, odd=True), "set-ordered-odd-graceful"
    elif c == "6c":
        out, scheme = labelling.six_c_from_set_ordered_graceful(t, f), "6c"
    elif c == "6c-mate":
        out, scheme = labelling.six_c_mate(t, f), "6c"
    else:
        # grow the caterpillar into a lobster by a seeded plan of new leaves
        odd = labelling.graceful_to_odd_graceful(t, f)
        rng = Lcg(_seed(args))
        plan = {v: rng.below(3) for v in t}
        t, out, _ = labelling.extend_caterpillar_to_lobster(t, odd, plan)
        scheme = "odd-graceful"
        _emit("lobster_p", t.p)
        graph_text = format_graph(t)
        if args.out:
            Path(args.out + ".g").write_text(graph_text, encoding="utf-8")
            _emit("graph_out", args.out + ".g")
        else:
            sys.stdout.write(graph_text)
    rep = labelling.verify(t, out, scheme)
    _emit("construction", c)
    _emit("scheme", scheme)
    _emit("passed", rep.passed)
    _write(args, format_labelling(t, out))
    return 0 if rep.passed else 1


def cmd_verify(args) -> int:
    g = _graph(args)
    if not args.scheme:
        raise Usage("--scheme is required")
    return _report(g, _labels(args, g), args.scheme)


def cmd_matrix(args) -> int:
    g = _graph(args)
    lab = _labels(args, g)
    m = matrix.from_graph(g, lab)
    route = matrix.met(args.route, m.q)
    paw = matrix.extract(m, route)
    _emit("q", m.q)
    _emit("route", f"met{args.route}")
    for k, v in matrix.structural_predicates(m).items():
        _emit(k, v)
    _emit("tbpaw", paw.rendered)
    _write(args, matrix.format_matrix(m))
    return 0


def cmd_tbpaw(args) -> int:
    g = _graph(args)
    lab = _labels(args, g)
    path = _ints(args.path)
    policy = tbpaw.MAXI if args.policy == "maxi" else tbpaw.MINI
    m = args.method
    count = None
    if m == "path":
        if path is None:
            raise Usage("--path is required for the path method")
        paw = tbpaw.path_method(g, lab, path, args.kind)
    elif m == "neighbor":
        paw = tbpaw.path_neighbor_method(g, lab, path, policy, args.kind)
    elif m == "cycle":
        if path is None:
            raise Usage("--path lists the cycle")
        paw, count = tbpaw.cycle_neighbor_method(g, lab, path, 0, policy, args.kind)
    elif m == "lobster":
        paw = tbpaw.lobster_neighbor_method(g, lab, None, path, policy, args.kind)
    elif m == "spider":
        paw, count = tbpaw.spider_neighbor_method(g, lab, None, args.kind)
    elif m == "euler":
        paw = tbpaw.euler_hamilton_method(g, lab)
    else:
        start = path[0] if path else None
        paws = tbpaw.multiple_meaning_emit(g, lab, start)
        for i, p in enumerate(paws, 1):
            _emit(f"d{i}", p.rendered)
        paw = paws[0]
    _emit("method", m)
    _emit("length", len(paw.rendered))
    if count is not None:
        _emit("variants", count)
    print(paw.rendered)
    return 0


def _read_group(path: str) -> groups.EveryZeroGraphicGroup:
    """``group n <order> base <graph-file> <labelling-file>``; paths are
    relative to the group file."""
    p = Path(path)
    head = p.read_text(encoding="utf-8").split()
    if len(head) != 6 or head[0] != "group" or head[1] != "n" or head[3] != "base":
        raise Usage(f"bad group file header in {path}")
    h = read_graph(p.parent / head[4])
    f = parse_labelling((p.parent / head[5]).read_text(encoding="utf-8"), h)
    return groups.build_group(h, f, int(head[2]))


def _group(args) -> groups.EveryZeroGraphicGroup:
    if args.group:
        return _read_group(args.group)
    if not args.order:
        raise Usage("give --group or --graph/--labels/--order")
    g = _graph(args)
    return groups.build_group(g, _labels(args, g), args.order, check=False)


def cmd_group(args) -> int:
    grp = _group(args)
    _emit("order", grp.n)
    if args.action == "axioms":
        bad = grp.axiom_violations()
        _emit("passed", not bad)
        for b in bad[:20]:
            _emit("violated", b)
        if args.out and not args.group:
            here = Path(args.out).resolve().parent
            rel = [os.path.relpath(Path(x).resolve(), here) for x in (args.graph, args.labels)]
            _write(args, f"group n {grp.n} base {rel[0]} {rel[1]}\n")
        return 0 if not bad else 1
    if args.action == "element":
        _emit("element", args.index)
        sys.stdout.write(format_labelling(grp.base, grp.element(args.index)))
        return 0
    if args.action == "add":
        i, j = _ints(args.sequence) or [1, 1]
        _emit("sum", grp.add(i, j, args.zero))
        return 0
    if not args.host:
        raise Usage("--host is required for colouring")
    host = read_graph(args.host)
    seq = _ints(args.sequence)
    if seq is None:
        seq = [groups.wrap(i, grp.n) for i in range(1, host.q + 1)]
    gl = groups.tree_group_coloring(host, grp, seq, args.zero, args.start)
    _emit("kind", gl.kind)
    _emit("valid", gl.valid)
    for v, i in gl.vertex_index.items():
        print(f"v {v} H{i}")
    for e, u, v in host.edges:
        print(f"e {u} {v} H{gl.edge_index[e]}")
    return 0 if gl.valid else 1


def cmd_encrypt(args) -> int:
    g = _graph(args)
    grp = _group_for_encrypt(args)
    net = netcrypt.pipeline_encrypt(g, grp, args.algo, _seed(args))
    bad = netcrypt.network_violations(net)
    em = net.provenance["emission"]
    _emit("algo", args.algo)
    _emit("seed", net.provenance["seed"])
    _emit("blocks", len(net.blocks))
    _emit("join_edges", len(net.join_edges))
    _emit("zero", net.provenance["zero"])
    _emit("length", em.accounting.total)
    _emit("passed", not bad)
    for b in bad[:20]:
        _emit("violated", b)
    if args.report:
        from . import report

        d = Path(args.report)
        _emit("figure", report.accounting_figure(em.accounting.parts, d / "accounting.png"))
        _emit("figure", report.host_figure(net, d / "host.png"))
    if args.out:
        _write(args, netcrypt.format_network(net))
    print(em.tbpaw.rendered)
    return 0 if not bad else 1


def _group_for_encrypt(args) -> groups.EveryZeroGraphicGroup:
    if not args.group:
        raise Usage("--group is required")
    return _read_group(args.group)


def cmd_spantree(args) -> int:
    g = _graph(args)
    rng = Lcg(_seed(args))
    t = netcrypt.pick_spanning_tree(g, args.algo, rng, _ints(args.required), args.k)
    _emit("algo", args.algo)
    _emit("spanning", spantree.is_spanning_tree(g, t))
    _emit("leaves", len(t.leaves()))
    for _, u, v in t.edges:
        print(f"{u} {v}")
    return 0


def cmd_count(args) -> int:
    what, q = args.what, args.q
    if what == "partitions":
        for k, v in matrix.partition_counts(args.m, args.k).items():
            _emit(k, v)
        return 0
    if q is None:
        raise Usage("--q is required")
    if what == "tbpaws":
        c = matrix.halved_pair_count(q)
    elif what == "matrices":
        c = matrix.matrix_count(q)
    elif what == "raw":
        c = matrix.raw_pair_count(q)
    else:
        census = matrix.fold_line_census(q)
        for k in sorted(census):
            _emit(f"lines{k}", census[k])
        _emit("total", sum(census.values()))
        if args.report:
            from . import report

            _emit("figure", report.census_figure(census, q, Path(args.report) / "census.png"))
        return 0
    _emit("factored", c)
    print(c.value() if q <= matrix.SYMBOLIC_THRESHOLD else c)
    return 0


def cmd_noise(args) -> int:
    if args.table:
        try:
            table = dict(item.split("=", 1) for item in args.table.split(","))
        except ValueError:
            raise Usage("--table takes letter=digits pairs") from None
        scheme = tbpaw.Substitute(table)
    else:
        scheme = tbpaw.InsertLetters(_seed(args), args.count)
    if args.action == "encode":
        toks = _ints(args.tokens)
        if toks is None:
            raise Usage("--tokens is required for encoding")
        print(tbpaw.noise_encode(TbPaw.of(toks), scheme))
    else:
        if args.text is None:
            raise Usage("--text is required for decoding")
        print(tbpaw.noise_decode(args.text, scheme).rendered)
    return 0


def cmd_classify(args) -> int:
    from .splitting import v_split_connectivity

    g = _graph(args)
    _emit("p", g.p)
    _emit("q", g.q)
    _emit("connected", g.is_connected())
    if g.is_tree():
        c = trees.classify_tree(g)
        _emit("class", c.kind)
        _emit("spider", c.spider)
    elif g.is_connected() and g.p <= 12:
        gamma, kappa = v_split_connectivity(g)
        _emit("v_split", gamma)
        _emit("kappa", kappa)
    return 0


# parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph")
    common.add_argument("--labels")
    common.add_argument("--seed", type=int)
    common.add_argument("--out")

    ap = argparse.ArgumentParser(prog="topsnut", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("label", parents=[common], help="construct a labelling of a tree")
    p.add_argument("construction", choices=CONSTRUCTIONS)
    p.set_defaults(run=cmd_label)

    p = sub.add_parser("verify", parents=[common], help="check a labelling clause by clause")
    p.add_argument("--scheme")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("matrix", parents=[common], help="Topsnut-matrix of a labelled graph")
    p.add_argument("--route", type=int, default=1, choices=range(1, 7))
    p.set_defaults(run=cmd_matrix)

    p = sub.add_parser("tbpaw", parents=[common], help="generate a TB-paw")
    p.add_argument("method", choices=("path", "neighbor", "cycle", "lobster", "spider",
                                      "euler", "multiple"))
    p.add_argument("--path")
    p.add_argument("--kind", choices=tbpaw.KINDS, default="vv")
    p.add_argument("--policy", choices=("mini", "maxi"), default="mini")
    p.set_defaults(run=cmd_tbpaw)

    p = sub.add_parser("group", parents=[common], help="every-zero graphic groups")
    p.add_argument("action", choices=("axioms", "element", "add", "color"))
    p.add_argument("--group")
    p.add_argument("--order", type=int)
    p.add_argument("--index", type=int, default=1)
    p.add_argument("--zero", type=int, default=1)
    p.add_argument("--sequence")
    p.add_argument("--host")
    p.add_argument("--start", type=int)
    p.set_defaults(run=cmd_group)

    p = sub.add_parser("encrypt", parents=[common], help="spanning tree encryption of a snapshot")
    p.add_argument("--group")
    p.add_argument("--algo", choices=("A", "B", "C"), default="A")
    p.add_argument("--report", help="directory for figures")
    p.set_defaults(run=cmd_encrypt)

    p = sub.add_parser("spantree", parents=[common], help="spanning trees")
    p.add_argument("--algo", choices=("A", "B", "C"), default="A")
    p.add_argument("--required")
    p.add_argument("--k", type=int)
    p.set_defaults(run=cmd_spantree)

    p = sub.add_parser("count", parents=[common], help="counting formulas")
    p.add_argument("what", choices=("tbpaws", "matrices", "raw", "census", "partitions"))
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--report", help="directory for figures")
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("noise", parents=[common], help="add or remove TB-paw noise")
    p.add_argument("action", choices=("encode", "decode"))
    p.add_argument("--tokens")
    p.add_argument("--text")
    p.add_argument("--table")
    p.add_argument("--count", type=int)
    p.set_defaults(run=cmd_noise)

    p = sub.add_parser("classify", parents=[common], help="tree class or split connectivity")
    p.set_defaults(run=cmd_classify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args)
    except (Usage, TopsnutError, OSError, ValueError) as exc:
        _emit("error", f"{type(exc).__name__}: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
