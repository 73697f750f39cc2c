"""Command-line surface: partition listings, irreducibles, context export,
concept enumeration, invariant verification and scaling benchmarks."""

from __future__ import annotations

import argparse
import math
import random
import sys
import time
from pathlib import Path
from typing import Callable, Optional

from . import fca, irreducibles, lattice, oracles, partitions

CONCEPT_GUARD = 40
HASSE_GUARD = 20


def _write_out(text: str, out: Optional[str]) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="ascii")


def cmd_partitions(args: argparse.Namespace) -> int:
    for p in lattice.enumerate_partitions(args.n):
        print(p)
    return 0


def cmd_irreducibles(args: argparse.Namespace) -> int:
    if args.kind == "join":
        members = irreducibles.join_irreducibles(args.n).members
    else:
        members = irreducibles.meet_irreducibles(args.n)
    for p in sorted(members, reverse=True):
        print(p)
    return 0


def cmd_context(args: argparse.Namespace) -> int:
    ctx = fca.standard_context(args.n, parallel=args.parallel)
    text = fca.export_cxt(ctx) if args.format == "cxt" else fca.export_csv(ctx)
    _write_out(text, args.out)
    return 0


def cmd_concepts(args: argparse.Namespace) -> int:
    if args.n > CONCEPT_GUARD and not args.force:
        raise ValueError(
            f"concept enumeration above n={CONCEPT_GUARD} needs --force"
        )
    concepts = fca.enumerate_concepts(fca.standard_context(args.n, parallel=args.parallel))
    print(len(concepts))
    if args.list:
        for line in fca.concept_lines(concepts):
            print(line)
    return 0


def cmd_hasse(args: argparse.Namespace) -> int:
    if args.n > HASSE_GUARD and not args.force:
        raise ValueError(f"hasse export above n={HASSE_GUARD} needs --force")
    diagram = lattice.build_hasse(args.n)
    marked = irreducibles.join_irreducibles(args.n).members
    pentagon = lattice.find_pentagon(args.n) or ()
    _write_out(lattice.to_dot(diagram, filled=marked, outlined=pentagon), args.out)
    return 0


def _measure(fn: Callable, *fnargs) -> float:
    start = time.perf_counter()
    fn(*fnargs)
    return time.perf_counter() - start


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = args.n
    if any(n < 4 for n in sizes):
        raise ValueError("bench sizes must be >= 4")
    rows = []
    for n in sizes:
        t_irr = _measure(irreducibles.join_irreducibles, n)
        t_ctx = _measure(fca.standard_context, n, args.parallel)
        rows.append((n, t_irr, t_ctx))
        print(f"n={n}  join_irreducibles={t_irr:.6f}s  standard_context={t_ctx:.6f}s")
    for (n1, i1, c1), (n2, i2, c2) in zip(rows, rows[1:]):
        s_irr = math.log(i2 / i1) / math.log(n2 / n1)
        s_ctx = math.log(c2 / c1) / math.log(n2 / n1)
        print(f"slope {n1}->{n2}  join_irreducibles={s_irr:.2f}  standard_context={s_ctx:.2f}")
    return 0


# ---------------------------------------------------------------------------
# verify: named invariant checks, each reporting its first counterexample.


def _check_partition_counts(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 30) + 1):
        got = len(lattice.enumerate_partitions(n))
        want = oracles.partition_count(n)
        if got != want:
            return f"n={n}: enumerated {got}, counted {want}"
    return None


def _check_covers_vs_transitions(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 12) + 1):
        nodes = lattice.enumerate_partitions(n)
        for p in nodes:
            reach = {t.result for t in partitions.direct_reachable(p)}
            covered = {q for q in nodes if partitions.covers(p, q)}
            if reach != covered:
                return f"p={p}: transitions {sorted(reach)} vs covers {sorted(covered)}"
    return None


def _check_conjugation(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 14) + 1):
        for p in lattice.enumerate_partitions(n):
            if partitions.conjugate(partitions.conjugate(p)) != p:
                return f"involution fails at {p}"
    for n in range(1, min(n_max, 12) + 1):
        nodes = lattice.enumerate_partitions(n)
        for a in nodes:
            for b in nodes:
                lhs = partitions.dominance_leq(a, b)
                rhs = partitions.dominance_leq(
                    partitions.conjugate(b), partitions.conjugate(a)
                )
                if lhs != rhs:
                    return f"antiautomorphism fails at {a},{b}"
    return None


def _check_shape_exclusivity(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 12) + 1):
        for p in lattice.enumerate_partitions(n):
            clauses = oracles.shape_clauses(p)
            if len(clauses) > 1:
                return f"{p} matches {len(clauses)} clauses"
            shape = partitions.classify_at_column_one(p)
            if clauses and clauses[0] != shape:
                return f"{p}: clause {clauses[0]} vs classified {shape}"
            if not clauses and shape.kind is not partitions.ShapeKind.NONE:
                return f"{p}: no clause but classified {shape}"
    return None


def _check_sons_reconstruction(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 20) + 1):
        produced: list[partitions.Partition] = []
        for p in lattice.enumerate_partitions(n):
            left, right = partitions.sons(p)
            produced.append(left)
            if right is not None:
                produced.append(right)
        if len(produced) != len(set(produced)):
            return f"duplicate sons at weight {n}"
        if set(produced) != set(lattice.enumerate_partitions(n + 1)):
            return f"sons of weight {n} do not cover weight {n + 1}"
    return None


def _check_father_inversion(n_max: int) -> Optional[str]:
    for n in range(2, min(n_max, 13) + 1):
        for q in lattice.enumerate_partitions(n):
            parent, branch = partitions.father(q)
            s = partitions.sons(parent)
            got = s.left if branch == "left" else s.right
            if got != q:
                return f"father({q}) = ({parent}, {branch}) but that son is {got}"
    return None


def _check_irreducibles_vs_oracle(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 25) + 1):
        fast = irreducibles.join_irreducibles(n).members
        brute = oracles.brute_join_irreducibles(n)
        if fast != brute:
            return f"n={n}: constructed {sorted(fast)} vs brute {sorted(brute)}"
    return None


def _check_irreducible_counts(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 40) + 1):
        size = len(irreducibles.join_irreducibles(n).members)
        rec = irreducibles.count_recursive(n)
        clo = irreducibles.count_closed(n)
        if not size == rec == clo:
            return f"n={n}: set {size}, recursion {rec}, closed form {clo}"
    return None


def _check_meet_irreducible_duality(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 20) + 1):
        diagram = lattice.build_hasse(n)
        indeg: dict[partitions.Partition, int] = {p: 0 for p in diagram.nodes}
        for p in diagram.nodes:
            for q in diagram.cover_edges[p]:
                indeg[q] += 1
        brute = frozenset(p for p, d in indeg.items() if d == 1)
        if irreducibles.meet_irreducibles(n) != brute:
            return f"n={n}: duality vs covered-by-one mismatch"
    return None


def _check_meet_join_vs_oracle(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 10) + 1):
        nodes = lattice.enumerate_partitions(n)
        for a in nodes:
            for b in nodes:
                if lattice.meet(a, b) != oracles.brute_meet(a, b):
                    return f"meet({a},{b})"
                want_join = partitions.conjugate(
                    oracles.brute_meet(partitions.conjugate(a), partitions.conjugate(b))
                )
                if lattice.join(a, b) != want_join:
                    return f"join({a},{b})"
    return None


def _check_structure_facts(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 5) + 1):
        if not lattice.is_chain(lattice.build_hasse(n)):
            return f"weight {n} is not a chain"
    if n_max >= 6:
        if lattice.find_pentagon(6) is not None:
            return "unexpected pentagon at weight 6"
        if not lattice.is_distributive(lattice.build_hasse(6)):
            return "weight 6 should be distributive"
    if n_max >= 7:
        if lattice.is_distributive(lattice.build_hasse(7)):
            return "weight 7 should not be distributive"
        pent = lattice.find_pentagon(7)
        if pent is None:
            return "missing pentagon at weight 7"
        for a in pent:
            for b in pent:
                if lattice.meet(a, b) not in pent or lattice.join(a, b) not in pent:
                    return f"pentagon not closed at {a},{b}"
    return None


def _check_concept_counts(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 30) + 1):
        got = len(fca.enumerate_concepts(fca.standard_context(n)))
        want = oracles.partition_count(n)
        if got != want:
            return f"n={n}: {got} concepts, p(n)={want}"
    return None


def _check_concept_lattice_isomorphism(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 12) + 1):
        if not fca.concept_lattice_isomorphic(n):
            return f"n={n}"
    return None


def _check_galois(n_max: int) -> Optional[str]:
    rng = random.Random(12345)
    for n in range(2, min(n_max, 10) + 1):
        ctx = fca.standard_context(n)
        for _ in range(20):
            subset = frozenset(g for g in ctx.objects if rng.random() < 0.4)
            up = fca.derive_up(ctx, subset)
            down = fca.derive_down(ctx, up)
            if not subset <= down:
                return f"n={n}: A not within A''"
            if fca.derive_up(ctx, down) != up:
                return f"n={n}: A' != A'''"
            bigger = subset | {rng.choice(ctx.objects)}
            if not fca.derive_up(ctx, bigger) <= up:
                return f"n={n}: derivation not antitone"
    return None


def _check_context_roundtrip(n_max: int) -> Optional[str]:
    for n in range(1, min(n_max, 12) + 1):
        ctx = fca.standard_context(n)
        if fca.import_cxt(fca.export_cxt(ctx)) != ctx:
            return f"n={n}: cxt round trip"
        for g in ctx.objects:
            for m in ctx.attributes:
                want = partitions.dominance_leq(g, m)
                if ctx.incidence(g, m) != want:
                    return f"n={n}: cell ({g},{m})"
                dual = ctx.incidence(partitions.conjugate(m), partitions.conjugate(g))
                if dual != want:
                    return f"n={n}: duality at ({g},{m})"
    return None


CHECKS: list[tuple[str, Callable[[int], Optional[str]]]] = [
    ("partition-counts", _check_partition_counts),
    ("covers-vs-transitions", _check_covers_vs_transitions),
    ("conjugation", _check_conjugation),
    ("shape-exclusivity", _check_shape_exclusivity),
    ("sons-reconstruction", _check_sons_reconstruction),
    ("father-inversion", _check_father_inversion),
    ("irreducibles-vs-oracle", _check_irreducibles_vs_oracle),
    ("irreducible-counts", _check_irreducible_counts),
    ("meet-irreducible-duality", _check_meet_irreducible_duality),
    ("meet-join-vs-oracle", _check_meet_join_vs_oracle),
    ("structure-facts", _check_structure_facts),
    ("concept-counts", _check_concept_counts),
    ("concept-lattice-isomorphism", _check_concept_lattice_isomorphism),
    ("galois-connection", _check_galois),
    ("context-roundtrip", _check_context_roundtrip),
]


def cmd_verify(args: argparse.Namespace) -> int:
    failures = 0
    for name, check in CHECKS:
        problem = check(args.n)
        if problem is None:
            print(f"PASS {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {problem}")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domlat",
        description="Dominance-order partition lattices and their standard contexts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("partitions", cmd_partitions, "list all partitions of a weight")
    p.add_argument("--n", type=int, required=True)

    p = add("irreducibles", cmd_irreducibles, "list join- or meet-irreducible partitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("join", "meet"), default="join")

    p = add("context", cmd_context, "export the standard context")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("cxt", "csv"), default="cxt")
    p.add_argument("--out", default="-")
    p.add_argument("--parallel", action="store_true")

    p = add("concepts", cmd_concepts, "count (and list) the formal concepts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.add_argument("--force", action="store_true")
    p.add_argument("--parallel", action="store_true")

    p = add("verify", cmd_verify, "run the invariant checks up to a weight")
    p.add_argument("--n", type=int, required=True, help="largest weight to check")

    p = add("bench", cmd_bench, "time the construction at several weights")
    p.add_argument("--n", type=int, required=True, action="append")
    p.add_argument("--parallel", action="store_true")

    p = add("hasse", cmd_hasse, "export the cover diagram as DOT")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--force", action="store_true")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
