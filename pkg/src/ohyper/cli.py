"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 hypothesis not met,
3 law violation (witness written to stderr and to ``--witness-dir``).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence, TextIO

from . import algebra as alg
from .constructions import incidence_dual, intersection_graph, k_section, strict_k_section
from .designs import DesignError, check_design_identity, design_to_hypergraph, fano
from .generate import GeneratorConfig
from .hypercore import (
    HypergraphError,
    NotLinearError,
    PreconditionError,
    UnknownLabelError,
    is_linear,
    max_degree,
    rank,
    regularity,
    uniformity,
)
from .io import ParseError, parse_bibd, parse_ohg, serialize_bibd, serialize_ohg, sniff
from .laws import LAWS, UnknownLawError, check_law, run_trials
from .switching import apply_switch, parse_assignments, total_switch

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ohyper", description="Oriented hypergraphs, their matrices and spectra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("info", help="size, degree and structure summary").add_argument("file")
    sub.add_parser("dual", help="incidence dual").add_argument("file")
    sub.add_parser("linegraph", help="intersection graph of a linear hypergraph").add_argument("file")

    s = sub.add_parser("section", help="k-section or strict k-section")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--strict", action="store_true")
    s.add_argument("file")

    s = sub.add_parser("matrix", help="integer matrix, one row per line")
    s.add_argument("--kind", choices=("incidence", "adjacency", "degree", "laplacian"), required=True)
    s.add_argument("--dual", action="store_true")
    s.add_argument("file")

    s = sub.add_parser("spectrum", help="eigenvalues, largest first")
    s.add_argument("--matrix", choices=("adjacency", "laplacian"), required=True)
    s.add_argument("--dual", action="store_true")
    s.add_argument("file")

    s = sub.add_parser("switch", help="apply vertex and edge switching")
    s.add_argument("--vertex-switch", default="")
    s.add_argument("--edge-switch", default="")
    s.add_argument("file")

    s = sub.add_parser("verify", help="check laws on a file or on random instances")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--law", choices=list(LAWS), metavar="ID")
    g.add_argument("--all", action="store_true")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-vertices", type=int, default=10)
    s.add_argument("--max-edges", type=int, default=8)
    s.add_argument("--witness-dir", default=".")
    s.add_argument("file", nargs="?")

    s = sub.add_parser("bibd", help="block designs")
    bsub = s.add_subparsers(dest="bibd_command", required=True, parser_class=_Parser)
    bsub.add_parser("check", help="validate a design file").add_argument("file")
    bsub.add_parser("fano", help="print the Fano plane")
    return p


class _Cli:
    def __init__(self, stdin: TextIO, stdout: TextIO, stderr: TextIO):
        self.stdin, self.out, self.err = stdin, stdout, stderr

    def read(self, path: str) -> str:
        if path == "-":
            return self.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()

    def load(self, path: str):
        text = self.read(path)
        if sniff(text) == "bibd":
            return design_to_hypergraph(parse_bibd(text))
        return parse_ohg(text)

    def cmd_info(self, a):
        G = self.load(a.file)
        rows = [
            ("vertices", G.n),
            ("edges", G.m),
            ("max_degree", max_degree(G) if G.n else "-"),
            ("rank", rank(G)),
            ("linear", "yes" if is_linear(G) else "no"),
            ("uniform", uniformity(G) or "no"),
            ("regular", regularity(G) or "no"),
        ]
        for key, value in rows:
            self.out.write(f"{key} {value}\n")
        return EXIT_OK

    def cmd_dual(self, a):
        self.out.write(serialize_ohg(incidence_dual(self.load(a.file))))
        return EXIT_OK

    def cmd_linegraph(self, a):
        G = self.load(a.file)
        try:
            line = intersection_graph(G)
        except NotLinearError as exc:
            self.err.write(f"ohyper: {exc}\n")
            return EXIT_HYPOTHESIS
        self.out.write(serialize_ohg(line))
        return EXIT_OK

    def cmd_section(self, a):
        G = self.load(a.file)
        S = strict_k_section(G, a.k) if a.strict else k_section(G, a.k)
        self.out.write(serialize_ohg(S))
        return EXIT_OK

    def cmd_matrix(self, a):
        G = self.load(a.file)
        if a.dual:
            G = incidence_dual(G)
        build = {
            "incidence": alg.incidence_matrix,
            "adjacency": alg.adjacency_matrix,
            "degree": alg.degree_matrix,
            "laplacian": alg.laplacian_matrix,
        }[a.kind]
        self.out.write(alg.format_matrix(build(G)))
        return EXIT_OK

    def cmd_spectrum(self, a):
        G = self.load(a.file)
        if a.dual:
            G = incidence_dual(G)
        M = alg.adjacency_matrix(G) if a.matrix == "adjacency" else alg.laplacian_matrix(G)
        self.out.write(alg.format_spectrum(alg.symmetric_eigenvalues(M)))
        return EXIT_OK

    def cmd_switch(self, a):
        G = self.load(a.file)
        s = total_switch(G, parse_assignments(a.vertex_switch), parse_assignments(a.edge_switch))
        self.out.write(serialize_ohg(apply_switch(G, s)))
        return EXIT_OK

    def _witness(self, law_id: str, seed: int, witness: str, directory: str) -> None:
        path = os.path.join(directory, f"witness-{law_id}-{seed}.ohg")
        header, _, body = witness.partition("\n")
        text = (
            f"{header}\n# law {law_id} failed; replay with:\n"
            f"#   ohyper verify --law {law_id} --seed {seed} {path}\n{body}"
        )
        os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        self.err.write(f"witness written to {path}\n{text}")

    def cmd_verify(self, a):
        laws = list(LAWS) if a.all else [a.law]
        if a.file is not None:
            return self._verify_file(a, laws)
        if a.trials < 1:
            raise UsageError("--trials must be positive")
        cfg = GeneratorConfig(max_vertices=a.max_vertices, max_edges=a.max_edges)
        code = EXIT_OK
        for law_id in laws:
            summary = run_trials(law_id, a.trials, a.seed, cfg)
            self.out.write(summary.line() + "\n")
            if summary.failure is not None:
                self.err.write(summary.failure.render())
                self._witness(law_id, summary.failure_seed, summary.failure.witness, a.witness_dir)
                code = EXIT_VIOLATION
            elif summary.exhausted and code == EXIT_OK:
                code = EXIT_HYPOTHESIS
        return code

    def _verify_file(self, a, laws):
        G = self.load(a.file)
        met, failed = 0, False
        for law_id in laws:
            rep = check_law(law_id, G, a.seed)
            if len(laws) == 1:
                self.out.write(rep.render())
            else:
                self.out.write(f"{law_id}: {rep.status}\n")
            if rep.hypothesis_met:
                met += 1
            if rep.hypothesis_met and not rep.passed:
                failed = True
                if len(laws) > 1:
                    self.err.write(rep.render())
                self._witness(law_id, a.seed, rep.witness, a.witness_dir)
        if failed:
            return EXIT_VIOLATION
        return EXIT_OK if met else EXIT_HYPOTHESIS

    def cmd_bibd(self, a):
        if a.bibd_command == "fano":
            self.out.write(serialize_bibd(fano()))
            return EXIT_OK
        try:
            D = parse_bibd(self.read(a.file))
        except DesignError as exc:
            self.err.write(f"ohyper: not a BIBD: {exc}\n")
            return EXIT_VIOLATION
        rep = check_design_identity(D)
        self.out.write("parameters " + " ".join(str(x) for x in D.params.as_tuple()) + "\n")
        self.out.write(rep.render())
        return EXIT_OK if rep.passed else EXIT_VIOLATION


def run_cli(
    argv: Sequence[str],
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    cli = _Cli(stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr)
    try:
        args = build_parser().parse_args(list(argv))
        return getattr(cli, f"cmd_{args.command}")(args)
    except UsageError as exc:
        cli.err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (ParseError, HypergraphError, UnknownLabelError, UnknownLawError, OSError, ValueError) as exc:
        if isinstance(exc, PreconditionError):
            cli.err.write(f"ohyper: {exc}\n")
            return EXIT_HYPOTHESIS
        cli.err.write(f"ohyper: {exc}\n")
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run_cli(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
