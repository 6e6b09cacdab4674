"""Command-line front end.

Reports are deterministic for fixed inputs and seed: text format for humans,
machine format as greppable `key = value` lines under the version header
`poisson-atlas-report v1`, with scalars rendered exactly (`p/q`,
`a+b*sqrt(d)`).  Exit codes: 0 success, 1 failed verification, 2 parse error,
3 unsupported computation (e.g. an extension beyond quadratic).
"""

from __future__ import annotations

import argparse
import sys

from .catalog import RunConfig, catalog_names, get_entry, run_entry
from .classify import (
    classify_simple_modules,
    find_sl2_triple,
    homogeneity_report,
    recognize,
)
from .errors import AtlasError, ExtensionRequiredError, ParseError
from .ideals import SearchBox, find_poisson_maximal, leaf_report
from .lie import lie_from_point
from .linalg import eigen_small
from .modules import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    analyze_submodules,
    is_simple_module,
    lift_module,
    restrict_to_subalgebra,
    sl2_irrep,
    solvable_character_module,
    twist,
    verify_poisson_axioms,
)
from .poly import PointP
from .presfile import _Parser, lincomb_text, parse_presentation, serialize_presentation
from .scalars import Scalar

HEADER = "poisson-atlas-report v1"


class Report:
    """Ordered (key, value) records rendered as text or machine lines."""

    def __init__(self, command: str):
        self.command = command
        self.records = []
        self.status = "ok"

    def add(self, key: str, value):
        self.records.append((key, str(value)))

    def fail(self):
        self.status = "fail"

    def render(self, fmt: str) -> str:
        if fmt == "machine":
            lines = [HEADER, f"command = {self.command}"]
            lines += [f"{k} = {v}" for k, v in self.records]
            lines.append(f"status = {self.status}")
            return "\n".join(lines) + "\n"
        lines = [f"# {self.command}"]
        lines += [f"{k}: {v}" for k, v in self.records]
        lines.append(f"status: {self.status}")
        return "\n".join(lines) + "\n"


def _load_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    pf = parse_presentation(text)
    return pf, pf.presentation(name=path)


def _parse_point(pf, text: str) -> PointP:
    parser = _Parser(text.strip())
    point = parser.parse_point(pf.varset, pf.bound)
    return point


def _parse_expr(pf, text: str):
    parser = _Parser(text.strip())
    return parser.parse_expr(pf.varset, pf.bound)


def _box(args) -> SearchBox:
    return SearchBox(args.box_num, args.box_den)


def _matrix_text(m) -> str:
    return "[" + "; ".join(
        "(" + ", ".join(str(x) for x in row) + ")" for row in m.rows
    ) + "]"


def _point_arg(parser):
    parser.add_argument("--point", required=True, help='point, e.g. "(0, 0, 1)"')


def _common_flags(parser):
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    parser.add_argument("--box-num", type=int, default=4, help="box numerator bound")
    parser.add_argument("--box-den", type=int, default=2, help="box denominator bound")


def _module_at(pf, pres, point, dim, character=None):
    """The canonical dim-dimensional simple module at the point."""
    lie = lie_from_point(pres, point)
    rec = recognize(lie)
    if rec.is_sl2_type:
        triple = find_sl2_triple(lie, rec)
        radical = rec.radical_basis
        rep = sl2_irrep(lie, dim, triple, radical)
        return lift_module(pres, point, rep), rec
    if dim != 1:
        raise AtlasError(
            f"g(J) is {rec.describe()}: only one-dimensional simple modules exist"
        )
    if character is None:
        beta = [Scalar(0)] * len(pres.varset)
    else:
        beta = [Scalar.coerce(_parse_expr(pf, c).constant_value())
                for c in character.split(",")]
    return solvable_character_module(pres, point, beta), rec


def cmd_ideals(args) -> int:
    pf, pres = _load_file(args.file)
    report = Report("ideals")
    report.add("file", args.file)
    box = SearchBox(args.box_num, args.box_den, tuple(pf.points))
    ideals = find_poisson_maximal(pres, box)
    report.add("ideal.count", len(ideals))
    for k, ideal in enumerate(ideals, 1):
        report.add(f"ideal.{k}.point", ideal.point)
        if ideal.lambda_value is not None:
            report.add(f"ideal.{k}.lambda", ideal.lambda_value)
    print(report.render(args.format), end="")
    return 0


def cmd_leaves(args) -> int:
    pf, pres = _load_file(args.file)
    report = Report("leaves")
    report.add("file", args.file)
    rep = leaf_report(pres, SearchBox(args.box_num, args.box_den, tuple(pf.points)))
    report.add("singular.lambdas", ", ".join(str(s) for s in rep.singular_lambdas))
    for lam in rep.singular_lambdas:
        pts = rep.points_by_lambda[lam]
        report.add(f"singular.{lam}.points", "; ".join(str(p) for p in pts))
    for line in rep.strata_description():
        report.add("stratum", line)
    print(report.render(args.format), end="")
    return 0


def cmd_lie(args) -> int:
    pf, pres = _load_file(args.file)
    point = _parse_point(pf, args.point)
    lie = lie_from_point(pres, point)
    report = Report("lie")
    report.add("point", point)
    report.add("basis", ", ".join(f"{n} - pt" for n in lie.labels))
    for (i, j), row in lie.structure_table().items():
        report.add(
            f"bracket.[{lie.labels[i]},{lie.labels[j]}]",
            lincomb_text(lie.labels, row),
        )
    print(report.render(args.format), end="")
    return 0


def cmd_classify(args) -> int:
    pf, pres = _load_file(args.file)
    report = Report("classify")
    report.add("file", args.file)
    box = SearchBox(args.box_num, args.box_den, tuple(pf.points))
    ideals = find_poisson_maximal(pres, box)
    report.add("ideal.count", len(ideals))
    for k, ideal in enumerate(ideals, 1):
        lie = lie_from_point(pres, ideal.point)
        rec = recognize(lie)
        report.add(f"ideal.{k}.point", ideal.point)
        report.add(f"ideal.{k}.recognition", rec.describe())
        report.add(f"ideal.{k}.derived_dims", rec.derived_dims)
        if rec.tag != "unrecognized":
            cat = classify_simple_modules(lie, rec)
            if cat.kind == "one_per_dimension":
                report.add(f"ideal.{k}.simple_modules", "one class per dimension d >= 1")
            else:
                report.add(
                    f"ideal.{k}.simple_modules",
                    f"characters only ({cat.character_space_dim}-parameter family)",
                )
    print(report.render(args.format), end="")
    return 0


def cmd_module(args) -> int:
    pf, pres = _load_file(args.file)
    point = _parse_point(pf, args.point)
    module, rec = _module_at(pf, pres, point, args.dim, args.character)
    report = Report("module")
    report.add("point", point)
    report.add("dim", args.dim)
    report.add("recognition", rec.describe())
    for name, mat in zip(pres.varset.names, module.mats):
        report.add(f"action.{name}", _matrix_text(mat))
    report.add("simple", is_simple_module(module))
    print(report.render(args.format), end="")
    return 0


def cmd_verify(args) -> int:
    pf, pres = _load_file(args.file)
    point = _parse_point(pf, args.point)
    module, _ = _module_at(pf, pres, point, args.dim, args.character)
    result = verify_poisson_axioms(module, args.trials, args.seed)
    report = Report("verify")
    report.add("point", point)
    report.add("dim", args.dim)
    report.add("trials", args.trials)
    report.add("seed", args.seed)
    report.add("checks", result.checks)
    if result.ok:
        report.add("axioms", "pass")
    else:
        report.fail()
        for axiom, witness in result.failures:
            report.add("violation", f"{axiom}: {witness}")
    print(report.render(args.format), end="")
    return 0 if result.ok else 1


def cmd_twist(args) -> int:
    pf, pres = _load_file(args.file)
    if args.auto not in pf.autos:
        raise AtlasError(f"no automorphism named {args.auto!r} in the file")
    auto = pf.autos[args.auto]
    point = _parse_point(pf, args.point)
    module, _ = _module_at(pf, pres, point, args.dim, args.character)
    twisted = twist(module, auto)
    report = Report("twist")
    report.add("auto", args.auto)
    report.add("point", point)
    report.add("twisted.point", twisted.point)
    report.add("simple.preserved", is_simple_module(twisted) == is_simple_module(module))
    for name, mat in zip(pres.varset.names, twisted.mats):
        report.add(f"action.{name}", _matrix_text(mat))
    print(report.render(args.format), end="")
    return 0


def cmd_restrict(args) -> int:
    pf, pres = _load_file(args.file)
    if args.embed not in pf.embeds:
        raise AtlasError(f"no embedding named {args.embed!r} in the file")
    clause = pf.embeds[args.embed]
    sub_pres = clause.sub_presentation()
    emb = clause.substitution()
    point = _parse_point(pf, args.point)
    module, _ = _module_at(pf, pres, point, args.dim, args.character)
    restricted = restrict_to_subalgebra(module, emb, sub_pres)
    report = Report("restrict")
    report.add("embed", args.embed)
    report.add("point", point)
    report.add("sub.point", restricted.point)
    for name, mat in zip(sub_pres.varset.names, restricted.mats):
        report.add(f"action.{name}", _matrix_text(mat))
    report.add("simple", is_simple_module(restricted))
    grading = None
    for mat in restricted.mats:
        try:
            eig = eigen_small(mat)
        except ExtensionRequiredError:
            continue
        if all(len(vecs) == 1 for _, _, vecs in eig.pairs):
            grading = mat
            break
    analysis = analyze_submodules(restricted.mats, restricted.dim, grading)
    if analysis.semisimple is True:
        dims = sorted(len(s) for s in analysis.decomposition)
        report.add("semisimple", f"yes, summand dims {dims}")
    elif analysis.semisimple is False:
        report.add("semisimple", "no")
    else:
        report.add("semisimple", "lattice not fully enumerated")
    print(report.render(args.format), end="")
    return 0


def cmd_homogeneity(args) -> int:
    pf, pres = _load_file(args.file)
    report = Report("homogeneity")
    report.add("file", args.file)
    box = SearchBox(args.box_num, args.box_den, tuple(pf.points))
    ideals = find_poisson_maximal(pres, box)
    relation = _parse_expr(pf, args.relation) if args.relation else None
    rep = homogeneity_report(pres, ideals, relation)
    if args.relation:
        report.add("relation", args.relation)
    report.add("ideals.considered", len(rep.ideals))
    for k, (ideal, tag) in enumerate(zip(rep.ideals, rep.tags), 1):
        report.add(f"ideal.{k}", f"{ideal.point} [{tag.describe()}]")
    for d, count in rep.count_formula().items():
        report.add(f"classes.{d}", count)
    report.add("verdict", rep.verdict)
    print(report.render(args.format), end="")
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        report = Report("catalog list")
        for name in catalog_names():
            report.add("entry", name)
        print(report.render(args.format), end="")
        return 0
    if args.action == "file":
        if not args.name:
            raise AtlasError("catalog file needs an entry name")
        entry = get_entry(args.name)
        pf = entry.presentation_file()
        if pf is None:
            raise AtlasError(f"{args.name} has no ambient presentation to serialize")
        print(serialize_presentation(pf), end="")
        return 0
    config = RunConfig(args.trials, args.seed)
    if args.action == "run":
        if not args.name:
            raise AtlasError("catalog run needs an entry name")
        names = [args.name]
    elif args.action == "run-all":
        names = catalog_names()
    else:
        raise AtlasError(f"unknown catalog action {args.action!r}")
    report = Report(f"catalog {args.action}")
    report.add("trials", config.trials)
    report.add("seed", config.seed)
    all_ok = True
    for name in names:
        entry_report = run_entry(get_entry(name), config)
        for result in entry_report.results:
            mark = "pass" if result.ok else "FAIL"
            detail = f" -- {result.detail}" if result.detail else ""
            report.add(f"{name}.{result.key}", f"{mark} [{result.cite}]{detail}")
        for note in entry_report.notes:
            report.add(f"{name}.note", note)
        all_ok = all_ok and entry_report.ok
    if not all_ok:
        report.fail()
    print(report.render(args.format), end="")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poisson-atlas",
        description="Classify and construct finite-dimensional simple Poisson "
        "modules over affine Poisson algebras, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_file=True):
        p = sub.add_parser(name)
        if needs_file:
            p.add_argument("file", help="presentation file")
        _common_flags(p)
        p.set_defaults(fn=fn)
        return p

    add("ideals", cmd_ideals)
    add("leaves", cmd_leaves)
    p = add("lie", cmd_lie)
    _point_arg(p)
    add("classify", cmd_classify)
    p = add("module", cmd_module)
    _point_arg(p)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--character", help="comma-separated scalars for solvable g(J)")
    p = add("verify", cmd_verify)
    _point_arg(p)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--character")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    p = add("twist", cmd_twist)
    p.add_argument("--auto", required=True)
    _point_arg(p)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--character")
    p = add("restrict", cmd_restrict)
    p.add_argument("--embed", required=True)
    _point_arg(p)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--character")
    p = add("homogeneity", cmd_homogeneity)
    p.add_argument("--relation", help="expression; restrict to ideals containing it")
    p = add("catalog", cmd_catalog, needs_file=False)
    p.add_argument("action", choices=("list", "run", "run-all", "file"))
    p.add_argument("name", nargs="?")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ExtensionRequiredError as exc:
        print(f"unsupported computation: {exc}", file=sys.stderr)
        return 3
    except AtlasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
