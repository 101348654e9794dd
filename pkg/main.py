"""Command-line entry point for the projective rank toolkit."""

import sys
from typing import List, Optional, Sequence

import click

from algebra.rep_theory import DominantWeight, enumerate_irreps_below, tableau_dimension_oracle, weyl_dimension
from algebra.root_system import RootSystemFactory, delete_vertices, parabolic_split
from catalog.hss_catalog import (
    HermitianSpace,
    complex_dimension,
    min_degree,
    projective_rank,
    rank_consistency_report,
    symmetric_pairs,
)
from checks.supervisor import Supervisor
from config.settings import LOG_FILE, LOG_LEVEL, VERIFY_SCOPES
from geometry.pluecker import MAP_NAMES, describe_map
from geometry.schubert import SchubertIndex, pieri_degree_oracle, schubert_degree, schubert_dimension
from models.payloads import (
    ComponentPayload,
    ConsistencyCheckPayload,
    ConsistencyPayload,
    DeletionPayload,
    DimensionPayload,
    HSSPayload,
    IrrepListPayload,
    IrrepPayload,
    PairPayload,
    ParabolicPayload,
    PlueckerPayload,
    RootSystemPayload,
    SchubertPayload,
)
from utils.errors import ProjRankError
from utils.logging import get_logger, setup_logging

logger = get_logger("cli")


class ToolkitUsageError(click.UsageError):
    """Invalid parameters, reported with the usage text of the running command."""

    def __init__(self, message: str):
        super().__init__(message, ctx=click.get_current_context(silent=True))


def _int_list(text: Optional[str], what: str) -> List[int]:
    if text is None or not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ToolkitUsageError(f"{what} must be comma-separated integers, got {text!r}")


def _type_label(type_label: str, rank: int) -> str:
    label = type_label.upper()
    return f"E{rank}" if label == "E" else label


def _emit(payload, as_json: bool, rows: Sequence[Sequence], headers: Sequence[str]):
    """One JSON document, or an aligned table."""
    if as_json:
        click.echo(payload.model_dump_json(by_alias=True, indent=2))
        return
    table = [list(map(str, headers))] + [[str(x) for x in row] for row in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(headers))]
    for row in table:
        click.echo("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


@click.group()
@click.option("--log-level", default=LOG_LEVEL, show_default=True,
              type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              help="Logging level (logs go to stderr)")
def cli(log_level: str):
    """Exact root systems, Schubert degrees, Lie triple systems and projective ranks."""
    setup_logging(log_level.upper(), LOG_FILE)


@cli.command()
@click.option("--type", "type_label", required=True, help="A, B, C, D, E6 or E7")
@click.option("--rank", required=True, type=int)
@click.option("--marked", type=int, default=None, help="Marked simple root r: print Phi_1 and Phi(n+)")
@click.option("--delete", "delete", default=None, help="Comma-separated simple roots to delete from the diagram")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
def roots(type_label: str, rank: int, marked: Optional[int], delete: Optional[str], as_json: bool):
    """Positive roots, a parabolic split, or a Dynkin subdiagram."""
    if marked is not None and delete is not None:
        raise click.UsageError("--marked and --delete are mutually exclusive")
    try:
        rs = RootSystemFactory.get(_type_label(type_label, rank), rank)
        if marked is not None:
            split = parabolic_split(rs, marked)
            payload = ParabolicPayload(**split.to_dict())
            rows = [("phi_1", list(r.coeffs)) for r in split.phi_1]
            rows += [("phi_n_plus", list(r.coeffs)) for r in split.phi_n_plus]
            rows.append(("complex_dimension", split.complex_dimension))
            _emit(payload, as_json, rows, ("part", "root"))
        elif delete is not None:
            removed = _int_list(delete, "--delete")
            components = delete_vertices(rs, removed)
            payload = DeletionPayload(
                type=rs.type_label, rank=rs.rank, removed=sorted(removed),
                components=[ComponentPayload(type=t, rank=r) for t, r in components],
            )
            _emit(payload, as_json, components, ("type", "rank"))
        else:
            payload = RootSystemPayload(**rs.to_dict(), count=len(rs.positive_roots))
            rows = [(r.height, list(r.coeffs)) for r in rs.positive_roots]
            _emit(payload, as_json, rows, ("height", "root"))
    except ProjRankError as e:
        raise ToolkitUsageError(str(e))


@cli.command()
@click.option("--type", "type_label", required=True, help="A, B, C, D, E6 or E7")
@click.option("--rank", required=True, type=int)
@click.option("--weight", default=None, help="Comma-separated m_1,...,m_l")
@click.option("--below", type=int, default=None, help="List every irrep of dimension <= BELOW")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
def dim(type_label: str, rank: int, weight: Optional[str], below: Optional[int], as_json: bool):
    """Weyl dimension of an irreducible module, or all irreps below a bound."""
    if (weight is None) == (below is None):
        raise click.UsageError("give exactly one of --weight or --below")
    try:
        rs = RootSystemFactory.get(_type_label(type_label, rank), rank)
        if weight is not None:
            coeffs = tuple(_int_list(weight, "--weight"))
            if len(coeffs) != rs.rank:
                raise ToolkitUsageError(f"--weight needs {rs.rank} entries, got {len(coeffs)}")
            w = DominantWeight(coeffs)
            value = weyl_dimension(rs, w)
            oracle = tableau_dimension_oracle(rs.rank, w) if rs.type_label == "A" else None
            payload = DimensionPayload(type=rs.type_label, rank=rs.rank, weight=list(coeffs),
                                       dimension=value, tableau_dimension=oracle)
            _emit(payload, as_json, [(list(coeffs), value)], ("weight", "dimension"))
        else:
            records = enumerate_irreps_below(rs, below)
            payload = IrrepListPayload(
                type=rs.type_label, rank=rs.rank, bound=below,
                irreps=[IrrepPayload(weight=list(r.weight.coeffs), dimension=r.dimension) for r in records],
            )
            _emit(payload, as_json, [(list(r.weight.coeffs), r.dimension) for r in records],
                  ("weight", "dimension"))
    except ProjRankError as e:
        raise ToolkitUsageError(str(e))


@cli.command()
@click.option("--index", "index", required=True, help="Comma-separated a_0 < ... < a_d")
@click.option("--ambient", required=True, help="d,n for Gr(d, n)")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
def schubert(index: str, ambient: str, as_json: bool):
    """Dimension and degree of a Schubert variety."""
    try:
        idx = SchubertIndex.parse(index, ambient)
        k, degree, oracle = schubert_dimension(idx), schubert_degree(idx), pieri_degree_oracle(idx)
    except ProjRankError as e:
        raise ToolkitUsageError(str(e))
    payload = SchubertPayload(index=list(idx.a), ambient=[idx.d, idx.n], k=k, degree=degree, oracle_degree=oracle)
    _emit(payload, as_json, [(list(idx.a), f"Gr({idx.d},{idx.n})", k, degree)],
          ("index", "ambient", "k", "degree"))


@cli.command()
@click.option("--kind", default=None, help="AIII, BDI, CI, DIII, EIII or EVII")
@click.option("--params", default=None, help="Comma-separated parameters, e.g. 2,3 for AIII(2,3)")
@click.option("--consistency", is_flag=True, help="Run the projective-rank bootstrap identities instead")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
def hss(kind: Optional[str], params: Optional[str], consistency: bool, as_json: bool):
    """Catalog entry of a Hermitian symmetric space."""
    if consistency:
        report = rank_consistency_report()
        payload = ConsistencyPayload(
            checks=[ConsistencyCheckPayload(name=c.name, passed=c.passed, detail=c.detail) for c in report.checks],
            flags=list(report.flags),
            violations=len(report.violations),
        )
        _emit(payload, as_json, [(c.name, "pass" if c.passed else "fail", c.detail) for c in report.checks],
              ("identity", "status", "detail"))
        return
    if kind is None:
        raise click.UsageError("--kind is required unless --consistency is given")
    try:
        space = HermitianSpace.from_params(kind, _int_list(params, "--params"))
        pairs, count = symmetric_pairs(space)
        payload = HSSPayload(
            kind=space.kind.value,
            params=list(space.params),
            dim_C=complex_dimension(space),
            projective_rank=projective_rank(space),
            min_degree=sorted(min_degree(space)),
            pairs=[PairPayload(m_plus=p.m_plus, m_minus=p.m_minus, constraint=p.constraint) for p in pairs],
            count=count,
        )
    except ProjRankError as e:
        raise ToolkitUsageError(str(e))
    rows = [
        ("space", space.label),
        ("dim_C", payload.dim_C),
        ("projective_rank", payload.projective_rank),
        ("min_degree", " or ".join(str(d) for d in payload.min_degree)),
        ("#P(M)", count),
    ]
    rows += [("pair", f"({p.m_plus}, {p.m_minus})") for p in pairs]
    _emit(payload, as_json, rows, ("field", "value"))


@cli.command()
@click.option("--map", "map_name", required=True, type=click.Choice(MAP_NAMES), help="Named explicit map")
@click.option("--n", "n", type=int, default=3, show_default=True, help="Size parameter of the map")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
def pluecker(map_name: str, n: int, as_json: bool):
    """Pluecker degree of an explicit curve of subspaces."""
    try:
        report = describe_map(map_name, n)
    except ProjRankError as e:
        raise ToolkitUsageError(str(e))
    payload = PlueckerPayload(map_name=report.map_name, ambient=report.ambient, degree=report.degree,
                              membership_checks=dict(report.membership_checks))
    rows = [("ambient", report.ambient), ("degree", report.degree)]
    rows += [(name, "yes" if ok else "no") for name, ok in sorted(report.membership_checks.items())]
    _emit(payload, as_json, rows, (map_name, ""))


@cli.command()
@click.option("--scope", default="all", show_default=True, type=click.Choice(["all"] + VERIFY_SCOPES),
              help="Module to verify")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
@click.pass_context
def verify(ctx: click.Context, scope: str, as_json: bool):
    """Run the reproduction checks; exit status 1 if any fails."""
    try:
        report = Supervisor().verify(scope)
    except ProjRankError as e:
        raise click.ClickException(str(e))
    rows = [(e.check_id, e.status, e.detail) for e in report.entries]
    _emit(report, as_json, rows, ("check", "status", "detail"))
    if not as_json:
        s = report.summary
        click.echo(f"total {s.total}  pass {s.passed}  fail {s.failed}")
    if not report.ok:
        ctx.exit(1)
    return 0


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI without exiting the interpreter.

    Args:
        argv: Arguments after the program name (defaults to sys.argv[1:])

    Returns:
        Exit status: 0 on success, 1 on verify failures, 2 on usage errors
    """
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        result = cli.main(args=args, prog_name="projrank", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except click.ClickException as e:
        e.show()
        return e.exit_code
    if isinstance(result, int):
        return result
    return 0


if __name__ == "__main__":
    sys.exit(run())
