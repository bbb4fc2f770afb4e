from fractions import Fraction

from rich import box
from rich.table import Table

from epsilon_whitehead.decision.models import CertificateRecord
from epsilon_whitehead.geometry.epsilon import chord_length
from epsilon_whitehead.pipeline.verify import VerificationReport
from epsilon_whitehead.utils.rationals import format_circle_fraction, radians
from epsilon_whitehead.whitehead.classify import ConnectivityStatus, GraphStatus
from epsilon_whitehead.whitehead.graph import WhiteheadGraph

STATUS_STYLES = {
    GraphStatus.DISCONNECTED: "yellow",
    GraphStatus.CUT_VERTEX: "yellow",
    GraphStatus.TWO_CONNECTED: "green",
}


def verdict_markup(primitive: bool) -> str:
    return "[green]primitive[/green]" if primitive else "[red]non-primitive[/red]"


def status_markup(status: GraphStatus) -> str:
    style = STATUS_STYLES[status]
    return f"[{style}]{status.value}[/{style}]"


def degree_table(graph: WhiteheadGraph, status: ConnectivityStatus) -> Table:
    table = Table(title=f"Whitehead graph ({status.kind.value})", box=box.ROUNDED)
    table.add_column("Vertex", style="cyan")
    table.add_column("Degree", justify="right")
    table.add_column("Note", style="dim")

    degrees = graph.degrees()
    for v in graph.vertices:
        note = "cut vertex" if v == status.cut_vertex else ""
        table.add_row(graph.vertex_name(v), str(degrees[v]), note)

    table.caption = f"{len(graph.edges)} edges"
    return table


def descent_table(record: CertificateRecord) -> Table:
    table = Table(title="Whitehead descent", box=box.ROUNDED)
    table.add_column("#", style="dim", width=3)
    table.add_column("Automorphism", style="magenta")
    table.add_column("Word", style="white")
    table.add_column("Length", justify="right", style="cyan")

    for i, step in enumerate(record.trace, 1):
        table.add_row(str(i), step.automorphism, step.word, str(step.length))

    if not record.trace:
        table.add_row("", "[dim]no reducing automorphism[/dim]", "", "")
    return table


def epsilon_rows_table(rows: list[tuple[int, Fraction]], chord: bool = False) -> Table:
    table = Table(title="epsilon(f_k)", box=box.ROUNDED)
    table.add_column("k", justify="right", style="cyan")
    table.add_column("Exact", style="green")
    table.add_column("Radians", justify="right")
    if chord:
        table.add_column("Chord", justify="right", style="magenta")

    for k, value in rows:
        cells = [str(k), format_circle_fraction(value), f"{radians(value):.6f}"]
        if chord:
            cells.append(f"{chord_length(value):.6f}")
        table.add_row(*cells)
    return table


def verification_table(report: VerificationReport) -> Table:
    table = Table(title=f"Verification for k = {report.k}", box=box.ROUNDED, show_header=False)
    table.add_column("Check", style="cyan")
    table.add_column("Result", style="white")

    table.add_row("Word", report.word)
    table.add_row("Length", str(report.length))
    table.add_row("Abelianization", ", ".join(str(x) for x in report.abelianization))
    table.add_row("Homology primitive", _yes_no(report.homology_primitive))
    table.add_row("Whitehead graph", status_markup(report.graph_status))
    table.add_row("Verdict", verdict_markup(report.primitive))
    table.add_row("Method", report.method.value)
    if report.epsilon_value is not None:
        table.add_row("epsilon", format_circle_fraction(report.epsilon_value))
    if report.surjective is not None:
        table.add_row("Surjective", _yes_no(report.surjective))
    if report.trace_matches is not None:
        table.add_row("Trace matches w_k", _yes_no(report.trace_matches))
    return table


def _yes_no(flag: bool) -> str:
    return "[green]Yes[/green]" if flag else "[red]No[/red]"
