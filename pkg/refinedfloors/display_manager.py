from typing import Dict, List, Optional, Sequence

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from config import PRETTY_MAX_TERMS


class DisplayManager:
    """
    Renders CLI results for humans (--pretty):
    1. Polygon data - one panel with the floor-diagram combinatorics
    2. Diagram classes - a table per enumeration
    3. Polynomials - q-powers descending, elided past PRETTY_MAX_TERMS
    4. Reports - key/value tables for verification records
    """

    def __init__(self, console: Optional[Console] = None):
        self.console = console or Console()

    @staticmethod
    def _elide(text: str) -> str:
        terms = text.split(" ")
        # terms alternate with signs, so allow twice as many tokens
        if len(terms) <= 2 * PRETTY_MAX_TERMS:
            return text
        head = " ".join(terms[:PRETTY_MAX_TERMS])
        tail = " ".join(terms[-PRETTY_MAX_TERMS:])
        return f"{head} ... {tail}"

    def show_polygon(self, summary: Dict):
        """
        Show h-transverse data as a panel

        Args:
            summary: HTransverseData dumped to a dict
        """
        body = Text()
        for key in ("vertices", "a", "e_bot", "e_top", "L", "R", "y", "chi", "interior", "n_k", "d_F", "s_max"):
            if key in summary:
                body.append(f"{key:>9}: ", style="bold cyan")
                body.append(f"{summary[key]}\n")
        self.console.print(Panel(body, title="Polygon", border_style="cyan"))

    def show_diagrams(self, rows: List[Dict]):
        """
        Show diagram classes in a table

        Args:
            rows: DiagramClass JSON payloads
        """
        table = Table(title=f"{len(rows)} floor diagram classes")
        table.add_column("#", justify="right")
        table.add_column("codeg", justify="right")
        table.add_column("deg", justify="right")
        table.add_column("|Aut|", justify="right")
        table.add_column("floors (ell, r, src, snk)")
        table.add_column("edges (tail->head:w)")
        for n, row in enumerate(rows):
            floors = " ".join(f"({f['ell']},{f['r']},{f['sources']},{f['sinks']})" for f in row["floors"])
            edges = " ".join(f"{t}->{h}:{w}" for t, h, w in row["edges"])
            table.add_row(str(n), str(row["codegree"]), str(row["degree"]), str(row["aut"]), floors, edges or "-")
        self.console.print(table)

    def show_polynomial(self, title: str, text: str, footer: Optional[str] = None):
        self.console.print(Panel(Text(self._elide(text)), title=title, subtitle=footer, border_style="green"))

    def show_formulas(self, title: str, lines: Sequence[str]):
        """One line per universal polynomial."""
        body = Text("\n".join(lines))
        self.console.print(Panel(body, title=title, border_style="magenta"))

    def show_report(self, title: str, fields: Dict, ok: bool = True):
        """
        Show a verification record

        Args:
            title: Panel title
            fields: Report dumped to a dict
            ok: Colours the border green or red
        """
        table = Table(show_header=False, box=None)
        table.add_column(style="bold")
        table.add_column()
        for key, value in fields.items():
            table.add_row(key, str(value))
        self.console.print(Panel(table, title=title, border_style="green" if ok else "red"))

    def show_lemmas(self, results: List[Dict]):
        table = Table(title="Property suites")
        table.add_column("suite")
        table.add_column("cases", justify="right")
        table.add_column("status")
        for r in results:
            status = Text("pass", style="green") if r["passed"] else Text("FAIL " + ", ".join(r["failures"]), style="red")
            table.add_row(r["name"], str(r["checked"]), status)
        self.console.print(table)
