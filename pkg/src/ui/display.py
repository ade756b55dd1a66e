"""
Display functions for the Leibniz CL verifier CLI
"""
import sys

from colorama import Fore, Style
from tabulate import tabulate

from src import config


def set_colors(enabled):
    """Turn colored output on or off for the rest of the run"""
    config.ENABLE_COLORS = enabled


def colored_text(text, color):
    """
    Return colored text if colors are enabled
    """
    if config.ENABLE_COLORS:
        return f"{color}{text}{Style.RESET_ALL}"
    return text


def display_error(message):
    """
    Display an error message on stderr
    """
    print(colored_text(f"ERROR: {message}", Fore.RED), file=sys.stderr)


def display_success(message):
    print(colored_text(f"SUCCESS: {message}", Fore.GREEN))


def display_failure(message):
    print(colored_text(f"FAIL: {message}", Fore.RED))


def display_warning(message):
    """
    Display a warning message on stderr
    """
    print(colored_text(f"WARNING: {message}", Fore.YELLOW), file=sys.stderr)


def display_info(message):
    print(colored_text(f"INFO: {message}", Fore.CYAN))


def display_title(title):
    """
    Display a section title
    """
    print(colored_text(f"\n{title}", Style.BRIGHT + Fore.BLUE))
    print(colored_text("-" * len(title), Fore.BLUE))


def display_table(headers, rows):
    print(tabulate(rows, headers=headers, tablefmt="simple"))


def verdict_text(passed):
    return colored_text("pass", Fore.GREEN) if passed else colored_text("fail", Fore.RED)


def display_algebra(L):
    """
    Display the nonzero products of an algebra

    Args:
        L: LeibnizAlgebra
    """
    display_title(f"{L.name or 'algebra'}: dimension {L.dim} over {L.field}")
    products = L.table.products()
    if not products:
        print("abelian (all products zero)")
        return
    rows = [[f"[e{i + 1}, e{j + 1}]", v.render()] for (i, j), v in products.items()]
    display_table(["product", "value"], rows)


def display_series(series):
    """
    Display the terms of a lower central or derived series

    Args:
        series: SeriesResult
    """
    title = "Lower central series" if series.kind == "lower_central" else "Derived series"
    sup = "L^{}" if series.kind == "lower_central" else "L^[{}]"
    display_title(title)
    rows = [[sup.format(k + 1), term.dim, term.render()] for k, term in enumerate(series.terms)]
    display_table(["term", "dim", "span"], rows)
    print(f"verdict: {series.verdict}")


def display_witness(witness):
    print(f"  witness at x = {witness.x.render()}: {witness.describe()}")


def display_cl_verdict(verdict):
    """
    Display a CLVerdict together with the selection it was computed on
    """
    selection = verdict.selection.describe()
    line = f"{verdict.flavor} CL-check on {selection} ({verdict.checked} elements): {verdict_text(verdict.passed)}"
    print(line)
    if verdict.witness is not None:
        display_witness(verdict.witness)


def display_element_report(report):
    print(f"CL-element {report.element.render()} on {report.selection.describe()}: {verdict_text(report.passed)}")
    if report.witness is not None:
        display_witness(report.witness)


def display_theorem_report(report):
    """
    Display the corpus table of the CL-algebra reproduction

    Args:
        report: TheoremReport
    """
    display_title("Nilpotent Leibniz algebras of dimension <= 4 as CL-algebras")
    rows = []
    for row in report.rows:
        rows.append([
            row.name,
            row.parameter,
            row.dim,
            row.series.verdict,
            verdict_text(row.basis.passed),
            verdict_text(row.sampled.passed),
        ])
    display_table(["algebra", "parameter", "dim", "nilpotency", "basis", f"sampled({report.samples})"], rows)
    for row in report.failures():
        if row.witness is not None:
            print(f"{row.name} {row.parameter}".rstrip() + ":")
            display_witness(row.witness)
    mismatches = [a for a in report.audit if not a.matches]
    if report.audit:
        display_title("Centralizer audit")
        print(f"{len(report.audit) - len(mismatches)} of {len(report.audit)} printed centralizers reproduced")
        for a in mismatches:
            print(f"  {a.name} C(e{a.index + 1}): printed {a.expected.render()}, "
                  f"computed {a.computed.render()}")


def display_action_report(report):
    display_title("Group action conditions")
    rows = []
    for name in report.CONDITIONS:
        value = report.conditions[name]
        rows.append([name, verdict_text(value is True), "" if value is True else value])
    display_table(["condition", "verdict", "witness"], rows)


def display_catalog(entries):
    """
    Display the catalog listing

    Args:
        entries: List of CatalogEntry
    """
    display_title("Catalog")
    rows = [[e.name, e.label, e.dim, e.field, e.describe_parameter(), e.citation] for e in entries]
    display_table(["name", "label", "dim", "field", "parameter", "citation"], rows)
