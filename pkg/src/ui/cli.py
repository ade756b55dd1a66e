"""
Command-line interface for the Leibniz CL verifier
"""
import argparse

from src.config import APP_NAME, DEFAULT_SAMPLES, DEFAULT_SEED, VERSION
from src.core.errors import (
    DimensionMismatch,
    DocumentError,
    ExcludedParameter,
    InvalidAction,
    LeibnizError,
    LeibnizIdentityViolation,
    MixedFieldError,
    ParseError,
    PoleError,
    UnknownName,
    UsageError,
)
from src.core.leibniz import derived_series, lower_central_series, validate_leibniz
from src.core.linalg import Vector
from src.core.scalars import FIELD_Q, parse_scalar
from src.db.documents import (
    dump_document,
    export_algebra,
    input_digest,
    parse_action_file,
    parse_algebra_file,
    report_document,
)
from src.services.catalog import catalog_entry, catalog_names
from src.services.centralizers import (
    XSelection,
    centralizer,
    cl_element_check,
    cl_element_subspace,
    is_cl,
)
from src.services.morphisms import (
    action_cl_preservation,
    centralizer_action_map,
    validate_action,
)
from src.services.report import counterexample_report, theorem_report
from src.ui.display import (
    display_action_report,
    display_algebra,
    display_catalog,
    display_cl_verdict,
    display_element_report,
    display_error,
    display_failure,
    display_info,
    display_series,
    display_success,
    display_theorem_report,
    display_title,
    display_warning,
    set_colors,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

COMMANDS = (
    "validate", "centralizer", "series", "cl-check", "cl-elements",
    "catalog", "action-check", "theorem-report", "counterexample",
)
MODES = {"basis": "basis", "pairs": "basis_plus_pairs", "sample": "sampled"}

# errors that mean the input or the invocation was bad
USAGE_ERRORS = (
    UsageError, DocumentError, ParseError, UnknownName, ExcludedParameter,
    DimensionMismatch, MixedFieldError, PoleError,
)


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that raises UsageError instead of exiting"""

    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = ArgumentParser(prog="leibniz-cl", description=f"{APP_NAME} v{VERSION}")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--catalog", metavar="NAME", help="built-in algebra, e.g. rho_1")
    parser.add_argument("--file", metavar="PATH", help="algebra document (JSON)")
    parser.add_argument("--alpha", metavar="P/Q", help="parameter value for parametric families")
    parser.add_argument("--mode", choices=sorted(MODES), default="basis")
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    parser.add_argument("--seed", metavar="HEX", default=f"{DEFAULT_SEED:X}")
    parser.add_argument("--out", metavar="PATH", help="also write the machine report here")
    parser.add_argument("--format", choices=("human", "machine"), default="human")
    parser.add_argument("--element", metavar="X", help="e3 or comma-separated coordinates")
    parser.add_argument("--kind", choices=("left", "right", "two_sided"), default="two_sided")
    parser.add_argument("--flavor", choices=("left", "right", "two_sided"), default="two_sided")
    parser.add_argument("--action", metavar="PATH", help="group action document (JSON)")
    return parser


class Context:
    """Parsed options plus the loaded algebra and the input digest"""

    def __init__(self, args):
        self.args = args
        self.human = args.format == "human"
        self.entry = None
        self.digest = None

    def samples(self):
        if self.args.samples < 1:
            raise UsageError("--samples must be at least 1")
        return self.args.samples

    def selection(self):
        samples = self.samples()
        mode = MODES[self.args.mode]
        if mode == "sampled":
            return XSelection.sampled(samples, self.seed())
        return XSelection(mode)

    def seed(self):
        try:
            return int(self.args.seed, 16)
        except ValueError:
            raise UsageError(f"--seed expects a hexadecimal integer, got {self.args.seed!r}")


def parse_alpha(text):
    if text is None:
        return None
    try:
        return parse_scalar(text, FIELD_Q).to_rational()
    except ParseError:
        raise UsageError(f"--alpha expects a rational number such as 1/2, got {text!r}")


def parse_element(text, L):
    """
    Parse "e3" or "1,0,-1/2" into a vector of L

    Raises:
        UsageError: On malformed text or a wrong length
    """
    if text is None:
        raise UsageError("this command needs --element")
    text = text.strip()
    if text.lower().startswith("e") and text[1:].isdigit():
        index = int(text[1:])
        if not 1 <= index <= L.dim:
            raise UsageError(f"basis element {text} outside e1..e{L.dim}")
        return Vector.basis(index - 1, L.dim, L.field)
    parts = text.split(",")
    if len(parts) != L.dim:
        raise UsageError(f"--element needs {L.dim} coordinates, got {len(parts)}")
    return Vector([parse_scalar(p, L.field) for p in parts], L.field)


def load_algebra(ctx, validate=True):
    """
    Load the algebra named by --catalog or --file

    Returns:
        LeibnizAlgebra: The algebra; ctx.digest records the input hash
    """
    args = ctx.args
    if bool(args.catalog) == bool(args.file):
        raise UsageError("give exactly one of --catalog or --file")
    if args.catalog:
        ctx.entry = catalog_entry(args.catalog)
        L = ctx.entry.instantiate(parse_alpha(args.alpha))
        ctx.digest = input_digest(dump_document(export_algebra(L, name=args.catalog)))
        return L
    try:
        with open(args.file, "rb") as f:
            raw = f.read()
    except OSError as e:
        raise UsageError(f"cannot read {args.file}: {e.strerror}")
    ctx.digest = input_digest(raw)
    L = parse_algebra_file(raw, validate=validate)
    if args.alpha is not None:
        L = L.substitute(parse_alpha(args.alpha))
    return L


def cmd_validate(ctx):
    L = load_algebra(ctx, validate=False)
    verdict = validate_leibniz(L.table)
    if ctx.human:
        display_algebra(L)
        if verdict.passed:
            display_success("Leibniz identity holds on every basis triple")
        else:
            i, j, k = verdict.witness
            display_failure(f"Leibniz identity fails on (e{i + 1}, e{j + 1}, e{k + 1}): "
                            f"{verdict.lhs.render()} != {verdict.rhs.render()}")
    return verdict.passed, {"leibniz": verdict.to_dict()}


def cmd_centralizer(ctx):
    L = load_algebra(ctx)
    x = parse_element(ctx.args.element, L)
    C = centralizer(L, x, ctx.args.kind)
    payload = {"element": x.to_strings(), "kind": ctx.args.kind, "centralizer": C.to_strings()}
    if ctx.human:
        print(f"C({x.render()}) [{ctx.args.kind}] = {C.render()}  (dim {C.dim})")
    if ctx.entry is not None and ctx.args.alpha is None:
        index = next((k for k in range(L.dim) if x == Vector.basis(k, L.dim, L.field)), None)
        expected = ctx.entry.expected_centralizer(index) if index is not None else None
        if expected is not None and ctx.args.kind == "two_sided":
            payload["printed"] = expected.to_strings()
            payload["notes"] = ctx.entry.notes
            if ctx.human:
                display_info(f"printed value {expected.render()}"
                             + (" (matches)" if expected == C else " (differs)"))
                for note in ctx.entry.notes:
                    display_info(note)
    return True, payload


def cmd_series(ctx):
    L = load_algebra(ctx)
    lower = lower_central_series(L)
    derived = derived_series(L)
    if ctx.human:
        display_series(lower)
        display_series(derived)
    return True, {"lower_central_series": lower.to_dict(), "derived_series": derived.to_dict()}


def cmd_cl_check(ctx):
    L = load_algebra(ctx)
    verdict = is_cl(L, ctx.selection(), ctx.args.flavor)
    if ctx.human:
        display_cl_verdict(verdict)
        if verdict.passed:
            display_info("verified on the selection only; other elements x were not checked")
    return verdict.passed, {"cl": verdict.to_dict()}


def cmd_cl_elements(ctx):
    L = load_algebra(ctx)
    sel = ctx.selection()
    if ctx.args.element is not None:
        report = cl_element_check(L, parse_element(ctx.args.element, L), sel)
        if ctx.human:
            display_element_report(report)
        return report.passed, {"cl_element": report.to_dict()}
    S, closed = cl_element_subspace(L, sel)
    if ctx.human:
        print(f"CL-elements on {sel.describe()}: S = {S.render()}  (dim {S.dim})")
        print(f"S closed under the bracket: {'yes' if closed else 'no'}")
    return closed, {"selection": sel.to_dict(), "cl_elements": S.to_strings(), "closure_check": closed}


def cmd_catalog(ctx):
    args = ctx.args
    if not args.catalog:
        entries = [catalog_entry(name) for name in catalog_names()]
        if ctx.human:
            display_catalog(entries)
        return True, {"entries": [e.name for e in entries]}
    L = load_algebra(ctx)
    entry = ctx.entry
    if ctx.human:
        display_algebra(L)
        display_info(f"{entry.label}; {entry.citation}")
        if entry.describe_parameter():
            display_info(f"parameter: {entry.describe_parameter()}")
        for note in entry.notes:
            display_info(note)
    document = export_algebra(L, name=entry.name)
    document["citation"] = entry.citation
    return True, {"algebra": document}


def cmd_action_check(ctx):
    L = load_algebra(ctx)
    if not ctx.args.action:
        raise UsageError("action-check needs --action")
    try:
        with open(ctx.args.action, "rb") as f:
            raw = f.read()
    except OSError as e:
        raise UsageError(f"cannot read {ctx.args.action}: {e.strerror}")
    action = parse_action_file(raw)
    report = validate_action(L, action)
    payload = {"action": report.to_dict(), "action_digest": input_digest(raw)}
    if ctx.human:
        display_action_report(report)
    if not report.passed:
        return False, payload
    sel = ctx.selection()
    xs = sel.vectors(L)
    maps = all(centralizer_action_map(L, action, g, x) for g in range(action.order) for x in xs)
    cl_elements = [e for e in L.basis() if cl_element_check(L, e, sel).passed]
    preserved = all(action_cl_preservation(L, action, a, sel) for a in cl_elements)
    payload.update({
        "selection": sel.to_dict(),
        "centralizer_maps": maps,
        "cl_elements_preserved": preserved,
    })
    if ctx.human:
        print(f"g C(x) = C(gx) for every g and x in {sel.describe()}: {'yes' if maps else 'no'}")
        print(f"basis CL-elements stay CL under the action: {'yes' if preserved else 'no'}")
    return maps and preserved, payload


def cmd_theorem_report(ctx):
    report = theorem_report(samples=ctx.samples(), seed=ctx.seed())
    ctx.digest = report.digest
    if ctx.human:
        display_theorem_report(report)
        if not report.passed:
            display_warning("some rows fail; their witnesses are listed above")
    return report.passed, report.to_dict()


def cmd_counterexample(ctx):
    report = counterexample_report(samples=ctx.samples(), seed=ctx.seed())
    ctx.digest = input_digest(dump_document(export_algebra(report.algebra, name="counterexample_s4")))
    if ctx.human:
        display_title("A CL-algebra that is not nilpotent")
        display_series(report.lower)
        display_series(report.derived)
        for i, C in enumerate(report.centralizers):
            print(f"C(e{i + 1}) = {C.render()}")
        display_cl_verdict(report.basis)
        display_cl_verdict(report.sampled)
    return report.passed, report.to_dict()


HANDLERS = {
    "validate": cmd_validate,
    "centralizer": cmd_centralizer,
    "series": cmd_series,
    "cl-check": cmd_cl_check,
    "cl-elements": cmd_cl_elements,
    "catalog": cmd_catalog,
    "action-check": cmd_action_check,
    "theorem-report": cmd_theorem_report,
    "counterexample": cmd_counterexample,
}


def dispatch(command, args):
    """
    Run one command and emit its report

    Args:
        command: Command name
        args: Parsed argparse namespace

    Returns:
        int: 0 on success, 1 on a mathematical failure, 2 on usage errors
    """
    ctx = Context(args)
    if args.format == "machine":
        set_colors(False)
    try:
        passed, payload = HANDLERS[command](ctx)
    except LeibnizIdentityViolation as e:
        display_error(str(e))
        return EXIT_FAIL
    except USAGE_ERRORS as e:
        display_error(str(e))
        return EXIT_USAGE
    except (InvalidAction, LeibnizError) as e:
        display_error(str(e))
        return EXIT_FAIL
    payload["verdict"] = "pass" if passed else "fail"
    document = report_document(command, payload, digest=ctx.digest)
    text = dump_document(document)
    if args.format == "machine":
        print(text, end="")
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as f:
                f.write(text)
        except OSError as e:
            display_error(f"cannot write {args.out}: {e.strerror}")
            return EXIT_USAGE
    return EXIT_OK if passed else EXIT_FAIL


def run_cli(argv=None):
    """
    Parse the command line and dispatch

    Returns:
        int: Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        display_error(str(e))
        return EXIT_USAGE
    return dispatch(args.command, args)
