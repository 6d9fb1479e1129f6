"""
pvkit: verificación de la clasificación de espacios MF con cociente unidimensional.

    pvkit list
    pvkit run --entry T2.6 --param n=3 --seed 0 --format json
    pvkit run-all --filter table2 --jobs 4
    pvkit diagram --type C --rank 7 --circle 1,7
    pvkit table1

Código de salida 0 si todas las verificaciones seleccionadas pasan, 1 si alguna
falla y 2 ante argumentos inválidos.
"""
from django.core.management.base import BaseCommand, CommandError, CommandParser

from clasificacion.exceptions import (
    InvalidDiagramError,
    InvalidRootSystemError,
    ParameterOutOfRangeError,
    UnknownEntryError,
)
from clasificacion.models.Catalog_model import VerificationReport
from clasificacion.serializers import (
    CatalogEntrySerializer,
    DiagramSerializer,
    RunSummarySerializer,
    Table1RowSerializer,
    VerificationReportSerializer,
    render_json,
)
from clasificacion.services.catalog import FILTERS, CatalogService
from clasificacion.services.grading import ParabolicGradingService, verify_table1
from clasificacion.services.root_systems import parse_circles, weighted_diagram

ARGUMENT_ERRORS = (UnknownEntryError, ParameterOutOfRangeError, InvalidDiagramError, InvalidRootSystemError)


class SubcommandParser(CommandParser):
    def error(self, message):
        raise CommandError(f"Error: {message}", returncode=2)


def parse_parameter(text: str):
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise CommandError(f"parámetro inválido {text!r}: se espera nombre=valor", returncode=2)
    try:
        return name.strip(), int(value)
    except ValueError:
        raise CommandError(f"parámetro inválido {text!r}: el valor debe ser entero", returncode=2)


class Command(BaseCommand):
    help = "Verifica los casos de la clasificación de espacios MF con cociente unidimensional"
    requires_system_checks = []

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="subcommand", required=True, parser_class=SubcommandParser)

        listing = subparsers.add_parser("list", help="lista las entradas del catálogo")
        self._add_format(listing)

        run = subparsers.add_parser("run", help="verifica una entrada")
        run.add_argument("--entry", required=True)
        run.add_argument("--param", action="append", default=[], help="nombre=valor (repetible)")
        run.add_argument("--seed", type=int, default=None)
        self._add_format(run)

        run_all = subparsers.add_parser("run-all", help="verifica un grupo de entradas con sus parámetros por defecto")
        run_all.add_argument("--filter", choices=FILTERS, default="all")
        run_all.add_argument("--jobs", type=int, default=None)
        run_all.add_argument("--seed", type=int, default=None)
        self._add_format(run_all)

        diagram = subparsers.add_parser("diagram", help="graduación de un diagrama de Dynkin ponderado")
        diagram.add_argument("--type", required=True)
        diagram.add_argument("--rank", type=int, required=True)
        diagram.add_argument("--circle", required=True, help="raíces circuladas, p. ej. 1,7")
        self._add_format(diagram)

        table1 = subparsers.add_parser("table1", help="filas de PV regulares de tipo parabólico conmutativo")
        table1.add_argument("--max-rank", type=int, default=5)
        self._add_format(table1)

    @staticmethod
    def _add_format(parser):
        parser.add_argument("--format", choices=("json", "text"), default="text")

    def handle(self, *args, **options):
        handler = {
            "list": self.handle_list,
            "run": self.handle_run,
            "run-all": self.handle_run_all,
            "diagram": self.handle_diagram,
            "table1": self.handle_table1,
        }[options["subcommand"]]
        try:
            handler(options)
        except ARGUMENT_ERRORS as exc:
            raise CommandError(str(exc), returncode=2)

    # ---------- subcomandos ----------

    def handle_list(self, options):
        for entry in CatalogService.catalog():
            data = CatalogService.describe(entry)
            if options["format"] == "json":
                self.stdout.write(render_json(CatalogEntrySerializer(data).data))
                continue
            defaults = " ".join(
                ",".join(f"{k}={v}" for k, v in d.items()) or "-" for d in data["defaults"]
            )
            self.stdout.write(f"{entry.id:<11} {entry.group:<9} {entry.title}  [{defaults}]")

    def handle_run(self, options):
        params = dict(parse_parameter(p) for p in options["param"])
        report = CatalogService.run(options["entry"], params, options["seed"])
        if options["format"] == "json":
            self.stdout.write(render_json(VerificationReportSerializer(report).data))
        else:
            self._write_report(report)
        if report.status not in (VerificationReport.PASS, VerificationReport.UNSUPPORTED):
            raise CommandError(f"{report.entry_id}: {report.status}", returncode=1)

    def handle_run_all(self, options):
        summary = CatalogService.run_all(options["filter"], options["jobs"], options["seed"])
        if options["format"] == "json":
            for report in summary.reports:
                self.stdout.write(render_json(VerificationReportSerializer(report).data))
            self.stdout.write(render_json(RunSummarySerializer(summary).data))
        else:
            for report in summary.reports:
                self._write_report(report)
            counts = ", ".join(f"{k}={v}" for k, v in summary.counts.items())
            self.stdout.write(f"{summary.filter} (semilla {summary.seed}): {counts}")
        if not summary.passed:
            raise CommandError(f"run-all {summary.filter}: hay verificaciones que no pasan", returncode=1)

    def handle_diagram(self, options):
        diagram = weighted_diagram(options["type"], options["rank"], parse_circles(options["circle"]))
        data = ParabolicGradingService.summary(diagram)
        if options["format"] == "json":
            self.stdout.write(render_json(DiagramSerializer(data).data))
            return
        self.stdout.write(data["rendering"])
        self.stdout.write(f"{data['diagram']}: Levi {data['levi']}, centro de dimensión {data['center_dim']}")
        pieces = ", ".join(f"d{p}={d}" for p, d in data["pieces"].items())
        self.stdout.write(f"  {pieces}")
        if data["commutative"] is not None:
            self.stdout.write(f"  conmutativo: {'sí' if data['commutative'] else 'no'}")
        for component in data["components"]:
            self.stdout.write(
                f"  α{component['circled_root']}: {component['highest_weight']}, dimensión {component['dimension']}"
            )

    def handle_table1(self, options):
        if options["max_rank"] < 1:
            raise CommandError("--max-rank debe ser ≥ 1", returncode=2)
        rows = verify_table1(range(1, options["max_rank"] + 1))
        for row in rows:
            if options["format"] == "json":
                self.stdout.write(render_json(Table1RowSerializer(row).data))
                continue
            mark = "ok" if row["passed"] else "FALLA"
            line = (
                f"{row['row']:<9} n={row['n'] if row['n'] is not None else '-':<2} {row['diagram']:<10} "
                f"{row['space']:<9} Levi {row['levi_observed']:<12} d1={row['dim_observed']:<4} "
                f"{row['entry']:<5} {mark}"
            )
            self.stdout.write(line + (f"  ({row['note']})" if row["note"] else ""))
        if not all(row["passed"] for row in rows):
            raise CommandError("table1: hay filas que no coinciden", returncode=1)

    # ---------- salida de texto ----------

    def _write_report(self, report: VerificationReport):
        params = ",".join(f"{k}={v}" for k, v in report.parameters.items()) or "-"
        style = self.style.SUCCESS if report.passed else self.style.ERROR
        self.stdout.write(style(f"{report.entry_id} [{params}] semilla {report.seed}: {report.status}"))
        if report.character_dim is not None:
            self.stdout.write(
                f"  dim g={report.algebra_dim} dim V={report.space_dim} dim g_x={report.isotropy_dim} "
                f"caracteres={report.character_dim} qd1={report.qd1} regular={report.regular}"
            )
        for check in report.invariants:
            state = "verificado" if check.verified else "NO verificado"
            self.stdout.write(f"  {check.name} (grado {check.degree}): {state}")
        if report.parabolic:
            self.stdout.write(f"  diagrama: {report.parabolic}")
        for line in report.diff:
            self.stdout.write(f"  diff: {line}")
        if report.message:
            self.stdout.write(f"  {report.message}")
