import argparse
import logging
import sys

from config import LOG_LEVEL, OUTPUT_PREFIX
from entities.run_config import FAMILIES, FORMATS, InvalidConfigError, RunConfig
from services.darboux_service import SingularFamilyError
from services.export_service import ExportService
from services.export_service import export_service as default_export_service
from services.report_service import ReportService, VerificationError
from services.report_service import report_service as default_report_service

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

NUMERIC_OPTIONS = ("--gamma", "--grid")


def parse_grid(text: str) -> tuple[float, float, int]:
    """Jäsentää hilan muodosta "min,max,points"."""

    parts = text.split(",")

    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"Hila on annettava muodossa min,max,points, ei {text}."
        )

    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"Virheellinen hila {text}.") from error


def attach_numeric_values(argv: list[str]) -> list[str]:
    """Liittää numeeristen valitsimien arvot muotoon --valitsin=arvo.

    argparse tulkitsee esimerkiksi arvot -5,5,1001 ja -1e6 valitsimiksi.
    """

    attached = []
    waiting = None

    for token in argv:
        if waiting and not token.startswith("--"):
            attached[-1] = f"{waiting}={token}"
            waiting = None
            continue

        attached.append(token)
        waiting = token if token in NUMERIC_OPTIONS else None

    return attached


class CLI:
    """Luokka, joka vastaa komentorivikäyttöliittymästä."""

    def __init__(
        self,
        report_service: ReportService = default_report_service,
        export_service: ExportService = default_export_service,
    ) -> None:
        self.__reports: ReportService = report_service
        self.__exporter: ExportService = export_service
        self.__parser: argparse.ArgumentParser = self.__build_parser()

    def run(self, argv: list[str] | None = None) -> int:
        """Suorittaa komennon.

        Args:
            argv (list[str] | None, optional): Argumentit ilman ohjelman nimeä.
                Oletukseltaan None, jolloin käytetään komentoriviä.

        Returns:
            int: Paluuarvo; 0 onnistui, 1 tarkistus tai säännöllisyys epäonnistui,
                2 virheellinen käyttö.
        """

        try:
            arguments = self.__parser.parse_args(
                attach_numeric_values(sys.argv[1:] if argv is None else argv)
            )
        except SystemExit as error:
            return EXIT_SUCCESS if error.code == 0 else EXIT_USAGE

        try:
            config = RunConfig(
                arguments.family,
                arguments.gamma,
                arguments.ell,
                arguments.grid,
                arguments.out,
                arguments.format,
                arguments.k,
                arguments.require_normalized,
                arguments.matched_pair,
            )

            return self.__dispatch(arguments.command, config)
        except InvalidConfigError as error:
            print(f"Virheelliset asetukset: {error}", file=sys.stderr)
            return EXIT_USAGE
        except (SingularFamilyError, VerificationError) as error:
            print(f"Virhe: {error}", file=sys.stderr)
            return EXIT_FAILURE

    def __dispatch(self, command: str, config: RunConfig) -> int:
        logger.info("Suoritetaan komento %s: %s", command, config)

        if command == "deform":
            for path in self.__reports.deform(config):
                print(path)

            return EXIT_SUCCESS

        if command == "norm-table":
            result = self.__reports.norm_table(config)
        elif command == "matched-pairs":
            result = self.__reports.matched_pairs(config)
        else:
            result = self.__reports.verify(config)

        print(self.__exporter.dumps(result))

        return EXIT_SUCCESS

    def __build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="darboux-families",
            description="Parametriset Darboux-deformaatiot ja niiden tarkistukset.",
        )
        commands = parser.add_subparsers(dest="command", required=True)

        descriptions = {
            "deform": "Kirjoittaa potentiaalin ja perustilan jokaiselle γ:lle.",
            "norm-table": "Vertaa normitusvakioita numeeriseen integraaliin.",
            "matched-pairs": "Laskee normitusvakion säilyttävän parametriparin.",
            "verify": "Varmentaa isospektraalisuuden ominaisarvoratkaisijalla.",
        }

        for name, description in descriptions.items():
            command = commands.add_parser(name, help=description)
            self.__add_common_arguments(command)

        return parser

    def __add_common_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--family", choices=FAMILIES, required=True)
        parser.add_argument("--ell", type=int, default=None)
        parser.add_argument(
            "--gamma", type=float, action="append", default=[], help="Toistettava."
        )
        parser.add_argument(
            "--grid", type=parse_grid, default=None, help="min,max,points"
        )
        parser.add_argument("--k", type=int, default=None)
        parser.add_argument("--out", default=OUTPUT_PREFIX, help="Polun etuliite.")
        parser.add_argument("--format", choices=FORMATS, default="csv")
        parser.add_argument("--matched-pair", action="store_true")
        parser.add_argument("--require-normalized", action="store_true")


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=LOG_LEVEL)

    return CLI().run(argv)
