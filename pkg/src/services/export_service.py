import csv
import json
import logging
import math
import os

logger = logging.getLogger(__name__)

CSV_HEADER = ("x", "V", "psi", "psi_normalized")


def format_number(value: float | None) -> str:
    """Muuntaa luvun 17 merkitsevän numeron tekstiksi. None on tyhjä kenttä."""

    if value is None:
        return ""

    return format(float(value), ".17g")


class ExportService:
    """Luokka, joka vastaa tulostiedostojen kirjoittamisesta."""

    def write_csv(
        self, rows: list[tuple[float | None, ...]], path: str, header=CSV_HEADER
    ) -> None:
        """Kirjoittaa rivit CSV-tiedostoon. Ylikirjoittaa tiedoston.

        Args:
            rows (list[tuple[float | None, ...]]): Kirjoitettavat rivit.
            path (str): Kirjoitettavan tiedoston polku.
            header (tuple[str, ...], optional): Otsikkorivi.
        """

        self.__prepare(path)

        with open(path, mode="w", encoding="utf-8", newline="") as file:
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(
                [format_number(value) for value in row] for row in rows
            )

        logger.info("Kirjoitettiin %d riviä tiedostoon %s", len(rows), path)

    def write_json(self, data: dict | list, path: str) -> None:
        """Kirjoittaa JSON-tiedoston. Ylikirjoittaa tiedoston.

        Ei-äärelliset luvut kirjoitetaan arvona null.
        """

        self.__prepare(path)

        with open(path, mode="w", encoding="utf-8") as file:
            file.write(self.dumps(data))

        logger.info("Kirjoitettiin tiedosto %s", path)

    def dumps(self, data: dict | list) -> str:
        return json.dumps(self.__encode(data), indent=4, allow_nan=False)

    def __encode(self, value):
        if isinstance(value, dict):
            return {key: self.__encode(item) for key, item in value.items()}

        if isinstance(value, (list, tuple)):
            return [self.__encode(item) for item in value]

        if isinstance(value, bool) or value is None or isinstance(value, str):
            return value

        if isinstance(value, int):
            return value

        number = float(value)

        return number if math.isfinite(number) else None

    def __prepare(self, path: str) -> None:
        directory = os.path.dirname(path)

        if directory:
            os.makedirs(directory, exist_ok=True)


export_service = ExportService()
