from entities.grid import Grid

FAMILIES = ("oscillator", "hydrogen", "generic")
FORMATS = ("csv", "json")


class InvalidConfigError(ValueError):
    pass


class RunConfig:
    """Luokka, joka kuvaa komentorivikomennon asetuksia.

    Attributes:
        family (str): Perhe, "oscillator", "hydrogen" tai "generic".
        gammas (tuple[float, ...]): Deformaatioparametrit annetussa järjestyksessä.
        ell (int | None): Ratapyörimismääräkvanttiluku, vain vetyperheelle.
        grid (Grid | None): Näytteistyshila, None tarkoittaa perheen oletushilaa.
        output (str): Tulostiedostojen polun etuliite.
        output_format (str): Tulostusmuoto, "csv" tai "json".
        k (int | None): Tarkistettavien ominaisarvojen määrä, None tarkoittaa
            perheen oletusta.
        require_normalized (bool): Vaaditaanko normitettu aaltofunktio
            jokaiselle γ:lle.
        matched_pair (bool): Lisätäänkö perheen sovitettu parametripari
            parametrien loppuun.
    """

    def __init__(
        self,
        family: str,
        gammas: list[float] | None = None,
        ell: int | None = None,
        grid: tuple[float, float, int] | None = None,
        output: str = "",
        output_format: str = "csv",
        k: int | None = None,
        require_normalized: bool = False,
        matched_pair: bool = False,
    ) -> None:
        """Luokan konstruktori.

        Raises:
            InvalidConfigError: Asetukset ovat ristiriitaisia.
        """

        if family not in FAMILIES:
            raise InvalidConfigError(f"Tuntematon perhe {family}.")

        if family == "hydrogen" and ell is None:
            raise InvalidConfigError("Vetyperhe tarvitsee kvanttiluvun --ell.")

        if family != "hydrogen" and ell is not None:
            raise InvalidConfigError("Kvanttiluku --ell kuuluu vain vetyperheelle.")

        if ell is not None and ell < 1:
            raise InvalidConfigError("Kvanttiluvun --ell on oltava vähintään 1.")

        if output_format not in FORMATS:
            raise InvalidConfigError(f"Tuntematon tulostusmuoto {output_format}.")

        if k is not None and k < 1:
            raise InvalidConfigError("Ominaisarvoja on tarkistettava vähintään yksi.")

        self.__grid: Grid | None = None

        if grid is not None:
            try:
                self.__grid = Grid(*grid)
            except (TypeError, ValueError) as error:
                raise InvalidConfigError(
                    f"Virheellinen hila {grid}: {error}"
                ) from error

        if family == "hydrogen" and self.__grid is not None and self.__grid.start < 0:
            raise InvalidConfigError(
                "Radiaalinen hila ei voi alkaa negatiivisesta säteestä."
            )

        self.__family: str = family
        self.__gammas: tuple[float, ...] = tuple(
            float(gamma) for gamma in gammas or []
        )
        self.__ell: int | None = ell
        self.__output: str = output
        self.__output_format: str = output_format
        self.__k: int | None = k
        self.__require_normalized: bool = require_normalized
        self.__matched_pair: bool = matched_pair

    def __repr__(self) -> str:
        return (
            f"RunConfig({self.family}, {list(self.gammas)}, {self.ell}, {self.grid}, "
            f"{self.output}, {self.output_format}, {self.k})"
        )

    @property
    def family(self) -> str:
        return self.__family

    @property
    def gammas(self) -> tuple[float, ...]:
        return self.__gammas

    @property
    def ell(self) -> int | None:
        return self.__ell

    @property
    def grid(self) -> Grid | None:
        return self.__grid

    @property
    def output(self) -> str:
        return self.__output

    @property
    def output_format(self) -> str:
        return self.__output_format

    @property
    def k(self) -> int | None:
        return self.__k

    @property
    def require_normalized(self) -> bool:
        return self.__require_normalized

    @property
    def matched_pair(self) -> bool:
        return self.__matched_pair
