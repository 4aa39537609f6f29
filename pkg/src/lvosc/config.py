"""Run configuration: defaults < key=value config file < command-line flags."""
import math
import os
from dataclasses import dataclass, fields, replace
from importlib import resources
from pathlib import Path
from typing import Optional

from . import model
from .errors import InvalidParameter

ENV_VAR = "LVOSC_CONFIG"


@dataclass(frozen=True)
class RunConfig:
    g: float = 0.0
    kappa1: float = 0.0
    kappa2: float = 0.0
    c1: float = 0.0
    c2: float = 0.0
    chi: float = 0.0
    mass: float = 1.0
    omega: float = 1.0
    coupling: str = "coulomb"
    a: float = 0.0
    b: float = 0.0
    n_max: int = 3
    l: tuple = (0,)
    k: float = 0.0
    format: str = "csv"
    count: int = 4000
    r_max_factor: Optional[float] = None
    tolerance: float = 1e-4
    scheme: str = "liouville"

    def background(self):
        return model.LorentzBackground(self.g, self.kappa1, self.kappa2)

    def fields(self):
        return model.FieldConfig(self.c1, self.c2, self.chi)

    def oscillator(self):
        if self.coupling == "cornell":
            coupling = model.CornellType(self.a, self.b)
        else:
            coupling = model.CoulombType(self.b)
        return model.OscillatorSpec(self.mass, self.omega, coupling)

    def check(self):
        if self.coupling not in ("coulomb", "cornell"):
            raise InvalidParameter(f"coupling must be coulomb or cornell, got {self.coupling!r}")
        if self.coupling == "coulomb" and self.a != 0:
            raise InvalidParameter("a is only meaningful for --coupling cornell")
        if self.format not in ("csv", "json"):
            raise InvalidParameter(f"format must be csv or json, got {self.format!r}")
        if not self.l:
            raise InvalidParameter("l list is empty")
        if self.n_max < 0:
            raise InvalidParameter("n_max must be >= 0")
        if self.tolerance <= 0 or not math.isfinite(self.tolerance):
            raise InvalidParameter("tolerance must be > 0")
        if self.r_max_factor is not None and not self.r_max_factor > 0:
            raise InvalidParameter("r_max_factor must be > 0")
        # constructs and validates the physical types
        self.background(), self.fields(), self.oscillator()
        return self


HELP = {
    "g": "LSV coupling magnitude g",
    "kappa1": "parity-even coefficient (kappa_DE)_11",
    "kappa2": "parity-odd coefficient (kappa_DB)_13",
    "c1": "linear electric-field coefficient, E = c1 r + c2/r",
    "c2": "Coulomb electric-field coefficient",
    "chi": "magnetic-field slope, B = chi r",
    "mass": "particle mass M",
    "omega": "oscillator frequency",
    "coupling": "coupling function: coulomb f=b/r or cornell f=a r+b/r",
    "a": "linear coefficient of the Cornell coupling",
    "b": "Coulomb coefficient of the coupling",
    "n_max": "highest radial quantum number",
    "l": "comma-separated angular momenta, e.g. 0,1,-1",
    "k": "axial wavenumber",
    "format": "output format",
    "count": "oracle grid interior nodes",
    "r_max_factor": "oracle r_max = sqrt(factor / scale) (default: auto)",
    "tolerance": "oracle relative tolerance",
    "scheme": "oracle discretization: liouville or cylindrical",
}


def parse_l(text):
    if isinstance(text, (tuple, list)):
        return tuple(int(v) for v in text)
    parts = [p.strip() for p in str(text).split(",") if p.strip()]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InvalidParameter(f"l must be a comma-separated integer list, got {text!r}")


def _convert(name, raw):
    if name == "l":
        return parse_l(raw)
    if name in ("coupling", "format", "scheme"):
        return str(raw).strip().lower()
    if name in ("n_max", "count"):
        try:
            return int(raw)
        except ValueError:
            raise InvalidParameter(f"{name} must be an integer, got {raw!r}")
    if name == "r_max_factor" and str(raw).strip().lower() in ("", "auto", "none"):
        return None
    try:
        return float(raw)
    except ValueError:
        raise InvalidParameter(f"{name} must be a number, got {raw!r}")


FIELD_NAMES = tuple(f.name for f in fields(RunConfig))


def parse_config_text(text):
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidParameter(f"config line {lineno}: expected key = value")
        key, value = (p.strip() for p in line.split("=", 1))
        key = key.replace("-", "_")
        if key == "M":
            key = "mass"
        if key not in FIELD_NAMES:
            raise InvalidParameter(f"config line {lineno}: unknown key {key!r}")
        values[key] = _convert(key, value)
    return values


def fixture_names():
    root = resources.files("lvosc") / "fixtures"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".cfg"))


def read_config_source(path):
    """Read a config path, falling back to a shipped fixture of that name."""
    p = Path(path)
    if p.is_file():
        return p.read_text()
    name = p.name[:-4] if p.name.endswith(".cfg") else p.name
    fixture = resources.files("lvosc") / "fixtures" / f"{name}.cfg"
    if fixture.is_file():
        return fixture.read_text()
    raise InvalidParameter(f"config {path!r} not found (fixtures: {', '.join(fixture_names())})")


def build_config(config_path=None, overrides=None, environ=None):
    environ = os.environ if environ is None else environ
    values = {}
    path = config_path or environ.get(ENV_VAR)
    if path:
        values.update(parse_config_text(read_config_source(path)))
    for key, raw in (overrides or {}).items():
        if raw is not None:
            values[key] = _convert(key, raw)
    return replace(RunConfig(), **values).check()
