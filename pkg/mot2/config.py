from enum import Enum
from pathlib import Path
from typing import Any, List, Optional
import json
import logging
import os

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, field_validator

from mot2.errors import FieldError, UsageError
from mot2.scalars import Field

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = (os.getenv(name, "") or "").strip()
    try:
        return int(raw) if raw else default
    except Exception:
        return default


def _bool_env(name: str, default: bool = False) -> bool:
    raw = (os.getenv(name, "") or "").strip().lower()
    if not raw:
        return default
    return raw in ("1", "true", "yes", "on")


# =========================
# Defaults desde el entorno
# =========================
DEFAULT_FIELD = (os.getenv("MOT2_FIELD", "Q") or "Q").strip()
DEFAULT_SEED = _env_int("MOT2_SEED", 0)
DEFAULT_SAMPLES = _env_int("MOT2_SAMPLES", 200)
DEFAULT_MAX_ORDER = _env_int("MOT2_MAX_ORDER", 10080)
REPORT_DIR = (os.getenv("MOT2_REPORT_DIR", "") or "").strip()
LOG_LEVEL = (os.getenv("MOT2_LOG_LEVEL", "WARNING") or "WARNING").strip().upper()
DEFAULT_TIMINGS = _bool_env("MOT2_TIMINGS", False)
BUILD_ID = os.getenv("BUILD_ID", "unknown")


class FieldKind(str, Enum):
    fp = "fp"
    q = "q"


class Suite(str, Enum):
    biequivalence = "biequivalence"
    adjunctions = "adjunctions"
    yoshida = "yoshida"
    mackey_axioms = "mackey-axioms"
    decat = "decat"
    blocks = "blocks"


ALL_SUITES = [s.value for s in Suite]


def _safe_enum(enum_cls, value: Any, default=None):
    try:
        return enum_cls(str(value).strip().lower())
    except Exception:
        return default


def parse_suites(raw: Any) -> List[Suite]:
    """
    Acepta 'all', una lista separada por comas o una lista ya partida.
    """
    if raw is None:
        return []
    items = raw.split(",") if isinstance(raw, str) else list(raw)
    out: List[Suite] = []
    for it in items:
        s = str(it.value if isinstance(it, Suite) else it).strip().lower()
        if not s:
            continue
        if s == "all":
            return [Suite(v) for v in ALL_SUITES]
        suite = _safe_enum(Suite, s)
        if suite is None:
            raise UsageError(f"suite desconocida '{s}'. Usa: all, {', '.join(ALL_SUITES)}")
        if suite not in out:
            out.append(suite)
    return out


class RunConfig(BaseModel):
    model_config = ConfigDict(validate_default=True)

    group: Optional[str] = None
    group_file: Optional[str] = None
    field: str = DEFAULT_FIELD
    suites: List[Suite] = []
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    max_order: int = DEFAULT_MAX_ORDER
    json_path: Optional[str] = None
    timings: bool = DEFAULT_TIMINGS

    @field_validator("field", mode="before")
    @classmethod
    def _norm_field(cls, v):
        try:
            return Field.parse(v).spec
        except FieldError as e:
            raise ValueError(e.detail)

    @field_validator("suites", mode="before")
    @classmethod
    def _norm_suites(cls, v):
        return parse_suites(v)

    @field_validator("samples", "max_order")
    @classmethod
    def _positive(cls, v):
        if int(v) < 1:
            raise ValueError("must be >= 1")
        return int(v)

    @property
    def field_obj(self) -> Field:
        return Field.parse(self.field)

    @property
    def field_kind(self) -> FieldKind:
        return FieldKind.fp if self.field_obj.is_prime_field else FieldKind.q

    def require_suites(self) -> List[Suite]:
        if not self.suites:
            raise UsageError("seleccion de suites vacia: usa --suite all o una lista")
        return list(self.suites)

    def load_group(self):
        from mot2.groups import catalog_group, parse_presentation

        if self.group_file:
            path = Path(self.group_file)
            if not path.exists():
                raise UsageError(f"group file no encontrado: {path}")
            lines = [ln for ln in path.read_text(encoding="utf-8").splitlines()
                     if ln.strip() and not ln.strip().startswith("#")]
            if not lines:
                raise UsageError(f"group file vacio: {path}")
            return parse_presentation(lines[0], max_order=self.max_order)
        if not self.group:
            raise UsageError("falta --group o --group-file")
        if "=" in self.group:
            return parse_presentation(self.group, max_order=self.max_order)
        return catalog_group(self.group)


def build_config(**kwargs) -> RunConfig:
    """RunConfig con errores de validacion convertidos a UsageError."""
    clean = {k: v for k, v in kwargs.items() if v is not None}
    try:
        return RunConfig(**clean)
    except ValueError as e:
        raise UsageError(f"configuracion invalida: {e}")


# =========================
# Persistencia de reportes
# =========================
def resolve_report_path(json_path: Optional[str]) -> Optional[Path]:
    if not json_path:
        return None
    path = Path(json_path)
    if REPORT_DIR and path.parent == Path("."):
        path = Path(REPORT_DIR) / path
    return path


def write_report(payload: dict, json_path: Optional[str]) -> Optional[Path]:
    path = resolve_report_path(json_path)
    if path is None:
        return None
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")
    os.replace(tmp, path)
    return path


def configure_logging(verbose: bool = False) -> None:
    level = logging.INFO if verbose else getattr(logging, LOG_LEVEL, logging.WARNING)
    root = logging.getLogger("mot2")
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("[%(name)s] %(message)s"))
        root.addHandler(handler)
    root.setLevel(level)
