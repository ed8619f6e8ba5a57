"""
Sobre comun de los reportes y registro de checks.

Cada comando devuelve {"status", "schema_version", "build_id", "data", "meta"}.
Los tiempos solo entran si se piden: rompen la identidad byte a byte.
"""

from typing import Any, Callable, Dict, List, Optional
import logging
import time

from mot2.errors import Mot2Error

SCHEMA_VERSION = 1

log = logging.getLogger("mot2.report")


class CheckStatus:
    passed = "pass"
    failed = "fail"
    skipped = "skipped"


def envelope(data: Dict[str, Any], meta: Dict[str, Any], build_id: str, ok: bool = True) -> Dict[str, Any]:
    return {
        "status": "ok" if ok else "error",
        "schema_version": SCHEMA_VERSION,
        "build_id": build_id,
        "data": data,
        "meta": meta,
    }


class CheckLog:
    """Ordered list of check entries {name, status, dims, detail}."""

    def __init__(self, timings: bool = False):
        self.timings = timings
        self.entries: List[Dict[str, Any]] = []

    def add(self, name: str, ok: bool, dims: Optional[Dict[str, Any]] = None, detail: Any = None) -> Dict[str, Any]:
        entry = {
            "name": name,
            "status": CheckStatus.passed if ok else CheckStatus.failed,
            "dims": dims or {},
            "detail": detail if detail is not None else "",
        }
        self.entries.append(entry)
        if not ok:
            log.warning("check %s failed: %s", name, detail)
        return entry

    def skip(self, name: str, why: str) -> Dict[str, Any]:
        log.warning("check %s skipped: %s", name, why)
        entry = {"name": name, "status": CheckStatus.skipped, "dims": {}, "detail": why}
        self.entries.append(entry)
        return entry

    def run(self, name: str, fn: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
        """
        ``fn`` returns {"ok": bool, "dims": {...}, "detail": ...}; a Mot2Error
        raised inside counts as a failure of this check only.
        """
        t0 = time.perf_counter()
        try:
            out = fn()
            entry = self.add(name, bool(out.get("ok")), out.get("dims"), out.get("detail"))
        except Mot2Error as e:
            entry = self.add(name, False, {}, f"{type(e).__name__}: {e.detail}")
        if self.timings:
            entry["seconds"] = round(time.perf_counter() - t0, 4)
        log.info("check %s: %s", name, entry["status"])
        return entry

    @property
    def ok(self) -> bool:
        return all(e["status"] != CheckStatus.failed for e in self.entries)

    def summary(self) -> Dict[str, int]:
        out = {CheckStatus.passed: 0, CheckStatus.failed: 0, CheckStatus.skipped: 0}
        for e in self.entries:
            out[e["status"]] += 1
        return out
