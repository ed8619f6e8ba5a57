from typing import Any, Dict, Optional


class Mot2Error(Exception):
    """
    Error base del kit: un codigo de salida y un detalle legible,
    igual que los HTTPException(status_code, detail) del servicio.
    """

    exit_code = 1

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code

    def to_dict(self) -> Dict[str, Any]:
        return {"status": "error", "error": type(self).__name__, "detail": self.detail}


class UsageError(Mot2Error):
    exit_code = 2


class GroupError(Mot2Error):
    exit_code = 2


class FieldError(Mot2Error):
    exit_code = 2


class StructureError(Mot2Error):
    """A constructed object violates one of its invariants."""

    exit_code = 3


class CheckFailed(Mot2Error):
    exit_code = 1
