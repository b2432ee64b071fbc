"""Tropical points, links and Newton polygons over Puiseux and p-adic fields.

Every function takes the text of an ideal file and returns the parsed result
document. Failures raise TropnewtonError carrying that document.
"""

import json
from typing import Any, Dict, Optional, Sequence, Union

from ._tropnewton import Status, exit_code, run

__all__ = [
    "Status",
    "TropnewtonError",
    "exit_code",
    "groebner",
    "link",
    "newton",
    "point",
    "run",
    "run_command",
    "triangulate",
    "verify",
    "zerodim",
]

Weight = Union[str, Sequence[Union[int, str]]]


class TropnewtonError(RuntimeError):
    def __init__(self, document: Dict[str, Any]):
        err = document.get("error") or {}
        super().__init__(f"{err.get('kind', document['status'])}: {err.get('message', '')}")
        self.document = document
        self.kind = err.get("kind")


def _weight_text(weight: Optional[Weight]) -> Optional[str]:
    if weight is None or isinstance(weight, str):
        return weight
    return ",".join(str(x) for x in weight)


def run_command(command: str, ideal_text: str, *, check: bool = True, **options: Any) -> Dict[str, Any]:
    """Runs one command and returns the result document.

    With check, any status other than "ok" raises TropnewtonError; a failed
    verification still carries its outputs in the exception's document.
    """
    if "weight" in options:
        options["weight"] = _weight_text(options["weight"])
    if isinstance(options.get("substitute"), (list, tuple)):
        options["substitute"] = ",".join(str(x) for x in options["substitute"])
    _, text, _ = run(command, ideal_text, **options)
    document = json.loads(text)
    if check and document["status"] != "ok":
        raise TropnewtonError(document)
    return document


def zerodim(ideal_text: str, **options: Any) -> Dict[str, Any]:
    return run_command("zerodim", ideal_text, **options)


def point(ideal_text: str, **options: Any) -> Dict[str, Any]:
    return run_command("point", ideal_text, **options)


def link(ideal_text: str, **options: Any) -> Dict[str, Any]:
    return run_command("link", ideal_text, **options)


def newton(ideal_text: str, weight: Weight, **options: Any) -> Dict[str, Any]:
    return run_command("newton", ideal_text, weight=weight, **options)


def triangulate(ideal_text: str, **options: Any) -> Dict[str, Any]:
    return run_command("triangulate", ideal_text, **options)


def groebner(ideal_text: str, **options: Any) -> Dict[str, Any]:
    return run_command("groebner", ideal_text, **options)


def verify(ideal_text: str, weight: Weight, **options: Any) -> Dict[str, Any]:
    return run_command("verify", ideal_text, weight=weight, **options)
