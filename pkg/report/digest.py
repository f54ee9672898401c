# standard
import hashlib
import json
from typing import Any


def canonical_json(payload: Any) -> str:
    return json.dumps(
        obj=payload,
        default=str,
        sort_keys=True,
        ensure_ascii=False,
    )


def digest_inputs(inputs: dict[str, Any]) -> str:
    """
    sha256 hex digest of the canonical JSON form of every resolved input of a command.
    """
    return hashlib.sha256(canonical_json(inputs).encode("utf-8")).hexdigest()
