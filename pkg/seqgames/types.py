"""
Types used in seqgames type hints.
"""

from typing import Any, Dict, Tuple

ConfigType = Dict[str, Any]
CerberusSchemaType = Dict[str, Any]
Path = Tuple[str, ...]
